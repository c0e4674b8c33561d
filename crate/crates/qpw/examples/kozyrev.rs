//! Kozyrev wavelets for general p: orthonormality with the exact p^{-j/2}
//! normalization carried symbolically, and the fractional-operator spectrum
//! p^{alpha(1-j)}.

use num_rational::BigRational;

use qpw::mra;
use qpw::padic::{enumerate_ip, PAdicPoint};
use qpw::psdo;
use qpw::wavelets::kozyrev;

fn main() {
    let p = 3;

    // theta_{k;j,a} for k in {1,2}, j in {-1,0,1}, shifts |a| <= 9
    let mut family = Vec::new();
    for k in [1u32, 2] {
        for j in [-1i64, 0, 1] {
            for a in enumerate_ip(p, 2, 1) {
                family.push(kozyrev(p, k, j, &a.coords()[0]).unwrap());
            }
        }
    }
    let gram = mra::gram_matrix_scaled(&family);
    println!(
        "p = {p}: Kozyrev Gram ({}x{}) exactly identity: {}",
        family.len(),
        family.len(),
        mra::is_identity_scaled(&gram)
    );

    // odd j carries an irrational scale sqrt(p); it stays symbolic
    let theta = kozyrev(p, 1, 1, &PAdicPoint::zero(p)).unwrap();
    println!(
        "j = 1 scale is p^(-1/2): {:?} (plain MBF available: {})",
        theta.scale(),
        theta.to_mbf().is_some()
    );

    // D^alpha theta = p^{alpha(1-j)} theta
    for j in [-1i64, 0, 2] {
        let ok = psdo::kozyrev_spectrum_check(
            p,
            1,
            j,
            &PAdicPoint::zero(p),
            BigRational::from_integer(1.into()),
            BigRational::from_integer(0.into()),
        )
        .unwrap();
        println!("D^1 theta_(1;{j},0) == {p}^{} theta: {ok}", 1 - j);
    }
}
