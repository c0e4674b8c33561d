//! The gamma-parametrized wavelet families psi^(s): alpha coefficients, the
//! unitary shift matrix D, the companion matrix eigensystem, and the
//! real-valued families.

use num_bigint::BigInt;
use num_rational::BigRational;

use qpw::padic::Angle;
use qpw::wavelets::{
    alpha_coeffs, is_unitary, mat_vec, matrix_a, matrix_a_eigensystem, psi_s, real_family,
    shift_matrix_d, GammaVector, RealFamily,
};

fn angle(num: i64, den: i64) -> Angle {
    Angle::new(2, BigRational::new(BigInt::from(num), BigInt::from(den))).unwrap()
}

fn main() {
    // the classic instance gamma = (zeta_8^{-1}, zeta_8)
    let gamma = GammaVector::from_angles(1, &[angle(-1, 8), angle(1, 8)]).unwrap();
    let alpha = alpha_coeffs(&gamma);
    println!("alpha for gamma = (z8^-1, z8):");
    for (k, a) in alpha.iter().enumerate() {
        let (re, im) = a.to_complex_f64();
        println!("  alpha_{k} = {re:+.6} {im:+.6}i   (exact: {a:?})");
    }

    let d = shift_matrix_d(&alpha);
    println!("shift matrix D unitary: {}", is_unitary(&d));

    let w = psi_s(&gamma);
    println!("psi^(1) norm squared: {:?}", w.norm_squared());

    // the companion matrix and its exact eigensystem at s = 2
    let s = 2;
    let a = matrix_a(s);
    let (lambdas, vectors) = matrix_a_eigensystem(s);
    println!("A (s = {s}) eigenvalues:");
    for (lam, v) in lambdas.iter().zip(&vectors) {
        let (re, im) = lam.to_complex_f64();
        let ok = mat_vec(&a, v) == v.iter().map(|x| x.mul(lam)).collect::<Vec<_>>();
        println!("  lambda = {re:+.6} {im:+.6}i   A v = lambda v: {ok}");
    }

    // real-valued families: one angle parameter each
    for (name, fam) in [
        ("half-shift", RealFamily::HalfShift),
        ("quarter-shift", RealFamily::QuarterShift),
        ("quarter-offset", RealFamily::QuarterOffset),
    ] {
        let w = real_family(fam, &angle(1, 8)).unwrap();
        println!(
            "{name:14} theta=1/8: real-valued: {}, unit norm: {}",
            w.conjugate() == w,
            w.norm_squared().is_one()
        );
        for t in w.terms() {
            let (re, im) = t.coef.to_complex_f64();
            println!("    term coef {re:+.6} {im:+.6}i on {:?}", t.ball);
        }
    }
}
