//! The 2-adic Haar pair: the scaling function phi = 1_{B_0} and the wavelet
//! psi0(x) = chi(x/2) 1_{B_0}(x).  Demonstrates exact evaluation, the
//! refinement identity, periodicity, and shift orthonormality.

use qpw::mra;
use qpw::padic::{enumerate_ip, PAdicPoint, PAdicVector};
use qpw::wavelets::{phi, psi0};

fn main() {
    let phi = phi(2);
    let psi = psi0();

    println!("phi integral      = {:?}", phi.integral());
    println!("psi integral      = {:?}", psi.integral());
    println!("psi norm squared  = {:?}", psi.norm_squared());

    // psi takes the value chi(x/2) = e^{pi i x} on the unit ball
    for num in 0..4 {
        let x = PAdicVector::scalar(PAdicPoint::new(2, num, 0));
        println!("psi({num})        = {:?}", psi.evaluate(&x));
    }

    // refinement: phi(x) = phi(x/2) + phi(x/2 - 1/2), exactly
    println!("refinement p=2    : {}", mra::check_refinement(2));

    // phi is 1-periodic, psi is 1-antiperiodic
    let one = PAdicVector::scalar(PAdicPoint::one(2));
    println!("phi(x-1) == phi   : {}", phi.translate(&one) == phi);
    println!("psi(x-1) == -psi  : {}", psi.translate(&one) == psi.neg());

    // shifts over I_2 are orthonormal
    let family: Vec<_> = enumerate_ip(2, 3, 1)
        .iter()
        .map(|a| psi.translate(a))
        .collect();
    let gram = mra::gram_matrix(&family);
    println!(
        "psi shift Gram ({}x{}) is identity: {}",
        family.len(),
        family.len(),
        mra::is_identity(&gram)
    );

    // an exact sample value: <psi, psi(.-1/2)> must vanish
    let half = PAdicVector::scalar(PAdicPoint::new(2, 1, -1));
    let ip = psi.inner_product(&psi.translate(&half));
    println!("<psi, psi(.-1/2)> = {:?}", ip);
}
