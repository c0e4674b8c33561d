//! Pseudo-differential operators as exact Fourier multipliers: the
//! fractional operator D^alpha acting on wavelets, the eigenfunction
//! criterion, complex exponents, and the composition group law.

use num_rational::BigRational;

use qpw::cyclo::PowerScalar;
use qpw::padic::PAdicVector;
use qpw::psdo::{self, FractionalNorm};
use qpw::wavelets::{psi0, tensor_wavelet, WaveletIndex};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn main() {
    // D^1 psi0 = 2 psi0, exactly
    let d1 = FractionalNorm::real(2, 1, 1);
    let out = psdo::apply(&d1, &psi0()).unwrap().to_mbf().unwrap();
    println!("D^1 psi0 == 2 psi0: {}", out == psi0().scale(&qpw::cyclo::CycloScalar::from_integer(2, 2)));

    // eigenvalues 2^{alpha(1-j)} across scales
    for j in [-1i64, 0, 1] {
        let lam = psdo::eigenvalue(&d1, &[1], j).unwrap();
        println!("j = {j:2}: eigenvalue {:#}", psdo::power_scalar_json(&lam));
    }

    // a complex exponent stays symbolic: alpha = 1 + i
    let dc = FractionalNorm::new(2, 1, rat(1), rat(1));
    let idx = WaveletIndex {
        e: vec![1],
        s: vec![0],
        gamma: vec![None],
        j: 0,
        a: PAdicVector::zero(2, 1),
    };
    let verdict = psdo::verify_eigenfunction(&dc, &idx).unwrap();
    println!(
        "alpha = 1+i: criterion {},  direct A psi == lambda psi {}",
        verdict.criterion, verdict.direct
    );
    let lam = psdo::eigenvalue(&dc, &[1], 0).unwrap();
    println!("  eigenvalue {:#}", psdo::power_scalar_json(&lam));

    // group law: D^3 composed with D^{-3} is the identity
    let id = psdo::compose(
        FractionalNorm::real(2, 1, 3),
        FractionalNorm::real(2, 1, -3),
    );
    let w = tensor_wavelet(&idx).unwrap();
    println!(
        "D^3 D^-3 w == w: {}",
        psdo::apply(&id, &w).unwrap().to_mbf().unwrap() == w
    );

    // constant multipliers scale the spectrum uniformly
    let half = psdo::ConstantSymbol::new(
        1,
        PowerScalar::from_cyclo(qpw::cyclo::CycloScalar::from_rational(
            2,
            BigRational::new(1.into(), 2.into()),
        )),
    );
    let scaled = psdo::apply(&half, &psi0()).unwrap().to_mbf().unwrap();
    println!(
        "(1/2) psi0 recovered: {}",
        scaled == psi0().scale_rational(&BigRational::new(1.into(), 2.into()))
    );
}
