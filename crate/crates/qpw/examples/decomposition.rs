//! Exact multiresolution decomposition: peel wavelet layers off a test
//! function, show the coefficients, verify Parseval, and rebuild bitwise.

use num_bigint::BigInt;
use num_rational::BigRational;

use qpw::cyclo::CycloScalar;
use qpw::mbf::Mbf;
use qpw::mra;
use qpw::padic::{Ball, PAdicPoint, PAdicVector};
use qpw::wavelets::psi0;

fn main() {
    // a two-term test function: a modulated piece at scale 1/2 plus a
    // rational bump on a shifted unit ball
    let f = Mbf::modulated(
        CycloScalar::from_rational(2, BigRational::new(BigInt::from(3), BigInt::from(2))),
        PAdicVector::scalar(PAdicPoint::new(2, 1, -2)),
        Ball::new(PAdicVector::scalar(PAdicPoint::new(2, 1, -1)), -1),
    )
    .add(&Mbf::indicator(Ball::new(
        PAdicVector::scalar(PAdicPoint::new(2, 3, -2)),
        0,
    )));

    let psi = psi0();
    let d = mra::decompose(&f, -2, &psi).unwrap();
    println!("decomposition from level J = {} down to j0 = {}:", d.top, d.j0);
    for (a, c) in &d.v {
        println!("  V_{:2} shift {:>6}  coef {:?}", d.j0, a.to_rational(), c);
    }
    for ((j, a), c) in &d.w {
        println!("  W_{j:2} shift {:>6}  coef {:?}", a.to_rational(), c);
    }

    let rebuilt = mra::reconstruct(&d, &psi);
    println!("reconstruction bitwise exact: {}", rebuilt == f);
    println!(
        "Parseval sum |c|^2 == <f,f>:  {}",
        d.coefficient_energy() == f.norm_squared()
    );

    // the same data as machine-readable JSON
    println!("{:#}", d.to_json());
}
