//! The exact Fourier transform on modulated ball functions: transform of
//! the unit-ball indicator, Parseval, the Lizorkin (zero-mean) criterion,
//! and support duality.

use qpw::mbf::Mbf;
use qpw::padic::{Ball, PAdicPoint, PAdicVector};
use qpw::wavelets::{phi, psi0};

fn main() {
    // the unit-ball indicator is its own transform, for every p
    for p in [2u32, 3, 5] {
        let f = phi(p);
        println!("p = {p}: F[1_Zp] == 1_Zp: {}", f.fourier() == f);
    }

    // the Haar wavelet transforms to a single modulated indicator
    let psi = psi0();
    let hat = psi.fourier();
    println!("F[psi0] terms:");
    for t in hat.terms() {
        println!("  coef {:?}  freq {:?}  ball {:?}", t.coef, t.freq, t.ball);
    }
    println!("psi0 is Lizorkin (spectrum avoids 0): {}", psi.is_lizorkin());
    println!("phi  is Lizorkin: {}", phi(2).is_lizorkin());

    // round trip and Parseval on a two-term function
    let f = Mbf::modulated(
        qpw::cyclo::CycloScalar::from_integer(2, 3),
        PAdicVector::scalar(PAdicPoint::new(2, 3, -2)),
        Ball::new(PAdicVector::scalar(PAdicPoint::new(2, 1, -1)), -1),
    )
    .add(&psi.translate(&PAdicVector::scalar(PAdicPoint::new(2, 1, -2))));
    let hat = f.fourier();
    println!("inverse round trip exact: {}", hat.inverse_fourier() == f);
    println!(
        "Parseval |f|^2 == |Ff|^2: {}",
        f.norm_squared() == hat.norm_squared()
    );

    // support duality: constancy and support exponents swap and negate
    let (l, n) = f.local_constancy_params().unwrap();
    let (lh, nh) = hat.local_constancy_params().unwrap();
    println!("f   constant at 2^{l}, supported in B_{n}");
    println!("F f constant at 2^{lh}, supported in B_{nh}");
}
