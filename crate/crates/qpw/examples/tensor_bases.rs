//! Multidimensional wavelet bases: tensor wavelets indexed by a coordinate
//! subset e, per-coordinate orders s, a scale j, and a shift a; enumeration
//! and exact Gram verification.

use qpw::mra;
use qpw::padic::PAdicVector;
use qpw::wavelets::{enumerate_basis, tensor_wavelet, WaveletIndex};

fn main() {
    // dimension 2, Haar in both coordinates
    let s_config = vec![(0u32, None), (0u32, None)];
    let indices = enumerate_basis(2, &[-1, 0, 1], 1, &s_config).unwrap();
    println!("enumerated {} tensor wavelets", indices.len());

    let family: Vec<_> = indices
        .iter()
        .map(|idx| tensor_wavelet(idx).unwrap())
        .collect();
    println!(
        "Gram exactly identity: {}",
        mra::is_identity(&mra::gram_matrix(&family))
    );

    // one index in detail
    let idx = WaveletIndex {
        e: vec![1, 2],
        s: vec![0, 0],
        gamma: vec![None, None],
        j: 0,
        a: PAdicVector::zero(2, 2),
    };
    let w = tensor_wavelet(&idx).unwrap();
    println!("Psi_(e={{1,2}}, j=0, a=0):");
    for t in w.terms() {
        println!("  coef {:?} freq {:?} ball {:?}", t.coef, t.freq, t.ball);
    }
    println!("norm squared: {:?}", w.norm_squared());
    println!("k_e = {:?}", idx.k_e());
}
