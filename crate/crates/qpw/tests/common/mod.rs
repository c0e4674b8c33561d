//! Shared helpers for the integration suites: seeded random generators for
//! exact test inputs, plus independent oracles implemented from first
//! principles (no reuse of the code paths under test).

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qpw::cyclo::CycloScalar;
use qpw::mbf::{Mbf, MbfTerm};
use qpw::padic::{character, Angle, Ball, PAdicPoint, PAdicVector};
use qpw::wavelets::GammaVector;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A random dyadic angle k / 2^m, m <= m_max.
pub fn random_angle(r: &mut ChaCha8Rng, prime: u32, m_max: u32) -> Angle {
    let m = r.gen_range(0..=m_max);
    let den = (prime as i64).pow(m);
    let num = r.gen_range(0..den.max(1));
    Angle::new(prime, rat(num, den)).unwrap()
}

/// A random exact unit-modulus gamma vector (entries are roots of unity).
pub fn random_gamma(r: &mut ChaCha8Rng, s: u32) -> GammaVector {
    let angles: Vec<Angle> = (0..(1usize << s))
        .map(|_| random_angle(r, 2, s + 3))
        .collect();
    GammaVector::from_angles(s, &angles).unwrap()
}

/// The same with one entry pushed off the unit circle.
pub fn perturbed_gamma(r: &mut ChaCha8Rng, s: u32) -> Vec<CycloScalar> {
    let g = random_gamma(r, s);
    let mut entries = g.gammas().to_vec();
    let slot = r.gen_range(0..entries.len());
    entries[slot] = entries[slot].scale(&rat(2, 1));
    entries
}

fn random_coef(r: &mut ChaCha8Rng, prime: u32) -> CycloScalar {
    if r.gen_bool(0.5) {
        CycloScalar::from_rational(prime, rat(r.gen_range(-6..=6), r.gen_range(1..=4)))
    } else {
        let root = CycloScalar::root_of_unity(&random_angle(r, prime, 2));
        root.scale(&rat(r.gen_range(1..=5), r.gen_range(1..=3)))
    }
}

/// A random nonzero function constant at scale p^l and supported in B_N:
/// balls no finer than gamma = l, centers and frequencies with valuation
/// at least -N resp. l.
pub fn random_mbf(r: &mut ChaCha8Rng, prime: u32, dim: usize, l: i64, n_max: i64) -> Mbf {
    loop {
        let terms: Vec<MbfTerm> = (0..r.gen_range(1..=4))
            .map(|_| {
                let gamma = r.gen_range(l..=0);
                let denom = (prime as i64).pow((-l) as u32);
                let span = denom * (prime as i64).pow(n_max as u32);
                let point = |r: &mut ChaCha8Rng| {
                    PAdicVector::new(
                        (0..dim)
                            .map(|_| PAdicPoint::new(prime, r.gen_range(-span..span), l))
                            .collect(),
                    )
                };
                MbfTerm {
                    coef: random_coef(r, prime),
                    freq: point(r),
                    ball: Ball::new(point(r), gamma),
                }
            })
            .collect();
        let f = Mbf::from_terms(prime, dim, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// A random point inside B_{n_max + 1}, at resolution p^{l-1}.
pub fn random_point(r: &mut ChaCha8Rng, prime: u32, dim: usize, l: i64, n_max: i64) -> PAdicVector {
    let span = (prime as i64).pow((n_max + 1 - (l - 1)) as u32);
    PAdicVector::new(
        (0..dim)
            .map(|_| PAdicPoint::new(prime, r.gen_range(-span..span), l - 1))
            .collect(),
    )
}

/// Multiplies f pointwise by the character chi(w . x).
pub fn modulate(f: &Mbf, w: &PAdicVector) -> Mbf {
    let terms: Vec<MbfTerm> = f
        .terms()
        .iter()
        .map(|t| MbfTerm {
            coef: t.coef.clone(),
            freq: t.freq.add(w),
            ball: t.ball.clone(),
        })
        .collect();
    Mbf::from_terms(f.prime(), f.dim(), terms)
}

/// The reflection f(-x).
pub fn reflect(f: &Mbf) -> Mbf {
    let terms: Vec<MbfTerm> = f
        .terms()
        .iter()
        .map(|t| MbfTerm {
            coef: t.coef.clone(),
            freq: t.freq.neg(),
            ball: Ball::new(t.ball.center().neg(), t.ball.gamma()),
        })
        .collect();
    Mbf::from_terms(f.prime(), f.dim(), terms)
}

/// Independent integral oracle: split each term until its character is
/// constant on the piece, then sum value x measure.
pub fn integral_oracle(f: &Mbf) -> CycloScalar {
    let mut acc = CycloScalar::zero(f.prime());
    for t in f.terms() {
        let fine = match t.freq.valuation() {
            Some(v) => t.ball.gamma().min(v),
            None => t.ball.gamma(),
        };
        for piece in t.ball.split(fine).unwrap() {
            let value = t
                .coef
                .mul(&CycloScalar::root_of_unity(&character(&t.freq, piece.center())));
            acc = acc.add(&value.scale(&piece.measure()));
        }
    }
    acc
}

/// Sum of |c|^2 over a rational measure grid: <f, f> from first principles.
pub fn norm_squared_oracle(f: &Mbf) -> CycloScalar {
    let mut acc = CycloScalar::zero(f.prime());
    if f.is_zero() {
        return acc;
    }
    for t in f.terms() {
        // canonical terms live on pairwise-disjoint balls; |chi| = 1
        acc = acc.add(&t.coef.norm_squared().scale(&t.ball.measure()));
    }
    acc
}

pub fn zero_rat() -> BigRational {
    BigRational::zero()
}
