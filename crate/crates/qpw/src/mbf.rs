//! Modulated ball functions: finite sums  sum_i c_i * chi_p(s_i . x) * 1_{B_i}(x)
//! with cyclotomic coefficients.  The type maintains a canonical form —
//! pairwise-disjoint balls of one common (coarsest possible) radius, one
//! canonical frequency per ball, no zero coefficients, deterministic term
//! order — so structural equality decides function equality.  The class is
//! closed under pointwise algebra, affine substitutions, and the Fourier
//! transform, all computed exactly.

use num_rational::BigRational;

use crate::cyclo::CycloScalar;
use crate::error::QpwError;
use crate::padic::{character, Ball, BallRelation, PAdicPoint, PAdicVector};

/// One term `coef * chi_p(freq . x) * 1_ball(x)`.
#[derive(Clone, PartialEq, Debug)]
pub struct MbfTerm {
    pub coef: CycloScalar,
    pub freq: PAdicVector,
    pub ball: Ball,
}

/// A modulated ball function, always held in canonical form.
#[derive(Clone, PartialEq, Debug)]
pub struct Mbf {
    prime: u32,
    dim: usize,
    terms: Vec<MbfTerm>,
}

impl Mbf {
    /// The zero function.
    pub fn zero(prime: u32, dim: usize) -> Self {
        Mbf { prime, dim, terms: Vec::new() }
    }

    /// Indicator of a ball.
    pub fn indicator(ball: Ball) -> Self {
        let prime = ball.prime();
        let dim = ball.dim();
        Self::from_terms(
            prime,
            dim,
            vec![MbfTerm {
                coef: CycloScalar::one(prime),
                freq: PAdicVector::zero(prime, dim),
                ball,
            }],
        )
    }

    /// `coef * chi_p(freq . x)` restricted to `ball`.
    pub fn modulated(coef: CycloScalar, freq: PAdicVector, ball: Ball) -> Self {
        let prime = ball.prime();
        let dim = ball.dim();
        Self::from_terms(prime, dim, vec![MbfTerm { coef, freq, ball }])
    }

    /// Builds a function from arbitrary (possibly overlapping, mixed-radius)
    /// terms and canonicalizes.
    pub fn from_terms(prime: u32, dim: usize, terms: Vec<MbfTerm>) -> Self {
        Mbf { prime, dim, terms: canonicalize(prime, dim, terms) }
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Canonical terms: disjoint balls sharing one radius exponent.
    pub fn terms(&self) -> &[MbfTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common radius exponent of the canonical balls (None for zero).
    pub fn gamma(&self) -> Option<i64> {
        self.terms.first().map(|t| t.ball.gamma())
    }

    /// Pointwise value at `x`.
    pub fn evaluate(&self, x: &PAdicVector) -> CycloScalar {
        let mut acc = CycloScalar::zero(self.prime);
        for t in &self.terms {
            if t.ball.contains_point(x) {
                let w = CycloScalar::root_of_unity(&character(&t.freq, x));
                acc = acc.add(&t.coef.mul(&w));
            }
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.prime, self.dim), (other.prime, other.dim));
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::from_terms(self.prime, self.dim, terms)
    }

    pub fn neg(&self) -> Self {
        self.scale(&CycloScalar::from_integer(self.prime, -1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| MbfTerm { coef: t.coef.mul(c), freq: t.freq.clone(), ball: t.ball.clone() })
            .collect();
        Self::from_terms(self.prime, self.dim, terms)
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        self.scale(&CycloScalar::from_rational(self.prime, r.clone()))
    }

    /// Pointwise product.  Balls intersect into the smaller ball or not at
    /// all; characters multiply by adding frequencies.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.prime, self.dim), (other.prime, other.dim));
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                let ball = match a.ball.relation(&b.ball) {
                    BallRelation::Disjoint => continue,
                    BallRelation::Equal | BallRelation::ContainedIn => a.ball.clone(),
                    BallRelation::Contains => b.ball.clone(),
                };
                terms.push(MbfTerm {
                    coef: a.coef.mul(&b.coef),
                    freq: a.freq.add(&b.freq),
                    ball,
                });
            }
        }
        Self::from_terms(self.prime, self.dim, terms)
    }

    /// Pointwise complex conjugate.
    pub fn conjugate(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| MbfTerm {
                coef: t.coef.conj(),
                freq: t.freq.neg(),
                ball: t.ball.clone(),
            })
            .collect();
        Self::from_terms(self.prime, self.dim, terms)
    }

    /// `x -> f(x - b)`.
    pub fn translate(&self, b: &PAdicVector) -> Self {
        assert_eq!(b.dim(), self.dim);
        let terms = self
            .terms
            .iter()
            .map(|t| MbfTerm {
                coef: t
                    .coef
                    .mul(&CycloScalar::root_of_unity(&character(&t.freq, b).neg())),
                freq: t.freq.clone(),
                ball: Ball::new(t.ball.center().add(b), t.ball.gamma()),
            })
            .collect();
        Self::from_terms(self.prime, self.dim, terms)
    }

    /// `x -> f(p^j x)`.
    pub fn dilate(&self, j: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| MbfTerm {
                coef: t.coef.clone(),
                freq: t.freq.mul_p_pow(j),
                ball: Ball::new(t.ball.center().mul_p_pow(-j), t.ball.gamma() + j),
            })
            .collect();
        Self::from_terms(self.prime, self.dim, terms)
    }

    /// `x -> f(p^j x - a)`.
    pub fn scale_shift(&self, j: i64, a: &PAdicVector) -> Self {
        self.dilate(j).translate(&a.mul_p_pow(-j))
    }

    /// Exact integral over Q_p^n with Haar measure normalized so the unit
    /// ball has measure 1.  In canonical form only unmodulated terms
    /// contribute, each its coefficient times the ball measure.
    pub fn integral(&self) -> CycloScalar {
        let mut acc = CycloScalar::zero(self.prime);
        for t in &self.terms {
            if t.freq.is_zero() {
                acc = acc.add(&t.coef.scale(&t.ball.measure()));
            }
        }
        acc
    }

    /// Hermitian L^2 pairing `<f, g> = integral of f * conj(g)`.
    pub fn inner_product(&self, other: &Self) -> CycloScalar {
        self.mul(&other.conjugate()).integral()
    }

    pub fn norm_squared(&self) -> CycloScalar {
        self.inner_product(self)
    }

    /// Forward transform `F[f](xi) = integral chi_p(xi . x) f(x) dx`.
    pub fn fourier(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let a = t.ball.center();
                let meas = t.ball.measure();
                MbfTerm {
                    coef: t
                        .coef
                        .scale(&meas)
                        .mul(&CycloScalar::root_of_unity(&character(&t.freq, a))),
                    freq: a.clone(),
                    ball: Ball::new(t.freq.neg(), -t.ball.gamma()),
                }
            })
            .collect();
        Self::from_terms(self.prime, self.dim, terms)
    }

    /// Inverse transform `F^{-1}[g](x) = integral chi_p(-x . xi) g(xi) dxi`.
    pub fn inverse_fourier(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let b = t.ball.center();
                let meas = t.ball.measure();
                MbfTerm {
                    coef: t
                        .coef
                        .scale(&meas)
                        .mul(&CycloScalar::root_of_unity(&character(&t.freq, b))),
                    freq: b.neg(),
                    ball: Ball::new(t.freq.clone(), -t.ball.gamma()),
                }
            })
            .collect();
        Self::from_terms(self.prime, self.dim, terms)
    }

    /// True when the spectrum stays away from the origin: no ball of the
    /// canonical Fourier transform contains 0.  Equivalent to all moments
    /// against locally constant functions near zero frequency vanishing.
    pub fn is_lizorkin(&self) -> bool {
        !self.is_zero() && self.fourier().terms.iter().all(|t| !t.ball.contains_zero())
    }

    /// `(l, N)`: f is supported in the ball of radius p^N about 0 and is
    /// constant on every ball of radius p^l.  None for the zero function.
    pub fn local_constancy_params(&self) -> Option<(i64, i64)> {
        if self.is_zero() {
            return None;
        }
        let mut l = i64::MAX;
        let mut n = i64::MIN;
        for t in &self.terms {
            let g = t.ball.gamma();
            let support = match t.ball.center().norm_exponent() {
                Some(e) => g.max(e),
                None => g,
            };
            n = n.max(support);
            let constancy = match t.freq.valuation() {
                Some(v) => g.min(v),
                None => g,
            };
            l = l.min(constancy);
        }
        Some((l, n))
    }

    /// Tensor product: `(f ⊗ g)(x, y) = f(x) g(y)` on the concatenated
    /// coordinates.  Both factors are refined to a common radius so the
    /// product balls are honest n-dimensional balls.
    pub fn tensor(&self, other: &Self) -> Self {
        assert_eq!(self.prime, other.prime);
        let dim = self.dim + other.dim;
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.prime, dim);
        }
        let g = self.gamma().unwrap().min(other.gamma().unwrap());
        let left = refine_to(&self.terms, g);
        let right = refine_to(&other.terms, g);
        let mut terms = Vec::with_capacity(left.len() * right.len());
        for a in &left {
            for b in &right {
                let mut coords = a.ball.center().coords().to_vec();
                coords.extend_from_slice(b.ball.center().coords());
                let mut freq = a.freq.coords().to_vec();
                freq.extend_from_slice(b.freq.coords());
                terms.push(MbfTerm {
                    coef: a.coef.mul(&b.coef),
                    freq: PAdicVector::new(freq),
                    ball: Ball::new(PAdicVector::new(coords), g),
                });
            }
        }
        Self::from_terms(self.prime, dim, terms)
    }

    /// JSON view with exact rationals as strings; round-trips bit-exactly.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": self.prime,
            "n": self.dim,
            "terms": self
                .terms
                .iter()
                .map(|t| {
                    serde_json::json!({
                        "coef": t.coef.to_json(),
                        "freq": vector_to_json(&t.freq),
                        "ball": {
                            "center": vector_to_json(t.ball.center()),
                            "gamma": t.ball.gamma(),
                        },
                    })
                })
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, QpwError> {
        let bad = |msg: &str| QpwError::Parse(format!("mbf: {msg}"));
        let prime = v.get("p").and_then(|x| x.as_u64()).ok_or_else(|| bad("missing p"))? as u32;
        let dim = v.get("n").and_then(|x| x.as_u64()).ok_or_else(|| bad("missing n"))? as usize;
        let raw = v
            .get("terms")
            .and_then(|x| x.as_array())
            .ok_or_else(|| bad("missing terms"))?;
        let mut terms = Vec::with_capacity(raw.len());
        for tv in raw {
            let coef = CycloScalar::from_json(
                prime,
                tv.get("coef").ok_or_else(|| bad("term missing coef"))?,
            )?;
            let freq =
                vector_from_json(prime, tv.get("freq").ok_or_else(|| bad("term missing freq"))?)?;
            let bv = tv.get("ball").ok_or_else(|| bad("term missing ball"))?;
            let center = vector_from_json(
                prime,
                bv.get("center").ok_or_else(|| bad("ball missing center"))?,
            )?;
            let gamma = bv
                .get("gamma")
                .and_then(|x| x.as_i64())
                .ok_or_else(|| bad("ball missing gamma"))?;
            if freq.dim() != dim || center.dim() != dim {
                return Err(bad("dimension mismatch"));
            }
            terms.push(MbfTerm { coef, freq, ball: Ball::new(center, gamma) });
        }
        Ok(Self::from_terms(prime, dim, terms))
    }
}

fn vector_to_json(v: &PAdicVector) -> serde_json::Value {
    serde_json::Value::Array(
        v.coords()
            .iter()
            .map(|c| serde_json::Value::String(crate::padic::rat_to_string(&c.to_rational())))
            .collect(),
    )
}

fn vector_from_json(prime: u32, v: &serde_json::Value) -> Result<PAdicVector, QpwError> {
    let arr = v
        .as_array()
        .ok_or_else(|| QpwError::Parse("vector is not an array".into()))?;
    let mut coords = Vec::with_capacity(arr.len());
    for c in arr {
        let s = c
            .as_str()
            .ok_or_else(|| QpwError::Parse("vector entry is not a string".into()))?;
        let r = crate::padic::rat_from_string(s)?;
        coords.push(PAdicPoint::from_rational(prime, &r)?);
    }
    Ok(PAdicVector::new(coords))
}

/// Canonicalization.  Refine all balls to a common radius, reduce each
/// frequency to its canonical representative modulo the ball's dual lattice
/// (folding the constant character value into the coefficient), merge and
/// drop zeros; then re-coarsen greedily while every sibling family of
/// sub-balls is the exact refinement of a single coarser term.
fn canonicalize(prime: u32, dim: usize, mut terms: Vec<MbfTerm>) -> Vec<MbfTerm> {
    terms.retain(|t| !t.coef.is_zero());
    if terms.is_empty() {
        return terms;
    }
    let mut gamma = terms.iter().map(|t| t.ball.gamma()).min().unwrap();
    // Refine, lowering gamma further while some ball still carries two
    // genuinely different characters.
    let mut refined;
    loop {
        refined = refine_to(&terms, gamma);
        let mut collision: Option<i64> = None;
        for w in refined.windows(2) {
            if w[0].ball == w[1].ball {
                let v = w[0]
                    .freq
                    .sub(&w[1].freq)
                    .valuation()
                    .expect("merged terms have distinct frequencies");
                collision = Some(collision.map_or(v, |c| c.min(v)));
            }
        }
        match collision {
            Some(g) => gamma = g,
            None => break,
        }
    }
    terms = refined;

    // Coarsen: lift gamma while every parent-ball family is complete, shares
    // one reduced frequency, and its coefficients match a single coarser
    // modulated term.
    let family = (prime as usize).pow(dim as u32);
    'coarsen: loop {
        if terms.is_empty() || terms.len() % family != 0 {
            break;
        }
        let mut groups: std::collections::BTreeMap<Ball, Vec<&MbfTerm>> =
            std::collections::BTreeMap::new();
        for t in &terms {
            groups.entry(t.ball.parent()).or_default().push(t);
        }
        let mut merged = Vec::with_capacity(groups.len());
        for (parent, children) in &groups {
            if children.len() != family {
                break 'coarsen;
            }
            let s = &children[0].freq;
            if children.iter().any(|c| &c.freq != s) {
                break 'coarsen;
            }
            match coarsen_family(prime, dim, parent, s, children) {
                Some(term) => merged.push(term),
                None => break 'coarsen,
            }
        }
        terms = merged;
    }
    terms
}

/// Splits every term to radius exponent `gamma`, reduces frequencies, merges
/// duplicates, drops zeros, and sorts.  Requires gamma <= every term's gamma.
fn refine_to(terms: &[MbfTerm], gamma: i64) -> Vec<MbfTerm> {
    let mut out = Vec::new();
    for t in terms {
        let reduced = t.freq.digits_below(gamma);
        let delta = t.freq.sub(&reduced);
        for sub in t.ball.split(gamma).expect("refinement never raises gamma") {
            let twist = CycloScalar::root_of_unity(&character(&delta, sub.center()));
            out.push(MbfTerm {
                coef: t.coef.mul(&twist),
                freq: reduced.clone(),
                ball: sub,
            });
        }
    }
    out.sort_by(|a, b| a.ball.cmp(&b.ball).then_with(|| a.freq.cmp(&b.freq)));
    let mut merged: Vec<MbfTerm> = Vec::with_capacity(out.len());
    for t in out {
        match merged.last_mut() {
            Some(prev) if prev.ball == t.ball && prev.freq == t.freq => {
                prev.coef = prev.coef.add(&t.coef);
            }
            _ => merged.push(t),
        }
    }
    merged.retain(|t| !t.coef.is_zero());
    merged
}

/// Tries to express a complete sibling family as one term on the parent
/// ball.  The parent frequency must reduce to the children's shared
/// frequency, so it differs by a digit vector d * p^gamma; each candidate is
/// checked against every child's coefficient.
fn coarsen_family(
    prime: u32,
    dim: usize,
    parent: &Ball,
    freq: &PAdicVector,
    children: &[&MbfTerm],
) -> Option<MbfTerm> {
    let gamma = children[0].ball.gamma();
    let mut digits = vec![0u32; dim];
    loop {
        let delta = PAdicVector::new(
            digits
                .iter()
                .map(|&d| PAdicPoint::new(prime, d as i64, gamma))
                .collect(),
        );
        let candidate = freq.add(&delta);
        let c0 = children[0].ball.center();
        let parent_coef = children[0]
            .coef
            .mul(&CycloScalar::root_of_unity(&character(&delta, c0).neg()));
        let ok = children.iter().all(|ch| {
            let expect = parent_coef
                .mul(&CycloScalar::root_of_unity(&character(&delta, ch.ball.center())));
            expect == ch.coef
        });
        if ok {
            return Some(MbfTerm { coef: parent_coef, freq: candidate, ball: parent.clone() });
        }
        // odometer over digit vectors
        let mut i = 0;
        loop {
            if i == dim {
                return None;
            }
            digits[i] += 1;
            if digits[i] < prime {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::p_pow_rational;

    fn pt(p: u32, num: i64, exp: i64) -> PAdicPoint {
        PAdicPoint::new(p, num, exp)
    }

    fn vec1(x: PAdicPoint) -> PAdicVector {
        PAdicVector::scalar(x)
    }

    fn unit_indicator(p: u32) -> Mbf {
        Mbf::indicator(Ball::unit(p, 1))
    }

    /// Integral oracle: refine every term until its character is constant on
    /// each piece, then sum value-at-center times measure.
    fn integral_oracle(f: &Mbf) -> CycloScalar {
        let mut acc = CycloScalar::zero(f.prime());
        for t in f.terms() {
            let fine = match t.freq.valuation() {
                Some(v) => v.min(t.ball.gamma()),
                None => t.ball.gamma(),
            };
            for piece in t.ball.split(fine).unwrap() {
                let w = CycloScalar::root_of_unity(&character(&t.freq, piece.center()));
                acc = acc.add(&t.coef.mul(&w).scale(&piece.measure()));
            }
        }
        acc
    }

    #[test]
    fn indicator_evaluates_and_integrates() {
        let f = unit_indicator(2);
        assert!(f.evaluate(&vec1(pt(2, 3, 0))).is_one());
        assert!(f.evaluate(&vec1(pt(2, 1, -1))).is_zero());
        assert!(f.integral().is_one());
    }

    #[test]
    fn canonical_form_merges_coset_pieces() {
        // +1 on B_{-1}(0), -1 on B_{-1}(1) equals chi_2(x/2) on the unit ball.
        let p = 2;
        let plus = MbfTerm {
            coef: CycloScalar::one(p),
            freq: vec1(pt(p, 0, 0)),
            ball: Ball::new(vec1(pt(p, 0, 0)), -1),
        };
        let minus = MbfTerm {
            coef: CycloScalar::from_integer(p, -1),
            freq: vec1(pt(p, 0, 0)),
            ball: Ball::new(vec1(pt(p, 1, 0)), -1),
        };
        let split_form = Mbf::from_terms(p, 1, vec![plus, minus]);
        let merged = Mbf::modulated(
            CycloScalar::one(p),
            vec1(pt(p, 1, -1)),
            Ball::unit(p, 1),
        );
        assert_eq!(split_form, merged);
        assert_eq!(split_form.terms().len(), 1);
        assert_eq!(split_form.gamma(), Some(0));
    }

    #[test]
    fn canonical_form_drops_cancelling_terms() {
        let f = unit_indicator(3);
        assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn algebra_matches_pointwise_evaluation() {
        let p = 3;
        let f = Mbf::modulated(
            CycloScalar::root_of_unity(&crate::padic::Angle::new(p, BigRational::new(1.into(), 3.into())).unwrap()),
            vec1(pt(p, 1, -2)),
            Ball::new(vec1(pt(p, 1, 0)), 1),
        );
        let g = Mbf::indicator(Ball::new(vec1(pt(p, 0, 0)), 0)).sub(&Mbf::modulated(
            CycloScalar::from_integer(p, 2),
            vec1(pt(p, 2, -1)),
            Ball::new(vec1(pt(p, 0, 0)), -1),
        ));
        let points: Vec<PAdicVector> = vec![
            vec1(pt(p, 0, 0)),
            vec1(pt(p, 1, 0)),
            vec1(pt(p, 2, -1)),
            vec1(pt(p, 4, -2)),
            vec1(pt(p, 7, 1)),
        ];
        for x in &points {
            assert_eq!(f.add(&g).evaluate(x), f.evaluate(x).add(&g.evaluate(x)));
            assert_eq!(f.mul(&g).evaluate(x), f.evaluate(x).mul(&g.evaluate(x)));
            assert_eq!(f.conjugate().evaluate(x), f.evaluate(x).conj());
        }
    }

    #[test]
    fn translate_dilate_match_substitution() {
        let p = 2;
        let f = Mbf::modulated(
            CycloScalar::one(p),
            vec1(pt(p, 1, -2)),
            Ball::new(vec1(pt(p, 1, -1)), 1),
        );
        let b = vec1(pt(p, 3, -1));
        let points: Vec<PAdicVector> = vec![
            vec1(pt(p, 0, 0)),
            vec1(pt(p, 1, -1)),
            vec1(pt(p, 5, -2)),
            vec1(pt(p, 3, 1)),
        ];
        for x in &points {
            assert_eq!(f.translate(&b).evaluate(x), f.evaluate(&x.sub(&b)));
            assert_eq!(f.dilate(2).evaluate(x), f.evaluate(&x.mul_p_pow(2)));
            assert_eq!(
                f.scale_shift(-1, &b).evaluate(x),
                f.evaluate(&x.mul_p_pow(-1).sub(&b))
            );
        }
    }

    #[test]
    fn dilate_indicator_moves_radius() {
        // phi(x/2) is the indicator of the ball of radius 1/2: |x/2| = 2|x|
        // in the 2-adic norm, so dividing the argument shrinks the support.
        let f = unit_indicator(2).dilate(-1);
        assert_eq!(f, Mbf::indicator(Ball::new(PAdicVector::zero(2, 1), -1)));
        assert_eq!(f.integral().as_rational(), Some(&p_pow_rational(2, -1)));
        // and f(2x) spreads it out to the ball of radius 2
        let g = unit_indicator(2).dilate(1);
        assert_eq!(g, Mbf::indicator(Ball::new(PAdicVector::zero(2, 1), 1)));
    }

    #[test]
    fn integral_matches_oracle() {
        let p = 3;
        let f = Mbf::modulated(
            CycloScalar::from_integer(p, 2),
            vec1(pt(p, 1, -2)),
            Ball::new(vec1(pt(p, 1, 0)), 2),
        )
        .add(&Mbf::indicator(Ball::new(vec1(pt(p, 2, -1)), -1)));
        assert_eq!(f.integral(), integral_oracle(&f));
        assert_eq!(unit_indicator(5).integral(), integral_oracle(&unit_indicator(5)));
    }

    #[test]
    fn fourier_of_unit_indicator_is_itself() {
        for p in [2u32, 3, 5] {
            let f = unit_indicator(p);
            assert_eq!(f.fourier(), f);
        }
    }

    #[test]
    fn fourier_round_trips() {
        let p = 2;
        let f = Mbf::modulated(
            CycloScalar::one(p),
            vec1(pt(p, 1, -1)),
            Ball::unit(p, 1),
        )
        .add(&Mbf::modulated(
            CycloScalar::from_integer(p, -3),
            vec1(pt(p, 3, -2)),
            Ball::new(vec1(pt(p, 1, -1)), -1),
        ));
        assert_eq!(f.fourier().inverse_fourier(), f);
        assert_eq!(f.inverse_fourier().fourier(), f);
    }

    #[test]
    fn fourier_is_unitary_on_a_sample() {
        let p = 3;
        let f = Mbf::modulated(
            CycloScalar::from_integer(p, 2),
            vec1(pt(p, 1, -1)),
            Ball::new(vec1(pt(p, 1, 0)), 1),
        );
        let g = Mbf::indicator(Ball::new(vec1(pt(p, 2, -2)), -2));
        assert_eq!(f.inner_product(&g), f.fourier().inner_product(&g.fourier()));
        assert_eq!(f.norm_squared(), f.fourier().norm_squared());
    }

    #[test]
    fn local_constancy_params_examples() {
        let p = 2;
        let phi = unit_indicator(p);
        assert_eq!(phi.local_constancy_params(), Some((0, 0)));
        let psi0 = Mbf::modulated(
            CycloScalar::one(p),
            vec1(pt(p, 1, -1)),
            Ball::unit(p, 1),
        );
        assert_eq!(psi0.local_constancy_params(), Some((-1, 0)));
        assert!(psi0.is_lizorkin());
        assert!(!phi.is_lizorkin());
    }

    #[test]
    fn tensor_product_evaluates_pointwise() {
        let p = 2;
        let f = Mbf::modulated(CycloScalar::one(p), vec1(pt(p, 1, -1)), Ball::unit(p, 1));
        let g = Mbf::indicator(Ball::new(vec1(pt(p, 1, 0)), -1));
        let t = f.tensor(&g);
        assert_eq!(t.dim(), 2);
        for x in [pt(p, 0, 0), pt(p, 1, 0), pt(p, 1, -1)] {
            for y in [pt(p, 0, 0), pt(p, 1, 0), pt(p, 3, 0)] {
                let xy = PAdicVector::new(vec![x.clone(), y.clone()]);
                assert_eq!(
                    t.evaluate(&xy),
                    f.evaluate(&vec1(x.clone())).mul(&g.evaluate(&vec1(y.clone())))
                );
            }
        }
        assert_eq!(t.integral(), f.integral().mul(&g.integral()));
    }

    #[test]
    fn json_round_trip_is_exact() {
        let p = 2;
        let f = Mbf::modulated(
            CycloScalar::root_of_unity(
                &crate::padic::Angle::new(p, BigRational::new(3.into(), 8.into())).unwrap(),
            )
            .scale(&BigRational::new(7.into(), 16.into())),
            vec1(pt(p, 5, -3)),
            Ball::new(vec1(pt(p, 3, -2)), -1),
        );
        let v = f.to_json();
        let s = serde_json::to_string(&v).unwrap();
        let back = Mbf::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, f);
    }
}
