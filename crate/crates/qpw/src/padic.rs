//! Exact arithmetic on finite p-adic expansions (elements of Z[1/p]),
//! the p-adic norm, fractional parts, additive characters as angles,
//! and the ultrametric ball calculus.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

use crate::error::QpwError;

/// Formats a rational as "num/den" ("num" when the denominator is 1).
pub(crate) fn rat_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses "num" or "num/den" back into an exact rational.
pub(crate) fn rat_from_string(s: &str) -> Result<BigRational, QpwError> {
    let bad = || QpwError::Parse(format!("bad rational literal: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = n.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = d.trim().parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

/// p^k as a `BigInt`, k >= 0.
pub fn p_pow(p: u32, k: u64) -> BigInt {
    BigInt::from(p).pow(k as u32)
}

/// p^k as an exact rational, any sign of k.
pub fn p_pow_rational(p: u32, k: i64) -> BigRational {
    if k >= 0 {
        BigRational::from_integer(p_pow(p, k as u64))
    } else {
        BigRational::new(BigInt::one(), p_pow(p, (-k) as u64))
    }
}

/// An element of Z[1/p]: value = num * p^exp with p not dividing num
/// (num = 0 forces exp = 0). Equality is structural and decidable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PAdicPoint {
    prime: u32,
    num: BigInt,
    exp: i64,
}

impl PAdicPoint {
    pub fn new(prime: u32, num: impl Into<BigInt>, exp: i64) -> Self {
        let mut num: BigInt = num.into();
        let mut exp = exp;
        if num.is_zero() {
            return Self { prime, num, exp: 0 };
        }
        let p = BigInt::from(prime);
        loop {
            let (q, r) = num.div_rem(&p);
            if r.is_zero() {
                num = q;
                exp += 1;
            } else {
                break;
            }
        }
        Self { prime, num, exp }
    }

    pub fn zero(prime: u32) -> Self {
        Self::new(prime, 0, 0)
    }

    pub fn one(prime: u32) -> Self {
        Self::new(prime, 1, 0)
    }

    pub fn from_integer(prime: u32, n: impl Into<BigInt>) -> Self {
        Self::new(prime, n, 0)
    }

    /// Builds a point from a rational whose denominator is a p-power.
    pub fn from_rational(prime: u32, r: &BigRational) -> Result<Self, QpwError> {
        let mut den = r.denom().clone();
        let p = BigInt::from(prime);
        let mut k: i64 = 0;
        while den > BigInt::one() {
            let (q, rem) = den.div_rem(&p);
            if !rem.is_zero() {
                return Err(QpwError::NotPPower {
                    prime,
                    value: r.to_string(),
                });
            }
            den = q;
            k += 1;
        }
        Ok(Self::new(prime, r.numer().clone(), -k))
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// gamma(x) from the canonical expansion; `None` encodes +infinity (x = 0).
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp)
        }
    }

    /// |x|_p as a p-power exponent: |x|_p = p^e, `None` for |0|_p = 0.
    pub fn norm_exponent(&self) -> Option<i64> {
        self.valuation().map(|v| -v)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.num.clone()) * p_pow_rational(self.prime, self.exp)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.prime, other.prime, "prime mismatch");
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let num = &self.num * p_pow(self.prime, (self.exp - e) as u64)
            + &other.num * p_pow(self.prime, (other.exp - e) as u64);
        Self::new(self.prime, num, e)
    }

    pub fn neg(&self) -> Self {
        Self {
            prime: self.prime,
            num: -self.num.clone(),
            exp: self.exp,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.prime, other.prime, "prime mismatch");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.prime);
        }
        Self {
            prime: self.prime,
            num: &self.num * &other.num,
            exp: self.exp + other.exp,
        }
    }

    /// Multiplies by p^k.
    pub fn mul_p_pow(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Self {
            prime: self.prime,
            num: self.num.clone(),
            exp: self.exp + k,
        }
    }

    /// The fractional part {x}_p: the digits at negative exponents, as a
    /// rational in [0,1). Zero when gamma(x) >= 0.
    pub fn frac_part(&self) -> BigRational {
        if self.is_zero() || self.exp >= 0 {
            return BigRational::zero();
        }
        let m = (-self.exp) as u64;
        let pm = p_pow(self.prime, m);
        let r = self.num.mod_floor(&pm);
        BigRational::new(r, pm)
    }

    /// Keeps only the digits at exponents strictly below `g`; the discarded
    /// part has valuation >= g. This is the canonical representative of
    /// x modulo p^g * Z_p.
    pub fn digits_below(&self, g: i64) -> Self {
        let shifted = self.mul_p_pow(-g);
        let f = shifted.frac_part();
        // f has a p-power denominator by construction
        Self::from_rational(self.prime, &f)
            .expect("p-power denominator")
            .mul_p_pow(g)
    }
}

impl PartialOrd for PAdicPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by rational value; used only for deterministic output ordering.
impl Ord for PAdicPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_rational().cmp(&other.to_rational())
    }
}

impl fmt::Debug for PAdicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational())
    }
}

impl fmt::Display for PAdicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational())
    }
}

/// A point of Q_p^n; all coordinates share the prime.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PAdicVector {
    coords: Vec<PAdicPoint>,
}

impl PAdicVector {
    pub fn new(coords: Vec<PAdicPoint>) -> Self {
        assert!(!coords.is_empty(), "dimension must be >= 1");
        let p = coords[0].prime();
        assert!(coords.iter().all(|c| c.prime() == p), "prime mismatch");
        Self { coords }
    }

    pub fn zero(prime: u32, dim: usize) -> Self {
        Self::new(vec![PAdicPoint::zero(prime); dim])
    }

    pub fn scalar(x: PAdicPoint) -> Self {
        Self::new(vec![x])
    }

    pub fn prime(&self) -> u32 {
        self.coords[0].prime()
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[PAdicPoint] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// min over coordinates of gamma(x_j); `None` for the zero vector.
    /// |x|_p = p^{-valuation} by (the max-norm applied coordinatewise).
    pub fn valuation(&self) -> Option<i64> {
        self.coords.iter().filter_map(|c| c.valuation()).min()
    }

    pub fn norm_exponent(&self) -> Option<i64> {
        self.valuation().map(|v| -v)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coords.iter().map(|c| c.neg()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul_p_pow(&self, k: i64) -> Self {
        Self::new(self.coords.iter().map(|c| c.mul_p_pow(k)).collect())
    }

    pub fn digits_below(&self, g: i64) -> Self {
        Self::new(self.coords.iter().map(|c| c.digits_below(g)).collect())
    }
}

impl fmt::Debug for PAdicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coords.iter()).finish()
    }
}

/// An angle t in [0,1) with p-power denominator, standing for e^{2*pi*i*t}.
/// Character arithmetic is addition mod 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Angle {
    prime: u32,
    value: BigRational,
}

impl Angle {
    pub fn new(prime: u32, value: BigRational) -> Result<Self, QpwError> {
        let mut v = value.fract();
        if v.is_negative() {
            v += BigRational::one();
        }
        // denominator must be a p-power
        let mut den = v.denom().clone();
        let p = BigInt::from(prime);
        while den > BigInt::one() {
            let (q, r) = den.div_rem(&p);
            if !r.is_zero() {
                return Err(QpwError::NotPPower {
                    prime,
                    value: v.to_string(),
                });
            }
            den = q;
        }
        Ok(Self { prime, value: v })
    }

    pub fn zero(prime: u32) -> Self {
        Self {
            prime,
            value: BigRational::zero(),
        }
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.prime, other.prime, "prime mismatch");
        Self::new(self.prime, &self.value + &other.value).expect("sum of p-power angles")
    }

    pub fn neg(&self) -> Self {
        Self::new(self.prime, -self.value.clone()).expect("negated p-power angle")
    }
}

/// The additive character pairing: chi_p(s . x) = e^{2 pi i sum_j {s_j x_j}_p},
/// returned as the angle sum_j {s_j x_j}_p mod 1.
pub fn character(s: &PAdicVector, x: &PAdicVector) -> Angle {
    assert_eq!(s.prime(), x.prime(), "prime mismatch");
    assert_eq!(s.dim(), x.dim(), "dimension mismatch");
    let mut total = BigRational::zero();
    for (sj, xj) in s.coords().iter().zip(x.coords()) {
        total += sj.mul(xj).frac_part();
    }
    Angle::new(s.prime(), total).expect("character angle has p-power denominator")
}

/// An n-dimensional ball B_gamma^n(a) = {x : |x-a|_p <= p^gamma} with the
/// canonical center (digits strictly below exponent -gamma), so that
/// coset equality is structural equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ball {
    center: PAdicVector,
    gamma: i64,
}

impl Ball {
    pub fn new(center: PAdicVector, gamma: i64) -> Self {
        let center = center.digits_below(-gamma);
        Self { center, gamma }
    }

    pub fn unit(prime: u32, dim: usize) -> Self {
        Self::new(PAdicVector::zero(prime, dim), 0)
    }

    pub fn prime(&self) -> u32 {
        self.center.prime()
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    pub fn center(&self) -> &PAdicVector {
        &self.center
    }

    pub fn gamma(&self) -> i64 {
        self.gamma
    }

    /// Haar measure p^{n*gamma}, exact.
    pub fn measure(&self) -> BigRational {
        p_pow_rational(self.prime(), self.gamma * self.dim() as i64)
    }

    pub fn contains_point(&self, x: &PAdicVector) -> bool {
        match x.sub(&self.center).norm_exponent() {
            None => true,
            Some(e) => e <= self.gamma,
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.contains_point(&PAdicVector::zero(self.prime(), self.dim()))
    }

    /// Exact trichotomy: any two balls are nested or disjoint.
    pub fn relation(&self, other: &Self) -> BallRelation {
        assert_eq!(self.prime(), other.prime(), "prime mismatch");
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        let d = self.center.sub(&other.center).norm_exponent();
        let near = |g: i64| match d {
            None => true,
            Some(e) => e <= g,
        };
        match self.gamma.cmp(&other.gamma) {
            Ordering::Equal => {
                if near(self.gamma) {
                    BallRelation::Equal
                } else {
                    BallRelation::Disjoint
                }
            }
            Ordering::Greater => {
                if near(self.gamma) {
                    BallRelation::Contains
                } else {
                    BallRelation::Disjoint
                }
            }
            Ordering::Less => {
                if near(other.gamma) {
                    BallRelation::ContainedIn
                } else {
                    BallRelation::Disjoint
                }
            }
        }
    }

    /// Splits into the p^{n(gamma-gamma')} mutually disjoint balls of radius
    /// p^{gamma'} that cover this ball, with canonical centers, in
    /// deterministic (digit-lexicographic) order.
    pub fn split(&self, gamma_target: i64) -> Result<Vec<Ball>, QpwError> {
        if gamma_target > self.gamma {
            return Err(QpwError::BadSplit {
                gamma: self.gamma,
                gamma_target,
            });
        }
        let p = self.prime();
        let steps = (self.gamma - gamma_target) as u64;
        let count = p_pow(p, steps);
        // 1-d offsets: m * p^{-gamma} for m = 0 .. p^{gamma-gamma'} - 1
        let mut offsets_1d = Vec::new();
        let mut m = BigInt::zero();
        while m < count {
            offsets_1d.push(PAdicPoint::new(p, m.clone(), -self.gamma));
            m += 1;
        }
        let n = self.dim();
        let mut balls = Vec::new();
        let mut idx = vec![0usize; n];
        loop {
            let coords: Vec<PAdicPoint> = self
                .center
                .coords()
                .iter()
                .enumerate()
                .map(|(j, c)| c.add(&offsets_1d[idx[j]].clone()))
                .collect();
            balls.push(Ball::new(PAdicVector::new(coords), gamma_target));
            // odometer increment, last coordinate fastest
            let mut j = n;
            loop {
                if j == 0 {
                    return Ok(balls);
                }
                j -= 1;
                idx[j] += 1;
                if idx[j] < offsets_1d.len() {
                    break;
                }
                idx[j] = 0;
            }
        }
    }

    /// The ball of radius p^{gamma+1} containing this one.
    pub fn parent(&self) -> Ball {
        Ball::new(self.center.clone(), self.gamma + 1)
    }
}

impl fmt::Debug for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B_{}({:?})", self.gamma, self.center)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BallRelation {
    Disjoint,
    Equal,
    Contains,
    ContainedIn,
}

/// Enumerates I_p^n truncated at |a|_p <= p^{gamma_max}: the canonical coset
/// representatives of Q_p^n / Z_p^n. Ordering: per coordinate ascending by
/// (gamma, digit value); coordinates combined lexicographically.
pub fn enumerate_ip(prime: u32, gamma_max: i64, dim: usize) -> Vec<PAdicVector> {
    assert!(gamma_max >= 0, "gamma_max must be >= 0");
    let mut one_d = vec![PAdicPoint::zero(prime)];
    for g in 1..=gamma_max {
        // a = m / p^g with p not dividing m, 0 < m < p^g
        let pg = p_pow(prime, g as u64);
        let p = BigInt::from(prime);
        let mut m = BigInt::one();
        while m < pg {
            if !(&m % &p).is_zero() {
                one_d.push(PAdicPoint::new(prime, m.clone(), -g));
            }
            m += 1;
        }
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; dim];
    loop {
        out.push(PAdicVector::new(
            idx.iter().map(|&i| one_d[i].clone()).collect(),
        ));
        let mut j = dim;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < one_d.len() {
                break;
            }
            idx[j] = 0;
        }
    }
}
