//! Exact complex arithmetic in the cyclotomic fields Q(zeta_{p^m}), the
//! coefficient ring for all wavelet constructions, plus a symbolic scalar
//! c * p^w for operator eigenvalues with complex exponents.
//!
//! A scalar of order N = p^m is a rational polynomial in zeta_N reduced
//! modulo Phi_{p^m}(X) = 1 + X^{p^{m-1}} + ... + X^{(p-1) p^{m-1}}, and then
//! demoted to the smallest order that can represent it. The reduced
//! representation is unique, so equality is coefficient equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

use crate::error::QpwError;
use crate::padic::{p_pow_rational, Angle};

fn phi_degree(p: u32, m: u32) -> usize {
    if m == 0 {
        1
    } else {
        (p as usize - 1) * (p as usize).pow(m - 1)
    }
}

/// An exact element of Q(zeta_{p^m}).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloScalar {
    prime: u32,
    m: u32,
    /// Length phi(p^m); coefficient of zeta_{p^m}^k at index k.
    coeffs: Vec<BigRational>,
}

impl CycloScalar {
    fn from_raw(prime: u32, m: u32, coeffs: Vec<BigRational>) -> Self {
        let mut s = Self { prime, m, coeffs };
        s.demote();
        s
    }

    /// Reduces a polynomial in zeta_{p^m} (any exponent list) to the basis.
    fn from_poly(prime: u32, m: u32, poly: Vec<BigRational>) -> Self {
        let n = (prime as usize).pow(m);
        let deg = phi_degree(prime, m);
        let step = if m == 0 { 1 } else { (prime as usize).pow(m - 1) };
        let mut reduced = vec![BigRational::zero(); deg];
        for (e, c) in poly.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = e % n;
            if t < deg {
                reduced[t] += c;
            } else {
                // zeta^t = -sum_{j=0}^{p-2} zeta^{r + j p^{m-1}}, t = (p-1)p^{m-1} + r
                let r = t - deg;
                for j in 0..(prime as usize - 1) {
                    reduced[r + j * step] -= &c;
                }
            }
        }
        Self::from_raw(prime, m, reduced)
    }

    /// Shrinks to the minimal order representing the same value; zero is
    /// normalized to order 1 (m = 0).
    fn demote(&mut self) {
        while self.m > 0 {
            if self.coeffs.iter().all(|c| c.is_zero()) {
                self.m = 0;
                self.coeffs = vec![BigRational::zero()];
                return;
            }
            let p = self.prime as usize;
            if self
                .coeffs
                .iter()
                .enumerate()
                .any(|(k, c)| !c.is_zero() && k % p != 0)
            {
                return;
            }
            let lower_deg = phi_degree(self.prime, self.m - 1);
            let mut lower = vec![BigRational::zero(); lower_deg];
            for (k, c) in self.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    lower[k / p] = c.clone();
                }
            }
            self.m -= 1;
            self.coeffs = lower;
        }
    }

    /// Re-expresses at order p^{m_target} >= current order.
    fn promote(&self, m_target: u32) -> Self {
        assert!(m_target >= self.m);
        if m_target == self.m {
            return self.clone();
        }
        let scale = (self.prime as usize).pow(m_target - self.m);
        let mut coeffs = vec![BigRational::zero(); phi_degree(self.prime, m_target)];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[k * scale] = c.clone();
            }
        }
        Self {
            prime: self.prime,
            m: m_target,
            coeffs,
        }
    }

    pub fn zero(prime: u32) -> Self {
        Self {
            prime,
            m: 0,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one(prime: u32) -> Self {
        Self::from_rational(prime, BigRational::one())
    }

    pub fn from_rational(prime: u32, r: BigRational) -> Self {
        Self {
            prime,
            m: 0,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(prime: u32, n: i64) -> Self {
        Self::from_rational(prime, BigRational::from_integer(BigInt::from(n)))
    }

    /// The exact root of unity e^{2 pi i a} for an angle with p-power
    /// denominator, at minimal order.
    pub fn root_of_unity(a: &Angle) -> Self {
        let prime = a.prime();
        let den = a.value().denom().clone();
        // denominator = p^m (validated by Angle)
        let mut m = 0u32;
        let mut d = den.clone();
        let p = BigInt::from(prime);
        while d > BigInt::one() {
            d /= &p;
            m += 1;
        }
        let num = a.value().numer();
        let n = BigInt::from(prime).pow(m);
        let k = ((num % &n) + &n) % &n;
        let k: usize = k.to_string().parse().expect("small exponent");
        let deg = (prime as usize).pow(m);
        let mut poly = vec![BigRational::zero(); deg];
        poly[k] = BigRational::one();
        Self::from_poly(prime, m, poly)
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    /// N = p^m of the reduced (minimal) representation.
    pub fn order(&self) -> u64 {
        (self.prime as u64).pow(self.m)
    }

    pub fn order_exponent(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.m == 0 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.m == 0 && self.coeffs[0].is_one()
    }

    /// Some(r) when the value lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.m == 0 {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.prime, other.prime, "prime mismatch");
        let m = self.m.max(other.m);
        let a = self.promote(m);
        let b = other.promote(m);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        Self::from_raw(self.prime, m, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self {
            prime: self.prime,
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.prime, other.prime, "prime mismatch");
        let m = self.m.max(other.m);
        let a = self.promote(m);
        let b = other.promote(m);
        let mut poly = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                poly[i + j] += x * y;
            }
        }
        Self::from_poly(self.prime, m, poly)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::from_raw(
            self.prime,
            self.m,
            self.coeffs.iter().map(|c| c * r).collect(),
        )
    }

    /// Complex conjugation: zeta |-> zeta^{-1}.
    pub fn conj(&self) -> Self {
        if self.m == 0 {
            return self.clone();
        }
        let n = (self.prime as usize).pow(self.m);
        let mut poly = vec![BigRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(n - k) % n] += c;
            }
        }
        Self::from_poly(self.prime, self.m, poly)
    }

    /// |x|^2 = x * conj(x); real, but returned as a scalar.
    pub fn norm_squared(&self) -> Self {
        self.mul(&self.conj())
    }

    /// Field inverse via the extended Euclidean algorithm on Q[X] modulo
    /// Phi_{p^m}(X).
    pub fn inv(&self) -> Result<Self, QpwError> {
        if self.is_zero() {
            return Err(QpwError::DivisionByZero);
        }
        if self.m == 0 {
            return Ok(Self::from_rational(
                self.prime,
                self.coeffs[0].recip(),
            ));
        }
        // modulus Phi_{p^m}
        let deg = phi_degree(self.prime, self.m);
        let step = (self.prime as usize).pow(self.m - 1);
        let mut modulus = vec![BigRational::zero(); deg + 1];
        for j in 0..self.prime as usize {
            modulus[j * step] = BigRational::one();
        }
        let (g, _, t) = poly_ext_gcd(&modulus, &self.coeffs);
        // gcd must be a nonzero constant (Phi is irreducible over Q)
        debug_assert_eq!(poly_degree(&g), Some(0));
        let c = g[0].recip();
        let inv_poly: Vec<BigRational> = t.iter().map(|x| x * &c).collect();
        Ok(Self::from_poly(self.prime, self.m, inv_poly))
    }

    pub fn div(&self, other: &Self) -> Result<Self, QpwError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Numeric value for reporting only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let n = (self.prime as f64).powi(self.m as i32);
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = rational_to_f64(c);
            let t = 2.0 * std::f64::consts::PI * (k as f64) / n;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }

    /// sqrt(2) = zeta_8 - zeta_8^3, exact; only defined for p = 2.
    pub fn sqrt2() -> Self {
        let one = BigRational::one();
        let mut coeffs = vec![BigRational::zero(); 4];
        coeffs[1] = one.clone();
        coeffs[3] = -one;
        Self::from_raw(2, 3, coeffs)
    }

    /// 2^{k/2}, exact, for p = 2 (integer multiples of sqrt(2) powers).
    pub fn two_pow_half(k: i64) -> Self {
        let whole = k.div_euclid(2);
        let rem = k.rem_euclid(2);
        let base = Self::from_rational(2, p_pow_rational(2, whole));
        if rem == 0 {
            base
        } else {
            base.mul(&Self::sqrt2())
        }
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 0 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let n = self.order();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", c)?;
            } else {
                write!(f, "({})*z{}^{}", c, n, k)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl CycloScalar {
    /// JSON view: `{"order": n, "coeffs": ["num/den", ...]}` over the basis
    /// zeta_n^k, k < phi(n).  Round-trips bit-exactly.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "order": self.order(),
            "coeffs": self
                .coeffs
                .iter()
                .map(|c| crate::padic::rat_to_string(c))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(prime: u32, v: &serde_json::Value) -> Result<Self, QpwError> {
        let bad = |msg: &str| QpwError::Parse(format!("cyclotomic scalar: {msg}"));
        let order = v
            .get("order")
            .and_then(|o| o.as_u64())
            .ok_or_else(|| bad("missing order"))?;
        let m = if order == 1 {
            0
        } else {
            let mut m = 0u32;
            let mut n = order;
            while n % prime as u64 == 0 {
                n /= prime as u64;
                m += 1;
            }
            if n != 1 || m == 0 {
                return Err(bad("order is not a power of the prime"));
            }
            m
        };
        let raw = v
            .get("coeffs")
            .and_then(|c| c.as_array())
            .ok_or_else(|| bad("missing coeffs"))?;
        if raw.len() != phi_degree(prime, m) {
            return Err(bad("coefficient count does not match the order"));
        }
        let mut coeffs = Vec::with_capacity(raw.len());
        for c in raw {
            let s = c.as_str().ok_or_else(|| bad("coefficient is not a string"))?;
            coeffs.push(crate::padic::rat_from_string(s)?);
        }
        Ok(Self::from_raw(prime, m, coeffs))
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    // good enough for reporting: go through string only if magnitudes blow up
    let n = r.numer();
    let d = r.denom();
    let nf = n.to_string().parse::<f64>().unwrap_or(f64::NAN);
    let df = d.to_string().parse::<f64>().unwrap_or(f64::NAN);
    nf / df
}

fn poly_degree(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Returns (g, s, t) with g = gcd(a, b) and s*a + t*b = g.
fn poly_ext_gcd(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>, Vec<BigRational>) {
    let zero = || vec![BigRational::zero()];
    let one = || vec![BigRational::one()];
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0 = one();
    let mut s1 = zero();
    let mut t0 = zero();
    let mut t1 = one();
    while poly_degree(&r1).is_some() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    (r0, s0, t0)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = poly_degree(b).expect("division by zero polynomial");
    let mut r: Vec<BigRational> = a.to_vec();
    let da = match poly_degree(&r) {
        Some(d) => d,
        None => return (vec![BigRational::zero()], r),
    };
    if da < db {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); da - db + 1];
    while let Some(dr) = poly_degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &b[db];
        q[dr - db] = c.clone();
        for i in 0..=db {
            let t = &c * &b[i];
            r[dr - db + i] -= t;
        }
    }
    (q, r)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

/// c * p^{re + i*im}, normalized so that Re(w) is in [0,1) (integer parts
/// are folded into the cyclotomic factor) and c = 0 forces w = 0.
///
/// Equality is componentwise; this is sound but conservative: a p-power with
/// fractional exponent is never identified with a cyclotomic value (for p=2
/// the sqrt(2) embedding is used only where constructions demand it, never
/// folded here, so all comparisons stay within one convention).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerScalar {
    prime: u32,
    c: CycloScalar,
    re: BigRational,
    im: BigRational,
}

impl PowerScalar {
    pub fn new(c: CycloScalar, re: BigRational, im: BigRational) -> Self {
        let prime = c.prime();
        if c.is_zero() {
            return Self {
                prime,
                c,
                re: BigRational::zero(),
                im: BigRational::zero(),
            };
        }
        let whole = re.floor();
        let frac = &re - &whole;
        let whole: i64 = whole
            .to_integer()
            .to_string()
            .parse()
            .expect("small exponent");
        let c = c.scale(&p_pow_rational(prime, whole));
        Self {
            prime,
            c,
            re: frac,
            im,
        }
    }

    pub fn from_cyclo(c: CycloScalar) -> Self {
        Self::new(c, BigRational::zero(), BigRational::zero())
    }

    pub fn one(prime: u32) -> Self {
        Self::from_cyclo(CycloScalar::one(prime))
    }

    pub fn zero(prime: u32) -> Self {
        Self::from_cyclo(CycloScalar::zero(prime))
    }

    /// p^{re + i im} with unit cyclotomic part.
    pub fn p_power(prime: u32, re: BigRational, im: BigRational) -> Self {
        Self::new(CycloScalar::one(prime), re, im)
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn cyclo_part(&self) -> &CycloScalar {
        &self.c
    }

    pub fn exponent(&self) -> (&BigRational, &BigRational) {
        (&self.re, &self.im)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.c.is_one() && self.re.is_zero() && self.im.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.prime, other.prime, "prime mismatch");
        Self::new(
            self.c.mul(&other.c),
            &self.re + &other.re,
            &self.im + &other.im,
        )
    }

    pub fn conj(&self) -> Self {
        Self::new(self.c.conj(), self.re.clone(), -self.im.clone())
    }

    pub fn inv(&self) -> Result<Self, QpwError> {
        Ok(Self::new(self.c.inv()?, -self.re.clone(), -self.im.clone()))
    }

    /// Collapses into a pure cyclotomic scalar when possible: the exponent
    /// must be real and either zero or (for p = 2) a half-integer.
    pub fn to_cyclo(&self) -> Option<CycloScalar> {
        if !self.im.is_zero() {
            return None;
        }
        if self.re.is_zero() {
            return Some(self.c.clone());
        }
        if self.prime == 2 && *self.re.denom() == BigInt::from(2) {
            // normalized: re = 1/2
            return Some(self.c.mul(&CycloScalar::sqrt2()));
        }
        None
    }

    pub fn to_complex_f64(&self) -> (f64, f64) {
        let (cre, cim) = self.c.to_complex_f64();
        let lnp = (self.prime as f64).ln();
        let mag = (rational_to_f64(&self.re) * lnp).exp();
        let ang = rational_to_f64(&self.im) * lnp;
        let (s, c) = ang.sin_cos();
        (mag * (cre * c - cim * s), mag * (cre * s + cim * c))
    }
}

impl fmt::Debug for PowerScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.re.is_zero() && self.im.is_zero() {
            write!(f, "{:?}", self.c)
        } else {
            write!(f, "({:?})*{}^({}+{}i)", self.c, self.prime, self.re, self.im)
        }
    }
}
