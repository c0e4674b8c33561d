//! Wavelet constructors: the refinable function phi, the basic 2-adic
//! wavelet psi0, the psi_s family parametrized by unimodular gamma vectors,
//! real one-parameter families, Kozyrev and generalized bases for any prime,
//! multidimensional tensor wavelets, and the shift/companion matrix
//! machinery that decides which coefficient vectors give orthonormal bases.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclo::{CycloScalar, PowerScalar};
use crate::error::QpwError;
use crate::mbf::Mbf;
use crate::padic::{enumerate_ip, Angle, Ball, PAdicPoint, PAdicVector};

/// The refinable function: indicator of the unit ball (one-dimensional).
pub fn phi(p: u32) -> Mbf {
    Mbf::indicator(Ball::unit(p, 1))
}

/// The basic 2-adic wavelet chi_2(x/2) * Omega(|x|_2).
pub fn psi0() -> Mbf {
    Mbf::modulated(
        CycloScalar::one(2),
        PAdicVector::scalar(PAdicPoint::new(2, 1, -1)),
        Ball::unit(2, 1),
    )
}

/// A wavelet body plus an exact power-of-p normalization factor.  For p = 2
/// every factor 2^{j/2} is cyclotomic (sqrt 2 lives in Q(zeta_8)) and gets
/// folded into the coefficients, leaving scale = 1; for odd p with odd j the
/// irrational p^{-j/2} stays in the PowerScalar.
#[derive(Clone, PartialEq, Debug)]
pub struct ScaledMbf {
    scale: PowerScalar,
    body: Mbf,
}

impl ScaledMbf {
    pub fn new(scale: PowerScalar, body: Mbf) -> Self {
        match scale.to_cyclo() {
            Some(c) => ScaledMbf {
                scale: PowerScalar::one(body.prime()),
                body: body.scale(&c),
            },
            None => ScaledMbf { scale, body },
        }
    }

    pub fn from_mbf(body: Mbf) -> Self {
        Self::new(PowerScalar::one(body.prime()), body)
    }

    pub fn scale(&self) -> &PowerScalar {
        &self.scale
    }

    pub fn body(&self) -> &Mbf {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.scale.is_zero() || self.body.is_zero()
    }

    /// The plain MBF when the normalization is cyclotomic (always for p=2).
    pub fn to_mbf(&self) -> Option<Mbf> {
        self.scale.to_cyclo().map(|c| self.body.scale(&c))
    }

    pub fn evaluate(&self, x: &PAdicVector) -> PowerScalar {
        self.scale
            .mul(&PowerScalar::from_cyclo(self.body.evaluate(x)))
    }

    pub fn integral(&self) -> PowerScalar {
        self.scale
            .mul(&PowerScalar::from_cyclo(self.body.integral()))
    }

    /// `<f, g>` carried exactly: the irrational scales multiply into a
    /// single PowerScalar, the cyclotomic pairing of the bodies is exact.
    pub fn inner_product(&self, other: &Self) -> PowerScalar {
        self.scale
            .mul(&other.scale.conj())
            .mul(&PowerScalar::from_cyclo(self.body.inner_product(&other.body)))
    }

    pub fn norm_squared(&self) -> PowerScalar {
        self.inner_product(self)
    }
}

/// Kozyrev wavelet theta_{k;j,a}(x) = p^{-j/2} chi_p(p^{-1}k(p^j x - a))
/// Omega(|p^j x - a|_p), for 1 <= k <= p-1.
pub fn kozyrev(p: u32, k: u32, j: i64, a: &PAdicPoint) -> Result<ScaledMbf, QpwError> {
    if k == 0 || k >= p {
        return Err(QpwError::KozyrevIndexOutOfRange { p, k });
    }
    let body = Mbf::modulated(
        CycloScalar::one(p),
        PAdicVector::scalar(PAdicPoint::new(p, k as i64, -1)),
        Ball::unit(p, 1),
    )
    .scale_shift(j, &PAdicVector::scalar(a.clone()));
    Ok(normalized(p, j, body))
}

/// Generalized Kozyrev wavelet with frequency s = p^{-m}(s_0 + s_1 p + ... +
/// s_{m-1} p^{m-1}), s_0 != 0: p^{-j/2} chi_p(s(p^j x - a)) Omega(|p^j x - a|_p).
pub fn generalized_kozyrev(
    p: u32,
    m: u32,
    s_digits: &[u32],
    j: i64,
    a: &PAdicPoint,
) -> Result<ScaledMbf, QpwError> {
    if m == 0 || s_digits.len() != m as usize || s_digits.iter().any(|&d| d >= p) {
        return Err(QpwError::BadWaveletIndex(format!(
            "need exactly m={m} digits below {p}"
        )));
    }
    if s_digits[0] == 0 {
        return Err(QpwError::ZeroLeadingDigit);
    }
    let mut num = BigInt::zero();
    for &d in s_digits.iter().rev() {
        num = num * p + d;
    }
    let s = PAdicPoint::new(p, num, -(m as i64));
    let body = Mbf::modulated(CycloScalar::one(p), PAdicVector::scalar(s), Ball::unit(p, 1))
        .scale_shift(j, &PAdicVector::scalar(a.clone()));
    Ok(normalized(p, j, body))
}

fn normalized(p: u32, j: i64, body: Mbf) -> ScaledMbf {
    let half = BigRational::new(BigInt::from(-j), BigInt::from(2));
    ScaledMbf::new(PowerScalar::p_power(p, half, BigRational::zero()), body)
}

/// Both sides of the refinable relation for the unnormalized Kozyrev
/// wavelet: theta_k(x) = chi_p(kx/p) Omega(|x|_p) versus
/// sum_r e^{2 pi i {kr/p}} phi(x/p - r/p).  Canonical equality of the pair
/// is the identity; the p^{-1/2} h_r factors cancel, so both sides are
/// plain cyclotomic MBFs.
pub fn kozyrev_refinable_relation(p: u32, k: u32) -> Result<(Mbf, Mbf), QpwError> {
    if k == 0 || k >= p {
        return Err(QpwError::KozyrevIndexOutOfRange { p, k });
    }
    let lhs = kozyrev(p, k, 0, &PAdicPoint::zero(p))?
        .to_mbf()
        .expect("j = 0 carries no normalization");
    let base = phi(p);
    let mut rhs = Mbf::zero(p, 1);
    for r in 0..p {
        let angle = Angle::new(
            p,
            BigRational::new(BigInt::from(k as i64 * r as i64), BigInt::from(p)),
        )?;
        let shift = PAdicVector::scalar(PAdicPoint::new(p, r as i64, -1));
        rhs = rhs.add(
            &base
                .scale_shift(-1, &shift)
                .scale(&CycloScalar::root_of_unity(&angle)),
        );
    }
    Ok((lhs, rhs))
}

/// The parameter vector (gamma_0, ..., gamma_{2^s - 1}) of exactly
/// unimodular cyclotomic scalars that indexes the psi_s wavelet family.
#[derive(Clone, PartialEq, Debug)]
pub struct GammaVector {
    s: u32,
    gammas: Vec<CycloScalar>,
}

impl GammaVector {
    pub fn new(s: u32, gammas: Vec<CycloScalar>) -> Result<Self, QpwError> {
        if s == 0 || gammas.len() != 1usize << s {
            return Err(QpwError::BadWaveletIndex(format!(
                "gamma vector needs 2^{s} entries"
            )));
        }
        if gammas.iter().any(|g| !g.mul(&g.conj()).is_one()) {
            return Err(QpwError::NonUnitGamma);
        }
        Ok(Self { s, gammas })
    }

    /// Skips the unimodularity check — for negative tests of the unitarity
    /// criterion.
    pub fn new_unchecked(s: u32, gammas: Vec<CycloScalar>) -> Self {
        Self { s, gammas }
    }

    /// gamma_r = e^{2 pi i t_r} from angles with 2-power denominators.
    pub fn from_angles(s: u32, angles: &[Angle]) -> Result<Self, QpwError> {
        Self::new(s, angles.iter().map(CycloScalar::root_of_unity).collect())
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn gammas(&self) -> &[CycloScalar] {
        &self.gammas
    }
}

fn half_turn_angle(num: i64, denom_log2: u32) -> Angle {
    // e^{-i pi q} = e^{2 pi i (-q/2)}
    Angle::new(
        2,
        BigRational::new(BigInt::from(num), BigInt::from(1i64 << (denom_log2 + 1))),
    )
    .expect("2-power denominator")
}

/// The coefficients alpha_k = 2^{-s} (-1)^k sum_r gamma_r e^{-i pi (2r+1)k / 2^s}.
pub fn alpha_coeffs(g: &GammaVector) -> Vec<CycloScalar> {
    let s = g.s;
    let n = 1usize << s;
    let scale = BigRational::new(BigInt::one(), BigInt::from(n as i64));
    (0..n)
        .map(|k| {
            let mut sum = CycloScalar::zero(2);
            for (r, gamma) in g.gammas.iter().enumerate() {
                let angle = half_turn_angle(-((2 * r as i64 + 1) * k as i64), s);
                sum = sum.add(&gamma.mul(&CycloScalar::root_of_unity(&angle)));
            }
            let signed = if k % 2 == 0 { sum } else { sum.neg() };
            signed.scale(&scale)
        })
        .collect()
}

/// psi_s(x) = sum_k alpha_k psi0(x - k/2^s).
pub fn psi_s(g: &GammaVector) -> Mbf {
    let base = psi0();
    let n = 1i64 << g.s;
    let mut out = Mbf::zero(2, 1);
    for (k, alpha) in alpha_coeffs(g).iter().enumerate() {
        let shift = PAdicVector::scalar(PAdicPoint::new(2, k as i64, -(g.s as i64)));
        out = out.add(&base.translate(&shift).scale(alpha));
    }
    debug_assert_eq!(alpha_coeffs(g).len() as i64, n);
    out
}

/// The skew-circulant shift matrix relating the psi_s translates to the
/// psi0 translates: row r is (-a_{2^s-r}, ..., -a_{2^s-1}, a_0, ..., a_{2^s-r-1}).
pub fn shift_matrix_d(alpha: &[CycloScalar]) -> Vec<Vec<CycloScalar>> {
    let n = alpha.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|l| {
                    if l < r {
                        alpha[n - r + l].neg()
                    } else {
                        alpha[l - r].clone()
                    }
                })
                .collect()
        })
        .collect()
}

/// Exact unitarity: M * conj(M)^T = Id.
pub fn is_unitary(m: &[Vec<CycloScalar>]) -> bool {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return false;
        }
    }
    for i in 0..n {
        for j in i..n {
            let mut dot = CycloScalar::zero(2);
            for l in 0..n {
                dot = dot.add(&m[i][l].mul(&m[j][l].conj()));
            }
            let ok = if i == j { dot.is_one() } else { dot.is_zero() };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// The 2^s x 2^s companion matrix A (sub-diagonal of ones, top-right -1)
/// whose commutant parametrizes the unitary shift matrices.
pub fn matrix_a(s: u32) -> Vec<Vec<CycloScalar>> {
    let n = 1usize << s;
    let mut m = vec![vec![CycloScalar::zero(2); n]; n];
    m[0][n - 1] = CycloScalar::from_integer(2, -1);
    for i in 1..n {
        m[i][i - 1] = CycloScalar::one(2);
    }
    m
}

/// Exact eigensystem of `matrix_a(s)`: lambda_r = -e^{i pi (2r+1)/2^s} and
/// (v_r)_l = 2^{-s/2} (-1)^l e^{-i pi (2r+1) l / 2^s}.
pub fn matrix_a_eigensystem(s: u32) -> (Vec<CycloScalar>, Vec<Vec<CycloScalar>>) {
    let n = 1usize << s;
    let norm = CycloScalar::two_pow_half(-(s as i64));
    let mut values = Vec::with_capacity(n);
    let mut vectors = Vec::with_capacity(n);
    for r in 0..n as i64 {
        values.push(
            CycloScalar::root_of_unity(&half_turn_angle(2 * r + 1, s)).neg(),
        );
        let v: Vec<CycloScalar> = (0..n as i64)
            .map(|l| {
                let w = CycloScalar::root_of_unity(&half_turn_angle(-(2 * r + 1) * l, s));
                let signed = if l % 2 == 0 { w } else { w.neg() };
                signed.mul(&norm)
            })
            .collect();
        vectors.push(v);
    }
    (values, vectors)
}

/// Matrix-vector product over cyclotomic scalars.
pub fn mat_vec(m: &[Vec<CycloScalar>], v: &[CycloScalar]) -> Vec<CycloScalar> {
    m.iter()
        .map(|row| {
            let mut acc = CycloScalar::zero(2);
            for (a, b) in row.iter().zip(v) {
                acc = acc.add(&a.mul(b));
            }
            acc
        })
        .collect()
}

/// The three one-parameter families of real wavelet functions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RealFamily {
    /// s=1: cos(t) psi0(x) + sin(t) psi0(x - 1/2).
    HalfShift,
    /// s=2 with equal angles: peaks at shifts 1/4 and 3/4.
    QuarterShift,
    /// s=2 with angles offset by a quarter turn.
    QuarterOffset,
}

/// A real wavelet function from angle parameters (fractions of a full
/// turn, 2-power denominators).  s=1 takes one angle, s=2 takes two; the
/// gamma vector is the conjugate-palindromic pattern that forces all
/// alpha_k real.
pub fn real_wavelet(s: u32, thetas: &[Angle]) -> Result<Mbf, QpwError> {
    let g = real_gamma(s, thetas)?;
    let f = psi_s(&g);
    debug_assert_eq!(f.conjugate(), f);
    Ok(f)
}

fn real_gamma(s: u32, thetas: &[Angle]) -> Result<GammaVector, QpwError> {
    match (s, thetas) {
        (1, [t]) => GammaVector::from_angles(1, &[t.neg(), t.clone()]),
        (2, [t1, t2]) => GammaVector::from_angles(2, &[t1.neg(), t2.neg(), t2.clone(), t1.clone()]),
        _ => Err(QpwError::BadWaveletIndex(
            "real wavelets take s=1 with one angle or s=2 with two".into(),
        )),
    }
}

/// The named one-parameter family at parameter theta.
pub fn real_family(family: RealFamily, theta: &Angle) -> Result<Mbf, QpwError> {
    match family {
        RealFamily::HalfShift => real_wavelet(1, &[theta.clone()]),
        RealFamily::QuarterShift => real_wavelet(2, &[theta.clone(), theta.clone()]),
        RealFamily::QuarterOffset => {
            let quarter = Angle::new(2, BigRational::new(BigInt::one(), BigInt::from(4)))
                .expect("2-power denominator");
            real_wavelet(2, &[theta.add(&quarter), theta.clone()])
        }
    }
}

/// Index of one member of the multidimensional tensor wavelet basis
/// 2^{-nj/2} Psi_e^{(s)}(2^j x - a).
#[derive(Clone, PartialEq, Debug)]
pub struct WaveletIndex {
    /// coordinates carrying a wavelet factor (1-based, nonempty, sorted)
    pub e: Vec<usize>,
    /// per-coordinate family parameter; 0 means the basic psi0 factor
    pub s: Vec<u32>,
    /// gamma vector per coordinate with s >= 1
    pub gamma: Vec<Option<GammaVector>>,
    pub j: i64,
    pub a: PAdicVector,
}

impl WaveletIndex {
    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    fn validate(&self) -> Result<(), QpwError> {
        let n = self.dim();
        if self.e.is_empty()
            || self.e.iter().any(|&v| v == 0 || v > n)
            || self.e.windows(2).any(|w| w[0] >= w[1])
            || self.s.len() != n
            || self.gamma.len() != n
        {
            return Err(QpwError::BadWaveletIndex(
                "e must be a nonempty sorted subset of 1..=n with per-coordinate s/gamma".into(),
            ));
        }
        for nu in 0..n {
            if self.e.contains(&(nu + 1)) && self.s[nu] >= 1 {
                match &self.gamma[nu] {
                    Some(g) if g.s() == self.s[nu] => {}
                    _ => {
                        return Err(QpwError::BadWaveletIndex(format!(
                            "coordinate {} needs a gamma vector of matching s",
                            nu + 1
                        )))
                    }
                }
            }
        }
        Ok(())
    }

    /// The 0/1 indicator vector of e.
    pub fn k_e(&self) -> PAdicVector {
        let n = self.dim();
        PAdicVector::new(
            (1..=n)
                .map(|nu| {
                    if self.e.contains(&nu) {
                        PAdicPoint::one(2)
                    } else {
                        PAdicPoint::zero(2)
                    }
                })
                .collect(),
        )
    }
}

/// Builds the basis member 2^{-nj/2} Psi_e^{(s)}(2^j x - a): per
/// coordinate, phi outside e, psi0 for s=0, psi_s otherwise, tensored and
/// then rescaled/shifted.
pub fn tensor_wavelet(idx: &WaveletIndex) -> Result<Mbf, QpwError> {
    idx.validate()?;
    let n = idx.dim();
    let mut product: Option<Mbf> = None;
    for nu in 0..n {
        let factor = if !idx.e.contains(&(nu + 1)) {
            phi(2)
        } else if idx.s[nu] == 0 {
            psi0()
        } else {
            psi_s(idx.gamma[nu].as_ref().expect("validated"))
        };
        product = Some(match product {
            None => factor,
            Some(acc) => acc.tensor(&factor),
        });
    }
    let body = product.expect("n >= 1").scale_shift(idx.j, &idx.a);
    Ok(body.scale(&CycloScalar::two_pow_half(-(n as i64) * idx.j)))
}

/// All indices with e over nonempty subsets of {1..n}, j in j_range, and
/// a in I_2^n truncated at gamma_max, in a deterministic order (subset
/// bitmask, then j, then the a-enumeration order).  s_config supplies the
/// per-coordinate (s, gamma) data used for every index.
pub fn enumerate_basis(
    n: usize,
    j_range: &[i64],
    gamma_max: i64,
    s_config: &[(u32, Option<GammaVector>)],
) -> Result<Vec<WaveletIndex>, QpwError> {
    if s_config.len() != n || n == 0 || n > 32 {
        return Err(QpwError::BadWaveletIndex(
            "s_config must cover each of the n coordinates".into(),
        ));
    }
    let shifts = enumerate_ip(2, gamma_max, n);
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let e: Vec<usize> = (1..=n).filter(|nu| mask & (1 << (nu - 1)) != 0).collect();
        for &j in j_range {
            for a in &shifts {
                let idx = WaveletIndex {
                    e: e.clone(),
                    s: s_config.iter().map(|(s, _)| *s).collect(),
                    gamma: s_config.iter().map(|(_, g)| g.clone()).collect(),
                    j,
                    a: a.clone(),
                };
                idx.validate()?;
                out.push(idx);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn angle(num: i64, den: i64) -> Angle {
        Angle::new(2, BigRational::new(BigInt::from(num), BigInt::from(den))).unwrap()
    }

    #[test]
    fn phi_and_psi0_basics() {
        for p in [2u32, 3, 5] {
            assert!(phi(p).integral().is_one());
        }
        let w = psi0();
        assert!(w.evaluate(&PAdicVector::zero(2, 1)).is_one());
        assert_eq!(
            w.evaluate(&PAdicVector::scalar(PAdicPoint::one(2))),
            CycloScalar::from_integer(2, -1)
        );
        assert!(w.integral().is_zero());
        assert!(w.is_lizorkin());
        // phi(x/2) - phi(x/2 - 1/2) is the same function
        let alt = phi(2)
            .scale_shift(-1, &PAdicVector::zero(2, 1))
            .sub(&phi(2).scale_shift(-1, &PAdicVector::scalar(PAdicPoint::new(2, 1, -1))));
        assert_eq!(alt, w);
    }

    #[test]
    fn periodicity_and_antiperiodicity() {
        let one = PAdicVector::scalar(PAdicPoint::one(2));
        assert_eq!(phi(2).translate(&one), phi(2));
        assert_eq!(phi(2).translate(&one.neg()), phi(2));
        assert_eq!(psi0().translate(&one), psi0().neg());
        assert_eq!(psi0().translate(&one.neg()), psi0().neg());
    }

    #[test]
    fn kozyrev_reduces_to_psi0() {
        let th = kozyrev(2, 1, 0, &PAdicPoint::zero(2)).unwrap();
        assert_eq!(th.to_mbf().unwrap(), psi0());
        assert!(kozyrev(3, 3, 0, &PAdicPoint::zero(3)).is_err());
    }

    #[test]
    fn kozyrev_orthonormal_and_mean_zero() {
        let a0 = PAdicPoint::zero(3);
        let t1 = kozyrev(3, 1, 0, &a0).unwrap();
        let t2 = kozyrev(3, 2, 0, &a0).unwrap();
        assert!(t1.inner_product(&t2).is_zero());
        assert!(t1.norm_squared().is_one());
        let tj = kozyrev(3, 2, 1, &PAdicPoint::new(3, 2, -1)).unwrap();
        assert!(tj.norm_squared().is_one());
        assert!(tj.integral().is_zero());
        // the scale really is irrational for odd j at p=3
        assert!(tj.to_mbf().is_none());
    }

    #[test]
    fn generalized_kozyrev_examples() {
        let a0 = PAdicPoint::zero(2);
        assert_eq!(
            generalized_kozyrev(2, 1, &[1], 0, &a0).unwrap().to_mbf().unwrap(),
            psi0()
        );
        let w = generalized_kozyrev(2, 2, &[1, 1], 0, &a0).unwrap().to_mbf().unwrap();
        assert_eq!(w.terms().len(), 1);
        assert_eq!(
            w.terms()[0].freq,
            PAdicVector::scalar(PAdicPoint::new(2, 3, -2))
        );
        assert!(generalized_kozyrev(2, 2, &[0, 1], 0, &a0).is_err());
        assert!(generalized_kozyrev(3, 1, &[2], 3, &PAdicPoint::zero(3))
            .unwrap()
            .norm_squared()
            .is_one());
    }

    #[test]
    fn refinable_relation_holds() {
        for p in [2u32, 3, 5] {
            for k in 1..p {
                let (lhs, rhs) = kozyrev_refinable_relation(p, k).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn alpha_coeffs_examples() {
        // gamma = (1, 1) collapses to psi0
        let g = GammaVector::new(1, vec![CycloScalar::one(2), CycloScalar::one(2)]).unwrap();
        let alpha = alpha_coeffs(&g);
        assert!(alpha[0].is_one());
        assert!(alpha[1].is_zero());
        assert_eq!(psi_s(&g), psi0());

        // gamma = (zeta_8^{-1}, zeta_8) gives alpha = (1/sqrt2, 1/sqrt2)
        let g2 = GammaVector::from_angles(1, &[angle(-1, 8), angle(1, 8)]).unwrap();
        let alpha2 = alpha_coeffs(&g2);
        let inv_sqrt2 = CycloScalar::two_pow_half(-1);
        assert_eq!(alpha2, vec![inv_sqrt2.clone(), inv_sqrt2]);
        // and the resulting psi is (psi0(x) + psi0(x - 1/2)) / sqrt2
        let half = PAdicVector::scalar(PAdicPoint::new(2, 1, -1));
        let expected = psi0()
            .add(&psi0().translate(&half))
            .scale(&CycloScalar::two_pow_half(-1));
        assert_eq!(psi_s(&g2), expected);
    }

    #[test]
    fn alpha_norm_is_one() {
        let g = GammaVector::from_angles(2, &[angle(1, 4), angle(3, 8), angle(0, 1), angle(7, 8)])
            .unwrap();
        let mut total = CycloScalar::zero(2);
        for a in alpha_coeffs(&g) {
            total = total.add(&a.norm_squared());
        }
        assert!(total.is_one());
        assert!(psi_s(&g).norm_squared().is_one());
    }

    #[test]
    fn shift_matrix_unitarity() {
        let mut alpha = vec![CycloScalar::zero(2); 4];
        alpha[0] = CycloScalar::one(2);
        assert!(is_unitary(&shift_matrix_d(&alpha)));

        let g = GammaVector::from_angles(1, &[angle(-1, 8), angle(1, 8)]).unwrap();
        assert!(is_unitary(&shift_matrix_d(&alpha_coeffs(&g))));

        let unnormalized = vec![CycloScalar::one(2), CycloScalar::one(2)];
        assert!(!is_unitary(&shift_matrix_d(&unnormalized)));
    }

    #[test]
    fn eigensystem_is_exact() {
        for s in 1..=3u32 {
            let a = matrix_a(s);
            let (values, vectors) = matrix_a_eigensystem(s);
            for (lambda, v) in values.iter().zip(&vectors) {
                let av = mat_vec(&a, v);
                let lv: Vec<CycloScalar> = v.iter().map(|c| c.mul(lambda)).collect();
                assert_eq!(av, lv);
            }
            for i in 0..values.len() {
                for j in 0..i {
                    assert_ne!(values[i], values[j]);
                }
            }
        }
        // s=1 concretely: lambda = {-i, i}
        let (values, _) = matrix_a_eigensystem(1);
        let i_unit = CycloScalar::root_of_unity(&angle(1, 4));
        assert_eq!(values[0], i_unit.neg());
        assert_eq!(values[1], i_unit);
    }

    #[test]
    fn real_wavelets_are_real() {
        // theta = 0 gives psi0 back
        assert_eq!(real_wavelet(1, &[angle(0, 1)]).unwrap(), psi0());
        for (num, den) in [(1i64, 8i64), (3, 16), (1, 4)] {
            let t = angle(num, den);
            for f in [
                real_wavelet(1, &[t.clone()]).unwrap(),
                real_wavelet(2, &[t.clone(), angle(1, 16)]).unwrap(),
                real_family(RealFamily::HalfShift, &t).unwrap(),
                real_family(RealFamily::QuarterShift, &t).unwrap(),
                real_family(RealFamily::QuarterOffset, &t).unwrap(),
            ] {
                assert_eq!(f.conjugate(), f, "coefficients must be real");
                assert!(f.norm_squared().is_one());
            }
        }
        // the s=1 family matches cos/sin coefficients explicitly
        let t = angle(1, 8);
        let cos = CycloScalar::root_of_unity(&t)
            .add(&CycloScalar::root_of_unity(&t.neg()))
            .scale(&BigRational::new(BigInt::one(), BigInt::from(2)));
        let sin = CycloScalar::root_of_unity(&t)
            .sub(&CycloScalar::root_of_unity(&t.neg()))
            .mul(&CycloScalar::root_of_unity(&angle(3, 4)))
            .scale(&BigRational::new(BigInt::one(), BigInt::from(2)));
        let half = PAdicVector::scalar(PAdicPoint::new(2, 1, -1));
        let expected = psi0().scale(&cos).add(&psi0().translate(&half).scale(&sin));
        assert_eq!(real_wavelet(1, &[t]).unwrap(), expected);
    }

    #[test]
    fn tensor_wavelet_examples() {
        // n=1 degenerate case
        let idx = WaveletIndex {
            e: vec![1],
            s: vec![0],
            gamma: vec![None],
            j: 0,
            a: PAdicVector::zero(2, 1),
        };
        assert_eq!(tensor_wavelet(&idx).unwrap(), psi0());

        // n=2, e={1,2}: chi_2((x1+x2)/2) on the unit ball
        let idx2 = WaveletIndex {
            e: vec![1, 2],
            s: vec![0, 0],
            gamma: vec![None, None],
            j: 0,
            a: PAdicVector::zero(2, 2),
        };
        let w = tensor_wavelet(&idx2).unwrap();
        let expected = Mbf::modulated(
            CycloScalar::one(2),
            idx2.k_e().mul_p_pow(-1),
            Ball::unit(2, 2),
        );
        assert_eq!(w, expected);

        // Fourier image: a single term supported on B_{-j}(-2^{j-1} k_e)
        let ft = w.fourier();
        assert_eq!(ft.terms().len(), 1);
        let c = idx2.k_e().mul_p_pow(-1).neg();
        assert_eq!(ft.terms()[0].ball, Ball::new(c, 0));
        assert!(w.is_lizorkin());
    }

    #[test]
    fn enumerate_basis_counts() {
        let cfg1 = [(0u32, None)];
        assert_eq!(enumerate_basis(1, &[0], 1, &cfg1).unwrap().len(), 2);
        let cfg2 = [(0u32, None), (0u32, None)];
        assert_eq!(enumerate_basis(2, &[0], 0, &cfg2).unwrap().len(), 3);
        assert!(enumerate_basis(1, &[], 2, &cfg1).unwrap().is_empty());
    }

    #[test]
    fn basis_change_matrix_is_d_star() {
        // psi0(x - r/2^s) expands in the psi_s translates with coefficients
        // conj(D)^T rows.
        let g = GammaVector::from_angles(1, &[angle(-1, 8), angle(1, 8)]).unwrap();
        let d = shift_matrix_d(&alpha_coeffs(&g));
        let w = psi_s(&g);
        let s = 1u32;
        let n = 1usize << s;
        for r in 0..n {
            let shift_r =
                PAdicVector::scalar(PAdicPoint::new(2, r as i64, -(s as i64)));
            let lhs = psi0().translate(&shift_r);
            let mut rhs = Mbf::zero(2, 1);
            for k in 0..n {
                let shift_k =
                    PAdicVector::scalar(PAdicPoint::new(2, k as i64, -(s as i64)));
                rhs = rhs.add(&w.translate(&shift_k).scale(&d[k][r].conj()));
            }
            assert_eq!(lhs, rhs);
        }
    }
}
