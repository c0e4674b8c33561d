//! The 2-adic Haar multiresolution analysis: refinement checks, membership
//! and expansion in the scaling spaces V_j, projection onto the wavelet
//! spaces W_j, exact decomposition/reconstruction of test functions, and
//! Gram-matrix utilities.  V_j = span{phi(2^{-j}x - a), a in I_2}; all
//! coefficients are taken against the L^2-normalized elements
//! 2^{j/2} phi(2^{-j}x - a) and 2^{j/2} psi(2^{-j}x - a), so Parseval holds
//! coefficient-for-coefficient.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::cyclo::{CycloScalar, PowerScalar};
use crate::error::QpwError;
use crate::mbf::Mbf;
use crate::padic::{enumerate_ip, PAdicPoint, PAdicVector};
use crate::wavelets::{phi, ScaledMbf};

/// Checks the refinement identity phi(x) = sum_{r<p} phi(x/p - r/p) as
/// canonical MBF equality.
pub fn check_refinement(p: u32) -> bool {
    let base = phi(p);
    let mut rhs = Mbf::zero(p, 1);
    for r in 0..p {
        let shift = PAdicVector::scalar(PAdicPoint::new(p, r as i64, -1));
        rhs = rhs.add(&base.scale_shift(-1, &shift));
    }
    rhs == base
}

/// The normalized V_j basis element 2^{j/2} phi(2^{-j}x - a).
pub fn basis_v(j: i64, a: &PAdicPoint) -> Mbf {
    phi(2)
        .scale_shift(-j, &PAdicVector::scalar(a.clone()))
        .scale(&CycloScalar::two_pow_half(j))
}

/// The normalized W_j element 2^{j/2} psi(2^{-j}x - a) for a wavelet psi.
pub fn basis_w(j: i64, a: &PAdicPoint, psi: &Mbf) -> Mbf {
    psi.scale_shift(-j, &PAdicVector::scalar(a.clone()))
        .scale(&CycloScalar::two_pow_half(j))
}

/// Result of attempting to expand f in the V_j basis.
#[derive(Clone, PartialEq, Debug)]
pub enum Expansion {
    /// f = sum c_a 2^{j/2} phi(2^{-j}x - a), verified by reconstruction.
    InSpace(BTreeMap<PAdicPoint, CycloScalar>),
    /// The residual is nonzero inside the probed region: f is not in V_j.
    NotInSpace,
    /// The support of f reaches beyond the translates enumerable at
    /// gamma_max, so membership cannot be decided at this truncation.
    TruncationTooSmall,
}

/// Shift exponent needed so translates at level j cover the ball B_N:
/// nonzero a in I_2 touch B_N iff |a| <= 2^{N+j}.
fn required_gamma(n_support: i64, j: i64) -> i64 {
    (n_support + j).max(0)
}

/// Expands f over {2^{j/2} phi(2^{-j}x - a), |a| <= 2^gamma_max}, verifying
/// the expansion exactly.
pub fn expand_in_vj(f: &Mbf, j: i64, gamma_max: i64) -> Expansion {
    assert_eq!((f.prime(), f.dim()), (2, 1), "Haar MRA scope is p=2, n=1");
    if f.is_zero() {
        return Expansion::InSpace(BTreeMap::new());
    }
    let (_, n_support) = f.local_constancy_params().expect("nonzero");
    if required_gamma(n_support, j) > gamma_max {
        return Expansion::TruncationTooSmall;
    }
    let mut coeffs = BTreeMap::new();
    let mut residual = f.clone();
    for a in enumerate_ip(2, gamma_max, 1) {
        let b = basis_v(j, &a.coords()[0]);
        let c = f.inner_product(&b);
        if !c.is_zero() {
            residual = residual.sub(&b.scale(&c));
            coeffs.insert(a.coords()[0].clone(), c);
        }
    }
    if residual.is_zero() {
        Expansion::InSpace(coeffs)
    } else {
        Expansion::NotInSpace
    }
}

/// Coefficients of f against the normalized W_j elements over the
/// truncated shift set.
pub fn project_w(
    f: &Mbf,
    j: i64,
    psi: &Mbf,
    gamma_max: i64,
) -> BTreeMap<PAdicPoint, CycloScalar> {
    let mut out = BTreeMap::new();
    for a in enumerate_ip(2, gamma_max, 1) {
        let c = f.inner_product(&basis_w(j, &a.coords()[0], psi));
        if !c.is_zero() {
            out.insert(a.coords()[0].clone(), c);
        }
    }
    out
}

/// An exact multiscale decomposition f = sum_a v_a 2^{j0/2} phi(2^{-j0}x-a)
/// + sum_{j0 <= j < J} sum_a w_{j,a} 2^{j/2} psi(2^{-j}x-a).
#[derive(Clone, PartialEq, Debug)]
pub struct Decomposition {
    pub j0: i64,
    pub top: i64,
    pub v: BTreeMap<PAdicPoint, CycloScalar>,
    pub w: BTreeMap<(i64, PAdicPoint), CycloScalar>,
}

impl Decomposition {
    /// Sum of |c|^2 over every coefficient; equals <f, f> by Parseval.
    pub fn coefficient_energy(&self) -> CycloScalar {
        let mut acc = CycloScalar::zero(2);
        for c in self.v.values().chain(self.w.values()) {
            acc = acc.add(&c.norm_squared());
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rat = |x: &PAdicPoint| crate::padic::rat_to_string(&x.to_rational());
        serde_json::json!({
            "j0": self.j0,
            "J": self.top,
            "v": self
                .v
                .iter()
                .map(|(a, c)| serde_json::json!({"a": rat(a), "coef": c.to_json()}))
                .collect::<Vec<_>>(),
            "w": self
                .w
                .iter()
                .map(|((j, a), c)| serde_json::json!({"j": j, "a": rat(a), "coef": c.to_json()}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, QpwError> {
        let bad = |m: &str| QpwError::Parse(format!("decomposition: {m}"));
        let j0 = v.get("j0").and_then(|x| x.as_i64()).ok_or_else(|| bad("missing j0"))?;
        let top = v.get("J").and_then(|x| x.as_i64()).ok_or_else(|| bad("missing J"))?;
        let point = |s: &str| -> Result<PAdicPoint, QpwError> {
            PAdicPoint::from_rational(2, &crate::padic::rat_from_string(s)?)
        };
        let mut out = Decomposition { j0, top, v: BTreeMap::new(), w: BTreeMap::new() };
        for entry in v.get("v").and_then(|x| x.as_array()).ok_or_else(|| bad("missing v"))? {
            let a = point(entry.get("a").and_then(|x| x.as_str()).ok_or_else(|| bad("bad a"))?)?;
            let c = CycloScalar::from_json(2, entry.get("coef").ok_or_else(|| bad("bad coef"))?)?;
            out.v.insert(a, c);
        }
        for entry in v.get("w").and_then(|x| x.as_array()).ok_or_else(|| bad("missing w"))? {
            let j = entry.get("j").and_then(|x| x.as_i64()).ok_or_else(|| bad("bad j"))?;
            let a = point(entry.get("a").and_then(|x| x.as_str()).ok_or_else(|| bad("bad a"))?)?;
            let c = CycloScalar::from_json(2, entry.get("coef").ok_or_else(|| bad("bad coef"))?)?;
            out.w.insert((j, a), c);
        }
        Ok(out)
    }
}

/// Exact decomposition: the top level J = max(-l, j0) comes from the local
/// constancy exponent l of f (f is constant at scale 2^l, hence lies in
/// V_{-l}); wavelet layers are peeled from J-1 down to j0 and the remainder
/// is expanded in V_{j0}.  Fails only if psi does not generate the
/// complement spaces.
pub fn decompose(f: &Mbf, j0: i64, psi: &Mbf) -> Result<Decomposition, QpwError> {
    assert_eq!((f.prime(), f.dim()), (2, 1), "Haar MRA scope is p=2, n=1");
    if f.is_zero() {
        return Ok(Decomposition { j0, top: j0, v: BTreeMap::new(), w: BTreeMap::new() });
    }
    let (l, n) = f.local_constancy_params().expect("nonzero");
    let top = (-l).max(j0);
    // psi itself may be supported beyond the unit ball; its translates at
    // level j then reach out to radius 2^{n_psi - j}
    let n_psi = psi.local_constancy_params().map(|(_, n)| n).unwrap_or(0);
    // supports of all basis elements involved stay inside this ball
    let reach = n.max(-j0).max(n_psi - j0);
    let mut out = Decomposition { j0, top, v: BTreeMap::new(), w: BTreeMap::new() };
    let mut g = f.clone();
    for j in (j0..top).rev() {
        for a in enumerate_ip(2, required_gamma(reach, j).max(n_psi), 1) {
            let b = basis_w(j, &a.coords()[0], psi);
            let c = g.inner_product(&b);
            if !c.is_zero() {
                g = g.sub(&b.scale(&c));
                out.w.insert((j, a.coords()[0].clone()), c);
            }
        }
    }
    match expand_in_vj(&g, j0, required_gamma(reach, j0)) {
        Expansion::InSpace(v) => {
            out.v = v;
            Ok(out)
        }
        _ => Err(QpwError::Mismatch),
    }
}

/// Rebuilds the MBF from its coefficients.
pub fn reconstruct(d: &Decomposition, psi: &Mbf) -> Mbf {
    let mut out = Mbf::zero(2, 1);
    for (a, c) in &d.v {
        out = out.add(&basis_v(d.j0, a).scale(c));
    }
    for ((j, a), c) in &d.w {
        out = out.add(&basis_w(*j, a, psi).scale(c));
    }
    out
}

/// Exact Gram matrix G_{ik} = <f_i, f_k>; Hermitian, so only the upper
/// triangle is computed (rows in parallel).
pub fn gram_matrix(fs: &[Mbf]) -> Vec<Vec<CycloScalar>> {
    let n = fs.len();
    let upper: Vec<Vec<CycloScalar>> = fs
        .par_iter()
        .enumerate()
        .map(|(i, fi)| (i..n).map(|k| fi.inner_product(&fs[k])).collect())
        .collect();
    assemble_hermitian(n, upper, |c| c.conj())
}

/// Gram matrix for normalized families carrying irrational p-power scales.
pub fn gram_matrix_scaled(fs: &[ScaledMbf]) -> Vec<Vec<PowerScalar>> {
    let n = fs.len();
    let upper: Vec<Vec<PowerScalar>> = fs
        .par_iter()
        .enumerate()
        .map(|(i, fi)| (i..n).map(|k| fi.inner_product(&fs[k])).collect())
        .collect();
    assemble_hermitian(n, upper, |c| c.conj())
}

fn assemble_hermitian<T: Clone>(
    n: usize,
    upper: Vec<Vec<T>>,
    conj: impl Fn(&T) -> T,
) -> Vec<Vec<T>> {
    let mut full: Vec<Vec<T>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for k in 0..n {
            if k >= i {
                row.push(upper[i][k - i].clone());
            } else {
                row.push(conj(&upper[k][i - k]));
            }
        }
        full.push(row);
    }
    full
}

/// Exact Kronecker-delta check.
pub fn is_identity(m: &[Vec<CycloScalar>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.len() == m.len()
            && row
                .iter()
                .enumerate()
                .all(|(k, c)| if i == k { c.is_one() } else { c.is_zero() })
    })
}

pub fn is_identity_scaled(m: &[Vec<PowerScalar>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.len() == m.len()
            && row
                .iter()
                .enumerate()
                .all(|(k, c)| if i == k { c.is_one() } else { c.is_zero() })
    })
}

/// Constructive probe of MRA axiom (c) (trivial intersection): a nonzero
/// compactly supported f must fall out of V_j for some j at or above j_min,
/// because V_j members are constant on balls of radius 2^{-j}.
pub fn intersection_triviality_probe(j_min: i64, f: &Mbf) -> Result<bool, QpwError> {
    if f.is_zero() {
        return Err(QpwError::ZeroFunction);
    }
    let (l, n) = f.local_constancy_params().expect("nonzero");
    for j in j_min..=(-l).max(j_min) {
        match expand_in_vj(f, j, required_gamma(n.max(-j), j)) {
            Expansion::InSpace(_) => continue,
            _ => return Ok(true),
        }
    }
    Ok(false)
}
