//! Residue sequences `s_j = q*j mod p` and the longitudinal-surgery criterion
//! built on them, together with the Klein-bottle enumeration for `L(4n, 2n-1)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arith::{checked_mul, checked_sub, floor_sum, gcd, mod_inverse};
use crate::error::{Error, Result};
use crate::lens::DualKnotSpec;

/// A coprime pair `(p, q)` with `p >= 2` and `0 < q < p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LensParams {
    p: i64,
    q: i64,
}

impl LensParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidLens { p, q, reason: "p must be at least 2" });
        }
        if q <= 0 || q >= p {
            return Err(Error::InvalidLens { p, q, reason: "q must satisfy 0 < q < p" });
        }
        if gcd(p, q) != 1 {
            return Err(Error::InvalidLens { p, q, reason: "p and q must be coprime" });
        }
        Ok(LensParams { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// True when `q <= p/2`, the form assumed by the diagram construction.
    pub fn is_reduced(&self) -> bool {
        2 * self.q <= self.p
    }
}

impl std::fmt::Display for LensParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// The full residue sequence of one lens space; `s[j-1]` holds `s_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueProfile {
    params: LensParams,
    s: Vec<i64>,
}

impl ResidueProfile {
    pub fn params(&self) -> LensParams {
        self.params
    }

    /// The residues `s_1, ..., s_p`.
    pub fn sequence(&self) -> &[i64] {
        &self.s
    }

    /// `s_j` for `1 <= j <= p`.
    pub fn s(&self, j: i64) -> Result<i64> {
        let p = self.params.p;
        if j < 1 || j > p {
            return Err(Error::OutOfRange { value: j, min: 1, max: p });
        }
        Ok(self.s[(j - 1) as usize])
    }
}

pub fn residue_sequence(params: LensParams) -> ResidueProfile {
    let LensParams { p, q } = params;
    // q*j < p^2 and p fits comfortably for the sizes a Vec can hold.
    let s = (1..=p).map(|j| ((q as i128 * j as i128) % p as i128) as i64).collect();
    ResidueProfile { params, s }
}

fn check_k(params: LensParams, k: i64) -> Result<()> {
    let p = params.p;
    if k < 1 || k > p - 1 {
        return Err(Error::OutOfRange { value: k, min: 1, max: p - 1 });
    }
    Ok(())
}

/// Position of the first occurrence of `k` in the residue sequence.
pub fn psi(profile: &ResidueProfile, k: i64) -> Result<i64> {
    psi_of(profile.params, k)
}

/// Number of residues smaller than `k` that appear before position `psi(k)`.
pub fn phi(profile: &ResidueProfile, k: i64) -> Result<i64> {
    phi_of(profile.params, k)
}

// The residue k occurs exactly once among s_1..s_{p-1}, at j = k * q^{-1} mod p.
fn psi_of(params: LensParams, k: i64) -> Result<i64> {
    check_k(params, k)?;
    let LensParams { p, q } = params;
    let inv = mod_inverse(q, p).expect("coprime by construction");
    Ok(((k as i128 * inv as i128) % p as i128) as i64)
}

// For r = q*j mod p: [r >= k] = floor((q*j + p - k)/p) - floor(q*j/p).
fn phi_of(params: LensParams, k: i64) -> Result<i64> {
    let m = psi_of(params, k)?;
    let LensParams { p, q } = params;
    // j ranges over 1..m-1; shift to i = j - 1 over 0..m-1 with i < m - 1.
    let n = m - 1;
    let shifted = floor_sum(n, p, q, q + p - k)?;
    let plain = floor_sum(n, p, q, q)?;
    let at_least_k = shifted - plain;
    Ok(n - at_least_k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub u: i64,
    pub psi: i64,
    pub phi: i64,
    pub value: i64,
    pub passes: bool,
}

/// Necessary condition for `K(L(p,q); u)` to admit a longitudinal surgery
/// yielding the 3-sphere: `p*phi(u) - u*psi(u)` lies in `{1, -1, 1-p, -1-p}`.
pub fn longitudinal_criterion(spec: DualKnotSpec) -> Result<CriterionResult> {
    let params = spec.params();
    let u = spec.u();
    let p = params.p;
    let psi_u = psi_of(params, u)?;
    let phi_u = phi_of(params, u)?;
    let value = checked_sub(
        checked_mul(p, phi_u, "criterion value")?,
        checked_mul(u, psi_u, "criterion value")?,
        "criterion value",
    )?;
    let passes = value == 1 || value == -1 || value == 1 - p || value == -1 - p;
    debug_assert!(!passes || gcd(p, u) == 1, "criterion passed with gcd(p,u) != 1");
    Ok(CriterionResult { u, psi: psi_u, phi: phi_u, value, passes })
}

/// Lens parameters `(4n, 2n-1)` of the Klein-bottle family.
pub fn klein_params(n: i64) -> Result<LensParams> {
    if n < 1 {
        return Err(Error::OutOfRange { value: n, min: 1, max: i64::MAX });
    }
    LensParams::new(checked_mul(4, n, "klein p")?, 2 * n - 1)
}

/// All `(n, u)` with `n_min <= n <= n_max`, `1 <= u <= 2n`, for which the
/// criterion passes on `(4n, 2n-1, u)`.
pub fn klein_candidates(n_min: i64, n_max: i64) -> Result<BTreeSet<(i64, i64)>> {
    if n_min < 2 {
        return Err(Error::OutOfRange { value: n_min, min: 2, max: i64::MAX });
    }
    if n_max < n_min {
        return Err(Error::OutOfRange { value: n_max, min: n_min, max: i64::MAX });
    }
    let mut out = BTreeSet::new();
    for n in n_min..=n_max {
        let params = klein_params(n)?;
        for u in 1..=2 * n {
            if longitudinal_criterion(DualKnotSpec::new(params, u)?)?.passes {
                out.insert((n, u));
            }
        }
    }
    Ok(out)
}

/// `s_j` of `(4n, 2n-1)` for `1 <= j <= 2n-1`: `2n-j` for odd `j`, `4n-j` for even `j`.
pub fn klein_closed_form(n: i64, j: i64) -> Result<i64> {
    if n < 2 {
        return Err(Error::OutOfRange { value: n, min: 2, max: i64::MAX });
    }
    if j < 1 || j > 2 * n - 1 {
        return Err(Error::OutOfRange { value: j, min: 1, max: 2 * n - 1 });
    }
    Ok(if j % 2 == 1 { 2 * n - j } else { 4 * n - j })
}
