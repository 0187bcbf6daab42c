//! Lens-space classification up to (possibly orientation-reversing)
//! homeomorphism, and the dual-knot parameter `u`.

use serde::{Deserialize, Serialize};

use crate::arith::mod_inverse;
use crate::error::{Error, Result};
use crate::residue::LensParams;

/// The knot `K(L(p,q); u)`: the union of two arcs in the meridian disks of
/// the Heegaard solid tori joining the intersection points `P_0` and `P_u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DualKnotSpec {
    params: LensParams,
    u: i64,
}

impl DualKnotSpec {
    pub fn new(params: LensParams, u: i64) -> Result<Self> {
        let p = params.p();
        if u < 1 || u > p - 1 {
            return Err(Error::OutOfRange { value: u, min: 1, max: p - 1 });
        }
        Ok(DualKnotSpec { params, u })
    }

    pub fn params(&self) -> LensParams {
        self.params
    }

    pub fn u(&self) -> i64 {
        self.u
    }
}

/// The four residues `±q, ±q^{-1} mod p` whose lens spaces are homeomorphic to `L(p,q)`.
fn orbit(params: LensParams) -> [i64; 4] {
    let (p, q) = (params.p(), params.q());
    let inv = mod_inverse(q, p).expect("coprime by construction");
    [q, p - q, inv, (p - inv) % p]
}

/// `(p, q*)` with `q*` the least element of the homeomorphism orbit of `q` in `(0, p/2]`.
pub fn canonical_form(params: LensParams) -> LensParams {
    let p = params.p();
    let q = orbit(params)
        .into_iter()
        .filter(|&r| r > 0 && 2 * r <= p)
        .min()
        .expect("q or p-q always lies in (0, p/2]");
    LensParams::new(p, q).expect("orbit elements stay coprime to p")
}

pub fn homeomorphic(a: LensParams, b: LensParams) -> bool {
    if a.p() != b.p() {
        return false;
    }
    let p = a.p();
    let (q, r) = (a.q(), b.q());
    (q - r).rem_euclid(p) == 0
        || (q + r).rem_euclid(p) == 0
        || ((q as i128 * r as i128 - 1).rem_euclid(p as i128)) == 0
        || ((q as i128 * r as i128 + 1).rem_euclid(p as i128)) == 0
}

/// Replaces `u` by `min(u, p-u)`; `K(L;u)` and `K(L;p-u)` are isotopic.
pub fn normalize_u(spec: DualKnotSpec) -> DualKnotSpec {
    let p = spec.params.p();
    DualKnotSpec { params: spec.params, u: spec.u.min(p - spec.u) }
}

/// Knowledge that does not come from the decision procedure itself and is
/// used only to cross-check its output.
pub mod oracle {
    use serde::{Deserialize, Serialize};

    use super::canonical_form;
    use crate::arith::gcd;
    use crate::error::{Error, Result};
    use crate::residue::LensParams;

    /// Surgery on the `(r, s)` torus knot with slope `r*s + sign`.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
    pub struct TorusKnotSurgery {
        r: i64,
        s: i64,
        sign: i64,
    }

    impl TorusKnotSurgery {
        pub fn new(r: i64, s: i64, sign: i64) -> Result<Self> {
            if r.abs() < 2 || s.abs() < 2 || gcd(r, s) != 1 {
                return Err(Error::Precondition(format!("({r}, {s}) is not a nontrivial torus knot")));
            }
            if sign != 1 && sign != -1 {
                return Err(Error::Precondition(format!("sign must be +1 or -1, got {sign}")));
            }
            Ok(TorusKnotSurgery { r, s, sign })
        }
    }

    /// Moser's lens space `L(|rs + sign|, s^2)`, canonicalized.
    pub fn moser_lens_space(t: TorusKnotSurgery) -> Result<LensParams> {
        let slope = t
            .r
            .checked_mul(t.s)
            .and_then(|v| v.checked_add(t.sign))
            .ok_or(Error::Overflow("torus surgery slope"))?;
        let p = slope.abs();
        if p <= 1 {
            return Err(Error::Precondition(format!("surgery slope {slope} does not give a lens space")));
        }
        let q = (t.s as i128 * t.s as i128).rem_euclid(p as i128) as i64;
        Ok(canonical_form(LensParams::new(p, q)?))
    }
}
