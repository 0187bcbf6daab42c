//! C ABI over `lens_surgery`.
//!
//! Every call returns an [`LsStatus`]; results go through out-pointers.
//! Diagrams and reports are opaque handles released with their `_free`
//! function, strings with [`ls_string_free`]. The message for the last
//! failure on the calling thread is available from [`ls_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lens_surgery::decide::{decide, DecisionReport, Obtainable};
use lens_surgery::diagram::{modify, schubert_diagram, wedge_site, Modification, PlanarDiagram};
use lens_surgery::invariants::{determinant, Budget};
use lens_surgery::report::to_json;
use lens_surgery::{canonical_form, homeomorphic, longitudinal_criterion, DualKnotSpec, Error, LensParams};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Overflow = 3,
    MalformedInput = 4,
    NotAKnot = 5,
    CrossingCap = 6,
    InvalidBudget = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LsObtainable {
    Yes = 0,
    No = 1,
    Inconclusive = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LsModification {
    CrossingPositive = 0,
    CrossingNegative = 1,
    Smoothing = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LsCriterion {
    pub psi: i64,
    pub phi: i64,
    pub value: i64,
    pub passes: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LsBudget {
    pub node_cap: u64,
    pub headroom: u32,
    pub jones_cap: u32,
}

/// Opaque planar diagram.
pub struct LsDiagram(PlanarDiagram);

/// Opaque decision report.
pub struct LsReport(DecisionReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LsStatus {
    match e {
        Error::InvalidLens { .. } | Error::OutOfRange { .. } | Error::SiteMismatch | Error::Precondition(_) => {
            LsStatus::InvalidArgument
        }
        Error::Overflow(_) => LsStatus::Overflow,
        Error::MalformedDiagram(_) | Error::Parse { .. } | Error::InvalidMove(_) => LsStatus::MalformedInput,
        Error::NotAKnot(_) => LsStatus::NotAKnot,
        Error::CrossingCap { .. } => LsStatus::CrossingCap,
        Error::Budget(_) => LsStatus::InvalidBudget,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard<F: FnOnce() -> Result<(), (LsStatus, String)>>(f: F) -> LsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            LsStatus::Panic
        }
    }
}

trait IntoFfi<T> {
    fn ffi(self) -> Result<T, (LsStatus, String)>;
}

impl<T> IntoFfi<T> for lens_surgery::Result<T> {
    fn ffi(self) -> Result<T, (LsStatus, String)> {
        self.map_err(|e| (status_of(&e), e.to_string()))
    }
}

fn null() -> (LsStatus, String) {
    (LsStatus::NullPointer, "null pointer argument".into())
}

fn budget_from(b: LsBudget) -> Result<Budget, (LsStatus, String)> {
    let budget = Budget {
        node_cap: usize::try_from(b.node_cap).map_err(|_| (LsStatus::InvalidBudget, "node cap too large".into()))?,
        headroom: b.headroom as usize,
        jones_cap: b.jones_cap as usize,
    };
    budget.validate().ffi()?;
    Ok(budget)
}

fn string_out(s: String, out: *mut *mut c_char) -> Result<(), (LsStatus, String)> {
    let c = CString::new(s).map_err(|_| (LsStatus::Panic, "interior NUL in output".into()))?;
    // SAFETY: callers check `out` for null before reaching here.
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Copies the last error message on this thread into `buf` (NUL-terminated,
/// truncated to `len`). Returns the full message length, 0 when there is none.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes of writes.
#[no_mangle]
pub unsafe extern "C" fn ls_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let Some(msg) = e.as_ref() else { return 0 };
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr(), buf.cast::<u8>(), n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

#[no_mangle]
pub extern "C" fn ls_budget_default() -> LsBudget {
    let b = Budget::default();
    LsBudget { node_cap: b.node_cap as u64, headroom: b.headroom as u32, jones_cap: b.jones_cap as u32 }
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ls_criterion(p: i64, q: i64, u: i64, out: *mut LsCriterion) -> LsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let r = longitudinal_criterion(DualKnotSpec::new(LensParams::new(p, q).ffi()?, u).ffi()?).ffi()?;
        *out = LsCriterion { psi: r.psi, phi: r.phi, value: r.value, passes: r.passes };
        Ok(())
    })
}

/// # Safety
/// `out_q` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ls_canonical_q(p: i64, q: i64, out_q: *mut i64) -> LsStatus {
    guard(|| {
        if out_q.is_null() {
            return Err(null());
        }
        *out_q = canonical_form(LensParams::new(p, q).ffi()?).q();
        Ok(())
    })
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ls_homeomorphic(p1: i64, q1: i64, p2: i64, q2: i64, out: *mut bool) -> LsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        *out = homeomorphic(LensParams::new(p1, q1).ffi()?, LensParams::new(p2, q2).ffi()?);
        Ok(())
    })
}

/// Schubert diagram of the two-bridge link `b(p,q)`, `0 < q < p/2`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ls_schubert_diagram(p: i64, q: i64, out: *mut *mut LsDiagram) -> LsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let sd = schubert_diagram(LensParams::new(p, q).ffi()?).ffi()?;
        *out = Box::into_raw(Box::new(LsDiagram(sd.diagram())));
        Ok(())
    })
}

/// The Schubert diagram of `b(p,q)` modified at wedge `u`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ls_wedge_candidate(
    p: i64,
    q: i64,
    u: i64,
    mode: LsModification,
    out: *mut *mut LsDiagram,
) -> LsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let sd = schubert_diagram(LensParams::new(p, q).ffi()?).ffi()?;
        let mode = match mode {
            LsModification::CrossingPositive => Modification::CrossingPositive,
            LsModification::CrossingNegative => Modification::CrossingNegative,
            LsModification::Smoothing => Modification::Smoothing,
        };
        let map = modify(&sd, wedge_site(&sd, u).ffi()?, mode).ffi()?;
        *out = Box::into_raw(Box::new(LsDiagram(PlanarDiagram::from_map(&map))));
        Ok(())
    })
}

/// Parses PD text (`PD arcs=<n> components=<k>` then `X[a,b,c,d]` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ls_diagram_parse(text: *const c_char, out: *mut *mut LsDiagram) -> LsStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (LsStatus::MalformedInput, "PD text is not UTF-8".to_string()))?;
        *out = Box::into_raw(Box::new(LsDiagram(PlanarDiagram::parse(s).ffi()?)));
        Ok(())
    })
}

/// PD text of a diagram; release with [`ls_string_free`].
///
/// # Safety
/// `diagram` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ls_diagram_to_pd(diagram: *const LsDiagram, out: *mut *mut c_char) -> LsStatus {
    guard(|| {
        if diagram.is_null() || out.is_null() {
            return Err(null());
        }
        string_out((*diagram).0.to_string(), out)
    })
}

/// # Safety
/// `diagram` must be a live handle; the out-pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ls_diagram_counts(
    diagram: *const LsDiagram,
    crossings: *mut usize,
    components: *mut usize,
) -> LsStatus {
    guard(|| {
        if diagram.is_null() || crossings.is_null() || components.is_null() {
            return Err(null());
        }
        *crossings = (*diagram).0.crossing_count();
        *components = (*diagram).0.component_count();
        Ok(())
    })
}

/// # Safety
/// `diagram` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ls_diagram_determinant(diagram: *const LsDiagram, out: *mut u64) -> LsStatus {
    guard(|| {
        if diagram.is_null() || out.is_null() {
            return Err(null());
        }
        let d = determinant(&(*diagram).0).ffi()?;
        *out = u64::try_from(d).map_err(|_| (LsStatus::Overflow, "determinant exceeds 64 bits".to_string()))?;
        Ok(())
    })
}

/// # Safety
/// `diagram` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ls_diagram_free(diagram: *mut LsDiagram) {
    if !diagram.is_null() {
        drop(Box::from_raw(diagram));
    }
}

/// Runs the full decision for `L(p,q)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ls_decide(p: i64, q: i64, budget: LsBudget, out: *mut *mut LsReport) -> LsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let report = decide(LensParams::new(p, q).ffi()?, &budget_from(budget)?).ffi()?;
        *out = Box::into_raw(Box::new(LsReport(report)));
        Ok(())
    })
}

/// # Safety
/// `report` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ls_report_obtainable(report: *const LsReport, out: *mut LsObtainable) -> LsStatus {
    guard(|| {
        if report.is_null() || out.is_null() {
            return Err(null());
        }
        *out = match (*report).0.obtainable {
            Obtainable::Yes => LsObtainable::Yes,
            Obtainable::No => LsObtainable::No,
            Obtainable::Inconclusive => LsObtainable::Inconclusive,
        };
        Ok(())
    })
}

/// Copies up to `cap` witnesses into `buf` and stores the total count in `count`.
///
/// # Safety
/// `report` must be a live handle; `buf` must be null or valid for `cap`
/// writes; `count` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ls_report_witnesses(
    report: *const LsReport,
    buf: *mut i64,
    cap: usize,
    count: *mut usize,
) -> LsStatus {
    guard(|| {
        if report.is_null() || count.is_null() {
            return Err(null());
        }
        let w = &(*report).0.witnesses;
        if !buf.is_null() {
            ptr::copy_nonoverlapping(w.as_ptr(), buf, w.len().min(cap));
        }
        *count = w.len();
        Ok(())
    })
}

/// JSON form of a report; release with [`ls_string_free`].
///
/// # Safety
/// `report` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ls_report_to_json(report: *const LsReport, out: *mut *mut c_char) -> LsStatus {
    guard(|| {
        if report.is_null() || out.is_null() {
            return Err(null());
        }
        string_out(to_json(&(*report).0), out)
    })
}

/// # Safety
/// `report` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ls_report_free(report: *mut LsReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ls_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
