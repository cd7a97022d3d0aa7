//! C interface to `enriques-core`.
//!
//! Diagrams and reports are opaque handles created by `enq_*` constructors
//! and released with the matching `*_free`. Fallible calls return an
//! [`EnqStatus`] and write their result through an out-pointer; the message
//! for the last failure on the calling thread is available from
//! [`enq_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_traits::ToPrimitive;

use enriques_core::diagram::{catalog, classify, fibration_configs, gram_of, CurveDiagram};
use enriques_core::linalg::det_exact;
use enriques_core::tasks::scenario::{InlineDiagram, Scenario};
use enriques_core::tasks::{run_scenario, Report, TaskError};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownName = 3,
    InvalidInput = 4,
    Computation = 5,
    Panic = 6,
}

/// A curve diagram.
pub struct EnqDiagram(CurveDiagram);

/// The result of running a scenario, with its canonical JSON rendering.
pub struct EnqReport {
    passed: bool,
    json: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Failure(EnqStatus, String);

impl From<TaskError> for Failure {
    fn from(e: TaskError) -> Self {
        let status = match e {
            TaskError::UnknownCatalog(_) => EnqStatus::UnknownName,
            _ => EnqStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn guarded(f: impl FnOnce() -> Result<(), Failure>) -> EnqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            EnqStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            EnqStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(EnqStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|e| Failure(EnqStatus::InvalidUtf8, e.to_string()))
}

unsafe fn diagram_ref<'a>(d: *const EnqDiagram) -> Result<&'a CurveDiagram, Failure> {
    d.as_ref().map(|d| &d.0).ok_or_else(|| Failure(EnqStatus::NullPointer, "null diagram".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(EnqStatus::NullPointer, "null out-pointer".into()));
    }
    out.write(value);
    Ok(())
}

fn computation(e: impl ToString) -> Failure {
    Failure(EnqStatus::Computation, e.to_string())
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next `enq_*` call on the same thread.
#[no_mangle]
pub extern "C" fn enq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn enq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Diagram from the built-in catalog, e.g. `"E~8"` or `"e8-special"`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn enq_diagram_from_catalog(name: *const c_char, out: *mut *mut EnqDiagram) -> EnqStatus {
    guarded(|| {
        let name = read_str(name)?;
        let d = catalog::by_name(name).ok_or_else(|| Failure(EnqStatus::UnknownName, format!("unknown catalog name {name:?}")))?;
        write_out(out, Box::into_raw(Box::new(EnqDiagram(d))))
    })
}

/// Diagram from JSON `{"vertices": [...], "edges": [[i, j, m], [i, j, m, points], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn enq_diagram_from_json(json: *const c_char, out: *mut *mut EnqDiagram) -> EnqStatus {
    guarded(|| {
        let inline: InlineDiagram =
            serde_json::from_str(read_str(json)?).map_err(|e| Failure(EnqStatus::InvalidInput, e.to_string()))?;
        let d = inline.build()?;
        write_out(out, Box::into_raw(Box::new(EnqDiagram(d))))
    })
}

/// # Safety
/// `d` must be null or a handle from an `enq_diagram_*` constructor not yet freed.
#[no_mangle]
pub unsafe extern "C" fn enq_diagram_free(d: *mut EnqDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of vertices, 0 for a null handle.
///
/// # Safety
/// `d` must be null or a live diagram handle.
#[no_mangle]
pub unsafe extern "C" fn enq_diagram_vertex_count(d: *const EnqDiagram) -> usize {
    d.as_ref().map_or(0, |d| d.0.len())
}

/// Determinant of the intersection matrix.
///
/// # Safety
/// `d` must be a live diagram handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn enq_diagram_determinant(d: *const EnqDiagram, out: *mut i64) -> EnqStatus {
    guarded(|| {
        let det = det_exact(&gram_of(diagram_ref(d)?)).map_err(computation)?;
        let det = det.to_i64().ok_or_else(|| computation(format!("determinant {det} exceeds 64 bits")))?;
        write_out(out, det)
    })
}

/// Type of the diagram as text, e.g. `"affine E~8"`; free with [`enq_string_free`].
///
/// # Safety
/// `d` must be a live diagram handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn enq_diagram_classify(d: *const EnqDiagram, out: *mut *mut c_char) -> EnqStatus {
    guarded(|| {
        let text = classify(diagram_ref(d)?).to_string();
        let s = CString::new(text).map_err(computation)?;
        write_out(out, s.into_raw())
    })
}

/// Number of rank-8 configurations of disjoint affine subdiagrams.
///
/// # Safety
/// `d` must be a live diagram handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn enq_diagram_fibration_count(d: *const EnqDiagram, out: *mut usize) -> EnqStatus {
    guarded(|| {
        let n = fibration_configs(diagram_ref(d)?).map_err(computation)?.len();
        write_out(out, n)
    })
}

/// Run a scenario document. A report whose checks fail is still returned
/// with `ENQ_STATUS_OK`; inspect it with [`enq_report_passed`].
///
/// # Safety
/// `scenario_json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn enq_report_run(scenario_json: *const c_char, out: *mut *mut EnqReport) -> EnqStatus {
    guarded(|| {
        let scenario = Scenario::from_json(read_str(scenario_json)?)?;
        let report: Report = run_scenario(&scenario)?;
        let json = CString::new(report.to_canonical_json()).map_err(computation)?;
        write_out(out, Box::into_raw(Box::new(EnqReport { passed: report.pass(), json })))
    })
}

/// Whether every check in the report passed; false for a null handle.
///
/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn enq_report_passed(r: *const EnqReport) -> bool {
    r.as_ref().is_some_and(|r| r.passed)
}

/// Canonical JSON of the report, owned by the handle; null for a null handle.
///
/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn enq_report_json(r: *const EnqReport) -> *const c_char {
    r.as_ref().map_or(ptr::null(), |r| r.json.as_ptr())
}

/// # Safety
/// `r` must be null or a handle from [`enq_report_run`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn enq_report_free(r: *mut EnqReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `s` must be null or a string returned through an out-pointer by this library.
#[no_mangle]
pub unsafe extern "C" fn enq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_values_are_stable() {
        assert_eq!(EnqStatus::Ok as i32, 0);
        assert_eq!(EnqStatus::Panic as i32, 6);
    }

    #[test]
    fn null_arguments_are_reported() {
        let mut d = ptr::null_mut();
        assert_eq!(unsafe { enq_diagram_from_catalog(ptr::null(), &mut d) }, EnqStatus::NullPointer);
        assert!(d.is_null());
        let msg = unsafe { CStr::from_ptr(enq_last_error()) };
        assert!(!msg.to_bytes().is_empty());
    }

    #[test]
    fn version_is_nul_terminated() {
        let v = unsafe { CStr::from_ptr(enq_version()) };
        assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}
