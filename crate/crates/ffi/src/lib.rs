//! C ABI over `hadlab-core`.
//!
//! Graphs cross the boundary as opaque `HlGraph` handles created from graph6
//! text. Every fallible call returns an `HlStatus`; on failure a message is
//! available from `hl_last_error_message` on the same thread. Strings returned
//! through out-parameters are owned by the caller and released with
//! `hl_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hadlab::certificate::{Certificate, CertificateKind};
use hadlab::constructors::{construct_semismall_model_faf, construct_small_model_ccg};
use hadlab::invariants::{chromatic_number, clique_number, had2, had2_plus, had_m, hadwiger_number, InvariantResult};
use hadlab::patterns::in_class;
use hadlab::{verify_model, ClassName, Error, Graph, MinorModel};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HlStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Malformed = 3,
    TooLarge = 4,
    InvalidArgument = 5,
    ClassViolation = 6,
    StructureFallthrough = 7,
    Internal = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HlModelMode {
    Small = 0,
    Semismall = 1,
}

/// Opaque graph handle.
pub struct HlGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &Error) -> HlStatus {
    match e {
        Error::MalformedGraph6(_) | Error::MalformedEdgeList(_) | Error::InvalidMultigraph(_) => HlStatus::Malformed,
        Error::SizeOverflow(_) | Error::TooLargeForCanonical(_) | Error::TooLarge { .. } | Error::TooManyBlobs { .. } => {
            HlStatus::TooLarge
        }
        Error::BadParams(_) | Error::UnknownCheck(_) | Error::UnknownName(_) => HlStatus::InvalidArgument,
        Error::ClassViolation(_) => HlStatus::ClassViolation,
        Error::StructureFallthrough(_) => HlStatus::StructureFallthrough,
        Error::InternalCheckFailed(_) | Error::PreconditionViolated(_) => HlStatus::Internal,
    }
}

struct Fail(HlStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(HlStatus::NullArgument, format!("{what} is null"))
}

/// Runs `body`, recording any failure or panic as the thread's last error.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> HlStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            HlStatus::Ok
        }
        Ok(Err(Fail(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("panic inside hadlab");
            HlStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail(HlStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn graph_ref<'a>(g: *const HlGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> Result<(), Fail> {
    let c = CString::new(text).map_err(|e| Fail(HlStatus::Internal, e.to_string()))?;
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(c.into_raw());
    Ok(())
}

/// Parses a graph6 record into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_graph_from_graph6(text: *const c_char, out: *mut *mut HlGraph) -> HlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let g = Graph::from_graph6(read_str(text, "graph6 text")?)?;
        out.write(Box::into_raw(Box::new(HlGraph { inner: g })));
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from `hl_graph_from_graph6` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hl_graph_free(g: *mut HlGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hl_graph_vertex_count(g: *const HlGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.n())
}

/// # Safety
/// `g` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_graph_to_graph6(g: *const HlGraph, out: *mut *mut c_char) -> HlStatus {
    guard(|| write_string(out, graph_ref(g)?.to_graph6()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn invariant(
    g: *const HlGraph,
    out: *mut usize,
    f: impl FnOnce(&Graph) -> Result<InvariantResult, Error>,
) -> HlStatus {
    guard(|| {
        let r = f(graph_ref(g)?)?;
        write_out(out, r.value)
    })
}

/// # Safety
/// `g` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_clique_number(g: *const HlGraph, out: *mut usize) -> HlStatus {
    invariant(g, out, |g| Ok(clique_number(g)))
}

/// # Safety
/// `g` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_chromatic_number(g: *const HlGraph, out: *mut usize) -> HlStatus {
    invariant(g, out, chromatic_number)
}

/// # Safety
/// `g` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_had2(g: *const HlGraph, out: *mut usize) -> HlStatus {
    invariant(g, out, had2)
}

/// # Safety
/// `g` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_had2_plus(g: *const HlGraph, out: *mut usize) -> HlStatus {
    invariant(g, out, had2_plus)
}

/// # Safety
/// `g` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_hadwiger_number(g: *const HlGraph, out: *mut usize) -> HlStatus {
    invariant(g, out, hadwiger_number)
}

/// Largest clique minor with branch sets of at most `m` vertices; `m >= 1`.
///
/// # Safety
/// `g` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_had_m(g: *const HlGraph, m: usize, out: *mut usize) -> HlStatus {
    if m == 0 {
        set_last_error("branch-set bound must be at least 1");
        return HlStatus::InvalidArgument;
    }
    invariant(g, out, |g| had_m(g, m))
}

/// Membership in the class named `class`, e.g. `"coclaw-cogem-free"`.
///
/// # Safety
/// `g` must be a live handle, `class` a NUL-terminated string and `out` a
/// writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_in_class(g: *const HlGraph, class: *const c_char, out: *mut bool) -> HlStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let class: ClassName = read_str(class, "class name")?.parse()?;
        write_out(out, in_class(g, class).member)
    })
}

/// Builds a model and stores its certificate as JSON in `*out`. When the
/// input is outside the class the status is `ClassViolation` and the last
/// error message names the forbidden structure.
///
/// # Safety
/// `g` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_construct_model(g: *const HlGraph, mode: HlModelMode, out: *mut *mut c_char) -> HlStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let (built, kind) = match mode {
            HlModelMode::Small => (construct_small_model_ccg(g)?, CertificateKind::SmallModel),
            HlModelMode::Semismall => (construct_semismall_model_faf(g)?, CertificateKind::SemismallModel),
        };
        let cert = Certificate::for_model(g, kind, built.0, built.1)?;
        if !cert.verified {
            return Err(Fail(HlStatus::Internal, "constructed model failed verification".into()));
        }
        write_string(out, serde_json::to_string(&cert).expect("serialisable"))
    })
}

/// Checks a model given as a JSON array of branch sets against `g`.
///
/// # Safety
/// `g` must be a live handle, `model_json` a NUL-terminated string and
/// `out_valid` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_verify_model_json(
    g: *const HlGraph,
    model_json: *const c_char,
    out_valid: *mut bool,
) -> HlStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let text = read_str(model_json, "model JSON")?;
        let model: MinorModel =
            serde_json::from_str(text).map_err(|e| Fail(HlStatus::Malformed, format!("model JSON: {e}")))?;
        write_out(out_valid, verify_model(g, &model).valid)
    })
}

/// Re-checks a certificate from its own graph6 string and witness.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out_verified` a writable
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn hl_recheck_certificate_json(json: *const c_char, out_verified: *mut bool) -> HlStatus {
    guard(|| {
        let text = read_str(json, "certificate JSON")?;
        let cert: Certificate =
            serde_json::from_str(text).map_err(|e| Fail(HlStatus::Malformed, format!("certificate JSON: {e}")))?;
        write_out(out_verified, cert.recheck()?)
    })
}

/// Message for the last failed call on this thread, or null after a
/// successful one. Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn hl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
