//! C ABI over `epgraph`.
//!
//! Every entry point returns an [`EpStatus`] and writes results through out
//! pointers. Groups and graphs are opaque handles released with their
//! `_free` function; strings returned by the library are released with
//! [`ep_string_free`]. On failure, [`ep_last_error_message`] describes the
//! most recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use epgraph::graph::{to_dot, to_json, vertex_connectivity, SimpleGraph};
use epgraph::group::{build_group, is_nilpotent, FiniteGroup, GroupSpec};
use epgraph::kappa::{formula_for_group, kappa_enhanced, KappaOptions, Method};
use epgraph::power::GraphKind;
use epgraph::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidSpec = 4,
    NotAGroup = 5,
    NotNilpotent = 6,
    BudgetExceeded = 7,
    Overflow = 8,
    InvalidArgument = 9,
    Io = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpMethod {
    Formula = 0,
    Oracle = 1,
    Both = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpGraphKind {
    Enhanced = 0,
    Power = 1,
    Commuting = 2,
    Deleted = 3,
    Proper = 4,
}

/// Opaque finite group.
pub struct EpGroup {
    spec: GroupSpec,
    group: FiniteGroup,
}

/// Opaque simple graph.
pub struct EpGraph(SimpleGraph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> EpStatus {
    match err {
        Error::Parse { .. } => EpStatus::Parse,
        Error::InvalidSpec(_) | Error::OrderTooLarge(_) => EpStatus::InvalidSpec,
        Error::NotAGroup(_) => EpStatus::NotAGroup,
        Error::NotNilpotent(_) => EpStatus::NotNilpotent,
        Error::BudgetExceeded { .. } => EpStatus::BudgetExceeded,
        Error::Overflow(_) => EpStatus::Overflow,
        Error::Io { .. } => EpStatus::Io,
        _ => EpStatus::InvalidArgument,
    }
}

struct Failure(EpStatus, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure(status_of(&err), err.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(EpStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> EpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EpStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("panic inside epgraph".into());
            EpStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(EpStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn to_u64(v: u128) -> Result<u64, Failure> {
    u64::try_from(v).map_err(|_| Failure(EpStatus::Overflow, format!("{v} does not fit in 64 bits")))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("library strings contain no nul bytes").into_raw()
}

unsafe fn group_ref<'a>(g: *const EpGroup) -> Result<&'a EpGroup, Failure> {
    g.as_ref().ok_or_else(|| null("group"))
}

unsafe fn graph_ref<'a>(g: *const EpGraph) -> Result<&'a EpGraph, Failure> {
    g.as_ref().ok_or_else(|| null("graph"))
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ep_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn ep_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn ep_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and builds a group from spec text such as `"Z3 x Q8"`.
///
/// # Safety
/// `spec` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ep_group_new(spec: *const c_char, out: *mut *mut EpGroup) -> EpStatus {
    guard(|| {
        let spec = GroupSpec::parse(read_str(spec, "spec")?)?;
        let group = build_group(&spec)?;
        write_out(out, Box::into_raw(Box::new(EpGroup { spec, group })))
    })
}

/// # Safety
/// `g` must be null or a handle from [`ep_group_new`], freed at most once.
#[no_mangle]
pub unsafe extern "C" fn ep_group_free(g: *mut EpGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ep_group_order(g: *const EpGroup, out: *mut u64) -> EpStatus {
    guard(|| write_out(out, group_ref(g)?.group.order() as u64))
}

/// Canonical rendering of the group's spec; free with [`ep_string_free`].
///
/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ep_group_spec(g: *const EpGroup, out: *mut *mut c_char) -> EpStatus {
    guard(|| write_out(out, owned_string(group_ref(g)?.spec.to_string())))
}

/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ep_group_is_nilpotent(g: *const EpGroup, out: *mut bool) -> EpStatus {
    guard(|| write_out(out, is_nilpotent(&group_ref(g)?.group)))
}

/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ep_group_graph(
    g: *const EpGroup,
    kind: EpGraphKind,
    out: *mut *mut EpGraph,
) -> EpStatus {
    guard(|| {
        let kind = match kind {
            EpGraphKind::Enhanced => GraphKind::Enhanced,
            EpGraphKind::Power => GraphKind::Power,
            EpGraphKind::Commuting => GraphKind::Commuting,
            EpGraphKind::Deleted => GraphKind::Deleted,
            EpGraphKind::Proper => GraphKind::Proper,
        };
        let graph = kind.build(&group_ref(g)?.group);
        write_out(out, Box::into_raw(Box::new(EpGraph(graph))))
    })
}

/// Connectivity of the enhanced power graph by the nilpotent-group formula.
///
/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ep_kappa_formula(g: *const EpGroup, out: *mut u64) -> EpStatus {
    guard(|| {
        let (outcome, _) = formula_for_group(&group_ref(g)?.group)?;
        write_out(out, to_u64(outcome.kappa)?)
    })
}

/// Formula-versus-oracle report as a JSON object; free with
/// [`ep_string_free`].
///
/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ep_kappa_report_json(
    g: *const EpGroup,
    method: EpMethod,
    budget: usize,
    out: *mut *mut c_char,
) -> EpStatus {
    guard(|| {
        let g = group_ref(g)?;
        let method = match method {
            EpMethod::Formula => Method::Formula,
            EpMethod::Oracle => Method::Oracle,
            EpMethod::Both => Method::Both,
        };
        let report = kappa_enhanced(&g.spec, KappaOptions { method, budget })?;
        write_out(out, owned_string(report.to_json()))
    })
}

/// # Safety
/// `g` must be null or a handle from [`ep_group_graph`], freed at most once.
#[no_mangle]
pub unsafe extern "C" fn ep_graph_free(g: *mut EpGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ep_graph_vertex_count(g: *const EpGraph, out: *mut usize) -> EpStatus {
    guard(|| write_out(out, graph_ref(g)?.0.vertex_count()))
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ep_graph_edge_count(g: *const EpGraph, out: *mut usize) -> EpStatus {
    guard(|| write_out(out, graph_ref(g)?.0.edge_count()))
}

/// Whether vertices `u` and `v` are adjacent; out-of-range vertices are an
/// invalid argument.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ep_graph_has_edge(g: *const EpGraph, u: usize, v: usize, out: *mut bool) -> EpStatus {
    guard(|| {
        let g = &graph_ref(g)?.0;
        let n = g.vertex_count();
        if u >= n || v >= n {
            return Err(Failure(
                EpStatus::InvalidArgument,
                format!("vertex out of range for {n} vertices"),
            ));
        }
        write_out(out, g.has_edge(u, v))
    })
}

/// Exact vertex connectivity by max-flow.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ep_graph_vertex_connectivity(g: *const EpGraph, out: *mut usize) -> EpStatus {
    guard(|| write_out(out, vertex_connectivity(&graph_ref(g)?.0)?.kappa))
}

/// `{"n", "labels", "edges"}` JSON; free with [`ep_string_free`].
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ep_graph_to_json(g: *const EpGraph, out: *mut *mut c_char) -> EpStatus {
    guard(|| write_out(out, owned_string(to_json(&graph_ref(g)?.0))))
}

/// Graphviz DOT; free with [`ep_string_free`].
///
/// # Safety
/// `g` must be a live graph handle, `name` a nul-terminated string, and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ep_graph_to_dot(
    g: *const EpGraph,
    name: *const c_char,
    out: *mut *mut c_char,
) -> EpStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        write_out(out, owned_string(to_dot(&graph_ref(g)?.0, name)))
    })
}
