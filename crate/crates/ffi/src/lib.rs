//! C ABI for the toric-np engine.
//!
//! Graphs and polyominoes are opaque handles created by `tnp_*_parse` (or
//! `tnp_graph_complete`) and released with the matching `*_free`. Every
//! fallible call returns a [`TnpStatus`]; on failure a message is available
//! from [`tnp_last_error_message`] on the same thread. Strings returned
//! through `char **` out-parameters are owned by the caller and must be
//! released with [`tnp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use toric_np::betti::{betti_graded_with, betti_table_with, BettiError, BettiOptions};
use toric_np::classifier::{classify_np, ClassifyError, Level};
use toric_np::io::{parse_graph, parse_polyomino_input};
use toric_np::polyomino::{classify_polyomino, PolyominoError};
use toric_np::{BipartiteGraph, FieldSpec, Polyomino};

/// Result codes of every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TnpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    /// Characteristic that is neither 0 nor a prime, or a non-convex
    /// polyomino.
    InvalidArgument = 4,
    /// The graph has no cycle; its toric ideal is zero and has no level.
    ZeroIdeal = 5,
    /// A divisor complex exceeded the face cap.
    ResourceLimit = 6,
    Internal = 7,
    Panic = 8,
}

/// Green–Lazarsfeld level, ordered.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TnpLevel {
    FailsN1 = 1,
    N1 = 2,
    N2 = 3,
    N3 = 4,
    NInf = 5,
}

impl From<Level> for TnpLevel {
    fn from(l: Level) -> Self {
        match l {
            Level::FailsN1 => TnpLevel::FailsN1,
            Level::N1 => TnpLevel::N1,
            Level::N2 => TnpLevel::N2,
            Level::N3 => TnpLevel::N3,
            Level::NInf => TnpLevel::NInf,
        }
    }
}

/// Opaque bipartite graph.
pub struct TnpGraph(BipartiteGraph);

/// Opaque polyomino.
pub struct TnpPolyomino(Polyomino);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl ToString) {
    let msg = msg.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("interior NULs removed"));
}

fn fail(status: TnpStatus, msg: impl ToString) -> TnpStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning a panic into `TnpStatus::Panic`.
fn guard(f: impl FnOnce() -> TnpStatus) -> TnpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            fail(TnpStatus::Panic, msg)
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, TnpStatus> {
    if s.is_null() {
        return Err(fail(TnpStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|e| fail(TnpStatus::InvalidUtf8, e))
}

fn field(characteristic: u32) -> Result<FieldSpec, TnpStatus> {
    FieldSpec::new(characteristic as u64).map_err(|e| fail(TnpStatus::InvalidArgument, e))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> TnpStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            TnpStatus::Ok
        }
        Err(e) => fail(TnpStatus::Internal, e),
    }
}

fn classify_error(e: ClassifyError) -> TnpStatus {
    match e {
        ClassifyError::ZeroIdeal { .. } => fail(TnpStatus::ZeroIdeal, e),
        other => fail(TnpStatus::Internal, other),
    }
}

fn betti_error(e: BettiError) -> TnpStatus {
    match e {
        BettiError::FaceCap { .. } => fail(TnpStatus::ResourceLimit, e),
        other => fail(TnpStatus::Internal, other),
    }
}

/// Message describing the last failure on this thread, or an empty string.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tnp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Engine version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn tnp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a graph in the text or JSON input format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tnp_graph_parse(text: *const c_char, out: *mut *mut TnpGraph) -> TnpStatus {
    guard(|| {
        if out.is_null() {
            return fail(TnpStatus::NullPointer, "null output pointer");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_graph(text) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(TnpGraph(g)));
                TnpStatus::Ok
            }
            Err(e) => fail(TnpStatus::Parse, e),
        }
    })
}

/// `K_{m,n}` with labels `x1..xm`, `y1..yn`.
#[no_mangle]
pub extern "C" fn tnp_graph_complete(m: usize, n: usize) -> *mut TnpGraph {
    Box::into_raw(Box::new(TnpGraph(BipartiteGraph::complete(m, n))))
}

/// # Safety
/// `g` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn tnp_graph_free(g: *mut TnpGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle or null (which gives 0).
#[no_mangle]
pub unsafe extern "C" fn tnp_graph_num_vertices(g: *const TnpGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.num_vertices())
}

/// # Safety
/// `g` must be a live handle or null (which gives 0).
#[no_mangle]
pub unsafe extern "C" fn tnp_graph_num_edges(g: *const TnpGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.num_edges())
}

/// Level of `I_G` over the field of the given characteristic.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tnp_classify(g: *const TnpGraph, characteristic: u32, out: *mut TnpLevel) -> TnpStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(TnpStatus::NullPointer, "null argument");
        };
        let f = match field(characteristic) {
            Ok(f) => f,
            Err(s) => return s,
        };
        match classify_np(&g.0, f) {
            Ok(v) => {
                *out = v.level.into();
                TnpStatus::Ok
            }
            Err(e) => classify_error(e),
        }
    })
}

/// Full verdict with certificate as JSON.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tnp_classify_json(g: *const TnpGraph, characteristic: u32, out: *mut *mut c_char) -> TnpStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(TnpStatus::NullPointer, "null argument");
        };
        let f = match field(characteristic) {
            Ok(f) => f,
            Err(s) => return s,
        };
        match classify_np(&g.0, f) {
            Ok(v) => write_string(out, serde_json::to_string(&v).expect("verdicts serialize")),
            Err(e) => classify_error(e),
        }
    })
}

/// `β_{i,j}(I_G)`. A `face_cap` of 0 means no cap.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tnp_betti_number(
    g: *const TnpGraph,
    i: usize,
    j: usize,
    characteristic: u32,
    face_cap: u64,
    out: *mut u64,
) -> TnpStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(TnpStatus::NullPointer, "null argument");
        };
        let f = match field(characteristic) {
            Ok(f) => f,
            Err(s) => return s,
        };
        let opts = BettiOptions { face_cap: if face_cap == 0 { u64::MAX } else { face_cap }, threads: None };
        match betti_graded_with(&g.0, i, j, f, &opts) {
            Ok(v) => {
                *out = v;
                TnpStatus::Ok
            }
            Err(e) => betti_error(e),
        }
    })
}

/// Windowed Betti table as JSON. A `face_cap` of 0 means no cap.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tnp_betti_table_json(
    g: *const TnpGraph,
    i_max: usize,
    j_max: usize,
    characteristic: u32,
    face_cap: u64,
    out: *mut *mut c_char,
) -> TnpStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(TnpStatus::NullPointer, "null argument");
        };
        let f = match field(characteristic) {
            Ok(f) => f,
            Err(s) => return s,
        };
        let opts = BettiOptions { face_cap: if face_cap == 0 { u64::MAX } else { face_cap }, threads: None };
        match betti_table_with(&g.0, i_max, j_max, f, &opts) {
            Ok(t) => write_string(out, serde_json::to_string(&t).expect("tables serialize")),
            Err(e) => betti_error(e),
        }
    })
}

/// Parses a polyomino from ASCII art or JSON.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tnp_polyomino_parse(text: *const c_char, out: *mut *mut TnpPolyomino) -> TnpStatus {
    guard(|| {
        if out.is_null() {
            return fail(TnpStatus::NullPointer, "null output pointer");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_polyomino_input(text) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(TnpPolyomino(p)));
                TnpStatus::Ok
            }
            Err(e) => fail(TnpStatus::Parse, e),
        }
    })
}

/// # Safety
/// `p` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn tnp_polyomino_free(p: *mut TnpPolyomino) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Level of the polyomino ideal; non-convex input gives
/// `TNP_STATUS_INVALID_ARGUMENT`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tnp_polyomino_classify(p: *const TnpPolyomino, characteristic: u32, out: *mut TnpLevel) -> TnpStatus {
    guard(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return fail(TnpStatus::NullPointer, "null argument");
        };
        let f = match field(characteristic) {
            Ok(f) => f,
            Err(s) => return s,
        };
        match classify_polyomino(&p.0, f) {
            Ok(v) => {
                *out = v.level.into();
                TnpStatus::Ok
            }
            Err(e @ PolyominoError::NotConvex(_)) => fail(TnpStatus::InvalidArgument, e),
            Err(e) => fail(TnpStatus::Internal, e),
        }
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tnp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
