//! C interface to `lmdim`.
//!
//! Graphs and search results are opaque handles owned by the caller and
//! released with the matching `*_free` function. Fallible calls return an
//! [`LmdStatus`]; the message for the most recent failure on the calling
//! thread is available from [`lmd_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lmdim::dimension::{find_dimension, DimensionKind, DimensionResult, SearchOptions};
use lmdim::io::{graph_to_json, parse_graph};
use lmdim::{hierarchical_product, Error, Graph, ProductSpec, VertexSubset};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LmdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidGraph = 3,
    InvalidSubset = 4,
    NoGenerator = 5,
    PreconditionViolated = 6,
    InstanceTooLarge = 7,
    BadParameter = 8,
    Format = 9,
    Panic = 10,
}

/// Values accepted by the `kind` argument of [`lmd_find_dimension`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LmdKind {
    Metric = 0,
    Local = 1,
    ULocal = 2,
}

/// Opaque graph handle.
pub struct LmdGraph(Graph);

/// Opaque result of a dimension search.
pub struct LmdDimension(DimensionResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> LmdStatus {
    match e {
        Error::EmptyGraph
        | Error::VertexOutOfRange { .. }
        | Error::DuplicateEdge(..)
        | Error::Loop(_)
        | Error::Disconnected
        | Error::NonPositiveWeight(..)
        | Error::WeightCountMismatch { .. }
        | Error::WeightedFactor => LmdStatus::InvalidGraph,
        Error::EmptySubset | Error::DuplicateMember(_) => LmdStatus::InvalidSubset,
        Error::NoGenerator => LmdStatus::NoGenerator,
        Error::PreconditionViolated(_) => LmdStatus::PreconditionViolated,
        Error::InstanceTooLarge { .. } => LmdStatus::InstanceTooLarge,
        Error::BadParameter(_) => LmdStatus::BadParameter,
        _ => LmdStatus::Format,
    }
}

fn fail(status: LmdStatus, msg: impl Into<String>) -> LmdStatus {
    set_error(msg.into());
    status
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), LmdStatus>) -> LmdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LmdStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(LmdStatus::Panic, "internal panic"),
    }
}

fn lib(e: Error) -> LmdStatus {
    fail(status_of(&e), e.to_string())
}

unsafe fn graph_ref<'a>(g: *const LmdGraph) -> Result<&'a Graph, LmdStatus> {
    g.as_ref()
        .map(|g| &g.0)
        .ok_or_else(|| fail(LmdStatus::NullPointer, "null graph"))
}

unsafe fn slice<'a>(p: *const usize, len: usize) -> Result<&'a [usize], LmdStatus> {
    if len == 0 {
        Ok(&[])
    } else if p.is_null() {
        Err(fail(LmdStatus::NullPointer, "null array with nonzero length"))
    } else {
        Ok(std::slice::from_raw_parts(p, len))
    }
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), LmdStatus> {
    if out.is_null() {
        return Err(fail(LmdStatus::NullPointer, "null output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lmd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a graph document (`{"n": .., "edges": [..]}`).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn lmd_graph_from_json(json: *const c_char, out: *mut *mut LmdGraph) -> LmdStatus {
    guard(|| {
        if json.is_null() {
            return Err(fail(LmdStatus::NullPointer, "null json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| fail(LmdStatus::InvalidUtf8, "json is not UTF-8"))?;
        put(out, LmdGraph(parse_graph(text).map_err(lib)?))
    })
}

/// Builds an unweighted graph on `n` vertices from `m` edges given as
/// `2 * m` endpoint ids.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or be NULL when `m` is
/// 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lmd_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut LmdGraph,
) -> LmdStatus {
    guard(|| {
        let flat = slice(edges, m * 2)?;
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|e| (e[0], e[1])).collect();
        put(out, LmdGraph(Graph::new(n, &pairs).map_err(lib)?))
    })
}

/// # Safety
/// `g` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lmd_graph_free(g: *mut LmdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lmd_graph_order(g: *const LmdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Number of edges, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lmd_graph_size(g: *const LmdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.size())
}

/// Serializes `g`. Release the string with [`lmd_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lmd_graph_to_json(g: *const LmdGraph, out: *mut *mut c_char) -> LmdStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(fail(LmdStatus::NullPointer, "null output pointer"));
        }
        *out = CString::new(graph_to_json(g)).expect("JSON has no NUL").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lmd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Exact dimension of `g`. `kind` is an [`LmdKind`] value; `u` and `u_len`
/// give the root set for `LMD_KIND_U_LOCAL` and are ignored otherwise.
/// `threads` is 1 for a sequential search, 0 for every core.
///
/// # Safety
/// `g` must be a live handle, `u` must point to `u_len` readable values
/// when used, and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lmd_find_dimension(
    g: *const LmdGraph,
    kind: u32,
    u: *const usize,
    u_len: usize,
    threads: usize,
    out: *mut *mut LmdDimension,
) -> LmdStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let kind = match kind {
            k if k == LmdKind::Metric as u32 => DimensionKind::Metric,
            k if k == LmdKind::Local as u32 => DimensionKind::Local,
            k if k == LmdKind::ULocal as u32 => {
                let members = slice(u, u_len)?.to_vec();
                DimensionKind::ULocal(VertexSubset::nonempty(members, g.order()).map_err(lib)?)
            }
            k => return Err(fail(LmdStatus::BadParameter, format!("unknown kind {k}"))),
        };
        let opts = SearchOptions {
            threads,
            ..SearchOptions::default()
        };
        put(out, LmdDimension(find_dimension(g, &kind, &opts).map_err(lib)?))
    })
}

/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lmd_dimension_value(d: *const LmdDimension) -> usize {
    d.as_ref().map_or(0, |d| d.0.value)
}

/// The lexicographically least basis. Writes its length to `len` and returns
/// a pointer owned by `d`.
///
/// # Safety
/// `d` must be a live handle and `len` writable.
#[no_mangle]
pub unsafe extern "C" fn lmd_dimension_basis(d: *const LmdDimension, len: *mut usize) -> *const usize {
    let Some(d) = d.as_ref() else {
        return ptr::null();
    };
    if let Some(len) = len.as_mut() {
        *len = d.0.basis.len();
    }
    d.0.basis.members().as_ptr()
}

/// # Safety
/// `d` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lmd_dimension_free(d: *mut LmdDimension) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// G(U) ⊓ H with product vertex `(g, h)` at id `g * n(H) + h`.
///
/// # Safety
/// `g` and `h` must be live handles, `u` must point to `u_len` readable
/// values, and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lmd_hierarchical_product(
    g: *const LmdGraph,
    u: *const usize,
    u_len: usize,
    h: *const LmdGraph,
    out: *mut *mut LmdGraph,
) -> LmdStatus {
    guard(|| {
        let (g, h) = (graph_ref(g)?, graph_ref(h)?);
        let u = VertexSubset::nonempty(slice(u, u_len)?.to_vec(), g.order()).map_err(lib)?;
        let spec = ProductSpec::new(g.clone(), u, h.clone()).map_err(lib)?;
        put(out, LmdGraph(hierarchical_product(&spec).map_err(lib)?.into_graph()))
    })
}
