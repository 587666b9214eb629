//! C ABI for `twinid`.
//!
//! Graphs cross the boundary as opaque `TwinidGraph` handles owned by the
//! caller and released with `twinid_graph_free`. Every fallible call returns a
//! `TwinidStatus`; on failure a message is available from
//! `twinid_last_error_message` until the next call on the same thread.
//! Strings returned by this library are released with `twinid_string_free`.
//!
//! Vertex indices are 0-based `size_t`, colors are positive `uint32_t`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use twinid::bounds::verify_bounds;
use twinid::constructions::{gen_hext, gen_hp, gen_htt, gen_random};
use twinid::{
    chi, is_valid_coloring, min_identifying_code, quotient, Coloring, Error, Graph, SolverConfig,
    TwinPartition, Variant,
};

/// Opaque graph handle.
pub struct TwinidGraph(Graph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinidStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    InstanceTooLarge = 4,
    InvalidColoring = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinidVariant {
    Id = 0,
    Lid = 1,
    Rlid = 2,
}

impl From<TwinidVariant> for Variant {
    fn from(v: TwinidVariant) -> Self {
        match v {
            TwinidVariant::Id => Variant::Id,
            TwinidVariant::Lid => Variant::Lid,
            TwinidVariant::Rlid => Variant::Rlid,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_of(e: &Error) -> TwinidStatus {
    match e {
        Error::Parse { .. } => TwinidStatus::ParseError,
        Error::InstanceTooLarge { .. } => TwinidStatus::InstanceTooLarge,
        Error::InvalidColoring { .. } => TwinidStatus::InvalidColoring,
        _ => TwinidStatus::InvalidArgument,
    }
}

struct Fail(TwinidStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(TwinidStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `body`, recording the error message and mapping panics to `Panic`.
fn guarded(body: impl FnOnce() -> Result<(), Fail>) -> TwinidStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => TwinidStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            TwinidStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const TwinidGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|h| &h.0).ok_or_else(|| null("graph"))
}

unsafe fn emit_graph(out: *mut *mut TwinidGraph, g: Graph) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(TwinidGraph(g)));
    Ok(())
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s).expect("no interior NUL").into_raw();
    Ok(())
}

fn config(force: bool) -> SolverConfig {
    SolverConfig {
        force,
        ..SolverConfig::default()
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn twinid_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn twinid_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn twinid_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be NULL when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twinid_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut TwinidGraph,
) -> TwinidStatus {
    guarded(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let g = Graph::new(n, flat.chunks_exact(2).map(|e| (e[0], e[1])))?;
        emit_graph(out, g)
    })
}

/// Parses edge-list or DIMACS text.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twinid_graph_parse(
    text: *const c_char,
    out: *mut *mut TwinidGraph,
) -> TwinidStatus {
    guarded(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Fail(TwinidStatus::ParseError, "text is not UTF-8".into()))?;
        emit_graph(out, Graph::parse(text)?)
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn twinid_graph_free(g: *mut TwinidGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn twinid_graph_vertex_count(g: *const TwinidGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.vertex_count())
}

/// Edge count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn twinid_graph_edge_count(g: *const TwinidGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.edge_count())
}

/// Canonical edge-list text; free with `twinid_string_free`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twinid_graph_to_edge_list(
    g: *const TwinidGraph,
    out: *mut *mut c_char,
) -> TwinidStatus {
    guarded(|| emit_string(out, graph_ref(g)?.to_edge_list()))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twinid_gen_hp(p: usize, out: *mut *mut TwinidGraph) -> TwinidStatus {
    guarded(|| emit_graph(out, gen_hp(p)?.graph))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twinid_gen_hext(a: usize, out: *mut *mut TwinidGraph) -> TwinidStatus {
    guarded(|| emit_graph(out, gen_hext(a)?.graph))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twinid_gen_htt(
    p: usize,
    big_t: usize,
    t: usize,
    out: *mut *mut TwinidGraph,
) -> TwinidStatus {
    guarded(|| emit_graph(out, gen_htt(p, big_t, t)?.graph))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twinid_gen_random(
    n: usize,
    prob: f64,
    seed: u64,
    out: *mut *mut TwinidGraph,
) -> TwinidStatus {
    guarded(|| emit_graph(out, gen_random(n, prob, seed)?))
}

/// Twin statistics. Any output pointer may be NULL. `class_of`, when given,
/// receives the class index of each of the `n` vertices.
///
/// # Safety
/// `g` must be a live handle; non-NULL outputs must be writable, and
/// `class_of` must have room for `twinid_graph_vertex_count(g)` entries.
#[no_mangle]
pub unsafe extern "C" fn twinid_twin_partition(
    g: *const TwinidGraph,
    class_count: *mut usize,
    nontrivial: *mut usize,
    max_class_size: *mut usize,
    class_of: *mut usize,
) -> TwinidStatus {
    guarded(|| {
        let g = graph_ref(g)?;
        let p = TwinPartition::of(g);
        if !class_count.is_null() {
            *class_count = p.class_count();
        }
        if !nontrivial.is_null() {
            *nontrivial = p.nontrivial_count();
        }
        if !max_class_size.is_null() {
            *max_class_size = p.max_class_size();
        }
        if !class_of.is_null() {
            for v in g.vertices() {
                *class_of.add(v) = p.class_of(v);
            }
        }
        Ok(())
    })
}

/// Twin quotient as a new handle. `projection`, when non-NULL, receives the
/// quotient vertex of each original vertex.
///
/// # Safety
/// `g` must be a live handle; `out` writable; `projection` NULL or room for
/// `twinid_graph_vertex_count(g)` entries.
#[no_mangle]
pub unsafe extern "C" fn twinid_quotient(
    g: *const TwinidGraph,
    out: *mut *mut TwinidGraph,
    projection: *mut usize,
) -> TwinidStatus {
    guarded(|| {
        let q = quotient(graph_ref(g)?);
        if !projection.is_null() {
            for (v, &x) in q.projection.iter().enumerate() {
                *projection.add(v) = x;
            }
        }
        emit_graph(out, q.quotient)
    })
}

/// Checks a coloring (`len` positive colors, one per vertex).
///
/// # Safety
/// `g` must be a live handle; `colors` must hold `len` values; `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn twinid_check_coloring(
    g: *const TwinidGraph,
    variant: TwinidVariant,
    colors: *const u32,
    len: usize,
    valid: *mut bool,
) -> TwinidStatus {
    guarded(|| {
        let g = graph_ref(g)?;
        if colors.is_null() && len > 0 {
            return Err(null("colors"));
        }
        if valid.is_null() {
            return Err(null("valid"));
        }
        let slice = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(colors, len)
        };
        let c = Coloring::new(slice.to_vec())?;
        *valid = is_valid_coloring(g, &c, variant.into())?;
        Ok(())
    })
}

/// Exact optimum for `variant`. `colors`, when non-NULL, receives the witness.
///
/// # Safety
/// `g` must be a live handle; `optimum` writable; `colors` NULL or room for
/// `twinid_graph_vertex_count(g)` entries.
#[no_mangle]
pub unsafe extern "C" fn twinid_solve(
    g: *const TwinidGraph,
    variant: TwinidVariant,
    force: bool,
    optimum: *mut usize,
    colors: *mut u32,
) -> TwinidStatus {
    guarded(|| {
        if optimum.is_null() {
            return Err(null("optimum"));
        }
        let report = chi(graph_ref(g)?, variant.into(), &config(force))?;
        *optimum = report.optimum;
        if !colors.is_null() {
            for (v, &c) in report.coloring().as_slice().iter().enumerate() {
                *colors.add(v) = c;
            }
        }
        Ok(())
    })
}

/// Same as `twinid_solve` but returns the full JSON report; free with
/// `twinid_string_free`.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn twinid_solve_json(
    g: *const TwinidGraph,
    variant: TwinidVariant,
    force: bool,
    out: *mut *mut c_char,
) -> TwinidStatus {
    guarded(|| {
        let report = chi(graph_ref(g)?, variant.into(), &config(force))?;
        emit_string(out, report.to_json())
    })
}

/// Minimum twin-aware identifying code. `members`, when non-NULL, receives a
/// 0/1 flag per vertex.
///
/// # Safety
/// `g` must be a live handle; `size` writable; `members` NULL or room for
/// `twinid_graph_vertex_count(g)` bytes.
#[no_mangle]
pub unsafe extern "C" fn twinid_min_identifying_code(
    g: *const TwinidGraph,
    strict: bool,
    force: bool,
    size: *mut usize,
    members: *mut u8,
) -> TwinidStatus {
    guarded(|| {
        if size.is_null() {
            return Err(null("size"));
        }
        let g = graph_ref(g)?;
        let cfg = SolverConfig {
            strict_codes: strict,
            ..config(force)
        };
        let report = min_identifying_code(g, &cfg)?;
        *size = report.optimum;
        if !members.is_null() {
            let code = report.witness.as_code().expect("code witness");
            for v in g.vertices() {
                *members.add(v) = u8::from(code.contains(v));
            }
        }
        Ok(())
    })
}

/// Bounds report for `g` and its quotient as JSON; free with
/// `twinid_string_free`.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn twinid_verify_bounds_json(
    g: *const TwinidGraph,
    variant: TwinidVariant,
    force: bool,
    out: *mut *mut c_char,
) -> TwinidStatus {
    guarded(|| {
        let report = verify_bounds(graph_ref(g)?, variant.into(), &config(force))?;
        emit_string(out, report.to_json())
    })
}
