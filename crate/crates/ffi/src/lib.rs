//! C ABI for embedding the layout engine: opaque graph and layout handles,
//! integer status codes, and a thread-local message describing the last
//! failure. The generated header lives at `include/ldraw.h`.
//!
//! Conventions: every pointer argument must be non-null unless a function
//! documents otherwise; constructors hand ownership to the caller through an
//! out-parameter, released with the matching `ld_*_free`. Handles carry no
//! internal locking; confine each to one thread or guard it externally.
//! Strings returned through out-parameters are NUL-terminated UTF-8 owned by
//! the caller and released with [`ld_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ldrawing::exact::{exact_layout, ExactMethod};
use ldrawing::graph::{parse_graph, random_connected_gnm};
use ldrawing::incremental::{expand_run_seed, incremental_draw};
use ldrawing::layout::{compute_ink, random_layout, Layout};
use ldrawing::lp::emit_lp;
use ldrawing::render::{render_svg, RenderStyle};
use ldrawing::{Axis, DirectedGraph, Error};

/// Result of every fallible call. Non-`Ok` values leave a human-readable
/// explanation in [`ld_last_error_message`].
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LdStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Graph text could not be parsed.
    ParseError = 3,
    /// Arguments were structurally invalid (mismatched sizes, bad ranges).
    InvalidInput = 4,
    /// The requested graph cannot exist (density infeasible, disconnected).
    Infeasible = 5,
    /// The instance exceeds an exact-method size guard.
    SizeGuard = 6,
    /// A defect inside the library; please report the message.
    Internal = 7,
}

/// Axis selector for the ILP emitter.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LdAxis {
    X = 0,
    Y = 1,
}

impl From<LdAxis> for Axis {
    fn from(axis: LdAxis) -> Self {
        match axis {
            LdAxis::X => Axis::X,
            LdAxis::Y => Axis::Y,
        }
    }
}

/// Pixel geometry for [`ld_render_svg`]. Obtain defaults from
/// [`ld_render_style_default`] and adjust fields as needed.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct LdRenderStyle {
    /// Pixels per grid unit.
    pub cell: f64,
    /// Radius of the quarter-circle bend junctions.
    pub junction: f64,
    /// Radius of the vertex circles.
    pub vertex_radius: f64,
    /// Arrowhead length.
    pub arrow: f64,
    /// Stroke width of edge segments.
    pub stroke: f64,
    /// Label font size.
    pub font: f64,
    /// Draw vertex labels inside the circles.
    pub labels: bool,
}

impl From<LdRenderStyle> for RenderStyle {
    fn from(style: LdRenderStyle) -> Self {
        Self {
            cell: style.cell,
            junction: style.junction,
            vertex_radius: style.vertex_radius,
            arrow: style.arrow,
            stroke: style.stroke,
            font: style.font,
            labels: style.labels,
        }
    }
}

/// Opaque directed graph handle.
pub struct LdGraph {
    inner: DirectedGraph,
}

/// Opaque layout handle: one exclusive grid position per vertex.
pub struct LdLayout {
    inner: Layout,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let stored = CString::new(message).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn report(err: Error) -> LdStatus {
    let status = match &err {
        Error::Parse { .. } | Error::UnknownVertex(_) => LdStatus::ParseError,
        Error::Disconnected | Error::DensityInfeasible { .. } => LdStatus::Infeasible,
        Error::SizeGuard { .. } => LdStatus::SizeGuard,
        Error::Io(_) => LdStatus::Internal,
        _ => LdStatus::InvalidInput,
    };
    set_last_error(err.to_string());
    status
}

fn null_argument() -> LdStatus {
    set_last_error("null pointer argument".to_string());
    LdStatus::NullArgument
}

/// Catches panics so they cannot unwind across the C boundary.
fn guarded(body: impl FnOnce() -> LdStatus) -> LdStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|_| {
        set_last_error("internal panic".to_string());
        LdStatus::Internal
    })
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) {
    // SAFETY: caller checked `out` is non-null and writable.
    unsafe { *out = Box::into_raw(Box::new(value)) };
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> LdStatus {
    match CString::new(text) {
        Ok(text) => {
            // SAFETY: caller checked `out` is non-null and writable.
            unsafe { *out = text.into_raw() };
            LdStatus::Ok
        }
        Err(_) => {
            set_last_error("produced text contains an interior NUL".to_string());
            LdStatus::Internal
        }
    }
}

/// Explains the most recent non-`Ok` status on this thread, or null before
/// the first failure. The pointer stays valid until the next failing call
/// on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn ld_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |message| message.as_ptr())
    })
}

/// Parses edge-list or DOT digraph text into a new graph handle.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable. On `Ok`
/// the caller owns `*out` and releases it with [`ld_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn ld_graph_parse(
    text: *const c_char,
    out: *mut *mut LdGraph,
) -> LdStatus {
    if text.is_null() || out.is_null() {
        return null_argument();
    }
    // SAFETY: `text` is a valid NUL-terminated string per the contract.
    let text = unsafe { CStr::from_ptr(text) };
    guarded(|| {
        let Ok(text) = text.to_str() else {
            set_last_error("graph text is not valid UTF-8".to_string());
            return LdStatus::InvalidUtf8;
        };
        match parse_graph(text) {
            Ok(graph) => {
                // SAFETY: `out` checked non-null above.
                unsafe { write_handle(out, LdGraph { inner: graph }) };
                LdStatus::Ok
            }
            Err(err) => report(err),
        }
    })
}

/// Generates a random weakly connected digraph with `n` vertices and
/// `n(n-1) * density_percent / 100` edges, deterministic in `seed`.
///
/// # Safety
/// `out` must be writable. On `Ok` the caller owns `*out` and releases it
/// with [`ld_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn ld_graph_generate(
    n: usize,
    density_percent: u32,
    seed: u64,
    out: *mut *mut LdGraph,
) -> LdStatus {
    if out.is_null() {
        return null_argument();
    }
    guarded(|| match random_connected_gnm(n, density_percent, seed) {
        Ok(graph) => {
            // SAFETY: `out` checked non-null above.
            unsafe { write_handle(out, LdGraph { inner: graph }) };
            LdStatus::Ok
        }
        Err(err) => report(err),
    })
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `graph` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn ld_graph_vertex_count(graph: *const LdGraph) -> usize {
    // SAFETY: non-null implies a live handle per the contract.
    unsafe { graph.as_ref() }.map_or(0, |g| g.inner.vertex_count())
}

/// Number of directed edges, or 0 for a null handle.
///
/// # Safety
/// `graph` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn ld_graph_edge_count(graph: *const LdGraph) -> usize {
    // SAFETY: non-null implies a live handle per the contract.
    unsafe { graph.as_ref() }.map_or(0, |g| g.inner.edge_count())
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `graph` must be a handle from this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn ld_graph_free(graph: *mut LdGraph) {
    if !graph.is_null() {
        // SAFETY: the handle came from `Box::into_raw` and is freed once.
        drop(unsafe { Box::from_raw(graph) });
    }
}

/// Draws the graph by randomized-BFS vertex insertion, each vertex at its
/// minimum-additional-ink position. Deterministic in `seed`; equal seeds
/// reproduce the CLI's `layout --seed` and the benchmark harness.
///
/// # Safety
/// `graph` must be a live handle, `out` writable. On `Ok` the caller owns
/// `*out` and releases it with [`ld_layout_free`].
#[no_mangle]
pub unsafe extern "C" fn ld_layout_incremental(
    graph: *const LdGraph,
    seed: u64,
    out: *mut *mut LdLayout,
) -> LdStatus {
    // SAFETY: non-null implies a live handle per the contract.
    let Some(graph) = (unsafe { graph.as_ref() }) else {
        return null_argument();
    };
    if out.is_null() {
        return null_argument();
    }
    guarded(|| {
        let n = graph.inner.vertex_count();
        let drawn = if n == 0 {
            Layout::new(vec![], vec![])
        } else {
            let (start, order_seed) = expand_run_seed(n, seed);
            incremental_draw(&graph.inner, start, order_seed)
        };
        match drawn {
            Ok(layout) => {
                // SAFETY: `out` checked non-null above.
                unsafe { write_handle(out, LdLayout { inner: layout }) };
                LdStatus::Ok
            }
            Err(err) => report(err),
        }
    })
}

/// Computes a minimum-ink layout by per-axis dynamic programming over
/// vertex subsets. Refuses graphs past the built-in size guard unless
/// `force` is set.
///
/// # Safety
/// `graph` must be a live handle, `out` writable. On `Ok` the caller owns
/// `*out` and releases it with [`ld_layout_free`].
#[no_mangle]
pub unsafe extern "C" fn ld_layout_exact(
    graph: *const LdGraph,
    force: bool,
    out: *mut *mut LdLayout,
) -> LdStatus {
    // SAFETY: non-null implies a live handle per the contract.
    let Some(graph) = (unsafe { graph.as_ref() }) else {
        return null_argument();
    };
    if out.is_null() {
        return null_argument();
    }
    guarded(|| match exact_layout(&graph.inner, ExactMethod::SubsetDp, force) {
        Ok((layout, _)) => {
            // SAFETY: `out` checked non-null above.
            unsafe { write_handle(out, LdLayout { inner: layout }) };
            LdStatus::Ok
        }
        Err(err) => report(err),
    })
}

/// Places the vertices with uniformly random independent row and column
/// permutations, deterministic in `seed`. The baseline layouts in the
/// benchmark harness come from this generator.
///
/// # Safety
/// `graph` must be a live handle, `out` writable. On `Ok` the caller owns
/// `*out` and releases it with [`ld_layout_free`].
#[no_mangle]
pub unsafe extern "C" fn ld_layout_random(
    graph: *const LdGraph,
    seed: u64,
    out: *mut *mut LdLayout,
) -> LdStatus {
    // SAFETY: non-null implies a live handle per the contract.
    let Some(graph) = (unsafe { graph.as_ref() }) else {
        return null_argument();
    };
    if out.is_null() {
        return null_argument();
    }
    guarded(|| {
        let layout = random_layout(graph.inner.vertex_count(), seed);
        // SAFETY: `out` checked non-null above.
        unsafe { write_handle(out, LdLayout { inner: layout }) };
        LdStatus::Ok
    })
}

/// Number of placed vertices, or 0 for a null handle.
///
/// # Safety
/// `layout` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn ld_layout_vertex_count(layout: *const LdLayout) -> usize {
    // SAFETY: non-null implies a live handle per the contract.
    unsafe { layout.as_ref() }.map_or(0, |l| l.inner.vertex_count())
}

/// Reads the column and row of one vertex (1-based grid coordinates).
///
/// # Safety
/// `layout` must be a live handle; `x` and `y` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ld_layout_position(
    layout: *const LdLayout,
    vertex: usize,
    x: *mut usize,
    y: *mut usize,
) -> LdStatus {
    // SAFETY: non-null implies a live handle per the contract.
    let Some(layout) = (unsafe { layout.as_ref() }) else {
        return null_argument();
    };
    if x.is_null() || y.is_null() {
        return null_argument();
    }
    let n = layout.inner.vertex_count();
    if vertex >= n {
        set_last_error(format!("vertex {vertex} out of range for {n} vertices"));
        return LdStatus::InvalidInput;
    }
    // SAFETY: out-pointers checked non-null above.
    unsafe {
        *x = layout.inner.x(vertex);
        *y = layout.inner.y(vertex);
    }
    LdStatus::Ok
}

/// Releases a layout handle. Null is ignored.
///
/// # Safety
/// `layout` must be a handle from this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn ld_layout_free(layout: *mut LdLayout) {
    if !layout.is_null() {
        // SAFETY: the handle came from `Box::into_raw` and is freed once.
        drop(unsafe { Box::from_raw(layout) });
    }
}

/// Measures the ink of a drawing: total grid length of the union of all
/// edge segments, split into horizontal and vertical contributions.
///
/// # Safety
/// `graph` and `layout` must be live handles; the out-pointers must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ld_ink(
    graph: *const LdGraph,
    layout: *const LdLayout,
    total: *mut u64,
    horizontal: *mut u64,
    vertical: *mut u64,
) -> LdStatus {
    // SAFETY: non-null implies live handles per the contract.
    let (Some(graph), Some(layout)) = (unsafe { graph.as_ref() }, unsafe { layout.as_ref() })
    else {
        return null_argument();
    };
    if total.is_null() || horizontal.is_null() || vertical.is_null() {
        return null_argument();
    }
    guarded(|| match compute_ink(&graph.inner, &layout.inner) {
        Ok(ink) => {
            // SAFETY: out-pointers checked non-null above.
            unsafe {
                *total = ink.ink;
                *horizontal = ink.ink_x;
                *vertical = ink.ink_y;
            }
            LdStatus::Ok
        }
        Err(err) => report(err),
    })
}

/// The default pixel geometry used by the CLI.
#[no_mangle]
pub extern "C" fn ld_render_style_default() -> LdRenderStyle {
    let style = RenderStyle::default();
    LdRenderStyle {
        cell: style.cell,
        junction: style.junction,
        vertex_radius: style.vertex_radius,
        arrow: style.arrow,
        stroke: style.stroke,
        font: style.font,
        labels: style.labels,
    }
}

/// Renders the drawing to SVG text. A null `style` selects the defaults.
///
/// # Safety
/// `graph` and `layout` must be live handles; `style` must be null or point
/// to a valid style; `out` must be writable. On `Ok` the caller owns `*out`
/// and releases it with [`ld_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ld_render_svg(
    graph: *const LdGraph,
    layout: *const LdLayout,
    style: *const LdRenderStyle,
    out: *mut *mut c_char,
) -> LdStatus {
    // SAFETY: non-null implies live handles per the contract.
    let (Some(graph), Some(layout)) = (unsafe { graph.as_ref() }, unsafe { layout.as_ref() })
    else {
        return null_argument();
    };
    if out.is_null() {
        return null_argument();
    }
    // SAFETY: non-null implies a valid style per the contract.
    let style = unsafe { style.as_ref() }.map_or_else(RenderStyle::default, |s| (*s).into());
    guarded(|| match render_svg(&graph.inner, &layout.inner, &style) {
        // SAFETY: `out` checked non-null above.
        Ok(svg) => unsafe { write_string(out, svg) },
        Err(err) => report(err),
    })
}

/// Writes the one-axis minimum-ink ILP in CPLEX LP text format.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable. On `Ok` the
/// caller owns `*out` and releases it with [`ld_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ld_emit_lp(
    graph: *const LdGraph,
    axis: LdAxis,
    out: *mut *mut c_char,
) -> LdStatus {
    // SAFETY: non-null implies a live handle per the contract.
    let Some(graph) = (unsafe { graph.as_ref() }) else {
        return null_argument();
    };
    if out.is_null() {
        return null_argument();
    }
    // SAFETY: `out` checked non-null above.
    guarded(|| unsafe { write_string(out, emit_lp(&graph.inner, axis.into())) })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `text` must be a string from this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn ld_string_free(text: *mut c_char) {
    if !text.is_null() {
        // SAFETY: the string came from `CString::into_raw` and is freed once.
        drop(unsafe { CString::from_raw(text) });
    }
}
