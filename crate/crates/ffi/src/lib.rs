//! C ABI over `fraccomp`.
//!
//! Every function returns an `int32_t` status (`FC_OK` or a negative
//! `FC_ERR_*` code). On failure the message is available from
//! `fc_last_error` until the next call on the same thread. Strings returned
//! through out-pointers are owned by the caller and released with
//! `fc_string_free`; handles are released with their `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString, OsString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fraccomp::graphapps::{budget_cover, fractional_chromatic, kappa_f, parse_graph, Graph};
use fraccomp::hypergraph::{format_hypergraph, parse_hypergraph, verify_hypergraph_complementation, Hypergraph, ParamKind};
use fraccomp::lpcomp::{complement, verify_complementation};
use fraccomp::ratlp::{format_lp, parse_lp, solve, LinearProgram, LpOutcome, Rational};
use fraccomp::{Error, Limits};

pub const FC_OK: i32 = 0;
pub const FC_ERR_NULL: i32 = -1;
pub const FC_ERR_UTF8: i32 = -2;
pub const FC_ERR_PARSE: i32 = -3;
pub const FC_ERR_BUDGET: i32 = -4;
pub const FC_ERR_DOMAIN: i32 = -5;
pub const FC_ERR_PANIC: i32 = -6;
pub const FC_ERR_INVALID: i32 = -7;

pub const FC_LP_OPTIMAL: i32 = 0;
pub const FC_LP_INFEASIBLE: i32 = 1;
pub const FC_LP_UNBOUNDED: i32 = 2;

pub const FC_PARAM_COVERING: u32 = 0;
pub const FC_PARAM_PACKING: u32 = 1;
pub const FC_PARAM_MATCHING: u32 = 2;
pub const FC_PARAM_TRANSVERSAL: u32 = 3;

/// A parsed linear program.
pub struct FcLp {
    inner: LinearProgram,
}

/// A parsed hypergraph.
pub struct FcHypergraph {
    inner: Hypergraph,
}

/// A parsed simple graph.
pub struct FcGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => FC_ERR_PARSE,
            Error::BudgetExceeded { .. } => FC_ERR_BUDGET,
            Error::InvalidArgument(_) | Error::OutOfRange { .. } | Error::DimensionMismatch(_) => FC_ERR_INVALID,
            _ => FC_ERR_DOMAIN,
        };
        Failure(code, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(FC_ERR_NULL, format!("null pointer: {what}"))
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            FC_OK
        }
        Ok(Err(Failure(code, msg))) => {
            set_error(&msg);
            code
        }
        Err(_) => {
            set_error("panic inside fraccomp");
            FC_ERR_PANIC
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(FC_ERR_UTF8, format!("{what} is not valid UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Failure(FC_ERR_INVALID, "string contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

fn limits(max_enum: u64) -> Result<Limits, Failure> {
    if max_enum == 0 {
        Ok(Limits::default())
    } else {
        Ok(Limits::new(max_enum)?)
    }
}

fn fmt_rat(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Message for the last failing call on this thread, or an empty string.
/// The pointer stays valid until the next `fc_*` call on the same thread.
#[no_mangle]
pub extern "C" fn fc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn fc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Runs the command line with `argv` (without the program name) and returns
/// its stdout in `out_json` and its exit code in `out_exit`.
///
/// # Safety
/// `argv` must point to `argc` valid C strings.
#[no_mangle]
pub unsafe extern "C" fn fc_run_json(
    argc: usize,
    argv: *const *const c_char,
    out_json: *mut *mut c_char,
    out_exit: *mut i32,
) -> i32 {
    guard(|| {
        if out_exit.is_null() {
            return Err(null("out_exit"));
        }
        if argc > 0 && argv.is_null() {
            return Err(null("argv"));
        }
        let mut args = vec![OsString::from("fraccomp")];
        for i in 0..argc {
            args.push(read_str(*argv.add(i), "argv element")?.into());
        }
        let (code, text) = fraccomp::cli::run(args);
        write_string(out_json, text)?;
        *out_exit = code;
        Ok(())
    })
}

/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_lp_parse(text: *const c_char, out: *mut *mut FcLp) -> i32 {
    guard(|| {
        let lp = parse_lp(read_str(text, "text")?)?;
        write_handle(out, FcLp { inner: lp })
    })
}

/// # Safety
/// `lp` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn fc_lp_free(lp: *mut FcLp) {
    if !lp.is_null() {
        drop(Box::from_raw(lp));
    }
}

/// # Safety
/// `lp` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_lp_format(lp: *const FcLp, out: *mut *mut c_char) -> i32 {
    guard(|| write_string(out, format_lp(&borrow(lp, "lp")?.inner)))
}

/// Writes the complementary program as a new handle.
///
/// # Safety
/// `lp` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_lp_complement(lp: *const FcLp, out: *mut *mut FcLp) -> i32 {
    guard(|| {
        let c = complement(&borrow(lp, "lp")?.inner);
        write_handle(out, FcLp { inner: c })
    })
}

/// Solves exactly. `out_outcome` receives an `FC_LP_*` code; on optimality
/// `out_value` receives `"num/den"`, otherwise it is set to null.
///
/// # Safety
/// `lp` must be a live handle; both out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_lp_solve(lp: *const FcLp, out_outcome: *mut i32, out_value: *mut *mut c_char) -> i32 {
    guard(|| {
        if out_outcome.is_null() || out_value.is_null() {
            return Err(null("out"));
        }
        match solve(&borrow(lp, "lp")?.inner) {
            LpOutcome::Optimal { value, .. } => {
                *out_outcome = FC_LP_OPTIMAL;
                write_string(out_value, fmt_rat(&value))?;
            }
            LpOutcome::Infeasible => {
                *out_outcome = FC_LP_INFEASIBLE;
                *out_value = ptr::null_mut();
            }
            LpOutcome::Unbounded => {
                *out_outcome = FC_LP_UNBOUNDED;
                *out_value = ptr::null_mut();
            }
        }
        Ok(())
    })
}

/// Checks the complementation statements for `lp`. `out_holds` is 1 when
/// every applicable check passes and 0 otherwise.
///
/// # Safety
/// `lp` must be a live handle; `out_holds` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_lp_verify_complementation(lp: *const FcLp, out_holds: *mut i32) -> i32 {
    guard(|| {
        if out_holds.is_null() {
            return Err(null("out_holds"));
        }
        let r = verify_complementation(&borrow(lp, "lp")?.inner);
        let ok = r.above_one_agrees && r.identity_holds != Some(false) && r.lemma_holds != Some(false);
        *out_holds = ok as i32;
        Ok(())
    })
}

/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_hypergraph_parse(text: *const c_char, out: *mut *mut FcHypergraph) -> i32 {
    guard(|| {
        let h = parse_hypergraph(read_str(text, "text")?)?;
        write_handle(out, FcHypergraph { inner: h })
    })
}

/// # Safety
/// `h` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn fc_hypergraph_free(h: *mut FcHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_hypergraph_format(h: *const FcHypergraph, out: *mut *mut c_char) -> i32 {
    guard(|| write_string(out, format_hypergraph(&borrow(h, "h")?.inner)))
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_hypergraph_dual(h: *const FcHypergraph, out: *mut *mut FcHypergraph) -> i32 {
    guard(|| write_handle(out, FcHypergraph { inner: borrow(h, "h")?.inner.dual() }))
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_hypergraph_complement(h: *const FcHypergraph, out: *mut *mut FcHypergraph) -> i32 {
    guard(|| write_handle(out, FcHypergraph { inner: borrow(h, "h")?.inner.complement() }))
}

/// Fractional parameter `kind` (an `FC_PARAM_*` value) as `"num/den"`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_hypergraph_fractional(h: *const FcHypergraph, kind: u32, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let kind = match kind {
            FC_PARAM_COVERING => ParamKind::Covering,
            FC_PARAM_PACKING => ParamKind::Packing,
            FC_PARAM_MATCHING => ParamKind::Matching,
            FC_PARAM_TRANSVERSAL => ParamKind::Transversal,
            other => return Err(Failure(FC_ERR_INVALID, format!("unknown parameter kind {other}"))),
        };
        let v = borrow(h, "h")?.inner.fractional_param(kind)?;
        write_string(out, fmt_rat(&v))
    })
}

/// Checks the dual/complement parameter identities. `out_holds` is 1 when
/// every defined identity holds.
///
/// # Safety
/// `h` must be a live handle; `out_holds` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_hypergraph_verify(h: *const FcHypergraph, out_holds: *mut i32) -> i32 {
    guard(|| {
        if out_holds.is_null() {
            return Err(null("out_holds"));
        }
        let r = verify_hypergraph_complementation(&borrow(h, "h")?.inner)?;
        *out_holds = r.all_defined_hold() as i32;
        Ok(())
    })
}

/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_graph_parse(text: *const c_char, out: *mut *mut FcGraph) -> i32 {
    guard(|| {
        let g = parse_graph(read_str(text, "text")?)?;
        write_handle(out, FcGraph { inner: g })
    })
}

/// # Safety
/// `g` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn fc_graph_free(g: *mut FcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Fractional chromatic number as `"num/den"`. `max_enum` of 0 selects the
/// default enumeration budget.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_graph_fractional_chromatic(g: *const FcGraph, max_enum: u64, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let v = fractional_chromatic(&borrow(g, "g")?.inner, &limits(max_enum)?)?;
        write_string(out, fmt_rat(&v))
    })
}

/// `κ_f` of the vertex cover hypergraph as `"num/den"`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_graph_kappa(g: *const FcGraph, max_enum: u64, out: *mut *mut c_char) -> i32 {
    guard(|| {
        let r = kappa_f(&borrow(g, "g")?.inner, &limits(max_enum)?)?;
        write_string(out, fmt_rat(&r.kappa))
    })
}

/// Length of the longest family of vertex covers with budget `b`.
///
/// # Safety
/// `g` must be a live handle; `out_t` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_graph_budget(g: *const FcGraph, b: usize, max_enum: u64, out_t: *mut usize) -> i32 {
    guard(|| {
        if out_t.is_null() {
            return Err(null("out_t"));
        }
        let r = budget_cover(&borrow(g, "g")?.inner, b, &limits(max_enum)?)?;
        *out_t = r.t;
        Ok(())
    })
}
