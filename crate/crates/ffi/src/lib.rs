//! C ABI over the `plucking` crate.
//!
//! Objects cross the boundary as opaque handles that the caller releases with
//! the matching `pk_*_free`. Fallible calls return a [`PkStatus`] and write
//! their result through an out-pointer; on failure a message is available from
//! [`pk_last_error_message`] on the same thread. Strings returned by the
//! library are released with [`pk_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, size_t};

use plucking::plucking::{family_1_4k_1, hedgehog_anti_unimodal, DelayedHedgehog, Plucker};
use plucking::qpoly::{factor_quantum, is_strictly_unimodal, is_symmetric, is_unimodal};
use plucking::tree::{parse_delayed_tree, parse_tree, serialize_delayed_tree, serialize_tree};
use plucking::{DelayAssignment, DelayedTree, PlaneRootedTree, QPolynomial};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Overflow = 5,
    Panic = 6,
}

/// A polynomial in `q` with integer coefficients.
pub struct PkPoly(QPolynomial);

/// A plane rooted tree.
pub struct PkTree(PlaneRootedTree);

/// A plane rooted tree with a delay value on every leaf.
pub struct PkDelayedTree(DelayedTree);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl ToString) {
    let text = message.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: PkStatus, message: impl ToString) -> PkStatus {
    set_error(message);
    status
}

/// Runs `body`, converting panics into `PkStatus::Panic`.
fn guarded(body: impl FnOnce() -> PkStatus) -> PkStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(PkStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, PkStatus> {
    if text.is_null() {
        return Err(fail(PkStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|e| fail(PkStatus::InvalidUtf8, e))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> PkStatus {
    *out = Box::into_raw(Box::new(value));
    PkStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> PkStatus {
    match CString::new(text) {
        Ok(s) => {
            *out = s.into_raw();
            PkStatus::Ok
        }
        Err(e) => fail(PkStatus::InvalidArgument, e),
    }
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(PkStatus::NullPointer, concat!("null pointer: ", stringify!($p)));
        })+
    };
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn pk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- trees ----------------------------------------------------------------

/// Parses parenthesis notation such as `(()(()()))`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pk_tree_parse(text: *const c_char, out: *mut *mut PkTree) -> PkStatus {
    guarded(|| {
        non_null!(out);
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_tree(text) {
            Ok(t) => write_out(out, PkTree(t)),
            Err(e) => fail(PkStatus::Parse, e),
        }
    })
}

/// # Safety
/// `tree` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn pk_tree_free(tree: *mut PkTree) {
    if !tree.is_null() {
        drop(Box::from_raw(tree));
    }
}

/// Number of leaves, or 0 for NULL.
///
/// # Safety
/// `tree` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pk_tree_leaf_count(tree: *const PkTree) -> size_t {
    tree.as_ref().map_or(0, |t| t.0.leaf_count())
}

/// Number of edges, or 0 for NULL.
///
/// # Safety
/// `tree` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pk_tree_edge_count(tree: *const PkTree) -> size_t {
    tree.as_ref().map_or(0, |t| t.0.edge_count())
}

/// # Safety
/// `tree` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pk_tree_to_string(tree: *const PkTree, out: *mut *mut c_char) -> PkStatus {
    guarded(|| {
        non_null!(tree, out);
        write_string(out, serialize_tree(&(*tree).0))
    })
}

/// Parses delayed notation such as `(2((3))1)`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pk_delayed_tree_parse(
    text: *const c_char,
    out: *mut *mut PkDelayedTree,
) -> PkStatus {
    guarded(|| {
        non_null!(out);
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_delayed_tree(text) {
            Ok((tree, delays)) => write_out(out, PkDelayedTree(DelayedTree { tree, delays })),
            Err(e) => fail(PkStatus::Parse, e),
        }
    })
}

/// A tree with `delays[i]` on its `i`-th leaf from the left.
///
/// # Safety
/// `tree` must be a live handle, `delays` must point to `len` values, and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_delayed_tree_new(
    tree: *const PkTree,
    delays: *const u32,
    len: size_t,
    out: *mut *mut PkDelayedTree,
) -> PkStatus {
    guarded(|| {
        non_null!(tree, out);
        let values = match slice_arg(delays, len) {
            Ok(v) => v.to_vec(),
            Err(s) => return s,
        };
        let result =
            DelayAssignment::new(values).and_then(|d| DelayedTree::new((*tree).0.clone(), d));
        match result {
            Ok(t) => write_out(out, PkDelayedTree(t)),
            Err(e) => fail(PkStatus::InvalidArgument, e),
        }
    })
}

/// A hedgehog whose leaves carry `delays`, left to right.
///
/// # Safety
/// `delays` must point to `len` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_delayed_hedgehog(
    delays: *const u32,
    len: size_t,
    out: *mut *mut PkDelayedTree,
) -> PkStatus {
    guarded(|| {
        non_null!(out);
        let values = match slice_arg(delays, len) {
            Ok(v) => v,
            Err(s) => return s,
        };
        match DelayedTree::hedgehog(values) {
            Ok(t) => write_out(out, PkDelayedTree(t)),
            Err(e) => fail(PkStatus::InvalidArgument, e),
        }
    })
}

/// # Safety
/// `tree` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn pk_delayed_tree_free(tree: *mut PkDelayedTree) {
    if !tree.is_null() {
        drop(Box::from_raw(tree));
    }
}

/// # Safety
/// `tree` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pk_delayed_tree_to_string(
    tree: *const PkDelayedTree,
    out: *mut *mut c_char,
) -> PkStatus {
    guarded(|| {
        non_null!(tree, out);
        let t = &(*tree).0;
        write_string(out, serialize_delayed_tree(&t.tree, &t.delays))
    })
}

unsafe fn slice_arg<'a, T>(data: *const T, len: size_t) -> Result<&'a [T], PkStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(fail(
            PkStatus::NullPointer,
            "null array with nonzero length",
        ));
    }
    Ok(std::slice::from_raw_parts(data, len))
}

// ---- plucking -------------------------------------------------------------

/// `Q(T)`.
///
/// # Safety
/// `tree` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pk_plucking(tree: *const PkTree, out: *mut *mut PkPoly) -> PkStatus {
    guarded(|| {
        non_null!(tree, out);
        write_out(out, PkPoly(Plucker::new().plain(&(*tree).0)))
    })
}

/// `Q(T, f)`.
///
/// # Safety
/// `tree` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pk_plucking_delay(
    tree: *const PkDelayedTree,
    out: *mut *mut PkPoly,
) -> PkStatus {
    guarded(|| {
        non_null!(tree, out);
        let t = &(*tree).0;
        match Plucker::new().delayed(&t.tree, &t.delays) {
            Ok(q) => write_out(out, PkPoly(q)),
            Err(e) => fail(PkStatus::InvalidArgument, e),
        }
    })
}

/// Closed form for an anti-unimodal delayed hedgehog.
///
/// # Safety
/// `delays` must point to `len` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_hedgehog_anti_unimodal(
    delays: *const u32,
    len: size_t,
    out: *mut *mut PkPoly,
) -> PkStatus {
    guarded(|| {
        non_null!(out);
        let values = match slice_arg(delays, len) {
            Ok(v) => v.to_vec(),
            Err(s) => return s,
        };
        match DelayedHedgehog::new(values).and_then(|h| hedgehog_anti_unimodal(&h)) {
            Ok(q) => write_out(out, PkPoly(q)),
            Err(e) => fail(PkStatus::InvalidArgument, e),
        }
    })
}

/// Closed form for the hedgehog `1^2 4^k 1^2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_family_1_4k_1(k: size_t, out: *mut *mut PkPoly) -> PkStatus {
    guarded(|| {
        non_null!(out);
        match family_1_4k_1(k) {
            Ok(q) => write_out(out, PkPoly(q)),
            Err(e) => fail(PkStatus::InvalidArgument, e),
        }
    })
}

// ---- polynomials ----------------------------------------------------------

/// A polynomial from `len` coefficients, `coeffs[i]` multiplying `q^i`.
///
/// # Safety
/// `coeffs` must point to `len` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_poly_from_i64(
    coeffs: *const i64,
    len: size_t,
    out: *mut *mut PkPoly,
) -> PkStatus {
    guarded(|| {
        non_null!(out);
        match slice_arg(coeffs, len) {
            Ok(c) => write_out(out, PkPoly(QPolynomial::from_i64s(c))),
            Err(s) => s,
        }
    })
}

/// Parses a comma-separated coefficient list such as `1,2,2,1`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pk_poly_parse(text: *const c_char, out: *mut *mut PkPoly) -> PkStatus {
    guarded(|| {
        non_null!(out);
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match QPolynomial::parse_coeff_list(text) {
            Ok(q) => write_out(out, PkPoly(q)),
            Err(e) => fail(PkStatus::Parse, e),
        }
    })
}

/// # Safety
/// `poly` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn pk_poly_free(poly: *mut PkPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Degree, or -1 for the zero polynomial and for NULL.
///
/// # Safety
/// `poly` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pk_poly_degree(poly: *const PkPoly) -> i64 {
    poly.as_ref()
        .and_then(|p| p.0.degree())
        .map_or(-1, |d| d as i64)
}

/// Coefficient of `q^i`; `PkStatus::Overflow` when it does not fit in 64 bits.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pk_poly_coeff(poly: *const PkPoly, i: size_t, out: *mut i64) -> PkStatus {
    guarded(|| {
        non_null!(poly, out);
        match i64::try_from((*poly).0.coeff(i)) {
            Ok(c) => {
                *out = c;
                PkStatus::Ok
            }
            Err(_) => fail(
                PkStatus::Overflow,
                format!("coefficient of q^{i} exceeds 64 bits"),
            ),
        }
    })
}

/// Text form, e.g. `1 + 2*q + q^2`.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pk_poly_to_string(poly: *const PkPoly, out: *mut *mut c_char) -> PkStatus {
    guarded(|| {
        non_null!(poly, out);
        write_string(out, (*poly).0.to_string())
    })
}

/// JSON form `{"low":..,"coeffs":[..]}` with exact big-integer coefficients.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pk_poly_to_json(poly: *const PkPoly, out: *mut *mut c_char) -> PkStatus {
    guarded(|| {
        non_null!(poly, out);
        match serde_json::to_string(&(*poly).0) {
            Ok(s) => write_string(out, s),
            Err(e) => fail(PkStatus::InvalidArgument, e),
        }
    })
}

/// Factored form such as `q^3 [3]_q [2]_q^2`. Fails on the zero polynomial.
///
/// # Safety
/// `poly` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pk_poly_factor(poly: *const PkPoly, out: *mut *mut c_char) -> PkStatus {
    guarded(|| {
        non_null!(poly, out);
        match factor_quantum(&(*poly).0) {
            Ok(f) => write_string(out, f.to_string()),
            Err(e) => fail(PkStatus::InvalidArgument, e),
        }
    })
}

/// Writes the unimodal, strictly-unimodal and symmetric verdicts.
///
/// # Safety
/// `poly` must be a live handle and the three out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn pk_poly_shape(
    poly: *const PkPoly,
    unimodal: *mut bool,
    strictly_unimodal: *mut bool,
    symmetric: *mut bool,
) -> PkStatus {
    guarded(|| {
        non_null!(poly, unimodal, strictly_unimodal, symmetric);
        let q = &(*poly).0;
        *unimodal = is_unimodal(q);
        *strictly_unimodal = is_strictly_unimodal(q);
        *symmetric = is_symmetric(q);
        PkStatus::Ok
    })
}

/// Whether two polynomials are equal; false if either is NULL.
///
/// # Safety
/// Both arguments must be NULL or live handles.
#[no_mangle]
pub unsafe extern "C" fn pk_poly_equal(a: *const PkPoly, b: *const PkPoly) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}
