//! C interface to the polyrook library.
//!
//! Every function returns a [`PrStatus`]; results come back through out
//! pointers. Handles are opaque and must be released with the matching
//! `*_free` function. After a failure, [`pr_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use polyrook::algebra::{satisfies, MonomialOrder};
use polyrook::convex::convex_h;
use polyrook::deadline::Deadline;
use polyrook::enumerate::{enumerate, Kind};
use polyrook::hilbert::h_polynomial_with_order;
use polyrook::rook::rook_polynomial;
use polyrook::switch::switching_rook_polynomial;
use polyrook::verify::test_conjecture;
use polyrook::{CellCollection, Error, IntPolynomial};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    NotConvex = 5,
    ConditionFails = 6,
    TooLarge = 7,
    Overflow = 8,
    OutOfRange = 9,
    Internal = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrKind {
    Polyomino = 0,
    Collection = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrOrder {
    Rev = 0,
    Lex = 1,
}

/// A finite collection of cells.
pub struct PrCollection(CellCollection);

/// A polynomial with integer coefficients.
pub struct PrPolynomial(IntPolynomial);

/// An owned list of collections.
pub struct PrCollectionList(Vec<CellCollection>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(PrStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse { .. } | Error::Dataset { .. } => PrStatus::Parse,
            Error::NotConvex => PrStatus::NotConvex,
            Error::ConditionFails => PrStatus::ConditionFails,
            Error::TooLarge(_) => PrStatus::TooLarge,
            Error::InvalidArgument(_) | Error::Empty | Error::NotConnected | Error::CellOutsideCollection(_) => {
                PrStatus::InvalidArgument
            }
            _ => PrStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: PrStatus, msg: &str) -> Failure {
    Failure(status, msg.to_owned())
}

fn set_error(msg: Option<String>) {
    let msg = msg.map(|m| CString::new(m.replace('\0', " ")).unwrap_or_default());
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn guard<F>(f: F) -> PrStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(None);
            PrStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(Some(msg));
            status
        }
        Err(_) => {
            set_error(Some("panic inside polyrook".into()));
            PrStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| fail(PrStatus::NullPointer, "null pointer argument"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(PrStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

// checks `out` before allocating so a NULL output pointer cannot leak
unsafe fn write_boxed<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(PrStatus::NullPointer, "null output pointer"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

fn order(o: PrOrder) -> MonomialOrder {
    match o {
        PrOrder::Rev => MonomialOrder::Rev,
        PrOrder::Lex => MonomialOrder::Lex,
    }
}

fn kind(k: PrKind) -> Kind {
    match k {
        PrKind::Polyomino => Kind::Polyomino,
        PrKind::Collection => Kind::Collection,
    }
}

/// Message for the last failed call on this thread, or NULL after a
/// success. Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn pr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses the brace notation, e.g. `{{{1,1},{2,2}},{{2,1},{3,2}}}`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pr_collection_parse(text: *const c_char, out: *mut *mut PrCollection) -> PrStatus {
    guard(|| {
        if text.is_null() {
            return Err(fail(PrStatus::NullPointer, "null string"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| fail(PrStatus::InvalidUtf8, "input is not UTF-8"))?;
        let p = CellCollection::parse(s)?;
        write_boxed(out, PrCollection(p))
    })
}

/// Builds a collection from `ncells` lower-left corners stored as
/// consecutive `(i, j)` pairs in `coords`.
///
/// # Safety
/// `coords` must point to `2 * ncells` readable integers (or may be NULL
/// when `ncells` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pr_collection_from_cells(
    coords: *const i32,
    ncells: usize,
    out: *mut *mut PrCollection,
) -> PrStatus {
    guard(|| {
        let flat: &[i32] = if ncells == 0 {
            &[]
        } else if coords.is_null() {
            return Err(fail(PrStatus::NullPointer, "null coordinate array"));
        } else {
            std::slice::from_raw_parts(coords, 2 * ncells)
        };
        let pairs: Vec<(i32, i32)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        write_boxed(out, PrCollection(CellCollection::from_coords(&pairs)))
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pr_collection_free(p: *mut PrCollection) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pr_collection_rank(p: *const PrCollection, out: *mut usize) -> PrStatus {
    guard(|| write(out, deref(p)?.0.rank()))
}

/// Writes a newly allocated string; release it with [`pr_string_free`].
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pr_collection_format(p: *const PrCollection, out: *mut *mut c_char) -> PrStatus {
    guard(|| {
        let s = CString::new(deref(p)?.0.format()).map_err(|_| fail(PrStatus::Internal, "NUL in output"))?;
        write(out, s.into_raw())
    })
}

/// Representative of the orbit under translations and the eight symmetries
/// of the square.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pr_collection_canonical(p: *const PrCollection, out: *mut *mut PrCollection) -> PrStatus {
    guard(|| write_boxed(out, PrCollection(deref(p)?.0.canonical())))
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn pr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pr_rook_polynomial(p: *const PrCollection, out: *mut *mut PrPolynomial) -> PrStatus {
    guard(|| write_boxed(out, PrPolynomial(rook_polynomial(&deref(p)?.0)?)))
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pr_rook_number(p: *const PrCollection, out: *mut usize) -> PrStatus {
    guard(|| write(out, rook_polynomial(&deref(p)?.0)?.degree()))
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pr_switching_rook_polynomial(p: *const PrCollection, out: *mut *mut PrPolynomial) -> PrStatus {
    guard(|| write_boxed(out, PrPolynomial(switching_rook_polynomial(&deref(p)?.0)?)))
}

/// h-polynomial of the coordinate ring. `krull_dim` may be NULL.
///
/// # Safety
/// `p` must be a live handle, `out` writable and `krull_dim` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn pr_h_polynomial(
    p: *const PrCollection,
    ord: PrOrder,
    out: *mut *mut PrPolynomial,
    krull_dim: *mut usize,
) -> PrStatus {
    guard(|| {
        let s = h_polynomial_with_order(&deref(p)?.0, order(ord), &Deadline::none())?;
        if !krull_dim.is_null() {
            krull_dim.write(s.krull_dim);
        }
        write_boxed(out, PrPolynomial(s.h_poly))
    })
}

/// h-polynomial through the convex recursion. `certified` is set to false
/// when the recursion did not apply and the general engine answered.
///
/// # Safety
/// `p` must be a live handle, `out` writable and `certified` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn pr_convex_h(
    p: *const PrCollection,
    out: *mut *mut PrPolynomial,
    certified: *mut bool,
) -> PrStatus {
    guard(|| {
        let c = convex_h(&deref(p)?.0)?;
        if !certified.is_null() {
            certified.write(c.certified);
        }
        write_boxed(out, PrPolynomial(c.h))
    })
}

/// Whether the generators already form a Gröbner basis under `ord`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pr_quadratic_basis(p: *const PrCollection, ord: PrOrder, out: *mut bool) -> PrStatus {
    guard(|| write(out, satisfies(&deref(p)?.0, order(ord))))
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pr_polynomial_degree(p: *const PrPolynomial, out: *mut usize) -> PrStatus {
    guard(|| write(out, deref(p)?.0.degree()))
}

/// Coefficient of `t^k`; zero beyond the degree. Fails with
/// `PR_STATUS_OVERFLOW` when it does not fit in 64 bits.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pr_polynomial_coeff(p: *const PrPolynomial, k: usize, out: *mut i64) -> PrStatus {
    guard(|| {
        let c = deref(p)?.0.coeff(k);
        let c = i64::try_from(c).map_err(|_| fail(PrStatus::Overflow, "coefficient exceeds 64 bits"))?;
        write(out, c)
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pr_polynomial_free(p: *mut PrPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// All shapes of one rank up to symmetry, in canonical form.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pr_enumerate(k: PrKind, rank: usize, out: *mut *mut PrCollectionList) -> PrStatus {
    guard(|| write_boxed(out, PrCollectionList(enumerate(kind(k), rank).collect())))
}

/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pr_list_len(l: *const PrCollectionList, out: *mut usize) -> PrStatus {
    guard(|| write(out, deref(l)?.0.len()))
}

/// Copies element `index` into a new collection handle.
///
/// # Safety
/// `l` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pr_list_get(
    l: *const PrCollectionList,
    index: usize,
    out: *mut *mut PrCollection,
) -> PrStatus {
    guard(|| {
        let p = deref(l)?
            .0
            .get(index)
            .ok_or_else(|| fail(PrStatus::OutOfRange, "index past the end of the list"))?;
        write_boxed(out, PrCollection(p.clone()))
    })
}

/// # Safety
/// `l` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn pr_list_free(l: *mut PrCollectionList) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Compares switching rook polynomials with h-polynomials on every shape of
/// one rank. `counterexamples` receives how many disagree.
///
/// # Safety
/// `verified` and `counterexamples` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pr_verify(
    k: PrKind,
    rank: usize,
    jobs: usize,
    verified: *mut usize,
    counterexamples: *mut usize,
) -> PrStatus {
    guard(|| {
        if verified.is_null() || counterexamples.is_null() {
            return Err(fail(PrStatus::NullPointer, "null output pointer"));
        }
        let s = test_conjecture(kind(k), rank, jobs)?;
        write(verified, s.verified)?;
        write(counterexamples, s.counterexamples.len())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_mapping() {
        let f = Failure::from(Error::NotConvex);
        assert_eq!(f.0, PrStatus::NotConvex);
        assert_eq!(Failure::from(Error::TooLarge(70)).0, PrStatus::TooLarge);
        assert_eq!(Failure::from(Error::Timeout).0, PrStatus::Internal);
    }

    #[test]
    fn panics_become_a_status() {
        assert_eq!(guard(|| panic!("boom")), PrStatus::Panic);
        assert!(!pr_last_error().is_null());
        assert_eq!(guard(|| Ok(())), PrStatus::Ok);
        assert!(pr_last_error().is_null());
    }

    #[test]
    fn interior_nul_is_replaced() {
        set_error(Some("a\0b".into()));
        let s = unsafe { CStr::from_ptr(pr_last_error()) };
        assert_eq!(s.to_str().unwrap(), "a b");
    }
}
