//! C ABI over `closedmine`.
//!
//! Databases and pattern sets are opaque handles owned by the caller and
//! released with the matching `_free` function. Every fallible call returns a
//! [`CmStatus`]; on failure [`cm_last_error`] describes the cause for the
//! calling thread. Item slices handed out by the pattern accessors borrow from
//! the pattern set and stay valid until it is freed.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use closedmine::{
    mine_closed, parse_fimi, parse_fimi_str, run_dac, ClosedPattern, Error, Itemset, MinsupSpec,
    PatternSet, TransactionDatabase,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    InvalidArgument = 3,
    OutOfRange = 4,
    Io = 5,
    Panic = 6,
}

/// Parsed transaction database.
pub struct CmDatabase {
    inner: TransactionDatabase,
}

/// Mined closed itemsets with supports and minimal generators.
pub struct CmPatternSet {
    inner: PatternSet,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: CmStatus, msg: impl Into<String>) -> CmStatus {
    set_error(msg);
    status
}

fn from_error(err: Error) -> CmStatus {
    let status = match err {
        Error::Parse { .. } => CmStatus::Parse,
        Error::UniverseTooLarge { .. } | Error::EmptyExtent => CmStatus::OutOfRange,
        Error::InvalidArgument(_) => CmStatus::InvalidArgument,
    };
    fail(status, err.to_string())
}

fn guard(f: impl FnOnce() -> CmStatus) -> CmStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(CmStatus::Panic, "internal panic"),
    }
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, CmStatus> {
    if s.is_null() {
        return Err(fail(CmStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(CmStatus::InvalidArgument, "string is not valid UTF-8"))
}

unsafe fn store<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

unsafe fn pattern<'a>(ps: *const CmPatternSet, i: usize) -> Result<&'a ClosedPattern, CmStatus> {
    let ps = ps.as_ref().ok_or_else(|| fail(CmStatus::NullPointer, "null pattern set"))?;
    ps.inner
        .patterns
        .get(i)
        .ok_or_else(|| fail(CmStatus::OutOfRange, format!("pattern index {i} out of range")))
}

unsafe fn write_items(set: &Itemset, items: *mut *const u32, len: *mut usize) -> CmStatus {
    if items.is_null() || len.is_null() {
        return fail(CmStatus::NullPointer, "null output pointer");
    }
    *items = set.items().as_ptr();
    *len = set.len();
    CmStatus::Ok
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn cm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses FIMI text (one transaction per line, space-separated item ids).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cm_database_parse(text: *const c_char, out: *mut *mut CmDatabase) -> CmStatus {
    guard(|| {
        if out.is_null() {
            return fail(CmStatus::NullPointer, "null output pointer");
        }
        let text = match c_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_fimi_str(text) {
            Ok(db) => {
                store(out, CmDatabase { inner: db });
                CmStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Reads and parses a FIMI file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cm_database_open(path: *const c_char, out: *mut *mut CmDatabase) -> CmStatus {
    guard(|| {
        if out.is_null() {
            return fail(CmStatus::NullPointer, "null output pointer");
        }
        let path = match c_str(path) {
            Ok(p) => p,
            Err(s) => return s,
        };
        let file = match std::fs::File::open(path) {
            Ok(f) => f,
            Err(e) => return fail(CmStatus::Io, format!("{path}: {e}")),
        };
        match parse_fimi(std::io::BufReader::new(file)) {
            Ok(db) => {
                store(out, CmDatabase { inner: db });
                CmStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Number of transactions, or 0 for NULL.
///
/// # Safety
/// `db` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cm_database_len(db: *const CmDatabase) -> usize {
    db.as_ref().map_or(0, |d| d.inner.n_transactions())
}

/// # Safety
/// `db` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cm_database_free(db: *mut CmDatabase) {
    if !db.is_null() {
        drop(Box::from_raw(db));
    }
}

/// Sequential mining at relative support `minsup` in (0, 1].
///
/// # Safety
/// `db` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cm_mine(db: *const CmDatabase, minsup: f64, out: *mut *mut CmPatternSet) -> CmStatus {
    cm_dac(db, 1, minsup, out)
}

/// Divide-and-conquer mining over `n_partitions` contiguous blocks.
///
/// # Safety
/// `db` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cm_dac(
    db: *const CmDatabase,
    n_partitions: usize,
    minsup: f64,
    out: *mut *mut CmPatternSet,
) -> CmStatus {
    guard(|| {
        let Some(db) = db.as_ref() else {
            return fail(CmStatus::NullPointer, "null database");
        };
        if out.is_null() {
            return fail(CmStatus::NullPointer, "null output pointer");
        }
        let spec = match MinsupSpec::new(minsup) {
            Ok(s) => s,
            Err(e) => return from_error(e),
        };
        let result = if n_partitions == 1 {
            Ok(mine_closed(&db.inner, spec.absolute(db.inner.n_transactions())))
        } else {
            run_dac(&db.inner, n_partitions, spec)
        };
        match result {
            Ok(ps) => {
                store(out, CmPatternSet { inner: ps });
                CmStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Number of patterns, or 0 for NULL.
///
/// # Safety
/// `ps` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cm_patterns_len(ps: *const CmPatternSet) -> usize {
    ps.as_ref().map_or(0, |p| p.inner.len())
}

/// Absolute minimum support the set was mined with.
///
/// # Safety
/// `ps` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cm_patterns_minsup(ps: *const CmPatternSet) -> usize {
    ps.as_ref().map_or(0, |p| p.inner.minsup_abs)
}

/// # Safety
/// `ps` must be a live handle and `support` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cm_pattern_support(ps: *const CmPatternSet, index: usize, support: *mut usize) -> CmStatus {
    guard(|| match pattern(ps, index) {
        Ok(_) if support.is_null() => fail(CmStatus::NullPointer, "null output pointer"),
        Ok(p) => {
            *support = p.support;
            CmStatus::Ok
        }
        Err(s) => s,
    })
}

/// Borrows the items of closed itemset `index`, sorted ascending.
///
/// # Safety
/// `ps` must be a live handle; `items` and `len` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cm_pattern_closed(
    ps: *const CmPatternSet,
    index: usize,
    items: *mut *const u32,
    len: *mut usize,
) -> CmStatus {
    guard(|| match pattern(ps, index) {
        Ok(p) => write_items(&p.closed, items, len),
        Err(s) => s,
    })
}

/// # Safety
/// `ps` must be a live handle and `count` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cm_pattern_generator_count(
    ps: *const CmPatternSet,
    index: usize,
    count: *mut usize,
) -> CmStatus {
    guard(|| match pattern(ps, index) {
        Ok(_) if count.is_null() => fail(CmStatus::NullPointer, "null output pointer"),
        Ok(p) => {
            *count = p.generators.len();
            CmStatus::Ok
        }
        Err(s) => s,
    })
}

/// Borrows the items of generator `generator` of pattern `index`.
///
/// # Safety
/// `ps` must be a live handle; `items` and `len` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cm_pattern_generator(
    ps: *const CmPatternSet,
    index: usize,
    generator: usize,
    items: *mut *const u32,
    len: *mut usize,
) -> CmStatus {
    guard(|| match pattern(ps, index) {
        Ok(p) => match p.generators.get(generator) {
            Some(g) => write_items(g, items, len),
            None => fail(CmStatus::OutOfRange, format!("generator index {generator} out of range")),
        },
        Err(s) => s,
    })
}

/// Renders the set in the CLI text format. Release with [`cm_string_free`].
///
/// # Safety
/// `ps` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cm_patterns_to_text(ps: *const CmPatternSet, out: *mut *mut c_char) -> CmStatus {
    guard(|| {
        let Some(ps) = ps.as_ref() else {
            return fail(CmStatus::NullPointer, "null pattern set");
        };
        if out.is_null() {
            return fail(CmStatus::NullPointer, "null output pointer");
        }
        *out = CString::new(ps.inner.to_text()).unwrap_or_default().into_raw();
        CmStatus::Ok
    })
}

/// # Safety
/// `ps` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cm_patterns_free(ps: *mut CmPatternSet) {
    if !ps.is_null() {
        drop(Box::from_raw(ps));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
