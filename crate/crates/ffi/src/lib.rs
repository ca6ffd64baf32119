//! C ABI over `permkit`.
//!
//! Permutations cross the boundary as 1-based `uint32_t` arrays of length `n`.
//! Every function returns a [`PkStatus`]; on failure a message is stored per thread
//! and can be read with [`pk_last_error_message`]. Strings returned through `char**`
//! out-parameters are owned by the caller and released with [`pk_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use permkit::balls::ball_size;
use permkit::bounds::{best_bounds_with, theorem2_upper, BoundOptions, Rounding};
use permkit::code::PermCode;
use permkit::constructions::construct_size4;
use permkit::{kendall_distance, Error, Permutation};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidPermutation = 3,
    LengthMismatch = 4,
    OutOfRange = 5,
    VerificationFailed = 6,
    Internal = 7,
}

/// Opaque growable code: a set of distinct permutations of one degree.
pub struct PkCode {
    n: usize,
    members: Vec<Permutation>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> PkStatus {
    match err {
        Error::LengthMismatch { .. } => PkStatus::LengthMismatch,
        Error::InvalidPermutation(_) => PkStatus::InvalidPermutation,
        Error::OutOfRange { .. } | Error::TooLarge { .. } | Error::CapExceeded { .. } => {
            PkStatus::OutOfRange
        }
        Error::Verification(_) => PkStatus::VerificationFailed,
        Error::Precondition(_) | Error::Parse { .. } => PkStatus::InvalidArgument,
        Error::Io(_) => PkStatus::Internal,
    }
}

fn fail(status: PkStatus, msg: impl Into<String>) -> PkStatus {
    set_error(msg);
    status
}

fn from_error(err: Error) -> PkStatus {
    let s = status_of(&err);
    fail(s, err.to_string())
}

/// Runs `f`, converting panics to `Internal` and clearing the error slot on success.
fn guard(f: impl FnOnce() -> PkStatus) -> PkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(PkStatus::Ok) => {
            clear_error();
            PkStatus::Ok
        }
        Ok(s) => s,
        Err(_) => fail(PkStatus::Internal, "internal panic"),
    }
}

/// # Safety
/// `word` must point to `n` readable `uint32_t` values.
unsafe fn read_perm(word: *const u32, n: usize) -> Result<Permutation, PkStatus> {
    if word.is_null() {
        return Err(fail(PkStatus::NullPointer, "permutation pointer is null"));
    }
    if n == 0 {
        return Err(fail(PkStatus::InvalidArgument, "n must be positive"));
    }
    let w = slice::from_raw_parts(word, n);
    Permutation::from_one_based(w).map_err(from_error)
}

/// # Safety
/// `out` must be null or writable.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> PkStatus {
    if out.is_null() {
        return fail(PkStatus::NullPointer, "output pointer is null");
    }
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            PkStatus::Ok
        }
        Err(_) => fail(PkStatus::Internal, "string contains a NUL byte"),
    }
}

/// Message for the last failing call on this thread, or null. Valid until the next
/// call into this library on the same thread.
#[no_mangle]
pub extern "C" fn pk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Kendall tau distance between two permutations of length `n`.
///
/// # Safety
/// `p` and `q` must each point to `n` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_kendall_distance(
    p: *const u32,
    q: *const u32,
    n: usize,
    out: *mut u32,
) -> PkStatus {
    guard(|| {
        if out.is_null() {
            return fail(PkStatus::NullPointer, "output pointer is null");
        }
        let p = match read_perm(p, n) {
            Ok(v) => v,
            Err(s) => return s,
        };
        let q = match read_perm(q, n) {
            Ok(v) => v,
            Err(s) => return s,
        };
        match kendall_distance(&p, &q) {
            Ok(d) => {
                *out = d.0;
                PkStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// New empty code of degree `n`, or null if `n` is zero or too large.
#[no_mangle]
pub extern "C" fn pk_code_new(n: usize) -> *mut PkCode {
    if n == 0 || n > permkit::perm::MAX_DEGREE {
        set_error(format!("n = {n} is out of range"));
        return ptr::null_mut();
    }
    clear_error();
    Box::into_raw(Box::new(PkCode {
        n,
        members: Vec::new(),
    }))
}

/// Releases a code. Null is ignored.
///
/// # Safety
/// `code` must be null or come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pk_code_free(code: *mut PkCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Appends a permutation of the code's degree. Duplicates are rejected.
///
/// # Safety
/// `code` must be valid; `word` must point to `n` values where `n` is the code's degree.
#[no_mangle]
pub unsafe extern "C" fn pk_code_push(code: *mut PkCode, word: *const u32) -> PkStatus {
    guard(|| {
        let Some(c) = code.as_mut() else {
            return fail(PkStatus::NullPointer, "code is null");
        };
        let p = match read_perm(word, c.n) {
            Ok(v) => v,
            Err(s) => return s,
        };
        if c.members.contains(&p) {
            return fail(PkStatus::InvalidArgument, format!("duplicate codeword {p}"));
        }
        c.members.push(p);
        PkStatus::Ok
    })
}

/// Number of codewords.
///
/// # Safety
/// `code` must be valid and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pk_code_len(code: *const PkCode, out: *mut usize) -> PkStatus {
    guard(|| match (code.as_ref(), out.is_null()) {
        (Some(c), false) => {
            *out = c.members.len();
            PkStatus::Ok
        }
        _ => fail(PkStatus::NullPointer, "null argument"),
    })
}

/// Degree of the code.
///
/// # Safety
/// `code` must be valid and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pk_code_degree(code: *const PkCode, out: *mut usize) -> PkStatus {
    guard(|| match (code.as_ref(), out.is_null()) {
        (Some(c), false) => {
            *out = c.n;
            PkStatus::Ok
        }
        _ => fail(PkStatus::NullPointer, "null argument"),
    })
}

/// Copies codeword `index` into `word` as a 1-based array of the code's degree.
///
/// # Safety
/// `code` must be valid; `word` must have room for `n` values.
#[no_mangle]
pub unsafe extern "C" fn pk_code_get(
    code: *const PkCode,
    index: usize,
    word: *mut u32,
) -> PkStatus {
    guard(|| {
        let Some(c) = code.as_ref() else {
            return fail(PkStatus::NullPointer, "code is null");
        };
        if word.is_null() {
            return fail(PkStatus::NullPointer, "output pointer is null");
        }
        let Some(p) = c.members.get(index) else {
            return fail(
                PkStatus::OutOfRange,
                format!(
                    "index {index} out of range for {} codewords",
                    c.members.len()
                ),
            );
        };
        let dst = slice::from_raw_parts_mut(word, c.n);
        for (d, &s) in dst.iter_mut().zip(p.zero_based()) {
            *d = s as u32 + 1;
        }
        PkStatus::Ok
    })
}

/// Minimum pairwise distance. Fails with `INVALID_ARGUMENT` for fewer than two codewords.
///
/// # Safety
/// `code` must be valid and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pk_code_min_distance(code: *const PkCode, out: *mut u32) -> PkStatus {
    guard(|| {
        let Some(c) = code.as_ref() else {
            return fail(PkStatus::NullPointer, "code is null");
        };
        if out.is_null() {
            return fail(PkStatus::NullPointer, "output pointer is null");
        }
        match permkit::code::min_pairwise_distance(&c.members).min_distance {
            Some(d) => {
                *out = d;
                PkStatus::Ok
            }
            None => fail(PkStatus::InvalidArgument, "fewer than two codewords"),
        }
    })
}

/// `OK` if every pair is at distance at least `d`, else `VERIFICATION_FAILED` with the
/// offending pair in the error message.
///
/// # Safety
/// `code` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pk_code_verify(code: *const PkCode, d: u32) -> PkStatus {
    guard(|| {
        let Some(c) = code.as_ref() else {
            return fail(PkStatus::NullPointer, "code is null");
        };
        let pc = match PermCode::new(c.n, c.members.clone()) {
            Ok(v) => v,
            Err(e) => return from_error(e),
        };
        match pc.verify(Some(d)) {
            Ok(_) => PkStatus::Ok,
            Err(e) => from_error(e),
        }
    })
}

/// The four-word code of degree `n >= 6`. The target distance goes to `distance`
/// when it is non-null. Returns null on failure.
///
/// # Safety
/// `distance` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn pk_construct_size4(n: usize, distance: *mut u32) -> *mut PkCode {
    let r = catch_unwind(|| construct_size4(n));
    match r {
        Ok(Ok(sized)) => {
            if !distance.is_null() {
                *distance = sized.target_distance;
            }
            clear_error();
            Box::into_raw(Box::new(PkCode {
                n,
                members: sized.code.members().to_vec(),
            }))
        }
        Ok(Err(e)) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
        Err(_) => {
            set_error("internal panic");
            ptr::null_mut()
        }
    }
}

/// Best known lower and upper bounds on `P(n, d)` as a JSON object.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_bounds_json(
    n: u64,
    d: u64,
    table_mode: bool,
    out: *mut *mut c_char,
) -> PkStatus {
    guard(|| {
        let opts = if table_mode {
            BoundOptions::table_mode()
        } else {
            BoundOptions::default()
        };
        match best_bounds_with(n, d, opts) {
            Ok(rep) => write_string(out, rep.to_json()),
            Err(e) => from_error(e),
        }
    })
}

/// `|B(n, r)|` in decimal.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_ball_size_decimal(n: usize, r: u64, out: *mut *mut c_char) -> PkStatus {
    guard(|| match ball_size(n, r) {
        Ok(v) => write_string(out, v.to_string()),
        Err(e) => from_error(e),
    })
}

/// Prime-degree upper bound on `P(n, 3)` at radius parameter `r`, in decimal.
/// `table_mode` selects floor rounding of the subtracted term.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_theorem2_upper(
    n: u64,
    r: u64,
    table_mode: bool,
    out: *mut *mut c_char,
) -> PkStatus {
    guard(|| match theorem2_upper(n, r) {
        Ok(e) => {
            let rounding = if table_mode {
                Rounding::Table
            } else {
                Rounding::Sound
            };
            write_string(out, e.bound(rounding).to_string())
        }
        Err(e) => from_error(e),
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
