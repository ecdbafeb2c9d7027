//! C ABI over `combinatoria`.
//!
//! Every entry point returns a [`CombStatus`]; results go through out
//! pointers. Counts are exact, so they come back as decimal C strings that
//! the caller releases with [`comb_string_free`]. On failure the message is
//! kept per thread and read with [`comb_last_error_message`].
//!
//! Permutations, head specifications and head enumerators are opaque
//! handles, each with its own `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use combinatoria::caput::{self, CaputIter, CaputSpec, Head, HeadMode};
use combinatoria::oracle;
use combinatoria::partitions;
use combinatoria::{genealogy, Error, Permutation};

/// Outcome of a call. `COMB_STATUS_OK` is zero.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombStatus {
    Ok = 0,
    InvalidArgument = 1,
    InvalidDegree = 2,
    IncompatibleDegrees = 3,
    NotABijection = 4,
    Parse = 5,
    InvalidCycleType = 6,
    EnumerationTooLarge = 7,
    InvalidHead = 8,
    GroundSetMismatch = 9,
    NullPointer = 10,
    InvalidUtf8 = 11,
    BufferTooSmall = 12,
    Panic = 99,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombHeadMode {
    Loose = 0,
    Exact = 1,
    Setwise = 2,
}

impl From<CombHeadMode> for HeadMode {
    fn from(m: CombHeadMode) -> Self {
        match m {
            CombHeadMode::Loose => HeadMode::Loose,
            CombHeadMode::Exact => HeadMode::Exact,
            CombHeadMode::Setwise => HeadMode::Setwise,
        }
    }
}

pub struct CombPermutation(Permutation);

pub struct CombCaputSpec(CaputSpec);

pub struct CombCaputIter(CaputIter);

struct Fail {
    status: CombStatus,
    message: String,
}

impl Fail {
    fn new(status: CombStatus, message: impl Into<String>) -> Self {
        Fail {
            status,
            message: message.into(),
        }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::InvalidDegree(_) => CombStatus::InvalidDegree,
            Error::IncompatibleDegrees { .. } => CombStatus::IncompatibleDegrees,
            Error::NotABijection(_) => CombStatus::NotABijection,
            Error::Parse { .. } => CombStatus::Parse,
            Error::InvalidCycleType(_) => CombStatus::InvalidCycleType,
            Error::EnumerationTooLarge { .. } => CombStatus::EnumerationTooLarge,
            Error::InvalidHead(_) => CombStatus::InvalidHead,
            Error::GroundSetMismatch { .. } => CombStatus::GroundSetMismatch,
            Error::InvalidArgument(_) => CombStatus::InvalidArgument,
        };
        Fail::new(status, e.to_string())
    }
}

type Outcome = Result<(), Fail>;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn record(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Outcome) -> CombStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CombStatus::Ok,
        Ok(Err(fail)) => {
            record(fail.message);
            fail.status
        }
        Err(_) => {
            record("panic inside combinatoria".into());
            CombStatus::Panic
        }
    }
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::new(CombStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::new(CombStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail::new(CombStatus::NullPointer, format!("{what} is null")))
}

unsafe fn slot<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut()
        .ok_or_else(|| Fail::new(CombStatus::NullPointer, format!("{what} is null")))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome {
    let out = slot(out, "out")?;
    let c = CString::new(s).map_err(|_| Fail::new(CombStatus::InvalidArgument, "interior NUL in result"))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_handle<T>(out: *mut *mut T, value: T) -> Outcome {
    *slot(out, "out")? = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn release<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Message for the last failed call on this thread, or NULL after a
/// successful one. Owned by the library; valid until the next call.
#[no_mangle]
pub extern "C" fn comb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn comb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses one-line (`[2,1,3]`), cycle (`(12)`) or letter (`bac`) notation.
/// `degree` 0 infers the degree from the text.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comb_permutation_parse(
    text: *const c_char,
    degree: usize,
    out: *mut *mut CombPermutation,
) -> CombStatus {
    guard(|| {
        let s = c_str(text, "text")?;
        let p = Permutation::parse(s, (degree > 0).then_some(degree))?;
        put_handle(out, CombPermutation(p))
    })
}

/// # Safety
/// `points` must hold `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comb_permutation_from_one_line(
    points: *const usize,
    len: usize,
    out: *mut *mut CombPermutation,
) -> CombStatus {
    guard(|| {
        if points.is_null() {
            return Err(Fail::new(CombStatus::NullPointer, "points is null"));
        }
        let line = std::slice::from_raw_parts(points, len).to_vec();
        put_handle(out, CombPermutation(Permutation::new(line)?))
    })
}

/// # Safety
/// `p` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn comb_permutation_free(p: *mut CombPermutation) {
    release(p)
}

/// Degree of `p`, or 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn comb_permutation_degree(p: *const CombPermutation) -> usize {
    p.as_ref().map_or(0, |p| p.0.degree())
}

/// `p ∘ q`: `q` is applied first.
///
/// # Safety
/// `p` and `q` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comb_permutation_compose(
    p: *const CombPermutation,
    q: *const CombPermutation,
    out: *mut *mut CombPermutation,
) -> CombStatus {
    guard(|| {
        let r = combinatoria::compose(&borrow(p, "p")?.0, &borrow(q, "q")?.0)?;
        put_handle(out, CombPermutation(r))
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comb_permutation_inverse(
    p: *const CombPermutation,
    out: *mut *mut CombPermutation,
) -> CombStatus {
    guard(|| {
        let inv = borrow(p, "p")?.0.inverse();
        put_handle(out, CombPermutation(inv))
    })
}

/// Canonical cycle form, e.g. `(1)(3)(5)(246)`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comb_permutation_cycles(p: *const CombPermutation, out: *mut *mut c_char) -> CombStatus {
    guard(|| put_string(out, borrow(p, "p")?.0.to_string()))
}

/// Writes the one-line images into `buf`, which must hold `degree` values.
///
/// # Safety
/// `p` must be a live handle; `buf` must hold `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn comb_permutation_one_line(
    p: *const CombPermutation,
    buf: *mut usize,
    len: usize,
) -> CombStatus {
    guard(|| fill(&borrow(p, "p")?.0.one_line(), buf, len))
}

/// Writes α₁…αₙ into `alpha`, which must hold `degree` values.
///
/// # Safety
/// `p` must be a live handle; `alpha` must hold `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn comb_permutation_cycle_type(
    p: *const CombPermutation,
    alpha: *mut usize,
    len: usize,
) -> CombStatus {
    guard(|| fill(borrow(p, "p")?.0.cycle_type().alpha(), alpha, len))
}

unsafe fn fill(values: &[usize], buf: *mut usize, len: usize) -> Outcome {
    if buf.is_null() {
        return Err(Fail::new(CombStatus::NullPointer, "buffer is null"));
    }
    if len < values.len() {
        return Err(Fail::new(
            CombStatus::BufferTooSmall,
            format!("buffer holds {len}, need {}", values.len()),
        ));
    }
    ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    Ok(())
}

/// Size of the conjugacy class of Sₙ with cycle type `alpha[0..len]`.
///
/// # Safety
/// `alpha` must hold `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comb_class_order(
    degree: usize,
    alpha: *const usize,
    len: usize,
    out: *mut *mut c_char,
) -> CombStatus {
    guard(|| {
        if alpha.is_null() {
            return Err(Fail::new(CombStatus::NullPointer, "alpha is null"));
        }
        let a = std::slice::from_raw_parts(alpha, len);
        put_string(out, partitions::class_order_of(degree, a)?.order.to_string())
    })
}

/// p(n).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comb_count_partitions(n: usize, out: *mut *mut c_char) -> CombStatus {
    guard(|| put_string(out, partitions::count_partitions(n).to_string()))
}

/// Partitions of `n` into exactly two parts.
#[no_mangle]
pub extern "C" fn comb_two_part_count(n: u64) -> u64 {
    partitions::two_part_count(n)
}

/// Arrangements of `m` things with none in its own place.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comb_derangements(m: usize, out: *mut *mut c_char) -> CombStatus {
    guard(|| put_string(out, caput::derangements(m).to_string()))
}

/// Points of the consanguinity tree at `gradus`: 2ⁿ·(n+1).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comb_personae_count(gradus: usize, out: *mut *mut c_char) -> CombStatus {
    guard(|| put_string(out, genealogy::personae_count(gradus).to_string()))
}

/// Builds a head specification from text such as `1=a,3=c`.
///
/// # Safety
/// `head` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comb_caput_spec_new(
    degree: usize,
    head: *const c_char,
    mode: CombHeadMode,
    out: *mut *mut CombCaputSpec,
) -> CombStatus {
    guard(|| {
        let h = Head::parse(degree, c_str(head, "head")?)?;
        put_handle(out, CombCaputSpec(CaputSpec::new(h, mode.into())?))
    })
}

/// # Safety
/// `spec` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn comb_caput_spec_free(spec: *mut CombCaputSpec) {
    release(spec)
}

/// # Safety
/// `spec` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comb_caput_count(spec: *const CombCaputSpec, out: *mut *mut c_char) -> CombStatus {
    guard(|| put_string(out, caput::count_caput(&borrow(spec, "spec")?.0).to_string()))
}

/// Starts a lexicographic enumeration. The enumerator does not borrow
/// `spec`, which may be freed afterwards.
///
/// # Safety
/// `spec` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comb_caput_iter_new(spec: *const CombCaputSpec, out: *mut *mut CombCaputIter) -> CombStatus {
    guard(|| {
        let it = caput::enumerate_caput(&borrow(spec, "spec")?.0)?;
        put_handle(out, CombCaputIter(it))
    })
}

/// Stores the next arrangement in `*out`, or NULL when exhausted.
///
/// # Safety
/// `iter` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn comb_caput_iter_next(iter: *mut CombCaputIter, out: *mut *mut CombPermutation) -> CombStatus {
    guard(|| {
        let it = slot(iter, "iter")?;
        let target = slot(out, "out")?;
        *target = match it.0.next() {
            Some(p) => Box::into_raw(Box::new(CombPermutation(p))),
            None => ptr::null_mut(),
        };
        Ok(())
    })
}

/// # Safety
/// `iter` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn comb_caput_iter_free(iter: *mut CombCaputIter) {
    release(iter)
}

/// Runs every closed form against brute force up to `max_n` (at most 9).
/// `report`, if not NULL, receives one line per claim.
///
/// # Safety
/// `all_pass` must be writable; `report` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn comb_verify(max_n: usize, all_pass: *mut bool, report: *mut *mut c_char) -> CombStatus {
    guard(|| {
        let pass = slot(all_pass, "all_pass")?;
        if max_n > oracle::SN_CEILING {
            return Err(Fail::new(
                CombStatus::InvalidArgument,
                format!("max_n {max_n} exceeds {}", oracle::SN_CEILING),
            ));
        }
        let reports = oracle::verify_all(max_n);
        *pass = reports.iter().all(|r| r.passed());
        if !report.is_null() {
            let lines: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
            put_string(report, lines.join("\n"))?;
        }
        Ok(())
    })
}
