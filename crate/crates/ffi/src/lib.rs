//! C interface to `fusionrep`.
//!
//! Handles are opaque and owned by the caller: every `fr_*_parse`, `fr_*_load`
//! or `fr_analyze` success must be paired with the matching `*_free`, and
//! every returned string with `fr_string_free`. On failure the message of the
//! last error on the calling thread is available from `fr_last_error_message`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;

use fusionrep::jobspec::{Job, JobSpec};
use fusionrep::run::{analyze, run, Analysis, Command, Format};
use fusionrep::{Error, ErrorClass};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrStatus {
    Ok = 0,
    /// Parse or validation error in the input.
    InputError = 1,
    /// The input is well formed but mathematically invalid.
    MathError = 2,
    /// A configured size cap was exceeded.
    CapExceeded = 3,
    NullArgument = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

/// Output format for `fr_run`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrFormat {
    Text = 0,
    Json = 1,
    Dot = 2,
}

/// A parsed and validated job.
pub struct FrJob {
    job: Job,
}

/// Character table, invariant basis and presentations of a job.
pub struct FrAnalysis {
    analysis: Analysis,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> FrStatus {
    set_error(&e.to_string());
    match e.class() {
        ErrorClass::Input => FrStatus::InputError,
        ErrorClass::Mathematical => FrStatus::MathError,
        ErrorClass::Cap => FrStatus::CapExceeded,
    }
}

fn guard(f: impl FnOnce() -> FrStatus) -> FrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            FrStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, FrStatus> {
    if p.is_null() {
        set_error("null argument");
        return Err(FrStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        FrStatus::InvalidUtf8
    })
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("no interior nul")
        .into_raw()
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

fn finish_job(spec: fusionrep::Result<JobSpec>, dir: &Path, out: *mut *mut FrJob) -> FrStatus {
    let built = spec.and_then(|s| Job::build(s, dir));
    match built {
        Ok(job) => {
            unsafe { *out = Box::into_raw(Box::new(FrJob { job })) };
            FrStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Parses a job from text. Relative paths in the job (cocycle tables,
/// name files) resolve against `base_dir`, which may be null for the
/// current directory.
///
/// # Safety
/// `text` must be a nul-terminated string, `base_dir` null or a
/// nul-terminated string, and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fr_job_parse(
    text: *const c_char,
    base_dir: *const c_char,
    out: *mut *mut FrJob,
) -> FrStatus {
    guard(|| {
        if out.is_null() {
            set_error("null argument");
            return FrStatus::NullArgument;
        }
        let text = tri!(str_arg(text));
        let dir = if base_dir.is_null() {
            "."
        } else {
            tri!(str_arg(base_dir))
        };
        finish_job(JobSpec::parse(text), Path::new(dir), out)
    })
}

/// Loads a job file.
///
/// # Safety
/// `path` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fr_job_load(path: *const c_char, out: *mut *mut FrJob) -> FrStatus {
    guard(|| {
        if out.is_null() {
            set_error("null argument");
            return FrStatus::NullArgument;
        }
        let path = tri!(str_arg(path));
        match JobSpec::load(Path::new(path)) {
            Ok((spec, dir)) => finish_job(Ok(spec), &dir, out),
            Err(e) => status_of(&e),
        }
    })
}

/// # Safety
/// `job` must be null or a handle from `fr_job_parse`/`fr_job_load` not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn fr_job_free(job: *mut FrJob) {
    if !job.is_null() {
        drop(Box::from_raw(job));
    }
}

/// Runs one of `chartable`, `fusion-classes`, `saturation`, `repring`,
/// `ktheory`, `spectrum`, `twisted`, `adic` and returns its output.
///
/// # Safety
/// `job` must be a live handle, `command` a nul-terminated string and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fr_run(
    job: *const FrJob,
    command: *const c_char,
    format: FrFormat,
    out: *mut *mut c_char,
) -> FrStatus {
    guard(|| {
        if job.is_null() || out.is_null() {
            set_error("null argument");
            return FrStatus::NullArgument;
        }
        let command: Command = match tri!(str_arg(command)).parse() {
            Ok(c) => c,
            Err(e) => return status_of(&e),
        };
        let format = match format {
            FrFormat::Text => Format::Text,
            FrFormat::Json => Format::Json,
            FrFormat::Dot => Format::Dot,
        };
        match run(command, &(*job).job).and_then(|r| r.render(format)) {
            Ok(s) => {
                *out = into_c_string(s);
                FrStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread; empty if none. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn fr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `job` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fr_analyze(job: *const FrJob, out: *mut *mut FrAnalysis) -> FrStatus {
    guard(|| {
        if job.is_null() || out.is_null() {
            set_error("null argument");
            return FrStatus::NullArgument;
        }
        match analyze(&(*job).job) {
            Ok(analysis) => {
                *out = Box::into_raw(Box::new(FrAnalysis { analysis }));
                FrStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// # Safety
/// `a` must be null or a handle from `fr_analyze` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fr_analysis_free(a: *mut FrAnalysis) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Number of irreducible invariant characters, the trivial one included.
///
/// # Safety
/// `a` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fr_analysis_basis_len(a: *const FrAnalysis) -> usize {
    if a.is_null() {
        return 0;
    }
    (&*a).analysis.basis.len()
}

/// Degree of basis element `i`, or -1 when out of range.
///
/// # Safety
/// `a` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fr_analysis_degree(a: *const FrAnalysis, i: usize) -> i64 {
    if a.is_null() {
        return -1;
    }
    (&*a).analysis.basis.degrees.get(i).copied().unwrap_or(-1)
}

/// Name of basis element `i`.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fr_analysis_name(
    a: *const FrAnalysis,
    i: usize,
    out: *mut *mut c_char,
) -> FrStatus {
    guard(|| {
        if a.is_null() || out.is_null() {
            set_error("null argument");
            return FrStatus::NullArgument;
        }
        match (&*a).analysis.basis.names.get(i) {
            Some(n) => {
                *out = into_c_string(n.clone());
                FrStatus::Ok
            }
            None => status_of(&Error::Invalid(format!("basis index {i} out of range"))),
        }
    })
}

/// The representation ring as `Z[X,…]/( … )`.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fr_analysis_presentation(
    a: *const FrAnalysis,
    out: *mut *mut c_char,
) -> FrStatus {
    guard(|| {
        if a.is_null() || out.is_null() {
            set_error("null argument");
            return FrStatus::NullArgument;
        }
        *out = into_c_string((&*a).analysis.presentation.to_string());
        FrStatus::Ok
    })
}

/// The completion as `Z[[v,…]]/( … )`.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fr_analysis_completed(
    a: *const FrAnalysis,
    out: *mut *mut c_char,
) -> FrStatus {
    guard(|| {
        if a.is_null() || out.is_null() {
            set_error("null argument");
            return FrStatus::NullArgument;
        }
        *out = into_c_string((&*a).analysis.completed.to_string());
        FrStatus::Ok
    })
}
