//! C ABI for the `hurwitz-ga` kernel.
//!
//! Multivectors and tables are opaque handles owned by the caller and freed
//! with `hg_multivector_free` / `hg_table_free`. Strings returned through
//! `char **` out-parameters are owned by the caller and freed with
//! `hg_string_free`. Every fallible call returns an [`HgStatus`]; on failure
//! `hg_last_error_message` describes the error for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hurwitz_ga::canonical::{AlgebraTable, HurwitzClass};
use hurwitz_ga::catalog::AlgebraSpec;
use hurwitz_ga::ga::{Involution, Multivector, Signature};
use hurwitz_ga::isomorphism::find_isomorphism;
use hurwitz_ga::octonify::{bullet_product, classify, octonion_norm, BulletVariant};
use hurwitz_ga::{Error, Rational};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    SignatureMismatch = 4,
    NotFound = 5,
    Internal = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HgVariant {
    Plus = 0,
    Minus = 1,
}

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HgInvolution {
    Reversion = 0,
    Inversion = 1,
    CliffordConjugation = 2,
    FullGradeInversion = 3,
}

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HgClass {
    R = 0,
    C = 1,
    Cs = 2,
    H = 3,
    Hs = 4,
    O = 5,
    Os = 6,
}

/// Opaque multivector handle.
pub struct HgMultivector(Multivector);

/// Opaque structure-constant table handle.
pub struct HgTable(AlgebraTable);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(HgStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_) => HgStatus::ParseError,
            Error::SignatureMismatch { .. } | Error::TableMismatch { .. } => HgStatus::SignatureMismatch,
            Error::InvalidSignature(_)
            | Error::InvalidPq { .. }
            | Error::InvalidGrade(_)
            | Error::InvalidTable(_)
            | Error::DimensionMismatch(..) => HgStatus::InvalidArgument,
            Error::Inconsistency(_) => HgStatus::Internal,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(HgStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status and the thread's
/// last-error message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            HgStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside hurwitz-ga");
            HgStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(HgStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(HgStatus::Internal, "string contains NUL".into()))?;
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(c.into_raw());
    Ok(())
}

unsafe fn write_mv(out: *mut *mut HgMultivector, m: Multivector) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(HgMultivector(m))));
    Ok(())
}

fn variant(v: HgVariant) -> BulletVariant {
    match v {
        HgVariant::Plus => BulletVariant::Plus,
        HgVariant::Minus => BulletVariant::Minus,
    }
}

fn class_code(c: HurwitzClass) -> HgClass {
    match c {
        HurwitzClass::R => HgClass::R,
        HurwitzClass::C => HgClass::C,
        HurwitzClass::Cs => HgClass::Cs,
        HurwitzClass::H => HgClass::H,
        HurwitzClass::Hs => HgClass::Hs,
        HurwitzClass::O => HgClass::O,
        HurwitzClass::Os => HgClass::Os,
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn hg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn hg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `a0 + a1*e1 + ... + a7*e123` in G(p,q).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_multivector_parse(
    p: u32,
    q: u32,
    text: *const c_char,
    out: *mut *mut HgMultivector,
) -> HgStatus {
    guard(|| {
        let sig = Signature::from_pq(p, q)?;
        let m = Multivector::parse(sig, read_str(text, "text")?)?;
        write_mv(out, m)
    })
}

/// Builds a multivector from eight fractions `nums[i] / dens[i]` in the
/// coefficient order `1, e12, e23, e13, e1, e2, e3, e123`.
///
/// # Safety
/// `nums` and `dens` must point to 8 readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_multivector_from_coeffs(
    p: u32,
    q: u32,
    nums: *const i64,
    dens: *const i64,
    out: *mut *mut HgMultivector,
) -> HgStatus {
    guard(|| {
        let sig = Signature::from_pq(p, q)?;
        if nums.is_null() || dens.is_null() {
            return Err(null("coefficient array"));
        }
        let (nums, dens) = (std::slice::from_raw_parts(nums, 8), std::slice::from_raw_parts(dens, 8));
        if dens.contains(&0) {
            return Err(Fail(HgStatus::InvalidArgument, "zero denominator".into()));
        }
        let xs = std::array::from_fn(|i| Rational::new(nums[i], dens[i]));
        write_mv(out, Multivector::from_even_first(sig, xs))
    })
}

/// # Safety
/// `m` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn hg_multivector_free(m: *mut HgMultivector) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Text form, e.g. `1 - 2*e12 + 1/3*e123`.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_multivector_to_string(m: *const HgMultivector, out: *mut *mut c_char) -> HgStatus {
    guard(|| write_string(out, borrow(m, "multivector")?.0.to_string()))
}

/// `{"signature":[l1,l2,l3],"coeffs":[x0..x7]}` with coefficients as strings.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_multivector_to_json(m: *const HgMultivector, out: *mut *mut c_char) -> HgStatus {
    guard(|| {
        let json = serde_json::to_string(&borrow(m, "multivector")?.0).map_err(|e| Fail(HgStatus::Internal, e.to_string()))?;
        write_string(out, json)
    })
}

/// Exact equality of two multivectors (including signature).
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_multivector_equal(a: *const HgMultivector, b: *const HgMultivector, out: *mut bool) -> HgStatus {
    guard(|| write_out(out, borrow(a, "a")?.0 == borrow(b, "b")?.0))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_geometric_product(
    a: *const HgMultivector,
    b: *const HgMultivector,
    out: *mut *mut HgMultivector,
) -> HgStatus {
    guard(|| {
        let m = borrow(a, "a")?.0.gp(&borrow(b, "b")?.0)?;
        write_mv(out, m)
    })
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_bullet_product(
    a: *const HgMultivector,
    b: *const HgMultivector,
    v: HgVariant,
    out: *mut *mut HgMultivector,
) -> HgStatus {
    guard(|| {
        let m = bullet_product(&borrow(a, "a")?.0, &borrow(b, "b")?.0, variant(v))?;
        write_mv(out, m)
    })
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_involution(
    a: *const HgMultivector,
    which: HgInvolution,
    out: *mut *mut HgMultivector,
) -> HgStatus {
    guard(|| {
        let inv = match which {
            HgInvolution::Reversion => Involution::Reversion,
            HgInvolution::Inversion => Involution::Inversion,
            HgInvolution::CliffordConjugation => Involution::CliffordConjugation,
            HgInvolution::FullGradeInversion => Involution::FullGradeInversion,
        };
        write_mv(out, inv.apply(&borrow(a, "a")?.0))
    })
}

/// Octonionic norm as an exact fraction string (`p` or `p/q`).
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_octonion_norm(a: *const HgMultivector, v: HgVariant, out: *mut *mut c_char) -> HgStatus {
    guard(|| write_string(out, octonion_norm(&borrow(a, "a")?.0, variant(v)).to_string()))
}

/// `O` or `Os` for the bullet algebra on G(p,q).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_classify(p: u32, q: u32, v: HgVariant, out: *mut HgClass) -> HgStatus {
    guard(|| {
        let sig = Signature::from_pq(p, q)?;
        write_out(out, class_code(classify(sig, variant(v))))
    })
}

/// Builds a table from a spec: a class name, `ga:p,q`, `bullet:p,q:+|-` or
/// `biq:C|Cs,H|Hs`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_table_build(spec: *const c_char, out: *mut *mut HgTable) -> HgStatus {
    guard(|| {
        let spec: AlgebraSpec = read_str(spec, "spec")?.parse()?;
        let table = spec.build()?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        out.write(Box::into_raw(Box::new(HgTable(table))));
        Ok(())
    })
}

/// # Safety
/// `t` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn hg_table_free(t: *mut HgTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Dimension of the table; 0 for a null handle.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_table_dim(t: *const HgTable) -> usize {
    t.as_ref().map_or(0, |t| t.0.dim())
}

/// `e_i e_j = sign · e_index`.
///
/// # Safety
/// `t` must be a live handle; `index` and `sign` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_table_entry(
    t: *const HgTable,
    i: usize,
    j: usize,
    index: *mut usize,
    sign: *mut i8,
) -> HgStatus {
    guard(|| {
        let t = &borrow(t, "table")?.0;
        if i >= t.dim() || j >= t.dim() {
            return Err(Fail(HgStatus::InvalidArgument, format!("({i}, {j}) outside a {0}x{0} table", t.dim())));
        }
        let e = t.entry(i, j);
        write_out(index, e.index)?;
        write_out(sign, e.sign)
    })
}

/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_table_to_json(t: *const HgTable, out: *mut *mut c_char) -> HgStatus {
    guard(|| write_string(out, borrow(t, "table")?.0.to_json()))
}

/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_table_to_csv(t: *const HgTable, out: *mut *mut c_char) -> HgStatus {
    guard(|| write_string(out, borrow(t, "table")?.0.to_csv()))
}

/// Searches a signed-basis isomorphism and writes it as JSON
/// `{source, target, map}`. Returns `NotFound` when none exists.
///
/// # Safety
/// `source`, `target` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hg_find_isomorphism(
    source: *const HgTable,
    target: *const HgTable,
    out: *mut *mut c_char,
) -> HgStatus {
    guard(|| {
        let (s, t) = (&borrow(source, "source")?.0, &borrow(target, "target")?.0);
        match find_isomorphism(s, t)? {
            Some(w) => write_string(out, w.to_json()),
            None => {
                if !out.is_null() {
                    out.write(ptr::null_mut());
                }
                Err(Fail(HgStatus::NotFound, format!("no signed-basis isomorphism {} -> {}", s.name(), t.name())))
            }
        }
    })
}
