//! C ABI over `sectorpack`.
//!
//! Objects cross the boundary as opaque handles created by `*_new`/`*_parse`
//! and released by the matching `*_free`. Every fallible call returns an
//! [`SpStatus`]; on failure a message is available from
//! [`sp_last_error_message`] on the same thread.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_traits::ToPrimitive;
use sectorpack::collision::{find_collision, DEFAULT_BUDGET};
use sectorpack::density::closed_form_density;
use sectorpack::parse::{parse_cone, parse_polynomial};
use sectorpack::verifier::{verify_prefix, Counterexample, VerificationReport};
use sectorpack::{AffineCone, BigInt, Error, IVQuadratic, LatticePoint, Sector, SectorSlope};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    ZeroDiscriminant = 5,
    NonzeroDiscriminant = 6,
    Unbounded = 7,
    BudgetExhausted = 8,
    Overflow = 9,
    Divergent = 10,
    Degenerate = 11,
    Panic = 12,
}

/// Opaque integer-valued quadratic.
pub struct SpPoly(IVQuadratic);

/// Opaque sector `S(α)`.
pub struct SpSector(Sector);

/// Opaque affine cone.
pub struct SpCone(AffineCone);

/// Outcome kinds of [`sp_verify_prefix`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpVerifyKind {
    Verified = 0,
    Collision = 1,
    Gap = 2,
    OutOfRange = 3,
    Unbounded = 4,
}

/// Prefix verification result. Point fields are meaningful per `kind`:
/// `p`/`q` for a collision, `p` for an out-of-range point; `value` is the
/// collided, missing or negative value.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SpVerifyResult {
    pub kind: i32,
    pub verified_up_to: u64,
    pub px: i64,
    pub py: i64,
    pub qx: i64,
    pub qy: i64,
    pub value: i64,
}

/// A collision witness: `P(px, py) = P(qx, qy) = value`, with the points
/// `anchor ± (r, s)` on the line `r·y − s·x = i`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SpCollision {
    pub px: i64,
    pub py: i64,
    pub qx: i64,
    pub qy: i64,
    pub value: i64,
    pub r: i64,
    pub s: i64,
    pub i: i64,
    pub anchor_x: i64,
    pub anchor_y: i64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> SpStatus {
    match e {
        Error::Parse(_) | Error::InvalidSlope(_) => SpStatus::Parse,
        Error::ZeroDiscriminant => SpStatus::ZeroDiscriminant,
        Error::NonzeroDiscriminant => SpStatus::NonzeroDiscriminant,
        Error::UnboundedRegion(_) => SpStatus::Unbounded,
        Error::BudgetExhausted { .. } => SpStatus::BudgetExhausted,
        Error::Overflow(_) => SpStatus::Overflow,
        Error::DivergentIntegral => SpStatus::Divergent,
        Error::DegenerateCone(_)
        | Error::DegenerateAnchor
        | Error::DegenerateDirection { .. }
        | Error::DegenerateEquation
        | Error::ZeroDirection => SpStatus::Degenerate,
        Error::NotIntegerValued(_) | Error::NotCoprime { .. } | Error::InvalidArgument(_) => {
            SpStatus::InvalidArgument
        }
    }
}

fn fail(e: Error) -> SpStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

/// Runs `f`, converting panics into [`SpStatus::Panic`].
fn guard(f: impl FnOnce() -> SpStatus) -> SpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            SpStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, SpStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(SpStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        SpStatus::InvalidUtf8
    })
}

fn to_i64(v: &BigInt, what: &str) -> Result<i64, SpStatus> {
    v.to_i64().ok_or_else(|| {
        set_error(format!("{what} = {v} does not fit in 64 bits"));
        SpStatus::Overflow
    })
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! nonnull {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            set_error(concat!("null pointer: ", stringify!($p)));
            return SpStatus::NullPointer;
        })+
    };
}

/// Copies the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `len`). Returns the full message length excluding the NUL,
/// or 0 when there is none.
#[no_mangle]
pub unsafe extern "C" fn sp_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let Some(msg) = e.as_ref() else { return 0 };
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// Builds `A x(x−1)/2 + Bxy + C y(y−1)/2 + Dx + Ey + F` from `coeffs[6]`.
#[no_mangle]
pub unsafe extern "C" fn sp_poly_new(coeffs: *const i64, out: *mut *mut SpPoly) -> SpStatus {
    nonnull!(coeffs, out);
    guard(|| {
        let mut c = [0i64; 6];
        ptr::copy_nonoverlapping(coeffs, c.as_mut_ptr(), 6);
        *out = Box::into_raw(Box::new(SpPoly(IVQuadratic::from_sextuple(c))));
        SpStatus::Ok
    })
}

/// Parses `"A B C D E F"` or a closed form such as `"x^2+y^2"`.
#[no_mangle]
pub unsafe extern "C" fn sp_poly_parse(text: *const c_char, out: *mut *mut SpPoly) -> SpStatus {
    nonnull!(out);
    guard(|| {
        let s = tri!(str_arg(text));
        match parse_polynomial(s) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(SpPoly(p)));
                SpStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn sp_poly_free(p: *mut SpPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// `P(x, y)`; `SP_STATUS_OVERFLOW` when the value leaves 64 bits.
#[no_mangle]
pub unsafe extern "C" fn sp_poly_eval(p: *const SpPoly, x: i64, y: i64, out: *mut i64) -> SpStatus {
    nonnull!(p, out);
    guard(|| {
        let v = (*p).0.eval(LatticePoint::new(x, y));
        *out = tri!(to_i64(&v, "P(x, y)"));
        SpStatus::Ok
    })
}

/// `B² − AC`.
#[no_mangle]
pub unsafe extern "C" fn sp_poly_discriminant(p: *const SpPoly, out: *mut i64) -> SpStatus {
    nonnull!(p, out);
    guard(|| {
        *out = tri!(to_i64(&(*p).0.discriminant(), "discriminant"));
        SpStatus::Ok
    })
}

/// Parses a slope: `"p/q"`, `"inf"` or `"a+b*sqrt(d)"`.
#[no_mangle]
pub unsafe extern "C" fn sp_sector_parse(text: *const c_char, out: *mut *mut SpSector) -> SpStatus {
    nonnull!(out);
    guard(|| {
        let s = tri!(str_arg(text));
        match s.parse::<SectorSlope>() {
            Ok(a) => {
                *out = Box::into_raw(Box::new(SpSector(Sector::new(a))));
                SpStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn sp_sector_free(s: *mut SpSector) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn sp_sector_contains(s: *const SpSector, x: i64, y: i64, out: *mut bool) -> SpStatus {
    nonnull!(s, out);
    guard(|| {
        *out = (*s).0.contains(LatticePoint::new(x, y));
        SpStatus::Ok
    })
}

/// Cone `apex + u·g1 + v·g2`; each argument is `"x,y"` with rational parts.
#[no_mangle]
pub unsafe extern "C" fn sp_cone_parse(
    apex: *const c_char,
    g1: *const c_char,
    g2: *const c_char,
    out: *mut *mut SpCone,
) -> SpStatus {
    nonnull!(out);
    guard(|| {
        let (a, b, c) = (tri!(str_arg(apex)), tri!(str_arg(g1)), tri!(str_arg(g2)));
        match parse_cone(a, b, c) {
            Ok(cone) => {
                *out = Box::into_raw(Box::new(SpCone(cone)));
                SpStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn sp_cone_free(c: *mut SpCone) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Verifies that `P` enumerates the sector's points with values `0..=n`.
#[no_mangle]
pub unsafe extern "C" fn sp_verify_prefix(
    p: *const SpPoly,
    s: *const SpSector,
    n: u64,
    out: *mut SpVerifyResult,
) -> SpStatus {
    nonnull!(p, s, out);
    guard(|| {
        let report = match verify_prefix(&(*p).0, &(*s).0, n) {
            Ok(r) => r,
            Err(e) => return fail(e),
        };
        let mut r = SpVerifyResult::default();
        match report {
            VerificationReport::VerifiedUpTo { n } => {
                r.kind = SpVerifyKind::Verified as i32;
                r.verified_up_to = n;
            }
            VerificationReport::Failed { counterexample } => match counterexample {
                Counterexample::Collision { p, q, value } => {
                    r.kind = SpVerifyKind::Collision as i32;
                    (r.px, r.py, r.qx, r.qy) = (p.x, p.y, q.x, q.y);
                    r.value = tri!(to_i64(&value, "value"));
                }
                Counterexample::Gap { value } => {
                    r.kind = SpVerifyKind::Gap as i32;
                    r.value = tri!(to_i64(&value, "value"));
                }
                Counterexample::OutOfRange { point, value } => {
                    r.kind = SpVerifyKind::OutOfRange as i32;
                    (r.px, r.py) = (point.x, point.y);
                    r.value = tri!(to_i64(&value, "value"));
                }
                Counterexample::Unbounded { reason } => {
                    r.kind = SpVerifyKind::Unbounded as i32;
                    set_error(reason);
                }
            },
        }
        *out = r;
        SpStatus::Ok
    })
}

/// Two distinct cone points with equal value; `budget = 0` selects the
/// default of one million examined points.
#[no_mangle]
pub unsafe extern "C" fn sp_find_collision(
    p: *const SpPoly,
    cone: *const SpCone,
    budget: u64,
    out: *mut SpCollision,
) -> SpStatus {
    nonnull!(p, cone, out);
    guard(|| {
        let budget = if budget == 0 { DEFAULT_BUDGET } else { budget };
        let w = match find_collision(&(*p).0, &(*cone).0, budget) {
            Ok(w) => w,
            Err(e) => return fail(e),
        };
        *out = SpCollision {
            px: w.p.x,
            py: w.p.y,
            qx: w.q.x,
            qy: w.q.y,
            value: tri!(to_i64(&w.value, "value")),
            r: w.r,
            s: w.s,
            i: tri!(to_i64(&w.i, "i")),
            anchor_x: w.anchor.x,
            anchor_y: w.anchor.y,
        };
        SpStatus::Ok
    })
}

/// `∫₀^α dt/(A + 2Bt + Ct²)` for `B² = AC`, as a double.
#[no_mangle]
pub unsafe extern "C" fn sp_closed_form_density(
    a: i64,
    b: i64,
    c: i64,
    s: *const SpSector,
    out: *mut f64,
) -> SpStatus {
    nonnull!(s, out);
    guard(|| match closed_form_density(&a.into(), &b.into(), &c.into(), &(*s).0.alpha) {
        Ok(v) => {
            *out = v.to_f64();
            SpStatus::Ok
        }
        Err(e) => fail(e),
    })
}
