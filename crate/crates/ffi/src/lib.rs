//! C ABI over the craig-lattice library.
//!
//! Every function returns a [`CraigStatus`]. Results go through out-pointers;
//! handles are opaque and released with their `_free` function. Strings
//! returned through out-pointers are released with [`craig_string_free`].
//! After a failure, [`craig_last_error`] describes it on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use craig_lattice::codes::gv_max_k;
use craig_lattice::craig::{center_density_lb, craig_basis, write_basis, CraigParams, IntegerLattice, LogDensity};
use craig_lattice::lift::mordell_weil_density;
use craig_lattice::svp::shortest_vector;
use craig_lattice::Error;
use num_traits::ToPrimitive;

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CraigStatus {
    Ok = 0,
    /// A required pointer argument was null.
    Null = 1,
    /// Parameters rejected by the library.
    Invalid = 2,
    /// Input exceeds a size limit.
    Capacity = 3,
    /// Unexpected failure, including a caught panic.
    Internal = 4,
}

/// A constructed `A_n^(m,l)` with its basis.
pub struct CraigLattice {
    params: CraigParams,
    lattice: IntegerLattice,
}

/// An exact center density.
pub struct CraigDensity {
    density: LogDensity,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CraigStatus {
    match e {
        Error::Capacity { .. } => CraigStatus::Capacity,
        Error::Io(_) => CraigStatus::Internal,
        _ => CraigStatus::Invalid,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (CraigStatus, String)>) -> CraigStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CraigStatus::Ok,
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            CraigStatus::Internal
        }
    }
}

fn lib<T>(r: craig_lattice::Result<T>) -> Result<T, (CraigStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (CraigStatus, String) {
    (CraigStatus::Null, format!("{what} is null"))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (CraigStatus, String)> {
    let c = CString::new(s).map_err(|_| (CraigStatus::Internal, "string holds a nul byte".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn craig_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn craig_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds `A_n^(m,l)`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn craig_lattice_new(n: usize, m: usize, l: u64, out: *mut *mut CraigLattice) -> CraigStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let params = lib(CraigParams::new(n, m, l))?;
        let lattice = lib(craig_basis(&params))?;
        *out = Box::into_raw(Box::new(CraigLattice { params, lattice }));
        Ok(())
    })
}

/// Releases a lattice handle. Null is ignored.
///
/// # Safety
/// `h` must come from [`craig_lattice_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn craig_lattice_free(h: *mut CraigLattice) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Rank of the lattice.
///
/// # Safety
/// `h` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn craig_lattice_rank(h: *const CraigLattice, out: *mut usize) -> CraigStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("lattice"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = h.lattice.rank();
        Ok(())
    })
}

/// Gram determinant `l^(2(m-1)) (n+1)` as a decimal string.
///
/// # Safety
/// `h` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn craig_lattice_gram_det(h: *const CraigLattice, out: *mut *mut c_char) -> CraigStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("lattice"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        put_string(out, h.lattice.vol_sq().to_string())
    })
}

/// Basis in the text format: `"N r"` then `r` rows.
///
/// # Safety
/// `h` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn craig_lattice_basis_text(h: *const CraigLattice, out: *mut *mut c_char) -> CraigStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("lattice"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        put_string(out, write_basis(&h.lattice))
    })
}

/// Exact minimum norm by enumeration.
///
/// # Safety
/// `h` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn craig_lattice_min_norm(h: *const CraigLattice, out: *mut u64) -> CraigStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("lattice"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let v = lib(shortest_vector(&h.lattice))?;
        *out = v
            .norm
            .to_u64()
            .ok_or_else(|| (CraigStatus::Capacity, "norm exceeds 64 bits".to_string()))?;
        Ok(())
    })
}

/// Density of the handle's lattice lifted through a `k`-dimensional code
/// (`k = 0` for the bare lattice).
///
/// # Safety
/// `h` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn craig_lattice_density(h: *const CraigLattice, k: usize, out: *mut *mut CraigDensity) -> CraigStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("lattice"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let density = center_density_lb(&h.params, k);
        *out = Box::into_raw(Box::new(CraigDensity { density }));
        Ok(())
    })
}

/// Density bound of `A_n^(m,l)` with a `k`-dimensional code, without
/// building a basis.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn craig_density_new(n: usize, m: usize, l: u64, k: usize, out: *mut *mut CraigDensity) -> CraigStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let params = lib(CraigParams::new(n, m, l))?;
        let density = center_density_lb(&params, k);
        *out = Box::into_raw(Box::new(CraigDensity { density }));
        Ok(())
    })
}

/// Mordell-Weil reference density in dimension `2p-2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn craig_density_mordell_weil(p: u64, out: *mut *mut CraigDensity) -> CraigStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let density = lib(mordell_weil_density(p))?;
        *out = Box::into_raw(Box::new(CraigDensity { density }));
        Ok(())
    })
}

/// Releases a density handle. Null is ignored.
///
/// # Safety
/// `h` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn craig_density_free(h: *mut CraigDensity) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// `log2` of the density, correctly rounded to `digits` decimals.
///
/// # Safety
/// `h` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn craig_density_log2(h: *const CraigDensity, digits: u32, out: *mut *mut c_char) -> CraigStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("density"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        if digits > 64 {
            return Err((CraigStatus::Invalid, format!("digits {digits} above 64")));
        }
        put_string(out, h.density.render(digits as usize))
    })
}

/// Floating-point estimate of `log2` of the density.
///
/// # Safety
/// `h` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn craig_density_log2_approx(h: *const CraigDensity, out: *mut f64) -> CraigStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("density"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = h.density.log2_approx();
        Ok(())
    })
}

/// Largest `k` for which the Gilbert-Varshamov inequality guarantees an
/// `[n, k, d]` binary code.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn craig_gv_max_k(n: usize, d: usize, out: *mut usize) -> CraigStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = lib(gv_max_k(n, d))?;
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CStr;

    unsafe fn take(s: *mut c_char) -> String {
        let out = CStr::from_ptr(s).to_str().unwrap().to_string();
        craig_string_free(s);
        out
    }

    #[test]
    fn lattice_round_trip() {
        unsafe {
            let mut h = ptr::null_mut();
            assert_eq!(craig_lattice_new(6, 2, 7, &mut h), CraigStatus::Ok);
            let mut r = 0;
            assert_eq!(craig_lattice_rank(h, &mut r), CraigStatus::Ok);
            assert_eq!(r, 6);
            let mut s = ptr::null_mut();
            assert_eq!(craig_lattice_gram_det(h, &mut s), CraigStatus::Ok);
            assert_eq!(take(s), "343");
            let mut norm = 0;
            assert_eq!(craig_lattice_min_norm(h, &mut norm), CraigStatus::Ok);
            assert_eq!(norm, 4);
            craig_lattice_free(h);
        }
    }

    #[test]
    fn errors_set_status_and_message() {
        unsafe {
            let mut h = ptr::null_mut();
            assert_eq!(craig_lattice_new(10, 9, 11, &mut h), CraigStatus::Invalid);
            assert!(h.is_null());
            assert!(!craig_last_error().is_null());
            assert_eq!(craig_lattice_new(600, 2, 601, &mut h), CraigStatus::Capacity);
            assert_eq!(craig_lattice_new(6, 2, 7, ptr::null_mut()), CraigStatus::Null);
            assert_eq!(craig_lattice_rank(ptr::null(), &mut 0), CraigStatus::Null);
            let mut k = 0;
            assert_eq!(craig_gv_max_k(7, 3, &mut k), CraigStatus::Ok);
            assert!(craig_last_error().is_null());
        }
    }
}
