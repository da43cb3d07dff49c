//! C ABI over the fracstefan library.
//!
//! Every function returns an [`FsStatus`] and writes results through out
//! pointers. Solutions are opaque heap handles released with
//! `fs_solution_free`. After a failure `fs_last_error_message` describes it
//! (per thread, valid until the next call on that thread).

use fracstefan::similarity::{
    make_one_phase, solve_flux, solve_temperature, FaceCondition, FluxProblem, Material, Medium, Phase, Problem,
    SimilaritySolution, TemperatureProblem,
};
use fracstefan::special_functions::{mainardi, wright, SeriesConfig, WrightArgs};
use fracstefan::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FsStatus {
    Ok = 0,
    InvalidArgument = 1,
    SubcriticalFlux = 2,
    NoBracket = 3,
    NullPointer = 4,
    Numerical = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FsPhase {
    Solid = 0,
    Liquid = 1,
}

/// Thermal data. With `initial_temperature == melting_temperature` the
/// problem is one-phase and the solid fields are ignored.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct FsMedium {
    pub k_solid: f64,
    pub c_solid: f64,
    pub k_liquid: f64,
    pub c_liquid: f64,
    pub density: f64,
    pub latent_heat: f64,
    pub initial_temperature: f64,
    pub melting_temperature: f64,
    pub alpha: f64,
}

/// Opaque solved problem.
pub struct FsSolution {
    inner: SimilaritySolution,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> FsStatus {
    match e {
        Error::SubcriticalFlux { .. } => FsStatus::SubcriticalFlux,
        Error::NoBracket { .. } => FsStatus::NoBracket,
        Error::InvalidParameter { .. }
        | Error::Domain { .. }
        | Error::Grid(_)
        | Error::Unsupported(_)
        | Error::SupercriticalFlux { .. } => FsStatus::InvalidArgument,
        _ => FsStatus::Numerical,
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard<F: FnOnce() -> Result<(), FsStatus>>(f: F) -> FsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FsStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            FsStatus::Panic
        }
    }
}

fn lib<T>(r: fracstefan::Result<T>) -> Result<T, FsStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, FsStatus> {
    p.as_mut().ok_or_else(|| {
        set_error("null output pointer".into());
        FsStatus::NullPointer
    })
}

unsafe fn input<'a, T>(p: *const T) -> Result<&'a T, FsStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null input pointer".into());
        FsStatus::NullPointer
    })
}

fn build(m: &FsMedium, face: FaceCondition) -> fracstefan::Result<Problem> {
    let liquid = Material::new(m.k_liquid, m.c_liquid)?;
    if m.initial_temperature == m.melting_temperature {
        return make_one_phase(face, liquid, m.density, m.latent_heat, m.melting_temperature, m.alpha);
    }
    let medium = Medium {
        solid: Material::new(m.k_solid, m.c_solid)?,
        liquid,
        density: m.density,
        latent_heat: m.latent_heat,
        initial_temperature: m.initial_temperature,
        melting_temperature: m.melting_temperature,
        alpha: m.alpha,
    };
    Ok(match face {
        FaceCondition::Flux(q) => Problem::Flux(FluxProblem::new(medium, q)?),
        FaceCondition::Temperature(t) => Problem::Temperature(TemperatureProblem::new(medium, t)?),
    })
}

fn solve(m: &FsMedium, face: FaceCondition, tol: f64) -> fracstefan::Result<SimilaritySolution> {
    match build(m, face)? {
        Problem::Flux(p) => solve_flux(&p, tol),
        Problem::Temperature(p) => solve_temperature(&p, tol),
    }
}

unsafe fn solve_into(medium: *const FsMedium, face: FaceCondition, tol: f64, result: *mut *mut FsSolution) -> FsStatus {
    guard(|| {
        let m = input(medium)?;
        let slot = out(result)?;
        *slot = std::ptr::null_mut();
        let inner = lib(solve(m, face, tol))?;
        *slot = Box::into_raw(Box::new(FsSolution { inner }));
        Ok(())
    })
}

/// Solves the problem with flux q0·t^{-α/2} at the face.
///
/// # Safety
/// `medium` must point to a valid `FsMedium`; `result` to writable storage.
#[no_mangle]
pub unsafe extern "C" fn fs_solve_flux(
    medium: *const FsMedium,
    q0: f64,
    tol: f64,
    result: *mut *mut FsSolution,
) -> FsStatus {
    solve_into(medium, FaceCondition::Flux(q0), tol, result)
}

/// Solves the problem with temperature t0 at the face.
///
/// # Safety
/// As for `fs_solve_flux`.
#[no_mangle]
pub unsafe extern "C" fn fs_solve_temperature(
    medium: *const FsMedium,
    t0: f64,
    tol: f64,
    result: *mut *mut FsSolution,
) -> FsStatus {
    solve_into(medium, FaceCondition::Temperature(t0), tol, result)
}

/// Releases a solution; null is ignored.
///
/// # Safety
/// `sol` must come from an `fs_solve_*` call and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fs_solution_free(sol: *mut FsSolution) {
    if !sol.is_null() {
        drop(Box::from_raw(sol));
    }
}

/// Front coefficient μ (or ξ for temperature data).
///
/// # Safety
/// Valid handle and output pointer.
#[no_mangle]
pub unsafe extern "C" fn fs_solution_mu(sol: *const FsSolution, mu: *mut f64) -> FsStatus {
    guard(|| {
        *out(mu)? = input(sol)?.inner.mu();
        Ok(())
    })
}

/// Relative root residual of the solve.
///
/// # Safety
/// Valid handle and output pointer.
#[no_mangle]
pub unsafe extern "C" fn fs_solution_residual(sol: *const FsSolution, residual: *mut f64) -> FsStatus {
    guard(|| {
        *out(residual)? = input(sol)?.inner.residual();
        Ok(())
    })
}

/// r(t) = μ λ_s t^{α/2}.
///
/// # Safety
/// Valid handle and output pointer.
#[no_mangle]
pub unsafe extern "C" fn fs_front_position(sol: *const FsSolution, t: f64, r: *mut f64) -> FsStatus {
    guard(|| {
        if !(t >= 0.0 && t.is_finite()) {
            set_error(format!("t must be finite and >= 0, got {t}"));
            return Err(FsStatus::InvalidArgument);
        }
        *out(r)? = input(sol)?.inner.front_position(t);
        Ok(())
    })
}

/// Temperature at (x, t), x >= 0, t > 0, and the phase it lies in.
///
/// # Safety
/// Valid handle and output pointers.
#[no_mangle]
pub unsafe extern "C" fn fs_temperature(
    sol: *const FsSolution,
    x: f64,
    t: f64,
    temperature: *mut f64,
    phase: *mut FsPhase,
) -> FsStatus {
    guard(|| {
        let s = input(sol)?;
        let (temp_out, phase_out) = (out(temperature)?, out(phase)?);
        let (p, v) = lib(s.inner.temperature(x, t))?;
        *temp_out = v;
        *phase_out = match p {
            Phase::Solid => FsPhase::Solid,
            Phase::Liquid => FsPhase::Liquid,
        };
        Ok(())
    })
}

/// Face temperature Θ_l(0, t) (the data itself for temperature problems).
///
/// # Safety
/// Valid handle and output pointer.
#[no_mangle]
pub unsafe extern "C" fn fs_face_temperature(sol: *const FsSolution, t0: *mut f64) -> FsStatus {
    guard(|| {
        *out(t0)? = input(sol)?.inner.face_temperature();
        Ok(())
    })
}

/// Face flux coefficient q0 (the data itself for flux problems).
///
/// # Safety
/// Valid handle and output pointer.
#[no_mangle]
pub unsafe extern "C" fn fs_face_flux(sol: *const FsSolution, q0: *mut f64) -> FsStatus {
    guard(|| {
        let s = input(sol)?;
        *out(q0)? = lib(s.inner.face_flux_coefficient())?;
        Ok(())
    })
}

/// Wright function W(z; rho; beta), rho in (-1, 0].
///
/// # Safety
/// `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_wright(z: f64, rho: f64, beta: f64, value: *mut f64) -> FsStatus {
    guard(|| {
        let slot = out(value)?;
        let args = lib(WrightArgs::new(z, rho, beta))?;
        *slot = lib(wright(args, &SeriesConfig::default()))?;
        Ok(())
    })
}

/// Mainardi function M_rho(x), x >= 0, rho in (0, 1).
///
/// # Safety
/// `value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_mainardi(x: f64, rho: f64, value: *mut f64) -> FsStatus {
    guard(|| {
        let slot = out(value)?;
        *slot = lib(mainardi(x, rho, &SeriesConfig::default()))?;
        Ok(())
    })
}

/// Message of the last failure on this thread ("" if none). Owned by the
/// library.
#[no_mangle]
pub extern "C" fn fs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub extern "C" fn fs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
