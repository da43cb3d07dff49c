//! Bracketing scan and Brent refinement for H(x) = root function - c_α x.

use crate::error::{Error, Result};

const SCAN_START: f64 = 1e-6;
const MAX_UP: i32 = 60;
const MAX_DOWN: i32 = 60;
// after the first root, keep scanning up to 2^6 · root for a second sign change
const EXTRA_DOUBLINGS: i32 = 6;

#[derive(Clone, Debug)]
pub(crate) struct Root {
    pub x: f64,
    pub warnings: Vec<String>,
}

/// Brent's method on a bracket [a, b] with f(a)·f(b) < 0, run until the
/// bracket is a few ulps wide or f vanishes.
pub(crate) fn brent<F: FnMut(f64) -> Result<f64>>(
    mut f: F,
    mut a: f64,
    mut b: f64,
    mut fa: f64,
    mut fb: f64,
) -> Result<f64> {
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for _ in 0..200 {
        if (fb > 0.0) == (fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * b.abs() + f64::MIN_POSITIVE;
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b)?;
    }
    Ok(b)
}

/// First positive root of `h`, assuming h(0⁺) > 0 and h(+∞) < 0.
///
/// Scans x = 1e-6·2^k upward for the first sign change (or downward when
/// h(1e-6) <= 0), refines with Brent, then keeps scanning a few more doublings
/// to detect further sign changes, which are reported as warnings.
pub(crate) fn first_root<F: FnMut(f64) -> Result<f64>>(mut h: F, what: &str) -> Result<Root> {
    let mut warnings = Vec::new();
    let h0 = h(SCAN_START)?;
    let (lo, hi, flo, fhi);
    if h0 > 0.0 {
        let mut x = SCAN_START;
        let mut fx = h0;
        let mut k = 0;
        loop {
            k += 1;
            if k > MAX_UP {
                return Err(Error::NoBracket {
                    detail: format!("{what} stays positive up to x = {x:e}"),
                });
            }
            let xn = 2.0 * x;
            let fxn = h(xn)?;
            if fxn <= 0.0 {
                lo = x;
                hi = xn;
                flo = fx;
                fhi = fxn;
                break;
            }
            x = xn;
            fx = fxn;
        }
    } else {
        let mut x = SCAN_START;
        let mut fx = h0;
        let mut k = 0;
        loop {
            k += 1;
            if k > MAX_DOWN {
                return Err(Error::NoBracket {
                    detail: format!("{what} is not positive down to x = {x:e}"),
                });
            }
            let xn = 0.5 * x;
            let fxn = h(xn)?;
            if fxn > 0.0 {
                lo = xn;
                hi = x;
                flo = fxn;
                fhi = fx;
                break;
            }
            x = xn;
            fx = fxn;
        }
    }
    let root = brent(&mut h, lo, hi, flo, fhi)?;

    // look for a later sign change
    let mut x = hi;
    let mut sign_neg = fhi <= 0.0;
    for _ in 0..EXTRA_DOUBLINGS {
        let xn = 2.0 * x;
        let fxn = match h(xn) {
            Ok(v) => v,
            Err(_) => break,
        };
        if (fxn > 0.0) == sign_neg {
            warnings.push(format!(
                "{what} changes sign again in ({x:e}, {xn:e}); the first root is returned and uniqueness is not confirmed"
            ));
            break;
        }
        sign_neg = fxn <= 0.0;
        x = xn;
    }
    Ok(Root { x: root, warnings })
}
