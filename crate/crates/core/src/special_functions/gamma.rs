//! Gamma and reciprocal Gamma.
//!
//! `gamma` uses a Lanczos approximation (g = 7, nine coefficients) with the
//! reflection formula below 1/2. `reciprocal_gamma` is computed by a different
//! route: the Taylor series of the entire function 1/Γ around 0, evaluated in
//! double-double arithmetic, shifted to the argument by the recurrence
//! Γ(y + 1) = y Γ(y). It has no poles, so it is safe at the negative arguments
//! swept by the Wright series.

use super::dd::Dd;
use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Taylor coefficients c_k of 1/Γ(y) = Σ c_k y^k, k = 1..=34, as (hi, lo) pairs.
/// Truncation error on |y| <= 1/2 is below 1e-34.
const RGAMMA_TAYLOR: [(f64, f64); 34] = [
    (1.0, 0.0),
    (0.5772156649015329, -4.942915152430645e-18),
    (-0.6558780715202539, 2.137185197068536e-17),
    (-0.04200263503409524, 1.4920306285650505e-18),
    (0.16653861138229148, 1.0189144546842026e-17),
    (-0.04219773455554433, -3.3579992682480134e-18),
    (-0.009621971527876973, -5.300031368830263e-19),
    (0.0072189432466631, -3.6006537063394283e-19),
    (-0.0011651675918590652, 5.659947853880981e-20),
    (-0.00021524167411495098, 2.3758686180729364e-21),
    (0.0001280502823881162, -9.359124499198967e-21),
    (-2.013485478078824e-05, 3.0488773972037385e-23),
    (-1.2504934821426706e-06, -2.66214092271898e-23),
    (1.133027231981696e-06, -4.622235212104869e-23),
    (-2.056338416977607e-07, -3.0061601618645134e-24),
    (6.116095104481416e-09, -2.693458298171306e-25),
    (5.002007644469223e-09, -1.538123614056751e-26),
    (-1.18127457048702e-09, -1.0052356155716208e-25),
    (1.0434267116911005e-10, -2.9298419956825035e-27),
    (7.782263439905071e-12, 4.397255556595848e-28),
    (-3.696805618642206e-12, 2.7050034921703885e-28),
    (5.100370287454476e-13, 2.253001461085878e-29),
    (-2.0583260535665066e-14, -1.4747481491954336e-30),
    (-5.348122539423018e-15, -1.6208384686356568e-31),
    (1.2267786282382608e-15, -5.072915146023867e-32),
    (-1.1812593016974588e-16, 6.422257838149681e-33),
    (1.1866922547516004e-18, -4.2037265494226014e-35),
    (1.4123806553180319e-18, -7.576946701116294e-35),
    (-2.29874568443537e-19, 1.3335481917069145e-36),
    (1.7144063219273374e-20, 5.230715150426935e-38),
    (1.337351730493693e-22, 2.6434059649079228e-39),
    (-2.0542335517666728e-22, 3.6856892424568953e-39),
    (2.736030048608e-23, -2.8599315416397774e-39),
    (-1.7323564459105165e-24, -1.7540883508197598e-40),
];

const LANCZOS_G: f64 = 7.0;
const LANCZOS_P: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// sin(πx) with exact argument reduction, so it vanishes exactly at integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    // r in [-1, 1], exact
    let r = x - 2.0 * (x / 2.0).round();
    let (r, sign) = if r < 0.0 { (-r, -1.0) } else { (r, 1.0) };
    let r = if r > 0.5 { 1.0 - r } else { r };
    sign * (PI * r).sin()
}

fn lanczos_positive(x: f64) -> f64 {
    // valid for x >= 1/2
    let x = x - 1.0;
    let mut a = LANCZOS_P[0];
    for (i, p) in LANCZOS_P.iter().enumerate().skip(1) {
        a += p / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    // split the power to delay overflow up to x ~ 171
    let half = t.powf((x + 0.5) / 2.0);
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * a
}

/// The Gamma function Γ(x) for real x.
///
/// Returns an error at the poles x = 0, -1, -2, ... and +∞ beyond the
/// overflow threshold (x > 171.62).
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(crate::error::invalid("x", "NaN"));
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::GammaPole(x));
    }
    if x >= 0.5 {
        if x > 171.7 {
            return Ok(f64::INFINITY);
        }
        Ok(lanczos_positive(x))
    } else {
        Ok(PI / (sin_pi(x) * lanczos_positive(1.0 - x)))
    }
}

/// Taylor series of 1/Γ around 0 in double-double, for |y| <= 1/2.
fn rgamma_taylor(y: Dd) -> Dd {
    let mut acc = Dd::ZERO;
    for &(hi, lo) in RGAMMA_TAYLOR.iter().rev() {
        acc = acc * y + Dd::new(hi, lo);
    }
    acc * y
}

/// 1/Γ(y) in double-double precision for a double-double argument.
///
/// Exact zero at non-positive integers. Overflow of the shift products is
/// reported as 0 (for large positive y) or ±∞ (for large negative y).
pub(crate) fn reciprocal_gamma_dd(y: Dd) -> Dd {
    if !y.hi.is_finite() {
        return if y.hi == f64::INFINITY {
            Dd::ZERO
        } else {
            Dd::from_f64(f64::NAN)
        };
    }
    let m = y.hi.round();
    let frac = y - m;
    // |m| can be large only for arguments far outside the Wright series usage
    if m.abs() > 400.0 {
        return if m > 0.0 {
            Dd::ZERO
        } else {
            Dd::from_f64(-f64::INFINITY * sin_pi(y.hi).signum())
        };
    }
    let m = m as i64;
    if m >= 1 {
        if frac.hi == 0.0 && frac.lo == 0.0 {
            // positive integer: 1/(m-1)!
            let mut fact = Dd::ONE;
            for j in 2..m {
                fact = fact * (j as f64);
            }
            return Dd::ONE / fact;
        }
        let base = rgamma_taylor(frac);
        let mut denom = Dd::ONE;
        for j in 0..m {
            denom = denom * (frac + j as f64);
            if !denom.is_finite() {
                return Dd::ZERO;
            }
        }
        base / denom
    } else {
        let base = rgamma_taylor(frac);
        let mut prod = base;
        for j in 1..=(-m) {
            prod = prod * (frac - j as f64);
            if !prod.is_finite() {
                return Dd::from_f64(prod.hi);
            }
        }
        prod
    }
}

/// 1/Γ(x): total, with exact zeros at 0, -1, -2, ...
pub fn reciprocal_gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    reciprocal_gamma_dd(Dd::from_f64(x)).to_f64()
}

/// ln Γ(x) for x > 0 (plain double precision; used for magnitude bounds only).
pub(crate) fn ln_gamma_positive(x: f64) -> f64 {
    libm::lgamma(x)
}
