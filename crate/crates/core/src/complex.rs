//! Principal branches of argument, square root and logarithm.
//!
//! The cut for all three functions is the negative real axis. Points on the
//! cut are assigned the limit from the upper half-plane: `principal_arg(-1)`
//! is `+π` and `principal_sqrt(-4)` is `2i`, regardless of the sign of a zero
//! imaginary part.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Complex value type shared by every module.
///
/// Serializes as a two-element array `[re, im]`.
pub type Complex = num_complex::Complex64;

pub const I: Complex = Complex::new(0.0, 1.0);

/// Absolute-plus-relative comparison `|a - b| <= atol + rtol * |b|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub atol: f64,
    pub rtol: f64,
}

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance { atol: 1e-12, rtol: 1e-12 };

    pub const fn new(atol: f64, rtol: f64) -> Self {
        Self { atol, rtol }
    }

    pub const fn absolute(atol: f64) -> Self {
        Self { atol, rtol: 0.0 }
    }

    pub const fn relative(rtol: f64) -> Self {
        Self { atol: 0.0, rtol }
    }

    pub fn close(&self, a: Complex, b: Complex) -> bool {
        (a - b).norm() <= self.atol + self.rtol * b.norm()
    }

    pub fn close_real(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.atol + self.rtol * b.abs()
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}

pub fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

pub(crate) fn ensure_finite(z: Complex, what: &str) -> Result<Complex> {
    if is_finite(z) {
        Ok(z)
    } else {
        Err(Error::Numeric(format!("{what} is not finite: {z}")))
    }
}

/// Argument of `z` in `(-π, π]`.
pub fn principal_arg(z: Complex) -> Result<f64> {
    ensure_finite(z, "argument input")?;
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::Domain("argument of zero is undefined".into()));
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Ok(PI);
    }
    Ok(z.im.atan2(z.re))
}

/// Square root with nonnegative real part; on the cut the root with
/// positive imaginary part is returned.
pub fn principal_sqrt(z: Complex) -> Complex {
    if z.im == 0.0 {
        return if z.re >= 0.0 { Complex::new(z.re.sqrt(), 0.0) } else { Complex::new(0.0, (-z.re).sqrt()) };
    }
    // Half-angle formulas; the larger component is computed without
    // cancellation and the smaller one is recovered from im = 2 * re_w * im_w.
    let r = z.norm();
    if z.re >= 0.0 {
        let re = ((r + z.re) * 0.5).sqrt();
        Complex::new(re, z.im / (2.0 * re))
    } else {
        let im = ((r - z.re) * 0.5).sqrt().copysign(z.im);
        Complex::new(z.im / (2.0 * im), im)
    }
}

/// `ln|z| + i·principal_arg(z)`.
pub fn principal_log(z: Complex) -> Result<Complex> {
    let arg = principal_arg(z)?;
    Ok(Complex::new(z.norm().ln(), arg))
}

/// Rounds an imaginary offset to the nearest multiple of `2πi`.
pub(crate) fn nearest_turns(offset: Complex) -> i64 {
    (offset.im / (2.0 * PI)).round() as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::{E, FRAC_PI_2};

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn arg_examples() {
        assert_eq!(principal_arg(c(1.0, 0.0)).unwrap(), 0.0);
        assert_abs_diff_eq!(principal_arg(c(0.0, 1.0)).unwrap(), FRAC_PI_2);
        assert_eq!(principal_arg(c(-1.0, 0.0)).unwrap(), PI);
        assert_eq!(principal_arg(c(-1.0, -0.0)).unwrap(), PI);
        assert!(matches!(principal_arg(c(0.0, 0.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(principal_sqrt(c(4.0, 0.0)), c(2.0, 0.0));
        let w = principal_sqrt(c(0.0, 2.0));
        assert_abs_diff_eq!(w.re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(w.im, 1.0, epsilon = 1e-15);
        assert_eq!(principal_sqrt(c(-4.0, 0.0)), c(0.0, 2.0));
        assert_eq!(principal_sqrt(c(-4.0, -0.0)), c(0.0, 2.0));
        assert_eq!(principal_sqrt(c(0.0, 0.0)), c(0.0, 0.0));
    }

    #[test]
    fn log_examples() {
        assert_eq!(principal_log(c(1.0, 0.0)).unwrap(), c(0.0, 0.0));
        let l = principal_log(c(0.0, 1.0)).unwrap();
        assert_abs_diff_eq!(l.re, 0.0);
        assert_abs_diff_eq!(l.im, FRAC_PI_2);
        let l = principal_log(c(0.0, E)).unwrap();
        assert_abs_diff_eq!(l.re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(l.im, FRAC_PI_2);
        assert!(principal_log(c(0.0, 0.0)).is_err());
    }

    #[test]
    fn sqrt_jumps_across_the_cut_only() {
        let eps = 1e-9;
        let above = principal_sqrt(c(-1.0, eps));
        let below = principal_sqrt(c(-1.0, -eps));
        assert_abs_diff_eq!((above - below).re, 0.0, epsilon = 1e-8);
        assert_abs_diff_eq!((above - below).im, 2.0, epsilon = 1e-8);
        // continuous across the positive axis
        let a = principal_sqrt(c(1.0, eps));
        let b = principal_sqrt(c(1.0, -eps));
        assert!((a - b).norm() < 1e-8);
    }

    #[test]
    fn non_finite_rejected() {
        assert!(matches!(principal_arg(c(f64::NAN, 1.0)), Err(Error::Numeric(_))));
    }

    fn nonzero() -> impl Strategy<Value = Complex> {
        (-1e3..1e3f64, -1e3..1e3f64).prop_filter("nonzero", |(x, y)| x.hypot(*y) > 1e-6).prop_map(|(x, y)| c(x, y))
    }

    proptest! {
        #[test]
        fn sqrt_squares_back(z in nonzero()) {
            let w = principal_sqrt(z);
            prop_assert!((w * w - z).norm() <= 1e-14 * z.norm());
            prop_assert!(w.re >= 0.0);
        }

        #[test]
        fn exp_inverts_log(z in nonzero()) {
            let l = principal_log(z).unwrap();
            prop_assert!((l.exp() - z).norm() <= 1e-13 * z.norm());
            prop_assert!(l.im > -PI && l.im <= PI);
        }

        #[test]
        fn arg_is_odd_under_conjugation(z in nonzero()) {
            prop_assume!(!(z.im == 0.0 && z.re < 0.0));
            prop_assert_eq!(principal_arg(z.conj()).unwrap(), -principal_arg(z).unwrap());
        }
    }
}
