//! Directed rounding backends.
//!
//! Every outward-rounded endpoint in the crate is produced by one of the
//! backends below, selected through [`Active`]. Neither backend touches the
//! floating-point environment, so there is no per-thread rounding mode to
//! leak between workers.

/// Directed-rounding primitives for the four operations and square root.
pub trait Rounding {
    fn add_down(a: f64, b: f64) -> f64;
    fn add_up(a: f64, b: f64) -> f64;
    fn mul_down(a: f64, b: f64) -> f64;
    fn mul_up(a: f64, b: f64) -> f64;
    fn div_down(a: f64, b: f64) -> f64;
    fn div_up(a: f64, b: f64) -> f64;
    fn sqrt_down(a: f64) -> f64;
    fn sqrt_up(a: f64) -> f64;

    fn sub_down(a: f64, b: f64) -> f64 {
        Self::add_down(a, -b)
    }
    fn sub_up(a: f64, b: f64) -> f64 {
        Self::add_up(a, -b)
    }
}

/// Round to nearest, then step one representable value outward.
///
/// Always widens by one ulp, even for exact results.
#[derive(Debug, Clone, Copy)]
pub struct NextStep;

#[inline]
fn down(x: f64) -> f64 {
    if x.is_nan() {
        x
    } else {
        x.next_down()
    }
}

#[inline]
fn up(x: f64) -> f64 {
    if x.is_nan() {
        x
    } else {
        x.next_up()
    }
}

impl Rounding for NextStep {
    #[inline]
    fn add_down(a: f64, b: f64) -> f64 {
        down(a + b)
    }
    #[inline]
    fn add_up(a: f64, b: f64) -> f64 {
        up(a + b)
    }
    #[inline]
    fn mul_down(a: f64, b: f64) -> f64 {
        down(a * b)
    }
    #[inline]
    fn mul_up(a: f64, b: f64) -> f64 {
        up(a * b)
    }
    #[inline]
    fn div_down(a: f64, b: f64) -> f64 {
        down(a / b)
    }
    #[inline]
    fn div_up(a: f64, b: f64) -> f64 {
        up(a / b)
    }
    #[inline]
    fn sqrt_down(a: f64) -> f64 {
        // sqrt(0) must stay 0 so that degenerate lengths are not pushed negative.
        let s = a.sqrt();
        if s == 0.0 {
            0.0
        } else {
            down(s)
        }
    }
    #[inline]
    fn sqrt_up(a: f64) -> f64 {
        let s = a.sqrt();
        if s == 0.0 {
            0.0
        } else {
            up(s)
        }
    }
}

/// Round to nearest, recover the sign of the rounding error with an
/// error-free transformation, and step only when the result was inexact.
///
/// Falls back to [`NextStep`] near the underflow range, where the fused
/// residual is no longer exact.
#[derive(Debug, Clone, Copy)]
pub struct ErrorFree;

const TINY: f64 = 1e-290;

#[inline]
fn adjust_down(s: f64, err_sign: f64) -> f64 {
    if err_sign < 0.0 {
        down(s)
    } else {
        s
    }
}

#[inline]
fn adjust_up(s: f64, err_sign: f64) -> f64 {
    if err_sign > 0.0 {
        up(s)
    } else {
        s
    }
}

#[inline]
fn two_sum_err(a: f64, b: f64, s: f64) -> f64 {
    let bb = s - a;
    (a - (s - bb)) + (b - bb)
}

impl Rounding for ErrorFree {
    #[inline]
    fn add_down(a: f64, b: f64) -> f64 {
        let s = a + b;
        if !s.is_finite() {
            return s;
        }
        adjust_down(s, two_sum_err(a, b, s))
    }
    #[inline]
    fn add_up(a: f64, b: f64) -> f64 {
        let s = a + b;
        if !s.is_finite() {
            return s;
        }
        adjust_up(s, two_sum_err(a, b, s))
    }
    #[inline]
    fn mul_down(a: f64, b: f64) -> f64 {
        let p = a * b;
        if !p.is_finite() {
            return p;
        }
        if p.abs() < TINY {
            return NextStep::mul_down(a, b);
        }
        adjust_down(p, a.mul_add(b, -p))
    }
    #[inline]
    fn mul_up(a: f64, b: f64) -> f64 {
        let p = a * b;
        if !p.is_finite() {
            return p;
        }
        if p.abs() < TINY {
            return NextStep::mul_up(a, b);
        }
        adjust_up(p, a.mul_add(b, -p))
    }
    #[inline]
    fn div_down(a: f64, b: f64) -> f64 {
        let q = a / b;
        if !q.is_finite() || q.abs() < TINY || b.abs() < TINY {
            return NextStep::div_down(a, b);
        }
        // a/b - q has the sign of (a - q b) * sign(b).
        let r = (-q).mul_add(b, a);
        adjust_down(q, r * b.signum())
    }
    #[inline]
    fn div_up(a: f64, b: f64) -> f64 {
        let q = a / b;
        if !q.is_finite() || q.abs() < TINY || b.abs() < TINY {
            return NextStep::div_up(a, b);
        }
        let r = (-q).mul_add(b, a);
        adjust_up(q, r * b.signum())
    }
    #[inline]
    fn sqrt_down(a: f64) -> f64 {
        let s = a.sqrt();
        if s == 0.0 || !s.is_finite() {
            return s;
        }
        if a < TINY {
            return NextStep::sqrt_down(a);
        }
        adjust_down(s, (-s).mul_add(s, a))
    }
    #[inline]
    fn sqrt_up(a: f64) -> f64 {
        let s = a.sqrt();
        if s == 0.0 || !s.is_finite() {
            return s;
        }
        if a < TINY {
            return NextStep::sqrt_up(a);
        }
        adjust_up(s, (-s).mul_add(s, a))
    }
}

/// The backend used by [`crate::interval::Interval`].
pub type Active = NextStep;

#[cfg(test)]
mod tests {
    use super::*;

    fn check_backend<R: Rounding>() {
        let xs = [0.1, 0.2, 1.0 / 3.0, 2.0, 1e-300, 7.0, -0.3, 1e200];
        for &a in &xs {
            for &b in &xs {
                assert!(R::add_down(a, b) <= a + b && a + b <= R::add_up(a, b));
                assert!(R::mul_down(a, b) <= a * b && a * b <= R::mul_up(a, b));
                assert!(R::div_down(a, b) <= a / b && a / b <= R::div_up(a, b));
            }
            if a >= 0.0 {
                assert!(R::sqrt_down(a) <= a.sqrt() && a.sqrt() <= R::sqrt_up(a));
            }
        }
    }

    #[test]
    fn both_backends_bracket_nearest() {
        check_backend::<NextStep>();
        check_backend::<ErrorFree>();
    }

    #[test]
    fn error_free_is_tight_on_exact_results() {
        assert_eq!(ErrorFree::add_down(1.0, 2.0), 3.0);
        assert_eq!(ErrorFree::add_up(1.0, 2.0), 3.0);
        assert_eq!(ErrorFree::mul_up(3.0, 4.0), 12.0);
        assert_eq!(ErrorFree::sqrt_down(9.0), 3.0);
        assert_eq!(ErrorFree::div_up(1.0, 4.0), 0.25);
        assert!(ErrorFree::div_up(1.0, 3.0) > ErrorFree::div_down(1.0, 3.0));
    }

    #[test]
    fn next_step_widens_by_one_ulp() {
        assert_eq!(NextStep::add_up(1.0, 2.0), 3.0f64.next_up());
        assert_eq!(NextStep::add_down(1.0, 2.0), 3.0f64.next_down());
    }
}
