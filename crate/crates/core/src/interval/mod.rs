//! Closed intervals with outward rounding and three-valued comparisons.
//!
//! An [`Interval`] is either a valid pair `lo <= hi` of finite endpoints or
//! the sticky invalid value. Operations that leave their domain (division by
//! an interval containing zero, square root of a possibly negative value,
//! overflow) produce the invalid value from the operator API and a
//! [`IntervalError`] from the checked API ([`ia_binary`], [`ia_sqrt`]).
//!
//! Rounding is delegated to [`rounding::Active`]. The `*_with` functions take
//! the backend as a type parameter so that every backend can be fuzzed
//! against the same suite.

pub mod rounding;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rounding::{Active, Rounding};
use thiserror::Error;

/// Three-valued truth of a predicate evaluated over intervals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ternary {
    True,
    Indeterminate,
    False,
}

impl Ternary {
    pub fn is_true(self) -> bool {
        self == Ternary::True
    }

    pub fn is_false(self) -> bool {
        self == Ternary::False
    }

    pub fn possibly_true(self) -> bool {
        self != Ternary::False
    }

    pub fn possibly_false(self) -> bool {
        self != Ternary::True
    }

    pub fn and(self, other: Ternary) -> Ternary {
        match (self, other) {
            (Ternary::False, _) | (_, Ternary::False) => Ternary::False,
            (Ternary::True, Ternary::True) => Ternary::True,
            _ => Ternary::Indeterminate,
        }
    }

    pub fn or(self, other: Ternary) -> Ternary {
        match (self, other) {
            (Ternary::True, _) | (_, Ternary::True) => Ternary::True,
            (Ternary::False, Ternary::False) => Ternary::False,
            _ => Ternary::Indeterminate,
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Ternary {
        match self {
            Ternary::True => Ternary::False,
            Ternary::False => Ternary::True,
            Ternary::Indeterminate => Ternary::Indeterminate,
        }
    }

    pub fn from_bool(b: bool) -> Ternary {
        if b {
            Ternary::True
        } else {
            Ternary::False
        }
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum IntervalError {
    #[error("division by an interval containing zero")]
    DivisionByZero,
    #[error("square root of an interval with negative lower endpoint")]
    NegativeSqrt,
    #[error("operand is invalid")]
    InvalidOperand,
    #[error("result overflowed")]
    Overflow,
}

/// Binary operations accepted by [`ia_binary`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A closed real interval `[lo, hi]`, or the invalid marker.
#[derive(Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

/// Alias matching the name used for the arithmetic substrate.
pub type IntervalScalar = Interval;

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "[{:e}, {:e}]", self.lo, self.hi)
        } else {
            write!(f, "[invalid]")
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Serialized as the pair `[lo, hi]`.
impl serde::Serialize for Interval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.lo, self.hi).serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Interval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Interval, D::Error> {
        let (lo, hi) = <(f64, f64)>::deserialize(d)?;
        let iv = Interval::new(lo, hi);
        if iv.is_valid() {
            Ok(iv)
        } else {
            Err(serde::de::Error::custom(format!("invalid interval [{lo}, {hi}]")))
        }
    }
}

impl Interval {
    pub const INVALID: Interval = Interval { lo: f64::NAN, hi: f64::NAN };
    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };

    /// Builds `[lo, hi]`; non-finite or reversed endpoints give the invalid value.
    pub fn new(lo: f64, hi: f64) -> Interval {
        if lo.is_finite() && hi.is_finite() && lo <= hi {
            Interval { lo, hi }
        } else {
            Interval::INVALID
        }
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: f64) -> Interval {
        Interval::new(x, x)
    }

    /// Exact rational `num/den` enclosed with outward rounding.
    pub fn ratio(num: f64, den: f64) -> Interval {
        Interval::point(num) / Interval::point(den)
    }

    /// Smallest interval containing both `a` and `b`.
    pub fn hull(a: Interval, b: Interval) -> Interval {
        if !a.is_valid() || !b.is_valid() {
            return Interval::INVALID;
        }
        Interval::new(a.lo.min(b.lo), a.hi.max(b.hi))
    }

    pub fn is_valid(self) -> bool {
        !self.lo.is_nan()
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn width(self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(self) -> f64 {
        0.5 * self.lo + 0.5 * self.hi
    }

    pub fn contains(self, x: f64) -> bool {
        self.is_valid() && self.lo <= x && x <= self.hi
    }

    pub fn is_subset_of(self, other: Interval) -> bool {
        self.is_valid() && other.is_valid() && other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn overlaps(self, other: Interval) -> bool {
        self.is_valid() && other.is_valid() && self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn contains_zero(self) -> bool {
        self.contains(0.0)
    }

    /// Intersection, or the invalid value when disjoint.
    pub fn intersect(self, other: Interval) -> Interval {
        if !self.is_valid() || !other.is_valid() {
            return Interval::INVALID;
        }
        Interval::new(self.lo.max(other.lo), self.hi.min(other.hi))
    }

    /// Restricts to `[floor, +inf)`; used when points below `floor` are known not to occur.
    pub fn clamp_lo(self, floor: f64) -> Interval {
        if !self.is_valid() {
            return self;
        }
        if self.hi < floor {
            return Interval::INVALID;
        }
        Interval { lo: self.lo.max(floor), hi: self.hi }
    }

    pub fn le(self, other: Interval) -> Ternary {
        ia_compare_le(self, other)
    }

    pub fn ge(self, other: Interval) -> Ternary {
        ia_compare_le(other, self)
    }

    pub fn lt(self, other: Interval) -> Ternary {
        if !self.is_valid() || !other.is_valid() {
            return Ternary::Indeterminate;
        }
        if self.hi < other.lo {
            Ternary::True
        } else if self.lo >= other.hi {
            Ternary::False
        } else {
            Ternary::Indeterminate
        }
    }

    pub fn gt(self, other: Interval) -> Ternary {
        other.lt(self)
    }

    pub fn le_f(self, x: f64) -> Ternary {
        self.le(Interval::point(x))
    }

    pub fn ge_f(self, x: f64) -> Ternary {
        self.ge(Interval::point(x))
    }

    pub fn lt_f(self, x: f64) -> Ternary {
        self.lt(Interval::point(x))
    }

    pub fn gt_f(self, x: f64) -> Ternary {
        self.gt(Interval::point(x))
    }

    pub fn min(self, other: Interval) -> Interval {
        ia_minmax(self, other).0
    }

    pub fn max(self, other: Interval) -> Interval {
        ia_minmax(self, other).1
    }

    /// `x * x`, tighter than `x * x` when the interval straddles zero.
    pub fn sqr(self) -> Interval {
        sqr_with::<Active>(self)
    }

    /// Square root; invalid when the lower endpoint is negative.
    pub fn sqrt(self) -> Interval {
        ia_sqrt(self).unwrap_or(Interval::INVALID)
    }

    /// Square root of `max(0, x)`.
    pub fn sqrt_pos(self) -> Interval {
        if !self.is_valid() || self.hi < 0.0 {
            return if self.is_valid() { Interval::ZERO } else { self };
        }
        Interval { lo: self.lo.max(0.0), hi: self.hi }.sqrt()
    }

    pub fn abs(self) -> Interval {
        if !self.is_valid() {
            self
        } else if self.lo >= 0.0 {
            self
        } else if self.hi <= 0.0 {
            -self
        } else {
            Interval { lo: 0.0, hi: self.hi.max(-self.lo) }
        }
    }
}

fn checked(lo: f64, hi: f64) -> Result<Interval, IntervalError> {
    if lo.is_finite() && hi.is_finite() {
        Ok(Interval { lo, hi })
    } else {
        Err(IntervalError::Overflow)
    }
}

/// `ia_binary` with an explicit rounding backend.
pub fn ia_binary_with<R: Rounding>(
    op: BinOp,
    a: Interval,
    b: Interval,
) -> Result<Interval, IntervalError> {
    if !a.is_valid() || !b.is_valid() {
        return Err(IntervalError::InvalidOperand);
    }
    match op {
        BinOp::Add => checked(R::add_down(a.lo, b.lo), R::add_up(a.hi, b.hi)),
        BinOp::Sub => checked(R::sub_down(a.lo, b.hi), R::sub_up(a.hi, b.lo)),
        BinOp::Mul => {
            let c = [(a.lo, b.lo), (a.lo, b.hi), (a.hi, b.lo), (a.hi, b.hi)];
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for (x, y) in c {
                lo = lo.min(R::mul_down(x, y));
                hi = hi.max(R::mul_up(x, y));
            }
            checked(lo, hi)
        }
        BinOp::Div => {
            if b.lo <= 0.0 && b.hi >= 0.0 {
                return Err(IntervalError::DivisionByZero);
            }
            let c = [(a.lo, b.lo), (a.lo, b.hi), (a.hi, b.lo), (a.hi, b.hi)];
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for (x, y) in c {
                lo = lo.min(R::div_down(x, y));
                hi = hi.max(R::div_up(x, y));
            }
            checked(lo, hi)
        }
    }
}

/// Outward-rounded `a op b`.
pub fn ia_binary(op: BinOp, a: Interval, b: Interval) -> Result<Interval, IntervalError> {
    ia_binary_with::<Active>(op, a, b)
}

/// `ia_sqrt` with an explicit rounding backend.
pub fn ia_sqrt_with<R: Rounding>(a: Interval) -> Result<Interval, IntervalError> {
    if !a.is_valid() {
        return Err(IntervalError::InvalidOperand);
    }
    if a.lo < 0.0 {
        return Err(IntervalError::NegativeSqrt);
    }
    checked(R::sqrt_down(a.lo).max(0.0), R::sqrt_up(a.hi))
}

/// Outward-rounded square root.
pub fn ia_sqrt(a: Interval) -> Result<Interval, IntervalError> {
    ia_sqrt_with::<Active>(a)
}

pub fn sqr_with<R: Rounding>(a: Interval) -> Interval {
    if !a.is_valid() {
        return a;
    }
    let (l, h) = if a.lo >= 0.0 {
        (a.lo, a.hi)
    } else if a.hi <= 0.0 {
        (-a.hi, -a.lo)
    } else {
        (0.0, a.hi.max(-a.lo))
    };
    let lo = if l == 0.0 { 0.0 } else { R::mul_down(l, l).max(0.0) };
    Interval::new(lo, R::mul_up(h, h))
}

/// `a <= b` over all members: true iff `a.hi <= b.lo`, false iff `a.lo > b.hi`.
pub fn ia_compare_le(a: Interval, b: Interval) -> Ternary {
    if !a.is_valid() || !b.is_valid() {
        return Ternary::Indeterminate;
    }
    if a.hi <= b.lo {
        Ternary::True
    } else if a.lo > b.hi {
        Ternary::False
    } else {
        Ternary::Indeterminate
    }
}

/// Componentwise `(min, max)` of two intervals.
pub fn ia_minmax(a: Interval, b: Interval) -> (Interval, Interval) {
    if !a.is_valid() || !b.is_valid() {
        return (Interval::INVALID, Interval::INVALID);
    }
    (
        Interval { lo: a.lo.min(b.lo), hi: a.hi.min(b.hi) },
        Interval { lo: a.lo.max(b.lo), hi: a.hi.max(b.hi) },
    )
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait for Interval {
            type Output = Interval;
            #[inline]
            fn $method(self, rhs: Interval) -> Interval {
                ia_binary($op, self, rhs).unwrap_or(Interval::INVALID)
            }
        }
        impl $trait<f64> for Interval {
            type Output = Interval;
            #[inline]
            fn $method(self, rhs: f64) -> Interval {
                ia_binary($op, self, Interval::point(rhs)).unwrap_or(Interval::INVALID)
            }
        }
        impl $trait<Interval> for f64 {
            type Output = Interval;
            #[inline]
            fn $method(self, rhs: Interval) -> Interval {
                ia_binary($op, Interval::point(self), rhs).unwrap_or(Interval::INVALID)
            }
        }
    };
}

binop!(Add, add, BinOp::Add);
binop!(Sub, sub, BinOp::Sub);
binop!(Mul, mul, BinOp::Mul);
binop!(Div, div, BinOp::Div);

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        if !self.is_valid() {
            return self;
        }
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl From<f64> for Interval {
    fn from(x: f64) -> Interval {
        Interval::point(x)
    }
}

impl std::iter::Sum for Interval {
    fn sum<I: Iterator<Item = Interval>>(iter: I) -> Interval {
        iter.fold(Interval::ZERO, |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b)
    }

    #[test]
    fn add_encloses_integer_sum() {
        let r = ia_binary(BinOp::Add, iv(1.0, 2.0), iv(3.0, 4.0)).unwrap();
        assert!(r.lo() <= 4.0 && r.hi() >= 6.0);
        assert!(r.lo() > 3.99 && r.hi() < 6.01);
    }

    #[test]
    fn mul_mixed_signs() {
        let r = ia_binary(BinOp::Mul, iv(-1.0, 2.0), iv(3.0, 4.0)).unwrap();
        assert!(r.lo() <= -4.0 && r.hi() >= 8.0);
    }

    #[test]
    fn div_by_zero_is_domain_error() {
        assert_eq!(
            ia_binary(BinOp::Div, iv(1.0, 1.0), iv(-1.0, 1.0)),
            Err(IntervalError::DivisionByZero)
        );
        assert!(!(iv(1.0, 1.0) / iv(-1.0, 1.0)).is_valid());
    }

    #[test]
    fn sqrt_cases() {
        let r = ia_sqrt(iv(4.0, 9.0)).unwrap();
        assert!(r.lo() <= 2.0 && r.hi() >= 3.0);
        assert_eq!(ia_sqrt(iv(0.0, 0.0)).unwrap(), iv(0.0, 0.0));
        assert_eq!(ia_sqrt(iv(-1.0, 4.0)), Err(IntervalError::NegativeSqrt));
    }

    #[test]
    fn compare_le_cases() {
        assert_eq!(ia_compare_le(iv(1.0, 2.0), iv(2.0, 3.0)), Ternary::True);
        assert_eq!(ia_compare_le(iv(1.0, 3.0), iv(2.0, 4.0)), Ternary::Indeterminate);
        assert_eq!(ia_compare_le(iv(5.0, 6.0), iv(1.0, 2.0)), Ternary::False);
        assert_eq!(ia_compare_le(Interval::INVALID, iv(1.0, 2.0)), Ternary::Indeterminate);
    }

    #[test]
    fn minmax_cases() {
        assert_eq!(ia_minmax(iv(1.0, 3.0), iv(2.0, 2.0)).0, iv(1.0, 2.0));
        assert_eq!(ia_minmax(iv(0.0, 0.0), iv(-1.0, 5.0)).1, iv(0.0, 5.0));
        assert_eq!(ia_minmax(iv(2.0, 4.0), iv(2.0, 4.0)).1, iv(2.0, 4.0));
    }

    #[test]
    fn invalid_is_sticky() {
        let bad = Interval::INVALID;
        assert!(!(bad + iv(1.0, 2.0)).is_valid());
        assert!(!(iv(1.0, 2.0) * bad).is_valid());
        assert!(!bad.sqrt().is_valid());
        assert!(!Interval::new(2.0, 1.0).is_valid());
        assert!(!Interval::new(0.0, f64::INFINITY).is_valid());
        assert_eq!(ia_binary(BinOp::Add, bad, bad), Err(IntervalError::InvalidOperand));
    }

    #[test]
    fn overflow_flags_invalid() {
        let big = iv(1e308, 1e308);
        assert_eq!(ia_binary(BinOp::Mul, big, big), Err(IntervalError::Overflow));
        assert!(!(big * big).is_valid());
    }

    #[test]
    fn ternary_logic() {
        use Ternary::*;
        assert_eq!(True.and(Indeterminate), Indeterminate);
        assert_eq!(False.and(Indeterminate), False);
        assert_eq!(True.or(Indeterminate), True);
        assert_eq!(Indeterminate.not(), Indeterminate);
        assert!(Indeterminate.possibly_true() && Indeterminate.possibly_false());
    }

    #[test]
    fn sqr_straddling_zero_starts_at_zero() {
        let r = iv(-2.0, 1.0).sqr();
        assert_eq!(r.lo(), 0.0);
        assert!(r.hi() >= 4.0);
    }

    #[test]
    fn sqrt_pos_clamps() {
        assert_eq!(iv(-3.0, -1.0).sqrt_pos(), Interval::ZERO);
        let r = iv(-1.0, 4.0).sqrt_pos();
        assert_eq!(r.lo(), 0.0);
        assert!(r.hi() >= 2.0);
    }
}
