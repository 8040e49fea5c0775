//! The triangular fuzzy number type and its closed-form arithmetic.
//!
//! A [`Tfn`] `(a, b, c)` has membership 1 at the peak `b` and linear ramps
//! down to 0 at `a` and `c`. Sums, differences, negation and products or
//! quotients with a crisp number are again TFNs and are computed from the
//! endpoints directly. Products of two non-crisp TFNs are not triangular and
//! are not offered.
//!
//! Every constructor and operation rejects non-finite components, so values
//! of this type always satisfy `a <= b <= c` with finite fields.

use std::fmt;
use std::ops::Neg;

use crate::error::{Result, TfnError};
use crate::interval::Interval;

/// A crisp (real) number `r`, embedded in the TFNs as `(r, r, r)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Crisp(f64);

impl Crisp {
    pub const ZERO: Crisp = Crisp(0.0);
    pub const ONE: Crisp = Crisp(1.0);

    pub fn new(r: f64) -> Result<Self> {
        if r.is_finite() {
            Ok(Crisp(r + 0.0))
        } else {
            Err(TfnError::Validation(format!("crisp value {r} is not finite")))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Crisp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}~", self.0)
    }
}

/// Triangular fuzzy number `(a, b, c)` with `a <= b <= c`.
///
/// Equality is exact on the three components. The derived `Ord` is the
/// admissible total order (see [`crate::order`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tfn {
    a: f64,
    b: f64,
    c: f64,
}

impl Tfn {
    /// The crisp zero `(0, 0, 0)`.
    pub const ZERO: Tfn = Tfn { a: 0.0, b: 0.0, c: 0.0 };

    /// Builds a TFN, rejecting non-finite inputs and `a > b` or `b > c`.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(TfnError::Validation(format!(
                "components ({a}, {b}, {c}) must be finite"
            )));
        }
        if a > b || b > c {
            return Err(TfnError::Validation(format!(
                "expected a <= b <= c, got ({a}, {b}, {c})"
            )));
        }
        // `+ 0.0` folds negative zero into positive zero.
        Ok(Tfn { a: a + 0.0, b: b + 0.0, c: c + 0.0 })
    }

    /// Result of an arithmetic operation whose ordering holds by construction.
    fn from_op(op: &'static str, a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(TfnError::Overflow(op));
        }
        debug_assert!(a <= b && b <= c, "{op} broke ordering: ({a}, {b}, {c})");
        Ok(Tfn { a: a + 0.0, b: b + 0.0, c: c + 0.0 })
    }

    pub fn crisp(r: Crisp) -> Self {
        Tfn { a: r.0, b: r.0, c: r.0 }
    }

    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> f64 {
        self.b
    }

    #[inline]
    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn components(&self) -> (f64, f64, f64) {
        (self.a, self.b, self.c)
    }

    /// True when `a = b = c`.
    pub fn is_crisp(&self) -> bool {
        self.a == self.b && self.b == self.c
    }

    /// True when the number has the form `(-h, 0, h)` with `h >= 0`.
    pub fn is_zero_isosceles(&self) -> bool {
        self.b == 0.0 && self.a == -self.c
    }

    /// Membership degree of `x`.
    ///
    /// A degenerate ramp (`a = b` or `b = c`) is empty: the value is 1 at `b`
    /// and 0 on that side.
    pub fn membership(&self, x: f64) -> f64 {
        let Tfn { a, b, c } = *self;
        if x == b {
            1.0
        } else if a < x && x < b {
            (x - a) / (b - a)
        } else if b < x && x < c {
            (c - x) / (c - b)
        } else {
            0.0
        }
    }

    /// The α-cut `[a + α(b − a), c − α(c − b)]` for `α` in `]0, 1]`.
    pub fn alpha_cut(&self, alpha: f64) -> Result<Interval> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(TfnError::Domain(format!(
                "alpha must lie in ]0, 1], got {alpha}"
            )));
        }
        let Tfn { a, b, c } = *self;
        if alpha == 1.0 {
            return Ok(Interval::point(b));
        }
        let mut lo = a + alpha * (b - a);
        if !lo.is_finite() {
            lo = a * (1.0 - alpha) + b * alpha;
        }
        let mut hi = c - alpha * (c - b);
        if !hi.is_finite() {
            hi = c * (1.0 - alpha) + b * alpha;
        }
        // rounding must not push the endpoints across the peak
        Ok(Interval::from_sorted(lo.min(b), hi.max(b)))
    }

    /// `(a₁ + a₂, b₁ + b₂, c₁ + c₂)`.
    pub fn checked_add(&self, other: &Tfn) -> Result<Tfn> {
        Tfn::from_op("addition", self.a + other.a, self.b + other.b, self.c + other.c)
    }

    /// `(a₁ − c₂, b₁ − b₂, c₁ − a₂)`.
    pub fn checked_sub(&self, other: &Tfn) -> Result<Tfn> {
        Tfn::from_op("subtraction", self.a - other.c, self.b - other.b, self.c - other.a)
    }

    /// The scalar product `r̃A`: `(ra, rb, rc)` for `r >= 0`, `(rc, rb, ra)` otherwise.
    pub fn scale(&self, r: Crisp) -> Result<Tfn> {
        let r = r.0;
        if r >= 0.0 {
            Tfn::from_op("scalar product", r * self.a, r * self.b, r * self.c)
        } else {
            Tfn::from_op("scalar product", r * self.c, r * self.b, r * self.a)
        }
    }

    /// `A · r̃`, the only closed TFN product; identical to [`Tfn::scale`].
    pub fn mul_crisp(&self, r: Crisp) -> Result<Tfn> {
        self.scale(r)
    }

    /// `A ÷ r̃` for a non-zero crisp divisor.
    pub fn div_crisp(&self, r: Crisp) -> Result<Tfn> {
        let r = r.0;
        if r == 0.0 {
            Err(TfnError::DivisionByZero)
        } else if r > 0.0 {
            Tfn::from_op("division", self.a / r, self.b / r, self.c / r)
        } else {
            Tfn::from_op("division", self.c / r, self.b / r, self.a / r)
        }
    }

    /// `A + A + … + A` with `n >= 1` terms, folded left to right.
    pub fn repeat_add(&self, n: usize) -> Result<Tfn> {
        if n == 0 {
            return Err(TfnError::Domain("repeat_add needs at least one term".into()));
        }
        (1..n).try_fold(*self, |acc, _| acc.checked_add(self))
    }
}

impl Neg for Tfn {
    type Output = Tfn;

    /// `−(a, b, c) = (−c, −b, −a)`.
    fn neg(self) -> Tfn {
        Tfn { a: -self.c + 0.0, b: -self.b + 0.0, c: -self.a + 0.0 }
    }
}

impl From<Crisp> for Tfn {
    fn from(r: Crisp) -> Self {
        Tfn::crisp(r)
    }
}

impl fmt::Display for Tfn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}
