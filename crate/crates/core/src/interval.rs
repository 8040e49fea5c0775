//! Closed real intervals, the carrier of α-cuts.

use std::fmt;

use crate::error::{Result, TfnError};

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(TfnError::Validation(format!(
                "interval endpoints must satisfy lo <= hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Interval::from_sorted(lo, hi))
    }

    pub fn point(x: f64) -> Self {
        Interval::from_sorted(x, x)
    }

    pub(crate) fn from_sorted(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo: lo + 0.0, hi: hi + 0.0 }
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// True when `other` lies inside `self`.
    pub fn encloses(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// `[lo₁ + lo₂, hi₁ + hi₂]`
    pub fn plus(&self, other: &Interval) -> Interval {
        Interval::from_sorted(self.lo + other.lo, self.hi + other.hi)
    }

    /// `[lo₁ − hi₂, hi₁ − lo₂]`
    pub fn minus(&self, other: &Interval) -> Interval {
        Interval::from_sorted(self.lo - other.hi, self.hi - other.lo)
    }

    /// `{r·x : x ∈ self}`
    pub fn times(&self, r: f64) -> Interval {
        let (p, q) = (r * self.lo, r * self.hi);
        if p <= q {
            Interval::from_sorted(p, q)
        } else {
            Interval::from_sorted(q, p)
        }
    }

    /// Largest endpoint distance to `other`.
    pub fn distance(&self, other: &Interval) -> f64 {
        (self.lo - other.lo).abs().max((self.hi - other.hi).abs())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_reversed_endpoints() {
        assert!(Interval::new(2.0, 1.0).is_err());
        assert!(Interval::new(f64::NAN, 1.0).is_err());
        assert!(Interval::new(1.0, 1.0).is_ok());
    }

    #[test]
    fn arithmetic() {
        let x = Interval::new(1.5, 2.5).unwrap();
        let y = Interval::new(0.5, 1.5).unwrap();
        assert_eq!(x.plus(&y), Interval::new(2.0, 4.0).unwrap());
        assert_eq!(x.minus(&y), Interval::new(0.0, 2.0).unwrap());
        assert_eq!(x.times(-2.0), Interval::new(-5.0, -3.0).unwrap());
        assert_eq!(x.times(0.0), Interval::point(0.0));
        assert!(x.plus(&y).encloses(&Interval::point(3.0)));
        assert_eq!(x.distance(&y), 1.0);
    }
}
