//! Orders on triangular fuzzy numbers.
//!
//! Two orders are provided:
//!
//! * the natural partial order `≤_N`, componentwise on `(a, b, c)`;
//! * the admissible total order `≤_OT`, lexicographic on the key
//!   `(b, c, a)`: peak first, then right endpoint, then left endpoint.
//!
//! `≤_OT` refines `≤_N` and is the `Ord` implementation of [`Tfn`], so
//! `sort`, `max` and friends from the standard library follow it.
//!
//! All comparisons are exact. Two numbers that should tie on `b` (or on `b`
//! and `c`) must carry bit-identical values there; a result that is off by
//! one ulp lands on a different side of the order. No tolerance is applied
//! anywhere because it would break antisymmetry and transitivity.

use std::cmp::Ordering;

use crate::number::Tfn;

/// Sign of a TFN relative to the crisp zero under `≤_OT`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignClass {
    /// Strictly above `0̃`: `b > 0`, or `b = 0 < c`.
    Positive,
    /// Strictly below `0̃`: `b < 0`, or `a < b = c = 0`.
    Negative,
    /// Exactly `0̃`.
    Zero,
}

impl SignClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SignClass::Positive => "positive",
            SignClass::Negative => "negative",
            SignClass::Zero => "zero",
        }
    }
}

/// `A ≤_N B`: `a₁ ≤ a₂`, `b₁ ≤ b₂` and `c₁ ≤ c₂`.
pub fn leq_natural(lhs: &Tfn, rhs: &Tfn) -> bool {
    lhs.a() <= rhs.a() && lhs.b() <= rhs.b() && lhs.c() <= rhs.c()
}

/// Three-way comparison under `≤_OT`.
pub fn compare_ot(lhs: &Tfn, rhs: &Tfn) -> Ordering {
    // components are finite, so `total_cmp` only differs from `<` on signed
    // zeros, which construction normalizes away
    lhs.b()
        .total_cmp(&rhs.b())
        .then_with(|| lhs.c().total_cmp(&rhs.c()))
        .then_with(|| lhs.a().total_cmp(&rhs.a()))
}

pub fn leq_ot(lhs: &Tfn, rhs: &Tfn) -> bool {
    compare_ot(lhs, rhs) != Ordering::Greater
}

pub fn classify_sign(value: &Tfn) -> SignClass {
    let (a, b, c) = value.components();
    if b > 0.0 || (b == 0.0 && c > 0.0) {
        SignClass::Positive
    } else if b < 0.0 || (b == 0.0 && a < 0.0) {
        SignClass::Negative
    } else {
        SignClass::Zero
    }
}

/// The `≤_OT`-larger argument; `lhs` on ties.
pub fn ot_max(lhs: Tfn, rhs: Tfn) -> Tfn {
    if compare_ot(&rhs, &lhs) == Ordering::Greater {
        rhs
    } else {
        lhs
    }
}

/// The `≤_OT`-smaller argument; `lhs` on ties.
pub fn ot_min(lhs: Tfn, rhs: Tfn) -> Tfn {
    if compare_ot(&rhs, &lhs) == Ordering::Less {
        rhs
    } else {
        lhs
    }
}

/// Maximum of a slice, keeping the first of equal elements. `None` if empty.
pub fn ot_max_of(values: &[Tfn]) -> Option<Tfn> {
    values.iter().copied().reduce(ot_max)
}

/// Minimum of a slice, keeping the first of equal elements. `None` if empty.
pub fn ot_min_of(values: &[Tfn]) -> Option<Tfn> {
    values.iter().copied().reduce(ot_min)
}

/// Stable ascending sort under `≤_OT`.
pub fn ot_sort(mut values: Vec<Tfn>) -> Vec<Tfn> {
    values.sort_by(compare_ot);
    values
}

// Components are always finite, so `==` on them is an equivalence relation.
impl Eq for Tfn {}

impl PartialOrd for Tfn {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tfn {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_ot(self, other)
    }
}
