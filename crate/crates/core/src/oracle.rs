//! Brute-force reconstructions of TFN arithmetic, for verification only.
//!
//! Two routes that share no code with the closed forms in [`crate::number`]:
//!
//! * **α-cut route**: cut each operand at every level of an [`AlphaGrid`]
//!   and combine the cuts with interval arithmetic. The α-cuts of the
//!   closed-form result must match these intervals.
//! * **sup–min route**: evaluate `(A ∘ B)(x) = sup min(A(y), B(z))` over the
//!   pairs with `y ∘ z = x` by scanning `y` on a grid. This approximates the
//!   membership of the result from below.
//!
//! Nothing in the library calls into this module.

use crate::error::{Result, TfnError};
use crate::interval::Interval;
use crate::number::{Crisp, Tfn};

/// Padding applied to the scanned support in [`membership_convolution`].
pub const SUPPORT_PADDING: f64 = 1e-9;

/// Fewest grid samples accepted by [`membership_convolution`].
pub const MIN_SAMPLES: usize = 100;

/// Strictly ascending α-levels in `]0, 1]` ending at 1.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaGrid(Vec<f64>);

impl AlphaGrid {
    pub fn new(levels: Vec<f64>) -> Result<Self> {
        let in_range = levels.iter().all(|&l| l > 0.0 && l <= 1.0);
        let ascending = levels.windows(2).all(|w| w[0] < w[1]);
        if !in_range || !ascending || levels.last() != Some(&1.0) {
            return Err(TfnError::Validation(
                "alpha grid must be strictly ascending in ]0, 1] and end at 1".into(),
            ));
        }
        Ok(AlphaGrid(levels))
    }

    /// `k` evenly spaced levels `1/k, 2/k, …, 1`.
    pub fn uniform(k: usize) -> Result<Self> {
        AlphaGrid::new((1..=k).map(|i| i as f64 / k as f64).collect())
    }

    pub fn levels(&self) -> &[f64] {
        &self.0
    }
}

impl Default for AlphaGrid {
    /// `{0.1, 0.2, …, 1.0}`
    fn default() -> Self {
        AlphaGrid::uniform(10).expect("ten levels form a valid grid")
    }
}

/// Per-level cuts of an oracle result.
pub type CutProfile = Vec<(f64, Interval)>;

fn combine<F>(lhs: &Tfn, rhs: &Tfn, grid: &AlphaGrid, op: F) -> CutProfile
where
    F: Fn(&Interval, &Interval) -> Interval,
{
    grid.levels()
        .iter()
        .map(|&alpha| {
            let x = lhs.alpha_cut(alpha).expect("grid levels lie in ]0, 1]");
            let y = rhs.alpha_cut(alpha).expect("grid levels lie in ]0, 1]");
            (alpha, op(&x, &y))
        })
        .collect()
}

/// Interval sums of the operands' cuts: `[lo₁ + lo₂, hi₁ + hi₂]`.
pub fn oracle_add(lhs: &Tfn, rhs: &Tfn, grid: &AlphaGrid) -> CutProfile {
    combine(lhs, rhs, grid, Interval::plus)
}

/// Interval differences of the operands' cuts: `[lo₁ − hi₂, hi₁ − lo₂]`.
pub fn oracle_sub(lhs: &Tfn, rhs: &Tfn, grid: &AlphaGrid) -> CutProfile {
    combine(lhs, rhs, grid, Interval::minus)
}

/// Cuts of the operand scaled pointwise by `r`.
pub fn oracle_scale(r: Crisp, value: &Tfn, grid: &AlphaGrid) -> CutProfile {
    grid.levels()
        .iter()
        .map(|&alpha| {
            let cut = value.alpha_cut(alpha).expect("grid levels lie in ]0, 1]");
            (alpha, cut.times(r.value()))
        })
        .collect()
}

/// Largest endpoint distance between a closed-form result's cuts and a
/// profile.
pub fn profile_distance(result: &Tfn, profile: &CutProfile) -> f64 {
    profile
        .iter()
        .map(|(alpha, cut)| {
            result.alpha_cut(*alpha).expect("grid levels lie in ]0, 1]").distance(cut)
        })
        .fold(0.0, f64::max)
}

/// One operand of `x = y ∘ z` solved from `x` and the other.
type Solve = fn(f64, f64) -> f64;

/// Binary operation evaluated by [`membership_convolution`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvolutionOp {
    Add,
    Sub,
}

/// Grid-search approximation of `(lhs ∘ rhs)(x)`.
///
/// Scans `y` over `samples` evenly spaced points of the range where both
/// `lhs(y)` and the matching `rhs(z)` can be positive, plus the breakpoints
/// of both operands mapped into `y`. The result never exceeds the true
/// supremum and approaches it as `samples` grows.
///
/// # Panics
///
/// If `samples < MIN_SAMPLES`.
pub fn membership_convolution(
    lhs: &Tfn,
    rhs: &Tfn,
    op: ConvolutionOp,
    x: f64,
    samples: usize,
) -> f64 {
    assert!(samples >= MIN_SAMPLES, "need at least {MIN_SAMPLES} samples, got {samples}");
    // z as a function of y, y as a function of z, and the y-range mapped
    // from rhs's support
    let (partner, solve, lo, hi): (Solve, Solve, f64, f64) = match op {
        ConvolutionOp::Add => (|x, y| x - y, |x, z| x - z, x - rhs.c(), x - rhs.a()),
        ConvolutionOp::Sub => (|x, y| y - x, |x, z| x + z, x + rhs.a(), x + rhs.c()),
    };
    let lo = lo.max(lhs.a()) - SUPPORT_PADDING;
    let hi = hi.min(lhs.c()) + SUPPORT_PADDING;
    if lo > hi {
        return 0.0;
    }
    let degree = |y: f64, z: f64| lhs.membership(y).min(rhs.membership(z));

    let step = (hi - lo) / (samples - 1) as f64;
    let scanned = (0..samples)
        .map(|i| if i + 1 == samples { hi } else { lo + step * i as f64 })
        .map(|y| degree(y, partner(x, y)))
        .fold(0.0, f64::max);

    // breakpoints are evaluated exactly on their own side so that a
    // degenerate ramp is not lost to rounding in the partner
    let from_lhs = [lhs.a(), lhs.b(), lhs.c()].map(|y| degree(y, partner(x, y)));
    let from_rhs = [rhs.a(), rhs.b(), rhs.c()].map(|z| degree(solve(x, z), z));
    from_lhs.into_iter().chain(from_rhs).fold(scanned, f64::max)
}
