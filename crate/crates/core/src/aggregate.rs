//! Aggregation functions `TFNⁿ → TFN` and the averaging (FTA) checks.
//!
//! An aggregator is OT-increasing when `U ≤_{OTⁿ} V` implies
//! `E(U) ≤_OT E(V)`. An OT-increasing aggregator is a function type average
//! (FTA) when its value always lies between the `≤_OT`-minimum and maximum of
//! its arguments; for OT-increasing functions that is the same as being
//! idempotent. [`fta_bounds_check`] tests the bounds on its own, so it also
//! applies to aggregators that are bounded but not monotone.
//!
//! The witness functions are randomized falsification checks: a passing
//! verdict is evidence, a counterexample is proof.

use std::fmt;

use rand::Rng;

use crate::error::{Result, TfnError};
use crate::number::{Crisp, Tfn};
use crate::order::{leq_ot, ot_max_of, ot_min_of};
use crate::sample::{Pool, TfnSampler};
use crate::vector::TfnVector;

/// Largest accepted `|Σwᵢ − 1|` for a weight vector.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-12;

/// Relative tolerance for idempotency on real-valued samples. Samples from
/// the integer pool are compared exactly.
pub const IDEMPOTENCY_TOLERANCE: f64 = 1e-9;

/// Arity drawn by the witnesses for aggregators that accept any length.
const MAX_FREE_ARITY: usize = 6;

/// Nonnegative crisp weights summing to one.
///
/// Weights are stored as given and never renormalized.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<Crisp>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(TfnError::EmptyVector);
        }
        let weights = weights.into_iter().map(Crisp::new).collect::<Result<Vec<_>>>()?;
        if let Some(w) = weights.iter().find(|w| w.value() < 0.0) {
            return Err(TfnError::Validation(format!("weight {} is negative", w.value())));
        }
        let sum: f64 = weights.iter().map(|w| w.value()).sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(TfnError::Validation(format!("weights sum to {sum}, expected 1")));
        }
        Ok(WeightVector(weights))
    }

    /// `n` equal weights `1/n`.
    pub fn uniform(n: usize) -> Result<Self> {
        WeightVector::new(vec![1.0 / n as f64; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn weights(&self) -> &[Crisp] {
        &self.0
    }
}

/// `M_a(A₁, …, Aₙ) = (A₁ + … + Aₙ) ÷ ñ`, summing first and dividing once.
pub fn arithmetic_mean(input: &TfnVector) -> Result<Tfn> {
    let sum = input
        .components()
        .iter()
        .try_fold(Tfn::ZERO, |acc, x| acc.checked_add(x))?;
    sum.div_crisp(Crisp::new(input.len() as f64)?)
}

/// `M_w(A₁, …, Aₙ) = Σ w̃ᵢAᵢ`.
pub fn weighted_mean(weights: &WeightVector, input: &TfnVector) -> Result<Tfn> {
    if weights.len() != input.len() {
        return Err(TfnError::DimensionMismatch { expected: weights.len(), found: input.len() });
    }
    weights
        .weights()
        .iter()
        .zip(input.components())
        .try_fold(Tfn::ZERO, |acc, (&w, x)| acc.checked_add(&x.scale(w)?))
}

/// A function `E: TFNⁿ → TFN`.
pub trait Aggregator {
    /// Required input length, or `None` when any length is accepted.
    fn arity(&self) -> Option<usize>;

    fn evaluate(&self, input: &TfnVector) -> Result<Tfn>;

    /// `E(U)` after checking `U` against [`Aggregator::arity`].
    fn apply(&self, input: &TfnVector) -> Result<Tfn> {
        match self.arity() {
            Some(n) if n != input.len() => {
                Err(TfnError::DimensionMismatch { expected: n, found: input.len() })
            }
            _ => self.evaluate(input),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ArithmeticMean;

impl Aggregator for ArithmeticMean {
    fn arity(&self) -> Option<usize> {
        None
    }

    fn evaluate(&self, input: &TfnVector) -> Result<Tfn> {
        arithmetic_mean(input)
    }
}

#[derive(Debug, Clone)]
pub struct WeightedMean(pub WeightVector);

impl Aggregator for WeightedMean {
    fn arity(&self) -> Option<usize> {
        Some(self.0.len())
    }

    fn evaluate(&self, input: &TfnVector) -> Result<Tfn> {
        weighted_mean(&self.0, input)
    }
}

/// `≤_OT`-minimum of the arguments.
#[derive(Debug, Clone, Copy, Default)]
pub struct OtMinimum;

impl Aggregator for OtMinimum {
    fn arity(&self) -> Option<usize> {
        None
    }

    fn evaluate(&self, input: &TfnVector) -> Result<Tfn> {
        ot_min_of(input.components()).ok_or(TfnError::EmptyVector)
    }
}

/// `≤_OT`-maximum of the arguments.
#[derive(Debug, Clone, Copy, Default)]
pub struct OtMaximum;

impl Aggregator for OtMaximum {
    fn arity(&self) -> Option<usize> {
        None
    }

    fn evaluate(&self, input: &TfnVector) -> Result<Tfn> {
        ot_max_of(input.components()).ok_or(TfnError::EmptyVector)
    }
}

/// Wraps a closure as an aggregator.
pub struct FnAggregator<F> {
    arity: Option<usize>,
    f: F,
}

impl<F> FnAggregator<F>
where
    F: Fn(&TfnVector) -> Result<Tfn>,
{
    pub fn new(arity: Option<usize>, f: F) -> Self {
        FnAggregator { arity, f }
    }
}

impl<F> Aggregator for FnAggregator<F>
where
    F: Fn(&TfnVector) -> Result<Tfn>,
{
    fn arity(&self) -> Option<usize> {
        self.arity
    }

    fn evaluate(&self, input: &TfnVector) -> Result<Tfn> {
        (self.f)(input)
    }
}

/// Whether `E(U)` lies between the `≤_OT`-minimum and maximum of `U`,
/// inclusive.
pub fn fta_bounds_check<E: Aggregator + ?Sized>(aggregator: &E, input: &TfnVector) -> Result<bool> {
    let value = aggregator.apply(input)?;
    let lo = ot_min_of(input.components()).ok_or(TfnError::EmptyVector)?;
    let hi = ot_max_of(input.components()).ok_or(TfnError::EmptyVector)?;
    Ok(leq_ot(&lo, &value) && leq_ot(&value, &hi))
}

/// A falsifying input found by a witness.
#[derive(Debug, Clone, PartialEq)]
pub enum Counterexample {
    /// `lower ≤_{OTⁿ} upper` but `E(lower) >_OT E(upper)`.
    NotIncreasing { lower: TfnVector, upper: TfnVector, lower_image: Tfn, upper_image: Tfn },
    /// `E(value, …, value) ≠ value`.
    NotIdempotent { value: Tfn, arity: usize, image: Tfn },
    /// `E(input)` lies outside the `≤_OT` bounds of `input`.
    OutOfBounds { input: TfnVector, image: Tfn },
    /// `E` rejected a valid input.
    EvaluationFailed { input: TfnVector, error: TfnError },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::NotIncreasing { lower, upper, lower_image, upper_image } => write!(
                f,
                "{lower} <= {upper} componentwise, but E maps them to {lower_image} > {upper_image}"
            ),
            Counterexample::NotIdempotent { value, arity, image } => {
                write!(f, "E applied to {arity} copies of {value} gives {image}")
            }
            Counterexample::OutOfBounds { input, image } => {
                write!(f, "E maps {input} to {image}, outside its OT bounds")
            }
            Counterexample::EvaluationFailed { input, error } => {
                write!(f, "E failed on {input}: {error}")
            }
        }
    }
}

/// Outcome of a randomized witness.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    /// No counterexample in `trials` attempts.
    Holds { trials: usize },
    Counterexample(Box<Counterexample>),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            Verdict::Holds { .. } => None,
            Verdict::Counterexample(c) => Some(c),
        }
    }
}

fn draw_arity<E: Aggregator + ?Sized>(aggregator: &E, sampler: &mut TfnSampler) -> usize {
    aggregator
        .arity()
        .unwrap_or_else(|| sampler.rng().random_range(1..=MAX_FREE_ARITY))
}

/// Searches for `U ≤_{OTⁿ} V` with `E(U) >_OT E(V)`.
///
/// Each `V` is `U` translated componentwise by an OT-positive or zero TFN,
/// which keeps `U ≤_{OTⁿ} V`.
pub fn is_ot_increasing_witness<E: Aggregator + ?Sized>(
    aggregator: &E,
    trials: usize,
    seed: u64,
) -> Verdict {
    let mut sampler = TfnSampler::new(seed);
    for _ in 0..trials {
        let n = draw_arity(aggregator, &mut sampler);
        let (lower, upper) = sampler.dominated_pair(n);
        let images = aggregator
            .apply(&lower)
            .map_err(|e| (lower.clone(), e))
            .and_then(|l| aggregator.apply(&upper).map(|u| (l, u)).map_err(|e| (upper.clone(), e)));
        match images {
            Err((input, error)) => {
                return Verdict::Counterexample(Box::new(Counterexample::EvaluationFailed {
                    input,
                    error,
                }))
            }
            Ok((lower_image, upper_image)) if !leq_ot(&lower_image, &upper_image) => {
                return Verdict::Counterexample(Box::new(Counterexample::NotIncreasing {
                    lower,
                    upper,
                    lower_image,
                    upper_image,
                }))
            }
            Ok(_) => {}
        }
    }
    Verdict::Holds { trials }
}

fn close(expected: f64, actual: f64) -> bool {
    (expected - actual).abs() <= IDEMPOTENCY_TOLERANCE * expected.abs().max(1.0)
}

/// Whether `image` counts as equal to `value` for a sample from `pool`.
pub fn idempotent_match(pool: Pool, value: &Tfn, image: &Tfn) -> bool {
    match pool {
        Pool::Integer => value == image,
        Pool::Real => {
            close(value.a(), image.a()) && close(value.b(), image.b()) && close(value.c(), image.c())
        }
    }
}

/// Searches for `A` with `E(A, …, A) ≠ A`.
///
/// Integer-valued samples must match exactly; real-valued samples within
/// [`IDEMPOTENCY_TOLERANCE`] relative error.
pub fn is_idempotent_witness<E: Aggregator + ?Sized>(
    aggregator: &E,
    trials: usize,
    seed: u64,
) -> Verdict {
    let mut sampler = TfnSampler::new(seed);
    for _ in 0..trials {
        let n = draw_arity(aggregator, &mut sampler);
        let pool = sampler.pool();
        let value = sampler.tfn_in(pool);
        let input = TfnVector::repeat(value, n).expect("n >= 1");
        match aggregator.apply(&input) {
            Err(error) => {
                return Verdict::Counterexample(Box::new(Counterexample::EvaluationFailed {
                    input,
                    error,
                }))
            }
            Ok(image) if !idempotent_match(pool, &value, &image) => {
                return Verdict::Counterexample(Box::new(Counterexample::NotIdempotent {
                    value,
                    arity: n,
                    image,
                }))
            }
            Ok(_) => {}
        }
    }
    Verdict::Holds { trials }
}

/// Searches sampled inputs for `E(U)` outside the `≤_OT` bounds of `U`.
pub fn fta_bounds_witness<E: Aggregator + ?Sized>(aggregator: &E, trials: usize, seed: u64) -> Verdict {
    let mut sampler = TfnSampler::new(seed);
    for _ in 0..trials {
        let n = draw_arity(aggregator, &mut sampler);
        let (_, input) = sampler.vector(n);
        match fta_bounds_check(aggregator, &input) {
            Ok(true) => {}
            Ok(false) => {
                let image = aggregator.apply(&input).expect("evaluated by the bounds check");
                return Verdict::Counterexample(Box::new(Counterexample::OutOfBounds { input, image }));
            }
            Err(error) => {
                return Verdict::Counterexample(Box::new(Counterexample::EvaluationFailed {
                    input,
                    error,
                }))
            }
        }
    }
    Verdict::Holds { trials }
}
