//! Validated Bernoulli parameter vectors with cached moments.

use crate::error::Error;
use crate::numeric::compensated_sum;

/// A validated vector of Bernoulli success probabilities together with the
/// moments every other module consumes: λ = Σpᵢ, Δ = λ⁻¹Σpᵢ², p* = max pᵢ,
/// Var = Σpᵢ(1 − pᵢ), and the odds qᵢ = pᵢ/(1 − pᵢ).
///
/// Instances are immutable; all derived quantities are cached at
/// construction. Input order is preserved (zero entries included), and all
/// downstream results are permutation-invariant.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterVector {
    p: Vec<f64>,
    q: Vec<f64>,
    lambda: f64,
    delta: f64,
    p_star: f64,
    variance: f64,
    support_size: usize,
}

impl ParameterVector {
    /// Validates `values` — each must lie in [0, 1) and at least one must be
    /// positive — and caches the derived moments.
    pub fn new(values: Vec<f64>) -> Result<Self, Error> {
        for (index, &value) in values.iter().enumerate() {
            if !(0.0..1.0).contains(&value) {
                return Err(Error::ValueOutOfRange { index, value });
            }
        }
        let lambda = compensated_sum(values.iter().copied());
        if lambda <= 0.0 {
            return Err(Error::DegenerateLambda);
        }
        let sum_sq = compensated_sum(values.iter().map(|&p| p * p));
        let variance = compensated_sum(values.iter().map(|&p| p * (1.0 - p)));
        let p_star = values.iter().cloned().fold(0.0, f64::max);
        let q = values.iter().map(|&p| p / (1.0 - p)).collect();
        let support_size = values.iter().filter(|&&p| p > 0.0).count();
        Ok(Self {
            q,
            lambda,
            delta: sum_sq / lambda,
            p_star,
            variance,
            support_size,
            p: values,
        })
    }

    /// The probabilities, in input order.
    pub fn probabilities(&self) -> &[f64] {
        &self.p
    }

    /// The odds qᵢ = pᵢ/(1 − pᵢ), elementwise.
    pub fn odds(&self) -> &[f64] {
        &self.q
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    /// λ = Σpᵢ.
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Δ = λ⁻¹Σpᵢ².
    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// p* = max pᵢ.
    pub fn p_star(&self) -> f64 {
        self.p_star
    }

    /// Var = Σpᵢ(1 − pᵢ); agrees with λ(1 − Δ) up to rounding.
    pub fn variance(&self) -> f64 {
        self.variance
    }

    /// Number of strictly positive parameters; the PMF support is 0..=this.
    pub fn support_size(&self) -> usize {
        self.support_size
    }

    /// ⌈λ⌉, the upper edge of the argmax window.
    pub fn ceil_lambda(&self) -> usize {
        self.lambda.ceil() as usize
    }

    /// The scaled vector t·p for t ∈ (0, 1].
    pub fn scaled(&self, t: f64) -> Result<Self, Error> {
        if !t.is_finite() || t <= 0.0 || t > 1.0 {
            return Err(Error::ScaleOutOfRange(t));
        }
        Self::new(self.p.iter().map(|&p| t * p).collect())
    }
}
