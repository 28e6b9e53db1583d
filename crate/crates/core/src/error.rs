use thiserror::Error;

/// Errors produced by parameter validation and the numeric routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A Bernoulli parameter lies outside the admissible half-open interval.
    #[error("parameter p[{index}] = {value} outside [0, 1)")]
    ValueOutOfRange { index: usize, value: f64 },

    /// Every parameter is zero (or the list is empty), so λ = 0.
    #[error("all parameters are zero; λ must be positive")]
    DegenerateLambda,

    /// A Poisson rate that is not strictly positive.
    #[error("Poisson rate must be positive, got {0}")]
    InvalidLambda(f64),

    /// Brute-force enumeration refused: 2^n outcomes is past the budget.
    #[error("n = {n} exceeds the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    /// Subset enumeration refused: C(n, x) is past the budget.
    #[error("C({n}, {x}) = {count} subsets exceed the enumeration budget")]
    TooManySubsets { n: usize, x: usize, count: u128 },

    /// A count outside 0..=n was requested.
    #[error("x = {x} outside 0..={n}")]
    XOutOfRange { x: usize, n: usize },

    /// A ratio with a vanishing denominator b(x) = 0.
    #[error("ratio undefined: b({x}) = 0")]
    UndefinedRatio { x: usize },

    /// A scale factor outside the certified range (0, 1].
    #[error("scale t = {0} outside (0, 1]")]
    ScaleOutOfRange(f64),

    /// The log-ratio is not defined or not certified at this point.
    #[error("log-ratio unsupported at x = {x}, t = {t}")]
    UnsupportedPoint { x: usize, t: f64 },

    /// An empty evaluation grid.
    #[error("grid is empty")]
    EmptyGrid,

    /// Grid points must be strictly ascending.
    #[error("grid points must be strictly ascending")]
    UnsortedGrid,

    /// The two closed forms of the ray derivative disagreed beyond tolerance.
    #[error("derivative forms disagree at x = {x}, t = {t}: {pmf_form} vs {exp_form}")]
    DerivativeMismatch {
        x: usize,
        t: f64,
        pmf_form: f64,
        exp_form: f64,
    },

    /// The two brute-force PMF routes disagreed, so the oracle is suspect.
    #[error("oracle routes disagree at x = {x}: direct {direct} vs subset form {subset}")]
    OracleMismatch { x: usize, direct: f64, subset: f64 },
}
