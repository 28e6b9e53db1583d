//! Exact Poisson binomial distributions and certified density-ratio bounds
//! against the matched Poisson distribution.
//!
//! The crate is built around a validated [`ParameterVector`] of Bernoulli
//! success probabilities pᵢ ∈ [0,1). From it one can compute
//!
//! * the exact probability mass function by Bernoulli convolution
//!   ([`pmf`]) and the matched Poisson masses ([`poisson_pmf`]),
//! * the density-ratio profile r(x) = b(x)/π(x) with its maximum ρ and
//!   argmax set ([`ratio_profile`]),
//! * numerical certificates for the structural inequalities the ratio
//!   obeys ([`certify_structure`]) and for the quantitative bounds
//!   relating ρ, the total variation distance, and the moments
//!   ([`bound_report`]),
//! * the log-ratio curves along the scaled family t·p, their derivatives,
//!   and the envelope max over the argmax window ([`ray`]).
//!
//! Brute-force subset-sum evaluations ([`oracle`]) validate every fast
//! path at small n.

pub mod bounds;
mod error;
mod numeric;
pub mod oracle;
pub mod params;
pub mod pmf;
pub mod ratio;
pub mod ray;
mod verdict;

pub use bounds::{bound_report, bound_report_with_tol, conjecture_gap, tv_exact, BoundReport};
pub use error::Error;
pub use params::ParameterVector;
pub use pmf::{pmf, poisson_pmf, poisson_tail_mass, PmfVector};
pub use ratio::{
    certify_structure, certify_structure_with_tol, ratio_profile, RatioProfile, StructureReport,
};
pub use ray::{
    envelope, log_ratio, log_ratio_derivative, log_ratio_derivative_forms, RayProfile,
};
pub use verdict::Verdict;

/// Default comparison tolerance for non-strict verdicts, overridable per call.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Relative discrepancy |a − b| / max(|a|, |b|); zero when both vanish.
pub fn relative_gap(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}
