//! Exact probability mass functions: the Bernoulli-convolution dynamic
//! program for the Poisson binomial distribution, and the log-space Poisson.

use crate::error::Error;
use crate::numeric::{CompensatedSum, LnFactorial};
use crate::params::ParameterVector;

/// Probability masses over x = 0..=n with parallel log-masses (−∞ where the
/// mass is exactly zero) and the rate λ they are matched against.
#[derive(Debug, Clone, PartialEq)]
pub struct PmfVector {
    masses: Vec<f64>,
    log_masses: Vec<f64>,
    lambda: f64,
}

impl PmfVector {
    fn from_masses(masses: Vec<f64>, lambda: f64) -> Self {
        let log_masses = masses
            .iter()
            .map(|&m| if m > 0.0 { m.ln() } else { f64::NEG_INFINITY })
            .collect();
        Self {
            masses,
            log_masses,
            lambda,
        }
    }

    pub(crate) fn from_logs(log_masses: Vec<f64>, lambda: f64) -> Self {
        let masses = log_masses.iter().map(|&l| l.exp()).collect();
        Self {
            masses,
            log_masses,
            lambda,
        }
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn log_masses(&self) -> &[f64] {
        &self.log_masses
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Number of stored masses (n + 1).
    pub fn len(&self) -> usize {
        self.masses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masses.is_empty()
    }

    /// b(x); zero beyond the stored range.
    pub fn mass(&self, x: usize) -> f64 {
        self.masses.get(x).copied().unwrap_or(0.0)
    }

    /// log b(x); −∞ beyond the stored range.
    pub fn log_mass(&self, x: usize) -> f64 {
        self.log_masses.get(x).copied().unwrap_or(f64::NEG_INFINITY)
    }

    /// Largest x of the leading positive run, i.e. the end of the support
    /// interval as actually computed.
    pub fn support_end(&self) -> usize {
        self.masses
            .iter()
            .position(|&m| m <= 0.0)
            .map_or(self.masses.len() - 1, |i| i.saturating_sub(1))
    }

    /// Compensated Σ masses.
    pub fn total_mass(&self) -> f64 {
        let mut acc = CompensatedSum::new();
        for &m in &self.masses {
            acc.add(m);
        }
        acc.value()
    }
}

/// Exact Poisson binomial PMF by iterative Bernoulli convolution:
/// fold in each pᵢ via new[x] = old[x]·(1 − pᵢ) + old[x−1]·pᵢ.
///
/// All terms are nonnegative, so the recursion is forward-stable; masses
/// are primary and log-masses are derived from them.
pub fn pmf(pv: &ParameterVector) -> PmfVector {
    let n = pv.len();
    let mut masses = vec![0.0; n + 1];
    masses[0] = 1.0;
    for (i, &p) in pv.probabilities().iter().enumerate() {
        for x in (1..=i + 1).rev() {
            masses[x] = masses[x] * (1.0 - p) + masses[x - 1] * p;
        }
        masses[0] *= 1.0 - p;
    }
    PmfVector::from_masses(masses, pv.lambda())
}

/// Poisson masses π(x) = e^{−λ}λˣ/x! for x = 0..=x_max, computed in log
/// space as −λ + x·ln λ − ln x! and then exponentiated. The stored masses
/// sum to less than one; the truncated tail is available from
/// [`poisson_tail_mass`].
pub fn poisson_pmf(lambda: f64, x_max: usize) -> Result<PmfVector, Error> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::InvalidLambda(lambda));
    }
    Ok(PmfVector::from_logs(
        poisson_log_masses(lambda, x_max),
        lambda,
    ))
}

pub(crate) fn poisson_log_masses(lambda: f64, x_max: usize) -> Vec<f64> {
    let ln_lambda = lambda.ln();
    let mut lnfact = LnFactorial::new();
    (0..=x_max)
        .map(|x| {
            if x > 0 {
                lnfact.advance();
            }
            -lambda + x as f64 * ln_lambda - lnfact.value()
        })
        .collect()
}

/// P(Poisson(λ) > n) by complementary summation of the same log-space terms,
/// stopped once the relative increment falls below 1e−18.
pub fn poisson_tail_mass(lambda: f64, n: usize) -> Result<f64, Error> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::InvalidLambda(lambda));
    }
    Ok(tail_mass_unchecked(lambda, n))
}

pub(crate) fn tail_mass_unchecked(lambda: f64, n: usize) -> f64 {
    let ln_lambda = lambda.ln();
    let mut lnfact = LnFactorial::new();
    for _ in 0..n {
        lnfact.advance();
    }
    let mut acc = CompensatedSum::new();
    let mut x = n;
    loop {
        x += 1;
        lnfact.advance();
        let term = (-lambda + x as f64 * ln_lambda - lnfact.value()).exp();
        acc.add(term);
        // terms only start decaying past the mode; stop once negligible
        if x as f64 > lambda && term <= acc.value().abs() * 1e-18 {
            break;
        }
        if term == 0.0 {
            break;
        }
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(values: &[f64]) -> ParameterVector {
        ParameterVector::new(values.to_vec()).unwrap()
    }

    #[test]
    fn single_fair_bernoulli() {
        let b = pmf(&pv(&[0.5]));
        assert_eq!(b.masses(), &[0.5, 0.5]);
    }

    #[test]
    fn three_term_fixture_is_exact() {
        let b = pmf(&pv(&[0.1, 0.2, 0.3]));
        let expected = [0.504, 0.398, 0.092, 0.006];
        for (x, &e) in expected.iter().enumerate() {
            assert!(
                (b.mass(x) - e).abs() <= 1e-15,
                "b({x}) = {} vs {e}",
                b.mass(x)
            );
        }
        assert!((b.total_mass() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zero_entry_truncates_support_exactly() {
        let b = pmf(&pv(&[0.3, 0.0]));
        assert_eq!(b.masses(), &[0.7, 0.3, 0.0]);
        assert_eq!(b.log_mass(2), f64::NEG_INFINITY);
        assert_eq!(b.support_end(), 1);
    }

    #[test]
    fn mass_beyond_range_is_zero() {
        let b = pmf(&pv(&[0.5]));
        assert_eq!(b.mass(7), 0.0);
        assert_eq!(b.log_mass(7), f64::NEG_INFINITY);
    }

    #[test]
    fn poisson_unit_rate_first_two_masses_equal() {
        let pi = poisson_pmf(1.0, 1).unwrap();
        assert_eq!(pi.mass(0), pi.mass(1));
        assert!((pi.mass(0) - (-1.0f64).exp()).abs() < 1e-16);
    }

    #[test]
    fn poisson_fixture_to_six_decimals() {
        let pi = poisson_pmf(0.6, 3).unwrap();
        let expected = [0.548812, 0.329287, 0.098786, 0.019757];
        for (x, &e) in expected.iter().enumerate() {
            assert!((pi.mass(x) - e).abs() < 5e-7);
        }
    }

    #[test]
    fn poisson_consecutive_ratio_is_lambda_over_x_plus_one() {
        let lambda = 2.3;
        let pi = poisson_pmf(lambda, 40).unwrap();
        for x in 0..40 {
            let ratio = pi.mass(x + 1) / pi.mass(x);
            let expected = lambda / (x as f64 + 1.0);
            assert!((ratio - expected).abs() <= 1e-12 * expected);
        }
    }

    #[test]
    fn poisson_rejects_nonpositive_rate() {
        assert!(matches!(poisson_pmf(0.0, 3), Err(Error::InvalidLambda(_))));
        assert!(matches!(poisson_pmf(-1.0, 3), Err(Error::InvalidLambda(_))));
        assert!(matches!(
            poisson_tail_mass(0.0, 3),
            Err(Error::InvalidLambda(_))
        ));
    }

    #[test]
    fn tail_mass_matches_closed_form_at_small_n() {
        // P(Poisson(0.5) > 1) = 1 − e^{−0.5}(1 + 0.5)
        let tail = poisson_tail_mass(0.5, 1).unwrap();
        assert!((tail - 0.090204010431049864594).abs() < 1e-16);
    }

    #[test]
    fn tail_complements_truncated_masses() {
        for &(lambda, n) in &[(0.5, 1usize), (3.7, 2), (12.0, 60), (0.01, 0)] {
            let pi = poisson_pmf(lambda, n).unwrap();
            let total = pi.total_mass() + poisson_tail_mass(lambda, n).unwrap();
            assert!((total - 1.0).abs() < 1e-14, "λ={lambda} n={n}: {total}");
        }
    }

    #[test]
    fn b0_brackets_for_small_lambda() {
        let pv = pv(&[0.1, 0.2, 0.3]);
        let b0 = pmf(&pv).mass(0);
        assert!(1.0 - pv.lambda() <= b0);
        assert!(b0 < (-pv.lambda()).exp());
    }
}
