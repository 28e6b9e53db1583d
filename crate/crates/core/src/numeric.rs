//! Compensated summation and exact-integer log-factorials.

/// Running Neumaier-compensated accumulator.
#[derive(Debug, Clone, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Neumaier-compensated sum of `xs`.
pub(crate) fn compensated_sum<I>(xs: I) -> f64
where
    I: IntoIterator<Item = f64>,
{
    let mut acc = CompensatedSum::new();
    for x in xs {
        acc.add(x);
    }
    acc.value()
}

/// Running ln(x!) by compensated accumulation of ln k.
///
/// Exact at x = 0 and 1 and within a few ulps of the true value for any
/// integer x, which is what the ratio arithmetic needs; no gamma-function
/// approximation is involved.
#[derive(Debug, Clone)]
pub(crate) struct LnFactorial {
    x: usize,
    acc: CompensatedSum,
}

impl LnFactorial {
    pub fn new() -> Self {
        Self {
            x: 0,
            acc: CompensatedSum::new(),
        }
    }

    /// Step from ln(x!) to ln((x+1)!).
    pub fn advance(&mut self) {
        self.x += 1;
        self.acc.add((self.x as f64).ln());
    }

    pub fn value(&self) -> f64 {
        self.acc.value()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_recovers_cancellation() {
        let xs = [1.0, 1e16, 1.0, -1e16];
        assert_eq!(compensated_sum(xs.iter().copied()), 2.0);
    }

    #[test]
    fn ln_factorial_matches_direct_products() {
        let mut lf = LnFactorial::new();
        assert_eq!(lf.value(), 0.0);
        lf.advance();
        assert_eq!(lf.value(), 0.0); // ln 1! = 0 exactly
        for _ in 1..20 {
            lf.advance();
        }
        let direct: f64 = (2..=20u64).map(|k| k as f64).product::<f64>().ln();
        assert!((lf.value() - direct).abs() < 1e-12);
    }
}
