/// Outcome of one certified inequality.
///
/// `margin` is oriented so that a nonnegative value means the inequality
/// holds, with slack. Non-strict inequalities pass down to −tol (equality
/// cases are legitimate and must not flip on rounding noise); strict
/// inequalities require a positive margin at double precision.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub name: &'static str,
    pub pass: bool,
    pub margin: f64,
    /// Index x attaining the worst margin, when a location is meaningful.
    pub location: Option<usize>,
}

impl Verdict {
    pub(crate) fn non_strict(
        name: &'static str,
        margin: f64,
        location: Option<usize>,
        tol: f64,
    ) -> Self {
        Self {
            name,
            pass: margin >= -tol,
            margin,
            location,
        }
    }

    pub(crate) fn strict(name: &'static str, margin: f64, location: Option<usize>) -> Self {
        Self {
            name,
            pass: margin > 0.0,
            margin,
            location,
        }
    }
}
