use std::cmp::Ordering;
use std::fmt;

use crate::arith::{QuadraticSurd, Rational};
use crate::text::ParseError;

/// A point of the projective line `RP¹ = ℝ ∪ {∞}`, the circle at infinity of
/// the upper half-plane.
///
/// The derived order is the linear order of the reals with `∞` placed last.
/// Reading it cyclically (wrapping from `∞` back to the most negative reals)
/// gives the positive orientation of the circle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ProjectivePoint {
    Finite(QuadraticSurd),
    Infinity,
}

impl ProjectivePoint {
    pub fn rational(x: Rational) -> Self {
        ProjectivePoint::Finite(QuadraticSurd::rational(x))
    }

    pub fn from_int(n: i64) -> Self {
        ProjectivePoint::Finite(QuadraticSurd::from_int(n))
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjectivePoint::Infinity)
    }

    pub fn finite(&self) -> Option<&QuadraticSurd> {
        match self {
            ProjectivePoint::Finite(z) => Some(z),
            ProjectivePoint::Infinity => None,
        }
    }

    /// `inf`, a rational, or `a b d` for `a + b·√d`.
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        if t == "inf" || t == "∞" {
            return Ok(ProjectivePoint::Infinity);
        }
        let offset = s.len() - s.trim_start().len();
        QuadraticSurd::parse(t)
            .map(ProjectivePoint::Finite)
            .map_err(|e| e.relocate(1, offset))
    }
}

/// Is `x` strictly inside the positively oriented arc from `lo` to `hi`?
/// For `lo == hi` the arc is the whole circle minus that point.
pub fn strictly_between(lo: &ProjectivePoint, x: &ProjectivePoint, hi: &ProjectivePoint) -> bool {
    match lo.cmp(hi) {
        Ordering::Less => lo < x && x < hi,
        Ordering::Greater => x > lo || x < hi,
        Ordering::Equal => x != lo,
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectivePoint::Finite(z) => write!(f, "{z}"),
            ProjectivePoint::Infinity => write!(f, "inf"),
        }
    }
}

impl From<QuadraticSurd> for ProjectivePoint {
    fn from(z: QuadraticSurd) -> Self {
        ProjectivePoint::Finite(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> ProjectivePoint {
        ProjectivePoint::parse(s).unwrap()
    }

    #[test]
    fn infinity_is_last() {
        assert!(p("1000000") < p("inf"));
        assert!(p("-3") < p("0 1 2"));
        assert!(p("0 1 2") < p("3/2"));
    }

    #[test]
    fn arcs_wrap_through_infinity() {
        assert!(strictly_between(&p("inf"), &p("-1"), &p("0")));
        assert!(strictly_between(&p("2"), &p("inf"), &p("1")));
        assert!(!strictly_between(&p("0"), &p("inf"), &p("1")));
        assert!(strictly_between(&p("5"), &p("inf"), &p("5")));
        assert!(!strictly_between(&p("5"), &p("5"), &p("5")));
    }

    #[test]
    fn text_round_trip() {
        for s in ["inf", "0", "-7/3", "1/2 1/2 5"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert!(ProjectivePoint::parse("infinity").is_err());
    }
}
