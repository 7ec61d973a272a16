use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::point::ProjectivePoint;
use crate::arith::rational::clear_denominators;
use crate::arith::{parse_rational, QuadraticSurd, Rational};
use crate::text::{tokens, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MobiusError {
    #[error("determinant must be positive, got {0}")]
    NonPositiveDeterminant(Rational),
    #[error("map is not loxodromic ({0})")]
    NotLoxodromic(&'static str),
}

/// An orientation-preserving isometry of the hyperbolic plane, `z ↦ (pz+q)/(rz+s)`.
///
/// Stored as the integer matrix `[[p,q],[r,s]]` scaled to coprime entries with
/// the first nonzero entry positive. Matrices that differ by a nonzero scalar
/// give the same map, and normalization picks one representative per map, so
/// structural equality is equality of isometries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MobiusMap {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    s: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsometryClass {
    Identity,
    Elliptic,
    Parabolic {
        fixed: ProjectivePoint,
    },
    Loxodromic {
        plus: ProjectivePoint,
        minus: ProjectivePoint,
    },
}

impl IsometryClass {
    pub fn name(&self) -> &'static str {
        match self {
            IsometryClass::Identity => "Identity",
            IsometryClass::Elliptic => "Elliptic",
            IsometryClass::Parabolic { .. } => "Parabolic",
            IsometryClass::Loxodromic { .. } => "Loxodromic",
        }
    }
}

impl fmt::Display for IsometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsometryClass::Parabolic { fixed } => write!(f, "Parabolic fixed={fixed}"),
            IsometryClass::Loxodromic { plus, minus } => {
                write!(f, "Loxodromic plus={plus} minus={minus}")
            }
            other => f.write_str(other.name()),
        }
    }
}

impl MobiusMap {
    pub fn new(p: Rational, q: Rational, r: Rational, s: Rational) -> Result<Self, MobiusError> {
        let det = &p * &s - &q * &r;
        if !det.is_positive() {
            return Err(MobiusError::NonPositiveDeterminant(det));
        }
        let ints = clear_denominators(&[p, q, r, s]);
        Ok(Self::from_ints_unchecked(
            ints[0].clone(),
            ints[1].clone(),
            ints[2].clone(),
            ints[3].clone(),
        ))
    }

    pub fn from_ints(p: i64, q: i64, r: i64, s: i64) -> Result<Self, MobiusError> {
        let i = |n: i64| Rational::from_integer(n.into());
        Self::new(i(p), i(q), i(r), i(s))
    }

    /// Normalizes a matrix already known to have positive determinant.
    fn from_ints_unchecked(p: BigInt, q: BigInt, r: BigInt, s: BigInt) -> Self {
        let g = p.gcd(&q).gcd(&r).gcd(&s);
        let mut m = MobiusMap {
            p: &p / &g,
            q: &q / &g,
            r: &r / &g,
            s: &s / &g,
        };
        let first = [&m.p, &m.q, &m.r, &m.s]
            .into_iter()
            .find(|x| !x.is_zero())
            .cloned()
            .unwrap_or_default();
        if first.is_negative() {
            m = MobiusMap {
                p: -m.p,
                q: -m.q,
                r: -m.r,
                s: -m.s,
            };
        }
        m
    }

    pub fn identity() -> Self {
        Self::from_ints_unchecked(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.p, &self.q, &self.r, &self.s]
    }

    pub fn det(&self) -> BigInt {
        &self.p * &self.s - &self.q * &self.r
    }

    pub fn trace(&self) -> BigInt {
        &self.p + &self.s
    }

    pub fn is_identity(&self) -> bool {
        self.q.is_zero() && self.r.is_zero() && self.p == self.s
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self::from_ints_unchecked(
            &self.p * &other.p + &self.q * &other.r,
            &self.p * &other.q + &self.q * &other.s,
            &self.r * &other.p + &self.s * &other.r,
            &self.r * &other.q + &self.s * &other.s,
        )
    }

    /// The inverse map (the adjugate matrix, which has the same determinant).
    pub fn inverse(&self) -> Self {
        Self::from_ints_unchecked(
            self.s.clone(),
            -&self.q,
            -&self.r,
            self.p.clone(),
        )
    }

    pub fn pow(&self, n: i64) -> Self {
        let mut base = if n < 0 { self.inverse() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// `h · self · h⁻¹`.
    pub fn conjugate_by(&self, h: &Self) -> Self {
        h.compose(self).compose(&h.inverse())
    }

    /// `tr² - 4·det` of the normalized matrix; its sign decides the type.
    pub fn discriminant(&self) -> BigInt {
        let t = self.trace();
        &t * &t - BigInt::from(4) * self.det()
    }

    pub fn classify(&self) -> IsometryClass {
        if self.is_identity() {
            return IsometryClass::Identity;
        }
        match self.discriminant().sign() {
            num_bigint::Sign::Minus => IsometryClass::Elliptic,
            num_bigint::Sign::NoSign => {
                let fixed = if self.r.is_zero() {
                    ProjectivePoint::Infinity
                } else {
                    // double root of r z² + (s - p) z - q
                    ProjectivePoint::rational(Rational::new(&self.p - &self.s, &self.r * 2))
                };
                IsometryClass::Parabolic { fixed }
            }
            num_bigint::Sign::Plus => {
                let (plus, minus) = self.loxodromic_fixed_points();
                IsometryClass::Loxodromic { plus, minus }
            }
        }
    }

    pub fn is_loxodromic(&self) -> bool {
        !self.is_identity() && self.discriminant().is_positive()
    }

    /// Attracting and repelling fixed points.
    pub fn fixed_points(&self) -> Result<(ProjectivePoint, ProjectivePoint), MobiusError> {
        match self.classify() {
            IsometryClass::Loxodromic { plus, minus } => Ok((plus, minus)),
            other => Err(MobiusError::NotLoxodromic(other.name())),
        }
    }

    fn loxodromic_fixed_points(&self) -> (ProjectivePoint, ProjectivePoint) {
        let int = |x: &BigInt| Rational::from_integer(x.clone());
        if self.r.is_zero() {
            // z ↦ (p z + q)/s: ∞ attracts iff |p| > |s|
            let other = ProjectivePoint::rational(Rational::new(self.q.clone(), &self.s - &self.p));
            return if self.p.abs() > self.s.abs() {
                (ProjectivePoint::Infinity, other)
            } else {
                (other, ProjectivePoint::Infinity)
            };
        }
        // At a fixed point z the derivative is det/(rz+s)², and rz+s is the
        // eigenvalue (tr ± √D)/2. The attracting point takes the root whose
        // eigenvalue has the larger modulus, i.e. the sign of the trace.
        let two_r = int(&self.r) * Rational::from_integer(2.into());
        let center = int(&(&self.p - &self.s)) / &two_r;
        let half_root = Rational::one() / &two_r;
        let sign = if self.trace().is_negative() {
            -Rational::one()
        } else {
            Rational::one()
        };
        let d = self.discriminant();
        let mk = |b: Rational| {
            ProjectivePoint::Finite(
                QuadraticSurd::new(center.clone(), b, d.clone()).expect("positive discriminant"),
            )
        };
        (mk(&half_root * &sign), mk(-&half_root * &sign))
    }

    /// The boundary action, extended projectively.
    pub fn apply(&self, x: &ProjectivePoint) -> ProjectivePoint {
        let int = |v: &BigInt| Rational::from_integer(v.clone());
        match x {
            ProjectivePoint::Infinity => {
                if self.r.is_zero() {
                    ProjectivePoint::Infinity
                } else {
                    ProjectivePoint::rational(Rational::new(self.p.clone(), self.r.clone()))
                }
            }
            ProjectivePoint::Finite(z) => {
                let num = z.scale(&int(&self.p)).add_rational(&int(&self.q));
                let den = z.scale(&int(&self.r)).add_rational(&int(&self.s));
                match num.checked_div(&den) {
                    Some(w) => ProjectivePoint::Finite(w),
                    None => ProjectivePoint::Infinity,
                }
            }
        }
    }

    /// Parses four rationals `p q r s`.
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let toks: Vec<(usize, &str)> = tokens(s).collect();
        if toks.len() != 4 {
            let col = toks.get(4).map_or(s.len() + 1, |t| t.0);
            return Err(ParseError::at(
                col,
                format!("expected 4 matrix entries, found {}", toks.len()),
            ));
        }
        let mut vals = Vec::with_capacity(4);
        for (col, t) in &toks {
            vals.push(parse_rational(t).map_err(|e| e.relocate(1, col - 1))?);
        }
        let [p, q, r, s4]: [Rational; 4] = vals.try_into().expect("four entries");
        MobiusMap::new(p, q, r, s4).map_err(|e| ParseError::at(toks[0].0, e.to_string()))
    }
}

impl fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.p, self.q, self.r, self.s)
    }
}

impl PartialOrd for MobiusMap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but fixed total order, used only for deterministic output.
impl Ord for MobiusMap {
    fn cmp(&self, other: &Self) -> Ordering {
        self.entries().cmp(&other.entries())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::ratio;

    fn m(s: &str) -> MobiusMap {
        MobiusMap::parse(s).unwrap()
    }

    fn pt(s: &str) -> ProjectivePoint {
        ProjectivePoint::parse(s).unwrap()
    }

    #[test]
    fn normalizes() {
        assert_eq!(m("2 0 0 1/2"), m("4 0 0 1"));
        assert_eq!(m("-1 0 0 -1"), MobiusMap::identity());
        assert_eq!(m("0 -1 1 0").to_string(), "0 1 -1 0");
        assert_eq!(m("0 2 -2 0").to_string(), "0 1 -1 0");
        assert!(MobiusMap::parse("1 2 3 4").is_err());
        assert!(MobiusMap::parse("1 0 0").is_err());
        assert!(MobiusMap::parse("1 0 0 x").is_err());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            m("2 0 0 1").classify(),
            IsometryClass::Loxodromic {
                plus: ProjectivePoint::Infinity,
                minus: pt("0")
            }
        );
        assert_eq!(
            m("1 1 0 1").classify(),
            IsometryClass::Parabolic {
                fixed: ProjectivePoint::Infinity
            }
        );
        assert_eq!(m("0 -1 1 0").classify(), IsometryClass::Elliptic);
        assert_eq!(m("1 0 0 1").classify(), IsometryClass::Identity);
        assert_eq!(
            m("2 1 1 1").classify(),
            IsometryClass::Loxodromic {
                plus: pt("1/2 1/2 5"),
                minus: pt("1/2 -1/2 5")
            }
        );
    }

    #[test]
    fn golden_ratio_by_iteration() {
        // independent check: iterate z ↦ (2z+1)/(z+1) in rationals
        let mut z = ratio(1, 1);
        for _ in 0..30 {
            z = (&z * ratio(2, 1) + ratio(1, 1)) / (&z + ratio(1, 1));
        }
        let (plus, _) = m("2 1 1 1").fixed_points().unwrap();
        let phi = plus.finite().unwrap().approx();
        let zf: f64 = num_traits::ToPrimitive::to_f64(&z).unwrap();
        assert!((phi - zf).abs() < 1e-12);
    }

    #[test]
    fn fixed_point_examples() {
        assert_eq!(
            m("2 0 0 1/2").fixed_points().unwrap(),
            (ProjectivePoint::Infinity, pt("0"))
        );
        assert_eq!(
            m("1/2 0 0 2").fixed_points().unwrap(),
            (pt("0"), ProjectivePoint::Infinity)
        );
        let h = m("1 1 1 2");
        let g = m("2 0 0 1/2").conjugate_by(&h);
        assert_eq!(g.fixed_points().unwrap(), (pt("1"), pt("1/2")));
        assert!(matches!(
            m("1 1 0 1").fixed_points(),
            Err(MobiusError::NotLoxodromic("Parabolic"))
        ));
    }

    #[test]
    fn negative_trace_labels() {
        // -[[2,1],[1,1]] is the same map
        let a = m("-2 -1 -1 -1");
        assert_eq!(a, m("2 1 1 1"));
        // first entry positive but trace negative
        let b = m("1 2 -3 -5");
        assert_eq!(b.trace(), BigInt::from(-4));
        let (plus, minus) = b.fixed_points().unwrap();
        assert_eq!(b.apply(&plus), plus);
        assert_eq!(b.apply(&minus), minus);
        // forward orbit of 0 approaches plus
        let mut x = pt("0");
        for _ in 0..20 {
            x = b.apply(&x);
        }
        let d_plus = (x.finite().unwrap().approx() - plus.finite().unwrap().approx()).abs();
        assert!(d_plus < 1e-6);
    }

    #[test]
    fn action_examples() {
        assert_eq!(m("1 1 0 1").apply(&pt("0")), pt("1"));
        assert_eq!(
            m("2 0 0 1/2").apply(&ProjectivePoint::Infinity),
            ProjectivePoint::Infinity
        );
        assert_eq!(m("1 1 1 2").apply(&pt("0")), pt("1/2"));
        assert_eq!(m("0 -1 1 0").apply(&pt("0")), ProjectivePoint::Infinity);
        assert_eq!(m("0 -1 1 0").apply(&ProjectivePoint::Infinity), pt("0"));
    }

    #[test]
    fn group_laws() {
        let a = m("2 1 1 1");
        let b = m("1 3 0 1");
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.pow(3), a.compose(&a).compose(&a));
        assert_eq!(a.pow(-2), a.inverse().compose(&a.inverse()));
        let x = pt("1/3");
        assert_eq!(a.compose(&b).apply(&x), a.apply(&b.apply(&x)));
    }
}
