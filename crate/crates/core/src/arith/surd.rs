//! Real quadratic irrationals `a + b·√d` with rational `a`, `b`.
//!
//! Fixed points of a Möbius map with rational entries are roots of a rational
//! quadratic, so they always live in some `ℚ(√d)`. Arithmetic is only defined
//! between values of the same field (or with a rational operand); ordering is
//! defined between any two surds, regardless of field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{ceil_dyadic, floor_dyadic, parse_rational, Rational};
use crate::text::{tokens, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurdError {
    #[error("negative radicand {0}")]
    NegativeRadicand(BigInt),
}

/// `a + b·√d`, canonical: `d` is square-free and `>= 2` whenever `b != 0`,
/// and `b = d = 0` for rational values.
///
/// Square-free reduction is complete for radicands below `2^64`; above that
/// only small square factors are removed. Equality and ordering compare exact
/// real values, so they stay correct either way.
#[derive(Clone, Debug)]
pub struct QuadraticSurd {
    a: Rational,
    b: Rational,
    d: BigInt,
}

impl QuadraticSurd {
    pub fn rational(a: Rational) -> Self {
        QuadraticSurd {
            a,
            b: Rational::zero(),
            d: BigInt::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(Rational::from_integer(n.into()))
    }

    pub fn new(a: Rational, b: Rational, radicand: BigInt) -> Result<Self, SurdError> {
        if radicand.is_negative() {
            return Err(SurdError::NegativeRadicand(radicand));
        }
        if b.is_zero() || radicand.is_zero() {
            return Ok(Self::rational(a));
        }
        let (root, free) = square_free_split(&radicand);
        let b = b * Rational::from_integer(root);
        if free.is_one() {
            return Ok(Self::rational(a + b));
        }
        Ok(QuadraticSurd { a, b, d: free })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QuadraticSurd {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    /// `a² - b²d`, the field norm.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.clone())
    }

    fn field_with(&self, other: &Self) -> BigInt {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => other.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                assert_eq!(
                    self.d, other.d,
                    "surd arithmetic across different quadratic fields"
                );
                self.d.clone()
            }
        }
    }

    fn build(a: Rational, b: Rational, d: BigInt) -> Self {
        if b.is_zero() {
            Self::rational(a)
        } else {
            QuadraticSurd { a, b, d }
        }
    }

    /// Exact quotient, `None` when dividing by zero.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if other.is_rational() {
            return Some(Self::build(
                &self.a / &other.a,
                &self.b / &other.a,
                self.d.clone(),
            ));
        }
        let norm = other.norm();
        let num = self * &other.conjugate();
        Some(Self::build(&num.a / &norm, &num.b / &norm, num.d))
    }

    /// Sign of the real value.
    pub fn signum(&self) -> Ordering {
        sign_of(&self.a, &self.b, &self.d)
    }

    /// Exact comparison of real values.
    pub fn surd_compare(&self, other: &Self) -> Ordering {
        if self.is_rational() || other.is_rational() || self.d == other.d {
            let d = if self.is_rational() { &other.d } else { &self.d };
            return sign_of(&(&self.a - &other.a), &(&self.b - &other.b), d);
        }
        // alpha + beta with alpha in Q(√d1) and beta = -b2·√d2
        let alpha_a = &self.a - &other.a;
        let alpha_b = self.b.clone();
        let s_alpha = sign_of(&alpha_a, &alpha_b, &self.d);
        let s_beta = rat_sign(&other.b).reverse();
        if s_alpha == Ordering::Equal {
            return s_beta;
        }
        if s_alpha == s_beta {
            return s_alpha;
        }
        // opposite signs: compare alpha² with b2²·d2
        let d1 = Rational::from_integer(self.d.clone());
        let d2 = Rational::from_integer(other.d.clone());
        let sq_a = &alpha_a * &alpha_a + &alpha_b * &alpha_b * &d1 - &other.b * &other.b * &d2;
        let sq_b = Rational::from_integer(BigInt::from(2)) * &alpha_a * &alpha_b;
        match sign_of(&sq_a, &sq_b, &self.d) {
            Ordering::Greater => s_alpha,
            Ordering::Less => s_beta,
            Ordering::Equal => Ordering::Equal,
        }
    }

    /// Dyadic rationals `lo <= self <= hi` with `hi - lo < 2^(1-bits)`.
    pub fn enclosure(&self, bits: u32) -> (Rational, Rational) {
        if self.is_rational() {
            return (self.a.clone(), self.a.clone());
        }
        let t = &self.b * &self.b * Rational::from_integer(self.d.clone());
        let (root_lo, root_hi) = sqrt_bounds(&t, bits + 2);
        let (lo, hi) = if self.b.is_positive() {
            (&self.a + root_lo, &self.a + root_hi)
        } else {
            (&self.a - root_hi, &self.a - root_lo)
        };
        (floor_dyadic(&lo, bits + 1), ceil_dyadic(&hi, bits + 1))
    }

    /// Nearest-ish `f64`, for diagnostics only.
    pub fn approx(&self) -> f64 {
        let (lo, hi) = self.enclosure(60);
        let mid = (lo + hi) / Rational::from_integer(2.into());
        mid.to_f64().unwrap_or(f64::NAN)
    }

    /// Parses `a` (a rational) or `a b d` meaning `a + b·√d`.
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let toks: Vec<(usize, &str)> = tokens(s).collect();
        let rat = |(col, t): (usize, &str)| {
            parse_rational(t).map_err(|e| e.relocate(1, col - 1))
        };
        match toks.as_slice() {
            [one] => Ok(Self::rational(rat(*one)?)),
            [a, b, (dcol, d)] => {
                let a = rat(*a)?;
                let b = rat(*b)?;
                let d: BigInt = d
                    .parse()
                    .map_err(|_| ParseError::at(*dcol, format!("bad radicand {d:?}")))?;
                Self::new(a, b, d).map_err(|e| ParseError::at(*dcol, e.to_string()))
            }
            [] => Err(ParseError::at(1, "empty number")),
            other => Err(ParseError::at(
                other[0].0,
                format!("expected 1 or 3 fields, found {}", other.len()),
            )),
        }
    }
}

fn rat_sign(x: &Rational) -> Ordering {
    if x.is_zero() {
        Ordering::Equal
    } else if x.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Sign of `a + b·√d` for `d >= 0`.
fn sign_of(a: &Rational, b: &Rational, d: &BigInt) -> Ordering {
    let sa = rat_sign(a);
    let sb = if d.is_zero() { Ordering::Equal } else { rat_sign(b) };
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    let lhs = a * a;
    let rhs = b * b * Rational::from_integer(d.clone());
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Bounds on `√t` for rational `t >= 0`, accurate to about `2^-bits`.
fn sqrt_bounds(t: &Rational, bits: u32) -> (Rational, Rational) {
    // √(n/m) = √(n·m)/m
    let n = t.numer();
    let m = t.denom();
    let scaled: BigInt = (n * m) << (2 * bits);
    let r = scaled.sqrt();
    let den = m << bits;
    let lo = Rational::new(r.clone(), den.clone());
    let hi = if &r * &r == scaled {
        lo.clone()
    } else {
        Rational::new(r + 1, den)
    };
    (lo, hi)
}

/// Writes `n = root² · free`. `free` is square-free whenever `n < 2^64`.
pub fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(!n.is_negative());
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let r = n.sqrt();
    if &r * &r == *n {
        return (r, BigInt::one());
    }
    if let Some(small) = n.to_u64() {
        let (root, free) = split_u64(small);
        return (BigInt::from(root), BigInt::from(free));
    }
    let mut rest = n.clone();
    let mut root = BigInt::one();
    let mut free = BigInt::one();
    let mut p: u64 = 2;
    while p < (1 << 16) {
        let pb = BigInt::from(p);
        let p2 = &pb * &pb;
        while (&rest % &p2).is_zero() {
            rest /= &p2;
            root *= &pb;
        }
        if (&rest % &pb).is_zero() {
            rest /= &pb;
            free *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let (r2, f2) = match rest.to_u64() {
        Some(small) => {
            let (a, b) = split_u64(small);
            (BigInt::from(a), BigInt::from(b))
        }
        None => {
            let s = rest.sqrt();
            if &s * &s == rest {
                (s, BigInt::one())
            } else {
                (BigInt::one(), rest)
            }
        }
    };
    (root * r2, free * f2)
}

fn split_u64(n: u64) -> (u64, u64) {
    let mut rest = n as u128;
    let mut root: u128 = 1;
    let mut free: u128 = 1;
    let mut p: u128 = 2;
    while p * p * p <= rest {
        while rest.is_multiple_of(p * p) {
            rest /= p * p;
            root *= p;
        }
        if rest.is_multiple_of(p) {
            rest /= p;
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // every prime factor of `rest` exceeds its cube root: rest is 1, q, q² or q·q'
    let s = (rest as f64).sqrt() as u128;
    let s = (s.saturating_sub(2)..=s + 2).find(|c| c * c == rest);
    match s {
        Some(s) => root *= s,
        None => free *= rest,
    }
    (root as u64, free as u64)
}

impl PartialEq for QuadraticSurd {
    fn eq(&self, other: &Self) -> bool {
        self.surd_compare(other) == Ordering::Equal
    }
}

impl Eq for QuadraticSurd {}

impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.surd_compare(other)
    }
}

impl<'a> Add<&'a QuadraticSurd> for &'a QuadraticSurd {
    type Output = QuadraticSurd;
    fn add(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        let d = self.field_with(rhs);
        QuadraticSurd::build(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl<'a> Sub<&'a QuadraticSurd> for &'a QuadraticSurd {
    type Output = QuadraticSurd;
    fn sub(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        let d = self.field_with(rhs);
        QuadraticSurd::build(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl<'a> Mul<&'a QuadraticSurd> for &'a QuadraticSurd {
    type Output = QuadraticSurd;
    fn mul(self, rhs: &QuadraticSurd) -> QuadraticSurd {
        let d = self.field_with(rhs);
        let dr = Rational::from_integer(d.clone());
        let a = &self.a * &rhs.a + &self.b * &rhs.b * dr;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadraticSurd::build(a, b, d)
    }
}

impl Neg for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn neg(self) -> QuadraticSurd {
        QuadraticSurd::build(-&self.a, -&self.b, self.d.clone())
    }
}

impl QuadraticSurd {
    pub fn scale(&self, k: &Rational) -> Self {
        Self::build(&self.a * k, &self.b * k, self.d.clone())
    }

    pub fn add_rational(&self, k: &Rational) -> Self {
        Self::build(&self.a + k, self.b.clone(), self.d.clone())
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} {} {}", self.a, self.b, self.d)
        }
    }
}

impl From<Rational> for QuadraticSurd {
    fn from(a: Rational) -> Self {
        Self::rational(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, ratio};

    fn surd(a: Rational, b: Rational, d: i64) -> QuadraticSurd {
        QuadraticSurd::new(a, b, BigInt::from(d)).unwrap()
    }

    #[test]
    fn compare_examples() {
        let one_plus_root2 = surd(int(1), int(1), 2);
        let two = QuadraticSurd::from_int(2);
        assert_eq!(one_plus_root2.surd_compare(&two), Ordering::Greater);
        let root2 = surd(int(0), int(1), 2);
        assert_eq!(
            root2.surd_compare(&QuadraticSurd::rational(ratio(3, 2))),
            Ordering::Less
        );
        assert_eq!(root2.surd_compare(&root2.clone()), Ordering::Equal);
    }

    #[test]
    fn compare_across_fields() {
        let r2 = surd(int(0), int(1), 2);
        let r3 = surd(int(0), int(1), 3);
        assert_eq!(r2.cmp(&r3), Ordering::Less);
        // 1 + √2 ≈ 2.414 vs √6 ≈ 2.449
        let a = surd(int(1), int(1), 2);
        let b = surd(int(0), int(1), 6);
        assert_eq!(a.cmp(&b), Ordering::Less);
        // 3 - √2 ≈ 1.586 vs √3 - 0.1 ≈ 1.632
        let c = surd(int(3), int(-1), 2);
        let e = surd(ratio(-1, 10), int(1), 3);
        assert_eq!(c.cmp(&e), Ordering::Less);
        assert_eq!(e.cmp(&c), Ordering::Greater);
    }

    #[test]
    fn canonical_forms() {
        let s = surd(int(1), int(1), 8); // 1 + 2√2
        assert_eq!(s.d(), &BigInt::from(2));
        assert_eq!(s.b(), &int(2));
        let r = surd(int(1), int(3), 9); // 1 + 9
        assert!(r.is_rational());
        assert_eq!(r, QuadraticSurd::from_int(10));
        let z = surd(int(5), int(0), 7);
        assert_eq!(z.d(), &BigInt::zero());
        assert!(QuadraticSurd::new(int(0), int(1), BigInt::from(-2)).is_err());
    }

    #[test]
    fn square_free() {
        assert_eq!(split_u64(72), (6, 2));
        assert_eq!(split_u64(1), (1, 1));
        assert_eq!(split_u64(49 * 3), (7, 3));
        // product of two primes above the cube root
        assert_eq!(split_u64(1_000_003 * 1_000_033), (1, 1_000_003 * 1_000_033));
        assert_eq!(split_u64(1_000_003 * 1_000_003 * 5), (1_000_003, 5));
        let big = BigInt::from(12u64) * BigInt::from(u64::MAX);
        let (root, free) = square_free_split(&big);
        assert_eq!(&root * &root * &free, big);
    }

    #[test]
    fn field_arithmetic() {
        let phi = surd(ratio(1, 2), ratio(1, 2), 5);
        // φ² = φ + 1
        let lhs = &phi * &phi;
        let rhs = phi.add_rational(&int(1));
        assert_eq!(lhs, rhs);
        let inv = QuadraticSurd::from_int(1).checked_div(&phi).unwrap();
        assert_eq!(inv, phi.add_rational(&int(-1)));
        assert!(phi.checked_div(&QuadraticSurd::from_int(0)).is_none());
    }

    #[test]
    fn enclosure_brackets() {
        let phi = surd(ratio(1, 2), ratio(1, 2), 5);
        let (lo, hi) = phi.enclosure(30);
        assert!(QuadraticSurd::rational(lo.clone()) <= phi);
        assert!(phi <= QuadraticSurd::rational(hi.clone()));
        assert!(hi - lo < crate::arith::rational::pow2(-29));
        let neg = surd(int(0), int(-3), 2);
        let (lo, hi) = neg.enclosure(10);
        assert!(QuadraticSurd::rational(lo) < neg && neg < QuadraticSurd::rational(hi));
    }

    #[test]
    fn text_forms() {
        let s = QuadraticSurd::parse("1/2 1/2 5").unwrap();
        assert_eq!(s.to_string(), "1/2 1/2 5");
        assert_eq!(QuadraticSurd::parse("-3/4").unwrap().to_string(), "-3/4");
        let err = QuadraticSurd::parse("1 x 5").unwrap_err();
        assert_eq!(err.column, 3);
        assert!(QuadraticSurd::parse("1 2").is_err());
        assert!(QuadraticSurd::parse("1 2 -3").is_err());
    }
}
