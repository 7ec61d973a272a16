use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::text::ParseError;

/// Exact rational number. The denominator is always positive and coprime to
/// the numerator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `num` or `num/den`. Columns in errors are relative to `s`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let n = parse_int(num).ok_or_else(|| ParseError::at(1, format!("bad integer {num:?}")))?;
    let d = match den {
        Some(d) => parse_int(d)
            .ok_or_else(|| ParseError::at(num.len() + 2, format!("bad denominator {d:?}")))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(ParseError::at(num.len() + 2, "zero denominator"));
    }
    Ok(Rational::new(n, d))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Largest multiple of `2^-bits` that is `<= x`.
pub fn floor_dyadic(x: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = x.numer() * &scale;
    Rational::new(scaled.div_floor(x.denom()), scale)
}

/// Smallest multiple of `2^-bits` that is `>= x`.
pub fn ceil_dyadic(x: &Rational, bits: u32) -> Rational {
    -floor_dyadic(&-x, bits)
}

/// `2^e` for any integer exponent.
pub fn pow2(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(BigInt::one() << e as u64)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-e) as u64)
    }
}

/// Scales a list of rationals by a common positive factor so that they become
/// coprime integers.
pub fn clear_denominators(values: &[Rational]) -> Vec<BigInt> {
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}
