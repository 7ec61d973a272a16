//! Outward-rounded rational enclosures of `ln` and `arccosh`.
//!
//! Every bound is a dyadic rational; lower bounds are rounded down and upper
//! bounds up at each step, so the true value always lies in the interval.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{ceil_dyadic, floor_dyadic, pow2, Rational};

/// Closed interval `[lo, hi]` of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RationalInterval {
    pub fn point(x: Rational) -> Self {
        RationalInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        RationalInterval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let a = &self.lo * k;
        let b = &self.hi * k;
        if k.is_negative() {
            RationalInterval { lo: b, hi: a }
        } else {
            RationalInterval { lo: a, hi: b }
        }
    }
}

/// `2·atanh(u) = 2·Σ u^(2k+1)/(2k+1)` for `0 <= u <= 1/3`, to within `2^-bits`.
fn two_atanh(u: &Rational, bits: u32) -> RationalInterval {
    if u.is_zero() {
        return RationalInterval::point(Rational::zero());
    }
    let guard = bits + 8;
    let u2 = u * u;
    let two = Rational::from_integer(BigInt::from(2));
    let target = pow2(-(bits as i64) - 2);
    // separate down/up rounded tracks of u^(2k+1)
    let mut power_lo = u.clone();
    let mut power_hi = u.clone();
    let mut lo = Rational::zero();
    let mut hi = Rational::zero();
    let mut k: u64 = 0;
    loop {
        let odd = Rational::from_integer(BigInt::from(2 * k + 1));
        lo += floor_dyadic(&(&two * &power_lo / &odd), guard);
        hi += ceil_dyadic(&(&two * &power_hi / &odd), guard);
        power_lo = floor_dyadic(&(&power_lo * &u2), guard + 4);
        power_hi = ceil_dyadic(&(&power_hi * &u2), guard + 4);
        k += 1;
        // tail <= 2·u^(2k+1) / ((2k+1)(1 - u²))
        let odd = Rational::from_integer(BigInt::from(2 * k + 1));
        let tail = &two * &power_hi / (odd * (Rational::one() - &u2));
        if tail < target {
            hi += ceil_dyadic(&tail, guard);
            break;
        }
    }
    RationalInterval { lo, hi }
}

/// Enclosure of `ln 2` of width below `2^-bits`.
pub fn ln2(bits: u32) -> RationalInterval {
    two_atanh(&Rational::new(BigInt::one(), BigInt::from(3)), bits)
}

/// Enclosure of `ln y` for rational `y > 0`, width below `2^-bits`.
pub fn ln(y: &Rational, bits: u32) -> RationalInterval {
    assert!(y.is_positive(), "ln of non-positive value");
    // y = 2^e · m with 1 <= m < 2
    let mut e: i64 = y.numer().bits() as i64 - y.denom().bits() as i64;
    let mut m = y / pow2(e);
    let one = Rational::one();
    let two = Rational::from_integer(BigInt::from(2));
    while m < one {
        e -= 1;
        m *= &two;
    }
    while m >= two {
        e += 1;
        m /= &two;
    }
    let u = (&m - &one) / (&m + &one);
    let mantissa = two_atanh(&u, bits + 1);
    if e == 0 {
        return mantissa;
    }
    let extra = 64 - e.unsigned_abs().leading_zeros();
    let l2 = ln2(bits + 1 + extra);
    mantissa.add(&l2.scale(&Rational::from_integer(BigInt::from(e))))
}

/// Enclosure of `arccosh c = ln(c + √(c² − 1))` for rational `c >= 1`,
/// width below `2^-bits`.
pub fn arccosh(c: &Rational, bits: u32) -> RationalInterval {
    let one = Rational::one();
    assert!(c >= &one, "arccosh below 1");
    if c == &one {
        return RationalInterval::point(Rational::zero());
    }
    let t = c * c - &one;
    let (s_lo, s_hi) = sqrt_enclosure(&t, bits + 3);
    let lo = ln(&(c + s_lo), bits + 2).lo;
    let hi = ln(&(c + s_hi), bits + 2).hi;
    RationalInterval { lo, hi }
}

fn sqrt_enclosure(t: &Rational, bits: u32) -> (Rational, Rational) {
    let surd = super::surd::QuadraticSurd::new(
        Rational::zero(),
        Rational::new(BigInt::one(), t.denom().clone()),
        t.numer() * t.denom(),
    )
    .expect("non-negative radicand");
    surd.enclosure(bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, ratio};
    use num_traits::ToPrimitive;

    fn f(x: &Rational) -> f64 {
        x.to_f64().unwrap()
    }

    #[test]
    fn ln2_brackets_float() {
        let i = ln2(50);
        assert!(f(&i.lo) <= std::f64::consts::LN_2 + 1e-15);
        assert!(f(&i.hi) >= std::f64::consts::LN_2 - 1e-15);
        assert!(i.width() < pow2(-50));
    }

    #[test]
    fn ln_values() {
        for (y, expect) in [
            (ratio(5, 4), (1.25f64).ln()),
            (int(1000), (1000f64).ln()),
            (ratio(1, 7), (1.0f64 / 7.0).ln()),
            (int(1), 0.0),
        ] {
            let i = ln(&y, 40);
            assert!(i.width() < pow2(-40), "width for {y}");
            assert!(f(&i.lo) <= expect + 1e-12 && f(&i.hi) >= expect - 1e-12, "{y}");
        }
    }

    #[test]
    fn arccosh_of_five_quarters_is_ln2() {
        let i = arccosh(&ratio(5, 4), 40);
        let l = ln2(60);
        assert!(i.lo <= l.lo && l.hi <= i.hi);
        assert!(i.width() < pow2(-40));
    }
}
