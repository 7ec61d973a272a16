use num_traits::{One, Signed};

use crate::arith::enclosure::{arccosh, RationalInterval};
use crate::arith::Rational;

/// A point `x + iy` of the upper half-plane with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlanePoint {
    x: Rational,
    y: Rational,
}

impl HalfPlanePoint {
    /// `None` unless `y > 0`.
    pub fn new(x: Rational, y: Rational) -> Option<Self> {
        y.is_positive().then_some(HalfPlanePoint { x, y })
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }
}

/// `cosh d(z, w) = 1 + |z - w|² / (2 Im z Im w)`, exactly.
pub fn cosh_distance(z: &HalfPlanePoint, w: &HalfPlanePoint) -> Rational {
    let dx = &z.x - &w.x;
    let dy = &z.y - &w.y;
    let two = Rational::from_integer(2.into());
    Rational::one() + (&dx * &dx + &dy * &dy) / (two * &z.y * &w.y)
}

/// Certified enclosure of the hyperbolic distance, width below `2^-bits`.
pub fn distance(z: &HalfPlanePoint, w: &HalfPlanePoint, bits: u32) -> RationalInterval {
    arccosh(&cosh_distance(z, w), bits)
}

/// Enclosure of the Gromov product `(x, y)_z = ½(d(x,z) + d(y,z) - d(x,y))`
/// of width at most `2^-precision`.
pub fn gromov_product(
    x: &HalfPlanePoint,
    y: &HalfPlanePoint,
    z: &HalfPlanePoint,
    precision: u32,
) -> RationalInterval {
    // three terms of width < 2^-(p+2) each, halved: total < 2^-p
    let bits = precision + 2;
    let sum = distance(x, z, bits)
        .add(&distance(y, z, bits))
        .sub(&distance(x, y, bits));
    sum.scale(&Rational::new(1.into(), 2.into()))
}
