//! Exact arithmetic substrate: big rationals, quadratic surds, and certified
//! enclosures for the few transcendental quantities we report.

pub mod enclosure;
pub mod rational;
pub mod surd;

pub use enclosure::RationalInterval;
pub use rational::{parse_rational, Rational};
pub use surd::QuadraticSurd;
