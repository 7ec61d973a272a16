//! The hyperbolic plane: Möbius maps with rational entries acting on the
//! upper half-plane and on its boundary circle `RP¹`.

pub mod halfplane;
pub mod map;
pub mod point;
pub mod region;

pub use halfplane::{cosh_distance, gromov_product, HalfPlanePoint};
pub use map::{IsometryClass, MobiusError, MobiusMap};
pub use point::ProjectivePoint;
pub use region::{CircularInterval, RegionRP1};
