//! Exact rank-2 lattice arithmetic: points, rational cones, duality,
//! lattice maps and Hilbert bases.

mod cone;
mod map;
mod point;

pub use cone::{cone_contains, dual_cone, semigroup_generators, Cone2};
pub use map::{apply_map, map_image_cone, LatticeMap};
pub use point::{pairing, primitive, Ambient, LatticePoint, RationalPoint};

pub(crate) use point::{det2, dot};
