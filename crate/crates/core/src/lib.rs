//! Noncommutative monoid structures on normal affine toric surfaces.
//!
//! The crate works in exact arithmetic throughout. [`lattice`] holds cones
//! and lattice maps in rank 2, [`algebra`] sparse Laurent polynomials and
//! derivations, [`demazure`] Demazure roots, and [`monoid`] the monoid
//! families themselves together with machine checks of the bialgebra axioms.
//!
//! ```
//! use toric_monoids::{classify_cone, Cone2, LatticePoint, MonoidCone, MonoidSpec};
//!
//! let cone = Cone2::new(LatticePoint::m(0, 1), LatticePoint::m(2, 3)).unwrap();
//! let spec = classify_cone(&MonoidCone::Cone(cone), 4).unwrap();
//! assert_eq!(spec, MonoidSpec::x(4, 2, 3).unwrap());
//! ```

pub mod algebra;
pub mod demazure;
mod error;
pub mod json;
pub mod lattice;
pub mod monoid;

pub use algebra::{DerivationRule, LaurentElement, TensorElement};
pub use demazure::{DemazureRoot, RootPair};
pub use error::{Error, Result};
pub use lattice::{Ambient, Cone2, LatticeMap, LatticePoint, RationalPoint};
pub use monoid::*;
