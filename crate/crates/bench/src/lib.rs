//! Fixtures shared by the benchmarks.

use toric_monoids::{cone_of_spec, LatticePoint, MonoidCone, MonoidSpec};

/// Specs of increasing size used across the benchmarks.
pub fn sample_specs() -> Vec<MonoidSpec> {
    vec![
        MonoidSpec::x(1, 1, 0).unwrap(),
        MonoidSpec::x(2, 3, 2).unwrap(),
        MonoidSpec::y(3, 4, 3).unwrap(),
    ]
}

/// Cone monomials of `s` with coordinates in `[-bound, bound]`.
pub fn monomials(s: &MonoidSpec, bound: i64) -> Vec<LatticePoint> {
    match cone_of_spec(s) {
        MonoidCone::Cone(c) => c.lattice_points(bound),
        MonoidCone::HalfPlane => MonoidCone::HalfPlane.lattice_points(bound),
    }
}
