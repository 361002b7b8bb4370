use num_integer::Integer;
use serde::{Deserialize, Serialize};
use toric_monoids::lattice::semigroup_generators;
use toric_monoids::{
    boundary, cone_of_spec, invariant_lk_closed, BoundaryInfo, Cone2, Family, LatticePoint,
    MonoidCone, MonoidSpec, Result,
};

/// One line of the catalog: a classified monoid with its cone, the Hilbert
/// basis of its coordinate ring, `𝔏_1..𝔏_K` and boundary data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub spec: MonoidSpec,
    pub cone: Cone2,
    pub hilbert_basis: Vec<LatticePoint>,
    pub invariants: Vec<u64>,
    pub boundary: BoundaryInfo,
}

impl CatalogEntry {
    pub fn new(spec: MonoidSpec, k_max: u64) -> Result<Self> {
        let MonoidCone::Cone(cone) = cone_of_spec(&spec) else {
            unreachable!("catalog entries are X or Y specs");
        };
        Ok(CatalogEntry {
            hilbert_basis: semigroup_generators(&cone)?,
            invariants: (1..=k_max)
                .map(|k| invariant_lk_closed(&spec, k))
                .collect::<Result<_>>()?,
            boundary: boundary(&spec)?,
            cone,
            spec,
        })
    }
}

/// All `X` and `Y` specs within the bounds, ordered by `n`, family, `a`, `b`.
pub fn catalog_specs(n_max: u64, a_max: u64, b_max: u64) -> Vec<MonoidSpec> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for family in [Family::X, Family::Y] {
            for a in 1..=a_max {
                for b in (0..=b_max).filter(|b| a.gcd(b) == 1) {
                    out.push(MonoidSpec::with_family(family, n, a, b).expect("coprime parameters"));
                }
            }
        }
    }
    out
}
