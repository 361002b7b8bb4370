use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::spec::{MonoidCone, MonoidSpec};
use crate::error::{invalid, Error, Result};
use crate::lattice::{Ambient, Cone2, LatticePoint};

/// A lattice point of the cone whose vertical projection `missing` lies
/// outside the cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionFailure {
    pub point: LatticePoint,
    pub missing: LatticePoint,
}

fn check_in_half_plane(c: &Cone2) -> Result<()> {
    if c.ambient() != Ambient::M || !c.is_full_dim() {
        return Err(invalid("expected a full-dimensional cone in M"));
    }
    if c.rays().iter().any(|r| r.x().is_negative()) {
        return Err(invalid(format!(
            "cone with rays {} and {} is not inside the half-plane u_1 >= 0",
            c.rays()[0],
            c.rays()[1]
        )));
    }
    Ok(())
}

/// First violation of "for every lattice point `(a, b)` of the cone, both
/// `(0, b)` and `(0, b + n a)` are in the cone".
///
/// Both projections are linear, so by convexity the condition holds on the
/// whole cone iff it holds on the two ray generators.
pub fn restriction_witness(c: &Cone2, n: u64) -> Result<Option<RestrictionFailure>> {
    check_in_half_plane(c)?;
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    let n = BigInt::from(n);
    for r in c.rays() {
        let candidates = [
            LatticePoint::m(0, r.y().clone()),
            LatticePoint::m(0, r.y() + &n * r.x()),
        ];
        for missing in candidates {
            if !c.contains_lattice(&missing) {
                return Ok(Some(RestrictionFailure {
                    point: r.clone(),
                    missing,
                }));
            }
        }
    }
    Ok(None)
}

/// Whether the comultiplication of `G_n` restricts to `k[c ∩ M]`.
pub fn restriction_condition(c: &Cone2, n: u64) -> Result<bool> {
    Ok(restriction_witness(c, n)?.is_none())
}

/// Names the monoid on the subcone `c` of the half-plane: `X(n,a,b)` when
/// `(0,1) ∈ c`, `Y(n,a,b)` when `(0,-1) ∈ c`, and `Group(n)` for the
/// half-plane itself.
pub fn classify_cone(cone: &MonoidCone, n: u64) -> Result<MonoidSpec> {
    let c = match cone {
        MonoidCone::HalfPlane => return MonoidSpec::group(n),
        MonoidCone::Cone(c) => c,
    };
    if let Some(f) = restriction_witness(c, n)? {
        return Err(Error::NotAMonoid(Box::new(f)));
    }
    let up = LatticePoint::m(0, 1);
    let down = LatticePoint::m(0, -1);
    let has_up = c.contains_lattice(&up);
    let has_down = c.contains_lattice(&down);
    let param = |z: BigInt| {
        z.to_u64()
            .ok_or_else(|| Error::Consistency(format!("parameter {z} out of range")))
    };
    let spec = match (has_up, has_down) {
        (true, false) => {
            let other = other_ray(c, &up)?;
            MonoidSpec::x(n, param(other.x().clone())?, param(other.y().clone())?)
        }
        (false, true) => {
            let other = other_ray(c, &down)?;
            let a = other.x().clone();
            let b = -(other.y() + BigInt::from(n) * &a);
            MonoidSpec::y(n, param(a)?, param(b)?)
        }
        _ => {
            return Err(Error::Consistency(format!(
                "a proper cone satisfying the restriction condition contains exactly one of {up}, {down}"
            )))
        }
    };
    spec.map_err(|e| Error::Consistency(format!("non-primitive ray parameters: {e}")))
}

fn other_ray<'a>(c: &'a Cone2, vertical: &LatticePoint) -> Result<&'a LatticePoint> {
    if c.index_of_ray(vertical).is_none() {
        return Err(Error::Consistency(format!(
            "{vertical} is not a ray of the cone"
        )));
    }
    c.rays()
        .iter()
        .find(|r| *r != vertical)
        .ok_or_else(|| Error::Consistency("degenerate cone".into()))
}
