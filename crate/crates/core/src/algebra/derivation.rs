use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentElement;
use crate::error::{invalid, Result};
use crate::lattice::{dot, Cone2, LatticePoint};

/// A homogeneous derivation `χ^u ↦ scale · <u, ray> · χ^{u + root}`.
///
/// For a Demazure root `root` of the ray `ray` this is locally nilpotent.
/// The scale is only defined up to a nonzero constant; it defaults to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DerivationRule {
    root: LatticePoint,
    ray: LatticePoint,
    scale: BigRational,
}

impl DerivationRule {
    pub fn new(root: LatticePoint, ray: LatticePoint) -> Self {
        DerivationRule {
            root,
            ray,
            scale: BigRational::one(),
        }
    }

    pub fn with_scale(mut self, scale: BigRational) -> Result<Self> {
        if scale.is_zero() {
            return Err(invalid("derivation scale must be nonzero"));
        }
        self.scale = scale;
        Ok(self)
    }

    /// `∂/∂x`: degree `(-1, 0)` along the ray `(1, 0)`.
    pub fn partial_x() -> Self {
        Self::new(LatticePoint::m(-1, 0), LatticePoint::n(1, 0))
    }

    /// `y^n ∂/∂x`: degree `(-1, n)` along the ray `(1, 0)`.
    pub fn y_pow_partial_x(n: i64) -> Self {
        Self::new(LatticePoint::m(-1, n), LatticePoint::n(1, 0))
    }

    pub fn root(&self) -> &LatticePoint {
        &self.root
    }

    pub fn ray(&self) -> &LatticePoint {
        &self.ray
    }

    pub fn scale(&self) -> &BigRational {
        &self.scale
    }

    fn weight(&self, u: &LatticePoint) -> BigInt {
        dot(u, &self.ray)
    }
}

pub fn derive(d: &DerivationRule, f: &LaurentElement) -> LaurentElement {
    LaurentElement::from_terms(f.terms().map(|(u, c)| {
        let w = BigRational::from_integer(d.weight(u));
        (u + &d.root, c * &d.scale * w)
    }))
}

/// Applies `d` to `f` exactly `k` times.
pub fn derive_iter(d: &DerivationRule, f: &LaurentElement, k: u64) -> LaurentElement {
    let mut g = f.clone();
    for _ in 0..k {
        if g.is_zero() {
            break;
        }
        g = derive(d, &g);
    }
    g
}

/// Finite certificate of local nilpotency on `k[c ∩ M]`: for every lattice
/// point `u` of `c` with coordinates bounded by `probe_bound`, the iterates
/// `d^j(χ^u)` stay inside `c` and vanish after at most `<u, ray> + 1` steps.
pub fn is_locally_nilpotent_on(d: &DerivationRule, c: &Cone2, probe_bound: i64) -> Result<bool> {
    if probe_bound < 1 {
        return Err(invalid("probe bound must be at least 1"));
    }
    for u in c.lattice_points(probe_bound) {
        let limit = d.weight(&u).max(BigInt::zero()) + 1;
        let mut g = LaurentElement::monomial(u);
        let mut steps = BigInt::zero();
        while !g.is_zero() {
            if steps >= limit || g.exponents().any(|v| !c.contains_lattice(v)) {
                return Ok(false);
            }
            g = derive(d, &g);
            steps += 1;
        }
    }
    Ok(true)
}
