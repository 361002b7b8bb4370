use num_traits::Zero;

use super::spec::{cone_of_spec, Family, MonoidCone, MonoidSpec};
use crate::algebra::{derive_iter, DerivationRule, LaurentElement};
use crate::error::{invalid, Error, Result};
use crate::lattice::LatticePoint;

fn check_family(s: &MonoidSpec, k: u64) -> Result<(u64, u64)> {
    if k == 0 {
        return Err(invalid("k must be positive"));
    }
    if s.is_group() {
        return Err(Error::NotApplicable(
            "image-ideal invariants are defined for X and Y only".into(),
        ));
    }
    s.ab()
}

/// Codimension of the `k`-th image ideal of `∂/∂x`:
/// `⌈kb/a⌉` on `X_n^{a,b}` and `⌈kb/a⌉ + nk` on `Y_n^{a,b}`.
pub fn invariant_lk_closed(s: &MonoidSpec, k: u64) -> Result<u64> {
    let (a, b) = check_family(s, k)?;
    let overflow = || invalid("invariant overflows u64");
    let kb = k.checked_mul(b).ok_or_else(overflow)?;
    let base = kb.div_ceil(a);
    match s.family() {
        Family::Y => s
            .n()
            .checked_mul(k)
            .and_then(|nk| nk.checked_add(base))
            .ok_or_else(overflow),
        _ => Ok(base),
    }
}

/// The same invariant counted from its definition: kernel monomials `y^j`
/// of `∂/∂x` (walking away from the origin along the kernel ray) that are
/// not of the form `(∂/∂x)^k (x^k y^j)` for a monomial of the cone. Stops at
/// the first hit; beyond it every kernel degree is hit by convexity.
pub fn invariant_lk_oracle(s: &MonoidSpec, k: u64) -> Result<u64> {
    check_family(s, k)?;
    let MonoidCone::Cone(cone) = cone_of_spec(s) else {
        return Err(Error::NotApplicable("group has no proper cone".into()));
    };
    let dl = DerivationRule::partial_x();
    let step: i64 = if s.family() == Family::Y { -1 } else { 1 };
    let mut missing = 0u64;
    let mut j: i64 = 0;
    loop {
        let kernel = LatticePoint::m(0, j);
        if !cone.contains_lattice(&kernel) {
            return Err(Error::Consistency(format!(
                "kernel monomial {kernel} left the cone"
            )));
        }
        let preimage = LatticePoint::m(k, j);
        let hit = cone.contains_lattice(&preimage) && {
            let image = derive_iter(&dl, &LaurentElement::monomial(preimage), k);
            image.len() == 1 && !image.coefficient(&kernel).is_zero()
        };
        if hit {
            return Ok(missing);
        }
        missing += 1;
        j += step;
    }
}

/// Certifies that two specs describe non-isomorphic monoids. `false` means
/// the specs are equal.
///
/// Different `n` give non-isomorphic unit groups; `X` and `Y` differ because
/// `δ_r = x^n δ_l` holds on `k[X]` but has no solution in `k[Y]`; within one
/// family `𝔏_{aa'}` takes the values `a'b` and `ab'`.
pub fn distinguish(s1: &MonoidSpec, s2: &MonoidSpec) -> bool {
    if s1.n() != s2.n() || s1.family() != s2.family() {
        return true;
    }
    let (Ok((a1, _)), Ok((a2, _))) = (s1.ab(), s2.ab()) else {
        return false;
    };
    let k = a1 * a2;
    match (invariant_lk_closed(s1, k), invariant_lk_closed(s2, k)) {
        (Ok(l1), Ok(l2)) => l1 != l2,
        _ => s1 != s2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: u64, a: u64, b: u64) -> MonoidSpec {
        MonoidSpec::x(n, a, b).unwrap()
    }

    fn y(n: u64, a: u64, b: u64) -> MonoidSpec {
        MonoidSpec::y(n, a, b).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        for (n, a, b) in [(1, 1, 0), (2, 3, 2), (4, 5, 7)] {
            assert_eq!(invariant_lk_closed(&x(n, a, b), a).unwrap(), b);
            assert_eq!(invariant_lk_closed(&y(n, a, b), a).unwrap(), b + n * a);
        }
        assert_eq!(invariant_lk_closed(&x(2, 3, 2), 4).unwrap(), 3);
        assert_eq!(invariant_lk_closed(&y(1, 1, 1), 1).unwrap(), 2);
    }

    #[test]
    fn oracle_examples() {
        for k in 1..10 {
            assert_eq!(invariant_lk_oracle(&x(1, 1, 0), k).unwrap(), 0);
        }
        assert_eq!(invariant_lk_oracle(&x(2, 3, 2), 4).unwrap(), 3);
        assert_eq!(invariant_lk_oracle(&y(1, 1, 1), 1).unwrap(), 2);
    }

    #[test]
    fn not_for_groups() {
        let g = MonoidSpec::group(2).unwrap();
        assert!(matches!(
            invariant_lk_closed(&g, 1),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            invariant_lk_oracle(&g, 1),
            Err(Error::NotApplicable(_))
        ));
        assert!(invariant_lk_closed(&x(1, 1, 1), 0).is_err());
    }

    #[test]
    fn distinguishing() {
        assert_eq!(invariant_lk_closed(&x(1, 2, 3), 6).unwrap(), 9);
        assert_eq!(invariant_lk_closed(&x(1, 3, 2), 6).unwrap(), 4);
        assert!(distinguish(&x(1, 2, 3), &x(1, 3, 2)));
        assert!(!distinguish(&x(1, 1, 1), &x(1, 1, 1)));
        assert!(distinguish(&x(1, 1, 1), &y(1, 1, 1)));
        assert!(distinguish(&x(1, 1, 1), &x(2, 1, 1)));
    }
}
