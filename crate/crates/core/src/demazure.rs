//! Demazure roots of a two-dimensional cone, the bases they induce, and
//! equivalence of root pairs under the ray-swapping symmetry.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::DerivationRule;
use crate::error::{invalid, Error, Result};
use crate::lattice::{det2, dot, dual_cone, Ambient, Cone2, LatticeMap, LatticePoint};

/// A character `e` with `<e, p_i> = -1` and `<e, p_j> >= 0`, where `p_i` is
/// the ray of the `N`-cone at position `ray_index` (normalized order).
///
/// A root does not carry its cone; operations taking a cone re-check validity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DemazureRoot {
    pub e: LatticePoint,
    pub ray_index: usize,
}

impl DemazureRoot {
    /// Validated construction.
    pub fn new(sigma: &Cone2, ray_index: usize, e: LatticePoint) -> Result<Self> {
        let root = DemazureRoot { e, ray_index };
        root.check(sigma)?;
        Ok(root)
    }

    pub fn check(&self, sigma: &Cone2) -> Result<()> {
        check_cone(sigma)?;
        if self.ray_index > 1 {
            return Err(invalid(format!(
                "ray index {} out of range",
                self.ray_index
            )));
        }
        if !is_demazure_root(sigma, self.ray_index, &self.e) {
            return Err(invalid(format!(
                "{} is not a Demazure root of ray {}",
                self.e,
                sigma.rays()[self.ray_index]
            )));
        }
        Ok(())
    }

    /// The ray `p_i` of `sigma` this root belongs to.
    pub fn ray<'a>(&self, sigma: &'a Cone2) -> &'a LatticePoint {
        &sigma.rays()[self.ray_index]
    }

    /// The homogeneous derivation `χ^u ↦ <u, p_i> χ^{u+e}`.
    pub fn derivation(&self, sigma: &Cone2) -> DerivationRule {
        DerivationRule::new(self.e.clone(), self.ray(sigma).clone())
    }
}

/// An ordered pair of roots of the same ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootPair {
    pub e1: DemazureRoot,
    pub e2: DemazureRoot,
}

impl RootPair {
    pub fn new(e1: DemazureRoot, e2: DemazureRoot) -> Result<Self> {
        if e1.ray_index != e2.ray_index {
            return Err(invalid("roots of a pair must belong to the same ray"));
        }
        Ok(RootPair { e1, e2 })
    }

    pub fn ray_index(&self) -> usize {
        self.e1.ray_index
    }

    pub fn check(&self, sigma: &Cone2) -> Result<()> {
        if self.e1.ray_index != self.e2.ray_index {
            return Err(invalid("roots of a pair must belong to the same ray"));
        }
        self.e1.check(sigma)?;
        self.e2.check(sigma)
    }

    pub fn is_symmetric(&self) -> bool {
        self.e1 == self.e2
    }
}

fn check_cone(sigma: &Cone2) -> Result<()> {
    if sigma.ambient() != Ambient::N || !sigma.is_full_dim() {
        return Err(invalid("Demazure roots need a full-dimensional cone in N"));
    }
    Ok(())
}

pub fn is_demazure_root(sigma: &Cone2, i: usize, e: &LatticePoint) -> bool {
    if i > 1 || e.ambient() != Ambient::M || !sigma.is_full_dim() {
        return false;
    }
    let rays = sigma.rays();
    let own = dot(e, &rays[i]);
    let other = dot(e, &rays[1 - i]);
    own == -BigInt::one() && !other.is_negative()
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Integer range `{k : lo <= base + k * step}` (or `<=` hi), intersected into
/// `range`. Returns false if the constraint is infeasible.
fn restrict(
    range: &mut (Option<BigInt>, Option<BigInt>),
    base: &BigInt,
    step: &BigInt,
    lo: Option<&BigInt>,
    hi: Option<&BigInt>,
) -> bool {
    if step.is_zero() {
        return lo.is_none_or(|l| base >= l) && hi.is_none_or(|h| base <= h);
    }
    let (mut k_lo, mut k_hi): (Option<BigInt>, Option<BigInt>) = (None, None);
    // base + k*step >= lo
    if let Some(l) = lo {
        let t = l - base;
        if step.is_positive() {
            k_lo = Some(ceil_div(&t, step));
        } else {
            k_hi = Some(floor_div(&t, step));
        }
    }
    // base + k*step <= hi
    if let Some(h) = hi {
        let t = h - base;
        if step.is_positive() {
            let v = floor_div(&t, step);
            k_hi = Some(k_hi.map_or(v.clone(), |c| c.min(v)));
        } else {
            let v = ceil_div(&t, step);
            k_lo = Some(k_lo.map_or(v.clone(), |c| c.max(v)));
        }
    }
    if let Some(v) = k_lo {
        range.0 = Some(range.0.take().map_or(v.clone(), |c| c.max(v)));
    }
    if let Some(v) = k_hi {
        range.1 = Some(range.1.take().map_or(v.clone(), |c| c.min(v)));
    }
    true
}

/// All Demazure roots of ray `i` with both coordinates in `[-bound, bound]`,
/// in lexicographic order. The family is infinite, so the bound is required.
///
/// Solutions of `<e, p_i> = -1` form a line `e0 + k w` with `w ⊥ p_i`; the
/// remaining inequality and the box cut out an interval of `k`.
pub fn roots_up_to(sigma: &Cone2, i: usize, bound: u64) -> Result<Vec<DemazureRoot>> {
    check_cone(sigma)?;
    if bound == 0 {
        return Err(invalid("root enumeration bound must be at least 1"));
    }
    if i > 1 {
        return Err(invalid(format!("ray index {i} out of range")));
    }
    let p = &sigma.rays()[i];
    let q = &sigma.rays()[1 - i];
    let eg = p.x().extended_gcd(p.y());
    // eg.x * p.x + eg.y * p.y = eg.gcd = ±1 for a primitive ray.
    let sign = if eg.gcd.is_negative() {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let e0 = LatticePoint::m(&eg.x * &sign, &eg.y * &sign);
    let w = LatticePoint::m(-p.y(), p.x().clone());
    debug_assert_eq!(dot(&e0, p), -BigInt::one());

    let b = BigInt::from(bound);
    let nb = -&b;
    let mut range = (None, None);
    let feasible = restrict(&mut range, e0.x(), w.x(), Some(&nb), Some(&b))
        && restrict(&mut range, e0.y(), w.y(), Some(&nb), Some(&b))
        && restrict(
            &mut range,
            &dot(&e0, q),
            &dot(&w, q),
            Some(&BigInt::zero()),
            None,
        );
    let (Some(lo), Some(hi)) = range else {
        // w has a nonzero coordinate, so the box always bounds k.
        return Err(Error::Consistency("unbounded root enumeration".into()));
    };
    let mut roots = Vec::new();
    if feasible {
        let mut k = lo;
        while k <= hi {
            let e = &e0 + &w.scale(&k);
            roots.push(DemazureRoot { e, ray_index: i });
            k += 1;
        }
    }
    roots.sort();
    Ok(roots)
}

/// `(-e, v)` where `v` is the ray of the dual cone orthogonal to `p_i`.
/// The pair is a basis of `M`; its determinant is checked to be ±1.
pub fn root_basis(sigma: &Cone2, r: &DemazureRoot) -> Result<(LatticePoint, LatticePoint)> {
    r.check(sigma)?;
    let p = r.ray(sigma);
    let dual = dual_cone(sigma)?;
    let v = dual
        .rays()
        .iter()
        .find(|v| dot(v, p).is_zero())
        .cloned()
        .ok_or_else(|| Error::Consistency("no dual ray orthogonal to p_i".into()))?;
    let minus_e = -&r.e;
    if !det2(&minus_e, &v).abs().is_one() {
        return Err(Error::Consistency(format!(
            "({minus_e}, {v}) is not a lattice basis"
        )));
    }
    Ok((minus_e, v))
}

/// The linear map of `M_Q` swapping the two rays of the dual cone, if it
/// preserves `M` (all entries integral).
pub fn swap_map(sigma: &Cone2) -> Result<Option<LatticeMap>> {
    check_cone(sigma)?;
    let dual = dual_cone(sigma)?;
    let [v0, v1] = dual.rays();
    let d = det2(v0, v1);
    // τ = [v1 v0] · adj([v0 v1]) / d
    let adj = [[v1.y().clone(), -v1.x()], [-v0.y(), v0.x().clone()]];
    let cols = [
        [v1.x().clone(), v0.x().clone()],
        [v1.y().clone(), v0.y().clone()],
    ];
    let mut rows: [[BigInt; 2]; 2] = Default::default();
    for (r, row) in rows.iter_mut().enumerate() {
        for (c, entry) in row.iter_mut().enumerate() {
            let num = &cols[r][0] * &adj[0][c] + &cols[r][1] * &adj[1][c];
            if !(&num % &d).is_zero() {
                return Ok(None);
            }
            *entry = num / &d;
        }
    }
    Ok(Some(LatticeMap::new(rows)))
}

/// Whether the monoid structures induced by `p` and `q` are isomorphic:
/// equal pairs, or pairs exchanged by an integral ray swap.
pub fn pair_equivalence(sigma: &Cone2, p: &RootPair, q: &RootPair) -> Result<bool> {
    p.check(sigma)?;
    q.check(sigma)?;
    if p == q {
        return Ok(true);
    }
    let Some(tau) = swap_map(sigma)? else {
        return Ok(false);
    };
    Ok(tau.apply(&q.e1.e) == p.e1.e && tau.apply(&q.e2.e) == p.e2.e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn n(x: i64, y: i64) -> LatticePoint {
        LatticePoint::n(x, y)
    }

    fn m(x: i64, y: i64) -> LatticePoint {
        LatticePoint::m(x, y)
    }

    fn cone(a: LatticePoint, b: LatticePoint) -> Cone2 {
        Cone2::new(a, b).unwrap()
    }

    /// Independent double loop over the box.
    fn scan(sigma: &Cone2, i: usize, bound: i64) -> Vec<LatticePoint> {
        let (pi, pj) = (&sigma.rays()[i], &sigma.rays()[1 - i]);
        let mut out = Vec::new();
        for x in -bound..=bound {
            for y in -bound..=bound {
                let own = x * pi.x().to_i64().unwrap() + y * pi.y().to_i64().unwrap();
                let other = x * pj.x().to_i64().unwrap() + y * pj.y().to_i64().unwrap();
                if own == -1 && other >= 0 {
                    out.push(m(x, y));
                }
            }
        }
        out
    }

    #[test]
    fn membership_examples() {
        // rays (1,0), (-b, a): e_l = (-1, l) is a root iff a l + b >= 0
        for (a, b) in [(1, 0), (1, 2), (3, 1), (2, 5)] {
            let sigma = cone(n(1, 0), n(-b, a));
            let i = sigma.index_of_ray(&n(1, 0)).unwrap();
            for l in -8..=8 {
                assert_eq!(is_demazure_root(&sigma, i, &m(-1, l)), a * l + b >= 0);
            }
        }
        let quadrant = cone(n(1, 0), n(0, 1));
        let i = quadrant.index_of_ray(&n(1, 0)).unwrap();
        assert!(!is_demazure_root(&quadrant, i, &m(0, 1)));
        assert!(is_demazure_root(&quadrant, i, &m(-1, 0)));
    }

    #[test]
    fn enumeration_examples() {
        let quadrant = cone(n(1, 0), n(0, 1));
        let i = quadrant.index_of_ray(&n(1, 0)).unwrap();
        let roots: Vec<_> = roots_up_to(&quadrant, i, 3)
            .unwrap()
            .into_iter()
            .map(|r| r.e)
            .collect();
        assert_eq!(roots, vec![m(-1, 0), m(-1, 1), m(-1, 2), m(-1, 3)]);

        let sigma = cone(n(1, 0), n(-2, 1));
        let i = sigma.index_of_ray(&n(1, 0)).unwrap();
        let roots: Vec<_> = roots_up_to(&sigma, i, 3)
            .unwrap()
            .into_iter()
            .map(|r| r.e)
            .collect();
        assert_eq!(roots, (-2..=3).map(|l| m(-1, l)).collect::<Vec<_>>());
        assert_eq!(roots, scan(&sigma, i, 3));

        assert!(roots_up_to(&sigma, i, 0).is_err());
    }

    #[test]
    fn enumeration_matches_scan() {
        let gens: Vec<LatticePoint> = (-4..=4)
            .flat_map(|x| (-4..=4).map(move |y| n(x, y)))
            .filter(|p| p.is_primitive())
            .collect();
        for a in &gens {
            for b in &gens {
                let Ok(sigma) = Cone2::new(a.clone(), b.clone()) else {
                    continue;
                };
                if !sigma.is_full_dim() {
                    continue;
                }
                for i in 0..2 {
                    for bound in [1, 3, 6] {
                        let got: Vec<_> = roots_up_to(&sigma, i, bound as u64)
                            .unwrap()
                            .into_iter()
                            .map(|r| r.e)
                            .collect();
                        assert_eq!(
                            got,
                            scan(&sigma, i, bound),
                            "{sigma:?} ray {i} bound {bound}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn basis_examples() {
        let quadrant = cone(n(1, 0), n(0, 1));
        let i = quadrant.index_of_ray(&n(1, 0)).unwrap();
        let r = DemazureRoot::new(&quadrant, i, m(-1, 0)).unwrap();
        assert_eq!(root_basis(&quadrant, &r).unwrap(), (m(1, 0), m(0, 1)));
        let r = DemazureRoot::new(&quadrant, i, m(-1, 2)).unwrap();
        assert_eq!(root_basis(&quadrant, &r).unwrap(), (m(1, -2), m(0, 1)));

        let sigma = cone(n(1, 0), n(-2, 1));
        let i = sigma.index_of_ray(&n(1, 0)).unwrap();
        let r = DemazureRoot::new(&sigma, i, m(-1, 2)).unwrap();
        let (a, v) = root_basis(&sigma, &r).unwrap();
        assert_eq!(v, m(0, 1));
        assert_eq!(det2(&a, &v).abs(), BigInt::one());
    }

    #[test]
    fn invalid_roots_are_rejected() {
        let quadrant = cone(n(1, 0), n(0, 1));
        assert!(DemazureRoot::new(&quadrant, 1, m(1, 1)).is_err());
        assert!(DemazureRoot::new(&quadrant, 2, m(-1, 0)).is_err());
        let a = DemazureRoot::new(&quadrant, 0, m(0, -1)).unwrap();
        let b = DemazureRoot::new(&quadrant, 1, m(-1, 0)).unwrap();
        assert!(RootPair::new(a, b).is_err());
    }

    #[test]
    fn swap_on_quadrant() {
        let quadrant = cone(n(1, 0), n(0, 1));
        let p1 = quadrant.index_of_ray(&n(1, 0)).unwrap();
        let p2 = quadrant.index_of_ray(&n(0, 1)).unwrap();
        let root = |i, x, y| DemazureRoot::new(&quadrant, i, m(x, y)).unwrap();
        let p = RootPair::new(root(p1, -1, 0), root(p1, -1, 1)).unwrap();
        let q = RootPair::new(root(p2, 0, -1), root(p2, 1, -1)).unwrap();
        assert_eq!(
            swap_map(&quadrant).unwrap(),
            Some(LatticeMap::from_rows([0, 1], [1, 0]))
        );
        assert!(pair_equivalence(&quadrant, &p, &p).unwrap());
        assert!(pair_equivalence(&quadrant, &p, &q).unwrap());
        assert!(pair_equivalence(&quadrant, &q, &p).unwrap());
        let r = RootPair::new(root(p1, -1, 1), root(p1, -1, 0)).unwrap();
        assert!(!pair_equivalence(&quadrant, &p, &r).unwrap());
    }

    #[test]
    fn non_integral_swap() {
        // swapping (0,1) and (a,b) is integral iff b^2 = 1 mod a
        let integral = dual_cone(&cone(m(0, 1), m(3, 2))).unwrap();
        assert_eq!(
            swap_map(&integral).unwrap(),
            Some(LatticeMap::from_rows([-2, 3], [-1, 2]))
        );
        let dual = cone(m(0, 1), m(5, 2));
        let sigma = dual_cone(&dual).unwrap();
        assert_eq!(dual_cone(&sigma).unwrap(), dual);
        assert_eq!(swap_map(&sigma).unwrap(), None);
        let roots: Vec<_> = roots_up_to(&sigma, 0, 10).unwrap();
        let other: Vec<_> = roots_up_to(&sigma, 1, 10).unwrap();
        let p = RootPair::new(roots[0].clone(), roots[1].clone()).unwrap();
        let q = RootPair::new(other[0].clone(), other[1].clone()).unwrap();
        assert!(!pair_equivalence(&sigma, &p, &q).unwrap());
    }
}
