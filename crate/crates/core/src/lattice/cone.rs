use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::point::{det2, dot, primitive, Ambient, LatticePoint, RationalPoint};
use crate::error::{invalid, Error, Result};

/// A rational strongly convex cone in a rank-2 lattice, stored by its two
/// primitive ray generators in lexicographic order.
///
/// One-dimensional cones (a single ray) are represented with both slots
/// holding the same generator and `full_dim == false`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone2 {
    rays: [LatticePoint; 2],
    ambient: Ambient,
    full_dim: bool,
}

impl Cone2 {
    /// The cone spanned by two generators. Generators are primitivized and
    /// sorted. Fails if they span a line or either is zero.
    pub fn new(r1: LatticePoint, r2: LatticePoint) -> Result<Self> {
        if r1.ambient() != r2.ambient() {
            return Err(invalid("cone generators live in different lattices"));
        }
        let ambient = r1.ambient();
        let p1 = primitive(&r1)?;
        let p2 = primitive(&r2)?;
        if det2(&p1, &p2).is_zero() {
            if p1 == p2 {
                return Ok(Cone2 {
                    rays: [p1.clone(), p1],
                    ambient,
                    full_dim: false,
                });
            }
            return Err(Error::Unsupported(format!(
                "generators {p1} and {p2} span a line, which is not strongly convex"
            )));
        }
        let rays = if p1 <= p2 { [p1, p2] } else { [p2, p1] };
        Ok(Cone2 {
            rays,
            ambient,
            full_dim: true,
        })
    }

    /// A one-dimensional cone.
    pub fn ray(r: LatticePoint) -> Result<Self> {
        Self::new(r.clone(), r)
    }

    pub fn rays(&self) -> &[LatticePoint; 2] {
        &self.rays
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn is_full_dim(&self) -> bool {
        self.full_dim
    }

    /// Position of `r` among the normalized ray generators.
    pub fn index_of_ray(&self, r: &LatticePoint) -> Option<usize> {
        self.rays.iter().position(|q| q == r)
    }

    pub fn contains(&self, q: &RationalPoint) -> bool {
        cone_contains(self, q)
    }

    pub fn contains_lattice(&self, q: &LatticePoint) -> bool {
        if q.ambient() != self.ambient {
            return false;
        }
        let [r1, r2] = &self.rays;
        if !self.full_dim {
            return det2(r1, q).is_zero() && !dot(r1, q).is_negative();
        }
        let d = det2(r1, r2);
        let l1 = det2(q, r2);
        let l2 = det2(r1, q);
        if d.is_positive() {
            !l1.is_negative() && !l2.is_negative()
        } else {
            !l1.is_positive() && !l2.is_positive()
        }
    }

    /// All lattice points of the cone with both coordinates in `[-bound, bound]`,
    /// in lexicographic order.
    pub fn lattice_points(&self, bound: i64) -> Vec<LatticePoint> {
        let mut out = Vec::new();
        for x in -bound..=bound {
            for y in -bound..=bound {
                let p = LatticePoint::new(x, y, self.ambient);
                if self.contains_lattice(&p) {
                    out.push(p);
                }
            }
        }
        out
    }
}

/// `true` iff `q` is a nonnegative rational combination of the rays.
/// Points from the other lattice are never contained.
pub fn cone_contains(c: &Cone2, q: &RationalPoint) -> bool {
    if q.ambient() != c.ambient {
        return false;
    }
    let [r1, r2] = &c.rays;
    let r1x = BigRational::from_integer(r1.x().clone());
    let r1y = BigRational::from_integer(r1.y().clone());
    if !c.full_dim {
        let cross = &r1x * q.y() - &r1y * q.x();
        let along = &r1x * q.x() + &r1y * q.y();
        return cross.is_zero() && !along.is_negative();
    }
    let r2x = BigRational::from_integer(r2.x().clone());
    let r2y = BigRational::from_integer(r2.y().clone());
    let d = &r1x * &r2y - &r1y * &r2x;
    // Cramer's rule for q = l1 * r1 + l2 * r2.
    let l1 = (q.x() * &r2y - q.y() * &r2x) / &d;
    let l2 = (&r1x * q.y() - &r1y * q.x()) / &d;
    !l1.is_negative() && !l2.is_negative()
}

/// The dual cone `{w : <w, v> >= 0 for all v in c}`, living in the other lattice.
pub fn dual_cone(c: &Cone2) -> Result<Cone2> {
    if !c.full_dim {
        return Err(Error::Unsupported(
            "the dual of a one-dimensional cone is a half-plane".into(),
        ));
    }
    let dual_ambient = c.ambient.dual();
    let [r1, r2] = &c.rays;
    let facet_normal = |r: &LatticePoint, other: &LatticePoint| {
        let w = LatticePoint::new(-r.y(), r.x().clone(), dual_ambient);
        if dot(&w, other).is_negative() {
            -&w
        } else {
            w
        }
    };
    Cone2::new(facet_normal(r1, r2), facet_normal(r2, r1))
}

/// Minimal generating set (Hilbert basis) of the semigroup `c ∩ lattice`,
/// sorted lexicographically.
///
/// Every irreducible element lies in the closed parallelogram spanned by the
/// two rays, so candidates are taken from there and decomposable ones sieved
/// out.
pub fn semigroup_generators(c: &Cone2) -> Result<Vec<LatticePoint>> {
    if !c.full_dim {
        return Err(Error::Unsupported(
            "semigroup generators need a full-dimensional cone".into(),
        ));
    }
    let [r1, r2] = &c.rays;
    let corners = [
        LatticePoint::zero(c.ambient),
        r1.clone(),
        r2.clone(),
        r1 + r2,
    ];
    let min_x = corners.iter().map(|p| p.x()).min().unwrap().clone();
    let max_x = corners.iter().map(|p| p.x()).max().unwrap().clone();
    let min_y = corners.iter().map(|p| p.y()).min().unwrap().clone();
    let max_y = corners.iter().map(|p| p.y()).max().unwrap().clone();

    let d = det2(r1, r2);
    let in_parallelogram = |q: &LatticePoint| {
        // q = (l1 * r1 + l2 * r2) with l_i = num_i / d; need 0 <= l_i <= 1.
        let n1 = det2(q, r2);
        let n2 = det2(r1, q);
        let within = |n: &BigInt| {
            if d.is_positive() {
                !n.is_negative() && *n <= d
            } else {
                !n.is_positive() && *n >= d
            }
        };
        within(&n1) && within(&n2)
    };

    let mut candidates = Vec::new();
    let mut x = min_x;
    while x <= max_x {
        let mut y = min_y.clone();
        while y <= max_y {
            let q = LatticePoint::new(x.clone(), y.clone(), c.ambient);
            if !q.is_zero() && in_parallelogram(&q) {
                candidates.push(q);
            }
            y += 1;
        }
        x += 1;
    }

    let generators: Vec<LatticePoint> = candidates
        .iter()
        .filter(|q| {
            !candidates
                .iter()
                .any(|p| p != *q && c.contains_lattice(&(*q - p)))
        })
        .cloned()
        .collect();
    Ok(generators)
}

#[derive(Serialize, Deserialize)]
struct ConeJson {
    rays: [LatticePoint; 2],
    ambient: Ambient,
}

impl Serialize for Cone2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ConeJson {
            rays: self.rays.clone(),
            ambient: self.ambient,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cone2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ConeJson::deserialize(d)?;
        let [r1, r2] = raw.rays;
        Cone2::new(r1.with_ambient(raw.ambient), r2.with_ambient(raw.ambient))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(x: i64, y: i64) -> LatticePoint {
        LatticePoint::m(x, y)
    }

    fn n(x: i64, y: i64) -> LatticePoint {
        LatticePoint::n(x, y)
    }

    fn q(x: i64, y: i64) -> RationalPoint {
        m(x, y).to_rational()
    }

    #[test]
    fn normalization_makes_equal_cones_equal() {
        let a = Cone2::new(m(2, 3), m(0, 5)).unwrap();
        let b = Cone2::new(m(0, 1), m(4, 6)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rays(), &[m(0, 1), m(2, 3)]);
    }

    #[test]
    fn lines_are_rejected() {
        assert!(matches!(
            Cone2::new(m(1, 1), m(-2, -2)),
            Err(Error::Unsupported(_))
        ));
        let r = Cone2::new(m(1, 1), m(3, 3)).unwrap();
        assert!(!r.is_full_dim());
    }

    #[test]
    fn dual_examples() {
        let quadrant = Cone2::new(n(1, 0), n(0, 1)).unwrap();
        assert_eq!(
            dual_cone(&quadrant).unwrap(),
            Cone2::new(m(1, 0), m(0, 1)).unwrap()
        );
        let c = Cone2::new(n(1, 0), n(-2, 1)).unwrap();
        assert_eq!(dual_cone(&c).unwrap().rays(), &[m(0, 1), m(1, 2)]);
        assert!(dual_cone(&Cone2::ray(n(1, 0)).unwrap()).is_err());
    }

    #[test]
    fn contains_examples() {
        let quadrant = Cone2::new(m(1, 0), m(0, 1)).unwrap();
        assert!(cone_contains(&quadrant, &q(1, 1)));
        assert!(!cone_contains(&quadrant, &q(-1, 0)));
        let c = Cone2::new(m(0, 1), m(2, 3)).unwrap();
        assert!(!cone_contains(&c, &q(1, 1)));
        let half = RationalPoint::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::new(3.into(), 4.into()),
            Ambient::M,
        );
        assert!(cone_contains(&c, &half));
        assert!(!cone_contains(&c, &n(0, 1).to_rational()));
    }

    #[test]
    fn hilbert_basis_examples() {
        let quadrant = Cone2::new(m(1, 0), m(0, 1)).unwrap();
        assert_eq!(
            semigroup_generators(&quadrant).unwrap(),
            vec![m(0, 1), m(1, 0)]
        );
        let c = Cone2::new(m(0, 1), m(2, 1)).unwrap();
        assert_eq!(
            semigroup_generators(&c).unwrap(),
            vec![m(0, 1), m(1, 1), m(2, 1)]
        );
        let c = Cone2::new(m(0, 1), m(3, 2)).unwrap();
        assert_eq!(
            semigroup_generators(&c).unwrap(),
            vec![m(0, 1), m(1, 1), m(3, 2)]
        );
    }

    #[test]
    fn json_roundtrip() {
        let c = Cone2::new(n(-2, 1), n(1, 0)).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"{"rays":[[-2,1],[1,0]],"ambient":"N"}"#);
        assert_eq!(serde_json::from_str::<Cone2>(&text).unwrap(), c);
        assert!(serde_json::from_str::<Cone2>(r#"{"rays":[[1,0],[-1,0]],"ambient":"M"}"#).is_err());
    }
}
