use std::fmt;

use num_integer::Integer;
use serde::de::{self, MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::lattice::{Cone2, LatticeMap, LatticePoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Group,
    X,
    Y,
}

/// A classified noncommutative monoid: the group `G_n` itself, or one of
/// the families `X_n^{a,b}`, `Y_n^{a,b}` with `a > 0`, `b >= 0`,
/// `gcd(a, b) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidSpec {
    family: Family,
    n: u64,
    params: Option<(u64, u64)>,
}

impl MonoidSpec {
    pub fn group(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(invalid("n must be positive"));
        }
        Ok(MonoidSpec {
            family: Family::Group,
            n,
            params: None,
        })
    }

    pub fn x(n: u64, a: u64, b: u64) -> Result<Self> {
        Self::with_family(Family::X, n, a, b)
    }

    pub fn y(n: u64, a: u64, b: u64) -> Result<Self> {
        Self::with_family(Family::Y, n, a, b)
    }

    pub fn with_family(family: Family, n: u64, a: u64, b: u64) -> Result<Self> {
        if family == Family::Group {
            return Self::group(n);
        }
        if n == 0 {
            return Err(invalid("n must be positive"));
        }
        if a == 0 {
            return Err(invalid("a must be positive"));
        }
        if a.gcd(&b) != 1 {
            return Err(invalid(format!("gcd({a}, {b}) must be 1")));
        }
        Ok(MonoidSpec {
            family,
            n,
            params: Some((a, b)),
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn a(&self) -> Option<u64> {
        self.params.map(|p| p.0)
    }

    pub fn b(&self) -> Option<u64> {
        self.params.map(|p| p.1)
    }

    pub fn is_group(&self) -> bool {
        self.family == Family::Group
    }

    /// `(a, b)`, or a not-applicable error for `Group`.
    pub fn ab(&self) -> Result<(u64, u64)> {
        self.params
            .ok_or_else(|| Error::NotApplicable(format!("{self} has no (a, b) parameters")))
    }
}

impl fmt::Display for MonoidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.family, self.params) {
            (Family::Group, _) | (_, None) => write!(f, "G_{}", self.n),
            (Family::X, Some((a, b))) => write!(f, "X_{}^{{{a},{b}}}", self.n),
            (Family::Y, Some((a, b))) => write!(f, "Y_{}^{{{a},{b}}}", self.n),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    family: Family,
    n: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b: Option<u64>,
}

impl Serialize for MonoidSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpecJson {
            family: self.family,
            n: self.n,
            a: self.a(),
            b: self.b(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonoidSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SpecJson::deserialize(d)?;
        let spec = match (raw.family, raw.a, raw.b) {
            (Family::Group, None, None) => MonoidSpec::group(raw.n),
            (Family::Group, _, _) => Err(invalid("Group takes no a, b")),
            (family, Some(a), Some(b)) => MonoidSpec::with_family(family, raw.n, a, b),
            _ => Err(invalid("X and Y need both a and b")),
        };
        spec.map_err(D::Error::custom)
    }
}

/// The dual cone attached to a monoid: a strongly convex [`Cone2`] in `M`,
/// or the half-plane `{u : u_1 >= 0}` of the group `G_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonoidCone {
    HalfPlane,
    Cone(Cone2),
}

impl MonoidCone {
    pub fn contains(&self, u: &LatticePoint) -> bool {
        match self {
            MonoidCone::HalfPlane => *u.x() >= 0.into(),
            MonoidCone::Cone(c) => c.contains_lattice(u),
        }
    }

    /// Lattice points with coordinates in `[-bound, bound]`, lexicographic.
    pub fn lattice_points(&self, bound: i64) -> Vec<LatticePoint> {
        match self {
            MonoidCone::HalfPlane => (0..=bound)
                .flat_map(|x| (-bound..=bound).map(move |y| LatticePoint::m(x, y)))
                .collect(),
            MonoidCone::Cone(c) => c.lattice_points(bound),
        }
    }
}

const HALF_PLANE: &str = "half-plane";

impl Serialize for MonoidCone {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MonoidCone::HalfPlane => HALF_PLANE.serialize(s),
            MonoidCone::Cone(c) => c.serialize(s),
        }
    }
}

struct MonoidConeVisitor;

impl<'de> Visitor<'de> for MonoidConeVisitor {
    type Value = MonoidCone;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a cone object or the string {HALF_PLANE:?}")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<MonoidCone, E> {
        if v == HALF_PLANE {
            Ok(MonoidCone::HalfPlane)
        } else {
            Err(E::custom(format!(
                "unknown cone sentinel {v:?}, expected {HALF_PLANE:?}"
            )))
        }
    }

    fn visit_map<A: MapAccess<'de>>(self, map: A) -> std::result::Result<MonoidCone, A::Error> {
        Cone2::deserialize(de::value::MapAccessDeserializer::new(map)).map(MonoidCone::Cone)
    }
}

impl<'de> Deserialize<'de> for MonoidCone {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(MonoidConeVisitor)
    }
}

/// `σ∨(n,a,b)` with rays `(0,1)`, `(a,b)` for `X`; `σ̄∨(n,a,b)` with rays
/// `(0,-1)`, `(a,-na-b)` for `Y`; the half-plane for `Group`.
pub fn cone_of_spec(s: &MonoidSpec) -> MonoidCone {
    let Some((a, b)) = s.params else {
        return MonoidCone::HalfPlane;
    };
    let (a, b, n) = (i128::from(a), i128::from(b), i128::from(s.n));
    let rays = match s.family {
        Family::X => (LatticePoint::m(0, 1), LatticePoint::m(a, b)),
        _ => (LatticePoint::m(0, -1), LatticePoint::m(a, -n * a - b)),
    };
    MonoidCone::Cone(Cone2::new(rays.0, rays.1).expect("rays of a valid spec are independent"))
}

/// The opposite monoid: `X ↔ Y`, groups are self-opposite.
pub fn opposite(s: &MonoidSpec) -> MonoidSpec {
    let family = match s.family {
        Family::Group => Family::Group,
        Family::X => Family::Y,
        Family::Y => Family::X,
    };
    MonoidSpec { family, ..*s }
}

/// The lattice involution `(1,0) ↦ (1,-n)`, `(0,1) ↦ (0,-1)` exchanging the
/// cones of `X_n^{a,b}` and `Y_n^{a,b}`. Together with the factor flip it
/// intertwines the two comultiplications.
pub fn opposite_witness(s: &MonoidSpec) -> Result<LatticeMap> {
    if s.is_group() {
        return Err(Error::NotApplicable(
            "a group is opposite to itself through inversion, not a lattice map".into(),
        ));
    }
    let n = i64::try_from(s.n).map_err(|_| invalid("n too large"))?;
    Ok(LatticeMap::from_rows([1, 0], [-n, -1]))
}

/// Quotient by the central subgroup `C_m ⊂ Z(G_n)`, defined when `m | n`.
///
/// `X_n^{a,b} / C_m ≅ X_{n/m}^{a',b'}` with `a' = a m / gcd(m,b)` and
/// `b' = b / gcd(m,b)`; `Y` follows by passing to opposites and
/// `G_n / C_m ≅ G_{n/m}`.
pub fn quotient_by_center(s: &MonoidSpec, m: u64) -> Result<MonoidSpec> {
    if m == 0 || !s.n.is_multiple_of(m) {
        return Err(invalid(format!(
            "m = {m} must divide n = {} (the center of G_n is cyclic of order n)",
            s.n
        )));
    }
    let k = s.n / m;
    match s.family {
        Family::Group => MonoidSpec::group(k),
        Family::X => {
            let (a, b) = s.ab()?;
            let g = m.gcd(&b);
            let a2 = (m / g)
                .checked_mul(a)
                .ok_or_else(|| invalid("parameter overflow"))?;
            let q = MonoidSpec::x(k, a2, b / g);
            q.map_err(|e| Error::Consistency(format!("quotient parameters not coprime: {e}")))
        }
        Family::Y => Ok(opposite(&quotient_by_center(&opposite(s), m)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::map_image_cone;

    fn x(n: u64, a: u64, b: u64) -> MonoidSpec {
        MonoidSpec::x(n, a, b).unwrap()
    }

    fn y(n: u64, a: u64, b: u64) -> MonoidSpec {
        MonoidSpec::y(n, a, b).unwrap()
    }

    fn cone(s: &MonoidSpec) -> Cone2 {
        match cone_of_spec(s) {
            MonoidCone::Cone(c) => c,
            MonoidCone::HalfPlane => panic!("group"),
        }
    }

    #[test]
    fn validation() {
        assert!(MonoidSpec::x(1, 2, 4).is_err());
        assert!(MonoidSpec::x(0, 1, 1).is_err());
        assert!(MonoidSpec::y(1, 0, 1).is_err());
        assert!(MonoidSpec::group(0).is_err());
        assert!(MonoidSpec::x(3, 1, 0).is_ok());
    }

    #[test]
    fn cones() {
        assert_eq!(
            cone(&x(1, 2, 3)).rays(),
            &[LatticePoint::m(0, 1), LatticePoint::m(2, 3)]
        );
        assert_eq!(
            cone(&y(2, 1, 1)).rays(),
            &[LatticePoint::m(0, -1), LatticePoint::m(1, -3)]
        );
        assert_eq!(
            cone_of_spec(&MonoidSpec::group(5).unwrap()),
            MonoidCone::HalfPlane
        );
    }

    #[test]
    fn opposites() {
        assert_eq!(opposite(&x(3, 2, 1)), y(3, 2, 1));
        for s in [x(3, 2, 1), y(1, 1, 0), MonoidSpec::group(4).unwrap()] {
            assert_eq!(opposite(&opposite(&s)), s);
        }
        let g = MonoidSpec::group(7).unwrap();
        assert_eq!(opposite(&g), g);
        assert!(opposite_witness(&g).is_err());
    }

    #[test]
    fn opposite_witness_maps_cones() {
        for n in 1..4 {
            for (a, b) in [(1, 0), (1, 1), (2, 1), (3, 2), (2, 5)] {
                let phi = opposite_witness(&y(n, a, b)).unwrap();
                assert_eq!(phi.apply(&LatticePoint::m(0, 1)), LatticePoint::m(0, -1));
                assert_eq!(
                    phi.apply(&LatticePoint::m(1, 0)),
                    LatticePoint::m(1, -(n as i64))
                );
                assert_eq!(
                    map_image_cone(&phi, &cone(&x(n, a, b))).unwrap(),
                    cone(&y(n, a, b))
                );
                assert_eq!(phi.compose(&phi), LatticeMap::identity());
            }
        }
    }

    #[test]
    fn quotients() {
        assert_eq!(quotient_by_center(&x(2, 1, 2), 2).unwrap(), x(1, 1, 1));
        assert_eq!(quotient_by_center(&x(6, 3, 2), 1).unwrap(), x(6, 3, 2));
        assert_eq!(quotient_by_center(&x(6, 1, 2), 3).unwrap(), x(2, 3, 2));
        assert_eq!(quotient_by_center(&y(6, 1, 2), 3).unwrap(), y(2, 3, 2));
        assert_eq!(
            quotient_by_center(&MonoidSpec::group(6).unwrap(), 2).unwrap(),
            MonoidSpec::group(3).unwrap()
        );
        assert!(quotient_by_center(&x(5, 1, 1), 2).is_err());
        assert!(quotient_by_center(&x(5, 1, 1), 0).is_err());
    }

    #[test]
    fn quotient_matches_lattice_map() {
        // diag(1, m) carries the quotient's cone onto the original one.
        for m in 1..5u64 {
            for n in 1..4u64 {
                for (a, b) in [(1, 0), (1, 1), (1, 2), (2, 3), (3, 4), (1, 6)] {
                    let s = x(m * n, a, b);
                    let q = quotient_by_center(&s, m).unwrap();
                    let phi = LatticeMap::from_rows([1, 0], [0, m as i64]);
                    assert_eq!(map_image_cone(&phi, &cone(&q)).unwrap(), cone(&s));
                }
            }
        }
    }

    #[test]
    fn json() {
        let s = x(1, 2, 3);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"family":"X","n":1,"a":2,"b":3}"#);
        assert_eq!(serde_json::from_str::<MonoidSpec>(&text).unwrap(), s);
        let g = MonoidSpec::group(4).unwrap();
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"family":"Group","n":4}"#
        );
        assert!(serde_json::from_str::<MonoidSpec>(r#"{"family":"X","n":1,"a":2,"b":4}"#).is_err());
        assert!(serde_json::from_str::<MonoidSpec>(r#"{"family":"Y","n":1}"#).is_err());

        let hp: MonoidCone = serde_json::from_str(r#""half-plane""#).unwrap();
        assert_eq!(hp, MonoidCone::HalfPlane);
        let c: MonoidCone =
            serde_json::from_str(r#"{"rays":[[0,1],[2,3]],"ambient":"M"}"#).unwrap();
        assert_eq!(c, cone_of_spec(&s));
    }
}
