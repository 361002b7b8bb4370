use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Result};
use crate::json::{int_to_i128, JsonInt};

/// Which of the two dual lattices a point lives in: characters `M` or
/// one-parameter subgroups `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ambient {
    M,
    N,
}

impl Ambient {
    pub fn dual(self) -> Ambient {
        match self {
            Ambient::M => Ambient::N,
            Ambient::N => Ambient::M,
        }
    }
}

/// An integer point of `M` or `N`.
///
/// Ordering is lexicographic on `(x, y)`; this is the total order used for
/// canonical forms throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    x: BigInt,
    y: BigInt,
    ambient: Ambient,
}

impl LatticePoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, ambient: Ambient) -> Self {
        LatticePoint {
            x: x.into(),
            y: y.into(),
            ambient,
        }
    }

    /// A character, i.e. a point of `M`.
    pub fn m(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self::new(x, y, Ambient::M)
    }

    /// A one-parameter subgroup, i.e. a point of `N`.
    pub fn n(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self::new(x, y, Ambient::N)
    }

    pub fn zero(ambient: Ambient) -> Self {
        Self::new(0, 0, ambient)
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn with_ambient(mut self, ambient: Ambient) -> Self {
        self.ambient = ambient;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(&self.x * k, &self.y * k, self.ambient)
    }

    /// gcd of the absolute values of the coordinates.
    pub fn content(&self) -> BigInt {
        self.x.gcd(&self.y)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> BigInt {
        self.x.abs().max(self.y.abs())
    }

    pub fn to_rational(&self) -> RationalPoint {
        RationalPoint::new(
            BigRational::from_integer(self.x.clone()),
            BigRational::from_integer(self.y.clone()),
            self.ambient,
        )
    }
}

/// Raw coordinate dot product, ignoring ambient tags.
pub(crate) fn dot(u: &LatticePoint, v: &LatticePoint) -> BigInt {
    &u.x * &v.x + &u.y * &v.y
}

/// 2x2 determinant of the matrix with columns `u`, `v`.
pub(crate) fn det2(u: &LatticePoint, v: &LatticePoint) -> BigInt {
    &u.x * &v.y - &u.y * &v.x
}

impl Add for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.ambient, rhs.ambient);
        LatticePoint::new(&self.x + &rhs.x, &self.y + &rhs.y, self.ambient)
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.ambient, rhs.ambient);
        LatticePoint::new(&self.x - &rhs.x, &self.y - &rhs.y, self.ambient)
    }
}

impl Neg for &LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-&self.x, -&self.y, self.ambient)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Serialized as a bare `[x, y]` pair; the ambient comes from context and
/// deserializes as `M`.
impl Serialize for LatticePoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (int_to_i128(&self.x)?, int_to_i128(&self.y)?).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (x, y) = <(JsonInt, JsonInt)>::deserialize(d)?;
        Ok(LatticePoint::m(x.0, y.0))
    }
}

/// A point of `M_Q` or `N_Q`. Coordinates are reduced fractions with positive
/// denominators (guaranteed by `BigRational`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    x: BigRational,
    y: BigRational,
    ambient: Ambient,
}

impl RationalPoint {
    pub fn new(x: BigRational, y: BigRational, ambient: Ambient) -> Self {
        RationalPoint { x, y, ambient }
    }

    pub fn x(&self) -> &BigRational {
        &self.x
    }

    pub fn y(&self) -> &BigRational {
        &self.y
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }
}

impl From<&LatticePoint> for RationalPoint {
    fn from(p: &LatticePoint) -> Self {
        p.to_rational()
    }
}

/// The natural pairing `<u, p>` of a character `u` with a one-parameter
/// subgroup `p`.
pub fn pairing(u: &LatticePoint, p: &LatticePoint) -> Result<BigInt> {
    if u.ambient != Ambient::M || p.ambient != Ambient::N {
        return Err(invalid(format!(
            "pairing expects (M, N) arguments, got ({:?}, {:?})",
            u.ambient, p.ambient
        )));
    }
    Ok(dot(u, p))
}

/// Divides a nonzero vector by the gcd of its coordinates.
pub fn primitive(v: &LatticePoint) -> Result<LatticePoint> {
    if v.is_zero() {
        return Err(invalid("the zero vector has no primitive generator"));
    }
    let g = v.content();
    Ok(LatticePoint::new(&v.x / &g, &v.y / &g, v.ambient))
}
