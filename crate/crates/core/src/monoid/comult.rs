use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::spec::MonoidSpec;
use crate::algebra::TensorElement;
use crate::demazure::{root_basis, RootPair};
use crate::error::{invalid, Error, Result};
use crate::lattice::{dot, dual_cone, Cone2, LatticeMap, LatticePoint};

/// Which chart the rule is written in: `Plus` is the group law of `G_n` in
/// the coordinates `x = χ^(1,0)`, `y = χ^(0,1)`; `Minus` is the same law
/// written with `y = χ^(0,-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Plus,
    Minus,
}

/// The comultiplication `x^a y^b ↦ (x⊗1 + y^n⊗x)^a (y⊗y)^b` of `k[G_n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComultRule {
    n: u64,
    orientation: Orientation,
}

impl ComultRule {
    pub fn new(n: u64, orientation: Orientation) -> Result<Self> {
        if n == 0 {
            return Err(invalid("comultiplication exponent n must be positive"));
        }
        Ok(ComultRule { n, orientation })
    }

    pub fn plus(n: u64) -> Result<Self> {
        Self::new(n, Orientation::Plus)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// `n` with the orientation's sign: the `y`-shift per power of `x` in
    /// standard coordinates.
    pub fn signed_shift(&self) -> BigInt {
        match self.orientation {
            Orientation::Plus => BigInt::from(self.n),
            Orientation::Minus => -BigInt::from(self.n),
        }
    }
}

impl MonoidSpec {
    /// Every spec uses the group law of `G_n` restricted to its cone.
    pub fn comult_rule(&self) -> ComultRule {
        ComultRule {
            n: self.n(),
            orientation: Orientation::Plus,
        }
    }
}

pub(crate) fn binomial_row(a: u64) -> Vec<BigRational> {
    let mut row = Vec::with_capacity(a as usize + 1);
    let mut c = BigInt::one();
    row.push(BigRational::from_integer(c.clone()));
    for i in 1..=a {
        c = c * BigInt::from(a - i + 1) / BigInt::from(i);
        row.push(BigRational::from_integer(c.clone()));
    }
    row
}

/// `Σ_i C(a,i) x^{a-i} y^{b+ni} ⊗ x^i y^b` for `u = (a, b)` (`n` negated for
/// the `Minus` orientation).
pub fn comult(rule: &ComultRule, u: &LatticePoint) -> Result<TensorElement> {
    if u.x().is_negative() {
        return Err(invalid(format!(
            "comultiplication needs a nonnegative x-exponent, got {u}"
        )));
    }
    let a = u
        .x()
        .to_u64()
        .ok_or_else(|| invalid("x-exponent too large"))?;
    let b = u.y();
    let shift = rule.signed_shift();
    let mut out = TensorElement::zero();
    for (i, c) in binomial_row(a).into_iter().enumerate() {
        let i = BigInt::from(i);
        let left = LatticePoint::m(BigInt::from(a) - &i, b + &shift * &i);
        let right = LatticePoint::m(i, b.clone());
        out.add_term(left, right, c);
    }
    Ok(out)
}

/// `χ^u ↦ χ^u ⊗ χ^u (1 ⊗ χ^{e1} + χ^{e2} ⊗ 1)^{<p_i, u>}`.
///
/// Fails with a consistency error if an output exponent leaves the dual
/// cone, which signals an invalid root pair.
pub fn comult_from_root_pair(
    sigma: &Cone2,
    pair: &RootPair,
    u: &LatticePoint,
) -> Result<TensorElement> {
    pair.check(sigma)?;
    let dual = dual_cone(sigma)?;
    if !dual.contains_lattice(u) {
        return Err(invalid(format!("{u} is not in the dual cone")));
    }
    let p = pair.e1.ray(sigma);
    let m = dot(u, p)
        .to_u64()
        .ok_or_else(|| invalid("pairing too large"))?;
    let (e1, e2) = (&pair.e1.e, &pair.e2.e);
    let mut out = TensorElement::zero();
    for (k, c) in binomial_row(m).into_iter().enumerate() {
        let k = BigInt::from(k);
        let left = u + &e2.scale(&k);
        let right = u + &e1.scale(&(BigInt::from(m) - &k));
        for w in [&left, &right] {
            if !dual.contains_lattice(w) {
                return Err(Error::Consistency(format!(
                    "exponent {w} of the comultiplication of {u} leaves the dual cone"
                )));
            }
        }
        out.add_term(left, right, c);
    }
    Ok(out)
}

/// How a root pair presents the monoid: in the basis `(-e1, v)` the
/// comultiplication becomes the group law of `G_|n|` where `e2 = (-1, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPairStructure {
    /// Columns `(-e1, v)`: converts basis coordinates to standard ones.
    pub basis: LatticeMap,
    /// `n` with sign; zero exactly when `e1 = e2`.
    pub shift: BigInt,
    /// Coordinates `(a, b)` of the other dual ray in the basis.
    pub other_ray: LatticePoint,
    /// `None` for the cocommutative case `e1 = e2`.
    pub rule: Option<ComultRule>,
    /// `X_n^{a,b}` for `n > 0`, `Y_{-n}^{a, b+na}` for `n < 0`.
    pub spec: Option<MonoidSpec>,
}

pub fn identify_root_pair(sigma: &Cone2, pair: &RootPair) -> Result<RootPairStructure> {
    pair.check(sigma)?;
    let (minus_e1, v) = root_basis(sigma, &pair.e1)?;
    let basis = LatticeMap::from_columns(&minus_e1, &v);
    let to_basis = basis
        .inverse()
        .ok_or_else(|| Error::Consistency("root basis is not unimodular".into()))?;
    let e2 = to_basis.apply(&pair.e2.e);
    if *e2.x() != -BigInt::one() {
        return Err(Error::Consistency(format!(
            "second root has basis coordinates {e2}, expected first coordinate -1"
        )));
    }
    let dual = dual_cone(sigma)?;
    let other = dual
        .rays()
        .iter()
        .find(|w| **w != v)
        .ok_or_else(|| Error::Consistency("dual cone has a single ray".into()))?;
    let other_ray = to_basis.apply(other);
    let shift = e2.y().clone();
    let param = |z: &BigInt| {
        z.to_u64()
            .ok_or_else(|| Error::Consistency(format!("parameter {z} out of range")))
    };
    let (rule, spec) = if shift.is_zero() {
        (None, None)
    } else {
        let a = param(other_ray.x())?;
        let n = param(&shift.abs())?;
        if shift.is_positive() {
            let b = param(other_ray.y())?;
            (Some(ComultRule::plus(n)?), Some(MonoidSpec::x(n, a, b)?))
        } else {
            let b = param(&(other_ray.y() + &shift * other_ray.x()))?;
            (
                Some(ComultRule::new(n, Orientation::Minus)?),
                Some(MonoidSpec::y(n, a, b)?),
            )
        }
    };
    Ok(RootPairStructure {
        basis,
        shift,
        other_ray,
        rule,
        spec,
    })
}

impl RootPairStructure {
    /// Applies the identified rule in basis coordinates and converts the
    /// result back to standard coordinates.
    pub fn transported_comult(&self, u: &LatticePoint) -> Result<TensorElement> {
        let rule = self
            .rule
            .ok_or_else(|| Error::NotApplicable("cocommutative pair has no G_n rule".into()))?;
        let to_basis = self.basis.inverse().expect("unimodular");
        let t = comult(&rule, &to_basis.apply(u))?;
        Ok(t.map_exponents(|w| self.basis.apply(w)))
    }
}

/// Evaluation at the unit `(0, 1)` of `G_n`: `χ^u ↦ 1` if `u_1 = 0`, else 0.
pub fn counit(u: &LatticePoint) -> BigRational {
    if u.x().is_zero() {
        BigRational::one()
    } else {
        BigRational::zero()
    }
}
