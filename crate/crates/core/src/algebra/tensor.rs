use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::Add;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::{monomial_text, term_text, LaurentElement};
use crate::lattice::LatticePoint;

/// An element `Σ c_{u,v} χ^u ⊗ χ^v` of the tensor square of a Laurent
/// algebra, with exact rational coefficients and canonical ordering.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TensorElement {
    terms: BTreeMap<(LatticePoint, LatticePoint), BigRational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 ⊗ 1`.
    pub fn one() -> Self {
        Self::pure(LatticePoint::m(0, 0), LatticePoint::m(0, 0))
    }

    /// `χ^u ⊗ χ^v`.
    pub fn pure(u: LatticePoint, v: LatticePoint) -> Self {
        Self::term(u, v, BigRational::one())
    }

    pub fn term(u: LatticePoint, v: LatticePoint, c: BigRational) -> Self {
        let mut t = Self::zero();
        t.add_term(u, v, c);
        t
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (LatticePoint, LatticePoint, BigRational)>,
    {
        let mut t = Self::zero();
        for (u, v, c) in terms {
            t.add_term(u, v, c);
        }
        t
    }

    pub fn add_term(&mut self, u: LatticePoint, v: LatticePoint, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((u, v)) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> btree_map::Iter<'_, (LatticePoint, LatticePoint), BigRational> {
        self.terms.iter()
    }

    pub fn coefficient(&self, u: &LatticePoint, v: &LatticePoint) -> BigRational {
        self.terms
            .get(&(u.clone(), v.clone()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Swaps the tensor factors: `f ⊗ g ↦ g ⊗ f`.
    pub fn flip(&self) -> Self {
        Self::from_terms(
            self.terms()
                .map(|((u, v), c)| (v.clone(), u.clone(), c.clone())),
        )
    }

    /// Applies a lattice map to the exponents of both factors.
    pub fn map_exponents(&self, f: impl Fn(&LatticePoint) -> LatticePoint) -> Self {
        Self::from_terms(self.terms().map(|((u, v), c)| (f(u), f(v), c.clone())))
    }

    /// `(φ ⊗ id)` for a linear functional `φ` given on monomials.
    pub fn contract_left(&self, phi: impl Fn(&LatticePoint) -> BigRational) -> LaurentElement {
        LaurentElement::from_terms(self.terms().map(|((u, v), c)| (v.clone(), c * phi(u))))
    }

    /// `(id ⊗ φ)` for a linear functional `φ` given on monomials.
    pub fn contract_right(&self, phi: impl Fn(&LatticePoint) -> BigRational) -> LaurentElement {
        LaurentElement::from_terms(self.terms().map(|((u, v), c)| (u.clone(), c * phi(v))))
    }

    /// Every exponent occurring in either factor.
    pub fn exponents(&self) -> impl Iterator<Item = &LatticePoint> {
        self.terms.keys().flat_map(|(u, v)| [u, v])
    }
}

/// Product in the tensor square, `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
pub fn tensor_multiply(s: &TensorElement, t: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for ((u1, v1), a) in s.terms() {
        for ((u2, v2), b) in t.terms() {
            out.add_term(u1 + u2, v1 + v2, a * b);
        }
    }
    out
}

/// `s^k` by repeated squaring; `s^0 = 1 ⊗ 1`.
pub fn tensor_power(s: &TensorElement, k: u64) -> TensorElement {
    let mut result = TensorElement::one();
    let mut base = s.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            result = tensor_multiply(&result, &base);
        }
        k >>= 1;
        if k > 0 {
            base = tensor_multiply(&base, &base);
        }
    }
    result
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((u, v), c) in rhs.terms() {
            out.add_term(u.clone(), v.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((u, v), c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let pure = format!("{}⊗{}", monomial_text(u), monomial_text(v));
            write!(f, "{}", term_text(&c.abs(), &pure))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TensorTermJson {
    left: LatticePoint,
    right: LatticePoint,
    #[serde(with = "crate::json::rational")]
    coef: BigRational,
}

impl Serialize for TensorElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.terms().map(|((u, v), c)| TensorTermJson {
            left: u.clone(),
            right: v.clone(),
            coef: c.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for TensorElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TensorTermJson>::deserialize(d)?;
        Ok(TensorElement::from_terms(
            terms.into_iter().map(|t| (t.left, t.right, t.coef)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64) -> LatticePoint {
        LatticePoint::m(a, b)
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn display() {
        let t = TensorElement::from_terms([
            (m(1, 0), m(0, 0), int(1)),
            (m(0, 1), m(1, 0), int(1)),
            (m(2, -1), m(1, 3), int(-3)),
        ]);
        assert_eq!(t.to_string(), "y⊗x + x⊗1 - 3·x^2y^-1⊗xy^3");
        assert_eq!(TensorElement::zero().to_string(), "0");
    }

    #[test]
    fn binomial_square() {
        // (x⊗1 + y⊗x)^2 = x^2⊗1 + 2 xy⊗x + y^2⊗x^2
        let s = &TensorElement::pure(m(1, 0), m(0, 0)) + &TensorElement::pure(m(0, 1), m(1, 0));
        let expected = TensorElement::from_terms([
            (m(2, 0), m(0, 0), int(1)),
            (m(1, 1), m(1, 0), int(2)),
            (m(0, 2), m(2, 0), int(1)),
        ]);
        assert_eq!(tensor_power(&s, 2), expected);
    }

    #[test]
    fn zeroth_power_is_unit() {
        let s = TensorElement::term(m(3, 1), m(-1, 2), int(5));
        assert_eq!(tensor_power(&s, 0), TensorElement::one());
    }

    #[test]
    fn group_like_power() {
        let yy = TensorElement::pure(m(0, 1), m(0, 1));
        let p = tensor_power(&yy, 7);
        assert_eq!(p, TensorElement::pure(m(0, 7), m(0, 7)));
    }

    #[test]
    fn json_shape() {
        let t = TensorElement::from_terms([(m(1, 0), m(0, 0), int(1)), (m(0, 1), m(1, 0), int(1))]);
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(
            text,
            r#"[{"left":[0,1],"right":[1,0],"coef":"1/1"},{"left":[1,0],"right":[0,0],"coef":"1/1"}]"#
        );
        assert_eq!(serde_json::from_str::<TensorElement>(&text).unwrap(), t);
    }
}
