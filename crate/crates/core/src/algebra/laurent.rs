use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::lattice::LatticePoint;

/// A Laurent polynomial `Σ c_u χ^u` with exact rational coefficients.
///
/// Terms are kept in a sorted map with zero coefficients removed, so derived
/// equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentElement {
    terms: BTreeMap<LatticePoint, BigRational>,
}

impl LaurentElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(LatticePoint::m(0, 0))
    }

    pub fn monomial(u: LatticePoint) -> Self {
        Self::term(u, BigRational::one())
    }

    pub fn term(u: LatticePoint, c: BigRational) -> Self {
        let mut f = Self::zero();
        f.add_term(u, c);
        f
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (LatticePoint, BigRational)>,
    {
        let mut f = Self::zero();
        for (u, c) in terms {
            f.add_term(u, c);
        }
        f
    }

    pub fn add_term(&mut self, u: LatticePoint, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(u) {
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

    pub fn terms(&self) -> btree_map::Iter<'_, LatticePoint, BigRational> {
        self.terms.iter()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &LatticePoint> {
        self.terms.keys()
    }

    pub fn coefficient(&self, u: &LatticePoint) -> BigRational {
        self.terms.get(u).cloned().unwrap_or_else(BigRational::zero)
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

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(u, a)| (u.clone(), a * c)))
    }
}

/// Exact product of two Laurent polynomials.
pub fn multiply(f: &LaurentElement, g: &LaurentElement) -> LaurentElement {
    let mut out = LaurentElement::zero();
    for (u, a) in f.terms() {
        for (v, b) in g.terms() {
            out.add_term(u + v, a * b);
        }
    }
    out
}

/// `base^exp` for an integer exponent; a negative exponent at zero is a pole.
pub(crate) fn rational_pow(base: &BigRational, exp: &BigInt) -> Result<BigRational> {
    let e = exp
        .to_i32()
        .ok_or_else(|| invalid(format!("exponent {exp} too large to evaluate")))?;
    if e < 0 && base.is_zero() {
        return Err(Error::Pole(format!("zero raised to the power {e}")));
    }
    if e == 0 {
        return Ok(BigRational::one());
    }
    Ok(num_traits::Pow::pow(base, e))
}

/// Evaluates `f` at the torus point `(x, y)`.
pub fn evaluate(f: &LaurentElement, point: (&BigRational, &BigRational)) -> Result<BigRational> {
    let (x, y) = point;
    let mut acc = BigRational::zero();
    for (u, c) in f.terms() {
        acc += c * rational_pow(x, u.x())? * rational_pow(y, u.y())?;
    }
    Ok(acc)
}

impl Add for &LaurentElement {
    type Output = LaurentElement;
    fn add(self, rhs: &LaurentElement) -> LaurentElement {
        let mut out = self.clone();
        for (u, c) in rhs.terms() {
            out.add_term(u.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentElement {
    type Output = LaurentElement;
    fn sub(self, rhs: &LaurentElement) -> LaurentElement {
        self + &(-rhs)
    }
}

impl Neg for &LaurentElement {
    type Output = LaurentElement;
    fn neg(self) -> LaurentElement {
        LaurentElement::from_terms(self.terms().map(|(u, c)| (u.clone(), -c)))
    }
}

impl Mul for &LaurentElement {
    type Output = LaurentElement;
    fn mul(self, rhs: &LaurentElement) -> LaurentElement {
        multiply(self, rhs)
    }
}

impl fmt::Display for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (u, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            write!(f, "{}", term_text(&c.abs(), &monomial_text(u)))?;
        }
        Ok(())
    }
}

/// `x^a y^b` with unit exponents and trivial factors dropped; `1` for the
/// zero exponent.
pub(crate) fn monomial_text(u: &LatticePoint) -> String {
    let factor = |var: &str, e: &BigInt| match e {
        e if e.is_zero() => String::new(),
        e if e.is_one() => var.to_string(),
        e => format!("{var}^{e}"),
    };
    let text = factor("x", u.x()) + &factor("y", u.y());
    if text.is_empty() {
        "1".into()
    } else {
        text
    }
}

/// A coefficient times a monomial, omitting a unit coefficient.
pub(crate) fn term_text(c: &BigRational, monomial: &str) -> String {
    if c.is_one() {
        monomial.to_string()
    } else {
        format!("{c}·{monomial}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: LatticePoint,
    #[serde(with = "crate::json::rational")]
    coef: BigRational,
}

impl Serialize for LaurentElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.terms().map(|(u, c)| TermJson {
            exp: u.clone(),
            coef: c.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for LaurentElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        Ok(LaurentElement::from_terms(
            terms.into_iter().map(|t| (t.exp, t.coef)),
        ))
    }
}
