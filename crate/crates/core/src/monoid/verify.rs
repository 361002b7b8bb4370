use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::comult::{comult, counit, ComultRule};
use super::spec::{cone_of_spec, MonoidCone, MonoidSpec};
use crate::algebra::{tensor_multiply, LaurentElement, TensorElement};
use crate::error::{invalid, Result};
use crate::lattice::LatticePoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The monomials at which a check failed, with a short description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub monomials: Vec<LatticePoint>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match (&c.status, &c.witness) {
                (Status::Pass, _) => writeln!(f, "{}: pass", c.name)?,
                (Status::Fail, Some(w)) => writeln!(f, "{}: FAIL ({})", c.name, w.detail)?,
                (Status::Fail, None) => writeln!(f, "{}: FAIL", c.name)?,
            }
        }
        Ok(())
    }
}

struct Recorder {
    name: &'static str,
    witness: Option<Witness>,
}

impl Recorder {
    fn new(name: &'static str) -> Self {
        Recorder {
            name,
            witness: None,
        }
    }

    fn failed(&self) -> bool {
        self.witness.is_some()
    }

    fn fail(&mut self, monomials: &[&LatticePoint], detail: String) {
        if self.witness.is_none() {
            self.witness = Some(Witness {
                monomials: monomials.iter().map(|&u| u.clone()).collect(),
                detail,
            });
        }
    }

    fn finish(self) -> Check {
        Check {
            name: self.name.to_string(),
            status: if self.witness.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            witness: self.witness,
        }
    }
}

type Triple = BTreeMap<(LatticePoint, LatticePoint, LatticePoint), BigRational>;

fn add_triple(t: &mut Triple, key: (LatticePoint, LatticePoint, LatticePoint), c: BigRational) {
    let slot = t.entry(key.clone()).or_insert_with(BigRational::zero);
    *slot += c;
    if slot.is_zero() {
        t.remove(&key);
    }
}

fn coassoc_sides(rule: &ComultRule, d: &TensorElement) -> Result<(Triple, Triple)> {
    let mut left = Triple::new();
    let mut right = Triple::new();
    for ((l, r), c) in d.terms() {
        for ((ll, lr), c2) in comult(rule, l)?.terms() {
            add_triple(&mut left, (ll.clone(), lr.clone(), r.clone()), c * c2);
        }
        for ((rl, rr), c2) in comult(rule, r)?.terms() {
            add_triple(&mut right, (l.clone(), rl.clone(), rr.clone()), c * c2);
        }
    }
    Ok((left, right))
}

/// Checks the bialgebra axioms for `rule` on the monomials of `cone` with
/// coordinates in `[-box, box]`: cone closure of every output exponent,
/// coassociativity, both counit axioms and multiplicativity on all pairs.
pub fn verify_comultiplication(
    cone: &MonoidCone,
    rule: &ComultRule,
    bx: u64,
) -> Result<VerificationReport> {
    if bx == 0 {
        return Err(invalid("box must be positive"));
    }
    let bound = i64::try_from(bx).map_err(|_| invalid("box too large"))?;
    let points = cone.lattice_points(bound);

    let mut closure = Recorder::new("cone_closure");
    let mut coassoc = Recorder::new("coassociativity");
    let mut left_counit = Recorder::new("left_counit");
    let mut right_counit = Recorder::new("right_counit");
    let mut mult = Recorder::new("multiplicativity");

    let mut images = Vec::with_capacity(points.len());
    for u in &points {
        let d = comult(rule, u)?;
        if let Some(w) = d.exponents().find(|w| !cone.contains(w)) {
            closure.fail(
                &[u],
                format!("comultiplication of {u} has exponent {w} outside the cone"),
            );
        }
        if !coassoc.failed() {
            let (l, r) = coassoc_sides(rule, &d)?;
            if l != r {
                coassoc.fail(&[u], format!("(Δ⊗id)Δ and (id⊗Δ)Δ differ on {u}"));
            }
        }
        let expected = LaurentElement::monomial(u.clone());
        if d.contract_left(counit) != expected {
            left_counit.fail(&[u], format!("(ε⊗id)Δ({u}) is not {u}"));
        }
        if d.contract_right(counit) != expected {
            right_counit.fail(&[u], format!("(id⊗ε)Δ({u}) is not {u}"));
        }
        images.push(d);
    }

    'pairs: for (i, u) in points.iter().enumerate() {
        for (j, v) in points.iter().enumerate().skip(i) {
            let product = tensor_multiply(&images[i], &images[j]);
            if comult(rule, &(u + v))? != product {
                mult.fail(&[u, v], format!("Δ({u}+{v}) differs from Δ({u})Δ({v})"));
                break 'pairs;
            }
        }
    }

    Ok(VerificationReport {
        checks: vec![
            closure.finish(),
            coassoc.finish(),
            left_counit.finish(),
            right_counit.finish(),
            mult.finish(),
        ],
    })
}

/// [`verify_comultiplication`] for the spec's own cone and rule.
pub fn verify_bialgebra(s: &MonoidSpec, bx: u64) -> Result<VerificationReport> {
    verify_comultiplication(&cone_of_spec(s), &s.comult_rule(), bx)
}
