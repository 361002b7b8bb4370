use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cone::Cone2;
use super::point::LatticePoint;
use crate::error::{Error, Result};

/// An integer 2x2 matrix acting on column vectors: `(x, y) ↦ (m00 x + m01 y, m10 x + m11 y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeMap {
    matrix: [[BigInt; 2]; 2],
}

impl LatticeMap {
    /// Builds the map from its rows.
    pub fn new(rows: [[BigInt; 2]; 2]) -> Self {
        LatticeMap { matrix: rows }
    }

    pub fn from_rows(r0: [i64; 2], r1: [i64; 2]) -> Self {
        LatticeMap::new([[r0[0].into(), r0[1].into()], [r1[0].into(), r1[1].into()]])
    }

    /// The map sending the standard basis to `c0` and `c1`.
    pub fn from_columns(c0: &LatticePoint, c1: &LatticePoint) -> Self {
        LatticeMap::new([
            [c0.x().clone(), c1.x().clone()],
            [c0.y().clone(), c1.y().clone()],
        ])
    }

    pub fn identity() -> Self {
        Self::from_rows([1, 0], [0, 1])
    }

    pub fn matrix(&self) -> &[[BigInt; 2]; 2] {
        &self.matrix
    }

    pub fn determinant(&self) -> BigInt {
        let m = &self.matrix;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }

    /// Inverse over the integers, if the determinant is ±1.
    pub fn inverse(&self) -> Option<LatticeMap> {
        let d = self.determinant();
        if !d.abs().is_one() {
            return None;
        }
        let m = &self.matrix;
        Some(LatticeMap::new([
            [&m[1][1] * &d, -&m[0][1] * &d],
            [-&m[1][0] * &d, &m[0][0] * &d],
        ]))
    }

    pub fn compose(&self, inner: &LatticeMap) -> LatticeMap {
        let a = &self.matrix;
        let b = &inner.matrix;
        let entry = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        LatticeMap::new([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }

    pub fn apply(&self, v: &LatticePoint) -> LatticePoint {
        apply_map(self, v)
    }
}

pub fn apply_map(m: &LatticeMap, v: &LatticePoint) -> LatticePoint {
    let a = &m.matrix;
    LatticePoint::new(
        &a[0][0] * v.x() + &a[0][1] * v.y(),
        &a[1][0] * v.x() + &a[1][1] * v.y(),
        v.ambient(),
    )
}

/// Image of a cone under a nonsingular map, renormalized.
pub fn map_image_cone(m: &LatticeMap, c: &Cone2) -> Result<Cone2> {
    if m.determinant().is_zero() {
        return Err(Error::DegenerateCone(
            "singular map collapses the cone".into(),
        ));
    }
    let [r1, r2] = c.rays();
    Cone2::new(apply_map(m, r1), apply_map(m, r2))
}
