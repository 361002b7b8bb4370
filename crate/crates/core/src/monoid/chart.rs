use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::spec::{cone_of_spec, Family, MonoidSpec};
use crate::algebra::rational_pow;
use crate::error::{invalid, Error, Result};
use crate::lattice::LatticePoint;

/// A point of an explicit affine chart: `𝔸²` for `a = 1`, the quadric cone
/// `xz = y²` in `𝔸³` for `X_n^{2,2k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChartPoint {
    #[serde(with = "crate::json::rational_vec")]
    pub coords: Vec<BigRational>,
}

impl ChartPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        ChartPoint { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(
            coords
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for ChartPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug)]
enum Chart {
    /// `X_n^{1,b}` with coordinates `(χ^(1,b), χ^(0,1))`.
    XLine { n: u64, b: u64 },
    /// `Y_n^{1,b}` with coordinates `(χ^(1,-b-n), χ^(0,-1))`.
    YLine { n: u64, b: u64 },
    /// `X_n^{2,2k+1}` with coordinates `(χ^(0,1), χ^(1,k+1), χ^(2,2k+1))`.
    Quadric { n: u64, k: u64 },
}

impl Chart {
    fn of(s: &MonoidSpec) -> Result<Chart> {
        let unsupported = || Error::NotImplementedChart(s.to_string());
        let (a, b) = s.ab().map_err(|_| unsupported())?;
        match (s.family(), a) {
            (Family::X, 1) => Ok(Chart::XLine { n: s.n(), b }),
            (Family::Y, 1) => Ok(Chart::YLine { n: s.n(), b }),
            (Family::X, 2) => Ok(Chart::Quadric { n: s.n(), k: b / 2 }),
            _ => Err(unsupported()),
        }
    }

    fn dim(self) -> usize {
        match self {
            Chart::Quadric { .. } => 3,
            _ => 2,
        }
    }

    /// Exponents of the coordinate functions.
    fn generators(self) -> Vec<LatticePoint> {
        let i = |v: u64| BigInt::from(v);
        match self {
            Chart::XLine { b, .. } => vec![LatticePoint::m(1, i(b)), LatticePoint::m(0, 1)],
            Chart::YLine { n, b } => {
                vec![LatticePoint::m(1, -(i(b) + i(n))), LatticePoint::m(0, -1)]
            }
            Chart::Quadric { k, .. } => vec![
                LatticePoint::m(0, 1),
                LatticePoint::m(1, i(k) + 1),
                LatticePoint::m(2, 2 * i(k) + 1),
            ],
        }
    }

    fn check(self, p: &ChartPoint) -> Result<()> {
        if p.coords.len() != self.dim() {
            return Err(invalid(format!(
                "chart point {p} should have {} coordinates",
                self.dim()
            )));
        }
        if let Chart::Quadric { .. } = self {
            let c = &p.coords;
            if &c[0] * &c[2] != &c[1] * &c[1] {
                return Err(invalid(format!("{p} does not satisfy xz = y^2")));
            }
        }
        Ok(())
    }
}

fn pow(base: &BigRational, e: u64) -> BigRational {
    num_traits::pow::pow(base.clone(), e as usize)
}

/// Product of two chart points under the monoid law.
pub fn multiply_points(s: &MonoidSpec, p: &ChartPoint, q: &ChartPoint) -> Result<ChartPoint> {
    let chart = Chart::of(s)?;
    chart.check(p)?;
    chart.check(q)?;
    let (p, q) = (&p.coords, &q.coords);
    let coords = match chart {
        Chart::XLine { n, b } => vec![
            &p[0] * pow(&q[1], b) + pow(&p[1], b + n) * &q[0],
            &p[1] * &q[1],
        ],
        Chart::YLine { n, b } => vec![
            &p[0] * pow(&q[1], b + n) + pow(&p[1], b) * &q[0],
            &p[1] * &q[1],
        ],
        Chart::Quadric { n, k } => {
            let two = BigRational::from_integer(2.into());
            vec![
                &p[0] * &q[0],
                &p[1] * pow(&q[0], k + 1) + pow(&p[0], n + k + 1) * &q[1],
                &p[2] * pow(&q[0], 2 * k + 1)
                    + two * pow(&p[0], n + k) * &p[1] * pow(&q[0], k) * &q[1]
                    + pow(&p[0], 2 * n + 2 * k + 1) * &q[2],
            ]
        }
    };
    let out = ChartPoint::new(coords);
    chart
        .check(&out)
        .map_err(|e| Error::Consistency(format!("product left the chart: {e}")))?;
    Ok(out)
}

/// Value of the monomial `χ^u` (with `u` in the monoid's cone) at a chart
/// point, written as a polynomial in the chart coordinates.
pub fn monomial_at(s: &MonoidSpec, u: &LatticePoint, p: &ChartPoint) -> Result<BigRational> {
    let chart = Chart::of(s)?;
    chart.check(p)?;
    if !cone_of_spec(s).contains(u) {
        return Err(invalid(format!("{u} is not in the cone of {s}")));
    }
    let c = &p.coords;
    let (a, b) = (u.x(), u.y());
    let value = match chart {
        Chart::XLine { b: beta, .. } => {
            rational_pow(&c[0], a)? * rational_pow(&c[1], &(b - a * BigInt::from(beta)))?
        }
        Chart::YLine { n, b: beta } => {
            let e = -b - a * (BigInt::from(beta) + BigInt::from(n));
            rational_pow(&c[0], a)? * rational_pow(&c[1], &e)?
        }
        Chart::Quadric { k, .. } => {
            let period = BigInt::from(2 * k + 1);
            let j = a / 2;
            let rest = b - &period * &j;
            if (a % 2u32).is_zero() {
                rational_pow(&c[2], &j)? * rational_pow(&c[0], &rest)?
            } else {
                let e = rest - BigInt::from(k + 1);
                &c[1] * rational_pow(&c[2], &j)? * rational_pow(&c[0], &e)?
            }
        }
    };
    Ok(value)
}

/// The unit element `(0, 1)` of `G_n` in chart coordinates.
pub fn chart_unit(s: &MonoidSpec) -> Result<ChartPoint> {
    let one = BigRational::one();
    chart_from_torus(s, &BigRational::zero(), &one)
}

/// Chart coordinates of the point of `G_n` where `χ^(1,0) = x` and
/// `χ^(0,1) = y`; needs `y ≠ 0`.
pub fn chart_from_torus(s: &MonoidSpec, x: &BigRational, y: &BigRational) -> Result<ChartPoint> {
    let chart = Chart::of(s)?;
    let coords = chart
        .generators()
        .iter()
        .map(|g| Ok(rational_pow(x, g.x())? * rational_pow(y, g.y())?))
        .collect::<Result<Vec<_>>>()?;
    Ok(ChartPoint::new(coords))
}
