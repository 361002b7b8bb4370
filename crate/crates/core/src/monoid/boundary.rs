use serde::{Deserialize, Serialize};

use super::spec::{Family, MonoidSpec};
use crate::error::{invalid, Error, Result};

/// Structure of the complement of the unit group, an affine line.
///
/// The subgroup `{(0, τ)}` of `G_n` acts on a boundary point by `τ^left_weight`
/// from the left and `τ^right_weight` from the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundaryInfo {
    pub left_weight: u64,
    pub right_weight: u64,
    /// All boundary products vanish: the line is an ideal with a zero.
    pub has_zero: bool,
    /// The `b = 0` degeneration where boundary points are idempotent.
    pub idempotent_line: bool,
}

pub fn boundary(s: &MonoidSpec) -> Result<BoundaryInfo> {
    if s.is_group() {
        return Err(Error::NotApplicable(format!(
            "{s} is a group and has no boundary"
        )));
    }
    let (a, b) = s.ab()?;
    let left = a
        .checked_mul(s.n())
        .and_then(|an| an.checked_add(b))
        .ok_or_else(|| invalid("weight overflows u64"))?;
    let info = BoundaryInfo {
        left_weight: left,
        right_weight: b,
        has_zero: b > 0,
        idempotent_line: b == 0,
    };
    Ok(match s.family() {
        Family::Y => BoundaryInfo {
            left_weight: info.right_weight,
            right_weight: info.left_weight,
            ..info
        },
        _ => info,
    })
}
