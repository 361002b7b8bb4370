//! Monoid structures on toric surfaces: the classified specs, their
//! comultiplications, invariants, quotients, boundaries and point charts.

mod boundary;
mod chart;
mod classify;
mod comult;
mod invariants;
mod spec;
mod verify;

pub use boundary::{boundary, BoundaryInfo};
pub use chart::{chart_from_torus, chart_unit, monomial_at, multiply_points, ChartPoint};
pub use classify::{classify_cone, restriction_condition, restriction_witness, RestrictionFailure};
pub use comult::{
    comult, comult_from_root_pair, counit, identify_root_pair, ComultRule, Orientation,
    RootPairStructure,
};
pub use invariants::{distinguish, invariant_lk_closed, invariant_lk_oracle};
pub use spec::{
    cone_of_spec, opposite, opposite_witness, quotient_by_center, Family, MonoidCone, MonoidSpec,
};
pub use verify::{
    verify_bialgebra, verify_comultiplication, Check, Status, VerificationReport, Witness,
};
