//! The `v_n`/`w_n` calculus, transfer elements `t(U, φ)`, the Burnside map `η` and the Mackey system `{k_B}`.

mod element;
mod mackey;
mod report;
mod series;

pub use element::{
    eta_burnside, product_type_check, split_idempotents, transfer_element, transfer_ideal, transfer_quotient,
    transfer_theorem_suite,
};
pub use mackey::{mackey_build, mackey_verify, MackeyData};
pub use report::{AxiomCheck, SuiteReport};
pub use series::{
    cocycle, coordinate_invariance, negation_rule, series_identities, v_minus_one, vn_at_point, vn_at_value,
    vn_series, Cocycle, CoordinateChange, VnSeries,
};
