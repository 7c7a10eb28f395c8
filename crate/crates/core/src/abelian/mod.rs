//! Finite abelian groups, subgroup lattices, Smith presentations and the Burnside ring.

mod burnside;
mod group;
mod subgroup;

pub use burnside::{burnside_mul, BurnsideElement};
pub use group::{FinAbGroup, GroupElement};
pub use subgroup::{
    presentations_enumerate, quotient, smith_presentation, subgroups_all, subgroups_all_bounded, Presentation,
    Quotient, Subgroup, DEFAULT_GROUP_BOUND,
};

/// `ann(B) ≤ A*` for `B ≤ A`.
pub fn annihilator(b: &Subgroup) -> Subgroup {
    b.annihilator()
}
