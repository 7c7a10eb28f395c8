//! Residues of meromorphic forms by polynomial reduction and Poincaré duality for `k[x]/f`.

mod duality;
mod forms;

pub use duality::{
    duality_e, epsilon, epsilon_unit_identity, psi, residue_inclusion_check, residue_pairing_check, theta0,
    theta0_inverse, theta0_matrix, trace_element, DualityAlgebra, Functional,
};
pub use forms::{residue, residue_of_derivative, trace_of_multiplication, MeromorphicForm};
