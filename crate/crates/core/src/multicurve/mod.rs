//! The truncated curve `R = k[x]/(f^N)` and equivariant formal group models on it.

pub(crate) mod curve;
mod model;
mod validate;

pub use curve::{Curve, CurveElem, CurveRing, TensorElem, TensorRing, TripleRing};
pub use model::{counterexample_element, Efg, Expansion, ModelKind};
pub use validate::{validate_efg, Check, CheckStatus, ValidationReport};
