//! Divisors on the curve: sums, norm generators, convolution, containment, points towers,
//! moments and nilpotent perturbations.

mod core;
mod expr;
mod moments;
mod points;

pub use self::core::{
    contains, convolution, difference_at, divisor_sum, euler_class, fd_norm, full_divisor, full_set_divisor,
    full_set_norm, generates_same_ideal, is_nilpotent, perturb, point_divisor, rank_over, regular_before_truncation,
    restrict_generator, subtract, thom_generator, translate_divisor, vanishes_on, Containment, Divisor,
    NILPOTENCE_BOUND,
};
pub use expr::{parse_character, parse_divisor};
pub use moments::{moments, restricted_basis, MomentVector};
pub use points::{points_scheme, PointsScheme};
