//! Quadratic Cremona maps of the shape plane and the transforms of curves
//! under them.

mod maps;
mod multiplicity;
mod point;

pub use maps::{
    algebraic_transform, apply_map, heron_map, inverse_heron_map, proper_transform,
    proper_transform_discover, standard_quadratic, swap_map, ExceptionalLine, QuadMap,
};
pub use multiplicity::{algebraic_multiplicity, check_transform_multiplicities};
pub use point::{GatePoint, ProjPoint};
