//! The monads and distributive laws of everyday algebra, and normalizers
//! for expressions built from them.

mod expr;
mod laws;
mod monads;
mod theory;

pub use expr::{identifiers, parse_expr, Expr, Interp};
pub use laws::{
    everything_to_zero_law, identity_pseudo_law, law_add_zero, law_mult_over_add, law_mult_over_sum,
    law_point_embed, law_point_zero, law_unit_absorb, law_zero_absorb, AdHocLaw, Commutativity, LawKind, ZooLaw,
};
pub use monads::{DropLastMonoid, Zoo};
pub use theory::{normalize_expr, pretty, registered_laws, rig_series, ring3_series, Theory};
