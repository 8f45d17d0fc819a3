//! Example families: ordered G-partitions, permutation groups with the
//! constant maps adjoined, Rees matrix semigroups with an identity.

mod gbar;
mod hsiao;
mod rees;

pub use gbar::{
    gbar_analysis, gbar_quiver, orbitals, perm_group_with_constants, permutation_group, rank,
    representation_type, RepresentationType,
};
pub use hsiao::{
    hsiao_quiver_closed_form, hsiao_quiver_general, hsiao_semigroup, set_partitions, HsiaoSemigroup,
    OrderedGPartition,
};
pub use rees::{rees_with_identity, ReesSpec};
