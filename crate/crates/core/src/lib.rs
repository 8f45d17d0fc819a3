//! Representation theory of finite regular semigroups over fields of
//! characteristic zero.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: rationals, cyclotomic numbers and exact matrices.
//! * [`semigroup`]: multiplication tables, enumeration from transformations,
//!   Green's relations and J-class data.
//! * [`poset`]: the J-class order, Möbius function and chains.
//! * [`characters`]: conjugacy classes and character tables.
//! * [`rep`]: sandwich matrices, directedness, Cartan matrices, Nico's bound.
//! * [`quiver`]: the quiver of a right regular band of groups.
//! * [`constructions`]: Hsiao's ordered G-partitions, permutation groups with
//!   constants, Rees matrix semigroups.

pub mod error;
pub mod exact;
pub mod characters;
pub mod constructions;
pub mod poset;
pub mod quiver;
pub mod rep;
pub mod semigroup;

pub use error::{Error, Result};
