//! Exact scalars and linear algebra: rationals, cyclotomic numbers and dense
//! matrices with deterministic elimination.

mod cyclotomic;
mod matrix;

pub use cyclotomic::{cyclotomic_polynomial, rat, totient, Cyclotomic, Rational};
pub use matrix::{nilpotency_index, nilpotency_index_with, Field, Matrix, RowSpace};

/// `ζ_m^e` in canonical form.
pub fn cyclo(m: u32, e: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(m, e)
}
