use num_traits::{One, Zero};

use super::Analysis;
use crate::error::{Error, Result};
use crate::exact::{nilpotency_index_with, Matrix, Rational};

/// The map from `kS` onto `kG_1 × ⋯ × kG_n`, `s ↦ (s e_i)_i` with zero
/// components where `s` is not above `J_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleQuotientData {
    /// `components[s][i]`: local index of `s e_i` in `G_i`, if `s ≥_J J_i`.
    pub components: Vec<Vec<Option<usize>>>,
    pub total_dim: usize,
    pub kernel_dim: usize,
    /// `None` if the kernel is not nilpotent.
    pub nilpotency_index: Option<usize>,
}

pub fn semisimple_quotient(an: &Analysis) -> Result<SemisimpleQuotientData> {
    an.require_rrbg()?;
    an.require_monoid()?;
    let s = &an.semigroup;
    let nj = an.num_j_classes();
    let components: Vec<Vec<Option<usize>>> = s
        .elements()
        .map(|x| {
            (0..nj)
                .map(|i| {
                    if !an.green.j_leq(i, an.green.j_class_of(x)) {
                        return Ok(None);
                    }
                    let p = s.mul(x, an.records[i].e);
                    an.subgroups[i].to_local(p).map(Some).ok_or_else(|| {
                        Error::internal(format!("{} e_{i} is not in G_{i}", s.label(x)))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    for x in s.elements() {
        for y in s.elements() {
            let xy = s.mul(x, y);
            for i in 0..nj {
                let expected = match (components[x][i], components[y][i]) {
                    (Some(a), Some(b)) => Some(an.subgroups[i].group.mul(a, b)),
                    _ => None,
                };
                if components[xy][i] != expected {
                    return Err(Error::internal(format!(
                        "quotient map is not multiplicative at ({}, {})",
                        s.label(x),
                        s.label(y)
                    )));
                }
            }
        }
    }

    let offsets: Vec<usize> = an
        .subgroups
        .iter()
        .scan(0, |acc, g| {
            let o = *acc;
            *acc += g.group.order();
            Some(o)
        })
        .collect();
    let total_dim: usize = an.subgroups.iter().map(|g| g.group.order()).sum();
    let psi = Matrix::from_fn(total_dim, s.order(), |row, x| {
        let i = offsets.iter().rposition(|&o| o <= row).unwrap();
        if components[x][i] == Some(row - offsets[i]) {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let kernel = psi.nullspace();
    let kernel_dim = kernel.len();
    if kernel_dim + psi.rank() != s.order() {
        return Err(Error::internal("rank and nullity do not add up"));
    }
    let n = s.order();
    let product = |a: &[Rational], b: &[Rational]| {
        let mut out = vec![Rational::zero(); n];
        for (x, ax) in a.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (y, by) in b.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                out[s.mul(x, y)] += ax * by;
            }
        }
        out
    };
    let nilpotency_index = nilpotency_index_with(&kernel, n, kernel_dim + 1, product);
    Ok(SemisimpleQuotientData {
        components,
        total_dim,
        kernel_dim,
        nilpotency_index,
    })
}
