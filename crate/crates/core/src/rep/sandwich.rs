use num_traits::{One, Zero};

use super::Analysis;
use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::exact::{Cyclotomic, Matrix, Rational};
use crate::semigroup::{FiniteSemigroup, JClassRecord, Subgroup};

/// The `ℓ × r` sandwich matrix of a regular J-class.
///
/// Entry `(b, a)` is `λ_b ρ_a` when that product stays in the J-class (it
/// then lies in `G_e`, stored as a local subgroup index) and `None` otherwise.
/// Read as a map it sends `kR` to the dual of `kL`.
#[derive(Clone, Debug)]
pub struct SandwichMatrix {
    pub jclass: usize,
    pub entries: Vec<Vec<Option<usize>>>,
    pub group: Subgroup,
}

pub fn sandwich_matrix(s: &FiniteSemigroup, rec: &JClassRecord) -> Result<SandwichMatrix> {
    let group = s.maximal_subgroup(rec.e)?;
    let mut entries = Vec::with_capacity(rec.ell());
    for &lambda in &rec.l_transversal {
        let mut row = Vec::with_capacity(rec.r());
        for &rho in &rec.r_transversal {
            let p = s.mul(lambda, rho);
            row.push(if rec.contains(p) {
                Some(group.to_local(p).ok_or_else(|| {
                    Error::internal(format!(
                        "sandwich entry {} lies in the J-class but not in G_e",
                        s.label(p)
                    ))
                })?)
            } else {
                None
            });
        }
        entries.push(row);
    }
    let m = SandwichMatrix {
        jclass: rec.index,
        entries,
        group,
    };
    let zero_row = m.entries.iter().any(|r| r.iter().all(Option::is_none));
    let zero_col = (0..rec.r()).any(|a| m.entries.iter().all(|r| r[a].is_none()));
    if zero_row || zero_col {
        return Err(Error::internal("sandwich matrix of a regular J-class has a zero line"));
    }
    Ok(m)
}

impl SandwichMatrix {
    pub fn ell(&self) -> usize {
        self.entries.len()
    }

    pub fn r(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    /// Substitutes a `d × d` matrix for every group entry.
    fn substitute<F: crate::exact::Field>(&self, d: usize, rep: impl Fn(usize) -> Matrix<F>) -> Matrix<F> {
        let mut out = Matrix::zeros(self.ell() * d, self.r() * d);
        for (b, row) in self.entries.iter().enumerate() {
            for (a, entry) in row.iter().enumerate() {
                if let Some(g) = entry {
                    let block = rep(*g);
                    for x in 0..d {
                        for y in 0..d {
                            out[(b * d + x, a * d + y)] = block[(x, y)].clone();
                        }
                    }
                }
            }
        }
        out
    }

    /// Rank of the rational matrix obtained by replacing each entry with its
    /// left regular permutation matrix.
    pub fn expansion_rank(&self) -> usize {
        let g = &self.group.group;
        let n = g.order();
        let regular = |h: usize| {
            Matrix::from_fn(n, n, |x, y| {
                if x == g.mul(h, y) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
        };
        self.substitute(n, regular).rank()
    }

    /// Left invertible over `kG`: the expansion has full column rank. Over a
    /// semisimple group algebra an injective column map splits.
    pub fn is_left_invertible(&self) -> bool {
        self.expansion_rank() == self.r() * self.group.group.order()
    }

    /// Dimension of the simple module with this apex attached to the
    /// irreducible `v`; `None` when `v` is not linear (matrices needed).
    pub fn simple_dimension(&self, table: &CharacterTable, v: usize) -> Option<usize> {
        if table.degree(v) != 1 {
            return None;
        }
        Some(self.simple_dimension_with(1, |g| Matrix::from_rows(vec![vec![table.value(v, g).clone()]])))
    }

    /// As [`Self::simple_dimension`], from explicit `d × d` representing matrices.
    pub fn simple_dimension_with(&self, d: usize, rep: impl Fn(usize) -> Matrix<Cyclotomic>) -> usize {
        self.substitute(d, rep).rank()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDirectedness {
    pub jclass: usize,
    pub expansion_rank: usize,
    pub full_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectednessReport {
    pub directed: bool,
    pub classes: Vec<ClassDirectedness>,
}

/// Directed iff every sandwich matrix is left invertible over its group algebra.
pub fn is_directed(an: &Analysis) -> Result<DirectednessReport> {
    let mut classes = Vec::new();
    for rec in &an.records {
        let m = sandwich_matrix(&an.semigroup, rec)?;
        classes.push(ClassDirectedness {
            jclass: rec.index,
            expansion_rank: m.expansion_rank(),
            full_rank: m.r() * m.group.group.order(),
        });
    }
    Ok(DirectednessReport {
        directed: classes.iter().all(|c| c.expansion_rank == c.full_rank),
        classes,
    })
}
