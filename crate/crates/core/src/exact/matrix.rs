//! Dense matrices over exact fields.
//!
//! Elimination always pivots on the first nonzero entry in column order, so
//! results (including nullspace bases) are reproducible across runs.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Cyclotomic, Rational};

/// Scalars that Gaussian elimination can work over.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn inverse(&self) -> Self;
    /// `self -= a * b`
    fn sub_mul(&mut self, a: &Self, b: &Self);
    /// `self *= a`
    fn scale(&mut self, a: &Self);
}

impl Field for Rational {
    fn inverse(&self) -> Self {
        self.recip()
    }
    fn sub_mul(&mut self, a: &Self, b: &Self) {
        *self -= a * b;
    }
    fn scale(&mut self, a: &Self) {
        *self *= a;
    }
}

impl Field for Cyclotomic {
    fn inverse(&self) -> Self {
        self.inv()
    }
    fn sub_mul(&mut self, a: &Self, b: &Self) {
        *self = &*self - &(a * b);
    }
    fn scale(&mut self, a: &Self) {
        *self = &*self * a;
    }
}

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.sub_mul(&-a.clone(), b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m[(lead, col)].inverse();
            for c in col..m.cols {
                m[(lead, c)].scale(&inv);
            }
            for r in 0..m.rows {
                if r == lead || m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].clone();
                for c in col..m.cols {
                    let pivot_entry = m[(lead, c)].clone();
                    m[(r, c)].sub_mul(&f, &pivot_entry);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : M v = 0}`, one vector per free column, in column order.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![F::zero(); self.cols];
                v[fc] = F::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(row, fc)].clone();
                }
                v
            })
            .collect()
    }

    /// Some solution of `M x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows, "dimension mismatch");
        let augmented = Self::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let (red, pivots) = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = red[(row, self.cols)].clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let neg_a = -a.clone();
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)].sub_mul(&neg_a, b);
                    }
                }
            }
        }
        out
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            let row: Vec<_> = self.data[r * self.cols..(r + 1) * self.cols]
                .iter()
                .map(|x| format!("{x:?}"))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained row space, kept in reduced echelon form.
#[derive(Clone, Debug)]
pub struct RowSpace<F> {
    dim: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> RowSpace<F> {
    pub fn new(dim: usize) -> Self {
        RowSpace {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }

    /// Reduces `v` against the current rows.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row).skip(p) {
                if !y.is_zero() {
                    x.sub_mul(&f, y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: Vec<F>) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns whether it enlarged the space.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inverse();
        for x in v.iter_mut().skip(p) {
            x.scale(&inv);
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v).skip(p) {
                if !y.is_zero() {
                    x.sub_mul(&f, y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }
}

/// Least `N` such that every product of `N` elements of the span of
/// `generators` vanishes, where products are formed with `mul`.
///
/// Works level by level: the level-`k+1` space is spanned by products of a
/// level-`k` basis vector with a generator. Returns `None` when level
/// `max_len + 1` is still nonzero, i.e. the span is not nilpotent.
pub fn nilpotency_index_with<F: Field>(
    generators: &[Vec<F>],
    dim: usize,
    max_len: usize,
    mul: impl Fn(&[F], &[F]) -> Vec<F>,
) -> Option<usize> {
    let mut first = RowSpace::new(dim);
    for g in generators {
        first.insert(g.clone());
    }
    if first.rank() == 0 {
        return Some(1);
    }
    let gens = first.basis().to_vec();
    let mut level = first;
    for len in 2..=max_len + 1 {
        let mut next = RowSpace::new(dim);
        for a in level.basis() {
            for b in &gens {
                next.insert(mul(a, b));
                if next.rank() == dim {
                    break;
                }
            }
        }
        if next.rank() == 0 {
            return Some(len);
        }
        level = next;
    }
    None
}

/// Nilpotency index of the span of square matrices (see [`nilpotency_index_with`]).
pub fn nilpotency_index<F: Field>(generators: &[Matrix<F>]) -> Option<usize> {
    let Some(n) = generators.first().map(Matrix::rows) else {
        return Some(1);
    };
    assert!(
        generators.iter().all(|g| g.rows() == n && g.cols() == n),
        "generators must be square of equal size"
    );
    let flat: Vec<Vec<F>> = generators.iter().map(|g| g.as_slice().to_vec()).collect();
    let unflatten = |v: &[F]| Matrix {
        rows: n,
        cols: n,
        data: v.to_vec(),
    };
    // A nilpotent algebra of n×n matrices satisfies A^n = 0.
    nilpotency_index_with(&flat, n * n, n, |a, b| {
        (&unflatten(a) * &unflatten(b)).data
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_has_full_rank() {
        let m = Matrix::<Rational>::identity(4);
        assert_eq!(m.rank(), 4);
        assert!(m.nullspace().is_empty());
    }

    #[test]
    fn all_ones_rank_one() {
        let m = q(&[&[1, 1], &[1, 1]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.nullspace(), vec![vec![rat(-1, 1), rat(1, 1)]]);
    }

    #[test]
    fn regular_expansion_of_rees_sandwich_has_rank_three() {
        // e -> I_2, g -> swap
        let m = q(&[
            &[1, 0, 1, 0],
            &[0, 1, 0, 1],
            &[1, 0, 0, 1],
            &[0, 1, 1, 0],
        ]);
        assert_eq!(m.rank(), 3);
        for v in m.nullspace() {
            assert!(m.apply(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = q(&[&[1, 2], &[2, 4]]);
        let x = m.solve(&[rat(3, 1), rat(6, 1)]).unwrap();
        assert_eq!(m.apply(&x), vec![rat(3, 1), rat(6, 1)]);
        assert!(m.solve(&[rat(3, 1), rat(7, 1)]).is_none());
    }

    #[test]
    fn nilpotency_examples() {
        assert_eq!(nilpotency_index(&[Matrix::<Rational>::zeros(2, 2)]), Some(1));
        assert_eq!(nilpotency_index(&[q(&[&[0, 1], &[0, 0]])]), Some(2));
        assert_eq!(
            nilpotency_index(&[q(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]])]),
            Some(3)
        );
        assert_eq!(nilpotency_index(&[q(&[&[1, 0], &[0, 0]])]), None);
    }

    #[test]
    fn row_space_tracks_rank() {
        let mut s = RowSpace::new(3);
        assert!(s.insert(vec![rat(1, 1), rat(2, 1), rat(0, 1)]));
        assert!(!s.insert(vec![rat(2, 1), rat(4, 1), rat(0, 1)]));
        assert!(s.insert(vec![rat(0, 1), rat(1, 1), rat(1, 1)]));
        assert_eq!(s.rank(), 2);
        assert!(s.contains(vec![rat(1, 1), rat(3, 1), rat(1, 1)]));
    }
}
