//! Finite semigroups given by a complete multiplication table.
//!
//! Elements are `0..order`. The table is dense and row-major with the left
//! factor selecting the row. Everything downstream (Green structure,
//! representation theory, quivers) works on this one representation.

mod green;
mod group;
mod io;
mod transform;

use std::collections::HashSet;

pub use green::{ideal_slices, GreenData, IdealSlice, JClassRecord, Partition};
pub use group::{Group, Subgroup};
pub use io::{GeneratorSpec, SemigroupFile};
pub use transform::{enumerate_from_generators, Transformations, DEFAULT_ELEMENT_CAP};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<u32>,
    identity: Option<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteSemigroup {
    /// Validates range, associativity and the identity claim.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        identity: Option<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::input("order: a semigroup needs at least one element"));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::input(format!(
                    "table[{a}]: row has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(Error::input(format!(
                        "table[{a}][{b}] = {v} is out of range 0..{order}"
                    )));
                }
                flat.push(v as u32);
            }
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(Error::input(format!(
                    "labels: {} labels for {order} elements",
                    l.len()
                )));
            }
        }
        let s = FiniteSemigroup {
            order,
            table: flat,
            identity: None,
            labels,
        };
        s.check_associative()?;
        let s = match identity {
            None => s,
            Some(i) => s.with_identity(i)?,
        };
        Ok(s)
    }

    /// Caller guarantees the table is associative and in range.
    pub(crate) fn from_flat_unchecked(
        order: usize,
        table: Vec<u32>,
        identity: Option<usize>,
        labels: Option<Vec<String>>,
    ) -> Self {
        debug_assert_eq!(table.len(), order * order);
        FiniteSemigroup {
            order,
            table,
            identity,
            labels,
        }
    }

    fn with_identity(mut self, i: usize) -> Result<Self> {
        if i >= self.order {
            return Err(Error::input(format!(
                "identity: {i} is out of range 0..{}",
                self.order
            )));
        }
        if let Some(x) = (0..self.order).find(|&x| self.mul(i, x) != x || self.mul(x, i) != x) {
            return Err(Error::input(format!(
                "identity: element {i} is not an identity (fails against element {x})"
            )));
        }
        self.identity = Some(i);
        Ok(self)
    }

    /// First failing triple in lexicographic order.
    pub fn check_associative(&self) -> Result<()> {
        for a in 0..self.order {
            for b in 0..self.order {
                let ab = self.mul(a, b);
                for c in 0..self.order {
                    let left = self.mul(ab, c);
                    let right = self.mul(a, self.mul(b, c));
                    if left != right {
                        return Err(Error::NotAssociative {
                            a,
                            b,
                            c,
                            left,
                            right,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label, or its index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.order, "one label per element");
        self.labels = Some(labels);
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// The table as nested rows.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    /// The unique idempotent among the positive powers of `s`.
    pub fn omega_power(&self, s: usize) -> usize {
        let mut x = s;
        loop {
            if self.is_idempotent(x) {
                return x;
            }
            x = self.mul(x, s);
        }
    }

    /// An element acting as a two-sided identity, if there is one.
    pub fn find_identity(&self) -> Option<usize> {
        self.elements()
            .find(|&i| self.elements().all(|x| self.mul(i, x) == x && self.mul(x, i) == x))
    }

    /// Every element has a weak inverse `t` with `s t s = s`.
    pub fn is_regular(&self) -> bool {
        self.first_non_regular().is_none()
    }

    pub fn first_non_regular(&self) -> Option<usize> {
        self.elements()
            .find(|&s| !self.elements().any(|t| self.mul(self.mul(s, t), s) == s))
    }

    /// Right regular band of groups: `s^ω s = s` and `s^ω t s^ω = t s^ω`.
    pub fn is_rrbg(&self) -> bool {
        self.first_rrbg_violation().is_none()
    }

    /// A pair `(s, t)` witnessing a failed identity (`t = s` for the first one).
    pub fn first_rrbg_violation(&self) -> Option<(usize, usize)> {
        let omega: Vec<usize> = self.elements().map(|s| self.omega_power(s)).collect();
        for s in self.elements() {
            let w = omega[s];
            if self.mul(w, s) != s {
                return Some((s, s));
            }
            for t in self.elements() {
                let tw = self.mul(t, w);
                if self.mul(w, tw) != tw {
                    return Some((s, t));
                }
            }
        }
        None
    }

    /// Same elements with the product `a ∘ b = b a`.
    pub fn opposite(&self) -> Self {
        let n = self.order;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.table[b * n + a];
            }
        }
        FiniteSemigroup {
            order: n,
            table,
            identity: self.identity,
            labels: self.labels.clone(),
        }
    }

    /// Adds a new element `order` acting as the identity. Never done implicitly.
    pub fn with_identity_adjoined(&self) -> Self {
        let n = self.order;
        let m = n + 1;
        let mut table = vec![0u32; m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] = match (a == n, b == n) {
                    (true, _) => b as u32,
                    (_, true) => a as u32,
                    _ => self.table[a * n + b],
                };
            }
        }
        let labels = self.labels.clone().map(|mut l| {
            l.push("1".to_string());
            l
        });
        FiniteSemigroup {
            order: m,
            table,
            identity: Some(n),
            labels,
        }
    }

    /// Induced sub-table on `elements`; fails if they are not closed.
    pub fn subsemigroup(&self, elements: &[usize], identity: Option<usize>) -> Result<Subsemigroup> {
        let mut embedding = elements.to_vec();
        embedding.sort_unstable();
        embedding.dedup();
        if embedding.is_empty() {
            return Err(Error::precondition("empty subsemigroup"));
        }
        let members: HashSet<usize> = embedding.iter().copied().collect();
        let local = |p: usize| embedding.binary_search(&p).ok();
        let m = embedding.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &embedding {
            for &b in &embedding {
                let p = self.mul(a, b);
                if !members.contains(&p) {
                    return Err(Error::precondition(format!(
                        "subset not closed: {} * {} = {} lies outside",
                        self.label(a),
                        self.label(b),
                        self.label(p)
                    )));
                }
                table.push(local(p).unwrap() as u32);
            }
        }
        let identity = match identity {
            Some(i) => Some(local(i).ok_or_else(|| {
                Error::precondition(format!("identity {i} is not in the subset"))
            })?),
            None => None,
        };
        let labels = self
            .labels
            .as_ref()
            .map(|l| embedding.iter().map(|&p| l[p].clone()).collect());
        let semigroup = FiniteSemigroup::from_flat_unchecked(m, table, identity, labels);
        if let Some(i) = identity {
            if (0..m).any(|x| semigroup.mul(i, x) != x || semigroup.mul(x, i) != x) {
                return Err(Error::precondition("claimed identity does not act as one"));
            }
        }
        Ok(Subsemigroup {
            semigroup,
            embedding,
        })
    }

    /// The monoid `eSe` with identity `e`.
    pub fn local_monoid(&self, e: usize) -> Result<Subsemigroup> {
        self.require_idempotent(e)?;
        let elements: HashSet<usize> = self
            .elements()
            .map(|s| self.mul(self.mul(e, s), e))
            .collect();
        let elements: Vec<usize> = elements.into_iter().collect();
        self.subsemigroup(&elements, Some(e))
    }

    /// The maximal subgroup at `e`: its H-class with the inherited product.
    pub fn maximal_subgroup(&self, e: usize) -> Result<Subgroup> {
        self.require_idempotent(e)?;
        // G_e is the group of units of eSe.
        let local = self.local_monoid(e)?;
        let m = &local.semigroup;
        let one = m.identity.expect("local monoid has an identity");
        let units: Vec<usize> = m
            .elements()
            .filter(|&x| m.elements().any(|y| m.mul(x, y) == one && m.mul(y, x) == one))
            .map(|x| local.embedding[x])
            .collect();
        let sub = self.subsemigroup(&units, Some(e))?;
        let group = Group::from_semigroup(sub.semigroup)?;
        Ok(Subgroup {
            group,
            embedding: sub.embedding,
        })
    }

    pub(crate) fn require_idempotent(&self, e: usize) -> Result<()> {
        if e >= self.order {
            return Err(Error::input(format!("element {e} is out of range")));
        }
        if !self.is_idempotent(e) {
            return Err(Error::precondition(format!(
                "element {} is not idempotent",
                self.label(e)
            )));
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// A subsemigroup together with its embedding into the parent
/// (`embedding[local] = parent`, sorted increasingly).
#[derive(Clone, Debug)]
pub struct Subsemigroup {
    pub semigroup: FiniteSemigroup,
    pub embedding: Vec<usize>,
}

impl Subsemigroup {
    pub fn to_parent(&self, local: usize) -> usize {
        self.embedding[local]
    }

    pub fn to_local(&self, parent: usize) -> Option<usize> {
        self.embedding.binary_search(&parent).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cyclic(n: usize) -> FiniteSemigroup {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteSemigroup::from_table(table, Some(0), None).unwrap()
    }

    #[test]
    fn rejects_out_of_range_and_non_associative() {
        let err = FiniteSemigroup::from_table(vec![vec![0, 2], vec![1, 0]], None, None).unwrap_err();
        assert!(err.to_string().contains("table[0][1]"), "{err}");
        // x*y = 1 - x is not associative on {0,1}
        let err =
            FiniteSemigroup::from_table(vec![vec![1, 1], vec![0, 0]], None, None).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { a: 0, b: 0, c: 0, .. }), "{err}");
    }

    #[test]
    fn rejects_false_identity() {
        let err = FiniteSemigroup::from_table(vec![vec![0, 0], vec![0, 1]], Some(0), None)
            .unwrap_err();
        assert!(err.to_string().contains("identity"));
    }

    #[test]
    fn omega_power_in_cyclic_group() {
        let c6 = cyclic(6);
        assert_eq!(c6.omega_power(2), 0);
        assert_eq!(c6.omega_power(0), 0);
    }

    #[test]
    fn regularity() {
        assert!(cyclic(5).is_regular());
        // null semigroup {a, 0} with a*a = 0
        let null = FiniteSemigroup::from_table(vec![vec![1, 1], vec![1, 1]], None, None).unwrap();
        assert!(!null.is_regular());
        assert_eq!(null.first_non_regular(), Some(0));
        // any band
        let left_zero =
            FiniteSemigroup::from_table(vec![vec![0, 0], vec![1, 1]], None, None).unwrap();
        assert!(left_zero.is_regular());
    }

    #[test]
    fn opposite_is_an_involution() {
        let left_zero =
            FiniteSemigroup::from_table(vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]], None, None)
                .unwrap();
        let right_zero = left_zero.opposite();
        assert!(right_zero.elements().all(|a| right_zero
            .elements()
            .all(|b| right_zero.mul(a, b) == b)));
        assert_eq!(right_zero.opposite(), left_zero);
        assert_eq!(cyclic(4).opposite(), cyclic(4));
        assert!(right_zero.is_rrbg());
        assert!(!left_zero.is_rrbg());
    }

    #[test]
    fn maximal_subgroup_of_a_group_is_itself() {
        let c4 = cyclic(4);
        let g = c4.maximal_subgroup(0).unwrap();
        assert_eq!(g.group.order(), 4);
        assert_eq!(g.embedding, vec![0, 1, 2, 3]);
        assert!(c4.maximal_subgroup(1).is_err());
    }

    #[test]
    fn adjoined_identity() {
        let z = FiniteSemigroup::from_table(vec![vec![0]], None, None).unwrap();
        let m = z.with_identity_adjoined();
        assert_eq!(m.order(), 2);
        assert_eq!(m.identity(), Some(1));
        assert!(m.check_associative().is_ok());
    }
}
