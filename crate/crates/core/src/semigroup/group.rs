use super::FiniteSemigroup;
use crate::error::{Error, Result};

/// A finite group: a semigroup table with an identity and inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    table: FiniteSemigroup,
    inverse: Vec<usize>,
}

impl Group {
    /// Checks the group axioms. A missing identity marker is looked up.
    pub fn from_semigroup(s: FiniteSemigroup) -> Result<Self> {
        let one = match s.identity() {
            Some(i) => i,
            None => s
                .find_identity()
                .ok_or_else(|| Error::precondition("not a group: no identity element"))?,
        };
        let mut inverse = Vec::with_capacity(s.order());
        for g in s.elements() {
            let inv = s
                .elements()
                .find(|&h| s.mul(g, h) == one && s.mul(h, g) == one)
                .ok_or_else(|| {
                    Error::precondition(format!("not a group: {} has no inverse", s.label(g)))
                })?;
            inverse.push(inv);
        }
        let mut table = s;
        table.identity = Some(one);
        Ok(Group { table, inverse })
    }

    /// The cyclic group `Z/n` written additively, `0` the identity.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let flat = (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect();
        let table = FiniteSemigroup::from_flat_unchecked(n, flat, Some(0), None);
        Group {
            table,
            inverse: (0..n).map(|g| (n - g) % n).collect(),
        }
    }

    pub fn trivial() -> Self {
        Group::cyclic(1)
    }

    /// Direct product, element `(a, b)` at index `a * |H| + b`.
    pub fn direct_product(&self, other: &Group) -> Group {
        let (n, m) = (self.order(), other.order());
        let size = n * m;
        let mut flat = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                let a = self.mul(x / m, y / m);
                let b = other.mul(x % m, y % m);
                flat.push((a * m + b) as u32);
            }
        }
        let one = self.identity() * m + other.identity();
        let table = FiniteSemigroup::from_flat_unchecked(size, flat, Some(one), None);
        let inverse = (0..size)
            .map(|x| self.inv(x / m) * m + other.inv(x % m))
            .collect();
        Group { table, inverse }
    }

    /// `G^op`, same elements, `a · b` read as `b a`.
    pub fn opposite(&self) -> Group {
        Group {
            table: self.table.opposite(),
            inverse: self.inverse.clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.mul(a, b)
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn identity(&self) -> usize {
        self.table.identity().expect("groups carry their identity")
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_commutative()
    }

    pub fn element_order(&self, g: usize) -> usize {
        let one = self.identity();
        let mut x = g;
        let mut k = 1;
        while x != one {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|g| self.element_order(g))
            .fold(1, num_integer::lcm)
    }

    /// `x⁻¹ g x`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), g), x)
    }

    pub fn power(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity(), |acc, _| self.mul(acc, g))
    }

    /// Checks that `map` (indexed by elements of `self`) is a bijective
    /// homomorphism onto `target`.
    pub fn is_isomorphism(&self, target: &Group, map: &[usize]) -> bool {
        if map.len() != self.order() || target.order() != self.order() {
            return false;
        }
        let mut seen = vec![false; target.order()];
        for &y in map {
            if y >= target.order() || std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        self.elements().all(|a| {
            self.elements()
                .all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b]))
        })
    }
}

/// A group sitting inside a larger semigroup. `embedding[local] = parent`.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: Group,
    pub embedding: Vec<usize>,
}

impl Subgroup {
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

    #[test]
    fn cyclic_and_products() {
        let c6 = Group::cyclic(6);
        assert_eq!(c6.element_order(2), 3);
        assert_eq!(c6.exponent(), 6);
        let v4 = Group::cyclic(2).direct_product(&Group::cyclic(2));
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.exponent(), 2);
        assert!(v4.is_abelian());
        assert!(Group::from_semigroup(v4.semigroup().clone()).is_ok());
    }

    #[test]
    fn rejects_non_groups() {
        let band = FiniteSemigroup::from_table(vec![vec![0, 0], vec![0, 1]], None, None).unwrap();
        assert!(Group::from_semigroup(band).is_err());
    }

    #[test]
    fn isomorphism_check() {
        let c3 = Group::cyclic(3);
        assert!(c3.is_isomorphism(&c3, &[0, 2, 1]));
        assert!(!c3.is_isomorphism(&c3, &[0, 1, 1]));
        assert!(!c3.is_isomorphism(&c3, &[1, 2, 0]));
    }
}
