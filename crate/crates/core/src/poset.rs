//! Finite posets over small index sets: Möbius function, covers, chains.

use crate::error::{Error, Result};
use crate::semigroup::GreenData;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    size: usize,
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Checks reflexivity, antisymmetry and transitivity.
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Self> {
        let size = leq.len();
        if leq.iter().any(|r| r.len() != size) {
            return Err(Error::input("poset relation must be square"));
        }
        let p = FinitePoset {
            size,
            leq: leq.into_iter().flatten().collect(),
        };
        for x in 0..size {
            if !p.leq(x, x) {
                return Err(Error::input(format!("not reflexive at {x}")));
            }
            for y in 0..size {
                if x != y && p.leq(x, y) && p.leq(y, x) {
                    return Err(Error::input(format!("not antisymmetric at ({x}, {y})")));
                }
                for z in 0..size {
                    if p.leq(x, y) && p.leq(y, z) && !p.leq(x, z) {
                        return Err(Error::input(format!("not transitive at ({x}, {y}, {z})")));
                    }
                }
            }
        }
        Ok(p)
    }

    /// The J-classes under `≤_J`.
    pub fn from_green(green: &GreenData) -> Self {
        let n = green.num_j_classes();
        FinitePoset {
            size: n,
            leq: (0..n * n).map(|k| green.j_leq(k / n, k % n)).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size + y]
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// `x ⋖ y`: `x < y` with nothing strictly between.
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.less(x, y) && !(0..self.size).any(|z| self.less(x, z) && self.less(z, y))
    }

    /// All covering pairs `(x, y)` with `x ⋖ y`, in index order.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        (0..n * n)
            .map(|k| (k / n, k % n))
            .filter(|&(x, y)| self.covers(x, y))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| !(0..self.size).any(|z| self.less(z, x)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| !(0..self.size).any(|z| self.less(x, z)))
            .collect()
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.size).find(|&x| (0..self.size).all(|y| self.leq(x, y)))
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.size).find(|&x| (0..self.size).all(|y| self.leq(y, x)))
    }

    /// Maximal chains, bottom to top, found depth first in index order.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for m in self.minimal_elements() {
            let mut chain = vec![m];
            self.extend_chains(&mut chain, &mut out);
        }
        out
    }

    fn extend_chains(&self, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *chain.last().unwrap();
        let ups: Vec<usize> = (0..self.size).filter(|&y| self.covers(last, y)).collect();
        if ups.is_empty() {
            out.push(chain.clone());
            return;
        }
        for y in ups {
            chain.push(y);
            self.extend_chains(chain, out);
            chain.pop();
        }
    }

    /// Number of elements in a longest chain.
    pub fn longest_chain(&self) -> usize {
        self.maximal_chains().iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn mobius(&self) -> MobiusTable {
        let n = self.size;
        // sort by number of elements below, so z < y is handled before y
        let mut by_height: Vec<usize> = (0..n).collect();
        by_height.sort_by_key(|&y| (0..n).filter(|&z| self.leq(z, y)).count());
        let mut mu = vec![0i64; n * n];
        for x in 0..n {
            for &y in &by_height {
                if !self.leq(x, y) {
                    continue;
                }
                mu[x * n + y] = if x == y {
                    1
                } else {
                    -(0..n)
                        .filter(|&z| self.leq(x, z) && self.less(z, y))
                        .map(|z| mu[x * n + z])
                        .sum::<i64>()
                };
            }
        }
        MobiusTable { size: n, mu }
    }
}

/// `μ(x, y)`; zero where `x ≰ y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusTable {
    size: usize,
    mu: Vec<i64>,
}

impl MobiusTable {
    #[inline]
    pub fn get(&self, x: usize, y: usize) -> i64 {
        self.mu[x * self.size + y]
    }

    /// Whether `Σ_{x≤z≤y} μ(x,z) = δ(x,y)` holds at every comparable pair.
    pub fn satisfies_recursion(&self, poset: &FinitePoset) -> bool {
        let n = self.size;
        (0..n).all(|x| {
            (0..n).filter(|&y| poset.leq(x, y)).all(|y| {
                let s: i64 = (0..n)
                    .filter(|&z| poset.leq(x, z) && poset.leq(z, y))
                    .map(|z| self.get(x, z))
                    .sum();
                s == i64::from(x == y)
            })
        })
    }
}
