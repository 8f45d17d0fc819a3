use std::collections::HashMap;

use super::{FiniteSemigroup, Subgroup, Subsemigroup};
use crate::error::{Error, Result};

/// Partition of `0..n`; classes are numbered by their smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl Partition {
    fn from_keys<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> Self {
        let mut seen: HashMap<K, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = Vec::new();
        for (x, k) in keys.enumerate() {
            let next = classes.len();
            let c = *seen.entry(k).or_insert(next);
            if c == next {
                classes.push(Vec::new());
            }
            classes[c].push(x);
            class_of.push(c);
        }
        Partition { classes, class_of }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// Every class of `self` lies inside one class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.classes
            .iter()
            .all(|c| c.iter().all(|&x| coarser.same(x, c[0])))
    }
}

/// Dense bit rows, one per element.
struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitRows {
            words,
            bits: vec![0; n * words],
        }
    }

    fn set(&mut self, row: usize, x: usize) {
        self.bits[row * self.words + x / 64] |= 1 << (x % 64);
    }

    fn get(&self, row: usize, x: usize) -> bool {
        self.bits[row * self.words + x / 64] >> (x % 64) & 1 == 1
    }

    fn row(&self, row: usize) -> &[u64] {
        &self.bits[row * self.words..(row + 1) * self.words]
    }

    fn or_into(&mut self, dst: usize, src: &[u64]) {
        let w = self.words;
        for (d, s) in self.bits[dst * w..(dst + 1) * w].iter_mut().zip(src) {
            *d |= s;
        }
    }
}

/// Green's relations and the order on J-classes.
#[derive(Clone, Debug)]
pub struct GreenData {
    pub r: Partition,
    pub l: Partition,
    pub j: Partition,
    pub h: Partition,
    j_leq: Vec<bool>,
    /// Linear extension of the J-order, minimal classes first.
    pub principal_order: Vec<usize>,
}

impl GreenData {
    pub fn compute(s: &FiniteSemigroup) -> Self {
        let n = s.order();
        // S¹t and tS¹
        let mut right = BitRows::new(n);
        let mut left = BitRows::new(n);
        for t in 0..n {
            right.set(t, t);
            left.set(t, t);
            for x in 0..n {
                right.set(t, s.mul(t, x));
                left.set(t, s.mul(x, t));
            }
        }
        // S¹tS¹ as the union of uS¹ over u in S¹t
        let mut ideal = BitRows::new(n);
        for t in 0..n {
            for u in 0..n {
                if left.get(t, u) {
                    let src = right.row(u).to_vec();
                    ideal.or_into(t, &src);
                }
            }
        }
        let r = Partition::from_keys((0..n).map(|t| right.row(t).to_vec()));
        let l = Partition::from_keys((0..n).map(|t| left.row(t).to_vec()));
        let j = Partition::from_keys((0..n).map(|t| ideal.row(t).to_vec()));
        let h = Partition::from_keys((0..n).map(|t| (r.class_of[t], l.class_of[t])));

        let nj = j.len();
        let mut j_leq = vec![false; nj * nj];
        for a in 0..nj {
            for b in 0..nj {
                j_leq[a * nj + b] = ideal.get(j.classes[b][0], j.classes[a][0]);
            }
        }
        let principal_order = linear_extension(nj, |a, b| j_leq[a * nj + b]);
        GreenData {
            r,
            l,
            j,
            h,
            j_leq,
            principal_order,
        }
    }

    pub fn num_j_classes(&self) -> usize {
        self.j.len()
    }

    /// `J_a ≤ J_b`.
    pub fn j_leq(&self, a: usize, b: usize) -> bool {
        self.j_leq[a * self.j.len() + b]
    }

    pub fn j_less(&self, a: usize, b: usize) -> bool {
        a != b && self.j_leq(a, b)
    }

    /// `s ≤_J t` on elements.
    pub fn element_j_leq(&self, s: usize, t: usize) -> bool {
        self.j_leq(self.j.class_of[s], self.j.class_of[t])
    }

    pub fn j_class_of(&self, s: usize) -> usize {
        self.j.class_of[s]
    }

    /// Position of each J-class in the principal order.
    pub fn principal_position(&self) -> Vec<usize> {
        let mut pos = vec![0; self.principal_order.len()];
        for (i, &c) in self.principal_order.iter().enumerate() {
            pos[c] = i;
        }
        pos
    }

    /// The J-order as a relation matrix, `leq[a][b] = J_a ≤ J_b`.
    pub fn j_order_matrix(&self) -> Vec<Vec<bool>> {
        let nj = self.j.len();
        (0..nj)
            .map(|a| (0..nj).map(|b| self.j_leq(a, b)).collect())
            .collect()
    }
}

/// Lexicographically smallest topological order: at each step the smallest
/// index all of whose strict predecessors are placed.
pub(crate) fn linear_extension(n: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut placed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let next = (0..n)
            .find(|&c| !placed[c] && (0..n).all(|d| d == c || placed[d] || !leq(d, c)))
            .expect("a partial order has a minimal unplaced element");
        placed[next] = true;
        out.push(next);
    }
    out
}

/// One regular J-class in Rees coordinates.
#[derive(Clone, Debug)]
pub struct JClassRecord {
    pub index: usize,
    pub elements: Vec<usize>,
    pub idempotents: Vec<usize>,
    /// Smallest idempotent of the class.
    pub e: usize,
    /// H-class of `e`, sorted.
    pub max_subgroup: Vec<usize>,
    /// One element of the R-class of `e` per L-class of J.
    pub l_transversal: Vec<usize>,
    /// One element of the L-class of `e` per R-class of J.
    pub r_transversal: Vec<usize>,
}

impl JClassRecord {
    pub fn new(s: &FiniteSemigroup, green: &GreenData, index: usize) -> Result<Self> {
        let elements = green
            .j
            .classes
            .get(index)
            .ok_or_else(|| Error::input(format!("J-class {index} does not exist")))?
            .clone();
        let idempotents: Vec<usize> = elements
            .iter()
            .copied()
            .filter(|&x| s.is_idempotent(x))
            .collect();
        let &e = idempotents.first().ok_or_else(|| {
            Error::precondition(format!(
                "J-class {index} (containing {}) is not regular",
                s.label(elements[0])
            ))
        })?;
        let max_subgroup = green.h.classes[green.h.class_of[e]].clone();

        let pick = |candidates: Vec<usize>| -> usize {
            candidates
                .iter()
                .copied()
                .find(|&x| s.is_idempotent(x))
                .unwrap_or(candidates[0])
        };
        let mut l_classes: Vec<usize> = elements.iter().map(|&x| green.l.class_of[x]).collect();
        l_classes.sort_unstable();
        l_classes.dedup();
        let l_transversal = l_classes
            .iter()
            .map(|&lc| {
                pick(
                    green.l.classes[lc]
                        .iter()
                        .copied()
                        .filter(|&x| green.r.same(x, e))
                        .collect(),
                )
            })
            .collect();
        let mut r_classes: Vec<usize> = elements.iter().map(|&x| green.r.class_of[x]).collect();
        r_classes.sort_unstable();
        r_classes.dedup();
        let r_transversal = r_classes
            .iter()
            .map(|&rc| {
                pick(
                    green.r.classes[rc]
                        .iter()
                        .copied()
                        .filter(|&x| green.l.same(x, e))
                        .collect(),
                )
            })
            .collect();
        Ok(JClassRecord {
            index,
            elements,
            idempotents,
            e,
            max_subgroup,
            l_transversal,
            r_transversal,
        })
    }

    /// All records, in J-class index order. Fails on the first non-regular class.
    pub fn all(s: &FiniteSemigroup, green: &GreenData) -> Result<Vec<Self>> {
        (0..green.num_j_classes())
            .map(|j| JClassRecord::new(s, green, j))
            .collect()
    }

    pub fn ell(&self) -> usize {
        self.l_transversal.len()
    }

    pub fn r(&self) -> usize {
        self.r_transversal.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn maximal_subgroup(&self, s: &FiniteSemigroup) -> Result<Subgroup> {
        s.maximal_subgroup(self.e)
    }
}

/// The ideals strictly below and not above a J-class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSlice {
    pub j_below: Vec<usize>,
    pub j_not_up: Vec<usize>,
}

pub fn ideal_slices(s: &FiniteSemigroup, green: &GreenData, j: usize) -> Result<IdealSlice> {
    let j_below: Vec<usize> = s
        .elements()
        .filter(|&x| green.j_less(green.j_class_of(x), j))
        .collect();
    let j_not_up: Vec<usize> = s
        .elements()
        .filter(|&x| !green.j_leq(j, green.j_class_of(x)))
        .collect();
    for set in [&j_below, &j_not_up] {
        let mut member = vec![false; s.order()];
        for &x in set.iter() {
            member[x] = true;
        }
        for &x in set.iter() {
            for t in s.elements() {
                if !member[s.mul(x, t)] || !member[s.mul(t, x)] {
                    return Err(Error::internal(format!(
                        "slice of J-class {j} is not a two-sided ideal"
                    )));
                }
            }
        }
    }
    Ok(IdealSlice { j_below, j_not_up })
}

impl FiniteSemigroup {
    /// `S ∖ J⇑` for an RRBG monoid: the elements J-above the given class.
    pub fn remove_jnotup(&self, green: &GreenData, j: usize) -> Result<Subsemigroup> {
        if let Some((a, b)) = self.first_rrbg_violation() {
            return Err(Error::precondition(format!(
                "not a right regular band of groups (fails at {}, {})",
                self.label(a),
                self.label(b)
            )));
        }
        let elements: Vec<usize> = self
            .elements()
            .filter(|&x| green.j_leq(j, green.j_class_of(x)))
            .collect();
        self.subsemigroup(&elements, self.identity())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rees_c2() -> FiniteSemigroup {
        // (a, g, b), a,b in {0,1}, g in C2; P = [[0,0],[0,1]]; identity last
        let p = [[0usize, 0], [0, 1]];
        let idx = |a: usize, g: usize, b: usize| a * 4 + g * 2 + b;
        let mut t = vec![vec![0; 9]; 9];
        for x in 0..8 {
            let (a, g, b) = (x / 4, (x / 2) % 2, x % 2);
            for y in 0..8 {
                let (a2, g2, b2) = (y / 4, (y / 2) % 2, y % 2);
                t[x][y] = idx(a, (g + p[b][a2] + g2) % 2, b2);
            }
            t[x][8] = x;
            t[8][x] = x;
        }
        t[8][8] = 8;
        FiniteSemigroup::from_table(t, Some(8), None).unwrap()
    }

    #[test]
    fn rees_example_structure() {
        let s = rees_c2();
        let g = GreenData::compute(&s);
        assert_eq!(g.num_j_classes(), 2);
        assert_eq!(g.j.classes[0].len(), 8);
        assert_eq!(g.r.len(), 3);
        assert_eq!(g.l.len(), 3);
        assert_eq!(g.principal_order, vec![0, 1]);
        let rec = JClassRecord::new(&s, &g, 0).unwrap();
        assert_eq!(rec.e, 0);
        assert_eq!(rec.max_subgroup, vec![0, 2]);
        assert_eq!(rec.l_transversal, vec![0, 1]);
        assert_eq!(rec.r_transversal, vec![0, 4]);
        assert_eq!(rec.elements.len(), rec.ell() * rec.r() * rec.max_subgroup.len());
        assert!(!s.is_rrbg());
    }

    #[test]
    fn non_regular_class_is_rejected() {
        let null = FiniteSemigroup::from_table(vec![vec![1, 1], vec![1, 1]], None, None).unwrap();
        let g = GreenData::compute(&null);
        let a = g.j_class_of(0);
        assert!(matches!(JClassRecord::new(&null, &g, a), Err(Error::Precondition(_))));
    }

    #[test]
    fn slices_of_a_chain() {
        // {1, 0} with 0 a zero
        let s = FiniteSemigroup::from_table(vec![vec![0, 0], vec![0, 1]], Some(1), None).unwrap();
        let g = GreenData::compute(&s);
        let bottom = g.j_class_of(0);
        let top = g.j_class_of(1);
        let sl = ideal_slices(&s, &g, bottom).unwrap();
        assert!(sl.j_below.is_empty() && sl.j_not_up.is_empty());
        let sl = ideal_slices(&s, &g, top).unwrap();
        assert_eq!(sl.j_below, vec![0]);
        assert_eq!(sl.j_not_up, vec![0]);
        assert_eq!(s.remove_jnotup(&g, top).unwrap().embedding, vec![1]);
        assert_eq!(s.remove_jnotup(&g, bottom).unwrap().embedding, vec![0, 1]);
    }

    #[test]
    fn linear_extension_prefers_small_indices() {
        // 0 > 1, 2 incomparable
        let leq = |a: usize, b: usize| a == b || (a == 1 && b == 0);
        assert_eq!(linear_extension(3, leq), vec![1, 0, 2]);
    }
}
