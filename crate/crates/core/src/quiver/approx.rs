use std::collections::{BTreeMap, BTreeSet};

use super::ReducedPair;
use crate::error::{Error, Result};

/// The relations `⌣` and `≈` on the minimal ideal and the induced
/// two-sided action on `X = J/≈`.
#[derive(Clone, Debug)]
pub struct ApproxStructure {
    /// Unordered pairs `x < x'` with `x ⌣ x'`.
    pub smile_pairs: Vec<(usize, usize)>,
    /// The classes of `X`, each sorted, numbered by smallest element.
    pub classes: Vec<Vec<usize>>,
    /// Class of each element of the minimal ideal (`usize::MAX` elsewhere).
    pub class_of: Vec<usize>,
    /// `h_action[h][c]`: class of `h x` for `x ∈ c`, `h` local to `H`.
    pub h_action: Vec<Vec<usize>>,
    /// `g_action[c][g]`: class of `x g`, `g` local to the unit group.
    pub g_action: Vec<Vec<usize>>,
    /// `x e` for `x` in the class, local to `H`.
    pub epsilon: Vec<usize>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// `x ⌣ x'` when `x e = x' e` and some idempotent `w ∈ I ∖ J` fixes both on
/// the right; `≈` is the equivalence it generates.
pub fn smile_and_approx(rp: &ReducedPair) -> Result<ApproxStructure> {
    let s = &rp.s2;
    let j = &rp.min_ideal;
    let in_j = |x: usize| j.binary_search(&x).is_ok();
    let witnesses: Vec<usize> = rp
        .ideal
        .iter()
        .copied()
        .filter(|&w| !in_j(w) && s.is_idempotent(w))
        .collect();

    let mut pairs = BTreeSet::new();
    let mut uf = UnionFind((0..s.order()).collect());
    for &w in &witnesses {
        let mut by_target: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &x in j {
            if s.mul(x, w) == x {
                by_target.entry(s.mul(x, rp.e)).or_default().push(x);
            }
        }
        for group in by_target.values() {
            for (k, &a) in group.iter().enumerate() {
                for &b in &group[k + 1..] {
                    pairs.insert((a, b));
                }
                uf.union(group[0], a);
            }
        }
    }

    let mut class_of = vec![usize::MAX; s.order()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_class: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in j {
        let r = uf.find(x);
        let next = classes.len();
        let c = *root_class.entry(r).or_insert(next);
        if c == next {
            classes.push(Vec::new());
        }
        classes[c].push(x);
        class_of[x] = c;
    }

    let h_local = |x: usize| rp.h.to_local(s.mul(x, rp.e));
    let mut epsilon = Vec::with_capacity(classes.len());
    for cls in &classes {
        let t = h_local(cls[0]).ok_or_else(|| Error::internal("x e is not in H"))?;
        if cls.iter().any(|&x| h_local(x) != Some(t)) {
            return Err(Error::internal("≈ does not preserve x e"));
        }
        epsilon.push(t);
    }
    for &h in &rp.h.embedding {
        if class_of[h] == usize::MAX {
            return Err(Error::internal("H is not inside the minimal ideal"));
        }
    }
    let h_classes: BTreeSet<usize> = rp.h.embedding.iter().map(|&h| class_of[h]).collect();
    if h_classes.len() != rp.h.embedding.len() {
        return Err(Error::internal("two elements of H are ≈-equivalent"));
    }

    let act = |f: &dyn Fn(usize) -> usize| -> Result<Vec<usize>> {
        classes
            .iter()
            .map(|cls| {
                let c = class_of[f(cls[0])];
                if cls.iter().any(|&x| class_of[f(x)] != c) {
                    return Err(Error::internal("action on X is not well defined"));
                }
                Ok(c)
            })
            .collect()
    };
    let h_action = rp
        .h
        .embedding
        .iter()
        .map(|&h| act(&|x| s.mul(h, x)))
        .collect::<Result<Vec<_>>>()?;
    let by_g = rp
        .unit_group
        .embedding
        .iter()
        .map(|&g| act(&|x| s.mul(x, g)))
        .collect::<Result<Vec<_>>>()?;
    let g_action = (0..classes.len())
        .map(|c| by_g.iter().map(|col| col[c]).collect())
        .collect();

    Ok(ApproxStructure {
        smile_pairs: pairs.into_iter().collect(),
        classes,
        class_of,
        h_action,
        g_action,
        epsilon,
    })
}

impl ApproxStructure {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}
