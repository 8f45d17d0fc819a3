//! Conjugacy classes, character tables and class functions.

mod abelian;
mod file;
mod symmetric;

pub use abelian::abelian_character_table;
pub use file::{load_table, CharacterTableFile, ClassEntry, IrreducibleEntry};
pub use symmetric::{cycle_type, partitions, symmetric_character, symmetric_table};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, Cyclotomic};
use crate::semigroup::Group;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// Smallest element of each class.
    pub representatives: Vec<usize>,
}

impl ConjugacyClasses {
    /// Orbits under conjugation, numbered by smallest element.
    pub fn compute(g: &Group) -> Self {
        let n = g.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> = g.elements().map(|y| g.conjugate(x, y)).collect();
            cls.sort_unstable();
            cls.dedup();
            for &y in &cls {
                class_of[y] = classes.len();
            }
            classes.push(cls);
        }
        Self::from_classes(classes, n)
    }

    /// Reorders classes to the given list of representatives (one per class).
    pub fn reordered(&self, reps: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.classes.len()];
        let mut classes = Vec::with_capacity(reps.len());
        for &r in reps {
            let c = *self
                .class_of
                .get(r)
                .ok_or_else(|| Error::input(format!("class representative {r} is not an element")))?;
            if std::mem::replace(&mut seen[c], true) {
                return Err(Error::input(format!(
                    "class representative {r} repeats an earlier class"
                )));
            }
            classes.push(self.classes[c].clone());
        }
        if classes.len() != self.classes.len() {
            return Err(Error::input(format!(
                "classes: {} given, the group has {}",
                classes.len(),
                self.classes.len()
            )));
        }
        Ok(Self::from_classes(classes, self.class_of.len()))
    }

    fn from_classes(classes: Vec<Vec<usize>>, n: usize) -> Self {
        let mut class_of = vec![0; n];
        for (c, cls) in classes.iter().enumerate() {
            for &x in cls {
                class_of[x] = c;
            }
        }
        let representatives = classes.iter().map(|c| c[0]).collect();
        ConjugacyClasses {
            classes,
            class_of,
            representatives,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// Values of a class function, one per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Cyclotomic>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irreducible {
    pub label: String,
    pub values: Vec<Cyclotomic>,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Group,
    classes: ConjugacyClasses,
    inverse_class: Vec<usize>,
    irreducibles: Vec<Irreducible>,
}

impl CharacterTable {
    /// Checks degrees, the degree sum and row orthogonality.
    pub fn new(group: Group, classes: ConjugacyClasses, irreducibles: Vec<Irreducible>) -> Result<Self> {
        let inverse_class = classes
            .representatives
            .iter()
            .map(|&r| classes.class_of[group.inv(r)])
            .collect();
        let t = CharacterTable {
            group,
            classes,
            inverse_class,
            irreducibles,
        };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let k = self.classes.len();
        if self.irreducibles.len() != k {
            return Err(Error::input(format!(
                "{} irreducibles for {k} conjugacy classes",
                self.irreducibles.len()
            )));
        }
        if let Some(row) = self.irreducibles.iter().find(|r| r.values.len() != k) {
            return Err(Error::input(format!(
                "irreducible {}: {} values for {k} classes",
                row.label,
                row.values.len()
            )));
        }
        let one = self.classes.class_of[self.group.identity()];
        let mut degree_sum = 0usize;
        for row in &self.irreducibles {
            match row.values[one].to_i64() {
                Some(d) if d > 0 => degree_sum += (d * d) as usize,
                _ => {
                    return Err(Error::input(format!(
                        "irreducible {}: degree {} is not a positive integer",
                        row.label, row.values[one]
                    )))
                }
            }
        }
        if degree_sum != self.group.order() {
            return Err(Error::input(format!(
                "squared degrees sum to {degree_sum}, group order is {}",
                self.group.order()
            )));
        }
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate().skip(i) {
                let ip = self.inner_product_values(&a.values, &b.values);
                let expected = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                if ip != expected {
                    return Err(Error::input(format!(
                        "rows {} and {} are not orthonormal (inner product {ip})",
                        a.label, b.label
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn irreducibles(&self) -> &[Irreducible] {
        &self.irreducibles
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.irreducibles.iter().map(|r| r.label.clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.irreducibles.iter().position(|r| r.label == label)
    }

    /// `χ_i(g)`.
    pub fn value(&self, i: usize, g: usize) -> &Cyclotomic {
        &self.irreducibles[i].values[self.classes.class_of[g]]
    }

    pub fn degree(&self, i: usize) -> usize {
        let one = self.classes.class_of[self.group.identity()];
        self.irreducibles[i].values[one].to_i64().unwrap() as usize
    }

    /// Index of the trivial character.
    pub fn trivial(&self) -> usize {
        self.irreducibles
            .iter()
            .position(|r| r.values.iter().all(|v| v.is_one()))
            .expect("every table has the trivial character")
    }

    pub fn character(&self, i: usize) -> ClassFunction {
        ClassFunction {
            values: self.irreducibles[i].values.clone(),
        }
    }

    /// Class function from pointwise values, read at class representatives.
    pub fn class_function(&self, f: impl Fn(usize) -> Cyclotomic) -> ClassFunction {
        ClassFunction {
            values: self.classes.representatives.iter().map(|&r| f(r)).collect(),
        }
    }

    pub fn evaluate<'a>(&self, chi: &'a ClassFunction, g: usize) -> &'a Cyclotomic {
        &chi.values[self.classes.class_of[g]]
    }

    fn inner_product_values(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for (c, cls) in self.classes.classes.iter().enumerate() {
            if a[c].is_zero() {
                continue;
            }
            let term = &a[c] * &b[self.inverse_class[c]];
            acc = acc + Cyclotomic::from_int(cls.len() as i64) * term;
        }
        acc * Cyclotomic::from_rational(rat(1, self.group.order() as i64))
    }

    /// `(1/|G|) Σ χ(g) ψ(g⁻¹)`.
    pub fn inner_product(&self, chi: &ClassFunction, psi: &ClassFunction) -> Cyclotomic {
        self.inner_product_values(&chi.values, &psi.values)
    }

    /// Inner product of two genuine characters: must be a nonnegative integer.
    pub fn multiplicity(&self, chi: &ClassFunction, psi: &ClassFunction) -> Result<usize> {
        let ip = self.inner_product(chi, psi);
        match ip.to_i64() {
            Some(m) if m >= 0 => Ok(m as usize),
            _ => Err(Error::internal(format!(
                "character inner product {ip} is not a nonnegative integer"
            ))),
        }
    }

    /// Multiplicity of each irreducible in `chi`.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Vec<usize>> {
        (0..self.len())
            .map(|i| self.multiplicity(chi, &self.character(i)))
            .collect()
    }

    pub fn tensor(&self, chi: &ClassFunction, psi: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: chi.values.iter().zip(&psi.values).map(|(a, b)| a * b).collect(),
        }
    }

    /// Character of a permutation module, from fixed-point counts.
    pub fn permutation_character(&self, fixed_points: impl Fn(usize) -> usize) -> ClassFunction {
        self.class_function(|g| Cyclotomic::from_int(fixed_points(g) as i64))
    }

    pub fn regular_character(&self) -> ClassFunction {
        let one = self.group.identity();
        let n = self.group.order();
        self.permutation_character(|g| if g == one { n } else { 0 })
    }

    /// `chi ∘ phi` as a class function of `source`, where `phi` maps elements
    /// of `source`'s group to elements of this table's group.
    pub fn restrict_along(&self, source: &CharacterTable, phi: &[usize], chi: &ClassFunction) -> ClassFunction {
        source.class_function(|g| self.evaluate(chi, phi[g]).clone())
    }

    /// Same table on an isomorphic copy. `iso[g]` is the image of `g`.
    pub fn transport(&self, target: &Group, iso: &[usize]) -> Result<CharacterTable> {
        if !self.group.is_isomorphism(target, iso) {
            return Err(Error::internal("transport map is not a group isomorphism"));
        }
        let classes: Vec<Vec<usize>> = self
            .classes
            .classes
            .iter()
            .map(|c| {
                let mut img: Vec<usize> = c.iter().map(|&g| iso[g]).collect();
                img.sort_unstable();
                img
            })
            .collect();
        let classes = ConjugacyClasses::from_classes(classes, target.order());
        CharacterTable::new(target.clone(), classes, self.irreducibles.clone())
    }

    /// Table of `G^op`. Transposing a representation turns it into one of
    /// `G^op` with the same trace, and conjugacy classes are the same sets.
    pub fn on_opposite(&self) -> Result<CharacterTable> {
        CharacterTable::new(self.group.opposite(), self.classes.clone(), self.irreducibles.clone())
    }

    /// The table of `G^r`; labels are tuples of input labels, rows and
    /// classes in mixed-radix order with the first factor most significant.
    pub fn power(&self, r: usize) -> Result<CharacterTable> {
        assert!(r >= 1, "power of a table needs r >= 1");
        if r == 1 {
            return Ok(self.clone());
        }
        let mut group = self.group.clone();
        for _ in 1..r {
            group = group.direct_product(&self.group);
        }
        let n = self.group.order();
        let k = self.classes.len();
        let digits = |mut x: usize, base: usize| -> Vec<usize> {
            let mut d = vec![0; r];
            for slot in d.iter_mut().rev() {
                *slot = x % base;
                x /= base;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().fold(0, |acc, &x| acc * n + x);
        let class_tuples: Vec<Vec<usize>> = (0..k.pow(r as u32)).map(|c| digits(c, k)).collect();
        let classes: Vec<Vec<usize>> = class_tuples
            .iter()
            .map(|t| {
                let mut elems = vec![Vec::new()];
                for &c in t {
                    let mut next = Vec::new();
                    for prefix in &elems {
                        for &g in &self.classes.classes[c] {
                            let mut p: Vec<usize> = prefix.clone();
                            p.push(g);
                            next.push(p);
                        }
                    }
                    elems = next;
                }
                let mut cls: Vec<usize> = elems.iter().map(|d| encode(d)).collect();
                cls.sort_unstable();
                cls
            })
            .collect();
        let classes = ConjugacyClasses::from_classes(classes, group.order());
        let m = self.len();
        let irreducibles = (0..m.pow(r as u32))
            .map(|row| {
                let rows = digits(row, m);
                let label = format!(
                    "({})",
                    rows.iter()
                        .map(|&i| self.irreducibles[i].label.as_str())
                        .collect::<Vec<_>>()
                        .join(",")
                );
                let values = class_tuples
                    .iter()
                    .map(|t| {
                        rows.iter().zip(t).fold(Cyclotomic::one(), |acc, (&i, &c)| {
                            acc * self.irreducibles[i].values[c].clone()
                        })
                    })
                    .collect();
                Irreducible { label, values }
            })
            .collect();
        CharacterTable::new(group, classes, irreducibles)
    }
}

/// Table of `G^r` (see [`CharacterTable::power`]).
pub fn power_table(t: &CharacterTable, r: usize) -> Result<CharacterTable> {
    t.power(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{enumerate_from_generators, DEFAULT_ELEMENT_CAP};

    fn s3() -> (Group, Vec<Vec<u32>>) {
        let t = enumerate_from_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]], false, DEFAULT_ELEMENT_CAP)
            .unwrap();
        (Group::from_semigroup(t.semigroup).unwrap(), t.maps)
    }

    #[test]
    fn class_sizes_of_s3() {
        let (g, _) = s3();
        let mut sizes = ConjugacyClasses::compute(&g).sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn natural_permutation_character_of_s3() {
        let (g, maps) = s3();
        let t = symmetric_table(&g, |x| maps[x].iter().map(|&p| p as usize).collect()).unwrap();
        let perm = t.permutation_character(|x| maps[x].iter().enumerate().filter(|(p, &q)| *p == q as usize).count());
        let triv = t.index_of("[3]").unwrap();
        let std = t.index_of("[2,1]").unwrap();
        let sign = t.index_of("[1,1,1]").unwrap();
        assert_eq!(t.multiplicity(&perm, &t.character(triv)).unwrap(), 1);
        assert_eq!(t.multiplicity(&perm, &t.character(std)).unwrap(), 1);
        assert_eq!(t.multiplicity(&perm, &t.character(sign)).unwrap(), 0);
        let ss = t.tensor(&t.character(sign), &t.character(sign));
        assert_eq!(ss, t.character(triv));
    }

    #[test]
    fn regular_character_pairs_to_degree() {
        let (g, maps) = s3();
        let t = symmetric_table(&g, |x| maps[x].iter().map(|&p| p as usize).collect()).unwrap();
        let reg = t.regular_character();
        for i in 0..t.len() {
            assert_eq!(t.multiplicity(&reg, &t.character(i)).unwrap(), t.degree(i));
        }
    }

    #[test]
    fn power_of_c2_matches_abelian_builder() {
        let c2 = abelian_character_table(&Group::cyclic(2)).unwrap();
        let p = c2.power(2).unwrap();
        assert_eq!(p.len(), 4);
        let direct = abelian_character_table(p.group()).unwrap();
        let mut a: Vec<Vec<Cyclotomic>> = p.irreducibles().iter().map(|r| r.values.clone()).collect();
        let mut b: Vec<Vec<Cyclotomic>> = direct.irreducibles().iter().map(|r| r.values.clone()).collect();
        let key = |v: &Vec<Cyclotomic>| format!("{v:?}");
        a.sort_by_key(key);
        b.sort_by_key(key);
        assert_eq!(a, b);
        assert_eq!(c2.power(1).unwrap().labels(), c2.labels());
    }

    #[test]
    fn restriction_of_trivial_is_trivial() {
        let c4 = abelian_character_table(&Group::cyclic(4)).unwrap();
        let c2 = abelian_character_table(&Group::cyclic(2)).unwrap();
        // C4 -> C2, x ↦ x mod 2 ... restrict C2 characters to C4
        let phi = [0, 1, 0, 1];
        let triv = c2.character(c2.trivial());
        let r = c2.restrict_along(&c4, &phi, &triv);
        assert_eq!(r, c4.character(c4.trivial()));
    }

    #[test]
    fn transport_keeps_values() {
        let c3 = abelian_character_table(&Group::cyclic(3)).unwrap();
        let t = c3.transport(&Group::cyclic(3), &[0, 2, 1]).unwrap();
        assert_eq!(t.value(1, 2), c3.value(1, 1));
    }
}
