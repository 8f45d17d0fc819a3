use std::collections::HashMap;

use super::FiniteSemigroup;
use crate::error::{Error, Result};

pub const DEFAULT_ELEMENT_CAP: usize = 200_000;

/// A transformation semigroup together with the maps realizing its elements.
#[derive(Clone, Debug)]
pub struct Transformations {
    pub degree: usize,
    /// `maps[x][p]` is the image of point `p` under element `x`.
    pub maps: Vec<Vec<u32>>,
    pub semigroup: FiniteSemigroup,
}

impl Transformations {
    pub fn index_of(&self, map: &[u32]) -> Option<usize> {
        self.maps.iter().position(|m| m.as_slice() == map)
    }

    pub fn is_permutation(&self, x: usize) -> bool {
        let mut seen = vec![false; self.degree];
        self.maps[x]
            .iter()
            .all(|&p| !std::mem::replace(&mut seen[p as usize], true))
    }
}

/// Closure of `generators` under composition, numbered breadth-first.
///
/// Products act on the right: `(f·g)(p) = g(f(p))`. Element 0 is the identity
/// map when `adjoin_identity` is set, otherwise the first generator.
pub fn enumerate_from_generators(
    degree: usize,
    generators: &[Vec<usize>],
    adjoin_identity: bool,
    cap: usize,
) -> Result<Transformations> {
    if degree == 0 {
        return Err(Error::input("degree: must be positive"));
    }
    if generators.is_empty() && !adjoin_identity {
        return Err(Error::input("maps: at least one generator is required"));
    }
    let mut gens: Vec<Vec<u32>> = Vec::with_capacity(generators.len());
    for (i, g) in generators.iter().enumerate() {
        if g.len() != degree {
            return Err(Error::input(format!(
                "maps[{i}]: has {} entries, expected degree {degree}",
                g.len()
            )));
        }
        if let Some(j) = g.iter().position(|&p| p >= degree) {
            return Err(Error::input(format!(
                "maps[{i}][{j}] = {} is out of range 0..{degree}",
                g[j]
            )));
        }
        gens.push(g.iter().map(|&p| p as u32).collect());
    }

    let mut maps: Vec<Vec<u32>> = Vec::new();
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut push = |m: Vec<u32>, maps: &mut Vec<Vec<u32>>| -> Result<()> {
        if !index.contains_key(&m) {
            if maps.len() >= cap {
                return Err(Error::TooLarge { cap });
            }
            index.insert(m.clone(), maps.len());
            maps.push(m);
        }
        Ok(())
    };
    if adjoin_identity {
        push((0..degree as u32).collect(), &mut maps)?;
    }
    for g in &gens {
        push(g.clone(), &mut maps)?;
    }
    let mut next = 0;
    while next < maps.len() {
        for g in &gens {
            let y: Vec<u32> = maps[next].iter().map(|&p| g[p as usize]).collect();
            push(y, &mut maps)?;
        }
        next += 1;
    }
    drop(push);
    Transformations::from_maps(degree, maps)
}

impl Transformations {
    /// Table of a set of maps already closed under composition, in the given
    /// order. A product outside the set is an input error.
    pub fn from_maps(degree: usize, maps: Vec<Vec<u32>>) -> Result<Transformations> {
        let n = maps.len();
        let lookup: HashMap<&[u32], usize> = maps
            .iter()
            .enumerate()
            .map(|(i, m)| (m.as_slice(), i))
            .collect();
        if lookup.len() != n {
            return Err(Error::input("maps: repeated transformation"));
        }
        let mut table = Vec::with_capacity(n * n);
        let mut buf = vec![0u32; degree];
        for (i, a) in maps.iter().enumerate() {
            for (j, b) in maps.iter().enumerate() {
                for (p, slot) in buf.iter_mut().enumerate() {
                    *slot = b[a[p] as usize];
                }
                let k = lookup
                    .get(buf.as_slice())
                    .ok_or_else(|| Error::input(format!("maps: product of {i} and {j} is not in the set")))?;
                table.push(*k as u32);
            }
        }
        let identity_map: Vec<u32> = (0..degree as u32).collect();
        let identity = lookup.get(identity_map.as_slice()).copied();
        let semigroup = FiniteSemigroup::from_flat_unchecked(n, table, identity, None);
        Ok(Transformations {
            degree,
            maps,
            semigroup,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_only() {
        let t = enumerate_from_generators(1, &[vec![0]], false, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(t.semigroup.order(), 1);
        assert_eq!(t.semigroup.identity(), Some(0));
    }

    #[test]
    fn symmetric_group_on_three_points() {
        let gens = vec![vec![1, 2, 0], vec![1, 0, 2]];
        let t = enumerate_from_generators(3, &gens, false, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(t.semigroup.order(), 6);
        assert!(t.semigroup.check_associative().is_ok());
        // composition order: first map applied first
        let a = t.index_of(&[1, 2, 0]).unwrap();
        let b = t.index_of(&[1, 0, 2]).unwrap();
        let ab = t.semigroup.mul(a, b);
        assert_eq!(t.maps[ab], vec![0, 2, 1]);
    }

    #[test]
    fn cap_is_enforced() {
        let gens = vec![vec![1, 2, 0], vec![1, 0, 2]];
        let err = enumerate_from_generators(3, &gens, false, 5).unwrap_err();
        assert!(matches!(err, Error::TooLarge { cap: 5 }));
    }

    #[test]
    fn bad_generators_are_input_errors() {
        assert!(enumerate_from_generators(2, &[vec![0, 2]], false, 10).is_err());
        assert!(enumerate_from_generators(2, &[vec![0]], false, 10).is_err());
    }

    #[test]
    fn numbering_is_deterministic() {
        let gens = vec![vec![1, 2, 3, 0], vec![0, 0, 2, 3]];
        let a = enumerate_from_generators(4, &gens, true, DEFAULT_ELEMENT_CAP).unwrap();
        let b = enumerate_from_generators(4, &gens, true, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(a.maps, b.maps);
        assert_eq!(a.semigroup, b.semigroup);
        assert_eq!(a.maps[0], vec![0, 1, 2, 3]);
    }
}
