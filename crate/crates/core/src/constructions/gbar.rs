use std::collections::BTreeSet;
use std::fmt;

use crate::characters::{abelian_character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::quiver::{Arrow, QuiverGraph};
use crate::rep::Analysis;
use crate::semigroup::{enumerate_from_generators, Group, Transformations, DEFAULT_ELEMENT_CAP};

fn check_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<()> {
    for (i, g) in generators.iter().enumerate() {
        let mut seen = vec![false; degree];
        let ok = g.len() == degree && g.iter().all(|&p| p < degree && !std::mem::replace(&mut seen[p], true));
        if !ok {
            return Err(Error::input(format!("maps[{i}]: not a permutation of 0..{degree}")));
        }
    }
    Ok(())
}

/// The permutation group generated by `generators`, identity first.
pub fn permutation_group(degree: usize, generators: &[Vec<usize>]) -> Result<Transformations> {
    check_permutations(degree, generators)?;
    enumerate_from_generators(degree, generators, true, DEFAULT_ELEMENT_CAP)
}

/// `Ḡ`: the group followed by the constant maps.
pub fn perm_group_with_constants(degree: usize, generators: &[Vec<usize>]) -> Result<Transformations> {
    let g = permutation_group(degree, generators)?;
    let mut maps = g.maps;
    for c in 0..degree as u32 {
        let constant = vec![c; degree];
        if !maps.contains(&constant) {
            maps.push(constant);
        }
    }
    let mut t = Transformations::from_maps(degree, maps)?;
    let labels = t
        .maps
        .iter()
        .map(|m| m.iter().map(|p| (p + 1).to_string()).collect::<Vec<_>>().join(""))
        .collect();
    t.semigroup.set_labels(labels);
    Ok(t)
}

fn orbit_count(degree: usize, maps: &[Vec<u32>], points: usize, act: impl Fn(&[u32], usize) -> usize) -> usize {
    let _ = degree;
    let mut seen = vec![false; points];
    let mut orbits = 0;
    for start in 0..points {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            for m in maps {
                let y = act(m, x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    orbits
}

/// Number of orbits on ordered pairs of points; the action must be transitive.
pub fn rank(degree: usize, generators: &[Vec<usize>]) -> Result<usize> {
    check_permutations(degree, generators)?;
    if degree == 0 {
        return Err(Error::input("degree: must be positive"));
    }
    let maps: Vec<Vec<u32>> = generators
        .iter()
        .map(|g| g.iter().map(|&p| p as u32).collect())
        .collect();
    if orbit_count(degree, &maps, degree, |m, x| m[x] as usize) != 1 {
        return Err(Error::precondition("the action is not transitive"));
    }
    Ok(orbit_count(degree, &maps, degree * degree, |m, x| {
        m[x / degree] as usize * degree + m[x % degree] as usize
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepresentationType {
    Finite,
    Tame,
    Wild,
}

impl fmt::Display for RepresentationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepresentationType::Finite => "finite",
            RepresentationType::Tame => "tame",
            RepresentationType::Wild => "wild",
        })
    }
}

/// Representation type of `kḠ`: finite up to rank 4, tame at 5, wild beyond.
pub fn representation_type(degree: usize, generators: &[Vec<usize>]) -> Result<RepresentationType> {
    Ok(match rank(degree, generators)? {
        0..=4 => RepresentationType::Finite,
        5 => RepresentationType::Tame,
        _ => RepresentationType::Wild,
    })
}

/// `Ḡ` ready for analysis, with tables in J-class order: `table_g` on the
/// unit group and the trivial table on the constants.
pub fn gbar_analysis(
    degree: usize,
    generators: &[Vec<usize>],
    table_g: &CharacterTable,
) -> Result<(Transformations, Analysis, Vec<CharacterTable>)> {
    let t = perm_group_with_constants(degree, generators)?;
    let an = Analysis::new(t.semigroup.clone())?;
    let one = t.semigroup.identity().expect("the group contains the identity map");
    let top = an.green.j_class_of(one);
    let mut tables = Vec::new();
    for (j, sub) in an.subgroups.iter().enumerate() {
        if j == top {
            if table_g.group().order() != sub.group.order() {
                return Err(Error::input(format!(
                    "character table is for a group of order {}, the permutation group has order {}",
                    table_g.group().order(),
                    sub.group.order()
                )));
            }
            // G is enumerated first, so local and enumeration indices agree.
            let iso: Vec<usize> = (0..sub.group.order()).collect();
            tables.push(table_g.transport(&sub.group, &iso).map_err(|_| {
                Error::input("character table does not match the permutation group")
            })?);
        } else {
            tables.push(abelian_character_table(&sub.group)?);
        }
    }
    Ok((t, an, tables))
}

/// `m_1 - 1` arrows from the bottom simple to the trivial character of `G`
/// and `m_i` to each other irreducible, `m_i` the multiplicity in the
/// permutation character.
pub fn gbar_quiver(degree: usize, generators: &[Vec<usize>], table_g: &CharacterTable) -> Result<QuiverGraph> {
    let (t, an, tables) = gbar_analysis(degree, generators, table_g)?;
    let one = t.semigroup.identity().unwrap();
    let top = an.green.j_class_of(one);
    let tg = &tables[top];
    let vertices = an.vertices(&tables);
    let bottom = vertices
        .iter()
        .find(|v| v.jclass != top)
        .map(|v| v.id)
        .ok_or_else(|| Error::internal("Ḡ has no constants"))?;
    let group = Group::from_semigroup(an.subgroups[top].group.semigroup().clone())?;
    let perm = tg.permutation_character(|g| {
        let m = &t.maps[an.subgroups[top].embedding[g]];
        m.iter().enumerate().filter(|&(p, &q)| p == q as usize).count()
    });
    debug_assert_eq!(group.order(), tg.group().order());
    let trivial = tg.trivial();
    let mut arrows = Vec::new();
    for (i, label) in tg.labels().iter().enumerate() {
        let m = tg.multiplicity(&perm, &tg.character(i))?;
        let mult = if i == trivial { m - 1 } else { m };
        if mult > 0 {
            let to = vertices
                .iter()
                .find(|v| v.jclass == top && &v.irr == label)
                .unwrap()
                .id;
            arrows.push(Arrow { from: bottom, to, mult });
        }
    }
    arrows.sort_by_key(|a| (a.from, a.to));
    Ok(QuiverGraph { vertices, arrows })
}

/// Orbitals as a set, for tests that want to see them.
pub fn orbitals(degree: usize, generators: &[Vec<usize>]) -> Result<Vec<BTreeSet<(usize, usize)>>> {
    let g = permutation_group(degree, generators)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in 0..degree {
        for b in 0..degree {
            if seen.contains(&(a, b)) {
                continue;
            }
            let orbit: BTreeSet<(usize, usize)> = g
                .maps
                .iter()
                .map(|m| (m[a] as usize, m[b] as usize))
                .collect();
            seen.extend(orbit.iter().copied());
            out.push(orbit);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::symmetric_table;

    fn cyclic(n: usize) -> Vec<Vec<usize>> {
        vec![(0..n).map(|p| (p + 1) % n).collect()]
    }

    fn s3() -> Vec<Vec<usize>> {
        vec![vec![1, 2, 0], vec![1, 0, 2]]
    }

    #[test]
    fn orders() {
        assert_eq!(perm_group_with_constants(2, &[]).unwrap().semigroup.order(), 3);
        assert_eq!(perm_group_with_constants(1, &[]).unwrap().semigroup.order(), 1);
        assert_eq!(perm_group_with_constants(3, &cyclic(3)).unwrap().semigroup.order(), 6);
        assert_eq!(perm_group_with_constants(3, &s3()).unwrap().semigroup.order(), 9);
    }

    #[test]
    fn constants_are_idempotent_zeros_on_the_right() {
        let t = perm_group_with_constants(3, &s3()).unwrap();
        let s = &t.semigroup;
        for c in 6..9 {
            assert!(s.is_idempotent(c));
            assert!(s.elements().all(|x| s.mul(x, c) == c));
        }
        assert!(s.is_rrbg());
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(3, &s3()).unwrap(), 2);
        for n in 2..8 {
            assert_eq!(rank(n, &cyclic(n)).unwrap(), n);
        }
        assert_eq!(rank(1, &[]).unwrap(), 1);
        assert!(matches!(rank(3, &[vec![1, 0, 2]]), Err(Error::Precondition(_))));
        assert!(matches!(rank(3, &[vec![0, 0, 2]]), Err(Error::Input(_))));
    }

    #[test]
    fn rank_matches_orbitals() {
        for (d, g) in [(3, s3()), (5, cyclic(5)), (4, vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]])] {
            assert_eq!(rank(d, &g).unwrap(), orbitals(d, &g).unwrap().len());
        }
    }

    #[test]
    fn types() {
        assert_eq!(representation_type(3, &s3()).unwrap(), RepresentationType::Finite);
        assert_eq!(representation_type(5, &cyclic(5)).unwrap(), RepresentationType::Tame);
        assert_eq!(representation_type(6, &cyclic(6)).unwrap(), RepresentationType::Wild);
        let mut rev = s3();
        rev.reverse();
        assert_eq!(representation_type(3, &rev).unwrap(), RepresentationType::Finite);
    }

    #[test]
    fn cyclic_three_star() {
        let g = Group::from_semigroup(permutation_group(3, &cyclic(3)).unwrap().semigroup).unwrap();
        let table = abelian_character_table(&g).unwrap();
        let q = gbar_quiver(3, &cyclic(3), &table).unwrap();
        assert_eq!(q.vertices.len(), 4);
        assert_eq!(q.arrow_count(), 2);
        let bottom = q.arrows[0].from;
        assert!(q.arrows.iter().all(|a| a.from == bottom && a.mult == 1));
    }

    #[test]
    fn s3_natural_goes_to_standard() {
        let t = permutation_group(3, &s3()).unwrap();
        let maps = t.maps.clone();
        let g = Group::from_semigroup(t.semigroup).unwrap();
        let table = symmetric_table(&g, |x| maps[x].iter().map(|&p| p as usize).collect()).unwrap();
        let q = gbar_quiver(3, &s3(), &table).unwrap();
        assert_eq!(q.arrows.len(), 1);
        assert_eq!(q.arrows[0].mult, 1);
        assert!(q.vertex(q.arrows[0].to).irr == "[2,1]");
    }
}
