use super::{CharacterTable, ConjugacyClasses, Irreducible};
use crate::error::{Error, Result};
use crate::exact::Cyclotomic;
use crate::semigroup::Group;

/// All `|G|` linear characters of an abelian group, trivial one first.
///
/// Builds a polycyclic generating sequence greedily (largest relative order
/// first, ties to the smallest element), writes each element as an exponent
/// vector over it, and extends characters one generator at a time.
pub fn abelian_character_table(g: &Group) -> Result<CharacterTable> {
    if !g.is_abelian() {
        return Err(Error::precondition("abelian character table requested for a non-abelian group"));
    }
    let order = g.order();
    let n = g.exponent();
    let one = g.identity();

    let mut exps: Vec<Option<Vec<usize>>> = vec![None; order];
    exps[one] = Some(Vec::new());
    let mut members = vec![one];
    // (relative order k, exponents of g^k over the earlier generators)
    let mut relations: Vec<(usize, Vec<usize>)> = Vec::new();
    while members.len() < order {
        let relative_order = |x: usize| {
            let mut y = x;
            let mut k = 1;
            while exps[y].is_none() {
                y = g.mul(y, x);
                k += 1;
            }
            (k, y)
        };
        let (x, (k, xk)) = (0..order)
            .filter(|&x| exps[x].is_none())
            .map(|x| (x, relative_order(x)))
            .fold(None::<(usize, (usize, usize))>, |best, cand| match best {
                Some(b) if b.1 .0 >= cand.1 .0 => Some(b),
                _ => Some(cand),
            })
            .unwrap();
        relations.push((k, exps[xk].clone().unwrap()));
        let old = members.clone();
        let mut power = one;
        for a in 1..k {
            power = g.mul(power, x);
            for &m in &old {
                let y = g.mul(m, power);
                let mut e = exps[m].clone().unwrap();
                e.resize(relations.len() - 1, 0);
                e.push(a);
                exps[y] = Some(e);
                members.push(y);
            }
        }
    }
    let t = relations.len();
    let exps: Vec<Vec<usize>> = exps
        .into_iter()
        .map(|e| {
            let mut e = e.unwrap();
            e.resize(t, 0);
            e
        })
        .collect();

    // b-vectors: χ(g_i) = ζ_n^{b_i}, subject to k_i b_i ≡ Σ c_j b_j (mod n)
    let mut chars: Vec<Vec<usize>> = vec![Vec::new()];
    for (k, c) in &relations {
        let mut next = Vec::with_capacity(chars.len() * k);
        for b in &chars {
            let a = c.iter().zip(b).map(|(x, y)| x * y).sum::<usize>() % n;
            let b0 = (0..n)
                .find(|&x| (k * x) % n == a)
                .ok_or_else(|| Error::internal("character extension has no solution"))?;
            for step in 0..*k {
                let mut nb = b.clone();
                nb.push((b0 + step * (n / k)) % n);
                next.push(nb);
            }
        }
        chars = next;
    }

    let classes = ConjugacyClasses::compute(g);
    let irreducibles = chars
        .iter()
        .enumerate()
        .map(|(i, b)| Irreducible {
            label: format!("chi{i}"),
            values: classes
                .representatives
                .iter()
                .map(|&x| {
                    let e: usize = exps[x].iter().zip(b).map(|(p, q)| p * q).sum();
                    Cyclotomic::root_of_unity(n as u32, e as i64)
                })
                .collect(),
        })
        .collect();
    CharacterTable::new(g.clone(), classes, irreducibles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_c2() {
        let t = abelian_character_table(&Group::trivial()).unwrap();
        assert_eq!(t.len(), 1);
        let t = abelian_character_table(&Group::cyclic(2)).unwrap();
        assert_eq!(t.irreducibles()[0].values, vec![1.into(), 1.into()]);
        assert_eq!(t.irreducibles()[1].values, vec![1.into(), (-1).into()]);
        assert_eq!(t.trivial(), 0);
    }

    #[test]
    fn all_abelian_groups_up_to_sixteen() {
        // products of cyclic groups
        let shapes: &[&[usize]] = &[&[4, 4], &[2, 8], &[2, 2, 4], &[2, 2, 2, 2], &[3, 5], &[2, 6], &[16]];
        for shape in shapes {
            let g = shape[1..]
                .iter()
                .fold(Group::cyclic(shape[0]), |acc, &m| acc.direct_product(&Group::cyclic(m)));
            let t = abelian_character_table(&g).unwrap();
            assert_eq!(t.len(), g.order());
        }
    }

    #[test]
    fn rejects_non_abelian() {
        let s = crate::semigroup::enumerate_from_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]], false, 100)
            .unwrap()
            .semigroup;
        assert!(abelian_character_table(&Group::from_semigroup(s).unwrap()).is_err());
    }
}
