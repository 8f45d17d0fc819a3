#![allow(dead_code)]

use semirep::characters::{abelian_character_table, symmetric_table, CharacterTable};
use semirep::constructions::{hsiao_semigroup, permutation_group};
use semirep::poset::FinitePoset;
use semirep::rep::Analysis;
use semirep::semigroup::{FiniteSemigroup, Group};

/// `opposite(Σₙᴳ)` analysed, with the built-in abelian tables.
pub fn hsiao_opposite(n: usize, g: &Group) -> (Analysis, Vec<CharacterTable>) {
    let h = hsiao_semigroup(n, g).unwrap();
    let an = Analysis::new(h.semigroup.opposite()).unwrap();
    let tables = an.default_tables().unwrap();
    (an, tables)
}

pub fn hsiao_suite() -> Vec<(String, usize, Group)> {
    vec![
        ("Σ2^1".into(), 2, Group::trivial()),
        ("Σ3^1".into(), 3, Group::trivial()),
        ("Σ4^1".into(), 4, Group::trivial()),
        ("Σ2^C2".into(), 2, Group::cyclic(2)),
        ("Σ3^C2".into(), 3, Group::cyclic(2)),
        ("Σ2^C3".into(), 2, Group::cyclic(3)),
    ]
}

pub fn cyclic_gens(n: usize) -> Vec<Vec<usize>> {
    vec![(0..n).map(|p| (p + 1) % n).collect()]
}

pub fn s3_gens() -> Vec<Vec<usize>> {
    vec![vec![1, 2, 0], vec![1, 0, 2]]
}

/// The permutation group and a character table for it: abelian tables for
/// abelian groups, Murnaghan–Nakayama for the full symmetric group.
pub fn perm_table(degree: usize, gens: &[Vec<usize>]) -> (Vec<Vec<u32>>, CharacterTable) {
    let t = permutation_group(degree, gens).unwrap();
    let maps = t.maps.clone();
    let g = Group::from_semigroup(t.semigroup).unwrap();
    let table = if g.is_abelian() {
        abelian_character_table(&g).unwrap()
    } else {
        let m = maps.clone();
        symmetric_table(&g, move |x| m[x].iter().map(|&p| p as usize).collect()).unwrap()
    };
    (maps, table)
}

pub fn gbar_suite() -> Vec<(String, usize, Vec<Vec<usize>>)> {
    let mut out: Vec<(String, usize, Vec<Vec<usize>>)> =
        (3..=6).map(|n| (format!("C{n} regular"), n, cyclic_gens(n))).collect();
    out.push(("S3 natural".into(), 3, s3_gens()));
    out
}

/// Maximal subgroup orders by brute force: units of `eSe` for each idempotent
/// class representative, one per J-class.
pub fn group_orders_by_search(s: &FiniteSemigroup) -> Vec<usize> {
    let n = s.order();
    let mut seen_class = vec![false; n];
    let mut out = Vec::new();
    // elements J-equivalent to x: S¹xS¹ = S¹yS¹
    let ideal = |x: usize| {
        let mut set = vec![false; n];
        set[x] = true;
        for a in 0..n {
            set[s.mul(a, x)] = true;
            set[s.mul(x, a)] = true;
            for b in 0..n {
                set[s.mul(s.mul(a, x), b)] = true;
            }
        }
        set
    };
    let ideals: Vec<Vec<bool>> = (0..n).map(ideal).collect();
    for e in 0..n {
        if seen_class[e] || s.mul(e, e) != e {
            continue;
        }
        for x in 0..n {
            if ideals[x] == ideals[e] {
                seen_class[x] = true;
            }
        }
        let units = (0..n)
            .filter(|&x| s.mul(e, x) == x && s.mul(x, e) == x)
            .filter(|&x| (0..n).any(|y| s.mul(x, y) == e && s.mul(y, x) == e))
            .count();
        out.push(units);
    }
    out
}

/// Set partitions of `0..n` as block-label vectors, from scratch.
pub fn set_partitions_rgs(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let m = prefix.iter().max().map_or(0, |&m| m + 1);
        for b in 0..=m {
            prefix.push(b);
            go(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// `p ≤ q` in refinement order: every block of `p` inside a block of `q`.
pub fn refines(p: &[usize], q: &[usize]) -> bool {
    (0..p.len()).all(|a| (0..p.len()).all(|b| p[a] != p[b] || q[a] == q[b]))
}

pub fn partition_lattice(n: usize) -> FinitePoset {
    let parts = set_partitions_rgs(n);
    let leq = parts
        .iter()
        .map(|p| parts.iter().map(|q| refines(p, q)).collect())
        .collect();
    FinitePoset::new(leq).unwrap()
}

/// Number of cover pairs in the partition lattice.
pub fn partition_lattice_covers(n: usize) -> usize {
    set_partitions_rgs(n)
        .iter()
        .map(|p| {
            let r = p.iter().max().map_or(0, |&m| m + 1);
            r * r.saturating_sub(1) / 2
        })
        .sum()
}

/// Philip Hall's theorem: `μ(x, y) = Σ_k (-1)^k c_k` with `c_k` the number of
/// chains `x = x_0 < ⋯ < x_k = y`.
pub fn mobius_by_chains(p: &FinitePoset, x: usize, y: usize) -> i64 {
    if !p.leq(x, y) {
        return 0;
    }
    if x == y {
        return 1;
    }
    // signed chain count from z to y
    let mut memo = vec![None; p.size()];
    fn signed(p: &FinitePoset, z: usize, y: usize, memo: &mut Vec<Option<i64>>) -> i64 {
        if z == y {
            return 1;
        }
        if let Some(v) = memo[z] {
            return v;
        }
        let mut total = 0;
        for w in 0..p.size() {
            if p.less(z, w) && p.leq(w, y) {
                total -= signed(p, w, y, memo);
            }
        }
        memo[z] = Some(total);
        total
    }
    signed(p, x, y, &mut memo)
}

pub fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}
