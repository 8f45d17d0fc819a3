use std::collections::HashMap;

use super::{CharacterTable, ConjugacyClasses, Irreducible};
use crate::error::{Error, Result};
use crate::exact::Cyclotomic;
use crate::semigroup::Group;

/// Partitions of `n` in reverse lexicographic order, `[n]` first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Cycle lengths of a permutation, largest first.
pub fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        let mut len = 0;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = perm[p];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule on beta-sets.
pub fn symmetric_character(lambda: &[usize], mu: &[usize]) -> Result<i64> {
    let (a, b): (usize, usize) = (lambda.iter().sum(), mu.iter().sum());
    if a != b {
        return Err(Error::input(format!("partitions of {a} and {b} do not match")));
    }
    let k = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &l)| l + k - 1 - i).collect();
    let mut memo = HashMap::new();
    Ok(mn(beta, mu, &mut memo))
}

fn mn(beta: Vec<usize>, mu: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&m, rest)) = mu.split_first() else {
        return 1;
    };
    if let Some(&v) = memo.get(&(beta.clone(), mu.len())) {
        return v;
    }
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < m || beta.contains(&(b - m)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - m && c < b).count();
        let mut next = beta.clone();
        next[i] = b - m;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(next, rest, memo);
    }
    memo.insert((beta, mu.len()), total);
    total
}

/// Character table of a group acting as the full symmetric group on
/// `perm(g).len()` points; rows labelled by partitions like `[2,1]`.
pub fn symmetric_table(g: &Group, perm: impl Fn(usize) -> Vec<usize>) -> Result<CharacterTable> {
    let degree = perm(g.identity()).len();
    let factorial: usize = (1..=degree).product();
    if g.order() != factorial {
        return Err(Error::precondition(format!(
            "group of order {} is not the full symmetric group on {degree} points",
            g.order()
        )));
    }
    let classes = ConjugacyClasses::compute(g);
    let types: Vec<Vec<usize>> = classes.representatives.iter().map(|&r| cycle_type(&perm(r))).collect();
    let parts = partitions(degree);
    if types.len() != parts.len() {
        return Err(Error::precondition("conjugacy classes do not match cycle types"));
    }
    for (c, cls) in classes.classes.iter().enumerate() {
        if cls.iter().any(|&x| cycle_type(&perm(x)) != types[c]) {
            return Err(Error::precondition("conjugacy class mixes cycle types"));
        }
    }
    let irreducibles = parts
        .iter()
        .map(|lambda| {
            let values = types
                .iter()
                .map(|mu| symmetric_character(lambda, mu).map(Cyclotomic::from_int))
                .collect::<Result<Vec<_>>>()?;
            let label = format!(
                "[{}]",
                lambda.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
            );
            Ok(Irreducible { label, values })
        })
        .collect::<Result<Vec<_>>>()?;
    CharacterTable::new(g.clone(), classes, irreducibles)
}
