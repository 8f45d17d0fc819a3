use crate::error::{Error, Result};
use crate::semigroup::{FiniteSemigroup, Group};

/// `M(G, ℓ, r, P)` with `P` an `r × ℓ` array of group elements.
#[derive(Clone, Debug)]
pub struct ReesSpec {
    pub group: Group,
    pub ell: usize,
    pub r: usize,
    pub p: Vec<Vec<usize>>,
}

impl ReesSpec {
    /// `C₂` with `P = [[e, e], [e, g]]`.
    pub fn c2_example() -> Self {
        ReesSpec {
            group: Group::cyclic(2),
            ell: 2,
            r: 2,
            p: vec![vec![0, 0], vec![0, 1]],
        }
    }

    fn validate(&self) -> Result<()> {
        if self.ell == 0 || self.r == 0 {
            return Err(Error::input("ell, r: must be positive"));
        }
        if self.p.len() != self.r || self.p.iter().any(|row| row.len() != self.ell) {
            return Err(Error::input(format!("p: expected {} rows of {} entries", self.r, self.ell)));
        }
        if self.p.iter().flatten().any(|&g| g >= self.group.order()) {
            return Err(Error::input("p: entry is not a group element"));
        }
        Ok(())
    }
}

/// `(a, g, b)` sits at `(a |G| + g) r + b`; the adjoined identity comes last.
pub fn rees_with_identity(spec: &ReesSpec) -> Result<FiniteSemigroup> {
    spec.validate()?;
    let (n, r) = (spec.group.order(), spec.r);
    let m = spec.ell * n * r;
    let split = |x: usize| (x / (n * r), (x / r) % n, x % r);
    let mut table = Vec::with_capacity((m + 1) * (m + 1));
    for x in 0..=m {
        for y in 0..=m {
            let z = if x == m {
                y
            } else if y == m {
                x
            } else {
                let (a, g, b) = split(x);
                let (a2, g2, b2) = split(y);
                let h = spec.group.mul(spec.group.mul(g, spec.p[b][a2]), g2);
                (a * n + h) * r + b2
            };
            table.push(z as u32);
        }
    }
    let mut labels: Vec<String> = (0..m)
        .map(|x| {
            let (a, g, b) = split(x);
            format!("({},{},{})", a + 1, g, b + 1)
        })
        .collect();
    labels.push("1".into());
    Ok(FiniteSemigroup::from_flat_unchecked(m + 1, table, Some(m), Some(labels)))
}
