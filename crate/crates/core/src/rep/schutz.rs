use std::collections::HashMap;

use num_traits::Zero;

use super::Analysis;
use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::exact::Cyclotomic;

/// Right Schützenberger representation of a J-class by row monomial
/// matrices over its maximal subgroup `G_e`.
///
/// The basis is the transversal `λ_1, …, λ_ℓ` of the R-class of `e`. For
/// each element `s`, row `b` of its matrix is either zero (`λ_b s` leaves
/// the J-class) or has the single entry `g` in column `b'`, where
/// `λ_b s = g λ_{b'}`.
#[derive(Clone, Debug)]
pub struct SchutzRep {
    pub jclass: usize,
    pub basis: Vec<usize>,
    /// `rows[s][b] = Some((b', g))` with `g` a local index of `G_e`.
    pub rows: Vec<Vec<Option<(usize, usize)>>>,
}

impl SchutzRep {
    pub fn new(an: &Analysis, j: usize) -> Result<Self> {
        let s = &an.semigroup;
        let rec = &an.records[j];
        let g = &an.subgroups[j];
        // coordinates x = g λ_b' on the R-class of e
        let mut coords: HashMap<usize, (usize, usize)> = HashMap::new();
        for (b, &lambda) in rec.l_transversal.iter().enumerate() {
            for (local, &h) in g.embedding.iter().enumerate() {
                if coords.insert(s.mul(h, lambda), (b, local)).is_some() {
                    return Err(Error::internal("G_e does not act freely on the R-class of e"));
                }
            }
        }
        let rows = s
            .elements()
            .map(|x| {
                rec.l_transversal
                    .iter()
                    .map(|&lambda| {
                        let p = s.mul(lambda, x);
                        match coords.get(&p) {
                            Some(&c) => Ok(Some(c)),
                            None if rec.contains(p) => Err(Error::internal(
                                "right action leaves the R-class inside the J-class",
                            )),
                            None => Ok(None),
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SchutzRep {
            jclass: j,
            basis: rec.l_transversal.clone(),
            rows,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Trace of `ρ_W ⊗ RM(s)`: the character of the module induced from `W`.
    pub fn trace(&self, table: &CharacterTable, w: usize, s: usize) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for (b, entry) in self.rows[s].iter().enumerate() {
            if let Some((b2, g)) = *entry {
                if b2 == b {
                    acc = acc + table.value(w, g).clone();
                }
            }
        }
        acc
    }

    /// Product of row monomial matrices, `RM(s) RM(t)`.
    pub fn compose(&self, an: &Analysis, s: usize, t: usize) -> Vec<Option<(usize, usize)>> {
        let group = &an.subgroups[self.jclass].group;
        self.rows[s]
            .iter()
            .map(|entry| {
                entry.and_then(|(b2, g)| self.rows[t][b2].map(|(b3, h)| (b3, group.mul(g, h))))
            })
            .collect()
    }

    /// The pointwise character `θ` on all of `S`.
    pub fn theta(&self, table: &CharacterTable, w: usize) -> Vec<Cyclotomic> {
        (0..self.rows.len()).map(|s| self.trace(table, w, s)).collect()
    }
}

/// `θ(s) = Σ χ_W(e s e_J)` over idempotents `e` of `J` with `(e s)^ω = e`,
/// the induced character of an RRBG written without matrices.
pub fn theta_closed(an: &Analysis, j: usize, table: &CharacterTable, w: usize) -> Vec<Cyclotomic> {
    let s = &an.semigroup;
    let rec = &an.records[j];
    s.elements()
        .map(|x| {
            if !an.green.j_leq(j, an.green.j_class_of(x)) {
                return Cyclotomic::zero();
            }
            let mut acc = Cyclotomic::zero();
            for &e in &rec.idempotents {
                let ex = s.mul(e, x);
                if s.omega_power(ex) == e {
                    let g = an.local(j, s.mul(ex, rec.e));
                    acc = acc + table.value(w, g).clone();
                }
            }
            acc
        })
        .collect()
}
