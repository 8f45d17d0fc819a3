use num_traits::Zero;

use super::{schutz::SchutzRep, Analysis};
use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::exact::{rat, Cyclotomic};
use crate::quiver::Vertex;

/// Composition multiplicity of the simple `(J_i, V)` in a module with
/// pointwise character `theta`:
/// `(1/|G_i|) Σ_g χ_V(g⁻¹) Σ_{J_m ≤ J_i} θ(g e_m) μ(J_m, J_i)`.
pub fn multiplicity(
    an: &Analysis,
    theta: &[Cyclotomic],
    i: usize,
    table: &CharacterTable,
    v: usize,
) -> Result<usize> {
    let s = &an.semigroup;
    let g_i = &an.subgroups[i];
    let lower: Vec<usize> = (0..an.num_j_classes()).filter(|&m| an.green.j_leq(m, i)).collect();
    let mut acc = Cyclotomic::zero();
    for (local, &g) in g_i.embedding.iter().enumerate() {
        let chi = table.value(v, g_i.group.inv(local));
        if chi.is_zero() {
            continue;
        }
        let mut inner = Cyclotomic::zero();
        for &m in &lower {
            let mu = an.mobius.get(m, i);
            if mu == 0 {
                continue;
            }
            let t = &theta[s.mul(g, an.records[m].e)];
            if !t.is_zero() {
                inner = inner + Cyclotomic::from_int(mu) * t.clone();
            }
        }
        acc = acc + chi * &inner;
    }
    let value = acc * Cyclotomic::from_rational(rat(1, g_i.group.order() as i64));
    match value.to_i64() {
        Some(n) if n >= 0 => Ok(n as usize),
        _ => Err(Error::internal(format!(
            "multiplicity {value} at J-class {i} is not a nonnegative integer"
        ))),
    }
}

/// Cartan matrix with rows and columns indexed by `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    pub vertices: Vec<Vertex>,
    pub entries: Vec<Vec<usize>>,
}

impl CartanMatrix {
    /// Diagonal 1 and zero unless the row apex lies strictly above the column apex.
    pub fn is_unipotent(&self, an: &Analysis) -> bool {
        self.vertices.iter().enumerate().all(|(r, vr)| {
            self.vertices.iter().enumerate().all(|(c, vc)| {
                let x = self.entries[r][c];
                if r == c {
                    x == 1
                } else if an.green.j_less(vc.jclass, vr.jclass) {
                    true
                } else {
                    x == 0
                }
            })
        })
    }

    /// Rows and columns permuted to the given vertex order (by id).
    pub fn reordered(&self, ids: &[usize]) -> Vec<Vec<usize>> {
        ids.iter()
            .map(|&r| ids.iter().map(|&c| self.entries[r][c]).collect())
            .collect()
    }
}

fn require(an: &Analysis, tables: &[CharacterTable]) -> Result<()> {
    an.require_rrbg()?;
    an.require_monoid()?;
    an.check_tables(tables)
}

/// Cartan entries from the character formula for idempotents of the lower class.
pub fn cartan_closed_form(an: &Analysis, tables: &[CharacterTable]) -> Result<CartanMatrix> {
    require(an, tables)?;
    let s = &an.semigroup;
    let vertices = an.vertices(tables);
    let n = vertices.len();
    let mut entries = vec![vec![0usize; n]; n];
    for (r, vr) in vertices.iter().enumerate() {
        for (c, vc) in vertices.iter().enumerate() {
            let (i, l) = (vr.jclass, vc.jclass);
            if i == l {
                entries[r][c] = usize::from(r == c);
                continue;
            }
            if !an.green.j_less(l, i) {
                continue;
            }
            let (ti, tl) = (&tables[i], &tables[l]);
            let v = ti.index_of(&vr.irr).unwrap();
            let w = tl.index_of(&vc.irr).unwrap();
            let g_i = &an.subgroups[i];
            let rec_l = &an.records[l];
            let between: Vec<usize> = (0..an.num_j_classes())
                .filter(|&m| an.green.j_leq(l, m) && an.green.j_leq(m, i))
                .collect();
            let mut acc = Cyclotomic::zero();
            for (local, &g) in g_i.embedding.iter().enumerate() {
                let chi_v = ti.value(v, g_i.group.inv(local));
                if chi_v.is_zero() {
                    continue;
                }
                let mut inner = Cyclotomic::zero();
                for &m in &between {
                    let mu = an.mobius.get(m, i);
                    if mu == 0 {
                        continue;
                    }
                    let gm = s.mul(g, an.records[m].e);
                    let mut sum = Cyclotomic::zero();
                    for &e in &rec_l.idempotents {
                        let x = s.mul(e, gm);
                        if s.omega_power(x) == e {
                            let h = an.local(l, s.mul(s.mul(e, g), rec_l.e));
                            sum = sum + tl.value(w, h).clone();
                        }
                    }
                    inner = inner + Cyclotomic::from_int(mu) * sum;
                }
                acc = acc + chi_v * &inner;
            }
            let value = acc * Cyclotomic::from_rational(rat(1, g_i.group.order() as i64));
            entries[r][c] = match value.to_i64() {
                Some(x) if x >= 0 => x as usize,
                _ => {
                    return Err(Error::internal(format!(
                        "Cartan entry {value} is not a nonnegative integer"
                    )))
                }
            };
        }
    }
    Ok(CartanMatrix { vertices, entries })
}

/// Cartan entries as composition multiplicities of induced modules, with
/// characters read off the Schützenberger representation.
pub fn cartan_oracle(an: &Analysis, tables: &[CharacterTable]) -> Result<CartanMatrix> {
    require(an, tables)?;
    let vertices = an.vertices(tables);
    let n = vertices.len();
    let mut entries = vec![vec![0usize; n]; n];
    let reps = (0..an.num_j_classes())
        .map(|j| SchutzRep::new(an, j))
        .collect::<Result<Vec<_>>>()?;
    for (c, vc) in vertices.iter().enumerate() {
        let l = vc.jclass;
        let theta = reps[l].theta(&tables[l], tables[l].index_of(&vc.irr).unwrap());
        for (r, vr) in vertices.iter().enumerate() {
            let i = vr.jclass;
            entries[r][c] = multiplicity(an, &theta, i, &tables[i], tables[i].index_of(&vr.irr).unwrap())?;
        }
    }
    Ok(CartanMatrix { vertices, entries })
}

/// The closed form, cross-checked entrywise against the oracle.
pub fn cartan_matrix(an: &Analysis, tables: &[CharacterTable]) -> Result<CartanMatrix> {
    let closed = cartan_closed_form(an, tables)?;
    let oracle = cartan_oracle(an, tables)?;
    if closed != oracle {
        return Err(Error::internal(format!(
            "Cartan routes disagree: {:?} vs {:?}",
            closed.entries, oracle.entries
        )));
    }
    Ok(closed)
}
