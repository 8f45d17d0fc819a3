use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{reduce_pair, smile_and_approx, ApproxStructure, Arrow, QuiverGraph, ReducedPair};
use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::exact::{rat, Cyclotomic, Matrix, Rational, RowSpace};
use crate::rep::Analysis;

/// `tr_M(h, g)`: trace of `m ↦ h m g` on `M = ker(kX → kH)`, with `h` local
/// to `H` and `g` local to the unit group.
pub fn m_character(rp: &ReducedPair, ap: &ApproxStructure, h: usize, g: usize) -> i64 {
    let on_x = (0..ap.len())
        .filter(|&c| ap.g_action[ap.h_action[h][c]][g] == c)
        .count() as i64;
    let hg = &rp.h.group;
    let psi_g = rp
        .h
        .to_local(rp.s2.mul(rp.unit_group.embedding[g], rp.e))
        .expect("g e lies in H");
    let on_h = hg
        .elements()
        .filter(|&y| hg.mul(hg.mul(h, y), psi_g) == y)
        .count() as i64;
    on_x - on_h
}

/// Which argument carries the inverse when contracting `U` against `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Contraction {
    /// `θ_U(g) = (1/|H|) Σ_h χ_U(h) tr_M(h⁻¹, g)`, the coinvariant formula.
    InverseH,
    /// `θ_U(g) = (1/|H|) Σ_h χ_U(h) tr_M(h, g)`. Kept to show it is wrong.
    Direct,
}

/// Tables of `G_i` and `G_ℓ` moved onto `H` and the unit group of `rp`.
pub fn transported_tables(
    rp: &ReducedPair,
    table_lower: &CharacterTable,
    table_upper: &CharacterTable,
) -> Result<(CharacterTable, CharacterTable)> {
    Ok((
        table_lower.transport(&rp.h.group, &rp.h_transport)?,
        table_upper.transport(&rp.unit_group.group, &rp.g_transport)?,
    ))
}

/// Multiplicity of each `V ∈ Irr(G)` in `U ⊗_{kH} M`, rows indexed by `U ∈ Irr(H)`.
pub fn arrows_between(
    rp: &ReducedPair,
    ap: &ApproxStructure,
    table_h: &CharacterTable,
    table_g: &CharacterTable,
) -> Result<Vec<Vec<usize>>> {
    arrows_between_with(rp, ap, table_h, table_g, Contraction::InverseH)
}

pub fn arrows_between_with(
    rp: &ReducedPair,
    ap: &ApproxStructure,
    table_h: &CharacterTable,
    table_g: &CharacterTable,
    contraction: Contraction,
) -> Result<Vec<Vec<usize>>> {
    let hg = &rp.h.group;
    // tr_M on (h, class representative of g)
    let traces: Vec<Vec<i64>> = hg
        .elements()
        .map(|h| {
            let h = match contraction {
                Contraction::InverseH => hg.inv(h),
                Contraction::Direct => h,
            };
            table_g
                .classes()
                .representatives
                .iter()
                .map(|&g| m_character(rp, ap, h, g))
                .collect()
        })
        .collect();
    let scale = Cyclotomic::from_rational(rat(1, hg.order() as i64));
    (0..table_h.len())
        .map(|u| {
            let values = (0..table_g.classes().len())
                .map(|c| {
                    let mut acc = Cyclotomic::zero();
                    for h in hg.elements() {
                        let t = traces[h][c];
                        if t != 0 {
                            acc = acc + Cyclotomic::from_int(t) * table_h.value(u, h).clone();
                        }
                    }
                    acc * scale.clone()
                })
                .collect();
            let theta = crate::characters::ClassFunction { values };
            (0..table_g.len())
                .map(|v| table_g.multiplicity(&theta, &table_g.character(v)))
                .collect::<Result<Vec<_>>>()
        })
        .collect()
}

/// `dim Hom_G(V, U ⊗_{kH} M)` for linear `U` and `V`, by building the
/// tensor product as an explicit quotient of `M` and projecting onto the
/// `V`-isotypic part.
pub fn ext_oracle_explicit(
    rp: &ReducedPair,
    ap: &ApproxStructure,
    table_h: &CharacterTable,
    u: usize,
    table_g: &CharacterTable,
    v: usize,
) -> Result<usize> {
    if table_h.degree(u) != 1 || table_g.degree(v) != 1 {
        return Err(Error::precondition("explicit oracle needs linear characters"));
    }
    let nx = ap.len();
    let hg = &rp.h.group;
    let gg = &rp.unit_group.group;
    let eps = Matrix::from_fn(hg.order(), nx, |h, c| {
        if ap.epsilon[c] == h {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let m_basis: Vec<Vec<Cyclotomic>> = eps
        .nullspace()
        .into_iter()
        .map(|v| v.into_iter().map(Cyclotomic::from_rational).collect())
        .collect();
    let act_h = |h: usize, x: &[Cyclotomic]| {
        let mut out = vec![Cyclotomic::zero(); nx];
        for (c, val) in x.iter().enumerate() {
            if !val.is_zero() {
                let t = ap.h_action[h][c];
                out[t] = &out[t] + val;
            }
        }
        out
    };
    let act_g = |g: usize, x: &[Cyclotomic]| {
        let mut out = vec![Cyclotomic::zero(); nx];
        for (c, val) in x.iter().enumerate() {
            if !val.is_zero() {
                let t = ap.g_action[c][g];
                out[t] = &out[t] + val;
            }
        }
        out
    };
    let scale = Cyclotomic::from_rational(rat(1, gg.order() as i64));
    let project = |x: &[Cyclotomic]| {
        let mut out = vec![Cyclotomic::zero(); nx];
        for g in gg.elements() {
            let coeff = table_g.value(v, gg.inv(g)) * &scale;
            for (o, y) in out.iter_mut().zip(act_g(g, x)) {
                if !y.is_zero() {
                    *o = &*o + &(&coeff * &y);
                }
            }
        }
        out
    };
    let mut image_m = RowSpace::new(nx);
    let mut image_r = RowSpace::new(nx);
    for m in &m_basis {
        image_m.insert(project(m));
        for h in hg.elements() {
            let chi = table_h.value(u, h);
            let r: Vec<Cyclotomic> = act_h(h, m)
                .iter()
                .zip(m)
                .map(|(a, b)| a - &(chi * b))
                .collect();
            image_r.insert(project(&r));
        }
    }
    Ok(image_m.rank() - image_r.rank())
}

/// Per-pair data gathered while assembling a quiver.
#[derive(Clone, Debug)]
pub struct PairReport {
    pub lower: usize,
    pub upper: usize,
    pub s2_order: usize,
    pub x_size: usize,
    pub h_order: usize,
    pub g_order: usize,
    /// `matrix[U][V]`, irreducibles in the order of the input tables.
    pub matrix: Vec<Vec<usize>>,
    pub degrees_lower: Vec<usize>,
    pub degrees_upper: Vec<usize>,
    pub oracle_checked: bool,
}

impl PairReport {
    /// `Σ dim U · dim V · mult`, which must equal `|X| - |H|`.
    pub fn mass(&self) -> usize {
        let mut total = 0;
        for (u, row) in self.matrix.iter().enumerate() {
            for (v, &m) in row.iter().enumerate() {
                total += self.degrees_lower[u] * self.degrees_upper[v] * m;
            }
        }
        total
    }
}

#[derive(Clone, Debug)]
pub struct QuiverReport {
    pub graph: QuiverGraph,
    pub pairs: Vec<PairReport>,
}

/// The quiver of an RRBG monoid. With `oracle`, every pair whose groups are
/// abelian is also computed by [`ext_oracle_explicit`]; a mismatch is an
/// internal error.
pub fn full_quiver(an: &Analysis, tables: &[CharacterTable], oracle: bool) -> Result<QuiverReport> {
    an.require_rrbg()?;
    an.require_monoid()?;
    an.check_tables(tables)?;
    let vertices = an.vertices(tables);
    let id: HashMap<(usize, &str), usize> = vertices
        .iter()
        .map(|v| ((v.jclass, v.irr.as_str()), v.id))
        .collect();
    let mut arrows = Vec::new();
    let mut pairs = Vec::new();
    let order = &an.green.principal_order;
    for &i in order {
        for &l in order {
            if !an.green.j_less(i, l) {
                continue;
            }
            let rp = reduce_pair(an, i, l)?;
            let ap = smile_and_approx(&rp)?;
            let (th, tg) = transported_tables(&rp, &tables[i], &tables[l])?;
            let matrix = arrows_between(&rp, &ap, &th, &tg)?;
            let report = PairReport {
                lower: i,
                upper: l,
                s2_order: rp.s2.order(),
                x_size: ap.len(),
                h_order: rp.h.group.order(),
                g_order: rp.unit_group.group.order(),
                degrees_lower: (0..th.len()).map(|u| th.degree(u)).collect(),
                degrees_upper: (0..tg.len()).map(|v| tg.degree(v)).collect(),
                matrix,
                oracle_checked: oracle && rp.h.group.is_abelian() && rp.unit_group.group.is_abelian(),
            };
            let expected = m_character(&rp, &ap, rp.h.group.identity(), rp.unit_group.group.identity());
            if report.mass() as i64 != expected {
                return Err(Error::internal(format!(
                    "arrow mass {} differs from dim M = {expected} for J-classes {i} < {l}",
                    report.mass()
                )));
            }
            if report.oracle_checked {
                for u in 0..th.len() {
                    for v in 0..tg.len() {
                        let direct = ext_oracle_explicit(&rp, &ap, &th, u, &tg, v)?;
                        if direct != report.matrix[u][v] {
                            return Err(Error::internal(format!(
                                "oracle disagrees for J-classes {i} < {l}, U = {}, V = {}: {} vs {direct}",
                                th.labels()[u],
                                tg.labels()[v],
                                report.matrix[u][v]
                            )));
                        }
                    }
                }
            }
            for (u, row) in report.matrix.iter().enumerate() {
                for (v, &mult) in row.iter().enumerate() {
                    if mult > 0 {
                        arrows.push(Arrow {
                            from: id[&(i, th.labels()[u].as_str())],
                            to: id[&(l, tg.labels()[v].as_str())],
                            mult,
                        });
                    }
                }
            }
            pairs.push(report);
        }
    }
    arrows.sort_by_key(|a| (a.from, a.to));
    Ok(QuiverReport {
        graph: QuiverGraph { vertices, arrows },
        pairs,
    })
}
