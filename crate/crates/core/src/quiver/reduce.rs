use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::rep::Analysis;
use crate::semigroup::{FiniteSemigroup, GreenData, Subgroup};

/// The monoid obtained from a pair `J_i < J_ℓ`: unit group `G_ℓ`, minimal
/// ideal a copy of `J_i`. Indices are local to `s2` unless stated otherwise.
#[derive(Clone, Debug)]
pub struct ReducedPair {
    pub lower: usize,
    pub upper: usize,
    pub s2: FiniteSemigroup,
    /// `to_parent[x]` is the element of the original semigroup.
    pub to_parent: Vec<usize>,
    pub unit_group: Subgroup,
    pub min_ideal: Vec<usize>,
    /// Idempotent of the minimal ideal, the image of `e_i e_ℓ`.
    pub e: usize,
    /// Maximal subgroup at `e`.
    pub h: Subgroup,
    /// `G_ℓ` (local) to `unit_group` (local).
    pub g_transport: Vec<usize>,
    /// `G_i` (local) to `h` (local), `g ↦ f g f`.
    pub h_transport: Vec<usize>,
    /// `I = S2 ∖ G`.
    pub ideal: Vec<usize>,
}

/// Cuts down to `e_ℓ S e_ℓ` and then removes everything not above `f = e_i e_ℓ`.
pub fn reduce_pair(an: &Analysis, lower: usize, upper: usize) -> Result<ReducedPair> {
    an.require_rrbg()?;
    an.require_monoid()?;
    if lower >= an.num_j_classes() || upper >= an.num_j_classes() {
        return Err(Error::input("J-class index out of range"));
    }
    if !an.green.j_less(lower, upper) {
        return Err(Error::precondition(format!(
            "J-class {lower} is not strictly below J-class {upper}"
        )));
    }
    let s = &an.semigroup;
    let e_l = an.records[upper].e;
    let e_i = an.records[lower].e;
    let f = s.mul(e_i, e_l);

    let m = s.local_monoid(e_l)?;
    let f_m = m.to_local(f).ok_or_else(|| Error::internal("e_i e_ℓ is not in e_ℓ S e_ℓ"))?;
    let green_m = GreenData::compute(&m.semigroup);
    let keep: Vec<usize> = m
        .semigroup
        .elements()
        .filter(|&x| green_m.element_j_leq(f_m, x))
        .collect();
    let sub = m.semigroup.subsemigroup(&keep, m.semigroup.identity())?;
    let to_parent: Vec<usize> = sub.embedding.iter().map(|&x| m.embedding[x]).collect();
    let s2 = sub.semigroup;
    let local: HashMap<usize, usize> = to_parent.iter().enumerate().map(|(k, &p)| (p, k)).collect();

    let e = local[&f];
    let one = s2.identity().expect("local monoid keeps its identity");
    let green2 = GreenData::compute(&s2);
    let bottom = green2.j_class_of(e);
    let top = green2.j_class_of(one);
    if bottom == top || !s2.elements().all(|x| green2.element_j_leq(e, x)) {
        return Err(Error::internal("reduced monoid does not have the expected minimal ideal"));
    }
    let unit_group = s2.maximal_subgroup(one)?;
    let h = s2.maximal_subgroup(e)?;
    let min_ideal = green2.j.classes[bottom].clone();

    let g_orig = &an.subgroups[upper];
    let g_transport: Vec<usize> = g_orig
        .embedding
        .iter()
        .map(|p| local.get(p).and_then(|&x| unit_group.to_local(x)))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::internal("G_ℓ does not survive the reduction"))?;
    if !g_orig.group.is_isomorphism(&unit_group.group, &g_transport) {
        return Err(Error::internal("unit group transport is not an isomorphism"));
    }
    let h_orig = &an.subgroups[lower];
    let h_transport: Vec<usize> = h_orig
        .embedding
        .iter()
        .map(|&p| {
            let q = s.mul(s.mul(f, p), f);
            local.get(&q).and_then(|&x| h.to_local(x))
        })
        .collect::<Option<_>>()
        .ok_or_else(|| Error::internal("f G_i f is not the maximal subgroup at f"))?;
    if !h_orig.group.is_isomorphism(&h.group, &h_transport) {
        return Err(Error::internal("g ↦ f g f is not an isomorphism G_i → G_f"));
    }
    let ideal = s2
        .elements()
        .filter(|&x| unit_group.to_local(x).is_none())
        .collect();
    Ok(ReducedPair {
        lower,
        upper,
        s2,
        to_parent,
        unit_group,
        min_ideal,
        e,
        h,
        g_transport,
        h_transport,
        ideal,
    })
}
