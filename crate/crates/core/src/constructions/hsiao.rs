use std::collections::HashMap;

use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::quiver::{full_quiver, Arrow, QuiverGraph, QuiverReport, Vertex};
use crate::rep::Analysis;
use crate::semigroup::{FiniteSemigroup, Group, DEFAULT_ELEMENT_CAP};

/// `((P_1, g_1), …, (P_r, g_r))`; points are `0..n`, blocks sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedGPartition {
    pub blocks: Vec<(Vec<usize>, usize)>,
}

impl OrderedGPartition {
    fn key(&self) -> (usize, Vec<Vec<usize>>, Vec<usize>) {
        (
            self.blocks.len(),
            self.blocks.iter().map(|b| b.0.clone()).collect(),
            self.blocks.iter().map(|b| b.1).collect(),
        )
    }

    /// `(P_i ∩ Q_j, g_i h_j)`, `i` outer and `j` inner, empties dropped.
    pub fn product(&self, other: &Self, g: &Group) -> Self {
        let mut blocks = Vec::new();
        for (p, a) in &self.blocks {
            for (q, b) in &other.blocks {
                let meet: Vec<usize> = p.iter().copied().filter(|x| q.contains(x)).collect();
                if !meet.is_empty() {
                    blocks.push((meet, g.mul(*a, *b)));
                }
            }
        }
        OrderedGPartition { blocks }
    }

    /// Underlying set partition, blocks sorted by minimum.
    pub fn shape(&self) -> Vec<Vec<usize>> {
        let mut s: Vec<Vec<usize>> = self.blocks.iter().map(|b| b.0.clone()).collect();
        s.sort();
        s
    }

    pub fn label(&self, g: &Group) -> String {
        self.blocks
            .iter()
            .map(|(p, x)| {
                let pts = block_name(p);
                if g.order() > 1 {
                    format!("{pts}:{x}")
                } else {
                    pts
                }
            })
            .collect::<Vec<_>>()
            .join("|")
    }
}

fn block_name(p: &[usize]) -> String {
    let sep = if p.iter().any(|&x| x >= 9) { "," } else { "" };
    p.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(sep)
}

/// Set partitions of `0..n` in restricted-growth order, blocks sorted by minimum.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut rgs: Vec<Vec<usize>> = vec![vec![]];
    for k in 0..n {
        let mut next = Vec::new();
        for s in &rgs {
            let m = s.iter().max().map_or(0, |&m| m + 1);
            for b in 0..=m.min(k) {
                let mut t = s.clone();
                t.push(b);
                next.push(t);
            }
        }
        rgs = next;
    }
    rgs.into_iter()
        .map(|s| {
            let r = s.iter().max().map_or(0, |&m| m + 1);
            let mut blocks = vec![Vec::new(); r];
            for (x, &b) in s.iter().enumerate() {
                blocks[b].push(x);
            }
            blocks
        })
        .collect()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Hsiao's monoid of ordered G-partitions together with its elements.
#[derive(Clone, Debug)]
pub struct HsiaoSemigroup {
    pub n: usize,
    pub group: Group,
    pub elements: Vec<OrderedGPartition>,
    pub semigroup: FiniteSemigroup,
}

/// Elements ordered by block count, then blocks, then group labels.
pub fn hsiao_semigroup(n: usize, g: &Group) -> Result<HsiaoSemigroup> {
    if n == 0 {
        return Err(Error::input("n: must be at least 1"));
    }
    let mut size: usize = 0;
    let parts = set_partitions(n);
    for p in &parts {
        let r = p.len();
        let fact: usize = (1..=r).product();
        size = g
            .order()
            .checked_pow(r as u32)
            .and_then(|x| x.checked_mul(fact))
            .and_then(|x| x.checked_add(size))
            .filter(|&x| x <= DEFAULT_ELEMENT_CAP)
            .ok_or(Error::TooLarge { cap: DEFAULT_ELEMENT_CAP })?;
    }
    let mut elements = Vec::with_capacity(size);
    for p in &parts {
        let r = p.len();
        for perm in permutations(r) {
            let ordered: Vec<Vec<usize>> = perm.iter().map(|&i| p[i].clone()).collect();
            for code in 0..g.order().pow(r as u32) {
                let mut labels = vec![0; r];
                let mut c = code;
                for slot in labels.iter_mut().rev() {
                    *slot = c % g.order();
                    c /= g.order();
                }
                elements.push(OrderedGPartition {
                    blocks: ordered.iter().cloned().zip(labels).collect(),
                });
            }
        }
    }
    elements.sort_by_key(OrderedGPartition::key);
    let index: HashMap<&OrderedGPartition, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let m = elements.len();
    let mut table = Vec::with_capacity(m * m);
    for a in &elements {
        for b in &elements {
            table.push(index[&a.product(b, g)] as u32);
        }
    }
    let identity = index[&OrderedGPartition {
        blocks: vec![((0..n).collect(), g.identity())],
    }];
    let labels = elements.iter().map(|e| e.label(g)).collect();
    let semigroup = FiniteSemigroup::from_flat_unchecked(m, table, Some(identity), Some(labels));
    if !semigroup.opposite().is_rrbg() {
        return Err(Error::internal("ordered G-partitions fail the band-of-groups identities"));
    }
    Ok(HsiaoSemigroup {
        n,
        group: g.clone(),
        elements,
        semigroup,
    })
}

/// Display form of an irreducible-labelled set partition, e.g. `12:chi1|3:chi0`.
fn labelled_partition(blocks: &[(Vec<usize>, String)]) -> String {
    let mut b: Vec<&(Vec<usize>, String)> = blocks.iter().collect();
    b.sort();
    b.iter()
        .map(|(p, l)| format!("{}:{l}", block_name(p)))
        .collect::<Vec<_>>()
        .join("|")
}

/// Quiver on `Irr(G)`-labelled set partitions: from each vertex and each
/// unordered pair of its blocks, `⟨χ_U, χ_{V_i} χ_{V_j}⟩` arrows to the
/// vertex with the two blocks merged and labelled `U`.
pub fn hsiao_quiver_closed_form(n: usize, table: &CharacterTable) -> QuiverGraph {
    let labels = table.labels();
    let k = labels.len();
    let mut vertices = Vec::new();
    let mut id: HashMap<String, usize> = HashMap::new();
    let mut labelled: Vec<Vec<(Vec<usize>, usize)>> = Vec::new();
    for (j, p) in set_partitions(n).into_iter().enumerate() {
        let r = p.len();
        for code in 0..k.pow(r as u32) {
            let mut irr = vec![0; r];
            let mut c = code;
            for slot in irr.iter_mut().rev() {
                *slot = c % k;
                c /= k;
            }
            let blocks: Vec<(Vec<usize>, usize)> = p.iter().cloned().zip(irr).collect();
            let named: Vec<(Vec<usize>, String)> =
                blocks.iter().map(|(b, i)| (b.clone(), labels[*i].clone())).collect();
            let display = labelled_partition(&named);
            id.insert(display.clone(), vertices.len());
            vertices.push(Vertex {
                id: vertices.len(),
                jclass: j,
                irr: named.iter().map(|x| x.1.clone()).collect::<Vec<_>>().join(","),
                display,
            });
            labelled.push(blocks);
        }
    }
    let mut arrows = Vec::new();
    for (from, blocks) in labelled.iter().enumerate() {
        for a in 0..blocks.len() {
            for b in a + 1..blocks.len() {
                let prod = table.tensor(&table.character(blocks[a].1), &table.character(blocks[b].1));
                for (u, label) in labels.iter().enumerate() {
                    let mult = table
                        .multiplicity(&table.character(u), &prod)
                        .expect("products of characters decompose");
                    if mult == 0 {
                        continue;
                    }
                    let mut merged: Vec<(Vec<usize>, String)> = blocks
                        .iter()
                        .enumerate()
                        .filter(|(c, _)| *c != a && *c != b)
                        .map(|(_, (p, i))| (p.clone(), labels[*i].clone()))
                        .collect();
                    let mut union = blocks[a].0.clone();
                    union.extend(&blocks[b].0);
                    union.sort_unstable();
                    merged.push((union, label.clone()));
                    arrows.push(Arrow {
                        from,
                        to: id[&labelled_partition(&merged)],
                        mult,
                    });
                }
            }
        }
    }
    arrows.sort_by_key(|x| (x.from, x.to));
    QuiverGraph { vertices, arrows }
}

/// The quiver of `opposite(Σₙᴳ)` by the general algorithm, with vertices
/// renamed to labelled set partitions so it can be compared with
/// [`hsiao_quiver_closed_form`].
pub fn hsiao_quiver_general(n: usize, table: &CharacterTable, oracle: bool) -> Result<QuiverReport> {
    let g = table.group();
    let h = hsiao_semigroup(n, g)?;
    let an = Analysis::new(h.semigroup.opposite())?;
    // In the opposite monoid the H-class of an r-block idempotent is (G^op)^r,
    // with elements numbered like G^r. A table of G is one of G^op as well.
    let table_op = table.on_opposite()?;
    let mut tables = Vec::new();
    for (j, rec) in an.records.iter().enumerate() {
        let r = h.elements[rec.e].blocks.len();
        let power = table_op.power(r)?;
        let sub = &an.subgroups[j];
        let iso: Vec<usize> = (0..power.group().order())
            .map(|code| {
                let mut labels = vec![0; r];
                let mut c = code;
                for slot in labels.iter_mut().rev() {
                    *slot = c % g.order();
                    c /= g.order();
                }
                let blocks = h.elements[rec.e].blocks.iter().map(|b| b.0.clone()).zip(labels).collect();
                let x = h.elements.binary_search_by_key(&OrderedGPartition { blocks }.key(), OrderedGPartition::key).unwrap();
                sub.to_local(x).expect("element of the H-class")
            })
            .collect();
        tables.push(power.transport(&sub.group, &iso)?);
    }
    let mut report = full_quiver(&an, &tables, oracle)?;
    for v in &mut report.graph.vertices {
        let rec = &an.records[v.jclass];
        let blocks = &h.elements[rec.e].blocks;
        let names: Vec<String> = if blocks.len() == 1 {
            vec![v.irr.clone()]
        } else {
            split_tuple(&v.irr)
        };
        let named: Vec<(Vec<usize>, String)> = blocks.iter().map(|b| b.0.clone()).zip(names).collect();
        v.display = labelled_partition(&named);
    }
    Ok(report)
}

/// `"(a,b,c)"` into its top-level components.
fn split_tuple(s: &str) -> Vec<String> {
    let inner = &s[1..s.len() - 1];
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in inner.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur);
    out
}
