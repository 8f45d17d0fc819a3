//! Quivers of right regular bands of groups.
//!
//! For each pair of J-classes `J_i < J_ℓ` the semigroup is cut down to a
//! monoid whose unit group is `G_ℓ` and whose minimal ideal is (a copy of)
//! `J_i`. Arrow counts then come from the character of a bimodule `M` built
//! from the set `X` of classes of the minimal ideal under an equivalence
//! generated by common idempotent stabilisers.

mod approx;
mod arrows;
mod reduce;

pub use approx::{smile_and_approx, ApproxStructure};
pub use arrows::{
    arrows_between, arrows_between_with, ext_oracle_explicit, full_quiver, m_character,
    transported_tables, Contraction, PairReport, QuiverReport,
};
pub use reduce::{reduce_pair, ReducedPair};

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// A simple module: a J-class together with an irreducible of its group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    pub jclass: usize,
    pub irr: String,
    pub display: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub mult: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverGraph {
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
}

impl QuiverGraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Graphviz source; multiplicities above one become edge labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        let mut vertices: Vec<&Vertex> = self.vertices.iter().collect();
        vertices.sort_by_key(|v| v.id);
        for v in &vertices {
            let _ = writeln!(out, "  {:?};", v.display);
        }
        let name = |id: usize| &self.vertices.iter().find(|v| v.id == id).unwrap().display;
        for a in &self.arrows {
            let _ = if a.mult > 1 {
                writeln!(out, "  {:?} -> {:?} [label=\"{}\"];", name(a.from), name(a.to), a.mult)
            } else {
                writeln!(out, "  {:?} -> {:?};", name(a.from), name(a.to))
            };
        }
        out.push_str("}\n");
        out
    }

    /// Total number of arrows counted with multiplicity.
    pub fn arrow_count(&self) -> usize {
        self.arrows.iter().map(|a| a.mult).sum()
    }

    pub fn vertex(&self, id: usize) -> &Vertex {
        self.vertices.iter().find(|v| v.id == id).expect("vertex id exists")
    }

    /// Arrows keyed by the display labels of their endpoints.
    pub fn labelled_edges(&self) -> BTreeMap<(String, String), usize> {
        let mut out = BTreeMap::new();
        for a in &self.arrows {
            *out.entry((self.vertex(a.from).display.clone(), self.vertex(a.to).display.clone()))
                .or_insert(0) += a.mult;
        }
        out
    }

    /// Equal as labelled multidigraphs, vertices matched by display label.
    pub fn same_labelled(&self, other: &QuiverGraph) -> bool {
        let mut a: Vec<&str> = self.vertices.iter().map(|v| v.display.as_str()).collect();
        let mut b: Vec<&str> = other.vertices.iter().map(|v| v.display.as_str()).collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b && self.labelled_edges() == other.labelled_edges()
    }
}
