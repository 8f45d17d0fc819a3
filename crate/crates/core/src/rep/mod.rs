//! Representation theory of a regular semigroup through its J-classes:
//! sandwich matrices, directedness, induced characters, Cartan matrices,
//! the semisimple quotient of an RRBG algebra and Nico's bound.

mod cartan;
mod nico;
mod quotient;
mod sandwich;
mod schutz;

pub use cartan::{cartan_closed_form, cartan_matrix, cartan_oracle, multiplicity, CartanMatrix};
pub use nico::{nico_bound, nico_sigma, NicoData};
pub use quotient::{semisimple_quotient, SemisimpleQuotientData};
pub use sandwich::{is_directed, sandwich_matrix, ClassDirectedness, DirectednessReport, SandwichMatrix};
pub use schutz::{theta_closed, SchutzRep};

use crate::characters::{abelian_character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::poset::{FinitePoset, MobiusTable};
use crate::quiver::Vertex;
use crate::semigroup::{FiniteSemigroup, GreenData, JClassRecord, Subgroup};

/// Everything derived from a regular semigroup that the representation
/// theory needs, computed once.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub semigroup: FiniteSemigroup,
    pub green: GreenData,
    pub records: Vec<JClassRecord>,
    pub subgroups: Vec<Subgroup>,
    pub poset: FinitePoset,
    pub mobius: MobiusTable,
}

impl Analysis {
    /// Fails with a precondition error naming a non-regular element.
    pub fn new(semigroup: FiniteSemigroup) -> Result<Self> {
        let green = GreenData::compute(&semigroup);
        let records = match JClassRecord::all(&semigroup, &green) {
            Ok(r) => r,
            Err(Error::Precondition(_)) => {
                let x = semigroup.first_non_regular().unwrap_or(0);
                return Err(Error::precondition(format!(
                    "semigroup is not regular: element {} has no weak inverse",
                    semigroup.label(x)
                )));
            }
            Err(e) => return Err(e),
        };
        let subgroups = records
            .iter()
            .map(|r| semigroup.maximal_subgroup(r.e))
            .collect::<Result<Vec<_>>>()?;
        let poset = FinitePoset::from_green(&green);
        let mobius = poset.mobius();
        Ok(Analysis {
            semigroup,
            green,
            records,
            subgroups,
            poset,
            mobius,
        })
    }

    pub fn num_j_classes(&self) -> usize {
        self.records.len()
    }

    pub fn require_rrbg(&self) -> Result<()> {
        match self.semigroup.first_rrbg_violation() {
            None => Ok(()),
            Some((a, b)) => Err(Error::precondition(format!(
                "not a right regular band of groups (identities fail at {}, {})",
                self.semigroup.label(a),
                self.semigroup.label(b)
            ))),
        }
    }

    pub fn require_monoid(&self) -> Result<()> {
        if self.semigroup.identity().is_none() {
            return Err(Error::precondition(
                "a monoid is required; adjoin an identity explicitly",
            ));
        }
        Ok(())
    }

    /// Built-in tables for every maximal subgroup; fails on a non-abelian one.
    pub fn default_tables(&self) -> Result<Vec<CharacterTable>> {
        self.subgroups
            .iter()
            .enumerate()
            .map(|(j, g)| {
                abelian_character_table(&g.group).map_err(|_| {
                    Error::precondition(format!(
                        "no character table for J-class {j}: its maximal subgroup is not abelian"
                    ))
                })
            })
            .collect()
    }

    /// Tables must be given in J-class order, each for that class's maximal subgroup.
    pub fn check_tables(&self, tables: &[CharacterTable]) -> Result<()> {
        if tables.len() != self.num_j_classes() {
            return Err(Error::input(format!(
                "{} character tables for {} J-classes",
                tables.len(),
                self.num_j_classes()
            )));
        }
        for (j, (t, g)) in tables.iter().zip(&self.subgroups).enumerate() {
            if t.group() != &g.group {
                return Err(Error::input(format!(
                    "character table for J-class {j} does not match its maximal subgroup"
                )));
            }
        }
        Ok(())
    }

    /// Simple modules as (J-class, irreducible), J-classes in principal order.
    pub fn vertices(&self, tables: &[CharacterTable]) -> Vec<Vertex> {
        let mut out = Vec::new();
        for &j in &self.green.principal_order {
            for label in tables[j].labels() {
                out.push(Vertex {
                    id: out.len(),
                    jclass: j,
                    display: format!("J{j}:{label}"),
                    irr: label,
                });
            }
        }
        out
    }

    /// `g` (parent index, in `G_j`) as a local index of the subgroup.
    pub(crate) fn local(&self, j: usize, g: usize) -> usize {
        self.subgroups[j]
            .to_local(g)
            .expect("element lies in the maximal subgroup")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_regular_input_is_a_precondition_error() {
        let null = FiniteSemigroup::from_table(vec![vec![1, 1], vec![1, 1]], None, None).unwrap();
        let err = Analysis::new(null).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("element 0"), "{err}");
    }
}
