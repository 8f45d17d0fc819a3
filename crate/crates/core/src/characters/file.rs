use serde::{Deserialize, Serialize};

use super::{CharacterTable, ConjugacyClasses, Irreducible};
use crate::error::{Error, Result};
use crate::exact::Cyclotomic;
use crate::semigroup::Group;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassEntry {
    pub rep: usize,
    pub size: usize,
}

/// One row; each value is a list of `[exponent, numerator, denominator]`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IrreducibleEntry {
    pub label: String,
    pub values: Vec<Vec<(i64, i64, i64)>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CharacterTableFile {
    pub group_order: usize,
    pub conductor: u32,
    pub classes: Vec<ClassEntry>,
    pub irreducibles: Vec<IrreducibleEntry>,
}

impl CharacterTableFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// Wire form of a table; conductor is the lcm over all values.
    pub fn from_table(t: &CharacterTable) -> Self {
        let conductor = t
            .irreducibles()
            .iter()
            .flat_map(|r| r.values.iter())
            .fold(1u32, |acc, v| num_integer::lcm(acc, v.conductor()));
        CharacterTableFile {
            group_order: t.group().order(),
            conductor,
            classes: t
                .classes()
                .classes
                .iter()
                .map(|c| ClassEntry { rep: c[0], size: c.len() })
                .collect(),
            irreducibles: t
                .irreducibles()
                .iter()
                .map(|r| IrreducibleEntry {
                    label: r.label.clone(),
                    values: r
                        .values
                        .iter()
                        .map(|v| v.to_wire(conductor).expect("small coefficients"))
                        .collect(),
                })
                .collect(),
        }
    }

    /// Validates against `group` and builds the table.
    pub fn build(&self, group: &Group) -> Result<CharacterTable> {
        if self.group_order != group.order() {
            return Err(Error::input(format!(
                "group_order: file says {}, group has order {}",
                self.group_order,
                group.order()
            )));
        }
        if self.conductor == 0 {
            return Err(Error::input("conductor: must be positive"));
        }
        let reps: Vec<usize> = self.classes.iter().map(|c| c.rep).collect();
        let classes = ConjugacyClasses::compute(group).reordered(&reps)?;
        for (i, (c, entry)) in classes.classes.iter().zip(&self.classes).enumerate() {
            if c.len() != entry.size {
                return Err(Error::input(format!(
                    "classes[{i}]: size {} but the class of {} has {} elements",
                    entry.size,
                    entry.rep,
                    c.len()
                )));
            }
        }
        let irreducibles = self
            .irreducibles
            .iter()
            .map(|row| {
                let values = row
                    .values
                    .iter()
                    .enumerate()
                    .map(|(j, v)| {
                        Cyclotomic::from_wire(self.conductor, v).ok_or_else(|| {
                            Error::input(format!("irreducible {}: value {j} is malformed", row.label))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Irreducible { label: row.label.clone(), values })
            })
            .collect::<Result<Vec<_>>>()?;
        CharacterTable::new(group.clone(), classes, irreducibles)
    }
}

/// Parses and validates a character-table file for `group`.
pub fn load_table(text: &str, group: &Group) -> Result<CharacterTable> {
    CharacterTableFile::from_json(text)?.build(group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::abelian_character_table;

    #[test]
    fn round_trip_c3() {
        let g = Group::cyclic(3);
        let t = abelian_character_table(&g).unwrap();
        let f = CharacterTableFile::from_table(&t);
        assert_eq!(f.conductor, 3);
        let back = load_table(&f.to_json(), &g).unwrap();
        assert_eq!(back.irreducibles(), t.irreducibles());
    }

    #[test]
    fn rejects_non_orthogonal_rows() {
        let g = Group::cyclic(2);
        let text = r#"{"group_order": 2, "conductor": 1,
            "classes": [{"rep": 0, "size": 1}, {"rep": 1, "size": 1}],
            "irreducibles": [{"label": "a", "values": [[[0,1,1]], [[0,1,1]]]},
                             {"label": "b", "values": [[[0,1,1]], [[0,1,1]]]}]}"#;
        let err = load_table(text, &g).unwrap_err();
        assert!(err.to_string().contains("a and b"), "{err}");
    }
}
