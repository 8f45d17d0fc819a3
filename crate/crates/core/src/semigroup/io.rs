use serde::{Deserialize, Serialize};

use super::{enumerate_from_generators, FiniteSemigroup};
use crate::error::Result;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub degree: usize,
    pub maps: Vec<Vec<usize>>,
}

/// On-disk form of a semigroup: an explicit table or transformation generators.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum SemigroupFile {
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default)]
        identity: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Generators {
        generators: GeneratorSpec,
        #[serde(default)]
        adjoin_identity: bool,
    },
}

impl SemigroupFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_semigroup(s: &FiniteSemigroup) -> Self {
        SemigroupFile::Table {
            order: s.order(),
            table: s.rows(),
            identity: s.identity(),
            labels: s.labels().map(|l| l.to_vec()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// Validates and builds. For generator input the identity is whichever
    /// element is the identity map, if any.
    pub fn build(&self, cap: usize) -> Result<FiniteSemigroup> {
        match self {
            SemigroupFile::Table {
                order,
                table,
                identity,
                labels,
            } => {
                if *order != table.len() {
                    return Err(crate::Error::input(format!(
                        "order: declared {order} but table has {} rows",
                        table.len()
                    )));
                }
                FiniteSemigroup::from_table(table.clone(), *identity, labels.clone())
            }
            SemigroupFile::Generators {
                generators,
                adjoin_identity,
            } => Ok(enumerate_from_generators(
                generators.degree,
                &generators.maps,
                *adjoin_identity,
                cap,
            )?
            .semigroup),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::DEFAULT_ELEMENT_CAP;

    #[test]
    fn table_round_trip() {
        let text = r#"{"order": 2, "table": [[0,0],[0,1]], "identity": 1}"#;
        let s = SemigroupFile::from_json(text).unwrap().build(10).unwrap();
        assert_eq!(s.identity(), Some(1));
        let back = SemigroupFile::from_json(&SemigroupFile::from_semigroup(&s).to_json())
            .unwrap()
            .build(10)
            .unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn generator_file() {
        let text = r#"{"generators": {"degree": 3, "maps": [[1,2,0],[1,0,2],[0,0,0],[1,1,1],[2,2,2]]}, "adjoin_identity": false}"#;
        let s = SemigroupFile::from_json(text)
            .unwrap()
            .build(DEFAULT_ELEMENT_CAP)
            .unwrap();
        assert_eq!(s.order(), 9);
        assert!(s.identity().is_some());
    }

    #[test]
    fn declared_order_must_match() {
        let text = r#"{"order": 3, "table": [[0]]}"#;
        let err = SemigroupFile::from_json(text).unwrap().build(10).unwrap_err();
        assert!(err.to_string().contains("order"));
    }
}
