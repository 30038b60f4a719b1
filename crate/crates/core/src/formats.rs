//! JSON inputs: group files, subgroup specs and connection-set files.
//!
//! Group file, exactly one of `table` / `permutation_generators`:
//!
//! ```json
//! {"name": "Z3", "order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]}
//! {"degree": 3, "permutation_generators": [[1,0,2],[1,2,0]]}
//! ```
//!
//! Subgroup: `{"generators": [ids]}` or `{"members": [ids]}`.
//! Connection set: a bare id array, or any object with an `"S"` array (such
//! as the output of `build`).

use serde::Deserialize;

use crate::cosets::Subgroup;
use crate::error::{Error, Result};
use crate::group::{ElementId, GroupTable, Permutation};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    name: Option<String>,
    order: Option<usize>,
    table: Option<Vec<Vec<usize>>>,
    degree: Option<usize>,
    permutation_generators: Option<Vec<Vec<usize>>>,
}

fn invalid(reason: impl Into<String>) -> Error {
    Error::InvalidInput {
        reason: reason.into(),
    }
}

pub fn group_from_json(text: &str) -> Result<GroupTable> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| invalid(format!("group file: {e}")))?;
    let group = match (file.table, file.permutation_generators) {
        (Some(table), None) => {
            let order = file.order.unwrap_or(table.len());
            GroupTable::from_table(order, table)?
        }
        (None, Some(gens)) => {
            let degree = file
                .degree
                .or_else(|| gens.first().map(Vec::len))
                .ok_or_else(|| invalid("group file: `degree` missing"))?;
            let gens = gens
                .into_iter()
                .map(Permutation::new)
                .collect::<Result<Vec<_>>>()?;
            GroupTable::from_permutation_generators(degree, &gens)?
        }
        _ => {
            return Err(invalid(
                "group file needs exactly one of `table` and `permutation_generators`",
            ))
        }
    };
    Ok(match file.name {
        Some(name) => group.with_name(name),
        None => group,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum SubgroupSpec {
    Generators(Vec<ElementId>),
    Members(Vec<ElementId>),
}

impl SubgroupSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| invalid(format!("subgroup spec: {e}")))
    }

    /// `members:[0,3]` or `generators:[2]`.
    pub fn parse_inline(text: &str) -> Result<Self> {
        let (kind, list) = text
            .split_once(':')
            .ok_or_else(|| invalid(format!("subgroup spec `{text}`")))?;
        let ids: Vec<ElementId> =
            serde_json::from_str(list).map_err(|e| invalid(format!("subgroup id list: {e}")))?;
        match kind {
            "members" => Ok(SubgroupSpec::Members(ids)),
            "generators" => Ok(SubgroupSpec::Generators(ids)),
            _ => Err(invalid(format!("unknown subgroup spec kind `{kind}`"))),
        }
    }

    pub fn resolve<'g>(&self, group: &'g GroupTable) -> Result<Subgroup<'g>> {
        match self {
            SubgroupSpec::Generators(ids) => Subgroup::closure(group, ids.iter().copied()),
            SubgroupSpec::Members(ids) => Subgroup::from_members(group, ids.iter().copied()),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SetFile {
    Bare(Vec<ElementId>),
    Wrapped {
        #[serde(rename = "S")]
        s: Vec<ElementId>,
    },
}

pub fn id_set_from_json(text: &str) -> Result<Vec<ElementId>> {
    let file: SetFile = serde_json::from_str(text)
        .map_err(|e| invalid(format!("set file must be an id array or an object with \"S\": {e}")))?;
    let mut ids = match file {
        SetFile::Bare(ids) => ids,
        SetFile::Wrapped { s } => s,
    };
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_from_table_file() {
        let g = group_from_json(r#"{"name": "Z3", "order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]}"#).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.name(), Some("Z3"));
    }

    #[test]
    fn group_from_generator_file() {
        let g = group_from_json(r#"{"degree": 3, "permutation_generators": [[1,0,2],[1,2,0]]}"#).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.permutations().is_some());
    }

    #[test]
    fn group_file_needs_exactly_one_source() {
        for text in [
            r#"{"order": 1}"#,
            r#"{"order": 1, "table": [[0]], "degree": 1, "permutation_generators": [[0]]}"#,
            r#"{"tabel": [[0]]}"#,
        ] {
            assert!(matches!(group_from_json(text), Err(Error::InvalidInput { .. })), "{text}");
        }
        assert!(matches!(
            group_from_json(r#"{"order": 2, "table": [[0,1],[1,1]]}"#),
            Err(Error::NotAGroup { .. })
        ));
    }

    #[test]
    fn subgroup_specs() {
        assert_eq!(
            SubgroupSpec::from_json(r#"{"members": [0, 3]}"#).unwrap(),
            SubgroupSpec::Members(vec![0, 3])
        );
        assert_eq!(
            SubgroupSpec::parse_inline("generators:[2]").unwrap(),
            SubgroupSpec::Generators(vec![2])
        );
        assert!(SubgroupSpec::parse_inline("members:0,1").is_err());
        assert!(SubgroupSpec::parse_inline("nope:[1]").is_err());
    }

    #[test]
    fn set_files() {
        assert_eq!(id_set_from_json("[5, 1, 3]").unwrap(), vec![1, 3, 5]);
        assert_eq!(id_set_from_json(r#"{"a": 1, "S": [3]}"#).unwrap(), vec![3]);
        assert!(id_set_from_json(r#"{"T": [3]}"#).is_err());
    }
}
