use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use super::SuiteError;
use crate::group::{core, is_normal, right_cosets, CosetDecomposition, FiniteGroup, GroupDescriptor, Subgroup};
use crate::isotopy::{classify, ClassPartition, Relation};
use crate::right_loop::RightLoop;
use crate::transversal::{enumerate_transversals, Transversal, TransversalError};

/// Facts that must reproduce exactly when present.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedFacts {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub itp: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iso: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub loop_transversals: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub label: String,
    pub group: String,
    pub subgroup: String,
    #[serde(default)]
    pub expected: ExpectedFacts,
}

impl CatalogEntry {
    fn new(label: &str, group: &str, subgroup: &str, expected: ExpectedFacts) -> Self {
        CatalogEntry { label: label.into(), group: group.into(), subgroup: subgroup.into(), expected }
    }
}

fn facts(normal: bool, itp: Option<usize>, iso: Option<usize>, loops: Option<usize>) -> ExpectedFacts {
    ExpectedFacts { normal: Some(normal), itp, iso, loop_transversals: loops }
}

pub fn default_catalog() -> Vec<CatalogEntry> {
    let mut c = vec![
        CatalogEntry::new("sym3-transposition", "sym:3", "(2,3)", facts(false, Some(2), None, Some(1))),
        CatalogEntry::new("sym3-alt3", "sym:3", "(1,2,3)", facts(true, Some(1), Some(1), Some(3))),
        CatalogEntry::new("alt4-double-transposition", "alt:4", "(1,2)(3,4)", facts(false, Some(2), Some(5), None)),
    ];
    for (n, itp, loops) in [(3, Some(2), 1), (4, None, 2), (5, Some(3), 1), (6, None, 2), (7, Some(5), 1)] {
        c.push(CatalogEntry::new(&format!("dihedral{n}-reflection"), &format!("dihedral:{n}"), "x", facts(false, itp, None, Some(loops))));
    }
    c.push(CatalogEntry::new("dihedral6-center", "dihedral:6", "y^3", facts(true, Some(1), Some(1), None)));
    c.push(CatalogEntry::new("dihedral6-center-reflection", "dihedral:6", "y^3 x", facts(false, None, None, None)));
    c.push(CatalogEntry::new("cyclic4-order2", "cyclic:4", "a^2", facts(true, Some(1), Some(1), Some(2))));
    c
}

pub fn parse_catalog(json: &str) -> Result<Vec<CatalogEntry>, SuiteError> {
    serde_json::from_str(json).map_err(|e| SuiteError::Catalog(e.to_string()))
}

/// A catalog entry with its transversals and loops built; class partitions
/// are computed on first use.
pub struct ResolvedEntry {
    pub entry: CatalogEntry,
    pub group: Arc<FiniteGroup>,
    pub subgroup: Subgroup,
    pub cosets: Arc<CosetDecomposition>,
    pub core: Subgroup,
    pub normal: bool,
    pub transversals: Vec<Transversal>,
    pub loops: Vec<RightLoop>,
    iso: OnceLock<ClassPartition>,
    itp: OnceLock<ClassPartition>,
}

impl ResolvedEntry {
    pub fn resolve(entry: &CatalogEntry, cap: u128) -> Result<Self, SuiteError> {
        let desc: GroupDescriptor = entry.group.parse().map_err(|e| SuiteError::entry(entry, e))?;
        let group = Arc::new(crate::group::build_named_group(&desc).map_err(|e| SuiteError::entry(entry, e))?);
        let gens = group.parse_generators(&entry.subgroup).map_err(|e| SuiteError::entry(entry, e))?;
        let subgroup = Subgroup::generated(group.clone(), &gens).map_err(|e| SuiteError::entry(entry, e))?;
        let cosets = Arc::new(right_cosets(&group, &subgroup).map_err(|e| SuiteError::entry(entry, e))?);
        let transversals: Vec<Transversal> = match enumerate_transversals(cosets.clone(), cap) {
            Ok(it) => it.collect(),
            Err(TransversalError::EnumerationTooLarge { count, cap }) => {
                return Err(SuiteError::CapExceeded { label: entry.label.clone(), count, cap })
            }
            Err(e) => return Err(SuiteError::entry(entry, e)),
        };
        let loops = transversals.iter().map(Transversal::induced_right_loop).collect();
        Ok(ResolvedEntry {
            entry: entry.clone(),
            core: core(&subgroup),
            normal: is_normal(&subgroup),
            group,
            subgroup,
            cosets,
            transversals,
            loops,
            iso: OnceLock::new(),
            itp: OnceLock::new(),
        })
    }

    pub fn label(&self) -> &str {
        &self.entry.label
    }

    pub fn partition(&self, relation: Relation) -> &ClassPartition {
        let cell = match relation {
            Relation::Isomorphism => &self.iso,
            Relation::Isotopy => &self.itp,
        };
        cell.get_or_init(|| classify(&self.loops, relation))
    }

    pub fn loop_transversal_count(&self) -> usize {
        self.loops.iter().filter(|l| l.structure_flags().is_loop).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_catalog_resolves() {
        for e in default_catalog() {
            let r = ResolvedEntry::resolve(&e, 1 << 20).unwrap();
            assert_eq!(r.loops.len() as u128, crate::transversal::transversal_count(&r.cosets), "{}", e.label);
        }
    }

    #[test]
    fn catalog_json_round_trip() {
        let c = default_catalog();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(parse_catalog(&s).unwrap(), c);
        assert!(parse_catalog("[{\"label\":\"x\"}]").is_err());
        let minimal = parse_catalog(r#"[{"label":"s","group":"sym:3","subgroup":"(1,2)"}]"#).unwrap();
        assert_eq!(minimal[0].expected, ExpectedFacts::default());
    }
}
