//! Partition of a list of right loops by isomorphism or isotopy.
//!
//! Items are bucketed by invariants of the chosen relation; within a bucket
//! each item is tested against the first member of every class found so
//! far. Buckets are independent and run in parallel; the result does not
//! depend on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::iso::signature_profile;
use super::{are_isomorphic, are_isotopic, IsotopyWitness};
use crate::right_loop::RightLoop;

/// Torsion orders are only used as a bucket key up to this order; beyond it
/// the torsion group may be too large to close.
const TORSION_KEY_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    #[serde(rename = "iso")]
    Isomorphism,
    Isotopy,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Isomorphism => "iso",
            Relation::Isotopy => "isotopy",
        })
    }
}

impl FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "iso" | "isomorphism" => Ok(Relation::Isomorphism),
            "isotopy" | "isotopic" => Ok(Relation::Isotopy),
            _ => Err(format!("unknown relation `{s}` (expected iso or isotopy)")),
        }
    }
}

impl Relation {
    /// A verified witness `l1 → l2`; isomorphisms are returned as `(f, f, f)`.
    pub fn witness(self, l1: &RightLoop, l2: &RightLoop) -> Option<IsotopyWitness> {
        match self {
            Relation::Isomorphism => are_isomorphic(l1, l2).map(IsotopyWitness::isomorphism),
            Relation::Isotopy => are_isotopic(l1, l2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum BucketKey {
    Iso(usize, Vec<super::iso::ElementSignature>),
    Isotopy { order: usize, left_nonsingular: usize, torsion_order: Option<usize> },
}

fn bucket_key(l: &RightLoop, relation: Relation) -> BucketKey {
    match relation {
        Relation::Isomorphism => BucketKey::Iso(l.order(), signature_profile(l)),
        Relation::Isotopy => BucketKey::Isotopy {
            order: l.order(),
            left_nonsingular: l.left_nonsingular_elements().len(),
            torsion_order: (l.order() <= TORSION_KEY_LIMIT).then(|| l.group_torsion().group.order()),
        },
    }
}

/// One equivalence class. `witnesses[k]` maps `members[0]` to `members[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopClass {
    pub members: Vec<usize>,
    pub representative: usize,
    pub witnesses: Vec<IsotopyWitness>,
}

#[derive(Debug, Clone)]
pub struct ClassPartition {
    pub relation: Relation,
    pub item_count: usize,
    /// Ordered by least member.
    pub classes: Vec<LoopClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub representative_table: Vec<Vec<usize>>,
    pub members: Vec<usize>,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub relation: Relation,
    pub classes: Vec<ClassJson>,
}

/// CSV row: `class_id,size,is_loop,n_left_nonsingular`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub class_id: usize,
    pub size: usize,
    pub is_loop: bool,
    pub n_left_nonsingular: usize,
}

fn classify_bucket(items: &[RightLoop], bucket: &[usize], relation: Relation) -> Vec<LoopClass> {
    let mut classes: Vec<LoopClass> = Vec::new();
    for &i in bucket {
        let hit = classes.iter_mut().find_map(|c| relation.witness(&items[c.members[0]], &items[i]).map(|w| (c, w)));
        match hit {
            Some((c, w)) => {
                c.members.push(i);
                c.witnesses.push(w);
            }
            None => classes.push(LoopClass {
                members: vec![i],
                representative: i,
                witnesses: vec![IsotopyWitness::identity(items[i].order())],
            }),
        }
    }
    for c in &mut classes {
        c.representative = *c.members.iter().min_by(|&&a, &&b| items[a].flat().cmp(items[b].flat()).then(a.cmp(&b))).expect("nonempty");
    }
    classes
}

pub fn classify(items: &[RightLoop], relation: Relation) -> ClassPartition {
    let keys: Vec<BucketKey> = items.par_iter().map(|l| bucket_key(l, relation)).collect();
    let mut buckets: BTreeMap<&BucketKey, Vec<usize>> = BTreeMap::new();
    for (i, k) in keys.iter().enumerate() {
        buckets.entry(k).or_default().push(i);
    }
    let buckets: Vec<Vec<usize>> = buckets.into_values().collect();
    let mut classes: Vec<LoopClass> =
        buckets.par_iter().flat_map_iter(|b| classify_bucket(items, b, relation)).collect();
    classes.sort_by_key(|c| c.members[0]);
    ClassPartition { relation, item_count: items.len(), classes }
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class index of every item.
    pub fn class_of(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.item_count];
        for (c, class) in self.classes.iter().enumerate() {
            for &m in &class.members {
                out[m] = c;
            }
        }
        out
    }

    /// Member sets, each sorted.
    pub fn member_sets(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|c| c.members.clone()).collect()
    }

    /// Re-checks every stored witness and that the classes partition the items.
    pub fn verify(&self, items: &[RightLoop]) -> bool {
        let covered = self.class_of();
        if items.len() != self.item_count || covered.contains(&usize::MAX) {
            return false;
        }
        self.classes.iter().all(|c| {
            c.members.iter().zip(&c.witnesses).all(|(&m, w)| {
                w.verify(&items[c.members[0]], &items[m]) && (self.relation == Relation::Isotopy || w.is_isomorphism())
            })
        })
    }

    pub fn to_json(&self, items: &[RightLoop]) -> PartitionJson {
        PartitionJson {
            relation: self.relation,
            classes: self
                .classes
                .iter()
                .map(|c| ClassJson {
                    representative_table: items[c.representative].rows(),
                    members: c.members.clone(),
                    size: c.members.len(),
                })
                .collect(),
        }
    }

    pub fn summaries(&self, items: &[RightLoop]) -> Vec<ClassSummary> {
        self.classes
            .iter()
            .enumerate()
            .map(|(id, c)| {
                let rep = &items[c.representative];
                ClassSummary {
                    class_id: id,
                    size: c.members.len(),
                    is_loop: rep.structure_flags().is_loop,
                    n_left_nonsingular: rep.left_nonsingular_elements().len(),
                }
            })
            .collect()
    }

    pub fn to_csv(&self, items: &[RightLoop]) -> String {
        let mut out = String::from("class_id,size,is_loop,n_left_nonsingular\n");
        for s in self.summaries(items) {
            out.push_str(&format!("{},{},{},{}\n", s.class_id, s.size, s.is_loop, s.n_left_nonsingular));
        }
        out
    }
}
