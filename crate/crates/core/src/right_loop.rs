//! Right loops as operation tables.
//!
//! `table[x][y] = x∘y`. The right translation `R_y: x ↦ x∘y` is a column map
//! and must be a bijection; the left translation `L_a: y ↦ a∘y` is a row map
//! and need not be.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{parse_table_text, write_table_text, FiniteGroup};
use crate::perm::{Perm, PermutationGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LoopError {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({row}, {col}) = {value} out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("index 0 is not a two-sided identity (fails at {0})")]
    NotIdentity(usize),
    #[error("column {0} is not a bijection")]
    ColumnNotBijective(usize),
    #[error("{0}")]
    Parse(String),
    #[error("flags do not match table: {0}")]
    FlagMismatch(String),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RightLoop {
    order: usize,
    table: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFlags {
    pub is_loop: bool,
    pub is_group: bool,
}

/// Group torsion `G_S` together with its envelope `⟨G_S ∪ {R_s}⟩`.
#[derive(Debug, Clone)]
pub struct Torsion {
    pub group: PermutationGroup,
    pub envelope: PermutationGroup,
}

impl RightLoop {
    pub fn validate(rows: Vec<Vec<usize>>) -> Result<Self, LoopError> {
        let n = rows.len();
        if n == 0 {
            return Err(LoopError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(LoopError::NotSquare { row: r, len: row.len(), expected: n });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(LoopError::EntryOutOfRange { row: r, col: c, value: v });
                }
                table.push(v);
            }
        }
        Self::from_flat(n, table)
    }

    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Self, LoopError> {
        if order == 0 {
            return Err(LoopError::Empty);
        }
        if table.len() != order * order {
            return Err(LoopError::NotSquare { row: table.len() / order, len: table.len() % order, expected: order });
        }
        if let Some(i) = table.iter().position(|&v| v >= order) {
            return Err(LoopError::EntryOutOfRange { row: i / order, col: i % order, value: table[i] });
        }
        let l = RightLoop { order, table };
        for x in 0..order {
            if l.op(0, x) != x || l.op(x, 0) != x {
                return Err(LoopError::NotIdentity(x));
            }
        }
        let mut seen = vec![false; order];
        for y in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for x in 0..order {
                if std::mem::replace(&mut seen[l.op(x, y)], true) {
                    return Err(LoopError::ColumnNotBijective(y));
                }
            }
        }
        Ok(l)
    }

    /// Cayley table of a group as a right loop.
    pub fn from_group(g: &FiniteGroup) -> Self {
        let n = g.order();
        let table = (0..n).flat_map(|a| (0..n).map(move |b| g.mul(a, b))).collect();
        RightLoop { order: n, table }
    }

    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<usize>) -> Self {
        let l = RightLoop { order, table };
        debug_assert!(Self::from_flat(order, l.table.clone()).is_ok());
        l
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub fn flat(&self) -> &[usize] {
        &self.table
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|x| self.row(x).to_vec()).collect()
    }

    /// `R_y: x ↦ x∘y`.
    pub fn right_translation(&self, y: usize) -> Perm {
        Perm::from_images_unchecked((0..self.order).map(|x| self.op(x, y)).collect())
    }

    /// `L_a: y ↦ a∘y`, if it is a bijection.
    pub fn left_translation(&self, a: usize) -> Option<Perm> {
        Perm::from_images(self.row(a).to_vec())
    }

    pub fn is_left_nonsingular(&self, a: usize) -> bool {
        let mut seen = vec![false; self.order];
        self.row(a).iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn left_nonsingular_elements(&self) -> Vec<usize> {
        (0..self.order).filter(|&a| self.is_left_nonsingular(a)).collect()
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.op(self.op(a, b), c) == self.op(a, self.op(b, c)))))
    }

    pub fn structure_flags(&self) -> StructureFlags {
        let is_loop = (0..self.order).all(|a| self.is_left_nonsingular(a));
        StructureFlags { is_loop, is_group: is_loop && self.is_associative() }
    }

    /// Generators `z ↦ R_{x∘y}⁻¹(R_y(R_x(z)))` for all `x, y`: the image of
    /// `xy(x∘y)⁻¹` under the coset action, which is a right action, so `R_x`
    /// acts first.
    pub fn torsion_generators(&self) -> Vec<Perm> {
        let rights: Vec<Perm> = (0..self.order).map(|y| self.right_translation(y)).collect();
        let inverses: Vec<Perm> = rights.iter().map(Perm::inverse).collect();
        let mut gens = Vec::new();
        for x in 0..self.order {
            for y in 0..self.order {
                let g = rights[x].then(&rights[y]).then(&inverses[self.op(x, y)]);
                if !g.is_identity() {
                    gens.push(g);
                }
            }
        }
        gens.sort();
        gens.dedup();
        gens
    }

    pub fn group_torsion(&self) -> Torsion {
        let gens = self.torsion_generators();
        let group = PermutationGroup::generate(self.order, gens.iter().cloned());
        let envelope =
            PermutationGroup::generate(self.order, gens.into_iter().chain((0..self.order).map(|s| self.right_translation(s))));
        Torsion { group, envelope }
    }

    /// Applies the bijection `f` to the labels: the result has `f(x)∘f(y) = f(x∘y)`.
    pub fn relabel(&self, f: &[usize]) -> Self {
        let n = self.order;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[f[x] * n + f[y]] = f[self.op(x, y)];
            }
        }
        RightLoop { order: n, table }
    }

    pub fn to_text(&self) -> String {
        write_table_text(&self.rows(), None)
    }

    pub fn from_text(text: &str) -> Result<Self, LoopError> {
        let parsed = parse_table_text(text).map_err(|e| LoopError::Parse(e.to_string()))?;
        Self::validate(parsed.rows)
    }

    pub fn to_json(&self) -> LoopJson {
        LoopJson { order: self.order, table: self.rows(), flags: self.structure_flags() }
    }
}

impl std::fmt::Debug for RightLoop {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RightLoop{:?}", self.rows())
    }
}

/// JSON form `{order, table, flags}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub flags: StructureFlags,
}

impl TryFrom<LoopJson> for RightLoop {
    type Error = LoopError;

    fn try_from(j: LoopJson) -> Result<Self, LoopError> {
        if j.table.len() != j.order {
            return Err(LoopError::NotSquare { row: j.table.len(), len: 0, expected: j.order });
        }
        let l = RightLoop::validate(j.table)?;
        let flags = l.structure_flags();
        if flags != j.flags {
            return Err(LoopError::FlagMismatch(format!("stored {:?}, computed {:?}", j.flags, flags)));
        }
        Ok(l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_named_group;

    fn zn(n: usize) -> RightLoop {
        RightLoop::from_group(&build_named_group(&crate::group::GroupDescriptor::Cyclic(n)).unwrap())
    }

    #[test]
    fn group_tables_are_groups() {
        let l = RightLoop::validate(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        assert_eq!(l.structure_flags(), StructureFlags { is_loop: true, is_group: true });
        assert_eq!(l.left_nonsingular_elements(), vec![0, 1, 2]);
        assert!(l.group_torsion().group.is_trivial());
        assert_eq!(l.group_torsion().envelope.order(), 3);
    }

    #[test]
    fn constant_column_is_rejected() {
        // table[x][y] = y for y ≠ 0: every such column is constant.
        let rows = vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 1, 2]];
        assert_eq!(RightLoop::validate(rows), Err(LoopError::ColumnNotBijective(1)));
        // table[x][y] = x for y ≠ 0 has identity columns but 0∘y = 0.
        let rows = vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]];
        assert_eq!(RightLoop::validate(rows), Err(LoopError::NotIdentity(1)));
    }

    #[test]
    fn identity_violations_name_the_witness() {
        let rows = vec![vec![0, 1], vec![0, 1]];
        assert_eq!(RightLoop::validate(rows), Err(LoopError::NotIdentity(1)));
    }

    #[test]
    fn non_loop_right_loop() {
        // 0∘y = y, x∘0 = x, column 1 = (1,2,0), column 2 = (2,0,1) swapped rows
        let rows = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let l = RightLoop::validate(rows).unwrap();
        assert!(l.is_left_nonsingular(1));
        let rows = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 2, 1]];
        let l = RightLoop::validate(rows).unwrap();
        assert_eq!(l.left_nonsingular_elements(), vec![0]);
        let flags = l.structure_flags();
        assert!(!flags.is_loop && !flags.is_group);
        assert!(!l.group_torsion().group.is_trivial());
    }

    #[test]
    fn text_and_json_forms() {
        let l = zn(4);
        assert_eq!(RightLoop::from_text(&l.to_text()).unwrap(), l);
        let j = serde_json::to_string(&l.to_json()).unwrap();
        let back: LoopJson = serde_json::from_str(&j).unwrap();
        assert_eq!(RightLoop::try_from(back).unwrap(), l);
        let mut bad = l.to_json();
        bad.flags.is_group = false;
        assert!(matches!(RightLoop::try_from(bad), Err(LoopError::FlagMismatch(_))));
    }

    #[test]
    fn relabel_is_an_isomorphism() {
        let l = zn(5);
        let f = vec![0, 2, 4, 1, 3];
        let m = l.relabel(&f);
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(m.op(f[x], f[y]), f[l.op(x, y)]);
            }
        }
    }
}
