//! Finite groups as explicit multiplication tables, plus subgroup, coset,
//! core and quotient machinery.
//!
//! Elements are indices `0..order` and the identity is always index 0.
//! Permutation groups use functional composition: `(ab)(i) = a(b(i))`.

mod named;
mod subgroup;
mod table_io;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use named::{build_named_group, GroupDescriptor};
pub use subgroup::{core, is_normal, quotient, right_cosets, CosetDecomposition, Quotient, Subgroup};
pub use table_io::{parse_table_text, write_table_text, TableText};

/// Largest order for which a dense Cayley table is materialized.
const DENSE_LIMIT: usize = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed group descriptor `{0}`")]
    BadDescriptor(String),
    #[error("{0}")]
    OutOfRange(String),
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({row}, {col}) = {value} is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("row {0} is not a permutation")]
    RowNotLatin(usize),
    #[error("column {0} is not a permutation")]
    ColumnNotLatin(usize),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("cannot read `{path}`: {message}")]
    Io { path: String, message: String },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup belongs to a different group")]
    ForeignSubgroup,
}

/// How the group was built; drives element naming and parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Table,
}

#[derive(Clone)]
enum Repr {
    Dense(Vec<u32>),
    /// Large permutation groups: multiply by composing and looking up.
    Perms(Arc<PermLookup>),
}

struct PermLookup {
    perms: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, u32>,
}

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    repr: Repr,
    inverses: Vec<usize>,
    names: Vec<String>,
    name_index: HashMap<String, usize>,
    kind: GroupKind,
    /// Point images for symmetric/alternating groups, 0-based.
    perms: Option<Arc<Vec<Vec<u8>>>>,
}

impl FiniteGroup {
    /// Validates `rows` (row `a`, column `b` holds `a·b`) and relabels so the
    /// identity sits at index 0.
    pub fn from_rows(rows: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare { row: r, len: row.len(), expected: n });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange { row: r, col: c, value: v, order: n });
                }
            }
        }
        check_latin(&rows)?;
        let e = (0..n)
            .find(|&e| (0..n).all(|b| rows[e][b] == b && rows[b][e] == b))
            .ok_or(GroupError::NoIdentity)?;
        let (rows, names) = if e == 0 { (rows, names) } else { swap_labels(rows, names, 0, e) };
        for a in 0..n {
            for b in 0..n {
                let ab = rows[a][b];
                for c in 0..n {
                    if rows[ab][c] != rows[a][rows[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let names = names.unwrap_or_else(|| (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") }).collect());
        if names.len() != n {
            return Err(GroupError::OutOfRange(format!("{} names for {} elements", names.len(), n)));
        }
        let table: Vec<u32> = rows.iter().flatten().map(|&v| v as u32).collect();
        Ok(Self::assemble(n, Repr::Dense(table), names, GroupKind::Table, None))
    }

    /// Table supplied by a trusted constructor; skips the O(n³) associativity scan.
    pub(crate) fn from_trusted_table(table: Vec<u32>, names: Vec<String>, kind: GroupKind) -> Self {
        let n = names.len();
        debug_assert_eq!(table.len(), n * n);
        Self::assemble(n, Repr::Dense(table), names, kind, None)
    }

    /// `perms[i]` are point images; `perms[0]` must be the identity.
    pub(crate) fn from_permutations(perms: Vec<Vec<u8>>, names: Vec<String>, kind: GroupKind) -> Self {
        let n = perms.len();
        let index: HashMap<Vec<u8>, u32> = perms.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let lookup = PermLookup { perms: perms.clone(), index };
        let repr = if n <= DENSE_LIMIT {
            let mut table = Vec::with_capacity(n * n);
            for a in &perms {
                for b in &perms {
                    table.push(lookup.index[&compose(a, b)]);
                }
            }
            Repr::Dense(table)
        } else {
            Repr::Perms(Arc::new(lookup))
        };
        Self::assemble(n, repr, names, kind, Some(Arc::new(perms)))
    }

    fn assemble(order: usize, repr: Repr, names: Vec<String>, kind: GroupKind, perms: Option<Arc<Vec<Vec<u8>>>>) -> Self {
        let mut g = FiniteGroup {
            order,
            repr,
            inverses: Vec::new(),
            name_index: names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect(),
            names,
            kind,
            perms,
        };
        g.inverses = (0..order)
            .map(|a| match &g.repr {
                Repr::Perms(l) => {
                    let p = &l.perms[a];
                    let mut inv = vec![0u8; p.len()];
                    for (i, &v) in p.iter().enumerate() {
                        inv[v as usize] = i as u8;
                    }
                    l.index[&inv] as usize
                }
                Repr::Dense(_) => (0..order).find(|&b| g.mul(a, b) == 0).expect("Latin row contains identity"),
            })
            .collect();
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Dense(t) => t[a * self.order + b] as usize,
            Repr::Perms(l) => l.index[&compose(&l.perms[a], &l.perms[b])] as usize,
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g⁻¹ h g`.
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn lookup_name(&self, name: &str) -> Option<usize> {
        self.name_index.get(name).copied()
    }

    /// 0-based point images of element `a`, for symmetric and alternating groups.
    pub fn permutation_of(&self, a: usize) -> Option<&[u8]> {
        self.perms.as_ref().map(|p| p[a].as_slice())
    }

    pub(crate) fn index_of_permutation(&self, images: &[u8]) -> Option<usize> {
        let perms = self.perms.as_ref()?;
        match &self.repr {
            Repr::Perms(l) => l.index.get(images).map(|&i| i as usize),
            Repr::Dense(_) => perms.iter().position(|p| p.as_slice() == images),
        }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Rows of the Cayley table.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect()
    }

    /// Full check of the group axioms over all index triples.
    pub fn validate(&self) -> Result<(), GroupError> {
        let rows = self.table_rows();
        check_latin(&rows)?;
        let n = self.order;
        if (0..n).any(|a| rows[0][a] != a || rows[a][0] != a) {
            return Err(GroupError::NoIdentity);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// Parses a single element: exact name, `#index`, an identity alias, or
    /// constructor-specific notation (cycles for sym/alt, words in `x`,`y` for
    /// dihedral, words in `a` for cyclic).
    pub fn parse_element(&self, s: &str) -> Result<usize, GroupError> {
        named::parse_element(self, s.trim())
    }

    /// Splits a generator list on whitespace, `;`, and commas outside parentheses.
    pub fn parse_generators(&self, s: &str) -> Result<Vec<usize>, GroupError> {
        named::split_generators(s).iter().map(|t| self.parse_element(t)).collect()
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Upper central series reaches the whole group.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.order;
        let mut current = vec![false; n];
        current[0] = true;
        loop {
            let next: Vec<bool> = (0..n)
                .map(|g| (0..n).all(|x| current[self.commutator(g, x)]))
                .collect();
            if next == current {
                return current.iter().all(|&b| b);
            }
            current = next;
        }
    }

    /// Derived series reaches the trivial group.
    pub fn is_solvable(&self) -> bool {
        let mut members: Vec<usize> = (0..self.order).collect();
        loop {
            if members.len() == 1 {
                return true;
            }
            let mut comms = Vec::new();
            for &a in &members {
                for &b in &members {
                    comms.push(self.commutator(a, b));
                }
            }
            let next = subgroup::closure(self, &comms);
            if next.len() == members.len() {
                return false;
            }
            members = next;
        }
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("order", &self.order).field("kind", &self.kind).finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == other.mul(a, b)))
    }
}

/// `(ab)(i) = a(b(i))`.
#[inline]
fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    b.iter().map(|&i| a[i as usize]).collect()
}

fn check_latin(rows: &[Vec<usize>]) -> Result<(), GroupError> {
    let n = rows.len();
    let mut seen = vec![false; n];
    for (r, row) in rows.iter().enumerate() {
        seen.iter_mut().for_each(|s| *s = false);
        for &v in row {
            if std::mem::replace(&mut seen[v], true) {
                return Err(GroupError::RowNotLatin(r));
            }
        }
    }
    for c in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        for row in rows {
            if std::mem::replace(&mut seen[row[c]], true) {
                return Err(GroupError::ColumnNotLatin(c));
            }
        }
    }
    Ok(())
}

fn swap_labels(rows: Vec<Vec<usize>>, names: Option<Vec<String>>, i: usize, j: usize) -> (Vec<Vec<usize>>, Option<Vec<String>>) {
    let relabel = |v: usize| if v == i { j } else if v == j { i } else { v };
    let n = rows.len();
    let mut out = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            out[relabel(a)][relabel(b)] = relabel(rows[a][b]);
        }
    }
    let names = names.map(|mut ns| {
        ns.swap(i, j);
        ns
    });
    (out, names)
}
