use std::collections::VecDeque;
use std::sync::Arc;

use super::{FiniteGroup, GroupError, GroupKind};

/// A verified subgroup: sorted members containing the identity, closed under
/// the parent's multiplication.
#[derive(Clone)]
pub struct Subgroup {
    group: Arc<FiniteGroup>,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl Subgroup {
    pub fn new(group: Arc<FiniteGroup>, members: impl IntoIterator<Item = usize>) -> Result<Self, GroupError> {
        let n = group.order();
        let mut mask = vec![false; n];
        for m in members {
            if m >= n {
                return Err(GroupError::OutOfRange(format!("element index {m} >= order {n}")));
            }
            mask[m] = true;
        }
        if !mask[0] {
            return Err(GroupError::NotSubgroup("identity missing".into()));
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask[i]).collect();
        for &a in &members {
            for &b in &members {
                let ab = group.mul(a, b);
                if !mask[ab] {
                    return Err(GroupError::NotSubgroup(format!(
                        "{}·{} = {} is outside",
                        group.name(a),
                        group.name(b),
                        group.name(ab)
                    )));
                }
            }
        }
        Ok(Subgroup { group, members, mask })
    }

    /// Smallest subgroup containing `gens`.
    pub fn generated(group: Arc<FiniteGroup>, gens: &[usize]) -> Result<Self, GroupError> {
        if let Some(&g) = gens.iter().find(|&&g| g >= group.order()) {
            return Err(GroupError::OutOfRange(format!("element index {g} >= order {}", group.order())));
        }
        let members = closure(&group, gens);
        Ok(Self::from_closed(group, members))
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        Self::from_closed(group, vec![0])
    }

    pub fn whole(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        Self::from_closed(group, (0..n).collect())
    }

    fn from_closed(group: Arc<FiniteGroup>, members: Vec<usize>) -> Self {
        let mut mask = vec![false; group.order()];
        for &m in &members {
            mask[m] = true;
        }
        Subgroup { group, members, mask }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.members.len()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.mask[g]
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    fn same_group(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group.order() == other.group.order() && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<&str> = self.members.iter().map(|&m| self.group.name(m)).collect();
        write!(f, "Subgroup{names:?}")
    }
}

/// Sorted closure of `gens ∪ {identity}` under right multiplication by generators.
pub(crate) fn closure(group: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; group.order()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(a) = queue.pop_front() {
        for &g in gens {
            let b = group.mul(a, g);
            if !seen[b] {
                seen[b] = true;
                queue.push_back(b);
            }
        }
    }
    (0..group.order()).filter(|&i| seen[i]).collect()
}

/// Right cosets `Hg`, coset 0 being `H` and the rest ordered by least member.
#[derive(Clone, Debug)]
pub struct CosetDecomposition {
    subgroup: Subgroup,
    cosets: Vec<Vec<usize>>,
    coset_of: Vec<usize>,
}

impl CosetDecomposition {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.subgroup.group()
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    #[inline]
    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }
}

pub fn right_cosets(group: &Arc<FiniteGroup>, h: &Subgroup) -> Result<CosetDecomposition, GroupError> {
    if !Arc::ptr_eq(group, h.group()) && **group != **h.group() {
        return Err(GroupError::ForeignSubgroup);
    }
    let n = group.order();
    let unassigned = usize::MAX;
    let mut coset_of = vec![unassigned; n];
    let mut cosets = Vec::new();
    for g in 0..n {
        if coset_of[g] != unassigned {
            continue;
        }
        let mut coset: Vec<usize> = h.members().iter().map(|&m| group.mul(m, g)).collect();
        coset.sort_unstable();
        for &c in &coset {
            coset_of[c] = cosets.len();
        }
        cosets.push(coset);
    }
    Ok(CosetDecomposition { subgroup: h.clone(), cosets, coset_of })
}

/// `⋂_g g⁻¹Hg`.
pub fn core(h: &Subgroup) -> Subgroup {
    let g = h.group();
    let members: Vec<usize> = h
        .members()
        .iter()
        .copied()
        .filter(|&m| (0..g.order()).all(|x| h.contains(g.conjugate(m, x))))
        .collect();
    Subgroup::from_closed(g.clone(), members)
}

pub fn is_normal(h: &Subgroup) -> bool {
    let g = h.group();
    h.members().iter().all(|&m| (0..g.order()).all(|x| h.contains(g.conjugate(m, x))))
}

/// `G/N` on the cosets of `N` (ordered as in [`right_cosets`]) with the
/// projection `g ↦ Ng`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: Arc<FiniteGroup>,
    pub projection: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, g: usize) -> usize {
        self.projection[g]
    }

    /// Image of a subgroup containing `N`.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let members: Vec<usize> = h.members().iter().map(|&m| self.projection[m]).collect();
        Subgroup::new(self.group.clone(), members).expect("homomorphic image of a subgroup")
    }
}

pub fn quotient(n: &Subgroup) -> Result<Quotient, GroupError> {
    if !is_normal(n) {
        return Err(GroupError::NotNormal);
    }
    let g = n.group();
    let dec = right_cosets(g, n)?;
    let reps: Vec<usize> = dec.cosets().iter().map(|c| c[0]).collect();
    let k = reps.len();
    let dec_ref = &dec;
    let table: Vec<u32> = reps
        .iter()
        .flat_map(|&a| reps.iter().map(move |&b| dec_ref.coset_of(g.mul(a, b)) as u32))
        .collect();
    let names = reps
        .iter()
        .map(|&r| if n.is_trivial() { g.name(r).to_string() } else { format!("N{}", g.name(r)) })
        .collect();
    let quotient_group = FiniteGroup::from_trusted_table(table, names, GroupKind::Table);
    debug_assert_eq!(quotient_group.order(), k);
    Ok(Quotient { group: Arc::new(quotient_group), projection: dec.coset_of })
}

impl Subgroup {
    /// Subgroups of the same parent, compared as sets.
    pub fn same_members(&self, other: &Subgroup) -> bool {
        self.same_group(other) && self.members == other.members
    }
}
