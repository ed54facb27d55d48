//! Normalized right transversals (NRTs) of a subgroup and the right loops
//! they induce.

use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::group::{right_cosets, CosetDecomposition, FiniteGroup, GroupError, Quotient, Subgroup};
use crate::perm::{Perm, PermutationGroup};
use crate::right_loop::RightLoop;

/// Default cap on `|H|^([G:H]−1)`.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransversalError {
    #[error("enumeration would yield {count} transversals, above the cap of {cap}")]
    EnumerationTooLarge { count: u128, cap: u128 },
    #[error("rep {rep} is not in coset {position}")]
    WrongCoset { position: usize, rep: usize },
    #[error("expected {expected} representatives, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("first representative must be the identity")]
    NotNormalized,
    #[error("subgroup N is not contained in H")]
    NotContained,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// One representative per right coset, `reps[i]` in coset `i`, `reps[0] = 1`.
#[derive(Clone)]
pub struct Transversal {
    cosets: Arc<CosetDecomposition>,
    reps: Vec<usize>,
}

impl Transversal {
    pub fn new(cosets: Arc<CosetDecomposition>, reps: Vec<usize>) -> Result<Self, TransversalError> {
        if reps.len() != cosets.len() {
            return Err(TransversalError::WrongLength { expected: cosets.len(), got: reps.len() });
        }
        if reps[0] != 0 {
            return Err(TransversalError::NotNormalized);
        }
        for (i, &r) in reps.iter().enumerate() {
            if r >= cosets.group().order() || cosets.coset_of(r) != i {
                return Err(TransversalError::WrongCoset { position: i, rep: r });
            }
        }
        Ok(Transversal { cosets, reps })
    }

    /// Builds from an unordered set of elements, one per coset.
    pub fn from_elements(cosets: Arc<CosetDecomposition>, elements: &[usize]) -> Result<Self, TransversalError> {
        let mut reps = vec![usize::MAX; cosets.len()];
        if elements.len() != cosets.len() {
            return Err(TransversalError::WrongLength { expected: cosets.len(), got: elements.len() });
        }
        for &e in elements {
            if e >= cosets.group().order() {
                return Err(GroupError::OutOfRange(format!("element index {e}")).into());
            }
            let c = cosets.coset_of(e);
            if reps[c] != usize::MAX {
                return Err(TransversalError::WrongCoset { position: c, rep: e });
            }
            reps[c] = e;
        }
        Self::new(cosets, reps)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.cosets.group()
    }

    pub fn subgroup(&self) -> &Subgroup {
        self.cosets.subgroup()
    }

    pub fn cosets(&self) -> &Arc<CosetDecomposition> {
        &self.cosets
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Position of the rep lying in `H·g`.
    #[inline]
    fn position_of(&self, g: usize) -> usize {
        self.cosets.coset_of(g)
    }

    /// `table[i][j] = k` where `reps[k] ∈ H·reps[i]·reps[j]`.
    pub fn induced_right_loop(&self) -> RightLoop {
        let g = self.group();
        let n = self.reps.len();
        let table = self
            .reps
            .iter()
            .flat_map(|&a| self.reps.iter().map(move |&b| self.position_of(g.mul(a, b))))
            .collect();
        RightLoop::from_flat_unchecked(n, table)
    }

    /// `χ_S(g)`: position `i` goes to the position of `H·reps[i]·g`.
    pub fn chi_action(&self, g: usize) -> Perm {
        let grp = self.group();
        Perm::from_images_unchecked(self.reps.iter().map(|&r| self.position_of(grp.mul(r, g))).collect())
    }

    /// `⟨S⟩` in the ambient group.
    pub fn generated_subgroup(&self) -> Subgroup {
        Subgroup::generated(self.group().clone(), &self.reps).expect("reps are in range")
    }

    /// `χ_S(⟨S⟩ ∩ H)`, the torsion computed through the ambient group.
    pub fn chi_torsion(&self) -> PermutationGroup {
        let span = self.generated_subgroup();
        let h = self.subgroup();
        let hs: Vec<usize> = span.members().iter().copied().filter(|&m| h.contains(m)).collect();
        PermutationGroup::generate(self.len(), hs.into_iter().map(|g| self.chi_action(g)))
    }

    /// Comma-separated element names, e.g. `I,(1,2,3),(1,3,2)`.
    pub fn display_names(&self) -> String {
        let g = self.group();
        self.reps.iter().map(|&r| g.name(r)).collect::<Vec<_>>().join(",")
    }

    /// Image in `G/N` as a transversal of `H/N`, with `position_map[i]` the
    /// position in the image of this transversal's position `i`.
    pub fn project(&self, n: &Subgroup, q: &Quotient) -> Result<Projection, TransversalError> {
        if !n.is_subset_of(self.subgroup()) {
            return Err(TransversalError::NotContained);
        }
        if !crate::group::is_normal(n) {
            return Err(GroupError::NotNormal.into());
        }
        let image_h = q.image(self.subgroup());
        let image_cosets = Arc::new(right_cosets(&q.group, &image_h)?);
        let images: Vec<usize> = self.reps.iter().map(|&r| q.project(r)).collect();
        let transversal = Transversal::from_elements(image_cosets.clone(), &images)?;
        let position_map = images.iter().map(|&e| image_cosets.coset_of(e)).collect();
        Ok(Projection { transversal, position_map })
    }
}

#[derive(Clone, Debug)]
pub struct Projection {
    pub transversal: Transversal,
    pub position_map: Vec<usize>,
}

impl PartialEq for Transversal {
    fn eq(&self, other: &Self) -> bool {
        self.reps == other.reps
    }
}

impl Eq for Transversal {}

impl Hash for Transversal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.reps.hash(state);
    }
}

impl std::fmt::Debug for Transversal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Transversal[{}]", self.display_names())
    }
}

/// `|H|^([G:H]−1)`, saturating.
pub fn transversal_count(cosets: &CosetDecomposition) -> u128 {
    let h = cosets.subgroup().order() as u128;
    let mut count: u128 = 1;
    for _ in 1..cosets.len() {
        count = count.saturating_mul(h);
    }
    count
}

/// All NRTs in lexicographic order of rep choices (cosets in decomposition
/// order, members in increasing index), last coset varying fastest.
pub fn enumerate_transversals(cosets: Arc<CosetDecomposition>, cap: u128) -> Result<TransversalIter, TransversalError> {
    let count = transversal_count(&cosets);
    if count > cap {
        return Err(TransversalError::EnumerationTooLarge { count, cap });
    }
    let k = cosets.len();
    Ok(TransversalIter { cosets, choice: vec![0; k], done: false, remaining: count })
}

pub fn enumerate_for(group: &Arc<FiniteGroup>, h: &Subgroup, cap: u128) -> Result<TransversalIter, TransversalError> {
    enumerate_transversals(Arc::new(right_cosets(group, h)?), cap)
}

pub struct TransversalIter {
    cosets: Arc<CosetDecomposition>,
    choice: Vec<usize>,
    done: bool,
    remaining: u128,
}

impl Iterator for TransversalIter {
    type Item = Transversal;

    fn next(&mut self) -> Option<Transversal> {
        if self.done {
            return None;
        }
        let cosets = self.cosets.cosets();
        let reps: Vec<usize> = self.choice.iter().enumerate().map(|(i, &c)| cosets[i][c]).collect();
        // advance the odometer, skipping coset 0 (pinned to the identity)
        let mut i = self.choice.len();
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            self.choice[i] += 1;
            if self.choice[i] < cosets[i].len() {
                break;
            }
            self.choice[i] = 0;
        }
        self.remaining = self.remaining.saturating_sub(1);
        Some(Transversal { cosets: self.cosets.clone(), reps })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, usize::try_from(self.remaining).ok())
    }
}
