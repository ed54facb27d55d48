//! Normalized right transversals of finite groups, the right loops they
//! induce, and their classification up to isomorphism and isotopy.

pub mod affine;
pub mod arith;
pub mod group;
pub mod isotopy;
pub mod perm;
pub mod right_loop;
pub mod suite;
pub mod transversal;
pub mod zn_b;

pub use group::{build_named_group, FiniteGroup, GroupDescriptor, GroupError, Subgroup};
pub use perm::{Perm, PermutationGroup};
pub use right_loop::{LoopError, RightLoop, StructureFlags};
pub use transversal::{enumerate_transversals, Transversal, TransversalError};
pub use isotopy::{are_isomorphic, are_isotopic, classify, IsotopyWitness, Relation};
