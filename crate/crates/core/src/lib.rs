//! Finite fields F_q and involutions of the form `f(x) = x^r h(x^s)`:
//! an exhaustive oracle, the subgroup criterion, interpolation-based
//! constructions and explicit families.
//!
//! Elements are packed integers whose base-p digits are the coefficients
//! over the field's modulus; every operation takes the [`Field`] by
//! reference.

pub mod construct;
pub mod criterion;
pub mod error;
pub mod families;
pub mod gf;
pub mod numth;
pub mod oracle;
pub mod poly;

pub use construct::{ConstructionParams, SubgroupInvolution};
pub use criterion::{check_involution, check_permutation, CriterionReport, PermutationCheck};
pub use error::{Error, Result};
pub use families::{ConditionCheck, FamilyId, FamilySpec};
pub use gf::{Elem, Field, Subgroup};
pub use oracle::{Oracle, PermReport, Witness};
pub use poly::{decompose, RhsForm, SparsePoly};
