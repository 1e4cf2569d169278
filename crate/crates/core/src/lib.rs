//! (α,β)-Eulerian polynomials computed by grammar, permutation enumeration,
//! increasing binary trees and plane forests, with exact cross-checks.

pub mod forest;
pub mod grammar;
pub mod ibtree;
pub mod perm;
pub mod poly;
pub mod verify;

pub use forest::{
    ForestError, PlaneFamily, PlaneForest, SupportForest, VertexClass, WeightRuleSet,
};
pub use grammar::{eulerian_via_grammar, GrammarRules};
pub use ibtree::{IncTree, Label, LabelScheme, TreeError};
pub use perm::{CyclePerm, EulerianForm, Family, Perm, PermError, StatBundle};
pub use poly::{gamma_expand, GammaExpansion, Monomial, PolyError, RationalPoly, VarId};
pub use verify::{Budgets, CheckId, CheckReport, Status, VerifyError};
