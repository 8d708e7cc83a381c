//! Exact-arithmetic constructions around partial actions of finite inverse
//! semigroups: crossed products, partial representations, the universal
//! expansion semigroup and its semigroup algebra, plus the machine checks
//! that tie them together.
//!
//! Everything is computed over arbitrary-precision rationals, so every
//! verdict in this crate is an exact algebraic fact about the instance at
//! hand, not an approximation.

pub mod action;
pub mod algebra;
pub mod corpus;
pub mod crossed;
pub mod expansion;
pub mod linalg;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod semigroup;
pub mod subspace;
pub mod textio;

pub use action::{ActionError, PartialAction};
pub use algebra::{AlgebraError, AssocStatus, IdealDiagnostics, MultiplierPair, StructureAlgebra};
pub use crossed::{AssociativitySuite, CrossedError, CrossedProduct, FormalSum};
pub use expansion::{EnumLimits, EnumStatus, EnumeratedSemigroup, ExpansionError, ParAlgebra, Presentation};
pub use rep::{DerivedAction, PartialRep, RepError, RepQuotient};
pub use report::{AxiomReport, Check, Report, Status, Verdict};
pub use scalar::Rat;
pub use semigroup::{InverseSemigroup, SemigroupError};
pub use subspace::Subspace;
pub use textio::TextError;
