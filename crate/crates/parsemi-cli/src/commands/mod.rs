pub mod action;
pub mod corpus;
pub mod expansion;
pub mod rep;
pub mod semigroup;
