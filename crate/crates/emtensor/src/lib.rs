//! Exact computation with monoidal monads on finite sets: Eilenberg–Moore algebras,
//! their tensor product as a coequalizer, the induced monoidal structure, and monoid actions.

pub mod congruence;
pub mod error;
pub mod finset;
pub mod fixtures;
pub mod io;
pub mod actions;
pub mod cli;
pub mod algebra;
pub mod bimorphism;
pub mod monad;
pub mod monoidal;
pub mod report;
pub mod tensor;

pub use error::{Error, Result};
