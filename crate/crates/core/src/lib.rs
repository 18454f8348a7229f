//! Exact computations for finite-dimensional bound quiver algebras over
//! prime fields: modules, homological operators, Auslander-Reiten
//! translations and their relative versions for subcategories.
//!
//! Conventions: modules are right modules, identified with representations
//! of the quiver itself (an arrow `a: i -> j` acts as a linear map
//! `M_i -> M_j`, stored as a `dims[j] x dims[i]` matrix acting on column
//! vectors). Paths are read left to right. The k-dual lands in
//! representations of the opposite quiver.

pub mod arsubcat;
pub mod error;
pub mod exactlin;
pub mod homalg;
pub mod io;
pub mod morphcat;
pub mod quivalg;
pub mod repmod;

pub use error::{Error, Result};
