//! Finite bounded lattices and ortholattices: order and chain/antichain
//! analysis, polynomial clones with witness terms, interpolation,
//! order-polynomial completeness checks, and ortholattice factorization.

pub mod analysis;
pub mod completeness;
pub mod error;
pub mod io;
pub mod gallery;
pub mod lattice;
pub mod order;
pub mod ortho;
pub mod poly;

pub use error::{BoundKind, LatticeError, Result};
pub use lattice::{Lattice, Poset, TupleIndex};
pub use order::{FunctionOrder, FunctionTable};
pub use ortho::OrthoLattice;
pub use poly::{parse_term, PolynomialClone, Term};
