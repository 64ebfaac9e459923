//! Lattice polynomial functions on finite chains and small distributive
//! lattices: normal forms, property checkers, deciders and verification
//! sweeps.

pub mod decide;
pub mod error;
pub mod harness;
pub mod io;
pub mod lattice;
pub mod poly;
pub mod props;
pub mod table;

pub use error::{Error, Result};
pub use lattice::{Elem, Hull, Interval, Lattice, LatticeKind, Tuple};
pub use table::FunctionTable;
