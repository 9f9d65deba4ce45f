//! Exact polyhedral geometry for Fine interiors of rational polytopes and
//! the classification of F-hollow lattice polytopes.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod classify;
pub mod ehrhart;
pub mod error;
pub mod fine;
pub mod normal_form;
pub mod polyhedra;
pub mod refinement;
pub mod shapes;
pub mod width;

pub use error::{Error, Result};
