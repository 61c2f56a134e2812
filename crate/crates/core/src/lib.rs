//! Finite hyperrings, semiring systems and the constructions linking them.

pub mod algebra;
pub mod bridge;
pub mod carrier;
pub mod catalog;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod families;
pub mod hsf;
pub mod hyper;
pub mod iso;
pub mod lemmas;
pub mod matroid;
pub mod report;
pub mod systems;
pub mod table;

pub use error::{Error, Result};
