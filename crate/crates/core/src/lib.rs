//! Exact spectrum and polynomial eigenbasis of the spin Dirac operator on the
//! round 3-sphere `S^3 = Sp(1)`.

pub mod cli;
pub mod dirac;
pub mod error;
pub mod exactnum;
pub mod geometry;
pub mod linalg;
pub mod polyring;
pub mod repspace;
pub mod transfer;

pub use error::{Error, Result};
