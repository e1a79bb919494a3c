//! Bound states of the Dunkl Laplacian in a cylindrical well: special
//! functions, Dunkl operators, separated eigenfunctions, parity-resolved
//! spectra and a numerical verification harness.
//!
//! The guide in `book/` walks through each module; its code blocks are
//! compiled and run as doctests of this crate.

pub mod angular;
pub mod cli;
pub mod diff;
pub mod dunkl;
pub mod error;
pub mod parity;
pub mod quadrature;
pub mod specfun;
pub mod spectrum;
pub mod states;
pub mod verify;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/special-functions.md")]
    mod special_functions {}
    #[doc = include_str!("../../../book/src/dunkl-operators.md")]
    mod dunkl_operators {}
    #[doc = include_str!("../../../book/src/angular.md")]
    mod angular {}
    #[doc = include_str!("../../../book/src/states.md")]
    mod states {}
    #[doc = include_str!("../../../book/src/spectrum.md")]
    mod spectrum {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
