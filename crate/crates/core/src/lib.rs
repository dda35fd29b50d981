//! Exact generating functions for weighted lozenge tilings of dented half and
//! quarter hexagons, computed through nonintersecting lattice paths, together
//! with a machine-checked treatment of the determinant identity behind the
//! quarter-hexagon factorization.

pub mod checks;
pub mod detid;
pub mod error;
pub mod exactalg;
pub mod lgv;
pub mod paths;
pub mod regions;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/arithmetic.md")]
    mod arithmetic {}
    #[doc = include_str!("../../../book/src/paths.md")]
    mod paths {}
    #[doc = include_str!("../../../book/src/regions.md")]
    mod regions {}
    #[doc = include_str!("../../../book/src/lgv.md")]
    mod lgv {}
    #[doc = include_str!("../../../book/src/detid.md")]
    mod detid {}
    #[doc = include_str!("../../../book/src/triangulation.md")]
    mod triangulation {}
    #[doc = include_str!("../../../book/src/checks.md")]
    mod checks {}
}
