//! Contact cut graphs of doubled surfaces, Lefschetz fibrations read off
//! paths in them, and bounds on the number of handleslide moves.

pub mod curves;
pub mod cutgraph;
pub mod error;
pub mod invariants;
pub mod lefschetz;
pub mod surface;

pub use error::{Error, Result};

// The book's chapters double as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    mod overview {}
    #[doc = include_str!("../../../book/src/surfaces.md")]
    mod surfaces {}
    #[doc = include_str!("../../../book/src/cut-systems.md")]
    mod cut_systems {}
    #[doc = include_str!("../../../book/src/fibrations.md")]
    mod fibrations {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
