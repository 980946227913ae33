//! Minimal separators and potential maximal cliques of small graphs.
//!
//! The crate lists every minimal separator and every potential maximal clique
//! (PMC) of a graph through two parameterized routes, one driven by a minimum
//! vertex cover ([`vc`]) and one by the modular decomposition ([`modular`]).
//! Both routes verify every candidate, and both are cross-checked against
//! exhaustive subset oracles in [`recognition`]. A complete PMC catalog feeds
//! the exact treewidth and minimum fill-in dynamic programs in [`solvers`].
//!
//! ```
//! use pmckit::{generate::cube, vc, solvers};
//!
//! let g = cube();
//! let catalog = vc::pmcs_by_vc(&g)?;
//! assert_eq!(solvers::treewidth(&g, &catalog)?, 3);
//! # Ok::<(), pmckit::Error>(())
//! ```

pub mod error;
pub mod generate;
pub mod gr;
pub mod graph;
pub mod modular;
pub mod recognition;
pub mod solvers;
pub mod vc;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use recognition::PmcCatalog;
pub use vertex_set::VertexSet;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/recognition.md")]
    mod recognition {}
    #[doc = include_str!("../../../book/src/vertex-cover.md")]
    mod vertex_cover {}
    #[doc = include_str!("../../../book/src/modular-width.md")]
    mod modular_width {}
    #[doc = include_str!("../../../book/src/solvers.md")]
    mod solvers {}
}
