//! Treewidth machinery for outer (min-)k-planar convex drawings.
//!
//! The crate takes a graph drawn with all vertices on a circle, measures its
//! crossings, planarizes it with exact rational coordinates, and constructs a
//! tree decomposition of width at most `3 * (k/2) + 4` together with a
//! balanced separation of order at most `2 * (k/2) + 4` (integer division).
//! It also ships the lower-bound families (the grids G_k, their stretched
//! variants F_k, stacked prisms) with bramble certificates and small exact
//! oracles (treewidth, bramble order, minimum balanced separation) to check
//! the bounds against.
//!
//! Entry points:
//! - [`ConvexDrawing`] and [`ConvexDrawing::crossings`] for crossing analysis,
//! - [`decompose`] and [`separate()`] for the two bounds,
//! - [`families`] for generators, [`oracles`] for the exact baselines,
//! - [`io`] for the `.cvx`, `.gr`, `.td` and `.sep` file formats.
//!
//! The `okp` binary wires these into a batch command line; see the crate's
//! `examples/` directory for one runnable example per capability.

pub mod cli;
pub mod decomp;
pub mod drawing;
pub mod error;
pub mod families;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod planarize;
pub mod separate;

pub use decomp::{decompose, run_pipeline, PipelineRun, TreeDecomposition};
pub use drawing::{ConvexDrawing, CrossingReport, ExpansionResult};
pub use error::{Edge, Error, Result};
pub use graph::Graph;
pub use planarize::{planarize, Planarization};
pub use separate::{separate, Separation};
