//! Graphs as vertex-intersections of paths in a host tree.
//!
//! The crate decides membership in the classes `[h,2,1]` (VPT graphs with a
//! representation on a host tree of maximum degree `h`) through branch-graph
//! coloring, rewrites representations to meet a degree bound, and builds the
//! graph families used to study those classes.
//!
//! ```
//! use h21_core::{classify, gadgets};
//!
//! let rep = gadgets::a_n(4).unwrap();
//! assert_eq!(classify(&rep).unwrap().h_star, 4);
//! ```

pub mod branch;
pub mod coloring;
pub mod dot;
pub mod error;
pub mod format;
pub mod gadgets;
pub mod graph;
pub mod hclass;
pub mod rep;
pub mod svs;
pub mod tree;

pub use branch::branch_graph;
pub use coloring::{chromatic_number, k_colorable, validate_coloring, Coloring};
pub use error::{Error, Result};
pub use graph::{Graph, Label, SplitPartition, VertexSet};
pub use hclass::{classify, is_member, lemma3_split, reduce_degree, ClassReport};
pub use rep::{Validation, VptRepresentation};
pub use svs::{classify_svs, find_induced_suns, is_svs, SvsStatus, SvsVerdict};
pub use tree::{Tree, TreePath};
