//! Recurrent sandpile configurations on Ferrers graphs.
//!
//! A Ferrers diagram gives a bipartite graph with the top row as sink.
//! Its recurrent configurations are classified by decorated EW-tableaux,
//! equivalently by decorated permutations, and the canonical ones are in
//! bijection with intransitive trees. Every map is implemented in both
//! directions, and [`oracle`] re-derives the counts by brute force.
//!
//! ```
//! use ferrers_sandpile::{Configuration, FerrersDiagram};
//!
//! let g: FerrersDiagram = "5,3,3,2".parse().unwrap();
//! let g = g.graph();
//! let c = Configuration::new(vec![0, 0, 2, 1, 0, 0, 3, 2]);
//! assert_eq!(g.zeta(&c).unwrap().to_string(), "12738645");
//! ```

pub mod canonical;
pub mod decorated;
pub mod error;
pub mod ferrers;
pub mod io;
pub mod matrix_tree;
pub mod oracle;
pub mod perm;
pub mod sandpile;
pub mod supplementary;
pub mod tableau;
pub mod toppling;
pub mod tree;

pub use canonical::CanonicalToppling;
pub use decorated::{stable_bounds, DecoratedTableau, DecorationClass};
pub use error::{Error, Result};
pub use ferrers::{diagrams_up_to, enumerate_diagrams, FerrersDiagram, FerrersGraph, Labeling, Side};
pub use perm::{minrec_of_permutation, DecoratedPermutation, Permutation, RunDecomposition};
pub use sandpile::{BurningOrder, Configuration, Stabilization};
pub use supplementary::{CornersupportMask, SupplementaryTableau};
pub use tableau::{enumerate_tableaux, EWTableau, Entry, Violation};
pub use toppling::{stabilize_perm, PermState, StepKind, TraceStep};
pub use tree::IntransitiveTree;
