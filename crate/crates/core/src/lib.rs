//! Compatibility of multi-state phylogenetic characters, decided through
//! proper chordal completions of the partition intersection graph.
//!
//! The pipeline: parse a [`CharacterSet`], build its intersection graph as a
//! [`SandwichInstance`] (edges between states sharing a species, conflicts
//! between states of the same character), propagate forced and forbidden
//! pairs with [`closure`], search for a proper chordal completion with
//! [`solve`], and turn a completion into a tree with [`build_phylogeny`].
//!
//! ```
//! use phylocompat::{build_instance, build_phylogeny, is_convex, parse_characters, solve, Status};
//!
//! let cs = parse_characters("c1 = ab|cdefj|ghi\nc2 = def|abcghij\nc3 = gh|defi\nc4 = abcd|ghi").unwrap();
//! let report = solve(&build_instance(&cs), 1_000_000);
//! assert_eq!(report.status, Status::Compatible);
//! let tree = build_phylogeny(&cs, report.completion.as_ref().unwrap()).unwrap();
//! for c in cs.characters() {
//!     assert!(is_convex(&tree, &cs, c).unwrap());
//! }
//! ```

pub mod characters;
pub mod experiments;
pub mod graph;
pub mod intersection;
pub mod sandwich;
pub mod solver;
pub mod tree;

pub use characters::{parse_characters, Character, CharacterError, CharacterSet, SpeciesId};
pub use experiments::{
    dataset, random_characters, random_instance, scan_subsets, verify_f4_counterexample, verify_f4_counterexample_on,
    Dataset, ExperimentError, F4Report, Payload, ScanReport,
};
pub use graph::{Graph, Pair, Vertex};
pub use intersection::{build_instance, vertex_index, vertex_species, StateVertex};
pub use sandwich::{
    closure, find_chordless_cycle, find_f_path, find_g_cycle, is_chordal, verify_closure_properties, ClosureOutcome,
    SandwichError, SandwichInstance, VertexLabel,
};
pub use solver::{
    cycle_has_proper_triangulation, enumerate_minimal_completions, solve, triangulations_of_cycle, Completion,
    SolveReport, SolverError, Status, DEFAULT_NODE_BUDGET,
};
pub use tree::{
    build_clique_tree, build_phylogeny, is_convex, parse_newick, perfect_elimination_ordering, PhyloTree, TreeError,
};
