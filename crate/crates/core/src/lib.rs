//! Fixed-point-free automorphisms and involutions of graphs, decided through
//! modular decomposition with per-class quotient solvers, with explicit
//! witnesses, independent brute-force oracles, hardness-reduction generators
//! and 2-homogeneous equitable partitions.
//!
//! ```
//! use fpfaut::{has_fpf_automorphism, Graph};
//!
//! let r = has_fpf_automorphism(&Graph::path(4)).unwrap();
//! assert_eq!(r.witness.unwrap().to_string(), "(0 3)(1 2)");
//! ```

pub mod engine;
pub mod equitable;
pub mod error;
pub mod format;
pub mod gen;
pub mod graph;
pub mod iso;
pub mod modular;
pub mod oracle;
pub mod perm;
pub mod pfpf;
pub mod reductions;

pub use engine::{
    has_fpf_automorphism, has_fpf_involution, verify_result, Engine, EngineConfig, EngineResult, TraceEntry,
};
pub use error::{Error, Result};
pub use graph::{BooleanMask, Graph, VertexColoring};
pub use perm::{CycleNotation, Permutation};
pub use pfpf::{Mode, PfpfInstance, QuotientClassTag};
