//! Max-Cut surplus of locally sparse graphs: sparsity audits, the vector
//! embedding and its hyperplane rounding, closed-form bounds, graph
//! families, and exact oracles for small inputs.
//!
//! Numeric code is generic over [`Scalar`] (`f32` or `f64`); the aliases at
//! the crate root fix the scalar to one of them.

pub mod bounds;
pub mod edgelist;
pub mod embedding;
pub mod error;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod rounding;
pub mod scalar;
pub mod sparsity;

pub use bounds::{BoundEntry, BoundKind, BoundReport, GraphSummary};
pub use embedding::{Embedding, EmbeddingParams};
pub use error::{Error, Result};
pub use graph::{DegeneracyOrdering, Graph, Subgraph};
pub use rounding::{Branch, Cut, DichotomyOutcome, TrialOutcome, TrialPlan, TrialStats};
pub use scalar::Scalar;
pub use sparsity::{SparseVerdict, SparsityReport};

pub type Embedding64<'g> = Embedding<'g, f64>;
pub type Embedding32<'g> = Embedding<'g, f32>;
pub type EmbeddingParams64 = EmbeddingParams<f64>;
pub type EmbeddingParams32 = EmbeddingParams<f32>;
pub type SparsityReport64 = SparsityReport<f64>;
pub type SparsityReport32 = SparsityReport<f32>;
pub type BoundReport64 = BoundReport<f64>;
pub type BoundReport32 = BoundReport<f32>;
pub type DichotomyOutcome64 = DichotomyOutcome<f64>;
