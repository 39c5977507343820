//! Principal typings of flow networks computed by graph reassembling.
//!
//! A flow network has dangling input and output edges forming its interface.
//! Its principal typing assigns to every pair `(A, B)` of input and output
//! subsets the tightest interval containing `g(A) - g(B)` over all feasible
//! flows. The [`engine`] computes it by splicing edges back together one at a
//! time while maintaining maxFromTo tables; [`oracle`] recomputes everything
//! by brute-force max-flow for cross-checking; [`planar`], [`regularize`] and
//! [`layered`] supply the plane-graph pipeline that keeps the tables small.

pub mod embed;
pub mod engine;
pub mod error;
pub mod fixtures;
pub mod generators;
pub mod layered;
pub mod maxflow;
pub mod network;
pub mod oracle;
pub mod pipeline;
pub mod planar;
pub mod rational;
pub mod regularize;
pub mod tree;
pub mod typing;

pub use error::{Error, Result};
pub use network::{EdgeId, Flow, FlowNetwork, IoAssignment, VertexId};
pub use rational::{Capacity, Rational};
pub use typing::{Interval, SubsetIndex, SubsetTable, Typing};
pub use engine::{principal_typing_reassembled, run_reassembling, Component, EngineStats, SpliceEvent};
pub use tree::{alpha_measure, ReassemblingTree};
pub use embed::{embed_small, DEFAULT_EMBED_LIMIT};
pub use layered::{layered_reassembling, sweep_reassembling, LayeredTree};
pub use planar::{LayerPartition, PlaneGraph};
pub use regularize::{three_regularize, three_regularize_plane, Regularized};
pub use pipeline::{typing_pipeline, PipelineRun, TreeSource};
