//! Exact stable-set and matching machinery for small graphs and their line
//! graphs.
//!
//! The crate answers questions of the form "is this stable set a local
//! maximum stable set?" or "does this matching extend to a maximum
//! matching?" exactly, and sweeps such questions over every connected graph
//! of a given order.
//!
//! * [`graph`]: the [`Graph`] type, neighborhoods, cuts, line graphs.
//! * [`format`]: edge-list and graph6 readers and writers.
//! * [`canon`]: isomorphism-invariant certificates.
//! * [`stability`]: `α(G)`, maximum and local maximum stable sets.
//! * [`matching`]: maximum matchings, enumeration, uniquely restricted
//!   matchings, alternating decompositions.
//! * [`kec`]: König-Egerváry recognition and the matching/cut lemma.
//! * [`duality`]: the matching ⇄ line-graph local-maximality checks and the
//!   figure fixtures.
//! * [`atlas`]: connected-graph generation and parallel scans.

pub mod atlas;
mod bits;
pub mod canon;
pub mod duality;
pub mod error;
pub mod format;
pub mod graph;
pub mod kec;
pub mod matching;
pub mod report;
pub mod stability;

pub use error::{Error, Result};
pub use graph::{EdgeSet, Graph, LineMap, VertexSet};
pub use matching::Matching;
pub use report::{Instance, Outcome, Status, VerificationReport};
