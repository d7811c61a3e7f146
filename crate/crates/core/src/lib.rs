//! Hitting sets on functional graphs, their digraph-homomorphism and
//! asymptotic-dimension counterparts, and a LOCAL-model simulator.

pub mod asdim;
pub mod bitset;
pub mod digraph;
pub mod error;
pub mod graph;
pub mod hitting;
pub mod hom;
pub mod local;
pub mod partition;
pub mod shift;

pub use digraph::{d_r, AbstractWalk, Digraph, ErgodicWitness, Step, TemplateClass};
pub use error::{Error, Result};
pub use graph::{Distance, FunctionalGraph};
pub use partition::{DisjointSets, Partition};
