//! Recognisers, constructions and enumerators for the graph families used
//! by the experiments.

pub mod blocks;
pub mod chordal;
pub mod construct;
pub mod enumerate;

use serde::Serialize;

pub use blocks::{
    block_decomposition, is_block_graph, special_blocks, BlockDecomposition, SpecialBlockType,
    SpecialBlockWitness,
};
pub use chordal::{
    is_chordal, is_cm_chordal, is_weakly_chordal, simplicial_vertices, validate_cm_partition,
};
pub use construct::{
    build_attach_kn, build_whiskered_attach, complete_with_pendants, whisker_complete, Construction,
};
pub use enumerate::{
    canonical_code, canonical_form, enumerate_graphs, enumerate_graphs_with, ClassFilter,
    EnumerationOptions,
};

use crate::hypergraph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphClassReport {
    pub connected: bool,
    pub chordal: bool,
    pub weakly_chordal: bool,
    pub block: bool,
    pub cm_chordal: bool,
    pub cm_partition: Option<Vec<VertexSet>>,
    pub simplicial: VertexSet,
}

pub fn classify(g: &Graph) -> GraphClassReport {
    let (cm_chordal, cm_partition) = is_cm_chordal(g);
    GraphClassReport {
        connected: g.is_connected(),
        chordal: is_chordal(g).0,
        weakly_chordal: is_weakly_chordal(g).0,
        block: is_block_graph(g).0,
        cm_chordal,
        cm_partition,
        simplicial: simplicial_vertices(g),
    }
}
