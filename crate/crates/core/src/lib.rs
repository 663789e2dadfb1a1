//! Squarefree powers and squarefree symbolic powers of edge ideals of
//! hypergraphs: exact regularity, admissible invariants, and the graph
//! classes on which regularity formulas are known.

pub mod admissible;
pub mod axioms;
pub mod error;
pub mod gen_ideal;
pub mod graph_classes;
pub mod homology;
pub mod hypergraph;
pub mod ideal;
pub mod io;
pub mod powers;
pub mod regularity;
pub mod vertex_set;

pub use error::{Error, Result};
pub use homology::FieldChoice;
pub use hypergraph::{Graph, Hypergraph};
pub use ideal::{Degree, SqfIdeal};
pub use powers::{Filtration, PowerKind};
pub use vertex_set::VertexSet;
