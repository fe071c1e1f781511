//! Post-processing of cell inequalities: redundancy removal, planar vertex
//! and edge enumeration, shape classification, union decomposition and
//! order-k diagrams.

mod classify;
mod diagram;
mod redundancy;
mod vertices;

pub(crate) use classify::is_cyclic_p2;
pub use classify::{
    classify2d, classify_hrep, cyclic_determinant, cyclic_test, CellShape, ShapeTag,
    CYCLIC_AMBIGUOUS_TOL, CYCLIC_TOL, INTERIOR_TOL, PARALLEL_ANGLE_TOL,
};
pub use diagram::{diagram, union_decompose, DiagramCell, MAX_DIAGRAM_SITES};
pub use redundancy::{remove_redundant, COINCIDENT_TOL};
pub use vertices::{edges2d, vertices2d, Edge, VERTEX_DEDUP_TOL, VERTEX_SLACK_TOL};
