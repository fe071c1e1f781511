//! Order-k (multipoint) Voronoi cells: H-representations, LP-certified
//! predicates, planar shape classification, inverse constructions, and a
//! sampling oracle.
//!
//! A cell `V_T(S)` is the set of points no farther from every site of `S`
//! than from every site of `T \ S`.

pub mod cell_ops;
pub mod constructions;
mod error;
pub mod geom2;
pub mod lp;
pub mod model;
pub mod oracle;
pub mod predicates;

pub use cell_ops::{classify2d, diagram, remove_redundant, CellShape, ShapeTag};
pub use constructions::{construct, Construction, ImpossibilityReason, Target, TargetShape};
pub use error::{Error, Result};
pub use model::{
    cell_hrep, membership, BoundingBox, HPolyhedron, Halfspace, Point, Site, SiteSystem,
};
pub use predicates::{has_interior, is_bounded, is_empty, PredicateReport};
