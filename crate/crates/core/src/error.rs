use thiserror::Error;

use crate::constructions::ImpossibilityReason;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coordinates must be finite")]
    NonFinite,

    #[error("sites coincide")]
    DegenerateSites,

    #[error("duplicate site label `{0}`")]
    DuplicateLabel(String),

    #[error("sites `{0}` and `{1}` coincide")]
    DuplicateSite(String, String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("halfspace normal is the zero vector")]
    ZeroNormal,

    #[error("matrix is not orthogonal")]
    NotOrthogonal,

    #[error("numerically ill-conditioned: {0}")]
    NumericallyIllConditioned(String),

    #[error("base system is infeasible")]
    InfeasibleBase,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("strip offsets are degenerate (need alpha < beta)")]
    DegenerateStrip,

    #[error("wedge normals are parallel")]
    ParallelNormals,

    #[error("quadrilateral is cyclic: {0}")]
    CyclicInput(ImpossibilityReason),

    #[error("quadrilateral is not strictly convex")]
    NonConvexInput,

    #[error("unbounded sides are parallel: {0}")]
    ParallelUnboundedSides(ImpossibilityReason),

    #[error("target is not three-sided")]
    NotThreeSided,

    #[error("interior vertex lies on the boundary of the parallel band")]
    VertexOnBandBoundary,

    #[error("interior angle is flat")]
    FlatAngle,

    #[error("target has parallel sides")]
    ParallelSides,

    #[error("unrecognized shape: {0}")]
    UnrecognizedShape(String),

    #[error("invalid target: {0}")]
    InvalidTarget(String),

    #[error("construction failed verification: {0}")]
    ConstructionFailed(String),

    #[error("could not draw distinct sites")]
    DegenerateDraw,
}
