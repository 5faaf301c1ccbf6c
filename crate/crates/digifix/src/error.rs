use thiserror::Error;

use crate::image::Point;

/// Errors for every operation in the crate. Each precondition violation
/// gets its own variant so callers (and the CLI) can name what failed.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("adjacency parameter u={u} out of range 1..={dim}")]
    AdjacencyOutOfRange { u: usize, dim: usize },

    #[error("duplicate point {point:?} at indices {first} and {second}")]
    DuplicatePoint {
        point: Point,
        first: usize,
        second: usize,
    },

    #[error("image is empty")]
    EmptyImage,

    #[error("point {0:?} not in image")]
    PointNotInImage(Point),

    #[error("point index {index} out of range for image of {size} points")]
    PointIndexOutOfRange { index: usize, size: usize },

    #[error("metric parameter p={p} must be at least 1")]
    MetricOrderOutOfRange { p: f64 },

    #[error("shortest-path metric requires a connected image")]
    DisconnectedImage,

    #[error("image must have at least {needed} points, has {size}")]
    TooFewPoints { needed: usize, size: usize },

    #[error("map table has {len} entries but the image has {size} points")]
    TableLengthMismatch { len: usize, size: usize },

    #[error("map table entry {index} -> {value} is not a valid point index (image size {size})")]
    TableEntryOutOfRange {
        index: usize,
        value: usize,
        size: usize,
    },

    #[error("maps act on images of different sizes ({left} vs {right})")]
    MapSizeMismatch { left: usize, right: usize },

    #[error("claimed stabilization index {index} is not stable within the window")]
    UnstableClaim { index: usize },

    #[error("map is not a contraction: d(f x{i}, f x{j}) >= d(x{i}, x{j})")]
    NotDistanceDecreasing { i: usize, j: usize },

    #[error("map is not a Kannan contraction (k* not below 1/2)")]
    NotKannan,

    #[error("image is not uniformly connected: adjacent pair ({i},{j}) at squared distance {sq} != u={u}")]
    NotUniformlyConnected {
        i: usize,
        j: usize,
        sq: i64,
        u: usize,
    },

    #[error("map is not continuous: adjacent pair ({i},{j}) maps to non-adjacent, unequal points")]
    NotContinuous { i: usize, j: usize },

    #[error("coefficients must be nonnegative with sum strictly below 1, got {sum}")]
    CoefficientsOutOfRange { sum: f64 },

    #[error("coefficient xi={xi} must lie strictly between 0 and 1")]
    XiOutOfRange { xi: f64 },

    #[error("containment premise fails: {inner}(X) is not contained in {outer}(X)")]
    ContainmentFails {
        inner: &'static str,
        outer: &'static str,
    },

    #[error("weak commutativity premise fails at point index {index}")]
    NotWeaklyCommutative { index: usize },

    #[error("pointwise commutativity premise fails for maps {left} and {right} at point index {index}")]
    NotCommuting {
        left: &'static str,
        right: &'static str,
        index: usize,
    },

    #[error("contraction-style inequality premise fails at pair ({u},{q})")]
    InequalityFails { u: usize, q: usize },

    #[error("iteration did not stabilize within {cap} steps")]
    IterationCapExceeded { cap: usize },

    #[error("fixed point is not unique: indices {first} and {second} are both fixed")]
    FixedPointNotUnique { first: usize, second: usize },

    #[error("enumeration cap exceeded: image has {size} points, cap is {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("simple closed curves need at least 4 points, image has {size}")]
    CurveTooSmall { size: usize },

    #[error("image is not a simple closed curve")]
    NotSimpleClosedCurve,

    #[error("window extent {extent} must be positive")]
    EmptyWindow { extent: usize },

    #[error("halving a zero vector never leaves the lattice")]
    ZeroPoint,

    #[error("exponent {n} out of supported range {min}..={max}")]
    ExponentOutOfRange { n: u32, min: u32, max: u32 },

    #[error("unknown scenario id {0:?}")]
    UnknownScenario(String),
}

pub type Result<T> = std::result::Result<T, Error>;
