use thiserror::Error;

use crate::decomposition::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed slope `{0}`: expected r/s, n, inf or closed")]
    MalformedSlope(String),

    #[error("zero denominator in `{0}`: only 1/0, -1/0 or inf denote the meridian")]
    ZeroDenominator(String),

    #[error("malformed width `{0}`: expected comma-separated non-negative integers")]
    MalformedWidth(String),

    #[error("({p}, {q}) is not a nontrivial torus knot: need gcd(|p|,|q|) = 1 and |p|, |q| >= 2")]
    InvalidTorusKnot { p: i64, q: i64 },

    #[error("slope {0} has no torus-knot delta; only rational slopes do")]
    NonRationalSlope(String),

    #[error("component index {index} out of range for a surface with {len} components")]
    ComponentIndex { index: usize, len: usize },

    #[error("component ({genus}, {boundary}) needs at least {needed} boundary circles")]
    NotEnoughBoundary {
        genus: u32,
        boundary: u32,
        needed: u32,
    },

    #[error("tube_merge needs two distinct components, got index {0} twice")]
    SameComponent(usize),

    #[error("length mismatch: {left} entries vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={len}")]
    WidthIndex { index: usize, len: usize },

    #[error("entry {entry} plus {delta} is negative")]
    NegativeEntry { entry: u32, delta: i64 },

    #[error("scale factor must be non-negative")]
    NegativeScale,

    #[error("invalid decomposition: {}", summarize(.0))]
    InvalidDecomposition(Vec<Violation>),

    #[error("thick index {index} out of range for {len} thick surfaces")]
    ThickIndex { index: usize, len: usize },

    #[error("cannot stabilize along the closed slope")]
    StabilizeClosed,

    #[error("stabilization slope {alpha} differs from the decomposition slope {slope}")]
    SlopeMismatch { alpha: String, slope: String },

    #[error("thick surface {0} is a union of spheres and cannot meet the boundary torus")]
    SphereStabilization(usize),

    #[error("operation needs a sloped decomposition, got a closed one")]
    AlreadyClosed,

    #[error("component ({genus}, {boundary}) has an odd number of boundary circles")]
    OddBoundary { genus: u32, boundary: u32 },

    #[error("decomposition json: {0}")]
    Json(String),
}

fn summarize(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
