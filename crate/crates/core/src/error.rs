//! Error type shared across the library.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("undefined divisor: zero polynomial")]
    ZeroPolynomial,
    #[error("root cluster ambiguity: clusters near {0:?} and {1:?} are closer than 10x the cluster radius")]
    ClusterAmbiguity(String, String),
    #[error("root iteration failed to converge after restarts")]
    RootConvergence,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("degenerate Moebius matrix (determinant 0)")]
    DegenerateMoebius,
    #[error("exact arithmetic required: {0}")]
    InexactInput(String),
    #[error("unsupported genus {0}: divisor machinery requires G=0")]
    UnsupportedGenus(i64),
    #[error("flat data: the Gauss map is constant")]
    Flat,
    #[error("end point: {0} is a puncture")]
    EndPoint(String),
    #[error("not complete: puncture {0} has end order 0")]
    NotComplete(String),
    #[error("identical maps")]
    IdenticalMaps,
    #[error("covering z^m is branched inside M: {0} must be a puncture")]
    BranchedCovering(String),
    #[error("curve lies in the hyperplane")]
    CurveInHyperplane,
    #[error("hyperplanes not in general position: {0}")]
    NotGeneralPosition(String),
    #[error("degenerate curve: restrict to its span first")]
    DegenerateCurve,
    #[error("quadrature budget exhausted; partial value {0}")]
    QuadratureBudget(f64),
    #[error("path crosses a pole of a form near {0}")]
    PathThroughPole(String),
    #[error("multivalued: puncture {0} inside the requested region while the period condition fails")]
    Multivalued(String),
    #[error("transcendental data: outside the algebraic machinery")]
    Transcendental,
    #[error("bookkeeping-only entry: {0}")]
    BookkeepingOnly(String),
    #[error("unknown catalog entry {0}")]
    UnknownEntry(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
