//! Error type shared by the numerical modules.

use thiserror::Error;

use crate::fes_basis::BasisIndex;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A qubit index addressed a qubit the register does not have.
    #[error("qubit index {index} out of range for {n} qubits")]
    QubitOutOfRange { index: usize, n: usize },

    /// Two states of different sizes were combined.
    #[error("dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },

    /// The dense engine refuses registers above its configured size.
    #[error("{n} qubits exceeds the dense limit of {limit}")]
    TooManyQubits { n: usize, limit: usize },

    #[error("qubit count must be at least 1")]
    NoQubits,

    #[error("amplitude vector of length {len} is not 2^{n}")]
    BadLength { len: usize, n: usize },

    /// Dicke excitation number outside `0..=n`.
    #[error("Dicke index k = {k} out of range for n = {n}")]
    DickeOutOfRange { n: usize, k: usize },

    /// `p + q` does not match the register size, or the index is not usable
    /// in the requested context.
    #[error("invalid basis index ({}, {}) for n = {n}", index.p, index.q)]
    InvalidBasisIndex { index: BasisIndex, n: usize },

    #[error("FES coefficient vector of length {len} does not match n = {n} (expected {expected})")]
    BadCoefficientCount {
        n: usize,
        len: usize,
        expected: usize,
    },

    /// The state has weight outside the flip-and-exchange symmetric span.
    #[error("state is not flip-and-exchange symmetric (residual {residual:.3e})")]
    NotFes { residual: f64 },

    /// The state is not invariant under qubit exchange.
    #[error("state is not permutation symmetric (residual {residual:.3e})")]
    NotSymmetric { residual: f64 },

    /// Curve parameter on the singular set `t^2 = 1`.
    #[error("curve parameter t = {t} is singular (t^2 = 1)")]
    SingularParameter { t: f64 },

    /// A vector that must be normalized has vanishing norm.
    #[error("vector has zero norm")]
    ZeroVector,

    /// Stability sweeps only approach states that lie on the curve's closure.
    #[error("target ({}, {}) is not an endpoint of the curve", target.p, target.q)]
    NotCurveEndpoint { target: BasisIndex },

    #[error("unknown named state '{0}'")]
    UnknownState(String),

    #[error("state '{name}' is not defined for n = {n}")]
    IncompatibleQubitCount { name: String, n: usize },

    /// Odd/even correspondence requires an odd register of at least three qubits.
    #[error("odd-even map needs odd n >= 3 (source) or even n >= 2 (target), got n = {0}")]
    BadParity(usize),

    #[error("all G coefficients are zero")]
    AllZero,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
