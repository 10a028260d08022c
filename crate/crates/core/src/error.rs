use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid degree {degree}: {reason}")]
    InvalidDegree { degree: usize, reason: &'static str },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid tessellation type {{{p},{q}}}: p and q must both be at least 3")]
    TooSmall { p: u32, q: u32 },

    #[error("not hyperbolic: 1/p+1/q ≥ 1/2 for {{{p},{q}}}")]
    NotHyperbolic { p: u32, q: u32 },

    #[error("invalid divisor m={m} for p={p}: need 2 ≤ m ≤ p")]
    InvalidDivisor { p: u32, m: u32 },

    #[error("enumeration cap exceeded: p={p} but involutions are only enumerated for p ≤ {cap}")]
    EnumerationCap { p: usize, cap: usize },

    #[error("sigma is not an involution: {0}")]
    NotAnInvolution(String),

    #[error("sigma is not a valid witness: (sigma rho)^{q} is not the identity")]
    NotAWitness { q: u32 },

    #[error("edge index {index} out of range 1..={p}")]
    EdgeIndex { index: usize, p: usize },

    #[error("point {re}+{im}i is outside the open unit disk")]
    OutsideDisk { re: f64, im: f64 },

    #[error("point pairs are not congruent: d(P,Q)={left}, d(P2,Q2)={right}")]
    DistanceMismatch { left: f64, right: f64 },

    #[error("degenerate point pair: d(P,Q)={0}")]
    DegeneratePair(f64),

    #[error("depth {depth} exceeds cap {cap}")]
    DepthCap { depth: usize, cap: usize },

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}
