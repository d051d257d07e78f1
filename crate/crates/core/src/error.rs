use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cyclic group order must be positive")]
    ZeroOrder,
    #[error("symmetric group S_{0} is not supported (1 <= n <= 4)")]
    SymmetricOutOfRange(usize),
    #[error("free abelian group rank must be positive")]
    ZeroRank,
    #[error("generator images {0} and {1} do not commute")]
    NonCommuting(usize, usize),
    #[error("expected {expected} generator images, got {got}")]
    WrongImageCount { expected: usize, got: usize },
    #[error("degree mismatch: cochain has degree {cochain}, chain has degree {chain}")]
    DegreeMismatch { cochain: usize, chain: usize },
    #[error("tuple length {got} does not match degree {expected}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("operation needs a cochain of degree at least {min}, got {got}")]
    DegreeTooLow { min: usize, got: usize },
    #[error("zeta_{0} is not available: only 2, 4, 6, 8 are supported ({0}! terms)")]
    ZetaOutOfRange(usize),
    #[error("operation requires a finite group")]
    InfiniteGroup,
    #[error("map is not an element of F': {0}")]
    NotInFPrime(String),
    #[error("invalid breakpoint data: {0}")]
    InvalidBreakpoints(String),
    #[error("cochain is not 1-constant, witness pair {0:?} / {1:?}")]
    NotOneConstant(Vec<String>, Vec<String>),
    #[error("cochain is not a cocycle, delta is nonzero at {0:?}")]
    NotCocycle(Vec<String>),
    #[error("map is not a homomorphism at {0:?}")]
    NotHomomorphism(Vec<String>),
    #[error("probe parameter p = {p} is out of range for degree {degree}")]
    ProbeRange { p: usize, degree: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
