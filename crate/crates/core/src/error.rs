use thiserror::Error;

use crate::tits::Violation;
use crate::Node;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Domain errors raised by diagram, geometry, Weyl group and Tits
/// computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node label {0} is not a positive integer")]
    InvalidLabel(Node),
    #[error("duplicate node label {0}")]
    DuplicateLabel(Node),
    #[error("invalid Coxeter matrix entry m({i},{j}) = {m}")]
    InvalidEntry { i: Node, j: Node, m: u32 },
    #[error("component on nodes {nodes:?} is not of finite type")]
    NotSpherical { nodes: Vec<Node> },
    #[error("unknown diagram type {0:?}")]
    UnknownType(String),
    #[error("rank out of range in {0:?}")]
    RankOutOfRange(String),
    #[error("unknown node {0}")]
    UnknownNode(Node),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("{0} is not a diagram automorphism")]
    NotAnAutomorphism(String),
    #[error("component of type {0} is not crystallographic")]
    NonCrystallographic(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector does not lie in the span of the simple roots")]
    NotInRootSpan,
    #[error("orbit enumeration exceeded the budget of {0} vectors")]
    OrbitBudgetExceeded(usize),
    #[error("element order exceeds {0}")]
    OrderBudgetExceeded(u32),
    #[error("integer overflow in orbit enumeration")]
    Overflow,
    #[error("invalid Tits diagram: {}", join(.0))]
    InvalidTitsDiagram(Vec<Violation>),
    #[error("rank-one extraction needs a trivial automorphism group; fold first")]
    NontrivialGamma,
    #[error("relative rank is zero; the minimal angle is undefined")]
    ZeroRelativeRank,
    #[error("invalid angle: {0}")]
    InvalidAngle(String),
}

impl Error {
    /// Stable machine-readable code, used by the JSON emitter.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidLabel(_) => "invalid_label",
            Error::DuplicateLabel(_) => "duplicate_label",
            Error::InvalidEntry { .. } => "invalid_entry",
            Error::NotSpherical { .. } => "not_spherical",
            Error::UnknownType(_) => "unknown_type",
            Error::RankOutOfRange(_) => "rank_out_of_range",
            Error::UnknownNode(_) => "unknown_node",
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::NotAnAutomorphism(_) => "not_an_automorphism",
            Error::NonCrystallographic(_) => "non_crystallographic",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::NotInRootSpan => "not_in_root_span",
            Error::OrbitBudgetExceeded(_) => "orbit_budget_exceeded",
            Error::OrderBudgetExceeded(_) => "order_budget_exceeded",
            Error::Overflow => "overflow",
            Error::InvalidTitsDiagram(_) => "invalid_tits_diagram",
            Error::NontrivialGamma => "nontrivial_gamma",
            Error::ZeroRelativeRank => "zero_relative_rank",
            Error::InvalidAngle(_) => "invalid_angle",
        }
    }
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
