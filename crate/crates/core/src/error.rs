use thiserror::Error;

use crate::quad::Condition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot scale an all-zero tuple")]
    AllZero,
    #[error("failed to parse: {0}")]
    Parse(String),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("parameters outside the convexity guard: {0}")]
    Guard(String),
    #[error("not a convex quadrilateral (violated: {})", join_conditions(.0))]
    Nonconvex(Vec<Condition>),
    #[error("sides violate the quadrilateral inequality")]
    QuadrilateralInequality,
    #[error("closed form disagrees with the placed solution: {0}")]
    ClosedFormMismatch(String),
    #[error("point is in the excluded locus of the quartic/cubic map")]
    ExcludedLocus,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("curve is not admissible: {0}")]
    Curve(String),
}

fn join_conditions(cs: &[Condition]) -> String {
    cs.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
