use thiserror::Error;

use crate::model::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("invalid covering: {}", join(.0))]
    InvalidCovering(Vec<Violation>),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("achieved size {achieved} is below the lower bound {lower} for n = {n}, x = {x}")]
    Inconsistent {
        n: u64,
        x: u64,
        achieved: u64,
        lower: u64,
    },

    #[error("search refused: {0}")]
    SearchTooLarge(String),
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
