use thiserror::Error;

use crate::weight::Weight;

/// A conjectural identity that failed for a concrete input.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Counterexample {
    /// Which identity failed (e.g. `"orbit-sum integrality"`).
    pub identity: String,
    /// Highest weight being processed when the failure was observed.
    pub weight: Weight,
    pub detail: String,
}

impl std::fmt::Display for Counterexample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} fails at {}: {}", self.identity, self.weight, self.detail)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("no simple Lie algebra of type {series}{rank}")]
    Inadmissible { series: char, rank: usize },
    #[error("cannot parse algebra token {0:?} (expected a letter A-G followed by the rank)")]
    BadAlgebraToken(String),
    #[error("weight {weight} has {got} labels but the rank is {rank}")]
    Arity { weight: Weight, got: usize, rank: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("Weyl group of order {order} exceeds the enumeration limit {max}")]
    GroupTooLarge { order: u64, max: u64 },
    #[error("expanding a polynomial of degree {degree} exceeds the limit {max}")]
    PolynomialTooLarge { degree: usize, max: usize },
    #[error("polynomial variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("layer polynomial has a non-positive linear coefficient; cannot bound dominant weights")]
    UnboundedOrdering,
    #[error("counterexample: {0}")]
    Counterexample(Box<Counterexample>),
}

impl Error {
    pub fn counterexample(identity: &str, weight: &Weight, detail: impl Into<String>) -> Self {
        Error::Counterexample(Box::new(Counterexample {
            identity: identity.to_string(),
            weight: weight.clone(),
            detail: detail.into(),
        }))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
