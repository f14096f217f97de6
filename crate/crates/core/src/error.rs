use alloc::string::String;

use crate::order::OrderError;
use crate::relation::Witness;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("axiom {axiom} fails at {witness}")]
    Axiom { axiom: &'static str, witness: Witness },
    #[error("R is not a pre-order: {witness}")]
    Preorder { witness: Witness },
    #[error("point set is not R-increasing: {witness}")]
    NotRIncreasing { witness: Witness },
    #[error("the empty R-increasing set corresponds to the improper filter")]
    ImproperFilter,
    #[error("space carries no prime-filter data")]
    NotADual,
    #[error("isomorphism check failed: {0}")]
    IsoFailure(String),
    #[error("morphism condition {condition} fails at {witness}")]
    Morphism { condition: &'static str, witness: Witness },
    #[error("{0} is not an end")]
    NotAnEnd(String),
    #[error("hemirelation condition {condition} fails at {witness}")]
    Condition { condition: &'static str, witness: Witness },
    #[error("ρ[−,η({element})ᶜ]ᶜ is not the image of any element")]
    NotClopenUpset { element: usize },
    #[error("size limit exceeded: {0}")]
    Size(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
