//! Quadratic algebras `TE/<id - R>`, the conditions under which a cross
//! descends to a pair of them, and the quantum Weyl algebra of a Hecke
//! R-matrix.

mod algebra;
mod ideal;
mod operator;
mod quotient;

use thiserror::Error;

use crate::cross::CrossError;

pub use algebra::{operator_relations, ConfluenceWitness, QuadraticAlgebra, RewriteSystem};
pub use ideal::{check_tau_ideal, ideal_component, Side, TauIdealReport, TauWitness};
pub use operator::{
    check_braid, check_consistency, check_hecke, check_sufficient, standard_hecke_r, Operator2, OperatorCheck,
    OperatorReport, OperatorWitness,
};
pub use quotient::{build_quantum_weyl, graded_dimension, quotient_normal_form, weyl_twist, CrossedQuotient, QuantumWeyl};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadraticError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("the parameter q must be nonzero")]
    ZeroParameter,
    #[error("braid relation R1 R2 R1 = R2 R1 R2 fails")]
    BraidFailure,
    #[error("Hecke condition (R - q)(R + 1/q) = 0 fails")]
    HeckeFailure,
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("rewrite system is not locally confluent: overlap `{overlap}` reduces to `{left}` and `{right}`")]
    NotConfluent { overlap: String, left: String, right: String },
    #[error("not a {side} tau-ideal: moving `{word}` past generator {generator} leaves `{remainder}` outside the ideal")]
    NotTauIdeal { side: &'static str, word: String, generator: usize, remainder: String },
    #[error(transparent)]
    Cross(#[from] CrossError),
}

#[cfg(test)]
mod tests;
