use thiserror::Error;

use crate::simplex::Simplex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),

    #[error("unknown Coxeter type `{0}`")]
    UnknownType(String),

    #[error("simplex {0:?} has a component that is not of finite type")]
    NotFiniteType(Simplex),

    #[error("{upper:?} does not cover {lower:?}")]
    NotAFace { upper: Simplex, lower: Simplex },

    #[error("matching is not acyclic")]
    NotAcyclic,

    #[error("matching is not weighted for d = {d}: {upper:?} -> {lower:?}")]
    NotWeighted { d: u32, upper: Simplex, lower: Simplex },

    #[error("matching is not precise for d = {d}: {upper:?} -> {lower:?}")]
    NotPrecise { d: u32, upper: Simplex, lower: Simplex },

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("no precise matching supplied for relevant d = {0}")]
    MissingMatching(u32),

    #[error("refused: {0}")]
    GuardRefused(String),

    #[error("invariant factor is not a product of cyclotomic polynomials: {0}")]
    NonCyclotomic(String),

    #[error("invariant factor has a repeated cyclotomic factor: {0}")]
    NotSquarefree(String),

    #[error("no precise matching found for d = {d} after {explored} candidates")]
    SearchFailed { d: u32, explored: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
