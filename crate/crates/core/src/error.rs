use thiserror::Error;

use crate::catalog::CatalogError;
use crate::character::CharError;
use crate::field::FieldError;
use crate::lie::LieError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("incompatible generators: {0}")]
    IncompatibleGenerators(String),
    #[error("a group needs at least one generator")]
    NoGenerators,
    #[error("group order exceeds the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("element is not a member of the group: {0}")]
    NotAMember(String),
    #[error("operation is undefined for the trivial group")]
    TrivialGroup,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("group definition: {0}")]
    Definition(String),
}

/// Top-level error with a stable, machine-readable category.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Character(#[from] CharError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("{0}")]
    NotSimple(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degree data rejected: {0}")]
    DegreeData(String),
    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn category(&self) -> &'static str {
        match self {
            Error::Group(GroupError::CapExceeded { .. }) => "cap-exceeded",
            Error::Group(GroupError::IncompatibleGenerators(_)) => "incompatible-generators",
            Error::Group(GroupError::NotNormal(_)) => "not-normal",
            Error::Group(GroupError::TrivialGroup) => "trivial-group",
            Error::Group(_) => "group",
            Error::Character(e) => e.category(),
            Error::Catalog(e) => e.category(),
            Error::Lie(e) => e.category(),
            Error::NotSimple(_) => "not-simple",
            Error::Precondition(_) => "precondition",
            Error::DegreeData(_) => "degree-data",
            Error::Io { .. } => "io",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
