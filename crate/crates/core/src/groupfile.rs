//! Group definition files.
//!
//! A definition is a small TOML document:
//!
//! ```toml
//! name = "A5"          # optional label
//! kind = "perm"        # "perm" or "matfq"
//! degree = 5           # perm: number of points
//! generators = [[1, 2, 3, 4, 0], [1, 2, 0, 3, 4]]
//! ```
//!
//! For `kind = "matfq"` the keys `q` (field order) and `n` (dimension) replace
//! `degree`, and each generator is the row-major list of `n * n` field
//! elements encoded as integers `0..q` (see [`crate::field`]).

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::element::{FqMatrix, GroupElement, Permutation};
use crate::error::GroupError;
use crate::field::FiniteField;
use crate::group::FiniteGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Perm,
    Matfq,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDefinition {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub kind: GroupKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub generators: Vec<Vec<u32>>,
}

impl GroupDefinition {
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let def: Self = toml::from_str(text).map_err(|e| GroupError::Definition(e.to_string()))?;
        def.check_shape()?;
        Ok(def)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, GroupError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| GroupError::Definition(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("definitions always serialize")
    }

    fn check_shape(&self) -> Result<(), GroupError> {
        match self.kind {
            GroupKind::Perm => {
                if self.degree.is_none() || self.q.is_some() || self.n.is_some() {
                    return Err(GroupError::Definition(
                        "kind \"perm\" needs `degree` and no `q`/`n`".into(),
                    ));
                }
            }
            GroupKind::Matfq => {
                if self.degree.is_some() || self.q.is_none() || self.n.is_none() {
                    return Err(GroupError::Definition(
                        "kind \"matfq\" needs `q` and `n` and no `degree`".into(),
                    ));
                }
            }
        }
        if self.generators.is_empty() {
            return Err(GroupError::NoGenerators);
        }
        Ok(())
    }

    /// Decodes one integer array in this definition's ambient structure.
    pub fn decode_element(&self, ints: &[u32]) -> Result<GroupElement, GroupError> {
        self.check_shape()?;
        match self.kind {
            GroupKind::Perm => {
                let degree = self.degree.unwrap_or_default();
                if ints.len() != degree {
                    return Err(GroupError::InvalidElement(format!(
                        "expected {degree} images, got {}",
                        ints.len()
                    )));
                }
                Ok(Permutation::new(ints.to_vec())?.into())
            }
            GroupKind::Matfq => {
                let (q, n) = (self.q.unwrap_or_default(), self.n.unwrap_or_default());
                let field = FiniteField::get(q)?;
                if let Some(bad) = ints.iter().find(|&&x| x >= q) {
                    return Err(GroupError::InvalidElement(format!("{bad} is not in GF({q})")));
                }
                let entries = ints.iter().map(|&x| x as u16).collect();
                Ok(FqMatrix::new(field, n, entries)?.into())
            }
        }
    }

    pub fn generator_elements(&self) -> Result<Vec<GroupElement>, GroupError> {
        self.generators.iter().map(|g| self.decode_element(g)).collect()
    }

    pub fn build(&self, order_cap: usize) -> Result<FiniteGroup, GroupError> {
        let group = FiniteGroup::from_generators(self.generator_elements()?, order_cap)?;
        Ok(match &self.name {
            Some(name) => group.with_name(name.clone()),
            None => group,
        })
    }

    /// Definition reproducing `group` from its generators.
    pub fn from_group(group: &FiniteGroup) -> Self {
        let generators = group.generators().iter().map(GroupElement::to_ints).collect();
        let name = group.name().map(str::to_owned);
        match group.generators()[0] {
            GroupElement::Perm(ref p) => Self {
                name,
                kind: GroupKind::Perm,
                degree: Some(p.degree()),
                q: None,
                n: None,
                generators,
            },
            GroupElement::Matrix(ref m) => Self {
                name,
                kind: GroupKind::Matfq,
                degree: None,
                q: Some(m.q()),
                n: Some(m.dimension()),
                generators,
            },
        }
    }
}
