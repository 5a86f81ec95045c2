//! Simple Lie types with the dimension `r` of the group and the smallest
//! dimension `s` of a homogeneous space on which it acts.
//!
//! Classical families are parameterized by the number of variables `n` of the
//! defining linear action: `A` is `SL(n)`, `B`/`D` are `SO(n)` for odd/even
//! `n`, `C` is `Sp(n)` with `n` even.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::LieError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    pub const ALL: [Family; 9] =
        [Family::A, Family::B, Family::C, Family::D, Family::E6, Family::E7, Family::E8, Family::F4, Family::G2];

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Family {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, LieError> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "A" | "SL" | "UNIMODULAR" => Family::A,
            "B" => Family::B,
            "C" | "SP" | "SYMPLECTIC" => Family::C,
            "D" => Family::D,
            "E6" => Family::E6,
            "E7" => Family::E7,
            "E8" => Family::E8,
            "F4" => Family::F4,
            "G2" => Family::G2,
            _ => return Err(LieError::InvalidParameter(format!("unknown family `{s}`"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleTypeRecord {
    pub family: Family,
    /// Number of variables of the defining action (classical families only).
    pub n: Option<u64>,
    /// Rank of the Lie algebra.
    pub lie_rank: u64,
    pub r: u64,
    pub s: u64,
}

impl SimpleTypeRecord {
    /// Cartan label such as `A_4` or `E8`.
    pub fn label(&self) -> String {
        if self.family.is_classical() {
            format!("{}_{}", self.family, self.lie_rank)
        } else {
            self.family.to_string()
        }
    }
}

impl fmt::Display for SimpleTypeRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n {
            Some(n) => write!(f, "{} (n = {n}): r = {}, s = {}", self.label(), self.r, self.s),
            None => write!(f, "{}: r = {}, s = {}", self.label(), self.r, self.s),
        }
    }
}

fn invalid(msg: String) -> LieError {
    LieError::InvalidParameter(msg)
}

/// `(r, s)` for a family and, for classical families, the number of variables `n`.
pub fn simple_type_table(family: Family, n: Option<u64>) -> Result<SimpleTypeRecord, LieError> {
    let exceptional = |r, s, lie_rank| {
        if let Some(n) = n {
            return Err(invalid(format!("{family} takes no parameter (got {n})")));
        }
        Ok(SimpleTypeRecord { family, n: None, lie_rank, r, s })
    };
    match family {
        Family::E6 => return exceptional(78, 16, 6),
        Family::E7 => return exceptional(133, 27, 7),
        Family::E8 => return exceptional(248, 57, 8),
        Family::F4 => return exceptional(52, 15, 4),
        Family::G2 => return exceptional(14, 5, 2),
        _ => {}
    }
    let n = n.ok_or_else(|| invalid(format!("{family} needs the number of variables n")))?;
    let (r, s, lie_rank) = match family {
        Family::A if n >= 2 => (n * n - 1, n - 1, n - 1),
        Family::B if n >= 3 && n % 2 == 1 => (n * (n - 1) / 2, n - 1, (n - 1) / 2),
        Family::C if n >= 2 && n % 2 == 0 => (n * (n + 1) / 2, n, n / 2),
        Family::D if n >= 6 && n % 2 == 0 => (n * (n - 1) / 2, n - 1, n / 2),
        Family::A => return Err(invalid(format!("A needs n >= 2 (got {n})"))),
        Family::B => return Err(invalid(format!("B needs odd n >= 3 (got {n})"))),
        Family::C => return Err(invalid(format!("symplectic groups need even n >= 2 (got {n})"))),
        _ => return Err(invalid(format!("D needs even n >= 6 (got {n})"))),
    };
    Ok(SimpleTypeRecord { family, n: Some(n), lie_rank, r, s })
}

/// Orthogonal group in `n` variables: `B` for odd `n`, `D` for even `n`.
pub fn orthogonal(n: u64) -> Result<SimpleTypeRecord, LieError> {
    simple_type_table(if n % 2 == 1 { Family::B } else { Family::D }, Some(n))
}

/// Record for a Cartan label with Lie rank `l` (`A_l`, `B_l`, ...).
pub fn from_lie_rank(family: Family, l: u64) -> Result<SimpleTypeRecord, LieError> {
    let rec = match family {
        Family::A => simple_type_table(family, Some(l + 1))?,
        Family::B => simple_type_table(family, Some(2 * l + 1))?,
        Family::C | Family::D => simple_type_table(family, Some(2 * l))?,
        _ => simple_type_table(family, None)?,
    };
    if rec.lie_rank != l {
        return Err(invalid(format!("{family} does not have rank {l}")));
    }
    Ok(rec)
}

/// Every simple type with the given dimension and rank, one representative per
/// isomorphism class (`A_l` for `l >= 1`, `B_l` and `C_l` for `l >= 2`, `D_l` for `l >= 4`).
pub fn types_with(dim: u64, lie_rank: u64) -> Vec<SimpleTypeRecord> {
    let l = lie_rank;
    let mut out = Vec::new();
    let mut push = |family, min_rank| {
        if l >= min_rank {
            if let Ok(rec) = from_lie_rank(family, l) {
                if rec.r == dim {
                    out.push(rec);
                }
            }
        }
    };
    push(Family::A, 1);
    push(Family::B, 2);
    push(Family::C, 2);
    push(Family::D, 4);
    for f in [Family::E6, Family::E7, Family::E8, Family::F4, Family::G2] {
        push(f, 0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(simple_type_table(Family::C, Some(5)).is_err());
        assert!(simple_type_table(Family::B, Some(4)).is_err());
        assert!(simple_type_table(Family::A, Some(1)).is_err());
        assert!(simple_type_table(Family::A, None).is_err());
        assert!(simple_type_table(Family::G2, Some(3)).is_err());
    }

    #[test]
    fn coincidences_are_reported_together() {
        let labels: Vec<String> = types_with(10, 2).iter().map(SimpleTypeRecord::label).collect();
        assert_eq!(labels, ["B_2", "C_2"]);
        let labels: Vec<String> = types_with(78, 6).iter().map(SimpleTypeRecord::label).collect();
        assert_eq!(labels, ["B_6", "C_6", "E6"]);
        assert_eq!(types_with(3, 1).len(), 1);
        assert!(types_with(7, 2).is_empty());
    }
}
