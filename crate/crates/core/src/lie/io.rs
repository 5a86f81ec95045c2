//! Structure-constant files.
//!
//! ```text
//! # sl2 in the basis h, e, f
//! dim 3
//! 0 1 1 2      # [X0, X1] = 2 X1
//! 0 2 2 -2
//! 1 2 0 1
//! ```
//!
//! Each entry `i j k v` sets `c^k_ij = v` (`v` an integer or `p/q`); the
//! entry `c^k_ji = -v` is filled in. Omitted entries are zero.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::linalg::Q;
use super::{parse_rational, LieAlgebra, LieError};

pub(super) fn parse(text: &str) -> Result<LieAlgebra, LieError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or_else(|| LieError::Parse("empty file".into()))?;
    let dim_text = header.strip_prefix("dim").map(str::trim).unwrap_or(header);
    let dim: usize = dim_text
        .parse()
        .map_err(|_| LieError::Parse(format!("expected `dim r` header, got `{header}`")))?;
    if dim == 0 {
        return Err(LieError::EmptyAlgebra);
    }
    let mut given: BTreeMap<(usize, usize, usize), Q> = BTreeMap::new();
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(LieError::Parse(format!("line {line_no}: expected `i j k value`")));
        }
        let idx = |s: &str| -> Result<usize, LieError> {
            let v: usize = s.parse().map_err(|_| LieError::Parse(format!("line {line_no}: bad index `{s}`")))?;
            if v >= dim {
                return Err(LieError::Parse(format!("line {line_no}: index {v} out of range 0..{dim}")));
            }
            Ok(v)
        };
        let (i, j, k) = (idx(fields[0])?, idx(fields[1])?, idx(fields[2])?);
        let v = parse_rational(fields[3])?;
        if let Some(old) = given.insert((i, j, k), v.clone()) {
            if old != v {
                return Err(LieError::Parse(format!("line {line_no}: c^{k}_({i},{j}) given twice")));
            }
        }
    }
    let mut c = vec![Q::zero(); dim * dim * dim];
    for (&(i, j, k), v) in &given {
        if i == j && !v.is_zero() {
            return Err(LieError::AntisymmetryViolation { i, j, k, a: v.to_string(), b: v.to_string() });
        }
        let mirror = given.get(&(j, i, k)).cloned().unwrap_or_else(|| -v.clone());
        if mirror != -v.clone() {
            return Err(LieError::AntisymmetryViolation { i, j, k, a: v.to_string(), b: mirror.to_string() });
        }
        c[(i * dim + j) * dim + k] = v.clone();
        c[(j * dim + i) * dim + k] = -v.clone();
    }
    LieAlgebra::validate(dim, c)
}

pub(super) fn to_text(alg: &LieAlgebra) -> String {
    let mut out = format!("dim {}\n", alg.dim());
    for i in 0..alg.dim() {
        for j in i + 1..alg.dim() {
            for k in 0..alg.dim() {
                let v = alg.c(i, j, k);
                if !v.is_zero() {
                    out.push_str(&format!("{i} {j} {k} {v}\n"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_file() {
        let alg = parse("# sl2\ndim 3\n0 1 1 2\n0 2 2 -2\n1 2 0 1\n").unwrap();
        assert_eq!(alg, LieAlgebra::sl2());
        assert_eq!(parse(&alg.to_text()).unwrap(), alg);
    }

    #[test]
    fn explicit_mirror_must_agree() {
        assert!(parse("3\n0 1 1 2\n1 0 1 -2\n0 2 2 -2\n1 2 0 1\n").is_ok());
        assert!(matches!(
            parse("3\n0 1 1 2\n1 0 1 2\n"),
            Err(LieError::AntisymmetryViolation { .. })
        ));
        assert!(matches!(parse("3\n0 0 1 1\n"), Err(LieError::AntisymmetryViolation { .. })));
        assert!(matches!(parse("3\n0 1 1 2\n0 1 1 3\n"), Err(LieError::Parse(_))));
        assert!(matches!(parse("3\n0 1 5 2\n"), Err(LieError::Parse(_))));
        assert!(matches!(parse("2\n0 1 1 1/2\n"), Ok(_)));
    }
}
