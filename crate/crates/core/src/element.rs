//! Group elements: permutations and invertible matrices over finite fields.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::GroupError;
use crate::field::FiniteField;

/// A permutation of `0..degree`, stored as its image array.
///
/// Products compose right to left: `(a * b)(x) = a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self, GroupError> {
        let n = images.len();
        if n == 0 {
            return Err(GroupError::InvalidElement("permutation of degree 0".into()));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(GroupError::InvalidElement(format!(
                    "image array {images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Self { images: images.into_boxed_slice() })
    }

    pub fn identity(degree: usize) -> Self {
        Self { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self, GroupError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (pos, &a) in cycle.iter().enumerate() {
                let b = cycle[(pos + 1) % cycle.len()];
                if a as usize >= degree || touched[a as usize] {
                    return Err(GroupError::InvalidElement(format!("bad cycle {cycle:?}")));
                }
                touched[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Self { images: inv.into_boxed_slice() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start] as usize;
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x] as usize;
            }
            let parts: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// An invertible `n x n` matrix over GF(q), row-major.
#[derive(Clone)]
pub struct FqMatrix {
    field: Arc<FiniteField>,
    n: usize,
    entries: Box<[u16]>,
}

impl PartialEq for FqMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.q() == other.q() && self.entries == other.entries
    }
}

impl Eq for FqMatrix {}

impl Hash for FqMatrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.q().hash(state);
        self.n.hash(state);
        self.entries.hash(state);
    }
}

impl PartialOrd for FqMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FqMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.q(), self.n, &self.entries).cmp(&(other.q(), other.n, &other.entries))
    }
}

impl FqMatrix {
    /// Validates entries and invertibility.
    pub fn new(field: Arc<FiniteField>, n: usize, entries: Vec<u16>) -> Result<Self, GroupError> {
        if n == 0 || entries.len() != n * n {
            return Err(GroupError::InvalidElement(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|&&e| e as u32 >= field.order()) {
            return Err(GroupError::InvalidElement(format!(
                "entry {bad} is not an element of GF({})",
                field.order()
            )));
        }
        let m = Self { field, n, entries: entries.into_boxed_slice() };
        if m.determinant() == 0 {
            return Err(GroupError::InvalidElement("matrix is singular".into()));
        }
        Ok(m)
    }

    pub fn identity(field: Arc<FiniteField>, n: usize) -> Self {
        let mut entries = vec![0u16; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self { field, n, entries: entries.into_boxed_slice() }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[u16] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u16 {
        self.entries[row * self.n + col]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (n, f) = (self.n, &self.field);
        let mut out = vec![0u16; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b != 0 {
                        out[i * n + j] = f.add(out[i * n + j], f.mul(a, b));
                    }
                }
            }
        }
        Self { field: self.field.clone(), n, entries: out.into_boxed_slice() }
    }

    fn row_reduce(&self) -> (u16, Option<Vec<u16>>) {
        // Gauss-Jordan on [A | I]; returns (det, inverse)
        let (n, f) = (self.n, &self.field);
        let w = 2 * n;
        let mut a = vec![0u16; n * w];
        for i in 0..n {
            for j in 0..n {
                a[i * w + j] = self.get(i, j);
            }
            a[i * w + n + i] = 1;
        }
        let mut det = 1u16;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * w + col] != 0) else {
                return (0, None);
            };
            if piv != col {
                for j in 0..w {
                    a.swap(piv * w + j, col * w + j);
                }
                det = f.neg(det);
            }
            let pv = a[col * w + col];
            det = f.mul(det, pv);
            let pinv = f.inv(pv).expect("nonzero pivot");
            for j in 0..w {
                a[col * w + j] = f.mul(a[col * w + j], pinv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * w + col];
                if factor == 0 {
                    continue;
                }
                for j in 0..w {
                    let t = f.mul(factor, a[col * w + j]);
                    a[r * w + j] = f.sub(a[r * w + j], t);
                }
            }
        }
        let inv = (0..n).flat_map(|i| a[i * w + n..i * w + w].to_vec()).collect();
        (det, Some(inv))
    }

    pub fn determinant(&self) -> u16 {
        self.row_reduce().0
    }

    pub fn inverse(&self) -> Self {
        let inv = self.row_reduce().1.expect("stored matrices are invertible");
        Self { field: self.field.clone(), n: self.n, entries: inv.into_boxed_slice() }
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == u16::from(i == j)))
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[u16]) -> Vec<u16> {
        let f = &self.field;
        (0..self.n)
            .map(|i| (0..self.n).fold(0, |acc, j| f.add(acc, f.mul(self.get(i, j), v[j]))))
            .collect()
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .chunks(self.n)
            .map(|r| format!("{r:?}"))
            .collect();
        write!(f, "GF({})[{}]", self.q(), rows.join(","))
    }
}

/// Kind of ambient structure a group lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ambient {
    Perm { degree: usize },
    Matrix { q: u32, n: usize },
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Perm { degree } => write!(f, "permutations of degree {degree}"),
            Ambient::Matrix { q, n } => write!(f, "{n}x{n} matrices over GF({q})"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Perm(Permutation),
    Matrix(FqMatrix),
}

impl From<Permutation> for GroupElement {
    fn from(p: Permutation) -> Self {
        GroupElement::Perm(p)
    }
}

impl From<FqMatrix> for GroupElement {
    fn from(m: FqMatrix) -> Self {
        GroupElement::Matrix(m)
    }
}

impl GroupElement {
    pub fn ambient(&self) -> Ambient {
        match self {
            GroupElement::Perm(p) => Ambient::Perm { degree: p.degree() },
            GroupElement::Matrix(m) => Ambient::Matrix { q: m.q(), n: m.dimension() },
        }
    }

    pub fn identity_like(&self) -> Self {
        match self {
            GroupElement::Perm(p) => Permutation::identity(p.degree()).into(),
            GroupElement::Matrix(m) => FqMatrix::identity(m.field().clone(), m.dimension()).into(),
        }
    }

    /// Product; both operands must share an ambient structure.
    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => {
                debug_assert_eq!(a.degree(), b.degree());
                a.compose(b).into()
            }
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => {
                debug_assert_eq!((a.q(), a.dimension()), (b.q(), b.dimension()));
                a.mul(b).into()
            }
            _ => panic!("cannot multiply a permutation with a matrix"),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, GroupError> {
        if self.ambient() != other.ambient() {
            return Err(GroupError::IncompatibleGenerators(format!(
                "{} vs {}",
                self.ambient(),
                other.ambient()
            )));
        }
        Ok(self.mul(other))
    }

    pub fn inverse(&self) -> Self {
        match self {
            GroupElement::Perm(p) => p.inverse().into(),
            GroupElement::Matrix(m) => m.inverse().into(),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Perm(p) => p.is_identity(),
            GroupElement::Matrix(m) => m.is_identity(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut result = self.identity_like();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        result
    }

    /// `self * other * self^-1`.
    pub fn conjugate_by(&self, g: &Self, g_inv: &Self) -> Self {
        g.mul(self).mul(g_inv)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).mul(&self.inverse()).mul(&other.inverse())
    }

    pub fn order(&self) -> u64 {
        let mut x = self.clone();
        let mut n = 1;
        while !x.is_identity() {
            x = x.mul(self);
            n += 1;
        }
        n
    }

    /// Flat integer encoding used by group definition files.
    pub fn to_ints(&self) -> Vec<u32> {
        match self {
            GroupElement::Perm(p) => p.images().to_vec(),
            GroupElement::Matrix(m) => m.entries().iter().map(|&e| e as u32).collect(),
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => p.fmt(f),
            GroupElement::Matrix(m) => m.fmt(f),
        }
    }
}
