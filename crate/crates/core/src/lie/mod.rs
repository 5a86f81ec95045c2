//! Exact Lie algebras over the rationals given by structure constants
//! `[X_i, X_j] = sum_k c^k_ij X_k`.

mod io;
pub mod linalg;
pub mod table;

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::modp::{self, MatModP};
use linalg::{q, QMatrix, Q};
pub use table::{simple_type_table, Family, SimpleTypeRecord};

/// Seed of the generic-element schedule used by [`LieAlgebra::rank`].
pub const RANK_SEED: u64 = 0x7a11_c0de;
pub const RANK_SAMPLES: usize = 8;
/// Sample coordinates are drawn from `-RANK_COORD..=RANK_COORD`.
pub const RANK_COORD: i64 = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("expected {expected} structure constants, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("dimension must be positive")]
    EmptyAlgebra,
    #[error("antisymmetry fails: c^{k}_({i},{j}) = {a} but c^{k}_({j},{i}) = {b}")]
    AntisymmetryViolation { i: usize, j: usize, k: usize, a: String, b: String },
    #[error("Jacobi identity fails for (X_{i}, X_{j}, X_{k}): component {l} is {value}")]
    JacobiViolation { i: usize, j: usize, k: usize, l: usize, value: String },
    #[error("algebra is not semisimple (Killing form is degenerate)")]
    NotSemisimple,
    #[error("subalgebra basis vectors are linearly dependent (rank {rank} of {count})")]
    DependentBasis { rank: usize, count: usize },
    #[error("vector has {got} coordinates, algebra has dimension {dim}")]
    WrongLength { dim: usize, got: usize },
    #[error("span is not closed: [Y_{i}, Y_{j}] = {bracket:?} lies outside it")]
    NotClosed { i: usize, j: usize, bracket: Vec<String> },
    #[error("algebra is semisimple but not simple (centroid has dimension {centroid})")]
    NotSimple { centroid: usize },
    #[error("no simple type has dimension {dim} and rank {rank}")]
    NoTableMatch { dim: usize, rank: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("change of basis matrix is singular")]
    SingularChange,
    #[error("structure constant file: {0}")]
    Parse(String),
}

impl LieError {
    pub fn category(&self) -> &'static str {
        match self {
            LieError::Shape { .. } | LieError::WrongLength { .. } => "shape",
            LieError::EmptyAlgebra => "empty-algebra",
            LieError::AntisymmetryViolation { .. } => "antisymmetry-violation",
            LieError::JacobiViolation { .. } => "jacobi-violation",
            LieError::NotSemisimple => "not-semisimple",
            LieError::DependentBasis { .. } => "dependent-basis",
            LieError::NotClosed { .. } => "not-closed",
            LieError::NotSimple { .. } => "not-simple",
            LieError::NoTableMatch { .. } => "no-table-match",
            LieError::InvalidParameter(_) => "invalid-parameter",
            LieError::SingularChange => "singular-change",
            LieError::Parse(_) => "parse",
        }
    }
}

/// Validated structure constants. `c(i, j, k) = c^k_ij`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    c: Vec<Q>,
    /// Nonzero `(k, c^k_ij)` per ordered pair `(i, j)`.
    sparse: Vec<Vec<(usize, Q)>>,
}

impl LieAlgebra {
    /// Checks antisymmetry and the Jacobi identity exactly.
    pub fn validate(dim: usize, c: Vec<Q>) -> Result<Self, LieError> {
        if dim == 0 {
            return Err(LieError::EmptyAlgebra);
        }
        if c.len() != dim * dim * dim {
            return Err(LieError::Shape { expected: dim * dim * dim, got: c.len() });
        }
        let at = |i: usize, j: usize, k: usize| &c[(i * dim + j) * dim + k];
        for i in 0..dim {
            for j in i..dim {
                for k in 0..dim {
                    if !(at(i, j, k) + at(j, i, k)).is_zero() {
                        return Err(LieError::AntisymmetryViolation {
                            i,
                            j,
                            k,
                            a: at(i, j, k).to_string(),
                            b: at(j, i, k).to_string(),
                        });
                    }
                }
            }
        }
        let sparse = (0..dim * dim)
            .map(|ij| {
                (0..dim).filter(|&k| !c[ij * dim + k].is_zero()).map(|k| (k, c[ij * dim + k].clone())).collect()
            })
            .collect();
        let alg = Self { dim, c, sparse };
        // with antisymmetry, repeated indices satisfy Jacobi automatically
        for i in 0..dim {
            for j in i + 1..dim {
                for k in j + 1..dim {
                    let mut sum = vec![Q::zero(); dim];
                    for (a, b, cc) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (m, cm) in &alg.sparse[a * dim + b] {
                            for (l, cl) in &alg.sparse[m * dim + cc] {
                                sum[*l] += cm * cl;
                            }
                        }
                    }
                    if let Some(l) = sum.iter().position(|v| !v.is_zero()) {
                        return Err(LieError::JacobiViolation { i, j, k, l, value: sum[l].to_string() });
                    }
                }
            }
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[Q] {
        &self.c
    }

    /// Bracket of basis elements as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim];
        for (k, c) in &self.sparse[i * self.dim + j] {
            v[*k] = c.clone();
        }
        v
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let f = xi * yj;
                for (k, c) in &self.sparse[i * self.dim + j] {
                    out[*k] += &f * c;
                }
            }
        }
        out
    }

    /// `(ad X_i)_{k,j} = c^k_ij`.
    pub fn adjoint(&self) -> Vec<QMatrix> {
        (0..self.dim).map(|i| self.ad_basis(i)).collect()
    }

    fn ad_basis(&self, i: usize) -> QMatrix {
        let mut m = QMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in &self.sparse[i * self.dim + j] {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    /// `ad x` for a coordinate vector `x`.
    pub fn ad(&self, x: &[Q]) -> QMatrix {
        let mut m = QMatrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for j in 0..self.dim {
                for (k, c) in &self.sparse[i * self.dim + j] {
                    m[(*k, j)] += xi * c;
                }
            }
        }
        m
    }

    /// `B_ij = tr(ad X_i ad X_j)`.
    pub fn killing_form(&self) -> QMatrix {
        let ad = self.adjoint();
        let mut b = QMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let t = ad[i].mul(&ad[j]).trace();
                b[(j, i)] = t.clone();
                b[(i, j)] = t;
            }
        }
        b
    }

    pub fn is_semisimple(&self) -> bool {
        !self.killing_form().determinant().is_zero()
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Minimal nullity of `ad x` over the fixed sample schedule.
    pub fn rank(&self) -> Result<RankReport, LieError> {
        if !self.is_semisimple() {
            return Err(LieError::NotSemisimple);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(RANK_SEED);
        let mut nullities = Vec::with_capacity(RANK_SAMPLES);
        let mut samples = Vec::with_capacity(RANK_SAMPLES);
        for _ in 0..RANK_SAMPLES {
            let x: Vec<i64> = (0..self.dim).map(|_| rng.gen_range(-RANK_COORD..=RANK_COORD)).collect();
            let ad = self.ad(&x.iter().map(|&v| q(v)).collect::<Vec<_>>());
            nullities.push(self.dim - ad.rank());
            samples.push(x);
        }
        let best = (0..RANK_SAMPLES).min_by_key(|&t| nullities[t]).expect("at least one sample");
        let ad = self.ad(&samples[best].iter().map(|&v| q(v)).collect::<Vec<_>>());
        let cp = ad.char_poly();
        let zero_multiplicity = cp.iter().take_while(|c| c.is_zero()).count();
        let rank = nullities[best];
        Ok(RankReport {
            rank,
            certified: zero_multiplicity == rank,
            nullities,
            best_sample: samples[best].clone(),
            zero_multiplicity,
            seed: RANK_SEED,
        })
    }

    /// Checks that `basis` spans a subalgebra and returns the induced constants.
    pub fn verify_subalgebra(&self, basis: &[Vec<Q>]) -> Result<Subalgebra, LieError> {
        let m = basis.len();
        if let Some(v) = basis.iter().find(|v| v.len() != self.dim) {
            return Err(LieError::WrongLength { dim: self.dim, got: v.len() });
        }
        if m == 0 {
            return Err(LieError::DependentBasis { rank: 0, count: 0 });
        }
        let coords = Coordinates::new(basis, self.dim)?;
        let mut gamma = vec![Q::zero(); m * m * m];
        for i in 0..m {
            for j in i + 1..m {
                let w = self.bracket(&basis[i], &basis[j]);
                let g = coords.solve(&w).ok_or_else(|| LieError::NotClosed {
                    i,
                    j,
                    bracket: w.iter().map(ToString::to_string).collect(),
                })?;
                for (v, gv) in g.into_iter().enumerate() {
                    gamma[(j * m + i) * m + v] = -gv.clone();
                    gamma[(i * m + j) * m + v] = gv;
                }
            }
        }
        let induced = LieAlgebra::validate(m, gamma)?;
        Ok(Subalgebra { basis: basis.to_vec(), induced, index: self.dim - m })
    }

    /// Dimension of the centroid, the commutant of `{ad X_i}`.
    pub fn centroid_dimension(&self) -> usize {
        if let Some(d) = self.centroid_dimension_mod_p() {
            // nullity mod p bounds the rational nullity from above, and the identity is always there
            if d == 1 {
                return 1;
            }
        }
        self.centroid_dimension_exact()
    }

    fn centroid_equations(&self, ad: &QMatrix) -> Vec<Vec<(usize, Q)>> {
        // (T ad - ad T)_{a,b} = sum_c T_{a,c} ad_{c,b} - ad_{a,c} T_{c,b}; T_{x,y} is unknown x*n + y
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let mut row: Vec<(usize, Q)> = Vec::new();
                for c in 0..n {
                    if !ad[(c, b)].is_zero() {
                        row.push((a * n + c, ad[(c, b)].clone()));
                    }
                    if !ad[(a, c)].is_zero() {
                        row.push((c * n + b, -ad[(a, c)].clone()));
                    }
                }
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
        rows
    }

    fn centroid_dimension_mod_p(&self) -> Option<usize> {
        const P: u64 = 2_147_483_647;
        let n = self.dim;
        let reduce = |v: &Q| -> Option<u64> {
            let num = (v.numer() % P as i64).to_i64()?;
            let den = (v.denom() % P as i64).to_i64()?;
            let inv = modp::inv_mod(den.rem_euclid(P as i64) as u64, P)?;
            Some(modp::mul_mod(num.rem_euclid(P as i64) as u64, inv, P))
        };
        let mut system = MatModP::zeros(0, n * n);
        for i in 0..n {
            for row in self.centroid_equations(&self.ad_basis(i)) {
                let mut dense = vec![0u64; n * n];
                for (col, v) in row {
                    dense[col] = (dense[col] + reduce(&v)?) % P;
                }
                system.data.extend(dense);
                system.rows += 1;
            }
            let mut work = system.clone();
            let rank = modp::rref(&mut work, P).len();
            system = work;
            system.rows = rank;
            system.data.truncate(rank * n * n);
            if n * n - rank == 1 {
                return Some(1);
            }
        }
        Some(n * n - system.rows)
    }

    fn centroid_dimension_exact(&self) -> usize {
        let n = self.dim;
        let mut rows = Vec::new();
        for i in 0..n {
            for row in self.centroid_equations(&self.ad_basis(i)) {
                let mut dense = vec![Q::zero(); n * n];
                for (col, v) in row {
                    dense[col] += v;
                }
                rows.push(dense);
            }
        }
        if rows.is_empty() {
            return n * n;
        }
        n * n - QMatrix::from_rows(rows).rank()
    }

    /// Semisimple with one-dimensional centroid, i.e. simple over every extension field.
    pub fn is_simple(&self) -> bool {
        self.is_semisimple() && self.centroid_dimension() == 1
    }

    /// Matches (dimension, rank) against the simple-type table.
    pub fn classify_simple(&self) -> Result<Classification, LieError> {
        if !self.is_semisimple() {
            return Err(LieError::NotSemisimple);
        }
        let centroid = self.centroid_dimension();
        if centroid != 1 {
            return Err(LieError::NotSimple { centroid });
        }
        let rank = self.rank()?.rank;
        let mut matches = table::types_with(self.dim as u64, rank as u64);
        match matches.len() {
            0 => Err(LieError::NoTableMatch { dim: self.dim, rank }),
            1 => Ok(Classification::Unique(matches.remove(0))),
            _ => Ok(Classification::Ambiguous(matches)),
        }
    }

    /// Constants in the basis `Y_a = sum_i P_{a,i} X_i`.
    pub fn change_basis(&self, p: &QMatrix) -> Result<LieAlgebra, LieError> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(LieError::Shape { expected: n * n, got: p.rows() * p.cols() });
        }
        let p_inv = p.inverse().ok_or(LieError::SingularChange)?;
        let mut c = vec![Q::zero(); n * n * n];
        for a in 0..n {
            for b in a + 1..n {
                let w = self.bracket(p.row(a), p.row(b));
                // coordinates in the new basis: w^T P^{-1}
                for cc in 0..n {
                    let mut v = Q::zero();
                    for (k, wk) in w.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                        v += wk * &p_inv[(k, cc)];
                    }
                    c[(b * n + a) * n + cc] = -v.clone();
                    c[(a * n + b) * n + cc] = v;
                }
            }
        }
        LieAlgebra::validate(n, c)
    }

    /// Algebra spanned by linearly independent square matrices under the commutator.
    pub fn from_matrix_basis(mats: &[QMatrix]) -> Result<LieAlgebra, LieError> {
        let r = mats.len();
        if r == 0 {
            return Err(LieError::EmptyAlgebra);
        }
        let flat: Vec<Vec<Q>> = mats.iter().map(|m| m.to_rows().into_iter().flatten().collect()).collect();
        let len = flat[0].len();
        if let Some(v) = flat.iter().find(|v| v.len() != len) {
            return Err(LieError::WrongLength { dim: len, got: v.len() });
        }
        let coords = Coordinates::new(&flat, len)?;
        let mut c = vec![Q::zero(); r * r * r];
        for i in 0..r {
            for j in i + 1..r {
                let w: Vec<Q> = mats[i].commutator(&mats[j]).to_rows().into_iter().flatten().collect();
                let g = coords.solve(&w).ok_or_else(|| LieError::NotClosed {
                    i,
                    j,
                    bracket: w.iter().map(ToString::to_string).collect(),
                })?;
                for (k, gk) in g.into_iter().enumerate() {
                    c[(j * r + i) * r + k] = -gk.clone();
                    c[(i * r + j) * r + k] = gk;
                }
            }
        }
        LieAlgebra::validate(r, c)
    }

    /// `sl(n)`: `E_ij` for `i != j` (row-major order), then `E_ii - E_{i+1,i+1}`.
    pub fn sl(n: usize) -> Result<LieAlgebra, LieError> {
        if n < 2 {
            return Err(LieError::InvalidParameter(format!("sl(n) needs n >= 2 (got {n})")));
        }
        let mut mats = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let mut m = QMatrix::zeros(n, n);
                    m[(i, j)] = Q::one();
                    mats.push(m);
                }
            }
        }
        for i in 0..n - 1 {
            let mut m = QMatrix::zeros(n, n);
            m[(i, i)] = Q::one();
            m[(i + 1, i + 1)] = -Q::one();
            mats.push(m);
        }
        Self::from_matrix_basis(&mats)
    }

    /// `sl(2)` in the basis `(h, e, f)`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2() -> LieAlgebra {
        let mut c = vec![Q::zero(); 27];
        let mut set = |i: usize, j: usize, k: usize, v: i64| {
            c[(i * 3 + j) * 3 + k] = q(v);
            c[(j * 3 + i) * 3 + k] = q(-v);
        };
        set(0, 1, 1, 2);
        set(0, 2, 2, -2);
        set(1, 2, 0, 1);
        LieAlgebra::validate(3, c).expect("sl2 constants are valid")
    }

    /// `so(n)`: `E_ij - E_ji` for `i < j`.
    pub fn so(n: usize) -> Result<LieAlgebra, LieError> {
        if n < 2 {
            return Err(LieError::InvalidParameter(format!("so(n) needs n >= 2 (got {n})")));
        }
        let mut mats = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut m = QMatrix::zeros(n, n);
                m[(i, j)] = Q::one();
                m[(j, i)] = -Q::one();
                mats.push(m);
            }
        }
        Self::from_matrix_basis(&mats)
    }

    /// `so(3)` with `c^k_ij = epsilon_ijk`.
    pub fn so3() -> LieAlgebra {
        let mut c = vec![Q::zero(); 27];
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            c[(i * 3 + j) * 3 + k] = q(1);
            c[(j * 3 + i) * 3 + k] = q(-1);
        }
        LieAlgebra::validate(3, c).expect("so3 constants are valid")
    }

    /// `sp(n)`, `n` even: matrices `[[A, B], [C, -A^T]]` with `B`, `C` symmetric.
    pub fn sp(n: usize) -> Result<LieAlgebra, LieError> {
        if n < 2 || n % 2 == 1 {
            return Err(LieError::InvalidParameter(format!("sp(n) needs even n >= 2 (got {n})")));
        }
        let m = n / 2;
        let mut mats = Vec::new();
        for i in 0..m {
            for j in 0..m {
                let mut x = QMatrix::zeros(n, n);
                x[(i, j)] = Q::one();
                x[(m + j, m + i)] = -Q::one();
                mats.push(x);
            }
        }
        for (off_r, off_c) in [(0, m), (m, 0)] {
            for i in 0..m {
                for j in i..m {
                    let mut x = QMatrix::zeros(n, n);
                    x[(off_r + i, off_c + j)] = Q::one();
                    x[(off_r + j, off_c + i)] = Q::one();
                    mats.push(x);
                }
            }
        }
        Self::from_matrix_basis(&mats)
    }

    pub fn abelian(n: usize) -> Result<LieAlgebra, LieError> {
        LieAlgebra::validate(n, vec![Q::zero(); n * n * n])
    }

    /// The nonabelian two-dimensional algebra `[x, y] = y`.
    pub fn affine_line() -> LieAlgebra {
        let mut c = vec![Q::zero(); 8];
        c[(0 * 2 + 1) * 2 + 1] = q(1);
        c[(1 * 2 + 0) * 2 + 1] = q(-1);
        LieAlgebra::validate(2, c).expect("affine line constants are valid")
    }

    /// Named algebras: `sl<n>`, `so<n>`, `sp<n>`, `abelian<n>`, `so3eps`, `aff1`.
    pub fn builtin(name: &str) -> Result<LieAlgebra, LieError> {
        let lower = name.to_ascii_lowercase();
        let num = |prefix: &str| -> Option<usize> { lower.strip_prefix(prefix)?.parse().ok() };
        if lower == "sl2" {
            return Ok(Self::sl2());
        }
        if lower == "so3eps" {
            return Ok(Self::so3());
        }
        if lower == "aff1" {
            return Ok(Self::affine_line());
        }
        if let Some(n) = num("sl") {
            return Self::sl(n);
        }
        if let Some(n) = num("so") {
            return Self::so(n);
        }
        if let Some(n) = num("sp") {
            return Self::sp(n);
        }
        if let Some(n) = num("abelian") {
            return Self::abelian(n);
        }
        Err(LieError::InvalidParameter(format!("unknown built-in algebra `{name}`")))
    }

    pub fn parse(text: &str) -> Result<LieAlgebra, LieError> {
        io::parse(text)
    }

    pub fn to_text(&self) -> String {
        io::to_text(self)
    }
}

/// Solves `w = sum_v g_v B_v` for a fixed independent family `B`.
struct Coordinates {
    pivots: Vec<usize>,
    /// `rref = transform * B`.
    transform: QMatrix,
    basis: Vec<Vec<Q>>,
}

impl Coordinates {
    fn new(basis: &[Vec<Q>], len: usize) -> Result<Self, LieError> {
        let m = basis.len();
        let mut aug = QMatrix::zeros(m, len + m);
        for (i, v) in basis.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                aug[(i, j)] = x.clone();
            }
            aug[(i, len + i)] = Q::one();
        }
        let pivots = aug.rref();
        let rank = pivots.iter().filter(|&&c| c < len).count();
        if rank < m {
            return Err(LieError::DependentBasis { rank, count: m });
        }
        let mut transform = QMatrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                transform[(i, j)] = aug[(i, len + j)].clone();
            }
        }
        Ok(Self { pivots, transform, basis: basis.to_vec() })
    }

    fn solve(&self, w: &[Q]) -> Option<Vec<Q>> {
        let m = self.basis.len();
        let mut g = vec![Q::zero(); m];
        for (t, &pc) in self.pivots.iter().enumerate() {
            if w[pc].is_zero() {
                continue;
            }
            for (v, gv) in g.iter_mut().enumerate() {
                *gv += &w[pc] * &self.transform[(t, v)];
            }
        }
        // membership: recombine and compare
        let mut back = vec![Q::zero(); w.len()];
        for (v, gv) in g.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (slot, b) in back.iter_mut().zip(&self.basis[v]) {
                *slot += gv * b;
            }
        }
        (back == w).then_some(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub rank: usize,
    /// Nullity of `ad x` at each sample.
    pub nullities: Vec<usize>,
    pub best_sample: Vec<i64>,
    /// Multiplicity of 0 as a root of the characteristic polynomial of `ad x` at the best sample.
    pub zero_multiplicity: usize,
    /// Nullity and algebraic multiplicity agree at the best sample.
    pub certified: bool,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subalgebra {
    pub basis: Vec<Vec<Q>>,
    /// Induced constants `gamma^v_ij`.
    pub induced: LieAlgebra,
    /// Codimension `r - m`.
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Classification {
    Unique(SimpleTypeRecord),
    Ambiguous(Vec<SimpleTypeRecord>),
}

impl Classification {
    pub fn candidates(&self) -> Vec<SimpleTypeRecord> {
        match self {
            Classification::Unique(r) => vec![*r],
            Classification::Ambiguous(v) => v.clone(),
        }
    }

    pub fn labels(&self) -> BTreeSet<String> {
        self.candidates().iter().map(SimpleTypeRecord::label).collect()
    }
}

/// Random integer matrix of determinant ±1: a signed permutation times
/// elementary row operations with small multipliers.
pub fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> QMatrix {
    let mut m = QMatrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            m[(0, 0)] = -Q::one();
        }
        return m;
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let t = q(*[-2, -1, 1, 2].get(rng.gen_range(0..4)).expect("in range"));
        for col in 0..n {
            let v = &m[(j, col)] * &t;
            m[(i, col)] += v;
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let rows = perm
        .iter()
        .map(|&p| {
            let neg = rng.gen_bool(0.5);
            m.row(p).iter().map(|x| if neg { -x.clone() } else { x.clone() }).collect()
        })
        .collect();
    let out = QMatrix::from_rows(rows);
    debug_assert!(out.determinant().abs() == Q::one());
    out
}

/// Parses a rational such as `3`, `-2/5`.
pub fn parse_rational(s: &str) -> Result<BigRational, LieError> {
    s.parse::<BigRational>().map_err(|e| LieError::Parse(format!("bad rational `{s}`: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn sl2_killing_form() {
        let b = LieAlgebra::sl2().killing_form();
        assert_eq!(b, QMatrix::from_i64(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]));
    }

    #[test]
    fn perturbation_breaks_jacobi() {
        // [e, f] = h + e: the Jacobi sum for (h, e, f) is -2e
        let mut c = LieAlgebra::sl2().constants().to_vec();
        c[(1 * 3 + 2) * 3 + 1] = q(1);
        c[(2 * 3 + 1) * 3 + 1] = q(-1);
        assert!(matches!(
            LieAlgebra::validate(3, c),
            Err(LieError::JacobiViolation { i: 0, j: 1, k: 2, l: 1, .. })
        ));
    }

    #[test]
    fn antisymmetry_is_checked() {
        let mut c = LieAlgebra::sl2().constants().to_vec();
        c[(1 * 3 + 0) * 3 + 1] = q(0);
        assert!(matches!(
            LieAlgebra::validate(3, c),
            Err(LieError::AntisymmetryViolation { i: 0, j: 1, k: 1, .. })
        ));
        let mut c = vec![q(0); 8];
        c[0] = q(1);
        assert!(matches!(LieAlgebra::validate(2, c), Err(LieError::AntisymmetryViolation { i: 0, j: 0, .. })));
        assert!(matches!(LieAlgebra::validate(2, vec![]), Err(LieError::Shape { .. })));
    }

    #[test]
    fn sp_and_so_dimensions() {
        assert_eq!(LieAlgebra::sp(4).unwrap().dim(), 10);
        assert_eq!(LieAlgebra::so(5).unwrap().dim(), 10);
        assert_eq!(LieAlgebra::sl(3).unwrap().dim(), 8);
        assert!(LieAlgebra::sp(3).is_err());
    }

    #[test]
    fn centroid_detects_direct_sums() {
        // so(4) = sl2 + sl2 is semisimple, not simple
        let so4 = LieAlgebra::so(4).unwrap();
        assert!(so4.is_semisimple());
        assert_eq!(so4.centroid_dimension(), 2);
        assert_eq!(so4.centroid_dimension_exact(), 2);
        assert!(matches!(so4.classify_simple(), Err(LieError::NotSimple { centroid: 2 })));
    }

    #[test]
    fn subalgebra_solve() {
        let sl2 = LieAlgebra::sl2();
        let borel = sl2.verify_subalgebra(&[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        assert_eq!(borel.index, 1);
        assert_eq!(borel.induced.c(0, 1, 1), &q(2));
        assert!(matches!(
            sl2.verify_subalgebra(&[v(&[1, 0, 0]), v(&[2, 0, 0])]),
            Err(LieError::DependentBasis { rank: 1, count: 2 })
        ));
    }

    #[test]
    fn unimodular_changes_are_unimodular() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..6 {
            let p = random_unimodular(n, &mut rng);
            assert_eq!(p.determinant().abs(), Q::one());
        }
    }
}
