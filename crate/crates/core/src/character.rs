//! Exact ordinary character tables.
//!
//! The class algebra is split modulo a prime `p ≡ 1 (mod exponent)`: the
//! central characters are the common eigenvectors of the class multiplication
//! matrices. Each character value is then lifted to an exact sum of roots of
//! unity from the eigenvalue multiplicities of `ρ(g)`, recovered through the
//! power maps. The lifted table is re-verified by exact row and column
//! orthogonality before it is returned, so nothing downstream rests on the
//! modular stage being right.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclotomic::{Cyclotomic, CyclotomicField, Overflow, RootSum};
use crate::group::FiniteGroup;
use crate::modp::{self, MatModP};

/// Seed of the root-finding schedule. The table itself does not depend on it.
pub const TABLE_SEED: u64 = 0x0d1c_5eed;

/// Largest modular prime tried before giving up.
pub const PRIME_SEARCH_LIMIT: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("no prime p ≡ 1 (mod {exponent}) above {lower} and below {PRIME_SEARCH_LIMIT}")]
    NoSuitablePrime { exponent: u64, lower: u64 },
    #[error("lifting modular values failed: {0}")]
    LiftFailure(String),
    #[error("computed table failed verification: {0}")]
    VerificationFailed(String),
    #[error("irreducible index {index} out of range (table has {count})")]
    InvalidIndex { index: usize, count: usize },
    #[error("character {0} is not faithful")]
    NotFaithful(usize),
    #[error("group has no faithful irreducible character")]
    NoFaithfulIrreducible,
    #[error("integer overflow in exact character arithmetic")]
    Overflow,
}

impl CharError {
    pub fn category(&self) -> &'static str {
        match self {
            CharError::NoSuitablePrime { .. } => "no-suitable-prime",
            CharError::LiftFailure(_) => "numeric-lift-failure",
            CharError::VerificationFailed(_) => "verification-failed",
            CharError::InvalidIndex { .. } => "invalid-index",
            CharError::NotFaithful(_) => "not-faithful",
            CharError::NoFaithfulIrreducible => "no-faithful-irreducible",
            CharError::Overflow => "overflow",
        }
    }
}

impl From<Overflow> for CharError {
    fn from(_: Overflow) -> Self {
        CharError::Overflow
    }
}

/// Frobenius–Schur type of an irreducible character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RealityType {
    Real,
    Complex,
    Quaternionic,
}

impl RealityType {
    pub fn from_indicator(ind: i8) -> Option<Self> {
        match ind {
            1 => Some(RealityType::Real),
            0 => Some(RealityType::Complex),
            -1 => Some(RealityType::Quaternionic),
            _ => None,
        }
    }

    pub fn indicator(self) -> i8 {
        match self {
            RealityType::Real => 1,
            RealityType::Complex => 0,
            RealityType::Quaternionic => -1,
        }
    }
}

impl fmt::Display for RealityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RealityType::Real => "real",
            RealityType::Complex => "complex",
            RealityType::Quaternionic => "quaternionic",
        })
    }
}

/// Smallest faithful irreducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaithfulChoice {
    pub degree: u64,
    pub index: usize,
    pub reality: RealityType,
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    group_name: Option<String>,
    order: u64,
    exponent: u32,
    prime: u64,
    field: Arc<CyclotomicField>,
    class_sizes: Vec<u64>,
    class_orders: Vec<u64>,
    class_representatives: Vec<Vec<u32>>,
    inverse_class: Vec<usize>,
    square_class: Vec<usize>,
    degrees: Vec<u64>,
    values: Vec<Vec<Cyclotomic>>,
    sums: Vec<Vec<RootSum>>,
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2 sqrt(|G|) * max class size`.
pub fn modular_prime(exponent: u64, order: u64, max_class: u64) -> Result<u64, CharError> {
    let root = (order as f64).sqrt().ceil() as u64;
    let lower = 2 * root * max_class;
    let mut p = lower - lower % exponent + 1;
    while p <= lower {
        p += exponent;
    }
    while p < PRIME_SEARCH_LIMIT {
        if modp::is_prime(p) {
            return Ok(p);
        }
        p += exponent;
    }
    Err(CharError::NoSuitablePrime { exponent, lower })
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Class multiplication coefficients `a[j][k][l] = #{(x, y) ∈ C_j × C_k : x y = g_l}`.
pub fn class_structure_constants(g: &FiniteGroup) -> Vec<Vec<Vec<u64>>> {
    let classes = g.conjugacy_classes();
    let k = classes.len();
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (j, cj) in classes.iter().enumerate() {
        let inverses: Vec<_> = cj.members().iter().map(|&m| g.elements()[m].inverse()).collect();
        for (l, cl) in classes.iter().enumerate() {
            let gl = cl.representative();
            for xi in &inverses {
                let y = xi.mul(gl);
                let c = g.class_of(&y).expect("closed under products");
                a[j][c][l] += 1;
            }
        }
    }
    a
}

/// Common eigenvectors of the class matrices mod p, normalized at the identity class.
fn central_characters_mod_p(
    constants: &[Vec<Vec<u64>>],
    p: u64,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Vec<u64>>, CharError> {
    let k = constants.len();
    let mut identity = MatModP::zeros(k, k);
    for i in 0..k {
        identity.set(i, i, 1);
    }
    let mut spaces = vec![identity];
    for a in constants.iter().skip(1) {
        if spaces.iter().all(|s| s.rows == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.rows == 1 {
                next.push(space);
                continue;
            }
            next.extend(split_space(&space, a, p, rng)?);
        }
        spaces = next;
    }
    if let Some(s) = spaces.iter().find(|s| s.rows != 1) {
        return Err(CharError::LiftFailure(format!(
            "class algebra left a common eigenspace of dimension {}",
            s.rows
        )));
    }
    spaces
        .into_iter()
        .map(|s| {
            let v = s.row(0).to_vec();
            let inv = modp::inv_mod(v[0], p).ok_or_else(|| {
                CharError::LiftFailure("central character vanishes at the identity".into())
            })?;
            Ok(v.iter().map(|&x| modp::mul_mod(x, inv, p)).collect())
        })
        .collect()
}

/// Splits an invariant subspace (rows in reduced echelon form) into eigenspaces of `a`.
fn split_space(
    space: &MatModP,
    a: &[Vec<u64>],
    p: u64,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<MatModP>, CharError> {
    let (d, k) = (space.rows, space.cols);
    let pivots: Vec<usize> =
        (0..d).map(|i| space.row(i).iter().position(|&x| x != 0).expect("nonzero row")).collect();
    // images of basis vectors under a, in pivot coordinates
    let mut restricted = MatModP::zeros(d, d);
    for i in 0..d {
        let w = space.row(i);
        for (t, &pc) in pivots.iter().enumerate() {
            let v = a[pc]
                .iter()
                .zip(w)
                .fold(0u64, |acc, (&x, &y)| (acc + modp::mul_mod(x % p, y, p)) % p);
            restricted.set(t, i, v);
        }
    }
    let cp = modp::char_poly(&restricted, p);
    let eigenvalues = modp::roots(&cp, p, rng);
    if eigenvalues.len() == 1 {
        return Ok(vec![space.clone()]);
    }
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in eigenvalues {
        let mut shifted = restricted.clone();
        for i in 0..d {
            let v = (shifted.get(i, i) + p - lambda) % p;
            shifted.set(i, i, v);
        }
        let coords = modp::null_space(&shifted, p);
        let mut sub = MatModP::zeros(coords.len(), k);
        for (r, c) in coords.iter().enumerate() {
            for (i, &ci) in c.iter().enumerate() {
                if ci == 0 {
                    continue;
                }
                for col in 0..k {
                    let v = (sub.get(r, col) + modp::mul_mod(ci, space.get(i, col), p)) % p;
                    sub.set(r, col, v);
                }
            }
        }
        modp::rref(&mut sub, p);
        total += sub.rows;
        out.push(sub);
    }
    if total != d {
        return Err(CharError::LiftFailure(format!(
            "class matrix not diagonalizable mod {p} (eigenspaces span {total} of {d})"
        )));
    }
    Ok(out)
}

impl CharacterTable {
    /// Computes the full table of irreducible characters of `g`.
    pub fn compute(g: &FiniteGroup) -> Result<Self, CharError> {
        let classes = g.conjugacy_classes();
        let k = classes.len();
        let order = g.order() as u64;
        let exponent = g.exponent();
        let max_class = classes.iter().map(|c| c.size() as u64).max().unwrap_or(1);
        let p = modular_prime(exponent, order, max_class)?;
        let e = exponent as u32;
        let field = CyclotomicField::get(e);
        let mut rng = ChaCha8Rng::seed_from_u64(TABLE_SEED);

        let constants = class_structure_constants(g);
        let omegas = central_characters_mod_p(&constants, p, &mut rng)?;
        if omegas.len() != k {
            return Err(CharError::LiftFailure(format!(
                "found {} central characters for {k} classes",
                omegas.len()
            )));
        }

        let class_sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64).collect();
        let class_orders: Vec<u64> = classes.iter().map(|c| c.element_order()).collect();
        let inverse_class: Vec<usize> = (0..k).map(|c| g.inverse_class(c)).collect();
        let square_class: Vec<usize> = (0..k).map(|c| g.power_class(c, 2)).collect();
        let power_classes: Vec<Vec<usize>> = (0..k)
            .map(|c| (0..class_orders[c]).map(|t| g.power_class(c, t)).collect())
            .collect();

        let z = modp::pow_mod(modp::primitive_root(p), (p - 1) / exponent, p);
        let max_degree = isqrt(order);
        let mut rows: Vec<(u64, Vec<Cyclotomic>, Vec<RootSum>)> = Vec::with_capacity(k);
        for omega in &omegas {
            // chi(1)^2 = |G| / sum_l omega_l omega_{l^-1} / |C_l|
            let s = (0..k).fold(0u64, |acc, l| {
                let t = modp::mul_mod(omega[l], omega[inverse_class[l]], p);
                let inv = modp::inv_mod(class_sizes[l], p).expect("p exceeds class sizes");
                (acc + modp::mul_mod(t, inv, p)) % p
            });
            let s_inv = modp::inv_mod(s, p)
                .ok_or_else(|| CharError::LiftFailure("degenerate central character".into()))?;
            let deg_sq = modp::mul_mod(order % p, s_inv, p);
            let degree = (1..=max_degree)
                .find(|&d| d * d % p == deg_sq)
                .ok_or_else(|| CharError::LiftFailure(format!("{deg_sq} is not a small square mod {p}")))?;
            let chi_mod: Vec<u64> = (0..k)
                .map(|l| {
                    let inv = modp::inv_mod(class_sizes[l], p).expect("p exceeds class sizes");
                    modp::mul_mod(modp::mul_mod(omega[l], degree, p), inv, p)
                })
                .collect();

            let mut sums = Vec::with_capacity(k);
            let mut values = Vec::with_capacity(k);
            for l in 0..k {
                let o = class_orders[l];
                let step = exponent / o;
                let zo = modp::pow_mod(z, step, p);
                let o_inv = modp::inv_mod(o, p).expect("p exceeds element orders");
                let mut total = 0u64;
                let mut terms = Vec::new();
                for kk in 0..o {
                    let mut m = 0u64;
                    for t in 0..o {
                        let root = modp::pow_mod(zo, (o - kk * t % o) % o, p);
                        m = (m + modp::mul_mod(chi_mod[power_classes[l][t as usize]], root, p)) % p;
                    }
                    let m = modp::mul_mod(m, o_inv, p);
                    if m > degree {
                        return Err(CharError::LiftFailure(format!(
                            "eigenvalue multiplicity {m} exceeds degree {degree} on class {l}"
                        )));
                    }
                    total += m;
                    if m > 0 {
                        terms.push(((kk * step) as u32, m as i128));
                    }
                }
                if total != degree {
                    return Err(CharError::LiftFailure(format!(
                        "multiplicities on class {l} sum to {total}, expected {degree}"
                    )));
                }
                let sum = RootSum::from_terms(e, terms);
                values.push(sum.reduce(&field));
                sums.push(sum);
            }
            rows.push((degree, values, sums));
        }
        // ascending degree, trivial character first, then lexicographic values
        let is_trivial = |r: &(u64, Vec<Cyclotomic>, Vec<RootSum>)| r.2.iter().all(|v| v.terms() == [(0, 1)]);
        rows.sort_by(|a, b| (a.0, !is_trivial(a), &a.1).cmp(&(b.0, !is_trivial(b), &b.1)));

        let table = CharacterTable {
            group_name: g.name().map(str::to_owned),
            order,
            exponent: e,
            prime: p,
            field,
            class_sizes,
            class_orders,
            class_representatives: classes.iter().map(|c| c.representative().to_ints()).collect(),
            inverse_class,
            square_class,
            degrees: rows.iter().map(|r| r.0).collect(),
            values: rows.iter().map(|r| r.1.clone()).collect(),
            sums: rows.into_iter().map(|r| r.2).collect(),
        };
        table.verify()?;
        Ok(table)
    }

    /// Exact orthogonality of rows and columns, sum of squared degrees, divisibility.
    pub fn verify(&self) -> Result<(), CharError> {
        let k = self.num_classes();
        if self.degrees.len() != k {
            return Err(CharError::VerificationFailed(format!(
                "{} irreducibles for {k} classes",
                self.degrees.len()
            )));
        }
        let sq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sq != self.order {
            return Err(CharError::VerificationFailed(format!(
                "sum of squared degrees {sq} != |G| = {}",
                self.order
            )));
        }
        if let Some(d) = self.degrees.iter().find(|&&d| self.order % d != 0) {
            return Err(CharError::VerificationFailed(format!("degree {d} does not divide |G|")));
        }
        for i in 0..k {
            if self.values[i][0] != Cyclotomic::from_integer(&self.field, self.degrees[i] as i64) {
                return Err(CharError::VerificationFailed(format!(
                    "first column of row {i} differs from its degree"
                )));
            }
            for j in i..k {
                let expected = if i == j { self.order as i128 } else { 0 };
                let got = self.weighted_pairing(&self.sums[i], &self.sums[j])?;
                if got != RootSum::integer(expected).reduce(&self.field) {
                    return Err(CharError::VerificationFailed(format!(
                        "rows {i} and {j} are not orthonormal"
                    )));
                }
            }
        }
        for a in 0..k {
            for b in a..k {
                let mut acc = RootSum::zero();
                for row in &self.sums {
                    acc = acc.checked_add(&row[a].checked_mul(&row[b].conj(self.exponent), self.exponent)?)?;
                }
                let expected = if a == b { (self.order / self.class_sizes[a]) as i128 } else { 0 };
                if acc.reduce(&self.field) != RootSum::integer(expected).reduce(&self.field) {
                    return Err(CharError::VerificationFailed(format!(
                        "columns {a} and {b} are not orthogonal"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `sum_C |C| a(C) conj(b(C))`, reduced.
    fn weighted_pairing(&self, a: &[RootSum], b: &[RootSum]) -> Result<Cyclotomic, CharError> {
        let mut acc = RootSum::zero();
        for l in 0..self.num_classes() {
            let term = a[l].checked_mul(&b[l].conj(self.exponent), self.exponent)?;
            acc = acc.checked_add(&term.checked_scale(self.class_sizes[l] as i128)?)?;
        }
        Ok(acc.reduce(&self.field))
    }

    fn check_index(&self, i: usize) -> Result<(), CharError> {
        if i < self.degrees.len() {
            Ok(())
        } else {
            Err(CharError::InvalidIndex { index: i, count: self.degrees.len() })
        }
    }

    pub fn group_name(&self) -> Option<&str> {
        self.group_name.as_deref()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// The prime used for the modular splitting stage.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn class_orders(&self) -> &[u64] {
        &self.class_orders
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn values(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    pub fn value(&self, i: usize, class: usize) -> &Cyclotomic {
        &self.values[i][class]
    }

    pub fn root_sums(&self, i: usize) -> &[RootSum] {
        &self.sums[i]
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class]
    }

    pub fn square_class(&self, class: usize) -> usize {
        self.square_class[class]
    }

    /// `(1/|G|) sum_C |C| chi_i(C) conj(chi_j(C))`.
    pub fn inner_product(&self, i: usize, j: usize) -> Result<BigRational, CharError> {
        self.check_index(i)?;
        self.check_index(j)?;
        let v = self.weighted_pairing(&self.sums[i], &self.sums[j])?;
        let r = v.to_rational().ok_or_else(|| {
            CharError::VerificationFailed("inner product of characters is not rational".into())
        })?;
        Ok(r / BigRational::from_integer(BigInt::from(self.order)))
    }

    /// Inner product of two arbitrary class functions given by exact values.
    pub fn inner_product_class_functions(
        &self,
        a: &[Cyclotomic],
        b: &[Cyclotomic],
    ) -> Option<Cyclotomic> {
        if a.len() != self.num_classes() || b.len() != self.num_classes() {
            return None;
        }
        let mut acc = Cyclotomic::zero(&self.field);
        for l in 0..self.num_classes() {
            let t = &a[l] * &b[l].conj();
            acc = &acc + &t.scale(&BigRational::from_integer(self.class_sizes[l].into()));
        }
        Some(acc.scale(&(BigRational::from_integer(1.into()) / BigRational::from_integer(self.order.into()))))
    }

    /// Frobenius–Schur indicator `(1/|G|) sum_g chi(g^2)`, via the square map on classes.
    pub fn fs_indicator(&self, i: usize) -> Result<RealityType, CharError> {
        self.check_index(i)?;
        let mut acc = RootSum::zero();
        for l in 0..self.num_classes() {
            let term = self.sums[i][self.square_class[l]].checked_scale(self.class_sizes[l] as i128)?;
            acc = acc.checked_add(&term)?;
        }
        let v = acc.reduce(&self.field).to_rational().ok_or_else(|| {
            CharError::VerificationFailed(format!("indicator of {i} is not rational"))
        })?;
        let ind = v / BigRational::from_integer(BigInt::from(self.order));
        ind.to_integer()
            .to_i8()
            .filter(|_| ind.is_integer())
            .and_then(RealityType::from_indicator)
            .ok_or_else(|| CharError::VerificationFailed(format!("indicator of {i} is {ind}")))
    }

    /// Classes on which `chi_i` takes the value `chi_i(1)`.
    pub fn character_kernel(&self, i: usize) -> Result<BTreeSet<usize>, CharError> {
        self.check_index(i)?;
        let deg = &self.values[i][0];
        Ok((0..self.num_classes()).filter(|&l| &self.values[i][l] == deg).collect())
    }

    pub fn is_faithful(&self, i: usize) -> Result<bool, CharError> {
        Ok(self.character_kernel(i)?.len() == 1)
    }

    /// Smallest faithful degree; ties prefer real, then complex, then the lowest index.
    pub fn min_faithful_degree(&self) -> Result<FaithfulChoice, CharError> {
        let mut best: Option<FaithfulChoice> = None;
        for i in 0..self.degrees.len() {
            if !self.is_faithful(i)? {
                continue;
            }
            let cand = FaithfulChoice { degree: self.degrees[i], index: i, reality: self.fs_indicator(i)? };
            let better = match best {
                None => true,
                Some(b) => (cand.degree, cand.reality) < (b.degree, b.reality),
            };
            if better {
                best = Some(cand);
            }
        }
        best.ok_or(CharError::NoFaithfulIrreducible)
    }

    /// Least `m >= 1` with `<chi_i^m, chi_j> > 0`, for faithful `chi_i`.
    pub fn tensor_power_containment(&self, i: usize, j: usize) -> Result<u32, CharError> {
        self.check_index(j)?;
        if !self.is_faithful(i)? {
            return Err(CharError::NotFaithful(i));
        }
        let distinct: BTreeSet<&Cyclotomic> = self.values[i].iter().collect();
        let bound = distinct.len() as u32;
        let mut power = self.sums[i].clone();
        for m in 1..=bound {
            let ip = self.weighted_pairing(&power, &self.sums[j])?;
            let r = ip.to_rational().ok_or_else(|| {
                CharError::VerificationFailed("tensor power pairing is not rational".into())
            })?;
            if r.is_positive() {
                return Ok(m);
            }
            power = power
                .iter()
                .zip(&self.sums[i])
                .map(|(a, b)| a.checked_mul(b, self.exponent))
                .collect::<Result<_, _>>()?;
        }
        Err(CharError::VerificationFailed(format!(
            "chi_{j} not found in the first {bound} tensor powers of faithful chi_{i}"
        )))
    }

    /// Degrees of the irreducibles whose kernel contains all of `classes`.
    pub fn degrees_with_kernel_containing(&self, classes: &BTreeSet<usize>) -> Vec<u64> {
        (0..self.degrees.len())
            .filter(|&i| {
                let ker = self.character_kernel(i).expect("valid index");
                classes.is_subset(&ker)
            })
            .map(|i| self.degrees[i])
            .collect()
    }

    pub fn dump(&self) -> TableDump {
        TableDump {
            schema: "edbound.chartable/1".into(),
            group: self.group_name.clone(),
            order: self.order,
            exponent: self.exponent,
            prime: self.prime,
            seed: TABLE_SEED,
            class_sizes: self.class_sizes.clone(),
            class_orders: self.class_orders.clone(),
            class_representatives: self.class_representatives.clone(),
            degrees: self.degrees.clone(),
            values: self
                .values
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| {
                            v.coefficients()
                                .iter()
                                .enumerate()
                                .filter(|(_, c)| !c.is_zero())
                                .map(|(k, c)| (k as u32, c.to_string()))
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// Serialized table. Each value is the sparse list of `(power, coefficient)`
/// pairs on the basis `1, E(e), E(e)^2, ...`, `E(e) = exp(2 pi i / e)`,
/// reduced modulo the e-th cyclotomic polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDump {
    pub schema: String,
    pub group: Option<String>,
    pub order: u64,
    pub exponent: u32,
    pub prime: u64,
    pub seed: u64,
    pub class_sizes: Vec<u64>,
    pub class_orders: Vec<u64>,
    pub class_representatives: Vec<Vec<u32>>,
    pub degrees: Vec<u64>,
    pub values: Vec<Vec<Vec<(u32, String)>>>,
}

impl fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "group {} order {} exponent {} prime {}",
            self.group_name.as_deref().unwrap_or("?"),
            self.order,
            self.exponent,
            self.prime
        )?;
        let sizes: Vec<String> = self.class_sizes.iter().map(u64::to_string).collect();
        let orders: Vec<String> = self.class_orders.iter().map(u64::to_string).collect();
        writeln!(f, "class sizes  {}", sizes.join(" "))?;
        writeln!(f, "class orders {}", orders.join(" "))?;
        for (i, row) in self.values.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(Cyclotomic::to_string).collect();
            writeln!(f, "chi_{i} [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
