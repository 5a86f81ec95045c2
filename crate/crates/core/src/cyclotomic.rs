//! Exact arithmetic in cyclotomic fields `Q(z)`, `z = exp(2 pi i / e)`.
//!
//! [`Cyclotomic`] is the canonical form: rational coefficients on the power
//! basis `1, z, ..., z^(phi(e)-1)`, i.e. a polynomial reduced modulo the e-th
//! cyclotomic polynomial. Equality and ordering compare these vectors.
//!
//! [`RootSum`] is a sparse integer combination of e-th roots of unity (an
//! element of the group ring `Z[Z/e]`). Character values arrive in this shape
//! and all sums of products stay cheap in it; reduce to [`Cyclotomic`] to
//! compare.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `Q(z_e)` with cached reductions of every power `z^k`, `0 <= k < e`.
pub struct CyclotomicField {
    order: u32,
    modulus: Vec<i64>,
    /// `powers[k]` = coordinates of `z^k` on the power basis.
    powers: Vec<Vec<i64>>,
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(E({}))", self.order)
    }
}

/// Integer coefficients of the n-th cyclotomic polynomial, lowest first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1 divided by all proper-divisor cyclotomic polynomials
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        let den = cyclotomic_polynomial(d);
        num = exact_div(&num, &den);
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

impl CyclotomicField {
    pub fn get(order: u32) -> Arc<Self> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        guard.entry(order).or_insert_with(|| Arc::new(Self::build(order))).clone()
    }

    fn build(order: u32) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let deg = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; deg];
        cur[0] = 1;
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by z and reduce the overflow term
            let top = cur[deg - 1];
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..deg {
                    cur[i] -= top * modulus[i];
                }
            }
        }
        Self { order, modulus, powers }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Euler phi of the order.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }
}

#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field.order, &self.coeffs).cmp(&(other.field.order, &other.coeffs))
    }
}

impl Cyclotomic {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self { field: field.clone(), coeffs: vec![BigRational::zero(); field.degree()] }
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, r: BigRational) -> Self {
        let mut v = Self::zero(field);
        v.coeffs[0] = r;
        v
    }

    pub fn from_integer(field: &Arc<CyclotomicField>, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(n.into()))
    }

    /// `z^k`.
    pub fn root_of_unity(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let e = field.order as i64;
        let row = &field.powers[k.rem_euclid(e) as usize];
        Self {
            field: field.clone(),
            coeffs: row.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        }
    }

    /// Builds the canonical form of `sum_k coeffs[k] z^k` for arbitrary exponents.
    pub fn from_exponents<'a>(
        field: &Arc<CyclotomicField>,
        terms: impl IntoIterator<Item = (i64, &'a BigRational)>,
    ) -> Self {
        let e = field.order as i64;
        let mut out = vec![BigRational::zero(); field.degree()];
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            let row = &field.powers[k.rem_euclid(e) as usize];
            for (o, &r) in out.iter_mut().zip(row) {
                if r != 0 {
                    *o += c * BigRational::from_integer(r.into());
                }
            }
        }
        Self { field: field.clone(), coeffs: out }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Coordinates on the power basis `1, z, ..., z^(phi(e)-1)`.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k as i64, c))
    }

    /// Galois automorphism `z -> z^a`, `gcd(a, e) = 1`.
    pub fn galois(&self, a: i64) -> Self {
        Self::from_exponents(&self.field, self.terms().map(|(k, c)| (k * a, c)))
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Numerical value, for display and floating-point cross-checks only.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        let e = self.field.order as f64;
        self.terms().fold((0.0, 0.0), |(re, im), (k, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * k as f64 / e;
            (re + c * t.cos(), im + c * t.sin())
        })
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.field.order, other.field.order,
            "cyclotomic values from different fields"
        );
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.assert_same_field(rhs);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.assert_same_field(rhs);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.assert_same_field(rhs);
        let e = self.field.order as i64;
        let mut acc: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                *acc.entry((i + j) % e).or_insert_with(BigRational::zero) += a * b;
            }
        }
        Cyclotomic::from_exponents(&self.field, acc.iter().map(|(k, c)| (*k, c)))
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = abs.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "E({})^{k}", self.field.order)?,
                (_, false) => write!(f, "{abs}*E({})^{k}", self.field.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Overflow in [`RootSum`] arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

/// Sparse integer combination of e-th roots of unity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootSum {
    /// (exponent mod e, coefficient), exponents strictly increasing, no zeros.
    terms: Vec<(u32, i128)>,
}

impl RootSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn integer(n: i128) -> Self {
        Self::from_terms(0, [(0, n)])
    }

    /// Collects `(exponent, coefficient)` pairs modulo `e` (`e = 0` means no wrap).
    pub fn from_terms(e: u32, terms: impl IntoIterator<Item = (u32, i128)>) -> Self {
        let mut map: BTreeMap<u32, i128> = BTreeMap::new();
        for (k, c) in terms {
            let k = if e == 0 { k } else { k % e };
            *map.entry(k).or_insert(0) += c;
        }
        Self { terms: map.into_iter().filter(|(_, c)| *c != 0).collect() }
    }

    pub fn terms(&self) -> &[(u32, i128)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Overflow> {
        let mut map: BTreeMap<u32, i128> = self.terms.iter().copied().collect();
        for &(k, c) in &other.terms {
            let slot = map.entry(k).or_insert(0);
            *slot = slot.checked_add(c).ok_or(Overflow)?;
        }
        Ok(Self { terms: map.into_iter().filter(|(_, c)| *c != 0).collect() })
    }

    pub fn checked_mul(&self, other: &Self, e: u32) -> Result<Self, Overflow> {
        let mut map: BTreeMap<u32, i128> = BTreeMap::new();
        for &(i, a) in &self.terms {
            for &(j, b) in &other.terms {
                let k = ((i as u64 + j as u64) % e as u64) as u32;
                let prod = a.checked_mul(b).ok_or(Overflow)?;
                let slot = map.entry(k).or_insert(0);
                *slot = slot.checked_add(prod).ok_or(Overflow)?;
            }
        }
        Ok(Self { terms: map.into_iter().filter(|(_, c)| *c != 0).collect() })
    }

    pub fn checked_scale(&self, s: i128) -> Result<Self, Overflow> {
        if s == 0 {
            return Ok(Self::zero());
        }
        let terms = self
            .terms
            .iter()
            .map(|&(k, c)| c.checked_mul(s).map(|v| (k, v)).ok_or(Overflow))
            .collect::<Result<_, _>>()?;
        Ok(Self { terms })
    }

    /// Complex conjugate: `z^k -> z^(e-k)`.
    pub fn conj(&self, e: u32) -> Self {
        Self::from_terms(e, self.terms.iter().map(|&(k, c)| ((e - k) % e, c)))
    }

    /// Galois image `z^k -> z^(a k)`.
    pub fn galois(&self, e: u32, a: u32) -> Self {
        Self::from_terms(
            e,
            self.terms.iter().map(|&(k, c)| ((k as u64 * a as u64 % e as u64) as u32, c)),
        )
    }

    pub fn reduce(&self, field: &Arc<CyclotomicField>) -> Cyclotomic {
        let mut acc = vec![BigInt::zero(); field.degree()];
        for &(k, c) in &self.terms {
            let row = &field.powers[(k % field.order) as usize];
            for (slot, &r) in acc.iter_mut().zip(row) {
                if r != 0 {
                    *slot += BigInt::from(c) * r;
                }
            }
        }
        Cyclotomic { field: field.clone(), coeffs: acc.into_iter().map(BigRational::from_integer).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn known_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // first polynomial with a coefficient outside {-1, 0, 1}
        assert!(cyclotomic_polynomial(105).contains(&-2));
        assert_eq!(CyclotomicField::get(420).degree(), 96);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for e in [3u32, 5, 8, 12, 15] {
            let f = CyclotomicField::get(e);
            let mut s = Cyclotomic::zero(&f);
            for k in 0..e as i64 {
                s = &s + &Cyclotomic::root_of_unity(&f, k);
            }
            assert!(s.is_zero(), "e = {e}");
        }
    }

    #[test]
    fn golden_ratio_identity() {
        // b5 = z + z^4 satisfies b5^2 + b5 - 1 = 0
        let f = CyclotomicField::get(5);
        let b5 = &Cyclotomic::root_of_unity(&f, 1) + &Cyclotomic::root_of_unity(&f, 4);
        let lhs = &(&(&b5 * &b5) + &b5) - &Cyclotomic::from_integer(&f, 1);
        assert!(lhs.is_zero());
        assert_eq!(b5.conj(), b5);
        let (re, im) = b5.to_f64_pair();
        assert!((re - 0.618_033_988_749_895).abs() < 1e-12 && im.abs() < 1e-12);
    }

    #[test]
    fn rootsum_reduction_agrees_with_canonical_arithmetic() {
        let f = CyclotomicField::get(12);
        let a = RootSum::from_terms(12, [(1, 2), (5, -1), (11, 3)]);
        let b = RootSum::from_terms(12, [(3, 1), (7, 4)]);
        let prod = a.checked_mul(&b, 12).unwrap().reduce(&f);
        assert_eq!(prod, &a.reduce(&f) * &b.reduce(&f));
        assert_eq!(a.conj(12).reduce(&f), a.reduce(&f).conj());
        assert_eq!(a.galois(12, 5).reduce(&f), a.reduce(&f).galois(5));
    }

    #[test]
    fn display() {
        let f = CyclotomicField::get(3);
        let w = Cyclotomic::root_of_unity(&f, 1);
        assert_eq!(w.to_string(), "E(3)^1");
        // z^2 = -1 - z
        assert_eq!(Cyclotomic::root_of_unity(&f, 2).to_string(), "-1 - E(3)^1");
        assert_eq!(Cyclotomic::from_rational(&f, q(1) / q(2)).to_string(), "1/2");
        assert_eq!(Cyclotomic::zero(&f).to_string(), "0");
    }

    proptest! {
        #[test]
        fn multiplication_is_commutative_and_distributive(
            e in prop::sample::select(vec![4u32, 5, 7, 9, 12, 15]),
            a in prop::collection::vec((0u32..60, -5i128..5), 0..5),
            b in prop::collection::vec((0u32..60, -5i128..5), 0..5),
            c in prop::collection::vec((0u32..60, -5i128..5), 0..5),
        ) {
            let f = CyclotomicField::get(e);
            let (a, b, c) = (
                RootSum::from_terms(e, a).reduce(&f),
                RootSum::from_terms(e, b).reduce(&f),
                RootSum::from_terms(e, c).reduce(&f),
            );
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        }
    }
}
