//! Finite fields of prime and prime-power order.
//!
//! Elements are encoded as integers `0..q`. For a prime field the encoding is
//! the residue itself. For `q = p^k` with `k > 1` the integer `a_0 + a_1 p + ...
//! + a_{k-1} p^{k-1}` stands for the polynomial `a_0 + a_1 x + ... ` modulo a
//! fixed Conway polynomial, so matrices over the same `q` are bit-reproducible.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

/// Largest field order accepted. Elements are stored as `u16`.
pub const MAX_FIELD_ORDER: u32 = 1 << 12;

/// Conway polynomials, lowest coefficient first, leading 1 omitted.
const CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 1, 1, 0]),
    (3, 2, &[2, 2]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 0, 0, 2]),
    (5, 2, &[2, 4]),
    (5, 3, &[3, 3, 0]),
    (7, 2, &[3, 6]),
    (11, 2, &[2, 7]),
    (13, 2, &[2, 12]),
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field order {0} exceeds the supported maximum {MAX_FIELD_ORDER}")]
    TooLarge(u32),
    #[error("no Conway polynomial shipped for GF({p}^{k})")]
    NoConwayPolynomial { p: u32, k: u32 },
}

/// Arithmetic in GF(q).
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Lookup tables, only populated for `k > 1`.
    add: Vec<u16>,
    mul: Vec<u16>,
    inv: Vec<u16>,
    neg: Vec<u16>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl FiniteField {
    /// Returns the shared instance of GF(q).
    pub fn get(q: u32) -> Result<Arc<FiniteField>, FieldError> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<FiniteField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(f) = guard.get(&q) {
            return Ok(f.clone());
        }
        let field = Arc::new(Self::build(q)?);
        guard.insert(q, field.clone());
        Ok(field)
    }

    fn build(q: u32) -> Result<Self, FieldError> {
        if q > MAX_FIELD_ORDER {
            return Err(FieldError::TooLarge(q));
        }
        let (p, k) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        let mut field = FiniteField {
            p,
            k,
            q,
            add: Vec::new(),
            mul: Vec::new(),
            inv: Vec::new(),
            neg: Vec::new(),
        };
        if k > 1 {
            let modulus = CONWAY
                .iter()
                .find(|(pp, kk, _)| *pp == p && *kk == k)
                .map(|(_, _, c)| *c)
                .ok_or(FieldError::NoConwayPolynomial { p, k })?;
            field.build_tables(modulus);
        }
        Ok(field)
    }

    fn digits(&self, a: u32) -> Vec<u32> {
        let mut out = vec![0; self.k as usize];
        let mut a = a;
        for d in out.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        out
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    fn build_tables(&mut self, modulus: &[u32]) {
        let (p, k, q) = (self.p, self.k as usize, self.q as usize);
        self.add = vec![0; q * q];
        self.mul = vec![0; q * q];
        self.neg = vec![0; q];
        self.inv = vec![0; q];
        for a in 0..q {
            let da = self.digits(a as u32);
            let neg: Vec<u32> = da.iter().map(|&x| (p - x) % p).collect();
            self.neg[a] = self.undigits(&neg) as u16;
            for b in 0..q {
                let db = self.digits(b as u32);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                self.add[a * q + b] = self.undigits(&sum) as u16;
                let mut prod = vec![0u32; 2 * k - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // x^k = -(m_0 + m_1 x + ... + m_{k-1} x^{k-1})
                for deg in (k..prod.len()).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, m) in modulus.iter().enumerate() {
                        let t = deg - k + i;
                        prod[t] = (prod[t] + (p - c) * m % p) % p;
                    }
                }
                self.mul[a * q + b] = self.undigits(&prod[..k]) as u16;
            }
        }
        for a in 1..q {
            for b in 1..q {
                if self.mul[a * q + b] == 1 {
                    self.inv[a] = b as u16;
                    break;
                }
            }
        }
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        if self.k == 1 {
            ((a as u32 + b as u32) % self.p) as u16
        } else {
            self.add[a as usize * self.q as usize + b as usize]
        }
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        if self.k == 1 {
            ((self.p - a as u32) % self.p) as u16
        } else {
            self.neg[a as usize]
        }
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        if self.k == 1 {
            ((a as u32 * b as u32) % self.p) as u16
        } else {
            self.mul[a as usize * self.q as usize + b as usize]
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u16) -> Option<u16> {
        if a == 0 {
            return None;
        }
        if self.k == 1 {
            let p = self.p as u64;
            let mut result = 1u64;
            let (mut base, mut exp) = (a as u64, p - 2);
            while exp > 0 {
                if exp & 1 == 1 {
                    result = result * base % p;
                }
                base = base * base % p;
                exp >>= 1;
            }
            Some(result as u16)
        } else {
            Some(self.inv[a as usize])
        }
    }

    /// Maps an integer (possibly negative) into the prime subfield.
    pub fn from_int(&self, n: i64) -> u16 {
        n.rem_euclid(self.p as i64) as u16
    }

    /// The class of `x` in the polynomial encoding (`p` for `k > 1`).
    pub fn generator(&self) -> u16 {
        if self.k == 1 {
            // smallest primitive root
            (2..self.q)
                .find(|&g| self.multiplicative_order(g as u16) == self.q - 1)
                .unwrap_or(1) as u16
        } else {
            self.p as u16
        }
    }

    pub fn multiplicative_order(&self, a: u16) -> u32 {
        assert_ne!(a, 0, "zero has no multiplicative order");
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }
}
