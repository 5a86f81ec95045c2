//! Arithmetic, linear algebra and root finding over a prime field `Z/p`,
//! `p < 2^32`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut result = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    result
}

pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    (a % p != 0).then(|| pow_mod(a, p - 2, p))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest generator of the multiplicative group mod `p`.
pub fn primitive_root(p: u64) -> u64 {
    let factors = crate::group::prime_divisors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&f| pow_mod(g, (p - 1) / f, p) != 1))
        .unwrap_or(1)
}

/// Dense matrix mod p, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatModP {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl MatModP {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut MatModP, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(piv) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
            continue;
        };
        if piv != row {
            for c in 0..m.cols {
                m.data.swap(piv * m.cols + c, row * m.cols + c);
            }
        }
        let inv = inv_mod(m.get(row, col), p).expect("nonzero pivot");
        for c in 0..m.cols {
            let v = mul_mod(m.get(row, c), inv, p);
            m.set(row, c, v);
        }
        for r in 0..m.rows {
            if r == row {
                continue;
            }
            let factor = m.get(r, col);
            if factor == 0 {
                continue;
            }
            for c in 0..m.cols {
                let v = (m.get(r, c) + p - mul_mod(factor, m.get(row, c), p)) % p;
                m.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.rows = row;
    m.data.truncate(row * m.cols);
    pivots
}

/// Basis of the right null space `{x : m x = 0}`, one vector per row.
pub fn null_space(m: &MatModP, p: u64) -> Vec<Vec<u64>> {
    let mut r = m.clone();
    let pivots = rref(&mut r, p);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; m.cols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - r.get(i, f)) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(x I - m)` of a square matrix, lowest
/// coefficient first, via Hessenberg reduction.
pub fn char_poly(m: &MatModP, p: u64) -> Vec<u64> {
    let n = m.rows;
    let mut h = m.clone();
    for col in 0..n.saturating_sub(2) {
        let Some(piv) = (col + 1..n).find(|&r| h.get(r, col) != 0) else {
            continue;
        };
        if piv != col + 1 {
            // similarity: swap rows and the matching columns
            for c in 0..n {
                h.data.swap(piv * n + c, (col + 1) * n + c);
            }
            for r in 0..n {
                h.data.swap(r * n + piv, r * n + col + 1);
            }
        }
        let inv = inv_mod(h.get(col + 1, col), p).expect("nonzero pivot");
        for r in col + 2..n {
            let factor = mul_mod(h.get(r, col), inv, p);
            if factor == 0 {
                continue;
            }
            // row_r -= factor * row_{col+1}; col_{col+1} += factor * col_r
            for c in 0..n {
                let v = (h.get(r, c) + p - mul_mod(factor, h.get(col + 1, c), p)) % p;
                h.set(r, c, v);
            }
            for rr in 0..n {
                let v = (h.get(rr, col + 1) + mul_mod(factor, h.get(rr, r), p)) % p;
                h.set(rr, col + 1, v);
            }
        }
    }
    // recurrence on leading principal submatrices of the Hessenberg form
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // p_{k+1}(x) = (x - h_kk) p_k(x) - sum_{i<k} h_ik * prod_{j=i+1..k} h_{j,j-1} * p_i(x)
        let mut next = vec![0u64; k + 2];
        for (i, &c) in polys[k].iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = (next[i] + p - mul_mod(h.get(k, k), c, p)) % p;
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mul_mod(prod, h.get(i + 1, i), p);
            let coef = mul_mod(h.get(i, k), prod, p);
            if coef == 0 {
                continue;
            }
            for (j, &c) in polys[i].iter().enumerate() {
                next[j] = (next[j] + p - mul_mod(coef, c, p)) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("at least the constant polynomial")
}

fn trim(a: &mut Vec<u64>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if db == 0 {
        return vec![0];
    }
    let lead_inv = inv_mod(b[db], p).expect("nonzero leading coefficient");
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = mul_mod(*r.last().unwrap(), lead_inv, p);
        if c != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - mul_mod(c, bc, p)) % p;
            }
        }
        r.pop();
    }
    trim(&mut r);
    if r.is_empty() {
        r.push(0);
    }
    r
}

fn poly_mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    poly_rem(&out, m, p)
}

fn poly_pow_mod(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = poly_rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            result = poly_mul_mod(&result, &b, m, p);
        }
        b = poly_mul_mod(&b, &b, m, p);
        exp >>= 1;
    }
    result
}

fn is_zero_poly(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !is_zero_poly(&b) {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    // monic
    let inv = inv_mod(*a.last().unwrap(), p).unwrap_or(1);
    a.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut out);
    out
}

/// Distinct roots in `Z/p` of a polynomial (lowest coefficient first), ascending.
pub fn roots(f: &[u64], p: u64, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let mut f = f.to_vec();
    trim(&mut f);
    if f.len() <= 1 {
        return Vec::new();
    }
    // product of the distinct linear factors: gcd(f, x^p - x)
    let xp = poly_pow_mod(&[0, 1], p, &f, p);
    let g = poly_gcd(&f, &poly_sub(&xp, &[0, 1], p), p);
    let mut out = Vec::new();
    split_linear(&g, p, rng, &mut out);
    out.sort_unstable();
    out
}

fn split_linear(g: &[u64], p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    let deg = g.len() - 1;
    if deg == 0 {
        return;
    }
    if deg == 1 {
        // monic: x + g0
        out.push((p - g[0]) % p);
        return;
    }
    if p == 2 {
        for x in 0..2 {
            if g.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0 {
                out.push(x);
            }
        }
        return;
    }
    loop {
        let a = rng.gen_range(0..p);
        let h = poly_pow_mod(&[a, 1], (p - 1) / 2, g, p);
        let d = poly_gcd(g, &poly_sub(&h, &[1], p), p);
        let dd = d.len() - 1;
        if dd > 0 && dd < deg {
            let rest = poly_div_exact(g, &d, p);
            split_linear(&d, p, rng, out);
            split_linear(&rest, p, rng, out);
            return;
        }
    }
}

fn poly_div_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - db];
    let lead_inv = inv_mod(b[db], p).expect("nonzero leading coefficient");
    for i in (0..q.len()).rev() {
        let c = mul_mod(r[i + db], lead_inv, p);
        q[i] = c;
        for (j, &bc) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + p - mul_mod(c, bc, p)) % p;
        }
    }
    q
}
