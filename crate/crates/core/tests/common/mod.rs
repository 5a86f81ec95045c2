//! Brute-force oracles shared by the integration tests. They work directly on
//! group elements or on floating-point character values, never through the
//! exact machinery they are used to check.
#![allow(dead_code)]

use edbound::catalog::Catalog;
use edbound::lie::linalg::Q;
use edbound::lie::LieAlgebra;
use edbound::{CharacterTable, FiniteGroup, GroupElement, Permutation, DEFAULT_ORDER_CAP};
use num_complex::Complex64;
use num_traits::{One, Zero};

pub const EPS: f64 = 1e-6;

pub fn perm_group(name: &str, degree: usize, gens: &[&[u32]]) -> FiniteGroup {
    let gens = gens
        .iter()
        .map(|g| {
            assert_eq!(g.len(), degree);
            GroupElement::Perm(Permutation::new(g.to_vec()).unwrap())
        })
        .collect();
    FiniteGroup::from_generators(gens, DEFAULT_ORDER_CAP).unwrap().with_name(name)
}

pub fn s4() -> FiniteGroup {
    perm_group("S4", 4, &[&[1, 2, 3, 0], &[1, 0, 2, 3]])
}

/// A base group or cover from the shipped catalog.
pub fn catalog_group(name: &str) -> FiniteGroup {
    let cat = Catalog::builtin();
    if cat.base(name).is_ok() {
        return cat.build_base(name, DEFAULT_ORDER_CAP).unwrap();
    }
    let entry = cat.cover(name).unwrap();
    entry.group.build(DEFAULT_ORDER_CAP).unwrap().with_name(entry.name.clone())
}

pub fn numeric(table: &CharacterTable) -> Vec<Vec<Complex64>> {
    table
        .values()
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| {
                    let (re, im) = v.to_f64_pair();
                    Complex64::new(re, im)
                })
                .collect()
        })
        .collect()
}

/// Rounds to the nearest integer, failing if the value is not close to one.
pub fn round_int(z: Complex64) -> i64 {
    let r = z.re.round();
    assert!((z.re - r).abs() < EPS && z.im.abs() < EPS, "{z} is not an integer");
    r as i64
}

/// Element-wise class index, found by conjugating over the whole group.
pub fn brute_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let els = g.elements();
    let inv: Vec<GroupElement> = els.iter().map(GroupElement::inverse).collect();
    let mut seen = vec![false; els.len()];
    let mut classes = Vec::new();
    for start in 0..els.len() {
        if seen[start] {
            continue;
        }
        let mut members: Vec<usize> = els
            .iter()
            .zip(&inv)
            .map(|(x, xi)| g.index_of(&xi.mul(&els[start]).mul(x)).unwrap())
            .collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            seen[m] = true;
        }
        classes.push(members);
    }
    classes
}

pub fn involution_count(g: &FiniteGroup) -> usize {
    g.elements().iter().filter(|x| x.mul(x).is_identity()).count()
}

/// `(1/|G|) sum_g chi(g^2)`, summed element by element.
pub fn indicator_oracle(g: &FiniteGroup, values: &[Complex64]) -> i64 {
    let sum: Complex64 = g.elements().iter().map(|x| values[g.class_of(&x.mul(x)).unwrap()]).sum();
    round_int(sum / g.order() as f64)
}

/// Elements on which the character takes the value `chi(1)`.
pub fn kernel_size(g: &FiniteGroup, values: &[Complex64]) -> usize {
    let d = values[0];
    g.elements().iter().filter(|x| (values[g.class_of(x).unwrap()] - d).norm() < EPS).count()
}

/// Smallest degree among faithful rows, scanning every row of the table.
pub fn min_faithful_degree_scan(g: &FiniteGroup, table: &CharacterTable) -> Option<u64> {
    numeric(table)
        .iter()
        .filter(|row| kernel_size(g, row) == 1)
        .map(|row| round_int(row[0]) as u64)
        .min()
}

/// `<chi, psi>` from floating-point values.
pub fn pairing(sizes: &[u64], order: u64, chi: &[Complex64], psi: &[Complex64]) -> Complex64 {
    chi.iter().zip(psi).zip(sizes).map(|((a, b), &s)| a * b.conj() * s as f64).sum::<Complex64>() / order as f64
}

/// Least m with `<chi_i^m, chi_j> > 0`, iterating powers numerically up to `limit`.
pub fn containment_oracle(table: &CharacterTable, i: usize, j: usize, limit: u32) -> Option<u32> {
    let vals = numeric(table);
    let mut power = vals[i].clone();
    for m in 1..=limit {
        if round_int(pairing(table.class_sizes(), table.order(), &power, &vals[j])) > 0 {
            return Some(m);
        }
        power = power.iter().zip(&vals[i]).map(|(a, b)| a * b).collect();
    }
    None
}

/// Number of fixed points, class by class, of a permutation group.
pub fn fixed_point_character(g: &FiniteGroup) -> Vec<Complex64> {
    g.conjugacy_classes()
        .iter()
        .map(|c| match c.representative() {
            GroupElement::Perm(p) => {
                let fixed = (0..p.degree() as u32).filter(|&x| p.apply(x) == x).count();
                Complex64::new(fixed as f64, 0.0)
            }
            _ => panic!("not a permutation group"),
        })
        .collect()
}

fn at(dim: usize, c: &[Q], i: usize, j: usize, k: usize) -> Q {
    c[(i * dim + j) * dim + k].clone()
}

/// Antisymmetry and Jacobi over every ordered triple, dense.
pub fn jacobi_oracle(dim: usize, c: &[Q]) -> bool {
    let antisym = (0..dim).all(|i| (0..dim).all(|j| (0..dim).all(|k| (at(dim, c, i, j, k) + at(dim, c, j, i, k)).is_zero())));
    let bracket = |x: &[Q], y: &[Q]| -> Vec<Q> {
        let mut out = vec![Q::zero(); dim];
        for i in 0..dim {
            for j in 0..dim {
                let w = &x[i] * &y[j];
                if w.is_zero() {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &w * at(dim, c, i, j, k);
                }
            }
        }
        out
    };
    let e = |i: usize| -> Vec<Q> { (0..dim).map(|k| if k == i { Q::one() } else { Q::zero() }).collect() };
    antisym
        && (0..dim).all(|i| {
            (0..dim).all(|j| {
                (0..dim).all(|k| {
                    let t1 = bracket(&bracket(&e(i), &e(j)), &e(k));
                    let t2 = bracket(&bracket(&e(j), &e(k)), &e(i));
                    let t3 = bracket(&bracket(&e(k), &e(i)), &e(j));
                    (0..dim).all(|l| (&t1[l] + &t2[l] + &t3[l]).is_zero())
                })
            })
        })
}

/// `tr(ad x_i ad x_j) = sum_{k,l} c^l_{ik} c^k_{jl}`.
pub fn killing_oracle(alg: &LieAlgebra) -> Vec<Vec<Q>> {
    let n = alg.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut t = Q::zero();
                    for k in 0..n {
                        for l in 0..n {
                            t += alg.c(i, k, l) * alg.c(j, l, k);
                        }
                    }
                    t
                })
                .collect()
        })
        .collect()
}
