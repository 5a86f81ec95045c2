mod common;

use common::*;
use edbound::character::class_structure_constants;
use edbound::{CharacterTable, FiniteGroup, RealityType};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn small_groups() -> Vec<FiniteGroup> {
    let mut v = vec![s4()];
    v.extend(["A5", "A6", "PSL27", "SL(2,5)", "SL(2,7)", "SL(2,9)"].map(catalog_group));
    v
}

#[test]
fn classes_agree_with_conjugation_orbits() {
    for g in small_groups() {
        let mut lib: Vec<Vec<usize>> = g.conjugacy_classes().iter().map(|c| {
            let mut m = c.members().to_vec();
            m.sort_unstable();
            m
        }).collect();
        let mut brute = brute_classes(&g);
        lib.sort();
        brute.sort();
        assert_eq!(lib, brute, "{:?}", g.name());
    }
}

#[test]
fn structure_constants_match_pair_count() {
    for g in small_groups() {
        let classes = g.conjugacy_classes();
        let k = classes.len();
        let rep_of: Vec<Option<usize>> = (0..g.order())
            .map(|e| classes.iter().position(|c| c.representative_index() == e))
            .collect();
        let cls: Vec<usize> = (0..g.order()).map(|e| g.class_of_index(e)).collect();
        let mut brute = vec![vec![vec![0u64; k]; k]; k];
        let els = g.elements();
        for (xi, x) in els.iter().enumerate() {
            for (yi, y) in els.iter().enumerate() {
                if let Some(l) = rep_of[g.index_of(&x.mul(y)).unwrap()] {
                    brute[cls[xi]][cls[yi]][l] += 1;
                }
            }
        }
        assert_eq!(class_structure_constants(&g), brute, "{:?}", g.name());
    }
}

#[test]
fn tables_are_orthogonal_exactly_and_numerically() {
    for g in small_groups() {
        let t = CharacterTable::compute(&g).unwrap();
        t.verify().unwrap();
        let k = t.num_classes();
        assert_eq!(t.class_sizes().iter().sum::<u64>(), g.order() as u64);
        assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), g.order() as u64);
        for i in 0..k {
            for j in 0..k {
                let want = if i == j { BigRational::one() } else { BigRational::zero() };
                assert_eq!(t.inner_product(i, j).unwrap(), want);
            }
        }
        let v = numeric(&t);
        for a in 0..k {
            for b in 0..k {
                let col: Complex64 = (0..k).map(|i| v[i][a] * v[i][b].conj()).sum();
                let want = if a == b { g.order() as f64 / t.class_sizes()[a] as f64 } else { 0.0 };
                assert!((col - want).norm() < EPS, "{:?} columns {a}, {b}", g.name());
            }
        }
        // complex conjugate of an irreducible is an irreducible
        for row in &v {
            let c: Vec<Complex64> = row.iter().map(|z| z.conj()).collect();
            assert!(v.iter().any(|r| r.iter().zip(&c).all(|(a, b)| (a - b).norm() < EPS)));
        }
    }
}

#[test]
fn indicators_and_involutions() {
    for g in small_groups() {
        let t = CharacterTable::compute(&g).unwrap();
        let v = numeric(&t);
        let mut total = 0i64;
        for (i, row) in v.iter().enumerate() {
            let ind = indicator_oracle(&g, row);
            assert_eq!(t.fs_indicator(i).unwrap().indicator() as i64, ind, "{:?} chi_{i}", g.name());
            total += ind * t.degrees()[i] as i64;
        }
        assert_eq!(total as usize, involution_count(&g), "{:?}", g.name());
    }
}

#[test]
fn faithfulness_matches_kernel_scan() {
    for g in small_groups() {
        let t = CharacterTable::compute(&g).unwrap();
        for (i, row) in numeric(&t).iter().enumerate() {
            let size: u64 = t.character_kernel(i).unwrap().iter().map(|&c| t.class_sizes()[c]).sum();
            assert_eq!(size as usize, kernel_size(&g, row));
            assert_eq!(t.is_faithful(i).unwrap(), size == 1);
        }
        let choice = t.min_faithful_degree().unwrap();
        assert_eq!(Some(choice.degree), min_faithful_degree_scan(&g, &t), "{:?}", g.name());
    }
}

#[test]
fn doubly_transitive_permutation_characters() {
    // pi - 1 is irreducible for a 2-transitive action
    for g in [s4(), catalog_group("A5"), catalog_group("A6"), catalog_group("PSL27")] {
        let t = CharacterTable::compute(&g).unwrap();
        let v = numeric(&t);
        let pi = fixed_point_character(&g);
        let mult: Vec<i64> =
            v.iter().map(|row| round_int(pairing(t.class_sizes(), t.order(), &pi, row))).collect();
        assert_eq!(mult[0], 1);
        assert_eq!(mult.iter().filter(|&&m| m != 0).count(), 2, "{:?}: {mult:?}", g.name());
        assert_eq!(mult.iter().sum::<i64>(), 2);
    }
}

#[test]
fn known_degree_patterns() {
    let degrees = |n: &str| CharacterTable::compute(&catalog_group(n)).unwrap().degrees().to_vec();
    assert_eq!(degrees("A5"), [1, 3, 3, 4, 5]);
    assert_eq!(degrees("PSL27"), [1, 3, 3, 6, 7, 8]);
    assert_eq!(degrees("A6"), [1, 5, 5, 8, 8, 9, 10]);
    assert_eq!(degrees("SL(2,5)"), [1, 2, 2, 3, 3, 4, 4, 5, 6]);
    assert_eq!(CharacterTable::compute(&s4()).unwrap().degrees(), [1, 1, 2, 3, 3]);
}

#[test]
fn faithful_minima_of_covers() {
    let choice = |n: &str| CharacterTable::compute(&catalog_group(n)).unwrap().min_faithful_degree().unwrap();
    let sl25 = choice("SL(2,5)");
    assert_eq!((sl25.degree, sl25.reality), (2, RealityType::Quaternionic));
    assert_eq!(choice("SL(2,7)").degree, 4);
    assert_eq!(choice("SL(2,9)").degree, 4);
    let a6 = choice("A6");
    assert_eq!((a6.degree, a6.reality), (5, RealityType::Real));
    let psl = choice("PSL27");
    assert_eq!((psl.degree, psl.reality), (3, RealityType::Complex));
}

#[test]
fn a8_has_no_small_faithful_irreducible() {
    let g = catalog_group("A8");
    let t = CharacterTable::compute(&g).unwrap();
    assert_eq!(t.degrees(), [1, 7, 14, 20, 21, 21, 21, 28, 35, 45, 45, 56, 64, 70]);
    assert_eq!(min_faithful_degree_scan(&g, &t), Some(7));
    for i in 0..t.num_classes() {
        if t.degrees()[i] < 7 {
            assert!(!t.is_faithful(i).unwrap());
        }
    }
    let sum: i64 = (0..t.num_classes()).map(|i| t.fs_indicator(i).unwrap().indicator() as i64 * t.degrees()[i] as i64).sum();
    assert_eq!(sum as usize, involution_count(&g));
}

#[test]
fn tensor_power_containment_matches_iteration() {
    for name in ["A5", "SL(2,5)", "PSL27"] {
        let t = CharacterTable::compute(&catalog_group(name)).unwrap();
        for i in (0..t.num_classes()).filter(|&i| t.is_faithful(i).unwrap()) {
            for j in 0..t.num_classes() {
                let m = t.tensor_power_containment(i, j).unwrap();
                assert_eq!(Some(m), containment_oracle(&t, i, j, 64), "{name}: chi_{i} -> chi_{j}");
            }
        }
        let kernel_row = (0..t.num_classes()).find(|&i| !t.is_faithful(i).unwrap()).unwrap();
        assert_eq!(t.tensor_power_containment(kernel_row, 0).unwrap_err().category(), "not-faithful");
    }
}

#[test]
fn computation_is_deterministic() {
    let g = catalog_group("SL(2,7)");
    let a = CharacterTable::compute(&g).unwrap().dump();
    let b = CharacterTable::compute(&g).unwrap().dump();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}
