mod common;

use common::{jacobi_oracle, killing_oracle};
use edbound::lie::linalg::{q, QMatrix, Q};
use edbound::lie::{random_unimodular, table, Family, LieAlgebra, LieError};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn named() -> Vec<(&'static str, LieAlgebra)> {
    vec![
        ("sl2", LieAlgebra::sl2()),
        ("sl3", LieAlgebra::sl(3).unwrap()),
        ("so3", LieAlgebra::so3()),
        ("abelian3", LieAlgebra::abelian(3).unwrap()),
        ("aff1", LieAlgebra::affine_line()),
    ]
}

#[test]
fn validator_accepts_standard_algebras() {
    for (name, alg) in named() {
        assert!(jacobi_oracle(alg.dim(), alg.constants()), "{name}");
        LieAlgebra::validate(alg.dim(), alg.constants().to_vec()).unwrap();
    }
    for n in [4, 5] {
        let so = LieAlgebra::so(n).unwrap();
        assert!(jacobi_oracle(so.dim(), so.constants()));
    }
}

#[test]
fn every_single_entry_perturbation_is_rejected() {
    for (name, alg) in named().into_iter().take(3) {
        let n = alg.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut c = alg.constants().to_vec();
                    c[(i * n + j) * n + k] += q(1);
                    assert!(!jacobi_oracle(n, &c));
                    match LieAlgebra::validate(n, c) {
                        Err(LieError::AntisymmetryViolation { i: a, j: b, k: kk, .. }) => {
                            assert_eq!(((a.min(b), a.max(b)), kk), ((i.min(j), i.max(j)), k), "{name}");
                        }
                        other => panic!("{name} ({i},{j},{k}): {other:?}"),
                    }
                }
            }
        }
    }
}

#[test]
fn jacobi_failure_carries_a_witness() {
    // [e, f] = h + e in sl2
    let mut c = LieAlgebra::sl2().constants().to_vec();
    c[(1 * 3 + 2) * 3 + 1] = q(1);
    c[(2 * 3 + 1) * 3 + 1] = q(-1);
    assert!(!jacobi_oracle(3, &c));
    match LieAlgebra::validate(3, c) {
        Err(LieError::JacobiViolation { i: 0, j: 1, k: 2, l, value }) => {
            assert_eq!(l, 1);
            assert_ne!(value, "0");
        }
        other => panic!("{other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    // antisymmetric perturbations may or may not stay Lie; the validator must agree with the oracle
    #[test]
    fn antisymmetric_perturbations_agree_with_oracle(
        which in 0usize..3, i in 0usize..8, j in 0usize..8, k in 0usize..8, delta in prop_oneof![-3i64..0, 1i64..4],
    ) {
        let (_, alg) = named().swap_remove(which);
        let n = alg.dim();
        let (i, j, k) = (i % n, j % n, k % n);
        prop_assume!(i != j);
        let mut c = alg.constants().to_vec();
        c[(i * n + j) * n + k] += q(delta);
        c[(j * n + i) * n + k] -= q(delta);
        let oracle = jacobi_oracle(n, &c);
        let verdict = LieAlgebra::validate(n, c);
        prop_assert_eq!(oracle, verdict.is_ok(), "{:?}", verdict.err());
    }
}

#[test]
fn killing_form_and_semisimplicity() {
    let expected = [("sl2", true), ("sl3", true), ("so3", true), ("abelian3", false), ("aff1", false)];
    for ((name, alg), (_, semisimple)) in named().into_iter().zip(expected) {
        let k = alg.killing_form();
        assert_eq!(k.to_rows(), killing_oracle(&alg), "{name}");
        assert_eq!(alg.is_semisimple(), semisimple, "{name}");
        assert_eq!(!k.determinant().is_zero(), semisimple);
    }
    assert_eq!(LieAlgebra::sl2().killing_form(), QMatrix::from_i64(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]));
    assert_eq!(LieAlgebra::so3().killing_form(), QMatrix::identity(3).scale(&q(-2)));
}

#[test]
fn sl3_killing_form_is_six_times_the_trace_form() {
    let n = 3;
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
    let k = LieAlgebra::sl(3).unwrap().killing_form();
    for (a, x) in mats.iter().enumerate() {
        for (b, y) in mats.iter().enumerate() {
            assert_eq!(k[(a, b)], x.mul(y).trace() * q(2 * n as i64));
        }
    }
}

#[test]
fn ranks() {
    for (alg, r) in [
        (LieAlgebra::sl2(), 1),
        (LieAlgebra::sl(3).unwrap(), 2),
        (LieAlgebra::so3(), 1),
        (LieAlgebra::sp(4).unwrap(), 2),
        (LieAlgebra::sl(4).unwrap(), 3),
    ] {
        let rep = alg.rank().unwrap();
        assert_eq!(rep.rank, r);
        assert!(rep.certified);
        assert_eq!(rep.zero_multiplicity, r);
    }
    assert!(matches!(LieAlgebra::abelian(3).unwrap().rank(), Err(LieError::NotSemisimple)));
}

#[test]
fn borel_of_sl2() {
    let sub = LieAlgebra::sl2().verify_subalgebra(&[vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]).unwrap();
    assert_eq!(sub.index, 1);
    assert_eq!(sub.induced.dim(), 2);
    assert_eq!(sub.induced.c(0, 1, 1), &q(2));
    assert_eq!(sub.induced.c(0, 1, 0), &q(0));
    let err = LieAlgebra::sl2().verify_subalgebra(&[vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]]).unwrap_err();
    assert!(matches!(err, LieError::NotClosed { .. }));
    let err = LieAlgebra::sl2().verify_subalgebra(&[vec![q(1), q(0), q(0)], vec![q(2), q(0), q(0)]]).unwrap_err();
    assert!(matches!(err, LieError::DependentBasis { .. }));
}

#[test]
fn invariants_survive_unimodular_changes_of_basis() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xba5e);
    for (name, alg) in named() {
        let n = alg.dim();
        let k = alg.killing_form();
        let rank = alg.rank().ok().map(|r| r.rank);
        let labels = alg.classify_simple().ok().map(|c| c.labels());
        for trial in 0..24 {
            let p = random_unimodular(n, &mut rng);
            assert!(p.determinant().abs().is_one());
            let b = alg.change_basis(&p).unwrap();
            assert!(jacobi_oracle(n, b.constants()), "{name} trial {trial}");
            assert_eq!(b.is_semisimple(), alg.is_semisimple());
            // K' = P K P^T, so det K' = det K
            assert_eq!(b.killing_form(), p.mul(&k).mul(&p.transpose()), "{name} trial {trial}");
            assert_eq!(b.killing_form().determinant(), k.determinant());
            assert_eq!(b.rank().ok().map(|r| r.rank), rank, "{name} trial {trial}");
            assert_eq!(b.classify_simple().ok().map(|c| c.labels()), labels);
            assert_eq!(b.centroid_dimension(), alg.centroid_dimension());
        }
    }
}

#[test]
fn classification() {
    let labels = |a: LieAlgebra| a.classify_simple().unwrap().labels().into_iter().collect::<Vec<_>>();
    assert_eq!(labels(LieAlgebra::sl2()), ["A_1"]);
    assert_eq!(labels(LieAlgebra::so3()), ["A_1"]);
    assert_eq!(labels(LieAlgebra::sl(3).unwrap()), ["A_2"]);
    assert_eq!(labels(LieAlgebra::so(5).unwrap()), ["B_2", "C_2"]);
    assert_eq!(labels(LieAlgebra::sp(4).unwrap()), ["B_2", "C_2"]);
    assert_eq!(labels(LieAlgebra::so(6).unwrap()), ["A_3"]);
    assert!(matches!(LieAlgebra::so(4).unwrap().classify_simple(), Err(LieError::NotSimple { centroid: 2 })));
    assert!(LieAlgebra::affine_line().classify_simple().is_err());
    assert!(LieAlgebra::abelian(1).unwrap().classify_simple().is_err());
}

#[test]
fn table_formulas() {
    for n in 2..=40u64 {
        let a = table::simple_type_table(Family::A, Some(n)).unwrap();
        assert_eq!((a.r, a.s), (n * n - 1, n - 1));
    }
    for n in (3..=41u64).step_by(2) {
        let b = table::orthogonal(n).unwrap();
        assert_eq!((b.r, b.s), (n * (n - 1) / 2, n - 1));
    }
    for n in (6..=40u64).step_by(2) {
        let d = table::orthogonal(n).unwrap();
        assert_eq!((d.r, d.s), (n * (n - 1) / 2, n - 1));
    }
    for n in (2..=40u64).step_by(2) {
        let c = table::simple_type_table(Family::C, Some(n)).unwrap();
        assert_eq!((c.r, c.s), (n * (n + 1) / 2, n));
    }
    for (f, r, s) in [
        (Family::E6, 78, 16),
        (Family::E7, 133, 27),
        (Family::E8, 248, 57),
        (Family::F4, 52, 15),
        (Family::G2, 14, 5),
    ] {
        let rec = table::simple_type_table(f, None).unwrap();
        assert_eq!((rec.r, rec.s), (r, s));
    }
    assert!(table::simple_type_table(Family::B, Some(4)).is_err());
    assert!(table::simple_type_table(Family::D, Some(4)).is_err());
    assert!(table::simple_type_table(Family::C, Some(3)).is_err());
    assert!(table::simple_type_table(Family::G2, Some(2)).is_err());
}

#[test]
fn structure_constant_files_round_trip() {
    for (name, alg) in named() {
        assert_eq!(LieAlgebra::parse(&alg.to_text()).unwrap(), alg, "{name}");
    }
    let err = LieAlgebra::parse("dim 2\n0 1 1 1\n1 0 1 1\n").unwrap_err();
    assert!(matches!(err, LieError::AntisymmetryViolation { .. }));
    assert!(LieAlgebra::parse("dim 2\n0 1 1 1/0\n").is_err());
}
