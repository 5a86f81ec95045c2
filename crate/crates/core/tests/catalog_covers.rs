mod common;

use std::collections::BTreeSet;

use common::*;
use edbound::catalog::{
    verify_cover, Catalog, CoverOptions, CHECK_CENTRAL, CHECK_COMMUTATOR, CHECK_MEMBERSHIP, CHECK_ORDER, CHECK_QUOTIENT,
};
use edbound::{FiniteGroup, GroupElement, DEFAULT_ORDER_CAP};

/// GF(p^k) for k <= 2 with x^2 = x + 1, elements encoded as a + p b.
struct Small {
    p: u32,
    q: u32,
}

impl Small {
    fn new(q: u32) -> Self {
        let p = (2..=q).find(|d| q % d == 0).unwrap();
        assert!(q == p || q == p * p);
        Small { p, q }
    }
    fn split(&self, a: u32) -> (u32, u32) {
        (a % self.p, a / self.p)
    }
    fn join(&self, a: u32, b: u32) -> u32 {
        a % self.p + self.p * (b % self.p)
    }
    fn add(&self, x: u32, y: u32) -> u32 {
        let ((a, b), (c, d)) = (self.split(x), self.split(y));
        self.join(a + c, b + d)
    }
    fn neg(&self, x: u32) -> u32 {
        let (a, b) = self.split(x);
        self.join(self.p - a, self.p - b)
    }
    fn mul(&self, x: u32, y: u32) -> u32 {
        let ((a, b), (c, d)) = (self.split(x), self.split(y));
        self.join(a * c + b * d, a * d + b * c + b * d)
    }
    fn inv(&self, x: u32) -> u32 {
        (1..self.q).find(|&y| self.mul(x, y) == 1).unwrap()
    }
}

fn entries(g: &FiniteGroup) -> BTreeSet<Vec<u32>> {
    g.elements()
        .iter()
        .map(|x| match x {
            GroupElement::Matrix(m) => m.entries().iter().map(|&e| e as u32).collect(),
            _ => panic!("not a matrix group"),
        })
        .collect()
}

#[test]
fn sl2_generators_give_every_determinant_one_matrix() {
    for (name, q) in [("SL(2,5)", 5), ("SL(2,7)", 7), ("SL(2,9)", 9), ("SL(2,11)", 11)] {
        let f = Small::new(q);
        let mut brute = BTreeSet::new();
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    for d in 0..q {
                        if f.add(f.mul(a, d), f.neg(f.mul(b, c))) == 1 {
                            brute.insert(vec![a, b, c, d]);
                        }
                    }
                }
            }
        }
        assert_eq!(brute.len() as u32, q * (q * q - 1));
        assert_eq!(entries(&catalog_group(name)), brute, "{name}");
    }
}

#[test]
fn triple_cover_is_the_hyperoval_stabilizer() {
    let f = Small::new(4);
    let normalize = |v: [u32; 3]| {
        let lead = *v.iter().find(|&&x| x != 0).unwrap();
        let s = f.inv(lead);
        v.map(|x| f.mul(s, x))
    };
    let mut oval: BTreeSet<[u32; 3]> = (0..4).map(|t| [1, t, f.mul(t, t)]).collect();
    oval.insert([0, 0, 1]);
    oval.insert([0, 1, 0]);
    let mut brute = BTreeSet::new();
    let mut m = [0u32; 9];
    for code in 0..4u32.pow(9) {
        let mut c = code;
        for e in m.iter_mut() {
            *e = c % 4;
            c /= 4;
        }
        let det = [(0, 4, 8), (1, 5, 6), (2, 3, 7), (2, 4, 6), (0, 5, 7), (1, 3, 8)]
            .iter()
            .map(|&(a, b, c)| f.mul(f.mul(m[a], m[b]), m[c]))
            .fold(0, |acc, t| f.add(acc, t)); // char 2: signs vanish
        if det != 1 {
            continue;
        }
        let keeps = oval.iter().all(|v| {
            let w: [u32; 3] =
                std::array::from_fn(|r| (0..3).fold(0, |acc, k| f.add(acc, f.mul(m[3 * r + k], v[k]))));
            oval.contains(&normalize(w))
        });
        if keeps {
            brute.insert(m.to_vec());
        }
    }
    assert_eq!(brute.len(), 1080);
    assert_eq!(entries(&catalog_group("3.A6")), brute);
}

#[test]
fn every_shipped_entry_verifies() {
    let cat = Catalog::builtin();
    for entry in &cat.cover {
        let base = cat.build_base(&entry.base, DEFAULT_ORDER_CAP).unwrap();
        let (report, k) = verify_cover(entry, &base, DEFAULT_ORDER_CAP).unwrap();
        for name in [CHECK_MEMBERSHIP, CHECK_ORDER, CHECK_CENTRAL, CHECK_COMMUTATOR, CHECK_QUOTIENT] {
            let c = report.check(name).unwrap();
            assert!(c.passed, "{}: {name}: {}", entry.name, c.detail);
        }
        assert!(report.passed);
        // independent look at the center: M lies in Z(K), element by element
        let m: Vec<GroupElement> = entry.center.iter().map(|c| entry.group.decode_element(c).unwrap()).collect();
        let m = k.subgroup(&m).unwrap();
        assert_eq!(m.order() as u64, entry.multiplier);
        assert!(m.elements().iter().all(|z| k.elements().iter().all(|x| z.mul(x) == x.mul(z))));
        assert_eq!(k.order(), m.order() * base.order());
    }
}

#[test]
fn optional_entries_are_served_only_on_request() {
    let cat = Catalog::builtin();
    let names = |with_optional| {
        let s = cat.covers_of("A6", CoverOptions { with_optional, ..Default::default() }).unwrap();
        assert!(s.rejected.is_empty());
        s.served.iter().map(|c| c.name.clone()).collect::<Vec<_>>()
    };
    assert_eq!(names(false), ["A6", "SL(2,9)"]);
    assert_eq!(names(true), ["A6", "SL(2,9)", "3.A6"]);
}

fn corrupted(name: &str, edit: impl FnOnce(&mut edbound::catalog::CoverEntry)) -> edbound::catalog::VerificationReport {
    let cat = Catalog::builtin();
    let mut entry = cat.cover(name).unwrap().clone();
    edit(&mut entry);
    let base = cat.build_base(&entry.base, DEFAULT_ORDER_CAP).unwrap();
    verify_cover(&entry, &base, DEFAULT_ORDER_CAP).unwrap().0
}

#[test]
fn non_central_subgroup_is_rejected_with_witness() {
    let report = corrupted("SL(2,5)", |e| e.center = vec![vec![1, 1, 0, 1]]);
    assert!(!report.passed);
    let central = report.check(CHECK_CENTRAL).unwrap();
    assert!(!central.passed);
    assert!(central.detail.contains("does not commute"), "{}", central.detail);
    assert!(!report.check(CHECK_ORDER).unwrap().passed);
}

#[test]
fn wrong_multiplier_fails_the_order_check() {
    let report = corrupted("SL(2,7)", |e| e.multiplier = 4);
    assert!(!report.passed);
    assert!(!report.check(CHECK_ORDER).unwrap().passed);
    assert!(report.check(CHECK_CENTRAL).unwrap().passed);
}

#[test]
fn center_generator_outside_the_cover() {
    let report = corrupted("SL(2,5)", |e| e.center = vec![vec![2, 0, 0, 1]]);
    assert!(!report.passed);
    assert!(!report.check(CHECK_MEMBERSHIP).unwrap().passed);
}

#[test]
fn split_extension_fails_the_commutator_check() {
    // A5 x Z2: M central but not inside [K,K]
    let report = corrupted("SL(2,5)", |e| {
        e.group = edbound::GroupDefinition::parse(
            "kind = \"perm\"\ndegree = 7\ngenerators = [[1,2,0,3,4,5,6],[0,1,3,4,2,5,6],[0,1,2,3,4,6,5]]",
        )
        .unwrap();
        e.center = vec![vec![0, 1, 2, 3, 4, 6, 5]];
    });
    assert!(report.check(CHECK_ORDER).unwrap().passed);
    assert!(report.check(CHECK_CENTRAL).unwrap().passed);
    assert!(report.check(CHECK_QUOTIENT).unwrap().passed);
    let c = report.check(CHECK_COMMUTATOR).unwrap();
    assert!(!c.passed && c.detail.contains("not in [K,K]"), "{}", c.detail);
}

#[test]
fn structural_errors_are_caught_at_load() {
    let cat = Catalog::builtin();
    let mut two_maximal = cat.clone();
    let mut extra = two_maximal.cover("SL(2,5)").unwrap().clone();
    extra.name = "other".into();
    two_maximal.cover.push(extra);
    assert_eq!(two_maximal.check().unwrap_err().category(), "duplicate-maximal-cover");

    let mut unknown = cat.clone();
    unknown.cover[0].base = "M24".into();
    assert_eq!(unknown.check().unwrap_err().category(), "unknown-base");

    let mut dup = cat.clone();
    dup.cover[1].name = dup.cover[0].name.to_lowercase();
    assert_eq!(dup.check().unwrap_err().category(), "duplicate-name");

    let mut mismatch = cat.clone();
    let i = mismatch.cover.iter().position(|c| c.maximal).unwrap();
    mismatch.cover[i].multiplier = 3;
    assert_eq!(mismatch.check().unwrap_err().category(), "multiplier-mismatch");
}

#[test]
fn catalog_round_trips_through_toml() {
    let cat = Catalog::builtin();
    assert_eq!(Catalog::parse(&cat.to_toml_string()).unwrap(), cat);
    assert_eq!(cat.base("psl(3,2)").unwrap().name, "PSL27");
    assert_eq!(cat.base("L2(11)").unwrap().name, "PSL211");
}
