//! Finite groups given by generators, fully enumerated.
//!
//! Elements are kept in canonical order (lexicographic on permutation images,
//! row-major on matrix entries) so that class representatives, class order and
//! everything derived from them are reproducible across runs.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::element::{Ambient, GroupElement};
use crate::error::GroupError;

/// Default enumeration cap.
pub const DEFAULT_ORDER_CAP: usize = 250_000;

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    representative: GroupElement,
    rep_index: usize,
    size: usize,
    element_order: u64,
    power_map: BTreeMap<u64, usize>,
    members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn representative(&self) -> &GroupElement {
        &self.representative
    }

    /// Position of the representative in the group's element list.
    pub fn representative_index(&self) -> usize {
        self.rep_index
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn element_order(&self) -> u64 {
        self.element_order
    }

    /// Class index of `representative^p` for every prime `p` dividing the exponent.
    pub fn power_map(&self) -> &BTreeMap<u64, usize> {
        &self.power_map
    }

    /// Element indices of the class, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }
}

#[derive(Debug)]
struct ClassData {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

/// Invariant data used in place of isomorphism testing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInvariants {
    pub order: u64,
    /// Class sizes, ascending.
    pub class_sizes: Vec<u64>,
    /// Number of elements of each order.
    pub element_orders: BTreeMap<u64, u64>,
}

#[derive(Debug)]
pub struct FiniteGroup {
    name: Option<String>,
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    identity: usize,
    classes: OnceLock<ClassData>,
}

/// Membership set over the element indices of a parent group.
struct IndexSubgroup<'a> {
    parent: &'a FiniteGroup,
    member: Vec<bool>,
    list: Vec<usize>,
    gens: Vec<usize>,
}

impl<'a> IndexSubgroup<'a> {
    fn trivial(parent: &'a FiniteGroup) -> Self {
        let mut member = vec![false; parent.order()];
        member[parent.identity] = true;
        Self { parent, member, list: vec![parent.identity], gens: Vec::new() }
    }

    fn contains(&self, x: usize) -> bool {
        self.member[x]
    }

    fn size(&self) -> usize {
        self.list.len()
    }

    /// Adds `x` as a generator and extends the closure incrementally.
    fn add_generator(&mut self, x: usize) {
        if self.member[x] {
            return;
        }
        self.gens.push(x);
        let parent = self.parent;
        let mut queue = Vec::new();
        let xe = &parent.elements[x];
        for &h in &self.list {
            let y = parent.index_of_product(h, xe);
            if !self.member[y] {
                self.member[y] = true;
                queue.push(y);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let y = queue[head];
            head += 1;
            for &g in &self.gens {
                let z = parent.index_of_product(y, &parent.elements[g]);
                if !self.member[z] {
                    self.member[z] = true;
                    queue.push(z);
                }
            }
        }
        self.list.extend(queue);
    }

    fn into_group(self, name: Option<String>) -> FiniteGroup {
        let parent = self.parent;
        let mut idx = self.list;
        idx.sort_unstable();
        let elements: Vec<GroupElement> = idx.iter().map(|&i| parent.elements[i].clone()).collect();
        let mut generators: Vec<GroupElement> =
            self.gens.iter().map(|&i| parent.elements[i].clone()).collect();
        if generators.is_empty() {
            generators.push(parent.elements[parent.identity].clone());
        }
        FiniteGroup::from_sorted_elements(name, generators, elements)
    }
}

impl FiniteGroup {
    /// Enumerates the group generated by `gens` by breadth-first closure.
    pub fn from_generators(gens: Vec<GroupElement>, order_cap: usize) -> Result<Self, GroupError> {
        let first = gens.first().ok_or(GroupError::NoGenerators)?;
        let ambient = first.ambient();
        if let Some(bad) = gens.iter().find(|g| g.ambient() != ambient) {
            return Err(GroupError::IncompatibleGenerators(format!(
                "{} vs {}",
                ambient,
                bad.ambient()
            )));
        }
        let identity = first.identity_like();
        let mut seen: HashMap<GroupElement, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut list = vec![identity];
        let mut head = 0;
        while head < list.len() {
            let x = list[head].clone();
            head += 1;
            for g in &gens {
                let y = x.mul(g);
                if !seen.contains_key(&y) {
                    if list.len() >= order_cap {
                        return Err(GroupError::CapExceeded { cap: order_cap });
                    }
                    seen.insert(y.clone(), ());
                    list.push(y);
                }
            }
        }
        list.sort_unstable();
        Ok(Self::from_sorted_elements(None, gens, list))
    }

    fn from_sorted_elements(
        name: Option<String>,
        generators: Vec<GroupElement>,
        elements: Vec<GroupElement>,
    ) -> Self {
        let index: HashMap<GroupElement, usize> =
            elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let identity = elements.iter().position(|e| e.is_identity()).expect("identity present");
        Self { name, generators, elements, index, identity, classes: OnceLock::new() }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn ambient(&self) -> Ambient {
        self.elements[0].ambient()
    }

    pub fn identity(&self) -> &GroupElement {
        &self.elements[self.identity]
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index.contains_key(g)
    }

    #[inline]
    fn index_of_product(&self, a: usize, b: &GroupElement) -> usize {
        self.index[&self.elements[a].mul(b)]
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> ClassData {
        let n = self.order();
        let conj: Vec<(GroupElement, GroupElement)> =
            self.generators.iter().map(|g| (g.clone(), g.inverse())).collect();
        let mut orbit_id = vec![usize::MAX; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        // ascending scan: the first unassigned element is the minimum of its class
        for start in 0..n {
            if orbit_id[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            orbit_id[start] = id;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let x = &self.elements[orbit[head]];
                head += 1;
                for (g, gi) in &conj {
                    let y = self.index[&x.conjugate_by(g, gi)];
                    if orbit_id[y] == usize::MAX {
                        orbit_id[y] = id;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        let mut keyed: Vec<(u64, usize, Vec<usize>)> = orbits
            .into_iter()
            .map(|o| (self.elements[o[0]].order(), o[0], o))
            .collect();
        keyed.sort_unstable_by_key(|(order, rep, _)| (*order, *rep));
        let mut class_of = vec![0; n];
        for (c, (_, _, members)) in keyed.iter().enumerate() {
            for &m in members {
                class_of[m] = c;
            }
        }
        let exponent = keyed.iter().fold(1u64, |acc, (o, _, _)| lcm(acc, *o));
        let primes = prime_divisors(exponent);
        let classes = keyed
            .into_iter()
            .map(|(element_order, rep_index, members)| {
                let rep = self.elements[rep_index].clone();
                let power_map = primes
                    .iter()
                    .map(|&p| (p, class_of[self.index[&rep.pow(p)]]))
                    .collect();
                ConjugacyClass {
                    representative: rep,
                    rep_index,
                    size: members.len(),
                    element_order,
                    power_map,
                    members,
                }
            })
            .collect();
        ClassData { classes, class_of }
    }

    /// Conjugacy classes: identity first, then by element order and representative.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.class_data().classes
    }

    /// Class index of the element at position `element_index`.
    pub fn class_of_index(&self, element_index: usize) -> usize {
        self.class_data().class_of[element_index]
    }

    pub fn class_of(&self, g: &GroupElement) -> Option<usize> {
        self.index_of(g).map(|i| self.class_of_index(i))
    }

    /// Class index of `rep(class)^exp`.
    pub fn power_class(&self, class: usize, exp: u64) -> usize {
        let rep = &self.conjugacy_classes()[class].representative;
        self.class_of(&rep.pow(exp)).expect("powers stay in the group")
    }

    /// Class index containing the inverses of `class`.
    pub fn inverse_class(&self, class: usize) -> usize {
        let rep = &self.conjugacy_classes()[class].representative;
        self.class_of(&rep.inverse()).expect("inverse stays in the group")
    }

    pub fn exponent(&self) -> u64 {
        self.conjugacy_classes().iter().fold(1, |acc, c| lcm(acc, c.element_order))
    }

    fn subgroup_from_indices(&self, gens: impl IntoIterator<Item = usize>) -> IndexSubgroup<'_> {
        let mut h = IndexSubgroup::trivial(self);
        for g in gens {
            h.add_generator(g);
        }
        h
    }

    /// Subgroup generated by the given elements of this group.
    pub fn subgroup(&self, gens: &[GroupElement]) -> Result<FiniteGroup, GroupError> {
        let idx = gens
            .iter()
            .map(|g| self.index_of(g).ok_or_else(|| GroupError::NotAMember(format!("{g:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.subgroup_from_indices(idx).into_group(None))
    }

    fn normal_closure_indices(&self, seeds: impl IntoIterator<Item = usize>) -> IndexSubgroup<'_> {
        let conj: Vec<(GroupElement, GroupElement)> =
            self.generators.iter().map(|g| (g.clone(), g.inverse())).collect();
        let mut h = self.subgroup_from_indices(seeds);
        let mut checked = 0;
        // each generator of H is conjugated by each generator of G exactly once
        while checked < h.gens.len() && h.size() < self.order() {
            let x = self.elements[h.gens[checked]].clone();
            checked += 1;
            for (g, gi) in &conj {
                let y = self.index[&x.conjugate_by(g, gi)];
                if !h.contains(y) {
                    h.add_generator(y);
                }
            }
        }
        h
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[GroupElement]) -> Result<FiniteGroup, GroupError> {
        let idx = gens
            .iter()
            .map(|g| self.index_of(g).ok_or_else(|| GroupError::NotAMember(format!("{g:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.normal_closure_indices(idx).into_group(None))
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> FiniteGroup {
        let central = (0..self.order()).filter(|&i| {
            let x = &self.elements[i];
            self.generators.iter().all(|g| x.mul(g) == g.mul(x))
        });
        let mut h = IndexSubgroup::trivial(self);
        for i in central {
            h.add_generator(i);
        }
        h.into_group(self.name.as_ref().map(|n| format!("Z({n})")))
    }

    /// Normal closure of the commutators of generator pairs.
    pub fn commutator_subgroup(&self) -> FiniteGroup {
        let mut seeds = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                seeds.push(self.index[&a.commutator(b)]);
            }
        }
        self.normal_closure_indices(seeds)
            .into_group(self.name.as_ref().map(|n| format!("[{n},{n}]")))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// True iff no proper nontrivial normal subgroup exists.
    pub fn is_simple(&self) -> Result<bool, GroupError> {
        if self.order() < 2 {
            return Err(GroupError::TrivialGroup);
        }
        let n = self.order();
        for class in self.conjugacy_classes().iter().skip(1) {
            if self.normal_closure_indices([class.rep_index]).size() != n {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks `g n g^-1 ∈ N` for generators only, plus membership of N's generators.
    pub fn is_normal_subgroup(&self, n: &FiniteGroup) -> Result<(), GroupError> {
        for x in n.generators() {
            if !self.contains(x) {
                return Err(GroupError::NotAMember(format!("{x:?}")));
            }
        }
        for g in &self.generators {
            let gi = g.inverse();
            for x in n.generators() {
                let y = x.conjugate_by(g, &gi);
                if !n.contains(&y) {
                    return Err(GroupError::NotNormal(format!(
                        "conjugate of {x:?} by {g:?} leaves the subgroup"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn invariants(&self) -> ClassInvariants {
        let mut class_sizes: Vec<u64> =
            self.conjugacy_classes().iter().map(|c| c.size as u64).collect();
        class_sizes.sort_unstable();
        let mut element_orders = BTreeMap::new();
        for c in self.conjugacy_classes() {
            *element_orders.entry(c.element_order).or_insert(0) += c.size as u64;
        }
        ClassInvariants { order: self.order() as u64, class_sizes, element_orders }
    }

    /// Invariant data of `self / n`, computed on cosets.
    pub fn quotient_class_data(&self, n: &FiniteGroup) -> Result<ClassInvariants, GroupError> {
        self.is_normal_subgroup(n)?;
        let order = self.order();
        let n_elems: Vec<&GroupElement> = n.elements().iter().collect();
        let mut coset_of = vec![usize::MAX; order];
        let mut coset_reps = Vec::new();
        for g in 0..order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = coset_reps.len();
            coset_reps.push(g);
            for x in &n_elems {
                coset_of[self.index_of_product(g, x)] = id;
            }
        }
        let m = coset_reps.len();
        let conj: Vec<(GroupElement, GroupElement)> =
            self.generators.iter().map(|g| (g.clone(), g.inverse())).collect();
        let mut class_id = vec![usize::MAX; m];
        let mut class_sizes = Vec::new();
        let mut element_orders = BTreeMap::new();
        let identity_coset = coset_of[self.identity];
        for start in 0..m {
            if class_id[start] != usize::MAX {
                continue;
            }
            let id = class_sizes.len();
            class_id[start] = id;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let x = &self.elements[coset_reps[orbit[head]]];
                head += 1;
                for (g, gi) in &conj {
                    let y = coset_of[self.index[&x.conjugate_by(g, gi)]];
                    if class_id[y] == usize::MAX {
                        class_id[y] = id;
                        orbit.push(y);
                    }
                }
            }
            let rep = &self.elements[coset_reps[start]];
            let mut x = rep.clone();
            let mut ord = 1u64;
            while coset_of[self.index[&x]] != identity_coset {
                x = x.mul(rep);
                ord += 1;
            }
            class_sizes.push(orbit.len() as u64);
            *element_orders.entry(ord).or_insert(0) += orbit.len() as u64;
        }
        class_sizes.sort_unstable();
        Ok(ClassInvariants { order: m as u64, class_sizes, element_orders })
    }

    /// Number of elements `g` with `g^2 = 1`.
    pub fn count_square_roots_of_identity(&self) -> usize {
        self.elements.iter().filter(|g| g.mul(g).is_identity()).count()
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
