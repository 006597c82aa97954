//! Finite permutation groups with full element enumeration.
//!
//! Elements are sorted by one-line notation, so every element has a stable
//! index and the identity is always index 0. Subgroups and homomorphisms are
//! expressed through these indices.

use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::Perm;

pub const DEFAULT_ORDER_CAP: usize = 20_000;
pub const SUBGROUP_CANDIDATE_CAP: usize = 100_000;
const TABLE_LIMIT: usize = 2048;

#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<usize>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    table: Option<Vec<u32>>,
    inverses: Vec<usize>,
    orders: Vec<usize>,
    names: Vec<(String, usize)>,
    id: u64,
    classes: OnceLock<ConjugacyClasses>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Conjugacy classes ordered by (order of representative, least element index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClasses {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// A subgroup given by its sorted member indices in some ambient group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn position(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }
}

/// A homomorphism out of a subgroup of a source group, stored as a full
/// element map aligned with `domain.members()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupHom {
    domain: Subgroup,
    images: Vec<usize>,
}

impl GroupHom {
    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.domain.position(x).map(|i| self.images[i])
    }

    pub fn is_injective(&self) -> bool {
        let set: HashSet<_> = self.images.iter().collect();
        set.len() == self.images.len()
    }

    pub fn image_members(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn kernel(&self, identity: usize) -> Vec<usize> {
        self.domain
            .members
            .iter()
            .zip(&self.images)
            .filter(|(_, &y)| y == identity)
            .map(|(&x, _)| x)
            .collect()
    }
}

impl FiniteGroup {
    pub fn build(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        Self::build_with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn build_with_cap(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Invalid("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch);
            }
        }
        let identity = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&x);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::OrderCapExceeded(cap));
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        let index: HashMap<Perm, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    t[i * n + j] = index[&elements[i].compose(&elements[j])] as u32;
                }
            }
            t
        });
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let gen_idx = generators.iter().map(|g| index[g]).collect();
        let mut hasher = DefaultHasher::new();
        degree.hash(&mut hasher);
        elements.hash(&mut hasher);
        let id = hasher.finish();
        let mut group = FiniteGroup {
            degree,
            generators: gen_idx,
            elements,
            index,
            table,
            inverses,
            orders: Vec::new(),
            names: Vec::new(),
            id,
            classes: OnceLock::new(),
        };
        group.orders = (0..n).map(|i| group.compute_order(i)).collect();
        Ok(group)
    }

    fn compute_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(x, y);
            k += 1;
        }
        k
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Identifier derived from the element set; equal groups share it.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let n = self.orders[a] as i64;
        let k = k.rem_euclid(n);
        let mut y = 0;
        for _ in 0..k {
            y = self.mul(a, y);
        }
        y
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverses[g])
    }

    /// `a⁻¹ b⁻¹ a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ia = self.inverses[a];
        let ib = self.inverses[b];
        self.mul(self.mul(ia, ib), self.mul(a, b))
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.orders[x]
    }

    pub fn exponent(&self) -> usize {
        self.orders
            .iter()
            .fold(1usize, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn names(&self) -> &[(String, usize)] {
        &self.names
    }

    pub fn named(&self, name: &str) -> Option<usize> {
        self.names.iter().find(|(n, _)| n == name).map(|(_, x)| *x)
    }

    pub fn set_name(&mut self, name: &str, x: usize) {
        self.names.retain(|(n, _)| n != name);
        self.names.push((name.to_string(), x));
    }

    /// The prime `p` when the order is a power of `p` (the trivial group
    /// yields `None`).
    pub fn prime(&self) -> Option<u64> {
        let n = self.order() as u64;
        if n < 2 {
            return None;
        }
        let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
        let mut m = n;
        while m.is_multiple_of(p) {
            m /= p;
        }
        (m == 1).then_some(p)
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![usize::MAX; n];
            let mut raw: Vec<Vec<usize>> = Vec::new();
            for x in 0..n {
                if class_of[x] != usize::MAX {
                    continue;
                }
                let id = raw.len();
                let mut class = vec![x];
                class_of[x] = id;
                let mut k = 0;
                while k < class.len() {
                    let y = class[k];
                    for &g in &self.generators {
                        let z = self.conj(g, y);
                        if class_of[z] == usize::MAX {
                            class_of[z] = id;
                            class.push(z);
                        }
                    }
                    k += 1;
                }
                class.sort_unstable();
                raw.push(class);
            }
            raw.sort_by_key(|c| (self.orders[c[0]], c[0]));
            let mut class_of = vec![0; n];
            for (i, c) in raw.iter().enumerate() {
                for &x in c {
                    class_of[x] = i;
                }
            }
            ConjugacyClasses {
                classes: raw,
                class_of,
            }
        })
    }

    /// Closure of a set of elements; the generator list is kept as given
    /// (minus duplicates and the identity).
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut generators: Vec<usize> = Vec::new();
        for &g in gens {
            if g != 0 && !generators.contains(&g) {
                generators.push(g);
            }
        }
        let members = self.closure(&generators);
        Subgroup {
            members,
            generators,
        }
    }

    fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut members = vec![0];
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            for &g in gens {
                let y = self.mul(g, x);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        members
    }

    /// Builds a subgroup from a member set, choosing generators greedily.
    pub fn subgroup_from_members(&self, members: &[usize]) -> Result<Subgroup> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut generators = Vec::new();
        let mut current = vec![0usize];
        for &x in &sorted {
            if current.binary_search(&x).is_err() {
                generators.push(x);
                current = self.closure(&generators);
            }
        }
        if current != sorted {
            return Err(Error::NotASubgroup);
        }
        Ok(Subgroup {
            members: sorted,
            generators,
        })
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order()).collect(),
            generators: self.generators.clone(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            members: vec![0],
            generators: Vec::new(),
        }
    }

    /// Every subgroup, sorted by (order, member list).
    ///
    /// Cyclic subgroups are generated first; joins of pairs are then added
    /// until no new subgroup appears.
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        self.all_subgroups_with_cap(SUBGROUP_CANDIDATE_CAP)
    }

    pub fn all_subgroups_with_cap(&self, cap: usize) -> Result<Vec<Subgroup>> {
        let mut known: HashSet<Vec<usize>> = HashSet::new();
        let mut all: Vec<Subgroup> = Vec::new();
        for x in 0..self.order() {
            let h = self.subgroup_generated(&[x]);
            if known.insert(h.members.clone()) {
                all.push(h);
            }
        }
        let mut frontier: Vec<usize> = (0..all.len()).collect();
        let mut candidates = 0usize;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &fi in &frontier {
                for hi in 0..all.len() {
                    let (h, k) = (&all[hi], &all[fi]);
                    if h.is_subset_of(k) || k.is_subset_of(h) {
                        continue;
                    }
                    candidates += 1;
                    if candidates > cap {
                        return Err(Error::SubgroupEnumerationCapExceeded(cap));
                    }
                    let mut gens = h.generators.clone();
                    gens.extend(k.generators.iter().filter(|g| !h.contains(**g)));
                    let j = self.subgroup_generated(&gens);
                    if known.insert(j.members.clone()) {
                        next.push(j);
                    }
                }
            }
            frontier = (all.len()..all.len() + next.len()).collect();
            all.extend(next);
        }
        all.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.members.cmp(&b.members))
        });
        Ok(all)
    }

    pub fn centralizer(&self, p: &Subgroup) -> Subgroup {
        let gens = if p.generators.is_empty() && p.order() > 1 {
            p.members.clone()
        } else {
            p.generators.clone()
        };
        let members: Vec<usize> = (0..self.order())
            .filter(|&g| gens.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        self.subgroup_from_members(&members)
            .expect("centralizer is a subgroup")
    }

    pub fn normalizer(&self, p: &Subgroup) -> Subgroup {
        let gens = if p.generators.is_empty() && p.order() > 1 {
            p.members.clone()
        } else {
            p.generators.clone()
        };
        let members: Vec<usize> = (0..self.order())
            .filter(|&g| gens.iter().all(|&x| p.contains(self.conj(g, x))))
            .collect();
        self.subgroup_from_members(&members)
            .expect("normalizer is a subgroup")
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.whole())
    }

    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        let mut comms: Vec<usize> = Vec::new();
        for &x in &h.members {
            for &y in &h.members {
                let c = self.commutator(x, y);
                if !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        let members = self.closure(&comms);
        self.subgroup_from_members(&members)
            .expect("derived subgroup is a subgroup")
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators
            .iter()
            .all(|&g| h.generators.iter().all(|&x| h.contains(self.conj(g, x))))
    }

    /// The subgroup as a group in its own right (same degree) together with
    /// the embedding from its element indices into this group.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<usize>) {
        let gens: Vec<Perm> = h
            .generators
            .iter()
            .map(|&g| self.elements[g].clone())
            .collect();
        let sub = FiniteGroup::build_with_cap(self.degree, gens, usize::MAX)
            .expect("subgroup of a valid group");
        let embedding = sub.elements.iter().map(|p| self.index[p]).collect();
        (sub, embedding)
    }

    /// Evaluates a word given as (element, exponent) pairs.
    pub fn evaluate(&self, word: &[(usize, i64)]) -> usize {
        word.iter()
            .fold(0, |acc, &(x, k)| self.mul(acc, self.pow(x, k)))
    }
}

/// Extends `gen_images` (one per generator of `domain`) to a homomorphism
/// `domain -> dst`, checking the homomorphism property on every pair.
pub fn make_hom(
    src: &FiniteGroup,
    domain: &Subgroup,
    gen_images: &[usize],
    dst: &FiniteGroup,
    require_injective: bool,
) -> Result<GroupHom> {
    let gens = domain.generators();
    if gens.len() != gen_images.len() {
        return Err(Error::NotAHomomorphism(format!(
            "{} generators but {} images",
            gens.len(),
            gen_images.len()
        )));
    }
    let mut map: HashMap<usize, usize> = HashMap::with_capacity(domain.order());
    map.insert(0, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let fx = map[&x];
        for (&g, &img) in gens.iter().zip(gen_images) {
            let y = src.mul(g, x);
            let fy = dst.mul(img, fx);
            match map.get(&y) {
                Some(&prev) if prev != fy => {
                    return Err(Error::NotAHomomorphism(format!(
                        "element {} receives two images",
                        src.element(y)
                    )))
                }
                Some(_) => {}
                None => {
                    map.insert(y, fy);
                    queue.push_back(y);
                }
            }
        }
    }
    if map.len() != domain.order() {
        return Err(Error::DomainNotSubgroup);
    }
    let images: Vec<usize> = domain.members().iter().map(|x| map[x]).collect();
    let hom = GroupHom {
        domain: domain.clone(),
        images,
    };
    if domain.order() <= 512 {
        for (i, &x) in domain.members().iter().enumerate() {
            for (j, &y) in domain.members().iter().enumerate() {
                let xy = src.mul(x, y);
                let lhs = hom.apply(xy).ok_or(Error::DomainNotSubgroup)?;
                if lhs != dst.mul(hom.images[i], hom.images[j]) {
                    return Err(Error::NotAHomomorphism("product not preserved".into()));
                }
            }
        }
    }
    if require_injective && !hom.is_injective() {
        return Err(Error::NotInjective);
    }
    Ok(hom)
}

/// Builds a homomorphism directly from a full element map, validating it.
pub fn hom_from_map(
    src: &FiniteGroup,
    domain: &Subgroup,
    images: Vec<usize>,
    dst: &FiniteGroup,
) -> Result<GroupHom> {
    if images.len() != domain.order() {
        return Err(Error::NotAHomomorphism(
            "map length differs from domain".into(),
        ));
    }
    let hom = GroupHom {
        domain: domain.clone(),
        images,
    };
    for (i, &x) in domain.members().iter().enumerate() {
        for &g in domain.generators() {
            let gx = src.mul(g, x);
            let lhs = hom.apply(gx).ok_or(Error::DomainNotSubgroup)?;
            let gi = hom.apply(g).ok_or(Error::DomainNotSubgroup)?;
            if lhs != dst.mul(gi, hom.images[i]) {
                return Err(Error::NotAHomomorphism("product not preserved".into()));
            }
        }
    }
    Ok(hom)
}

/// The extraspecial group of order p³ and exponent p, realized as the
/// Heisenberg group acting on the p² cosets of ⟨a⟩. Elements `a`, `b` and
/// `c = [a, b]` are named; `a` and `b` are the generators.
pub fn extraspecial_p3(p: u64) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::EvenPrime(p));
    }
    let p = p as usize;
    let n = p * p;
    let point = |y: usize, z: usize| (y % p) * p + (z % p);
    let mut a = vec![0u32; n];
    let mut b = vec![0u32; n];
    let mut c = vec![0u32; n];
    for y in 0..p {
        for z in 0..p {
            let here = point(y, z);
            a[here] = point(y, z + y) as u32;
            b[here] = point(y + 1, z) as u32;
            c[here] = point(y, z + 1) as u32;
        }
    }
    let (a, b, c) = (
        Perm::from_images(a)?,
        Perm::from_images(b)?,
        Perm::from_images(c)?,
    );
    let mut g = FiniteGroup::build(n, vec![a.clone(), b.clone()])?;
    let (ai, bi, ci) = (
        g.index_of(&a).expect("generator"),
        g.index_of(&b).expect("generator"),
        g.index_of(&c).expect("in group"),
    );
    g.set_name("a", ai);
    g.set_name("b", bi);
    g.set_name("c", ci);
    Ok(g)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteGroup {
        let images: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
        FiniteGroup::build(n, vec![Perm::from_images(images).unwrap()]).unwrap()
    }

    fn klein() -> FiniteGroup {
        FiniteGroup::build(
            4,
            vec![
                Perm::parse_cycles("(1 2)(3 4)", 4).unwrap(),
                Perm::parse_cycles("(1 3)(2 4)", 4).unwrap(),
            ],
        )
        .unwrap()
    }

    pub(crate) fn quaternion() -> FiniteGroup {
        FiniteGroup::build(
            8,
            vec![
                Perm::parse_cycles("(1 2 5 6)(3 4 7 8)", 8).unwrap(),
                Perm::parse_cycles("(1 3 5 7)(2 8 6 4)", 8).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn small_groups_have_expected_orders() {
        assert_eq!(cyclic(7).order(), 7);
        assert_eq!(klein().order(), 4);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(klein().identity(), 0);
        assert!(klein().element(0).is_identity());
    }

    #[test]
    fn order_cap_is_enforced() {
        let s5 = vec![
            Perm::parse_cycles("(1 2 3 4 5)", 5).unwrap(),
            Perm::parse_cycles("(1 2)", 5).unwrap(),
        ];
        assert_eq!(
            FiniteGroup::build_with_cap(5, s5, 100).unwrap_err(),
            Error::OrderCapExceeded(100)
        );
    }

    #[test]
    fn extraspecial_structure() {
        let g = extraspecial_p3(7).unwrap();
        assert_eq!(g.order(), 343);
        assert_eq!(g.degree(), 49);
        let (a, b, c) = (
            g.named("a").unwrap(),
            g.named("b").unwrap(),
            g.named("c").unwrap(),
        );
        assert_eq!(g.commutator(a, b), c);
        let z = g.center();
        assert_eq!(z.order(), 7);
        assert!(z.contains(c));
        assert_eq!(g.derived_subgroup(&g.whole()).members(), z.members());
        assert!((1..g.order()).all(|x| g.element_order(x) == 7));

        let g3 = extraspecial_p3(3).unwrap();
        assert_eq!(g3.order(), 27);
        assert_eq!(g3.exponent(), 3);
        assert_eq!(extraspecial_p3(2).unwrap_err(), Error::EvenPrime(2));
        assert_eq!(extraspecial_p3(9).unwrap_err(), Error::NotPrime(9));
    }

    #[test]
    fn conjugacy_classes_of_examples() {
        let v = klein();
        assert_eq!(v.conjugacy_classes().len(), 4);

        let q = quaternion();
        let cl = q.conjugacy_classes();
        assert_eq!(cl.sizes(), vec![1, 1, 2, 2, 2]);

        let g = extraspecial_p3(7).unwrap();
        let cl = g.conjugacy_classes();
        assert_eq!(cl.len(), 55);
        assert_eq!(cl.sizes().iter().filter(|&&s| s == 1).count(), 7);
        assert_eq!(cl.sizes().iter().filter(|&&s| s == 7).count(), 48);
        let z = g.center();
        for (i, c) in cl.classes.iter().enumerate() {
            assert_eq!(c.len() == 1, z.contains(c[0]), "class {i}");
            assert_eq!(g.order() % c.len(), 0);
        }
        assert_eq!(cl.sizes().iter().sum::<usize>(), g.order());
    }

    #[test]
    fn subgroup_lattices() {
        let z7 = cyclic(7);
        assert_eq!(z7.all_subgroups().unwrap().len(), 2);

        let g = extraspecial_p3(7).unwrap();
        let subs = g.all_subgroups().unwrap();
        for h in &subs {
            assert_eq!(g.order() % h.order(), 0);
        }
        let order49: Vec<_> = subs.iter().filter(|h| h.order() == 49).collect();
        assert_eq!(order49.len(), 8);
        let c = g.named("c").unwrap();
        for h in &order49 {
            assert!(h.contains(c));
            // elementary abelian: abelian and exponent 7
            assert!(h
                .members()
                .iter()
                .all(|&x| h.members().iter().all(|&y| g.mul(x, y) == g.mul(y, x))));
        }
        assert_eq!(subs.iter().filter(|h| h.order() == 7).count(), 57);
        assert_eq!(subs.len(), 1 + 57 + 8 + 1);
    }

    #[test]
    fn centralizers_and_normalizers() {
        let q = quaternion();
        let i = q
            .index_of(&Perm::parse_cycles("(1 2 5 6)(3 4 7 8)", 8).unwrap())
            .unwrap();
        let h = q.subgroup_generated(&[i]);
        assert_eq!(q.centralizer(&h).order(), 4);
        assert_eq!(q.normalizer(&h).order(), 8);
        assert_eq!(q.center().order(), 2);
    }

    #[test]
    fn homomorphisms() {
        let g = extraspecial_p3(7).unwrap();
        let (a, b, c) = (
            g.named("a").unwrap(),
            g.named("b").unwrap(),
            g.named("c").unwrap(),
        );
        let s = g.whole();
        let a2 = g.pow(a, 2);
        let b4 = g.pow(b, 4);
        let hom = make_hom(&g, &s, &[a2, b4], &g, true).unwrap();
        // det [[2,0],[0,4]] = 8 = 1 mod 7
        assert_eq!(hom.apply(c), Some(c));

        let id = make_hom(&g, &s, &[a, b], &g, true).unwrap();
        assert!(s.members().iter().all(|&x| id.apply(x) == Some(x)));

        // S is free in the variety of exponent-7 class-2 groups, so any images
        // extend; collapsing onto ⟨b⟩ is a homomorphism that kills c.
        let collapse = make_hom(&g, &s, &[b, b], &g, false).unwrap();
        assert_eq!(collapse.apply(c), Some(0));
        assert_eq!(
            make_hom(&g, &s, &[b, b], &g, true).unwrap_err(),
            Error::NotInjective
        );

        let z7 = cyclic(7);
        let v = klein();
        assert!(matches!(
            make_hom(&z7, &z7.whole(), &[1], &v, false),
            Err(Error::NotAHomomorphism(_))
        ));
    }
}
