//! Fusion systems generated by S-conjugation and a list of injective
//! homomorphisms between subgroups of S.
//!
//! Every morphism of a generated fusion system is a composite of restrictions
//! of generators, their inverses and conjugations. Morphisms out of a fixed
//! subgroup P are therefore found by a breadth-first search that
//! post-composes with these elementary maps whenever the current image lies
//! in their domain. A morphism out of P is stored as the images of P's
//! generators.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::group::{make_hom, FiniteGroup, GroupHom, Subgroup};
use crate::perm::Perm;

type RestrictionCache = HashMap<(Vec<usize>, Vec<usize>), HashSet<Vec<usize>>>;

pub const DEFAULT_MORPHISM_CAP: usize = 1_000_000;
pub const DEFAULT_SATURATION_CAP: usize = 128;

const NONE: u32 = u32::MAX;

/// Element F-classes ordered by least element index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementClasses {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl ElementClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub struct FusionSystem {
    group: Arc<FiniteGroup>,
    generators: Vec<GroupHom>,
    elementary: Vec<Vec<u32>>,
    classes: OnceLock<ElementClasses>,
}

impl std::fmt::Debug for FusionSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FusionSystem")
            .field("group", &self.group)
            .field("generators", &self.generators.len())
            .finish()
    }
}

/// Aut_F(P) realized as permutations of P's members (by position).
pub struct AutGroup {
    pub group: FiniteGroup,
    pub inner: Subgroup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationOptions {
    pub cap: usize,
    /// Allows groups above `cap`.
    pub extended: bool,
    /// Restricts the axiom checks to these subgroups.
    pub family: Option<Vec<Subgroup>>,
    pub morphism_cap: usize,
}

impl Default for SaturationOptions {
    fn default() -> Self {
        SaturationOptions {
            cap: DEFAULT_SATURATION_CAP,
            extended: false,
            family: None,
            morphism_cap: DEFAULT_MORPHISM_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SaturationReport {
    pub ok: bool,
    pub subgroups_checked: usize,
    pub morphisms_checked: usize,
    pub violations: Vec<String>,
}

/// F-isomorphisms between members of a family of subgroups.
#[derive(Debug, Clone)]
pub struct MorphismSet {
    pub family: Vec<Subgroup>,
    /// `(i, j)` ↦ images of `family[i]`'s generators under each isomorphism
    /// onto `family[j]`.
    pub isomorphisms: HashMap<(usize, usize), Vec<Vec<usize>>>,
}

impl MorphismSet {
    pub fn between(&self, i: usize, j: usize) -> &[Vec<usize>] {
        self.isomorphisms.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    pub fn automorphisms(&self, i: usize) -> &[Vec<usize>] {
        self.between(i, i)
    }
}

impl FusionSystem {
    pub fn new(group: Arc<FiniteGroup>, generators: Vec<GroupHom>) -> Result<Self> {
        let n = group.order();
        let mut elementary = Vec::new();
        for hom in &generators {
            let dom = hom.domain();
            if dom.members().iter().any(|&x| x >= n) || dom.members().first() != Some(&0) {
                return Err(Error::DomainNotSubgroup);
            }
            if !hom.is_injective() {
                return Err(Error::NotInjective);
            }
            let mut fwd = vec![NONE; n];
            let mut bwd = vec![NONE; n];
            for (&x, &y) in dom.members().iter().zip(hom.images()) {
                fwd[x] = y as u32;
                bwd[y] = x as u32;
            }
            elementary.push(fwd);
            elementary.push(bwd);
        }
        for &g in group.generators() {
            let gi = group.inv(g);
            elementary.push((0..n).map(|x| group.conj(g, x) as u32).collect());
            elementary.push((0..n).map(|x| group.conj(gi, x) as u32).collect());
        }
        Ok(FusionSystem {
            group,
            generators,
            elementary,
            classes: OnceLock::new(),
        })
    }

    /// The inner fusion system F_S(S).
    pub fn inner(group: Arc<FiniteGroup>) -> Self {
        Self::new(group, Vec::new()).expect("no generators to validate")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<FiniteGroup> {
        Arc::clone(&self.group)
    }

    pub fn generators(&self) -> &[GroupHom] {
        &self.generators
    }

    pub fn element_classes(&self) -> &ElementClasses {
        self.classes.get_or_init(|| {
            let n = self.group.order();
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(parent: &mut [usize], mut x: usize) -> usize {
                while parent[x] != x {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                x
            }
            for map in &self.elementary {
                for (x, &y) in map.iter().enumerate() {
                    if y != NONE {
                        let (a, b) = (find(&mut parent, x), find(&mut parent, y as usize));
                        if a != b {
                            // keep the smaller index as root
                            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                            parent[hi] = lo;
                        }
                    }
                }
            }
            let mut index_of_root = HashMap::new();
            let mut classes: Vec<Vec<usize>> = Vec::new();
            let mut class_of = vec![0; n];
            for x in 0..n {
                let r = find(&mut parent, x);
                let id = *index_of_root.entry(r).or_insert_with(|| {
                    classes.push(Vec::new());
                    classes.len() - 1
                });
                classes[id].push(x);
                class_of[x] = id;
            }
            ElementClasses { classes, class_of }
        })
    }

    /// All morphisms `P → S` in F, as images of `p.generators()`.
    pub fn homs_from(&self, p: &Subgroup, cap: usize) -> Result<Vec<Vec<usize>>> {
        let start: Vec<usize> = p.generators().to_vec();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
        let mut out = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(cur) = queue.pop_front() {
            for map in &self.elementary {
                if cur.iter().any(|&x| map[x] == NONE) {
                    continue;
                }
                let next: Vec<usize> = cur.iter().map(|&x| map[x] as usize).collect();
                if seen.insert(next.clone()) {
                    if out.len() >= cap {
                        return Err(Error::MorphismCapExceeded(cap));
                    }
                    out.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(out)
    }

    /// Extends generator images of P to a full map aligned with `p.members()`.
    pub fn full_map(&self, p: &Subgroup, images: &[usize]) -> Vec<usize> {
        let g = &self.group;
        let mut map = vec![usize::MAX; p.order()];
        map[0] = 0;
        let mut queue = vec![0usize];
        let mut k = 0;
        while k < queue.len() {
            let pos = queue[k];
            let x = p.members()[pos];
            for (&gen, &img) in p.generators().iter().zip(images) {
                let y = p.position(g.mul(gen, x)).expect("closed subgroup");
                if map[y] == usize::MAX {
                    map[y] = g.mul(img, map[pos]);
                    queue.push(y);
                }
            }
            k += 1;
        }
        map
    }

    pub fn image(&self, images: &[usize]) -> Subgroup {
        self.group.subgroup_generated(images)
    }

    /// Aut_F(P), as images of `p.generators()`.
    pub fn automorphisms(&self, p: &Subgroup, cap: usize) -> Result<Vec<Vec<usize>>> {
        Ok(self
            .homs_from(p, cap)?
            .into_iter()
            .filter(|imgs| imgs.iter().all(|&x| p.contains(x)))
            .collect())
    }

    /// The distinct F-conjugates of P (P itself first).
    pub fn conjugates(&self, p: &Subgroup, cap: usize) -> Result<Vec<Subgroup>> {
        let mut seen: HashSet<Vec<usize>> = HashSet::from([p.members().to_vec()]);
        let mut out = vec![p.clone()];
        for imgs in self.homs_from(p, cap)? {
            if imgs.iter().all(|&x| p.contains(x)) {
                continue;
            }
            let q = self.image(&imgs);
            if seen.insert(q.members().to_vec()) {
                out.push(q);
            }
        }
        Ok(out)
    }

    pub fn contains_morphism(&self, p: &Subgroup, images: &[usize], cap: usize) -> Result<bool> {
        Ok(self.homs_from(p, cap)?.iter().any(|m| m == images))
    }

    /// P is centric when every F-conjugate contains its S-centralizer.
    pub fn is_centric(&self, p: &Subgroup) -> Result<bool> {
        for q in self.conjugates(p, DEFAULT_MORPHISM_CAP)? {
            if !self.group.centralizer(&q).is_subset_of(&q) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn aut_group(&self, p: &Subgroup) -> Result<AutGroup> {
        let g = &self.group;
        let degree = p.order();
        let perm_of = |images: &[usize]| -> Perm {
            let full = self.full_map(p, images);
            Perm::from_images(
                full.iter()
                    .map(|&y| p.position(y).expect("automorphism") as u32)
                    .collect(),
            )
            .expect("bijection")
        };
        let auts = self.automorphisms(p, DEFAULT_MORPHISM_CAP)?;
        let gens: Vec<Perm> = auts.iter().map(|a| perm_of(a)).collect();
        let group = FiniteGroup::build_with_cap(degree, gens, usize::MAX)?;
        let inner_gens: Vec<usize> = p
            .generators()
            .iter()
            .map(|&x| {
                let imgs: Vec<usize> = p.generators().iter().map(|&y| g.conj(x, y)).collect();
                group
                    .index_of(&perm_of(&imgs))
                    .expect("inner automorphism in Aut_F")
            })
            .collect();
        let inner = group.subgroup_generated(&inner_gens);
        Ok(AutGroup { group, inner })
    }

    /// P is radical when O_p(Aut_F(P)) = Inn(P), i.e. Out_F(P) has no
    /// nontrivial normal p-subgroup.
    pub fn is_radical(&self, p: &Subgroup) -> Result<bool> {
        let prime = match self.group.prime() {
            Some(q) => q as usize,
            None => return Ok(true),
        };
        let aut = self.aut_group(p)?;
        let op = largest_normal_p_subgroup(&aut.group, &aut.inner, prime);
        Ok(op.order() == aut.inner.order())
    }

    fn normalizer_order(&self, p: &Subgroup) -> usize {
        self.group.normalizer(p).order()
    }

    fn centralizer_order(&self, p: &Subgroup) -> usize {
        self.group.centralizer(p).order()
    }

    pub fn is_fully_normalized(&self, p: &Subgroup) -> Result<bool> {
        let n = self.normalizer_order(p);
        Ok(self
            .conjugates(p, DEFAULT_MORPHISM_CAP)?
            .iter()
            .all(|q| self.normalizer_order(q) <= n))
    }

    pub fn is_fully_centralized(&self, p: &Subgroup) -> Result<bool> {
        let c = self.centralizer_order(p);
        Ok(self
            .conjugates(p, DEFAULT_MORPHISM_CAP)?
            .iter()
            .all(|q| self.centralizer_order(q) <= c))
    }

    /// Checks axioms (I) and (II) over every subgroup (or the given family).
    pub fn check_saturation(&self, opts: &SaturationOptions) -> Result<SaturationReport> {
        let g = &self.group;
        if g.order() > opts.cap && !opts.extended {
            return Err(Error::SaturationCapExceeded(g.order(), opts.cap));
        }
        let prime = g.prime().unwrap_or(1) as usize;
        let subgroups = match &opts.family {
            Some(f) => f.clone(),
            None => g.all_subgroups()?,
        };
        let mut violations = Vec::new();
        let mut morphisms_checked = 0;
        let mut restriction_cache: RestrictionCache = HashMap::new();
        for p in &subgroups {
            let label = describe(g, p);
            let homs = self.homs_from(p, opts.morphism_cap)?;
            let mut conj: Vec<Subgroup> = Vec::new();
            let mut seen = HashSet::new();
            for imgs in &homs {
                let q = self.image(imgs);
                if seen.insert(q.members().to_vec()) {
                    conj.push(q);
                }
            }
            let n_p = self.normalizer_order(p);
            let c_p = self.centralizer_order(p);
            let fully_normalized = conj.iter().all(|q| self.normalizer_order(q) <= n_p);
            let fully_centralized = conj.iter().all(|q| self.centralizer_order(q) <= c_p);
            if fully_normalized {
                if !fully_centralized {
                    violations.push(format!(
                        "(I) {label} is fully normalized but not fully centralized"
                    ));
                }
                let aut_f = homs
                    .iter()
                    .filter(|i| i.iter().all(|&x| p.contains(x)))
                    .count();
                let aut_s = n_p / c_p;
                if aut_s != p_part(aut_f, prime) {
                    violations.push(format!(
                        "(I) {label}: |Aut_S(P)| = {aut_s} is not the {prime}-part of |Aut_F(P)| = {aut_f}"
                    ));
                }
            }
            // (II) for every φ with φ(P) fully centralized
            let normalizer = g.normalizer(p);
            for imgs in &homs {
                let q = self.image(imgs);
                let c_q = self.centralizer_order(&q);
                if conj.iter().any(|r| self.centralizer_order(r) > c_q) {
                    continue;
                }
                morphisms_checked += 1;
                let phi = self.full_map(p, imgs);
                let phi_of = |x: usize| phi[p.position(x).expect("in P")];
                let n_q = g.normalizer(&q);
                let aut_s_q: HashSet<Vec<usize>> = n_q
                    .members()
                    .iter()
                    .map(|&h| imgs.iter().map(|&y| g.conj(h, y)).collect())
                    .collect();
                let n_phi: Vec<usize> = normalizer
                    .members()
                    .iter()
                    .copied()
                    .filter(|&x| {
                        let v: Vec<usize> = p
                            .generators()
                            .iter()
                            .map(|&y| phi_of(g.conj(x, y)))
                            .collect();
                        aut_s_q.contains(&v)
                    })
                    .collect();
                let n_phi = g.subgroup_from_members(&n_phi)?;
                let key = (n_phi.members().to_vec(), p.members().to_vec());
                if !restriction_cache.contains_key(&key) {
                    let mut set = HashSet::new();
                    for ext in self.homs_from(&n_phi, opts.morphism_cap)? {
                        let full = self.full_map(&n_phi, &ext);
                        let restricted: Vec<usize> = p
                            .generators()
                            .iter()
                            .map(|&y| full[n_phi.position(y).expect("P ≤ N_φ")])
                            .collect();
                        set.insert(restricted);
                    }
                    restriction_cache.insert(key.clone(), set);
                }
                if !restriction_cache[&key].contains(imgs) {
                    violations.push(format!(
                        "(II) a morphism {label} -> {} does not extend to N_φ of order {}",
                        describe(g, &q),
                        n_phi.order()
                    ));
                }
            }
        }
        Ok(SaturationReport {
            ok: violations.is_empty(),
            subgroups_checked: subgroups.len(),
            morphisms_checked,
            violations,
        })
    }

    /// The quotient F/A on S/A, with S/A realized on the cosets of A.
    pub fn quotient(&self, a: &Subgroup) -> Result<(FusionSystem, GroupHom)> {
        let g = &self.group;
        check_central(g, a)?;
        // cosets xA indexed by their least element
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for x in 0..g.order() {
            if coset_of[x] == usize::MAX {
                let id = reps.len();
                reps.push(x);
                for &y in a.members() {
                    coset_of[g.mul(x, y)] = id;
                }
            }
        }
        let degree = reps.len();
        let perm_of = |s: usize| {
            Perm::from_images(reps.iter().map(|&r| coset_of[g.mul(s, r)] as u32).collect())
                .expect("coset action")
        };
        let gens: Vec<Perm> = g.generators().iter().map(|&s| perm_of(s)).collect();
        let target = Arc::new(FiniteGroup::build_with_cap(
            degree.max(1),
            gens,
            usize::MAX,
        )?);
        let whole = g.whole();
        let proj_images: Vec<usize> = whole
            .members()
            .iter()
            .map(|&s| target.index_of(&perm_of(s)).expect("in quotient"))
            .collect();
        let proj = crate::group::hom_from_map(g, &whole, proj_images, &target)?;
        let quotient = self.quotient_via(a, Arc::clone(&target), &proj)?;
        Ok((quotient, proj))
    }

    /// The fusion system on `target` induced through `proj`, a surjection
    /// with kernel A. Generators must contain A and fix it pointwise.
    pub fn quotient_via(
        &self,
        a: &Subgroup,
        target: Arc<FiniteGroup>,
        proj: &GroupHom,
    ) -> Result<FusionSystem> {
        let g = &self.group;
        check_central(g, a)?;
        let kernel = proj.kernel(target.identity());
        if kernel != a.members() {
            return Err(Error::NotCyclicKernel);
        }
        let mut generators = Vec::new();
        for hom in &self.generators {
            if !a.members().iter().all(|&x| hom.apply(x) == Some(x)) {
                return Err(Error::GeneratorMovesA);
            }
            let dom = hom.domain();
            let gens: Vec<usize> = dom
                .generators()
                .iter()
                .map(|&x| proj.apply(x).expect("projection is total"))
                .collect();
            let dom_bar = target.subgroup_generated(&gens);
            let images: Vec<usize> = dom_bar
                .generators()
                .iter()
                .map(|&xb| {
                    // pick a preimage in the domain and push its image down
                    let x = dom
                        .members()
                        .iter()
                        .copied()
                        .find(|&x| proj.apply(x) == Some(xb))
                        .expect("generator has a preimage");
                    proj.apply(hom.apply(x).expect("in domain")).expect("total")
                })
                .collect();
            generators.push(make_hom(&target, &dom_bar, &images, &target, true)?);
        }
        FusionSystem::new(target, generators)
    }
}

fn check_central(g: &FiniteGroup, a: &Subgroup) -> Result<()> {
    let z = g.center();
    if a.is_subset_of(&z) {
        Ok(())
    } else {
        Err(Error::NotCentral)
    }
}

fn describe(g: &FiniteGroup, p: &Subgroup) -> String {
    let gens: Vec<String> = p
        .generators()
        .iter()
        .map(|&x| g.element(x).to_string())
        .collect();
    format!("<{}> (order {})", gens.join(", "), p.order())
}

fn p_part(mut n: usize, p: usize) -> usize {
    if p < 2 {
        return 1;
    }
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

/// O_p(G) for a finite group G given a known normal p-subgroup to start
/// from: grow a Sylow p-subgroup and take its normal core.
pub fn largest_normal_p_subgroup(g: &FiniteGroup, start: &Subgroup, p: usize) -> Subgroup {
    let target = p_part(g.order(), p);
    let mut q = start.clone();
    while q.order() < target {
        let n = g.normalizer(&q);
        let mut grown = None;
        for &y in n.members() {
            if q.contains(y) {
                continue;
            }
            // order of yQ in N(Q)/Q
            let mut m = 1;
            let mut z = y;
            while !q.contains(z) {
                z = g.mul(y, z);
                m += 1;
            }
            if p_part(m, p) == m {
                let step = g.pow(y, (m / p) as i64);
                let mut gens = q.generators().to_vec();
                gens.push(step);
                grown = Some(g.subgroup_generated(&gens));
                break;
            }
        }
        q = grown.expect("a p-subgroup below Sylow order has a larger p-overgroup");
    }
    let classes = g.conjugacy_classes();
    let core: Vec<usize> = q
        .members()
        .iter()
        .copied()
        .filter(|&x| {
            classes.classes[classes.class_of[x]]
                .iter()
                .all(|&y| q.contains(y))
        })
        .collect();
    g.subgroup_from_members(&core).expect("core is a subgroup")
}

/// All F-isomorphisms between members of `family`.
pub fn morphism_closure(f: &FusionSystem, family: &[Subgroup], cap: usize) -> Result<MorphismSet> {
    let index: HashMap<Vec<usize>, usize> = family
        .iter()
        .enumerate()
        .map(|(i, p)| (p.members().to_vec(), i))
        .collect();
    let mut isomorphisms: HashMap<(usize, usize), Vec<Vec<usize>>> = HashMap::new();
    let mut total = 0;
    for (i, p) in family.iter().enumerate() {
        for imgs in f.homs_from(p, cap)? {
            let q = f.image(&imgs);
            if let Some(&j) = index.get(q.members()) {
                total += 1;
                if total > cap {
                    return Err(Error::MorphismCapExceeded(cap));
                }
                isomorphisms.entry((i, j)).or_default().push(imgs);
            }
        }
    }
    for v in isomorphisms.values_mut() {
        v.sort();
    }
    Ok(MorphismSet {
        family: family.to_vec(),
        isomorphisms,
    })
}

/// Automorphism of the extraspecial group given by a 2×2 matrix over F_p:
/// `a ↦ a^α b^γ`, `b ↦ a^β b^ε` for `[[α, β], [γ, ε]]`.
pub fn gl2_on_extraspecial(g: &FiniteGroup, m: [[i64; 2]; 2]) -> Result<GroupHom> {
    let a = g.named("a").ok_or_else(|| Error::UnknownName("a".into()))?;
    let b = g.named("b").ok_or_else(|| Error::UnknownName("b".into()))?;
    let whole = g.subgroup_generated(&[a, b]);
    let ia = g.mul(g.pow(a, m[0][0]), g.pow(b, m[1][0]));
    let ib = g.mul(g.pow(a, m[0][1]), g.pow(b, m[1][1]));
    make_hom(g, &whole, &[ia, ib], g, true)
}

/// Automorphism of an elementary abelian subgroup of rank 2 with ordered
/// basis `(e1, e2)`: `e1 ↦ e1^α e2^γ`, `e2 ↦ e1^β e2^ε`.
pub fn gl2_on_basis(g: &FiniteGroup, e1: usize, e2: usize, m: [[i64; 2]; 2]) -> Result<GroupHom> {
    let dom = g.subgroup_generated(&[e1, e2]);
    if dom.generators() != [e1, e2] || dom.order() != g.element_order(e1) * g.element_order(e2) {
        return Err(Error::Invalid(
            "basis elements do not generate a rank-2 subgroup".into(),
        ));
    }
    let i1 = g.mul(g.pow(e1, m[0][0]), g.pow(e2, m[1][0]));
    let i2 = g.mul(g.pow(e1, m[0][1]), g.pow(e2, m[1][1]));
    make_hom(g, &dom, &[i1, i2], g, true)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::group::extraspecial_p3;

    pub(crate) fn group(degree: usize, gens: &[&str]) -> Arc<FiniteGroup> {
        Arc::new(
            FiniteGroup::build(
                degree,
                gens.iter()
                    .map(|s| Perm::parse_cycles(s, degree).unwrap())
                    .collect(),
            )
            .unwrap(),
        )
    }

    fn el(g: &FiniteGroup, cycles: &str) -> usize {
        g.index_of(&Perm::parse_cycles(cycles, g.degree()).unwrap())
            .unwrap()
    }

    pub(crate) fn sigma3() -> FusionSystem {
        let s = group(3, &["(1 2 3)"]);
        let sigma = el(&s, "(1 2 3)");
        let hom = make_hom(&s, &s.whole(), &[s.pow(sigma, 2)], &s, true).unwrap();
        FusionSystem::new(s, vec![hom]).unwrap()
    }

    pub(crate) fn a4() -> FusionSystem {
        let s = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let x = el(&s, "(1 2)(3 4)");
        let y = el(&s, "(1 3)(2 4)");
        let whole = s.subgroup_generated(&[x, y]);
        let hom = make_hom(&s, &whole, &[s.mul(x, y), x], &s, true).unwrap();
        FusionSystem::new(s, vec![hom]).unwrap()
    }

    /// Brute-force G-conjugacy restricted to S for a group G ≥ S on the
    /// same points.
    fn realized_classes(big: &FiniteGroup, s: &FiniteGroup) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut done = vec![false; s.order()];
        for x in 0..s.order() {
            if done[x] {
                continue;
            }
            let bx = big.index_of(s.element(x)).unwrap();
            let mut class = Vec::new();
            for y in 0..s.order() {
                let by = big.index_of(s.element(y)).unwrap();
                if (0..big.order()).any(|g| big.conj(g, bx) == by) {
                    class.push(y);
                    done[y] = true;
                }
            }
            classes.push(class);
        }
        classes
    }

    #[test]
    fn element_classes_match_realizing_groups() {
        let f = sigma3();
        let big = FiniteGroup::build(
            3,
            vec![
                Perm::parse_cycles("(1 2 3)", 3).unwrap(),
                Perm::parse_cycles("(1 2)", 3).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(
            f.element_classes().classes,
            realized_classes(&big, f.group())
        );
        assert_eq!(f.element_classes().len(), 2);

        let f = a4();
        let big = FiniteGroup::build(
            4,
            vec![
                Perm::parse_cycles("(1 2 3)", 4).unwrap(),
                Perm::parse_cycles("(1 2)(3 4)", 4).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(big.order(), 12);
        assert_eq!(
            f.element_classes().classes,
            realized_classes(&big, f.group())
        );
        assert_eq!(f.element_classes().len(), 2);
    }

    #[test]
    fn inner_fusion_gives_conjugacy_classes() {
        let s = Arc::new(extraspecial_p3(3).unwrap());
        let f = FusionSystem::inner(Arc::clone(&s));
        let mut expected = s.conjugacy_classes().classes.clone();
        expected.sort_by_key(|c| c[0]);
        assert_eq!(f.element_classes().classes, expected);
        let whole = s.whole();
        assert_eq!(f.automorphisms(&whole, 1000).unwrap().len(), 9);
        assert!(f.is_centric(&whole).unwrap());
    }

    #[test]
    fn automorphisms_of_klein_four_under_a4() {
        let f = a4();
        let s = f.group();
        let whole = s.whole();
        assert_eq!(f.automorphisms(&whole, 1000).unwrap().len(), 3);
        let x = el(s, "(1 2)(3 4)");
        let c2 = s.subgroup_generated(&[x]);
        assert!(!f.is_centric(&c2).unwrap());
        assert!(f.is_centric(&whole).unwrap());
        assert!(f.is_radical(&whole).unwrap());
        let set = morphism_closure(&f, std::slice::from_ref(&whole), 1000).unwrap();
        assert_eq!(set.automorphisms(0).len(), 3);
    }

    #[test]
    fn saturated_examples() {
        let r = sigma3()
            .check_saturation(&SaturationOptions::default())
            .unwrap();
        assert!(r.ok, "{:?}", r.violations);
        let r = a4()
            .check_saturation(&SaturationOptions::default())
            .unwrap();
        assert!(r.ok, "{:?}", r.violations);
        let s = Arc::new(extraspecial_p3(3).unwrap());
        let r = FusionSystem::inner(s)
            .check_saturation(&SaturationOptions::default())
            .unwrap();
        assert!(r.ok, "{:?}", r.violations);
    }

    #[test]
    fn transvection_on_rank_two_is_not_saturated() {
        // Aut_F(S) = ⟨transvection⟩ has order 3 while Aut_S(S) = 1
        let s = group(6, &["(1 2 3)", "(4 5 6)"]);
        let u = el(&s, "(1 2 3)");
        let v = el(&s, "(4 5 6)");
        let whole = s.subgroup_generated(&[u, v]);
        let hom = make_hom(&s, &whole, &[u, s.mul(u, v)], &s, true).unwrap();
        let f = FusionSystem::new(s, vec![hom]).unwrap();
        let r = f.check_saturation(&SaturationOptions::default()).unwrap();
        assert!(!r.ok);
        assert!(r.violations.iter().any(|v| v.starts_with("(I)")));
    }

    #[test]
    fn saturation_cap() {
        let s = Arc::new(extraspecial_p3(7).unwrap());
        let f = FusionSystem::inner(s);
        assert_eq!(
            f.check_saturation(&SaturationOptions::default())
                .unwrap_err(),
            Error::SaturationCapExceeded(343, 128)
        );
    }

    #[test]
    fn quotient_of_quaternion_fusion() {
        let q8 = group(8, &["(1 2 5 6)(3 4 7 8)", "(1 3 5 7)(2 8 6 4)"]);
        let i = el(&q8, "(1 2 5 6)(3 4 7 8)");
        let j = el(&q8, "(1 3 5 7)(2 8 6 4)");
        let whole = q8.subgroup_generated(&[i, j]);
        let hom = make_hom(&q8, &whole, &[q8.mul(i, j), i], &q8, true).unwrap();
        let f = FusionSystem::new(Arc::clone(&q8), vec![hom]).unwrap();
        let z = q8.center();
        let (fq, proj) = f.quotient(&z).unwrap();
        assert_eq!(fq.group().order(), 4);
        assert_eq!(proj.kernel(0), z.members());
        assert_eq!(fq.element_classes().len(), 2);
        assert!(
            fq.check_saturation(&SaturationOptions::default())
                .unwrap()
                .ok
        );

        let sub = q8.subgroup_generated(&[i]);
        assert_eq!(f.quotient(&sub).unwrap_err(), Error::NotCentral);
    }

    #[test]
    fn quotient_of_inner_fusion_by_center() {
        let s = Arc::new(extraspecial_p3(3).unwrap());
        let f = FusionSystem::inner(Arc::clone(&s));
        let (fq, _) = f.quotient(&s.center()).unwrap();
        assert_eq!(fq.group().order(), 9);
        assert_eq!(fq.element_classes().len(), 9);

        let z4 = group(4, &["(1 2 3 4)"]);
        let sq = z4.subgroup_generated(&[z4.pow(z4.generators()[0], 2)]);
        let (fq, _) = FusionSystem::inner(z4).quotient(&sq).unwrap();
        assert_eq!(fq.group().order(), 2);
        assert_eq!(fq.element_classes().len(), 2);
    }

    #[test]
    fn generators_must_fix_the_central_subgroup() {
        // inversion on Z/4 moves nothing in ⟨x²⟩, but an automorphism of
        // Z/3 × Z/3 swapping factors moves a central subgroup
        let s = group(6, &["(1 2 3)", "(4 5 6)"]);
        let u = el(&s, "(1 2 3)");
        let v = el(&s, "(4 5 6)");
        let whole = s.subgroup_generated(&[u, v]);
        let swap = make_hom(&s, &whole, &[v, u], &s, true).unwrap();
        let f = FusionSystem::new(Arc::clone(&s), vec![swap]).unwrap();
        let a = s.subgroup_generated(&[u]);
        assert_eq!(f.quotient(&a).unwrap_err(), Error::GeneratorMovesA);
    }

    #[test]
    fn extraspecial_gl2_shorthand() {
        let s = extraspecial_p3(7).unwrap();
        let c = s.named("c").unwrap();
        let hom = gl2_on_extraspecial(&s, [[2, 0], [0, 4]]).unwrap();
        assert_eq!(hom.apply(c), Some(c));
        let hom = gl2_on_extraspecial(&s, [[0, 1], [1, 0]]).unwrap();
        assert_eq!(hom.apply(c), Some(s.pow(c, -1)));
        assert!(gl2_on_extraspecial(&s, [[1, 1], [1, 1]]).is_err());
    }
}

#[cfg(test)]
pub(crate) mod extraspecial_tests {
    use super::*;
    use crate::group::extraspecial_p3;

    pub(crate) fn onan_like() -> FusionSystem {
        let s = Arc::new(extraspecial_p3(7).unwrap());
        let (a, b, c) = (
            s.named("a").unwrap(),
            s.named("b").unwrap(),
            s.named("c").unwrap(),
        );
        let mut gens = Vec::new();
        for m in [[[6, 0], [0, 1]], [[2, 0], [0, 2]], [[0, 1], [6, 0]]] {
            gens.push(gl2_on_extraspecial(&s, m).unwrap());
        }
        for e2 in [a, s.mul(a, b)] {
            for m in [[[1, 1], [0, 1]], [[1, 0], [1, 1]], [[6, 0], [0, 1]]] {
                gens.push(gl2_on_basis(&s, c, e2, m).unwrap());
            }
        }
        FusionSystem::new(s, gens).unwrap()
    }

    #[test]
    fn onan_type_system() {
        let f = onan_like();
        let s = f.group();
        let (a, b, c) = (
            s.named("a").unwrap(),
            s.named("b").unwrap(),
            s.named("c").unwrap(),
        );
        assert_eq!(f.element_classes().len(), 3);
        let a0 = s.subgroup_generated(&[c, a]);
        assert_eq!(
            f.automorphisms(&a0, DEFAULT_MORPHISM_CAP).unwrap().len(),
            672
        );
        assert!(f.is_centric(&a0).unwrap());
        assert!(f.is_radical(&a0).unwrap());
        let a2 = s.subgroup_generated(&[c, s.mul(a, s.pow(b, 2))]);
        assert!(f.is_centric(&a2).unwrap());
        assert!(!f.is_radical(&a2).unwrap());
        assert!(f.is_radical(&s.whole()).unwrap());
        let center = s.center();
        assert!(!f.is_centric(&center).unwrap());
    }
}
