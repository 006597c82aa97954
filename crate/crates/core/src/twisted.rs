//! Twisted representations through central extensions: cocycles, the
//! extension S_α, A-representations, the twisted invariant monoid and its
//! module structure over R(F).

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::characters::{CharacterTable, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::fusion::{FusionSystem, DEFAULT_MORPHISM_CAP};
use crate::group::{hom_from_map, make_hom, FiniteGroup, GroupHom, Subgroup};
use crate::hilbert::{hilbert_basis, HilbertOptions};
use crate::intmat::{hnf, quotient_structure, solve_rational};
use crate::invariants::invariance_matrix;
use crate::perm::Perm;
use crate::ring::RingPresentation;

pub const MODULE_CHAIN_CAP: usize = 64;

/// A normalized 2-cocycle `S × S → Z/n`, indexed by element index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cocycle {
    pub modulus: u32,
    pub table: Vec<Vec<u32>>,
}

impl Cocycle {
    pub fn zero(s: &FiniteGroup, modulus: u32) -> Self {
        Cocycle {
            modulus,
            table: vec![vec![0; s.order()]; s.order()],
        }
    }

    pub fn new(modulus: u32, table: Vec<Vec<u32>>) -> Self {
        Cocycle {
            modulus,
            table: table
                .into_iter()
                .map(|row| row.into_iter().map(|x| x % modulus.max(1)).collect())
                .collect(),
        }
    }

    /// Swaps the argument order.
    pub fn transposed(&self) -> Self {
        let n = self.table.len();
        Cocycle {
            modulus: self.modulus,
            table: (0..n)
                .map(|i| (0..n).map(|j| self.table[j][i]).collect())
                .collect(),
        }
    }

    pub fn value(&self, s: usize, t: usize) -> u32 {
        self.table[s][t]
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.table {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// Normalization and associativity violations (empty when valid).
pub fn validate_cocycle(s: &FiniteGroup, alpha: &Cocycle) -> Vec<String> {
    let n = s.order();
    let m = alpha.modulus;
    let mut out = Vec::new();
    if m == 0 {
        out.push("modulus must be positive".into());
        return out;
    }
    if alpha.table.len() != n || alpha.table.iter().any(|r| r.len() != n) {
        out.push(format!("table must be {n}×{n}"));
        return out;
    }
    let e = s.identity();
    for x in 0..n {
        if alpha.value(e, x) != 0 || alpha.value(x, e) != 0 {
            out.push(format!("not normalized at element {}", s.element(x)));
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = s.mul(a, b);
            for c in 0..n {
                let lhs = (alpha.value(a, b) + alpha.value(ab, c)) % m;
                let rhs = (alpha.value(b, c) + alpha.value(a, s.mul(b, c))) % m;
                if lhs != rhs {
                    out.push(format!(
                        "associativity fails at ({}, {}, {})",
                        s.element(a),
                        s.element(b),
                        s.element(c)
                    ));
                    if out.len() >= 16 {
                        return out;
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct CentralExtension {
    pub big: Arc<FiniteGroup>,
    pub base: Arc<FiniteGroup>,
    /// Generator of A, identified with `ζ_n`.
    pub a_generator: usize,
    pub a: Subgroup,
    pub projection: GroupHom,
    /// `s ↦ (0, s)` when built from a cocycle.
    pub section: Option<Vec<usize>>,
}

impl CentralExtension {
    pub fn a_order(&self) -> usize {
        self.a.order()
    }

    pub fn project(&self, x: usize) -> usize {
        self.projection.apply(x).expect("projection is total")
    }
}

/// S_α on the points `A × S` (index `a·|S| + s`) by left translation.
pub fn central_extension(s: Arc<FiniteGroup>, alpha: &Cocycle) -> Result<CentralExtension> {
    let violations = validate_cocycle(&s, alpha);
    if !violations.is_empty() {
        return Err(Error::InvalidCocycle(violations.join("; ")));
    }
    let n = s.order();
    let m = alpha.modulus as usize;
    let point = |a: usize, t: usize| a * n + t;
    let translate = |a: usize, x: usize| -> Perm {
        let mut images = vec![0u32; m * n];
        for b in 0..m {
            for t in 0..n {
                let c = (a + b + alpha.value(x, t) as usize) % m;
                images[point(b, t)] = point(c, s.mul(x, t)) as u32;
            }
        }
        Perm::from_images(images).expect("left translation is a bijection")
    };
    let mut gens: Vec<Perm> = s.generators().iter().map(|&x| translate(0, x)).collect();
    gens.push(translate(1 % m, s.identity()));
    let big = Arc::new(FiniteGroup::build_with_cap(m * n, gens, usize::MAX)?);
    if big.order() != m * n {
        return Err(Error::InvalidCocycle(format!(
            "extension has order {} instead of {}",
            big.order(),
            m * n
        )));
    }
    // decode each element by where it sends (0, e)
    let origin = point(0, s.identity());
    let decode = |x: usize| -> (usize, usize) {
        let img = big.element(x).apply(origin);
        (img / n, img % n)
    };
    let whole = big.whole();
    let images: Vec<usize> = whole.members().iter().map(|&x| decode(x).1).collect();
    let projection = hom_from_map(&big, &whole, images, &s)?;
    let mut section = vec![0; n];
    let mut a_generator = big.identity();
    for x in 0..big.order() {
        let (a, t) = decode(x);
        if a == 0 {
            section[t] = x;
        }
        if a == 1 % m && t == s.identity() {
            a_generator = x;
        }
    }
    let a = big.subgroup_generated(&[a_generator]);
    Ok(CentralExtension {
        big,
        base: s,
        a_generator,
        a,
        projection,
        section: Some(section),
    })
}

/// Extension data from an explicit group, a central element and images of
/// the big group's generators in S.
pub fn extension_from_groups(
    big: Arc<FiniteGroup>,
    base: Arc<FiniteGroup>,
    a_generator: usize,
    generator_images: &[usize],
) -> Result<CentralExtension> {
    let whole = big.whole();
    let projection = make_hom(&big, &whole, generator_images, &base, false)?;
    if projection.image_members().len() != base.order() {
        return Err(Error::Invalid("projection is not surjective".into()));
    }
    let kernel = projection.kernel(base.identity());
    let center = big.center();
    if !kernel.iter().all(|&x| center.contains(x)) {
        return Err(Error::NotCentral);
    }
    let a = big.subgroup_generated(&[a_generator]);
    if a.members() != kernel.as_slice() {
        return Err(Error::NotCyclicKernel);
    }
    Ok(CentralExtension {
        big,
        base,
        a_generator,
        a,
        projection,
        section: None,
    })
}

/// `α(s, t)` with `σ(s)σ(t) = a^{α(s,t)} σ(st)`.
pub fn cocycle_from_extension(e: &CentralExtension, section: &[usize]) -> Result<Cocycle> {
    let (big, s) = (&e.big, &e.base);
    let n = s.order();
    if section.len() != n {
        return Err(Error::BadSection(format!("expected {n} entries")));
    }
    if section[s.identity()] != big.identity() {
        return Err(Error::BadSection("identity must map to identity".into()));
    }
    for (t, &x) in section.iter().enumerate() {
        if x >= big.order() || e.project(x) != t {
            return Err(Error::BadSection(format!(
                "entry for {} is not a preimage",
                s.element(t)
            )));
        }
    }
    let m = e.a_order();
    let mut exponent = vec![usize::MAX; big.order()];
    let mut x = big.identity();
    for k in 0..m {
        exponent[x] = k;
        x = big.mul(e.a_generator, x);
    }
    let mut table = vec![vec![0u32; n]; n];
    for a in 0..n {
        for b in 0..n {
            let u = big.mul(
                big.mul(section[a], section[b]),
                big.inv(section[s.mul(a, b)]),
            );
            table[a][b] = exponent[u] as u32;
        }
    }
    Ok(Cocycle {
        modulus: m as u32,
        table,
    })
}

/// Indices of irreducibles of S_α with `χ(a) = ζ_n χ(1)`.
pub fn a_representations(e: &CentralExtension, table: &CharacterTable) -> Result<Vec<usize>> {
    let cc = e.big.conjugacy_classes();
    let ca = cc.class_of[e.a_generator];
    let zeta = Cyclotomic::root_of_unity(e.a_order() as u32, 1).lift(table.conductor())?;
    Ok(table
        .irreducibles()
        .iter()
        .enumerate()
        .filter(|(_, chi)| *chi.value(ca) == &zeta * chi.value(0))
        .map(|(i, _)| i)
        .collect())
}

/// Checks that F_α fixes A pointwise and that its quotient matches F.
pub fn check_lift(e: &CentralExtension, f_alpha: &FusionSystem, f: &FusionSystem) -> Result<()> {
    for hom in f_alpha.generators() {
        if !e.a.members().iter().all(|&x| hom.apply(x) == Some(x)) {
            return Err(Error::GeneratorMovesA);
        }
    }
    let q = f_alpha.quotient_via(&e.a, Arc::clone(&e.base), &e.projection)?;
    let s = &e.base;
    let describe = |h: &GroupHom| -> String {
        let gens: Vec<String> = h
            .domain()
            .generators()
            .iter()
            .map(|&x| s.element(x).to_string())
            .collect();
        format!("generator on <{}>", gens.join(", "))
    };
    for (from, to, label) in [(&q, f, "quotient"), (f, &q, "base")] {
        for hom in from.generators() {
            let dom = hom.domain();
            let images: Vec<usize> = dom
                .generators()
                .iter()
                .map(|&x| hom.apply(x).expect("in domain"))
                .collect();
            if !to.contains_morphism(dom, &images, DEFAULT_MORPHISM_CAP)? {
                return Err(Error::QuotientMismatch(format!(
                    "{} {} is not a morphism of the other system",
                    label,
                    describe(hom)
                )));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct TwistedBasis {
    pub a_representations: Vec<usize>,
    /// Multiplicity vectors over Irr(S_α).
    pub elements: Vec<Vec<i64>>,
    pub degrees: Vec<i64>,
    #[serde(skip)]
    pub characters: Vec<ClassFunction>,
}

pub fn twisted_invariant_basis(
    e: &CentralExtension,
    f_alpha: &FusionSystem,
    table: &CharacterTable,
    opts: HilbertOptions,
) -> Result<TwistedBasis> {
    let areps = a_representations(e, table)?;
    let full = invariance_matrix(f_alpha, table);
    let m: Vec<Vec<i128>> = full
        .iter()
        .map(|row| areps.iter().map(|&i| row[i]).collect())
        .filter(|row: &Vec<i128>| row.iter().any(|&x| x != 0))
        .collect();
    let hb = hilbert_basis(&m, areps.len(), opts)?;
    let degrees_all = table.degrees();
    let mut keyed: Vec<(i64, Vec<i64>)> = hb
        .into_iter()
        .map(|v| {
            let mut full = vec![0i64; table.len()];
            for (&i, &x) in areps.iter().zip(&v) {
                full[i] = x as i64;
            }
            (
                full.iter().zip(&degrees_all).map(|(a, b)| a * b).sum(),
                full,
            )
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
    let characters = keyed
        .iter()
        .map(|(_, v)| table.combine(&e.big, v))
        .collect();
    Ok(TwistedBasis {
        a_representations: areps,
        degrees: keyed.iter().map(|(d, _)| *d).collect(),
        elements: keyed.into_iter().map(|(_, v)| v).collect(),
        characters,
    })
}

/// Membership in the twisted monoid by the two defining conditions,
/// checked directly on character values.
pub fn in_twisted_monoid(
    e: &CentralExtension,
    f_alpha: &FusionSystem,
    table: &CharacterTable,
    v: &[i64],
) -> Result<bool> {
    if v.iter().any(|&x| x < 0) {
        return Ok(false);
    }
    let areps = a_representations(e, table)?;
    if v.iter()
        .enumerate()
        .any(|(i, &x)| x != 0 && !areps.contains(&i))
    {
        return Ok(false);
    }
    let chi = table.combine(&e.big, v);
    Ok(crate::invariants::is_stable(f_alpha, &chi))
}

/// Pulls a class function on S back along the projection.
pub fn pull_back(
    e: &CentralExtension,
    chi: &ClassFunction,
    conductor: u32,
) -> Result<ClassFunction> {
    let big_cc = e.big.conjugacy_classes();
    let base_cc = e.base.conjugacy_classes();
    let values = big_cc
        .classes
        .iter()
        .map(|c| chi.value(base_cc.class_of[e.project(c[0])]).lift(conductor))
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(&e.big, values)
}

pub type IntMat = Vec<Vec<i64>>;

#[derive(Debug, Clone, Serialize)]
pub struct TwistedModule {
    pub basis: TwistedBasis,
    /// `matrices[i]` is the action of the i-th nontrivial R(F) basis element;
    /// column j holds the coordinates of `X_i · TB_j`.
    pub matrices: Vec<IntMat>,
}

fn solve_nonneg(columns: &[Vec<i64>], target: &[i64]) -> Result<Vec<i64>> {
    let r = |x: i64| BigRational::from_integer(x.into());
    let cols: Vec<Vec<BigRational>> = columns
        .iter()
        .map(|c| c.iter().map(|&x| r(x)).collect())
        .collect();
    let t: Vec<BigRational> = target.iter().map(|&x| r(x)).collect();
    let sol = solve_rational(&cols, &t).ok_or_else(|| {
        Error::DecompositionNotIntegral("product is outside the twisted span".into())
    })?;
    sol.iter()
        .map(|q| {
            if q.is_integer() {
                let v = q.to_integer().to_i64().ok_or(Error::Overflow)?;
                if v < 0 {
                    return Err(Error::DecompositionNotIntegral(format!(
                        "negative coefficient {v}"
                    )));
                }
                Ok(v)
            } else {
                Err(Error::DecompositionNotIntegral(format!("coefficient {q}")))
            }
        })
        .collect()
}

/// Action matrices of the nontrivial R(F) basis elements on the twisted
/// basis.
pub fn module_structure(
    e: &CentralExtension,
    big_table: &CharacterTable,
    base_characters: &[ClassFunction],
    tb: &TwistedBasis,
) -> Result<TwistedModule> {
    let r = tb.elements.len();
    let mut matrices = Vec::new();
    for chi in base_characters.iter().skip(1) {
        let pulled = pull_back(e, chi, big_table.conductor())?;
        let mut m = vec![vec![0i64; r]; r];
        for (j, psi) in tb.characters.iter().enumerate() {
            let prod = pulled.tensor(psi)?;
            let mult = big_table.decompose(&e.big, &prod)?;
            let coeffs = solve_nonneg(&tb.elements, &mult)?;
            for (i, c) in coeffs.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        matrices.push(m);
    }
    Ok(TwistedModule {
        basis: tb.clone(),
        matrices,
    })
}

fn mat_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> IntMat {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect()
}

impl TwistedModule {
    pub fn rank(&self) -> usize {
        self.basis.elements.len()
    }

    pub fn commute(&self) -> bool {
        self.matrices
            .iter()
            .all(|a| self.matrices.iter().all(|b| mat_mul(a, b) == mat_mul(b, a)))
    }

    /// Every relation of R(F) evaluates to zero on the action matrices.
    pub fn satisfies(&self, p: &RingPresentation) -> bool {
        let n = self.rank();
        let m = p.rank();
        if self.matrices.len() != m {
            return false;
        }
        let mut all = vec![identity(n)];
        all.extend(self.matrices.iter().cloned());
        for i in 0..m {
            for j in 0..m {
                let lhs = mat_mul(&self.matrices[i], &self.matrices[j]);
                let c = &p.table.c[i + 1][j + 1];
                let mut rhs = vec![vec![0i64; n]; n];
                for (k, &ck) in c.iter().enumerate() {
                    for a in 0..n {
                        for b in 0..n {
                            rhs[a][b] += ck as i64 * all[k][a][b];
                        }
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletedModule {
    /// Whether `I^k M` stabilized within the chain cap.
    pub stabilized: bool,
    pub steps: usize,
    /// `M / I^∞ M` when stabilized.
    pub free_rank: usize,
    pub torsion: Vec<i128>,
    /// Each shifted generator acts as zero on the finite answer.
    pub trivial_action: bool,
    /// Shifted action matrices `N_i = M_i − d_i`.
    pub shifted: Vec<IntMat>,
}

fn apply_cols(m: &IntMat, v: &[i128]) -> Vec<i128> {
    (0..m.len())
        .map(|i| m[i].iter().zip(v).map(|(&a, &b)| a as i128 * b).sum())
        .collect()
}

pub fn completed_module(tm: &TwistedModule, degrees: &[i64]) -> Result<CompletedModule> {
    let n = tm.rank();
    let shifted: Vec<IntMat> = tm
        .matrices
        .iter()
        .zip(degrees)
        .map(|(m, &d)| {
            let mut s = m.clone();
            for (i, row) in s.iter_mut().enumerate() {
                row[i] -= d;
            }
            s
        })
        .collect();
    let mut lattice: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i128).collect())
        .collect();
    let image = |l: &[Vec<i128>]| -> Result<Vec<Vec<i128>>> {
        let gens: Vec<Vec<i128>> = shifted
            .iter()
            .flat_map(|m| l.iter().map(move |v| apply_cols(m, v)))
            .collect();
        hnf(&gens)
    };
    for step in 1..=MODULE_CHAIN_CAP {
        let next = image(&lattice)?;
        if next == lattice {
            let (free_rank, torsion) = quotient_structure(&lattice, n)?;
            let full: Vec<Vec<i128>> = (0..n)
                .map(|i| (0..n).map(|j| (i == j) as i128).collect())
                .collect();
            let first = image(&full)?;
            let trivial_action = first
                .iter()
                .all(|v| crate::intmat::lattice_contains(&lattice, v).unwrap_or(false));
            return Ok(CompletedModule {
                stabilized: true,
                steps: step - 1,
                free_rank,
                torsion,
                trivial_action,
                shifted,
            });
        }
        lattice = next;
    }
    Ok(CompletedModule {
        stabilized: false,
        steps: MODULE_CHAIN_CAP,
        free_rank: n,
        torsion: Vec::new(),
        trivial_action: false,
        shifted,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::characters::character_table;
    use crate::fusion::tests::{a4, group};
    use crate::invariants::irreducible_invariants;
    use crate::ring::{presentation, structure_constants};

    fn el(g: &FiniteGroup, cycles: &str) -> usize {
        g.index_of(&Perm::parse_cycles(cycles, g.degree()).unwrap())
            .unwrap()
    }

    /// α(u, v) = u₁v₁ + u₁v₂ + u₂v₂ on Klein four in coordinates x, y.
    pub(crate) fn quaternion_cocycle(s: &FiniteGroup) -> Cocycle {
        let x = el(s, "(1 2)(3 4)");
        let y = el(s, "(1 3)(2 4)");
        let coords = |g: usize| -> (u32, u32) {
            for a in 0..2 {
                for b in 0..2 {
                    if s.mul(s.pow(x, a), s.pow(y, b)) == g {
                        return (a as u32, b as u32);
                    }
                }
            }
            unreachable!()
        };
        let n = s.order();
        let table = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| {
                        let (u1, u2) = coords(u);
                        let (v1, v2) = coords(v);
                        (u1 * v1 + u1 * v2 + u2 * v2) % 2
                    })
                    .collect()
            })
            .collect();
        Cocycle::new(2, table)
    }

    #[test]
    fn cocycle_validation() {
        let s = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert!(validate_cocycle(&s, &Cocycle::zero(&s, 2)).is_empty());
        assert!(validate_cocycle(&s, &quaternion_cocycle(&s)).is_empty());
        let mut bad = Cocycle::zero(&s, 2);
        bad.table[1][2] = 1;
        assert!(!validate_cocycle(&s, &bad).is_empty());
        let mut unnormalized = Cocycle::zero(&s, 2);
        unnormalized.table[0][1] = 1;
        assert!(!validate_cocycle(&s, &unnormalized).is_empty());
    }

    #[test]
    fn quaternion_extension() {
        let s = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let alpha = quaternion_cocycle(&s);
        let e = central_extension(Arc::clone(&s), &alpha).unwrap();
        assert_eq!(e.big.order(), 8);
        assert_eq!(e.big.conjugacy_classes().len(), 5);
        let involutions = (0..8).filter(|&x| e.big.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        assert_eq!(e.projection.kernel(s.identity()), e.a.members());
        let back = cocycle_from_extension(&e, e.section.as_ref().unwrap()).unwrap();
        assert_eq!(back, alpha);
        let t = character_table(&e.big).unwrap();
        let areps = a_representations(&e, &t).unwrap();
        assert_eq!(areps.len(), 1);
        let rho = &t.irreducibles()[areps[0]];
        assert_eq!(rho.degree(), Some(2));
        assert_eq!(
            *rho.value(e.big.conjugacy_classes().class_of[e.a_generator]),
            Cyclotomic::from_integer(t.conductor(), -2)
        );
    }

    #[test]
    fn cyclic_extensions() {
        let s = group(2, &["(1 2)"]);
        let g = s.generators()[0];
        let mut alpha = Cocycle::zero(&s, 2);
        alpha.table[g][g] = 1;
        let e = central_extension(Arc::clone(&s), &alpha).unwrap();
        assert_eq!(e.big.order(), 4);
        assert_eq!(e.big.exponent(), 4);
        let t = character_table(&e.big).unwrap();
        let areps = a_representations(&e, &t).unwrap();
        assert_eq!(areps.len(), 2);
        assert!(areps
            .iter()
            .all(|&i| t.irreducibles()[i].degree() == Some(1)));

        let e = central_extension(Arc::clone(&s), &Cocycle::zero(&s, 2)).unwrap();
        assert_eq!(e.big.exponent(), 2);
        let t = character_table(&e.big).unwrap();
        assert_eq!(a_representations(&e, &t).unwrap().len(), 2);
    }

    #[test]
    fn explicit_extension_data() {
        let q8 = group(8, &["(1 2 5 6)(3 4 7 8)", "(1 3 5 7)(2 8 6 4)"]);
        let v4 = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let i = el(&q8, "(1 2 5 6)(3 4 7 8)");
        let images: Vec<usize> = q8
            .generators()
            .iter()
            .map(|&g| {
                if g == i {
                    el(&v4, "(1 2)(3 4)")
                } else {
                    el(&v4, "(1 3)(2 4)")
                }
            })
            .collect();
        let z = q8.pow(i, 2);
        let e = extension_from_groups(Arc::clone(&q8), Arc::clone(&v4), z, &images).unwrap();
        assert_eq!(e.a_order(), 2);
        let section: Vec<usize> = (0..4)
            .map(|t| (0..8).find(|&x| e.project(x) == t).unwrap())
            .collect();
        let alpha = cocycle_from_extension(&e, &section).unwrap();
        assert!(validate_cocycle(&v4, &alpha).is_empty());
        let mut bad = section.clone();
        bad[1] = bad[2];
        assert!(matches!(
            cocycle_from_extension(&e, &bad),
            Err(Error::BadSection(_))
        ));

        // Z/4 onto Z/2 with a wrong central element
        let z4 = group(4, &["(1 2 3 4)"]);
        let z2 = group(2, &["(1 2)"]);
        let g = z4.generators()[0];
        let err = extension_from_groups(Arc::clone(&z4), Arc::clone(&z2), g, &[z2.generators()[0]])
            .unwrap_err();
        assert_eq!(err, Error::NotCyclicKernel);

        // S3 onto Z/2 has non-central kernel
        let s3 = group(3, &["(1 2 3)", "(1 2)"]);
        let imgs: Vec<usize> = s3
            .generators()
            .iter()
            .map(|&x| {
                if s3.element_order(x) == 2 {
                    z2.generators()[0]
                } else {
                    0
                }
            })
            .collect();
        let err =
            extension_from_groups(Arc::clone(&s3), z2, s3.generators()[0], &imgs).unwrap_err();
        assert_eq!(err, Error::NotCentral);
    }

    pub(crate) fn sl23_data() -> (FusionSystem, CentralExtension, FusionSystem) {
        let f = a4();
        let s = f.group_arc();
        let alpha = quaternion_cocycle(&s);
        let e = central_extension(Arc::clone(&s), &alpha).unwrap();
        let big = Arc::clone(&e.big);
        // an automorphism of order 3 of Q8 lifting x ↦ xy, y ↦ x
        let x = el(&s, "(1 2)(3 4)");
        let y = el(&s, "(1 3)(2 4)");
        let lift = |t: usize| (0..big.order()).find(|&g| e.project(g) == t).unwrap();
        let (lx, ly) = (lift(x), lift(y));
        let whole = big.subgroup_generated(&[lx, ly]);
        let mut found = None;
        'search: for a in 0..big.order() {
            for b in 0..big.order() {
                if e.project(a) == s.mul(x, y) && e.project(b) == x {
                    if let Ok(h) = make_hom(&big, &whole, &[a, b], &big, true) {
                        let ok = e.a.members().iter().all(|&z| h.apply(z) == Some(z));
                        if ok {
                            found = Some(h);
                            break 'search;
                        }
                    }
                }
            }
        }
        let f_alpha = FusionSystem::new(Arc::clone(&big), vec![found.unwrap()]).unwrap();
        (f, e, f_alpha)
    }

    #[test]
    fn sl23_twisted_module() {
        let (f, e, f_alpha) = sl23_data();
        check_lift(&e, &f_alpha, &f).unwrap();
        let t = character_table(&e.big).unwrap();
        let tb = twisted_invariant_basis(&e, &f_alpha, &t, HilbertOptions::default()).unwrap();
        assert_eq!(tb.degrees, vec![2]);
        let base_t = character_table(f.group()).unwrap();
        let b = irreducible_invariants(&f, &base_t, HilbertOptions::default()).unwrap();
        let tm = module_structure(&e, &t, &b.characters, &tb).unwrap();
        assert_eq!(tm.matrices, vec![vec![vec![3]]]);
        let p = presentation(
            &["x".into()],
            &b.degrees[1..],
            structure_constants(&f, &base_t, &b).unwrap(),
        )
        .unwrap();
        assert!(tm.satisfies(&p));
        assert!(tm.commute());
        let c = completed_module(&tm, &b.degrees[1..]).unwrap();
        assert!(c.stabilized);
        assert_eq!((c.free_rank, c.torsion.clone()), (1, vec![]));
        assert!(c.trivial_action);
        assert_eq!(c.shifted, vec![vec![vec![0]]]);
        for v in &tb.elements {
            assert!(in_twisted_monoid(&e, &f_alpha, &t, v).unwrap());
        }
    }

    #[test]
    fn lift_must_match_base() {
        let (_, e, f_alpha) = sl23_data();
        let inner = FusionSystem::inner(Arc::clone(&e.base));
        assert!(matches!(
            check_lift(&e, &f_alpha, &inner),
            Err(Error::QuotientMismatch(_))
        ));
    }

    #[test]
    fn trivial_cocycle_untwists() {
        let s = group(2, &["(1 2)"]);
        let f = FusionSystem::inner(Arc::clone(&s));
        let e = central_extension(Arc::clone(&s), &Cocycle::zero(&s, 2)).unwrap();
        let f_alpha = FusionSystem::inner(Arc::clone(&e.big));
        check_lift(&e, &f_alpha, &f).unwrap();
        let t = character_table(&e.big).unwrap();
        let tb = twisted_invariant_basis(&e, &f_alpha, &t, HilbertOptions::default()).unwrap();
        let base_t = character_table(&s).unwrap();
        let b = irreducible_invariants(&f, &base_t, HilbertOptions::default()).unwrap();
        assert_eq!(tb.elements.len(), b.len());
        let tm = module_structure(&e, &t, &b.characters, &tb).unwrap();
        // γ swaps the two A-representations
        assert_eq!(tm.matrices, vec![vec![vec![0, 1], vec![1, 0]]]);
        let c = completed_module(&tm, &b.degrees[1..]).unwrap();
        assert!(!c.stabilized);
    }
}
