//! Presentations of R(F) by quadratic rewriting relations, their I(F)-adic
//! completions, and lattice arithmetic for ideals.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::characters::{CharacterTable, ClassFunction};
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::intmat::{hnf, lattice_contains, quotient_structure};
use crate::invariants::{decompose, InvariantBasis};

pub const ADIC_EXPONENT_CAP: usize = 64;

/// Integer polynomial in a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i128>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: i128) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(e, 1);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: i128) {
        let entry = self.terms.entry(exps).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> i128 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> i128 {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (e, &c) in &o.terms {
            r.add_term(e.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i128) -> Poly {
        let mut r = Poly::zero(self.nvars);
        if k != 0 {
            for (e, &c) in &self.terms {
                r.terms.insert(e.clone(), c * k);
            }
        }
        r
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut r = Poly::zero(self.nvars);
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    /// Substitutes `x_i ↦ images[i]`.
    pub fn compose(&self, images: &[Poly]) -> Poly {
        let n = images.first().map_or(self.nvars, Poly::nvars);
        let mut r = Poly::zero(n);
        for (e, &c) in &self.terms {
            let mut t = Poly::constant(n, c);
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t.mul(&images[i]);
                }
            }
            r = r.add(&t);
        }
        r
    }

    /// Terms in graded lexicographic order, largest first.
    pub fn terms_grlex(&self) -> Vec<(&[u32], i128)> {
        let mut v: Vec<(&[u32], i128)> =
            self.terms.iter().map(|(e, &c)| (e.as_slice(), c)).collect();
        v.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        v
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms_grlex().into_iter().enumerate() {
            let mono: String = e
                .iter()
                .zip(names)
                .filter(|(&p, _)| p > 0)
                .map(|(&p, n)| {
                    if p == 1 {
                        n.clone()
                    } else {
                        format!("{n}^{p}")
                    }
                })
                .collect();
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    s.push('-');
                }
            } else {
                let _ = write!(s, " {sign} ");
            }
            let a = c.unsigned_abs();
            if mono.is_empty() {
                let _ = write!(s, "{a}");
            } else if a == 1 {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{a}{mono}");
            }
        }
        s
    }

    /// Evaluates on class functions (`values[i]` for `x_i`).
    pub fn evaluate(&self, values: &[ClassFunction], one: &ClassFunction) -> Result<ClassFunction> {
        let mut acc = one.scale(0);
        for (e, &c) in &self.terms {
            let mut t = one.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t.tensor(&values[i])?;
                }
            }
            let c = i64::try_from(c).map_err(|_| Error::Overflow)?;
            acc = acc.add(&t.scale(c))?;
        }
        Ok(acc)
    }
}

/// Multiplication table of a commutative ring with Z-basis `e_0 = 1, e_1, …`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MulTable {
    /// `c[i][j][k]`: coefficient of `e_k` in `e_i e_j`.
    pub c: Vec<Vec<Vec<i128>>>,
}

impl MulTable {
    pub fn dim(&self) -> usize {
        self.c.len()
    }

    pub fn mul(&self, u: &[i128], v: &[i128]) -> Result<Vec<i128>> {
        let n = self.dim();
        let mut out = vec![0i128; n];
        for (i, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = a.checked_mul(b).ok_or(Error::Overflow)?;
                for (k, &c) in self.c[i][j].iter().enumerate() {
                    if c != 0 {
                        let t = ab.checked_mul(c).ok_or(Error::Overflow)?;
                        out[k] = out[k].checked_add(t).ok_or(Error::Overflow)?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_associative(&self) -> Result<bool> {
        let n = self.dim();
        let unit = |i: usize| -> Vec<i128> { (0..n).map(|k| (k == i) as i128).collect() };
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(&unit(i), &unit(j))?;
                for k in 0..n {
                    let left = self.mul(&ij, &unit(k))?;
                    let jk = self.mul(&unit(j), &unit(k))?;
                    if left != self.mul(&unit(i), &jk)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.c[i][j] == self.c[j][i]))
    }
}

/// R(S) on the basis Irr(S), by decomposing tensor products.
pub fn representation_ring(
    g: &crate::group::FiniteGroup,
    table: &CharacterTable,
) -> Result<MulTable> {
    let irr = table.irreducibles();
    let n = irr.len();
    let mut c = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in i..n {
            let prod = irr[i].tensor(&irr[j])?;
            let m: Vec<i128> = table
                .decompose(g, &prod)?
                .into_iter()
                .map(i128::from)
                .collect();
            if m.iter().any(|&x| x < 0) {
                return Err(Error::DecompositionNotIntegral(
                    "negative multiplicity".into(),
                ));
            }
            c[i][j] = m.clone();
            c[j][i] = m;
        }
    }
    Ok(MulTable { c })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingPresentation {
    /// Names of the nontrivial basis elements.
    pub names: Vec<String>,
    pub degrees: Vec<i64>,
    /// Multiplication table on `1, X_1, …, X_m`.
    pub table: MulTable,
    #[serde(skip)]
    pub relations: Vec<Poly>,
}

/// `X_i X_j = c⁰ + Σ c^k X_k` by tensoring basis characters.
pub fn structure_constants(
    f: &FusionSystem,
    table: &CharacterTable,
    basis: &InvariantBasis,
) -> Result<MulTable> {
    let g = f.group();
    let n = basis.len();
    let mut c = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in i..n {
            let prod = basis.characters[i].tensor(&basis.characters[j])?;
            let mult = table.decompose(g, &prod)?;
            let coeffs = decompose(f, table, &mult, basis).map_err(|e| match e {
                Error::NotInSpan | Error::NotInvariant => Error::DecompositionNotIntegral(format!(
                    "product of basis elements {i} and {j}: {e}"
                )),
                e => e,
            })?;
            if coeffs.iter().any(|&x| x < 0) {
                return Err(Error::DecompositionNotIntegral(format!(
                    "negative structure constant in product {i}·{j}"
                )));
            }
            let coeffs: Vec<i128> = coeffs.into_iter().map(i128::from).collect();
            c[i][j] = coeffs.clone();
            c[j][i] = coeffs;
        }
    }
    Ok(MulTable { c })
}

pub fn presentation(
    names: &[String],
    degrees: &[i64],
    table: MulTable,
) -> Result<RingPresentation> {
    let m = names.len();
    if table.dim() != m + 1 || degrees.len() != m {
        return Err(Error::Invalid("presentation data sizes disagree".into()));
    }
    for i in 0..m {
        for j in 0..m {
            let lhs = degrees[i] as i128 * degrees[j] as i128;
            let c = &table.c[i + 1][j + 1];
            let rhs = c[0] + (0..m).map(|k| c[k + 1] * degrees[k] as i128).sum::<i128>();
            if lhs != rhs {
                return Err(Error::DecompositionNotIntegral(format!(
                    "degree check fails for {}·{}",
                    names[i], names[j]
                )));
            }
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..m).map(|i| (i, i)).collect();
    for i in 0..m {
        for j in i + 1..m {
            pairs.push((i, j));
        }
    }
    let relations = pairs
        .into_iter()
        .map(|(i, j)| {
            let c = &table.c[i + 1][j + 1];
            let mut p = Poly::var(m, i).mul(&Poly::var(m, j));
            p = p.sub(&Poly::constant(m, c[0]));
            for k in 0..m {
                p = p.sub(&Poly::var(m, k).scale(c[k + 1]));
            }
            p
        })
        .collect();
    Ok(RingPresentation {
        names: names.to_vec(),
        degrees: degrees.to_vec(),
        table,
        relations,
    })
}

impl RingPresentation {
    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn relation_strings(&self) -> Vec<String> {
        self.relations
            .iter()
            .map(|r| r.format(&self.names))
            .collect()
    }
}

impl std::fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.names.is_empty() {
            return write!(f, "Z");
        }
        write!(f, "Z[{}]", self.names.join(","))?;
        if !self.relations.is_empty() {
            write!(f, "/( {} )", self.relation_strings().join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletedPresentation {
    pub names: Vec<String>,
    pub relations: Vec<Poly>,
}

impl CompletedPresentation {
    pub fn relation_strings(&self) -> Vec<String> {
        self.relations
            .iter()
            .map(|r| r.format(&self.names))
            .collect()
    }
}

impl std::fmt::Display for CompletedPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.names.is_empty() {
            return write!(f, "Z");
        }
        write!(f, "Z[[{}]]", self.names.join(","))?;
        if !self.relations.is_empty() {
            write!(f, "/( {} )", self.relation_strings().join(", "))?;
        }
        Ok(())
    }
}

/// Substitutes `X_i = v_i + d_i`; every relation lies in the augmentation
/// kernel, so constant terms vanish.
pub fn completed_presentation(
    p: &RingPresentation,
    names: &[String],
) -> Result<CompletedPresentation> {
    let m = p.rank();
    if names.len() != m {
        return Err(Error::Invalid(format!(
            "expected {m} completed names, got {}",
            names.len()
        )));
    }
    let shift: Vec<Poly> = (0..m)
        .map(|i| Poly::var(m, i).add(&Poly::constant(m, p.degrees[i] as i128)))
        .collect();
    let mut relations = Vec::new();
    for r in &p.relations {
        let s = r.compose(&shift);
        if s.constant_term() != 0 {
            return Err(Error::NonzeroConstantTerm(s.format(names)));
        }
        relations.push(s);
    }
    Ok(CompletedPresentation {
        names: names.to_vec(),
        relations,
    })
}

pub fn default_completed_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("v{i}")).collect()
}

/// A sublattice of the ambient ring's additive group, kept in HNF.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealLattice {
    pub dim: usize,
    pub basis: Vec<Vec<i128>>,
}

impl IdealLattice {
    pub fn new(dim: usize, generators: &[Vec<i128>]) -> Result<Self> {
        if generators.iter().any(|g| g.len() != dim) {
            return Err(Error::AmbientMismatch);
        }
        Ok(IdealLattice {
            dim,
            basis: hnf(generators)?,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &IdealLattice) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::AmbientMismatch);
        }
        for v in &other.basis {
            if !lattice_contains(&self.basis, v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal generated by the lattice: all products with basis elements.
    pub fn ideal_closure(&self, ring: &MulTable) -> Result<IdealLattice> {
        if ring.dim() != self.dim {
            return Err(Error::AmbientMismatch);
        }
        let mut gens = Vec::new();
        for v in &self.basis {
            for k in 0..self.dim {
                let e: Vec<i128> = (0..self.dim).map(|i| (i == k) as i128).collect();
                gens.push(ring.mul(v, &e)?);
            }
        }
        IdealLattice::new(self.dim, &gens)
    }

    /// `Z^dim / L` as (free rank, torsion invariants).
    pub fn quotient(&self) -> Result<(usize, Vec<i128>)> {
        quotient_structure(&self.basis, self.dim)
    }
}

pub fn ideal_product(a: &IdealLattice, b: &IdealLattice, ring: &MulTable) -> Result<IdealLattice> {
    if a.dim != b.dim || a.dim != ring.dim() {
        return Err(Error::AmbientMismatch);
    }
    let mut gens = Vec::new();
    for u in &a.basis {
        for v in &b.basis {
            gens.push(ring.mul(u, v)?);
        }
    }
    IdealLattice::new(a.dim, &gens)
}

pub fn ideal_power(a: &IdealLattice, k: usize, ring: &MulTable) -> Result<IdealLattice> {
    if k == 0 {
        let one: Vec<i128> = (0..a.dim).map(|i| (i == 0) as i128).collect();
        return IdealLattice::new(a.dim, &[one]);
    }
    let mut p = a.clone();
    for _ in 1..k {
        p = ideal_product(&p, a, ring)?;
    }
    Ok(p)
}

/// Span of `{e_i − d_i}` for `i ≥ 1`.
pub fn augmentation_ideal(degrees: &[i64]) -> Result<IdealLattice> {
    let n = degrees.len();
    let gens: Vec<Vec<i128>> = (1..n)
        .map(|i| {
            let mut v = vec![0i128; n];
            v[i] = 1;
            v[0] = -(degrees[i] as i128);
            v
        })
        .collect();
    IdealLattice::new(n, &gens)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdicReport {
    pub k: usize,
    pub m: usize,
    /// Ranks and torsion of `R(S)/I(S)^j` for `j = 1..=m`.
    pub quotients: Vec<(usize, Vec<i128>)>,
}

/// Least `m` with `I(S)^m ⊆ (I(F)·R(S))^k`, with `basis_in_s` the invariant
/// basis as vectors over Irr(S).
pub fn adic_equivalence_exponent(
    rs: &MulTable,
    s_degrees: &[i64],
    basis_in_s: &[Vec<i64>],
    basis_degrees: &[i64],
    k: usize,
) -> Result<AdicReport> {
    if k == 0 {
        return Err(Error::Invalid("k must be at least 1".into()));
    }
    let n = rs.dim();
    let i_s = augmentation_ideal(s_degrees)?;
    let gens: Vec<Vec<i128>> = basis_in_s
        .iter()
        .zip(basis_degrees)
        .skip(1)
        .map(|(v, &d)| {
            let mut w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
            w[0] -= d as i128;
            w
        })
        .collect();
    let j = IdealLattice::new(n, &gens)?.ideal_closure(rs)?;
    let jk = ideal_power(&j, k, rs)?;
    let isk = ideal_power(&i_s, k, rs)?;
    if !isk.contains(&jk)? {
        return Err(Error::Invalid(
            "(I(F)R(S))^k is not contained in I(S)^k".into(),
        ));
    }
    let mut power = i_s.clone();
    let mut quotients = Vec::new();
    for m in 1..=ADIC_EXPONENT_CAP {
        if m > 1 {
            let next = ideal_product(&power, &i_s, rs)?;
            if !power.contains(&next)? {
                return Err(Error::Invalid("ideal powers are not decreasing".into()));
            }
            power = next;
        }
        quotients.push(power.quotient()?);
        if jk.contains(&power)? {
            return Ok(AdicReport { k, m, quotients });
        }
    }
    Err(Error::ExponentCapExceeded(ADIC_EXPONENT_CAP))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::character_table;
    use crate::fusion::tests::{a4, group, sigma3};
    use crate::hilbert::HilbertOptions;
    use crate::invariants::irreducible_invariants;
    use std::sync::Arc;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn present(f: &FusionSystem, n: &[&str]) -> RingPresentation {
        let t = character_table(f.group()).unwrap();
        let b = irreducible_invariants(f, &t, HilbertOptions::default()).unwrap();
        let table = structure_constants(f, &t, &b).unwrap();
        presentation(&names(n), &b.degrees[1..], table).unwrap()
    }

    #[test]
    fn polynomial_printing() {
        let p = Poly::var(2, 0)
            .mul(&Poly::var(2, 0))
            .sub(&Poly::var(2, 0).scale(65))
            .sub(&Poly::var(2, 1).scale(66))
            .sub(&Poly::constant(2, 78));
        assert_eq!(p.format(&names(&["A", "B"])), "A^2 - 65A - 66B - 78");
        let q = Poly::var(2, 0)
            .mul(&Poly::var(2, 1))
            .scale(-1)
            .add(&Poly::var(2, 1));
        assert_eq!(q.format(&names(&["z", "w"])), "-zw + w");
        assert_eq!(Poly::zero(1).format(&names(&["x"])), "0");
    }

    #[test]
    fn sigma3_presentation() {
        let p = present(&sigma3(), &["x"]);
        assert_eq!(p.to_string(), "Z[x]/( x^2 - x - 2 )");
        let c = completed_presentation(&p, &names(&["y"])).unwrap();
        assert_eq!(c.to_string(), "Z[[y]]/( y^2 + 3y )");
        assert!(p.table.is_associative().unwrap());
    }

    #[test]
    fn a4_presentation() {
        let p = present(&a4(), &["x"]);
        assert_eq!(p.to_string(), "Z[x]/( x^2 - 2x - 3 )");
        let c = completed_presentation(&p, &names(&["y"])).unwrap();
        assert_eq!(c.to_string(), "Z[[y]]/( y^2 + 4y )");
    }

    #[test]
    fn trivial_fusion_on_z2() {
        let s = group(2, &["(1 2)"]);
        let f = FusionSystem::inner(s);
        let p = present(&f, &["g"]);
        assert_eq!(p.to_string(), "Z[g]/( g^2 - 1 )");
        let trivial = group(1, &[]);
        let f = FusionSystem::inner(trivial);
        let p = present(&f, &[]);
        assert_eq!(p.to_string(), "Z");
    }

    #[test]
    fn relations_vanish_on_characters() {
        let f = a4();
        let t = character_table(f.group()).unwrap();
        let b = irreducible_invariants(&f, &t, HilbertOptions::default()).unwrap();
        let table = structure_constants(&f, &t, &b).unwrap();
        let p = presentation(&names(&["x"]), &b.degrees[1..], table).unwrap();
        for r in &p.relations {
            let v = r.evaluate(&b.characters[1..], &b.characters[0]).unwrap();
            assert!(v.values().iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn z2_ideal_arithmetic() {
        let s = group(2, &["(1 2)"]);
        let t = character_table(&s).unwrap();
        let rs = representation_ring(&s, &t).unwrap();
        let i = augmentation_ideal(&t.degrees()).unwrap();
        // ⟨γ − 1⟩
        assert_eq!(i, IdealLattice::new(2, &[vec![-1, 1]]).unwrap());
        assert_eq!(i.rank(), 1);
        let i2 = ideal_product(&i, &i, &rs).unwrap();
        assert_eq!(i2, IdealLattice::new(2, &[vec![-2, 2]]).unwrap());
        assert!(i.contains(&i2).unwrap());
        assert!(!i2.contains(&i).unwrap());
        assert_eq!(i2.quotient().unwrap(), (1, vec![2]));
    }

    #[test]
    fn adic_exponents() {
        let s = Arc::new(
            crate::group::FiniteGroup::build(
                3,
                vec![crate::perm::Perm::parse_cycles("(1 2 3)", 3).unwrap()],
            )
            .unwrap(),
        );
        let t = character_table(&s).unwrap();
        let rs = representation_ring(&s, &t).unwrap();
        let f = FusionSystem::inner(Arc::clone(&s));
        let b = irreducible_invariants(&f, &t, HilbertOptions::default()).unwrap();
        for k in 1..=2 {
            let r =
                adic_equivalence_exponent(&rs, &t.degrees(), &b.elements, &b.degrees, k).unwrap();
            assert_eq!(r.m, k);
        }
        for f in [sigma3(), a4()] {
            let t = character_table(f.group()).unwrap();
            let rs = representation_ring(f.group(), &t).unwrap();
            assert!(rs.is_associative().unwrap());
            let b = irreducible_invariants(&f, &t, HilbertOptions::default()).unwrap();
            for k in 1..=2 {
                let r = adic_equivalence_exponent(&rs, &t.degrees(), &b.elements, &b.degrees, k)
                    .unwrap();
                assert!(r.m >= k && r.m <= ADIC_EXPONENT_CAP);
            }
        }
    }
}

#[cfg(test)]
mod extraspecial_tests {
    use super::*;
    use crate::characters::character_table;
    use crate::fusion::extraspecial_tests::onan_like;
    use crate::hilbert::HilbertOptions;
    use crate::invariants::irreducible_invariants;

    #[test]
    fn onan_type_presentation() {
        let f = onan_like();
        let t = character_table(f.group()).unwrap();
        let b = irreducible_invariants(&f, &t, HilbertOptions::default()).unwrap();
        let table = structure_constants(&f, &t, &b).unwrap();
        assert!(table.is_associative().unwrap());
        let names: Vec<String> = vec!["A".into(), "B".into()];
        let p = presentation(&names, &b.degrees[1..], table).unwrap();
        assert_eq!(
            p.relation_strings(),
            vec![
                "A^2 - 65A - 66B - 78",
                "B^2 - 108A - 107B - 120",
                "AB - 84A - 84B - 72"
            ]
        );
        let c = completed_presentation(&p, &["z".into(), "w".into()]).unwrap();
        assert_eq!(
            c.relation_strings(),
            vec!["z^2 + 235z - 66w", "w^2 - 108z + 277w", "zw + 108z + 66w"]
        );
    }
}
