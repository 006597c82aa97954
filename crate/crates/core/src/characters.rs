//! Irreducible characters of p-groups by monomial induction, and class
//! function arithmetic.

use std::collections::HashSet;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// Values on the conjugacy classes of one group, in that group's class order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ClassFunction {
    #[serde(skip)]
    group_id: u64,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(g: &FiniteGroup, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != g.conjugacy_classes().len() {
            return Err(Error::Invalid(format!(
                "{} values for {} classes",
                values.len(),
                g.conjugacy_classes().len()
            )));
        }
        Ok(ClassFunction {
            group_id: g.id(),
            values,
        })
    }

    pub fn trivial(g: &FiniteGroup, conductor: u32) -> Self {
        ClassFunction {
            group_id: g.id(),
            values: vec![Cyclotomic::one(conductor); g.conjugacy_classes().len()],
        }
    }

    pub fn zero(g: &FiniteGroup, conductor: u32) -> Self {
        ClassFunction {
            group_id: g.id(),
            values: vec![Cyclotomic::zero(conductor); g.conjugacy_classes().len()],
        }
    }

    pub fn group_id(&self) -> u64 {
        self.group_id
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    pub fn conductor(&self) -> u32 {
        self.values[0].conductor()
    }

    /// Value at the identity class, when it is a rational integer.
    pub fn degree(&self) -> Option<i64> {
        self.values[0].as_integer().and_then(|d| d.to_i64())
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group_id == other.group_id && self.values.len() == other.values.len() {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(ClassFunction {
            group_id: self.group_id,
            values,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.checked_sub(b))
            .collect::<Result<_>>()?;
        Ok(ClassFunction {
            group_id: self.group_id,
            values,
        })
    }

    pub fn scale(&self, n: i64) -> Self {
        ClassFunction {
            group_id: self.group_id,
            values: self.values.iter().map(|v| v.scale_int(n)).collect(),
        }
    }

    /// Pointwise product.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.checked_mul(b))
            .collect::<Result<_>>()?;
        Ok(ClassFunction {
            group_id: self.group_id,
            values,
        })
    }

    pub fn conjugate(&self) -> Self {
        ClassFunction {
            group_id: self.group_id,
            values: self.values.iter().map(Cyclotomic::conjugate).collect(),
        }
    }

    pub fn lift(&self, conductor: u32) -> Result<Self> {
        let values = self
            .values
            .iter()
            .map(|v| v.lift(conductor))
            .collect::<Result<_>>()?;
        Ok(ClassFunction {
            group_id: self.group_id,
            values,
        })
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_integral)
    }
}

/// `(1/|G|) Σ_C |C| χ(C) conj(ψ(C))`.
pub fn inner_product(
    g: &FiniteGroup,
    chi: &ClassFunction,
    psi: &ClassFunction,
) -> Result<BigRational> {
    chi.same_group(psi)?;
    if chi.group_id != g.id() {
        return Err(Error::GroupMismatch);
    }
    let classes = g.conjugacy_classes();
    let mut acc = Cyclotomic::zero(chi.conductor());
    for (c, (a, b)) in chi.values.iter().zip(&psi.values).enumerate() {
        let term = a.checked_mul(&b.conjugate())?;
        acc = acc.checked_add(&term.scale_int(classes.classes[c].len() as i64))?;
    }
    let total = acc.as_rational().ok_or(Error::NotRational)?;
    Ok(total / BigRational::from_integer(g.order().into()))
}

/// Values of χ on the subgroup `h`, realized as its own group with
/// `embedding` from its element indices into `g`. The conductor is kept.
pub fn restrict(
    g: &FiniteGroup,
    chi: &ClassFunction,
    h: &FiniteGroup,
    embedding: &[usize],
) -> Result<ClassFunction> {
    if chi.group_id != g.id() {
        return Err(Error::GroupMismatch);
    }
    if embedding.len() != h.order() {
        return Err(Error::NotASubgroup);
    }
    let gcl = g.conjugacy_classes();
    let values = h
        .conjugacy_classes()
        .classes
        .iter()
        .map(|c| chi.values[gcl.class_of[embedding[c[0]]]].clone())
        .collect();
    Ok(ClassFunction {
        group_id: h.id(),
        values,
    })
}

/// Induced class function: `χ^G(C) = |G|/(|C||H|) Σ_{h ∈ C ∩ H} χ(h)`.
pub fn induce(
    h: &FiniteGroup,
    embedding: &[usize],
    chi: &ClassFunction,
    g: &FiniteGroup,
) -> Result<ClassFunction> {
    if chi.group_id != h.id() {
        return Err(Error::GroupMismatch);
    }
    if embedding.len() != h.order() || !g.order().is_multiple_of(h.order()) {
        return Err(Error::NotASubgroup);
    }
    let gcl = g.conjugacy_classes();
    let hcl = h.conjugacy_classes();
    let mut sums = vec![Cyclotomic::zero(chi.conductor()); gcl.len()];
    for (x, &gx) in embedding.iter().enumerate() {
        let c = gcl.class_of[gx];
        sums[c] = sums[c].checked_add(&chi.values[hcl.class_of[x]])?;
    }
    let values = sums
        .into_iter()
        .enumerate()
        .map(|(c, s)| {
            let factor =
                BigRational::new(g.order().into(), (gcl.classes[c].len() * h.order()).into());
            s.scale(&factor)
        })
        .collect();
    Ok(ClassFunction {
        group_id: g.id(),
        values,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    #[serde(skip)]
    group_id: u64,
    conductor: u32,
    irreducibles: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.irreducibles
            .iter()
            .map(|c| c.degree().expect("character degree"))
            .collect()
    }

    pub fn group_id(&self) -> u64 {
        self.group_id
    }

    /// Multiplicities of each irreducible in χ (inner products, not
    /// necessarily integral for arbitrary class functions).
    pub fn multiplicities(&self, g: &FiniteGroup, chi: &ClassFunction) -> Result<Vec<BigRational>> {
        self.irreducibles
            .iter()
            .map(|irr| inner_product(g, chi, irr))
            .collect()
    }

    /// Integer multiplicities of a virtual character.
    pub fn decompose(&self, g: &FiniteGroup, chi: &ClassFunction) -> Result<Vec<i64>> {
        self.multiplicities(g, chi)?
            .into_iter()
            .map(|q| {
                if q.is_integer() {
                    q.to_integer().to_i64().ok_or(Error::Overflow)
                } else {
                    Err(Error::DecompositionNotIntegral(format!("multiplicity {q}")))
                }
            })
            .collect()
    }

    /// Σ mᵢ χᵢ for integer multiplicities.
    pub fn combine(&self, g: &FiniteGroup, mult: &[i64]) -> ClassFunction {
        let mut acc = ClassFunction::zero(g, self.conductor);
        for (m, chi) in mult.iter().zip(&self.irreducibles) {
            if *m != 0 {
                acc = acc.add(&chi.scale(*m)).expect("same group");
            }
        }
        acc
    }
}

/// Linear characters of `h` (a subgroup of `g`) as exponent maps into Z/e,
/// indexed by position in `h.members()`.
fn linear_characters(g: &FiniteGroup, h: &Subgroup, e: usize) -> Vec<Vec<usize>> {
    let gens = g
        .subgroup_from_members(h.members())
        .expect("members form a subgroup")
        .generators()
        .to_vec();
    let steps: Vec<usize> = gens.iter().map(|&x| e / g.element_order(x)).collect();
    let counts: Vec<usize> = gens.iter().map(|&x| g.element_order(x)).collect();
    let mut out = Vec::new();
    let mut tuple = vec![0usize; gens.len()];
    loop {
        if let Some(map) = extend_linear(g, h, &gens, &tuple, &steps, e) {
            out.push(map);
        }
        // odometer
        let mut i = 0;
        loop {
            if i == tuple.len() {
                return out;
            }
            tuple[i] += 1;
            if tuple[i] < counts[i] {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
}

fn extend_linear(
    g: &FiniteGroup,
    h: &Subgroup,
    gens: &[usize],
    tuple: &[usize],
    steps: &[usize],
    e: usize,
) -> Option<Vec<usize>> {
    let n = h.order();
    let mut exp = vec![usize::MAX; n];
    exp[0] = 0;
    let mut queue = vec![0usize];
    let mut k = 0;
    while k < queue.len() {
        let x = h.members()[queue[k]];
        let ex = exp[queue[k]];
        for (i, &gen) in gens.iter().enumerate() {
            let y = g.mul(gen, x);
            let py = h.position(y).expect("closed subgroup");
            let ey = (ex + tuple[i] * steps[i]) % e;
            if exp[py] == usize::MAX {
                exp[py] = ey;
                queue.push(py);
            } else if exp[py] != ey {
                return None;
            }
        }
        k += 1;
    }
    Some(exp)
}

/// The complete irreducible character table of a p-group, with values in
/// Q(ζ_exp(G)).
///
/// Every irreducible character of a p-group is induced from a linear
/// character of a subgroup whose index is the character degree, so it is
/// enough to induce linear characters from subgroups H with [G:H]² ≤ |G|.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let n = g.order();
    if n > 1 && g.prime().is_none() {
        return Err(Error::NotAPrimePowerGroup(n));
    }
    let e = g.exponent();
    let conductor = e as u32;
    let classes = g.conjugacy_classes();
    let mut subgroups: Vec<Subgroup> = g
        .all_subgroups()?
        .into_iter()
        .filter(|h| {
            let idx = n / h.order();
            idx * idx <= n
        })
        .collect();
    subgroups.sort_by(|a, b| b.order().cmp(&a.order()).then(a.members().cmp(b.members())));

    let mut seen: HashSet<Vec<Cyclotomic>> = HashSet::new();
    let mut irr: Vec<ClassFunction> = Vec::new();
    let mut square_sum = 0usize;
    'outer: for h in &subgroups {
        let idx = n / h.order();
        if square_sum + idx * idx > n {
            continue;
        }
        for lambda in linear_characters(g, h, e) {
            // counts[c][k]: elements of class c ∩ H with λ = ζ^k
            let mut counts = vec![vec![0i64; e]; classes.len()];
            for (pos, &x) in h.members().iter().enumerate() {
                counts[classes.class_of[x]][lambda[pos]] += 1;
            }
            let values: Vec<Cyclotomic> = counts
                .iter()
                .enumerate()
                .map(|(c, cnt)| {
                    let factor =
                        BigRational::new(n.into(), (classes.classes[c].len() * h.order()).into());
                    Cyclotomic::from_exponent_counts(conductor, cnt).scale(&factor)
                })
                .collect();
            if seen.contains(&values) {
                continue;
            }
            let chi = ClassFunction {
                group_id: g.id(),
                values,
            };
            let norm = inner_product(g, &chi, &chi)?;
            if norm.is_one() {
                seen.insert(chi.values.clone());
                square_sum += idx * idx;
                irr.push(chi);
                if square_sum == n {
                    break 'outer;
                }
            } else if norm.is_zero() {
                unreachable!("nonzero character with zero norm");
            }
        }
    }
    if square_sum != n {
        return Err(Error::Invalid(format!(
            "monomial induction found degrees summing to {square_sum} of {n}"
        )));
    }
    irr.sort_by(|a, b| {
        let da = a.degree().expect("degree");
        let db = b.degree().expect("degree");
        da.cmp(&db).then_with(|| b.values.cmp(&a.values))
    });
    Ok(CharacterTable {
        group_id: g.id(),
        conductor,
        irreducibles: irr,
    })
}
