//! F-invariant representations of S as multiplicity vectors over Irr(S).

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::characters::{CharacterTable, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::hilbert::{hilbert_basis, HilbertOptions};
use crate::intmat::{rank_rational, solve_rational};

/// S-classes grouped by F-class, each list sorted ascending.
pub fn fusion_class_blocks(f: &FusionSystem) -> Vec<Vec<usize>> {
    let g = f.group();
    let cc = g.conjugacy_classes();
    f.element_classes()
        .classes
        .iter()
        .map(|members| {
            let mut s: Vec<usize> = members.iter().map(|&x| cc.class_of[x]).collect();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect()
}

/// Rows `Σ_i m_i (χ_i(C) − χ_i(C₀)) = 0`, one per rational coordinate, for
/// every S-class `C` fused with the least S-class `C₀` of its F-class.
pub fn invariance_matrix(f: &FusionSystem, table: &CharacterTable) -> Vec<Vec<i128>> {
    let phi = table
        .irreducibles()
        .first()
        .map_or(1, |chi| chi.value(0).coeffs().len());
    let mut rows = Vec::new();
    for block in fusion_class_blocks(f) {
        let c0 = block[0];
        for &c in &block[1..] {
            for k in 0..phi {
                let row: Vec<i128> = table
                    .irreducibles()
                    .iter()
                    .map(|chi| {
                        let d = &chi.value(c).coeffs()[k] - &chi.value(c0).coeffs()[k];
                        // character values are algebraic integers
                        d.to_integer().to_i128().expect("small coordinate")
                    })
                    .collect();
                if row.iter().any(|&x| x != 0) && !rows.contains(&row) {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantBasis {
    /// Multiplicity vectors over Irr(S); the trivial representation first.
    pub elements: Vec<Vec<i64>>,
    #[serde(skip)]
    pub characters: Vec<ClassFunction>,
    pub degrees: Vec<i64>,
    pub names: Vec<String>,
    /// The least S-class of each F-class.
    pub class_representatives: Vec<usize>,
}

impl InvariantBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Values of basis element `i` on the F-class representatives.
    pub fn values_on_classes(&self, i: usize) -> Vec<Cyclotomic> {
        self.class_representatives
            .iter()
            .map(|&c| self.characters[i].value(c).clone())
            .collect()
    }

    /// Applies names to the nontrivial elements in basis order.
    pub fn rename(&mut self, names: &[String]) -> Result<()> {
        if names.len() != self.len() - 1 {
            return Err(Error::Invalid(format!(
                "expected {} names, got {}",
                self.len() - 1,
                names.len()
            )));
        }
        for (slot, name) in self.names[1..].iter_mut().zip(names) {
            *slot = name.clone();
        }
        Ok(())
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Canonical order: by degree, then descending multiplicity vectors.
fn canonical_order(a: &(i64, Vec<i64>), b: &(i64, Vec<i64>)) -> std::cmp::Ordering {
    a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1))
}

pub fn irreducible_invariants(
    f: &FusionSystem,
    table: &CharacterTable,
    opts: HilbertOptions,
) -> Result<InvariantBasis> {
    let g = f.group();
    let n = table.len();
    let m = invariance_matrix(f, table);
    let hb = hilbert_basis(&m, n, opts)?;
    let degrees = table.degrees();
    let mut keyed: Vec<(i64, Vec<i64>)> = hb
        .into_iter()
        .map(|v| {
            let v: Vec<i64> = v.into_iter().map(|x| x as i64).collect();
            (v.iter().zip(&degrees).map(|(a, b)| a * b).sum(), v)
        })
        .collect();
    keyed.sort_by(canonical_order);
    let blocks = fusion_class_blocks(f);
    let count = blocks.len();
    if keyed.len() != count {
        return Err(Error::Invalid(format!(
            "{} irreducible invariants but {} fusion classes",
            keyed.len(),
            count
        )));
    }
    let as_rational: Vec<Vec<BigRational>> = keyed
        .iter()
        .map(|(_, v)| {
            v.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect();
    if rank_rational(&as_rational) != count {
        return Err(Error::Invalid(
            "invariant characters are linearly dependent".into(),
        ));
    }
    let characters = keyed.iter().map(|(_, v)| table.combine(g, v)).collect();
    let names = (0..count)
        .map(|i| {
            if i == 0 {
                "1".to_string()
            } else {
                format!("X{i}")
            }
        })
        .collect();
    Ok(InvariantBasis {
        degrees: keyed.iter().map(|(d, _)| *d).collect(),
        elements: keyed.into_iter().map(|(_, v)| v).collect(),
        characters,
        names,
        class_representatives: blocks.iter().map(|b| b[0]).collect(),
    })
}

/// Constant on every F-class.
pub fn is_stable(f: &FusionSystem, chi: &ClassFunction) -> bool {
    fusion_class_blocks(f)
        .iter()
        .all(|b| b.iter().all(|&c| chi.value(c) == chi.value(b[0])))
}

/// `χ ∘ φ = χ` on the domain of every fusion generator.
pub fn is_stable_on_generators(f: &FusionSystem, chi: &ClassFunction) -> bool {
    let cc = f.group().conjugacy_classes();
    f.generators().iter().all(|hom| {
        hom.domain()
            .members()
            .iter()
            .zip(hom.images())
            .all(|(&x, &y)| chi.value(cc.class_of[x]) == chi.value(cc.class_of[y]))
    })
}

/// Coefficients of an invariant (possibly virtual) multiplicity vector over
/// the basis.
pub fn decompose(
    f: &FusionSystem,
    table: &CharacterTable,
    v: &[i64],
    basis: &InvariantBasis,
) -> Result<Vec<i64>> {
    if v.len() != table.len() {
        return Err(Error::Invalid(
            "vector length differs from the number of irreducibles".into(),
        ));
    }
    let m = invariance_matrix(f, table);
    if m.iter()
        .any(|row| row.iter().zip(v).map(|(a, &b)| a * b as i128).sum::<i128>() != 0)
    {
        return Err(Error::NotInvariant);
    }
    let r = |x: i64| BigRational::from_integer(x.into());
    let columns: Vec<Vec<BigRational>> = basis
        .elements
        .iter()
        .map(|e| e.iter().map(|&x| r(x)).collect())
        .collect();
    let target: Vec<BigRational> = v.iter().map(|&x| r(x)).collect();
    let sol = solve_rational(&columns, &target).ok_or(Error::NotInSpan)?;
    sol.iter()
        .map(|q| {
            if q.is_integer() {
                q.to_integer().to_i64().ok_or(Error::Overflow)
            } else {
                Err(Error::NotInSpan)
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringReport {
    pub covered: bool,
    /// Irreducibles of S with multiplicity zero in every basis element.
    pub uncovered: Vec<usize>,
}

pub fn covering_check(basis: &InvariantBasis, irreducible_count: usize) -> CoveringReport {
    let uncovered: Vec<usize> = (0..irreducible_count)
        .filter(|&i| basis.elements.iter().all(|e| e[i] == 0))
        .collect();
    CoveringReport {
        covered: uncovered.is_empty(),
        uncovered,
    }
}

/// Multiplicity vector of a class function that is a virtual character.
pub fn multiplicities_of(
    f: &FusionSystem,
    table: &CharacterTable,
    chi: &ClassFunction,
) -> Result<Vec<i64>> {
    table.decompose(f.group(), chi)
}
