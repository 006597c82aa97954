//! Hilbert bases of `{x ∈ Z≥0^n : M x = 0}` via a Graver completion of the
//! kernel lattice.
//!
//! The kernel is parametrized as `x = K t`. Coordinates whose linear forms in
//! `t` are positive multiples of one primitive form are merged, which leaves
//! the sign and order structure unchanged while shrinking the ambient
//! dimension (invariant multiplicity vectors repeat the same form across
//! whole orbits of irreducibles).

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};
use crate::intmat::{gcd, kernel_basis};

pub const DEFAULT_HILBERT_CAP: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HilbertOptions {
    /// Bound on the number of Graver elements and queued candidates.
    pub cap: usize,
}

impl Default for HilbertOptions {
    fn default() -> Self {
        HilbertOptions {
            cap: DEFAULT_HILBERT_CAP,
        }
    }
}

/// `u ⊑ v`: same sign as `v` in every coordinate and no larger in absolute value.
fn conformal_le(u: &[i128], v: &[i128]) -> bool {
    u.iter().zip(v).all(|(&a, &b)| {
        if a == 0 {
            true
        } else if a > 0 {
            b >= a
        } else {
            b <= a
        }
    })
}

fn l1(v: &[i128]) -> i128 {
    v.iter().map(|x| x.abs()).sum()
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Elem {
    y: Vec<i128>,
    t: Vec<i128>,
}

impl Elem {
    fn neg(&self) -> Elem {
        Elem {
            y: self.y.iter().map(|x| -x).collect(),
            t: self.t.iter().map(|x| -x).collect(),
        }
    }

    fn add(&self, o: &Elem) -> Result<Elem> {
        let f = |a: &[i128], b: &[i128]| -> Result<Vec<i128>> {
            a.iter()
                .zip(b)
                .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow))
                .collect()
        };
        Ok(Elem {
            y: f(&self.y, &o.y)?,
            t: f(&self.t, &o.t)?,
        })
    }

    fn sub(&self, o: &Elem) -> Result<Elem> {
        self.add(&o.neg())
    }
}

fn normal_form(mut v: Elem, basis: &[Elem]) -> Result<Elem> {
    'again: loop {
        if v.y.iter().all(|&x| x == 0) {
            return Ok(v);
        }
        for g in basis {
            if conformal_le(&g.y, &v.y) {
                v = v.sub(g)?;
                continue 'again;
            }
        }
        return Ok(v);
    }
}

/// Graver basis of the lattice `{F t : t ∈ Z^r}` by completion, returned
/// with the parameter vectors `t`.
fn graver(forms: &[Vec<i128>], rank: usize, cap: usize) -> Result<Vec<Elem>> {
    let image = |t: &[i128]| -> Vec<i128> {
        forms
            .iter()
            .map(|f| f.iter().zip(t).map(|(a, b)| a * b).sum())
            .collect()
    };
    let mut basis: Vec<Elem> = Vec::new();
    let mut known: HashSet<Vec<i128>> = HashSet::new();
    let mut queue: BinaryHeap<Reverse<(i128, Elem)>> = BinaryHeap::new();
    for i in 0..rank {
        let mut t = vec![0i128; rank];
        t[i] = 1;
        let e = Elem { y: image(&t), t };
        queue.push(Reverse((l1(&e.y), e.neg())));
        queue.push(Reverse((l1(&e.y), e)));
    }
    while let Some(Reverse((_, s))) = queue.pop() {
        let f = normal_form(s, &basis)?;
        if f.y.iter().all(|&x| x == 0) || known.contains(&f.y) {
            continue;
        }
        for new in [f.clone(), f.neg()] {
            for g in &basis {
                // conformal pairs reduce to zero immediately
                if conformal_le(&g.y, &new.y) || conformal_le(&new.y, &g.y) {
                    continue;
                }
                let s = new.add(g)?;
                if s.y.iter().any(|&x| x != 0) {
                    queue.push(Reverse((l1(&s.y), s)));
                }
            }
            known.insert(new.y.clone());
            basis.push(new);
        }
        if basis.len() > cap || queue.len() > cap {
            return Err(Error::HilbertCapExceeded(cap));
        }
    }
    Ok(basis)
}

/// Minimal generating set of the monoid `{x ∈ Z≥0^n : M x = 0}`, sorted by
/// total sum and then in descending lexicographic order.
pub fn hilbert_basis(m: &[Vec<i128>], n: usize, opts: HilbertOptions) -> Result<Vec<Vec<i128>>> {
    let k = kernel_basis(m, n)?;
    let rank = k.len();
    if rank == 0 {
        return Ok(Vec::new());
    }
    // coordinate i of K t is Σ_j k[j][i] t_j
    let mut forms: Vec<Vec<i128>> = Vec::new();
    for i in 0..n {
        let row: Vec<i128> = k.iter().map(|kj| kj[i]).collect();
        let g = row.iter().fold(0, |acc, &x| gcd(acc, x));
        if g == 0 {
            continue;
        }
        let prim: Vec<i128> = row.iter().map(|x| x / g).collect();
        if !forms.contains(&prim) {
            forms.push(prim);
        }
    }
    let graver = graver(&forms, rank, opts.cap)?;
    let mut nonneg: Vec<Vec<i128>> = graver
        .into_iter()
        .filter(|e| e.y.iter().all(|&x| x >= 0))
        .map(|e| {
            (0..n)
                .map(|i| k.iter().zip(&e.t).map(|(kj, tj)| kj[i] * tj).sum())
                .collect()
        })
        .collect();
    nonneg.sort();
    nonneg.dedup();
    let minimal: Vec<Vec<i128>> = nonneg
        .iter()
        .filter(|v| {
            !nonneg
                .iter()
                .any(|u| u != *v && u.iter().zip(v.iter()).all(|(a, b)| a <= b))
        })
        .cloned()
        .collect();
    let mut out = minimal;
    out.sort_by(|a, b| {
        a.iter()
            .sum::<i128>()
            .cmp(&b.iter().sum::<i128>())
            .then_with(|| b.cmp(a))
    });
    Ok(out)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Minimal nonzero solutions among all vectors with `0 ≤ x ≤ bound`.
    pub(crate) fn brute_force(m: &[Vec<i128>], bound: &[i128]) -> Vec<Vec<i128>> {
        let n = bound.len();
        let mut sols: Vec<Vec<i128>> = Vec::new();
        let mut x = vec![0i128; n];
        loop {
            let mut i = 0;
            loop {
                if i == n {
                    let mut min: Vec<Vec<i128>> = sols
                        .iter()
                        .filter(|v| {
                            !sols
                                .iter()
                                .any(|u| u != *v && u.iter().zip(v.iter()).all(|(a, b)| a <= b))
                        })
                        .cloned()
                        .collect();
                    min.sort();
                    return min;
                }
                x[i] += 1;
                if x[i] <= bound[i] {
                    break;
                }
                x[i] = 0;
                i += 1;
            }
            if m.iter()
                .all(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum::<i128>() == 0)
            {
                sols.push(x.clone());
            }
        }
    }

    fn sorted(mut v: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
        v.sort();
        v
    }

    #[test]
    fn trivial_systems() {
        let hb = hilbert_basis(&[], 3, HilbertOptions::default()).unwrap();
        assert_eq!(hb, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let hb = hilbert_basis(&[vec![1, -1]], 2, HilbertOptions::default()).unwrap();
        assert_eq!(hb, vec![vec![1, 1]]);
        let hb = hilbert_basis(&[vec![1, 1]], 2, HilbertOptions::default()).unwrap();
        assert!(hb.is_empty());
    }

    #[test]
    fn non_unimodular_cone() {
        // x + y = 2z has Hilbert basis (2,0,1), (1,1,1), (0,2,1)
        let m = vec![vec![1, 1, -2]];
        let hb = hilbert_basis(&m, 3, HilbertOptions::default()).unwrap();
        assert_eq!(
            sorted(hb),
            vec![vec![0, 2, 1], vec![1, 1, 1], vec![2, 0, 1]]
        );
        // x + 2y = 3z: brute force is exhaustive with bound 3
        let m = vec![vec![1, 2, -3]];
        let hb = hilbert_basis(&m, 3, HilbertOptions::default()).unwrap();
        assert_eq!(sorted(hb), brute_force(&m, &[3, 3, 3]));
    }

    #[test]
    fn cap_is_reported() {
        let m = vec![vec![7, 11, -13]];
        assert_eq!(
            hilbert_basis(&m, 3, HilbertOptions { cap: 3 }).unwrap_err(),
            Error::HilbertCapExceeded(3)
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn agrees_with_brute_force(
            m in proptest::collection::vec(proptest::collection::vec(-2i128..=2, 4), 1..=2)
        ) {
            // minimal solutions inside the box are exactly the Hilbert basis
            // elements that fit in the box
            let hb = hilbert_basis(&m, 4, HilbertOptions::default()).unwrap();
            for v in &hb {
                prop_assert!(m.iter().all(|r| r.iter().zip(v).map(|(a, b)| a * b).sum::<i128>() == 0));
            }
            let boxed: Vec<_> = hb.into_iter().filter(|v| v.iter().all(|&x| x <= 6)).collect();
            prop_assert_eq!(sorted(boxed), brute_force(&m, &[6, 6, 6, 6]));
        }
    }
}
