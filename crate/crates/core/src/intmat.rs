//! Integer lattices: Hermite and Smith normal forms, integer kernels, and an
//! exact rational solver. All integer arithmetic is checked.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type IntMatrix = Vec<Vec<i128>>;

fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// `rows[dst] -= q * rows[src]`
fn row_axpy(rows: &mut [Vec<i128>], dst: usize, src: usize, q: i128) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    let (d, s) = if dst < src {
        let (lo, hi) = rows.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, &y) in d.iter_mut().zip(s.iter()) {
        *x = add(*x, -mul(q, y)?)?;
    }
    Ok(())
}

/// Row-style Hermite normal form of the lattice spanned by `rows`, zero rows
/// removed. Pivots are positive and entries above a pivot lie in
/// `[0, pivot)`, so the result is canonical for the lattice.
pub fn hnf(rows: &[Vec<i128>]) -> Result<IntMatrix> {
    let mut m: IntMatrix = rows
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .cloned()
        .collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..ncols {
        if pivot_row == m.len() {
            break;
        }
        loop {
            let best = (pivot_row..m.len())
                .filter(|&r| m[r][col] != 0)
                .min_by_key(|&r| m[r][col].unsigned_abs());
            let Some(best) = best else { break };
            m.swap(pivot_row, best);
            let p = m[pivot_row][col];
            let mut done = true;
            for r in pivot_row + 1..m.len() {
                if m[r][col] != 0 {
                    let q = m[r][col].div_euclid(p);
                    row_axpy(&mut m, r, pivot_row, q)?;
                    if m[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[pivot_row][col] == 0 {
            continue;
        }
        if m[pivot_row][col] < 0 {
            for x in m[pivot_row].iter_mut() {
                *x = -*x;
            }
        }
        let p = m[pivot_row][col];
        for r in 0..pivot_row {
            let q = m[r][col].div_euclid(p);
            row_axpy(&mut m, r, pivot_row, q)?;
        }
        pivots.push(col);
        pivot_row += 1;
    }
    m.truncate(pivot_row);
    Ok(m)
}

/// Reduces `v` by an HNF basis; the result is zero iff `v` is in the lattice.
pub fn hnf_reduce(basis: &[Vec<i128>], v: &[i128]) -> Result<Vec<i128>> {
    let mut v = v.to_vec();
    for row in basis {
        let col = row.iter().position(|&x| x != 0).expect("nonzero HNF row");
        if v[col] != 0 {
            let q = v[col].div_euclid(row[col]);
            for (x, &y) in v.iter_mut().zip(row) {
                *x = add(*x, -mul(q, y)?)?;
            }
        }
    }
    Ok(v)
}

pub fn lattice_contains(basis: &[Vec<i128>], v: &[i128]) -> Result<bool> {
    Ok(hnf_reduce(basis, v)?.iter().all(|&x| x == 0))
}

/// Integer basis of `{x : M x = 0}` for an `r × n` matrix, in HNF.
pub fn kernel_basis(m: &[Vec<i128>], n: usize) -> Result<IntMatrix> {
    let r = m.len();
    // row i = [column i of M | e_i]
    let mut aug: IntMatrix = (0..n)
        .map(|i| {
            let mut row: Vec<i128> = m.iter().map(|mr| mr[i]).collect();
            row.extend((0..n).map(|j| (i == j) as i128));
            row
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..r {
        if pivot_row == n {
            break;
        }
        loop {
            let best = (pivot_row..n)
                .filter(|&i| aug[i][col] != 0)
                .min_by_key(|&i| aug[i][col].unsigned_abs());
            let Some(best) = best else { break };
            aug.swap(pivot_row, best);
            let p = aug[pivot_row][col];
            let mut done = true;
            for i in pivot_row + 1..n {
                if aug[i][col] != 0 {
                    let q = aug[i][col].div_euclid(p);
                    row_axpy(&mut aug, i, pivot_row, q)?;
                    if aug[i][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if aug[pivot_row][col] != 0 {
            pivot_row += 1;
        }
    }
    let kernel: IntMatrix = aug[pivot_row..]
        .iter()
        .map(|row| row[r..].to_vec())
        .collect();
    hnf(&kernel)
}

/// Invariant factors of the matrix (nonzero diagonal of the Smith form).
pub fn smith_invariants(rows: &[Vec<i128>]) -> Result<Vec<i128>> {
    let mut a: IntMatrix = rows.to_vec();
    let nr = a.len();
    let nc = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if a[i][j] != 0
                    && best.is_none_or(|(bi, bj)| a[i][j].unsigned_abs() < a[bi][bj].unsigned_abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let p = a[t][t];
            let mut changed = false;
            for i in t + 1..nr {
                let q = a[i][t].div_euclid(p);
                row_axpy(&mut a, i, t, q)?;
                if a[i][t] != 0 {
                    changed = true;
                }
            }
            for j in t + 1..nc {
                let q = a[t][j].div_euclid(p);
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] = add(row[j], -mul(q, row[t])?)?;
                    }
                }
                if a[t][j] != 0 {
                    changed = true;
                }
            }
            if changed {
                // move the smallest remaining entry of row/column t to the pivot
                let mut bi = t;
                let mut bj = t;
                for i in t..nr {
                    if a[i][t] != 0 && a[i][t].unsigned_abs() < a[bi][bj].unsigned_abs() {
                        (bi, bj) = (i, t);
                    }
                }
                for j in t..nc {
                    if a[t][j] != 0 && a[t][j].unsigned_abs() < a[bi][bj].unsigned_abs() {
                        (bi, bj) = (t, j);
                    }
                }
                a.swap(t, bi);
                for row in a.iter_mut() {
                    row.swap(t, bj);
                }
                continue;
            }
            // divisibility of the remaining block
            let p = a[t][t];
            let bad = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    row_axpy(&mut a, t, i, -1)?;
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    Ok(diag)
}

/// Structure of `Z^n / L`: (free rank, nontrivial torsion invariants).
pub fn quotient_structure(lattice: &[Vec<i128>], n: usize) -> Result<(usize, Vec<i128>)> {
    let inv = smith_invariants(lattice)?;
    let torsion = inv.iter().copied().filter(|&d| d != 1).collect();
    Ok((n - inv.len(), torsion))
}

/// Exact solution of `Σ_j x_j columns[j] = target` over Q, if one exists
/// (unique when the columns are independent).
pub fn solve_rational(
    columns: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    let ncols = columns.len();
    let nrows = target.len();
    let mut a: Vec<Vec<BigRational>> = (0..nrows)
        .map(|i| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nrows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..=ncols {
                    let sub = &f * &a[r][j];
                    a[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = a[i][ncols].clone();
    }
    Some(x)
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn rank_rational(rows: &[Vec<BigRational>]) -> usize {
    let mut a = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for j in c..ncols {
                    let sub = &f * &a[r][j];
                    a[i][j] -= sub;
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat_vec(m: &[Vec<i128>], x: &[i128]) -> Vec<i128> {
        m.iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    #[test]
    fn hnf_small() {
        let h = hnf(&[vec![2, 4], vec![3, 5]]).unwrap();
        assert_eq!(h, vec![vec![1, 1], vec![0, 2]]);
        assert!(lattice_contains(&h, &[5, 9]).unwrap());
        assert!(!lattice_contains(&h, &[0, 1]).unwrap());
        assert!(hnf(&[vec![0, 0]]).unwrap().is_empty());
    }

    #[test]
    fn kernel_of_simple_systems() {
        let k = kernel_basis(&[vec![1, -1]], 2).unwrap();
        assert_eq!(k, vec![vec![1, 1]]);
        let k = kernel_basis(&[], 3).unwrap();
        assert_eq!(k.len(), 3);
        let k = kernel_basis(&[vec![2, 4, 6]], 3).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(mat_vec(&[vec![2, 4, 6]], v), vec![0]);
        }
    }

    #[test]
    fn smith_forms() {
        assert_eq!(
            smith_invariants(&[vec![2, 0], vec![0, 3]]).unwrap(),
            vec![1, 6]
        );
        assert_eq!(
            smith_invariants(&[vec![2, 4], vec![6, 8]]).unwrap(),
            vec![2, 4]
        );
        assert_eq!(
            quotient_structure(&[vec![2, 0, 0]], 3).unwrap(),
            (2, vec![2])
        );
    }

    #[test]
    fn rational_solver() {
        let q = |n: i64| BigRational::from_integer(n.into());
        let cols = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        let x = solve_rational(&cols, &[q(3), q(1)]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        let cols = vec![vec![q(1), q(2)]];
        assert!(solve_rational(&cols, &[q(1), q(3)]).is_none());
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_in_kernel(
            m in proptest::collection::vec(proptest::collection::vec(-5i128..=5, 5), 0..4)
        ) {
            let k = kernel_basis(&m, 5).unwrap();
            for v in &k {
                prop_assert!(mat_vec(&m, v).iter().all(|&x| x == 0));
            }
            let rank = rank_rational(&m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer((x as i64).into())).collect()).collect::<Vec<_>>());
            prop_assert_eq!(k.len(), 5 - rank);
        }

        #[test]
        fn hnf_is_canonical(
            m in proptest::collection::vec(proptest::collection::vec(-6i128..=6, 3), 1..5),
            shuffle in proptest::collection::vec(-2i128..=2, 4),
        ) {
            let h = hnf(&m).unwrap();
            let mut extra = m.clone();
            // adding combinations of existing rows does not change the lattice
            let combo: Vec<i128> = (0..3).map(|j| m.iter().zip(&shuffle).map(|(r, s)| r[j] * s).sum()).collect();
            extra.push(combo);
            extra.reverse();
            prop_assert_eq!(hnf(&extra).unwrap(), h.clone());
            for row in &m {
                prop_assert!(lattice_contains(&h, row).unwrap());
            }
        }
    }
}
