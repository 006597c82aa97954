//! Prime ideals of R_A(F): primes of Z[ζ_n] described by factors of Φ_n
//! modulo a rational prime, the symbols P_{p,x}, their order and
//! connectivity.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::cyclotomic::{cyclotomic_polynomial, Cyclotomic};
use crate::error::{Error, Result};
use crate::group::is_prime;

/// Polynomials over F_q, constant term first, no trailing zeros.
type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn deg(a: &Fp) -> Option<usize> {
    a.len().checked_sub(1)
}

fn inv_mod(a: u64, q: u64) -> u64 {
    let (g, x, _) = egcd(a as i128, q as i128);
    debug_assert_eq!(g, 1);
    x.rem_euclid(q as i128) as u64
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn sub(a: &Fp, b: &Fp, q: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + q - y) % q
            })
            .collect(),
    )
}

fn mul(a: &Fp, b: &Fp, q: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % q;
        }
    }
    trim(r)
}

/// `(a div b, a mod b)`.
fn divmod(a: &Fp, b: &Fp, q: u64) -> (Fp, Fp) {
    let db = deg(b).expect("division by zero polynomial");
    let lead_inv = inv_mod(b[db], q);
    let mut r = a.clone();
    let mut quot = vec![0u64; a.len().saturating_sub(db).max(1)];
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let c = r[dr] * lead_inv % q;
        let shift = dr - db;
        quot[shift] = c;
        for (i, &y) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + q - c * y % q) % q;
        }
        r = trim(r);
    }
    (trim(quot), r)
}

fn rem(a: &Fp, b: &Fp, q: u64) -> Fp {
    divmod(a, b, q).1
}

fn monic(a: Fp, q: u64) -> Fp {
    match deg(&a) {
        None => a,
        Some(d) => {
            let inv = inv_mod(a[d], q);
            a.iter().map(|&x| x * inv % q).collect()
        }
    }
}

fn gcd(a: &Fp, b: &Fp, q: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, q);
        a = b;
        b = r;
    }
    monic(a, q)
}

fn powmod(a: &Fp, e: &BigUint, f: &Fp, q: u64) -> Fp {
    let mut result: Fp = vec![1];
    let base = rem(a, f, q);
    for i in (0..e.bits()).rev() {
        result = rem(&mul(&result, &result, q), f, q);
        if e.bit(i) {
            result = rem(&mul(&result, &base, q), f, q);
        }
    }
    result
}

/// Deterministic candidates for odd q: base-q digits of q, q + 1, …, i.e.
/// `x`, `x + 1`, ….
fn candidate(mut t: u64, q: u64) -> Fp {
    let mut v = Vec::new();
    while t > 0 {
        v.push(t % q);
        t /= q;
    }
    v
}

fn trace_map(a: &Fp, f: &Fp, d: usize, q: u64) -> Fp {
    let mut acc: Fp = Vec::new();
    let mut pw = rem(a, f, q);
    for _ in 0..d {
        acc = sub(&acc, &sub(&Vec::new(), &pw, q), q);
        pw = rem(&mul(&pw, &pw, q), f, q);
    }
    acc
}

/// Splits a squarefree product of irreducibles of degree `d` by Cantor–
/// Zassenhaus with fixed candidates. For q = 2 the trace map is linear, so
/// the monomials `x^j` (which span F_2[x]/f) are tried in turn.
fn equal_degree(f: &Fp, d: usize, q: u64) -> Vec<Fp> {
    let n = deg(f).expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    let exp = (BigUint::from(q).pow(d as u32) - 1u32) >> 1;
    let mut t = q;
    let mut j = 1;
    loop {
        let b = if q == 2 {
            assert!(j < n, "monomials span the quotient ring");
            let mut a = vec![0u64; j + 1];
            a[j] = 1;
            j += 1;
            trace_map(&a, f, d, q)
        } else {
            let a = candidate(t, q);
            t += 1;
            if deg(&a).is_none_or(|k| k >= n) {
                continue;
            }
            sub(&powmod(&a, &exp, f, q), &vec![1], q)
        };
        let g = gcd(&b, f, q);
        let dg = deg(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let (h, _) = divmod(f, &g, q);
            let mut out = equal_degree(&g, d, q);
            out.extend(equal_degree(&monic(h, q), d, q));
            return out;
        }
    }
}

fn multiplicative_order(q: u64, m: u64) -> usize {
    if m == 1 {
        return 1;
    }
    let mut x = q % m;
    let mut k = 1;
    while x != 1 {
        x = x * q % m;
        k += 1;
    }
    k
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CycPrime {
    Zero {
        conductor: u32,
    },
    Prime {
        q: u64,
        factor: Vec<u64>,
        conductor: u32,
    },
}

impl CycPrime {
    pub fn q(&self) -> Option<u64> {
        match self {
            CycPrime::Zero { .. } => None,
            CycPrime::Prime { q, .. } => Some(*q),
        }
    }

    pub fn conductor(&self) -> u32 {
        match self {
            CycPrime::Zero { conductor } | CycPrime::Prime { conductor, .. } => *conductor,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, CycPrime::Zero { .. })
    }

    /// `p ⊆ q` for primes of height at most one.
    pub fn contained_in(&self, other: &CycPrime) -> bool {
        self.is_zero() || self == other
    }

    /// Whether a value of conductor dividing n lies in this prime.
    pub fn contains(&self, value: &Cyclotomic) -> Result<bool> {
        let n = self.conductor();
        if !n.is_multiple_of(value.conductor()) {
            return Err(Error::ConductorMismatch(value.conductor(), n));
        }
        let v = value.lift(n)?;
        match self {
            CycPrime::Zero { .. } => Ok(v.is_zero()),
            CycPrime::Prime { q, factor, .. } => {
                let coeffs = v.integer_coeffs().ok_or(Error::NotIntegral)?;
                let qq = BigInt::from(*q);
                let reduced: Fp = trim(
                    coeffs
                        .iter()
                        .map(|c| c.mod_floor(&qq).to_u64().expect("residue fits"))
                        .collect(),
                );
                Ok(rem(&reduced, factor, *q).is_empty())
            }
        }
    }
}

impl std::fmt::Display for CycPrime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CycPrime::Zero { .. } => write!(f, "(0)"),
            CycPrime::Prime { q, factor, .. } => {
                let terms: Vec<String> = factor
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| {
                        let c = if c == 1 && i > 0 {
                            String::new()
                        } else {
                            c.to_string()
                        };
                        match i {
                            0 => c,
                            1 => format!("{c}x"),
                            _ => format!("{c}x^{i}"),
                        }
                    })
                    .collect();
                write!(f, "({q}, {})", terms.join("+"))
            }
        }
    }
}

/// Distinct primes of Z[ζ_n] above q, as monic factors of Φ_n mod q.
pub fn primes_above(q: u64, n: u32) -> Result<Vec<CycPrime>> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if n == 0 {
        return Err(Error::Invalid("conductor must be positive".into()));
    }
    // Φ_{q^a m} ≡ Φ_m^{φ(q^a)} mod q
    let mut m = n as u64;
    while m.is_multiple_of(q) {
        m /= q;
    }
    let phi: Fp = trim(
        cyclotomic_polynomial(m as u32)
            .iter()
            .map(|&c| c.rem_euclid(q as i64) as u64)
            .collect(),
    );
    let d = multiplicative_order(q % m.max(1), m);
    let mut factors = if deg(&phi) == Some(0) {
        Vec::new()
    } else {
        equal_degree(&phi, d, q)
    };
    factors.sort();
    Ok(factors
        .into_iter()
        .map(|factor| CycPrime::Prime {
            q,
            factor,
            conductor: n,
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PrimeSymbol {
    pub prime: CycPrime,
    /// F-class index after canonicalization.
    pub fclass: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumPoset {
    /// Defining prime of S.
    pub p: u64,
    pub conductor: u32,
    pub class_count: usize,
    pub symbols: Vec<PrimeSymbol>,
    /// Strict relations `(i, j)` with `symbols[i] < symbols[j]`.
    pub edges: Vec<(usize, usize)>,
}

fn canonical_class(prime: &CycPrime, x: usize, p: u64) -> usize {
    if prime.q() == Some(p) {
        0
    } else {
        x
    }
}

/// `P_{a,x} ≤ P_{b,y}` iff `a ⊆ b` and `x_b = y_b`.
pub fn symbol_leq(a: &PrimeSymbol, b: &PrimeSymbol, p: u64) -> bool {
    a.prime.contained_in(&b.prime)
        && canonical_class(&b.prime, a.fclass, p) == canonical_class(&b.prime, b.fclass, p)
}

pub fn prime_symbols(
    p: u64,
    conductor: u32,
    class_count: usize,
    primes: &[u64],
) -> Result<SpectrumPoset> {
    let mut symbols = Vec::new();
    for x in 0..class_count {
        symbols.push(PrimeSymbol {
            prime: CycPrime::Zero { conductor },
            fclass: x,
        });
    }
    let mut listed = primes.to_vec();
    listed.sort_unstable();
    listed.dedup();
    for &q in &listed {
        for prime in primes_above(q, conductor)? {
            for x in 0..class_count {
                let s = PrimeSymbol {
                    fclass: canonical_class(&prime, x, p),
                    prime: prime.clone(),
                };
                if !symbols.contains(&s) {
                    symbols.push(s);
                }
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..symbols.len() {
        for j in 0..symbols.len() {
            if i != j && symbol_leq(&symbols[i], &symbols[j], p) {
                edges.push((i, j));
            }
        }
    }
    Ok(SpectrumPoset {
        p,
        conductor,
        class_count,
        symbols,
        edges,
    })
}

impl SpectrumPoset {
    pub fn minimal_count(&self) -> usize {
        self.symbols.iter().filter(|s| s.prime.is_zero()).count()
    }

    /// Longest chain length, counted in strict steps.
    pub fn height(&self) -> usize {
        let chain2 = self
            .edges
            .iter()
            .any(|&(a, b)| self.edges.iter().any(|&(c, _)| c == b && a != b));
        if chain2 {
            2
        } else if self.edges.is_empty() {
            0
        } else {
            1
        }
    }

    pub fn without_prime(&self, q: u64) -> SpectrumPoset {
        let keep: Vec<usize> = (0..self.symbols.len())
            .filter(|&i| self.symbols[i].prime.q() != Some(q))
            .collect();
        let index = |i: usize| keep.iter().position(|&k| k == i);
        SpectrumPoset {
            p: self.p,
            conductor: self.conductor,
            class_count: self.class_count,
            symbols: keep.iter().map(|&i| self.symbols[i].clone()).collect(),
            edges: self
                .edges
                .iter()
                .filter_map(|&(a, b)| Some((index(a)?, index(b)?)))
                .collect(),
        }
    }

    pub fn to_dot(&self, class_names: &[String]) -> String {
        let mut s = String::from("digraph spectrum {\n  rankdir=BT;\n");
        for (i, sym) in self.symbols.iter().enumerate() {
            let name = class_names
                .get(sym.fclass)
                .cloned()
                .unwrap_or_else(|| sym.fclass.to_string());
            s.push_str(&format!("  n{i} [label=\"P[{}, {}]\"];\n", sym.prime, name));
        }
        for &(a, b) in &self.edges {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Connected comparability graph.
pub fn zariski_connected(poset: &SpectrumPoset) -> bool {
    let n = poset.symbols.len();
    if n == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in &poset.edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let r = find(&mut parent, 0);
    (0..n).all(|i| find(&mut parent, i) == r)
}

/// `value ∈ p`, with `value` the character value at the symbol's F-class.
pub fn residue_membership(value: &Cyclotomic, symbol: &PrimeSymbol) -> Result<bool> {
    symbol.prime.contains(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factor_of(p: &CycPrime) -> Vec<u64> {
        match p {
            CycPrime::Prime { factor, .. } => factor.clone(),
            CycPrime::Zero { .. } => panic!(),
        }
    }

    /// Product of the factors, raised to the ramification power, equals Φ_n
    /// mod q.
    fn check_factorization(q: u64, n: u32) {
        let primes = primes_above(q, n).unwrap();
        let mut m = n as u64;
        let mut ram = 1u64;
        let mut first = true;
        while m.is_multiple_of(q) {
            m /= q;
            ram *= if first { q - 1 } else { q };
            first = false;
        }
        let mut prod: Fp = vec![1];
        for p in &primes {
            let f = factor_of(p);
            for _ in 0..ram {
                prod = mul(&prod, &f, q);
            }
        }
        let phi: Fp = trim(
            cyclotomic_polynomial(n)
                .iter()
                .map(|&c| c.rem_euclid(q as i64) as u64)
                .collect(),
        );
        assert_eq!(prod, phi, "q = {q}, n = {n}");
        for p in &primes {
            let f = factor_of(p);
            assert_eq!(*f.last().unwrap(), 1);
            // irreducible: no common factor with x^{q^k} − x for k < deg
            let d = deg(&f).unwrap();
            let mut xp: Fp = vec![0, 1];
            for _ in 1..d {
                xp = powmod(&xp, &BigUint::from(q), &f, q);
                let g = gcd(&sub(&xp, &vec![0, 1], q), &f, q);
                assert_eq!(deg(&g), Some(0), "q = {q}, n = {n}, factor {f:?}");
            }
        }
    }

    #[test]
    fn small_factorizations() {
        assert_eq!(primes_above(5, 4).unwrap().len(), 2);
        assert_eq!(primes_above(3, 4).unwrap().len(), 1);
        assert_eq!(primes_above(7, 7).unwrap().len(), 1);
        assert_eq!(factor_of(&primes_above(7, 7).unwrap()[0]), vec![6, 1]);
        assert_eq!(primes_above(2, 7).unwrap().len(), 2);
        assert_eq!(primes_above(2, 3).unwrap().len(), 1);
        assert_eq!(primes_above(13, 3).unwrap().len(), 2);
        for (q, n) in [
            (5, 4),
            (3, 4),
            (7, 7),
            (2, 7),
            (2, 9),
            (3, 7),
            (29, 7),
            (2, 49),
            (3, 49),
            (5, 12),
            (2, 343),
            (7, 49),
        ] {
            check_factorization(q, n);
        }
    }

    #[test]
    fn membership() {
        let p = &primes_above(7, 7).unwrap()[0];
        let sym = PrimeSymbol {
            prime: p.clone(),
            fclass: 0,
        };
        assert!(!residue_membership(&Cyclotomic::one(7), &sym).unwrap());
        assert!(residue_membership(&Cyclotomic::from_integer(7, -343), &sym).unwrap());
        // 1 − ζ lies above 7
        let v = Cyclotomic::one(7)
            .checked_sub(&Cyclotomic::root_of_unity(7, 1))
            .unwrap();
        assert!(residue_membership(&v, &sym).unwrap());
        let two = &primes_above(2, 7).unwrap()[0];
        let sym2 = PrimeSymbol {
            prime: two.clone(),
            fclass: 0,
        };
        assert!(!residue_membership(&v, &sym2).unwrap());
        assert_eq!(
            residue_membership(&Cyclotomic::root_of_unity(9, 1), &sym).unwrap_err(),
            Error::ConductorMismatch(9, 7)
        );
        let zero = PrimeSymbol {
            prime: CycPrime::Zero { conductor: 7 },
            fclass: 0,
        };
        assert!(residue_membership(&Cyclotomic::zero(7), &zero).unwrap());
    }

    #[test]
    fn poset_of_z2() {
        let poset = prime_symbols(2, 2, 2, &[2]).unwrap();
        assert_eq!(poset.minimal_count(), 2);
        assert_eq!(poset.symbols.len(), 3);
        assert!(zariski_connected(&poset));
        assert!(!zariski_connected(&poset.without_prime(2)));
        assert!(poset.height() <= 1);
    }

    #[test]
    fn poset_counts() {
        // 3 classes over conductor 7, primes 2 and 7
        let poset = prime_symbols(7, 7, 3, &[2, 7]).unwrap();
        assert_eq!(poset.symbols.len(), 3 + 2 * 3 + 1);
        assert!(zariski_connected(&poset));
        let only2 = prime_symbols(7, 7, 3, &[2]).unwrap();
        assert!(!zariski_connected(&only2));
        let dot = poset.to_dot(&["1".into(), "c".into(), "ab^2".into()]);
        assert!(dot.starts_with("digraph spectrum {"));
    }
}
