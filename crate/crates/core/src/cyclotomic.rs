//! Exact arithmetic in Q(ζ_e) over the power basis modulo Φ_e.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficients of Φ_e, constant term first.
pub fn cyclotomic_polynomial(e: u32) -> Vec<i64> {
    assert!(e >= 1, "conductor must be positive");
    // x^e - 1 divided by Φ_d for every proper divisor d
    let mut num: Vec<i64> = vec![0; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in 1..e {
        if e.is_multiple_of(d) {
            num = exact_divide(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let q = rem[i + dd] / lead;
        quot[i] = q;
        for (j, &c) in den.iter().enumerate() {
            rem[i + j] -= q * c;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// ζ^k in the power basis for k in 0..e.
struct PowerTable {
    phi: usize,
    rows: Vec<Vec<i64>>,
}

fn power_table(e: u32) -> Arc<PowerTable> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<PowerTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("cache poisoned").get(&e) {
        return Arc::clone(t);
    }
    let phi_poly = cyclotomic_polynomial(e);
    let phi = phi_poly.len() - 1;
    let mut rows = Vec::with_capacity(e as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..e {
        rows.push(cur.clone());
        // multiply by x and reduce the overflow coefficient with Φ_e
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] -= top * phi_poly[i];
            }
        }
    }
    let table = Arc::new(PowerTable { phi, rows });
    cache
        .lock()
        .expect("cache poisoned")
        .insert(e, Arc::clone(&table));
    table
}

/// An element of Q(ζ_e). Equality is equality of the reduced coefficient
/// vectors, which is canonical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(e: u32) -> Self {
        let phi = power_table(e).phi;
        Cyclotomic {
            conductor: e,
            coeffs: vec![BigRational::zero(); phi],
        }
    }

    pub fn one(e: u32) -> Self {
        Self::from_integer(e, 1)
    }

    pub fn from_integer(e: u32, n: i64) -> Self {
        Self::from_rational(e, BigRational::from_integer(n.into()))
    }

    pub fn from_rational(e: u32, q: BigRational) -> Self {
        let mut x = Self::zero(e);
        x.coeffs[0] = q;
        x
    }

    /// ζ_e^k for any integer k.
    pub fn root_of_unity(e: u32, k: i64) -> Self {
        let t = power_table(e);
        let k = k.rem_euclid(e as i64) as usize;
        Cyclotomic {
            conductor: e,
            coeffs: t.rows[k]
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        }
    }

    /// Reduces an arbitrary combination Σ c_k ζ^k (k taken mod e).
    pub fn from_exponent_coeffs(e: u32, terms: &[(i64, BigRational)]) -> Self {
        let mut by_exp: Vec<BigRational> = vec![BigRational::zero(); e as usize];
        for (k, c) in terms {
            by_exp[k.rem_euclid(e as i64) as usize] += c;
        }
        Self::reduce_exponent_vector(e, &by_exp)
    }

    /// Reduces integer counts indexed by exponent mod e.
    pub fn from_exponent_counts(e: u32, counts: &[i64]) -> Self {
        let t = power_table(e);
        let mut acc = vec![0i64; t.phi];
        for (k, &n) in counts.iter().enumerate() {
            if n != 0 {
                for (a, &r) in acc.iter_mut().zip(&t.rows[k % e as usize]) {
                    *a += n * r;
                }
            }
        }
        Cyclotomic {
            conductor: e,
            coeffs: acc
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        }
    }

    fn reduce_exponent_vector(e: u32, by_exp: &[BigRational]) -> Self {
        let t = power_table(e);
        let mut coeffs = vec![BigRational::zero(); t.phi];
        for (k, c) in by_exp.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, &r) in coeffs.iter_mut().zip(&t.rows[k]) {
                if r != 0 {
                    *a += c * BigRational::from_integer(r.into());
                }
            }
        }
        Cyclotomic {
            conductor: e,
            coeffs,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    /// Integral coefficients in the power basis, i.e. membership in Z[ζ_e].
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.is_integral()
            .then(|| self.coeffs.iter().map(|c| c.to_integer()).collect())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.conductor == other.conductor {
            Ok(())
        } else {
            Err(Error::ConductorMismatch(self.conductor, other.conductor))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let e = self.conductor;
        let phi = self.coeffs.len();
        let mut by_exp = vec![BigRational::zero(); 2 * phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    by_exp[i + j] += a * b;
                }
            }
        }
        let mut folded = vec![BigRational::zero(); e as usize];
        for (k, c) in by_exp.into_iter().enumerate() {
            if !c.is_zero() {
                folded[k % e as usize] += c;
            }
        }
        Ok(Self::reduce_exponent_vector(e, &folded))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&BigRational::from_integer(n.into()))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.conductor);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Complex conjugation ζ ↦ ζ⁻¹.
    pub fn conjugate(&self) -> Self {
        let e = self.conductor as i64;
        let terms: Vec<(i64, BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (-(i as i64) % e, c.clone()))
            .collect();
        Self::from_exponent_coeffs(self.conductor, &terms)
    }

    /// Galois action ζ ↦ ζ^k for k coprime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        let terms: Vec<(i64, BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 * k, c.clone()))
            .collect();
        Self::from_exponent_coeffs(self.conductor, &terms)
    }

    /// Re-expresses the value in Q(ζ_f) for a multiple f of the conductor.
    pub fn lift(&self, f: u32) -> Result<Self> {
        if !f.is_multiple_of(self.conductor) {
            return Err(Error::ConductorMismatch(self.conductor, f));
        }
        let step = (f / self.conductor) as i64;
        let terms: Vec<(i64, BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 * step, c.clone()))
            .collect();
        Ok(Self::from_exponent_coeffs(f, &terms))
    }

    /// Floating-point value under ζ_e = exp(2πi/e).
    pub fn to_complex(&self) -> (f64, f64) {
        let e = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * k as f64 / e;
            re += c * t.cos();
            im += c * t.sin();
        }
        (re, im)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    /// Panics on mixed conductors; use `checked_add` for fallible addition.
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_add(rhs).expect("mixed conductors")
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_sub(rhs).expect("mixed conductors")
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_mul(rhs).expect("mixed conductors")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// GAP-style output: `3+2*E(7)^2-E(7)^4`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let root = match k {
                0 => String::new(),
                1 => format!("E({})", self.conductor),
                _ => format!("E({})^{}", self.conductor, k),
            };
            if k == 0 {
                out.push_str(&fmt_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&root);
            } else {
                out.push_str(&fmt_rational(&mag));
                out.push('*');
                out.push_str(&root);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Cyclotomic", 2)?;
        st.serialize_field("conductor", &self.conductor)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(fmt_rational).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}
