//! Exact arithmetic in `Z[s] / Phi_n(s)`.
//!
//! Elements are kept reduced modulo the cyclotomic polynomial after every
//! operation, so the power-basis coefficients are a canonical form and
//! equality is coefficient equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Error, Result};

/// The ring `Z[s]/Phi_n(s)` for a fixed order `n`.
#[derive(Debug, PartialEq, Eq)]
pub struct CycRing {
    n: u64,
    /// Coefficients of `Phi_n`, constant term first; monic.
    phi: Vec<i64>,
    /// `s^k mod Phi_n` for `0 <= k < n`.
    powers: Vec<Vec<i64>>,
}

impl CycRing {
    pub fn new(n: u64) -> Arc<CycRing> {
        assert!(n >= 1, "cyclotomic order must be positive");
        let phi = cyclotomic_polynomial(n);
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; deg];
        if deg > 0 {
            cur[0] = 1;
        }
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by s and reduce: s^deg = -sum phi_j s^j
            let top = if deg > 0 { cur[deg - 1] } else { 0 };
            for j in (1..deg).rev() {
                cur[j] = cur[j - 1];
            }
            if deg > 0 {
                cur[0] = 0;
                for j in 0..deg {
                    cur[j] -= top * phi[j];
                }
            }
        }
        Arc::new(CycRing { n, phi, powers })
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    /// Coefficients of the cyclotomic polynomial, constant term first.
    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    /// Euler phi of the order.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }
}

/// `Phi_n` by dividing `x^n - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = div_monic_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn div_monic_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quo = vec![0i64; num.len() - dn];
    for k in (0..quo.len()).rev() {
        let c = rem[k + dn];
        quo[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quo
}

/// An element of a [`CycRing`], in the power basis `1, s, ..., s^(deg-1)`.
#[derive(Clone)]
pub struct CycNum {
    ring: Arc<CycRing>,
    coeffs: Vec<BigInt>,
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.ring.n == other.ring.n && self.coeffs == other.coeffs
    }
}

impl Eq for CycNum {}

impl CycNum {
    pub fn zero(ring: &Arc<CycRing>) -> CycNum {
        CycNum {
            ring: ring.clone(),
            coeffs: vec![BigInt::zero(); ring.degree()],
        }
    }

    pub fn one(ring: &Arc<CycRing>) -> CycNum {
        CycNum::from_integer(ring, 1)
    }

    pub fn from_integer(ring: &Arc<CycRing>, k: i64) -> CycNum {
        let mut x = CycNum::zero(ring);
        if ring.degree() > 0 {
            x.coeffs[0] = BigInt::from(k);
        }
        x
    }

    /// `s^k`, exponent reduced mod `n`.
    pub fn s_power(ring: &Arc<CycRing>, k: i64) -> CycNum {
        let e = k.rem_euclid(ring.n as i64) as usize;
        CycNum {
            ring: ring.clone(),
            coeffs: ring.powers[e].iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// `q^k` where `q = s^big_l`.
    pub fn q_power(ring: &Arc<CycRing>, big_l: i64, k: i64) -> CycNum {
        CycNum::s_power(ring, big_l * k)
    }

    /// Balanced quantum integer `[k]_{q^d} = sum_j q^{d(k-1-2j)}`, with `[-k] = -[k]`.
    pub fn q_integer(ring: &Arc<CycRing>, big_l: i64, d: i64, k: i64) -> CycNum {
        let mut hist = vec![0i64; ring.n as usize];
        let m = k.abs();
        let sign = k.signum();
        for j in 0..m {
            let e = big_l * d * (m - 1 - 2 * j);
            hist[e.rem_euclid(ring.n as i64) as usize] += sign;
        }
        CycNum::from_exponent_histogram(ring, &hist)
    }

    /// `sum_k hist[k] s^k` for `hist` of length `n`.
    pub fn from_exponent_histogram<T>(ring: &Arc<CycRing>, hist: &[T]) -> CycNum
    where
        T: Clone + Into<BigInt> + Zero,
    {
        assert_eq!(hist.len(), ring.n as usize);
        let mut coeffs = vec![BigInt::zero(); ring.degree()];
        for (k, c) in hist.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c: BigInt = c.clone().into();
            for (dst, &p) in coeffs.iter_mut().zip(&ring.powers[k]) {
                if p != 0 {
                    *dst += &c * p;
                }
            }
        }
        CycNum {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn ring(&self) -> &Arc<CycRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == CycNum::one(&self.ring)
    }

    /// `Some(k)` when the element is the integer `k`.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_default())
        } else {
            None
        }
    }

    fn check_ring(&self, other: &CycNum) -> Result<()> {
        if self.ring.n != other.ring.n {
            return Err(Error::RingMismatch {
                left: self.ring.n,
                right: other.ring.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &CycNum) -> Result<CycNum> {
        self.check_ring(other)?;
        Ok(CycNum {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &CycNum) -> Result<CycNum> {
        self.check_ring(other)?;
        Ok(CycNum {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &CycNum) -> Result<CycNum> {
        self.check_ring(other)?;
        let deg = self.ring.degree();
        if deg == 0 {
            return Ok(self.clone());
        }
        let mut prod = vec![BigInt::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(CycNum {
            ring: self.ring.clone(),
            coeffs: reduce(prod, &self.ring.phi),
        })
    }

    pub fn scale(&self, k: &BigInt) -> CycNum {
        CycNum {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// `self += k * other`.
    pub fn add_scaled(&mut self, k: i64, other: &CycNum) -> Result<()> {
        self.check_ring(other)?;
        if k != 0 {
            for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
                *a += b * k;
            }
        }
        Ok(())
    }

    /// Value at `s = exp(2 pi i residue / n)`.
    pub fn embed_numeric(&self, residue: i64) -> Result<Complex64> {
        let n = self.ring.n;
        if (residue.rem_euclid(n as i64) as u64).gcd(&n) != 1 {
            return Err(Error::NonCoprimeResidue { residue, n });
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0
                * std::f64::consts::PI
                * ((residue as i128 * k as i128).rem_euclid(n as i128) as f64)
                / n as f64;
            acc += Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle);
        }
        Ok(acc)
    }

    /// Coefficients as `i64` when they all fit.
    pub fn small_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    /// True when `self = c * other` for some rational `c`.
    pub fn is_rational_multiple_of(&self, other: &CycNum) -> bool {
        // a * y_k = b * x_k for all k, with (a, b) read off a pivot coordinate.
        match (self.is_zero(), other.is_zero()) {
            (true, _) => return true,
            (false, true) => return false,
            _ => {}
        }
        let p = other.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let a = &other.coeffs[p];
        let b = &self.coeffs[p];
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(x, y)| x * a == y * b)
    }
}

/// Reduce a polynomial modulo the monic `phi`.
fn reduce(mut poly: Vec<BigInt>, phi: &[i64]) -> Vec<BigInt> {
    let deg = phi.len() - 1;
    for k in (deg..poly.len()).rev() {
        if poly[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut poly[k]);
        for j in 0..deg {
            if phi[j] != 0 {
                poly[k - deg + j] -= &c * phi[j];
            }
        }
    }
    poly.truncate(deg);
    poly.resize(deg, BigInt::zero());
    poly
}

impl Add for &CycNum {
    type Output = CycNum;
    /// Panics on ring mismatch; see [`CycNum::checked_add`].
    fn add(self, rhs: &CycNum) -> CycNum {
        self.checked_add(rhs).expect("cyclotomic ring mismatch")
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self.checked_sub(rhs).expect("cyclotomic ring mismatch")
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        self.checked_mul(rhs).expect("cyclotomic ring mismatch")
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("s")?,
                (1, false) => write!(f, "{mag}*s")?,
                (_, true) => write!(f, "s^{k}")?,
                (_, false) => write!(f, "{mag}*s^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Serialized as `{"n": order, "coeffs": [...]}`; coefficients outside the
/// `i64` range are written as decimal strings.
impl Serialize for CycNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Coeff {
            Small(i64),
            Big(String),
        }
        let coeffs: Vec<Coeff> = self
            .coeffs
            .iter()
            .map(|c| {
                c.to_i64()
                    .map(Coeff::Small)
                    .unwrap_or_else(|| Coeff::Big(c.to_string()))
            })
            .collect();
        let mut st = s.serialize_struct("CycNum", 2)?;
        st.serialize_field("n", &self.ring.n)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}
