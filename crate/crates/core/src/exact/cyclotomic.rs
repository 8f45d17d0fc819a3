//! Exact arithmetic in cyclotomic fields.
//!
//! An element of `Q(ζ_m)` is stored as its coefficient vector over the power
//! basis `1, ζ, …, ζ^(φ(m)-1)`, always reduced modulo the `m`-th cyclotomic
//! polynomial. Values from different fields are compared and combined after
//! lifting both to the field of the least common multiple conductor. Rational
//! values are always normalised to conductor 1, so equality of rationals never
//! depends on where they came from.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// `n / d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Euler's totient.
pub fn totient(m: u32) -> u32 {
    (1..=m).filter(|k| k.gcd(&m) == 1).count() as u32
}

fn poly_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (lowest degree first) of the monic `m`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    assert!(m >= 1, "conductor must be positive");
    if let Some(p) = poly_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by every Φ_d with d a proper divisor of m.
    let mut p = vec![0i64; m as usize + 1];
    p[0] = -1;
    p[m as usize] = 1;
    for d in (1..m).filter(|d| m % d == 0) {
        let q = cyclotomic_polynomial(d);
        p = div_monic(&p, &q);
    }
    let p = Arc::new(p);
    poly_cache().lock().unwrap().insert(m, p.clone());
    p
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for k in (dn..num.len()).rev() {
        let c = rem[k];
        if c == 0 {
            continue;
        }
        quot[k - dn] = c;
        for (j, dj) in den.iter().enumerate() {
            rem[k - dn + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// Reduces `poly` in place modulo `Φ_m` and returns the `φ(m)` remainder coefficients.
fn reduce(mut poly: Vec<Rational>, m: u32) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(m);
    let d = phi.len() - 1;
    if poly.len() <= d {
        poly.resize(d, Rational::zero());
        return poly;
    }
    for k in (d..poly.len()).rev() {
        if poly[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut poly[k], Rational::zero());
        for (j, pj) in phi[..d].iter().enumerate() {
            if *pj != 0 {
                poly[k - d + j] -= &c * Rational::from_integer(BigInt::from(*pj));
            }
        }
    }
    poly.truncate(d);
    poly
}

/// An exact element of a cyclotomic number field.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// `ζ_m^e` for the primitive `m`-th root of unity `ζ_m = exp(2πi/m)`.
    pub fn root_of_unity(m: u32, e: i64) -> Self {
        assert!(m >= 1, "conductor must be positive");
        let e = e.rem_euclid(m as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Self::from_poly(m, poly)
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// Builds `Σ c_j ζ_m^j` from an arbitrary-length coefficient list.
    pub fn from_poly(m: u32, poly: Vec<Rational>) -> Self {
        let coeffs = reduce(poly, m);
        Cyclotomic {
            conductor: m,
            coeffs,
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        if self.conductor != 1 && self.coeffs[1..].iter().all(Zero::is_zero) {
            self.coeffs.truncate(1);
            self.conductor = 1;
        }
        self
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficients over `1, ζ_m, …, ζ_m^(φ(m)-1)`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Re-expresses the value in `Q(ζ_target)`; `target` must be a multiple of the conductor.
    pub fn lift(&self, target: u32) -> Vec<Rational> {
        assert!(
            target % self.conductor == 0,
            "cannot lift conductor {} to {}",
            self.conductor,
            target
        );
        if target == self.conductor {
            return self.coeffs.clone();
        }
        let step = (target / self.conductor) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        reduce(poly, target)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        (self.conductor == 1).then(|| self.coeffs[0].clone())
    }

    /// The value as an integer, when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    /// Image under the Galois automorphism `ζ ↦ ζ^k` (`k` coprime to the conductor).
    pub fn galois(&self, k: i64) -> Self {
        let m = self.conductor;
        if m == 1 {
            return self.clone();
        }
        let k = k.rem_euclid(m as i64) as usize;
        assert_eq!(k.gcd(&(m as usize)), 1, "galois exponent must be a unit");
        let mut poly = vec![Rational::zero(); m as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            poly[(j * k) % m as usize] += c;
        }
        Self::from_poly(m, poly)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        if let Some(r) = self.to_rational() {
            return Self::from_rational(r.recip());
        }
        let m = self.conductor as i64;
        // x^{-1} = (product of the other conjugates) / norm.
        let mut others = Self::one();
        for k in 2..m {
            if k.gcd(&m) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (self * &others)
            .to_rational()
            .expect("field norm is rational");
        &others * &Self::from_rational(norm.recip())
    }

    fn binary(&self, other: &Self, op: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let m = self.conductor.lcm(&other.conductor);
        let a = self.lift(m);
        let b = other.lift(m);
        let coeffs = a.iter().zip(&b).map(|(x, y)| op(x, y)).collect();
        Cyclotomic {
            conductor: m,
            coeffs,
        }
        .normalized()
    }

    fn product(&self, other: &Self) -> Self {
        if self.conductor == 1 {
            return other.scaled(&self.coeffs[0]);
        }
        if other.conductor == 1 {
            return self.scaled(&other.coeffs[0]);
        }
        let m = self.conductor.lcm(&other.conductor);
        let a = self.lift(m);
        let b = other.lift(m);
        let mut poly = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        Self::from_poly(m, poly)
    }

    fn scaled(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Wire form: `(exponent, numerator, denominator)` triples over `ζ_conductor`.
    pub fn from_wire(conductor: u32, terms: &[(i64, i64, i64)]) -> Option<Self> {
        if conductor == 0 {
            return None;
        }
        let mut acc = Self::zero();
        for &(e, n, d) in terms {
            if d == 0 {
                return None;
            }
            acc = &acc + &Self::root_of_unity(conductor, e).scaled(&rat(n, d));
        }
        Some(acc)
    }

    /// Inverse of [`Cyclotomic::from_wire`], expressed over `ζ_conductor`.
    /// `None` when a coefficient does not fit in an `i64`.
    pub fn to_wire(&self, conductor: u32) -> Option<Vec<(i64, i64, i64)>> {
        self.lift(conductor)
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| Some((e as i64, c.numer().to_i64()?, c.denom().to_i64()?)))
            .collect()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let m = self.conductor.lcm(&other.conductor);
        self.lift(m) == other.lift(m)
    }
}

impl Eq for Cyclotomic {}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.binary(rhs, |x, y| x + y)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.binary(rhs, |x, y| x - y)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.product(rhs)
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

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    /// `E(m)^j` denotes `ζ_m^j`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "E({})^{j}", self.conductor)?,
                (_, false) => write!(f, "{mag}*E({})^{j}", self.conductor)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(15).len() as u32 - 1, totient(15));
    }

    #[test]
    fn root_of_unity_basics() {
        assert_eq!(Cyclotomic::root_of_unity(1, 0), Cyclotomic::one());
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(&i * &i, Cyclotomic::from_int(-1));
        let sum = &(&Cyclotomic::root_of_unity(3, 0) + &Cyclotomic::root_of_unity(3, 1))
            + &Cyclotomic::root_of_unity(3, 2);
        assert!(sum.is_zero());
        assert_eq!(Cyclotomic::root_of_unity(2, 1), Cyclotomic::from_int(-1));
    }

    #[test]
    fn conjugate_of_root_is_inverse_root() {
        for m in 1..=12u32 {
            for e in 0..m as i64 {
                let z = Cyclotomic::root_of_unity(m, e);
                assert_eq!(z.conj(), Cyclotomic::root_of_unity(m, -e));
                assert_eq!(&z * &z.conj(), Cyclotomic::one());
            }
        }
    }

    #[test]
    fn equality_across_conductors() {
        // ζ_6 = -ζ_3^2
        let z6 = Cyclotomic::root_of_unity(6, 1);
        let z3sq = Cyclotomic::root_of_unity(3, 2);
        assert_eq!(z6, -&z3sq);
        assert_eq!(Cyclotomic::root_of_unity(12, 4), Cyclotomic::root_of_unity(3, 1));
    }

    #[test]
    fn inverse() {
        let x = &Cyclotomic::from_int(2) + &Cyclotomic::root_of_unity(5, 1);
        assert_eq!(&x * &x.inv(), Cyclotomic::one());
        let half = Cyclotomic::from_rational(rat(1, 2));
        assert_eq!(half.inv(), Cyclotomic::from_int(2));
    }

    #[test]
    fn wire_round_trip() {
        let x = Cyclotomic::from_wire(3, &[(0, 1, 2), (1, -3, 1)]).unwrap();
        let terms = x.to_wire(3).unwrap();
        assert_eq!(terms, vec![(0, 1, 2), (1, -3, 1)]);
        assert_eq!(Cyclotomic::from_wire(3, &terms).unwrap(), x);
    }
}
