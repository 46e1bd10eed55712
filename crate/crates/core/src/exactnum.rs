//! Exact scalar arithmetic: arbitrary-precision rationals, rational points on
//! the circle group, and cyclotomic field elements.
//!
//! Everything downstream (polynomials, linear algebra, the whole jumping-locus
//! pipeline) is built over these scalars; no floating point appears anywhere.
//!
//! Conventions:
//! - `Rat` is always stored in lowest terms with a positive denominator
//!   (enforced by the underlying `BigRational`).
//! - `RootOfUnity` stores a reduced rational `q` in `[0, 1)` and denotes the
//!   point `exp(2*pi*i*q)`; its multiplicative order is the denominator of `q`.
//! - `Cyclo` represents an element of the cyclotomic field `Q(zeta_N)` as a
//!   coefficient vector of length `phi(N)` over the power basis
//!   `1, zeta, ..., zeta^(phi(N)-1)` modulo the `N`-th cyclotomic polynomial.
//!   Mixed-level operands are unified at the lcm level; results are *not*
//!   automatically reduced to a smaller field.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::UniPoly;

// ---- Rational numbers ----

/// Arbitrary-precision rational, reduced, denominator positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer/denom` in lowest terms. Panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_big(r: BigRational) -> Self {
        Rat(r)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Fractional part in `[0, 1)`.
    pub fn frac_mod1(&self) -> Rat {
        Rat(&self.0 - self.0.floor())
    }

    pub fn recip(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Rat> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut base = if exp < 0 { self.0.recip() } else { self.0.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = BigRational::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(Rat(acc))
    }

    pub fn scale_int(&self, k: i64) -> Rat {
        Rat(&self.0 * BigRational::from_integer(BigInt::from(k)))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = String;

    /// Accepts `p` or `p/q` with optional leading sign.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let (numer, denom) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let n: BigInt = numer
            .parse()
            .map_err(|_| format!("bad integer `{numer}`"))?;
        let d: BigInt = match denom {
            Some(d) => d.parse().map_err(|_| format!("bad integer `{d}`"))?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Rat(BigRational::new(n, d)))
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl serde::Serialize for Rat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

// ---- Elementary number theory helpers ----

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "phi is defined for n >= 1");
    let mut n = n;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
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

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Residues in `1..=n` coprime to `n` (these index the Galois conjugations of
/// `Q(zeta_n)`); for `n = 1` this is `[1]`.
pub fn coprime_residues(n: u64) -> Vec<u64> {
    (1..=n).filter(|a| gcd_u64(*a, n) == 1).collect()
}

// ---- Cyclotomic polynomials ----

static CYCLO_CACHE: OnceLock<Mutex<HashMap<u64, Vec<Rat>>>> = OnceLock::new();

fn cyclotomic_coeffs(n: u64) -> Vec<Rat> {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    let cache = CYCLO_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().expect("cyclotomic cache poisoned");
    if let Some(c) = map.get(&n) {
        return c.clone();
    }
    // Build every divisor level bottom-up:
    //   Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e of d.
    for d in divisors(n) {
        if map.contains_key(&d) {
            continue;
        }
        let mut num = vec![Rat::zero(); d as usize + 1];
        num[0] = -Rat::one();
        num[d as usize] = Rat::one();
        let mut num = UniPoly::from_coeffs("x", num);
        for e in divisors(d) {
            if e == d {
                continue;
            }
            let phi_e = UniPoly::from_coeffs("x", map[&e].clone());
            num = num.exact_div(&phi_e);
        }
        debug_assert_eq!(num.degree(), Some(euler_phi(d) as usize));
        map.insert(d, num.coeffs().to_vec());
    }
    map[&n].clone()
}

/// The `n`-th cyclotomic polynomial as a monic integer polynomial in `x`.
pub fn cyclotomic_polynomial(n: u64) -> UniPoly<Rat> {
    UniPoly::from_coeffs("x", cyclotomic_coeffs(n))
}

// ---- Roots of unity ----

/// A rational point `q` of the circle group, denoting `exp(2*pi*i*q)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootOfUnity {
    q: Rat,
}

impl RootOfUnity {
    /// Normalises the exponent into `[0, 1)`.
    pub fn new(q: Rat) -> Self {
        RootOfUnity { q: q.frac_mod1() }
    }

    pub fn from_frac(numer: i64, denom: i64) -> Self {
        Self::new(Rat::new(numer, denom))
    }

    pub fn one() -> Self {
        Self::new(Rat::zero())
    }

    /// The rational exponent in `[0, 1)`.
    pub fn exponent(&self) -> &Rat {
        &self.q
    }

    pub fn is_one(&self) -> bool {
        self.q.is_zero()
    }

    /// Multiplicative order: the reduced denominator of the exponent.
    pub fn order(&self) -> u64 {
        self.q
            .denom()
            .to_u64()
            .expect("root-of-unity order exceeds u64")
    }

    pub fn numerator_mod_order(&self) -> u64 {
        self.q
            .numer()
            .mod_floor(self.q.denom())
            .to_u64()
            .expect("root-of-unity numerator exceeds u64")
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        RootOfUnity::new(self.q.clone() + other.q.clone())
    }

    pub fn inverse(&self) -> RootOfUnity {
        RootOfUnity::new(-self.q.clone())
    }

    pub fn pow(&self, k: i64) -> RootOfUnity {
        RootOfUnity::new(self.q.scale_int(k))
    }

    /// The same value as a cyclotomic field element at level `order`.
    pub fn as_cyclo(&self) -> Cyclo {
        Cyclo::root(self.order(), self.numerator_mod_order() as i64)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({})", self.q)
    }
}

impl serde::Serialize for RootOfUnity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.q.to_string())
    }
}

/// Order of a tuple of roots of unity: the lcm of the coordinate orders.
pub fn character_order(coords: &[RootOfUnity]) -> u64 {
    coords.iter().fold(1, |acc, r| lcm_u64(acc, r.order()))
}

// ---- Cyclotomic field elements ----

/// An element of `Q(zeta_N)` in the power basis modulo `Phi_N`.
#[derive(Clone)]
pub struct Cyclo {
    level: u64,
    coeffs: Vec<Rat>, // length phi(level)
}

impl Cyclo {
    pub fn zero_at(level: u64) -> Self {
        Cyclo {
            level,
            coeffs: vec![Rat::zero(); euler_phi(level) as usize],
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        Cyclo {
            level: 1,
            coeffs: vec![r],
        }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    /// `zeta_level^power` (power taken modulo `level`).
    pub fn root(level: u64, power: i64) -> Self {
        let p = power.rem_euclid(level as i64) as usize;
        let mut dense = vec![Rat::zero(); p + 1];
        dense[p] = Rat::one();
        Cyclo::reduce_at(level, dense)
    }

    /// Reduces a dense polynomial in `zeta_level` modulo `Phi_level`.
    fn reduce_at(level: u64, dense: Vec<Rat>) -> Self {
        let phi = euler_phi(level) as usize;
        let poly = UniPoly::from_coeffs("x", dense);
        let modulus = cyclotomic_polynomial(level);
        let (_, rem) = poly.divrem(&modulus);
        let mut coeffs = rem.coeffs().to_vec();
        coeffs.resize(phi, Rat::zero());
        Cyclo { level, coeffs }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// `Some(r)` if the element is the rational number `r` (in this basis a
    /// rational has every coefficient beyond the constant one equal to zero).
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(Rat::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Embeds into `Q(zeta_target)`; requires `level | target`.
    pub fn embed(&self, target: u64) -> Cyclo {
        assert!(
            target % self.level == 0,
            "cannot embed level {} into level {}",
            self.level,
            target
        );
        if target == self.level {
            return self.clone();
        }
        let stride = (target / self.level) as usize;
        let mut dense = vec![Rat::zero(); (self.coeffs.len() - 1) * stride + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[i * stride] = c.clone();
            }
        }
        Cyclo::reduce_at(target, dense)
    }

    /// Brings two elements to a common level.
    pub fn unify(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo) {
        let l = lcm_u64(a.level, b.level);
        (a.embed(l), b.embed(l))
    }

    /// Attempts to re-express the element at a smaller level dividing the
    /// current one; `None` if the value does not lie in the subfield.
    pub fn descend(&self, target: u64) -> Option<Cyclo> {
        assert!(
            self.level % target == 0,
            "descent target must divide the level"
        );
        if target == self.level {
            return Some(self.clone());
        }
        let phi_t = euler_phi(target) as usize;
        let phi_l = self.coeffs.len();
        // Solve B * b = coeffs where column j of B is zeta_target^j embedded.
        let mut cols = Vec::with_capacity(phi_t);
        for j in 0..phi_t {
            cols.push(Cyclo::root(target, j as i64).embed(self.level).coeffs);
        }
        let mut aug: Vec<Vec<Rat>> = (0..phi_l)
            .map(|r| {
                let mut row: Vec<Rat> = cols.iter().map(|c| c[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        // Plain Gaussian elimination on the augmented system.
        let rows = aug.len();
        let cols_n = phi_t;
        let mut pivot_row = 0usize;
        let mut pivots = Vec::new();
        for col in 0..cols_n {
            let Some(r) = (pivot_row..rows).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(pivot_row, r);
            let inv = aug[pivot_row][col].recip().expect("pivot is nonzero");
            for c in col..=cols_n {
                aug[pivot_row][c] = aug[pivot_row][c].clone() * inv.clone();
            }
            for r2 in 0..rows {
                if r2 != pivot_row && !aug[r2][col].is_zero() {
                    let f = aug[r2][col].clone();
                    for c in col..=cols_n {
                        aug[r2][c] =
                            aug[r2][c].clone() - f.clone() * aug[pivot_row][c].clone();
                    }
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
            if pivot_row == rows {
                break;
            }
        }
        // Inconsistent rows mean the value is outside the subfield.
        for r in pivot_row..rows {
            if !aug[r][cols_n].is_zero() {
                return None;
            }
        }
        let mut sol = vec![Rat::zero(); cols_n];
        for (r, c) in pivots {
            sol[c] = aug[r][cols_n].clone();
        }
        Some(Cyclo {
            level: target,
            coeffs: sol,
        })
    }

    /// The Galois conjugation `zeta -> zeta^a`; requires `gcd(a, level) = 1`.
    pub fn galois(&self, a: u64) -> Cyclo {
        assert_eq!(
            gcd_u64(a, self.level),
            1,
            "galois exponent must be coprime to the level"
        );
        let mut dense = vec![Rat::zero(); self.level as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = (i as u64 * a % self.level) as usize;
                dense[e] = dense[e].clone() + c.clone();
            }
        }
        Cyclo::reduce_at(self.level, dense)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against the
    /// level's cyclotomic polynomial.
    pub fn checked_inv(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = UniPoly::from_coeffs("x", self.coeffs.clone());
        let modulus = cyclotomic_polynomial(self.level);
        let (g, s) = p.half_ext_gcd(&modulus);
        // Phi_N is irreducible over Q, so the gcd of a nonzero residue with it
        // is a nonzero constant.
        let c = g
            .constant_value()
            .expect("gcd with an irreducible modulus is constant");
        let s = s.scale(&c.recip().expect("gcd constant is nonzero"));
        let mut coeffs = s.coeffs().to_vec();
        coeffs.resize(euler_phi(self.level) as usize, Rat::zero());
        Ok(Cyclo {
            level: self.level,
            coeffs,
        })
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.level == other.level {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Cyclo::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: Cyclo) -> Cyclo {
        let (mut a, b) = Cyclo::unify(&self, &rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x = x.clone() + y;
        }
        a
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: Cyclo) -> Cyclo {
        self + (-rhs)
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(mut self) -> Cyclo {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: Cyclo) -> Cyclo {
        let (a, b) = Cyclo::unify(&self, &rhs);
        if a.is_zero() || b.is_zero() {
            return Cyclo::zero_at(a.level);
        }
        let mut dense = vec![Rat::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                dense[i + j] = dense[i + j].clone() + x.clone() * y.clone();
            }
        }
        Cyclo::reduce_at(a.level, dense)
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{c}*")?;
                    }
                    write!(f, "z{}", self.level)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for Cyclo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// ---- Field abstraction ----

/// The coefficient fields the polynomial and matrix layers are generic over:
/// `Rat` and `Cyclo`.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn inv(&self) -> Result<Self>;
    fn from_rat(r: &Rat) -> Self;
    /// Embedding into the cyclotomic tower (rationals sit at level 1).
    fn to_cyclo(&self) -> Cyclo;
}

impl Field for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn inv(&self) -> Result<Self> {
        self.recip()
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn to_cyclo(&self) -> Cyclo {
        Cyclo::from_rat(self.clone())
    }
}

impl Field for Cyclo {
    fn zero() -> Self {
        Cyclo::zero_at(1)
    }
    fn one() -> Self {
        Cyclo::one()
    }
    fn is_zero(&self) -> bool {
        Cyclo::is_zero(self)
    }
    fn inv(&self) -> Result<Self> {
        self.checked_inv()
    }
    fn from_rat(r: &Rat) -> Self {
        Cyclo::from_rat(r.clone())
    }
    fn to_cyclo(&self) -> Cyclo {
        self.clone()
    }
}
