//! Polynomials over the exact coefficient fields: dense univariate polynomials
//! and sparse multivariate Laurent polynomials.
//!
//! Conventions:
//! - `UniPoly` stores ascending coefficients with no trailing zeros; the zero
//!   polynomial is the empty coefficient vector.
//! - `LaurentPoly` carries an ordered variable list and a map from integer
//!   exponent vectors to nonzero coefficients; stripping zero coefficients
//!   keeps the representation canonical, so structural equality is value
//!   equality.
//! - The textual form writes terms like `3/2*x1^-2*x2` in descending
//!   exponent-lexicographic order; the parser accepts the same shape plus
//!   whitespace and `-` separators.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{
    character_order, coprime_residues, cyclotomic_polynomial, Cyclo, Field, Rat, RootOfUnity,
};

// ---- Univariate polynomials ----

/// Dense univariate polynomial over a coefficient field.
#[derive(Clone, PartialEq)]
pub struct UniPoly<K: Field> {
    var: String,
    coeffs: Vec<K>, // ascending, no trailing zeros
}

impl<K: Field> UniPoly<K> {
    pub fn from_coeffs(var: &str, mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly {
            var: var.to_string(),
            coeffs,
        }
    }

    pub fn zero(var: &str) -> Self {
        UniPoly {
            var: var.to_string(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(var: &str, c: K) -> Self {
        Self::from_coeffs(var, vec![c])
    }

    pub fn monomial(var: &str, c: K, deg: usize) -> Self {
        let mut coeffs = vec![K::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(var, coeffs)
    }

    pub fn var_name(&self) -> &str {
        &self.var
    }

    pub fn with_var(&self, var: &str) -> Self {
        UniPoly {
            var: var.to_string(),
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    /// `Some(c)` when the polynomial is the constant `c` (zero included).
    pub fn constant_value(&self) -> Option<K> {
        match self.coeffs.len() {
            0 => Some(K::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert!(
            self.var == other.var || self.coeffs.len() <= 1 || other.coeffs.len() <= 1,
            "univariate polynomials over different variables: {} vs {}",
            self.var,
            other.var
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(&self.var, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(&self.var);
        }
        UniPoly {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.var);
        }
        let mut out = vec![K::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(&self.var, out)
    }

    /// Euclidean division by a nonzero divisor: `self = q * d + r` with
    /// `deg r < deg d`.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        self.assert_compatible(d);
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d
            .leading()
            .expect("nonzero divisor")
            .inv()
            .expect("leading coefficient is invertible");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(&self.var), self.clone());
        }
        let mut quot = vec![K::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].clone() * lead_inv.clone();
            quot[i - dd] = q.clone();
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j].clone() - q.clone() * c.clone();
            }
        }
        (
            Self::from_coeffs(&self.var, quot),
            Self::from_coeffs(&self.var, rem),
        )
    }

    /// Division known to be exact; panics on a nonzero remainder.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "division was not exact");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).1.is_zero()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("leading coefficient is invertible")),
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Half-extended Euclid: returns `(g, s)` with `s * self = g (mod m)`.
    pub fn half_ext_gcd(&self, m: &Self) -> (Self, Self) {
        let mut r0 = self.clone();
        let mut s0 = Self::constant(&self.var, K::one());
        let mut r1 = m.clone();
        let mut s1 = Self::zero(&self.var);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            s0 = s1;
            r1 = r;
            s1 = s;
        }
        (r0, s0)
    }

    /// Number of trailing zero coefficients, i.e. the multiplicity of the root
    /// at the origin; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divides by `var^k`; requires valuation at least `k`.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(
            self.valuation().is_none_or(|v| v >= k),
            "shift below the valuation"
        );
        if self.is_zero() {
            return self.clone();
        }
        Self::from_coeffs(&self.var, self.coeffs[k..].to_vec())
    }

    pub fn to_laurent(&self) -> LaurentPoly<K> {
        let vars = [self.var.clone()];
        let mut p = LaurentPoly::zero(&vars);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.insert_add(vec![i as i64], c.clone());
            }
        }
        p
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> UniPoly<L> {
        UniPoly::from_coeffs(&self.var, self.coeffs.iter().map(f).collect())
    }
}

impl<K: Field> fmt::Display for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

impl<K: Field> fmt::Debug for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<K: Field> serde::Serialize for UniPoly<K> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// ---- Multivariate Laurent polynomials ----

/// Sparse Laurent polynomial over an ordered variable list.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<K: Field> {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, K>,
}

impl<K: Field> LaurentPoly<K> {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        LaurentPoly {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: K) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(vars, K::one())
    }

    pub fn monomial<S: AsRef<str>>(vars: &[S], exps: Vec<i64>, c: K) -> Self {
        let mut p = Self::zero(vars);
        assert_eq!(p.vars.len(), exps.len(), "exponent vector length");
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The generator `x_i` as a polynomial.
    pub fn gen<S: AsRef<str>>(vars: &[S], i: usize) -> Self {
        let n = vars.len();
        assert!(i < n, "variable index in range");
        let mut exps = vec![0; n];
        exps[i] = 1;
        Self::monomial(vars, exps, K::one())
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_value(&self) -> Option<K> {
        match self.terms.len() {
            0 => Some(K::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn insert_add(&mut self, exps: Vec<i64>, c: K) {
        assert_eq!(self.vars.len(), exps.len(), "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch {
                left: self.vars.join(","),
                right: other.vars.join(","),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_add(e, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("variable lists agree")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("variable lists agree")
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiplies by the unit monomial with the given exponent vector.
    pub fn mul_monomial(&self, shift: &[i64]) -> Self {
        assert_eq!(self.vars.len(), shift.len());
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.iter().zip(shift).map(|(x, s)| x + s).collect(),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Componentwise minimum of the exponent vectors over all terms; `None`
    /// for the zero polynomial.
    pub fn min_exponents(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| {
            acc.iter().zip(e).map(|(a, b)| (*a).min(*b)).collect()
        }))
    }

    /// Maximum over terms of the sum of exponents (0 for the zero polynomial).
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Leading term in exponent-lexicographic order.
    pub fn leading_term(&self) -> Option<(&Vec<i64>, &K)> {
        self.terms.iter().next_back()
    }

    /// Exact division in the polynomial ring; requires non-negative exponents
    /// throughout and panics if the division is not exact.
    pub fn exact_div(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        let (de, dc) = {
            let (e, c) = d.leading_term().unwrap();
            (e.clone(), c.clone())
        };
        let dc_inv = dc.inv().expect("leading coefficient is invertible");
        while !rem.is_zero() {
            let (re, rc) = {
                let (e, c) = rem.leading_term().unwrap();
                (e.clone(), c.clone())
            };
            let e: Vec<i64> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            assert!(
                e.iter().all(|&x| x >= 0),
                "division was not exact (monomial underflow)"
            );
            let c = rc * dc_inv.clone();
            let t = Self::monomial(&self.vars, e, c);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        quot
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> LaurentPoly<L> {
        let mut out = LaurentPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), f(c));
        }
        out
    }

    /// Evaluates at a character: coordinate `i` goes to the root of unity
    /// `rho[i]`. The result lives at (a divisor of) the character order level.
    pub fn evaluate_at_character(&self, rho: &[RootOfUnity]) -> Cyclo {
        assert_eq!(
            self.vars.len(),
            rho.len(),
            "character length matches variable count"
        );
        let level = character_order(rho).max(1);
        let mut acc = Cyclo::zero_at(level);
        for (e, c) in &self.terms {
            let mut root = RootOfUnity::one();
            for (r, k) in rho.iter().zip(e) {
                root = root.mul(&r.pow(*k));
            }
            acc = acc + c.to_cyclo() * root.as_cyclo();
        }
        acc
    }

    /// Monomial substitution along a translated subtorus: variable `i` is sent
    /// to `translate[i] * t_1^e[i][0] * ... * t_d^e[i][d-1]`. Coefficients land
    /// in the cyclotomic field generated by the translate.
    pub fn substitute_monomial(
        &self,
        exps: &[Vec<i64>],
        translate: &[RootOfUnity],
    ) -> Result<LaurentPoly<Cyclo>> {
        let n = self.vars.len();
        if exps.len() != n || translate.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "substitution data for {n} variables, got {} exponent rows and {} translate coordinates",
                exps.len(),
                translate.len()
            )));
        }
        let d = match exps.first() {
            Some(row) => row.len(),
            None => {
                return Err(Error::DimensionMismatch(
                    "substitution requires at least one variable".into(),
                ))
            }
        };
        if d == 0 || exps.iter().any(|row| row.len() != d) {
            return Err(Error::DimensionMismatch(
                "exponent rows must share a positive parameter count".into(),
            ));
        }
        let params = param_vars(d);
        let mut out = LaurentPoly::zero(&params);
        for (e, c) in &self.terms {
            let mut new_exp = vec![0i64; d];
            let mut root = RootOfUnity::one();
            for (i, k) in e.iter().enumerate() {
                if *k == 0 {
                    continue;
                }
                for (p, slot) in new_exp.iter_mut().enumerate() {
                    *slot += k * exps[i][p];
                }
                root = root.mul(&translate[i].pow(*k));
            }
            out.insert_add(new_exp, c.to_cyclo() * root.as_cyclo().to_cyclo());
        }
        Ok(out)
    }

    /// Conversion to a dense univariate polynomial; requires exactly one
    /// variable and no negative exponents.
    pub fn to_unipoly(&self) -> UniPoly<K> {
        assert_eq!(1, self.vars.len(), "univariate conversion needs one variable");
        let mut coeffs = Vec::new();
        for (e, c) in &self.terms {
            let k = e[0];
            assert!(k >= 0, "negative exponent in univariate conversion");
            let k = k as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, K::zero());
            }
            coeffs[k] = c.clone();
        }
        UniPoly::from_coeffs(&self.vars[0], coeffs)
    }
}

/// Canonical parameter variable names for a `d`-parameter subtorus.
pub fn param_vars(d: usize) -> Vec<String> {
    if d == 1 {
        vec!["t".to_string()]
    } else {
        (1..=d).map(|i| format!("t{i}")).collect()
    }
}

fn term_string<K: Field>(vars: &[String], exps: &[i64], c: &K) -> String {
    let mut factors = Vec::new();
    for (v, e) in vars.iter().zip(exps) {
        match e {
            0 => {}
            1 => factors.push(v.clone()),
            _ => factors.push(format!("{v}^{e}")),
        }
    }
    if factors.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        return factors.join("*");
    }
    if *c == -K::one() {
        return format!("-{}", factors.join("*"));
    }
    let cs = c.to_string();
    let needs_parens = cs.contains('+') || cs.contains('*') || cs[1..].contains('-');
    if needs_parens {
        format!("({cs})*{}", factors.join("*"))
    } else {
        format!("{cs}*{}", factors.join("*"))
    }
}

impl<K: Field> fmt::Display for LaurentPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let t = term_string(&self.vars, e, c);
            if out.is_empty() {
                out.push_str(&t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        write!(f, "{out}")
    }
}

impl<K: Field> fmt::Debug for LaurentPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<K: Field> serde::Serialize for LaurentPoly<K> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// ---- Parsing (rational coefficients) ----

impl LaurentPoly<Rat> {
    /// Parses the textual form against a declared variable list.
    pub fn parse<S: AsRef<str>>(vars: &[S], input: &str) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let mut p = LaurentPoly::zero(&vars);
        let bytes: Vec<char> = input.chars().collect();
        let mut pos = 0usize;
        let err = |pos: usize, msg: &str| Error::Parse {
            line: 1,
            col: pos + 1,
            msg: msg.to_string(),
        };
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            return Err(err(pos, "empty polynomial"));
        }
        let mut first_term = true;
        while pos < bytes.len() {
            let mut sign = Rat::one();
            if !first_term {
                match bytes[pos] {
                    '+' => pos += 1,
                    '-' => {
                        sign = -Rat::one();
                        pos += 1;
                    }
                    _ => return Err(err(pos, "expected `+` or `-` between terms")),
                }
                skip_ws(&mut pos);
            } else if bytes[pos] == '-' {
                sign = -Rat::one();
                pos += 1;
                skip_ws(&mut pos);
            }
            first_term = false;
            let mut coeff = sign;
            let mut exps = vec![0i64; vars.len()];
            let mut saw_factor = false;
            loop {
                skip_ws(&mut pos);
                if pos >= bytes.len() {
                    break;
                }
                let c = bytes[pos];
                if c.is_ascii_digit() {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let mut text: String = bytes[start..pos].iter().collect();
                    if pos < bytes.len() && bytes[pos] == '/' {
                        pos += 1;
                        let dstart = pos;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        if dstart == pos {
                            return Err(err(pos, "expected denominator digits"));
                        }
                        text.push('/');
                        text.extend(bytes[dstart..pos].iter());
                    }
                    let value: Rat = text
                        .parse()
                        .map_err(|e: String| err(start, &e))?;
                    coeff = coeff * value;
                    saw_factor = true;
                } else if c.is_ascii_alphabetic() {
                    let start = pos;
                    while pos < bytes.len()
                        && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == '_')
                    {
                        pos += 1;
                    }
                    let name: String = bytes[start..pos].iter().collect();
                    let idx = vars
                        .iter()
                        .position(|v| *v == name)
                        .ok_or_else(|| err(start, &format!("unknown variable `{name}`")))?;
                    let mut exp = 1i64;
                    if pos < bytes.len() && bytes[pos] == '^' {
                        pos += 1;
                        let estart = pos;
                        if pos < bytes.len() && bytes[pos] == '-' {
                            pos += 1;
                        }
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        let text: String = bytes[estart..pos].iter().collect();
                        exp = text
                            .parse()
                            .map_err(|_| err(estart, "expected integer exponent"))?;
                    }
                    exps[idx] += exp;
                    saw_factor = true;
                } else {
                    return Err(err(pos, "expected a factor"));
                }
                skip_ws(&mut pos);
                if pos < bytes.len() && bytes[pos] == '*' {
                    pos += 1;
                } else {
                    break;
                }
            }
            if !saw_factor {
                return Err(err(pos, "empty term"));
            }
            p.insert_add(exps, coeff);
            skip_ws(&mut pos);
        }
        Ok(p)
    }
}

// ---- Cyclotomic factor extraction and Galois norms ----

/// Splits a nonzero rational polynomial into its cyclotomic part and a
/// remainder with no root-of-unity roots.
///
/// Returns `(factors, remainder)` where `factors` lists `(n, multiplicity)`
/// for each cyclotomic polynomial dividing the input. Completeness rests on
/// the bound `phi(n) >= sqrt(n/2)`: any cyclotomic divisor of a polynomial of
/// degree `D` has `n <= 2*D^2 + 1`, so scanning up to that bound finds every
/// factor.
pub fn cyclotomic_part(f: &UniPoly<Rat>) -> Result<(Vec<(u64, u32)>, UniPoly<Rat>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rem = f.clone();
    let mut factors = Vec::new();
    let bound = {
        let d = f.degree().unwrap() as u64;
        2 * d * d + 1
    };
    for n in 1..=bound {
        let deg = rem.degree().unwrap() as u64;
        if deg == 0 {
            break;
        }
        if crate::exactnum::euler_phi(n) > deg {
            continue;
        }
        let phi_n = cyclotomic_polynomial(n).with_var(f.var_name());
        let mut mult = 0u32;
        loop {
            let (q, r) = rem.divrem(&phi_n);
            if r.is_zero() {
                rem = q;
                mult += 1;
            } else {
                break;
            }
        }
        if mult > 0 {
            factors.push((n, mult));
        }
    }
    Ok((factors, rem))
}

/// Pushes a polynomial over `Q(zeta_N)` down to `Q` by multiplying all of its
/// Galois conjugates; every root of the input is a root of the result.
pub fn norm_to_rationals(f: &UniPoly<Cyclo>) -> UniPoly<Rat> {
    let level = f
        .coeffs()
        .iter()
        .fold(1u64, |acc, c| crate::exactnum::lcm_u64(acc, c.level()));
    let lifted = f.map_coeffs(|c| c.embed(level));
    let mut prod = UniPoly::constant(f.var_name(), Cyclo::one());
    for a in coprime_residues(level) {
        let conj = lifted.map_coeffs(|c| c.galois(a));
        prod = prod.mul(&conj);
    }
    prod.map_coeffs(|c| {
        c.as_rational()
            .expect("a full Galois orbit product has rational coefficients")
    })
}
