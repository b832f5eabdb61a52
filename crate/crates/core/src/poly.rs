//! Exact sparse multivariate polynomials over the integers.
//!
//! Every polynomial lives in a fixed variable context: the three parameters
//! `alpha, beta, gamma` followed by the row variables `x1, ..., xn`. Terms are
//! kept in a `BTreeMap` keyed by exponent vectors under graded-lexicographic
//! order, with zero coefficients never stored, so structural equality is
//! semantic equality.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;
use thiserror::Error;

/// Number of parameter slots (`alpha`, `beta`, `gamma`) preceding the row variables.
pub const PARAM_SLOTS: usize = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable context mismatch: n = {left} vs n = {right}")]
    ContextMismatch { left: usize, right: usize },
    #[error("row index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("variable {var} is not part of the context with n = {n}")]
    UnknownVariable { var: Var, n: usize },
    #[error("a variable context needs at least one row variable")]
    EmptyContext,
    #[error("invalid polynomial JSON: {0}")]
    Json(String),
}

/// A variable of the context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Alpha,
    Beta,
    Gamma,
    /// Row variable `x_i`, 1-based.
    X(usize),
}

impl Var {
    /// Position of the variable in an exponent vector.
    pub fn slot(self) -> usize {
        match self {
            Var::Alpha => 0,
            Var::Beta => 1,
            Var::Gamma => 2,
            Var::X(i) => PARAM_SLOTS + i - 1,
        }
    }

    fn from_slot(slot: usize) -> Var {
        match slot {
            0 => Var::Alpha,
            1 => Var::Beta,
            2 => Var::Gamma,
            s => Var::X(s - PARAM_SLOTS + 1),
        }
    }

    fn fits(self, n: usize) -> bool {
        match self {
            Var::X(i) => (1..=n).contains(&i),
            _ => true,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Alpha => write!(f, "alpha"),
            Var::Beta => write!(f, "beta"),
            Var::Gamma => write!(f, "gamma"),
            Var::X(i) => write!(f, "x{i}"),
        }
    }
}

impl FromStr for Var {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "alpha" | "a" => Ok(Var::Alpha),
            "beta" | "b" => Ok(Var::Beta),
            "gamma" | "g" => Ok(Var::Gamma),
            _ => s
                .strip_prefix('x')
                .and_then(|rest| rest.parse::<usize>().ok())
                .filter(|&i| i >= 1)
                .map(Var::X)
                .ok_or_else(|| format!("unknown variable `{s}`")),
        }
    }
}

/// Exponent vector of length `n + 3`, ordered `alpha, beta, gamma, x1..xn`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(SmallVec<[u32; 9]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n + PARAM_SLOTS))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, var: Var) -> u32 {
        self.0[var.slot()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    fn with_exponent(&self, slot: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.0[slot] = e;
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (slot, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", Var::from_slot(slot))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// A variable assignment for [`Polynomial::substitute`].
pub type Assignment = [(Var, Polynomial)];

/// Outcome of a coefficient sign scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonnegReport {
    pub all_nonneg: bool,
    /// First negative term in canonical order, if any.
    pub witness: Option<(Vec<u32>, String)>,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, 1)
    }

    pub fn constant(n: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(n), c);
        }
        Polynomial { n, terms }
    }

    /// The polynomial consisting of a single variable.
    ///
    /// Panics if `var` is a row variable outside `1..=n`; use
    /// [`Polynomial::try_var`] for checked construction.
    pub fn var(n: usize, var: Var) -> Self {
        Self::try_var(n, var).expect("variable outside context")
    }

    pub fn try_var(n: usize, var: Var) -> Result<Self, PolyError> {
        if !var.fits(n) {
            return Err(PolyError::UnknownVariable { var, n });
        }
        let mut m = Monomial::one(n);
        m.0[var.slot()] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(m, BigInt::one());
        Ok(Polynomial { n, terms })
    }

    pub fn alpha(n: usize) -> Self {
        Self::var(n, Var::Alpha)
    }

    pub fn beta(n: usize) -> Self {
        Self::var(n, Var::Beta)
    }

    pub fn gamma(n: usize) -> Self {
        Self::var(n, Var::Gamma)
    }

    pub fn x(n: usize, i: usize) -> Self {
        Self::var(n, Var::X(i))
    }

    /// `coeff * x^exps` for an x-only exponent vector of length `n`.
    pub fn x_monomial(n: usize, x_exps: &[u32], coeff: impl Into<BigInt>) -> Self {
        assert_eq!(x_exps.len(), n, "x exponent vector has wrong length");
        let mut exps = vec![0; PARAM_SLOTS];
        exps.extend_from_slice(x_exps);
        Self::from_terms(n, [(exps, coeff.into())])
    }

    /// Builds a polynomial from `(exponent vector, coefficient)` pairs.
    /// Repeated monomials are summed. Panics on wrong exponent-vector length.
    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut p = Polynomial::zero(n);
        for (exps, c) in terms {
            assert_eq!(
                exps.len(),
                n + PARAM_SLOTS,
                "exponent vector has wrong length"
            );
            p.add_term(Monomial(SmallVec::from_vec(exps)), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// Number of stored (nonzero) terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (ascending graded-lex) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial::from_exponents(exps))
            .cloned()
            .unwrap_or_default()
    }

    /// Constant term value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: Var) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(var))
            .max()
            .unwrap_or(0)
    }

    fn check_context(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    fn check_row(&self, i: usize) -> Result<(), PolyError> {
        if i >= 1 && i < self.n {
            Ok(())
        } else {
            Err(PolyError::IndexOutOfRange {
                index: i,
                n: self.n,
            })
        }
    }

    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial, PolyError> {
        self.check_context(other)?;
        Ok(match op {
            ArithOp::Add => {
                let mut r = self.clone();
                r.add_assign_unchecked(other, false);
                r
            }
            ArithOp::Sub => {
                let mut r = self.clone();
                r.add_assign_unchecked(other, true);
                r
            }
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    fn add_assign_unchecked(&mut self, other: &Polynomial, negate: bool) {
        for (m, c) in &other.terms {
            let c = if negate { -c } else { c.clone() };
            self.add_term(m.clone(), c);
        }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.n);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = small.terms.iter().next().unwrap();
            return large.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(small.len() * large.len());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                acc.entry(m).and_modify(|e| *e += &c).or_insert(c);
            }
        }
        Polynomial {
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m2, c2)| (m.mul(m2), c * c2))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c2)| (m.clone(), c * c2))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `f^{s_i}`: exchanges `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Result<Polynomial, PolyError> {
        self.check_row(i)?;
        let (a, b) = (Var::X(i).slot(), Var::X(i + 1).slot());
        Ok(Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.0.swap(a, b);
                    (m, c.clone())
                })
                .collect(),
        })
    }

    /// `(f^{s_i} - f) / (x_{i+1} - x_i)`.
    ///
    /// The numerator is divided by synthetic division in `x_{i+1}` with
    /// coefficients in the remaining variables. The remainder is always zero
    /// for antisymmetric numerators; a nonzero remainder panics.
    pub fn divided_difference(&self, i: usize) -> Result<Polynomial, PolyError> {
        let numerator = &self.swap_vars(i)? - self;
        let (z, y) = (Var::X(i).slot(), Var::X(i + 1).slot());
        let (quotient, remainder) = numerator.divide_by_difference(y, z);
        assert!(
            remainder.is_zero(),
            "divided difference left a nonzero remainder: {remainder}"
        );
        Ok(quotient)
    }

    /// Division by `x_{i+1} - x_i`, returning `(quotient, remainder)` with the
    /// remainder free of `x_{i+1}`.
    pub fn divide_by_row_difference(
        &self,
        i: usize,
    ) -> Result<(Polynomial, Polynomial), PolyError> {
        self.check_row(i)?;
        Ok(self.divide_by_difference(Var::X(i + 1).slot(), Var::X(i).slot()))
    }

    /// Synthetic division of `self` by `(v_y - v_z)` viewed as a polynomial
    /// in `v_y`. Returns `(quotient, remainder)`; the remainder is free of `v_y`.
    fn divide_by_difference(&self, y: usize, z: usize) -> (Polynomial, Polynomial) {
        let n = self.n;
        let mut by_degree: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let k = m.0[y];
            by_degree
                .entry(k)
                .or_insert_with(|| Polynomial::zero(n))
                .terms
                .insert(m.with_exponent(y, 0), c.clone());
        }
        let top = match by_degree.keys().next_back() {
            Some(&k) => k,
            None => return (Polynomial::zero(n), Polynomial::zero(n)),
        };
        let mut quotient = Polynomial::zero(n);
        let mut carry = Polynomial::zero(n);
        for k in (1..=top).rev() {
            // q_{k-1} = g_k + v_z * q_k
            let mut q = carry.shift_slot(z);
            if let Some(g) = by_degree.get(&k) {
                q.add_assign_unchecked(g, false);
            }
            for (m, c) in &q.terms {
                quotient.terms.insert(m.with_exponent(y, k - 1), c.clone());
            }
            carry = q;
        }
        let mut remainder = carry.shift_slot(z);
        if let Some(g) = by_degree.get(&0) {
            remainder.add_assign_unchecked(g, false);
        }
        (quotient, remainder)
    }

    fn shift_slot(&self, slot: usize) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.0[slot] += 1;
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn substitute(&self, assignment: &Assignment) -> Result<Polynomial, PolyError> {
        for (var, value) in assignment {
            if !var.fits(self.n) {
                return Err(PolyError::UnknownVariable {
                    var: *var,
                    n: self.n,
                });
            }
            self.check_context(value)?;
        }
        if assignment.is_empty() {
            return Ok(self.clone());
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut result = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let mut factor = Polynomial::constant(self.n, c.clone());
            for (idx, (var, value)) in assignment.iter().enumerate() {
                let e = m.exponent(*var);
                if e == 0 {
                    continue;
                }
                rest.0[var.slot()] = 0;
                let pw = powers.entry((idx, e)).or_insert_with(|| value.pow(e));
                factor = &factor * &*pw;
                if factor.is_zero() {
                    break;
                }
            }
            if factor.is_zero() {
                continue;
            }
            let term = factor.mul_term(&rest, &BigInt::one());
            result.add_assign_unchecked(&term, false);
        }
        Ok(result)
    }

    /// Checks that every coefficient is positive (zeros are never stored).
    pub fn nonneg_report(&self) -> NonnegReport {
        let witness = self
            .terms
            .iter()
            .find(|(_, c)| c.is_negative())
            .map(|(m, c)| (m.0.to_vec(), c.to_string()));
        NonnegReport {
            all_nonneg: witness.is_none(),
            witness,
        }
    }

    /// Canonical JSON encoding (compact, terms in canonical order).
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Polynomial, PolyError> {
        serde_json::from_str(s).map_err(|e| PolyError::Json(e.to_string()))
    }

    /// Random polynomial in the row variables (and optionally the parameters)
    /// with small integer coefficients.
    pub fn random<R: Rng + ?Sized>(
        n: usize,
        rng: &mut R,
        max_degree: u32,
        max_terms: usize,
        with_params: bool,
    ) -> Polynomial {
        let mut p = Polynomial::zero(n);
        let count = rng.gen_range(1..=max_terms.max(1));
        for _ in 0..count {
            let mut exps = vec![0u32; n + PARAM_SLOTS];
            let deg = rng.gen_range(0..=max_degree);
            let first = if with_params { 0 } else { PARAM_SLOTS };
            for _ in 0..deg {
                let slot = rng.gen_range(first..n + PARAM_SLOTS);
                exps[slot] += 1;
            }
            let mut c: i64 = rng.gen_range(-5..=5);
            if c == 0 {
                c = 1;
            }
            p.add_term(Monomial(SmallVec::from_vec(exps)), BigInt::from(c));
        }
        p
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[n={}]({})", self.n, self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exps: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolynomialJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    coeff: c.to_string(),
                    exps: m.0.to_vec(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = PolynomialJson::deserialize(deserializer)?;
        if raw.n == 0 {
            return Err(D::Error::custom(PolyError::EmptyContext));
        }
        let mut p = Polynomial::zero(raw.n);
        for t in raw.terms {
            if t.exps.len() != raw.n + PARAM_SLOTS {
                return Err(D::Error::custom(format!(
                    "exponent vector of length {} in a context with n = {}",
                    t.exps.len(),
                    raw.n
                )));
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient `{}`", t.coeff)))?;
            p.add_term(Monomial(SmallVec::from_vec(t.exps)), c);
        }
        Ok(p)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.arith(rhs, $op).expect("polynomial context mismatch")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, ArithOp::Add);
binop!(Sub, sub, ArithOp::Sub);
binop!(Mul, mul, ArithOp::Mul);

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        self.check_context(rhs)
            .expect("polynomial context mismatch");
        self.add_assign_unchecked(rhs, false);
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        self.check_context(rhs)
            .expect("polynomial context mismatch");
        self.add_assign_unchecked(rhs, true);
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
