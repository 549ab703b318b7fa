//! Exact arithmetic in the coefficient ring.
//!
//! A coefficient is a finite sum of terms `r · q^e · h^k · (q-1)^(-m)` where
//! `r` is rational, `e` is an affine form in the colour symbols with rational
//! coefficients, `k, m ≥ 0`. Plain algebra never produces a pole (`m > 0`);
//! only the contraction's `α = h/(q-1)` substitution does.
//!
//! # Canonical form
//!
//! Terms are sorted by `(hpow, polepow, exp)`; `exp` compares by constant
//! part, then by the linear coefficients keyed by symbol name. No zero terms
//! are stored and no two terms share a key. Within one `h`-power all terms
//! share a common denominator exponent `m`, chosen minimal: the numerator is
//! reduced by `(q-1)` while it divides exactly. Divisibility of a sum of
//! `q`-monomials by `(q-1)` is decided class-wise — two exponents can only
//! interact when they differ by an integer, and within such a class the sum
//! is an ordinary Laurent polynomial in `q`, divisible iff it vanishes at
//! `q = 1`.
//!
//! With poles reduced, monomials with distinct `(hpow, polepow, exp)` are
//! linearly independent, so the zero test is exact: a coefficient is zero
//! iff its term list is empty.

mod limit;

pub use limit::{ColourMono, ColourPoly};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::colour::ColourSymbol;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("colour symbol `{0}` has no binding")]
    UnboundSymbol(String),
    #[error("no limit at q = 1: t^{order} coefficient {coefficient} survives below the pole order in the h^{hpow} part")]
    PoleAtOne { hpow: u32, order: i64, coefficient: String },
}

/// An affine form `c + Σ aᵢ·sᵢ` over colour symbol names, the exponent of `q`.
///
/// Negated colours fold into the sign of the linear coefficient, so keys are
/// plain symbol names. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExponentForm<R> {
    pub constant: R,
    pub linear: BTreeMap<String, R>,
}

impl<R: Scalar> ExponentForm<R> {
    pub fn zero() -> Self {
        ExponentForm { constant: R::zero(), linear: BTreeMap::new() }
    }

    pub fn constant(c: R) -> Self {
        ExponentForm { constant: c, linear: BTreeMap::new() }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(R::int(n))
    }

    pub fn symbol(name: &str) -> Self {
        Self::zero().plus_symbol(name, R::one())
    }

    /// `self + coef·colour`, folding constant colours into the constant part.
    pub fn plus_colour(mut self, colour: &ColourSymbol<R>, coef: R) -> Self {
        match colour {
            ColourSymbol::Const(v) => {
                self.constant = self.constant + coef * v.clone();
            }
            ColourSymbol::Sym { name, neg } => {
                let signed = if *neg { -coef } else { coef };
                self = self.plus_symbol(name, signed);
            }
        }
        self
    }

    pub fn plus_symbol(mut self, name: &str, coef: R) -> Self {
        if coef.is_zero() {
            return self;
        }
        let entry = self.linear.entry(name.to_string()).or_insert_with(R::zero);
        *entry = entry.clone() + coef;
        if entry.is_zero() {
            self.linear.remove(name);
        }
        self
    }

    pub fn plus_int(mut self, n: i64) -> Self {
        self.constant = self.constant + R::int(n);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.linear.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.constant = out.constant + other.constant.clone();
        for (k, v) in &other.linear {
            out = out.plus_symbol(k, v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        ExponentForm {
            constant: -self.constant.clone(),
            linear: self.linear.iter().map(|(k, v)| (k.clone(), -v.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &R) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        ExponentForm {
            constant: self.constant.clone() * s.clone(),
            linear: self.linear.iter().map(|(k, v)| (k.clone(), v.clone() * s.clone())).collect(),
        }
    }

    /// Replace the symbol `name` by an arbitrary colour (used when a rule
    /// template is instantiated at concrete colours).
    pub fn subst_symbol(&self, name: &str, colour: &ColourSymbol<R>) -> Self {
        match self.linear.get(name) {
            None => self.clone(),
            Some(coef) => {
                let coef = coef.clone();
                let mut out = self.clone();
                out.linear.remove(name);
                out.plus_colour(colour, coef)
            }
        }
    }

    pub fn swap_symbols(&self, s1: &str, s2: &str) -> Self {
        let mut out = self.clone();
        let a = out.linear.remove(s1);
        let b = out.linear.remove(s2);
        if let Some(a) = a {
            out.linear.insert(s2.to_string(), a);
        }
        if let Some(b) = b {
            out.linear.insert(s1.to_string(), b);
        }
        out
    }

    /// Evaluate at a full binding of every symbol occurring in the form.
    pub fn eval(&self, binding: &BTreeMap<String, R>) -> Result<R, CoeffError> {
        let mut v = self.constant.clone();
        for (name, coef) in &self.linear {
            let b = binding.get(name).ok_or_else(|| CoeffError::UnboundSymbol(name.clone()))?;
            v = v + coef.clone() * b.clone();
        }
        Ok(v)
    }

    pub fn symbol_names(&self) -> impl Iterator<Item = &str> {
        self.linear.keys().map(|s| s.as_str())
    }
}

/// One canonical term `rat · q^exp · h^hpow · (q-1)^(-polepow)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTerm<R> {
    pub rat: R,
    pub exp: ExponentForm<R>,
    pub hpow: u32,
    pub polepow: u32,
}

impl<R: Scalar> CoeffTerm<R> {
    fn key(&self) -> (u32, u32, &ExponentForm<R>) {
        (self.hpow, self.polepow, &self.exp)
    }
}

/// A canonical element of the coefficient ring. See the module docs for the
/// normal form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoeffPoly<R> {
    terms: Vec<CoeffTerm<R>>,
}

impl<R: Scalar> CoeffPoly<R> {
    pub fn zero() -> Self {
        CoeffPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rat(R::one())
    }

    pub fn from_rat(r: R) -> Self {
        Self::from_terms(vec![CoeffTerm { rat: r, exp: ExponentForm::zero(), hpow: 0, polepow: 0 }])
    }

    pub fn int(n: i64) -> Self {
        Self::from_rat(R::int(n))
    }

    /// `q^e` for an affine exponent form.
    pub fn q_pow(e: ExponentForm<R>) -> Self {
        Self::from_terms(vec![CoeffTerm { rat: R::one(), exp: e, hpow: 0, polepow: 0 }])
    }

    pub fn q_int(n: i64) -> Self {
        Self::q_pow(ExponentForm::int(n))
    }

    /// The deformation parameter `h`.
    pub fn h() -> Self {
        Self::from_terms(vec![CoeffTerm {
            rat: R::one(),
            exp: ExponentForm::zero(),
            hpow: 1,
            polepow: 0,
        }])
    }

    /// `(q-1)^(-k)`; `k = 0` gives 1.
    pub fn pole(k: u32) -> Self {
        Self::from_terms(vec![CoeffTerm {
            rat: R::one(),
            exp: ExponentForm::zero(),
            hpow: 0,
            polepow: k,
        }])
    }

    /// `q - 1` as a plain two-term polynomial.
    pub fn q_minus_one() -> Self {
        Self::q_int(1).sub(&Self::one())
    }

    pub fn from_terms(terms: Vec<CoeffTerm<R>>) -> Self {
        CoeffPoly { terms: canonicalize(terms) }
    }

    pub fn terms(&self) -> &[CoeffTerm<R>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && {
            let t = &self.terms[0];
            t.rat.is_one() && t.exp.is_zero() && t.hpow == 0 && t.polepow == 0
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut ts = self.terms.clone();
        ts.extend(other.terms.iter().cloned());
        Self::from_terms(ts)
    }

    pub fn neg(&self) -> Self {
        CoeffPoly {
            terms: self
                .terms
                .iter()
                .map(|t| CoeffTerm { rat: -t.rat.clone(), ..t.clone() })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut ts = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                ts.push(CoeffTerm {
                    rat: a.rat.clone() * b.rat.clone(),
                    exp: a.exp.add(&b.exp),
                    hpow: a.hpow + b.hpow,
                    polepow: a.polepow + b.polepow,
                });
            }
        }
        Self::from_terms(ts)
    }

    pub fn scale(&self, r: &R) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        CoeffPoly {
            terms: self
                .terms
                .iter()
                .map(|t| CoeffTerm { rat: t.rat.clone() * r.clone(), ..t.clone() })
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Multiplicative inverse when the value is a single pure-`q` monomial
    /// (`h` is not invertible; a pole inverts into an expanded `(q-1)^m`).
    pub fn inverse_monomial(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let t = &self.terms[0];
        if t.hpow != 0 {
            return None;
        }
        let inv = CoeffPoly::from_terms(vec![CoeffTerm {
            rat: R::one() / t.rat.clone(),
            exp: t.exp.neg(),
            hpow: 0,
            polepow: 0,
        }]);
        Some(inv.mul(&Self::q_minus_one().pow(t.polepow)))
    }

    /// Substitute every colour symbol by a rational value.
    pub fn subst_colours(&self, binding: &BTreeMap<String, R>) -> Result<Self, CoeffError> {
        let mut ts = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            ts.push(CoeffTerm {
                rat: t.rat.clone(),
                exp: ExponentForm::constant(t.exp.eval(binding)?),
                hpow: t.hpow,
                polepow: t.polepow,
            });
        }
        Ok(Self::from_terms(ts))
    }

    /// Replace one symbol by an arbitrary colour (template instantiation).
    pub fn subst_symbol(&self, name: &str, colour: &ColourSymbol<R>) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|t| CoeffTerm { exp: t.exp.subst_symbol(name, colour), ..t.clone() })
                .collect(),
        )
    }

    pub fn swap_symbols(&self, s1: &str, s2: &str) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|t| CoeffTerm { exp: t.exp.swap_symbols(s1, s2), ..t.clone() })
                .collect(),
        )
    }

    pub fn symbol_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self
            .terms
            .iter()
            .flat_map(|t| t.exp.symbol_names().map(|s| s.to_string()))
            .collect();
        names.sort();
        names.dedup();
        names
    }

    /// The limit as `q → 1`, a polynomial in the colour symbols and `h`.
    ///
    /// Substitutes `q = 1 + t`, expands each `q^e` as a generalized binomial
    /// series to the pole order of its `h`-group plus one term, cancels the
    /// poles and evaluates at `t = 0`. Errors with [`CoeffError::PoleAtOne`]
    /// when a coefficient below the pole order survives.
    pub fn limit_q1(&self) -> Result<ColourPoly<R>, CoeffError> {
        limit::limit_q1(self)
    }
}

/// `[z]_q = (1 - q^z)/(1 - q)` for an affine exponent, the basic number.
pub fn basic_number<R: Scalar>(z: ExponentForm<R>) -> CoeffPoly<R> {
    // (1 - q^z)/(1 - q) = (q^z - 1)·(q-1)^(-1)
    CoeffPoly::q_pow(z).sub(&CoeffPoly::one()).mul(&CoeffPoly::pole(1))
}

// ---------------------------------------------------------------------------
// canonicalization
// ---------------------------------------------------------------------------

fn canonicalize<R: Scalar>(mut terms: Vec<CoeffTerm<R>>) -> Vec<CoeffTerm<R>> {
    terms.retain(|t| !t.rat.is_zero());
    terms.sort_by(|a, b| a.key().cmp(&b.key()));
    let mut merged: Vec<CoeffTerm<R>> = Vec::with_capacity(terms.len());
    for t in terms {
        match merged.last_mut() {
            Some(last) if last.key() == t.key() => {
                last.rat = last.rat.clone() + t.rat;
            }
            _ => merged.push(t),
        }
    }
    merged.retain(|t| !t.rat.is_zero());

    if merged.iter().all(|t| t.polepow == 0) {
        return merged;
    }

    // Bring every h-group with a pole to one reduced common denominator.
    let mut by_hpow: BTreeMap<u32, Vec<CoeffTerm<R>>> = BTreeMap::new();
    for t in merged {
        by_hpow.entry(t.hpow).or_default().push(t);
    }
    let mut out = Vec::new();
    for (hpow, group) in by_hpow {
        let max_pole = group.iter().map(|t| t.polepow).max().unwrap_or(0);
        if max_pole == 0 {
            out.extend(group);
            continue;
        }
        let mut numerator: Vec<(R, ExponentForm<R>)> = Vec::new();
        for t in &group {
            // multiply by (q-1)^(max_pole - polepow), binomially expanded
            let k = max_pole - t.polepow;
            let mut binom = R::one();
            for j in 0..=k {
                if j > 0 {
                    // binom(k, j) = binom(k, j-1) * (k - j + 1) / j
                    binom = binom.clone() * R::int((k - j + 1) as i64) / R::int(j as i64);
                }
                let sign = if (k - j) % 2 == 0 { R::one() } else { -R::one() };
                numerator.push((
                    t.rat.clone() * binom.clone() * sign,
                    t.exp.clone().plus_int(j as i64),
                ));
            }
        }
        let (reduced, pole) = reduce_pole(merge_q_terms(numerator), max_pole);
        for (rat, exp) in reduced {
            out.push(CoeffTerm { rat, exp, hpow, polepow: pole });
        }
    }
    out.sort_by(|a, b| a.key().cmp(&b.key()));
    out
}

fn merge_q_terms<R: Scalar>(mut v: Vec<(R, ExponentForm<R>)>) -> Vec<(R, ExponentForm<R>)> {
    v.sort_by(|a, b| a.1.cmp(&b.1));
    let mut merged: Vec<(R, ExponentForm<R>)> = Vec::with_capacity(v.len());
    for (r, e) in v {
        match merged.last_mut() {
            Some((lr, le)) if *le == e => *lr = lr.clone() + r,
            _ => merged.push((r, e)),
        }
    }
    merged.retain(|(r, _)| !r.is_zero());
    merged
}

fn reduce_pole<R: Scalar>(
    mut numerator: Vec<(R, ExponentForm<R>)>,
    mut pole: u32,
) -> (Vec<(R, ExponentForm<R>)>, u32) {
    while pole > 0 && !numerator.is_empty() {
        match divide_by_q_minus_one(&numerator) {
            Some(quot) => {
                numerator = quot;
                pole -= 1;
            }
            None => break,
        }
    }
    if numerator.is_empty() {
        pole = 0;
    }
    (numerator, pole)
}

/// Exact division of a sum of `q`-monomials by `(q - 1)`, or `None`.
///
/// Exponents are grouped into classes whose members differ by integers;
/// multiplication by `q` shifts within a class, so the division succeeds iff
/// each class part, read as a Laurent polynomial, vanishes at `q = 1`.
fn divide_by_q_minus_one<R: Scalar>(
    terms: &[(R, ExponentForm<R>)],
) -> Option<Vec<(R, ExponentForm<R>)>> {
    type ClassKey<R> = (BTreeMap<String, R>, R);
    let mut classes: BTreeMap<ClassKey<R>, Vec<(R, R)>> = BTreeMap::new();
    for (r, e) in terms {
        classes
            .entry((e.linear.clone(), e.constant.frac_part()))
            .or_default()
            .push((r.clone(), e.constant.clone()));
    }
    let mut out = Vec::new();
    for ((linear, _), members) in classes {
        let base = members.iter().map(|(_, c)| c.clone()).min().unwrap();
        let max = members.iter().map(|(_, c)| c.clone()).max().unwrap();
        let n = (max - base.clone()).as_integer()? as usize;
        let mut dense = vec![R::zero(); n + 1];
        for (r, c) in members {
            let off = (c - base.clone()).as_integer()? as usize;
            dense[off] = dense[off].clone() + r;
        }
        // divisible by (x - 1) iff p(1) = 0
        let mut sum = R::zero();
        for d in &dense {
            sum = sum + d.clone();
        }
        if !sum.is_zero() {
            return None;
        }
        // synthetic division: p(x) = (x - 1)·c(x)
        let mut quot = vec![R::zero(); n.max(1)];
        let mut carry = R::zero();
        for j in (1..=n).rev() {
            carry = carry + dense[j].clone();
            quot[j - 1] = carry.clone();
        }
        for (j, c) in quot.into_iter().enumerate() {
            if !c.is_zero() {
                let e = ExponentForm {
                    constant: base.clone() + R::int(j as i64),
                    linear: linear.clone(),
                };
                out.push((c, e));
            }
        }
    }
    Some(merge_q_terms(out))
}

// ---------------------------------------------------------------------------
// operator sugar and display
// ---------------------------------------------------------------------------

impl<R: Scalar> std::ops::Add for CoeffPoly<R> {
    type Output = CoeffPoly<R>;
    fn add(self, rhs: Self) -> Self {
        CoeffPoly::add(&self, &rhs)
    }
}

impl<R: Scalar> std::ops::Sub for CoeffPoly<R> {
    type Output = CoeffPoly<R>;
    fn sub(self, rhs: Self) -> Self {
        CoeffPoly::sub(&self, &rhs)
    }
}

impl<R: Scalar> std::ops::Mul for CoeffPoly<R> {
    type Output = CoeffPoly<R>;
    fn mul(self, rhs: Self) -> Self {
        CoeffPoly::mul(&self, &rhs)
    }
}

impl<R: Scalar> std::ops::Neg for CoeffPoly<R> {
    type Output = CoeffPoly<R>;
    fn neg(self) -> Self {
        CoeffPoly::neg(&self)
    }
}

pub(crate) fn render_exponent<R: Scalar>(e: &ExponentForm<R>) -> String {
    if e.is_constant() {
        return format!("{}", e.constant);
    }
    let mut s = String::new();
    if !e.constant.is_zero() {
        s.push_str(&format!("{}", e.constant));
    }
    for (name, coef) in &e.linear {
        if coef.is_one() {
            if s.is_empty() {
                s.push_str(name);
            } else {
                s.push_str(&format!("+{name}"));
            }
        } else if (-coef.clone()).is_one() {
            s.push_str(&format!("-{name}"));
        } else if coef.is_negative() {
            s.push_str(&format!("-{}*{}", -coef.clone(), name));
        } else if s.is_empty() {
            s.push_str(&format!("{coef}*{name}"));
        } else {
            s.push_str(&format!("+{coef}*{name}"));
        }
    }
    s
}

fn render_term<R: Scalar>(t: &CoeffTerm<R>) -> String {
    let mut factors: Vec<String> = Vec::new();
    if !t.exp.is_zero() {
        if t.exp.is_constant() && t.exp.constant.is_one() {
            factors.push("q".to_string());
        } else if t.exp.is_constant() && t.exp.constant.as_integer().is_some() {
            factors.push(format!("q^{}", render_exponent(&t.exp)));
        } else {
            factors.push(format!("q^({})", render_exponent(&t.exp)));
        }
    }
    match t.hpow {
        0 => {}
        1 => factors.push("h".to_string()),
        k => factors.push(format!("h^{k}")),
    }
    if t.polepow > 0 {
        factors.push(format!("(q-1)^-{}", t.polepow));
    }
    let body = factors.join("*");
    if body.is_empty() {
        format!("{}", t.rat)
    } else if t.rat.is_one() {
        body
    } else if (-t.rat.clone()).is_one() {
        format!("-{body}")
    } else {
        format!("{}*{}", t.rat, body)
    }
}

impl<R: Scalar> fmt::Display for CoeffPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let r = render_term(t);
            if i == 0 {
                s.push_str(&r);
            } else if let Some(stripped) = r.strip_prefix('-') {
                s.push_str(&format!(" - {stripped}"));
            } else {
                s.push_str(&format!(" + {r}"));
            }
        }
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rat, Scalar};

    type C = CoeffPoly<Rat>;
    type E = ExponentForm<Rat>;

    fn q_affine(c: i64, syms: &[(&str, i64)]) -> C {
        let mut e = E::int(c);
        for (s, k) in syms {
            e = e.plus_symbol(s, Rat::int(*k));
        }
        C::q_pow(e)
    }

    #[test]
    fn additive_identity_and_inverse() {
        let a = q_affine(1, &[("l", 1)]);
        assert_eq!(a.add(&C::zero()), a);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn like_terms_merge() {
        // (q - q^-1) + q^-1 = q
        let a = C::q_int(1).sub(&C::q_int(-1));
        assert_eq!(a.add(&C::q_int(-1)), C::q_int(1));
    }

    #[test]
    fn exponents_add_under_multiplication() {
        // q^(1+l) * q^(-l-m) = q^(1-m)
        let a = q_affine(1, &[("l", 1)]);
        let b = q_affine(0, &[("l", -1), ("m", -1)]);
        assert_eq!(a.mul(&b), q_affine(1, &[("m", -1)]));
    }

    #[test]
    fn q_commutator_times_power() {
        // (q - q^-1)·q^(l+m) = q^(1+l+m) - q^(-1+l+m)
        let a = C::q_int(1).sub(&C::q_int(-1));
        let b = q_affine(0, &[("l", 1), ("m", 1)]);
        let expect = q_affine(1, &[("l", 1), ("m", 1)]).sub(&q_affine(-1, &[("l", 1), ("m", 1)]));
        assert_eq!(a.mul(&b), expect);
    }

    #[test]
    fn pole_cancellation() {
        // h·(q-1)^-1 · (q-1) = h
        let alpha = C::h().mul(&C::pole(1));
        assert_eq!(alpha.mul(&C::q_minus_one()), C::h());
    }

    #[test]
    fn distinct_exponents_do_not_cancel() {
        let a = q_affine(0, &[("l", 1), ("m", -1)]);
        let b = q_affine(0, &[("l", -1), ("m", 1)]);
        assert!(!a.sub(&b).is_zero());
    }

    #[test]
    fn integer_exponent_pole_reduces() {
        // (q^3 - 1)/(q-1) = 1 + q + q^2
        let v = C::q_int(3).sub(&C::one()).mul(&C::pole(1));
        let expect = C::one().add(&C::q_int(1)).add(&C::q_int(2));
        assert_eq!(v, expect);
        // (q^-2 - 1)/(q-1) = -q^-2 - q^-1
        let v = C::q_int(-2).sub(&C::one()).mul(&C::pole(1));
        let expect = C::q_int(-2).neg().sub(&C::q_int(-1));
        assert_eq!(v, expect);
    }

    #[test]
    fn symbolic_pole_stays() {
        // (q^(1-2m) - 1)/(q-1) is already reduced
        let v = basic_number::<Rat>(E::int(1).plus_symbol("m", Rat::int(-2)));
        assert_eq!(v.terms().len(), 2);
        assert!(v.terms().iter().all(|t| t.polepow == 1));
    }

    #[test]
    fn mixed_class_reduction() {
        // h(q-1)^-1·(q^(l+1) - q^l) = h·q^l
        let num = q_affine(1, &[("l", 1)]).sub(&q_affine(0, &[("l", 1)]));
        let v = C::h().mul(&C::pole(1)).mul(&num);
        assert_eq!(v, C::h().mul(&q_affine(0, &[("l", 1)])));
    }

    #[test]
    fn subst_colours_examples() {
        let mut binding = BTreeMap::new();
        binding.insert("l".to_string(), Rat::int(0));
        binding.insert("m".to_string(), Rat::int(0));
        // q^(1-l-m) at l=m=0 -> q
        let v = q_affine(1, &[("l", -1), ("m", -1)]).subst_colours(&binding).unwrap();
        assert_eq!(v, C::q_int(1));

        let mut binding = BTreeMap::new();
        binding.insert("l".to_string(), Rat::rat(1, 2));
        binding.insert("m".to_string(), Rat::rat(1, 2));
        // q^(2(l-m)) at l=m=1/2 -> 1
        let v = q_affine(0, &[("l", 2), ("m", -2)]).subst_colours(&binding).unwrap();
        assert_eq!(v, C::one());
        // q^(1+2l) at l=1/2 -> q^2
        let v = q_affine(1, &[("l", 2)]).subst_colours(&binding).unwrap();
        assert_eq!(v, C::q_int(2));
    }

    #[test]
    fn unbound_symbol_is_an_error() {
        let binding = BTreeMap::new();
        let err = q_affine(0, &[("l", 1)]).subst_colours(&binding).unwrap_err();
        assert_eq!(err, CoeffError::UnboundSymbol("l".to_string()));
    }

    #[test]
    fn inverse_monomial() {
        let m = q_affine(2, &[("l", 1)]).scale(&Rat::rat(3, 2));
        let inv = m.inverse_monomial().unwrap();
        assert!(m.mul(&inv).is_one());
        assert!(C::q_int(1).sub(&C::one()).inverse_monomial().is_none());
        assert!(C::h().inverse_monomial().is_none());
        // a pole inverts into the expanded (q-1)
        let inv = C::pole(1).inverse_monomial().unwrap();
        assert_eq!(inv, C::q_minus_one());
    }

    #[test]
    fn display_is_readable() {
        let v = q_affine(1, &[("l", -1), ("m", -1)]);
        assert_eq!(v.to_string(), "q^(1-l-m)");
        // terms sort by exponent, so q^-1 precedes q
        let v = C::q_int(1).sub(&C::q_int(-1));
        assert_eq!(v.to_string(), "-q^-1 + q");
    }
}
