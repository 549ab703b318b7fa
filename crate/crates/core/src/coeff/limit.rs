//! The singular limit `q → 1`.
//!
//! Limits land outside the coefficient ring: `(q^e - 1)/(q - 1) → e`, and
//! `e` is a *polynomial* in the colour symbols. [`ColourPoly`] is that
//! target ring, ℚ[colours][h].

use std::collections::BTreeMap;
use std::fmt;

use super::{CoeffError, CoeffPoly, ExponentForm};
use crate::scalar::Scalar;

/// A monomial `h^hpow · Π sᵢ^kᵢ` over colour symbol names.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ColourMono {
    pub hpow: u32,
    pub vars: BTreeMap<String, u32>,
}

impl ColourMono {
    pub fn unit() -> Self {
        ColourMono { hpow: 0, vars: BTreeMap::new() }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut vars = self.vars.clone();
        for (k, v) in &other.vars {
            *vars.entry(k.clone()).or_insert(0) += v;
        }
        ColourMono { hpow: self.hpow + other.hpow, vars }
    }
}

/// A polynomial in the colour symbols and `h` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColourPoly<R> {
    terms: BTreeMap<ColourMono, R>,
}

impl<R: Scalar> ColourPoly<R> {
    pub fn zero() -> Self {
        ColourPoly { terms: BTreeMap::new() }
    }

    pub fn constant(r: R) -> Self {
        let mut p = Self::zero();
        p.insert(ColourMono::unit(), r);
        p
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn var(name: &str) -> Self {
        let mut vars = BTreeMap::new();
        vars.insert(name.to_string(), 1);
        let mut p = Self::zero();
        p.insert(ColourMono { hpow: 0, vars }, R::one());
        p
    }

    /// An affine exponent form read as a degree-one polynomial.
    pub fn from_affine(e: &ExponentForm<R>) -> Self {
        let mut p = Self::constant(e.constant.clone());
        for (name, coef) in &e.linear {
            p = p.add(&Self::var(name).scale(coef));
        }
        p
    }

    fn insert(&mut self, m: ColourMono, r: R) {
        if r.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = slot.clone() + r;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, r);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, r) in &other.terms {
            out.insert(m.clone(), r.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        ColourPoly { terms: self.terms.iter().map(|(m, r)| (m.clone(), -r.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &R) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        ColourPoly {
            terms: self.terms.iter().map(|(m, r)| (m.clone(), r.clone() * s.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ra) in &self.terms {
            for (mb, rb) in &other.terms {
                out.insert(ma.mul(mb), ra.clone() * rb.clone());
            }
        }
        out
    }

    pub fn mul_h(&self, k: u32) -> Self {
        ColourPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, r)| (ColourMono { hpow: m.hpow + k, vars: m.vars.clone() }, r.clone()))
                .collect(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ColourMono, &R)> {
        self.terms.iter()
    }

    /// Evaluate at rational colour values; `h` stays formal only if absent.
    pub fn eval(&self, binding: &BTreeMap<String, R>, h: &R) -> Result<R, CoeffError> {
        let mut total = R::zero();
        for (m, r) in &self.terms {
            let mut v = r.clone();
            for _ in 0..m.hpow {
                v = v * h.clone();
            }
            for (name, k) in &m.vars {
                let b =
                    binding.get(name).ok_or_else(|| CoeffError::UnboundSymbol(name.clone()))?;
                for _ in 0..*k {
                    v = v * b.clone();
                }
            }
            total = total + v;
        }
        Ok(total)
    }
}

impl<R: Scalar> fmt::Display for ColourPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut pieces = Vec::new();
        for (m, r) in &self.terms {
            let mut factors = Vec::new();
            match m.hpow {
                0 => {}
                1 => factors.push("h".to_string()),
                k => factors.push(format!("h^{k}")),
            }
            for (name, k) in &m.vars {
                if *k == 1 {
                    factors.push(name.clone());
                } else {
                    factors.push(format!("{name}^{k}"));
                }
            }
            let body = factors.join("*");
            let piece = if body.is_empty() {
                format!("{r}")
            } else if r.is_one() {
                body
            } else if (-r.clone()).is_one() {
                format!("-{body}")
            } else {
                format!("{r}*{body}")
            };
            pieces.push(piece);
        }
        let mut s = pieces[0].clone();
        for p in &pieces[1..] {
            if let Some(stripped) = p.strip_prefix('-') {
                s.push_str(&format!(" - {stripped}"));
            } else {
                s.push_str(&format!(" + {p}"));
            }
        }
        write!(f, "{s}")
    }
}

/// Generalized binomial coefficient `C(e, k) = e(e-1)⋯(e-k+1)/k!` as a
/// polynomial in the colour symbols.
fn binomial_poly<R: Scalar>(e: &ExponentForm<R>, k: u32) -> ColourPoly<R> {
    let mut p = ColourPoly::one();
    let affine = ColourPoly::from_affine(e);
    let mut factorial = R::one();
    for i in 0..k {
        p = p.mul(&affine.sub(&ColourPoly::constant(R::int(i as i64))));
        factorial = factorial * R::int((i + 1) as i64);
    }
    p.scale(&(R::one() / factorial))
}

pub(super) fn limit_q1<R: Scalar>(a: &CoeffPoly<R>) -> Result<ColourPoly<R>, CoeffError> {
    // Canonical form keeps one common pole order per h-group.
    let mut groups: BTreeMap<u32, (u32, Vec<(R, ExponentForm<R>)>)> = BTreeMap::new();
    for t in a.terms() {
        let g = groups.entry(t.hpow).or_insert((0, Vec::new()));
        g.0 = g.0.max(t.polepow);
        g.1.push((t.rat.clone(), t.exp.clone()));
    }
    let mut out = ColourPoly::zero();
    for (hpow, (pole, terms)) in groups {
        // q = 1 + t: the group is t^(-pole)·Σᵢ rᵢ(1+t)^(eᵢ); expand the sum
        // to t-order `pole` (truncation order = max pole power, plus the
        // order-zero guard below which every lower coefficient must vanish).
        for order in 0..=pole {
            let mut coef = ColourPoly::zero();
            for (r, e) in &terms {
                coef = coef.add(&binomial_poly(e, order).scale(r));
            }
            if order < pole {
                if !coef.is_zero() {
                    return Err(CoeffError::PoleAtOne {
                        hpow,
                        order: order as i64 - pole as i64,
                        coefficient: coef.to_string(),
                    });
                }
            } else {
                out = out.add(&coef.mul_h(hpow));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::basic_number;
    use crate::Rat;

    type C = CoeffPoly<Rat>;
    type E = ExponentForm<Rat>;

    #[test]
    fn plain_substitution_when_no_pole() {
        // q^(l+m) -> 1
        let v = C::q_pow(E::symbol("l").plus_symbol("m", Rat::int(1)));
        assert_eq!(v.limit_q1().unwrap(), ColourPoly::one());
    }

    #[test]
    fn basic_number_limit() {
        // (q^(1-2m) - 1)/(q-1) -> 1 - 2m
        let v = basic_number::<Rat>(E::int(1).plus_symbol("m", Rat::int(-2)));
        let expect = ColourPoly::one().sub(&ColourPoly::var("m").scale(&Rat::int(2)));
        assert_eq!(v.limit_q1().unwrap(), expect);
    }

    #[test]
    fn series_oracle_example() {
        // (q^(m-l) - q^(1-l-m))/(q-1) -> 2m - 1
        let a = C::q_pow(E::symbol("m").plus_symbol("l", Rat::int(-1)));
        let b = C::q_pow(E::int(1).plus_symbol("l", Rat::int(-1)).plus_symbol("m", Rat::int(-1)));
        let v = a.sub(&b).mul(&C::pole(1));
        let expect = ColourPoly::var("m").scale(&Rat::int(2)).sub(&ColourPoly::one());
        assert_eq!(v.limit_q1().unwrap(), expect);
    }

    #[test]
    fn genuine_pole_is_detected() {
        // 1/(q-1) has no limit
        let err = C::pole(1).limit_q1().unwrap_err();
        assert!(matches!(err, CoeffError::PoleAtOne { hpow: 0, order: -1, .. }));
        // (q^l - 2)/(q-1) has no limit either
        let v = C::q_pow(E::symbol("l")).sub(&C::int(2)).mul(&C::pole(1));
        assert!(v.limit_q1().is_err());
    }

    #[test]
    fn second_order_pole_with_full_cancellation() {
        // (q^l - 1)^2/(q-1)^2 -> l^2
        let num = C::q_pow(E::symbol("l")).sub(&C::one());
        let v = num.mul(&num).mul(&C::pole(2));
        let l = ColourPoly::<Rat>::var("l");
        assert_eq!(v.limit_q1().unwrap(), l.mul(&l));
    }

    #[test]
    fn h_factors_carry_through() {
        // h·(q^(1-2m) - 1)/(q-1) -> h(1 - 2m)
        let v = C::h().mul(&basic_number(E::int(1).plus_symbol("m", Rat::int(-2))));
        let expect =
            ColourPoly::one().sub(&ColourPoly::var("m").scale(&Rat::int(2))).mul_h(1);
        assert_eq!(v.limit_q1().unwrap(), expect);
    }
}
