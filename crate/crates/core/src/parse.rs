//! The expression grammar.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ['^' power]
//! atom     := rational | 'q' | 'h' | generator | '(' expr ')'
//! generator:= kind '[' colour ']'          kind in {a b c d x y xi eta dx dy}
//! colour   := ['-'] name | rational
//! power    := ['-'] integer | '(' affine ')'   (affine only for base 'q')
//! affine   := ['-'] aterm (('+' | '-') aterm)*
//! aterm    := rational ['*'] (name | '(' affine ')') | rational | name
//!             | '(' affine ')'
//! rational := integer ['/' integer]
//! ```
//!
//! Colour names must be declared up front; `q^(1-l-m)` style exponents are
//! affine forms in the declared names. A negative power is accepted when the
//! base is an invertible scalar monomial or exactly `q-1`, which yields a
//! pole term.

use std::fmt;

use thiserror::Error;

use crate::algebra::{GenKind, NcPoly};
use crate::coeff::{CoeffPoly, ExponentForm};
use crate::colour::ColourSymbol;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown colour `{name}` at byte {pos}; declared colours: {declared}")]
    UnknownColour { pos: usize, name: String, declared: String },
}

fn syntax(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { pos, msg: msg.into() }
}

/// The colour names an expression may mention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourEnv {
    names: Vec<String>,
}

impl ColourEnv {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        ColourEnv { names: names.iter().map(|s| s.as_ref().to_string()).collect() }
    }

    /// The standard three generic colours `l, m, n`.
    pub fn standard() -> Self {
        Self::new(&["l", "m", "n"])
    }

    /// The two slot names used by rule-family templates.
    pub fn slots() -> Self {
        Self::new(&[crate::rewrite::SLOT_1, crate::rewrite::SLOT_2])
    }

    pub fn contains(&self, name: &str) -> bool {
        self.names.iter().any(|n| n == name)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

impl fmt::Display for ColourEnv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}

pub fn parse_expr<R: Scalar>(src: &str, env: &ColourEnv) -> Result<NcPoly<R>, ParseError> {
    let mut p = Parser { tokens: lex(src)?, pos: 0, env };
    let e = p.expr()?;
    p.expect_end()?;
    Ok(e)
}

/// Parse an expression that must be a pure scalar (no generators).
pub fn parse_coeff<R: Scalar>(src: &str, env: &ColourEnv) -> Result<CoeffPoly<R>, ParseError> {
    let p = parse_expr::<R>(src, env)?;
    as_scalar(&p).ok_or_else(|| syntax(0, "expected a scalar expression without generators"))
}

fn as_scalar<R: Scalar>(p: &NcPoly<R>) -> Option<CoeffPoly<R>> {
    if p.is_zero() {
        return Some(CoeffPoly::zero());
    }
    let mut terms = p.terms();
    let (w, c) = terms.next()?;
    if !w.is_empty() || terms.next().is_some() {
        return None;
    }
    Some(c.clone())
}

// ---------------------------------------------------------------------------
// lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            _ if c.is_ascii_digit() => {
                let start = i;
                let mut v: i64 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(bytes[i] as i64 - '0' as i64))
                        .ok_or_else(|| syntax(start, "integer literal too large"))?;
                    i += 1;
                }
                out.push((start, Tok::Int(v)));
                continue;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                let mut s = String::new();
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    s.push(bytes[i]);
                    i += 1;
                }
                out.push((start, Tok::Ident(s)));
                continue;
            }
            other => return Err(syntax(i, format!("unexpected character `{other}`"))),
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    env: &'a ColourEnv,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map(|(p, _)| *p).unwrap_or_else(|| {
            self.tokens.last().map(|(p, _)| p + 1).unwrap_or(0)
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(syntax(self.here(), format!("expected {what}")))
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.pos == self.tokens.len() {
            Ok(())
        } else {
            Err(syntax(self.here(), "trailing input"))
        }
    }

    fn expr<R: Scalar>(&mut self) -> Result<NcPoly<R>, ParseError> {
        let mut acc = if self.eat(&Tok::Minus) { self.term::<R>()?.neg() } else { self.term()? };
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<R: Scalar>(&mut self) -> Result<NcPoly<R>, ParseError> {
        let mut acc = self.factor::<R>()?;
        while self.eat(&Tok::Star) {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor<R: Scalar>(&mut self) -> Result<NcPoly<R>, ParseError> {
        // `q` gets special treatment: its power may be an affine form
        if let Some(Tok::Ident(id)) = self.peek() {
            if id == "q" {
                self.pos += 1;
                if self.eat(&Tok::Caret) {
                    let e = self.q_power()?;
                    return Ok(NcPoly::scalar(CoeffPoly::q_pow(e)));
                }
                return Ok(NcPoly::scalar(CoeffPoly::q_int(1)));
            }
        }
        let base = self.atom::<R>()?;
        if self.eat(&Tok::Caret) {
            let at = self.here();
            let n = self.signed_int()?;
            return power(base, n).map_err(|msg| syntax(at, msg));
        }
        Ok(base)
    }

    fn atom<R: Scalar>(&mut self) -> Result<NcPoly<R>, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => {
                let mut v = R::int(n);
                if self.eat(&Tok::Slash) {
                    let d = match self.bump() {
                        Some(Tok::Int(d)) if d != 0 => d,
                        _ => return Err(syntax(self.here(), "expected nonzero denominator")),
                    };
                    v = v / R::int(d);
                }
                Ok(NcPoly::scalar(CoeffPoly::from_rat(v)))
            }
            Some(Tok::Ident(id)) if id == "h" => Ok(NcPoly::scalar(CoeffPoly::h())),
            Some(Tok::Ident(id)) => match GenKind::from_name(&id) {
                Some(kind) => {
                    self.expect(Tok::LBracket, "`[` after a generator kind")?;
                    let colour = self.colour()?;
                    self.expect(Tok::RBracket, "`]` closing the colour tag")?;
                    Ok(NcPoly::generator(kind, colour))
                }
                None => Err(syntax(at, format!("unknown identifier `{id}`"))),
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => Err(syntax(at, "expected a number, generator, `q`, `h` or `(`")),
        }
    }

    fn colour<R: Scalar>(&mut self) -> Result<ColourSymbol<R>, ParseError> {
        let at = self.here();
        let neg = self.eat(&Tok::Minus);
        match self.bump() {
            Some(Tok::Int(n)) => {
                let mut v = R::int(n);
                if self.eat(&Tok::Slash) {
                    let d = match self.bump() {
                        Some(Tok::Int(d)) if d != 0 => d,
                        _ => return Err(syntax(self.here(), "expected nonzero denominator")),
                    };
                    v = v / R::int(d);
                }
                Ok(ColourSymbol::Const(if neg { -v } else { v }))
            }
            Some(Tok::Ident(name)) => {
                if !self.env.contains(&name) {
                    return Err(ParseError::UnknownColour {
                        pos: at,
                        name,
                        declared: self.env.to_string(),
                    });
                }
                Ok(ColourSymbol::Sym { name, neg })
            }
            _ => Err(syntax(at, "expected a colour name or rational constant")),
        }
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat(&Tok::Minus);
        match self.bump() {
            Some(Tok::Int(n)) => Ok(if neg { -n } else { n }),
            _ => Err(syntax(self.here(), "expected an integer power")),
        }
    }

    /// Power of `q`: either a signed integer or a parenthesized affine form.
    fn q_power<R: Scalar>(&mut self) -> Result<ExponentForm<R>, ParseError> {
        if self.peek() == Some(&Tok::LParen) {
            self.pos += 1;
            let e = self.affine()?;
            self.expect(Tok::RParen, "`)` closing the exponent")?;
            Ok(e)
        } else {
            Ok(ExponentForm::int(self.signed_int()?))
        }
    }

    fn affine<R: Scalar>(&mut self) -> Result<ExponentForm<R>, ParseError> {
        let mut acc =
            if self.eat(&Tok::Minus) { self.affine_term::<R>()?.neg() } else { self.affine_term()? };
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.affine_term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.affine_term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn affine_term<R: Scalar>(&mut self) -> Result<ExponentForm<R>, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => {
                let mut v = R::int(n);
                if self.eat(&Tok::Slash) {
                    let d = match self.bump() {
                        Some(Tok::Int(d)) if d != 0 => d,
                        _ => return Err(syntax(self.here(), "expected nonzero denominator")),
                    };
                    v = v / R::int(d);
                }
                // optional scaled symbol or parenthesized form: 2*l, 2l, 2(l-m)
                self.eat(&Tok::Star);
                match self.peek() {
                    Some(Tok::Ident(_)) => {
                        let sym = self.affine_symbol::<R>()?;
                        Ok(sym.scale(&v))
                    }
                    Some(Tok::LParen) => {
                        self.pos += 1;
                        let inner = self.affine::<R>()?;
                        self.expect(Tok::RParen, "`)`")?;
                        Ok(inner.scale(&v))
                    }
                    _ => Ok(ExponentForm::constant(v)),
                }
            }
            Some(Tok::Ident(_)) => {
                self.pos -= 1;
                self.affine_symbol()
            }
            Some(Tok::LParen) => {
                let inner = self.affine()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(syntax(at, "expected an affine exponent term")),
        }
    }

    fn affine_symbol<R: Scalar>(&mut self) -> Result<ExponentForm<R>, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Ident(name)) => {
                if !self.env.contains(&name) {
                    return Err(ParseError::UnknownColour {
                        pos: at,
                        name,
                        declared: self.env.to_string(),
                    });
                }
                Ok(ExponentForm::symbol(&name))
            }
            _ => Err(syntax(at, "expected a colour name")),
        }
    }
}

fn power<R: Scalar>(base: NcPoly<R>, n: i64) -> Result<NcPoly<R>, String> {
    if n >= 0 {
        let mut out = NcPoly::one();
        for _ in 0..n {
            out = out.mul(&base);
        }
        return Ok(out);
    }
    let c = as_scalar(&base).ok_or("cannot invert an expression containing generators")?;
    let inv = if let Some(inv) = c.inverse_monomial() {
        inv
    } else if c == CoeffPoly::q_minus_one() {
        CoeffPoly::pole(1)
    } else {
        return Err(format!(
            "cannot invert `{c}`; only monomials in q and the factor (q-1) are invertible"
        ));
    };
    let mut out = NcPoly::one();
    let scalar_inv = NcPoly::scalar(inv);
    for _ in 0..(-n) {
        out = out.mul(&scalar_inv);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GenKind::*;
    use crate::colour::{lambda, mu};
    use crate::{Coeff, Exponent, Poly, Rat};

    fn std_env() -> ColourEnv {
        ColourEnv::standard()
    }

    #[test]
    fn plane_relation_parses() {
        let p: Poly = parse_expr("x[l]*y[m] - q^(1-l-m)*y[m]*x[l]", &std_env()).unwrap();
        let e = Exponent::int(1)
            .plus_symbol("l", Rat::int(-1))
            .plus_symbol("m", Rat::int(-1));
        let expect = Poly::generator(X, lambda()).mul(&Poly::generator(Y, mu())).sub(
            &Poly::generator(Y, mu())
                .mul(&Poly::generator(X, lambda()))
                .scale(&Coeff::q_pow(e)),
        );
        assert_eq!(p, expect);
    }

    #[test]
    fn unit_and_odd_word() {
        let p: Poly = parse_expr("1", &std_env()).unwrap();
        assert_eq!(p, Poly::one());
        let p: Poly = parse_expr("xi[l]*xi[m]", &std_env()).unwrap();
        assert_eq!(p.num_terms(), 1);
    }

    #[test]
    fn poles_and_negative_powers() {
        let p: Poly = parse_expr("h*(q-1)^-1", &std_env()).unwrap();
        assert_eq!(p, Poly::scalar(Coeff::h().mul(&Coeff::pole(1))));
        let p: Poly = parse_expr("q^-2", &std_env()).unwrap();
        assert_eq!(p, Poly::scalar(Coeff::q_int(-2)));
        assert!(parse_expr::<Rat>("(q+1)^-1", &std_env()).is_err());
    }

    #[test]
    fn affine_exponent_forms() {
        let p: Poly = parse_expr("q^(2(l-m))", &std_env()).unwrap();
        let e = Exponent::zero()
            .plus_symbol("l", Rat::int(2))
            .plus_symbol("m", Rat::int(-2));
        assert_eq!(p, Poly::scalar(Coeff::q_pow(e)));
        let p2: Poly = parse_expr("q^(2*l-2*m)", &std_env()).unwrap();
        assert_eq!(p, p2);
        let p3: Poly = parse_expr("q^(-(1+l+m))", &std_env()).unwrap();
        let e3 = Exponent::int(-1)
            .plus_symbol("l", Rat::int(-1))
            .plus_symbol("m", Rat::int(-1));
        assert_eq!(p3, Poly::scalar(Coeff::q_pow(e3)));
    }

    #[test]
    fn colour_tags() {
        let p: Poly = parse_expr("x[-l] + y[1/2] + a[0]", &std_env()).unwrap();
        assert_eq!(p.num_terms(), 3);
        let err = parse_expr::<Rat>("x[w]", &std_env()).unwrap_err();
        assert!(matches!(err, ParseError::UnknownColour { .. }));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_expr::<Rat>("x[l]*", &std_env()).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { pos: 5, .. }));
        let err = parse_expr::<Rat>("x l]", &std_env()).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { pos: 2, .. }));
    }

    #[test]
    fn generator_powers() {
        let p: Poly = parse_expr("y[l]^2", &std_env()).unwrap();
        let y = Poly::generator(Y, lambda());
        assert_eq!(p, y.mul(&y));
    }
}
