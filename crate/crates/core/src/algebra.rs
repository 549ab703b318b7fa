//! Generators, words and noncommutative polynomials.
//!
//! One alphabet holds all sectors: the quantum-matrix entries `a..d`, the
//! plane coordinates `x, y`, the Grassmann differentials `xi, eta` and the
//! derivatives `dx, dy`. Kind order `a < b < c < d < x < y < xi < eta <
//! dx < dy` is the normal-ordering target: coordinates left, forms middle,
//! derivatives right.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{CoeffError, CoeffPoly};
use crate::colour::ColourSymbol;
use crate::scalar::Scalar;

/// Which letter of the alphabet a generator is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    A,
    B,
    C,
    D,
    X,
    Y,
    Xi,
    Eta,
    Dx,
    Dy,
}

pub const ALL_KINDS: [GenKind; 10] = [
    GenKind::A,
    GenKind::B,
    GenKind::C,
    GenKind::D,
    GenKind::X,
    GenKind::Y,
    GenKind::Xi,
    GenKind::Eta,
    GenKind::Dx,
    GenKind::Dy,
];

impl GenKind {
    /// Grassmann parity: the differentials are odd, everything else even.
    pub fn is_odd(self) -> bool {
        matches!(self, GenKind::Xi | GenKind::Eta)
    }

    pub fn is_frt(self) -> bool {
        matches!(self, GenKind::A | GenKind::B | GenKind::C | GenKind::D)
    }

    pub fn is_coordinate(self) -> bool {
        matches!(self, GenKind::X | GenKind::Y)
    }

    pub fn is_form(self) -> bool {
        matches!(self, GenKind::Xi | GenKind::Eta)
    }

    pub fn is_derivative(self) -> bool {
        matches!(self, GenKind::Dx | GenKind::Dy)
    }

    pub fn name(self) -> &'static str {
        match self {
            GenKind::A => "a",
            GenKind::B => "b",
            GenKind::C => "c",
            GenKind::D => "d",
            GenKind::X => "x",
            GenKind::Y => "y",
            GenKind::Xi => "xi",
            GenKind::Eta => "eta",
            GenKind::Dx => "dx",
            GenKind::Dy => "dy",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        ALL_KINDS.iter().copied().find(|k| k.name() == s)
    }
}

/// A colour-tagged generator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Generator<R> {
    pub kind: GenKind,
    pub colour: ColourSymbol<R>,
}

impl<R: Scalar> Generator<R> {
    pub fn new(kind: GenKind, colour: ColourSymbol<R>) -> Self {
        Generator { kind, colour }
    }
}

impl<R: Scalar> fmt::Display for Generator<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.kind.name(), self.colour)
    }
}

/// A word in the generators; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word<R>(pub Vec<Generator<R>>);

impl<R: Scalar> Word<R> {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(g: Generator<R>) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }

    pub fn contains_kind(&self, pred: impl Fn(GenKind) -> bool) -> bool {
        self.0.iter().any(|g| pred(g.kind))
    }
}

/// Degree first, then letters; used for canonical term order and as part of
/// the termination measure.
impl<R: Scalar> Ord for Word<R> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl<R: Scalar> PartialOrd for Word<R> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<R: Scalar> fmt::Display for Word<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A noncommutative polynomial: a finite sum `coefficient · word`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NcPoly<R> {
    terms: BTreeMap<Word<R>, CoeffPoly<R>>,
}

impl<R: Scalar> NcPoly<R> {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_word(Word::empty())
    }

    pub fn from_word(w: Word<R>) -> Self {
        Self::from_term(w, CoeffPoly::one())
    }

    pub fn from_term(w: Word<R>, c: CoeffPoly<R>) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn generator(kind: GenKind, colour: ColourSymbol<R>) -> Self {
        Self::from_word(Word::single(Generator::new(kind, colour)))
    }

    pub fn scalar(c: CoeffPoly<R>) -> Self {
        Self::from_term(Word::empty(), c)
    }

    pub fn add_term(&mut self, w: Word<R>, c: CoeffPoly<R>) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot = slot.add(&c);
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word<R>, &CoeffPoly<R>)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word<R>) -> CoeffPoly<R> {
        self.terms.get(w).cloned().unwrap_or_else(CoeffPoly::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &CoeffPoly<R>) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (w, k) in &self.terms {
            out.add_term(w.clone(), k.mul(c));
        }
        out
    }

    /// Bilinear concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca.mul(cb));
            }
        }
        out
    }

    /// Exchange two declared colour symbols everywhere: in generator tags
    /// and inside coefficient exponents.
    pub fn colour_swap(&self, s1: &str, s2: &str) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let w2 = Word(
                w.0.iter()
                    .map(|g| Generator::new(g.kind, g.colour.swap_names(s1, s2)))
                    .collect(),
            );
            out.add_term(w2, c.swap_symbols(s1, s2));
        }
        out
    }

    /// Substitute rational values for every colour symbol occurring in the
    /// polynomial, in generator tags and coefficients alike.
    pub fn subst_colours(&self, binding: &BTreeMap<String, R>) -> Result<Self, CoeffError> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut letters = Vec::with_capacity(w.len());
            for g in &w.0 {
                let colour = match &g.colour {
                    ColourSymbol::Const(v) => ColourSymbol::Const(v.clone()),
                    ColourSymbol::Sym { name, neg } => {
                        let v = binding
                            .get(name)
                            .ok_or_else(|| CoeffError::UnboundSymbol(name.clone()))?;
                        ColourSymbol::Const(if *neg { -v.clone() } else { v.clone() })
                    }
                };
                letters.push(Generator::new(g.kind, colour));
            }
            out.add_term(Word(letters), c.subst_colours(binding)?);
        }
        Ok(out)
    }

    /// Set every colour to zero.
    pub fn eval_colourless(&self) -> Self {
        let mut binding = BTreeMap::new();
        for name in self.symbol_names() {
            binding.insert(name, R::zero());
        }
        self.subst_colours(&binding).expect("binding covers all symbols")
    }

    pub fn symbol_names(&self) -> Vec<String> {
        let mut names: Vec<String> = Vec::new();
        for (w, c) in &self.terms {
            for g in &w.0 {
                if let ColourSymbol::Sym { name, .. } = &g.colour {
                    names.push(name.clone());
                }
            }
            names.extend(c.symbol_names());
        }
        names.sort();
        names.dedup();
        names
    }

    /// Every colour tag occurring on a generator, deduplicated.
    pub fn generator_colours(&self) -> Vec<ColourSymbol<R>> {
        let mut cs: Vec<ColourSymbol<R>> = Vec::new();
        for (w, _) in &self.terms {
            for g in &w.0 {
                if !cs.contains(&g.colour) {
                    cs.push(g.colour.clone());
                }
            }
        }
        cs.sort();
        cs
    }
}

impl<R: Scalar> fmt::Display for NcPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let coeff = if c.is_one() && !w.is_empty() {
                String::new()
            } else if c.neg().is_one() && !w.is_empty() {
                "-".to_string()
            } else if c.terms().len() == 1 {
                format!("{c}")
            } else {
                format!("({c})")
            };
            let piece = match (coeff.as_str(), w.is_empty()) {
                ("", _) => format!("{w}"),
                ("-", _) => format!("-{w}"),
                (_, true) => coeff,
                (_, false) => format!("{coeff}*{w}"),
            };
            if i == 0 {
                s.push_str(&piece);
            } else if let Some(stripped) = piece.strip_prefix('-') {
                s.push_str(&format!(" - {stripped}"));
            } else {
                s.push_str(&format!(" + {piece}"));
            }
        }
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colour::{lambda, mu};
    use crate::Rat;

    type P = NcPoly<Rat>;

    fn gen(kind: GenKind, c: ColourSymbol<Rat>) -> P {
        P::generator(kind, c)
    }

    #[test]
    fn concatenation_product() {
        let x = gen(GenKind::X, lambda());
        let y = gen(GenKind::Y, mu());
        let xy = x.mul(&y);
        assert_eq!(xy.num_terms(), 1);
        let (w, c) = xy.terms().next().unwrap();
        assert_eq!(w.len(), 2);
        assert!(c.is_one());
    }

    #[test]
    fn distributivity_before_normalization() {
        let x = gen(GenKind::X, lambda());
        let y = gen(GenKind::Y, lambda());
        let p = x.add(&y).mul(&x.sub(&y));
        // x·x - x·y + y·x - y·y, four distinct words
        assert_eq!(p.num_terms(), 4);
    }

    #[test]
    fn identity_word_is_neutral() {
        let x = gen(GenKind::X, lambda());
        assert_eq!(P::one().mul(&x), x);
        assert_eq!(x.mul(&P::one()), x);
    }

    #[test]
    fn colour_swap_is_an_involution_and_homomorphism() {
        let p = gen(GenKind::X, lambda())
            .mul(&gen(GenKind::Y, mu()))
            .scale(&CoeffPoly::q_pow(crate::coeff::ExponentForm::symbol("l")));
        assert_eq!(p.colour_swap("l", "m").colour_swap("l", "m"), p);
        let r = gen(GenKind::Y, mu()).mul(&gen(GenKind::X, lambda()));
        assert_eq!(
            p.mul(&r).colour_swap("l", "m"),
            p.colour_swap("l", "m").mul(&r.colour_swap("l", "m"))
        );
    }

    #[test]
    fn colourless_evaluation_merges_generators() {
        // x[l]·y[m] - q^(1-l-m)·y[m]·x[l]  ->  x·y - q·y·x at colour 0
        let e = crate::coeff::ExponentForm::int(1)
            .plus_symbol("l", Rat::int(-1))
            .plus_symbol("m", Rat::int(-1));
        let p = gen(GenKind::X, lambda())
            .mul(&gen(GenKind::Y, mu()))
            .sub(&gen(GenKind::Y, mu()).mul(&gen(GenKind::X, lambda())).scale(&CoeffPoly::q_pow(e)));
        let v = p.eval_colourless();
        let x0 = gen(GenKind::X, ColourSymbol::zero());
        let y0 = gen(GenKind::Y, ColourSymbol::zero());
        let expect = x0.mul(&y0).sub(&y0.mul(&x0).scale(&CoeffPoly::q_int(1)));
        assert_eq!(v, expect);
    }

    #[test]
    fn display_round_shape() {
        let p = gen(GenKind::Xi, lambda()).mul(&gen(GenKind::Xi, mu()));
        assert_eq!(p.to_string(), "xi[l]*xi[m]");
    }
}
