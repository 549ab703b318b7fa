//! Colour parameters.
//!
//! Generators carry a *colour*: either a declared formal symbol (possibly
//! negated) or an exact rational constant. A session works with a small
//! fixed set of declared symbols; three generic ones (`l`, `m`, `n`) cover
//! every identity the kernel checks.

use std::fmt;

use crate::scalar::Scalar;

/// A colour attached to a generator: a rational constant or `±symbol`.
///
/// The derived order (constants first, by value; then symbols by name,
/// positive before negated) is the total order used by rule guards and by
/// the termination measure. It is syntactic, not semantic: any fixed total
/// order works, since every relation family holds for all colour pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColourSymbol<R> {
    /// An exact constant colour, e.g. `0` in the colourless limit.
    Const(R),
    /// A declared colour symbol, negated when `neg` is set.
    Sym { name: String, neg: bool },
}

impl<R: Scalar> ColourSymbol<R> {
    pub fn sym(name: &str) -> Self {
        ColourSymbol::Sym { name: name.to_string(), neg: false }
    }

    pub fn constant(v: R) -> Self {
        ColourSymbol::Const(v)
    }

    pub fn zero() -> Self {
        ColourSymbol::Const(R::zero())
    }

    /// The additively inverted colour (`l` ↦ `-l`, `c` ↦ `-c`).
    pub fn negate(&self) -> Self {
        match self {
            ColourSymbol::Const(v) => ColourSymbol::Const(-v.clone()),
            ColourSymbol::Sym { name, neg } => {
                ColourSymbol::Sym { name: name.clone(), neg: !neg }
            }
        }
    }

    pub fn is_symbol_named(&self, n: &str) -> bool {
        matches!(self, ColourSymbol::Sym { name, .. } if name == n)
    }

    /// Exchange the two symbol names wherever they occur, keeping signs.
    pub fn swap_names(&self, s1: &str, s2: &str) -> Self {
        match self {
            ColourSymbol::Sym { name, neg } if name == s1 => {
                ColourSymbol::Sym { name: s2.to_string(), neg: *neg }
            }
            ColourSymbol::Sym { name, neg } if name == s2 => {
                ColourSymbol::Sym { name: s1.to_string(), neg: *neg }
            }
            other => other.clone(),
        }
    }
}

/// First generic colour symbol, rendered `l`.
pub fn lambda<R: Scalar>() -> ColourSymbol<R> {
    ColourSymbol::sym("l")
}

/// Second generic colour symbol, rendered `m`.
pub fn mu<R: Scalar>() -> ColourSymbol<R> {
    ColourSymbol::sym("m")
}

/// Third generic colour symbol, rendered `n`.
pub fn nu<R: Scalar>() -> ColourSymbol<R> {
    ColourSymbol::sym("n")
}

impl<R: fmt::Display> fmt::Display for ColourSymbol<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColourSymbol::Const(v) => write!(f, "{v}"),
            ColourSymbol::Sym { name, neg: false } => write!(f, "{name}"),
            ColourSymbol::Sym { name, neg: true } => write!(f, "-{name}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn ordering_puts_constants_first_then_symbols_by_name() {
        let c0: ColourSymbol<Rat> = ColourSymbol::zero();
        let c1 = ColourSymbol::constant(Rat::int(1));
        let l = lambda::<Rat>();
        let neg_l = l.negate();
        let m = mu::<Rat>();
        assert!(c0 < c1);
        assert!(c1 < l);
        assert!(l < neg_l);
        assert!(neg_l < m);
    }

    #[test]
    fn negation_is_an_involution() {
        let l = lambda::<Rat>();
        assert_eq!(l.negate().negate(), l);
        let c = ColourSymbol::constant(Rat::rat(1, 2));
        assert_eq!(c.negate().negate(), c);
    }
}
