//! Oriented rewrite rules and the normalization engine.
//!
//! Every commutation relation is a *rule family*: a schematic rule over two
//! colour placeholders, instantiated on demand for the concrete colours of
//! an adjacent generator pair. Orientation sorts kinds ascending
//! (coordinates left, forms middle, derivatives right) and, within the
//! colour-exchange families, sorts colours ascending.
//!
//! # Termination
//!
//! Words are measured by `(length, kind sequence, colour sequence)` compared
//! lexicographically, with kinds in alphabet order and colours in the
//! syntactic [`ColourSymbol`] order. Every rule strictly decreases this
//! measure: a kind reorder lowers the kind sequence at the redex (its extra
//! words start with a strictly smaller kind), a colour swap fires only when
//! the guard holds and lowers the colour sequence, and the unit word from a
//! derivative pairing is shorter. The engine asserts the decrease on every
//! applied step in debug builds.
//!
//! The engine performs no completion. Unresolved overlaps are data returned
//! by [`overlap_report`], never silently patched; a missing rule for an
//! adjacent pair is the [`RewriteError::NoRuleForPair`] error, never an
//! implicit commutation.

mod builtin;
mod manifest;
mod overlap;

pub use builtin::{families_for as builtin_families_for, Sector, RULES_VERSION};
pub use manifest::{families_from_json, families_to_json, ManifestError};
pub use overlap::{overlap_report, Overlap};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{GenKind, Generator, NcPoly, Word};
use crate::coeff::CoeffPoly;
use crate::colour::ColourSymbol;
use crate::scalar::Scalar;

/// Reserved placeholder names for the two colour slots of a rule family.
pub const SLOT_1: &str = "c1";
pub const SLOT_2: &str = "c2";

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RewriteError {
    #[error("no rule orders the adjacent pair {left} {right}; the relation is not part of the algebra")]
    NoRuleForPair { left: String, right: String },
    #[error("generator kind `{0}` is not active in this sector")]
    InactiveKind(String),
}

/// When a family applies to an adjacent pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Guard {
    /// Applies to every colour pair.
    Always,
    /// Applies when the first colour is strictly greater (colour sort).
    FirstColourGreater,
}

/// Colour slot reference inside an RHS word template.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColourRef {
    First,
    Second,
}

/// One RHS summand: a coefficient over the slot symbols and a short word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhsTerm<R> {
    pub coeff: CoeffPoly<R>,
    pub word: Vec<(GenKind, ColourRef)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleAction<R> {
    /// Replace the pair by the instantiated template.
    Rewrite(Vec<RhsTerm<R>>),
    /// Adjacency of these kinds is undefined; normalization must fail.
    Reject,
}

/// A colour-schematic rewrite rule for one ordered pair of kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleFamily<R> {
    pub name: String,
    pub lhs: (GenKind, GenKind),
    pub guard: Guard,
    pub action: RuleAction<R>,
}

impl<R: Scalar> RuleFamily<R> {
    pub fn applies(&self, g1: &Generator<R>, g2: &Generator<R>) -> bool {
        if (g1.kind, g2.kind) != self.lhs {
            return false;
        }
        match self.guard {
            Guard::Always => true,
            Guard::FirstColourGreater => g1.colour > g2.colour,
        }
    }

    /// The RHS at concrete colours. `None` for reject families.
    pub fn instantiate(&self, c1: &ColourSymbol<R>, c2: &ColourSymbol<R>) -> Option<NcPoly<R>> {
        let RuleAction::Rewrite(terms) = &self.action else {
            return None;
        };
        let mut out = NcPoly::zero();
        for t in terms {
            let coeff = t.coeff.subst_symbol(SLOT_1, c1).subst_symbol(SLOT_2, c2);
            let word = Word(
                t.word
                    .iter()
                    .map(|(k, r)| {
                        let colour = match r {
                            ColourRef::First => c1.clone(),
                            ColourRef::Second => c2.clone(),
                        };
                        Generator::new(*k, colour)
                    })
                    .collect(),
            );
            out.add_term(word, coeff);
        }
        Some(out)
    }

    /// The relation polynomial `lhs - rhs` at concrete colours (the guard is
    /// ignored: the underlying relation holds for every colour pair).
    pub fn relation_poly(&self, c1: &ColourSymbol<R>, c2: &ColourSymbol<R>) -> Option<NcPoly<R>> {
        let rhs = self.instantiate(c1, c2)?;
        let lhs = NcPoly::from_word(Word(vec![
            Generator::new(self.lhs.0, c1.clone()),
            Generator::new(self.lhs.1, c2.clone()),
        ]));
        Some(lhs.sub(&rhs))
    }
}

/// An immutable set of rule families for one sector of the alphabet.
#[derive(Debug, Clone)]
pub struct RewriteSystem<R> {
    sector: Sector,
    families: Vec<RuleFamily<R>>,
    by_pair: BTreeMap<(GenKind, GenKind), Vec<usize>>,
}

impl<R: Scalar> RewriteSystem<R> {
    pub fn new(sector: Sector) -> Self {
        Self::with_families(sector, builtin::families_for(sector))
    }

    /// A system over the given sector's kinds but custom families; used by
    /// the declarative rule-file loader and by negative controls.
    pub fn with_families(sector: Sector, families: Vec<RuleFamily<R>>) -> Self {
        let mut by_pair: BTreeMap<(GenKind, GenKind), Vec<usize>> = BTreeMap::new();
        for (i, f) in families.iter().enumerate() {
            by_pair.entry(f.lhs).or_default().push(i);
        }
        RewriteSystem { sector, families, by_pair }
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn families(&self) -> &[RuleFamily<R>] {
        &self.families
    }

    pub fn family(&self, name: &str) -> Option<&RuleFamily<R>> {
        self.families.iter().find(|f| f.name == name)
    }

    fn check_active(&self, p: &NcPoly<R>) -> Result<(), RewriteError> {
        for (w, _) in p.terms() {
            for g in &w.0 {
                if !self.sector.is_active(g.kind) {
                    return Err(RewriteError::InactiveKind(g.kind.name().to_string()));
                }
            }
        }
        Ok(())
    }

    /// The first family applicable to the adjacent pair, or a reject error.
    fn rule_for(
        &self,
        g1: &Generator<R>,
        g2: &Generator<R>,
    ) -> Result<Option<&RuleFamily<R>>, RewriteError> {
        if let Some(idxs) = self.by_pair.get(&(g1.kind, g2.kind)) {
            for &i in idxs {
                let f = &self.families[i];
                if f.applies(g1, g2) {
                    if matches!(f.action, RuleAction::Reject) {
                        return Err(RewriteError::NoRuleForPair {
                            left: g1.to_string(),
                            right: g2.to_string(),
                        });
                    }
                    return Ok(Some(f));
                }
            }
        }
        Ok(None)
    }

    /// True if some rewrite family fires on the pair.
    pub fn is_redex(&self, g1: &Generator<R>, g2: &Generator<R>) -> bool {
        matches!(self.rule_for(g1, g2), Ok(Some(_)))
    }

    /// Rewrite to normal form: leftmost-innermost redex, first matching
    /// family. The result is equal to the input in the quotient algebra and
    /// no rule applies to any word of it.
    pub fn normalize(&self, p: &NcPoly<R>) -> Result<NcPoly<R>, RewriteError> {
        self.check_active(p)?;
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            out = out.add(&self.normalize_word(w)?.scale(c));
        }
        Ok(out)
    }

    pub fn reduces_to_zero(&self, p: &NcPoly<R>) -> Result<bool, RewriteError> {
        Ok(self.normalize(p)?.is_zero())
    }

    fn normalize_word(&self, w: &Word<R>) -> Result<NcPoly<R>, RewriteError> {
        for i in 0..w.len().saturating_sub(1) {
            let (g1, g2) = (&w.0[i], &w.0[i + 1]);
            if let Some(family) = self.rule_for(g1, g2)? {
                let replaced = self.apply_at(w, i, family);
                let mut out = NcPoly::zero();
                for (nw, nc) in replaced.terms() {
                    out = out.add(&self.normalize_word(nw)?.scale(nc));
                }
                return Ok(out);
            }
        }
        Ok(NcPoly::from_word(w.clone()))
    }

    /// Splice the family's RHS over the redex at position `i` (no recursive
    /// normalization).
    pub(crate) fn apply_at(&self, w: &Word<R>, i: usize, family: &RuleFamily<R>) -> NcPoly<R> {
        let (g1, g2) = (&w.0[i], &w.0[i + 1]);
        let rhs = family
            .instantiate(&g1.colour, &g2.colour)
            .expect("reject families never reach apply_at");
        let mut out = NcPoly::zero();
        for (rw, rc) in rhs.terms() {
            let mut letters = Vec::with_capacity(w.len() + rw.len() - 2);
            letters.extend(w.0[..i].iter().cloned());
            letters.extend(rw.0.iter().cloned());
            letters.extend(w.0[i + 2..].iter().cloned());
            let nw = Word(letters);
            debug_assert!(
                measure_lt(&nw, w),
                "rewrite step must decrease the word measure: {} -> {} (rule {})",
                w,
                nw,
                family.name
            );
            out.add_term(nw, rc.clone());
        }
        out
    }
}

/// Strict decrease in the termination measure
/// `(length, kind sequence, colour sequence)`.
pub(crate) fn measure_lt<R: Scalar>(new: &Word<R>, old: &Word<R>) -> bool {
    use std::cmp::Ordering::*;
    match new.len().cmp(&old.len()) {
        Less => return true,
        Greater => return false,
        Equal => {}
    }
    let nk: Vec<GenKind> = new.0.iter().map(|g| g.kind).collect();
    let ok: Vec<GenKind> = old.0.iter().map(|g| g.kind).collect();
    match nk.cmp(&ok) {
        Less => return true,
        Greater => return false,
        Equal => {}
    }
    let nc: Vec<&ColourSymbol<R>> = new.0.iter().map(|g| &g.colour).collect();
    let oc: Vec<&ColourSymbol<R>> = old.0.iter().map(|g| &g.colour).collect();
    nc < oc
}

impl fmt::Display for Guard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Guard::Always => write!(f, "always"),
            Guard::FirstColourGreater => write!(f, "first-colour-greater"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GenKind::*;
    use crate::coeff::ExponentForm;
    use crate::colour::{lambda, mu, ColourSymbol};
    use crate::Rat;

    type P = NcPoly<Rat>;
    type C = CoeffPoly<Rat>;

    fn gen(kind: GenKind, c: ColourSymbol<Rat>) -> P {
        P::generator(kind, c)
    }

    fn q_affine(c: i64, syms: &[(&str, i64)]) -> C {
        let mut e = ExponentForm::int(c);
        for (s, k) in syms {
            e = e.plus_symbol(s, Rat::int(*k));
        }
        C::q_pow(e)
    }

    #[test]
    fn plane_reorder_example() {
        // y[m]·x[l] -> q^(l+m-1)·x[l]·y[m]
        let sys = RewriteSystem::<Rat>::new(Sector::Plane);
        let p = gen(Y, mu()).mul(&gen(X, lambda()));
        let nf = sys.normalize(&p).unwrap();
        let expect = gen(X, lambda())
            .mul(&gen(Y, mu()))
            .scale(&q_affine(-1, &[("l", 1), ("m", 1)]));
        assert_eq!(nf, expect);
    }

    #[test]
    fn frt_commutator_example() {
        // d[m]·a[l] -> a[l]·d[m] - (q - q^-1)·q^(l+m)·b[l]·c[m]
        let sys = RewriteSystem::<Rat>::new(Sector::Frt);
        let p = gen(D, mu()).mul(&gen(A, lambda()));
        let nf = sys.normalize(&p).unwrap();
        let comm = C::q_int(1).sub(&C::q_int(-1)).mul(&q_affine(0, &[("l", 1), ("m", 1)]));
        // b[m]·c[l] colour-sorts to b[l]·c[m]
        let expect = gen(A, lambda())
            .mul(&gen(D, mu()))
            .sub(&gen(B, lambda()).mul(&gen(C, mu())).scale(&comm));
        assert_eq!(nf, expect);
    }

    #[test]
    fn grassmann_square_vanishes() {
        let sys = RewriteSystem::<Rat>::new(Sector::Hyperplane);
        let p = gen(Xi, lambda()).mul(&gen(Xi, mu()));
        assert!(sys.reduces_to_zero(&p).unwrap());
        let p = gen(Eta, mu()).mul(&gen(Eta, lambda()));
        assert!(sys.reduces_to_zero(&p).unwrap());
    }

    #[test]
    fn derivative_pairing_example() {
        // dx[l]·x[m] -> 1 + q^(2+l-m)·x[m]·dx[l] + (q^2-1)·y[m]·dy[l]
        let sys = RewriteSystem::<Rat>::new(Sector::Calculus);
        let p = gen(Dx, lambda()).mul(&gen(X, mu()));
        let nf = sys.normalize(&p).unwrap();
        let expect = P::one()
            .add(&gen(X, mu()).mul(&gen(Dx, lambda())).scale(&q_affine(2, &[("l", 1), ("m", -1)])))
            .add(&gen(Y, mu()).mul(&gen(Dy, lambda())).scale(&C::q_int(2).sub(&C::one())));
        assert_eq!(nf, expect);
    }

    #[test]
    fn soundness_every_family_relation_reduces_to_zero() {
        for sector in [Sector::Frt, Sector::Plane, Sector::Hyperplane, Sector::Calculus] {
            let sys = RewriteSystem::<Rat>::new(sector);
            for f in sys.families() {
                if let Some(rel) = f.relation_poly(&lambda(), &mu()) {
                    assert!(
                        sys.reduces_to_zero(&rel).unwrap(),
                        "family {} is not sound",
                        f.name
                    );
                }
                if let Some(rel) = f.relation_poly(&mu(), &lambda()) {
                    assert!(
                        sys.reduces_to_zero(&rel).unwrap(),
                        "family {} (swapped colours) is not sound",
                        f.name
                    );
                }
            }
        }
    }

    #[test]
    fn plane_relation_membership() {
        let sys = RewriteSystem::<Rat>::new(Sector::Plane);
        // x[l]y[m] - x[m]y[l] is a relation
        let p = gen(X, lambda())
            .mul(&gen(Y, mu()))
            .sub(&gen(X, mu()).mul(&gen(Y, lambda())));
        assert!(sys.reduces_to_zero(&p).unwrap());
        // x[l]y[m] - y[m]x[l] is not (noncommutative for generic q)
        let p = gen(X, lambda())
            .mul(&gen(Y, mu()))
            .sub(&gen(Y, mu()).mul(&gen(X, lambda())));
        assert!(!sys.reduces_to_zero(&p).unwrap());
        // a[l]a[m] - a[m]a[l] is a relation
        let sys = RewriteSystem::<Rat>::new(Sector::Frt);
        let p = gen(A, lambda())
            .mul(&gen(A, mu()))
            .sub(&gen(A, mu()).mul(&gen(A, lambda())));
        assert!(sys.reduces_to_zero(&p).unwrap());
    }

    #[test]
    fn frt_and_derivatives_do_not_mix() {
        let sys = RewriteSystem::<Rat>::new(Sector::Everything);
        let p = gen(Dx, lambda()).mul(&gen(A, mu()));
        assert!(matches!(sys.normalize(&p), Err(RewriteError::NoRuleForPair { .. })));
        let p = gen(A, mu()).mul(&gen(Dx, lambda()));
        assert!(matches!(sys.normalize(&p), Err(RewriteError::NoRuleForPair { .. })));
    }

    #[test]
    fn frt_commutes_with_coordinates() {
        let sys = RewriteSystem::<Rat>::new(Sector::Everything);
        let p = gen(X, lambda()).mul(&gen(A, mu()));
        let nf = sys.normalize(&p).unwrap();
        assert_eq!(nf, gen(A, mu()).mul(&gen(X, lambda())));
    }

    #[test]
    fn inactive_kind_is_rejected() {
        let sys = RewriteSystem::<Rat>::new(Sector::Plane);
        let p = gen(A, lambda());
        assert!(matches!(sys.normalize(&p), Err(RewriteError::InactiveKind(_))));
    }

    #[test]
    fn normalization_is_idempotent_on_samples() {
        use crate::algebra::Generator;
        let sys = RewriteSystem::<Rat>::new(Sector::Calculus);
        let kinds = [X, Y, Xi, Eta, Dx, Dy];
        let cols = [lambda::<Rat>(), mu()];
        // all words of length 3 over the calculus alphabet with two colours
        for k1 in kinds {
            for k2 in kinds {
                for k3 in kinds {
                    for c1 in &cols {
                        for c2 in &cols {
                            for c3 in &cols {
                                let w = Word(vec![
                                    Generator::new(k1, c1.clone()),
                                    Generator::new(k2, c2.clone()),
                                    Generator::new(k3, c3.clone()),
                                ]);
                                let p = P::from_word(w);
                                let nf = sys.normalize(&p).unwrap();
                                assert_eq!(sys.normalize(&nf).unwrap(), nf);
                            }
                        }
                    }
                }
            }
        }
    }
}
