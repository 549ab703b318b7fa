//! Coalgebra structure: coproduct, counit, quantum determinant, antipode
//! (at the adjugate level) and coaction invariance of the plane and
//! hyperplane relations.
//!
//! Tensor-algebra elements keep two legs of words; legs commute across the
//! tensor sign (no cross-leg Koszul sign: the coacting leg is even) and are
//! normalized leg-wise, each with its own sector's rules.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{GenKind, Generator, NcPoly, Word};
use crate::coeff::CoeffPoly;
use crate::colour::ColourSymbol;
use crate::matrices::NcMatrix;
use crate::rewrite::{RewriteError, RewriteSystem, Sector};
use crate::scalar::Scalar;

/// An element of a two-leg tensor algebra with leg-wise multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorPoly<R> {
    terms: BTreeMap<(Word<R>, Word<R>), CoeffPoly<R>>,
}

impl<R: Scalar> TensorPoly<R> {
    pub fn zero() -> Self {
        TensorPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_term(Word::empty(), Word::empty(), CoeffPoly::one())
    }

    pub fn from_term(left: Word<R>, right: Word<R>, c: CoeffPoly<R>) -> Self {
        let mut t = Self::zero();
        t.add_term(left, right, c);
        t
    }

    /// The pure tensor `left ⊗ right`, bilinear in both arguments.
    pub fn tensor(left: &NcPoly<R>, right: &NcPoly<R>) -> Self {
        let mut out = Self::zero();
        for (wl, cl) in left.terms() {
            for (wr, cr) in right.terms() {
                out.add_term(wl.clone(), wr.clone(), cl.mul(cr));
            }
        }
        out
    }

    fn add_term(&mut self, l: Word<R>, r: Word<R>, c: CoeffPoly<R>) {
        if c.is_zero() {
            return;
        }
        let key = (l, r);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot = slot.add(&c);
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word<R>, Word<R>), &CoeffPoly<R>)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        TensorPoly { terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &CoeffPoly<R>) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for ((l, r), k) in &self.terms {
            out.add_term(l.clone(), r.clone(), k.mul(c));
        }
        out
    }

    /// Leg-wise product: `(u1 ⊗ u2)(v1 ⊗ v2) = u1v1 ⊗ u2v2`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((la, ra), ca) in &self.terms {
            for ((lb, rb), cb) in &other.terms {
                out.add_term(la.concat(lb), ra.concat(rb), ca.mul(cb));
            }
        }
        out
    }

    /// Normalize each leg with its own rewrite system.
    pub fn normalize(
        &self,
        left_sys: &RewriteSystem<R>,
        right_sys: &RewriteSystem<R>,
    ) -> Result<Self, RewriteError> {
        let mut out = Self::zero();
        for ((l, r), c) in &self.terms {
            let nl = left_sys.normalize(&NcPoly::from_word(l.clone()))?;
            let nr = right_sys.normalize(&NcPoly::from_word(r.clone()))?;
            for (wl, cl) in nl.terms() {
                for (wr, cr) in nr.terms() {
                    out.add_term(wl.clone(), wr.clone(), c.mul(cl).mul(cr));
                }
            }
        }
        Ok(out)
    }
}

impl<R: Scalar> fmt::Display for TensorPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let pieces: Vec<String> = self
            .terms
            .iter()
            .map(|((l, r), c)| {
                if c.is_one() {
                    format!("({l}) (x) ({r})")
                } else {
                    format!("({c})*({l}) (x) ({r})")
                }
            })
            .collect();
        write!(f, "{}", pieces.join(" + "))
    }
}

/// Substitute every generator by a tensor image, multiplicatively.
pub fn substitute<R: Scalar>(
    p: &NcPoly<R>,
    image: impl Fn(&Generator<R>) -> TensorPoly<R>,
) -> TensorPoly<R> {
    let mut out = TensorPoly::zero();
    for (w, c) in p.terms() {
        let mut prod = TensorPoly::one();
        for g in &w.0 {
            prod = prod.mul(&image(g));
        }
        out = out.add(&prod.scale(c));
    }
    out
}

/// Substitute every generator by a scalar (the counit images).
pub fn substitute_scalar<R: Scalar>(
    p: &NcPoly<R>,
    image: impl Fn(&Generator<R>) -> CoeffPoly<R>,
) -> CoeffPoly<R> {
    let mut out = CoeffPoly::zero();
    for (w, c) in p.terms() {
        let mut prod = c.clone();
        for g in &w.0 {
            prod = prod.mul(&image(g));
        }
        out = out.add(&prod);
    }
    out
}

// ---------------------------------------------------------------------------
// coproduct and counit
// ---------------------------------------------------------------------------

fn gen_word<R: Scalar>(k: GenKind, c: &ColourSymbol<R>) -> Word<R> {
    Word::single(Generator::new(k, c.clone()))
}

/// The matrix coproduct `Δ(T) = T ⊗̇ T` on one quantum-matrix generator.
pub fn coproduct_image<R: Scalar>(g: &Generator<R>) -> TensorPoly<R> {
    use GenKind::*;
    let c = &g.colour;
    let t = |k1: GenKind, k2: GenKind| {
        TensorPoly::from_term(gen_word(k1, c), gen_word(k2, c), CoeffPoly::one())
    };
    match g.kind {
        A => t(A, A).add(&t(B, C)),
        B => t(A, B).add(&t(B, D)),
        C => t(C, A).add(&t(D, C)),
        D => t(C, B).add(&t(D, D)),
        other => panic!("coproduct is defined on the quantum-matrix sector, not {other:?}"),
    }
}

/// The counit `ε(T) = 1`.
pub fn counit_image<R: Scalar>(g: &Generator<R>) -> CoeffPoly<R> {
    use GenKind::*;
    match g.kind {
        A | D => CoeffPoly::one(),
        B | C => CoeffPoly::zero(),
        other => panic!("counit is defined on the quantum-matrix sector, not {other:?}"),
    }
}

/// Outcome of a family of relation checks, with rendered non-zero residuals.
#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub failures: Vec<(String, String)>,
    pub checked: usize,
}

impl RelationCheck {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn frt_relations<R: Scalar>(
    c1: &ColourSymbol<R>,
    c2: &ColourSymbol<R>,
) -> Vec<(String, NcPoly<R>)> {
    let sys = RewriteSystem::<R>::new(Sector::Frt);
    sys.families()
        .iter()
        .filter_map(|f| f.relation_poly(c1, c2).map(|r| (f.name.clone(), r)))
        .collect()
}

/// Substitute the coproduct into every quantum-matrix relation at the two
/// colours and normalize leg-wise; the coproduct extends to an algebra
/// homomorphism iff every image vanishes.
pub fn coproduct_is_homomorphism<R: Scalar>(
    c1: &ColourSymbol<R>,
    c2: &ColourSymbol<R>,
) -> Result<RelationCheck, RewriteError> {
    let frt = RewriteSystem::<R>::new(Sector::Frt);
    let mut failures = Vec::new();
    let mut checked = 0;
    for (pair_a, pair_b) in [(c1, c2), (c2, c1)] {
        for (name, rel) in frt_relations(pair_a, pair_b) {
            checked += 1;
            let image = substitute(&rel, coproduct_image);
            let nf = image.normalize(&frt, &frt)?;
            if !nf.is_zero() {
                failures.push((name, nf.to_string()));
            }
        }
    }
    Ok(RelationCheck { failures, checked })
}

/// Substitute the counit into every quantum-matrix relation; all images are
/// scalar identities that must vanish.
pub fn counit_check<R: Scalar>(c1: &ColourSymbol<R>, c2: &ColourSymbol<R>) -> RelationCheck {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (pair_a, pair_b) in [(c1, c2), (c2, c1)] {
        for (name, rel) in frt_relations(pair_a, pair_b) {
            checked += 1;
            let v = substitute_scalar(&rel, counit_image);
            if !v.is_zero() {
                failures.push((name, v.to_string()));
            }
        }
    }
    RelationCheck { failures, checked }
}

// ---------------------------------------------------------------------------
// determinant and antipode
// ---------------------------------------------------------------------------

/// The quantum determinant `a d - q^(1-2c)·c b` at one colour, in normal
/// form (`a d - q^(1+2c)·b c` once the letters are ordered).
pub fn determinant<R: Scalar>(colour: &ColourSymbol<R>) -> Result<NcPoly<R>, RewriteError> {
    use GenKind::*;
    let sys = RewriteSystem::<R>::new(Sector::Frt);
    let g = |k: GenKind| NcPoly::generator(k, colour.clone());
    let raw = g(A).mul(&g(D)).sub(&g(C).mul(&g(B)).scale(&CoeffPoly::q_pow(
        crate::coeff::ExponentForm::int(1).plus_colour(colour, R::int(-2)),
    )));
    sys.normalize(&raw)
}

/// The adjugate matrix `(d, -q^(-1+2c)·b; -q^(1-2c)·c, a)`.
pub fn adjugate<R: Scalar>(colour: &ColourSymbol<R>) -> NcMatrix<R> {
    use GenKind::*;
    let g = |k: GenKind| NcPoly::generator(k, colour.clone());
    let qp = |k: i64, a: i64| {
        CoeffPoly::<R>::q_pow(crate::coeff::ExponentForm::int(k).plus_colour(colour, R::int(a)))
    };
    NcMatrix::from_rows(vec![
        vec![g(D), g(B).scale(&qp(-1, 2)).neg()],
        vec![g(C).scale(&qp(1, -2)).neg(), g(A)],
    ])
}

/// Result of the adjugate-level antipode identities.
#[derive(Debug, Clone)]
pub struct AntipodeReport {
    /// Entries of `Adj·T - D·I` that fail to vanish.
    pub left_failures: Vec<(usize, usize, String)>,
    /// Entries of `T·Adj - D·I` that fail to vanish.
    pub right_failures: Vec<(usize, usize, String)>,
}

impl AntipodeReport {
    pub fn left_ok(&self) -> bool {
        self.left_failures.is_empty()
    }

    pub fn right_ok(&self) -> bool {
        self.right_failures.is_empty()
    }

    pub fn ok(&self) -> bool {
        self.left_ok() && self.right_ok()
    }
}

/// Verify `Adj·T = T·Adj = D·I` entrywise after normalization, avoiding any
/// adjoined inverse of the determinant.
pub fn antipode_check<R: Scalar>(colour: &ColourSymbol<R>) -> Result<AntipodeReport, RewriteError> {
    antipode_check_with(colour, &adjugate(colour))
}

/// Same check against a caller-supplied adjugate (negative controls).
pub fn antipode_check_with<R: Scalar>(
    colour: &ColourSymbol<R>,
    adj: &NcMatrix<R>,
) -> Result<AntipodeReport, RewriteError> {
    let sys = RewriteSystem::<R>::new(Sector::Frt);
    let t = crate::matrices::t_matrix(colour);
    let det = determinant(colour)?;
    let mut det_i = NcMatrix::zero(2, 2);
    det_i.set(0, 0, det.clone());
    det_i.set(1, 1, det);

    let mut report = AntipodeReport { left_failures: Vec::new(), right_failures: Vec::new() };
    let left = adj.mul(&t).sub(&det_i);
    let right = t.mul(adj).sub(&det_i);
    for i in 0..2 {
        for j in 0..2 {
            let nf = sys.normalize(left.entry(i, j))?;
            if !nf.is_zero() {
                report.left_failures.push((i, j, nf.to_string()));
            }
            let nf = sys.normalize(right.entry(i, j))?;
            if !nf.is_zero() {
                report.right_failures.push((i, j, nf.to_string()));
            }
        }
    }
    Ok(report)
}

/// Commutators of the determinant with the four generators, normalized and
/// returned as data: the determinant commutes with `a` and `d` but is only
/// q-commuting with `b` and `c` at nonzero colour.
pub fn determinant_commutators<R: Scalar>(
    det_colour: &ColourSymbol<R>,
    gen_colour: &ColourSymbol<R>,
) -> Result<Vec<(String, NcPoly<R>)>, RewriteError> {
    use GenKind::*;
    let sys = RewriteSystem::<R>::new(Sector::Frt);
    let det = determinant(det_colour)?;
    let mut out = Vec::new();
    for k in [A, B, C, D] {
        let g = NcPoly::generator(k, gen_colour.clone());
        let comm = sys.normalize(&det.mul(&g).sub(&g.mul(&det)))?;
        out.push((format!("[det[{det_colour}], {}[{gen_colour}]]", k.name()), comm));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// coactions
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoactionSide {
    Left,
    Right,
}

/// Left coaction on coordinates: `x_c ↦ a_c ⊗ x_c + b_c ⊗ y_c`,
/// `y_c ↦ c_c ⊗ x_c + d_c ⊗ y_c` (left leg quantum matrix, right leg plane).
pub fn left_coaction_image<R: Scalar>(g: &Generator<R>) -> TensorPoly<R> {
    use GenKind::*;
    let c = &g.colour;
    let t = |k1: GenKind, k2: GenKind| {
        TensorPoly::from_term(gen_word(k1, c), gen_word(k2, c), CoeffPoly::one())
    };
    match g.kind {
        X => t(A, X).add(&t(B, Y)),
        Y => t(C, X).add(&t(D, Y)),
        other => panic!("left coaction is defined on coordinates, not {other:?}"),
    }
}

/// Right coaction on the Grassmann generators, pairing colour `c` with the
/// quantum matrix at colour `-c`:
/// `ξ_c ↦ ξ_c ⊗ a_{-c} + η_c ⊗ c_{-c}`, `η_c ↦ ξ_c ⊗ b_{-c} + η_c ⊗ d_{-c}`.
///
/// The same-colour pairing does *not* preserve the hyperplane relations
/// (the residual on `ξ_{c1}ξ_{c2}` is proportional to `1 - q^{2(c1+c2)}`;
/// see the characterization test). Negating the colour of the coacting
/// matrix is the affine colour reassignment that makes every hyperplane
/// relation covariant while keeping the coaction coassociative and counital.
pub fn right_coaction_image<R: Scalar>(g: &Generator<R>) -> TensorPoly<R> {
    use GenKind::*;
    let c = &g.colour;
    let nc = g.colour.negate();
    let t = |k1: GenKind, k2: GenKind| {
        TensorPoly::from_term(gen_word(k1, c), gen_word(k2, &nc), CoeffPoly::one())
    };
    match g.kind {
        Xi => t(Xi, A).add(&t(Eta, C)),
        Eta => t(Xi, B).add(&t(Eta, D)),
        other => panic!("right coaction is defined on Grassmann generators, not {other:?}"),
    }
}

/// The literal same-colour right coaction, exposed for the characterization
/// test that shows it fails to preserve the relations.
pub fn right_coaction_image_same_colour<R: Scalar>(g: &Generator<R>) -> TensorPoly<R> {
    use GenKind::*;
    let c = &g.colour;
    let t = |k1: GenKind, k2: GenKind| {
        TensorPoly::from_term(gen_word(k1, c), gen_word(k2, c), CoeffPoly::one())
    };
    match g.kind {
        Xi => t(Xi, A).add(&t(Eta, C)),
        Eta => t(Xi, B).add(&t(Eta, D)),
        other => panic!("right coaction is defined on Grassmann generators, not {other:?}"),
    }
}

/// Substitute the coaction into every defining relation of the coacted
/// algebra (both colour orders) and normalize leg-wise.
pub fn coaction_invariance<R: Scalar>(
    side: CoactionSide,
    c1: &ColourSymbol<R>,
    c2: &ColourSymbol<R>,
) -> Result<RelationCheck, RewriteError> {
    let frt = RewriteSystem::<R>::new(Sector::Frt);
    let mut failures = Vec::new();
    let mut checked = 0;
    match side {
        CoactionSide::Left => {
            let plane = RewriteSystem::<R>::new(Sector::Plane);
            for (a, b) in [(c1, c2), (c2, c1)] {
                for f in plane.families() {
                    let Some(rel) = f.relation_poly(a, b) else { continue };
                    checked += 1;
                    let nf = substitute(&rel, left_coaction_image).normalize(&frt, &plane)?;
                    if !nf.is_zero() {
                        failures.push((f.name.clone(), nf.to_string()));
                    }
                }
            }
        }
        CoactionSide::Right => {
            let hyper = RewriteSystem::<R>::new(Sector::Hyperplane);
            for (a, b) in [(c1, c2), (c2, c1)] {
                for f in hyper.families() {
                    let Some(rel) = f.relation_poly(a, b) else { continue };
                    checked += 1;
                    let nf = substitute(&rel, right_coaction_image).normalize(&hyper, &frt)?;
                    if !nf.is_zero() {
                        failures.push((f.name.clone(), nf.to_string()));
                    }
                }
            }
        }
    }
    Ok(RelationCheck { failures, checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colour::{lambda, mu, ColourSymbol};
    use crate::Rat;

    #[test]
    fn determinant_normal_form() {
        use crate::algebra::GenKind::*;
        let det = determinant::<Rat>(&lambda()).unwrap();
        // a d - q^(1+2l) b c
        let g = |k| NcPoly::<Rat>::generator(k, lambda());
        let e = crate::coeff::ExponentForm::int(1).plus_symbol("l", Rat::int(2));
        let expect = g(A).mul(&g(D)).sub(&g(B).mul(&g(C)).scale(&CoeffPoly::q_pow(e)));
        assert_eq!(det, expect);

        // the two natural orderings agree: ad - q^(1-2l)cb = da - q^(-1+2l)bc
        let sys = RewriteSystem::<Rat>::new(Sector::Frt);
        let e2 = crate::coeff::ExponentForm::int(-1).plus_symbol("l", Rat::int(2));
        let other = g(D).mul(&g(A)).sub(&g(B).mul(&g(C)).scale(&CoeffPoly::q_pow(e2)));
        assert!(sys.reduces_to_zero(&det.sub(&sys.normalize(&other).unwrap())).unwrap());
    }

    #[test]
    fn determinant_at_colour_zero() {
        use crate::algebra::GenKind::*;
        let det = determinant::<Rat>(&ColourSymbol::zero()).unwrap();
        let g = |k| NcPoly::<Rat>::generator(k, ColourSymbol::zero());
        let expect = g(A).mul(&g(D)).sub(&g(B).mul(&g(C)).scale(&CoeffPoly::q_int(1)));
        assert_eq!(det, expect);
    }

    #[test]
    fn antipode_left_identity_holds_generically() {
        let report = antipode_check::<Rat>(&lambda()).unwrap();
        assert!(report.left_ok(), "Adj·T = D·I fails: {:?}", report.left_failures);
    }

    #[test]
    fn antipode_both_identities_hold_at_colour_zero() {
        let report = antipode_check::<Rat>(&ColourSymbol::zero()).unwrap();
        assert!(report.ok(), "{report:?}");
    }

    #[test]
    fn antipode_right_identity_fails_generically() {
        // T·Adj picks up (1 - q^(4l))-type twists at nonzero colour: the
        // displayed antipode is a one-sided inverse at the adjugate level.
        let report = antipode_check::<Rat>(&lambda()).unwrap();
        assert!(!report.right_ok());
    }

    #[test]
    fn corrupted_adjugate_is_detected() {
        let mut adj = adjugate::<Rat>(&ColourSymbol::zero());
        // flip the sign of the (0,1) entry
        adj.set(0, 1, adj.entry(0, 1).neg());
        let report = antipode_check_with(&ColourSymbol::zero(), &adj).unwrap();
        assert!(!report.ok());
    }

    #[test]
    fn coproduct_is_a_homomorphism() {
        let check = coproduct_is_homomorphism::<Rat>(&lambda(), &mu()).unwrap();
        assert!(check.ok(), "failures: {:?}", check.failures);
        assert_eq!(check.checked, 32);
    }

    #[test]
    fn perturbed_coproduct_fails() {
        use crate::algebra::GenKind::*;
        let frt = RewriteSystem::<Rat>::new(Sector::Frt);
        // drop the b ⊗ c term from Δ(a)
        let broken = |g: &Generator<Rat>| -> TensorPoly<Rat> {
            let c = &g.colour;
            let t = |k1: GenKind, k2: GenKind| {
                TensorPoly::from_term(gen_word(k1, c), gen_word(k2, c), CoeffPoly::one())
            };
            match g.kind {
                A => t(A, A),
                B => t(A, B).add(&t(B, D)),
                C => t(C, A).add(&t(D, C)),
                D => t(C, B).add(&t(D, D)),
                _ => unreachable!(),
            }
        };
        let mut any_failure = false;
        for (_, rel) in frt_relations::<Rat>(&lambda(), &mu()) {
            let nf = substitute(&rel, broken).normalize(&frt, &frt).unwrap();
            any_failure |= !nf.is_zero();
        }
        assert!(any_failure);
    }

    #[test]
    fn counit_satisfies_every_relation() {
        let check = counit_check::<Rat>(&lambda(), &mu());
        assert!(check.ok(), "failures: {:?}", check.failures);
    }

    #[test]
    fn left_coaction_preserves_plane_relations() {
        let check = coaction_invariance::<Rat>(CoactionSide::Left, &lambda(), &mu()).unwrap();
        assert!(check.ok(), "failures: {:?}", check.failures);
        assert_eq!(check.checked, 8);
    }

    #[test]
    fn right_coaction_preserves_hyperplane_relations() {
        let check = coaction_invariance::<Rat>(CoactionSide::Right, &lambda(), &mu()).unwrap();
        assert!(check.ok(), "failures: {:?}", check.failures);
    }

    #[test]
    fn coactions_at_colour_zero_are_the_classical_ones() {
        let z = ColourSymbol::zero();
        assert!(coaction_invariance::<Rat>(CoactionSide::Left, &z, &z).unwrap().ok());
        assert!(coaction_invariance::<Rat>(CoactionSide::Right, &z, &z).unwrap().ok());
    }

    #[test]
    fn same_colour_right_coaction_fails_with_characteristic_residual() {
        use crate::algebra::GenKind::*;
        let hyper = RewriteSystem::<Rat>::new(Sector::Hyperplane);
        let frt = RewriteSystem::<Rat>::new(Sector::Frt);
        // ξ_l ξ_m = 0 maps to (1 - q^(2(l+m)))·ξ_l η_m ⊗ a_l c_m
        let rel = NcPoly::<Rat>::generator(Xi, lambda()).mul(&NcPoly::generator(Xi, mu()));
        let nf = substitute(&rel, right_coaction_image_same_colour)
            .normalize(&hyper, &frt)
            .unwrap();
        assert!(!nf.is_zero());
        let expected_coeff = CoeffPoly::<Rat>::one().sub(&CoeffPoly::q_pow(
            crate::coeff::ExponentForm::zero()
                .plus_symbol("l", Rat::int(2))
                .plus_symbol("m", Rat::int(2)),
        ));
        let mut terms = nf.terms();
        let (_, c) = terms.next().unwrap();
        assert!(terms.next().is_none());
        assert_eq!(*c, expected_coeff);
    }

    #[test]
    fn determinant_commutators_report_q_twisting() {
        // [D_l, a_l] = 0 but D_l·b_l = q^(4l)·b_l·D_l, so the commutator
        // with b is nonzero at generic colour.
        let comms = determinant_commutators::<Rat>(&lambda(), &lambda()).unwrap();
        assert!(comms[0].1.is_zero(), "a commutes with the determinant");
        assert!(comms[3].1.is_zero(), "d commutes with the determinant");
        assert!(!comms[1].1.is_zero(), "b is q-twisted at generic colour");
        // at colour zero everything commutes
        let z = ColourSymbol::zero();
        let comms = determinant_commutators::<Rat>(&z, &z).unwrap();
        assert!(comms.iter().all(|(_, p)| p.is_zero()));
    }
}
