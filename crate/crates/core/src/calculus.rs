//! The exterior differential on the coordinate-and-form subalgebra.
//!
//! Two implementations are provided and cross-checked:
//!
//! * the graded-Leibniz route — `d` is the degree-one derivation fixed by
//!   `d(x_c) = ξ_c`, `d(y_c) = η_c`, `d(ξ) = d(η) = 0`, with the Koszul sign
//!   counting odd letters to the left; this is the defining route and acts
//!   on any colour mix;
//! * the operator route — a representation colour `c` is chosen, the
//!   derivative letter is appended on the left, pushed rightward with the
//!   calculus rules until it annihilates the identity (words still carrying
//!   a derivative are discarded), and the matching differential is
//!   prefixed.
//!
//! On words whose letters all carry the representation colour the two
//! routes agree (the classical situation); on mixed-colour words the
//! operator route depends on the representation colour, and
//! [`d_colour_independence`] honestly reports the comparison.

use thiserror::Error;

use crate::algebra::{GenKind, Generator, NcPoly, Word};
use crate::colour::ColourSymbol;
use crate::rewrite::{RewriteError, RewriteSystem, Sector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CalculusError {
    #[error("the exterior differential is defined on coordinates and differentials only, not `{0}`")]
    UnsupportedSector(String),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}

fn check_domain<R: Scalar>(p: &NcPoly<R>) -> Result<(), CalculusError> {
    for (w, _) in p.terms() {
        for g in &w.0 {
            if g.kind.is_frt() || g.kind.is_derivative() {
                return Err(CalculusError::UnsupportedSector(g.kind.name().to_string()));
            }
        }
    }
    Ok(())
}

/// `d(g)` on one generator: `x ↦ ξ`, `y ↦ η`, forms to zero.
fn d_letter<R: Scalar>(g: &Generator<R>) -> Option<Generator<R>> {
    match g.kind {
        GenKind::X => Some(Generator::new(GenKind::Xi, g.colour.clone())),
        GenKind::Y => Some(Generator::new(GenKind::Eta, g.colour.clone())),
        GenKind::Xi | GenKind::Eta => None,
        _ => unreachable!("domain checked before differentiation"),
    }
}

/// Graded-Leibniz differentiation without the final normalization.
fn apply_d_raw<R: Scalar>(p: &NcPoly<R>) -> Result<NcPoly<R>, CalculusError> {
    check_domain(p)?;
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        let mut odd_before = 0u32;
        for (i, g) in w.0.iter().enumerate() {
            if let Some(dg) = d_letter(g) {
                let mut letters = Vec::with_capacity(w.len());
                letters.extend(w.0[..i].iter().cloned());
                letters.push(dg);
                letters.extend(w.0[i + 1..].iter().cloned());
                let signed = if odd_before % 2 == 0 { c.clone() } else { c.neg() };
                out.add_term(Word(letters), signed);
            }
            if g.kind.is_odd() {
                odd_before += 1;
            }
        }
    }
    Ok(out)
}

/// The exterior differential by graded-Leibniz extension, normalized.
pub fn apply_d<R: Scalar>(p: &NcPoly<R>) -> Result<NcPoly<R>, CalculusError> {
    let sys = RewriteSystem::<R>::new(Sector::Calculus);
    Ok(sys.normalize(&apply_d_raw(p)?)?)
}

fn drop_derivative_words<R: Scalar>(p: &NcPoly<R>) -> NcPoly<R> {
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        if !w.contains_kind(|k| k.is_derivative()) {
            out.add_term(w.clone(), c.clone());
        }
    }
    out
}

/// The operator route at one representation colour:
/// `d_c(p) = ξ_c·(∂x_c ⊳ p) + η_c·(∂y_c ⊳ p)` where `∂ ⊳ p` appends the
/// derivative letter, normalizes, and discards every word still carrying a
/// derivative.
pub fn apply_d_operator<R: Scalar>(
    p: &NcPoly<R>,
    rep_colour: &ColourSymbol<R>,
) -> Result<NcPoly<R>, CalculusError> {
    check_domain(p)?;
    let sys = RewriteSystem::<R>::new(Sector::Calculus);
    let dx = NcPoly::generator(GenKind::Dx, rep_colour.clone());
    let dy = NcPoly::generator(GenKind::Dy, rep_colour.clone());
    let dx_part = drop_derivative_words(&sys.normalize(&dx.mul(p))?);
    let dy_part = drop_derivative_words(&sys.normalize(&dy.mul(p))?);
    let xi = NcPoly::generator(GenKind::Xi, rep_colour.clone());
    let eta = NcPoly::generator(GenKind::Eta, rep_colour.clone());
    Ok(sys.normalize(&xi.mul(&dx_part).add(&eta.mul(&dy_part)))?)
}

/// All coordinate words over the given colours with `1 ≤ length ≤ degree`.
pub fn coordinate_monomials<R: Scalar>(
    degree: usize,
    colours: &[ColourSymbol<R>],
) -> Vec<Word<R>> {
    let letters: Vec<Generator<R>> = [GenKind::X, GenKind::Y]
        .into_iter()
        .flat_map(|k| colours.iter().map(move |c| Generator::new(k, c.clone())))
        .collect();
    let mut out: Vec<Word<R>> = Vec::new();
    let mut level: Vec<Word<R>> = vec![Word::empty()];
    for _ in 0..degree {
        let mut next = Vec::new();
        for w in &level {
            for g in &letters {
                let mut v = w.0.clone();
                v.push(g.clone());
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// `d² = 0` on every coordinate monomial up to the degree bound; returns
/// the words that fail (empty means nilpotency holds).
pub fn d_square_failures<R: Scalar>(
    degree: usize,
    colours: &[ColourSymbol<R>],
) -> Result<Vec<(Word<R>, NcPoly<R>)>, CalculusError> {
    let mut failures = Vec::new();
    for w in coordinate_monomials(degree, colours) {
        let once = apply_d(&NcPoly::from_word(w.clone()))?;
        let twice = apply_d(&once)?;
        if !twice.is_zero() {
            failures.push((w, twice));
        }
    }
    Ok(failures)
}

/// Boolean form of [`d_square_failures`].
pub fn d_square_check<R: Scalar>(
    degree: usize,
    colours: &[ColourSymbol<R>],
) -> Result<bool, CalculusError> {
    Ok(d_square_failures(degree, colours)?.is_empty())
}

/// The graded-Leibniz residual `d(fg) - d(f)g - (-1)^{|f|} f d(g)`,
/// normalized; the sign is applied per homogeneous component of `f`.
pub fn leibniz_residual<R: Scalar>(
    f: &NcPoly<R>,
    g: &NcPoly<R>,
) -> Result<NcPoly<R>, CalculusError> {
    let sys = RewriteSystem::<R>::new(Sector::Calculus);
    let mut f_even = NcPoly::zero();
    let mut f_odd = NcPoly::zero();
    for (w, c) in f.terms() {
        let odd = w.0.iter().filter(|g| g.kind.is_odd()).count() % 2 == 1;
        if odd {
            f_odd.add_term(w.clone(), c.clone());
        } else {
            f_even.add_term(w.clone(), c.clone());
        }
    }
    let dg = apply_d(g)?;
    let residual = apply_d(&f.mul(g))?
        .sub(&apply_d(f)?.mul(g))
        .sub(&f_even.mul(&dg))
        .add(&f_odd.mul(&dg));
    Ok(sys.normalize(&residual)?)
}

/// Compare the operator route at two representation colours. True when the
/// normal forms agree; on words whose letters all carry one representation
/// colour both routes compute the differential, on genuinely mixed words the
/// representations differ and this returns false.
pub fn d_colour_independence<R: Scalar>(
    p: &NcPoly<R>,
    rep1: &ColourSymbol<R>,
    rep2: &ColourSymbol<R>,
) -> Result<bool, CalculusError> {
    Ok(apply_d_operator(p, rep1)? == apply_d_operator(p, rep2)?)
}

/// Compare the operator route against the Leibniz route on one input.
pub fn d_routes_agree<R: Scalar>(
    p: &NcPoly<R>,
    rep_colour: &ColourSymbol<R>,
) -> Result<bool, CalculusError> {
    Ok(apply_d_operator(p, rep_colour)? == apply_d(p)?)
}
