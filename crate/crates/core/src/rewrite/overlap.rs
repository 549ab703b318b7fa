//! Local-confluence testing by exhaustive overlap enumeration.
//!
//! Every length-3 word `g1 g2 g3` over the sector's kinds and the supplied
//! colours in which both adjacent pairs are redexes is reduced two ways —
//! left pair first, right pair first, each followed by full normalization —
//! and the normal forms are compared. A non-empty report means the oriented
//! rules are not locally confluent on the given colours; it is returned as
//! data for the caller to surface.

use super::{RewriteError, RewriteSystem};
use crate::algebra::{Generator, NcPoly, Word};
use crate::colour::ColourSymbol;
use crate::scalar::Scalar;

/// One unresolved overlap: the word and its two distinct normal forms.
#[derive(Debug, Clone)]
pub struct Overlap<R> {
    pub word: Word<R>,
    pub left_first: NcPoly<R>,
    pub right_first: NcPoly<R>,
}

impl<R: Scalar> Overlap<R> {
    /// The element of the ideal witnessed by the failed join.
    pub fn residual(&self) -> NcPoly<R> {
        self.left_first.sub(&self.right_first)
    }
}

/// Enumerate all overlapping length-3 words and return the ones whose two
/// reduction paths do not join.
pub fn overlap_report<R: Scalar>(
    sys: &RewriteSystem<R>,
    colours: &[ColourSymbol<R>],
) -> Result<Vec<Overlap<R>>, RewriteError> {
    assert!(!colours.is_empty(), "overlap enumeration needs at least one colour");
    let kinds = sys.sector().active_kinds();
    let mut unresolved = Vec::new();
    for &k1 in &kinds {
        for &k2 in &kinds {
            for &k3 in &kinds {
                for c1 in colours {
                    for c2 in colours {
                        for c3 in colours {
                            let g1 = Generator::new(k1, c1.clone());
                            let g2 = Generator::new(k2, c2.clone());
                            let g3 = Generator::new(k3, c3.clone());
                            if !(sys.is_redex(&g1, &g2) && sys.is_redex(&g2, &g3)) {
                                continue;
                            }
                            let w = Word(vec![g1, g2, g3]);
                            let left = reduce_at(sys, &w, 0)?;
                            let right = reduce_at(sys, &w, 1)?;
                            if left != right {
                                unresolved.push(Overlap {
                                    word: w,
                                    left_first: left,
                                    right_first: right,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(unresolved)
}

fn reduce_at<R: Scalar>(
    sys: &RewriteSystem<R>,
    w: &Word<R>,
    pos: usize,
) -> Result<NcPoly<R>, RewriteError> {
    let (g1, g2) = (&w.0[pos], &w.0[pos + 1]);
    let family = sys
        .families()
        .iter()
        .find(|f| f.applies(g1, g2) && !matches!(f.action, super::RuleAction::Reject))
        .expect("caller checked the pair is a redex");
    sys.normalize(&sys.apply_at(w, pos, family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colour::{lambda, mu, nu};
    use crate::rewrite::Sector;
    use crate::Rat;

    #[test]
    fn frt_sector_is_locally_confluent_over_three_colours() {
        let sys = RewriteSystem::<Rat>::new(Sector::Frt);
        let report = overlap_report(&sys, &[lambda(), mu(), nu()]).unwrap();
        assert!(
            report.is_empty(),
            "unresolved overlaps: {}",
            report.iter().map(|o| o.word.to_string()).collect::<Vec<_>>().join(", ")
        );
    }

    #[test]
    fn plane_sector_is_locally_confluent_over_three_colours() {
        let sys = RewriteSystem::<Rat>::new(Sector::Plane);
        let report = overlap_report(&sys, &[lambda(), mu(), nu()]).unwrap();
        assert!(report.is_empty());
    }

    #[test]
    fn hyperplane_sector_is_locally_confluent_over_three_colours() {
        let sys = RewriteSystem::<Rat>::new(Sector::Hyperplane);
        let report = overlap_report(&sys, &[lambda(), mu(), nu()]).unwrap();
        assert!(report.is_empty());
    }

    #[test]
    fn colourless_calculus_is_locally_confluent() {
        let sys = RewriteSystem::<Rat>::new(Sector::Calculus);
        let report = overlap_report(&sys, &[ColourSymbol::zero()]).unwrap();
        assert!(
            report.is_empty(),
            "unresolved overlaps: {}",
            report.iter().map(|o| o.word.to_string()).collect::<Vec<_>>().join(", ")
        );
    }
}
