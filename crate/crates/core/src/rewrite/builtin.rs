//! The built-in rule families, one per commutation relation.
//!
//! Family names are stable identifiers used by the printable manifest and
//! the suite reports. Coefficients are written over the two colour slots
//! `c1` (first letter of the pair) and `c2` (second letter).

use super::{ColourRef, Guard, RhsTerm, RuleAction, RuleFamily, SLOT_1, SLOT_2};
use crate::algebra::GenKind::{self, *};
use crate::coeff::{CoeffPoly, ExponentForm};
use crate::scalar::Scalar;

/// Version of the embedded rule manifest.
pub const RULES_VERSION: u32 = 1;

/// Which part of the alphabet a rewrite system is built over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sector {
    /// Quantum-matrix generators `a, b, c, d`.
    Frt,
    /// Plane coordinates `x, y`.
    Plane,
    /// Grassmann differentials `xi, eta`.
    Hyperplane,
    /// Coordinates, differentials and derivatives: the calculus algebra.
    Calculus,
    /// Every kind; quantum-matrix entries commute with coordinates and
    /// differentials, adjacency with derivatives is rejected.
    Everything,
}

impl Sector {
    pub fn is_active(self, k: GenKind) -> bool {
        match self {
            Sector::Frt => k.is_frt(),
            Sector::Plane => k.is_coordinate(),
            Sector::Hyperplane => k.is_form(),
            Sector::Calculus => !k.is_frt(),
            Sector::Everything => true,
        }
    }

    pub fn active_kinds(self) -> Vec<GenKind> {
        crate::algebra::ALL_KINDS.iter().copied().filter(|&k| self.is_active(k)).collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            Sector::Frt => "frt",
            Sector::Plane => "plane",
            Sector::Hyperplane => "hyperplane",
            Sector::Calculus => "calculus",
            Sector::Everything => "everything",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "frt" => Some(Sector::Frt),
            "plane" => Some(Sector::Plane),
            "hyperplane" => Some(Sector::Hyperplane),
            "calculus" => Some(Sector::Calculus),
            "everything" | "full" => Some(Sector::Everything),
            _ => None,
        }
    }
}

/// `q^(k + a·c1 + b·c2)` as a slot-schematic coefficient.
fn qe<R: Scalar>(k: i64, a: i64, b: i64) -> CoeffPoly<R> {
    CoeffPoly::q_pow(
        ExponentForm::int(k)
            .plus_symbol(SLOT_1, R::int(a))
            .plus_symbol(SLOT_2, R::int(b)),
    )
}

fn word(letters: &[(GenKind, ColourRef)]) -> Vec<(GenKind, ColourRef)> {
    letters.to_vec()
}

fn rewrite1<R: Scalar>(
    name: &str,
    lhs: (GenKind, GenKind),
    guard: Guard,
    coeff: CoeffPoly<R>,
    rhs: &[(GenKind, ColourRef)],
) -> RuleFamily<R> {
    RuleFamily {
        name: name.to_string(),
        lhs,
        guard,
        action: RuleAction::Rewrite(vec![RhsTerm { coeff, word: word(rhs) }]),
    }
}

fn zero_rule<R: Scalar>(name: &str, lhs: (GenKind, GenKind)) -> RuleFamily<R> {
    RuleFamily {
        name: name.to_string(),
        lhs,
        guard: Guard::Always,
        action: RuleAction::Rewrite(Vec::new()),
    }
}

use ColourRef::{First, Second};

/// The quantum-matrix commutation rules.
pub fn frt_families<R: Scalar>() -> Vec<RuleFamily<R>> {
    let one = CoeffPoly::<R>::one();
    // q - q^-1
    let qq = CoeffPoly::<R>::q_int(1).sub(&CoeffPoly::q_int(-1));
    vec![
        // kind reorders
        rewrite1("frt/ba", (B, A), Guard::Always, qe(-1, 0, -2), &[(A, Second), (B, First)]),
        rewrite1("frt/ca", (C, A), Guard::Always, qe(-1, 0, 2), &[(A, Second), (C, First)]),
        rewrite1("frt/cb", (C, B), Guard::Always, qe(0, 2, 2), &[(B, Second), (C, First)]),
        rewrite1("frt/db", (D, B), Guard::Always, qe(-1, 2, 0), &[(B, Second), (D, First)]),
        rewrite1("frt/dc", (D, C), Guard::Always, qe(-1, -2, 0), &[(C, Second), (D, First)]),
        RuleFamily {
            name: "frt/da".to_string(),
            lhs: (D, A),
            guard: Guard::Always,
            action: RuleAction::Rewrite(vec![
                RhsTerm { coeff: one.clone(), word: word(&[(A, Second), (D, First)]) },
                RhsTerm {
                    coeff: qq.mul(&qe(0, 1, 1)).neg(),
                    word: word(&[(B, First), (C, Second)]),
                },
            ]),
        },
        // colour sorts
        rewrite1("frt/ab-colour", (A, B), Guard::FirstColourGreater, qe(0, 1, -1), &[(A, Second), (B, First)]),
        rewrite1("frt/ac-colour", (A, C), Guard::FirstColourGreater, qe(0, -1, 1), &[(A, Second), (C, First)]),
        rewrite1("frt/bc-colour", (B, C), Guard::FirstColourGreater, one.clone(), &[(B, Second), (C, First)]),
        rewrite1("frt/bd-colour", (B, D), Guard::FirstColourGreater, qe(0, 1, -1), &[(B, Second), (D, First)]),
        rewrite1("frt/cd-colour", (C, D), Guard::FirstColourGreater, qe(0, -1, 1), &[(C, Second), (D, First)]),
        rewrite1("frt/ad-colour", (A, D), Guard::FirstColourGreater, one.clone(), &[(A, Second), (D, First)]),
        rewrite1("frt/aa-colour", (A, A), Guard::FirstColourGreater, one.clone(), &[(A, Second), (A, First)]),
        rewrite1("frt/bb-colour", (B, B), Guard::FirstColourGreater, qe(0, 2, -2), &[(B, Second), (B, First)]),
        rewrite1("frt/cc-colour", (C, C), Guard::FirstColourGreater, qe(0, -2, 2), &[(C, Second), (C, First)]),
        rewrite1("frt/dd-colour", (D, D), Guard::FirstColourGreater, one, &[(D, Second), (D, First)]),
    ]
}

/// The coloured-plane coordinate rules.
pub fn plane_families<R: Scalar>() -> Vec<RuleFamily<R>> {
    vec![
        rewrite1("plane/yx", (Y, X), Guard::Always, qe(-1, 1, 1), &[(X, Second), (Y, First)]),
        rewrite1("plane/xx-colour", (X, X), Guard::FirstColourGreater, qe(0, 1, -1), &[(X, Second), (X, First)]),
        rewrite1("plane/xy-colour", (X, Y), Guard::FirstColourGreater, CoeffPoly::one(), &[(X, Second), (Y, First)]),
        rewrite1("plane/yy-colour", (Y, Y), Guard::FirstColourGreater, qe(0, -1, 1), &[(Y, Second), (Y, First)]),
    ]
}

/// The Grassmann hyperplane rules.
pub fn hyperplane_families<R: Scalar>() -> Vec<RuleFamily<R>> {
    vec![
        zero_rule("hyperplane/xixi-zero", (Xi, Xi)),
        zero_rule("hyperplane/etaeta-zero", (Eta, Eta)),
        rewrite1(
            "hyperplane/etaxi",
            (Eta, Xi),
            Guard::Always,
            qe(1, 1, 1).neg(),
            &[(Xi, Second), (Eta, First)],
        ),
        rewrite1(
            "hyperplane/xieta-colour",
            (Xi, Eta),
            Guard::FirstColourGreater,
            CoeffPoly::one(),
            &[(Xi, Second), (Eta, First)],
        ),
    ]
}

/// Derivative-coordinate, derivative-derivative, coordinate-differential and
/// derivative-differential rules of the differential calculus.
pub fn calculus_families<R: Scalar>() -> Vec<RuleFamily<R>> {
    let one = CoeffPoly::<R>::one();
    // q^2 - 1 and q^-2 - 1
    let q2m1 = CoeffPoly::<R>::q_int(2).sub(&one);
    let qm2m1 = CoeffPoly::<R>::q_int(-2).sub(&one);
    vec![
        // derivatives past coordinates
        rewrite1("calculus/dx-y", (Dx, Y), Guard::Always, qe(1, 1, 1), &[(Y, Second), (Dx, First)]),
        rewrite1("calculus/dy-x", (Dy, X), Guard::Always, qe(1, -1, -1), &[(X, Second), (Dy, First)]),
        RuleFamily {
            name: "calculus/dy-y".to_string(),
            lhs: (Dy, Y),
            guard: Guard::Always,
            action: RuleAction::Rewrite(vec![
                RhsTerm { coeff: one.clone(), word: Vec::new() },
                RhsTerm { coeff: qe(2, -1, 1), word: word(&[(Y, Second), (Dy, First)]) },
            ]),
        },
        RuleFamily {
            name: "calculus/dx-x".to_string(),
            lhs: (Dx, X),
            guard: Guard::Always,
            action: RuleAction::Rewrite(vec![
                RhsTerm { coeff: one.clone(), word: Vec::new() },
                RhsTerm { coeff: qe(2, 1, -1), word: word(&[(X, Second), (Dx, First)]) },
                RhsTerm { coeff: q2m1.clone(), word: word(&[(Y, Second), (Dy, First)]) },
            ]),
        },
        // derivative-derivative
        rewrite1("calculus/dydx", (Dy, Dx), Guard::Always, qe(1, 1, 1), &[(Dx, Second), (Dy, First)]),
        rewrite1("calculus/dxdx-colour", (Dx, Dx), Guard::FirstColourGreater, qe(0, -1, 1), &[(Dx, Second), (Dx, First)]),
        rewrite1("calculus/dydy-colour", (Dy, Dy), Guard::FirstColourGreater, qe(0, 1, -1), &[(Dy, Second), (Dy, First)]),
        // differentials past coordinates
        rewrite1("calculus/xi-x", (Xi, X), Guard::Always, qe(-2, 1, -1), &[(X, Second), (Xi, First)]),
        rewrite1("calculus/xi-y", (Xi, Y), Guard::Always, qe(-1, -1, -1), &[(Y, Second), (Xi, First)]),
        rewrite1("calculus/eta-y", (Eta, Y), Guard::Always, qe(-2, -1, 1), &[(Y, Second), (Eta, First)]),
        RuleFamily {
            name: "calculus/eta-x".to_string(),
            lhs: (Eta, X),
            guard: Guard::Always,
            action: RuleAction::Rewrite(vec![
                RhsTerm { coeff: qe(-1, 1, 1), word: word(&[(X, Second), (Eta, First)]) },
                RhsTerm {
                    coeff: qe(-1, 1, 1).mul(&q2m1).neg(),
                    word: word(&[(Xi, First), (Y, Second)]),
                },
            ]),
        },
        // derivatives past differentials
        rewrite1("calculus/dx-xi", (Dx, Xi), Guard::Always, qe(-2, -1, 1), &[(Xi, Second), (Dx, First)]),
        rewrite1("calculus/dx-eta", (Dx, Eta), Guard::Always, qe(-1, 1, 1), &[(Eta, Second), (Dx, First)]),
        rewrite1("calculus/dy-xi", (Dy, Xi), Guard::Always, qe(-1, -1, -1), &[(Xi, Second), (Dy, First)]),
        RuleFamily {
            name: "calculus/dy-eta".to_string(),
            lhs: (Dy, Eta),
            guard: Guard::Always,
            action: RuleAction::Rewrite(vec![
                RhsTerm { coeff: qe(-2, 1, -1), word: word(&[(Eta, Second), (Dy, First)]) },
                RhsTerm { coeff: qm2m1, word: word(&[(Xi, Second), (Dx, First)]) },
            ]),
        },
    ]
}

/// Quantum-matrix entries commute with coordinates and differentials; their
/// adjacency with derivatives is undefined and rejected.
pub fn cross_families<R: Scalar>() -> Vec<RuleFamily<R>> {
    let mut out = Vec::new();
    for pk in [X, Y, Xi, Eta] {
        for fk in [A, B, C, D] {
            out.push(rewrite1(
                &format!("cross/{}-{}-commute", pk.name(), fk.name()),
                (pk, fk),
                Guard::Always,
                CoeffPoly::one(),
                &[(fk, Second), (pk, First)],
            ));
        }
    }
    for fk in [A, B, C, D] {
        for dk in [Dx, Dy] {
            out.push(RuleFamily {
                name: format!("cross/{}-{}-reject", fk.name(), dk.name()),
                lhs: (fk, dk),
                guard: Guard::Always,
                action: RuleAction::Reject,
            });
            out.push(RuleFamily {
                name: format!("cross/{}-{}-reject", dk.name(), fk.name()),
                lhs: (dk, fk),
                guard: Guard::Always,
                action: RuleAction::Reject,
            });
        }
    }
    out
}

pub fn families_for<R: Scalar>(sector: Sector) -> Vec<RuleFamily<R>> {
    match sector {
        Sector::Frt => frt_families(),
        Sector::Plane => plane_families(),
        Sector::Hyperplane => hyperplane_families(),
        Sector::Calculus => {
            let mut f = plane_families();
            f.extend(hyperplane_families());
            f.extend(calculus_families());
            f
        }
        Sector::Everything => {
            let mut f = frt_families();
            f.extend(plane_families());
            f.extend(hyperplane_families());
            f.extend(calculus_families());
            f.extend(cross_families());
            f
        }
    }
}
