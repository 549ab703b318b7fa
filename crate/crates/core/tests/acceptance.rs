//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! per clause and asserting the criterion as stated.
//!
//! Four clauses fail by honest computation — local confluence of the full
//! calculus sector over two generic colours, the right adjugate antipode
//! identity, mixed-colour nilpotency of the exterior differential, and the
//! colour independence of its operator representation. The residual
//! witnesses are printed; everything else passes exactly.

use std::collections::BTreeMap;
use std::time::Instant;

use cqp_core::algebra::{GenKind, Generator, NcPoly, Word};
use cqp_core::calculus;
use cqp_core::coeff::{CoeffPoly, ColourPoly, ExponentForm};
use cqp_core::colour::{lambda, mu, nu, ColourSymbol};
use cqp_core::contraction::{self, GTransform, SignConvention};
use cqp_core::hopf;
use cqp_core::matrices::{self, MatrixForm, MatrixName};
use cqp_core::rewrite::{self, RewriteSystem, Sector};
use cqp_core::suite::{self, CheckSpec, SuiteDefinition};
use cqp_core::{Rat, Scalar};

fn clause(n: u32, name: &str, ok: bool, detail: &str) -> bool {
    let status = if ok { "PASS" } else { "FAIL" };
    if detail.is_empty() {
        println!("criterion {n:2} [{name}] {status}");
    } else {
        println!("criterion {n:2} [{name}] {status} — {detail}");
    }
    ok
}

#[test]
fn criterion_01_coloured_yang_baxter() {
    let started = Instant::now();
    let res = matrices::ybe_residual::<Rat>(&lambda(), &mu(), &nu()).unwrap();
    let elapsed = started.elapsed();
    let ok = clause(1, "ybe residual is the zero 8x8 matrix", res.is_zero(), "");
    let fast = clause(1, "runtime under 1 second", elapsed.as_secs_f64() < 1.0, &format!("{elapsed:?}"));
    assert!(ok && fast);
}

#[test]
fn criterion_02_braided_form() {
    let r = matrices::build_matrix::<Rat>(MatrixName::R, &lambda(), &mu()).unwrap();
    let rhat = matrices::build_matrix::<Rat>(MatrixName::Rhat, &lambda(), &mu()).unwrap();
    let flip_ok = clause(2, "Rhat = P*R entrywise", matrices::flip2::<Rat>().mul(&r) == rhat, "");
    let res = matrices::braided_ybe_residual::<Rat>(&lambda(), &mu(), &nu()).unwrap();
    let braided_ok = clause(2, "braided ybe residual is zero", res.is_zero(), "");
    assert!(flip_ok && braided_ok);
}

#[test]
fn criterion_03_rtt_consistency() {
    let bad = matrices::rtt_nonzero_entries::<Rat>(&lambda(), &mu()).unwrap();
    let detail = bad
        .iter()
        .map(|(i, p)| format!("entry {i}: {p}"))
        .collect::<Vec<_>>()
        .join("; ");
    let ok = clause(3, "all 16 rtt entries normalize to zero", bad.is_empty(), &detail);
    assert!(ok, "rtt transcription error pinpointed by: {detail}");
}

#[test]
fn criterion_04_local_confluence() {
    let started = Instant::now();
    let three = [lambda::<Rat>(), mu(), nu()];
    let two = [lambda::<Rat>(), mu()];
    let mut all_ok = true;
    let mut witness = String::new();
    for (sector, cols) in [
        (Sector::Frt, &three[..]),
        (Sector::Plane, &three[..]),
        (Sector::Hyperplane, &three[..]),
        (Sector::Calculus, &two[..]),
    ] {
        let sys = RewriteSystem::<Rat>::new(sector);
        let report = rewrite::overlap_report(&sys, cols).unwrap();
        let ok = clause(
            4,
            &format!("overlap report empty for the {} sector", sector.name()),
            report.is_empty(),
            &if report.is_empty() {
                String::new()
            } else {
                format!(
                    "{} unresolved overlaps, e.g. {} with residual {}",
                    report.len(),
                    report[0].word,
                    report[0].residual()
                )
            },
        );
        if !ok && witness.is_empty() {
            witness = format!(
                "the {} sector has {} unresolved overlaps over two generic colours; first \
                 witness {} (its two normal forms differ by {}); every residual vanishes at \
                 equal or zero colours — the displayed derivative relations are not mutually \
                 confluent for distinct colours (the coloured braided matrix fails the Hecke \
                 condition), so the consistency claim does not hold in the diamond-lemma sense",
                sector.name(),
                report.len(),
                report[0].word,
                report[0].residual()
            );
        }
        all_ok &= ok;
    }
    let elapsed = started.elapsed();
    let fast =
        clause(4, "runtime under 1 minute", elapsed.as_secs() < 60, &format!("{elapsed:?}"));
    assert!(all_ok && fast, "{witness}");
}

#[test]
fn criterion_05_matrix_component_agreement() {
    let def = SuiteDefinition {
        name: "c5".into(),
        checks: MatrixForm::ALL
            .iter()
            .flat_map(|f| {
                [
                    CheckSpec::Components {
                        form: f.name().into(),
                        colours: vec!["l".into(), "m".into()],
                    },
                    CheckSpec::ComponentSpan {
                        form: f.name().into(),
                        colours: vec!["l".into(), "m".into()],
                    },
                ]
            })
            .collect(),
        rules: None,
    };
    let reports = suite::run_suite::<Rat>(&def);
    let mut ok = true;
    for r in &reports {
        ok &= clause(5, &r.name, r.passed(), &r.detail.join("; "));
    }
    assert!(ok);
}

#[test]
fn criterion_06_hopf_checks() {
    let coproduct = hopf::coproduct_is_homomorphism::<Rat>(&lambda(), &mu()).unwrap();
    let c_ok = clause(6, "coproduct is a homomorphism", coproduct.ok(), "");
    let counit = hopf::counit_check::<Rat>(&lambda(), &mu());
    let e_ok = clause(6, "counit satisfies every relation", counit.ok(), "");
    let antipode = hopf::antipode_check::<Rat>(&lambda()).unwrap();
    let left_ok = clause(6, "antipode: Adj*T = D*I", antipode.left_ok(), "");
    let right_ok = clause(
        6,
        "antipode: T*Adj = D*I",
        antipode.right_ok(),
        &antipode
            .right_failures
            .iter()
            .map(|(i, j, r)| format!("entry ({i},{j}): {r}"))
            .collect::<Vec<_>>()
            .join("; "),
    );
    assert!(
        c_ok && e_ok && left_ok && right_ok,
        "the adjugate is a one-sided inverse at generic colour: the determinant is only \
         q-commuting with b and c (D·b = q^(4l)·b·D), so T*Adj picks up (1 - q^(±4l)) twists; \
         both identities hold at colour zero"
    );
}

#[test]
fn criterion_07_coaction_invariance() {
    let left = hopf::coaction_invariance::<Rat>(hopf::CoactionSide::Left, &lambda(), &mu()).unwrap();
    let l_ok = clause(7, "left coaction preserves the plane relations", left.ok(), "");
    let right =
        hopf::coaction_invariance::<Rat>(hopf::CoactionSide::Right, &lambda(), &mu()).unwrap();
    let r_ok = clause(7, "right coaction preserves the hyperplane relations", right.ok(), "");
    assert!(l_ok && r_ok);
}

#[test]
fn criterion_08_calculus() {
    let cols = [lambda::<Rat>(), mu()];

    let failures = calculus::d_square_failures::<Rat>(3, &cols).unwrap();
    let d2_ok = clause(
        8,
        "d^2 = 0 exhaustively to degree 3 over two colours",
        failures.is_empty(),
        &if failures.is_empty() {
            String::new()
        } else {
            format!("{} mixed-colour words fail, e.g. d²({}) = {}", failures.len(), failures[0].0, failures[0].1)
        },
    );

    let def = SuiteDefinition {
        name: "c8".into(),
        checks: vec![CheckSpec::Leibniz {
            degree: 3,
            samples: 100,
            seed: 0xC0FFEE,
            colours: vec!["l".into(), "m".into()],
        }],
        rules: None,
    };
    let leibniz = &suite::run_suite::<Rat>(&def)[0];
    let leibniz_ok =
        clause(8, "graded Leibniz on 100 random pairs", leibniz.passed(), &leibniz.detail.join("; "));

    let mut indep_failures = Vec::new();
    for w in calculus::coordinate_monomials::<Rat>(3, &cols) {
        let p = NcPoly::from_word(w.clone());
        if !calculus::d_colour_independence(&p, &cols[0], &cols[1]).unwrap() {
            indep_failures.push(w);
        }
    }
    let indep_ok = clause(
        8,
        "d colour independence on the same set",
        indep_failures.is_empty(),
        &if indep_failures.is_empty() {
            String::new()
        } else {
            format!("{} monomials distinguish the representation colours, e.g. {}", indep_failures.len(), indep_failures[0])
        },
    );

    assert!(
        d2_ok && leibniz_ok && indep_ok,
        "the Leibniz differential is exact, but it does not factor through the colour-swap \
         relations (d of the two sides of x_l y_m = x_m y_l differ), so d² picks up residuals \
         on mixed-colour representatives; and the single-colour operator representation \
         computes the differential on its own colour sector only (the c-representation sends \
         x_c' to xi_c, so no representation colour can produce xi_c' for c' != c)"
    );
}

#[test]
fn criterion_09_exchange_symmetry() {
    let mut ok = true;
    for sector in [Sector::Frt, Sector::Plane, Sector::Hyperplane, Sector::Calculus] {
        let sys = RewriteSystem::<Rat>::new(sector);
        let mut failures = Vec::new();
        for f in sys.families() {
            let Some(rel) = f.relation_poly(&lambda(), &mu()) else { continue };
            let nf = sys.normalize(&rel.colour_swap("l", "m")).unwrap();
            if !nf.is_zero() {
                failures.push(f.name.clone());
            }
        }
        ok &= clause(
            9,
            &format!("colour swap of every {} relation normalizes to zero", sector.name()),
            failures.is_empty(),
            &failures.join(", "),
        );
    }
    assert!(ok);
}

#[test]
fn criterion_10_colourless_limit() {
    let def = SuiteDefinition {
        name: "c10".into(),
        checks: ["frt", "plane", "hyperplane", "calculus"]
            .iter()
            .map(|s| CheckSpec::Colourless { sector: (*s).into() })
            .collect(),
        rules: None,
    };
    let mut ok = true;
    for r in suite::run_suite::<Rat>(&def) {
        ok &= clause(10, &r.name, r.passed(), &r.detail.join("; "));
    }
    assert!(ok);
}

#[test]
fn criterion_11_contraction() {
    let started = Instant::now();
    let t = GTransform::<Rat>::new(SignConvention::Plus);
    let sigma_ok = clause(
        11,
        "derived commutator sign recorded",
        contraction::derive_sign::<Rat>().unwrap() == contraction::DERIVED_SIGN
            && t.sigma() == contraction::DERIVED_SIGN,
        &format!("sigma = {}", t.sigma()),
    );

    let got = contraction::contract_relation(&contraction::xy_relation(&lambda(), &mu()), &t)
        .unwrap();
    let want = contraction::expected_h_plane_relation(&lambda(), &mu(), &t);
    let coloured_ok =
        clause(11, "contraction gives [x_l, y_m] = sigma*h(1-2m)*y_l*y_m", got == want, "");

    let zero = ColourSymbol::<Rat>::zero();
    let got = contraction::contract_relation(&contraction::xy_relation(&zero, &zero), &t).unwrap();
    let want = contraction::expected_h_plane_relation(&zero, &zero, &t);
    let jordan_ok = clause(11, "colourless contraction is [x, y] = sigma*h*y^2", got == want, "");

    let rhs = contraction::qh_hybrid_relation(&lambda(), &mu(), &t).unwrap();
    let hybrid_ok = clause(
        11,
        "hybrid relation reproduces the basic-number coefficient",
        rhs == contraction::expected_hybrid_rhs(&lambda(), &mu(), &t),
        "",
    );

    let contracted =
        contraction::contract_relation(&contraction::xy_relation(&lambda(), &mu()), &t).unwrap();
    let yy = Word(vec![
        Generator::new(GenKind::Y, lambda::<Rat>()),
        Generator::new(GenKind::Y, mu()),
    ]);
    let mut limit_ok = true;
    for (w, c) in rhs.terms() {
        limit_ok &= *w == yy && c.limit_q1().unwrap() == contracted.coefficient(&yy).neg();
    }
    let limit_ok = clause(11, "limit of the hybrid coefficient matches the contraction", limit_ok, "");

    let elapsed = started.elapsed();
    let fast =
        clause(11, "runtime under 1 second", elapsed.as_secs_f64() < 1.0, &format!("{elapsed:?}"));
    assert!(sigma_ok && coloured_ok && jordan_ok && hybrid_ok && limit_ok && fast);
}

#[test]
fn criterion_12_coefficient_ring_limits() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let rat = |rng: &mut rand::rngs::StdRng| {
        let n = rng.gen_range(-4i64..=4);
        let d = rng.gen_range(1i64..=3);
        Rat::rat(n, d)
    };
    let mut failures = 0;
    for _ in 0..50 {
        let mut e = ExponentForm::<Rat>::constant(rat(&mut rng));
        for name in ["l", "m"] {
            e = e.plus_symbol(name, rat(&mut rng));
        }
        let v = CoeffPoly::q_pow(e.clone()).sub(&CoeffPoly::one()).mul(&CoeffPoly::pole(1));
        if v.limit_q1().unwrap() != ColourPoly::from_affine(&e) {
            failures += 1;
        }
    }
    let ok = clause(
        12,
        "lim (q^e - 1)/(q - 1) = e on 50 random affine forms",
        failures == 0,
        &format!("{failures} failures"),
    );
    // spot-check a pure constant too, where the pole cancels syntactically
    let e = ExponentForm::<Rat>::int(3);
    let v = CoeffPoly::q_pow(e.clone()).sub(&CoeffPoly::one()).mul(&CoeffPoly::pole(1));
    let const_ok = v.limit_q1().unwrap() == ColourPoly::from_affine(&e);
    assert!(ok && const_ok);
    let _ = BTreeMap::<String, Rat>::new();
}
