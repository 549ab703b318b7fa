//! Declarative (de)serialization of rule families.
//!
//! The built-in families ship as a versioned manifest printable with the
//! `rules` CLI subcommand; the same JSON shape can be loaded from a file to
//! run checks against a modified rule set (e.g. negative controls).

use serde_json::{json, Value};
use thiserror::Error;

use super::{ColourRef, Guard, RhsTerm, RuleAction, RuleFamily, RULES_VERSION};
use crate::algebra::GenKind;
use crate::parse::{parse_coeff, ColourEnv, ParseError};
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("malformed rule manifest: {0}")]
    Shape(String),
    #[error("unsupported manifest version {0} (expected {RULES_VERSION})")]
    Version(u64),
    #[error("bad coefficient in rule `{name}`: {err}")]
    Coeff { name: String, err: ParseError },
}

fn colour_ref_name(r: ColourRef) -> &'static str {
    match r {
        ColourRef::First => "c1",
        ColourRef::Second => "c2",
    }
}

fn colour_ref_from(s: &str) -> Option<ColourRef> {
    match s {
        "c1" => Some(ColourRef::First),
        "c2" => Some(ColourRef::Second),
        _ => None,
    }
}

pub fn families_to_json<R: Scalar>(families: &[RuleFamily<R>]) -> Value {
    let items: Vec<Value> = families
        .iter()
        .map(|f| {
            let action = match &f.action {
                RuleAction::Reject => json!("reject"),
                RuleAction::Rewrite(terms) => {
                    let rhs: Vec<Value> = terms
                        .iter()
                        .map(|t| {
                            let word: Vec<Value> = t
                                .word
                                .iter()
                                .map(|(k, r)| json!([k.name(), colour_ref_name(*r)]))
                                .collect();
                            json!({ "coeff": t.coeff.to_string(), "word": word })
                        })
                        .collect();
                    json!({ "rewrite": rhs })
                }
            };
            json!({
                "name": f.name,
                "lhs": [f.lhs.0.name(), f.lhs.1.name()],
                "guard": match f.guard {
                    Guard::Always => "always",
                    Guard::FirstColourGreater => "first-colour-greater",
                },
                "action": action,
            })
        })
        .collect();
    json!({ "version": RULES_VERSION, "families": items })
}

pub fn families_from_json<R: Scalar>(v: &Value) -> Result<Vec<RuleFamily<R>>, ManifestError> {
    let shape = |m: &str| ManifestError::Shape(m.to_string());
    let version = v["version"].as_u64().ok_or_else(|| shape("missing version"))?;
    if version != RULES_VERSION as u64 {
        return Err(ManifestError::Version(version));
    }
    let env = ColourEnv::slots();
    let mut out = Vec::new();
    for item in v["families"].as_array().ok_or_else(|| shape("missing families array"))? {
        let name =
            item["name"].as_str().ok_or_else(|| shape("family without a name"))?.to_string();
        let lhs = item["lhs"].as_array().ok_or_else(|| shape("family without lhs"))?;
        let kind = |v: &Value| -> Result<GenKind, ManifestError> {
            v.as_str()
                .and_then(GenKind::from_name)
                .ok_or_else(|| shape("unknown generator kind in lhs/word"))
        };
        let lhs = (kind(&lhs[0])?, kind(&lhs[1])?);
        let guard = match item["guard"].as_str() {
            Some("always") => Guard::Always,
            Some("first-colour-greater") => Guard::FirstColourGreater,
            _ => return Err(shape("unknown guard")),
        };
        let action = if item["action"] == json!("reject") {
            RuleAction::Reject
        } else {
            let rhs = item["action"]["rewrite"]
                .as_array()
                .ok_or_else(|| shape("action must be \"reject\" or {rewrite: [...]}"))?;
            let mut terms = Vec::new();
            for t in rhs {
                let coeff_src =
                    t["coeff"].as_str().ok_or_else(|| shape("rhs term without coeff"))?;
                let coeff = parse_coeff::<R>(coeff_src, &env)
                    .map_err(|err| ManifestError::Coeff { name: name.clone(), err })?;
                let mut word = Vec::new();
                for lw in t["word"].as_array().ok_or_else(|| shape("rhs term without word"))? {
                    let pair = lw.as_array().ok_or_else(|| shape("word letter must be a pair"))?;
                    let k = kind(&pair[0])?;
                    let r = pair[1]
                        .as_str()
                        .and_then(colour_ref_from)
                        .ok_or_else(|| shape("colour slot must be c1 or c2"))?;
                    word.push((k, r));
                }
                terms.push(RhsTerm { coeff, word });
            }
            RuleAction::Rewrite(terms)
        };
        out.push(RuleFamily { name, lhs, guard, action });
    }
    Ok(out)
}
