//! Output formats: canonical text (the parseable grammar), LaTeX and JSON.
//!
//! JSON payloads carry `"schema": "cqp/1"`. Rationals are rendered as
//! strings so arbitrary-precision values survive the round trip.

use serde_json::{json, Value};

use crate::algebra::{NcPoly, Word};
use crate::coeff::{CoeffPoly, ColourPoly};
use crate::colour::ColourSymbol;
use crate::matrices::CMatrix;
use crate::scalar::Scalar;

pub const SCHEMA: &str = "cqp/1";

/// Output format selector shared by the CLI surfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

impl Format {
    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "text" => Some(Format::Text),
            "json" => Some(Format::Json),
            "latex" => Some(Format::Latex),
            _ => None,
        }
    }
}

// ---------------------------------------------------------------------------
// LaTeX
// ---------------------------------------------------------------------------

fn latex_colour_name(name: &str) -> String {
    match name {
        "l" => "\\lambda".to_string(),
        "m" => "\\mu".to_string(),
        "n" => "\\nu".to_string(),
        other => other.to_string(),
    }
}

pub fn latex_colour<R: Scalar>(c: &ColourSymbol<R>) -> String {
    match c {
        ColourSymbol::Const(v) => format!("{v}"),
        ColourSymbol::Sym { name, neg: false } => latex_colour_name(name),
        ColourSymbol::Sym { name, neg: true } => format!("-{}", latex_colour_name(name)),
    }
}

fn latex_exponent<R: Scalar>(e: &crate::coeff::ExponentForm<R>) -> String {
    let mut s = String::new();
    if !e.constant.is_zero() || e.linear.is_empty() {
        s.push_str(&format!("{}", e.constant));
    }
    for (name, coef) in &e.linear {
        let ln = latex_colour_name(name);
        if coef.is_one() {
            if s.is_empty() {
                s.push_str(&ln);
            } else {
                s.push_str(&format!("+{ln}"));
            }
        } else if (-coef.clone()).is_one() {
            s.push_str(&format!("-{ln}"));
        } else if coef.is_negative() {
            s.push_str(&format!("-{}{}", -coef.clone(), ln));
        } else if s.is_empty() {
            s.push_str(&format!("{coef}{ln}"));
        } else {
            s.push_str(&format!("+{coef}{ln}"));
        }
    }
    s
}

pub fn latex_coeff<R: Scalar>(c: &CoeffPoly<R>) -> String {
    if c.is_zero() {
        return "0".to_string();
    }
    let mut pieces = Vec::new();
    for t in c.terms() {
        let mut factors = Vec::new();
        if !t.exp.is_zero() {
            factors.push(format!("q^{{{}}}", latex_exponent(&t.exp)));
        }
        match t.hpow {
            0 => {}
            1 => factors.push("h".to_string()),
            k => factors.push(format!("h^{{{k}}}")),
        }
        if t.polepow > 0 {
            factors.push(format!("(q-1)^{{-{}}}", t.polepow));
        }
        let body = factors.join("");
        let piece = if body.is_empty() {
            format!("{}", t.rat)
        } else if t.rat.is_one() {
            body
        } else if (-t.rat.clone()).is_one() {
            format!("-{body}")
        } else {
            format!("{}{}", t.rat, body)
        };
        pieces.push(piece);
    }
    join_signed(pieces)
}

fn join_signed(pieces: Vec<String>) -> String {
    let mut s = String::new();
    for (i, p) in pieces.iter().enumerate() {
        if i == 0 {
            s.push_str(p);
        } else if let Some(stripped) = p.strip_prefix('-') {
            s.push_str(&format!(" - {stripped}"));
        } else {
            s.push_str(&format!(" + {p}"));
        }
    }
    s
}

pub fn latex_word<R: Scalar>(w: &Word<R>) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.0.iter()
        .map(|g| {
            let c = latex_colour(&g.colour);
            match g.kind {
                crate::algebra::GenKind::Xi => format!("\\xi_{{{c}}}"),
                crate::algebra::GenKind::Eta => format!("\\eta_{{{c}}}"),
                crate::algebra::GenKind::Dx => format!("\\partial_{{x_{{{c}}}}}"),
                crate::algebra::GenKind::Dy => format!("\\partial_{{y_{{{c}}}}}"),
                k => format!("{}_{{{c}}}", k.name()),
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn latex_nc_poly<R: Scalar>(p: &NcPoly<R>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut pieces = Vec::new();
    for (w, c) in p.terms() {
        let piece = if w.is_empty() {
            latex_coeff(c)
        } else if c.is_one() {
            latex_word(w)
        } else if c.terms().len() == 1 {
            format!("{}\\, {}", latex_coeff(c), latex_word(w))
        } else {
            format!("\\left({}\\right) {}", latex_coeff(c), latex_word(w))
        };
        pieces.push(piece);
    }
    join_signed(pieces)
}

pub fn latex_matrix<R: Scalar>(m: &CMatrix<R>) -> String {
    let mut rows = Vec::new();
    for i in 0..m.rows() {
        let mut cells = Vec::new();
        for j in 0..m.cols() {
            cells.push(latex_coeff(m.entry(i, j)));
        }
        rows.push(cells.join(" & "));
    }
    format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", rows.join(" \\\\\n"))
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

pub fn json_colour<R: Scalar>(c: &ColourSymbol<R>) -> Value {
    Value::String(c.to_string())
}

pub fn json_coeff<R: Scalar>(c: &CoeffPoly<R>) -> Value {
    let terms: Vec<Value> = c
        .terms()
        .iter()
        .map(|t| {
            let linear: serde_json::Map<String, Value> = t
                .exp
                .linear
                .iter()
                .map(|(k, v)| (k.clone(), Value::String(v.to_string())))
                .collect();
            json!({
                "rat": t.rat.to_string(),
                "exp": { "const": t.exp.constant.to_string(), "linear": linear },
                "hpow": t.hpow,
                "polepow": t.polepow,
            })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn json_word<R: Scalar>(w: &Word<R>) -> Value {
    Value::Array(
        w.0.iter()
            .map(|g| json!({ "kind": g.kind.name(), "colour": json_colour(&g.colour) }))
            .collect(),
    )
}

pub fn json_nc_poly<R: Scalar>(p: &NcPoly<R>) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(w, c)| json!({ "word": json_word(w), "coeff": json_coeff(c) }))
        .collect();
    json!({ "terms": terms })
}

pub fn json_colour_poly<R: Scalar>(p: &ColourPoly<R>) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, r)| {
            let vars: serde_json::Map<String, Value> =
                m.vars.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            json!({ "rat": r.to_string(), "hpow": m.hpow, "vars": vars })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn json_matrix<R: Scalar>(m: &CMatrix<R>) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array((0..m.cols()).map(|j| json_coeff(m.entry(i, j))).collect()))
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

/// Wrap a payload with the schema marker.
pub fn envelope(kind: &str, payload: Value) -> Value {
    json!({ "schema": SCHEMA, "kind": kind, "value": payload })
}
