//! Structured (JSON) output: a stable document listing the session
//! configuration, the input, and the result flattened into scalar-monomial
//! terms.

use serde::Serialize;

use qsuperspace::calculus::FormMonomial;
use qsuperspace::linear::ShowMono;
use qsuperspace::logext::calculus::MFormMonomial;
use qsuperspace::ParamCoeff;

use crate::eval::Value;
use crate::session::SessionConfig;

#[derive(Serialize)]
struct ConfigDoc {
    m: usize,
    n: usize,
    z: Vec<i64>,
    algebra: String,
}

#[derive(Serialize)]
struct CoeffDoc {
    rational: String,
    p_exps: Vec<i64>,
    h_exps: Vec<u32>,
}

#[derive(Serialize)]
struct TermDoc {
    coeff: CoeffDoc,
    monomial: String,
    wedge: String,
}

#[derive(Serialize)]
struct ResultDoc {
    config: ConfigDoc,
    input: String,
    result_terms: Vec<TermDoc>,
}

fn coeff_terms(c: &ParamCoeff) -> Vec<CoeffDoc> {
    c.iter_terms()
        .map(|(p, h, r)| CoeffDoc {
            rational: r.to_string(),
            p_exps: p.to_vec(),
            h_exps: h.to_vec(),
        })
        .collect()
}

fn push_terms(out: &mut Vec<TermDoc>, monomial: String, wedge: String, c: &ParamCoeff) {
    for coeff in coeff_terms(c) {
        out.push(TermDoc {
            coeff,
            monomial: monomial.clone(),
            wedge: wedge.clone(),
        });
    }
}

fn wedge_text_a(m: &FormMonomial) -> String {
    let mut parts = Vec::new();
    for (i, &w) in m.wedge().iter().enumerate() {
        if w == 1 {
            parts.push(format!("d(a{})", i + 1));
        } else if w > 1 {
            parts.push(format!("d(a{})^{}", i + 1, w));
        }
    }
    parts.join("*")
}

fn wedge_text_m(m: &MFormMonomial) -> String {
    let mut parts = Vec::new();
    for (i, &w) in m.wedge().iter().enumerate() {
        if w == 1 {
            parts.push(format!("d(x{})", i + 1));
        } else if w > 1 {
            parts.push(format!("d(x{})^{}", i + 1, w));
        }
    }
    parts.join("*")
}

fn result_terms(value: &Value) -> Vec<TermDoc> {
    let mut out = Vec::new();
    match value {
        Value::Scalar(c) => push_terms(&mut out, "1".into(), String::new(), c),
        Value::A(e) => {
            for (m, c) in e.terms() {
                push_terms(&mut out, ShowMono(m).to_string(), String::new(), c);
            }
        }
        Value::AForm(e) => {
            for (m, c) in e.terms() {
                push_terms(&mut out, ShowMono(&m.base).to_string(), wedge_text_a(m), c);
            }
        }
        Value::ATensor(e) => {
            for (pair, c) in e.terms().terms() {
                push_terms(&mut out, ShowMono(pair).to_string(), String::new(), c);
            }
        }
        Value::M(e) => {
            for (m, c) in e.terms() {
                push_terms(&mut out, ShowMono(m).to_string(), String::new(), c);
            }
        }
        Value::MForm(e) => {
            for (m, c) in e.terms() {
                push_terms(&mut out, ShowMono(&m.base).to_string(), wedge_text_m(m), c);
            }
        }
        Value::MTensor(e) => {
            for (pair, c) in e.terms() {
                push_terms(&mut out, ShowMono(pair).to_string(), String::new(), c);
            }
        }
    }
    out
}

/// The stable document for one evaluated expression.
pub fn render_json(session: &SessionConfig, input: &str, value: &Value) -> String {
    let doc = ResultDoc {
        config: ConfigDoc {
            m: session.param.even_count(),
            n: session.param.odd_count(),
            z: session.param.weights().to_vec(),
            algebra: session.algebra.to_string(),
        },
        input: input.to_string(),
        result_terms: result_terms(value),
    };
    serde_json::to_string_pretty(&doc).expect("serializable document")
}
