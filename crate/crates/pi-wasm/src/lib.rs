//! Browser bindings: string-in, JSON-string-out wrappers around the
//! recognizers and the instance generator, thin enough for a static page
//! with no framework. Every function totalizes errors into
//! `{"status":"error","message":...}` instead of throwing.

use wasm_bindgen::prelude::*;

use pi_core::representation::interval_realization;
use pi_core::{
    format_graph, parse_graph, parse_order, random_pi_instance, recognize_graph, recognize_order,
    OrderOutcome, RecognitionOutcome,
};

/// JSON string literal with the mandatory escapes.
fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn error_json(message: &str) -> String {
    format!("{{\"status\":\"error\",\"message\":{}}}", json_string(message))
}

/// Decide PI membership of a graph given in file format (`n m` header, one
/// `u v` edge per line, `#` comments). Returns the same JSON as the
/// command-line recognizer.
#[wasm_bindgen]
pub fn recognize_edge_list(text: &str) -> String {
    let g = match parse_graph(text) {
        Ok(g) => g,
        Err(e) => return error_json(&e.to_string()),
    };
    match recognize_graph(&g) {
        RecognitionOutcome::Pi(acc) => {
            format!("{{\"status\":\"pi\",{}", &acc.representation.to_json()[1..])
        }
        RecognitionOutcome::NotPi(stage) => format!(
            "{{\"status\":\"not_pi\",\"stage\":\"{}\",\"witness\":{}}}",
            stage.name(),
            stage.witness_json()
        ),
    }
}

/// Decide whether an order given in file format (`u v` meaning `u < v`,
/// transitively closed) is a linear-interval order.
#[wasm_bindgen]
pub fn recognize_order_text(text: &str) -> String {
    let p = match parse_order(text) {
        Ok(p) => p,
        Err(e) => return error_json(&e.to_string()),
    };
    match recognize_order(&p) {
        OrderOutcome::LinearInterval(acc) => {
            let ranks: Vec<String> =
                (0..p.n()).map(|u| acc.realizer.p1.rank(u).to_string()).collect();
            let intervals = match interval_realization(&acc.realizer.p2) {
                Ok(iv) => iv,
                Err(e) => return error_json(&format!("internal: {e}")),
            };
            let pairs: Vec<String> =
                intervals.iter().map(|(l, r)| format!("[{l},{r}]")).collect();
            format!(
                "{{\"status\":\"linear_interval\",\"P1\":[{}],\"P2\":[{}]}}",
                ranks.join(","),
                pairs.join(",")
            )
        }
        OrderOutcome::NotLinearInterval(stage) => format!(
            "{{\"status\":\"not_linear_interval\",\"stage\":\"{}\",\"witness\":{}}}",
            stage.name(),
            stage.witness_json()
        ),
    }
}

/// A graph drawn from a random PI representation, in file format with the
/// seed recorded in a header comment. Always accepted by the recognizer.
#[wasm_bindgen]
pub fn generate_instance(n: u32, seed: u32) -> String {
    let (g, _) = random_pi_instance(n as usize, seed as u64);
    format!("# seed {seed}\n{}", format_graph(&g))
}
