//! Browser bindings for the `pgl2q` workbench.
//!
//! Each export takes the same text syntax as the command-line tool and
//! returns a JSON string, or throws with the parse or domain error.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use pgl2q::decompose::decompose_traced;
use pgl2q::torsion::{conjugator_to_canonical, order_of, OrderClass};
use pgl2q::{ProjMat2, Word};

fn describe(m: &ProjMat2) -> Value {
    json!({
        "matrix": m.to_string(),
        "det": m.det().to_string(),
        "pdet": m.pdet().to_string(),
        "psl": m.is_psl(),
        "order": order_of(m).to_string(),
        "tau": m.trace_sq_over_det().to_string(),
    })
}

/// Evaluates a word such as `"T U H(2)^-1"`.
pub fn eval_json(word: &str) -> Result<Value, String> {
    let w: Word = word.parse().map_err(|e: pgl2q::Error| e.to_string())?;
    let mut out = describe(&w.eval());
    out["reduced"] = json!(w.free_reduce().to_string());
    Ok(out)
}

/// Decomposes a matrix such as `"[[2,1],[1,1]]"` into `T`, `U`, `V`, `H(p)`.
pub fn decompose_json(matrix: &str) -> Result<Value, String> {
    let m: ProjMat2 = matrix.parse().map_err(|e: pgl2q::Error| e.to_string())?;
    let (word, branch) = decompose_traced(&m);
    Ok(json!({
        "matrix": m.to_string(),
        "word": word.to_string(),
        "branch": branch.to_string(),
        "letters": word.len(),
        "verified": word.eval() == m,
    }))
}

/// Order class, `τ`, and for orders 3, 4 and 6 a conjugator to the
/// canonical representative.
pub fn classify_json(matrix: &str) -> Result<Value, String> {
    let m: ProjMat2 = matrix.parse().map_err(|e: pgl2q::Error| e.to_string())?;
    let mut out = describe(&m);
    if let OrderClass::Finite(n) = order_of(&m) {
        if n >= 3 {
            let w = conjugator_to_canonical(&m).map_err(|e| e.to_string())?;
            out["conjugator"] = json!(w.conjugator.to_string());
            out["exponent"] = json!(w.exponent);
            out["verified"] = json!(w.verify(&m));
        }
    }
    Ok(out)
}

fn export(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn eval_word(word: &str) -> Result<String, JsError> {
    export(eval_json(word))
}

#[wasm_bindgen]
pub fn decompose_matrix(matrix: &str) -> Result<String, JsError> {
    export(decompose_json(matrix))
}

#[wasm_bindgen]
pub fn classify_matrix(matrix: &str) -> Result<String, JsError> {
    export(classify_json(matrix))
}
