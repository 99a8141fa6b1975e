//! wasm-bindgen entry points for the browser demo. Every function takes the
//! graph as text and returns a JSON document (`{"error": ...}` on failure),
//! so the same calls work natively in tests.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use vaw_core::coxeter::{classify, parse_graph, Kind};
use vaw_core::presentations::dimension_report;
use vaw_core::roots::{enumerate_roots, MHat};
use vaw_core::virtual_artin::VAWord;
use vaw_core::wordproblem::va_solve;
use vaw_core::Result;

// the browser tab should stay responsive
const WEB_CAP: usize = 20_000;

fn respond(r: Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

/// Type of each component, plus dimension bounds when they apply.
#[wasm_bindgen]
pub fn classify_graph(graph: &str) -> String {
    respond((|| {
        let g = parse_graph(graph)?;
        let class = classify(&g);
        let components: Vec<Value> = class
            .components
            .iter()
            .map(|c| {
                let names: Vec<&str> = c.vertices.iter().map(|&i| g.vertices()[i].as_str()).collect();
                json!({ "vertices": names, "kind": c.kind.to_string(), "family": c.family })
            })
            .collect();
        let dims = dimension_report(&g).ok().map(|d| d.to_string());
        Ok(json!({
            "kind": class.kind.to_string(),
            "components": components,
            "dims": dims,
            "field": g.context().minpoly_string(),
        }))
    })())
}

/// Roots (all of them for finite W, else those within `depth`) and the
/// labels of Γ̂ between them.
#[wasm_bindgen]
pub fn root_graph(graph: &str, depth: usize) -> String {
    respond((|| {
        let g = parse_graph(graph)?;
        let finite = classify(&g).kind == Kind::Spherical;
        let system = enumerate_roots(&g, if finite { None } else { Some(depth) }, WEB_CAP)?;
        let mh = MHat::new(&g, depth, WEB_CAP)?;
        let roots = system.roots();
        let mut labels = Vec::new();
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                let m = mh.roots(&roots[i], &roots[j])?;
                if m.finite() != Some(2) {
                    labels.push(json!([i, j, m.to_string()]));
                }
            }
        }
        Ok(json!({
            "complete": system.is_complete(),
            "roots": roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "labels": labels,
        }))
    })())
}

/// Word problem in VA[Γ] for a word like `t:s1 s:s2^-1`.
#[wasm_bindgen]
pub fn solve_word(graph: &str, word: &str, depth: usize) -> String {
    respond((|| {
        let g = parse_graph(graph)?;
        let w = VAWord::parse(&g, word)?;
        let mh = MHat::new(&g, depth, WEB_CAP)?;
        let out = va_solve(&w, &mh, WEB_CAP)?;
        Ok(serde_json::to_value(&out).expect("serializable"))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn classify_and_dims() {
        let v = parse(&classify_graph("family tA 2"));
        assert_eq!(v["kind"], "affine");
        assert_eq!(v["dims"], "cd(KVA)<=3 vcd(VA)<=5");
        assert!(parse(&classify_graph("family Z 3"))["error"].is_string());
    }

    #[test]
    fn roots_and_labels() {
        let v = parse(&root_graph("family A 2", 8));
        assert_eq!(v["roots"].as_array().unwrap().len(), 6);
        // 6 unordered pairs with label 3, the other 9 are inf (no 2s in A2)
        let labels = v["labels"].as_array().unwrap();
        assert_eq!(labels.iter().filter(|l| l[2] == "3").count(), 6);
        assert_eq!(labels.len(), 15);
    }

    #[test]
    fn solving() {
        assert_eq!(parse(&solve_word("family B 2", "s:s1 s:s2 s:s1 s:s2 s:s1^-1 s:s2^-1 s:s1^-1 s:s2^-1", 8))["verdict"], "trivial");
        assert_eq!(parse(&solve_word("family A 2", "t:s1", 8))["verdict"], "nontrivial");
        assert!(parse(&solve_word("family A 2", "q:s1", 8))["error"].is_string());
    }
}
