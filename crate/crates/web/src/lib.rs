//! Browser bindings for `biclique-cover`.
//!
//! Each export takes plain numbers or text and returns a JSON string, so the
//! page needs no generated glue beyond what `wasm-bindgen` emits. Errors come
//! back as a rejected string.

use biclique_cover::{
    balanced_cover, bitstring_cover, bounds_report, is_complete_direct, partition_cover,
    read_covering, size_sum_certificate, write_covering, Covering, RowMatrix,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest `n` the page will construct; the matrix view is `n` rows wide.
pub const MAX_DEMO_N: u32 = 512;

fn describe(cov: &Covering, bound: Option<u32>) -> Result<Value, String> {
    let coverage = is_complete_direct(cov).map_err(|e| e.to_string())?;
    let cert = size_sum_certificate(cov).map_err(|e| e.to_string())?;
    let matrix = RowMatrix::build(cov).map_err(|e| e.to_string())?;
    let rows: Vec<String> = (0..matrix.rows()).map(|r| matrix.row_string(r)).collect();
    let within = bound.map(|x| cov.max_component_size() <= x as usize);
    Ok(json!({
        "n": cov.n,
        "c": cov.len(),
        "max_component": cov.max_component_size(),
        "within_bound": within,
        "complete": coverage.is_complete(),
        "uncovered": coverage.witness().map(|(u, v)| [u, v]),
        "size_sum": cert.size_sum,
        "threshold": cert.threshold.approx(),
        "size_bound_holds": cert.size_bound_holds(),
        "size_bound_tight": cert.size_bound_tight(),
        "copies_sum": cert.copies_sum.to_string(),
        "holes": cert.holes.to_string(),
        "pigeonhole_holds": cert.pigeonhole_holds(),
        "star_counts": cert.star_counts,
        "matrix": rows,
    }))
}

/// Builds a covering with `method` (`bitstring`, `balanced` or `partition`)
/// and returns it with its matrix and certificate.
#[wasm_bindgen]
pub fn construct(n: u32, x: Option<u32>, method: &str) -> Result<String, String> {
    if n == 0 || n > MAX_DEMO_N {
        return Err(format!("n must be between 1 and {MAX_DEMO_N}, got {n}"));
    }
    let cov = match method {
        "bitstring" => bitstring_cover(n),
        "balanced" if n.is_multiple_of(2) => balanced_cover(n / 2),
        "balanced" => return Err(format!("balanced needs an even n, got {n}")),
        "partition" => {
            let x = x.ok_or("partition needs x")?;
            partition_cover(n, x)
        }
        other => return Err(format!("unknown method '{other}'")),
    }
    .map_err(|e| e.to_string())?;
    let bound = (method == "partition").then_some(x).flatten();
    let mut out = describe(&cov, bound)?;
    out["method"] = json!(method);
    out["covering"] = json!(write_covering(&cov).map_err(|e| e.to_string())?);
    Ok(out.to_string())
}

/// Lower and upper bounds on the number of bicliques for `(n, x)`.
#[wasm_bindgen]
pub fn bounds(n: u32, x: u32) -> Result<String, String> {
    let r = bounds_report(n as u64, x as u64, None).map_err(|e| e.to_string())?;
    Ok(json!({
        "n": r.n,
        "x": r.x,
        "lower_edges": r.lower_edges,
        "lower_size": r.lower_size,
        "lower_size_stated": r.lower_size_stated,
        "lower_combined": r.lower_combined,
        "upper_formula": r.upper_formula,
        "ratio": r.ratio_decimal(),
        "ratio_exact": r.ratio_exact(),
    })
    .to_string())
}

/// Checks a covering given in the JSON file format.
#[wasm_bindgen]
pub fn verify(text: &str, x: Option<u32>) -> Result<String, String> {
    let cov = read_covering(text.as_bytes()).map_err(|e| e.to_string())?;
    if cov.n > MAX_DEMO_N {
        return Err(format!(
            "n must be at most {MAX_DEMO_N} here, got {}",
            cov.n
        ));
    }
    Ok(describe(&cov, x)?.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: Result<String, String>) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn construct_bitstring_four() {
        let v = parse(construct(4, None, "bitstring"));
        assert_eq!(v["c"], 2);
        assert_eq!(v["size_sum"], 8);
        assert_eq!(v["size_bound_tight"], true);
        assert_eq!(v["matrix"], json!(["00", "01", "10", "11"]));
        assert_eq!(v["copies_sum"], "4");
        assert_eq!(v["holes"], "4");
    }

    #[test]
    fn construct_rejects_bad_input() {
        assert!(construct(0, None, "bitstring").is_err());
        assert!(construct(MAX_DEMO_N + 1, None, "bitstring").is_err());
        assert!(construct(7, None, "balanced").is_err());
        assert!(construct(8, None, "partition").is_err());
        assert!(construct(8, Some(0), "partition").is_err());
        assert!(construct(8, None, "greedy").is_err());
    }

    #[test]
    fn partition_respects_bound() {
        let v = parse(construct(10, Some(2), "partition"));
        assert_eq!(v["complete"], true);
        assert_eq!(v["within_bound"], true);
        assert_eq!(v["c"], 13);
    }

    #[test]
    fn verify_round_trips_constructed_text() {
        let built = parse(construct(12, Some(3), "partition"));
        let v = parse(verify(built["covering"].as_str().unwrap(), Some(3)));
        assert_eq!(v["complete"], true);
        assert_eq!(v["matrix"], built["matrix"]);
    }

    #[test]
    fn verify_reports_gap_and_parse_errors() {
        let gap =
            r#"{"n": 3, "bicliques": [{"left": [0], "right": [1]}, {"left": [1], "right": [2]}]}"#;
        let v = parse(verify(gap, None));
        assert_eq!(v["complete"], false);
        assert_eq!(v["uncovered"], json!([0, 2]));
        let err = verify(
            r#"{"n": 3, "bicliques": [{"left": [1, 0], "right": [2]}]}"#,
            None,
        )
        .unwrap_err();
        assert!(err.contains("line 1"), "{err}");
    }

    #[test]
    fn bounds_tight_cell() {
        let v = parse(bounds(4, 2));
        assert_eq!(v["lower_combined"], 2);
        assert_eq!(v["upper_formula"], 2);
        assert_eq!(v["ratio_exact"], "1/1");
        assert!(bounds(0, 2).is_err());
    }
}
