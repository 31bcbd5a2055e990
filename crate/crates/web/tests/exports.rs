use sdcalc_web::{bernoulli_curve_json, bernoulli_table_json, hoggatt_triangle_json};
use serde_json::Value;

fn parse(s: Result<String, String>) -> Value {
    serde_json::from_str(&s.unwrap()).unwrap()
}

#[test]
fn tetrahedral_table() {
    let v = parse(bernoulli_table_json(3, 1, 4, 4));
    let values: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["value"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["1", "-1/4", "3/20", "-7/40", "97/280"]);
    assert_eq!(v[4]["decimal"], "0.3464");
}

#[test]
fn curve_matches_exact_polynomial() {
    let v = parse(bernoulli_curve_json(2, 2, 2, -1.0, 2.0, 7));
    let coeffs: Vec<&str> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    let xs = v["xs"].as_array().unwrap();
    let ys = v["ys"].as_array().unwrap();
    assert_eq!(xs.len(), 7);
    assert_eq!(coeffs.last(), Some(&"1"));
    assert_eq!(xs[0], -1.0);
    assert_eq!(xs[6], 2.0);
    // B_{2,2}(2;x) is monic of degree 2 with constant term B_{2,2}(2) = 1/30.
    assert_eq!(coeffs[0], "1/30");
    let c1: f64 = {
        let (p, q) = coeffs[1].split_once('/').unwrap_or((coeffs[1], "1"));
        p.parse::<f64>().unwrap() / q.parse::<f64>().unwrap()
    };
    for (x, y) in xs.iter().zip(ys) {
        let x = x.as_f64().unwrap();
        let expect = x * x + c1 * x + 1.0 / 30.0;
        assert!((y.as_f64().unwrap() - expect).abs() < 1e-12);
    }
}

#[test]
fn narayana_triangle() {
    let v = parse(hoggatt_triangle_json(2, 5));
    assert_eq!(v[4], serde_json::json!(["1", "10", "20", "10", "1"]));
    assert_eq!(v[0], serde_json::json!(["1"]));
}

#[test]
fn bad_input_is_an_error() {
    assert!(bernoulli_table_json(0, 1, 4, 4).is_err());
    assert!(bernoulli_table_json(2, 0, 4, 4).is_err());
    assert!(bernoulli_curve_json(2, 1, 3, 1.0, 1.0, 10).is_err());
    assert!(bernoulli_curve_json(2, 1, 3, 0.0, 1.0, 1).is_err());
    assert!(hoggatt_triangle_json(2, 500).is_err());
}
