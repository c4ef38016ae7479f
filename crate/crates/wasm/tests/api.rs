use serde_json::Value;

const R1: &str = r#"{ "p": 101, "vars": ["x", "y"], "ci": ["x^2", "y^2"] }"#;
const K: &str = "gens: [0]\nrelations: [[x, y]]";

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn operations_return_reports() {
    let v = parse(&civariety_wasm::variety(R1, K));
    assert_eq!(v["dimension"], 2);
    let c = parse(&civariety_wasm::cut(R1, K, "chi1"));
    assert_eq!(c["variety"][0], "chi1");
    let d = parse(&civariety_wasm::decompose(R1, "gens: [0, 0]\nrelations: [[x, 0], [0, y]]"));
    assert_eq!(d["summands"].as_array().unwrap().len(), 2);
    let b = parse(&civariety_wasm::betti(R1, K, 3));
    assert_eq!(b["betti"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn errors_are_reports_too() {
    let v = parse(&civariety_wasm::variety(R1, "gens: [0]\nrelations: [[w]]"));
    assert_eq!(v["status"], "error");
    assert_eq!(v["error"]["reason"], "unknown_variable");
}
