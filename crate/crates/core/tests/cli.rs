use std::path::PathBuf;
use std::process::Command;

use civariety::resolve::{present_module, RingSpec};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn civar(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_civar")).args(args).output().expect("binary runs");
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

fn civar_json(args: &[&str]) -> (Value, i32) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (out, code) = civar(&a);
    (serde_json::from_str(&out).expect("json report"), code)
}

#[test]
fn variety_of_residue_field() {
    let (r, code) = civar_json(&["variety", &data("ring1.json"), &data("k_xy.mod")]);
    assert_eq!(code, 0);
    assert_eq!(r["status"], "ok");
    assert_eq!(r["dimension"], 2);
    assert_eq!(r["annihilator"], serde_json::json!(["0"]));
    assert_eq!(r["stabilized"], true);
}

#[test]
fn cut_emits_module_file() {
    let out = std::env::temp_dir().join(format!("civar_cut_{}.mod", std::process::id()));
    let (r, code) = civar_json(&[
        "cut",
        &data("ring1.json"),
        &data("k_xy.mod"),
        "--eta",
        "chi1",
        "--verify",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["variety"], serde_json::json!(["chi1"]));
    assert_eq!(r["verdict"], true);
    let text = std::fs::read_to_string(&out).unwrap();
    std::fs::remove_file(&out).ok();
    assert_eq!(text, r["cut_module"]["text"].as_str().unwrap());
    let ring = RingSpec::from_json(&std::fs::read_to_string(data("ring1.json")).unwrap(), Default::default()).unwrap();
    assert_eq!(present_module(&text, &ring).unwrap().to_text(), text);

    // the emitted file feeds back in
    let path = std::env::temp_dir().join(format!("civar_cut_in_{}.mod", std::process::id()));
    std::fs::write(&path, &text).unwrap();
    let (r, code) = civar_json(&["variety", &data("ring1.json"), path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert_eq!(r["dimension"], 1);
}

#[test]
fn carlson_pass_and_premise_failure() {
    let (r, code) =
        civar_json(&["check-carlson", &data("ring1.json"), &data("m1m2.mod"), "--a1", "chi2", "--a2", "chi1"]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"], true);
    assert_eq!(r["c1"]["text"], "gens: [0]\nrelations: [[x]]\n");
    assert_eq!(r["c2"]["text"], "gens: [0]\nrelations: [[y]]\n");

    let (r, code) =
        civar_json(&["check-carlson", &data("ring1.json"), &data("m1m2.mod"), "--a1", "chi1", "--a2", "chi1"]);
    assert_eq!(code, 1);
    assert_eq!(r["error"]["reason"], "premise_failed");
}

#[test]
fn realize_round_trip() {
    let (r, code) = civar_json(&["realize", &data("ring3.json"), "--eta", "chi1", "--eta", "chi2+chi3", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(r["matches"], true);
    assert_eq!(r["mcm"], true);
    assert_eq!(r["dimension"], 1);
}

#[test]
fn exit_codes_and_reasons() {
    let (r, code) = civar_json(&["variety", &data("ring4.json"), &data("k_xy.mod"), "--max-pairs", "1"]);
    assert_eq!((code, r["error"]["kind"].as_str()), (2, Some("budget")));
    assert_eq!(r["error"]["reason"], "pair_budget");

    let (r, code) =
        civar_json(&["variety", &data("ring3.json"), &data("k_xyz.mod"), "--steps", "2", "--max-steps", "2"]);
    assert_eq!((code, r["error"]["reason"].as_str()), (2, Some("not_stabilized")));

    let (r, code) = civar_json(&["decompose", &data("ring4.json"), &data("k_x.mod")]);
    assert_eq!((code, r["error"]["reason"].as_str()), (1, Some("infinite_length")));

    let (r, code) = civar_json(&["variety", &data("ring1.json"), &data("k_xyz.mod")]);
    assert_eq!((code, r["error"]["reason"].as_str()), (1, Some("unknown_variable")));

    let (r, code) = civar_json(&["variety", &data("missing.json"), &data("k_xy.mod")]);
    assert_eq!((code, r["error"]["reason"].as_str()), (1, Some("io")));

    let (r, code) = civar_json(&["cut", &data("ring1.json"), &data("k_xy.mod"), "--eta", "chi1+chi2^2"]);
    assert_eq!((code, r["error"]["reason"].as_str()), (1, Some("inhomogeneous_element")));

    let (text, code) = civar(&["frobnicate"]);
    assert_eq!(code, 1);
    assert!(text.contains("reason: usage"));
}

#[test]
fn reports_are_deterministic_and_mirrored() {
    let cases: [&[&str]; 4] = [
        &["decompose", &data("ring1.json"), &data("m1m2.mod")],
        &["operators", &data("ring1.json"), &data("cyclic_xy.mod")],
        &["check-carlson", &data("ring1.json"), &data("m1m2.mod"), "--a1", "chi2", "--a2", "chi1"],
        &["resolve", &data("ring4.json"), &data("k_xy.mod"), "--steps", "3"],
    ];
    for args in cases {
        let mut a = args.to_vec();
        a.extend(["--format", "json"]);
        let (first, _) = civar(&a);
        let (second, _) = civar(&a);
        assert_eq!(first, second);
        let (text, _) = civar(args);
        let json: serde_json::Map<String, Value> = serde_json::from_str(&first).unwrap();
        let top: Vec<&str> =
            text.lines().filter(|l| !l.starts_with(' ')).map(|l| l.split(':').next().unwrap()).collect();
        let keys: Vec<&str> = json.keys().map(|k| k.as_str()).collect();
        assert_eq!(top, keys);
        assert_eq!(civariety::cli::render::to_text(&json), text);
    }
}

#[test]
fn validate_reports_module_facts() {
    let (r, code) = civar_json(&["validate", &data("ring4.json"), &data("cyclic_y.mod")]);
    assert_eq!(code, 0);
    assert_eq!((r["finite_length"].as_bool(), r["length"].as_u64()), (Some(true), Some(2)));
    assert_eq!(r["mcm"], false);
    let (r, _) = civar_json(&["validate", &data("ring4.json"), &data("free2.mod")]);
    assert_eq!(r["finite_length"], false);
    assert_eq!(r["mcm"], true);
    let (r, _) = civar_json(&["validate", &data("ring2.json")]);
    assert_eq!(r["ring"]["artinian"], true);
}
