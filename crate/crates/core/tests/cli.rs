use std::fs;

use rrlrc::cli::{run, EXIT_DOMAIN, EXIT_INCONSISTENT, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("rrlrc").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = call(&full);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn analyze_length_25() {
    let v = json(&["analyze", "--p", "5", "--m", "1", "--s", "2", "--eta", "1", "--lambda0", "4", "--i", "8"]);
    assert_eq!(v["d"], 3);
    assert_eq!(v["n"], 25);
    assert_eq!(v["k"], 17);
}

#[test]
fn analyze_class1() {
    let v = json(&["analyze", "--p", "2", "--s", "6", "--lambda0", "1", "--i", "33"]);
    assert_eq!(v["optimal"], true);
    assert_eq!(v["classes"][0]["table1_class"], 1);
}

#[test]
fn analyze_full_space_is_domain_error() {
    let (code, _, err) = call(&["analyze", "--p", "5", "--s", "2", "--lambda0", "4", "--i", "0"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("degenerate"));
}

#[test]
fn analyze_pair_and_lambda_power() {
    let v = json(&["analyze-pair", "--p", "7", "--s", "1", "--lambda0", "2", "--i", "3", "--j", "7"]);
    assert_eq!(v["d"], 8);
    assert_eq!(v["r"], 1);
    // g^0 = 1
    let v = json(&["analyze", "--p", "3", "--s", "2", "--lambda0-power", "0", "--i", "4"]);
    assert_eq!(v["classes"][0]["table1_class"], 2);
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["analyze", "--p", "5"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
    assert_eq!(call(&["analyze", "--p", "5", "--s", "1", "--i", "1"]).0, EXIT_USAGE);
}

#[test]
fn enumerations() {
    let v = json(&["enumerate", "--p", "2", "--m", "2", "--s", "4", "--eta", "3", "--lambda0", "2"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let is: Vec<u64> = rows.iter().map(|r| r["i"].as_u64().unwrap()).collect();
    assert_eq!(is, vec![1, 2, 4, 8]);

    let v = json(&["enumerate-pair", "--p", "5", "--s", "1", "--lambda0", "1"]);
    assert!(v["optimal"]
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["i"] == 0 && r["j"] == 5 && r["k"] == 5));

    let (code, _, err) = call(&["enumerate-pair", "--p", "7", "--s", "1", "--lambda0", "3"]);
    assert_eq!(code, EXIT_DOMAIN, "{err}");
}

#[test]
fn budget_from_environment_flag() {
    let (code, _, err) = call(&["--budget", "3", "enumerate-pair", "--p", "5", "--s", "1", "--lambda0", "1"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("budget"));
}

#[test]
fn classify_and_irreducibility() {
    let v = json(&["classify", "--p", "5", "--s", "1", "--lambda0", "1", "--i", "3"]);
    assert_eq!(v[0]["table1_class"], 5);
    assert_eq!(v[0]["t"], 3);

    let v = json(&["irreducible", "--p", "2", "--m", "2", "--a", "2", "--eta", "9"]);
    assert_eq!(v["irreducible"], true);
    let v = json(&["admissible-eta", "--p", "2", "--m", "2", "--a", "2", "--max", "30"]);
    assert_eq!(v, serde_json::json!([1, 3, 9, 27]));
    let v = json(&["admissible-eta", "--p", "7", "--m", "3", "--a-power", "19", "--max", "30"]);
    assert_eq!(v, serde_json::json!([1, 2, 3, 6, 9, 18, 27]));
}

#[test]
fn encode_repair_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let code_args = ["--p", "5", "--s", "2", "--lambda0", "4", "--i", "8"];
    let mut args = vec!["encode"];
    args.extend_from_slice(&code_args);
    let message = "1,2,3,4,0,1,2,3,4,0,1,2,3,4,0,1,2";
    args.extend_from_slice(&["--message", message]);
    let (code, word, err) = call(&args);
    assert_eq!(code, EXIT_OK, "{err}");

    let mut lines: Vec<&str> = word.lines().collect();
    assert_eq!(lines.len(), 25);
    lines[11] = "?";
    let path = dir.path().join("word.txt");
    fs::write(&path, lines.join("\n")).unwrap();
    let mut args = vec!["repair"];
    args.extend_from_slice(&code_args);
    let p = path.to_str().unwrap();
    args.extend_from_slice(&["--word", p]);
    let (code, repaired, err) = call(&args);
    assert_eq!(code, EXIT_OK, "{err}");
    assert_eq!(repaired, word);

    // corrupt a helper of the erased symbol: repair must flag the word
    let v = json(&{
        let mut a = vec!["repair"];
        a.extend_from_slice(&code_args);
        a.extend_from_slice(&["--word", p]);
        a
    });
    let helper = v["plan"]["helper_indices"][0].as_u64().unwrap() as usize;
    let original: u32 = lines[helper].parse().unwrap();
    let corrupted = ((original + 1) % 5).to_string();
    lines[helper] = &corrupted;
    fs::write(&path, lines.join("\n")).unwrap();
    let (code, _, _) = call(&args);
    assert_eq!(code, EXIT_INCONSISTENT);
}

#[test]
fn repair_from_code_file() {
    let dir = tempfile::tempdir().unwrap();
    let analysis = json(&["analyze-pair", "--p", "7", "--s", "1", "--lambda0", "2", "--i", "1", "--j", "5"]);
    let code_path = dir.path().join("code.json");
    fs::write(&code_path, analysis["code"].to_string()).unwrap();
    let code_file = code_path.to_str().unwrap();

    let (code, word, err) = call(&["encode", "--code", code_file, "--message", "3,1,4,1,5,0,2,6"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let word_path = dir.path().join("w.txt");
    fs::write(&word_path, &word).unwrap();
    let (code, repaired, err) =
        call(&["repair", "--code", code_file, "--word", word_path.to_str().unwrap(), "--erased", "4"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert_eq!(repaired, word);

    let (code, _, _) = call(&["repair", "--code", "/nonexistent.json", "--word", word_path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn tables_and_oracle() {
    for name in ["table1-instances", "example-25", "example-48", "example-64", "example-54"] {
        let (code, out, err) = call(&["tables", name]);
        assert_eq!(code, EXIT_OK, "{name}: {err}");
        assert!(out.contains("golden: match"));
    }
    assert_eq!(call(&["tables", "example-99"]).0, EXIT_DOMAIN);

    let (code, out, _) = call(&["oracle", "--check", "duality", "--grid", "default"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("0 mismatches"));
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--json", "enumerate", "--p", "2", "--s", "6", "--lambda0", "1"];
    assert_eq!(call(&args).1, call(&args).1);
}
