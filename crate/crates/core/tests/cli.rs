use tconn::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("tconn").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn gens_closed_form() {
    let (code, out, _) = call(&["gens", "--graph", "path:7", "--t", "4", "--closed-form"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"graph\":\"FhCGG\",\"t\":4,\"method\":\"closed_form\",\"gens\":[\"x4\",\"x1*x5\",\"x2*x5\",\"x2*x6\",\"x3*x5\",\"x3*x6\",\"x3*x7\"]}\n"
    );
    let (_, brute, _) = call(&["gens", "--graph", "path:7", "--t", "4"]);
    assert_eq!(brute.replace("brute_force", "closed_form"), out);
    let (code, _, err) = call(&["gens", "--graph", "star:3", "--t", "3", "--closed-form"]);
    assert_eq!(code, 2);
    assert!(err.contains("closed-form"));
}

#[test]
fn simis_and_packing() {
    let (code, out, _) = call(&["simis", "--graph", "cycle:6", "--t", "3", "--smax", "4"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("\"s_max\":4,\"verdict\":\"equal_up_to\"}\n"), "{out}");
    let (code, out, _) = call(&["packing", "--graph", "cycle:12", "--t", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("{\"packed\":false,\"witness\":{\"zeros\":[1,5,9],\"ones\":[]"), "{out}");
}

#[test]
fn output_is_independent_of_jobs() {
    let args = ["verify-theorem", "--n-max", "4"];
    let (_, one, _) = call(&[&args[..], &["--jobs", "1"]].concat());
    let (_, three, _) = call(&[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(one, three);
}

#[test]
fn lp_and_gap_search() {
    let (code, out, _) = call(&["lp", "--graph", "cycle:7", "--t", "3", "--alpha", "1,1,1,1,1,1,1"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("\"tau\":3,\"nu\":2}\n"), "{out}");
    let (code, _, _) = call(&["lp", "--graph", "cycle:7", "--t", "3", "--alpha", "1,1"]);
    assert_eq!(code, 2);
    let (code, out, _) = call(&["gap-search", "--graph", "cycle:6", "--t", "3", "--bound", "1"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("\"witness\":null}\n"), "{out}");
}

#[test]
fn graph_specs() {
    let dir = std::env::temp_dir().join(format!("tconn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("k4.g6");
    std::fs::write(&file, "C~\n").unwrap();
    let spec = format!("file:{}", file.display());
    let (code, out, _) = call(&["konig", "--graph", &spec, "--t", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("{\"konig\":true"));
    let (_, same, _) = call(&["konig", "--graph", "complete:4", "--t", "4"]);
    assert_eq!(out, same);
    assert_eq!(call(&["konig", "--graph", "cycle:x", "--t", "3"]).0, 2);
    assert_eq!(call(&["konig", "--graph", "path:3", "--t", "4"]).0, 2);
}

#[test]
fn report_round_trip_and_schema_errors() {
    let dir = std::env::temp_dir().join(format!("tconn-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let path_str = path.to_str().unwrap();
    let (code, _, _) = call(&["verify-theorem", "--n-max", "4", "--output", path_str]);
    assert_eq!(code, 0);
    let written = std::fs::read_to_string(&path).unwrap();
    let (code, echoed, _) = call(&["check-report", "--input", path_str]);
    assert_eq!(code, 0);
    assert_eq!(echoed, written);

    std::fs::write(&path, "{\"rows\":[],\"disagreements\":0}").unwrap();
    assert_eq!(call(&["check-report", "--input", path_str]).1, "{\"rows\":[],\"disagreements\":0}\n");
    std::fs::write(&path, "{\"rows\":[],\"disagreements\":0,\"extra\":true}").unwrap();
    assert_eq!(call(&["check-report", "--input", path_str]).0, 2);

    let bad = written.replacen("\"agrees\":true", "\"agrees\":false", 1);
    std::fs::write(&path, bad).unwrap();
    assert_eq!(call(&["check-report", "--input", path_str]).0, 2);
}

#[test]
fn resource_guard_and_usage() {
    let (code, _, err) = call(&["simis", "--graph", "cycle:9", "--t", "3", "--smax", "4", "--cap", "10"]);
    assert_eq!(code, 3);
    assert!(err.contains("size limit"));
    assert_eq!(call(&["gap-search", "--graph", "cycle:12", "--t", "3", "--bound", "9"]).0, 3);
    assert_eq!(call(&["simis", "--t", "3"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
}

#[test]
fn cycle_minor_chain() {
    let (code, out, _) = call(&["cycle-minor", "--n", "12", "--t", "6"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"target_n\":10,\"target_t\":5") && out.contains("\"target_n\":5,\"target_t\":2"));
    assert_eq!(call(&["cycle-minor", "--n", "7", "--t", "3"]).1, "[{\"kind\":\"not_konig\",\"n\":7,\"t\":3}]\n");
    assert_eq!(call(&["cycle-minor", "--n", "9", "--t", "3"]).0, 2);
}
