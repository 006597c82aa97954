use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn fusionrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fusionrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, files: &[(&str, &str)]) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fusionrep-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (f, text) in files {
        std::fs::write(dir.join(f), text).unwrap();
    }
    dir
}

#[test]
fn ktheory_rv2() {
    let o = fusionrep(&["ktheory", fixture("rv2.fus").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).ends_with("Z[[u]]/( u^2 + 343u )\n"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn twisted_a4() {
    let o = fusionrep(&["twisted", fixture("a4_sl23.fus").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("module: Z<rho1>"), "{out}");
    assert!(out.contains("  x: [3]\n"), "{out}");
    assert!(out.contains("completed module: Z\n"), "{out}");
    assert!(out.contains("shifted action: trivial"), "{out}");
}

#[test]
fn json_is_versioned() {
    let o = fusionrep(&["repring", fixture("a4.fus").to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "repring");
    assert_eq!(v["presentation"], "Z[x]/( x^2 - 2x - 3 )");
    assert_eq!(v["basis"][1]["degree"], 3);
}

#[test]
fn spectrum_options() {
    let f = fixture("onan.fus");
    let o = fusionrep(&["spectrum", f.to_str().unwrap(), "--json", "--primes", "2,7"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["primes"], serde_json::json!([2, 7]));
    assert_eq!(v["minimal"], 3);
    assert_eq!(v["connected"], true);
    let dot = fusionrep(&["spectrum", f.to_str().unwrap(), "--dot"]);
    assert!(stdout(&dot).starts_with("digraph spectrum {"));
}

#[test]
fn adic_k() {
    let o = fusionrep(&["adic", fixture("sigma_3.fus").to_str().unwrap(), "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("k = 2\nm = "), "{}", stdout(&o));
}

#[test]
fn trivial_fusion_repring_is_irr() {
    let dir = scratch(
        "trivial",
        &[(
            "z3.fus",
            "[group]\ndegree = 3\ngenerators = (1 2 3)\nnames = g\n",
        )],
    );
    let o = fusionrep(&["repring", dir.join("z3.fus").to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
    assert_eq!(v["generators"], serde_json::json!(["X1", "X2"]));
}

#[test]
fn exit_codes() {
    let dir = scratch(
        "codes",
        &[
            ("bad.fus", "[group]\ndegree = 3\ngenerators = (1 2 4)\n"),
            (
                "cocycle.fus",
                "[group]\ndegree = 2\ngenerators = (1 2)\n[extension]\ncocycle = c.csv\nmodulus = 2\n",
            ),
            ("c.csv", "1,0\n0,0\n"),
        ],
    );
    let code = |args: &[&str]| fusionrep(args).status.code();
    assert_eq!(
        code(&["repring", dir.join("bad.fus").to_str().unwrap()]),
        Some(1)
    );
    assert_eq!(
        code(&["frobnicate", fixture("a4.fus").to_str().unwrap()]),
        Some(1)
    );
    assert_eq!(
        code(&["repring", dir.join("missing.fus").to_str().unwrap()]),
        Some(1)
    );
    assert_eq!(code(&["repring"]), Some(1));
    assert_eq!(
        code(&["twisted", dir.join("cocycle.fus").to_str().unwrap()]),
        Some(2)
    );
    assert_eq!(
        code(&["saturation", fixture("onan.fus").to_str().unwrap()]),
        Some(3)
    );
    assert_eq!(
        code(&[
            "repring",
            fixture("he.fus").to_str().unwrap(),
            "--cap-hilbert",
            "2"
        ]),
        Some(3)
    );
    let err = fusionrep(&["repring", dir.join("bad.fus").to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("3:14"));
}

#[test]
fn extended_saturation() {
    let o = fusionrep(&[
        "saturation",
        fixture("onan.fus").to_str().unwrap(),
        "--extended",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("saturated: yes\n"));
}
