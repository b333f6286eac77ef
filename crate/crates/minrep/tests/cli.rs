use std::process::Command;

use minrep::report::SuiteReport;

fn minrep() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_minrep"));
    c.env_remove("MINREP_OUT_DIR");
    c
}

fn stdout_of(args: &[&str]) -> (i32, String) {
    let out = minrep().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn stable_output_is_byte_identical() {
    let args = ["check-bilocal", "--L", "2", "--trials", "5", "--seed", "9", "--json", "--stable"];
    let (c1, a) = stdout_of(&args);
    let (c2, b) = stdout_of(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let r = SuiteReport::from_json(&a).unwrap();
    assert!(r.timings_ms.is_none());
    let mut ids: Vec<&str> = r.records.iter().map(|x| x.id.as_str()).collect();
    let before = ids.clone();
    ids.sort();
    assert_eq!(ids, before);
}

#[test]
fn different_seeds_draw_different_trials() {
    let (_, a) = stdout_of(&["check-bilocal", "--L", "2", "--trials", "3", "--seed", "1", "--json", "--stable"]);
    let (_, b) = stdout_of(&["check-bilocal", "--L", "2", "--trials", "3", "--seed", "2", "--json", "--stable"]);
    let ra = SuiteReport::from_json(&a).unwrap();
    let rb = SuiteReport::from_json(&b).unwrap();
    assert_eq!(ra.details["seed"], 1);
    assert_eq!(rb.details["seed"], 2);
}

#[test]
fn table1_csv_has_six_columns() {
    let (code, csv) = stdout_of(&["table1", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "label,dim_g,H_label,dim_g1,gk_dim,eq27_ok");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 25);
    assert!(rows.contains(&"E8,248,E7,56,29,true"));
    assert!(rows.iter().all(|r| r.split(',').count() == 6));
}

#[test]
fn scalar_bilocal_case() {
    let (code, text) = stdout_of(&["check-bilocal", "--L", "1", "--trials", "1", "--seed", "0"]);
    assert_eq!(code, 0);
    assert!(text.contains("PASS bilocal identity L=1/central term"));
}

#[test]
fn so8_relations_include_cone() {
    let (code, text) = stdout_of(&["check-relations", "--algebra", "so-star", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(text.contains("PASS nilpotent-cone relation in so*(8)/E12E34+E14E23-E13E24"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(stdout_of(&["check-bilocal", "--L", "40"]).0, 2);
    assert_eq!(stdout_of(&["no-such-command"]).0, 2);
    assert_eq!(stdout_of(&[]).0, 2);
    assert_eq!(stdout_of(&["decompose", "--algebra", "su22"]).0, 2);
    // 8 modes at level 8 is 12870 states
    assert_eq!(stdout_of(&["decompose", "--level", "8", "--cap", "1000"]).0, 2);
}

#[test]
fn out_dir_and_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "command = \"harmonics\"\nnmax = 3\npoints = 4\nformat = \"json\"\nstable = true\n").unwrap();
    let status = minrep().env("MINREP_OUT_DIR", dir.path()).arg("--config").arg(&cfg).status().unwrap();
    assert_eq!(status.code(), Some(0));
    let r = SuiteReport::from_json(&std::fs::read_to_string(dir.path().join("harmonics.json")).unwrap()).unwrap();
    assert!(r.passed());
    assert_eq!(r.records.iter().filter(|x| x.id.starts_with("compactification/")).count(), 4);

    // flags override the file
    let status = minrep()
        .env("MINREP_OUT_DIR", dir.path())
        .args(["--config", cfg.to_str().unwrap(), "harmonics", "--nmax", "2", "-o", "small.json"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let r = SuiteReport::from_json(&std::fs::read_to_string(dir.path().join("small.json")).unwrap()).unwrap();
    assert!(r.find("harmonics n=3/independent modes").is_none());

    std::fs::write(&cfg, "nmax = \"six\"\n").unwrap();
    assert_eq!(minrep().arg("--config").arg(&cfg).status().unwrap().code(), Some(2));
}
