use std::process::Command;

use serde_json::Value;

fn cyspec(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cyspec"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&str, i32)] = &[
        ("verify 5_7 --n 5 --A 1,4", 0),
        ("verify 5_7 --n 6 --A 1,5", 1),
        ("verify 5_7 --n 5", 2),
        ("verify 8_7 --n 5 --A 1,4", 2),
        ("verify 5_7 --n 5 --A 1,9", 2),
        ("construct 2_7 8", 0),
        ("construct 2_7 7", 1),
        ("construct 7_7 20", 1),
        ("construct 4_7 --group 3x3", 0),
        ("search 6_7 --n 10", 1),
        ("search 6_7 --n 8", 0),
        ("search 6_7 --n 41", 2),
        ("search 6_7 --n 41 --limit 41", 0),
        ("spectrum 5_7 --lo 6 --hi 20", 1),
        ("spectrum 5_7 --lo 3 --hi 20", 0),
        ("spectrum 5_7 --lo 20 --hi 3", 2),
        ("random 7_7 --n 36 --seed 3", 0),
        ("random 7_7 --n 11 --seed 3 --iters 50", 1),
        ("random 7_7 --n 36", 2),
        ("cnf 6_7 9", 0),
        ("cnf 6_7 2", 2),
        ("solve 6_7 9", 1),
        ("solve 6_7 8", 0),
        ("solve 6_7", 2),
        ("bounds --max 40", 0),
        ("report --lo 3 --hi 14", 0),
        ("report --lo 10 --hi 3", 2),
        ("frobnicate", 2),
        ("", 2),
    ];
    for (line, want) in cases {
        let args: Vec<&str> = line.split_whitespace().collect();
        let (code, _, stderr) = cyspec(&args);
        assert_eq!(code, *want, "`cyspec {line}` exited {code}: {stderr}");
    }
}

#[test]
fn documented_outputs() {
    let (_, out, _) = cyspec(&["verify", "5_7", "--n", "5", "--A", "1,4"]);
    assert_eq!(out, "valid\n");
    let (_, out, _) = cyspec(&["search", "6_7", "--n", "10"]);
    assert!(out.contains("no representation"));
    let (_, out, _) = cyspec(&["solve", "6_7", "10"]);
    assert_eq!(out, "UNSAT\n");
    let (_, out, _) = cyspec(&["construct", "7_7", "12"]);
    assert_eq!(out, "NoClosedForm\n");
    let (_, out, _) = cyspec(&["construct", "5_7", "5"]);
    assert_eq!(out, "{\"group\":\"Z/5\",\"A\":[1,4],\"B\":[2,3]}\n");
    let (_, out, _) = cyspec(&["bounds", "--max", "40"]);
    assert!(out.contains("union bound threshold: 34"));
    assert!(out.contains("representable from n = 12"));
}

#[test]
fn usage_errors_name_the_flag() {
    let (_, _, err) = cyspec(&["search", "6_7", "--m", "10"]);
    assert!(err.contains("--m"), "{err}");
    let (_, _, err) = cyspec(&["verify", "5_7", "--A", "1,4"]);
    assert!(err.contains("--n") && err.contains("--group"), "{err}");
    let (_, _, err) = cyspec(&["verify", "5_7", "--group", "4y3", "--A", "1"]);
    assert!(err.contains("--group"), "{err}");
}

/// Every coloring any subcommand prints in JSON is accepted back by verify.
#[test]
fn json_colorings_round_trip() {
    let mut colorings: Vec<(String, Value)> = Vec::new();
    let mut collect = |algebra: &str, args: &[&str], pick: &dyn Fn(&Value) -> Vec<Value>| {
        let mut full = args.to_vec();
        full.push("--json");
        let (code, out, err) = cyspec(&full);
        assert_eq!(code, 0, "{args:?}: {err}");
        let v: Value = serde_json::from_str(&out).unwrap();
        for c in pick(&v) {
            colorings.push((algebra.to_string(), c));
        }
    };
    collect("6_7", &["search", "6_7", "--n", "8"], &|v| {
        v["representations"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["coloring"].clone())
            .collect()
    });
    collect("4_7", &["construct", "4_7", "--group", "2x2x4"], &|v| {
        vec![v["construction"]["coloring"].clone()]
    });
    collect("6_7", &["construct", "6_7", "17"], &|v| {
        vec![v["construction"]["coloring"].clone()]
    });
    collect(
        "7_7",
        &["random", "7_7", "--n", "34", "--seed", "9"],
        &|v| vec![v["coloring"].clone()],
    );
    collect("7_7", &["solve", "7_7", "13"], &|v| {
        vec![v["coloring"].clone()]
    });
    collect("5_7", &["verify", "5_7", "--n", "5", "--A", "2,3"], &|v| {
        vec![v["coloring"].clone()]
    });

    assert_eq!(colorings.len(), 7);
    let dir = tempfile::tempdir().unwrap();
    for (i, (algebra, c)) in colorings.iter().enumerate() {
        let inline = c.to_string();
        let (code, out, err) = cyspec(&["verify", algebra, "--coloring", &inline]);
        assert_eq!((code, out.as_str()), (0, "valid\n"), "{inline}: {err}");

        let path = dir.path().join(format!("c{i}.json"));
        std::fs::write(&path, &inline).unwrap();
        let arg = format!("@{}", path.display());
        assert_eq!(cyspec(&["verify", algebra, "--coloring", &arg]).0, 0);
    }
}

#[test]
fn dimacs_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.cnf");
    let p = path.to_str().unwrap();
    let (code, out, _) = cyspec(&["cnf", "7_7", "11", "--dimacs", p]);
    assert_eq!(code, 0);
    assert!(out.starts_with("wrote p cnf"));
    let text = std::fs::read_to_string(&path).unwrap();
    let (_, stdout_text, _) = cyspec(&["cnf", "7_7", "11"]);
    assert_eq!(text, stdout_text);
    assert!(text
        .lines()
        .filter(|l| !l.starts_with('c') && !l.starts_with('p'))
        .all(|l| l.ends_with(" 0")));
    assert_eq!(
        cyspec(&["solve", "--dimacs", p]),
        (1, "UNSAT\n".to_string(), String::new())
    );

    cyspec(&["cnf", "7_7", "12", "--dimacs", p]);
    let (code, out, _) = cyspec(&["solve", "--dimacs", p, "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"], "SAT");

    assert_eq!(cyspec(&["solve", "--dimacs", "/nonexistent/f.cnf"]).0, 2);
}

#[test]
fn report_json_has_methods() {
    let (code, out, _) = cyspec(&["report", "--lo", "3", "--hi", "12", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[0]["algebra"], "1_7");
    assert_eq!(rows[0]["computed"], serde_json::json!([4]));
    assert_eq!(rows[0]["cells"][1]["method"], "construction");
}
