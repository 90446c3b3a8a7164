use std::process::{Command, Output};

fn groth(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_groth"));
    cmd.args(args).env_remove("GROTH_THREADS");
    if let Some(t) = threads {
        cmd.env("GROTH_THREADS", t);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_prints_polynomials() {
    let o = groth(&["compute", "double", "--perm", "2,1", "--n", "1"], None);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "x1 + y1 + x1*y1\n"));
    let o = groth(&["compute", "single", "--perm", "1,2", "--n", "1"], None);
    assert_eq!(stdout(&o), "1\n");
    let o = groth(&["compute", "single", "--perm", "1,3,2", "--json"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["m"], 3);
}

#[test]
fn qschur_json() {
    let o = groth(&["compute", "qschur", "--perm", "2,3,1,5,4", "--degree", "4", "--json"], None);
    assert_eq!(stdout(&o).trim(), r#"{"[4]":6,"[3,1]":4}"#);
    let o = groth(&["compute", "qschur", "--perm", "3,1,2,5,4", "--inverse", "--degree", "4", "--json"], None);
    assert_eq!(stdout(&o).trim(), r#"{"[4]":6,"[3,1]":4}"#);
}

#[test]
fn exit_codes() {
    assert_eq!(groth(&["compute", "single", "--perm", "2,2"], None).status.code(), Some(2));
    assert_eq!(groth(&["compute", "single"], None).status.code(), Some(2));
    assert_eq!(groth(&["verify", "bogus"], None).status.code(), Some(2));
    assert_eq!(groth(&["verify", "qp"], Some("zero")).status.code(), Some(2));
    assert_eq!(groth(&["verify", "cauchy", "--n", "3"], None).status.code(), Some(0));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["verify", "relations", "--n", "4", "--trials", "200", "--seed", "5", "--json"];
    let one = groth(&args, Some("1"));
    let four = groth(&args, Some("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let all = groth(&["verify", "all"], Some("2"));
    assert_eq!(all.status.code(), Some(0));
    assert!(stdout(&all).ends_with("all checks passed\n"));
}
