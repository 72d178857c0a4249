use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn fbk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fbk"))
        .args(args)
        .env_remove("FBK_SEED")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn nf_prints_factors_and_word() {
    let out = fbk(&["nf", "--n", "3", "t2 s1 s2 s1 s2^-1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["n"], 3);
    assert_eq!(v["lambda"], serde_json::json!([0, 1, 0]));
    assert_eq!(v["word"], "t2 s2 s1");
}

#[test]
fn eq_reports_false_as_data() {
    let out = fbk(&["eq", "--n", "2", "t1 s1", "s1 t1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["equal"], false);
    let out = fbk(&["eq", "--n", "2", "t1 s1", "s1 t2"]);
    assert_eq!(json(&out)["equal"], true);
}

#[test]
fn closure_integer_convention_ignores_writhe() {
    let out = fbk(&[
        "closure",
        "--n",
        "2",
        "--convention",
        "integer",
        "t1^-1 s1^-3",
    ]);
    assert_eq!(json(&out)["components"][0]["framing"], -1);
}

#[test]
fn plat_reports_trivial_plat() {
    let v = json(&fbk(&["plat", "--n", "4", "t1 s1 s2 s3 s1^-1 s2^-1"]));
    assert_eq!(v["component_count"], 2);
    assert_eq!(v["zero_framed_unlink"], true);
}

#[test]
fn move_outputs_chain_for_tau_conjugation() {
    let out = fbk(&[
        "move", "--n", "3", "--kind", "tau-conj", "--index", "2", "--sign", "-1", "s1 s2^2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["signature_preserved"], true);
    let steps: Vec<&str> = v["chain"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["step"].as_str().unwrap())
        .collect();
    assert_eq!(steps, ["start", "rl", "isotopy", "undo-rl"]);
}

#[test]
fn plain_l_move_reports_changed_signature() {
    let out = fbk(&[
        "move", "--n", "2", "--kind", "l-over", "--split", "0", "--index", "1", "--sign", "1", "s1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["signature_preserved"], false);
    assert_eq!(v["strands"], 3);
}

#[test]
fn hilden_verify_with_dictionary_file() {
    let path = std::env::temp_dir().join(format!("fbk-dict-{}.txt", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# corrupted theta\ntheta_1 = t1").unwrap();
    drop(f);
    let out = fbk(&[
        "hilden-verify",
        "--suite",
        "framed_hilden",
        "--n",
        "2",
        "--dict",
        path.to_str().unwrap(),
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(1));
    let failing: Vec<String> = json(&out)
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["holds"] == false)
        .map(|r| r["relation_id"].as_str().unwrap().to_owned())
        .collect();
    assert!(
        failing.contains(&"theta_1 omega_1 = omega_1^-1 theta_1".to_owned()),
        "{failing:?}"
    );
}

#[test]
fn transfer_accepts_object_and_triple() {
    let a = fbk(&[
        "transfer",
        r#"{"perm":[2,3,1],"delta":[1,0,0],"kappa":[0,1,0]}"#,
    ]);
    let b = fbk(&["transfer", "[[2,3,1],[1,0,0],[0,1,0]]"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["r"], serde_json::json!([0, -1, 0]));
}

#[test]
fn usage_and_input_errors_exit_2() {
    for args in [
        &["nf", "--n", "3", "s3"][..],
        &["nf", "--n", "3", "s1^0"],
        &["closure", "--n", "2", "--convention", "fancy", "s1"],
        &[
            "move", "--n", "2", "--kind", "rl-over", "--split", "9", "--index", "1", "--sign", "1",
            "s1",
        ],
        &["plat", "--n", "3", "s1"],
        &["fuzz", "--n-min", "4", "--n-max", "2"],
        &["transfer", "{}"],
    ] {
        let out = fbk(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn pretty_output_is_the_same_json() {
    let compact = json(&fbk(&["closure", "--n", "3", "s1 s2^-1"]));
    let pretty = fbk(&["--pretty", "closure", "--n", "3", "s1 s2^-1"]);
    assert!(String::from_utf8_lossy(&pretty.stdout).contains('\n'));
    assert_eq!(json(&pretty), compact);
}

#[test]
fn fuzz_seed_from_environment() {
    let run = |env: Option<&str>, seed: &str| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_fbk"));
        cmd.args(["fuzz", "--trials", "50", "--seed", seed])
            .env_remove("FBK_SEED");
        if let Some(s) = env {
            cmd.env("FBK_SEED", s);
        }
        cmd.output().unwrap().stdout
    };
    assert_eq!(run(Some("3"), "4"), run(None, "3"));
    assert_ne!(run(None, "3"), run(None, "4"));
}
