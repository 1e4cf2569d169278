use std::process::{Command, Output};

fn efl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_efl"))
        .args(args)
        .env_remove("EFL_THREADS")
        .output()
        .expect("run efl")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const A2: &str = "x^2*beta^2 + 2*x*y*alpha*beta + x*y*alpha + x*y*beta + y^2*alpha^2";

#[test]
fn eulerian_routes_print_the_same_polynomial() {
    for route in ["grammar", "enum", "tree"] {
        let o = efl(&["eulerian", "--n", "2", "--route", route]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), format!("{A2}\n"), "route {route}");
    }
    let star = efl(&["eulerian", "--n", "1", "--star"]);
    assert_eq!(stdout(&star), "x*alpha + y*beta\n");
}

#[test]
fn eulerian_json() {
    let o = efl(&["eulerian", "--n", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn stats_of_nine_letter_word() {
    let o = efl(&["stats", "--perm", "8 4 9 6 1 2 5 3 7"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("des=4 asc=4 lrmin=3 rlmin=4 peaks=2"));
    assert_eq!(lines.next().unwrap(), "cycles=(8 4 9 6 1)(2)(5 3)(7)");
}

#[test]
fn tree_and_forest_of_nine_letter_word() {
    let o = efl(&["tree", "--perm", "849612537"]);
    let text = stdout(&o);
    assert!(text.contains("tree: 1(4(8(.,.),6(9(.,.),.)),2(.,3(5(.,.),7(.,.))))"));
    assert!(text.contains("leaves: a y x y y x x y x b"));
    assert!(text.contains("weight: x^4*y^4*a*b*alpha^2*beta^3"));

    let o = efl(&["tree", "--perm", "849612537", "--labeling", "axyz"]);
    assert!(stdout(&o).contains("weight: x^3*y^4*a*z^2"));

    let o = efl(&["forest", "--perm", "849612537"]);
    let text = stdout(&o);
    assert!(text.contains("supporting: 2[x] 3[5(x,y)] 4[6(9(x,y),y)] 7[x] 8[y]"));
    assert!(text.contains("plane: 2s 3r[5l] 4r[6u[9l]] 7s 8s"));
}

#[test]
fn gamma_tables() {
    let o = efl(&["gamma", "--family", "derangement", "--n", "4"]);
    assert_eq!(stdout(&o), "q d=4: 0 1 2\nq^2 d=4: 0 0 3\n");
    let o = efl(&["gamma", "--family", "alpha-eulerian", "--n", "2"]);
    assert_eq!(stdout(&o), "alpha d=2: 0 2\nalpha^2 d=2: 1 0\n");
}

#[test]
fn verify_exit_codes_and_json() {
    let o = efl(&["verify", "--max-n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with(" checks, 0 failed\n"));

    let o = efl(&[
        "verify",
        "--check",
        "T24_planeForest",
        "--max-n",
        "1",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "[{\"id\":\"T24_planeForest\",\"n\":0,\"status\":\"pass\"},{\"id\":\"T24_planeForest\",\"n\":1,\"status\":\"pass\"}]\n"
    );

    let o = efl(&[
        "verify",
        "--check",
        "T11_grammar",
        "--max-n",
        "1",
        "--json",
        "--timings",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v[0]["elapsed_ms"].is_u64());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--check", "T99_nothing"][..],
        &["stats", "--perm", "1 1 2"],
        &["eulerian"],
        &["eulerian", "--n", "2", "--route", "magic"],
        &["bogus"],
    ] {
        assert_eq!(efl(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn thread_flag_and_env_agree() {
    let base = efl(&["verify", "--max-n", "4", "--json"]);
    let flag = efl(&["--threads", "1", "verify", "--max-n", "4", "--json"]);
    let env = Command::new(env!("CARGO_BIN_EXE_efl"))
        .args(["verify", "--max-n", "4", "--json"])
        .env("EFL_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(base.stdout, flag.stdout);
    assert_eq!(base.stdout, env.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_efl"))
        .args(["verify"])
        .env("EFL_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
