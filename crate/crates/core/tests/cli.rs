use std::io::Cursor;

use sptree::cli::run;
use sptree::families::{generate, Family, FamilySpec};
use sptree::{independence_polynomial, Graph};

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn sptree(args: &[&str], stdin: &str) -> Outcome {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("sptree").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

const HOUSE: &str = "5 6\n1 2\n1 3\n1 5\n2 4\n2 5\n3 4\n";

#[test]
fn gen_centipede() {
    let r = sptree(&["gen", "--family", "centipede", "-n", "3"], "");
    assert_eq!(r.code, 0);
    let g = Graph::parse_edge_list(&r.out).unwrap();
    assert_eq!((g.order(), g.size()), (6, 5));
    assert!(r.out.starts_with("# family centipede n 3 root 1\n"));
}

#[test]
fn gen_output_round_trips_through_indpoly() {
    for (f, n) in [
        (Family::Sunlet, 5),
        (Family::Fibonacci, 6),
        (Family::CaterpillarTilde, 4),
    ] {
        let edges = sptree(&["gen", "--family", f.name(), "-n", &n.to_string()], "").out;
        let r = sptree(&["indpoly", "-", "--format", "json"], &edges);
        assert_eq!(r.code, 0, "{}", r.err);
        let p = sptree::Poly::from_json(r.out.trim()).unwrap();
        assert_eq!(
            p,
            independence_polynomial(&generate(FamilySpec::new(f, n)).unwrap())
        );
    }
}

#[test]
fn indpoly_text() {
    let r = sptree(&["indpoly", "-"], HOUSE);
    assert_eq!(r.out, "1 + 5*x + 4*x^2\n");
}

#[test]
fn spt_dot_matches_figure() {
    let r = sptree(&["spt", "-", "--root", "1"], HOUSE);
    assert_eq!(r.code, 0);
    assert!(r.out.starts_with("graph T {\n  \"1\" [label=\"1\"];\n"));
    assert!(r.out.contains("\"1-2-4\" -- \"1-2-4-3\";"));
    assert_eq!(r.out.matches("[label=").count(), 8);
    assert_eq!(sptree(&["spt", "-", "--root", "1"], HOUSE).out, r.out);
}

#[test]
fn sigma_spt_with_edge_labels() {
    let r = sptree(
        &[
            "sigma-spt",
            "-",
            "--root",
            "1",
            "--decision",
            "edge-label",
            "--edge-order",
            "lex",
        ],
        HOUSE,
    );
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.matches("[label=").count() <= 13);
    let bad = sptree(
        &[
            "sigma-spt",
            "-",
            "--decision",
            "edge-label",
            "--edge-order",
            "zigzag",
        ],
        HOUSE,
    );
    assert_eq!(bad.code, 2);
}

#[test]
fn dfs_edge_list() {
    let r = sptree(&["dfs", "-", "--root", "1"], HOUSE);
    assert_eq!(r.out, "5 4\n1 2\n2 4\n2 5\n3 4\n");
}

#[test]
fn factors_report() {
    let r = sptree(&["factors", "-", "--root", "1"], HOUSE);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.out,
        "[3, 4] x1: 1 + 2*x\n[5] x1: 1 + 1*x\nproduct: 1 + 3*x + 2*x^2\nI(G) * product = I(T): certified\n"
    );
    let json = sptree(&["factors", "-", "--root", "1", "--format", "json"], HOUSE);
    let v: serde_json::Value = serde_json::from_str(&json.out).unwrap();
    assert_eq!(v["certified"], true);
    assert_eq!(v["factors"][0]["vertices"], serde_json::json!([3, 4]));
}

#[test]
fn factors_rejects_disconnected_input() {
    let r = sptree(&["factors", "-"], "4 2\n1 2\n3 4\n");
    assert_eq!(r.code, 2);
    assert!(r.err.contains("not connected"));
}

#[test]
fn realrooted_on_graphs_and_json() {
    let r = sptree(&["realrooted", "--family", "counterexample9"], "");
    assert!(r.out.starts_with("real-rooted: yes\ndegree: 5\n"));
    let r = sptree(&["realrooted", "-"], "[\"1\", \"1\", \"1\"]");
    assert!(r.out.starts_with("real-rooted: no\n"));
    assert!(r.out.contains("distinct real roots: 0"));
    let r = sptree(&["realrooted", "-", "--format", "json"], "[1, 3, 1]");
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["real_rooted"], true);
    assert_eq!(v["distinct_real_roots"], 2);
}

#[test]
fn verify_counterexample_suite() {
    let r = sptree(&["verify", "--suite", "counterexample"], "");
    assert_eq!(r.code, 0);
    assert!(r
        .out
        .contains("PASS counterexample: I(T9) = (1+x)(1+8x+20x^2+16x^3+x^4)"));
}

#[test]
fn verify_families_reports_the_false_claims() {
    let r = sptree(&["verify", "--suite", "families", "-n-max", "6"], "");
    assert_eq!(r.code, 1);
    assert!(r.out.contains("FAIL T<(N_5, 1) ~ W_9"));
    assert!(r.out.contains("PASS T<(N_5, 1) ~ W_8"));
    assert!(r.out.contains(
        "FAIL I(H_4) = I(H~_4)(1+x)^2 (lhs degree 8, leading 1 vs rhs degree 7, leading 1)"
    ));
    assert!(r.out.contains("PASS I(H_4) = I(H~_4)(1+x)^3"));
    assert!(r.out.contains("PASS T<(F~(7), 0) ~ F_6"));
    assert!(!r.out.lines().any(|l| l.starts_with("FAIL I(W_")));
}

#[test]
fn verify_corollary_and_ratio_suites() {
    assert_eq!(
        sptree(&["verify", "--suite", "corollary", "--n-max", "8"], "").code,
        0
    );
    let r = sptree(&["verify", "--suite", "ratio", "--random-graphs", "10"], "");
    assert_eq!(r.code, 0, "{}", r.out);
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(sptree(&["indpoly"], "").code, 2);
    assert_eq!(
        sptree(&["indpoly", "-", "--family", "sunlet", "-n", "4"], HOUSE).code,
        2
    );
    assert_eq!(sptree(&["indpoly", "-"], "2 1\n1 1\n").code, 2);
    assert_eq!(sptree(&["indpoly", "-"], "3 1\n1 2\n").code, 2);
    assert_eq!(
        sptree(&["gen", "--family", "sunlet", "-n", "2"], "").code,
        2
    );
    assert_eq!(
        sptree(&["gen", "--family", "dragon", "-n", "2"], "").code,
        2
    );
    assert_eq!(sptree(&["spt", "-", "--root", "42"], HOUSE).code, 2);
    assert_eq!(sptree(&["verify", "--suite", "everything"], "").code, 2);
    assert_eq!(sptree(&["frobnicate"], "").code, 2);
    assert_eq!(sptree(&["indpoly", "/nonexistent/file"], "").code, 2);
}
