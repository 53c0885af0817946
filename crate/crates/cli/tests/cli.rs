use std::process::{Command, Output};

fn grirr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grirr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = grirr(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

#[test]
fn star_of_the_first_worked_example() {
    let out = ok(&[
        "star",
        "--ring",
        "QQ[x,y]",
        "--grading",
        "[[1,1]]",
        "x^2, x*y, y^3, x - y^2",
    ]);
    assert_eq!(out, "x^2, x*y, y^3\n");
}

#[test]
fn ir_of_the_second_worked_example() {
    assert_eq!(
        ok(&[
            "ir",
            "--ring",
            "QQ[x,y]",
            "x^4, x^2*y^2, y^4, x^3*y - x*y^3"
        ]),
        "3\n"
    );
}

#[test]
fn fine_grading_star_of_the_second_worked_example() {
    let out = ok(&[
        "star",
        "--ring",
        "QQ[x,y]",
        "--grading",
        "[[1,0],[0,1]]",
        "x^4, x^2*y^2, y^4, x^3*y - x*y^3",
    ]);
    assert_eq!(out, "x^4, x^2*y^2, y^4\n");
    assert_eq!(ok(&["ir", "--ring", "QQ[x,y]", "x^4, x^2*y^2, y^4"]), "2\n");
}

#[test]
fn verify_paper_passes() {
    let out = ok(&["verify", "paper"]);
    assert!(out.contains("collinear r=3 ir(I)"));
    assert!(out.contains("ir-drop I* (fine grading)"));
    assert!(!out.contains("FAIL"));
    assert!(out.trim_end().ends_with("35/35 checks passed"));
}

#[test]
fn ideal_operations() {
    let r = "--ring=QQ[x,y,z]";
    assert_eq!(
        ok(&["gb", r, "x*y - z, x^2 - y, x*z"]),
        ok(&["gb", r, "x*z, x^2 - y, x*y - z"])
    );
    assert_eq!(ok(&["member", r, "x^3", "x^2 - y, x*y"]), "true\n");
    assert_eq!(ok(&["member", r, "x", "x^2 - y, x*y"]), "false\n");
    assert_eq!(ok(&["intersect", r, "x, y", "y, z"]), "x*z, y\n");
    assert_eq!(ok(&["quotient", r, "x^2*y, x*y^2", "x*y"]), "x, y\n");
    assert_eq!(
        ok(&["saturate", "--ring", "QQ[x,y]", "x^2*y, x*y^2", "x*y"]),
        "1\n"
    );
    assert_eq!(
        ok(&["eliminate", r, "x - y, y - z^2", "--vars", "y"]),
        "x - z^2\n"
    );
    assert_eq!(ok(&["gb", r, "0"]), "0\n");
}

#[test]
fn orders_change_the_printed_basis() {
    let lex = ok(&["gb", "--ring", "QQ[x,y]", "x^2 - y, x*y - 1"]);
    let grevlex = ok(&[
        "gb",
        "--ring",
        "QQ[x,y]",
        "--order",
        "grevlex",
        "x^2 - y, x*y - 1",
    ]);
    assert_eq!(lex, "x - y^2, y^3 - 1\n");
    assert_eq!(grevlex, "x^2 - y, x*y - 1, y^2 - x\n");
}

#[test]
fn gradedness() {
    assert_eq!(ok(&["isgraded", "--ring", "QQ[x,y]", "x^2 - y"]), "false\n");
    assert_eq!(
        ok(&[
            "isgraded",
            "--ring",
            "QQ[x,y]",
            "--grading",
            "[[1,2]]",
            "x^2 - y"
        ]),
        "true\n"
    );
}

#[test]
fn socle_lists_a_basis() {
    let out = ok(&["socle", "--ring", "QQ[x,y]", "x^2, x*y, y^3"]);
    assert_eq!(out, "rank 2\ny^2\nx\n");
}

#[test]
fn monomial_decompositions() {
    assert_eq!(
        ok(&["decompose", "--ring", "QQ[x,y]", "x^2, x*y, y^3"]),
        "2 components\n(x^2, y)\n(x, y^3)\n"
    );
    assert_eq!(
        ok(&["minprimes", "--ring", "QQ[x,y,z]", "x*y, y*z"]),
        "(x, z)\n(y)\n"
    );
}

#[test]
fn graded_free_report() {
    let m = "gfield GF(7) rank 2 support (1,0; 0,1) | rowdeg (1,0); (0,1) | coldeg (0,0); (1,0); (0,1) \
             | row 1*e(1,0) 2*e(0,0) 5*e(1,-1) | row 4*e(0,1) 3*e(-1,1) 0";
    let out = ok(&["gfree", m]);
    assert!(out.contains("rank 2\n"));
    assert!(out.contains("cokernel free of rank 1"));
    assert!(out.contains("all pivots units: true"));
    let zero = "gfield GF(7) rank 1 support (1) | rowdeg (0); (1); (2) | coldeg (0) | row 0 | row 0 | row 0";
    assert!(
        ok(&["gfree", zero]).contains("kernel free of rank 3: generators in degrees (0) (1) (2)")
    );
}

#[test]
fn points_report() {
    let out = ok(&["points", "(0,1); (0,2); (0,3)"]);
    assert!(out.contains("I* = x\n"));
    assert!(out.contains("ir(I) = 3\nir(I*) = 1\nbijective = false\n"));
    let out = ok(&["points", "(1,1); (2,3)"]);
    assert!(out.contains("ir(I) = 2\nir(I*) = 2\nbijective = true\n"));
}

#[test]
fn exit_codes() {
    let usage = grirr(&["gb", "--ring", "QQ[x,y]", "x^2 +"]);
    assert_eq!(usage.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&usage.stderr).contains("position 6"));
    assert_eq!(
        grirr(&["gb", "--ring", "QQ[x,y]", "x*w"]).status.code(),
        Some(2)
    );
    assert_eq!(grirr(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(grirr(&["points", "(0,0)"]).status.code(), Some(2));
    assert_eq!(
        grirr(&["socle", "--ring", "QQ[x,y]", "x, y^2 - 1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        grirr(&["ir", "--ring", "QQ[x,y]", "x"]).status.code(),
        Some(3)
    );
    assert_eq!(
        grirr(&["decompose", "--ring", "QQ[x,y]", "x - y"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        grirr(&["minprimes", "--ring", "QQ[x,y]", "x^2"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn json_output() {
    let out = ok(&[
        "--format",
        "json",
        "star",
        "--ring",
        "QQ[x,y]",
        "x^2, x*y, y^3, x - y^2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["basis"], serde_json::json!(["x^2", "x*y", "y^3"]));
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 3);
    let out = ok(&["verify", "paper", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["records"].as_array().unwrap().len(), 35);
}

#[test]
fn session_references() {
    let dir = std::env::temp_dir().join(format!("grirr-session-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("examples.grirr");
    std::fs::write(
        &path,
        "ring QQ[x,y]\n\
         grading [[1,1]]\n\
         ideal I = x^2, x*y, y^3, x - y^2\n\
         points P = (1,1); (2,2)\n\
         matrix A = gfield GF(5) rank 1 support (1) | rowdeg (0) | coldeg (0) | row 2*e(0)\n",
    )
    .unwrap();
    let session = path.to_str().unwrap();
    assert_eq!(ok(&["star", "--session", session, "@I"]), "x^2, x*y, y^3\n");
    assert_eq!(ok(&["ir", "--session", session, "@I"]), "1\n");
    assert!(ok(&["points", "--session", session, "@P"]).contains("ir(I*) = 1\nbijective = false"));
    assert!(ok(&["gfree", "--session", session, "@A"]).contains("rank 1\n"));
    assert_eq!(
        grirr(&["star", "--session", session, "@J"]).status.code(),
        Some(2)
    );
    assert_eq!(
        grirr(&["star", "--ring", "QQ[x,y]", "@I"]).status.code(),
        Some(2)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let runs = [
        vec!["verify", "random", "--seed", "11", "--cases", "4"],
        vec![
            "socle",
            "--ring",
            "GF(32003)[x,y,z]",
            "x^2, y^2, z^2, x*y*z",
        ],
        vec!["points", "(1,2); (2,4); (-3,1); (5,-5)"],
    ];
    for args in &runs {
        let a = grirr(args);
        let b = grirr(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
