//! Binary-level tests: exit-code contract, file formats, and round trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use twind_cli::formats::{AlgebraFile, Certificate};
use twind_core::fixtures;

fn exe() -> &'static str {
    env!("CARGO_BIN_EXE_twind")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    Command::new(exe()).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).to_string()
}

#[test]
fn fixture_files_match_the_programmatic_catalogue() {
    let mut all = vec![("kac_printed", fixtures::kac_printed())];
    all.extend(fixtures::catalogue());
    for (name, g) in all {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let doc = AlgebraFile::from_json(&text).unwrap();
        let parsed = doc.to_algebra().unwrap();
        assert_eq!(parsed, g, "fixture file {name} must match the catalogue");
        // round trip: parse → serialize → parse
        let again = AlgebraFile::from_algebra(&parsed);
        assert_eq!(again.to_algebra().unwrap(), parsed);
        assert_eq!(again, doc, "serialization is canonical for {name}");
    }
}

#[test]
fn validate_exit_codes() {
    assert_eq!(run(&["validate", fixture("odd_heisenberg_1_1").to_str().unwrap()])
        .status
        .code(), Some(0));
    let out = run(&["validate", fixture("kac_printed").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("Jacobi"));

    // empty basis: vacuously valid
    let dir = std::env::temp_dir().join("twind-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let empty = dir.join("empty.json");
    std::fs::write(&empty, r#"{"field":"rationals","basis":[],"brackets":{}}"#).unwrap();
    assert_eq!(run(&["validate", empty.to_str().unwrap()]).status.code(), Some(0));

    // malformed input: exit 2
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{").unwrap();
    assert_eq!(run(&["validate", bad.to_str().unwrap()]).status.code(), Some(2));
    // unknown bracket names: exit 2
    let unknown = dir.join("unknown.json");
    std::fs::write(
        &unknown,
        r#"{"field":"rationals","basis":[{"name":"x","parity":0}],"brackets":{"[x,w]":{"x":"1"}}}"#,
    )
    .unwrap();
    assert_eq!(run(&["validate", unknown.to_str().unwrap()]).status.code(), Some(2));
    // wrong bracket order: exit 2
    let order = dir.join("order.json");
    std::fs::write(
        &order,
        r#"{"field":"rationals","basis":[{"name":"x","parity":0},{"name":"y","parity":0}],"brackets":{"[y,x]":{"y":"1"}}}"#,
    )
    .unwrap();
    assert_eq!(run(&["validate", order.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn polarize_paths() {
    let kac = fixture("kac_repaired");
    let out = run(&["polarize", kac.to_str().unwrap(), "--lambda", "u=1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("rank 4"));
    assert!(text.contains("theta = 1/2·x*"));

    // λ ∉ L: mathematical negative
    let out = run(&["polarize", kac.to_str().unwrap(), "--lambda", "y=1"]);
    assert_eq!(out.status.code(), Some(1));

    // lambda = 0: the whole odd part polarizes
    let out = run(&["polarize", kac.to_str().unwrap(), "--lambda", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("polarization odd part (dim 4)"));

    // field-extension obstruction carries a hint
    let spinor = fixture("spinor_2_2");
    let out = run(&["polarize", spinor.to_str().unwrap(), "--lambda", "u=1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("sqrt(-1)"));
    assert!(stdout(&out).contains("hint"));
    let out = run(&[
        "polarize",
        spinor.to_str().unwrap(),
        "--lambda",
        "u=1",
        "--field",
        "rationals adjoin sqrt -1",
    ]);
    assert_eq!(out.status.code(), Some(0));

    // polarize certificate witnesses re-verify through the library
    let out = run(&["polarize", kac.to_str().unwrap(), "--lambda", "u=1,x=3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let cert = Certificate::from_json(&stdout(&out)).unwrap();
    let g = cert.algebra.to_algebra().unwrap();
    let gram = twind_cli::formats::matrix_from_json(&cert.witnesses["gram"]).unwrap();
    let pol_basis = twind_cli::formats::matrix_from_json(&cert.witnesses["polarization"]).unwrap();
    let p = twind_core::Subspace::from_matrix_rows(&pol_basis);
    let lam_values: Vec<twind_core::Scalar> = g
        .even_indices()
        .iter()
        .map(|&i| {
            cert.inputs["lambda"][g.name(i)]
                .as_str()
                .unwrap()
                .parse()
                .unwrap()
        })
        .collect();
    let lam = twind_core::Character::in_l(&g, lam_values).unwrap();
    let f = twind_core::form_of(&g, &lam).unwrap();
    assert_eq!(f.gram, gram, "gram witness re-verifies");
    assert!(twind_core::polarizations::is_polarization(&g, &lam, &p).unwrap().ok());
}

#[test]
fn induce_and_iso_flow() {
    let dir = std::env::temp_dir().join("twind-cli-tests-iso");
    std::fs::create_dir_all(&dir).unwrap();
    let kac = fixture("kac_repaired");
    let cert_h = dir.join("h.json");
    let cert_t = dir.join("t.json");
    let out = run(&[
        "induce",
        kac.to_str().unwrap(),
        "--lambda",
        "u=1",
        "--twist",
        "plus",
        "--out",
        cert_h.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dimension (2|2)"));
    assert!(stdout(&out).contains("G-type"));

    let out = run(&[
        "induce",
        kac.to_str().unwrap(),
        "--lambda",
        "u=1",
        "--twist",
        "none",
        "--pol",
        "xi_1,xi_m2",
        "--out",
        cert_t.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    // certificate re-verifies and carries the action matrices
    let text = std::fs::read_to_string(&cert_h).unwrap();
    let cert = Certificate::from_json(&text).unwrap();
    let (g, module) = cert.load_module().unwrap();
    assert!(module.representation_law_holds(&g));
    assert_eq!(module.dim(), 4);

    // twisted-vs-untwisted from different polarizations: not isomorphic
    // (their effective characters differ)
    let out = run(&["iso", cert_h.to_str().unwrap(), cert_t.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not isomorphic"));

    // module against itself: even isomorphism
    let out = run(&["iso", cert_h.to_str().unwrap(), cert_h.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("even invertible intertwiner: true"));

    // dimension mismatch: clean "not isomorphic" (dim 4 vs dim 2)
    let small = dir.join("small.json");
    run(&["induce", kac.to_str().unwrap(), "--lambda", "x=1", "--twist", "plus",
          "--out", small.to_str().unwrap()]);
    let out = run(&["iso", cert_h.to_str().unwrap(), small.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not isomorphic: dimensions differ"));

    // the Kac pair: untwisted h vs t, not isomorphic
    let uh = dir.join("uh.json");
    let ut = dir.join("ut.json");
    run(&["induce", kac.to_str().unwrap(), "--lambda", "u=1", "--twist", "none",
          "--pol", "xi_m1,xi_m2", "--out", uh.to_str().unwrap()]);
    run(&["induce", kac.to_str().unwrap(), "--lambda", "u=1", "--twist", "none",
          "--pol", "xi_1,xi_m2", "--out", ut.to_str().unwrap()]);
    let out = run(&["iso", uh.to_str().unwrap(), ut.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // twisted h vs twisted t: isomorphic
    let th = dir.join("th.json");
    let tt = dir.join("tt.json");
    run(&["induce", kac.to_str().unwrap(), "--lambda", "u=1", "--twist", "plus",
          "--pol", "xi_m1,xi_m2", "--out", th.to_str().unwrap()]);
    run(&["induce", kac.to_str().unwrap(), "--lambda", "u=1", "--twist", "plus",
          "--pol", "xi_1,xi_m2", "--out", tt.to_str().unwrap()]);
    let out = run(&["iso", th.to_str().unwrap(), tt.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    // The emitted iso witness re-verifies: X·ρ_U(a) = (−1)^{p(X)p(a)} ρ_V(a)·X
    // for every basis element, and X is invertible.
    let iso_cert = Certificate::from_json(&stdout(&out)).unwrap();
    let witness = &iso_cert.witnesses["intertwiner"];
    let x = twind_cli::formats::matrix_from_json(&witness["matrix"]).unwrap();
    let x_parity = if witness["parity"] == serde_json::json!(1) {
        twind_core::Parity::Odd
    } else {
        twind_core::Parity::Even
    };
    assert!(!x.det().is_zero());
    let (g2, mu) = Certificate::from_json(&std::fs::read_to_string(&th).unwrap())
        .unwrap()
        .load_module()
        .unwrap();
    let (_, mv) = Certificate::from_json(&std::fs::read_to_string(&tt).unwrap())
        .unwrap()
        .load_module()
        .unwrap();
    for a in 0..g2.dim() {
        let sign = twind_core::Parity::sign_product(x_parity, g2.parity(a));
        let lhs = x.mul(mu.action(a));
        let rhs = mv.action(a).mul(&x).scale(&sign);
        assert_eq!(lhs, rhs, "intertwiner law fails on basis element {a}");
    }
}

#[test]
fn induce_subordinate_and_requirement_flag() {
    let h12 = fixture("heisenberg_1_2");
    // Subordinate non-polarization: b = g_ev, i.e. --pol "" on this fixture.
    let out = run(&[
        "induce",
        h12.to_str().unwrap(),
        "--lambda",
        "x=1",
        "--pol",
        "",
        "--twist",
        "none",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("dimension (2|2)"));
    assert!(text.contains("reducible"));

    // with --require-polarization the same input is refused
    let out = run(&[
        "induce",
        h12.to_str().unwrap(),
        "--lambda",
        "x=1",
        "--pol",
        "",
        "--require-polarization",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn demo_exit_codes_and_json() {
    let out = run(&["demo", "kac-counterexample"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("theta_h = 1/2·x*"));
    assert!(text.contains("invertible intertwiner between Ind_h and Ind_t: even false, odd false"));

    let out = run(&["demo", "kac-counterexample", "--use-printed"]);
    assert_eq!(out.status.code(), Some(1));

    // custom lambda with nonzero u-part: same qualitative outcome
    let out = run(&["demo", "kac-counterexample", "--lambda", "u=1,x=5"]);
    assert_eq!(out.status.code(), Some(0));

    // lambda without u-part is refused
    let out = run(&["demo", "kac-counterexample", "--lambda", "x=1"]);
    assert_eq!(out.status.code(), Some(1));

    // JSON output parses as a certificate
    let out = run(&["demo", "kac-counterexample", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let cert = Certificate::from_json(&stdout(&out)).unwrap();
    assert_eq!(cert.certificate, "demo.kac-counterexample");
    assert_eq!(cert.outputs["untwisted_isomorphic"], serde_json::json!(false));
    assert_eq!(cert.outputs["twisted_isomorphic"], serde_json::json!(true));
}
