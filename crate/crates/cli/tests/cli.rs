use std::process::Command;

fn qsym(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qsym")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let (code, s) = qsym(args);
    (code, serde_json::from_str(&s).unwrap())
}

#[test]
fn kmatrix_standard_n2() {
    let (code, v) = json(&["kmatrix", "--n", "2", "--p", "1", "--h", "0.1"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    let k = &v["results"]["k"]["re"];
    let a = (-0.05f64).exp();
    assert!((k[0][1].as_f64().unwrap() + a).abs() < 1e-12);
    assert!((k[1][0].as_f64().unwrap() - a).abs() < 1e-12);
    assert!(k[0][0].as_f64().unwrap().abs() < 1e-12);
    let smu = &v["results"]["s_plus_mu"];
    assert!(smu[0].as_f64().unwrap().abs() < 1e-9 && smu[1].as_f64().unwrap().abs() < 1e-9);
}

#[test]
fn cayley_check_ok() {
    let (code, v) = json(&["cayley-check", "--n", "4", "--p", "2", "--phi", "0.7"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    for key in ["r_rotation", "coisotropy"] {
        assert!(v["residuals"][key].as_f64().unwrap() <= 1e-12);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["kohno-drinfeld", "--n", "2", "--p", "1", "--sp", "0.3i", "--h", "0.1"];
    assert_eq!(qsym(&args), qsym(&args));
}

#[test]
fn error_codes() {
    assert_eq!(qsym(&["kmatrix", "--n", "4", "--p", "2", "--sp", "0.3"]).0, 13);
    assert_eq!(qsym(&["satake", "--n", "1", "--p", "1"]).0 / 10, 1);
    assert_eq!(qsym(&["cohomology", "--g", "sl2", "--h", "so3"]).0, 11);
    assert_eq!(qsym(&["kmatrix", "--n"]).0, 2);
}

#[test]
fn cohomology_csv() {
    let (code, s) = qsym(&["cohomology", "--h", "cartan", "--invariant", "--max-degree", "2", "--max-weight", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(s.starts_with("degree,weight,cochains,dim\n"));
    assert!(s.lines().any(|l| l.starts_with("2,2,") && l.ends_with(",1")));
}

#[test]
fn verify_all_passes() {
    let (code, v) = json(&["verify-all"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"].as_array().unwrap().len(), 12);
}
