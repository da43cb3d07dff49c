use fracstefan::similarity::{solve_flux, FluxProblem, Material, Medium, DEFAULT_TOL};
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracstefan"))
        .args(args)
        .output()
        .unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn csv(path: &Path) -> Vec<Vec<String>> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

fn ice_water() -> Medium {
    Medium {
        solid: Material::new(2.22, 2050.0).unwrap(),
        liquid: Material::new(0.556, 4186.0).unwrap(),
        density: 1000.0,
        latent_heat: 334_000.0,
        initial_temperature: 263.15,
        melting_temperature: 273.15,
        alpha: 0.7,
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["solve"]), 0);
    assert_eq!(code(&["solve", "--q0", "100"]), 2);
    assert_eq!(code(&["solve", "--alpha", "1.5"]), 1);
    assert_eq!(code(&["solve", "--q0", "1e5", "--t0", "300"]), 1);
    assert_eq!(code(&["solve", "--classical", "--alpha", "0.5"]), 1);
    assert_eq!(code(&["bogus"]), 1);
    assert_eq!(code(&["solve", "--config", "/nonexistent/cfg.json"]), 4);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn solve_matches_library_bit_for_bit() {
    let out = run(&["solve", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let lib = solve_flux(&FluxProblem::new(ice_water(), 50_000.0).unwrap(), DEFAULT_TOL).unwrap();
    assert_eq!(v["mu"].as_f64().unwrap().to_bits(), lib.mu().to_bits());
    assert_eq!(v["kind"], "flux");
}

#[test]
fn profile_is_deterministic_and_physical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        assert_eq!(code(&["profile", "--out", d.path().to_str().unwrap()]), 0);
    }
    for f in ["profile.csv", "front.csv"] {
        assert_eq!(
            std::fs::read(a.path().join(f)).unwrap(),
            std::fs::read(b.path().join(f)).unwrap(),
            "{f} differs between runs"
        );
    }
    let rows = csv(&a.path().join("profile.csv"));
    assert!(!rows.is_empty());
    for r in &rows {
        let temp: f64 = r[3].parse().unwrap();
        match r[2].as_str() {
            "liquid" => assert!(temp > 273.15, "{r:?}"),
            "solid" => assert!(temp > 263.15 && temp <= 273.15, "{r:?}"),
            other => panic!("unknown phase {other}"),
        }
    }
    let lib = solve_flux(&FluxProblem::new(ice_water(), 50_000.0).unwrap(), DEFAULT_TOL).unwrap();
    let lambda_s = lib.params().lambda_s;
    for r in csv(&a.path().join("front.csv")) {
        let (t, rt): (f64, f64) = (r[0].parse().unwrap(), r[1].parse().unwrap());
        let expected = lib.mu() * lambda_s * t.powf(0.35);
        assert!((rt - expected).abs() <= 1e-14 * expected, "t = {t}");
    }
}

#[test]
fn verify_and_scan_pass_their_gates() {
    let d = tempfile::tempdir().unwrap();
    let dir = d.path().to_str().unwrap();
    assert_eq!(code(&["verify", "--out", dir]), 0);
    let out = run(&["scan", "--out", dir]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    for f in [
        "f2_scan.csv",
        "chain.csv",
        "alpha_limit.csv",
        "equivalence.csv",
        "scan.json",
    ] {
        assert!(d.path().join(f).exists(), "missing {f}");
    }
}

#[test]
fn config_file_and_flags_compose() {
    let d = tempfile::tempdir().unwrap();
    let cfg = d.path().join("run.json");
    std::fs::write(&cfg, r#"{"alpha": 0.5, "q0": 60000}"#).unwrap();
    let out = run(&[
        "solve",
        "--config",
        cfg.to_str().unwrap(),
        "--alpha",
        "0.9",
        "--print-config",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["alpha"], 0.9);
    assert_eq!(v["q0"], 60000.0);
    std::fs::write(&cfg, r#"{"alpah": 0.5}"#).unwrap();
    assert_eq!(code(&["solve", "--config", cfg.to_str().unwrap()]), 1);
}

#[test]
fn one_phase_and_temperature_data() {
    assert_eq!(code(&["solve", "--one-phase", "--q0", "1000"]), 0);
    assert_eq!(code(&["solve", "--t0", "283.15"]), 0);
    assert_eq!(code(&["solve", "--classical", "--alpha", "1"]), 0);
}
