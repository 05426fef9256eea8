use std::path::Path;
use std::process::{Command, Output};

use swarmfit::data::load_result;
use swarmfit::swarm::FitResult;

fn swarmfit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swarmfit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&swarmfit(&["fit", "--model", "nosuch", "--data", "builtin:glass_fibers"])), 2);
    assert_eq!(code(&swarmfit(&["fit", "--model", "we", "--data", "builtin:nosuch"])), 2);
    assert_eq!(code(&swarmfit(&["reproduce", "--table", "9"])), 2);
    assert_eq!(code(&swarmfit(&["fit", "--model", "we"])), 2);
    assert_eq!(code(&swarmfit(&["fit", "--model", "we", "--data", "builtin:glass_fibers", "--init-box", "7=0:1"])), 2);
    assert_eq!(code(&swarmfit(&["fit", "--model", "we", "--data", "/no/such/file.csv"])), 2);
}

#[test]
fn fit_then_recast_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let we = dir.path().join("we.json");
    let o = swarmfit(&["fit", "--model", "we", "--data", "builtin:glass_fibers", "--swarm", "100", "--iters", "200", "--seed", "1", "--out", s(&we)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let first: FitResult = load_result(&we).unwrap();
    assert_eq!(first.objective, "we");
    assert!(String::from_utf8_lossy(&o.stdout).contains("log-likelihood"));

    // Same seed, same numbers.
    let again = dir.path().join("again.json");
    swarmfit(&["fit", "--model", "we", "--data", "builtin:glass_fibers", "--swarm", "100", "--iters", "200", "--seed", "1", "--sequential", "--out", s(&again)]);
    let second: FitResult = load_result(&again).unwrap();
    assert_eq!(first.best_params, second.best_params);

    let rc = dir.path().join("recast.json");
    let o = swarmfit(&["recast", "--from", s(&we), "--data", "builtin:glass_fibers", "--swarm", "50", "--iters", "100", "--out", s(&rc)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let recast: FitResult = load_result(&rc).unwrap();
    for ((b, p), lo) in recast.config.init_box.iter().zip(&first.best_params).zip([0.9, 0.9, 0.9]) {
        assert!((b.lo - lo * p).abs() <= 1e-12 * p.abs());
    }
}

#[test]
fn profile_and_ecdf_write_files() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid.csv");
    let o = swarmfit(&[
        "profile", "--model", "ee", "--data", "builtin:glass_fibers", "--grid", "alpha=10:40:4", "--grid", "lambda=2:3:3", "--out", s(&grid),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&grid).unwrap();
    assert_eq!(text.lines().count(), 1 + 12);

    let cdf = dir.path().join("cdf.csv");
    let o = swarmfit(&["ecdf-fit", "--model", "ee", "--data", "builtin:glass_fibers", "--params", "31.3489,2.61157", "--out", s(&cdf)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stdout).contains("Kolmogorov-Smirnov"));
    assert!(std::fs::read_to_string(&cdf).unwrap().starts_with("x,ecdf,cdf"));

    // Wrong parameter count is a usage error.
    let o = swarmfit(&["ecdf-fit", "--model", "ee", "--data", "builtin:glass_fibers", "--params", "1,2,3"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn regression_csv_and_cv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("reg.csv");
    let mut body = String::from("y,x\n");
    for i in 0..40 {
        let x = (i % 10) as f64 / 10.0;
        let y = u8::from(i % 3 == 0 || (i % 10 >= 8 && i % 2 == 0));
        body.push_str(&format!("{y},{x}\n"));
    }
    std::fs::write(&csv, body).unwrap();
    let o = swarmfit(&["fit", "--model", "logbinom", "--data", s(&csv), "--response", "y", "--covariates", "x", "--swarm", "30", "--iters", "100", "--baseline", "fisher"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stdout).contains("baseline fisher"));

    let out = dir.path().join("cv.json");
    let o = swarmfit(&["cv", "--data", s(&csv), "--response", "y", "--covariates", "x", "--rho-grid", "0,1", "--folds", "4", "--swarm", "20", "--iters", "50", "--out", s(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stdout).contains("selected rho"));
    assert!(out.exists());
}
