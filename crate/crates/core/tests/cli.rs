use std::process::{Command, Output};

use fuchsian_tiles::criterion::TessellationType;
use fuchsian_tiles::tess::reference_patch;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fuchsian-tiles"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn decide_reports_the_prime() {
    let o = run(&["decide", "3", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"p\":3,\"q\":8,\"realizable\":true,\"prime\":2}\n"
    );

    let o = run(&["decide", "3", "7", "--format", "text"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not realizable"));
}

#[test]
fn sigma_golden() {
    let o = run(&["sigma", "5", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"p\":5,\"q\":4,\"realizable\":true,\"m\":2,\"sigma\":{\"degree\":5,\"images\":[1,5,4,3,2]},\"sigma_cycles\":\"(2 5)(3 4)\",\"sigma_rho_cycles\":\"(1 5)(2 4)\"}\n"
    );

    let o = run(&["sigma", "5", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"m\":5,"));
    assert!(stdout(&o).contains("\"sigma_cycles\":\"()\""));

    let o = run(&["sigma", "4", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).contains("no divisor of q in [2,p]"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn oracle_returns_the_first_witness() {
    let o = run(&["oracle", "3", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"m\":3,\"sigma\":{\"degree\":3,\"images\":[1,2,3]}"));

    let o = run(&["oracle", "3", "7", "--format", "text"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("examined 4 involutions"));
}

#[test]
fn decide_and_oracle_agree_on_the_sweep() {
    for p in 3..=8u32 {
        for q in 3..=30u32 {
            if TessellationType::new(p, q).is_err() {
                continue;
            }
            let (ps, qs) = (p.to_string(), q.to_string());
            let mut out = Vec::new();
            let mut err = Vec::new();
            let d = fuchsian_tiles::cli::run(["t", "decide", &ps, &qs], &mut out, &mut err);
            let o = fuchsian_tiles::cli::run(["t", "oracle", &ps, &qs], &mut out, &mut err);
            assert_eq!(d, o, "{{{p},{q}}}");
            assert!(d <= 1);
        }
    }
}

#[test]
fn verify_pipeline() {
    let o = run(&["verify", "3", "8", "--depth", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["passed"], true);
    for check in report["checks"].as_array().unwrap() {
        assert_eq!(check["pass"], true, "{check}");
        if let Some(r) = check["residual"].as_f64() {
            assert!(r < 1e-8, "{check}");
        }
    }

    let o = run(&["verify", "6", "4", "--depth", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    let o = run(&["verify", "3", "7"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).is_empty());
}

#[test]
fn json_is_byte_stable() {
    for args in [
        ["verify", "5", "4", "--depth", "2"],
        ["sigma", "7", "3", "--format", "json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn render_writes_one_path_per_reference_tile() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.svg");
    let path_str = path.to_str().unwrap();

    let o = run(&["render", "3", "7", "--depth", "2", "-o", path_str]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let svg = std::fs::read_to_string(&path).unwrap();
    let expected = reference_patch(3, 7, 2).unwrap().len();
    assert_eq!(svg.matches("class=\"tile\"").count(), expected);
    assert!(!svg.contains("<text"));

    let o = run(&["render", "5", "4", "--depth", "1", "-o", path_str]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("class=\"tile\"").count(), 6);

    let o = run(&["render", "5", "4", "--depth", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let svg = stdout(&o);
    assert_eq!(svg.matches("class=\"tile\"").count(), 1);
}

#[test]
fn io_failures_exit_4() {
    let o = run(&["render", "5", "4", "-o", "/nonexistent-dir/x/t.svg"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).starts_with("status=io-error code=4: "));

    let o = run(&["sigma", "5", "4", "--out", "/nonexistent-dir/x/w.json"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn out_flag_redirects_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let o = run(&["sigma", "7", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"sigma_cycles\":\"(3 7)(5 6)\""));
}

#[test]
fn every_exit_has_one_status_line() {
    for args in [
        vec!["decide", "4", "6"],
        vec!["decide", "4", "5"],
        vec!["decide", "4", "4"],
        vec!["verify", "7", "3", "--depth", "1"],
        vec!["render", "3", "7", "--depth", "9"],
        vec!["bogus"],
    ] {
        let o = run(&args);
        let err = stderr(&o);
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        let code = o.status.code().unwrap();
        assert!(err.starts_with("status="), "{err}");
        assert!(err.contains(&format!("code={code}:")), "{err}");
    }
}
