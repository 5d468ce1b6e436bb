use std::path::PathBuf;
use std::process::Command;

use qkostant::cli::run_with;
use qkostant::HilbertReport;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qkostant").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qkostant-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn lusztig_rank_one() {
    let (code, out, _) = run(&["lusztig", "--type", "A1", "--levi", "", "--lambda", "2", "--mu", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "q");
}

#[test]
fn lusztig_json_and_negative_weights() {
    let (code, out, _) = run(&["lusztig", "--type", "A2", "--lambda", "1,1", "--mu", "0,0", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"coeffs":[0,1,1]}"#);

    // a non-dominant μ is allowed; the sum simply has more cancellation
    let (code, out, _) = run(&["lusztig", "--type", "A2", "--lambda", "1,1", "--mu", "-1,2"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn partition_a2() {
    let (code, out, _) = run(&["partition", "--type", "A2", "--levi", "", "--target", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "q + q^2");

    let (code, out, _) = run(&["partition", "--type", "A2", "--target", "2,2", "--max-degree", "2", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"coeffs":[0,0,1],"truncated":true}"#);
}

#[test]
fn hilbert_json_round_trip() {
    let (code, out, _) = run(&["hilbert", "--type", "A1", "--levi", "", "--mu", "0", "--max-degree", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let report = HilbertReport::from_json(out.trim()).unwrap();
    assert_eq!(report.dims, vec![1, 3, 5]);
    assert!(report.covered);
    assert_eq!(report.to_json(), out.trim());
}

#[test]
fn hilbert_text_latex_and_sampled_check() {
    let args = ["hilbert", "--type", "B2", "--levi", "1", "--mu", "0,1", "--max-degree", "3"];
    let (code, text, _) = run(&args);
    assert_eq!(code, 0);
    let (code, sampled, _) = run(&[&args[..], &["--check", "sampled"]].concat());
    assert_eq!(code, 0);
    assert_eq!(text, sampled);
    let (code, latex, _) = run(&[&args[..], &["--format", "latex"]].concat());
    assert_eq!(code, 0);
    assert!(latex.contains("\\begin{tabular}"));
}

#[test]
fn roots_and_character() {
    let (code, out, _) = run(&["roots", "--type", "G2", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(doc["cartan"], serde_json::json!([[2, -3], [-1, 2]]));
    assert_eq!(doc["highest_root"], serde_json::json!([3, 2]));
    assert_eq!(doc["weyl_order"], "12");

    let (code, out, _) = run(&["character", "--type", "A2", "--lambda", "1,1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("V_(1,1) of A2: dim 8"));
    assert!(out.contains("(0,0)  2"));
}

#[test]
fn invalid_input_exits_1() {
    for args in [
        &["lusztig", "--type", "X9", "--lambda", "0", "--mu", "0"][..],
        &["lusztig", "--type", "A2", "--lambda", "1", "--mu", "0,0"],
        &["lusztig", "--type", "A2", "--lambda", "-1,0", "--mu", "0,0"],
        &["partition", "--type", "A2", "--levi", "3", "--target", "1,1"],
        &["roots", "--type", "A2", "--format", "latex"],
        &["frobnicate"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(err.starts_with("error[invalid-input]: "), "{err}");
        assert_eq!(err.lines().count(), 1, "{err}");
    }
}

#[test]
fn limit_exceeded_exits_2() {
    let (code, _, err) = run(&["--weyl-cap", "10", "lusztig", "--type", "A3", "--lambda", "1,0,1", "--mu", "0,0,0"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error[limit-exceeded]: "), "{err}");
}

#[test]
fn identity_violation_maps_to_3() {
    let e = qkostant::Error::IdentityViolation("paths disagree".into());
    assert_eq!(e.exit_code(), 3);
    assert_eq!(e.kind(), "identity-violation");
}

#[test]
fn help_exits_0() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["roots", "partition", "lusztig", "hilbert", "character", "verify"] {
        assert!(out.contains(sub), "{sub} missing from help");
    }
}

#[test]
fn config_file_supplies_defaults() {
    let dir = scratch_dir("config");
    let cfg = dir.join("qkostant.conf");
    std::fs::write(&cfg, "# defaults\nmax_degree = 2\nweyl_cap = 10\n").unwrap();
    let cfg = cfg.to_str().unwrap();

    let (code, out, _) = run(&["--config", cfg, "hilbert", "--type", "A1", "--mu", "0", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(HilbertReport::from_json(out.trim()).unwrap().dims, vec![1, 3, 5]);

    // the cap from the file applies, and the flag overrides it
    let (code, _, _) = run(&["--config", cfg, "lusztig", "--type", "A3", "--lambda", "1,0,1", "--mu", "0,0,0"]);
    assert_eq!(code, 2);
    let (code, _, _) =
        run(&["--config", cfg, "--weyl-cap", "24", "lusztig", "--type", "A3", "--lambda", "1,0,1", "--mu", "0,0,0"]);
    assert_eq!(code, 0);

    std::fs::write(dir.join("bad.conf"), "colour = blue\n").unwrap();
    let (code, _, _) = run(&["--config", dir.join("bad.conf").to_str().unwrap(), "roots", "--type", "A1"]);
    assert_eq!(code, 1);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn cache_dir_persists_partition_memo() {
    let dir = scratch_dir("cache");
    let bin = env!("CARGO_BIN_EXE_qkostant");
    let args = ["lusztig", "--type", "B2", "--levi", "1", "--lambda", "2,2", "--mu", "0,0"];
    let first = Command::new(bin).args(args).env("QKOSTANT_CACHE_DIR", &dir).output().unwrap();
    assert!(first.status.success());
    let memo = dir.join("partition-B2-levi1.json");
    assert!(memo.exists(), "no memo written");
    let second = Command::new(bin).args(args).env("QKOSTANT_CACHE_DIR", &dir).output().unwrap();
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout);

    // a memo for a different parabolic is ignored, not silently reused
    std::fs::copy(&memo, dir.join("partition-B2-levi2.json")).unwrap();
    let other = ["lusztig", "--type", "B2", "--levi", "2", "--lambda", "2,2", "--mu", "0,0"];
    let cached = Command::new(bin).args(other).env("QKOSTANT_CACHE_DIR", &dir).output().unwrap();
    let fresh = Command::new(bin).args(other).env_remove("QKOSTANT_CACHE_DIR").output().unwrap();
    assert!(cached.status.success());
    assert_eq!(cached.stdout, fresh.stdout);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn verify_subset() {
    let (code, out, _) = run(&["verify", "--types", "A1,A2,B2", "--height", "4", "--max-degree", "2"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().count(), 8);
    assert!(out.lines().all(|l| l.starts_with("[PASS] criterion ")), "{out}");
}
