use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use qstrat_cli::Report;

const FIXTURES: [&str; 8] = [
    "a2_hereditary",
    "local_kx2",
    "local_rad2",
    "s81_qh",
    "s82",
    "s825",
    "s84_nonselfinj",
    "s84_selfinj",
];

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.json"))
}

fn qstrat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qstrat")).args(args).output().expect("binary runs")
}

fn json_report(cmd: &str, name: &str, extra: &[&str]) -> (Report, String) {
    let path = fixture(name);
    let mut args = vec![cmd, path.to_str().unwrap(), "--json"];
    args.extend_from_slice(extra);
    let out = qstrat(&args);
    assert_eq!(out.status.code(), Some(0), "{cmd} {name}: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    (serde_json::from_str(&text).expect("report parses"), text)
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("qstrat-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn report_s82_dimensions() {
    let (r, _) = json_report("report", "s82", &[]);
    assert_eq!(r.algebra.dim, 11);
    assert_eq!(r.ringel.as_ref().unwrap().dim, 8);
    assert_eq!(r.two_step.as_ref().unwrap().two_step_dual.as_ref().unwrap().dim, 7);
    assert!(r.violations().is_empty());
}

#[test]
fn analyze_local_kx2() {
    let (r, _) = json_report("analyze", "local_kx2", &["--dump"]);
    assert!(r.classification.properly_stratified);
    let t = &r.tables[0].modules;
    let get = |n: &str| t.iter().find(|m| m.name == n).unwrap().module.clone().unwrap();
    assert_eq!(get("Δ"), get("P"));
    assert_eq!(get("∇"), get("I"));
    assert!(r.ringel.is_none() && r.two_step.is_none());
}

#[test]
fn twostep_s82_verdict() {
    let (_, text) = json_report("twostep", "s82", &[]);
    assert!(text.contains("\"ringel_dual_properly_stratified\": true"));
}

#[test]
fn report_never_exits_4() {
    for name in FIXTURES {
        let out = qstrat(&["report", fixture(name).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn json_is_deterministic_and_round_trips() {
    for name in FIXTURES {
        let (r, a) = json_report("report", name, &["--certificates"]);
        let (_, b) = json_report("report", name, &["--certificates"]);
        assert_eq!(a, b, "{name}");
        let emitted = serde_json::to_string_pretty(&r).unwrap();
        assert_eq!(serde_json::from_str::<Report>(&emitted).unwrap(), r, "{name}");
        assert_eq!(emitted.trim_end(), a.trim_end(), "{name}");
    }
}

#[test]
fn seed_does_not_change_the_answer() {
    let (_, a) = json_report("twostep", "s84_selfinj", &["--seed", "1"]);
    let (_, b) = json_report("twostep", "s84_selfinj", &["--seed", "987654321"]);
    assert_eq!(a, b);
}

#[test]
fn tilting_equals_cotilting_only_when_self_injective() {
    let (r, _) = json_report("twostep", "s84_selfinj", &[]);
    assert_eq!(r.two_step.unwrap().tilting_is_cotilting, Some(true));
    let (r, _) = json_report("twostep", "s84_nonselfinj", &[]);
    assert_eq!(r.two_step.unwrap().tilting_is_cotilting, Some(false));
}

#[test]
fn certificates_cover_tilting_modules() {
    let (r, _) = json_report("twostep", "s82", &["--certificates"]);
    let certs = r.certificates.unwrap();
    for v in ["1", "2"] {
        for fam in ["Δ", "∇̄", "N"] {
            assert!(certs.iter().any(|c| c.module == format!("T({v})") && c.family == fam), "T({v}) in F({fam})");
        }
        assert!(certs.iter().any(|c| c.module == format!("H({v})") && c.family == "N"));
    }
    let (r, _) = json_report("twostep", "s82", &[]);
    assert!(r.certificates.is_none());
}

#[test]
fn field_flag() {
    let (q, _) = json_report("ringel", "s82", &["--field", "q"]);
    let (p, _) = json_report("ringel", "s82", &["--field", "gf:3"]);
    assert_eq!(q.ringel.unwrap().dim, p.ringel.unwrap().dim);
    let out = qstrat(&["analyze", fixture("s82").to_str().unwrap(), "--field", "gf:4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn findim_s825() {
    let (r, _) = json_report("findim", "s825", &[]);
    let f = r.findim.unwrap();
    assert_eq!(f.findim, 2);
    assert!(f.identities.iter().all(|c| c.holds));
    assert!(!f.identities.is_empty());
}

#[test]
fn input_errors_exit_2() {
    let out = qstrat(&["analyze", "/nonexistent/qstrat.json"]);
    assert_eq!(out.status.code(), Some(2));
    let bad = temp_file("bad.json", "{\"vertices\": ");
    let out = qstrat(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn tilting_commands_need_standard_stratification() {
    let (r, _) = json_report("report", "s82", &[]);
    let b = r.two_step.unwrap().two_step_dual.unwrap();
    assert!(!b.classification.sss);
    let path = temp_file("b.json", &serde_json::to_string(&b.presentation).unwrap());
    let out = qstrat(&["ringel", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = qstrat(&["report", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert!(r.two_step.is_none() && !r.notes.is_empty());
}

#[test]
fn small_cap_exits_3() {
    let out = qstrat(&["findim", fixture("s825").to_str().unwrap(), "--cap", "1"]);
    assert_eq!(out.status.code(), Some(3));
}
