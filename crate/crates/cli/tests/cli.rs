use std::collections::BTreeMap;
use std::process::{Command, Output};

fn accelrad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_accelrad"))
        .args(args)
        .env_remove("ACCELRAD_JOBS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn kv(o: &Output) -> BTreeMap<String, String> {
    String::from_utf8_lossy(&o.stdout)
        .lines()
        .map(|l| {
            let (k, v) = l.split_once('=').unwrap_or_else(|| panic!("not key=value: {l}"));
            (k.to_string(), v.to_string())
        })
        .collect()
}

const REFERENCE: [&str; 12] = ["--a", "1e15", "--nu", "1e4", "--omega", "1e5", "--z0", "0.01", "--g", "1e7", "--c", "3e8"];

#[test]
fn eval_prints_a_positive_record() {
    let mut args = vec!["eval", "--case", "atom", "--method", "exact"];
    args.extend(REFERENCE);
    let o = accelrad(&args);
    assert_eq!(code(&o), 0);
    let m = kv(&o);
    assert!(m["P"].parse::<f64>().unwrap() > 0.0);
    for key in ["log10P", "theta", "planck", "warnings", "method"] {
        assert!(m.contains_key(key), "{key}");
    }
}

#[test]
fn zero_coupling_gives_zero() {
    let o = accelrad(&["eval", "--g", "0"]);
    assert_eq!(code(&o), 0);
    assert_eq!(kv(&o)["P"].parse::<f64>().unwrap(), 0.0);
}

#[test]
fn wedge_violation_is_input_error() {
    let o = accelrad(&["eval", "--z0", "1", "--a", "1e18"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("Rindler wedge"));
}

#[test]
fn bad_flags_are_input_errors() {
    assert_eq!(code(&accelrad(&["eval", "--nu", "abc"])), 2);
    assert_eq!(code(&accelrad(&["eval", "--case", "planet"])), 2);
    assert_eq!(code(&accelrad(&["verify", "--suite", "nonsense"])), 2);
    assert_eq!(code(&accelrad(&["eval", "--case", "atom", "--method", "taylor"])), 2);
}

#[test]
fn oracle_out_of_reach_is_no_convergence() {
    let o = accelrad(&["eval", "--case", "atom", "--method", "oracle", "--omega", "1e9", "--nu", "1e4", "--c", "3e8"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn failing_verification_exits_one() {
    let o = accelrad(&["verify", "--suite", "special", "--tol", "gamma_identity=0"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("FAIL gamma_modulus_identity"));
    assert_eq!(code(&accelrad(&["verify", "--suite", "special", "--tol", "unknown=1"])), 2);
}

#[test]
fn two_point_sweep_has_header_and_two_rows() {
    let o = accelrad(&["sweep", "--variable", "omega", "--from", "1e4", "--to", "1e5", "--points", "2"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "index,variable,value,P,log10P,theta,planck,warnings");
    assert!(lines[2].starts_with("1,omega,1.0000000000000000e5,"));
    assert!(!text.contains('\r'));
}

#[test]
fn failed_points_become_rows() {
    let o = accelrad(&["sweep", "--variable", "z0", "--from", "-1", "--to", "0.01", "--points", "3"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().nth(1).unwrap().ends_with(",,,,,error:negative_input"));
}

#[test]
fn all_points_failing_is_an_error() {
    let o = accelrad(&["sweep", "--variable", "z0", "--from", "-2", "--to", "-1", "--points", "3"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    let out = dir.path().join("out.csv");
    std::fs::write(&cfg, "# manifest\ncase = mirror\nvariable = nu\nfrom = 1e3\nto = 1e4\npoints = 4\nscale = log\nomega = 1e9\n").unwrap();
    let o = accelrad(&["sweep", "--config", cfg.to_str().unwrap(), "--points", "3", "--output", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 4);
    std::fs::write(&cfg, "speed = 3\n").unwrap();
    assert_eq!(code(&accelrad(&["eval", "--config", cfg.to_str().unwrap()])), 2);
}

#[test]
fn sweep_is_deterministic_across_job_counts() {
    let args = ["sweep", "--preset", "fig2", "--points", "40"];
    let one = accelrad(&[&args[..], &["--jobs", "1"]].concat());
    let many = accelrad(&[&args[..], &["--jobs", "4"]].concat());
    let again = accelrad(&args);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(one.stdout, again.stdout);
}

#[test]
fn equivalence_report_is_key_value() {
    let o = accelrad(&["equivalence", "--a", "1e15", "--nu", "5e5", "--omega", "1e6", "--z0", "0.01", "--g", "1e7", "--c", "3e8"]);
    assert_eq!(code(&o), 0);
    let m = kv(&o);
    assert_eq!(m["verdict"], "NONEQUIVALENT");
    assert!(m["dual.rel_difference"].parse::<f64>().unwrap() > 0.01);
    assert!(m["control.rel_difference"].parse::<f64>().unwrap() < 1e-3);
}

#[test]
fn degenerate_equivalence_is_inconclusive() {
    let o = accelrad(&["equivalence", "--g", "0"]);
    assert_eq!(code(&o), 0);
    assert_eq!(kv(&o)["verdict"], "INCONCLUSIVE");
}
