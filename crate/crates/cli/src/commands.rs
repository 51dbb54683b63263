use crate::config::{read_file, Case, MethodChoice, PartialSweep, RunConfig, Scale, Variable};
use crate::csvout::write_rows;
use crate::exit;
use crate::presets::Preset;
use crate::sweep::{evaluate, run_sweep};
use crate::verify::{run_suite, Suite, Tolerances};
use accelrad::closedform::ProbabilityResult;
use accelrad::equivalence::{nonequivalence_report, single_photon_control, verdict, EquivalenceReport};
use accelrad::Error;
use clap::{Args, Parser, Subcommand};
use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "accelrad", version, about = "Two-photon excitation probabilities near an accelerated mirror")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one probability and print it as key=value lines.
    Eval(Common),
    /// Evaluate over a grid and write CSV.
    Sweep(SweepArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Compare the swapped dual-photon pair against the single-photon control.
    Equivalence(Common),
}

#[derive(Debug, Clone, Default, Args)]
pub struct Common {
    /// Flat key = value file; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub nu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub omega: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub z0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub g: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub c: Option<f64>,
    #[arg(long, value_enum)]
    pub case: Option<Case>,
    #[arg(long, value_enum)]
    pub method: Option<MethodChoice>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    #[arg(long, value_enum)]
    pub variable: Option<Variable>,
    #[arg(long, allow_negative_numbers = true)]
    pub from: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub to: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long, value_enum)]
    pub scale: Option<Scale>,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Worker threads for point evaluation.
    #[arg(long, env = "ACCELRAD_JOBS")]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct VerifyArgs {
    /// Suites to run; defaults to special, integrals, figures and equivalence.
    #[arg(long, value_enum)]
    pub suite: Vec<Suite>,
    /// Tolerance override, NAME=VALUE.
    #[arg(long = "tol", value_parser = parse_tol)]
    pub tol: Vec<(String, f64)>,
    /// Config file; only its tol.* keys are used.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

fn parse_tol(s: &str) -> Result<(String, f64), String> {
    let (k, v) = s.split_once('=').ok_or("expected NAME=VALUE")?;
    let v: f64 = v.trim().parse().map_err(|_| format!("not a number: {v}"))?;
    if !(v.is_finite() && v >= 0.0) {
        return Err(format!("tolerance must be finite and non-negative: {v}"));
    }
    Ok((k.trim().to_string(), v))
}

pub const DEFAULT_SUITES: [Suite; 4] = [Suite::Special, Suite::Integrals, Suite::Figures, Suite::Equivalence];

impl Common {
    fn apply(&self, cfg: &mut RunConfig) {
        let p = &mut cfg.params;
        for (slot, v) in [
            (&mut p.a, self.a),
            (&mut p.nu, self.nu),
            (&mut p.omega, self.omega),
            (&mut p.z0, self.z0),
            (&mut p.g, self.g),
            (&mut p.c, self.c),
        ] {
            if let Some(v) = v {
                *slot = v;
            }
        }
        if let Some(c) = self.case {
            cfg.case = c;
        }
        if let Some(m) = self.method {
            cfg.method = m;
        }
    }
}

/// Defaults, then the file, then a preset flag, then the remaining flags.
pub fn resolve(common: &Common, sweep: Option<&SweepArgs>) -> Result<RunConfig, Error> {
    let mut cfg = RunConfig::default();
    let mut parts = PartialSweep::default();
    if let Some(path) = &common.config {
        cfg.apply_map(&read_file(path)?, &mut parts)?;
    }
    if let Some(preset) = sweep.and_then(|s| s.preset) {
        cfg.apply_preset(preset, &mut parts);
    }
    common.apply(&mut cfg);
    if let Some(s) = sweep {
        parts.variable = s.variable.or(parts.variable);
        parts.from = s.from.or(parts.from);
        parts.to = s.to.or(parts.to);
        parts.points = s.points.or(parts.points);
        parts.scale = s.scale.or(parts.scale);
        if let Some(o) = &s.output {
            cfg.output_path = Some(o.display().to_string());
        }
        if s.jobs.is_some() {
            cfg.jobs = s.jobs;
        }
    }
    cfg.finish_sweep(parts)?;
    Ok(cfg)
}

fn report_error(e: &Error) -> i32 {
    eprintln!("error: {e}");
    exit::code_for(e)
}

fn print_result(out: &mut impl Write, prefix: &str, r: &ProbabilityResult) -> io::Result<()> {
    writeln!(out, "{prefix}method={}", r.method.tag())?;
    writeln!(out, "{prefix}P={:.16e}", r.value)?;
    writeln!(out, "{prefix}log10P={:.16e}", r.log10_value)?;
    writeln!(out, "{prefix}theta={:.16e}", r.angles.theta)?;
    writeln!(out, "{prefix}theta_prime={:.16e}", r.angles.theta_prime)?;
    writeln!(out, "{prefix}theta_bar={:.16e}", r.angles.theta_bar)?;
    writeln!(out, "{prefix}theta_dprime={:.16e}", r.angles.theta_dprime)?;
    writeln!(out, "{prefix}planck={:.16e}", r.planck_factor)?;
    writeln!(out, "{prefix}warnings={}", r.warning_tags())
}

pub fn cmd_eval(common: &Common) -> i32 {
    let cfg = match resolve(common, None) {
        Ok(c) => c,
        Err(e) => return report_error(&e),
    };
    match evaluate(&cfg.params, cfg.case, cfg.method) {
        Ok(r) => {
            let mut out = io::stdout().lock();
            let case = match cfg.case {
                Case::Atom => "atom",
                Case::Mirror => "mirror",
            };
            let written = writeln!(out, "case={case}").and_then(|_| print_result(&mut out, "", &r));
            match written {
                Ok(()) => exit::SUCCESS,
                Err(e) => report_error(&Error::Config(format!("cannot write output: {e}"))),
            }
        }
        Err(e) => report_error(&e),
    }
}

pub fn cmd_sweep(args: &SweepArgs) -> i32 {
    let cfg = match resolve(&args.common, Some(args)) {
        Ok(c) => c,
        Err(e) => return report_error(&e),
    };
    let Some(spec) = cfg.sweep else {
        return report_error(&Error::Config("no sweep given: use --preset or --variable/--from/--to/--points".into()));
    };
    let rows = match cfg.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| run_sweep(&cfg.params, &spec)),
            Err(e) => return report_error(&Error::Config(format!("cannot start {j} workers: {e}"))),
        },
        None => run_sweep(&cfg.params, &spec),
    };
    let written = match &cfg.output_path {
        Some(path) => File::create(path)
            .map_err(|e| Error::Config(format!("cannot create {path}: {e}")))
            .and_then(|f| write_rows(BufWriter::new(f), &rows).map_err(|e| Error::Config(e.to_string()))),
        None => write_rows(io::stdout().lock(), &rows).map_err(|e| Error::Config(e.to_string())),
    };
    if let Err(e) = written {
        return report_error(&e);
    }
    let failures: Vec<&Error> = rows.iter().filter_map(|r| r.outcome.as_ref().err()).collect();
    if !failures.is_empty() {
        eprintln!("{} of {} points failed", failures.len(), rows.len());
    }
    if failures.len() == rows.len() {
        return report_error(failures[0]);
    }
    exit::SUCCESS
}

pub fn cmd_verify(args: &VerifyArgs) -> i32 {
    let mut overrides = BTreeMap::new();
    if let Some(path) = &args.config {
        let map = match read_file(path) {
            Ok(m) => m,
            Err(e) => return report_error(&e),
        };
        for (k, v) in &map {
            if let Some(name) = k.strip_prefix("tol.") {
                match crate::config::number(k, v) {
                    Ok(x) => overrides.insert(name.to_string(), x),
                    Err(e) => return report_error(&e),
                };
            }
        }
    }
    overrides.extend(args.tol.iter().cloned());
    let tol = match Tolerances::with_overrides(&overrides) {
        Ok(t) => t,
        Err(e) => return report_error(&Error::Config(e)),
    };
    let suites: &[Suite] = if args.suite.is_empty() { &DEFAULT_SUITES } else { &args.suite };
    let mut all = true;
    for &suite in suites {
        let name = suite_name(suite);
        for check in run_suite(suite, &tol) {
            all &= check.passed;
            println!("{name}: {check}");
        }
    }
    println!("overall: {}", if all { "PASS" } else { "FAIL" });
    if all {
        exit::SUCCESS
    } else {
        exit::VERIFY_FAILED
    }
}

pub fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Special => "special",
        Suite::Integrals => "integrals",
        Suite::Consistency => "consistency",
        Suite::Figures => "figures",
        Suite::Equivalence => "equivalence",
    }
}

fn print_report(out: &mut impl Write, prefix: &str, r: &EquivalenceReport) -> io::Result<()> {
    print_result(out, &format!("{prefix}.atom_swapped."), &r.p_atom_swapped)?;
    print_result(out, &format!("{prefix}.mirror_swapped."), &r.p_mirror_swapped)?;
    print_result(out, &format!("{prefix}.mirror_exact."), &r.p_mirror_exact_swapped)?;
    writeln!(out, "{prefix}.rel_difference={:.16e}", r.rel_difference)?;
    writeln!(out, "{prefix}.rel_difference_exact={:.16e}", r.rel_difference_exact)?;
    writeln!(out, "{prefix}.angle_match={}", r.angle_match)?;
    writeln!(out, "{prefix}.planck_match={}", r.planck_match)
}

pub fn cmd_equivalence(common: &Common) -> i32 {
    let cfg = match resolve(common, None) {
        Ok(c) => c,
        Err(e) => return report_error(&e),
    };
    let reports = nonequivalence_report(&cfg.params)
        .and_then(|d| single_photon_control(&cfg.params).map(|c| (d, c)));
    match reports {
        Ok((dual, control)) => {
            let mut out = io::stdout().lock();
            let written = print_report(&mut out, "dual", &dual)
                .and_then(|_| print_report(&mut out, "control", &control))
                .and_then(|_| writeln!(out, "verdict={}", verdict(&dual, &control).tag()));
            match written {
                Ok(()) => exit::SUCCESS,
                Err(e) => report_error(&Error::Config(format!("cannot write output: {e}"))),
            }
        }
        Err(e) => report_error(&e),
    }
}

pub fn run(cli: Cli) -> i32 {
    match &cli.command {
        Command::Eval(c) => cmd_eval(c),
        Command::Sweep(s) => cmd_sweep(s),
        Command::Verify(v) => cmd_verify(v),
        Command::Equivalence(c) => cmd_equivalence(c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_preset() {
        let args = SweepArgs {
            preset: Some(Preset::Fig2),
            points: Some(5),
            common: Common { z0: Some(0.02), ..Default::default() },
            ..Default::default()
        };
        let cfg = resolve(&args.common, Some(&args)).unwrap();
        assert_eq!(cfg.params.z0, 0.02);
        assert_eq!(cfg.params.omega, 1e9);
        assert_eq!(cfg.sweep.unwrap().points, 5);
    }

    #[test]
    fn tol_parsing() {
        assert_eq!(parse_tol("oracle=1e-5").unwrap(), ("oracle".to_string(), 1e-5));
        assert!(parse_tol("oracle").is_err());
        assert!(parse_tol("oracle=-1").is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
