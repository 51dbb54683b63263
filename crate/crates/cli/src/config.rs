//! Flat `key = value` run manifests. Blank lines and `#` comments are
//! ignored; keys are case-sensitive; later lines override earlier ones.
//!
//! Recognised keys: a, nu, omega, z0, g, c, case, method, variable, from, to,
//! points, scale, preset, output, jobs, and `tol.<name>` for verification
//! tolerance overrides.

use crate::presets::Preset;
use crate::sweep::SweepSpec;
use accelrad::{Error, PhysicalParams, SPEED_OF_LIGHT};
use clap::ValueEnum;
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Case {
    Atom,
    Mirror,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Exact,
    Taylor,
    SmallBeta,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variable {
    Omega,
    Nu,
    Z0,
    A,
}

impl Variable {
    pub fn name(&self) -> &'static str {
        match self {
            Variable::Omega => "omega",
            Variable::Nu => "nu",
            Variable::Z0 => "z0",
            Variable::A => "a",
        }
    }

    pub fn apply(&self, p: &PhysicalParams, v: f64) -> PhysicalParams {
        let mut q = *p;
        match self {
            Variable::Omega => q.omega = v,
            Variable::Nu => q.nu = v,
            Variable::Z0 => q.z0 = v,
            Variable::A => q.a = v,
        }
        q
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    Linear,
    Log,
}

const KEYS: [&str; 16] = [
    "a", "nu", "omega", "z0", "g", "c", "case", "method", "variable", "from", "to", "points",
    "scale", "preset", "output", "jobs",
];

pub fn parse_kv(text: &str) -> Result<BTreeMap<String, String>, Error> {
    let mut map = BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("line {}: expected key = value", n + 1)))?;
        let (k, v) = (k.trim(), v.trim());
        if !(KEYS.contains(&k) || k.strip_prefix("tol.").is_some_and(|s| !s.is_empty())) {
            return Err(Error::Config(format!("line {}: unknown key '{k}'", n + 1)));
        }
        if v.is_empty() {
            return Err(Error::Config(format!("line {}: empty value for '{k}'", n + 1)));
        }
        map.insert(k.to_string(), v.to_string());
    }
    Ok(map)
}

pub fn read_file(path: &Path) -> Result<BTreeMap<String, String>, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_kv(&text)
}

pub fn number(key: &str, v: &str) -> Result<f64, Error> {
    v.parse::<f64>()
        .map_err(|_| Error::Config(format!("'{key}' is not a number: {v}")))
}

pub fn choice<T: ValueEnum>(key: &str, v: &str) -> Result<T, Error> {
    T::from_str(v, true).map_err(|_| Error::Config(format!("invalid value for '{key}': {v}")))
}

/// Everything a command needs, merged from defaults, an optional file, a
/// preset and command-line flags (in increasing precedence).
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: PhysicalParams,
    pub case: Case,
    pub method: MethodChoice,
    pub sweep: Option<SweepSpec>,
    pub output_path: Option<String>,
    pub jobs: Option<usize>,
    pub tolerances: BTreeMap<String, f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            params: PhysicalParams::new(1e15, 1e4, 1e5, 0.01, 1e7).with_c(SPEED_OF_LIGHT),
            case: Case::Atom,
            method: MethodChoice::Exact,
            sweep: None,
            output_path: None,
            jobs: None,
            tolerances: BTreeMap::new(),
        }
    }
}

/// Sweep fields collected before they are known to be complete.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PartialSweep {
    pub variable: Option<Variable>,
    pub from: Option<f64>,
    pub to: Option<f64>,
    pub points: Option<usize>,
    pub scale: Option<Scale>,
}

impl RunConfig {
    /// Apply one key; sweep keys accumulate in `sweep_parts`.
    pub fn set(&mut self, key: &str, v: &str, sweep_parts: &mut PartialSweep) -> Result<(), Error> {
        let p = &mut self.params;
        match key {
            "a" => p.a = number(key, v)?,
            "nu" => p.nu = number(key, v)?,
            "omega" => p.omega = number(key, v)?,
            "z0" => p.z0 = number(key, v)?,
            "g" => p.g = number(key, v)?,
            "c" => p.c = number(key, v)?,
            "case" => self.case = choice(key, v)?,
            "method" => self.method = choice(key, v)?,
            "variable" => sweep_parts.variable = Some(choice(key, v)?),
            "scale" => sweep_parts.scale = Some(choice(key, v)?),
            "from" => sweep_parts.from = Some(number(key, v)?),
            "to" => sweep_parts.to = Some(number(key, v)?),
            "points" => {
                sweep_parts.points = Some(
                    v.parse()
                        .map_err(|_| Error::Config(format!("'points' is not a count: {v}")))?,
                )
            }
            "preset" => self.apply_preset(choice::<Preset>(key, v)?, sweep_parts),
            "output" => self.output_path = Some(v.to_string()),
            "jobs" => {
                self.jobs = Some(
                    v.parse()
                        .ok()
                        .filter(|&j: &usize| j > 0)
                        .ok_or_else(|| Error::Config(format!("'jobs' must be a positive count: {v}")))?,
                )
            }
            _ => match key.strip_prefix("tol.") {
                Some(name) => {
                    self.tolerances.insert(name.to_string(), number(key, v)?);
                }
                None => return Err(Error::Config(format!("unknown key '{key}'"))),
            },
        }
        Ok(())
    }

    pub fn apply_preset(&mut self, preset: Preset, parts: &mut PartialSweep) {
        let spec = preset.spec();
        self.params = preset.params();
        self.case = spec.case;
        self.method = spec.method;
        *parts = PartialSweep {
            variable: Some(spec.variable),
            from: Some(spec.from),
            to: Some(spec.to),
            points: Some(spec.points),
            scale: Some(spec.scale),
        };
    }

    pub fn apply_map(&mut self, map: &BTreeMap<String, String>, parts: &mut PartialSweep) -> Result<(), Error> {
        // A preset resets the parameters, so it goes first.
        if let Some(v) = map.get("preset") {
            self.set("preset", v, parts)?;
        }
        for (k, v) in map.iter().filter(|(k, _)| k.as_str() != "preset") {
            self.set(k, v, parts)?;
        }
        Ok(())
    }

    /// Resolve the accumulated sweep fields, if any were given.
    pub fn finish_sweep(&mut self, parts: PartialSweep) -> Result<(), Error> {
        if parts == PartialSweep::default() {
            return Ok(());
        }
        let missing = |what: &str| Error::Config(format!("sweep is missing '{what}'"));
        let spec = SweepSpec {
            variable: parts.variable.ok_or_else(|| missing("variable"))?,
            from: parts.from.ok_or_else(|| missing("from"))?,
            to: parts.to.ok_or_else(|| missing("to"))?,
            points: parts.points.ok_or_else(|| missing("points"))?,
            scale: parts.scale.unwrap_or(Scale::Linear),
            case: self.case,
            method: self.method,
        };
        spec.validate()?;
        self.sweep = Some(spec);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_overrides() {
        let m = parse_kv("# run\na = 1e15\n\nnu=2e4 # photon\nnu = 3e4\ntol.oracle = 1e-5\n").unwrap();
        assert_eq!(m["a"], "1e15");
        assert_eq!(m["nu"], "3e4");
        assert_eq!(m["tol.oracle"], "1e-5");
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(parse_kv("a 1e15").is_err());
        assert!(parse_kv("speed = 3").is_err());
        assert!(parse_kv("a =").is_err());
        assert!(parse_kv("tol. = 1").is_err());
    }

    #[test]
    fn builds_sweep() {
        let mut cfg = RunConfig::default();
        let mut parts = PartialSweep::default();
        let m = parse_kv("variable = nu\nfrom = 1\nto = 10\npoints = 4\nscale = log\ncase = mirror").unwrap();
        cfg.apply_map(&m, &mut parts).unwrap();
        cfg.finish_sweep(parts).unwrap();
        let s = cfg.sweep.unwrap();
        assert_eq!(s.variable, Variable::Nu);
        assert_eq!(s.case, Case::Mirror);
        assert_eq!(s.points, 4);
    }

    #[test]
    fn incomplete_sweep_is_an_error() {
        let mut cfg = RunConfig::default();
        let parts = PartialSweep { from: Some(1.0), ..Default::default() };
        assert!(cfg.finish_sweep(parts).is_err());
    }

    #[test]
    fn preset_then_override() {
        let mut cfg = RunConfig::default();
        let mut parts = PartialSweep::default();
        let m = parse_kv("points = 7\npreset = fig2").unwrap();
        cfg.apply_map(&m, &mut parts).unwrap();
        cfg.finish_sweep(parts).unwrap();
        assert_eq!(cfg.sweep.unwrap().points, 7);
        assert_eq!(cfg.params.omega, 1e9);
    }
}
