use crate::sweep::Row;
use accelrad::Error;
use std::io::Write;

pub const HEADER: [&str; 8] = ["index", "variable", "value", "P", "log10P", "theta", "planck", "warnings"];

/// 17 significant digits in scientific notation.
pub fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

fn error_tag(e: &Error) -> String {
    let kind = match e {
        Error::WedgeViolation { .. } => "wedge_violation",
        Error::NonPositiveInput { .. } => "non_positive_input",
        Error::NegativeInput { .. } => "negative_input",
        Error::PoleError { .. } => "pole",
        Error::DomainError { .. } => "domain",
        Error::ParameterPole { .. } => "parameter_pole",
        Error::NoConvergence { .. } => "no_convergence",
        Error::Config(_) => "config",
    };
    format!("error:{kind}")
}

pub fn write_rows<W: Write>(out: W, rows: &[Row]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(HEADER)?;
    for r in rows {
        let (index, value) = (r.index.to_string(), fmt(r.value));
        let fields = match &r.outcome {
            Ok(p) => [
                index,
                r.variable.name().to_string(),
                value,
                fmt(p.value),
                fmt(p.log10_value),
                fmt(p.primary_angle()),
                fmt(p.planck_factor),
                p.warning_tags(),
            ],
            Err(e) => [
                index,
                r.variable.name().to_string(),
                value,
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                error_tag(e),
            ],
        };
        w.write_record(&fields)?;
    }
    w.flush()?;
    Ok(())
}
