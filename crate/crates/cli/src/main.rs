//! `berger`: tables of spectral and bifurcation data for the Berger sphere
//! families, as CSV or JSON.

mod args;
mod commands;
mod emit;

use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;

use args::{Cli, Command, Format};
use commands::Fmt;

fn run(cli: Cli) -> Result<ExitCode> {
    let (output, out, default_format) = match &cli.command {
        Command::Spectrum {
            family,
            scale,
            cutoff,
            out,
        } => {
            let fmt = Fmt::new(&out.precision()?);
            (commands::spectrum(&family.family()?, &scale.scales()?, cutoff, &fmt)?, out, Format::Csv)
        }
        Command::Lambda1 { family, scale, out } => {
            let fmt = Fmt::new(&out.precision()?);
            (commands::lambda1_table(&family.family()?, &scale.scales()?, &fmt)?, out, Format::Csv)
        }
        Command::Diagram {
            family,
            t_range,
            k_limit,
            out,
        } => {
            let precision = out.precision()?;
            let fmt = Fmt::new(&precision);
            let table = commands::diagram_table(&family.family()?, t_range, *k_limit, &precision, &fmt)?;
            (table, out, Format::Csv)
        }
        Command::Degeneracies { family, qmax, out } => {
            let precision = out.precision()?;
            let fmt = Fmt::new(&precision);
            (commands::degeneracies(&family.family()?, *qmax, &precision, &fmt)?, out, Format::Csv)
        }
        Command::Morse {
            family,
            scale,
            qmax,
            out,
        } => {
            let precision = out.precision()?;
            let fmt = Fmt::new(&precision);
            let family = family.family()?;
            let table = match scale.scales()? {
                Some(scales) => commands::morse_at(&family, &scales, &fmt)?,
                None => commands::morse_profile_table(&family, *qmax, &precision, &fmt)?,
            };
            (table, out, Format::Csv)
        }
        Command::Classify {
            family,
            scale,
            tolerance,
            out,
        } => {
            let fmt = Fmt::new(&out.precision()?);
            let table = commands::classify_table(&family.family()?, &scale.scales()?, tolerance, &fmt)?;
            (table, out, Format::Csv)
        }
        Command::Verify { out } => {
            let config = berger_core::VerifyConfig {
                precision: out.precision()?,
                ..Default::default()
            };
            let report = berger_core::verify(&config);
            for check in &report.checks {
                let status = if check.passed { "PASS" } else { "FAIL" };
                eprintln!("{status} {} ({} cases, {:.2}s)", check.name, check.cases, check.seconds);
                for failure in &check.failures {
                    eprintln!("    {failure}");
                }
            }
            let output = commands::verify_table(&report)?;
            emit::write(&output, out.format.unwrap_or(Format::Json), out.output.as_deref())?;
            return Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
    };
    emit::write(&output, out.format.unwrap_or(default_format), out.output.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
