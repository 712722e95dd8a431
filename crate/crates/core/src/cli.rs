//! The `nonsos` command line.
//!
//! Exit codes: 0 success, 1 condition failure or invalid certificate,
//! 2 degenerate configuration, 3 usage or parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::certificate::{perturb, verify, Certificate};
use crate::configuration::{cb_coefficients, format_point, parse_points, residual_point, PointConfig, ResidualOptions};
use crate::error::{exit, Error, Result};
use crate::exactq::{fmt_rat, parse_rat, Rat};
use crate::forms::Form;
use crate::pipeline::{certify, CertifyOutcome, CertifyRequest, Extras};
use crate::regression;
use crate::scan::{rows_to_csv, scan_motzkin_symmetric, Grid};

#[derive(Debug, Parser)]
#[command(name = "nonsos", version, about = "Exact certificates that nonnegative forms are not sums of squares")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SeedArg {
    /// Seed for coordinate changes and random extra points.
    #[arg(long, env = "NONSOS_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and verify a certificate for a form with known zeros.
    Certify {
        /// Form file.
        poly: PathBuf,
        /// Points file with the real zeros of the form.
        zeros: PathBuf,
        /// Points file with the extra points.
        #[arg(required_unless_present = "auto_extra", conflicts_with = "auto_extra")]
        extras: Option<PathBuf>,
        /// Draw the extra points at random.
        #[arg(long)]
        auto_extra: bool,
        /// Position (1-based) of the point carrying the negative weight.
        #[arg(long)]
        neg_index: Option<usize>,
        /// Weight on the zeros; must exceed the threshold.
        #[arg(long = "N", value_parser = rat_arg)]
        n: Option<Rat>,
        #[command(flatten)]
        seed: SeedArg,
        /// Certificate output file; printed to standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against a form.
    Verify { poly: PathBuf, certificate: PathBuf },
    /// Print the residual intersection point of 8 (or 7) points.
    Complete {
        points: PathBuf,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Print the Cayley-Bacharach coefficients of 9 (or 8) points.
    Cb { points: PathBuf },
    /// Scan a two-parameter family of extra points.
    Scan {
        #[arg(long, value_parser = ["motzkin-symmetric"])]
        family: String,
        /// qmin qmax smin smax step
        #[arg(long, num_args = 5, value_names = ["QMIN", "QMAX", "SMIN", "SMAX", "STEP"], allow_hyphen_values = true, value_parser = rat_arg)]
        grid: Vec<Rat>,
        #[command(flatten)]
        seed: SeedArg,
        /// CSV output file; printed to standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Add a multiple of an interior form so the certificate still separates.
    Perturb {
        poly: PathBuf,
        certificate: PathBuf,
        interior: PathBuf,
        /// Output file for the perturbed form; printed when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in reference instances.
    Examples {
        /// Only list the instance names.
        #[arg(long)]
        list: bool,
        name: Option<String>,
    },
}

fn rat_arg(s: &str) -> std::result::Result<Rat, String> {
    parse_rat(s).ok_or_else(|| format!("`{s}` is not a rational number"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::CERTIFIED };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_form(path: &Path) -> Result<Form> {
    Form::parse(&read(path)?)
}

fn read_points(path: &Path) -> Result<(usize, Vec<crate::configuration::Point>)> {
    parse_points(&read(path)?)
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Certify {
            poly,
            zeros,
            extras,
            auto_extra,
            neg_index,
            n,
            seed,
            out: out_path,
        } => {
            let target = read_form(&poly)?;
            let (nz, zero_points) = read_points(&zeros)?;
            if nz != target.nvars() {
                return Err(Error::Usage("zeros file and form disagree on nvars".into()));
            }
            let extras = match extras {
                Some(path) if !auto_extra => {
                    let (ne, pts) = read_points(&path)?;
                    if ne != target.nvars() {
                        return Err(Error::Usage("extras file and form disagree on nvars".into()));
                    }
                    Extras::Given(pts)
                }
                _ => Extras::Auto,
            };
            let neg_index = match neg_index {
                Some(0) => return Err(Error::Usage("--neg-index is 1-based".into())),
                Some(i) => Some(i - 1),
                None => None,
            };
            let req = CertifyRequest {
                target,
                zeros: zero_points,
                extras,
                neg_index,
                n,
                seed: seed.seed,
            };
            let outcome = certify(&req)?;
            let report_sink: &mut dyn Write = if out_path.is_some() { out } else { err };
            let sys = outcome.system();
            writeln!(
                report_sink,
                "residual point: ({})",
                format_point(sys.residual()).replace(' ', ", ")
            )?;
            writeln!(
                report_sink,
                "cayley-bacharach coefficients: {}",
                sys.u.iter().map(fmt_rat).collect::<Vec<_>>().join(" ")
            )?;
            for r in outcome.reports() {
                writeln!(report_sink, "{r}")?;
            }
            match outcome {
                CertifyOutcome::Certified(c) => {
                    writeln!(report_sink, "{}", c.verification)?;
                    emit(&c.certificate.to_text(), out_path.as_deref(), out)?;
                    if let Some(p) = &out_path {
                        writeln!(out, "certificate written to {}", p.display())?;
                    }
                    Ok(exit::CERTIFIED)
                }
                CertifyOutcome::ConditionFailed { .. } => {
                    writeln!(err, "separation condition fails for every candidate point")?;
                    Ok(exit::CONDITION_FAILED)
                }
            }
        }
        Command::Verify { poly, certificate } => {
            let p = read_form(&poly)?;
            let cert = Certificate::parse(&read(&certificate)?)?;
            if cert.nvars() != p.nvars() {
                return Err(Error::Usage("certificate and form disagree on nvars".into()));
            }
            let report = verify(&p, &cert);
            writeln!(out, "{report}")?;
            Ok(if report.valid() { exit::CERTIFIED } else { exit::CONDITION_FAILED })
        }
        Command::Complete { points, seed } => {
            let (nvars, pts) = read_points(&points)?;
            let v = residual_point(nvars, &pts, &ResidualOptions::with_seed(seed.seed))?;
            writeln!(out, "{}", format_point(&v))?;
            Ok(exit::CERTIFIED)
        }
        Command::Cb { points } => {
            let (nvars, pts) = read_points(&points)?;
            let cfg = PointConfig::new(nvars, pts, 0)?;
            let u = cb_coefficients(&cfg)?;
            for x in u {
                writeln!(out, "{}", fmt_rat(&x))?;
            }
            Ok(exit::CERTIFIED)
        }
        Command::Scan {
            family: _,
            grid,
            seed,
            out: out_path,
        } => {
            let grid = Grid {
                qmin: grid[0].clone(),
                qmax: grid[1].clone(),
                smin: grid[2].clone(),
                smax: grid[3].clone(),
                step: grid[4].clone(),
            };
            let rows = scan_motzkin_symmetric(&grid, seed.seed)?;
            emit(&rows_to_csv(&rows), out_path.as_deref(), out)?;
            Ok(exit::CERTIFIED)
        }
        Command::Perturb {
            poly,
            certificate,
            interior,
            out: out_path,
        } => {
            let p = read_form(&poly)?;
            let cert = Certificate::parse(&read(&certificate)?)?;
            let r = read_form(&interior)?;
            let result = perturb(&p, &cert, &r)?;
            let sink: &mut dyn Write = if out_path.is_some() { out } else { err };
            writeln!(sink, "lambda = {}", fmt_rat(&result.lambda))?;
            writeln!(sink, "l_a(p) = {}", fmt_rat(&result.l_p))?;
            writeln!(sink, "l_a(r) = {}", fmt_rat(&result.l_r))?;
            writeln!(sink, "l_a(n) = {}", fmt_rat(&result.l_n))?;
            emit(&result.form.to_text(), out_path.as_deref(), out)?;
            Ok(exit::CERTIFIED)
        }
        Command::Examples { list, name } => {
            let selected = match &name {
                Some(n) => vec![regression::find(n)
                    .ok_or_else(|| Error::Usage(format!("unknown example `{n}`")))?],
                None => regression::fixtures(),
            };
            if list {
                for f in &selected {
                    writeln!(out, "{:<16} {}", f.name, f.description)?;
                }
                return Ok(exit::CERTIFIED);
            }
            let mut failed = 0;
            for f in &selected {
                match f.run() {
                    Ok(summary) => writeln!(out, "PASS  {:<16} {summary}", f.name)?,
                    Err(reason) => {
                        failed += 1;
                        writeln!(out, "FAIL  {:<16} {reason}", f.name)?
                    }
                }
            }
            writeln!(out, "{} passed, {failed} failed", selected.len() - failed)?;
            Ok(if failed == 0 { exit::CERTIFIED } else { exit::CONDITION_FAILED })
        }
    }
}
