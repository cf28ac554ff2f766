//! `ptdirac` command line.
//!
//! Exit codes: 0 success, 1 a verification residual exceeded its limit,
//! 2 bad arguments or an unphysical request, 3 I/O failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::clifford::{Bispinor, Representation};
use crate::error::Error as DomainError;
use crate::format;
use crate::kinematics::{dispersion_table, FourVector, Species, ThreeVector};
use crate::observables::expectation_report;
use crate::spinors::{
    amplitude, dirac_residual, normalization_factor, EnergySign, Helicity, NormalizationContext, PlaneWaveSpec,
};
use crate::symmetries::{apply_boost, apply_discrete, DiscreteKind, Sector};
use crate::verify::{self, VerifyConfig, REFERENCE_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Environment override for the default `--tol`.
pub const TOL_ENV: &str = "PT_DIRAC_TOL";

#[derive(Debug, Parser)]
#[command(name = "ptdirac", version, about = "Pseudotachyon, bradyon and luxon plane waves")]
pub struct Cli {
    /// Residual tolerance; check limits scale with tol / 1e-12.
    #[arg(long, global = true, env = TOL_ENV, default_value_t = REFERENCE_TOL, value_parser = positive)]
    pub tol: f64,

    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    #[arg(long, global = true, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,

    /// Significant digits in printed numbers.
    #[arg(long, global = true, default_value_t = format::DEFAULT_PRECISION as u8, value_parser = clap::value_parser!(u8).range(3..=17))]
    pub precision: u8,

    /// Quantization volume for the normalization constant.
    #[arg(long, global = true, default_value_t = 1.0, value_parser = positive)]
    pub volume: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy–speed table as CSV.
    Dispersion(DispersionArgs),
    /// Helicity amplitude with its norm and wave-equation residual.
    Spinor(SpecArgs),
    /// Mean velocity, 4-velocity, 4-spin and constraint residuals.
    Expect(SpecArgs),
    /// Apply P, C, T, I or a boost and check the image.
    Transform(TransformArgs),
    /// Run the seeded invariant suite.
    Verify,
}

#[derive(Debug, Args)]
pub struct DispersionArgs {
    #[arg(long)]
    pub mass: f64,
    #[arg(long, default_value_t = 0.0)]
    pub eps_min: f64,
    #[arg(long)]
    pub eps_max: f64,
    #[arg(long, default_value_t = 101)]
    pub steps: usize,
    /// Output file; `-` or absent writes to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpeciesArg {
    #[value(name = "pt", alias = "pseudotachyon")]
    Pseudotachyon,
    Bradyon,
    Luxon,
}

impl From<SpeciesArg> for Species {
    fn from(s: SpeciesArg) -> Species {
        match s {
            SpeciesArg::Pseudotachyon => Species::Pseudotachyon,
            SpeciesArg::Bradyon => Species::Bradyon,
            SpeciesArg::Luxon => Species::Luxon,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    #[value(name = "+", alias = "pos", alias = "positive", alias = "u")]
    Positive,
    #[value(name = "-", alias = "neg", alias = "negative", alias = "v")]
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RepArg {
    #[value(name = "std", alias = "standard")]
    Standard,
    #[value(alias = "chiral")]
    Weyl,
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    #[arg(long, value_enum, default_value = "pt")]
    pub species: SpeciesArg,
    #[arg(long, value_enum, default_value = "+", allow_hyphen_values = true)]
    pub sign: SignArg,
    /// `px,py,pz`
    #[arg(long, value_parser = three_vector, allow_hyphen_values = true)]
    pub momentum: ThreeVector,
    #[arg(long, default_value_t = 0.0)]
    pub mass: f64,
    /// `+1` or `-1`
    #[arg(long, value_parser = helicity, default_value = "+1", allow_hyphen_values = true)]
    pub helicity: Helicity,
    #[arg(long, value_enum, default_value = "std")]
    pub rep: RepArg,
}

impl SpecArgs {
    pub fn to_spec(&self) -> Result<PlaneWaveSpec, DomainError> {
        let sign = match self.sign {
            SignArg::Positive => EnergySign::Positive,
            SignArg::Negative => EnergySign::Negative,
        };
        let rep = match self.rep {
            RepArg::Standard => Representation::Standard,
            RepArg::Weyl => Representation::Weyl,
        };
        PlaneWaveSpec::new(self.species.into(), sign, self.momentum, self.mass, self.helicity, rep)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpArg {
    #[value(name = "P", alias = "p")]
    Parity,
    #[value(name = "C", alias = "c")]
    Charge,
    #[value(name = "T", alias = "t")]
    Time,
    #[value(name = "I", alias = "i")]
    Inversion,
    Boost,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long, value_enum)]
    pub op: OpArg,
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub rapidity: f64,
    /// Unit boost axis `nx,ny,nz`.
    #[arg(long, value_parser = three_vector, default_value = "0,0,1", allow_hyphen_values = true)]
    pub axis: ThreeVector,
}

fn positive(s: &str) -> Result<f64, String> {
    let x: f64 = s.trim().parse().map_err(|e| format!("{e}"))?;
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(format!("expected a finite value > 0, got {s}"))
    }
}

fn three_vector(s: &str) -> Result<ThreeVector, String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    <[f64; 3]>::try_from(parts).map_err(|v| format!("expected 3 comma-separated numbers, got {}", v.len()))
}

fn helicity(s: &str) -> Result<Helicity, String> {
    match s.trim() {
        "+1" | "1" | "+" => Ok(Helicity::Plus),
        "-1" | "-" => Ok(Helicity::Minus),
        other => Err(format!("expected +1 or -1, got {other}")),
    }
}

#[derive(Debug, Error)]
enum Failure {
    #[error("{0}")]
    Domain(#[from] DomainError),
    #[error("io: {0}")]
    Io(#[from] io::Error),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Domain(_) => EXIT_USAGE,
            Failure::Io(_) => EXIT_IO,
        }
    }
}

/// Parse `args` (program name first) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = !e.use_stderr();
            let sink: &mut dyn Write = if informational { out } else { err };
            let _ = write!(sink, "{e}");
            return if informational { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let digits = cli.precision as usize;
    let code = match &cli.command {
        Command::Dispersion(a) => {
            let rows = dispersion_table(a.mass, a.eps_min, a.eps_max, a.steps)?;
            match a.out.as_deref().filter(|p| p.as_os_str() != "-") {
                Some(path) => {
                    let mut file = BufWriter::new(File::create(path)?);
                    format::write_dispersion_csv(&mut file, &rows, digits)?;
                    file.flush()?;
                }
                None => format::write_dispersion_csv(out, &rows, digits)?,
            }
            EXIT_OK
        }
        Command::Spinor(a) => {
            let spec = a.to_spec()?;
            let w = amplitude(&spec)?;
            let ctx = NormalizationContext::new(cli.volume)?;
            write_spec(out, &spec, digits)?;
            write_bispinor(out, "w", &w, digits)?;
            writeln!(out, "norm: {}", format::number(w.norm_sqr(), digits))?;
            writeln!(
                out,
                "normalization: {}",
                format::number(normalization_factor(&spec, &ctx)?, digits)
            )?;
            writeln!(out, "dirac_residual: {}", residual(dirac_residual(&spec, &w)?))?;
            EXIT_OK
        }
        Command::Expect(a) => {
            let spec = a.to_spec()?;
            let r = expectation_report(&spec)?;
            write_spec(out, &spec, digits)?;
            writeln!(out, "mean_velocity: {}", format::list(&r.mean_velocity, digits))?;
            let four =
                |v: Option<FourVector>| v.map_or("undefined".to_string(), |v| format::list(&v.components(), digits));
            writeln!(out, "mean_four_velocity: {}", four(r.mean_four_velocity))?;
            writeln!(out, "mean_spin_four_vector: {}", four(r.mean_spin_four_vector))?;
            writeln!(out, "closed_form_defect: {}", residual(r.closed_form_defect))?;
            for c in &r.constraint_residuals {
                writeln!(out, "constraint[{}]: {}", c.label, residual(c.value))?;
            }
            EXIT_OK
        }
        Command::Transform(a) => {
            let spec = a.spec.to_spec()?;
            let scale = cli.tol / REFERENCE_TOL;
            write_spec(out, &spec, digits)?;
            let (transformed, target, res, limit) = match a.op {
                OpArg::Boost => {
                    let img = apply_boost(&spec, a.axis, a.rapidity)?;
                    writeln!(
                        out,
                        "op: boost rapidity={} axis={}",
                        format::number(a.rapidity, digits),
                        format::list(&a.axis, digits)
                    )?;
                    (
                        img.transformed,
                        format!(
                            "sign={} momentum={}",
                            spec.energy_sign,
                            format::list(&img.boosted_momentum.components(), digits)
                        ),
                        img.residual,
                        1e-10 * scale,
                    )
                }
                op => {
                    let kind = match op {
                        OpArg::Parity => DiscreteKind::Parity,
                        OpArg::Charge => DiscreteKind::ChargeConjugation,
                        OpArg::Time => DiscreteKind::TimeInversion,
                        _ => DiscreteKind::FourInversion,
                    };
                    let img = apply_discrete(kind, &spec)?;
                    let sector = match Sector::of(spec.species) {
                        Sector::Bradyonic => "bradyonic",
                        Sector::Pseudotachyonic => "pseudotachyonic",
                    };
                    writeln!(out, "op: {kind} sector={sector}")?;
                    (
                        img.transformed,
                        format!(
                            "sign={} momentum={}",
                            img.target_sign,
                            format::list(&img.target_momentum.components(), digits)
                        ),
                        img.residual,
                        cli.tol,
                    )
                }
            };
            writeln!(out, "target: {target}")?;
            write_bispinor(out, "w'", &transformed, digits)?;
            let ok = res <= limit;
            writeln!(
                out,
                "residual: {} limit: {} {}",
                residual(res),
                residual(limit),
                if ok { "PASS" } else { "FAIL" }
            )?;
            if ok {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        }
        Command::Verify => {
            let trials =
                usize::try_from(cli.trials).map_err(|_| DomainError::InvalidArgument("trials too large".into()))?;
            let report = verify::run_all(&VerifyConfig::new(cli.seed, trials, cli.tol)?);
            writeln!(out, "{report}")?;
            if report.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        }
    };
    out.flush()?;
    Ok(code)
}

fn residual(x: f64) -> String {
    format::number(x, 3)
}

fn write_spec(out: &mut dyn Write, spec: &PlaneWaveSpec, digits: usize) -> io::Result<()> {
    writeln!(out, "species: {}", spec.species)?;
    writeln!(out, "sign: {}", spec.energy_sign)?;
    writeln!(out, "momentum: {}", format::list(&spec.momentum, digits))?;
    writeln!(out, "mass: {}", format::number(spec.mass, digits))?;
    writeln!(out, "helicity: {}", spec.helicity)?;
    writeln!(out, "representation: {}", spec.rep)?;
    let energy = spec
        .energy()
        .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
    writeln!(out, "energy: {}", format::number(energy, digits))
}

fn write_bispinor(out: &mut dyn Write, label: &str, w: &Bispinor, digits: usize) -> io::Result<()> {
    for i in 0..4 {
        writeln!(out, "{label}[{i}]: {}", format::complex(w[i], digits))?;
    }
    Ok(())
}
