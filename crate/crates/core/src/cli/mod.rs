//! The `penner` command line.
//!
//! Output is assembled in memory and written only once a command has
//! succeeded, so a failing run prints nothing on stdout.

mod serialize;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use serialize::{
    chi_csv, chi_json, parse_chi_csv, parse_chi_json, parse_museries, parse_tseries, serialize_museries,
    serialize_report, serialize_reports, serialize_residual, serialize_tseries, CHI_CSV_HEADER, REPORTED_MISMATCHES,
};

use crate::continuum::{
    combined_continuum, double_scaling_residual, nonorientable_continuum, penner_continuum, ContinuumModel,
    ScalingPoint,
};
use crate::error::Error;
use crate::euler_char::{chi_complex, chi_real, chi_table, ChiKind};
use crate::penner::{build, verify_identity, Identity, ModelId, Orientation, Size};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "penner",
    version,
    about = "Exact Penner-model series, identity checks and continuum limits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orbifold Euler characteristic of one moduli space, or a table.
    Chi(ChiArgs),
    /// Prints a truncated generating function.
    Series(SeriesArgs),
    /// Checks one identity and prints the report; exit 1 on mismatch.
    Verify(VerifyArgs),
    /// Prints a continuum series in mu.
    Continuum(ContinuumArgs),
    /// Compares the finite-N non-orientable free energy with its continuum tail.
    Doublescale(DoublescaleArgs),
    /// Runs every identity at one size.
    Report(ReportArgs),
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
struct ChiArgs {
    #[command(subcommand)]
    table: Option<ChiCommand>,
    #[arg(long, value_parser = parse_kind, required = true)]
    kind: Option<ChiKind>,
    #[arg(long, required = true)]
    g: Option<u32>,
    #[arg(long, required = true)]
    n: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: ValueFormat,
}

#[derive(Subcommand, Debug)]
enum ChiCommand {
    /// All in-range values up to the given genus index and puncture count.
    Table {
        #[arg(long, value_parser = parse_kind)]
        kind: ChiKind,
        #[arg(long)]
        gmax: u32,
        #[arg(long)]
        nmax: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ValueFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesModel {
    Hermitian,
    Symplectic,
    Orthogonal,
    NonorientableProduct,
    NonorientableGf,
    ClosedForm,
    TripleSum,
    StirlingTail,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    model: SeriesModel,
    /// Only used by `triple-sum`.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
    alpha: Option<u32>,
    #[arg(long = "N", value_parser = parse_size)]
    size: Size,
    #[arg(long, default_value_t = 16)]
    order: usize,
    /// Only used by `closed-form`.
    #[arg(long, value_parser = parse_orientation)]
    orientation: Option<Orientation>,
    #[arg(long, value_enum, default_value = "json")]
    format: SeriesFormat,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_identity)]
    identity: Identity,
    #[arg(long = "N", value_parser = parse_size)]
    size: Size,
    #[arg(long, default_value_t = 16)]
    order: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ContinuumKind {
    Penner,
    Nonorientable,
    Symplectic,
    Orthogonal,
}

#[derive(Args, Debug)]
struct ContinuumArgs {
    #[arg(long, value_enum)]
    model: ContinuumKind,
    #[arg(long, default_value_t = 6)]
    gmax: u32,
    #[arg(long, default_value_t = 6)]
    kmax: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: SeriesFormat,
}

#[derive(Args, Debug)]
struct DoublescaleArgs {
    #[arg(long)]
    mu: f64,
    #[arg(long = "N")]
    n: u64,
    #[arg(long, default_value_t = 3)]
    qmax: u32,
}

#[derive(Args, Debug)]
struct ReportArgs {
    #[arg(long = "N", value_parser = parse_size)]
    size: Size,
    #[arg(long, default_value_t = 16)]
    order: usize,
}

fn parse_kind(s: &str) -> Result<ChiKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_size(s: &str) -> Result<Size, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_orientation(s: &str) -> Result<Orientation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_identity(s: &str) -> Result<Identity, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Why a command stopped before producing output.
enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

/// Successful output plus the exit code to report.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(mut text: String) -> Self {
        if !text.ends_with('\n') {
            text.push('\n');
        }
        Output { text, code: EXIT_OK }
    }

    fn with_code(text: String, code: i32) -> Self {
        Output {
            code,
            ..Output::ok(text)
        }
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if informational {
                let _ = out.write_all(text.as_bytes());
                return EXIT_OK;
            }
            let _ = err.write_all(text.as_bytes());
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command) {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            let _ = out.flush();
            output.code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Library(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn dispatch(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Chi(args) => run_chi(args),
        Command::Series(args) => run_series(args),
        Command::Verify(args) => run_verify(args),
        Command::Continuum(args) => run_continuum(args),
        Command::Doublescale(args) => run_doublescale(args),
        Command::Report(args) => run_report(args),
    }
}

fn run_chi(args: ChiArgs) -> Result<Output, Failure> {
    if let Some(ChiCommand::Table {
        kind,
        gmax,
        nmax,
        format,
    }) = args.table
    {
        let table = chi_table(kind, gmax, nmax);
        return Ok(Output::ok(match format {
            TableFormat::Csv => chi_csv(&table),
            TableFormat::Json => chi_json(&table),
        }));
    }
    let (Some(kind), Some(g), Some(n)) = (args.kind, args.g, args.n) else {
        return Err(Failure::Usage("chi needs --kind, --g and --n".into()));
    };
    let value = match kind {
        ChiKind::Complex => chi_complex(g, n)?,
        ChiKind::Real => chi_real(g, n)?,
    };
    Ok(Output::ok(match args.format {
        ValueFormat::Text => value.to_string(),
        ValueFormat::Json => chi_json(&[crate::euler_char::ChiValue {
            kind,
            genus_index: g,
            punctures: n,
            value,
        }]),
    }))
}

fn run_series(args: SeriesArgs) -> Result<Output, Failure> {
    if args.orientation.is_some() && !matches!(args.model, SeriesModel::ClosedForm) {
        return Err(Failure::Usage(
            "--orientation applies only to --model closed-form".into(),
        ));
    }
    let model = match args.model {
        SeriesModel::Hermitian => ModelId::HermitianGf,
        SeriesModel::Symplectic => ModelId::SymplecticGf,
        SeriesModel::Orthogonal => ModelId::OrthogonalGf,
        SeriesModel::NonorientableProduct => ModelId::NonorientableProduct,
        SeriesModel::NonorientableGf => ModelId::NonorientableGf,
        SeriesModel::StirlingTail => ModelId::StirlingTail,
        SeriesModel::ClosedForm => match args.orientation {
            Some(o) => ModelId::PennerClosedForm(o),
            None => {
                return Err(Failure::Usage(
                    "--model closed-form needs --orientation as_printed|reciprocal".into(),
                ))
            }
        },
        SeriesModel::TripleSum => match args.alpha {
            Some(1) => ModelId::HermitianTriple,
            Some(_) => ModelId::SymplecticTriple,
            None => return Err(Failure::Usage("--model triple-sum needs --alpha 1|2".into())),
        },
    };
    let series = build(model, args.size, args.order)?;
    Ok(Output::ok(match args.format {
        SeriesFormat::Json => serialize_tseries(&series),
        SeriesFormat::Text => format!("{series:?}"),
    }))
}

fn run_verify(args: VerifyArgs) -> Result<Output, Failure> {
    let report = verify_identity(args.identity, args.size, args.order)?;
    let code = if report.matched { EXIT_OK } else { EXIT_MISMATCH };
    Ok(Output::with_code(serialize_report(&report), code))
}

fn run_continuum(args: ContinuumArgs) -> Result<Output, Failure> {
    let (series, notes) = match args.model {
        ContinuumKind::Penner => (penner_continuum(args.gmax)?, Vec::new()),
        ContinuumKind::Nonorientable => (nonorientable_continuum(args.kmax)?, Vec::new()),
        ContinuumKind::Symplectic | ContinuumKind::Orthogonal => {
            let model = match args.model {
                ContinuumKind::Symplectic => ContinuumModel::Symplectic,
                _ => ContinuumModel::Orthogonal,
            };
            let c = combined_continuum(model, args.gmax, args.kmax)?;
            (c.series, c.notes)
        }
    };
    Ok(Output::ok(match args.format {
        SeriesFormat::Json => serialize_museries(&series, &notes),
        SeriesFormat::Text => {
            let mut text = format!("{series:?}");
            for note in &notes {
                text.push_str("\nnote: ");
                text.push_str(note);
            }
            text
        }
    }))
}

fn run_doublescale(args: DoublescaleArgs) -> Result<Output, Failure> {
    let point = ScalingPoint::new(args.n, args.mu)?;
    let check = double_scaling_residual(&point, args.qmax)?;
    Ok(Output::ok(serialize_residual(&check)))
}

fn run_report(args: ReportArgs) -> Result<Output, Failure> {
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for identity in Identity::ALL {
        if identity == Identity::ClosedFormOrientation && args.size == Size::Symbolic {
            skipped.push((identity.token().to_string(), Error::SymbolicSize.to_string()));
            continue;
        }
        reports.push(verify_identity(identity, args.size, args.order)?);
    }
    let code = if reports.iter().all(|r| r.matched) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    Ok(Output::with_code(serialize_reports(&reports, &skipped), code))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("penner").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn chi_value() {
        assert_eq!(
            run_args(&["chi", "--kind", "complex", "--g", "1", "--n", "1"]),
            (0, "-1/12\n".into(), String::new())
        );
        assert_eq!(
            run_args(&["chi", "--kind", "real", "--g", "1", "--n", "1"]).1,
            "-1/24\n"
        );
    }

    #[test]
    fn chi_table_csv() {
        let (code, out, _) = run_args(&["chi", "table", "--kind", "complex", "--gmax", "1", "--nmax", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "kind,genus_index,punctures,value\ncomplex,1,1,-1/12\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            run_args(&["chi", "--kind", "complex", "--g", "0", "--n", "1"]).0,
            EXIT_DOMAIN
        );
        assert_eq!(
            run_args(&["chi", "--kind", "complex", "--g", "x", "--n", "1"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["chi", "--kind", "complex", "--g", "1"]).0, EXIT_USAGE);
        assert_eq!(
            run_args(&["series", "--model", "hermitian", "--order", "3"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["series", "--model", "closed-form", "--N", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["doublescale", "--mu", "20", "--N", "10"]).0, EXIT_DOMAIN);
        assert_eq!(
            run_args(&["verify", "--identity", "closed-form", "--N", "sym"]).0,
            EXIT_DOMAIN
        );
        assert_eq!(run_args(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn usage_errors_name_the_flag_and_print_nothing() {
        let (_, out, err) = run_args(&["series", "--model", "hermitian", "--order", "3"]);
        assert!(out.is_empty());
        assert!(err.contains("--N"), "{err}");
        let (_, out, err) = run_args(&["series", "--model", "triple-sum", "--N", "2"]);
        assert!(out.is_empty());
        assert!(err.contains("--alpha"), "{err}");
        let (_, out, err) = run_args(&["doublescale", "--mu", "20", "--N", "10"]);
        assert!(out.is_empty() && !err.is_empty());
    }

    #[test]
    fn verify_matches_symbolically() {
        let (code, out, _) = run_args(&["verify", "--identity", "eq17", "--N", "sym", "--order", "8"]);
        assert_eq!(code, 0);
        assert!(out.contains(r#""matched":true"#));
    }

    #[test]
    fn continuum_notes_are_emitted() {
        let (code, out, _) = run_args(&["continuum", "--model", "symplectic", "--gmax", "3", "--kmax", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("on log mu"), "{out}");
    }
}
