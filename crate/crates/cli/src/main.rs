use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ratquad::classical::{classify_cyclic, ptolemy_holds};
use ratquad::curve::{mine, MineConfig, MineOutcome, DEFAULT_HEIGHT_CAP_BITS};
use ratquad::generators::{arity, generate, record_from_base, sweep};
use ratquad::oracle::{cross_validate, enumerate, LatticeBounds};
use ratquad::quad::verify;
use ratquad::{draw, record, Error, Family, ParamSet, Quadrilateral, Rational};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DEGENERATE: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(
    name = "ratquad",
    version,
    about = "Generate, mine, search and verify rational quadrilaterals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the record of a parametric family.
    Gen {
        family: FamilyArg,
        /// Parameters (integers or n/d); omit when using --sweep.
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
        /// Run every integer tuple with entries in MIN..MAX (inclusive).
        #[arg(long, value_name = "MIN..MAX")]
        sweep: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Recheck records read as JSON lines from FILE or stdin.
    Verify { input: Option<PathBuf> },
    /// Enumerate integer placements with 1 <= e <= EMAX and |coords| <= CMAX.
    Search {
        #[arg(long, default_value_t = 50)]
        emax: u32,
        #[arg(long, default_value_t = 50)]
        cmax: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Walk multiples of the base point on the curve of six parameters.
    Mine {
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
        #[arg(long, default_value_t = 5)]
        multiples: u32,
        #[arg(long, value_name = "BITS", default_value_t = DEFAULT_HEIGHT_CAP_BITS)]
        height_cap: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Draw one record from FILE or stdin as SVG.
    Plot {
        input: Option<PathBuf>,
        /// Zero-based record index.
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cyclic,
    NoncyclicA,
    NoncyclicB,
    #[value(alias = "two-equal-sides")]
    Kite,
    Base,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Cyclic => Family::Cyclic,
            FamilyArg::NoncyclicA => Family::NoncyclicA,
            FamilyArg::NoncyclicB => Family::NoncyclicB,
            FamilyArg::Kite => Family::TwoEqualSides,
            FamilyArg::Base => Family::Base,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
    fn io(what: &Path, e: io::Error) -> Self {
        Failure {
            code: EXIT_IO,
            message: format!("{}: {e}", what.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => EXIT_USAGE,
            Error::ClosedFormMismatch(_) => EXIT_VERIFY,
            _ => EXIT_DEGENERATE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn parse_params(raw: &[String]) -> CliResult<Vec<Rational>> {
    raw.iter()
        .map(|s| {
            s.parse::<Rational>()
                .map_err(|_| Failure::usage(format!("not a rational number: {s:?}")))
        })
        .collect()
}

fn parse_range(s: &str) -> CliResult<(i64, i64)> {
    let bad = || Failure::usage(format!("expected MIN..MAX, got {s:?}"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn read_input(path: Option<&Path>) -> CliResult<String> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::io(p, e)),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::io(Path::new("<stdin>"), e))?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> CliResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::io(p, e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::io(Path::new("<stdout>"), e)),
    }
}

fn emit(records: &[Quadrilateral], out: &OutputArgs) -> CliResult {
    let path = out.out.as_deref();
    match out.format {
        Format::Jsonl => {
            let text: String = records
                .iter()
                .map(|r| record::to_json_line(r) + "\n")
                .collect();
            write_output(path, &text)
        }
        Format::Csv => {
            let mut text = format!("{}\n", record::CSV_HEADER);
            for r in records {
                text.push_str(&record::to_csv_row(r));
                text.push('\n');
            }
            write_output(path, &text)
        }
        Format::Svg => match (records, path) {
            ([one], _) => write_output(path, &draw::render_svg(one)),
            ([], _) => Err(Failure::usage("no records to draw")),
            (many, Some(p)) => {
                // One file per record: out.svg -> out-0.svg, out-1.svg, ...
                let stem = p.with_extension("");
                for (i, r) in many.iter().enumerate() {
                    let file = PathBuf::from(format!("{}-{i}.svg", stem.display()));
                    write_output(Some(&file), &draw::render_svg(r))?;
                }
                Ok(())
            }
            (_, None) => Err(Failure::usage("several records: svg output needs --out")),
        },
    }
}

fn cmd_gen(
    family: FamilyArg,
    params: &[String],
    range: Option<&str>,
    out: &OutputArgs,
) -> CliResult {
    let family = Family::from(family);
    let records = match range {
        Some(r) => {
            if !params.is_empty() {
                return Err(Failure::usage(
                    "give either parameters or --sweep, not both",
                ));
            }
            let (lo, hi) = parse_range(r)?;
            let sw = sweep(family, lo, hi)?;
            eprintln!(
                "{family}: {} admissible grid points, {} rejected, {} distinct records",
                sw.admissible,
                sw.rejected,
                sw.records.len()
            );
            sw.records
        }
        None => {
            let n = arity(family).expect("parametric family");
            if params.len() != n {
                return Err(Failure::usage(format!(
                    "{family} takes {n} parameters, got {}",
                    params.len()
                )));
            }
            vec![generate(family, &parse_params(params)?)?]
        }
    };
    emit(&records, out)
}

/// Everything wrong with one record; empty when it passes.
fn check_record(rec: &Quadrilateral) -> Vec<String> {
    let mut problems = Vec::new();
    let report = verify(&rec.placement);
    if !report.violated.is_empty() {
        let names: Vec<String> = report.violated.iter().map(|c| c.to_string()).collect();
        problems.push(format!("violated: {}", names.join(", ")));
    }
    for d in cross_validate(std::slice::from_ref(rec)).disagreements {
        if !d.detail.starts_with("placement is not") {
            problems.push(d.detail);
        }
    }
    let cyclic = classify_cyclic(rec);
    match rec.family {
        Family::Cyclic => {
            if !cyclic {
                problems.push("cyclic record fails the cyclic classification".into());
            }
            if !ptolemy_holds(rec) {
                problems.push("cyclic record fails Ptolemy's equality".into());
            }
        }
        Family::NoncyclicA | Family::NoncyclicB | Family::TwoEqualSides if cyclic => {
            problems.push(format!("{} record classifies as cyclic", rec.family));
        }
        _ => {}
    }
    if let Some(ps) = &rec.params {
        match record_from_base(ps, rec.family) {
            Ok(again) if again.same_figure(rec) => {}
            Ok(_) => problems.push("regenerating from params gives a different record".into()),
            Err(e) => problems.push(format!("regenerating from params failed: {e}")),
        }
    }
    problems
}

fn cmd_verify(input: Option<&Path>) -> CliResult {
    let text = read_input(input)?;
    let mut total = 0;
    let mut failed = 0;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        total += 1;
        let problems = match record::from_json_line(line) {
            Ok(rec) => check_record(&rec),
            Err(e) => vec![e.to_string()],
        };
        if problems.is_empty() {
            println!("line {}: ok", i + 1);
        } else {
            failed += 1;
            println!("line {}: FAIL: {}", i + 1, problems.join("; "));
        }
    }
    println!("{} of {total} records passed", total - failed);
    if failed > 0 {
        return Err(Failure {
            code: EXIT_VERIFY,
            message: format!("{failed} record(s) failed"),
        });
    }
    Ok(())
}

fn cmd_search(emax: u32, cmax: u32, out: &OutputArgs) -> CliResult {
    let bounds = LatticeBounds::new(emax, cmax)
        .ok_or_else(|| Failure::usage("--emax and --cmax must be at least 1"))?;
    let records = enumerate(bounds);
    let report = cross_validate(&records);
    eprintln!(
        "search: {} records, {} disagreements between oracle and verifier",
        records.len(),
        report.disagreements.len()
    );
    emit(&records, out)?;
    if !report.is_clean() {
        return Err(Failure {
            code: EXIT_VERIFY,
            message: "cross-validation failed".into(),
        });
    }
    Ok(())
}

fn cmd_mine(params: &[String], multiples: u32, height_cap: u64, out: &OutputArgs) -> CliResult {
    if params.len() != 6 {
        return Err(Failure::usage(format!(
            "mine takes 6 parameters, got {}",
            params.len()
        )));
    }
    let pqr: [Rational; 6] = parse_params(params)?.try_into().expect("length checked");
    let cfg = MineConfig {
        multiples,
        height_cap_bits: height_cap,
    };
    let report = mine(&ParamSet::new(pqr), &cfg)?;
    for e in &report.entries {
        let what = match &e.outcome {
            MineOutcome::Mined(i) => format!("record {i}"),
            MineOutcome::Duplicate => "duplicate".into(),
            MineOutcome::Skipped(why) => format!("skipped ({why})"),
        };
        eprintln!(
            "n={}: height {} bits, round trip {}, {what}",
            e.n,
            e.cubic_point.height_bits(),
            if e.round_trip { "ok" } else { "FAILED" }
        );
    }
    emit(&report.records, out)?;
    if !report.round_trips_hold() {
        return Err(Failure {
            code: EXIT_VERIFY,
            message: "quartic/cubic round trip failed".into(),
        });
    }
    Ok(())
}

fn cmd_plot(input: Option<&Path>, index: usize, out: Option<&Path>) -> CliResult {
    let records = record::read_json_lines(&read_input(input)?)?;
    let rec = records.get(index).ok_or_else(|| {
        Failure::usage(format!(
            "no record at index {index} ({} read)",
            records.len()
        ))
    })?;
    write_output(out, &draw::render_svg(rec))
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Gen {
            family,
            params,
            sweep,
            out,
        } => cmd_gen(family, &params, sweep.as_deref(), &out),
        Command::Verify { input } => cmd_verify(input.as_deref()),
        Command::Search { emax, cmax, out } => cmd_search(emax, cmax, &out),
        Command::Mine {
            params,
            multiples,
            height_cap,
            out,
        } => cmd_mine(&params, multiples, height_cap, &out),
        Command::Plot { input, index, out } => cmd_plot(input.as_deref(), index, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
