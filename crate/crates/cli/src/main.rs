use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use conicline::fixtures::{self, Fixture};
use conicline::invariants::{invariant_report, IncidenceProfile, InvariantReport, DEFAULT_DECIMAL_DIGITS};
use conicline::report::{analyze_arrangement, covers_report, Input};
use conicline::search::{to_csv, to_json_lines, SearchOutcome, SearchSpec};
use conicline::{Error, Result};

mod render;

const FILE_FORMATS: &str = "\
Arrangement files are JSON objects
  {\"lines\": [[a, b, c], ...], \"conics\": [[x2, y2, z2, xy, xz, yz], ...]}
where a line is a*x + b*y + c*z = 0 and a conic is
  x2*x^2 + y2*y^2 + z2*z^2 + xy*x*y + xz*x*z + yz*y*z = 0.
Coefficients are integers or strings \"p/q\". Curves are numbered lines
first (0..d), then conics (d..d+k).

Profile files are JSON objects
  {\"d\": 0, \"k\": 3, \"t\": {\"2\": 12}, \"has_exceptional_line\": false}
with t mapping a multiplicity r >= 2 to the number of points on exactly
r curves. Optional flags: has_exceptional_line, hypothesis_a_ok.

Exit status: 0 on success, 1 on invalid input (an error object
{\"kind\", \"message\"} is printed to stderr), 2 when a certified
arrangement violates a proven bound.";

#[derive(Parser, Debug)]
#[command(name = "conicline", version, about = "Invariants of conic-line arrangements in the plane", after_help = FILE_FORMATS)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Digits in decimal renderings. Exact values are unaffected.
    #[arg(long, default_value_t = DEFAULT_DECIMAL_DIGITS, global = true)]
    precision: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certified incidence, invariants and bounds of an arrangement file
    Analyze { file: PathBuf },
    /// Invariants and bounds of a combinatorial profile
    Invariants(InvariantsArgs),
    /// Invariants of the Z_p covers branched on an arrangement or profile
    Covers {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
    },
    /// Run a search job file
    Search {
        spec: PathBuf,
        /// Overrides the seed in the job file
        #[arg(long)]
        seed: Option<u64>,
        /// Also write every record as JSON lines to this path
        #[arg(long)]
        archive: Option<PathBuf>,
    },
    /// Built-in 21 lines, 21 conics fixture
    Klein,
    /// Built-in dual Hesse fixture
    DualHesse,
}

#[derive(Args, Debug)]
struct InvariantsArgs {
    /// Profile JSON file ("-" for stdin); otherwise give --d, --k and counts
    file: Option<PathBuf>,
    #[arg(long, conflicts_with = "file", requires = "k")]
    d: Option<usize>,
    #[arg(long, conflicts_with = "file", requires = "d")]
    k: Option<usize>,
    #[arg(long)]
    t2: Option<u64>,
    #[arg(long)]
    t3: Option<u64>,
    #[arg(long)]
    t4: Option<u64>,
    #[arg(long)]
    t5: Option<u64>,
    #[arg(long)]
    t6: Option<u64>,
    /// Further counts as r=count, repeatable
    #[arg(long = "t", value_parser = parse_count)]
    t: Vec<(usize, u64)>,
    #[arg(long)]
    exceptional_line: Option<bool>,
    #[arg(long)]
    hypothesis_a: Option<bool>,
}

fn parse_count(s: &str) -> std::result::Result<(usize, u64), String> {
    let (r, c) = s.split_once('=').ok_or("expected r=count")?;
    Ok((r.trim().parse().map_err(|e| format!("{e}"))?, c.trim().parse().map_err(|e| format!("{e}"))?))
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(e.to_string()))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn profile_from_args(a: &InvariantsArgs) -> Result<IncidenceProfile> {
    if let Some(f) = &a.file {
        if a.d.is_some() || a.k.is_some() {
            return Err(Error::InvalidInput("give a profile file or flags, not both".into()));
        }
        let mut p = match Input::from_json(&read_input(f)?)? {
            Input::Profile(p) => p,
            Input::Arrangement(_) => {
                return Err(Error::InvalidInput("expected a profile; use analyze for curves".into()))
            }
        };
        if a.exceptional_line.is_some() {
            p.has_exceptional_line = a.exceptional_line;
        }
        if a.hypothesis_a.is_some() {
            p.hypothesis_a_ok = a.hypothesis_a;
        }
        p.validate()?;
        return Ok(p);
    }
    let (Some(d), Some(k)) = (a.d, a.k) else {
        return Err(Error::InvalidInput("need a profile file or both --d and --k".into()));
    };
    let named = [(2, a.t2), (3, a.t3), (4, a.t4), (5, a.t5), (6, a.t6)];
    let mut t: Vec<(usize, u64)> = named.iter().filter_map(|&(r, c)| c.map(|c| (r, c))).collect();
    for &(r, c) in &a.t {
        if t.iter().any(|&(s, _)| s == r) {
            return Err(Error::InvalidInput(format!("t{r} given twice")));
        }
        t.push((r, c));
    }
    let mut p = IncidenceProfile::new(d, k, t)?;
    p.has_exceptional_line = a.exceptional_line;
    p.hypothesis_a_ok = a.hypothesis_a;
    p.validate()?;
    Ok(p)
}

#[derive(Serialize)]
struct FixtureReport<'a> {
    name: &'a str,
    description: &'a str,
    #[serde(flatten)]
    report: InvariantReport,
    general_formula: GeneralFormula,
}

#[derive(Serialize)]
struct GeneralFormula {
    #[serde(flatten)]
    log_chern: conicline::invariants::LogChernNumbers,
    gamma: Option<String>,
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn fixture(f: &Fixture, cli: &Cli) -> Result<String> {
    let report = invariant_report(&f.profile, cli.precision);
    Ok(match cli.format {
        Format::Json => json(&FixtureReport {
            name: &f.name,
            description: &f.description,
            general_formula: GeneralFormula {
                log_chern: f.log_chern()?,
                gamma: f.gamma().ok().map(|g| conicline::algebra::rational::to_string(&g)),
            },
            report,
        }),
        Format::Csv => render::invariants_csv(&report),
        Format::Pretty => format!("{}\n{}", f.description, render::invariants_pretty(&report)),
    })
}

fn run(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Analyze { file } => {
            let arr = match Input::from_json(&read_input(file)?)? {
                Input::Arrangement(a) => a,
                Input::Profile(_) => {
                    return Err(Error::InvalidInput("expected curves; use invariants for profiles".into()))
                }
            };
            let r = analyze_arrangement(&arr, cli.precision)?;
            Ok(match cli.format {
                Format::Json => json(&r),
                Format::Csv => render::invariants_csv(&r.invariants),
                Format::Pretty => render::analysis_pretty(&r),
            })
        }
        Command::Invariants(a) => {
            let r = invariant_report(&profile_from_args(a)?, cli.precision);
            Ok(match cli.format {
                Format::Json => json(&r),
                Format::Csv => render::invariants_csv(&r),
                Format::Pretty => render::invariants_pretty(&r),
            })
        }
        Command::Covers { file, primes } => {
            let r = covers_report(&Input::from_json(&read_input(file)?)?, primes)?;
            Ok(match cli.format {
                Format::Json => json(&r),
                Format::Csv => render::covers_csv(&r),
                Format::Pretty => render::covers_pretty(&r),
            })
        }
        Command::Search { spec, seed, archive } => {
            let mut s = SearchSpec::from_json(&read_input(spec)?)?;
            if let Some(seed) = seed {
                s = s.with_seed(*seed);
            }
            let out = s.run()?;
            if let Some(path) = archive {
                std::fs::write(path, to_json_lines(out.records()))
                    .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            }
            Ok(match (cli.format, &out) {
                (Format::Json, SearchOutcome::Combinatorial(r)) => to_json_lines(r),
                (Format::Json, SearchOutcome::Geometric(s)) => json(s),
                (Format::Csv, _) => to_csv(out.records()),
                (Format::Pretty, _) => render::search_pretty(&out),
            })
        }
        Command::Klein => fixture(&fixtures::klein(), cli),
        Command::DualHesse => fixture(&fixtures::dual_hesse(), cli),
    }
}

fn fail(kind: &str, message: &str, code: u8) -> ExitCode {
    eprintln!("{}", serde_json::json!({ "kind": kind, "message": message }));
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail("Usage", e.to_string().trim(), 1),
    };
    match run(&cli) {
        Ok(out) => match std::io::stdout().write_all(out.as_bytes()) {
            // a closed pipe (`| head`) is not an error
            Ok(()) => ExitCode::SUCCESS,
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
            Err(e) => fail("Io", &e.to_string(), 1),
        },
        Err(e @ Error::TheoremContradiction(_)) => fail(e.kind(), &e.to_string(), 2),
        Err(e) => fail(e.kind(), &e.to_string(), 1),
    }
}
