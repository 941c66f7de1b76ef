use std::fs::File;
use std::io::{self, BufRead, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use permutomino::census::{count, LabelCensus};
use permutomino::eco::generate_with_paths;
use permutomino::grid::{render_ascii, render_svg};
use permutomino::oracle;
use permutomino::record::PermutominoRecord;
use permutomino::series::{self, BivariateSeries, TruncatedSeries};
use permutomino::verify::{run_all, VerifyConfig};

/// Largest size `generate` will materialize.
const GENERATE_LIMIT: u32 = 12;
const ORACLE_LIMIT: u32 = 9;
const PAIR_LIMIT: u32 = 5;

#[derive(Parser)]
#[command(name = "permutomino", version, about = "Count, generate and check convex permutominoes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of convex permutominoes of size n
    Count {
        #[arg(long)]
        n: u32,
        /// Print every size from 1 to n
        #[arg(long)]
        sequence: bool,
    },
    /// Label census of levels 1..=n as TSV
    Census {
        #[arg(long)]
        n: u32,
    },
    /// Every convex permutomino of size n, in generation order
    Generate {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = GenFormat::Jsonl)]
        format: GenFormat,
        /// Include the operation path from the single cell
        #[arg(long)]
        with_path: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the first record read from --input or stdin
    Render {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
    },
    /// Coefficients of a generating function
    Series {
        #[arg(value_enum)]
        name: SeriesName,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Run every cross-check up to size max-n
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: u32,
    },
    /// Brute-force count, independent of the generating tree
    Oracle {
        #[arg(long)]
        n: u32,
        /// Decode permutation pairs instead of filtering convex polyominoes
        #[arg(long)]
        pairs: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFormat {
    Jsonl,
    Text,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesName {
    B1,
    R1,
    N1,
    F1,
    Sqrt,
    S0,
    S1,
    Directed,
    B,
    R,
    G,
    F,
}

enum Failure {
    Usage(String),
    Check,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn positive(n: u32) -> Result<u32, Failure> {
    if n == 0 {
        Err(usage("--n must be at least 1"))
    } else {
        Ok(n)
    }
}

fn at_most(n: u32, limit: u32, what: &str) -> Result<u32, Failure> {
    if n > limit {
        Err(usage(format!("{what} is limited to n <= {limit}")))
    } else {
        positive(n)
    }
}

fn run_generate(n: u32, format: GenFormat, with_path: bool, out: &mut dyn Write) -> io::Result<()> {
    let mut res = Ok(());
    generate_with_paths(n, |p, path| {
        if res.is_err() {
            return;
        }
        res = match format {
            GenFormat::Jsonl => {
                let rec = if with_path { PermutominoRecord::with_path(p, path) } else { PermutominoRecord::new(p) };
                writeln!(out, "{}", rec.to_json_line())
            }
            GenFormat::Text => {
                if with_path {
                    let ops: Vec<String> = path.iter().map(ToString::to_string).collect();
                    writeln!(out, "{p}\t{}\t{}", p.label(), ops.join(","))
                } else {
                    writeln!(out, "{p}\t{}", p.label())
                }
            }
            GenFormat::Ascii => write!(out, "{}\n{}", p.label(), render_ascii(p)),
        };
    });
    res
}

fn read_record(input: Option<PathBuf>) -> Result<PermutominoRecord, Failure> {
    let mut text = String::new();
    match input {
        Some(path) => {
            File::open(&path)?.read_to_string(&mut text)?;
        }
        None => {
            for line in io::stdin().lock().lines() {
                let line = line?;
                if !line.trim().is_empty() {
                    text = line;
                    break;
                }
            }
        }
    }
    let line = text.lines().find(|l| !l.trim().is_empty()).ok_or_else(|| usage("no record on input"))?;
    PermutominoRecord::parse(line).map_err(|e| usage(e.to_string()))
}

fn univariate(name: SeriesName, order: usize) -> Option<TruncatedSeries> {
    Some(match name {
        SeriesName::B1 => series::series_b1(order),
        SeriesName::R1 => series::series_r1(order),
        SeriesName::N1 => series::series_n1(order),
        SeriesName::F1 => series::series_f1(order),
        SeriesName::Sqrt => series::sqrt_1m4t(order),
        SeriesName::S0 => series::kernel_root_s0(order),
        SeriesName::S1 => series::kernel_root_s1(order),
        SeriesName::Directed => series::series_directed(order),
        _ => return None,
    })
}

fn bivariate(name: SeriesName, order: usize) -> BivariateSeries {
    let cs = series::census_series(order);
    match name {
        SeriesName::B => cs.b,
        SeriesName::R => cs.r,
        SeriesName::G => cs.g,
        _ => cs.total(),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Count { n, sequence } => {
            let n = positive(n)?;
            if sequence {
                for (i, c) in permutomino::census::counts_up_to(n).iter().enumerate() {
                    writeln!(out, "{}\t{c}", i + 1)?;
                }
            } else {
                writeln!(out, "{}", count(n))?;
            }
        }
        Command::Census { n } => {
            let n = positive(n)?;
            for (i, level) in LabelCensus::levels(n).iter().enumerate() {
                let tsv = level.to_tsv();
                let body = if i == 0 { tsv.as_str() } else { tsv.split_once('\n').map_or("", |(_, b)| b) };
                out.write_all(body.as_bytes())?;
            }
        }
        Command::Generate { n, format, with_path, out: path } => {
            let n = at_most(n, GENERATE_LIMIT, "generate")?;
            match path {
                Some(path) => {
                    let mut file = BufWriter::new(File::create(path)?);
                    run_generate(n, format, with_path, &mut file)?;
                    file.flush()?;
                }
                None => run_generate(n, format, with_path, &mut out)?,
            }
        }
        Command::Render { input, format } => {
            let rec = read_record(input)?;
            let p = rec.permutomino().map_err(|e| usage(e.to_string()))?;
            match format {
                RenderFormat::Ascii => write!(out, "{}", render_ascii(&p))?,
                RenderFormat::Svg => write!(out, "{}", render_svg(&p))?,
            }
        }
        Command::Series { name, order } => match univariate(name, order) {
            Some(s) => write!(out, "{}", s.to_tsv())?,
            None => write!(out, "{}", bivariate(name, order).to_tsv())?,
        },
        Command::Verify { max_n } => {
            let max_n = at_most(max_n, 8, "verify")?;
            let outcomes = run_all(VerifyConfig::up_to(max_n));
            for o in &outcomes {
                writeln!(out, "{o}")?;
            }
            out.flush()?;
            if outcomes.iter().any(|o| !o.passed) {
                return Err(Failure::Check);
            }
        }
        Command::Oracle { n, pairs } => {
            if pairs {
                let n = at_most(n, PAIR_LIMIT, "oracle --pairs")?;
                let c = oracle::perm_pair_census(n);
                writeln!(out, "pairs\t{}", c.pairs)?;
                writeln!(out, "valid\t{}", c.valid)?;
                writeln!(out, "disconnected\t{}", c.disconnected)?;
                writeln!(out, "self_intersecting\t{}", c.self_intersecting)?;
                writeln!(out, "counter_clockwise\t{}", c.counter_clockwise)?;
                writeln!(out, "not_convex\t{}", c.not_convex)?;
                writeln!(out, "distinct\t{}", c.distinct)?;
            } else {
                let n = at_most(n, ORACLE_LIMIT, "oracle")?;
                writeln!(out, "{}", oracle::oracle_count_permutominoes(n))?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
