use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use polyrook::algebra::{groebner_basis, initial_ideal, satisfies, MonomialOrder, VertexRing};
use polyrook::convex::convex_h;
use polyrook::deadline::Deadline;
use polyrook::enumerate::{count, enumerate, Kind};
use polyrook::hilbert::h_polynomial_with_order;
use polyrook::rook::rook_polynomial;
use polyrook::switch::switching_rook_number_report;
use polyrook::verify::{self, dataset, Config};
use polyrook::{CellCollection, Result};

#[derive(Parser)]
#[command(
    name = "polyrook",
    version,
    about = "Rook polynomials and h-polynomials of collections of cells"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Polyomino,
    Collection,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Polyomino => Kind::Polyomino,
            KindArg::Collection => Kind::Collection,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Rev,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> MonomialOrder {
        match o {
            OrderArg::Rev => MonomialOrder::Rev,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Args)]
struct Input {
    /// Dataset file, one collection per line; `-` reads standard input.
    #[arg(long)]
    input: PathBuf,
}

impl Input {
    fn shapes(&self) -> Result<Vec<CellCollection>> {
        if self.input.as_os_str() == "-" {
            dataset::read_dataset_from(BufReader::new(io::stdin().lock()), &dataset::stdin_label())
        } else {
            dataset::read_dataset(&self.input)
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List shapes of one rank up to symmetry.
    Enumerate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        count_only: bool,
    },
    /// Rook polynomial and rook number.
    Rook {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        polynomial: bool,
        #[arg(long)]
        number: bool,
    },
    /// Switching rook polynomial and rook number.
    Switch {
        #[command(flatten)]
        input: Input,
    },
    /// Gröbner basis, initial ideal or the quadratic-basis condition.
    Ideal {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        order: OrderArg,
        #[arg(long, group = "what")]
        basis: bool,
        #[arg(long, group = "what")]
        initial: bool,
        #[arg(long, group = "what")]
        sharp: bool,
    },
    /// h-polynomial, Krull dimension and degree of h.
    Hpoly {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "rev")]
        order: OrderArg,
    },
    /// h-polynomial through the convex dissection recursion.
    ConvexH {
        #[command(flatten)]
        input: Input,
    },
    /// Compare switching rook polynomials with h-polynomials exhaustively.
    Verify {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Verify the shapes of this file instead of enumerating.
        #[arg(long)]
        dataset: Option<PathBuf>,
        /// Report file; standard output when absent.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Continue from this checkpoint file.
        #[arg(long, conflicts_with = "checkpoint")]
        resume: Option<PathBuf>,
        /// Write progress to this checkpoint file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Per-shape time limit in seconds; 0 disables it.
        #[arg(long, default_value_t = 60)]
        timeout: u64,
        /// Stop after this many seconds, leaving a checkpoint.
        #[arg(long)]
        max_seconds: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn out_lines(lines: impl IntoIterator<Item = String>) -> Result<()> {
    let stdout = io::stdout();
    let mut w = BufWriter::new(stdout.lock());
    for l in lines {
        writeln!(w, "{l}")?;
    }
    w.flush()?;
    Ok(())
}

fn each<F>(input: &Input, f: F) -> Result<ExitCode>
where
    F: Fn(&CellCollection) -> Result<String>,
{
    let shapes = input.shapes()?;
    let lines = shapes.iter().map(&f).collect::<Result<Vec<_>>>()?;
    out_lines(lines)?;
    Ok(ExitCode::SUCCESS)
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Enumerate {
            kind,
            rank,
            out,
            count_only,
        } => {
            let kind = Kind::from(kind);
            if count_only {
                out_lines([count(kind, rank).to_string()])?;
            } else {
                let shapes: Vec<_> = enumerate(kind, rank).collect();
                match out {
                    Some(path) => dataset::write_dataset(&path, &shapes)?,
                    None => dataset::write_dataset_to(BufWriter::new(io::stdout().lock()), &shapes)?,
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rook {
            input,
            polynomial,
            number,
        } => each(&input, |p| {
            let poly = rook_polynomial(p)?;
            let mut line = p.canonical().format();
            if polynomial || !number {
                line.push('\t');
                line.push_str(&poly.to_csv());
            }
            if number {
                line.push('\t');
                line.push_str(&poly.degree().to_string());
            }
            Ok(line)
        }),
        Command::Switch { input } => each(&input, |p| {
            let r = switching_rook_number_report(p)?;
            Ok(format!(
                "{}\t{}\t{}",
                p.canonical(),
                r.switching.to_csv(),
                r.rook_number
            ))
        }),
        Command::Ideal {
            input,
            order,
            basis: _,
            initial,
            sharp,
        } => {
            let order = MonomialOrder::from(order);
            each(&input, |p| {
                let ring = VertexRing::new(p);
                let body = if sharp {
                    satisfies(p, order).to_string()
                } else if initial {
                    let ini = initial_ideal(p, order);
                    ini.generators()
                        .iter()
                        .map(|m| ring.describe(m))
                        .collect::<Vec<_>>()
                        .join(", ")
                } else {
                    groebner_basis(p, order, &Deadline::none())?
                        .iter()
                        .map(|b| ring.describe_binomial(b))
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                Ok(format!("{p}\t{body}"))
            })
        }
        Command::Hpoly { input, order } => {
            let order = MonomialOrder::from(order);
            each(&input, |p| {
                let s = h_polynomial_with_order(p, order, &Deadline::none())?;
                Ok(format!(
                    "{}\t{}\t{}\t{}",
                    p.canonical(),
                    s.h_poly.to_csv(),
                    s.krull_dim,
                    s.deg_h()
                ))
            })
        }
        Command::ConvexH { input } => each(&input, |p| {
            let c = convex_h(p)?;
            let flag = if c.certified { "certified" } else { "uncertified" };
            Ok(format!("{}\t{}\t{flag}", p.canonical(), c.h.to_csv()))
        }),
        Command::Verify {
            kind,
            rank,
            jobs,
            dataset,
            report,
            resume,
            checkpoint,
            timeout,
            max_seconds,
        } => {
            let mut config = Config::new(kind.into(), rank);
            config.jobs = jobs;
            config.dataset = dataset;
            config.per_shape_timeout = (timeout > 0).then(|| Duration::from_secs(timeout));
            config.budget = max_seconds.map(Duration::from_secs);
            config.resume = resume.is_some();
            config.checkpoint = resume.or(checkpoint);
            let summary = match report {
                Some(path) => verify::run_to_file(&config, &path)?,
                None => verify::run(&config, &mut BufWriter::new(io::stdout().lock()))?,
            };
            report_exit(&summary, config.checkpoint.as_deref())
        }
    }
}

fn report_exit(summary: &verify::Summary, checkpoint: Option<&Path>) -> Result<ExitCode> {
    if !summary.complete {
        match checkpoint {
            Some(p) => eprintln!("time budget exhausted; resume with --resume {}", p.display()),
            None => eprintln!("time budget exhausted; no checkpoint was requested"),
        }
        return Ok(ExitCode::from(3));
    }
    if !summary.timeouts.is_empty() {
        eprintln!("{} shapes timed out", summary.timeouts.len());
    }
    Ok(if summary.counterexamples.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
