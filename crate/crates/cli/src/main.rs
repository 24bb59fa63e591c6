use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ramsey_core::constructions::Inner;
use ramsey_core::formulas::FormulaParams;
use ramsey_core::json::coloring_from_json;
use ramsey_core::report::{
    cmd_bsearch, cmd_decode_model, cmd_eval, cmd_export_cnf, cmd_search, cmd_table, cmd_verify, cmd_witness,
    Report,
};
use ramsey_core::search::{Budget, SearchOptions};
use ramsey_core::target::parse_targets;
use ramsey_core::{Error, HostKind, Parallelism, Result, TargetGraph};

const TARGET_HELP: &str = "Comma-separated targets, one per color: P<n> path on n vertices, \
C<n> cycle, <t>K2 matching of t edges (K2 = one edge), S<k> star with k leaves, \
B<a>x<b> complete bipartite, M<p>x<r> complete p-partite with parts of size r";

/// Multicolor Ramsey numbers: closed forms, witness colorings, exhaustive search.
///
/// Every command prints one JSON line {"report": ..., "wall_time_ms": ...}.
/// Exit codes: 0 success, 2 input or precondition error, 3 budget exceeded,
/// 4 verification failure.
#[derive(Parser)]
#[command(name = "ramsey", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a catalog formula.
    Eval {
        id: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Build and verify a lower-bound coloring.
    Witness {
        id: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Targets of the nested coloring (cor_AA).
        #[arg(long, help = TARGET_HELP)]
        targets: Option<String>,
        /// Nested coloring file (cor_AA).
        #[arg(long)]
        inner: Option<PathBuf>,
        /// Write the witness file here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that a coloring avoids every target.
    Verify {
        file: PathBuf,
        /// Defaults to the targets in a witness header.
        #[arg(long, help = TARGET_HELP)]
        targets: Option<String>,
    },
    /// Least n with K_n forcing some target (exhaustive search).
    Search(SearchArgs),
    /// Least b with K_{b,b} forcing some target (exhaustive search).
    Bsearch(SearchArgs),
    /// Write the DIMACS CNF whose models are avoiding colorings.
    ExportCnf {
        /// K<n> or K<a>x<b>.
        #[arg(long)]
        host: String,
        #[arg(long, help = TARGET_HELP)]
        targets: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decode and verify a SAT solver model for an exported instance.
    DecodeModel {
        #[arg(long)]
        host: String,
        #[arg(long, help = TARGET_HELP)]
        targets: String,
        /// Solver output (`v` lines or bare literals).
        #[arg(long)]
        model: PathBuf,
    },
    /// Evaluate catalog formulas over their default parameter grids.
    Table {
        /// Restrict to these ids.
        ids: Vec<String>,
    },
}

#[derive(Args, Default)]
struct ParamArgs {
    #[arg(long)]
    n: Option<i64>,
    #[arg(long = "n0")]
    n_0: Option<i64>,
    #[arg(long = "n1")]
    n_1: Option<i64>,
    #[arg(long = "n2")]
    n_2: Option<i64>,
    #[arg(long)]
    s: Option<i64>,
    #[arg(long)]
    m: Option<i64>,
    #[arg(long)]
    t: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    r: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
    /// Matching sizes m_1,...,m_s.
    #[arg(long, value_delimiter = ',')]
    m_list: Option<Vec<i64>>,
    /// Star sizes k_1,...,k_t.
    #[arg(long, value_delimiter = ',')]
    k_list: Option<Vec<i64>>,
}

impl ParamArgs {
    fn to_params(&self) -> FormulaParams {
        let ints = [
            ("n", self.n),
            ("n_0", self.n_0),
            ("n_1", self.n_1),
            ("n_2", self.n_2),
            ("s", self.s),
            ("m", self.m),
            ("t", self.t),
            ("k", self.k),
            ("r", self.r),
            ("b", self.b),
        ];
        let mut p = ints
            .iter()
            .filter_map(|&(name, v)| v.map(|v| (name, v)))
            .fold(FormulaParams::new(), |acc, (name, v)| acc.with(name, v));
        if let Some(l) = &self.m_list {
            p = p.with_list("m_list", l.clone());
        }
        if let Some(l) = &self.k_list {
            p = p.with_list("k_list", l.clone());
        }
        p
    }
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, help = TARGET_HELP)]
    targets: String,
    /// Host sizes to scan, lo:hi.
    #[arg(long)]
    range: String,
    /// Run the search on one thread.
    #[arg(long)]
    sequential: bool,
    /// Largest complete host allowed.
    #[arg(long, default_value_t = Budget::default().max_complete)]
    max_complete: usize,
    /// Largest bipartite side allowed.
    #[arg(long, default_value_t = Budget::default().max_bipartite)]
    max_bipartite: usize,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            budget: Budget { max_complete: self.max_complete, max_bipartite: self.max_bipartite },
            mode: if self.sequential { Parallelism::Sequential } else { Parallelism::Parallel },
        }
    }

    fn range(&self) -> Result<(usize, usize)> {
        let bad = || Error::Parse(format!("range `{}`: expected lo:hi", self.range));
        let (lo, hi) = self.range.split_once(':').ok_or_else(bad)?;
        Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn targets(list: &str) -> Result<Vec<TargetGraph>> {
    parse_targets(list)
}

fn host(token: &str) -> Result<HostKind> {
    token.parse()
}

/// Run one command; the text is printed before the report (table view).
fn run(command: &Command) -> (&'static str, Value, Result<(Report, Option<String>)>) {
    match command {
        Command::Eval { id, params } => {
            let p = params.to_params();
            let inputs = json!({ "id": id, "params": p });
            ("eval", inputs, cmd_eval(id, &p).map(|r| (r, None)))
        }
        Command::Witness { id, params, targets: tl, inner, output } => {
            let p = params.to_params();
            let inputs = json!({ "id": id, "params": p });
            let res = (|| {
                let inner = match inner {
                    Some(path) => {
                        let coloring = coloring_from_json(&read(path)?)?;
                        let tl = tl.as_deref().ok_or_else(|| Error::MissingParam {
                            id: id.clone(),
                            param: "targets".into(),
                        })?;
                        Some(Inner { coloring, targets: targets(tl)? })
                    }
                    None => None,
                };
                let (report, file) = cmd_witness(id, &p, inner.as_ref())?;
                if let Some(out) = output {
                    write(out, &file)?;
                }
                Ok((report, None))
            })();
            ("witness", inputs, res)
        }
        Command::Verify { file, targets: tl } => {
            let inputs = json!({ "file": file.display().to_string(), "targets": tl });
            let res = (|| {
                let list = tl.as_deref().map(targets).transpose()?;
                cmd_verify(&read(file)?, list.as_deref()).map(|r| (r, None))
            })();
            ("verify", inputs, res)
        }
        Command::Search(a) | Command::Bsearch(a) => {
            let name = if matches!(command, Command::Search(_)) { "search" } else { "bsearch" };
            let inputs = json!({ "targets": a.targets, "range": a.range });
            let res = (|| {
                let (lo, hi) = a.range()?;
                let list = targets(&a.targets)?;
                let f = if name == "search" { cmd_search } else { cmd_bsearch };
                f(&list, lo, hi, &a.options()).map(|r| (r, None))
            })();
            (name, inputs, res)
        }
        Command::ExportCnf { host: h, targets: tl, output } => {
            let inputs = json!({ "host": h, "targets": tl });
            let res = (|| {
                let (report, dimacs) = cmd_export_cnf(host(h)?, &targets(tl)?)?;
                match output {
                    Some(out) => {
                        write(out, &dimacs)?;
                        Ok((report, None))
                    }
                    None => Ok((report, Some(dimacs))),
                }
            })();
            ("export-cnf", inputs, res)
        }
        Command::DecodeModel { host: h, targets: tl, model } => {
            let inputs = json!({ "host": h, "targets": tl });
            let res = (|| cmd_decode_model(host(h)?, &targets(tl)?, &read(model)?).map(|r| (r, None)))();
            ("decode-model", inputs, res)
        }
        Command::Table { ids } => {
            let inputs = json!({ "ids": ids });
            ("table", inputs, cmd_table(ids).map(|(r, text)| (r, Some(text))))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (name, inputs, res) = run(&cli.command);
    let report = match res {
        Ok((report, text)) => {
            if let Some(text) = text {
                print!("{text}");
            }
            report
        }
        Err(err) => {
            eprintln!("error: {err}");
            Report::from_error(name, inputs, &err)
        }
    };
    println!("{}", report.envelope(start.elapsed().as_millis()));
    ExitCode::from(report.exit_code() as u8)
}
