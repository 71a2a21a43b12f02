//! `tmc`: exact total monochromatic connection numbers from the command line.
//!
//! Exit status: 0 on success or a passing check, 1 when a verification
//! finds a failure, 2 on usage or input errors.

mod commands;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "tmc",
    version,
    about = "Exact total monochromatic connection numbers of small graphs"
)]
struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Worker threads for batch work (default: available parallelism).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute tmc(G) exactly: the largest number of colors in a total
    /// coloring where every pair of vertices is joined by a path whose edges
    /// and inner vertices share one color. Equals m + n minus the least
    /// total waste of a family of color trees.
    Tmc(TmcArgs),
    /// Check that a coloring file is a total monochromatic connection
    /// coloring of the graph and count its colors.
    VerifyColoring(VerifyColoringArgs),
    /// Generate the extremal families behind the closed forms for f and g.
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
    /// Evaluate f(n,k), the least size forcing tmc >= k, and g(n,k), the
    /// greatest size keeping tmc <= k, over connected graphs of order n.
    Formulas {
        #[command(subcommand)]
        action: FormulasAction,
    },
    /// Reproduce a result exhaustively over all connected graphs of order n,
    /// or over every valid family parameter. Exit status 0 means it holds.
    #[command(after_help = commands::theorem_help())]
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct GraphSource {
    /// One graph in graph6.
    #[arg(long, value_name = "STRING")]
    graph6: Option<String>,
    /// File with one graph6 string per line. Without --graph6 or --in,
    /// graphs are read from standard input.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Human,
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ModeArg {
    /// Color trees pairwise share at most one vertex (orders up to 8).
    Simple,
    /// Arbitrary color trees (orders up to 5); reference search.
    Unrestricted,
}

#[derive(Args, Debug)]
struct TmcArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum, default_value = "simple")]
    mode: ModeArg,
    /// Write the optimal coloring here (single graph only).
    #[arg(long, value_name = "PATH")]
    witness: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyColoringArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Coloring file: JSON with `n`, `edges` ([u,v] pairs, u < v),
    /// `edge_colors` aligned with `edges`, and `vertex_colors`.
    #[arg(long, value_name = "PATH")]
    coloring: PathBuf,
}

#[derive(Subcommand, Debug)]
enum FamiliesAction {
    /// Print one family member in graph6 with its predicted tmc.
    Gen(GenArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyArg {
    /// Clique with one edge stretched into a path and s edges cut: tmc = m - n + 2 + t.
    Gts,
    /// Complete graph with each class's first vertex cut from its class: tmc = m.
    Gnt,
    /// The odd-order member of gnt with a class of size 3.
    Gnt3,
    /// Complete multipartite graph with one big part plus inner edges: tmc = m + n - t.
    Gstar,
    /// Complete multipartite graph: tmc = m + r - t.
    Multipartite,
    /// Complete graph: tmc = m + n.
    Complete,
    /// Star: tmc = n.
    Star,
    /// Path: tmc = 3.
    Path,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    extra: Option<usize>,
    /// Part sizes for multipartite, comma separated.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum FormulasAction {
    /// f(n,k) with its case and parameters.
    F(PointArgs),
    /// g(n,k) with its case and parameters; undefined below k = n.
    G(PointArgs),
    /// Every k for one function, as CSV `n,k,value,case,t,s,r` by default.
    Table(TableArgs),
}

#[derive(Args, Debug)]
struct PointArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FunctionArg {
    F,
    G,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long = "fn", value_enum)]
    function: FunctionArg,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Check to run (see below), or `all`.
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    n: usize,
    /// Allow order 8, which enumerates 11117 graphs.
    #[arg(long)]
    long: bool,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
