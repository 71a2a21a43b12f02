use crate::{
    Cli, Command, FamiliesAction, FamilyArg, Format, FormulasAction, FunctionArg, GenArgs,
    GraphSource, ModeArg, PointArgs, TableArgs, TmcArgs, VerifyArgs, VerifyColoringArgs,
};
use rayon::prelude::*;
use serde_json::json;
use std::fmt;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use tmc_core::coloring::{count_colors, is_tmc, ColoringFile, Verdict};
use tmc_core::families::{
    gen_complete, gen_gnt, gen_gnt3, gen_gstar, gen_gts, gen_multipartite, gen_path, gen_star,
    FamilyInstance,
};
use tmc_core::formulas::{f_eval, f_table, g_eval, g_table, write_csv, FormulaResult, GValue};
use tmc_core::graph::{graph6_decode, graph6_encode, Graph};
use tmc_core::harness::{
    check_theorem, CensusOptions, HarnessError, Theorem, TheoremReport, CACHE_DIR_ENV,
};
use tmc_core::solvers::{tmc_exact, Mode, TmcResult};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(2)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Input(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type Out = Box<dyn Write>;

pub fn theorem_help() -> String {
    let mut s = String::from("Checks:\n");
    for t in Theorem::ALL {
        s.push_str(&format!("  {:<8} {}\n", t.name(), t.description()));
    }
    s.push_str("  all      every check defined at this order\n\n");
    s.push_str(&format!(
        "Census results are cached in the directory named by {CACHE_DIR_ENV}, if set."
    ));
    s
}

pub fn run(cli: Cli) -> Result<ExitCode, CliError> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let mut out: Out = match &cli.out {
        Some(path) => Box::new(io::BufWriter::new(fs::File::create(path)?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    };
    let code = match cli.command {
        Command::Tmc(args) => cmd_tmc(args, &mut out),
        Command::VerifyColoring(args) => cmd_verify_coloring(args, &mut out),
        Command::Families {
            action: FamiliesAction::Gen(args),
        } => cmd_families(args, &mut out),
        Command::Formulas { action } => cmd_formulas(action, &mut out),
        Command::Verify(args) => cmd_verify(args, cli.jobs, &mut out),
    }?;
    out.flush()?;
    Ok(code)
}

fn read_graphs(source: &GraphSource) -> Result<Vec<(String, Graph)>, CliError> {
    let lines: Vec<String> = if let Some(s) = &source.graph6 {
        vec![s.clone()]
    } else if let Some(path) = &source.input {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        text.lines().map(str::to_owned).collect()
    } else {
        io::stdin().lock().lines().collect::<Result<_, _>>()?
    };
    let mut graphs = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = graph6_decode(line)
            .map_err(|e| CliError::Input(format!("line {}: {line:?}: {e}", i + 1)))?;
        graphs.push((line.to_owned(), g));
    }
    if graphs.is_empty() {
        return Err(CliError::Input("no graph given".into()));
    }
    Ok(graphs)
}

fn cmd_tmc(args: TmcArgs, out: &mut Out) -> Result<ExitCode, CliError> {
    let graphs = read_graphs(&args.source)?;
    if args.witness.is_some() && graphs.len() != 1 {
        return Err(CliError::Usage(
            "--witness needs exactly one input graph".into(),
        ));
    }
    let mode = match args.mode {
        ModeArg::Simple => Mode::Simple,
        ModeArg::Unrestricted => Mode::Unrestricted,
    };
    let results: Vec<TmcResult> = graphs
        .par_iter()
        .map(|(s, g)| tmc_exact(g, mode).map_err(|e| CliError::Input(format!("{s}: {e}"))))
        .collect::<Result<_, _>>()?;
    if let Some(path) = &args.witness {
        let text = serde_json::to_string_pretty(&results[0].witness.to_file())
            .expect("colorings serialize");
        fs::write(path, text + "\n")?;
    }
    let single = graphs.len() == 1;
    match args.format {
        Format::Human => {
            for ((s, _), r) in graphs.iter().zip(&results) {
                if single {
                    writeln!(out, "{}", r.value)?;
                } else {
                    writeln!(out, "{s} {}", r.value)?;
                }
            }
        }
        Format::Csv => {
            writeln!(out, "graph6,n,m,tmc,waste")?;
            for ((s, g), r) in graphs.iter().zip(&results) {
                writeln!(
                    out,
                    "{s},{},{},{},{}",
                    g.order(),
                    g.size(),
                    r.value,
                    r.waste
                )?;
            }
        }
        Format::Json => {
            let rows: Vec<_> = graphs
                .iter()
                .zip(&results)
                .map(|((s, g), r)| json!({"graph6": s, "n": g.order(), "m": g.size(), "tmc": r.value, "waste": r.waste}))
                .collect();
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&rows).expect("json")
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_coloring(args: VerifyColoringArgs, out: &mut Out) -> Result<ExitCode, CliError> {
    let graphs = read_graphs(&args.source)?;
    let [(_, g)] = graphs.as_slice() else {
        return Err(CliError::Usage(
            "verify-coloring needs exactly one graph".into(),
        ));
    };
    let text = fs::read_to_string(&args.coloring)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.coloring.display())))?;
    let file: ColoringFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.coloring.display())))?;
    let col = file
        .into_coloring()
        .map_err(|e| CliError::Input(e.to_string()))?;
    let verdict = is_tmc(g, &col).map_err(|e| CliError::Input(e.to_string()))?;
    let colors = count_colors(&col);
    match verdict {
        Verdict::Valid => {
            writeln!(out, "valid, {colors} colors")?;
            Ok(ExitCode::SUCCESS)
        }
        Verdict::Invalid(pair) => {
            writeln!(
                out,
                "invalid: no total monochromatic path joins {} and {}, {colors} colors",
                pair.u(),
                pair.v()
            )?;
            Ok(ExitCode::from(1))
        }
    }
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--family {family} needs --{flag}")))
}

fn cmd_families(args: GenArgs, out: &mut Out) -> Result<ExitCode, CliError> {
    let name = format!("{:?}", args.family).to_lowercase();
    let n = || need(args.n, "n", &name);
    let inst: FamilyInstance = match args.family {
        FamilyArg::Gts => gen_gts(n()?, need(args.t, "t", &name)?, need(args.s, "s", &name)?),
        FamilyArg::Gnt => gen_gnt(n()?, need(args.p, "p", &name)?),
        FamilyArg::Gnt3 => gen_gnt3(n()?),
        FamilyArg::Gstar => gen_gstar(
            n()?,
            need(args.t, "t", &name)?,
            need(args.extra, "extra", &name)?,
        ),
        FamilyArg::Multipartite => gen_multipartite(&args.parts),
        FamilyArg::Complete => gen_complete(n()?),
        FamilyArg::Star => gen_star(n()?),
        FamilyArg::Path => gen_path(n()?),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let g6 = graph6_encode(&inst.graph);
    let mut meta = serde_json::to_value(&inst.family).expect("families serialize");
    meta["predicted_tmc"] = json!(inst.predicted_tmc);
    meta["m"] = json!(inst.graph.size());
    match args.format {
        Format::Human => {
            writeln!(out, "{g6}")?;
            writeln!(out, "predicted tmc {} ({meta})", inst.predicted_tmc)?;
        }
        Format::Csv => {
            writeln!(out, "graph6,family,m,predicted_tmc")?;
            writeln!(
                out,
                "{g6},{},{},{}",
                inst.family.tag(),
                inst.graph.size(),
                inst.predicted_tmc
            )?;
        }
        Format::Json => {
            meta["graph6"] = json!(g6);
            writeln!(out, "{meta}")?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn formula_json(r: &FormulaResult) -> serde_json::Value {
    serde_json::to_value(r).expect("results serialize")
}

fn cmd_formulas(action: FormulasAction, out: &mut Out) -> Result<ExitCode, CliError> {
    let usage = |e: tmc_core::formulas::FormulaError| CliError::Usage(e.to_string());
    match action {
        FormulasAction::F(PointArgs { n, k, format }) => {
            let r = f_eval(n, k).map_err(usage)?;
            emit_point(out, format, Some(r), &r.to_string())?;
        }
        FormulasAction::G(PointArgs { n, k, format }) => {
            let v = g_eval(n, k).map_err(usage)?;
            let r = match v {
                GValue::Value(r) => Some(r),
                GValue::Undefined => None,
            };
            emit_point(out, format, r, &v.to_string())?;
        }
        FormulasAction::Table(TableArgs {
            function,
            n,
            format,
        }) => {
            let rows = match function {
                FunctionArg::F => f_table(n),
                FunctionArg::G => g_table(n),
            }
            .map_err(usage)?;
            match format {
                Format::Csv => {
                    write_csv(&rows, &mut *out).map_err(|e| CliError::Input(e.to_string()))?
                }
                Format::Json => {
                    let v: Vec<_> = rows.iter().map(formula_json).collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
                }
                Format::Human => {
                    for r in &rows {
                        writeln!(out, "k={} {r}", r.k)?;
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit_point(
    out: &mut Out,
    format: Format,
    r: Option<FormulaResult>,
    human: &str,
) -> Result<(), CliError> {
    match (format, r) {
        (Format::Human, _) => writeln!(out, "{human}")?,
        (Format::Csv, Some(r)) => {
            write_csv(&[r], &mut *out).map_err(|e| CliError::Input(e.to_string()))?
        }
        (Format::Csv, None) => writeln!(out, "n,k,value,case,t,s,r")?,
        (Format::Json, Some(r)) => writeln!(out, "{}", formula_json(&r))?,
        (Format::Json, None) => writeln!(out, "{}", json!({"value": null, "case": "undefined"}))?,
    }
    Ok(())
}

fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_DIR_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

fn cmd_verify(args: VerifyArgs, jobs: Option<usize>, out: &mut Out) -> Result<ExitCode, CliError> {
    let all = args.theorem.eq_ignore_ascii_case("all");
    let checks: Vec<Theorem> = if all {
        Theorem::ALL.to_vec()
    } else {
        vec![args.theorem.parse().map_err(CliError::Usage)?]
    };
    let options = CensusOptions {
        allow_long: args.long,
        jobs,
        cache_dir: cache_dir(),
        progress: args.long,
    };
    let mut reports: Vec<TheoremReport> = Vec::new();
    for t in checks {
        match check_theorem(t, args.n, &options) {
            Ok(r) => reports.push(r),
            Err(HarnessError::Domain { .. }) if all => {}
            Err(
                e @ (HarnessError::Domain { .. }
                | HarnessError::NeedsLong { .. }
                | HarnessError::Order { .. }),
            ) => return Err(CliError::Usage(e.to_string())),
            Err(e) => return Err(CliError::Input(e.to_string())),
        }
    }
    match args.format {
        Format::Human => {
            for r in &reports {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{} n={}: {verdict} ({} items, {} counterexamples)",
                    r.theorem,
                    r.n,
                    r.rows.len(),
                    r.counterexamples.len()
                )?;
                for c in &r.counterexamples {
                    writeln!(
                        out,
                        "  {}: {} [{}]",
                        c.item,
                        c.detail,
                        c.graph6.as_deref().unwrap_or("-")
                    )?;
                }
            }
        }
        Format::Json => {
            if all {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("json")
                )?;
            } else {
                writeln!(out, "{}", reports[0].to_json())?;
            }
        }
        Format::Csv => {
            for (i, r) in reports.iter().enumerate() {
                let mut buf = Vec::new();
                r.write_csv(&mut buf)
                    .map_err(|e| CliError::Input(e.to_string()))?;
                let text = String::from_utf8(buf).expect("csv is utf-8");
                let body = if i == 0 {
                    &text[..]
                } else {
                    text.split_once('\n').map_or("", |x| x.1)
                };
                out.write_all(body.as_bytes())?;
            }
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
