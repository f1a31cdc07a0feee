//! Command-line surface for exact packing chromatic computations:
//! per-graph invariant reports, packing colourings, Mycielski
//! constructions, parametric families, and corpus-wide verification.

use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use packnum::families::{generate, FamilyParams};
use packnum::realizability::{ScanReport, SearchOutcome};
use packnum::{
    alpha_mycielskian, enumerate, invariant_report, mycielski_bound_report, mycielski_power,
    packing_chromatic_number, parse_graph6_lines, run_scan, s_packing_color, search_counterexample,
    seed_m_table, Budget, BudgetExceeded, CheckId, Graph, InvariantReport, MTableRow,
    MycielskiBoundReport, PackingColoring, SPackingSpec, ScanOptions, SearchOptions, Triple,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Parser)]
#[command(
    name = "packnum",
    version,
    about = "Exact packing chromatic numbers, related invariants, and corpus checks on small graphs"
)]
struct Cli {
    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Solver node budget per graph; default from PACKNUM_BUDGET or 10^8
    #[arg(long, global = true, value_name = "NODES")]
    budget: Option<u64>,

    /// Worker threads for corpus commands; default: all cores
    #[arg(long, global = true, value_name = "COUNT")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report order, degrees, diameter, clique, chromatic, independence,
    /// and packing chromatic numbers with the bound relations between them
    Invariants {
        /// graph6 file, or "-" for standard input
        #[arg(default_value = "-", value_name = "FILE")]
        input: String,
    },
    /// Minimise the packing palette, or test a fixed radii sequence
    Packing {
        /// graph6 file, or "-" for standard input
        #[arg(default_value = "-", value_name = "FILE")]
        input: String,
        /// Comma-separated nondecreasing radii, e.g. 1,1,2; without it
        /// the least feasible palette 1,2,...,k is found
        #[arg(long, value_name = "RADII")]
        spec: Option<String>,
    },
    /// Apply the Mycielski construction and compare against its bounds
    Mycielski {
        /// graph6 file, or "-" for standard input
        #[arg(default_value = "-", value_name = "FILE")]
        input: String,
        /// Iterations of the construction
        #[arg(long, default_value_t = 1, value_name = "K")]
        power: usize,
        /// Also report the bound comparisons (single application only)
        #[arg(long)]
        bounds: bool,
    },
    /// Emit one parametric family member as graph6
    Gen(GenArgs),
    /// Verify invariant relations across a graph corpus, or search it
    /// for a (clique, chromatic, packing) triple
    Scan(ScanArgs),
    /// Known bounds on the least packing chromatic number occurring
    /// together with given clique and chromatic numbers
    Mtable,
    /// Emit the built-in connected-graph corpus as graph6 lines
    Corpus {
        /// All orders 1..=N
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
        /// A single order
        #[arg(long, value_name = "N", conflicts_with = "max_n")]
        order: Option<usize>,
    },
}

#[derive(Args)]
struct GenArgs {
    /// One of: complete, path, cycle, star, complete-bipartite,
    /// g-k-ell, hclass, kn-minus-star, mycielski-power
    #[arg(long, value_name = "NAME")]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    leaves: Option<usize>,
    /// Extra hclass edges as dash pairs, e.g. 1-5,3-4
    #[arg(long, value_name = "EDGES")]
    extras: Option<String>,
}

#[derive(Args)]
struct ScanArgs {
    /// Check id, or "all"; repeatable and comma-separable
    #[arg(long, value_name = "ID")]
    check: Vec<String>,
    /// Search for a clique,chromatic,packing triple instead of checking
    #[arg(long, value_name = "A,B,C", conflicts_with = "check")]
    pattern: Option<String>,
    /// Restrict --pattern candidates to chromatically critical graphs;
    /// narrows the search, so absence is no longer conclusive
    #[arg(long, requires = "pattern")]
    critical: bool,
    /// Built-in corpus of connected graphs of order 1..=N
    #[arg(long, value_name = "N")]
    max_n: Option<usize>,
    /// graph6 file (or "-") replacing the built-in corpus
    #[arg(long, value_name = "FILE", conflicts_with = "max_n")]
    input: Option<String>,
    /// Skip corpus graphs before this index
    #[arg(long, default_value_t = 0, value_name = "INDEX")]
    start_index: usize,
    /// Recorded in the report and its run id
    #[arg(long)]
    seed: Option<u64>,
}

/// Failure with the process exit code it maps to: 3 for input errors,
/// 4 for exhausted solver budgets.
struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 3,
        message: message.into(),
    }
}

fn budget_failure(context: &str, err: BudgetExceeded) -> Failure {
    Failure {
        code: 4,
        message: format!("{context}: {err}"),
    }
}

/// Dying silently on a closed pipe lets output feed `head` and
/// friends without a panic.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(input_error("--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| input_error(format!("worker pool: {e}")))?;
    }
    let budget = resolve_budget(cli.budget)?;
    let format = cli.format;
    match cli.command {
        Command::Invariants { input } => cmd_invariants(&input, budget, format),
        Command::Packing { input, spec } => cmd_packing(&input, spec.as_deref(), budget, format),
        Command::Mycielski {
            input,
            power,
            bounds,
        } => cmd_mycielski(&input, power, bounds, budget, format),
        Command::Gen(args) => cmd_gen(&args),
        Command::Scan(args) => cmd_scan(&args, budget, format),
        Command::Mtable => cmd_mtable(format),
        Command::Corpus { max_n, order } => cmd_corpus(max_n, order),
    }
}

fn resolve_budget(flag: Option<u64>) -> Result<Budget, Failure> {
    let budget = match flag {
        Some(limit) => Budget::new(limit),
        None => Budget::from_env(),
    };
    if budget.limit() == 0 {
        return Err(input_error("node budget must be positive"));
    }
    Ok(budget)
}

fn read_graphs(path: &str) -> Result<Vec<Graph>, Failure> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| input_error(format!("standard input: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| input_error(format!("{path}: {e}")))?
    };
    parse_graph6_lines(&text).map_err(|(line, e)| input_error(format!("{path}:{line}: {e}")))
}

fn emit(g: &Graph) -> String {
    packnum::emit_graph6(g).expect("orders in range")
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serialises")
    );
}

fn cmd_invariants(input: &str, budget: Budget, format: Format) -> Result<u8, Failure> {
    let graphs = read_graphs(input)?;
    let mut reports: Vec<InvariantReport> = Vec::with_capacity(graphs.len());
    for (i, g) in graphs.iter().enumerate() {
        let report = invariant_report(g, budget)
            .map_err(|e| budget_failure(&format!("graph {}", i + 1), e))?;
        reports.push(report);
    }
    match format {
        Format::Json => print_json(&reports),
        Format::Human => {
            for rep in &reports {
                let diam = match rep.diameter {
                    Some(d) => d.to_string(),
                    None => "inf".to_string(),
                };
                let mut bounds = String::new();
                for b in rep.bounds.iter().filter(|b| b.applicable) {
                    let mark = if !b.holds {
                        "FAIL"
                    } else if b.tight {
                        "tight"
                    } else {
                        "ok"
                    };
                    let _ = write!(bounds, " {}:{}", b.id, mark);
                }
                println!(
                    "{}  n={} Δ={} diam={} ω={} χ={} α={} χ_ρ={} bounds:{}",
                    rep.graph6,
                    rep.n,
                    rep.max_degree,
                    diam,
                    rep.clique,
                    rep.chromatic,
                    rep.independence,
                    rep.packing_chromatic,
                    bounds
                );
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct PackingRecord {
    graph6: String,
    radii: Vec<usize>,
    feasible: bool,
    /// Colours used; for palette minimisation, the packing chromatic number.
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<PackingColoring>,
}

fn parse_spec(text: &str) -> Result<SPackingSpec, Failure> {
    let radii: Vec<usize> = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| input_error(format!("bad radius {part:?} in --spec")))
        })
        .collect::<Result<_, _>>()?;
    SPackingSpec::new(radii).map_err(|e| input_error(format!("--spec: {e}")))
}

fn cmd_packing(
    input: &str,
    spec: Option<&str>,
    budget: Budget,
    format: Format,
) -> Result<u8, Failure> {
    let graphs = read_graphs(input)?;
    let spec = spec.map(parse_spec).transpose()?;
    let mut records = Vec::with_capacity(graphs.len());
    for (i, g) in graphs.iter().enumerate() {
        let context = format!("graph {}", i + 1);
        let record = match &spec {
            Some(spec) => {
                let found = s_packing_color(g, spec, budget)
                    .map_err(|e| budget_failure(&context, e))?;
                PackingRecord {
                    graph6: emit(g),
                    radii: spec.radii().to_vec(),
                    feasible: found.is_some(),
                    value: found.as_ref().map(|c| c.colors_used()),
                    coloring: found,
                }
            }
            None => {
                let (k, coloring) = packing_chromatic_number(g, budget)
                    .map_err(|e| budget_failure(&context, e))?;
                PackingRecord {
                    graph6: emit(g),
                    radii: coloring.radii.clone(),
                    feasible: true,
                    value: Some(k),
                    coloring: Some(coloring),
                }
            }
        };
        records.push(record);
    }
    match format {
        Format::Json => print_json(&records),
        Format::Human => {
            for rec in &records {
                let radii = join(&rec.radii);
                if let Some(c) = &rec.coloring {
                    let label = if spec.is_some() { "colors" } else { "χ_ρ" };
                    println!(
                        "{}  radii={} {}={} assignment={}",
                        rec.graph6,
                        radii,
                        label,
                        rec.value.unwrap(),
                        join(&c.colors)
                    );
                } else {
                    println!("{}  radii={} infeasible", rec.graph6, radii);
                }
            }
        }
    }
    Ok(0)
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Serialize)]
struct MycielskiRecord {
    graph6: String,
    power: usize,
    result_graph6: String,
    result_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha_mycielskian: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<MycielskiBoundReport>,
}

fn cmd_mycielski(
    input: &str,
    power: usize,
    bounds: bool,
    budget: Budget,
    format: Format,
) -> Result<u8, Failure> {
    if power == 0 {
        return Err(input_error("--power must be at least 1"));
    }
    if bounds && power != 1 {
        return Err(input_error("--bounds compares a single application"));
    }
    let graphs = read_graphs(input)?;
    let mut records = Vec::with_capacity(graphs.len());
    for (i, g) in graphs.iter().enumerate() {
        let result = mycielski_power(g, power);
        let alpha = (power == 1).then(|| alpha_mycielskian(g).value);
        let report = if bounds {
            Some(
                mycielski_bound_report(g, budget)
                    .map_err(|e| budget_failure(&format!("graph {}", i + 1), e))?,
            )
        } else {
            None
        };
        records.push(MycielskiRecord {
            graph6: emit(g),
            power,
            result_order: result.n(),
            result_graph6: emit(&result),
            alpha_mycielskian: alpha,
            bounds: report,
        });
    }
    match format {
        Format::Json => print_json(&records),
        Format::Human => {
            for rec in &records {
                match rec.alpha_mycielskian {
                    Some(alpha) => println!(
                        "{}  power={} order={} α(M)={} {}",
                        rec.result_graph6, rec.power, rec.result_order, alpha, rec.graph6
                    ),
                    None => println!(
                        "{}  power={} order={} {}",
                        rec.result_graph6, rec.power, rec.result_order, rec.graph6
                    ),
                }
                if let Some(b) = &rec.bounds {
                    if b.applicable {
                        println!(
                            "  α={} α(M)={} χ_ρ={} χ_ρ(M)={} diff={}",
                            b.alpha, b.alpha_myc, b.chi_rho, b.chi_rho_myc, b.chi_rho_difference
                        );
                        for rec in b.bounds.iter().filter(|r| r.applicable) {
                            let mark = if !rec.holds {
                                "FAIL"
                            } else if rec.tight {
                                "tight"
                            } else {
                                "ok"
                            };
                            println!("  {} {}", rec.id, mark);
                        }
                    } else {
                        println!("  bounds not applicable (disconnected or trivial)");
                    }
                }
            }
        }
    }
    Ok(0)
}

fn cmd_gen(args: &GenArgs) -> Result<u8, Failure> {
    let params = family_params(args)?;
    let g = generate(&params).map_err(|e| input_error(e.to_string()))?;
    println!("{}", emit(&g));
    Ok(0)
}

fn family_params(args: &GenArgs) -> Result<FamilyParams, Failure> {
    let fam = args.family.as_str();
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| input_error(format!("family {fam} requires --{flag}")))
    };
    Ok(match fam {
        "complete" => FamilyParams::Complete {
            n: need(args.n, "n")?,
        },
        "path" => FamilyParams::Path {
            n: need(args.n, "n")?,
        },
        "cycle" => FamilyParams::Cycle {
            n: need(args.n, "n")?,
        },
        "star" => FamilyParams::Star {
            leaves: need(args.leaves, "leaves")?,
        },
        "complete-bipartite" => FamilyParams::CompleteBipartite {
            s: need(args.s, "s")?,
            t: need(args.t, "t")?,
        },
        "g-k-ell" => FamilyParams::GKL {
            k: need(args.k, "k")?,
            ell: need(args.ell, "ell")?,
        },
        "hclass" => FamilyParams::HClass {
            r: need(args.r, "r")?,
            s: need(args.s, "s")?,
            extras: parse_extras(args.extras.as_deref())?,
        },
        "kn-minus-star" => FamilyParams::KnMinusStar {
            n: need(args.n, "n")?,
            r: need(args.r, "r")?,
        },
        "mycielski-power" => FamilyParams::MycielskiPower {
            n: need(args.n, "n")?,
            k: need(args.k, "k")?,
        },
        other => {
            return Err(input_error(format!(
                "unknown family {other:?}; expected complete, path, cycle, star, \
                 complete-bipartite, g-k-ell, hclass, kn-minus-star, or mycielski-power"
            )))
        }
    })
}

fn parse_extras(text: Option<&str>) -> Result<Vec<(usize, usize)>, Failure> {
    let Some(text) = text else {
        return Ok(Vec::new());
    };
    text.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            let pair: Vec<&str> = part.trim().split('-').collect();
            if pair.len() != 2 {
                return Err(input_error(format!(
                    "bad extra edge {part:?}; expected U-V"
                )));
            }
            let u = pair[0]
                .parse::<usize>()
                .map_err(|_| input_error(format!("bad vertex {:?} in --extras", pair[0])))?;
            let v = pair[1]
                .parse::<usize>()
                .map_err(|_| input_error(format!("bad vertex {:?} in --extras", pair[1])))?;
            Ok((u, v))
        })
        .collect()
}

fn cmd_scan(args: &ScanArgs, budget: Budget, format: Format) -> Result<u8, Failure> {
    let (corpus, max_n) = scan_corpus(args)?;
    if let Some(pattern) = &args.pattern {
        let pattern = parse_triple(pattern)?;
        let opts = SearchOptions {
            budget,
            critical_filter: args.critical,
        };
        let outcome = search_counterexample(pattern, &corpus, &opts);
        print_search(&outcome, format);
        return Ok(if outcome.found.is_some() {
            2
        } else if !outcome.undecided.is_empty() {
            4
        } else {
            0
        });
    }

    let (checks, with_m_table) = resolve_checks(&args.check)?;
    let opts = ScanOptions {
        checks,
        budget,
        start_index: args.start_index,
        with_m_table,
        max_n,
        seed: args.seed,
    };
    let report = run_scan(&corpus, &opts);
    print_scan(&report, format);
    Ok(if report.any_violation() {
        2
    } else if report.any_undecided() {
        4
    } else {
        0
    })
}

fn scan_corpus(args: &ScanArgs) -> Result<(Vec<Graph>, usize), Failure> {
    if let Some(path) = &args.input {
        let graphs = read_graphs(path)?;
        let max_n = graphs.iter().map(Graph::n).max().unwrap_or(0);
        return Ok((graphs, max_n));
    }
    let max_n = args.max_n.unwrap_or(6);
    let levels = enumerate::connected_corpus(max_n).map_err(|e| input_error(e.to_string()))?;
    let corpus: Vec<Graph> = levels
        .iter()
        .flat_map(|level| level.iter().cloned())
        .collect();
    Ok((corpus, max_n))
}

fn resolve_checks(flags: &[String]) -> Result<(Vec<CheckId>, bool), Failure> {
    let mut slugs: Vec<&str> = Vec::new();
    for flag in flags {
        for part in flag.split(',') {
            let part = part.trim();
            if !part.is_empty() {
                slugs.push(part);
            }
        }
    }
    if slugs.is_empty() || slugs.contains(&"all") {
        return Ok((CheckId::ALL.to_vec(), true));
    }
    let checks = slugs
        .iter()
        .map(|s| CheckId::from_str(s).map_err(|e| input_error(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((checks, false))
}

fn parse_triple(text: &str) -> Result<Triple, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(input_error("--pattern expects A,B,C"));
    }
    let nums = parts
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| input_error(format!("bad number {p:?} in --pattern")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Triple::new(nums[0], nums[1], nums[2]))
}

fn print_search(outcome: &SearchOutcome, format: Format) {
    match format {
        Format::Json => print_json(outcome),
        Format::Human => {
            match &outcome.found {
                Some(hit) => println!(
                    "pattern {}: found at index {}: {}",
                    outcome.pattern, hit.index, hit.graph6
                ),
                None => println!("pattern {}: NONE", outcome.pattern),
            }
            println!(
                "checked={} undecided={}",
                outcome.checked,
                outcome.undecided.len()
            );
        }
    }
}

fn print_scan(report: &ScanReport, format: Format) {
    match format {
        Format::Json => print_json(report),
        Format::Human => {
            println!("run {}", report.run_id);
            println!(
                "corpus {} size={} max_n={} budget={} start={}",
                report.corpus_digest,
                report.corpus_size,
                report.max_n,
                report.budget,
                report.start_index
            );
            for check in &report.checks {
                println!(
                    "{:<20} {:<20} checked={} applicable={} violations={} skipped={}",
                    check.check.slug(),
                    status_label(check),
                    check.checked,
                    check.applicable,
                    check.violations.len(),
                    check.skipped.len()
                );
            }
            if let Some(rows) = &report.m_table {
                println!("m-table:");
                print_m_rows(rows);
            }
            println!("undecided: {}", report.undecided.len());
        }
    }
}

fn status_label(check: &packnum::CheckReport) -> String {
    serde_json::to_value(check.status)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_else(|| format!("{:?}", check.status))
}

fn print_m_rows(rows: &[MTableRow]) {
    println!("  a  b  lo  hi  exact  witness");
    for row in rows {
        let witness = row.witness.as_deref().unwrap_or("-");
        let anomaly = if row.anomaly { "  ANOMALY" } else { "" };
        println!(
            "  {}  {}  {}  {}  {}  {}{}",
            row.a, row.b, row.lo, row.hi, row.exact, witness, anomaly
        );
    }
}

fn cmd_mtable(format: Format) -> Result<u8, Failure> {
    let rows = seed_m_table();
    match format {
        Format::Json => print_json(&rows),
        Format::Human => print_m_rows(&rows),
    }
    Ok(0)
}

fn cmd_corpus(max_n: Option<usize>, order: Option<usize>) -> Result<u8, Failure> {
    let mut out = String::new();
    match (max_n, order) {
        (Some(max), None) => {
            let levels =
                enumerate::connected_corpus(max).map_err(|e| input_error(e.to_string()))?;
            for level in levels {
                for g in level.iter() {
                    out.push_str(&emit(g));
                    out.push('\n');
                }
            }
        }
        (None, Some(n)) => {
            let graphs = enumerate::connected_graphs(n).map_err(|e| input_error(e.to_string()))?;
            for g in graphs.iter() {
                out.push_str(&emit(g));
                out.push('\n');
            }
        }
        _ => return Err(input_error("pass exactly one of --max-n or --order")),
    }
    print!("{out}");
    Ok(0)
}
