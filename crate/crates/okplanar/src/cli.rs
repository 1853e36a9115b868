//! Batch command-line front end: stable file formats, stable exit codes.
//!
//! Exit codes: 0 = pass, 1 = bound or validation failure, 2 = input error,
//! 3 = internal assertion (a proof bound failed inside the pipeline).

use crate::decomp::{run_pipeline, TreeDecomposition};
use crate::drawing::ConvexDrawing;
use crate::error::Error;
use crate::families;
use crate::graph::Graph;
use crate::io;
use crate::oracles;
use crate::separate::{
    brute_force_min_balanced_separation_capped, extract_balanced_separation, verify_separation,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Instant;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "okp",
    about = "Crossing analysis, tree decompositions and balanced separators \
             for outer (min-)k-planar convex drawings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check outer (min-)k-planarity of .cvx drawings.
    Check(CheckArgs),
    /// Build a tree decomposition with width <= 3*floor(k/2) + 4.
    Decompose(DecomposeArgs),
    /// Extract a balanced separation of order <= 2*floor(k/2) + 4.
    Separate(SeparateArgs),
    /// Generate family instances (.cvx for drawings, .gr for abstract graphs).
    Gen(GenArgs),
    /// Validate a .td or .sep certificate against a graph.
    Validate(ValidateArgs),
    /// Planarize a hull-complete drawing and dump G_C / G_S.
    Planarize(PlanarizeArgs),
    /// Exact small-instance oracles.
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Input .cvx files.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = CheckMode::K)]
    pub mode: CheckMode,
    #[arg(long)]
    pub json: bool,
    /// Process inputs with this many worker threads.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    K,
    #[value(name = "min-k")]
    MinK,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// The k the pipeline is parameterized by (mandatory unless --auto-k).
    #[arg(long, conflicts_with = "auto_k")]
    pub k: Option<usize>,
    /// Use the measured min-k-value of each input as its k.
    #[arg(long)]
    pub auto_k: bool,
    /// Output .td path (single input only).
    #[arg(short, long, conflicts_with = "out_dir")]
    pub output: Option<PathBuf>,
    /// Directory for derived output names (default: next to each input).
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    /// Also write the decomposition of the expanded graph here.
    #[arg(long)]
    pub expanded_td: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Args, Debug)]
pub struct SeparateArgs {
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, conflicts_with = "auto_k")]
    pub k: Option<usize>,
    #[arg(long)]
    pub auto_k: bool,
    #[arg(short, long, conflicts_with = "out_dir")]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Family {
    Grid,
    Gk,
    Fk,
    Prism,
    Random,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    /// Certificate file (.td or .sep, detected from the header).
    pub certificate: PathBuf,
    /// Graph file (.cvx or .gr, detected from the header).
    pub graph: PathBuf,
}

#[derive(Args, Debug)]
pub struct PlanarizeArgs {
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[command(subcommand)]
    pub which: OracleCommand,
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// Exact treewidth of a small graph (.gr or .cvx).
    Tw {
        input: PathBuf,
        #[arg(long, default_value_t = oracles::TREEWIDTH_CAP)]
        cap: usize,
    },
    /// Exact minimum balanced-separation order of a small graph.
    Sep {
        input: PathBuf,
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Verify the G_k bramble and report its exact order.
    Bramble {
        #[arg(long)]
        gk: usize,
    },
}

/// Machine-readable record of one command on one input.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_k_value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub width: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_dual_depth: Option<usize>,
    pub elapsed_ms: u128,
    pub verdict: String,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Parse { .. }
        | Error::Io(_)
        | Error::InvalidDrawing(_)
        | Error::TrivialInstance
        | Error::NotHullComplete(_, _)
        | Error::TooLarge { .. }
        | Error::BudgetExceeded(_)
        | Error::PreconditionViolated(_) => EXIT_INPUT,
        Error::NotMinKPlanar { .. } => EXIT_FAIL,
        Error::ThreeConcurrentEdges(..)
        | Error::DepthBoundViolated { .. }
        | Error::BoundViolated { .. }
        | Error::Internal(_) => EXIT_INTERNAL,
    }
}

fn read_to_string(path: &Path) -> crate::error::Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

/// Writes atomically: temp file in the target directory, then rename.
fn write_atomic(path: &Path, content: &str) -> crate::error::Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let tmp = dir.join(format!(
        ".{}.tmp-{}",
        path.file_name().and_then(|s| s.to_str()).unwrap_or("out"),
        std::process::id()
    ));
    std::fs::write(&tmp, content)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

fn load_graph_file(path: &Path) -> crate::error::Result<Graph> {
    let text = read_to_string(path)?;
    if sniff(&text, "p cvx") {
        Ok(io::parse_cvx(&text)?.graph())
    } else {
        io::parse_gr(&text)
    }
}

fn sniff(text: &str, prefix: &str) -> bool {
    text.lines()
        .find(|l| !l.trim_start().starts_with('c') && !l.trim().is_empty())
        .is_some_and(|l| l.trim_start().starts_with(prefix))
}

fn derived_output(input: &Path, out_dir: &Option<PathBuf>, ext: &str) -> PathBuf {
    let mut name = input.file_stem().map(|s| s.to_owned()).unwrap_or_default();
    name.push(".");
    name.push(ext);
    match out_dir {
        Some(dir) => dir.join(name),
        None => input.with_file_name(name),
    }
}

/// Runs inputs through `work` on up to `jobs` threads, prints reports in
/// input order, returns the worst exit code.
fn run_batch<F>(inputs: &[PathBuf], jobs: usize, json: bool, work: F) -> i32
where
    F: Fn(&Path) -> (RunReport, Vec<String>, i32) + Sync,
{
    let jobs = jobs.max(1).min(inputs.len().max(1));
    let results: Mutex<Vec<Option<(RunReport, Vec<String>, i32)>>> =
        Mutex::new(vec![None; inputs.len()]);
    let next = std::sync::atomic::AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if i >= inputs.len() {
                    break;
                }
                let out = work(&inputs[i]);
                results.lock().unwrap()[i] = Some(out);
            });
        }
    });
    let mut code = EXIT_PASS;
    for slot in results.into_inner().unwrap() {
        let (report, lines, c) = slot.expect("every input processed");
        if json {
            println!("{}", serde_json::to_string(&report).unwrap());
        } else {
            for l in lines {
                println!("{l}");
            }
        }
        code = code.max(c);
    }
    code
}

fn report_stub(command: &str, input: &Path) -> RunReport {
    RunReport {
        command: command.into(),
        input: input.display().to_string(),
        k: None,
        k_value: None,
        min_k_value: None,
        width: None,
        order: None,
        bound: None,
        max_dual_depth: None,
        elapsed_ms: 0,
        verdict: "error".into(),
    }
}

fn error_outcome(command: &str, input: &Path, err: &Error) -> (RunReport, Vec<String>, i32) {
    let mut report = report_stub(command, input);
    report.verdict = format!("error: {err}");
    let lines = vec![format!("{}: error: {err}", input.display())];
    (report, lines, exit_code_for(err))
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::Separate(args) => cmd_separate(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Validate(args) => cmd_validate(args),
        Command::Planarize(args) => cmd_planarize(args),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

fn cmd_check(args: CheckArgs) -> i32 {
    run_batch(&args.inputs, args.jobs, args.json, |input| {
        let start = Instant::now();
        let drawing = match read_to_string(input).and_then(|t| io::parse_cvx(&t)) {
            Ok(d) => d,
            Err(e) => return error_outcome("check", input, &e),
        };
        let r = drawing.crossings();
        let measured = match args.mode {
            CheckMode::K => r.k_value,
            CheckMode::MinK => r.min_k_value,
        };
        let pass = measured <= args.k;
        let mut lines = Vec::new();
        for (i, &(u, v)) in drawing.edges().iter().enumerate() {
            lines.push(format!("e {} {} crossings {}", u + 1, v + 1, r.per_edge[i]));
        }
        lines.push(format!("k-value {}", r.k_value));
        lines.push(format!("min-k-value {}", r.min_k_value));
        lines.push(format!(
            "{}: verdict {} (mode {}, k {})",
            input.display(),
            if pass { "pass" } else { "fail" },
            match args.mode {
                CheckMode::K => "k",
                CheckMode::MinK => "min-k",
            },
            args.k
        ));
        let report = RunReport {
            command: "check".into(),
            input: input.display().to_string(),
            k: Some(args.k),
            k_value: Some(r.k_value),
            min_k_value: Some(r.min_k_value),
            width: None,
            order: None,
            bound: None,
            max_dual_depth: None,
            elapsed_ms: start.elapsed().as_millis(),
            verdict: if pass { "pass".into() } else { "fail".into() },
        };
        (report, lines, if pass { EXIT_PASS } else { EXIT_FAIL })
    })
}

fn pick_k(requested: Option<usize>, auto: bool, d: &ConvexDrawing) -> usize {
    if auto {
        d.crossings().min_k_value
    } else {
        requested.expect("clap enforces --k unless --auto-k")
    }
}

fn cmd_decompose(args: DecomposeArgs) -> i32 {
    if args.k.is_none() && !args.auto_k {
        eprintln!("error: --k is required unless --auto-k is given");
        return EXIT_INPUT;
    }
    if args.output.is_some() && args.inputs.len() > 1 {
        eprintln!("error: -o needs a single input; use --out-dir for batches");
        return EXIT_INPUT;
    }
    run_batch(&args.inputs, args.jobs, args.json, |input| {
        let start = Instant::now();
        let drawing = match read_to_string(input).and_then(|t| io::parse_cvx(&t)) {
            Ok(d) => d,
            Err(e) => return error_outcome("decompose", input, &e),
        };
        let k = pick_k(args.k, args.auto_k, &drawing);
        let bound = 3 * (k / 2) + 4;

        let (td, max_depth, expanded) = if drawing.n() <= 2 {
            (TreeDecomposition::single_bag((0..drawing.n()).collect()), 0, None)
        } else {
            match run_pipeline(&drawing, k) {
                Ok(run) => {
                    let depth = run.pair.max_depth();
                    let expanded =
                        (run.expansion.expanded.n(), io::write_td(&run.expanded_td, run.expansion.expanded.n()));
                    (run.td, depth, Some(expanded))
                }
                Err(e) => return error_outcome("decompose", input, &e),
            }
        };

        let violations = td.validate(&drawing.graph());
        let pass = violations.is_empty() && td.width() <= bound;

        let out_path = args
            .output
            .clone()
            .unwrap_or_else(|| derived_output(input, &args.out_dir, "td"));
        if let Err(e) = write_atomic(&out_path, &io::write_td(&td, drawing.n())) {
            return error_outcome("decompose", input, &e);
        }
        if let (Some(path), Some((_, text))) = (&args.expanded_td, &expanded) {
            if let Err(e) = write_atomic(path, text) {
                return error_outcome("decompose", input, &e);
            }
        }

        let lines = vec![format!(
            "{}: width {} (bound {}), {} bags, max dual depth {} -> {} [{}]",
            input.display(),
            td.width(),
            bound,
            td.num_nodes(),
            max_depth,
            out_path.display(),
            if pass { "pass" } else { "fail" }
        )];
        let report = RunReport {
            command: "decompose".into(),
            input: input.display().to_string(),
            k: Some(k),
            k_value: None,
            min_k_value: None,
            width: Some(td.width()),
            order: None,
            bound: Some(bound),
            max_dual_depth: Some(max_depth),
            elapsed_ms: start.elapsed().as_millis(),
            verdict: if pass { "pass".into() } else { "fail".into() },
        };
        (report, lines, if pass { EXIT_PASS } else { EXIT_FAIL })
    })
}

fn cmd_separate(args: SeparateArgs) -> i32 {
    if args.k.is_none() && !args.auto_k {
        eprintln!("error: --k is required unless --auto-k is given");
        return EXIT_INPUT;
    }
    if args.output.is_some() && args.inputs.len() > 1 {
        eprintln!("error: -o needs a single input; use --out-dir for batches");
        return EXIT_INPUT;
    }
    run_batch(&args.inputs, args.jobs, args.json, |input| {
        let start = Instant::now();
        let drawing = match read_to_string(input).and_then(|t| io::parse_cvx(&t)) {
            Ok(d) => d,
            Err(e) => return error_outcome("separate", input, &e),
        };
        let k = pick_k(args.k, args.auto_k, &drawing);
        let bound = 2 * (k / 2) + 4;
        let g = drawing.graph();

        let sep = if drawing.n() <= 2 {
            let all: Vec<usize> = (0..drawing.n()).collect();
            crate::separate::Separation::new(all.clone(), all)
        } else {
            let run = match run_pipeline(&drawing, k) {
                Ok(run) => run,
                Err(e) => return error_outcome("separate", input, &e),
            };
            match extract_balanced_separation(&run.td, &g) {
                Ok((sep, _)) => sep,
                Err(e) => return error_outcome("separate", input, &e),
            }
        };

        let verified = verify_separation(&g, &sep).is_ok();
        let pass = verified && sep.order() <= bound;
        // The brute-force oracle rides along on tiny inputs.
        let oracle = brute_force_min_balanced_separation_capped(&g, 16).ok();

        let out_path = args
            .output
            .clone()
            .unwrap_or_else(|| derived_output(input, &args.out_dir, "sep"));
        if let Err(e) = write_atomic(&out_path, &io::write_sep(&sep, drawing.n())) {
            return error_outcome("separate", input, &e);
        }

        let mut line = format!(
            "{}: order {} (bound {}), balanced {}",
            input.display(),
            sep.order(),
            bound,
            verified
        );
        if let Some(o) = oracle {
            line.push_str(&format!(", oracle min {o}"));
        }
        line.push_str(&format!(" -> {} [{}]", out_path.display(), if pass { "pass" } else { "fail" }));
        let report = RunReport {
            command: "separate".into(),
            input: input.display().to_string(),
            k: Some(k),
            k_value: None,
            min_k_value: None,
            width: None,
            order: Some(sep.order()),
            bound: Some(bound),
            max_dual_depth: None,
            elapsed_ms: start.elapsed().as_millis(),
            verdict: if pass { "pass".into() } else { "fail".into() },
        };
        (report, vec![line], if pass { EXIT_PASS } else { EXIT_FAIL })
    })
}

fn cmd_gen(args: GenArgs) -> i32 {
    let need = |opt: Option<usize>, name: &str| -> Result<usize, String> {
        opt.ok_or_else(|| format!("--{name} is required for this family"))
    };
    let rendered: Result<String, String> = (|| {
        match args.family {
            Family::Grid => {
                let m = need(args.m, "m")?;
                let n = need(args.n, "n")?;
                Ok(io::write_gr(&families::gen_grid(m, n)))
            }
            Family::Gk => {
                let k = need(args.k, "k")?;
                Ok(io::write_gr(&families::gen_gk(k)))
            }
            Family::Fk => {
                let k = need(args.k, "k")?;
                Ok(io::write_cvx(&families::gen_fk(k)))
            }
            Family::Prism => {
                let m = need(args.m, "m")?;
                let n = need(args.n, "n")?;
                if m < 3 {
                    return Err("prism needs --m >= 3".into());
                }
                Ok(io::write_cvx(&families::gen_stacked_prism(m, n)))
            }
            Family::Random => {
                let n = need(args.n, "n")?;
                let k = need(args.k, "k")?;
                if n < 3 {
                    return Err("random needs --n >= 3".into());
                }
                Ok(io::write_cvx(&families::random_outer_min_k_planar(
                    n, k, args.seed,
                )))
            }
        }
    })();
    match rendered {
        Ok(text) => match args.output {
            Some(path) => match write_atomic(&path, &text) {
                Ok(()) => {
                    println!("wrote {}", path.display());
                    EXIT_PASS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_INPUT
                }
            },
            None => {
                print!("{text}");
                EXIT_PASS
            }
        },
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
    }
}

fn cmd_validate(args: ValidateArgs) -> i32 {
    let cert_text = match read_to_string(&args.certificate) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let graph = match load_graph_file(&args.graph) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    if sniff(&cert_text, "s td") {
        let (td, n) = match io::parse_td(&cert_text) {
            Ok(x) => x,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INPUT;
            }
        };
        if n != graph.n() {
            println!("fail: decomposition is for {n} vertices, graph has {}", graph.n());
            return EXIT_FAIL;
        }
        let violations = td.validate(&graph);
        if violations.is_empty() {
            println!("ok: width {} with {} bags", td.width(), td.num_nodes());
            EXIT_PASS
        } else {
            for v in &violations {
                println!("violation: {v}");
            }
            EXIT_FAIL
        }
    } else if sniff(&cert_text, "s sep") {
        let (sep, n) = match io::parse_sep(&cert_text) {
            Ok(x) => x,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INPUT;
            }
        };
        if n != graph.n() {
            println!("fail: separation is for {n} vertices, graph has {}", graph.n());
            return EXIT_FAIL;
        }
        match verify_separation(&graph, &sep) {
            Ok(()) => {
                println!("ok: balanced separation of order {}", sep.order());
                EXIT_PASS
            }
            Err(e) => {
                println!("violation: {e}");
                EXIT_FAIL
            }
        }
    } else {
        eprintln!("error: certificate is neither a .td nor a .sep file");
        EXIT_INPUT
    }
}

fn cmd_planarize(args: PlanarizeArgs) -> i32 {
    let drawing = match read_to_string(&args.input).and_then(|t| io::parse_cvx(&t)) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    match crate::planarize::planarize(&drawing) {
        Ok(p) => {
            let text = io::write_planarization_debug(&p);
            match args.output {
                Some(path) => match write_atomic(&path, &text) {
                    Ok(()) => {
                        println!("wrote {}", path.display());
                        EXIT_PASS
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        EXIT_INPUT
                    }
                },
                None => {
                    print!("{text}");
                    EXIT_PASS
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn cmd_oracle(args: OracleArgs) -> i32 {
    match args.which {
        OracleCommand::Tw { input, cap } => match load_graph_file(&input) {
            Ok(g) => match oracles::exact_treewidth_capped(&g, cap) {
                Ok(tw) => {
                    println!("treewidth {tw}");
                    EXIT_PASS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_code_for(&e)
                }
            },
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_INPUT
            }
        },
        OracleCommand::Sep { input, cap } => match load_graph_file(&input) {
            Ok(g) => match brute_force_min_balanced_separation_capped(&g, cap) {
                Ok(s) => {
                    println!("min balanced separation order {s}");
                    EXIT_PASS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_code_for(&e)
                }
            },
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_INPUT
            }
        },
        OracleCommand::Bramble { gk } => {
            if gk == 0 {
                eprintln!("error: --gk must be at least 1");
                return EXIT_INPUT;
            }
            let g = families::gen_gk(gk);
            let b = families::gen_gk_bramble(gk);
            if let Err(v) = oracles::verify_bramble(&g, &b) {
                println!("bramble invalid: {v}");
                return EXIT_FAIL;
            }
            match oracles::bramble_order(&g, &b) {
                Ok(order) => {
                    println!("bramble of G_{gk} verified, order {order}");
                    EXIT_PASS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_code_for(&e)
                }
            }
        }
    }
}
