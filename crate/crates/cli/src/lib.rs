//! Command-line front end. [`run`] does all the work so tests can drive it
//! without spawning a process.

use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use phylocompat::sandwich::chordal::chordless_cycles;
use phylocompat::sandwich::closure::ClosureReport;
use phylocompat::solver::Refutation;
use phylocompat::{
    build_instance, build_phylogeny, closure, cycle_has_proper_triangulation, dataset, parse_characters,
    random_characters, scan_subsets, solve, verify_f4_counterexample_on, CharacterSet, F4Report, Payload,
    SandwichInstance, ScanReport, SolveReport, Status, DEFAULT_NODE_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCOMPATIBLE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

const EXIT_HELP: &str = "\
INPUT is a character file, an instance JSON file (*.json), a bundled dataset
name (example1, sec4, fig6, fig7), or random:SPECIES:CHARS:STATES (uses --seed).

Exit status:
  0   compatible / success
  1   incompatible (or closure found the instance infeasible)
  2   inconclusive: the node budget ran out
  64  usage error
  65  data error (unreadable or malformed input)";

#[derive(Debug, Parser)]
#[command(
    name = "phylocompat",
    version,
    about = "Perfect phylogeny compatibility via chordal completions"
)]
#[command(after_help = EXIT_HELP)]
pub struct Cli {
    /// Maximum number of search nodes before giving up.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
    /// Seed for random:... inputs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output format. Defaults to json, except newick for `tree` and dot for `export --dot`.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for `scan`.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Newick,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide compatibility and print a proper chordal completion.
    Check { input: String },
    /// Print the pairs the closure forces and forbids, or an infeasibility witness.
    Closure { input: String },
    /// Build a perfect phylogeny (Newick by default).
    Tree { input: String },
    /// Solve every k-subset of the characters and the full set.
    Scan {
        input: String,
        #[arg(long)]
        k: usize,
    },
    /// Run a bundled dataset through the whole pipeline.
    Demo { name: String },
    /// Write the intersection graph / instance.
    Export {
        input: String,
        /// Shorthand for --format dot.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Data(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Data(_) => EXIT_DATA,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Data(m) => m,
        }
    }
}

enum Input {
    Characters(CharacterSet),
    Instance(SandwichInstance),
}

impl Input {
    fn instance(&self) -> SandwichInstance {
        match self {
            Input::Characters(cs) => build_instance(cs),
            Input::Instance(i) => i.clone(),
        }
    }

    fn characters(&self, verb: &str) -> Result<&CharacterSet, Failure> {
        match self {
            Input::Characters(cs) => Ok(cs),
            Input::Instance(_) => Err(Failure::Usage(format!(
                "`{verb}` needs a character file, not an instance"
            ))),
        }
    }
}

fn load(input: &str, seed: u64) -> Result<Input, Failure> {
    if let Some(params) = input.strip_prefix("random:") {
        let parts: Vec<usize> = params
            .split(':')
            .map(|s| s.parse())
            .collect::<Result<_, _>>()
            .map_err(|_| Failure::Usage(format!("expected random:SPECIES:CHARS:STATES, got {input:?}")))?;
        let [ns, nc, r] = parts[..] else {
            return Err(Failure::Usage(format!(
                "expected random:SPECIES:CHARS:STATES, got {input:?}"
            )));
        };
        return random_characters(seed, ns, nc, r)
            .map(Input::Characters)
            .map_err(|e| Failure::Usage(e.to_string()));
    }
    let path = Path::new(input);
    if !path.exists() {
        if let Ok(d) = dataset(input) {
            return Ok(match d.payload {
                Payload::Characters(cs) => Input::Characters(cs),
                Payload::Instance(i) => Input::Instance(i),
            });
        }
    }
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Data(format!("{input}: {e}")))?;
    let is_json = path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{');
    if is_json {
        SandwichInstance::parse_json(&text)
            .map(Input::Instance)
            .map_err(|e| Failure::Data(format!("{input}: {e}")))
    } else {
        parse_characters(&text)
            .map(Input::Characters)
            .map_err(|e| Failure::Data(format!("{input}: {e}")))
    }
}

fn status_code(status: Status) -> i32 {
    match status {
        Status::Compatible => EXIT_OK,
        Status::Incompatible => EXIT_INCOMPATIBLE,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct CheckJson {
    status: Status,
    /// Fill pairs by vertex name; absent unless compatible.
    completion: Option<Vec<[String; 2]>>,
    nodes: u64,
    refuted_by: Option<Refutation>,
}

impl CheckJson {
    fn new(inst: &SandwichInstance, r: &SolveReport) -> Self {
        CheckJson {
            status: r.status,
            completion: r.completion.as_ref().map(|c| c.named(inst)),
            nodes: r.stats.nodes,
            refuted_by: r.stats.refuted_by,
        }
    }
}

#[derive(Serialize)]
struct CycleJson {
    cycle: Vec<String>,
    proper_triangulations: usize,
}

#[derive(Serialize)]
struct DemoJson {
    dataset: &'static str,
    notes: &'static str,
    vertices: usize,
    edges: usize,
    conflicts: usize,
    closure: ClosureReport,
    check: CheckJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    chordless_cycles: Option<Vec<CycleJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    scan: Option<ScanReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tree: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<F4Report>,
}

struct Output {
    text: String,
    code: i32,
}

fn newick_for(cs: &CharacterSet, r: &SolveReport) -> Result<Option<String>, Failure> {
    match &r.completion {
        Some(c) => build_phylogeny(cs, c)
            .map(|t| Some(t.to_newick() + "\n"))
            .map_err(|e| Failure::Data(e.to_string())),
        None => Ok(None),
    }
}

fn check(input: &Input, cli: &Cli, err: &mut dyn Write) -> Result<Output, Failure> {
    let inst = input.instance();
    let r = solve(&inst, cli.budget);
    let code = status_code(r.status);
    let text = match cli.format.unwrap_or(Format::Json) {
        Format::Json => json(&CheckJson::new(&inst, &r)),
        Format::Newick => {
            let cs = input.characters("check --format newick")?;
            newick_for(cs, &r)?.unwrap_or_default()
        }
        Format::Dot => match &r.completion {
            Some(c) => inst.with_fill(&c.fill).expect("solver fill is free").to_dot(),
            None => String::new(),
        },
    };
    if r.status != Status::Compatible {
        let _ = writeln!(err, "{:?} after {} search nodes", r.status, r.stats.nodes);
    }
    Ok(Output { text, code })
}

fn run_closure(input: &Input, cli: &Cli) -> Result<Output, Failure> {
    let inst = input.instance();
    let outcome = closure(&inst);
    let code = if outcome.is_infeasible() {
        EXIT_INCOMPATIBLE
    } else {
        EXIT_OK
    };
    let text = match cli.format.unwrap_or(Format::Json) {
        Format::Json => json(&outcome.report()),
        Format::Dot => match outcome.closed() {
            Some(c) => c.instance.to_dot(),
            None => String::new(),
        },
        Format::Newick => return Err(Failure::Usage("`closure` has no Newick output".into())),
    };
    Ok(Output { text, code })
}

fn tree(input: &Input, cli: &Cli, err: &mut dyn Write) -> Result<Output, Failure> {
    let cs = input.characters("tree")?;
    let r = solve(&build_instance(cs), cli.budget);
    let code = status_code(r.status);
    let Some(c) = &r.completion else {
        let _ = writeln!(err, "no tree: {:?}", r.status);
        return Ok(Output {
            text: String::new(),
            code,
        });
    };
    let t = build_phylogeny(cs, c).map_err(|e| Failure::Data(e.to_string()))?;
    let text = match cli.format.unwrap_or(Format::Newick) {
        Format::Newick => t.to_newick() + "\n",
        Format::Dot => t.to_dot(),
        Format::Json => json(&serde_json::json!({ "newick": t.to_newick() })),
    };
    Ok(Output { text, code })
}

fn scan(input: &Input, k: usize, cli: &Cli) -> Result<Output, Failure> {
    let cs = input.characters("scan")?;
    if cli.format.is_some_and(|f| f != Format::Json) {
        return Err(Failure::Usage("`scan` only writes JSON".into()));
    }
    if k == 0 || k > cs.len() {
        return Err(Failure::Usage(format!("--k must be in 1..={}, got {k}", cs.len())));
    }
    let r = scan_subsets(cs, k, cli.budget, cli.workers).map_err(|e| Failure::Data(e.to_string()))?;
    Ok(Output {
        code: status_code(r.full_set_status),
        text: json(&r),
    })
}

fn demo(name: &str, cli: &Cli) -> Result<Output, Failure> {
    if cli.format.is_some_and(|f| f != Format::Json) {
        return Err(Failure::Usage("`demo` only writes JSON".into()));
    }
    let d = dataset(name).map_err(|e| Failure::Usage(e.to_string()))?;
    let inst = match &d.payload {
        Payload::Characters(cs) => build_instance(cs),
        Payload::Instance(i) => i.clone(),
    };
    let r = solve(&inst, cli.budget);
    let mut out = DemoJson {
        dataset: d.name,
        notes: d.notes,
        vertices: inst.vertex_count(),
        edges: inst.edges().edge_count(),
        conflicts: inst.conflicts().edge_count(),
        closure: closure(&inst).report(),
        check: CheckJson::new(&inst, &r),
        chordless_cycles: None,
        scan: None,
        tree: None,
        counterexample: None,
    };
    match &d.payload {
        Payload::Characters(cs) => {
            if cs.len() > 1 {
                let scan = scan_subsets(cs, cs.len() - 1, cli.budget, cli.workers)
                    .map_err(|e| Failure::Data(e.to_string()))?;
                out.scan = Some(scan);
            }
            out.tree = newick_for(cs, &r)?.map(|s| s.trim_end().to_string());
            if d.name == "sec4" {
                out.counterexample = Some(verify_f4_counterexample_on(cs, cli.budget));
            }
        }
        Payload::Instance(_) => {
            let cycles = chordless_cycles(inst.edges())
                .into_iter()
                .map(|c| CycleJson {
                    proper_triangulations: cycle_has_proper_triangulation(&c, inst.conflicts()).unwrap_or(0),
                    cycle: c.iter().map(|&v| inst.name(v)).collect(),
                })
                .collect();
            out.chordless_cycles = Some(cycles);
        }
    }
    Ok(Output {
        code: status_code(r.status),
        text: json(&out),
    })
}

fn export(input: &Input, dot: bool, cli: &Cli) -> Result<Output, Failure> {
    let inst = input.instance();
    let format = match (dot, cli.format) {
        (true, None | Some(Format::Dot)) => Format::Dot,
        (true, Some(_)) => return Err(Failure::Usage("--dot conflicts with --format".into())),
        (false, f) => f.unwrap_or(Format::Json),
    };
    let text = match format {
        Format::Dot => inst.to_dot(),
        Format::Json => json(&inst.to_json()),
        Format::Newick => return Err(Failure::Usage("`export` has no Newick output".into())),
    };
    Ok(Output { text, code: EXIT_OK })
}

fn dispatch(cli: &Cli, err: &mut dyn Write) -> Result<Output, Failure> {
    match &cli.command {
        Command::Check { input } => check(&load(input, cli.seed)?, cli, err),
        Command::Closure { input } => run_closure(&load(input, cli.seed)?, cli),
        Command::Tree { input } => tree(&load(input, cli.seed)?, cli, err),
        Command::Scan { input, k } => scan(&load(input, cli.seed)?, *k, cli),
        Command::Demo { name } => demo(name, cli),
        Command::Export { input, dot } => export(&load(input, cli.seed)?, *dot, cli),
    }
}

/// Parses `args` (including the program name), writes data to `out` and
/// diagnostics to `err`, and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            } else {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            };
        }
    };
    match dispatch(&cli, err) {
        Ok(o) => {
            if out.write_all(o.text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return EXIT_DATA;
            }
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}
