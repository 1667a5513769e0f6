//! Command-line frontend: argument definitions and one function per
//! subcommand. Every command produces a JSON report, a prose rendering for
//! `--human`, and an exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, or the verdict is positive (`Agree`, `Equivalent`) |
//! | 1 | a verified negative (`Disagree`, a failed covering condition) |
//! | 2 | inconclusive: a search or enumeration ran out of budget |
//! | 3 | unusable input |

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;

use walkgroup::classifying::{certify_trivial, classify, BlockScheme, Budgets, Certification};
use walkgroup::homotopy::replay;
use walkgroup::{
    abelianize, check_lemma_conditions, homotopic, pi12_presentation, tietze_simplify, todd_coxeter,
    verify_svk, AbelianInvariants, Budget, CosetVerdict, Cover, FiniteGroup, Graph, GroupPresentation, Mode,
    SvkInput, SvkOptions, SvkVerdict, Verdict, Walk,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read `{path}`: {source}")]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cannot write `{path}`: {source}")]
    Write { path: PathBuf, source: std::io::Error },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] walkgroup::Error),
}

#[derive(Debug, Parser)]
#[command(name = "walkgroup", version, about = "Discrete fundamental groups of finite graphs")]
pub struct Cli {
    /// Print prose instead of JSON.
    #[arg(long, global = true)]
    pub human: bool,

    /// Omit the timestamp field so identical runs give identical output.
    #[arg(long, global = true)]
    pub no_timestamp: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Presentation, abelian invariants and (if finite) order of pi_1^2 or A_1.
    Invariants(InvariantsArgs),
    /// Search for a homotopy between two walks with the same endpoints.
    Homotopic(HomotopicArgs),
    /// Compare a van Kampen colimit presentation with the direct one.
    Svk(SvkArgs),
    /// Build the classifying graph of a finite group.
    Classify(ClassifyArgs),
    /// Write a graph as Graphviz DOT.
    ExportDot(ExportDotArgs),
}

#[derive(Debug, clap::Args)]
pub struct InvariantsArgs {
    /// Graph JSON file.
    #[arg(long)]
    pub graph: PathBuf,
    /// Base vertex (default: the least label).
    #[arg(long)]
    pub base: Option<String>,
    /// `pi12` (4-cycles filled) or `a1` (3- and 4-cycles filled).
    #[arg(long, default_value = "pi12")]
    pub mode: Mode,
    /// Also show the Tietze-simplified presentation in `--human` output.
    #[arg(long)]
    pub simplify: bool,
    /// Passes of Tietze simplification.
    #[arg(long, env = "WALKGROUP_TIETZE_PASSES", default_value_t = walkgroup::tietze::DEFAULT_PASSES)]
    pub tietze_passes: usize,
    /// Coset budget for Todd-Coxeter, run when the abelianization is finite.
    #[arg(long, env = "WALKGROUP_TC_BUDGET", default_value_t = walkgroup::todd_coxeter::DEFAULT_COSET_BUDGET)]
    pub todd_coxeter_budget: usize,
}

#[derive(Debug, clap::Args)]
pub struct HomotopicArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Comma-separated vertex labels.
    #[arg(long)]
    pub walk: String,
    #[arg(long)]
    pub walk2: String,
    /// Longest walk the search may visit (default: |w1| + |w2| + 8).
    #[arg(long)]
    pub max_len: Option<usize>,
    #[arg(long, env = "WALKGROUP_MAX_STATES", default_value_t = Budget::DEFAULT_MAX_STATES)]
    pub max_states: usize,
}

#[derive(Debug, clap::Args)]
pub struct SvkArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Cover member graph JSON; repeat for each member.
    #[arg(long = "member", required = true)]
    pub members: Vec<PathBuf>,
    #[arg(long)]
    pub base: String,
    /// Comma-separated base set; selects the groupoid colimit.
    #[arg(long)]
    pub base_set: Option<String>,
    /// Skip the hypothesis checks.
    #[arg(long)]
    pub force: bool,
    /// Do not add pairwise intersections to the cover.
    #[arg(long)]
    pub no_intersections: bool,
    #[arg(long, env = "WALKGROUP_TIETZE_PASSES", default_value_t = walkgroup::tietze::DEFAULT_PASSES)]
    pub tietze_passes: usize,
    #[arg(long, env = "WALKGROUP_TC_BUDGET", default_value_t = walkgroup::todd_coxeter::DEFAULT_COSET_BUDGET)]
    pub todd_coxeter_budget: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SchemeArg {
    Corrected,
    Direct,
}

#[derive(Debug, clap::Args)]
pub struct ClassifyArgs {
    /// `cyclic:n`, `sym:n`, `dihedral:n`, `trivial`, `product:a,b`, or a
    /// JSON multiplication-table file.
    #[arg(long)]
    pub group: String,
    /// Output graph JSON; a `.dot` file is written next to it.
    #[arg(long)]
    pub out: PathBuf,
    /// Also write the covering graph (`<stem>.xtilde.json`).
    #[arg(long)]
    pub emit_xtilde: bool,
    /// Check the covering criterion on the covering graph and include it.
    #[arg(long)]
    pub report: bool,
    #[arg(long, value_enum, default_value = "corrected")]
    pub scheme: SchemeArg,
    #[arg(long, env = "WALKGROUP_TIETZE_PASSES", default_value_t = walkgroup::tietze::DEFAULT_PASSES)]
    pub tietze_passes: usize,
    #[arg(long, env = "WALKGROUP_TC_BUDGET", default_value_t = walkgroup::todd_coxeter::DEFAULT_COSET_BUDGET)]
    pub todd_coxeter_budget: usize,
}

#[derive(Debug, clap::Args)]
pub struct ExportDotArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Output file (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A finished command: JSON report, prose, exit code.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Value,
    pub human: String,
    pub exit: i32,
}

/// Parses `args` (including the program name), runs the command and returns
/// `(stdout, stderr, exit code)`.
pub fn run<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return if e.use_stderr() { (String::new(), e.to_string(), code) } else { (e.to_string(), String::new(), code) };
        }
    };
    match execute(&cli.command) {
        Ok(mut out) => {
            if !cli.no_timestamp {
                let secs = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
                out.report["timestamp"] = json!(secs);
            }
            let text = if cli.human {
                out.human
            } else {
                serde_json::to_string_pretty(&out.report).expect("reports serialize") + "\n"
            };
            (text, String::new(), out.exit)
        }
        Err(e) => (String::new(), format!("error: {e}\n"), EXIT_INPUT),
    }
}

pub fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Invariants(a) => cmd_invariants(a),
        Command::Homotopic(a) => cmd_homotopic(a),
        Command::Svk(a) => cmd_svk(a),
        Command::Classify(a) => cmd_classify(a),
        Command::ExportDot(a) => cmd_export_dot(a),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Write { path: path.to_path_buf(), source })
}

pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    Ok(Graph::from_json(&read(path)?)?)
}

/// Splits at commas outside parentheses.
pub fn split_labels(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let (mut depth, mut cur) = (0i32, String::new());
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur.trim().to_string());
    out
}

/// Group analysis shared by the reporting commands.
struct GroupSummary {
    simplified: GroupPresentation,
    invariants: AbelianInvariants,
    order: Option<CosetVerdict>,
}

impl GroupSummary {
    fn new(p: &GroupPresentation, passes: usize, budget: usize) -> GroupSummary {
        let simplified = tietze_simplify(p, passes);
        let invariants = abelianize(&simplified);
        let order = (invariants.free_rank == 0).then(|| todd_coxeter(&simplified, budget));
        GroupSummary { simplified, invariants, order }
    }

    fn description(&self) -> String {
        if self.simplified.is_trivial() || self.order.and_then(CosetVerdict::order) == Some(1) {
            return "trivial group".into();
        }
        if self.simplified.relator_count() == 0 {
            return format!("free of rank {}", self.simplified.generator_count());
        }
        match self.order.and_then(CosetVerdict::order) {
            Some(n) => format!("finite group of order {n} with abelianization {}", self.invariants),
            None => format!("group with abelianization {}", self.invariants),
        }
    }

    fn inconclusive(&self) -> bool {
        matches!(self.order, Some(CosetVerdict::ExceededBudget { .. }))
    }

    fn order_json(&self) -> Value {
        match self.order {
            Some(CosetVerdict::FiniteOrder { order }) => json!(order),
            _ => Value::Null,
        }
    }
}

pub fn cmd_invariants(a: &InvariantsArgs) -> Result<Outcome, CliError> {
    let g = load_graph(&a.graph)?;
    let base = match &a.base {
        Some(b) => b.clone(),
        None => g.labels().first().cloned().ok_or_else(|| CliError::Usage("graph has no vertices".into()))?,
    };
    let p = pi12_presentation(&g, &base, a.mode)?;
    let s = GroupSummary::new(&p, a.tietze_passes, a.todd_coxeter_budget);
    let report = json!({
        "command": "invariants",
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "base": base,
        "mode": a.mode,
        "presentation": p.to_json_value(),
        "invariants": s.invariants,
        "order": s.order_json(),
        "simplified": s.simplified.to_json_value(),
        "group": s.description(),
    });
    let mut human = format!("{}\n", s.description());
    let _ = writeln!(human, "presentation: {p}");
    if a.simplify {
        let _ = writeln!(human, "simplified: {}", s.simplified);
    }
    let _ = writeln!(human, "abelianization: {}", s.invariants);
    if let Some(CosetVerdict::FiniteOrder { order }) = s.order {
        let _ = writeln!(human, "order: {order}");
    }
    let exit = if s.inconclusive() { EXIT_INCONCLUSIVE } else { EXIT_OK };
    Ok(Outcome { report, human, exit })
}

pub fn cmd_homotopic(a: &HomotopicArgs) -> Result<Outcome, CliError> {
    let g = load_graph(&a.graph)?;
    let w1 = Walk::parse(&g, &a.walk)?;
    let w2 = Walk::parse(&g, &a.walk2)?;
    let mut budget = Budget::for_walks(&w1, &w2);
    budget.max_states = a.max_states;
    if let Some(l) = a.max_len {
        budget.max_walk_length = l;
    }
    let verdict = homotopic(&g, &w1, &w2, budget)?;
    Ok(match verdict {
        Verdict::Equivalent(moves) => {
            debug_assert_eq!(replay(&g, &w1, &moves).ok().as_ref(), Some(&w2));
            let cert: Vec<_> = moves.iter().map(|m| m.to_json(&g)).collect();
            Outcome {
                human: format!("equivalent ({} moves)\n", moves.len()),
                report: json!({ "command": "homotopic", "verdict": "equivalent", "certificate": cert }),
                exit: EXIT_OK,
            }
        }
        Verdict::Unknown { explored } => Outcome {
            human: format!("unknown: no homotopy found within {explored} states\n"),
            report: json!({ "command": "homotopic", "verdict": "unknown", "explored": explored }),
            exit: EXIT_INCONCLUSIVE,
        },
    })
}

pub fn cmd_svk(a: &SvkArgs) -> Result<Outcome, CliError> {
    let g = load_graph(&a.graph)?;
    let members = a.members.iter().map(|p| load_graph(p)).collect::<Result<Vec<_>, _>>()?;
    let input = match &a.base_set {
        Some(set) => SvkInput::BaseSet(Cover::new(&g, members)?, split_labels(set)),
        None => {
            let [u1, u2]: [Graph; 2] = members
                .try_into()
                .map_err(|_| CliError::Usage("without --base-set exactly two members are needed".into()))?;
            SvkInput::Pair(u1, u2)
        }
    };
    let opts = SvkOptions {
        force: a.force,
        add_intersections: !a.no_intersections,
        tietze_passes: a.tietze_passes,
        coset_budget: a.todd_coxeter_budget,
    };
    let r = verify_svk(&g, &input, &a.base, opts)?;
    let exit = match r.verdict {
        SvkVerdict::Agree => EXIT_OK,
        SvkVerdict::Disagree => EXIT_NEGATIVE,
        SvkVerdict::Inconclusive => EXIT_INCONCLUSIVE,
    };
    let human = format!(
        "{:?}: colimit {} vs direct {}\n",
        r.verdict, r.colimit_invariants, r.direct_invariants
    );
    let mut report = serde_json::to_value(&r).expect("reports serialize");
    report["command"] = json!("svk");
    Ok(Outcome { report, human, exit })
}

fn load_group(spec: &str) -> Result<FiniteGroup, CliError> {
    let path = Path::new(spec);
    if spec.ends_with(".json") || path.is_file() {
        return Ok(FiniteGroup::from_json(&read(path)?)?);
    }
    Ok(FiniteGroup::from_spec(spec)?)
}

pub fn cmd_classify(a: &ClassifyArgs) -> Result<Outcome, CliError> {
    let group = load_group(&a.group)?;
    let scheme = match a.scheme {
        SchemeArg::Corrected => BlockScheme::Corrected,
        SchemeArg::Direct => BlockScheme::Direct,
    };
    let c = classify(&group, scheme)?;
    let q = &c.quotient;
    write(&a.out, &q.to_json())?;
    let dot = a.out.with_extension("dot");
    write(&dot, &q.to_dot())?;
    let mut files = vec![a.out.display().to_string(), dot.display().to_string()];
    if a.emit_xtilde {
        let stem = a.out.file_stem().map_or("graph".into(), |s| s.to_string_lossy().into_owned());
        let path = a.out.with_file_name(format!("{stem}.xtilde.json"));
        write(&path, &c.xtilde.graph.to_json())?;
        files.push(path.display().to_string());
    }
    let p = pi12_presentation(q, q.label(0), Mode::Pi12)?;
    let s = GroupSummary::new(&p, a.tietze_passes, a.todd_coxeter_budget);
    let mut report = json!({
        "command": "classify",
        "group_order": group.order(),
        "cover_group_order": c.cover_group.order(),
        "scheme": scheme,
        "xtilde": { "vertices": c.xtilde.graph.vertex_count(), "edges": c.xtilde.graph.edge_count(), "blocks": c.xtilde.blocks.len() },
        "quotient": { "vertices": q.vertex_count(), "edges": q.edge_count(), "triangles": q.cycles(3).len() },
        "invariants": s.invariants,
        "order": s.order_json(),
        "files": files,
    });
    let mut human = format!(
        "classifying graph: {} vertices, {} edges; pi_1^2: {}\n",
        q.vertex_count(),
        q.edge_count(),
        s.description()
    );
    let mut exit = if s.inconclusive() { EXIT_INCONCLUSIVE } else { EXIT_OK };
    if a.report {
        let budgets = Budgets { tietze_passes: a.tietze_passes, coset_budget: a.todd_coxeter_budget };
        let lemma = check_lemma_conditions(&c.xtilde.graph, &group, &c.action, budgets);
        let _ = writeln!(
            human,
            "covering criterion: connected={} pi12_trivial={:?} free={} walk_condition={}",
            lemma.connected, lemma.pi12_trivial, lemma.action_free, lemma.walk_condition
        );
        exit = if lemma.all_true() {
            exit
        } else if lemma.pi12_trivial == Certification::Inconclusive
            && lemma.connected
            && lemma.action_free
            && lemma.walk_condition
        {
            EXIT_INCONCLUSIVE
        } else {
            EXIT_NEGATIVE
        };
        report["lemma"] = serde_json::to_value(&lemma).expect("reports serialize");
    }
    Ok(Outcome { report, human, exit })
}

pub fn cmd_export_dot(a: &ExportDotArgs) -> Result<Outcome, CliError> {
    let g = load_graph(&a.graph)?;
    let dot = g.to_dot();
    match &a.out {
        Some(path) => {
            write(path, &dot)?;
            Ok(Outcome {
                report: json!({ "command": "export-dot", "vertices": g.vertex_count(), "edges": g.edge_count(), "out": path }),
                human: format!("wrote {}\n", path.display()),
                exit: EXIT_OK,
            })
        }
        None => Ok(Outcome {
            report: json!({ "command": "export-dot", "vertices": g.vertex_count(), "edges": g.edge_count(), "dot": dot }),
            human: dot,
            exit: EXIT_OK,
        }),
    }
}

/// Whether π₁² of `g` is certified trivial within default budgets.
pub fn is_simply_connected(g: &Graph) -> bool {
    certify_trivial(g, Budgets::default()) == Certification::Certified
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_splitting() {
        assert_eq!(split_labels("0,1, 2"), vec!["0", "1", "2"]);
        assert_eq!(split_labels("(0,0),(1,0)"), vec!["(0,0)", "(1,0)"]);
        assert_eq!(split_labels("B(a,b,c)/K1,x"), vec!["B(a,b,c)/K1", "x"]);
    }

    #[test]
    fn help_lists_subcommands() {
        let (out, _, code) = run(["walkgroup", "--help"]);
        assert_eq!(code, 0);
        for sub in ["invariants", "homotopic", "svk", "classify", "export-dot"] {
            assert!(out.contains(sub), "{sub} missing from help");
        }
    }
}
