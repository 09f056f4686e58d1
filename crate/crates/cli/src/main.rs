//! `cox`: command-line access to the coxtwist library.
//!
//! Every command reads a diagram file and prints `key: value` lines, or one
//! JSON object with the same keys under `--json`. Exit status is 0 on
//! success, 1 on domain errors and 2 on usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use coxtwist::centralizer::{
    centralizer_generators, loop_basis, odd_betti_number, odd_path_table, verify_centralizes, GeneratorKind,
};
use coxtwist::diagram::{achordal_circuits, canonical_form, connectivity_profile, finite_type, DEFAULT_CANONICAL_CAP};
use coxtwist::rigidity::{classify, two_star_separation_witnesses, Verdict};
use coxtwist::twist::{
    are_twist_equivalent, legal_twists, twist_class, verify_twist, CheckOutcome, Equivalence, TwistConfig,
};
use coxtwist::words::{Ball, DEFAULT_STATE_CAP};
use coxtwist::{CoxError, Diagram, Edge, Reducer, Vertex, Word};

/// Largest parabolic subgroup `analyze` will enumerate.
const BALL_CAP: usize = 10_000;

#[derive(Parser)]
#[command(
    name = "cox",
    version,
    about = "Coxeter diagrams, words, centralizers, twists and rigidity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Emit a single JSON object instead of key: value lines.
    #[arg(long, global = true)]
    json: bool,
    /// State cap for word computations.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_STATE_CAP)]
    cap: usize,
    /// Maximum number of diagrams in a twist class.
    #[arg(long, global = true, value_name = "N", default_value_t = 10_000)]
    class_cap: usize,
    /// Powers checked for non-edges when verifying twists.
    #[arg(long, global = true, value_name = "N", default_value_t = 10)]
    nonedge_bound: usize,
    /// Take reflection independence as given when classifying rigidity.
    #[arg(long, global = true)]
    assume_reflection_independent: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Structure of a diagram: connectivity, spherical simplices, circuits.
    Analyze { file: PathBuf },
    /// Normal form and length of a word.
    Reduce {
        file: PathBuf,
        word: String,
        /// Also classify the word in the stabilizer of this edge.
        #[arg(long, value_name = "S,T")]
        edge: Option<String>,
    },
    /// Whether two words represent the same element.
    Equal { file: PathBuf, left: String, right: String },
    /// Reflections w s w⁻¹ with |w| up to --max-len.
    Reflections {
        file: PathBuf,
        #[arg(long, value_name = "N")]
        max_len: usize,
    },
    /// Generators of the centralizer of a generator.
    Centralizer { file: PathBuf, generator: String },
    /// Legal twists and their verification.
    Twists { file: PathBuf },
    /// The twist-equivalence class of a diagram.
    Class { file: PathBuf },
    /// Whether two diagrams are twist equivalent.
    Equiv { file: PathBuf, other: PathBuf },
    /// Which rigidity hypotheses hold.
    Rigidity { file: PathBuf },
}

/// Ordered `key: value` output.
#[derive(Default)]
struct Report(Vec<(&'static str, Value)>);

impl Report {
    fn put(&mut self, key: &'static str, value: impl Into<Value>) {
        self.0.push((key, value.into()));
    }

    fn render(&self, as_json: bool) -> String {
        if as_json {
            let map: serde_json::Map<String, Value> = self.0.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            return format!("{}\n", Value::Object(map));
        }
        let mut out = String::new();
        for (key, value) in &self.0 {
            let line = format!("{key}: {}", text(value));
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

fn text(value: &Value) -> String {
    match value {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(text).collect::<Vec<_>>().join(", "),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", text(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

struct Failure {
    message: String,
    partial: Option<Report>,
}

impl From<CoxError> for Failure {
    fn from(e: CoxError) -> Self {
        Failure {
            message: e.to_string(),
            partial: None,
        }
    }
}

type Outcome = Result<Report, Failure>;

fn load(path: &Path) -> Result<Diagram, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        message: format!("{}: {e}", path.display()),
        partial: None,
    })?;
    Diagram::parse(&text).map_err(|e| Failure {
        message: format!("{}: {e}", path.display()),
        partial: None,
    })
}

fn word_text(d: &Diagram, w: &Word) -> String {
    w.display(d).to_string()
}

fn edge_text(d: &Diagram, e: &Edge) -> String {
    format!("{}-{}:{}", d.name(e.a), d.name(e.b), e.label)
}

fn edges_text(d: &Diagram, edges: &[Edge]) -> Vec<String> {
    edges.iter().map(|e| edge_text(d, e)).collect()
}

fn names(d: &Diagram, vs: &[Vertex]) -> Vec<String> {
    vs.iter().map(|&v| d.name(v).to_string()).collect()
}

fn config(opts: &Opts) -> TwistConfig {
    TwistConfig {
        state_cap: opts.cap,
        nonedge_bound: opts.nonedge_bound,
        ..TwistConfig::default()
    }
}

fn outcome_text(o: CheckOutcome) -> &'static str {
    match o {
        CheckOutcome::Pass => "pass",
        CheckOutcome::Fail => "fail",
        CheckOutcome::Indeterminate => "indeterminate",
    }
}

fn analyze(d: &Diagram, opts: &Opts) -> Outcome {
    let r = Reducer::with_cap(d, opts.cap);
    let prof = connectivity_profile(d);
    let mut rep = Report::default();
    rep.put("generators", names(d, &d.vertices().collect::<Vec<_>>()));
    rep.put("edges", edges_text(d, &d.edges()));
    rep.put("vertex_count", d.len());
    rep.put("edge_count", d.edge_count());
    rep.put("connected", prof.connected);
    rep.put("one_connected", prof.one_connected);
    rep.put("edge_connected", prof.edge_connected);
    rep.put("odd_edge_connected", prof.odd_edge_connected);
    rep.put("cut_vertices", names(d, &prof.cut_vertices));
    rep.put("disconnecting_edges", edges_text(d, &prof.disconnecting_edges));
    rep.put("disconnecting_odd_edges", edges_text(d, &prof.disconnecting_odd_edges));
    rep.put("two_dimensional", d.is_two_dimensional());

    let simplices = d.maximal_spherical_simplices();
    let mut types = Vec::new();
    let mut orders = Vec::new();
    let mut longest = Vec::new();
    let mut sigmas = Vec::new();
    for simplex in &simplices {
        types.push(match finite_type(d, simplex) {
            Some(t) => t.to_string(),
            None => "reducible".to_string(),
        });
        orders.push(match r.cayley_ball(simplex, BALL_CAP)? {
            Ball::Closed(elements) => json!(elements.len()),
            Ball::Exceeded => Value::Null,
        });
        longest.push(word_text(d, &r.longest_element(simplex)?));
        let sigma = r.delta_conjugation(simplex)?;
        sigmas.push(
            sigma
                .iter()
                .map(|(&a, &b)| format!("{}->{}", d.name(a), d.name(b)))
                .collect::<Vec<_>>()
                .join(" "),
        );
    }
    rep.put(
        "maximal_spherical_simplices",
        simplices.iter().map(|s| d.format_subset(s)).collect::<Vec<_>>(),
    );
    rep.put("simplex_types", types);
    rep.put("simplex_orders", orders);
    rep.put("longest_elements", longest);
    rep.put("delta_conjugations", sigmas);
    rep.put(
        "two_star_separations",
        two_star_separation_witnesses(d)
            .iter()
            .map(|&(s, a, b)| format!("{} {} {}", d.name(s), d.name(a), d.name(b)))
            .collect::<Vec<_>>(),
    );
    rep.put(
        "achordal_circuits",
        achordal_circuits(d)
            .iter()
            .map(|c| d.format_subset(c))
            .collect::<Vec<_>>(),
    );
    rep.put(
        "canonical_form",
        match canonical_form(d, DEFAULT_CANONICAL_CAP) {
            Ok(form) => Value::String(form.to_hex()),
            Err(CoxError::CanonicalizationCap { .. }) => Value::Null,
            Err(e) => return Err(e.into()),
        },
    );
    Ok(rep)
}

fn reduce(d: &Diagram, word: &str, edge: Option<&str>, opts: &Opts) -> Outcome {
    let r = Reducer::with_cap(d, opts.cap);
    let w = Word::parse(d, word)?;
    let reduced = r.reduce(&w)?;
    let mut rep = Report::default();
    rep.put("reduced", word_text(d, &reduced));
    rep.put("length", reduced.len());
    rep.put("is_reflection", r.is_reflection(&w)?);
    if let Some(spec) = edge {
        let (s, t) = spec.split_once(',').ok_or_else(|| Failure {
            message: format!("--edge expects S,T, got {spec:?}"),
            partial: None,
        })?;
        let (s, t) = (d.vertex(s.trim())?, d.vertex(t.trim())?);
        let verdict = r.edge_stabilizer_classify(s, t, &w)?;
        rep.put("edge_stabilizer", verdict.tag.to_string());
        if let Some(note) = verdict.diagnostic {
            rep.put("diagnostic", note);
        }
    }
    Ok(rep)
}

fn equal(d: &Diagram, left: &str, right: &str, opts: &Opts) -> Outcome {
    let r = Reducer::with_cap(d, opts.cap);
    let mut rep = Report::default();
    rep.put("equal", r.are_equal(&Word::parse(d, left)?, &Word::parse(d, right)?)?);
    Ok(rep)
}

fn reflections(d: &Diagram, max_len: usize, opts: &Opts) -> Outcome {
    let r = Reducer::with_cap(d, opts.cap);
    let found = r.reflections_up_to(max_len)?;
    let mut rep = Report::default();
    rep.put("max_len", max_len);
    rep.put("count", found.len());
    rep.put("reflections", found.iter().map(|w| word_text(d, w)).collect::<Vec<_>>());
    Ok(rep)
}

fn centralizer(d: &Diagram, generator: &str) -> Outcome {
    let s = d.vertex(generator)?;
    let table = odd_path_table(d, s)?;
    let basis = loop_basis(d, s)?;
    let gens = centralizer_generators(d, s)?;
    let mut rep = Report::default();
    rep.put("generator", d.name(s));
    rep.put("odd_component", names(d, &table.component()));
    rep.put("odd_betti_number", odd_betti_number(d, s)?);
    rep.put(
        "loops",
        basis.loops.iter().map(|l| d.format_subset(l)).collect::<Vec<_>>(),
    );
    let mut kinds = Vec::new();
    let mut words = Vec::new();
    let mut all_centralize = true;
    for g in &gens {
        kinds.push(match &g.kind {
            GeneratorKind::Base => "base".to_string(),
            GeneratorKind::EvenEdge { x, t } => format!("even_edge {} {}", d.name(*t), d.name(*x)),
            GeneratorKind::Loop { walk } => format!("loop {}", d.format_subset(walk)),
        });
        words.push(word_text(d, &g.word));
        all_centralize &= verify_centralizes(d, s, &g.word)?;
    }
    rep.put("generator_kinds", kinds);
    rep.put("centralizer_generators", words);
    rep.put("all_centralize", all_centralize);
    Ok(rep)
}

fn twists(d: &Diagram, opts: &Opts) -> Outcome {
    let cfg = config(opts);
    let moves = legal_twists(d, &cfg)?;
    let mut described = Vec::new();
    let mut relations = Vec::new();
    let mut nonedges = Vec::new();
    for mv in &moves {
        described.push(mv.describe(d));
        let check = verify_twist(d, mv, &cfg)?;
        relations.push(summary(check.relation_checks.iter().map(|c| c.outcome)));
        nonedges.push(summary(check.bounded_infinite_checks.iter().map(|c| c.outcome)));
    }
    let mut rep = Report::default();
    rep.put("count", moves.len());
    rep.put("moves", described);
    rep.put("relation_checks", relations);
    rep.put("nonedge_checks", nonedges);
    Ok(rep)
}

/// Worst outcome of a batch of checks.
fn summary(outcomes: impl Iterator<Item = CheckOutcome>) -> &'static str {
    let mut worst = CheckOutcome::Pass;
    for o in outcomes {
        match o {
            CheckOutcome::Fail => return outcome_text(o),
            CheckOutcome::Indeterminate => worst = o,
            CheckOutcome::Pass => {}
        }
    }
    outcome_text(worst)
}

fn class(d: &Diagram, opts: &Opts) -> Outcome {
    let class = twist_class(d, opts.class_cap, &config(opts))?;
    let mut rep = Report::default();
    rep.put("size", class.len());
    rep.put(
        "canonical_forms",
        class.members.keys().map(|f| f.to_hex()).collect::<Vec<_>>(),
    );
    rep.put(
        "members",
        class
            .members
            .values()
            .map(|m| edges_text(m, &m.edges()).join(" "))
            .collect::<Vec<_>>(),
    );
    Ok(rep)
}

fn equiv(a: &Diagram, b: &Diagram, opts: &Opts) -> Outcome {
    let verdict = are_twist_equivalent(a, b, opts.class_cap, &config(opts))?;
    let mut rep = Report::default();
    rep.put("twist_equivalent", verdict.to_string());
    if verdict == Equivalence::Unknown {
        return Err(Failure {
            message: "search cap exceeded; twist equivalence unknown".into(),
            partial: Some(rep),
        });
    }
    Ok(rep)
}

fn rigidity(d: &Diagram, opts: &Opts) -> Outcome {
    let report = classify(d, opts.assume_reflection_independent);
    let c = &report.connectivity;
    let mut rep = Report::default();
    rep.put("two_dimensional", report.two_dimensional);
    rep.put("connected", c.connected);
    rep.put("one_connected", c.one_connected);
    rep.put("edge_connected", c.edge_connected);
    rep.put("odd_edge_connected", c.odd_edge_connected);
    rep.put("assume_reflection_independent", opts.assume_reflection_independent);
    rep.put("reflection_rigid_up_to_twist", report.reflection_rigid_up_to_twist);
    rep.put("reflection_rigid", report.reflection_rigid);
    rep.put("strongly_rigid_conditional", report.strongly_rigid_conditional);
    rep.put(
        "verdicts",
        vec![
            format!(
                "reflection rigid up to twisting: {}",
                Verdict(report.reflection_rigid_up_to_twist)
            ),
            format!("reflection rigid: {}", Verdict(report.reflection_rigid)),
            format!(
                "strongly rigid (conditional on reflection independence): {}",
                Verdict(report.strongly_rigid_conditional)
            ),
        ],
    );
    rep.put(
        "witnesses",
        report.witnesses.iter().map(|w| w.describe(d)).collect::<Vec<_>>(),
    );
    Ok(rep)
}

fn run(cli: &Cli) -> Outcome {
    let opts = &cli.opts;
    match &cli.command {
        Command::Analyze { file } => analyze(&load(file)?, opts),
        Command::Reduce { file, word, edge } => reduce(&load(file)?, word, edge.as_deref(), opts),
        Command::Equal { file, left, right } => equal(&load(file)?, left, right, opts),
        Command::Reflections { file, max_len } => reflections(&load(file)?, *max_len, opts),
        Command::Centralizer { file, generator } => centralizer(&load(file)?, generator),
        Command::Twists { file } => twists(&load(file)?, opts),
        Command::Class { file } => class(&load(file)?, opts),
        Command::Equiv { file, other } => equiv(&load(file)?, &load(other)?, opts),
        Command::Rigidity { file } => rigidity(&load(file)?, opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.opts.json));
            ExitCode::SUCCESS
        }
        Err(failure) => {
            if let Some(report) = failure.partial {
                print!("{}", report.render(cli.opts.json));
            }
            eprintln!("error: {}", failure.message);
            ExitCode::from(1)
        }
    }
}
