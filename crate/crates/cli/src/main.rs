//! `fpfaut` command-line front end.
//!
//! Exit codes: 0 witness / true / success, 1 none / false, 2 error or
//! unsupported, 64 usage error, 66 unreadable input.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use fpfaut::equitable::{has_2homogeneous_equitable_partition, is_equitable, EquitablePartition};
use fpfaut::format::{
    parse_cells, parse_coloring, parse_graph6_lines, parse_graph_auto, parse_mask, to_edge_list, to_graph6,
};
use fpfaut::gen;
use fpfaut::iso::Canonizer;
use fpfaut::modular::{colored_quotient, decompose_step};
use fpfaut::oracle::{oracle_fpf_aut, oracle_fpf_inv, DEFAULT_ORACLE_CAP};
use fpfaut::pfpf::pfpf_solve;
use fpfaut::reductions::{bipartite_construction, full_reduction, k_subdivision, split_construction, Reduction};
use fpfaut::{CycleNotation, Engine, EngineConfig, EngineResult, Graph, Mode, Permutation, PfpfInstance};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 66;

#[derive(Parser)]
#[command(
    name = "fpfaut",
    version,
    about = "Fixed-point-free automorphisms and involutions of graphs"
)]
struct Cli {
    /// Print a JSON envelope instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct Caps {
    /// Largest prime quotient solved by search.
    #[arg(long, env = "FPF_PRIME_CAP", default_value_t = EngineConfig::default().prime_cap)]
    prime_cap: usize,
}

#[derive(clap::Args, Clone, Copy)]
struct OracleCap {
    /// Largest graph the brute-force oracle accepts.
    #[arg(long, env = "FPF_ORACLE_CAP", default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Aut,
    Inv,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Aut => Mode::Automorphism,
            ModeArg::Inv => Mode::Involution,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Split,
    Bipartite,
    Subdivide,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum RandomClass {
    Cograph,
    TreeCograph,
    P4Sparse,
    Tree,
    Gnp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Against {
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a fixed-point-free automorphism or involution exists.
    Solve {
        #[arg(long, value_enum, default_value = "aut")]
        mode: ModeArg,
        /// Print the witness (default).
        #[arg(long, default_value_t = true)]
        witness: bool,
        /// Print the decomposition trace.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        caps: Caps,
        /// Graph file (graph6 or edge list); standard input if omitted.
        input: Option<PathBuf>,
    },
    /// Same question, answered by brute-force search.
    Oracle {
        #[arg(long, value_enum, default_value = "aut")]
        mode: ModeArg,
        #[arg(long, default_value_t = true)]
        witness: bool,
        #[command(flatten)]
        cap: OracleCap,
        input: Option<PathBuf>,
    },
    /// Build a reduction of the input graph, or a random graph of a class.
    Generate {
        #[arg(long, value_enum, conflicts_with = "random")]
        construction: Option<Construction>,
        /// Subdivision parameter.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Write the `newid kind args` name map here.
        #[arg(long)]
        names: Option<PathBuf>,
        #[arg(long, value_enum)]
        random: Option<RandomClass>,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability for `--random gnp`.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        input: Option<PathBuf>,
    },
    /// Print the maximal modular partition, its quotient and module colors.
    Decompose {
        #[command(flatten)]
        caps: Caps,
        input: Option<PathBuf>,
    },
    /// Solve a colored, masked instance.
    Pfpf {
        #[arg(long, value_enum, default_value = "aut")]
        mode: ModeArg,
        /// Coloring file (`vertex color` per line).
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Mask file (`vertex 0|1` per line); 1 allows the vertex to be fixed.
        #[arg(long)]
        mask: Option<PathBuf>,
        #[command(flatten)]
        caps: Caps,
        graph: PathBuf,
    },
    /// Print the canonical string of the input graph.
    Canon {
        #[command(flatten)]
        caps: Caps,
        input: Option<PathBuf>,
    },
    /// Check or find a partition into equitable cells of size 2.
    Equitable {
        /// Partition file, one cell per line.
        #[arg(long, conflicts_with = "find")]
        check: Option<PathBuf>,
        #[arg(long)]
        find: bool,
        #[command(flatten)]
        caps: Caps,
        input: Option<PathBuf>,
    },
    /// Check that a permutation is a fixed-point-free automorphism (or involution).
    Verify {
        #[arg(long, value_enum, default_value = "aut")]
        mode: ModeArg,
        /// Witness in cycle notation, e.g. "(0 3)(1 2)".
        #[arg(long)]
        witness: String,
        input: Option<PathBuf>,
    },
    /// Compare the engine with the oracle on every graph of a graph6 file.
    Corpus {
        #[arg(long, value_enum, default_value = "aut")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "oracle")]
        against: Against,
        #[command(flatten)]
        caps: Caps,
        #[command(flatten)]
        cap: OracleCap,
        file: PathBuf,
    },
}

enum Failure {
    Io(String),
    Other(String),
}

impl From<fpfaut::Error> for Failure {
    fn from(e: fpfaut::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

type Run = Result<u8, Failure>;

fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Io(format!("standard input: {e}")))?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&Path>) -> Result<Graph, Failure> {
    Ok(parse_graph_auto(&read_text(path)?)?)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn cycles_json(w: Option<&Permutation>) -> Value {
    w.map_or(Value::Null, |w| json!(w.cycles()))
}

fn envelope(decision: bool, witness: Option<&Permutation>, ms: f64) -> Value {
    json!({ "decision": decision, "witness_cycles": cycles_json(witness), "timing_ms": ms })
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn decision_code(b: bool) -> u8 {
    if b {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn report_decision(json: bool, show_witness: bool, decision: bool, witness: Option<&Permutation>, ms: f64) -> u8 {
    if json {
        print_json(&envelope(decision, witness, ms));
    } else {
        match witness {
            Some(w) if show_witness => println!("{w}"),
            Some(_) => println!("YES"),
            None => println!("NONE"),
        }
    }
    decision_code(decision)
}

fn solve(json: bool, mode: Mode, show_witness: bool, trace: bool, caps: Caps, input: Option<&Path>) -> Run {
    let g = read_graph(input)?;
    let r: EngineResult = Engine::new(EngineConfig {
        prime_cap: caps.prime_cap,
        trace,
    })
    .solve(&g, mode)?;
    if json {
        let mut v = envelope(r.decision, r.witness.as_ref(), r.elapsed_ms);
        if trace {
            v["trace"] = r
                .trace
                .iter()
                .map(|t| json!({ "module": t.module, "tag": t.tag.map(|x| x.name()), "decision": t.decision }))
                .collect();
        }
        print_json(&v);
        return Ok(decision_code(r.decision));
    }
    if trace {
        for t in &r.trace {
            let tag = t.tag.map_or("leaf", |x| x.name());
            eprintln!("{tag} {:?} {}", t.module, t.decision);
        }
    }
    Ok(report_decision(
        false,
        show_witness,
        r.decision,
        r.witness.as_ref(),
        r.elapsed_ms,
    ))
}

fn oracle(json: bool, mode: Mode, show_witness: bool, cap: usize, input: Option<&Path>) -> Run {
    let g = read_graph(input)?;
    let start = Instant::now();
    let w = match mode {
        Mode::Automorphism => oracle_fpf_aut(&g, cap)?,
        Mode::Involution => oracle_fpf_inv(&g, cap)?,
    };
    let ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report_decision(json, show_witness, w.is_some(), w.as_ref(), ms))
}

#[allow(clippy::too_many_arguments)]
fn generate(
    json: bool,
    construction: Option<Construction>,
    k: usize,
    names: Option<&Path>,
    random: Option<RandomClass>,
    n: usize,
    seed: u64,
    p: f64,
    input: Option<&Path>,
) -> Run {
    let start = Instant::now();
    let (graph, reduction): (Graph, Option<Reduction>) = if let Some(class) = random {
        if n == 0 {
            return Err(Failure::Other("--n must be positive".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = match class {
            RandomClass::Cograph => gen::random_cograph(n, &mut rng),
            RandomClass::TreeCograph => gen::random_tree_cograph(n, &mut rng),
            RandomClass::P4Sparse => gen::random_p4_sparse(n, &mut rng),
            RandomClass::Tree => gen::random_tree(n, &mut rng),
            RandomClass::Gnp => {
                if !(0.0..=1.0).contains(&p) {
                    return Err(Failure::Other("--p must lie in [0, 1]".into()));
                }
                gen::random_graph(n, p, &mut rng)
            }
        };
        (g, None)
    } else {
        let construction = construction.ok_or_else(|| Failure::Other("give --construction or --random".into()))?;
        let g = read_graph(input)?;
        let r = match construction {
            Construction::Split => split_construction(&g),
            Construction::Bipartite => bipartite_construction(&g)?,
            Construction::Subdivide => k_subdivision(&g, k)?,
            Construction::Full => full_reduction(&g, k)?,
        };
        (r.graph.clone(), Some(r))
    };
    if let (Some(path), Some(r)) = (names, &reduction) {
        write_file(path, &r.name_map_text())?;
    }
    let g6 = to_graph6(&graph);
    if json {
        let mut v = envelope(true, None, start.elapsed().as_secs_f64() * 1e3);
        v["graph6"] = json!(g6);
        if let Some(r) = &reduction {
            v["names"] = r.names.iter().map(|x| json!(x.to_string())).collect();
        }
        print_json(&v);
    } else {
        println!("{g6}");
    }
    Ok(EXIT_YES)
}

fn decompose(json: bool, caps: Caps, input: Option<&Path>) -> Run {
    let start = Instant::now();
    let g = read_graph(input)?;
    if g.n() < 2 {
        return Err(Failure::Other(format!("nothing to decompose: {} vertex graph", g.n())));
    }
    let (kind, partition) = decompose_step(&g)?;
    let cq = colored_quotient(&g, &partition, &Canonizer::new(caps.prime_cap))?;
    let kind = format!("{kind:?}").to_lowercase();
    if json {
        let mut v = envelope(true, None, start.elapsed().as_secs_f64() * 1e3);
        v["kind"] = json!(kind);
        v["parts"] = json!(cq.parts);
        v["quotient"] = json!(cq.quotient.edges().map(|(a, b)| [a, b]).collect::<Vec<_>>());
        v["colors"] = json!(cq.coloring.colors());
        print_json(&v);
    } else {
        println!("kind {kind}");
        for (i, part) in cq.parts.iter().enumerate() {
            let vs: Vec<String> = part.iter().map(|v| v.to_string()).collect();
            println!("part {i} {}", vs.join(" "));
        }
        print!("{}", to_edge_list(&cq.quotient));
        for i in 0..cq.parts.len() {
            println!("color {i} {}", cq.coloring.color(i));
        }
    }
    Ok(EXIT_YES)
}

fn pfpf(json: bool, mode: Mode, coloring: Option<&Path>, mask: Option<&Path>, caps: Caps, graph: &Path) -> Run {
    let start = Instant::now();
    let g = read_graph(Some(graph))?;
    let n = g.n();
    let coloring = match coloring {
        Some(p) => parse_coloring(&read_text(Some(p))?, n)?,
        None => fpfaut::VertexColoring::uniform(n),
    };
    let mask = match mask {
        Some(p) => parse_mask(&read_text(Some(p))?, n)?,
        None => fpfaut::BooleanMask::all(n, false),
    };
    let inst = PfpfInstance::new(g, coloring, mask, mode)?;
    let w = pfpf_solve(&inst, caps.prime_cap)?;
    Ok(report_decision(
        json,
        true,
        w.is_some(),
        w.as_ref(),
        start.elapsed().as_secs_f64() * 1e3,
    ))
}

fn canon(json: bool, caps: Caps, input: Option<&Path>) -> Run {
    let start = Instant::now();
    let g = read_graph(input)?;
    let form = Canonizer::new(caps.prime_cap).decomposition_canon(&g)?;
    if json {
        let mut v = envelope(true, None, start.elapsed().as_secs_f64() * 1e3);
        v["canon"] = json!(form.code);
        v["labeling"] = json!(form.labeling);
        print_json(&v);
    } else {
        println!("{}", form.code);
    }
    Ok(EXIT_YES)
}

fn equitable(json: bool, check: Option<&Path>, find: bool, caps: Caps, input: Option<&Path>) -> Run {
    let start = Instant::now();
    let g = read_graph(input)?;
    let (decision, cells) = match (check, find) {
        (Some(path), _) => {
            let p = EquitablePartition::new(g.n(), parse_cells(&read_text(Some(path))?)?)?;
            (is_equitable(&g, &p)?, Some(p))
        }
        (None, true) => {
            let config = EngineConfig {
                prime_cap: caps.prime_cap,
                trace: false,
            };
            let p = has_2homogeneous_equitable_partition(&g, config)?;
            (p.is_some(), p)
        }
        (None, false) => return Err(Failure::Other("give --check FILE or --find".into())),
    };
    let ms = start.elapsed().as_secs_f64() * 1e3;
    if json {
        let mut v = envelope(decision, None, ms);
        v["cells"] = json!(cells.as_ref().map(|p| p.cells().to_vec()));
        print_json(&v);
    } else if check.is_some() {
        println!("{}", if decision { "equitable" } else { "not equitable" });
    } else if let Some(p) = &cells {
        for cell in p.cells() {
            let vs: Vec<String> = cell.iter().map(|v| v.to_string()).collect();
            println!("{}", vs.join(" "));
        }
    } else {
        println!("NONE");
    }
    Ok(decision_code(decision))
}

fn verify(json: bool, mode: Mode, witness: &str, input: Option<&Path>) -> Run {
    let start = Instant::now();
    let g = read_graph(input)?;
    let w = witness.parse::<CycleNotation>()?.into_permutation(g.n())?;
    let ok = g.is_automorphism(&w) && w.is_fixed_point_free() && (mode == Mode::Automorphism || w.is_involution());
    let ms = start.elapsed().as_secs_f64() * 1e3;
    if json {
        print_json(&envelope(ok, Some(&w), ms));
    } else {
        println!("{}", if ok { "valid" } else { "invalid" });
    }
    Ok(decision_code(ok))
}

enum CorpusEntry {
    Agree,
    Disagree,
    Skipped,
    Failed(String),
}

fn corpus(json: bool, mode: Mode, caps: Caps, oracle_cap: usize, file: &Path) -> Run {
    let start = Instant::now();
    let lines = parse_graph6_lines(&read_text(Some(file))?);
    let engine = Engine::new(EngineConfig {
        prime_cap: caps.prime_cap,
        trace: false,
    });
    let results: Vec<CorpusEntry> = lines
        .par_iter()
        .map(|(_, parsed)| {
            let g = match parsed {
                Ok(g) => g,
                Err(e) => return CorpusEntry::Failed(e.to_string()),
            };
            if g.n() > oracle_cap || g.n() == 0 {
                return CorpusEntry::Skipped;
            }
            let truth = match mode {
                Mode::Automorphism => oracle_fpf_aut(g, oracle_cap),
                Mode::Involution => oracle_fpf_inv(g, oracle_cap),
            };
            match (engine.solve(g, mode), truth) {
                (Ok(r), Ok(t)) if r.decision == t.is_some() => CorpusEntry::Agree,
                (Ok(_), Ok(_)) => CorpusEntry::Disagree,
                (Err(e), _) | (_, Err(e)) => CorpusEntry::Failed(e.to_string()),
            }
        })
        .collect();
    let mut offending = Vec::new();
    let (mut skipped, mut failed) = (0, 0);
    for ((line, _), entry) in lines.iter().zip(&results) {
        match entry {
            CorpusEntry::Agree => {}
            CorpusEntry::Disagree => offending.push(line.clone()),
            CorpusEntry::Skipped => skipped += 1,
            CorpusEntry::Failed(e) => {
                failed += 1;
                eprintln!("error on {line}: {e}");
            }
        }
    }
    if skipped > 0 {
        eprintln!("warning: {skipped} graphs skipped (outside the oracle cap)");
    }
    let checked = lines.len() - skipped - failed;
    let ms = start.elapsed().as_secs_f64() * 1e3;
    if json {
        let mut v = envelope(offending.is_empty() && failed == 0, None, ms);
        v["graphs"] = json!(checked);
        v["disagreements"] = json!(offending);
        v["skipped"] = json!(skipped);
        v["errors"] = json!(failed);
        print_json(&v);
    } else {
        for line in &offending {
            println!("disagreement {line}");
        }
        println!("{checked} graphs, {} disagreements", offending.len());
    }
    Ok(if failed > 0 {
        EXIT_ERROR
    } else {
        decision_code(offending.is_empty())
    })
}

fn run(cli: Cli) -> Run {
    let json = cli.json;
    match cli.command {
        Command::Solve {
            mode,
            witness,
            trace,
            caps,
            input,
        } => solve(json, mode.into(), witness, trace, caps, input.as_deref()),
        Command::Oracle {
            mode,
            witness,
            cap,
            input,
        } => oracle(json, mode.into(), witness, cap.oracle_cap, input.as_deref()),
        Command::Generate {
            construction,
            k,
            names,
            random,
            n,
            seed,
            p,
            input,
        } => generate(
            json,
            construction,
            k,
            names.as_deref(),
            random,
            n,
            seed,
            p,
            input.as_deref(),
        ),
        Command::Decompose { caps, input } => decompose(json, caps, input.as_deref()),
        Command::Pfpf {
            mode,
            coloring,
            mask,
            caps,
            graph,
        } => pfpf(json, mode.into(), coloring.as_deref(), mask.as_deref(), caps, &graph),
        Command::Canon { caps, input } => canon(json, caps, input.as_deref()),
        Command::Equitable {
            check,
            find,
            caps,
            input,
        } => equitable(json, check.as_deref(), find, caps, input.as_deref()),
        Command::Verify { mode, witness, input } => verify(json, mode.into(), &witness, input.as_deref()),
        Command::Corpus {
            mode,
            against: Against::Oracle,
            caps,
            cap,
            file,
        } => corpus(json, mode.into(), caps, cap.oracle_cap, &file),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Io(m) => (EXIT_IO, m),
                Failure::Other(m) => (EXIT_ERROR, m),
            };
            if json {
                print_json(&json!({ "decision": Value::Null, "witness_cycles": Value::Null, "error": msg }));
            }
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
