//! Acceptance suite. Runs every criterion in sequence and prints one
//! PASS/FAIL line each; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use fpfaut::equitable::{involution_to_partition, is_equitable, EquitablePartition};
use fpfaut::format::parse_graph6_lines;
use fpfaut::gen;
use fpfaut::modular::{decompose_step, PartitionKind};
use fpfaut::oracle::{
    oracle_2homogeneous_equitable_partition, oracle_fixed_edge_free_inv, oracle_fpf_aut, oracle_fpf_inv, oracle_pfpf,
};
use fpfaut::pfpf::{
    pfpf_bruteforce, pfpf_co_tree, pfpf_complete_or_empty, pfpf_solve, pfpf_spider, pfpf_tree, recognize_spider,
};
use fpfaut::reductions::{bipartite_construction, full_reduction, split_construction};
use fpfaut::{verify_result, BooleanMask, Engine, EngineConfig, Graph, Mode, PfpfInstance, VertexColoring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MODES: [Mode; 2] = [Mode::Automorphism, Mode::Involution];
/// Large enough for every construction built from a 6-vertex graph.
const BIG_ORACLE_CAP: usize = 200;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn corpus(text: &str) -> Vec<Graph> {
    parse_graph6_lines(text)
        .into_iter()
        .map(|(line, g)| g.unwrap_or_else(|e| panic!("bad corpus line {line}: {e}")))
        .collect()
}

fn graphs7() -> Vec<Graph> {
    corpus(include_str!("data/graphs7.g6"))
}

fn graphs_le6() -> Vec<Graph> {
    corpus(include_str!("data/graphs_le6.g6"))
}

fn connected_3_to_6() -> Vec<Graph> {
    graphs_le6()
        .into_iter()
        .filter(|g| g.n() >= 3 && g.is_connected())
        .collect()
}

fn oracle(g: &Graph, mode: Mode, cap: usize) -> bool {
    let w = match mode {
        Mode::Automorphism => oracle_fpf_aut(g, cap),
        Mode::Involution => oracle_fpf_inv(g, cap),
    };
    w.expect("within oracle cap").is_some()
}

fn criterion_1() -> Outcome {
    let graphs = graphs7();
    let engine = Engine::new(EngineConfig {
        prime_cap: 7,
        trace: false,
    });
    let mut bad = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        for mode in MODES {
            match engine.solve(g, mode) {
                Ok(r) if r.decision == oracle(g, mode, 7) => {}
                Ok(_) => bad.push(format!("graph {i} {mode}: disagreement")),
                Err(e) => bad.push(format!("graph {i} {mode}: {e}")),
            }
        }
    }
    if graphs.len() != 1044 {
        return Err(format!("corpus has {} graphs, expected 1044", graphs.len()));
    }
    if bad.is_empty() {
        Ok(format!(
            "{} graphs x 2 modes, 0 disagreements, 0 unsupported",
            graphs.len()
        ))
    } else {
        Err(format!("{} failures, first: {}", bad.len(), bad[0]))
    }
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut graphs = graphs7();
    for _ in 0..1000 {
        let n = rng.gen_range(1..=200);
        graphs.push(gen::random_cograph(n, &mut rng));
    }
    for _ in 0..500 {
        let n = rng.gen_range(1..=200);
        graphs.push(gen::random_tree_cograph(n, &mut rng));
    }
    for _ in 0..500 {
        let n = rng.gen_range(1..=200);
        graphs.push(gen::random_p4_sparse(n, &mut rng));
    }
    let engine = Engine::new(EngineConfig::default());
    let mut trues = 0;
    for (i, g) in graphs.iter().enumerate() {
        for mode in MODES {
            let r = engine.solve(g, mode).map_err(|e| format!("graph {i} {mode}: {e}"))?;
            if r.decision {
                trues += 1;
            }
            if !verify_result(g, mode, &r) {
                return Err(format!("graph {i} {mode}: witness failed verification"));
            }
        }
    }
    Ok(format!(
        "{} graphs x 2 modes, {trues} witnesses, all verified",
        graphs.len()
    ))
}

fn criterion_3() -> Outcome {
    let graphs = connected_3_to_6();
    let mut checks = 0;
    for (i, g) in graphs.iter().enumerate() {
        let mut constructions = vec![("split", split_construction(g).graph)];
        constructions.push(("bipartite", bipartite_construction(g).map_err(|e| e.to_string())?.graph));
        for k in [1, 2] {
            constructions.push(("full", full_reduction(g, k).map_err(|e| e.to_string())?.graph));
        }
        for mode in MODES {
            let expected = oracle(g, mode, BIG_ORACLE_CAP);
            for (name, h) in &constructions {
                checks += 1;
                if oracle(h, mode, BIG_ORACLE_CAP) != expected {
                    return Err(format!("graph {i} ({name}, {mode}): decision not preserved"));
                }
            }
        }
    }
    Ok(format!(
        "{} connected graphs, {checks} preserved decisions",
        graphs.len()
    ))
}

fn random_instance(g: Graph, mode: Mode, rng: &mut ChaCha8Rng) -> PfpfInstance {
    let n = g.n();
    let colors = rng.gen_range(1..=3);
    let values: Vec<u32> = (0..n).map(|_| rng.gen_range(0..colors)).collect();
    let p: f64 = rng.gen_range(0.0..0.6);
    let mask: Vec<bool> = (0..n).map(|_| rng.gen_bool(p)).collect();
    PfpfInstance::new(g, VertexColoring::from_values(&values), BooleanMask::new(mask), mode).expect("valid instance")
}

fn random_prime(rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let n = rng.gen_range(4..=8);
        let g = gen::random_graph(n, rng.gen_range(0.2..0.8), rng);
        if decompose_step(&g)
            .map(|(kind, _)| kind == PartitionKind::Prime)
            .unwrap_or(false)
        {
            return g;
        }
    }
}

/// Spiders as they occur in prime quotients: the head is at most one vertex.
fn random_spider(rng: &mut ChaCha8Rng) -> Graph {
    let h = rng.gen_range(0..=1);
    let k = rng.gen_range(2..=(8 - h) / 2);
    let head = Graph::empty(h);
    gen::random_relabel(gen::spider_graph(k, rng.gen_bool(0.5), &head), rng)
}

const PFPF_INSTANCES: usize = 10_000;

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let families = ["complete/empty", "tree", "co-tree", "spider", "small-prime"];
    let mut summary = Vec::new();
    for (f, family) in families.iter().enumerate() {
        let mut positives = 0;
        for mode in MODES {
            for i in 0..PFPF_INSTANCES {
                let n = rng.gen_range(1..=8);
                let g = match f {
                    0 if rng.gen_bool(0.5) => Graph::complete(n),
                    0 => Graph::empty(n),
                    1 => gen::random_tree(n, &mut rng),
                    2 => gen::random_tree(n, &mut rng).complement(),
                    3 => random_spider(&mut rng),
                    _ => random_prime(&mut rng),
                };
                let inst = random_instance(g, mode, &mut rng);
                let solved = match f {
                    0 => pfpf_complete_or_empty(&inst),
                    1 => pfpf_tree(&inst, None),
                    2 => pfpf_co_tree(&inst),
                    3 => {
                        let sd = recognize_spider(&inst.graph).ok_or("generated spider not recognized")?;
                        pfpf_spider(&inst, &sd)
                    }
                    _ => pfpf_bruteforce(&inst, 8),
                }
                .map_err(|e| format!("{family} #{i} {mode}: {e}"))?;
                let dispatched = pfpf_solve(&inst, 8).map_err(|e| format!("{family} #{i} {mode}: {e}"))?;
                let truth = oracle_pfpf(&inst, 8).expect("within cap").is_some();
                for w in [&solved, &dispatched] {
                    if w.is_some() != truth {
                        return Err(format!("{family} #{i} {mode}: decision differs from oracle"));
                    }
                    if let Some(w) = w {
                        if !inst.is_witness(w) {
                            return Err(format!("{family} #{i} {mode}: invalid witness {w}"));
                        }
                    }
                }
                positives += truth as usize;
            }
        }
        summary.push(format!("{family} {positives}/{}", 2 * PFPF_INSTANCES));
    }
    Ok(format!("all match oracle (positives: {})", summary.join(", ")))
}

fn criterion_5() -> Outcome {
    let graphs = graphs_le6();
    let mut present = 0;
    for (i, g) in graphs.iter().enumerate() {
        let matching = oracle_2homogeneous_equitable_partition(g, 6).map_err(|e| e.to_string())?;
        let inv = oracle_fpf_inv(g, 6).map_err(|e| e.to_string())?;
        if matching.is_some() != inv.is_some() {
            return Err(format!(
                "graph {i}: partition exists = {}, involution exists = {}",
                matching.is_some(),
                inv.is_some()
            ));
        }
        if let Some(pairs) = matching {
            present += 1;
            let cells = pairs.iter().map(|p| p.to_vec()).collect();
            let p = EquitablePartition::new(g.n(), cells).map_err(|e| e.to_string())?;
            if !is_equitable(g, &p).map_err(|e| e.to_string())? || !p.is_2homogeneous() {
                return Err(format!("graph {i}: enumerated partition not equitable"));
            }
        }
        if let Some(w) = inv {
            let p = involution_to_partition(g, &w).map_err(|e| e.to_string())?;
            if !is_equitable(g, &p).map_err(|e| e.to_string())? || !p.is_2homogeneous() {
                return Err(format!("graph {i}: converted partition not equitable"));
            }
        }
    }
    Ok(format!(
        "{} graphs, {present} with a 2-homogeneous equitable partition, both directions agree",
        graphs.len()
    ))
}

fn median_seconds(
    n: usize,
    repeats: usize,
    make: fn(usize, &mut ChaCha8Rng) -> Graph,
    seed: u64,
) -> Result<f64, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let engine = Engine::new(EngineConfig::default());
    let mut times = Vec::new();
    for _ in 0..repeats {
        let g = make(n, &mut rng);
        let start = Instant::now();
        for mode in MODES {
            let r = engine.solve(&g, mode).map_err(|e| format!("n = {n}: {e}"))?;
            if !verify_result(&g, mode, &r) {
                return Err(format!("n = {n}: witness failed verification"));
            }
        }
        times.push(start.elapsed().as_secs_f64());
    }
    times.sort_by(f64::total_cmp);
    Ok(times[times.len() / 2])
}

fn criterion_6() -> Outcome {
    let mut report = Vec::new();
    type Make = fn(usize, &mut ChaCha8Rng) -> Graph;
    let families: [(&str, Make); 2] = [
        ("cograph", |n, r| gen::random_sparse_cograph(n, r)),
        ("P4-sparse", |n, r| gen::random_sparse_p4_sparse(n, r)),
    ];
    for (name, make) in families {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let engine = Engine::new(EngineConfig::default());
        for _ in 0..3 {
            let g = make(10_000, &mut rng);
            for mode in MODES {
                let start = Instant::now();
                engine.solve(&g, mode).map_err(|e| format!("{name}: {e}"))?;
                let secs = start.elapsed().as_secs_f64();
                if secs >= 5.0 {
                    return Err(format!("{name} n = 10000 {mode} took {secs:.2} s"));
                }
            }
        }
        report.push(format!("{name} n=10^4 ok"));
    }
    let sizes = [1_000usize, 10_000, 100_000];
    let mut points = Vec::new();
    for &n in &sizes {
        let t = median_seconds(n, 5, families[0].1, 60)?;
        points.push(((n as f64).ln(), t.ln()));
    }
    let mx = points.iter().map(|p| p.0).sum::<f64>() / 3.0;
    let my = points.iter().map(|p| p.1).sum::<f64>() / 3.0;
    let slope = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>()
        / points.iter().map(|p| (p.0 - mx).powi(2)).sum::<f64>();
    report.push(format!("cograph log-log slope {slope:.2}"));
    if slope < 2.0 {
        Ok(report.join(", "))
    } else {
        Err(report.join(", "))
    }
}

fn criterion_7() -> Outcome {
    let graphs = connected_3_to_6();
    for (i, g) in graphs.iter().enumerate() {
        let b = bipartite_construction(g).map_err(|e| e.to_string())?.graph;
        let inv = oracle_fpf_inv(&b, BIG_ORACLE_CAP).map_err(|e| e.to_string())?;
        let free = oracle_fixed_edge_free_inv(&b, BIG_ORACLE_CAP, false).map_err(|e| e.to_string())?;
        if inv.is_some() != free.is_some() {
            return Err(format!(
                "graph {i}: fpf involution {} but fixed-edge-free {}",
                inv.is_some(),
                free.is_some()
            ));
        }
    }
    Ok(format!("{} connected graphs agree", graphs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("exhaustive oracle equivalence, n = 7", criterion_1),
        ("witness certification", criterion_2),
        ("metamorphic reductions", criterion_3),
        ("PFPF solver differential", criterion_4),
        ("2-homogeneous equitable partitions", criterion_5),
        ("polynomial scaling", criterion_6),
        ("fixed-edge-free bridge", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail} ({secs:.1} s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail} ({secs:.1} s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
