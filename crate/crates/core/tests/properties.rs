use fpfaut::equitable::{has_2homogeneous_equitable_partition, involution_to_partition, is_equitable};
use fpfaut::gen;
use fpfaut::iso::{extract_iso, iso_bruteforce, Canonizer};
use fpfaut::modular::{
    colored_quotient, decompose_step, is_module, maximal_modular_partition, quotient, PartitionKind,
};
use fpfaut::oracle::{oracle_fpf_aut, oracle_fpf_inv, oracle_modules, oracle_pfpf};
use fpfaut::pfpf::pfpf_solve;
use fpfaut::reductions::{bipartite_construction, split_construction};
use fpfaut::{BooleanMask, Engine, EngineConfig, Graph, Mode, Permutation, PfpfInstance, VertexColoring};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_graph(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let p = r.gen_range(0.1..0.9);
    gen::random_graph(n, p, &mut r)
}

/// Random graph from one of the structured families or G(n, p).
fn family_graph(family: u8, n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    match family % 4 {
        0 => gen::random_cograph(n, &mut r),
        1 => gen::random_tree_cograph(n, &mut r),
        2 => gen::random_p4_sparse(n, &mut r),
        _ => random_graph(n, seed),
    }
}

fn oracle_decision(g: &Graph, mode: Mode) -> bool {
    match mode {
        Mode::Automorphism => oracle_fpf_aut(g, 64).unwrap().is_some(),
        Mode::Involution => oracle_fpf_inv(g, 64).unwrap().is_some(),
    }
}

fn mode(inv: bool) -> Mode {
    if inv {
        Mode::Involution
    } else {
        Mode::Automorphism
    }
}

proptest! {
    #[test]
    fn engine_matches_oracle(family in 0u8..4, n in 1usize..=9, seed in any::<u64>(), inv in any::<bool>()) {
        let g = family_graph(family, n, seed);
        let m = mode(inv);
        let r = Engine::new(EngineConfig::default()).solve(&g, m).unwrap();
        prop_assert_eq!(r.decision, oracle_decision(&g, m));
        prop_assert!(fpfaut::verify_result(&g, m, &r));
    }

    #[test]
    fn engine_handles_large_structured_graphs(family in 0u8..3, n in 20usize..300, seed in any::<u64>(), inv in any::<bool>()) {
        let g = family_graph(family, n, seed);
        let m = mode(inv);
        let r = Engine::new(EngineConfig::default()).solve(&g, m).unwrap();
        prop_assert!(fpfaut::verify_result(&g, m, &r));
    }

    #[test]
    fn complement_preserves_decision(family in 0u8..4, n in 1usize..=40, seed in any::<u64>(), inv in any::<bool>()) {
        let g = family_graph(family, n, seed);
        if n > 9 && family == 3 {
            return Ok(());
        }
        let engine = Engine::new(EngineConfig::default());
        let m = mode(inv);
        let a = engine.solve(&g, m).unwrap().decision;
        let b = engine.solve(&g.complement(), m).unwrap().decision;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn witnesses_permute_maximal_strong_modules(family in 0u8..4, n in 2usize..=60, seed in any::<u64>(), inv in any::<bool>()) {
        prop_assume!(family < 3 || n <= 9);
        let g = family_graph(family, n, seed);
        let r = Engine::new(EngineConfig::default()).solve(&g, mode(inv)).unwrap();
        prop_assert!(r.nodes < 2 * n);
        if let Some(w) = r.witness {
            let parts = maximal_modular_partition(&g).unwrap();
            let mut sorted: Vec<Vec<usize>> = parts.parts().to_vec();
            sorted.sort();
            let mut images: Vec<Vec<usize>> = parts
                .parts()
                .iter()
                .map(|m| {
                    let mut img: Vec<usize> = m.iter().map(|&v| w.apply(v)).collect();
                    img.sort_unstable();
                    img
                })
                .collect();
            images.sort();
            prop_assert_eq!(images, sorted);
        }
    }

    #[test]
    fn involution_implies_automorphism(family in 0u8..4, n in 1usize..=9, seed in any::<u64>()) {
        let g = family_graph(family, n, seed);
        let engine = Engine::new(EngineConfig::default());
        if engine.solve(&g, Mode::Involution).unwrap().decision {
            prop_assert!(engine.solve(&g, Mode::Automorphism).unwrap().decision);
        }
    }

    #[test]
    fn relabeling_preserves_decision(family in 0u8..3, n in 1usize..=60, seed in any::<u64>(), inv in any::<bool>()) {
        let g = family_graph(family, n, seed);
        let h = gen::random_relabel(g.clone(), &mut rng(seed ^ 1));
        let engine = Engine::new(EngineConfig::default());
        let m = mode(inv);
        prop_assert_eq!(engine.solve(&g, m).unwrap().decision, engine.solve(&h, m).unwrap().decision);
    }

    #[test]
    fn maximal_partition_is_maximal_strong_modules(n in 2usize..=9, seed in any::<u64>(), family in 0u8..4) {
        let g = family_graph(family, n, seed);
        let strong: Vec<Vec<usize>> = oracle_modules(&g)
            .unwrap()
            .into_iter()
            .filter(|m| m.strong && m.vertices.len() < n)
            .map(|m| m.vertices)
            .collect();
        let mut maximal: Vec<Vec<usize>> = strong
            .iter()
            .filter(|a| !strong.iter().any(|b| b.len() > a.len() && a.iter().all(|v| b.contains(v))))
            .cloned()
            .collect();
        maximal.sort();
        let p = maximal_modular_partition(&g).unwrap();
        let mut parts = p.parts().to_vec();
        parts.sort();
        prop_assert_eq!(parts, maximal);
    }

    #[test]
    fn quotient_trichotomy(n in 2usize..=9, seed in any::<u64>(), family in 0u8..4) {
        let g = family_graph(family, n, seed);
        let (kind, p) = decompose_step(&g).unwrap();
        for part in p.parts() {
            prop_assert!(is_module(&g, part).unwrap());
        }
        let q = quotient(&g, &p).unwrap();
        prop_assert!(q.n() >= 2);
        match kind {
            PartitionKind::Parallel => prop_assert!(q.is_edgeless()),
            PartitionKind::Series => prop_assert!(q.is_complete()),
            PartitionKind::Prime => {
                prop_assert!(q.n() >= 4);
                // Only the trivial modules.
                prop_assert_eq!(oracle_modules(&q).unwrap().len(), q.n() + 1);
            }
        }
    }

    #[test]
    fn colored_quotient_maps_are_isomorphisms(n in 2usize..=40, seed in any::<u64>(), family in 0u8..3) {
        let g = family_graph(family, n, seed);
        let p = maximal_modular_partition(&g).unwrap();
        let cq = colored_quotient(&g, &p, &Canonizer::default()).unwrap();
        for i in 0..cq.parts.len() {
            for j in 0..cq.parts.len() {
                let same = cq.coloring.color(i) == cq.coloring.color(j);
                match cq.iso_between(i, j) {
                    None => prop_assert!(!same),
                    Some(pairs) => {
                        prop_assert!(same);
                        for &(a, x) in &pairs {
                            for &(b, y) in &pairs {
                                prop_assert_eq!(g.has_edge(a, b), g.has_edge(x, y));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn canon_is_invariant_and_complete(family in 0u8..3, n in 1usize..=9, seed in any::<u64>(), other in any::<u64>()) {
        let canon = Canonizer::default();
        let g = family_graph(family, n, seed);
        let h = family_graph(family, n, other);
        let shuffled = gen::random_relabel(g.clone(), &mut rng(seed ^ 7));
        let fg = canon.decomposition_canon(&g).unwrap();
        let fs = canon.decomposition_canon(&shuffled).unwrap();
        prop_assert_eq!(&fg.code, &fs.code);
        prop_assert!(extract_iso(&g, &fg, &shuffled, &fs).is_some());
        let fh = canon.decomposition_canon(&h).unwrap();
        let iso = iso_bruteforce(&g, &h, None, None, 9).unwrap().is_some();
        prop_assert_eq!(fg.code == fh.code, iso);
    }

    #[test]
    fn pfpf_complement_duality(n in 1usize..=8, seed in any::<u64>(), inv in any::<bool>(), family in 0u8..4) {
        let mut r = rng(seed);
        let g = family_graph(family, n, seed);
        let colors = r.gen_range(1..=3u32);
        let values: Vec<u32> = (0..n).map(|_| r.gen_range(0..colors)).collect();
        let mask: Vec<bool> = (0..n).map(|_| r.gen_bool(0.3)).collect();
        let inst = PfpfInstance::new(g, VertexColoring::from_values(&values), BooleanMask::new(mask), mode(inv)).unwrap();
        let direct = pfpf_solve(&inst, 8).unwrap();
        let dual = pfpf_solve(&inst.complement(), 8).unwrap();
        prop_assert_eq!(direct.is_some(), dual.is_some());
        prop_assert_eq!(direct.is_some(), oracle_pfpf(&inst, 8).unwrap().is_some());
        if let Some(w) = direct {
            prop_assert!(inst.is_witness(&w));
        }
    }

    #[test]
    fn reductions_preserve_decisions(n in 3usize..=7, seed in any::<u64>(), inv in any::<bool>()) {
        let g = random_graph(n, seed);
        prop_assume!(g.is_connected());
        let m = mode(inv);
        let expected = oracle_decision(&g, m);
        prop_assert_eq!(oracle_decision(&split_construction(&g).graph, m), expected);
        prop_assert_eq!(oracle_decision(&bipartite_construction(&g).unwrap().graph, m), expected);
    }

    #[test]
    fn involution_witnesses_give_equitable_partitions(family in 0u8..3, n in 1usize..=80, seed in any::<u64>()) {
        let g = family_graph(family, n, seed);
        let found = has_2homogeneous_equitable_partition(&g, EngineConfig::default()).unwrap();
        let r = Engine::new(EngineConfig::default()).solve(&g, Mode::Involution).unwrap();
        prop_assert_eq!(found.is_some(), r.decision);
        if let Some(w) = r.witness {
            let p = involution_to_partition(&g, &w).unwrap();
            prop_assert!(p.is_2homogeneous());
            prop_assert!(is_equitable(&g, &p).unwrap());
        }
        if let Some(p) = found {
            prop_assert!(is_equitable(&g, &p).unwrap());
        }
    }
}

#[test]
fn witness_is_rejected_after_tampering() {
    let g = Graph::path(4);
    let mut r = Engine::new(EngineConfig::default())
        .solve(&g, Mode::Automorphism)
        .unwrap();
    assert!(fpfaut::verify_result(&g, Mode::Automorphism, &r));
    r.witness = Some(Permutation::from_images(vec![1, 0, 3, 2]).unwrap());
    assert!(!fpfaut::verify_result(&g, Mode::Automorphism, &r));
}

#[test]
fn unsupported_prime_quotient_is_reported() {
    let engine = Engine::new(EngineConfig {
        prime_cap: 4,
        trace: false,
    });
    let err = engine.solve(&Graph::petersen(), Mode::Automorphism).unwrap_err();
    assert!(matches!(err, fpfaut::Error::Unsupported { quotient_size: 10, .. }));
}
