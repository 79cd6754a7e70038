//! The FPF automorphism / involution decision procedure over the modular
//! decomposition, with explicit witnesses.
//!
//! The decomposition tree is built top-down without recursion. Nodes are then
//! finalized bottom-up: each gets an interned canonical id (equal ids iff the
//! modules are isomorphic) and a decision, obtained by solving the quotient as
//! a PFPF instance whose colors are the child ids and whose mask is the
//! children's decisions. A witness is assembled top-down at the end: modules
//! moved by a quotient witness are mapped onto their image by pairing
//! canonical child orders; fixed modules recurse.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{BooleanMask, Graph, VertexColoring};
use crate::iso::{prime_canonical_order, DEFAULT_BRUTE_CAP};
use crate::modular::{decompose_step, quotient_of_modules, PartitionKind};
use crate::perm::Permutation;
use crate::pfpf::{classify, solve_tagged, Mode, PfpfInstance, QuotientClassTag, SpiderDecomposition};

#[derive(Clone, Copy, Debug)]
pub struct EngineConfig {
    /// Largest prime quotient (not a tree, co-tree or spider) solved by search.
    pub prime_cap: usize,
    /// Keep a per-module trace.
    pub trace: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            prime_cap: DEFAULT_BRUTE_CAP,
            trace: false,
        }
    }
}

/// One decomposition node in the trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub module: Vec<usize>,
    /// `None` for single vertices.
    pub tag: Option<QuotientClassTag>,
    pub decision: bool,
}

#[derive(Clone, Debug)]
pub struct EngineResult {
    pub mode: Mode,
    pub decision: bool,
    pub witness: Option<Permutation>,
    pub trace: Vec<TraceEntry>,
    /// Number of decomposition nodes visited.
    pub nodes: usize,
    /// Wall time; always 0 on wasm32.
    pub elapsed_ms: f64,
}

/// Milliseconds since the call; wasm32 has no monotonic clock in std.
#[cfg(not(target_arch = "wasm32"))]
fn stopwatch() -> impl Fn() -> f64 {
    let start = std::time::Instant::now();
    move || start.elapsed().as_secs_f64() * 1e3
}

#[cfg(target_arch = "wasm32")]
fn stopwatch() -> impl Fn() -> f64 {
    || 0.0
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Key {
    Leaf,
    Union(Vec<u32>),
    Join(Vec<u32>),
    Prime(char, Vec<u32>, Vec<(u32, u32)>),
}

struct Node {
    /// Top-level vertices of the module, in local index order (dropped once
    /// the children exist unless a trace is kept).
    vertices: Vec<usize>,
    graph: Option<Graph>,
    kind: Option<PartitionKind>,
    children: Vec<usize>,
    quotient: Option<Graph>,
    tag: Option<QuotientClassTag>,
    spider: Option<SpiderDecomposition>,
    leaf_vertex: usize,
    canon: u32,
    decision: bool,
    /// Children in canonical order; positional pairing of two nodes with the
    /// same id is an isomorphism.
    canonical_children: Vec<usize>,
    /// Quotient witness, when computed.
    psi: Option<Vec<usize>>,
}

impl Node {
    fn new(vertices: Vec<usize>, graph: Graph) -> Self {
        Node {
            leaf_vertex: vertices[0],
            vertices,
            graph: Some(graph),
            kind: None,
            children: Vec::new(),
            quotient: None,
            tag: None,
            spider: None,
            canon: 0,
            decision: false,
            canonical_children: Vec::new(),
            psi: None,
        }
    }
}

pub struct Engine {
    config: EngineConfig,
}

impl Engine {
    pub fn new(config: EngineConfig) -> Self {
        Engine { config }
    }

    pub fn solve(&self, g: &Graph, mode: Mode) -> Result<EngineResult> {
        let elapsed = stopwatch();
        let n = g.n();
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut nodes = self.build(g)?;
        let mut interner: HashMap<Key, u32> = HashMap::new();
        let mut memo: HashMap<u32, bool> = HashMap::new();
        for id in (0..nodes.len()).rev() {
            self.finalize(&mut nodes, id, mode, &mut interner, &mut memo)?;
        }
        let decision = nodes[0].decision;
        let witness = if decision {
            let w = self.assemble(&mut nodes, n, mode)?;
            let ok =
                g.is_automorphism(&w) && w.is_fixed_point_free() && (mode == Mode::Automorphism || w.is_involution());
            if !ok {
                return Err(Error::Internal(format!("assembled witness {w} failed verification")));
            }
            Some(w)
        } else {
            None
        };
        let trace = if self.config.trace {
            nodes
                .iter()
                .map(|node| {
                    let mut module = node.vertices.clone();
                    module.sort_unstable();
                    TraceEntry {
                        module,
                        tag: node.tag,
                        decision: node.decision,
                    }
                })
                .collect()
        } else {
            Vec::new()
        };
        Ok(EngineResult {
            mode,
            decision,
            witness,
            trace,
            nodes: nodes.len(),
            elapsed_ms: elapsed(),
        })
    }

    /// Decomposition tree; parents precede children.
    fn build(&self, g: &Graph) -> Result<Vec<Node>> {
        let mut nodes = vec![Node::new((0..g.n()).collect(), g.clone())];
        let mut stack = vec![0];
        while let Some(id) = stack.pop() {
            let graph = nodes[id].graph.take().expect("graph present until split");
            if graph.n() == 1 {
                continue;
            }
            let (kind, partition) = decompose_step(&graph)?;
            let parts = partition.parts();
            if kind == PartitionKind::Prime {
                let part_of = partition.part_of(graph.n());
                nodes[id].quotient = Some(quotient_of_modules(&graph, parts, &part_of));
            }
            let subs = graph.induced_subgraphs(parts);
            drop(graph);
            let vertices = if self.config.trace {
                nodes[id].vertices.clone()
            } else {
                std::mem::take(&mut nodes[id].vertices)
            };
            nodes[id].kind = Some(kind);
            for (part, sub) in parts.iter().zip(subs) {
                let child = nodes.len();
                nodes.push(Node::new(part.iter().map(|&v| vertices[v]).collect(), sub));
                nodes[id].children.push(child);
                stack.push(child);
            }
        }
        Ok(nodes)
    }

    fn finalize(
        &self,
        nodes: &mut [Node],
        id: usize,
        mode: Mode,
        interner: &mut HashMap<Key, u32>,
        memo: &mut HashMap<u32, bool>,
    ) -> Result<()> {
        let Some(kind) = nodes[id].kind else {
            let next = interner.len() as u32;
            nodes[id].canon = *interner.entry(Key::Leaf).or_insert(next);
            nodes[id].decision = false;
            return Ok(());
        };
        let children = nodes[id].children.clone();
        let ids: Vec<u32> = children.iter().map(|&c| nodes[c].canon).collect();
        let mask: Vec<bool> = children.iter().map(|&c| nodes[c].decision).collect();
        let k = children.len();
        let (key, order, tag, spider) = match kind {
            PartitionKind::Parallel | PartitionKind::Series => {
                let mut order: Vec<usize> = (0..k).collect();
                order.sort_by_key(|&i| (ids[i], i));
                let sorted: Vec<u32> = order.iter().map(|&i| ids[i]).collect();
                if kind == PartitionKind::Parallel {
                    (Key::Union(sorted), order, QuotientClassTag::Edgeless, None)
                } else {
                    (Key::Join(sorted), order, QuotientClassTag::Complete, None)
                }
            }
            PartitionKind::Prime => {
                let q = nodes[id].quotient.as_ref().expect("prime node keeps its quotient");
                let (tag, spider) = classify(q, self.config.prime_cap);
                if tag == QuotientClassTag::Unsupported {
                    return Err(Error::Unsupported {
                        module_size: self.module_size(nodes, id),
                        quotient_size: q.n(),
                        cap: self.config.prime_cap,
                    });
                }
                let order = prime_canonical_order(q, &ids, tag, spider.as_ref());
                let mut pos = vec![0u32; k];
                for (p, &i) in order.iter().enumerate() {
                    pos[i] = p as u32;
                }
                let mut edges: Vec<(u32, u32)> = q
                    .edges()
                    .map(|(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
                    .collect();
                edges.sort_unstable();
                let colors = order.iter().map(|&i| ids[i]).collect();
                (Key::Prime(tag.letter(), colors, edges), order, tag, spider)
            }
        };
        let next = interner.len() as u32;
        let canon = *interner.entry(key).or_insert(next);
        let node = &mut nodes[id];
        node.canon = canon;
        node.tag = Some(tag);
        node.canonical_children = order.iter().map(|&i| children[i]).collect();
        node.spider = spider;
        if let Some(&d) = memo.get(&canon) {
            node.decision = d;
            return Ok(());
        }
        let psi = self.solve_quotient(node, &ids, mask, mode)?;
        node.decision = psi.is_some();
        node.psi = psi;
        memo.insert(canon, node.decision);
        Ok(())
    }

    fn module_size(&self, nodes: &[Node], id: usize) -> usize {
        let mut size = 0;
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            if nodes[x].children.is_empty() {
                size += 1;
            }
            stack.extend(&nodes[x].children);
        }
        size
    }

    fn solve_quotient(&self, node: &Node, ids: &[u32], mask: Vec<bool>, mode: Mode) -> Result<Option<Vec<usize>>> {
        let k = ids.len();
        let tag = node.tag.expect("tagged before solving");
        let graph = match node.kind {
            Some(PartitionKind::Parallel) => Graph::empty(k),
            Some(PartitionKind::Series) => Graph::complete(k),
            _ => node.quotient.clone().expect("prime node keeps its quotient"),
        };
        let inst = PfpfInstance::new(graph, VertexColoring::from_values(ids), BooleanMask::new(mask), mode)?;
        let psi = solve_tagged(&inst, tag, node.spider.as_ref(), self.config.prime_cap)?;
        if let Some(p) = &psi {
            if !inst.is_witness(p) {
                return Err(Error::Internal(format!("{tag} solver returned an invalid witness {p}")));
            }
        }
        Ok(psi.map(Permutation::into_images))
    }

    fn quotient_witness(&self, nodes: &mut [Node], id: usize, mode: Mode) -> Result<Vec<usize>> {
        if let Some(psi) = &nodes[id].psi {
            return Ok(psi.clone());
        }
        // Decision came from the memo; solve this copy's quotient now.
        let ids: Vec<u32> = nodes[id].children.iter().map(|&c| nodes[c].canon).collect();
        let mask: Vec<bool> = nodes[id].children.iter().map(|&c| nodes[c].decision).collect();
        let psi = self
            .solve_quotient(&nodes[id], &ids, mask, mode)?
            .ok_or_else(|| Error::Internal("memoized decision not reproduced".into()))?;
        nodes[id].psi = Some(psi.clone());
        Ok(psi)
    }

    fn assemble(&self, nodes: &mut [Node], n: usize, mode: Mode) -> Result<Permutation> {
        enum Task {
            Fixed(usize),
            Map(usize, usize),
        }
        let mut image = vec![usize::MAX; n];
        let mut tasks = vec![Task::Fixed(0)];
        while let Some(task) = tasks.pop() {
            match task {
                Task::Fixed(id) => {
                    let psi = self.quotient_witness(nodes, id, mode)?;
                    let children = &nodes[id].children;
                    for (i, &j) in psi.iter().enumerate() {
                        if i == j {
                            tasks.push(Task::Fixed(children[i]));
                        } else {
                            tasks.push(Task::Map(children[i], children[j]));
                        }
                    }
                }
                Task::Map(a, b) => {
                    let (na, nb) = (&nodes[a], &nodes[b]);
                    debug_assert_eq!(na.canon, nb.canon);
                    if na.children.is_empty() {
                        image[na.leaf_vertex] = nb.leaf_vertex;
                    } else {
                        for (&x, &y) in na.canonical_children.iter().zip(&nb.canonical_children) {
                            tasks.push(Task::Map(x, y));
                        }
                    }
                }
            }
        }
        Permutation::from_images(image)
    }
}

/// Decides whether `g` has a fixed-point-free automorphism (default settings).
pub fn has_fpf_automorphism(g: &Graph) -> Result<EngineResult> {
    Engine::new(EngineConfig::default()).solve(g, Mode::Automorphism)
}

/// Decides whether `g` has a fixed-point-free involution (default settings).
pub fn has_fpf_involution(g: &Graph) -> Result<EngineResult> {
    Engine::new(EngineConfig::default()).solve(g, Mode::Involution)
}

/// True iff a positive decision carries a valid witness for `mode` and a
/// negative one carries none.
pub fn verify_result(g: &Graph, mode: Mode, r: &EngineResult) -> bool {
    match (&r.witness, r.decision) {
        (None, false) => true,
        (Some(w), true) => {
            w.len() == g.n()
                && g.is_automorphism(w)
                && w.is_fixed_point_free()
                && (mode == Mode::Automorphism || w.is_involution())
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn result(decision: bool, witness: Option<Permutation>) -> EngineResult {
        EngineResult {
            mode: Mode::Automorphism,
            decision,
            witness,
            trace: Vec::new(),
            nodes: 0,
            elapsed_ms: 0.0,
        }
    }

    #[test]
    fn automorphism_examples() {
        let r = has_fpf_automorphism(&Graph::path(4)).unwrap();
        assert_eq!(r.witness.unwrap().images(), &[3, 2, 1, 0]);
        assert!(!has_fpf_automorphism(&Graph::empty(1)).unwrap().decision);
        assert!(!has_fpf_automorphism(&Graph::star(3)).unwrap().decision);
        assert!(has_fpf_automorphism(&Graph::complete(3)).unwrap().decision);
    }

    #[test]
    fn involution_examples() {
        let r = has_fpf_involution(&Graph::cycle(4)).unwrap();
        assert!(verify_result(&Graph::cycle(4), Mode::Involution, &r));
        assert!(r.decision);
        assert!(!has_fpf_involution(&Graph::cycle(5)).unwrap().decision);
        assert!(!has_fpf_involution(&Graph::complete(3)).unwrap().decision);
    }

    #[test]
    fn verify_examples() {
        let rev = Permutation::from_images(vec![3, 2, 1, 0]).unwrap();
        assert!(verify_result(
            &Graph::path(4),
            Mode::Automorphism,
            &result(true, Some(rev))
        ));
        assert!(!verify_result(
            &Graph::path(4),
            Mode::Automorphism,
            &result(true, Some(Permutation::identity(4)))
        ));
        let rot = Permutation::from_images(vec![1, 2, 3, 4, 0]).unwrap();
        assert!(!verify_result(
            &Graph::cycle(5),
            Mode::Involution,
            &result(true, Some(rot))
        ));
    }

    #[test]
    fn vertex_transitive_graphs() {
        assert!(has_fpf_automorphism(&Graph::complete(2)).unwrap().decision);
        for n in 3..=10 {
            assert!(has_fpf_automorphism(&Graph::cycle(n)).unwrap().decision);
        }
        // Longer cycles are prime quotients above the cap.
        assert!(matches!(
            has_fpf_automorphism(&Graph::cycle(11)),
            Err(Error::Unsupported { .. })
        ));
        let r = has_fpf_automorphism(&Graph::petersen()).unwrap();
        assert!(verify_result(&Graph::petersen(), Mode::Automorphism, &r) && r.decision);
        let capped = Engine::new(EngineConfig {
            prime_cap: 9,
            trace: false,
        })
        .solve(&Graph::petersen(), Mode::Automorphism);
        assert!(matches!(capped, Err(Error::Unsupported { quotient_size: 10, .. })));
    }

    #[test]
    fn trace_and_node_count() {
        let g = Graph::path(4).disjoint_union(&Graph::path(4)).join(&Graph::empty(2));
        let r = Engine::new(EngineConfig {
            prime_cap: 10,
            trace: true,
        })
        .solve(&g, Mode::Involution)
        .unwrap();
        assert!(r.nodes < 2 * g.n());
        assert_eq!(r.trace.len(), r.nodes);
        assert_eq!(r.trace[0].module, (0..10).collect::<Vec<_>>());
        assert!(verify_result(&g, Mode::Involution, &r));
    }
}
