//! Maximal modular partitions, quotient graphs and colored quotients.
//!
//! A disconnected graph splits into its components, a disconnected complement
//! into its co-components. In the remaining (prime) case the maximal strong
//! modules are the maximal proper modules; they are found by refining
//! `V \ {v}` into the maximal modules avoiding a pivot `v` and then growing
//! the module of `v` from module closures.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexColoring};
use crate::iso::{extract_iso, CanonicalForm, Canonizer};
use crate::pfpf::spider_partition;

/// Pairwise disjoint vertex sets covering `V`, each sorted, ordered by their
/// smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularPartition {
    parts: Vec<Vec<usize>>,
}

impl ModularPartition {
    /// Normalizes the part order and checks that `parts` partitions `0..n`.
    pub fn new(n: usize, mut parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for part in &mut parts {
            if part.is_empty() {
                return Err(Error::NotAPartition("empty part".into()));
            }
            part.sort_unstable();
            for &v in part.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::NotAPartition(format!("vertex {v} in two parts")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::NotAPartition(format!("vertex {v} uncovered")));
        }
        parts.sort_by_key(|p| p[0]);
        Ok(ModularPartition { parts })
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Vec<usize>> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `part_of[v]` is the index of the part holding `v`.
    pub fn part_of(&self, n: usize) -> Vec<usize> {
        let mut part_of = vec![usize::MAX; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                part_of[v] = i;
            }
        }
        part_of
    }
}

/// How the maximal modular partition arose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionKind {
    /// Disconnected graph: parts are the connected components.
    Parallel,
    /// Disconnected complement: parts are the co-components.
    Series,
    /// Connected and co-connected: parts are the maximal proper modules.
    Prime,
}

/// True iff every vertex outside `m` sees all of `m` or none of it.
pub fn is_module(g: &Graph, m: &[usize]) -> Result<bool> {
    if m.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let n = g.n();
    let mut inside = vec![false; n];
    for &v in m {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        inside[v] = true;
    }
    let size = inside.iter().filter(|&&b| b).count();
    let mut count = vec![0usize; n];
    for v in (0..n).filter(|&v| inside[v]) {
        for &u in g.neighbors(v) {
            if !inside[u] {
                count[u] += 1;
            }
        }
    }
    Ok((0..n).all(|u| inside[u] || count[u] == 0 || count[u] == size))
}

/// The partition of `V` into maximal strong modules.
pub fn maximal_modular_partition(g: &Graph) -> Result<ModularPartition> {
    decompose_step(g).map(|(_, p)| p)
}

/// Maximal modular partition together with the rule that produced it.
pub fn decompose_step(g: &Graph) -> Result<(PartitionKind, ModularPartition)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { needed: 2, n });
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        return Ok((PartitionKind::Parallel, ModularPartition { parts: comps }));
    }
    let cocomps = g.co_components();
    if cocomps.len() > 1 {
        return Ok((PartitionKind::Series, ModularPartition { parts: cocomps }));
    }
    let parts = prime_parts(g);
    Ok((PartitionKind::Prime, ModularPartition::new(n, parts)?))
}

fn prime_parts(g: &Graph) -> Vec<Vec<usize>> {
    if let Some(sd) = spider_partition(g) {
        let mut parts: Vec<Vec<usize>> = sd.legs.iter().chain(&sd.body).map(|&v| vec![v]).collect();
        if !sd.head.is_empty() {
            parts.push(sd.head.clone());
        }
        return parts;
    }
    // In a prime tree the only nontrivial modules are leaves sharing a parent;
    // modules are the same in the complement.
    if g.is_tree() {
        return tree_parts(g);
    }
    if crate::pfpf::is_co_tree(g) {
        return tree_parts(&g.complement());
    }
    let n = g.n();
    let pivot = 0;
    let avoiding = maximal_modules_avoiding(g, pivot);
    let mut part_of = vec![usize::MAX; n];
    for (i, p) in avoiding.iter().enumerate() {
        for &v in p {
            part_of[v] = i;
        }
    }
    // Each part is either a maximal strong module or lies inside the one
    // holding the pivot; the closure of {pivot, x} tells which.
    let mut merged = vec![false; avoiding.len()];
    let mut decided = vec![false; avoiding.len()];
    for i in 0..avoiding.len() {
        if decided[i] {
            continue;
        }
        decided[i] = true;
        if let Some(closure) = module_closure(g, pivot, avoiding[i][0]) {
            for v in closure {
                if v != pivot {
                    let p = part_of[v];
                    merged[p] = true;
                    decided[p] = true;
                }
            }
        }
    }
    let mut pivot_module = vec![pivot];
    let mut parts = Vec::new();
    for (i, p) in avoiding.into_iter().enumerate() {
        if merged[i] {
            pivot_module.extend(p);
        } else {
            parts.push(p);
        }
    }
    parts.push(pivot_module);
    parts
}

fn tree_parts(t: &Graph) -> Vec<Vec<usize>> {
    let n = t.n();
    let mut leaves_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut parts = Vec::new();
    for v in 0..n {
        if t.degree(v) == 1 {
            leaves_at[t.neighbors(v)[0]].push(v);
        } else {
            parts.push(vec![v]);
        }
    }
    parts.extend(leaves_at.into_iter().filter(|l| !l.is_empty()));
    parts
}

/// Coarsest partition of `V \ {v}` into modules of `g`: the maximal modules
/// not containing `v`.
fn maximal_modules_avoiding(g: &Graph, v: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let adjacent: Vec<usize> = g.neighbors(v).to_vec();
    let mut is_adj = vec![false; n];
    for &u in &adjacent {
        is_adj[u] = true;
    }
    let others: Vec<usize> = (0..n).filter(|&u| u != v && !is_adj[u]).collect();
    for p in [adjacent, others] {
        if !p.is_empty() {
            for &u in &p {
                part_of[u] = parts.len();
            }
            parts.push(p);
        }
    }

    let mut queued = vec![true; n];
    queued[v] = false;
    let mut queue: VecDeque<usize> = (0..n).filter(|&u| u != v).collect();
    let mut count: Vec<usize> = vec![0; n];
    let mut mark = vec![false; n];
    let mut touched = Vec::new();
    while let Some(z) = queue.pop_front() {
        queued[z] = false;
        let own = part_of[z];
        touched.clear();
        for &u in g.neighbors(z) {
            let p = part_of[u];
            if p == usize::MAX || p == own {
                continue;
            }
            if count[p] == 0 {
                touched.push(p);
            }
            count[p] += 1;
            mark[u] = true;
        }
        for &p in &touched {
            if count[p] < parts[p].len() {
                let (inside, outside): (Vec<usize>, Vec<usize>) = parts[p].iter().partition(|&&u| mark[u]);
                let q = parts.len();
                for &u in &inside {
                    part_of[u] = q;
                }
                parts[p] = outside;
                parts.push(inside);
                count.resize(parts.len(), 0);
                for &u in parts[p].iter().chain(&parts[q]) {
                    if !queued[u] {
                        queued[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            count[p] = 0;
        }
        for &u in g.neighbors(z) {
            mark[u] = false;
        }
    }
    for p in &mut parts {
        p.sort_unstable();
    }
    parts
}

/// Smallest module containing `a` and `b`, or `None` when that is all of `V`.
fn module_closure(g: &Graph, a: usize, b: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut inside = vec![false; n];
    let mut count = vec![0usize; n];
    let mut stamp = vec![usize::MAX; n];
    let mut queued = vec![false; n];
    let mut members = vec![a];
    inside[a] = true;
    for &y in g.neighbors(a) {
        count[y] = 1;
    }
    // Outside vertices adjacent to every member.
    let mut full: Vec<usize> = g.neighbors(a).to_vec();
    let mut splitters: Vec<usize> = vec![b];
    queued[b] = true;
    while let Some(x) = splitters.pop() {
        if inside[x] {
            continue;
        }
        inside[x] = true;
        members.push(x);
        if members.len() == n {
            return None;
        }
        let size = members.len();
        for &y in g.neighbors(x) {
            stamp[y] = x;
            if inside[y] {
                continue;
            }
            count[y] += 1;
            if count[y] == 1 && !queued[y] {
                queued[y] = true;
                splitters.push(y);
            }
        }
        full.retain(|&y| {
            if inside[y] {
                return false;
            }
            if stamp[y] == x {
                true
            } else {
                if !queued[y] {
                    queued[y] = true;
                    splitters.push(y);
                }
                false
            }
        });
        debug_assert!(full.iter().all(|&y| count[y] == size));
    }
    members.sort_unstable();
    Some(members)
}

/// The quotient graph: one vertex per part, adjacent iff the parts are fully adjacent.
pub fn quotient(g: &Graph, p: &ModularPartition) -> Result<Graph> {
    let n = g.n();
    let part_of = p.part_of(n);
    if part_of.contains(&usize::MAX) {
        return Err(Error::NotAPartition("partition does not cover the graph".into()));
    }
    for part in p.parts() {
        if !is_module(g, part)? {
            return Err(Error::NotModular(format!("part {part:?} is not a module")));
        }
    }
    Ok(quotient_of_modules(g, p.parts(), &part_of))
}

/// Quotient of a partition already known to consist of modules.
pub(crate) fn quotient_of_modules(g: &Graph, parts: &[Vec<usize>], part_of: &[usize]) -> Graph {
    let adj = parts
        .iter()
        .enumerate()
        .map(|(i, part)| {
            let mut list: Vec<usize> = g
                .neighbors(part[0])
                .iter()
                .map(|&u| part_of[u])
                .filter(|&j| j != i)
                .collect();
            list.sort_unstable();
            list.dedup();
            list
        })
        .collect();
    Graph::from_raw_adjacency(adj)
}

/// Quotient graph colored by isomorphism type of the induced modules.
#[derive(Clone, Debug)]
pub struct ColoredQuotient {
    pub quotient: Graph,
    pub coloring: VertexColoring,
    /// Original vertex set of each quotient vertex.
    pub parts: Vec<Vec<usize>>,
    /// Index of the color-class representative for each quotient vertex.
    pub representative: Vec<usize>,
    /// `to_representative[i][k]` is the image of `parts[i][k]` under a fixed
    /// isomorphism `G[M_i] -> G[M_rep(i)]`.
    to_representative: Vec<Vec<usize>>,
}

impl ColoredQuotient {
    /// An isomorphism `G[M_i] -> G[M_j]` as `(vertex, image)` pairs, when the two
    /// quotient vertices share a color. Routed through the class representative.
    pub fn iso_between(&self, i: usize, j: usize) -> Option<Vec<(usize, usize)>> {
        if self.coloring.color(i) != self.coloring.color(j) {
            return None;
        }
        let rep = self.representative[i];
        // rep-vertex -> M_j vertex
        let back: HashMap<usize, usize> = self.to_representative[j]
            .iter()
            .zip(&self.parts[j])
            .map(|(&r, &v)| (r, v))
            .collect();
        debug_assert_eq!(rep, self.representative[j]);
        Some(
            self.parts[i]
                .iter()
                .zip(&self.to_representative[i])
                .map(|(&v, r)| (v, back[r]))
                .collect(),
        )
    }
}

/// Colors the quotient by isomorphism class of `G[M_i]`, storing for each part an
/// explicit isomorphism onto its class representative.
pub fn colored_quotient(g: &Graph, p: &ModularPartition, canonizer: &Canonizer) -> Result<ColoredQuotient> {
    let quotient = quotient(g, p)?;
    let mut subs: Vec<(Graph, CanonicalForm)> = Vec::with_capacity(p.len());
    for part in p.parts() {
        let (sub, _) = g.induced_subgraph(part)?;
        let form = canonizer.decomposition_canon(&sub)?;
        subs.push((sub, form));
    }
    let codes: Vec<&str> = subs.iter().map(|(_, f)| f.code.as_str()).collect();
    let coloring = VertexColoring::from_values(&codes);
    let mut first_of_color: HashMap<u32, usize> = HashMap::new();
    let mut representative = Vec::with_capacity(p.len());
    let mut to_representative = Vec::with_capacity(p.len());
    for (i, part) in p.parts().iter().enumerate() {
        let rep = *first_of_color.entry(coloring.color(i)).or_insert(i);
        representative.push(rep);
        let (gi, fi) = &subs[i];
        let (gr, fr) = &subs[rep];
        let map = extract_iso(gi, fi, gr, fr)
            .ok_or_else(|| Error::Internal(format!("equal canonical forms without an isomorphism for part {i}")))?;
        let rep_part = &p.parts()[rep];
        to_representative.push((0..part.len()).map(|k| rep_part[map.apply(k)]).collect());
    }
    Ok(ColoredQuotient {
        quotient,
        coloring,
        parts: p.parts().to_vec(),
        representative,
        to_representative,
    })
}
