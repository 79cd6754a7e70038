//! Graph transformers that preserve the existence of fixed-point-free
//! automorphisms and involutions: the split and bipartite edge-copy
//! constructions and k-subdivision. Each returns a name for every new vertex.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReductionVertexName {
    Original(usize),
    /// Copy `copy ∈ {1, 2}` of the edge `{u, v}`, `u < v`.
    EdgeCopy {
        u: usize,
        v: usize,
        copy: u8,
    },
    /// Point at distance `d` from original `from` on the path that replaced
    /// the edge between `from` and the copy `copy` of `{u, v}`.
    PathPoint {
        from: usize,
        u: usize,
        v: usize,
        copy: u8,
        d: usize,
    },
    /// Point at distance `d` from `a` on the path that replaced edge `{a, b}`, `a < b`.
    Subdivision {
        a: usize,
        b: usize,
        d: usize,
    },
}

impl fmt::Display for ReductionVertexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ReductionVertexName::Original(v) => write!(f, "original {v}"),
            ReductionVertexName::EdgeCopy { u, v, copy } => write!(f, "edge-copy {u} {v} {copy}"),
            ReductionVertexName::PathPoint { from, u, v, copy, d } => write!(f, "path {from} {u} {v} {copy} {d}"),
            ReductionVertexName::Subdivision { a, b, d } => write!(f, "subdivision {a} {b} {d}"),
        }
    }
}

/// A constructed graph with `names[id]` naming vertex `id`.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: Graph,
    pub names: Vec<ReductionVertexName>,
}

impl Reduction {
    /// `newid kind args` per line.
    pub fn name_map_text(&self) -> String {
        self.names
            .iter()
            .enumerate()
            .map(|(id, name)| format!("{id} {name}\n"))
            .collect()
    }

    /// Ids of the original vertices, indexed by original vertex.
    pub fn original_ids(&self) -> Vec<usize> {
        let mut ids: Vec<(usize, usize)> = self
            .names
            .iter()
            .enumerate()
            .filter_map(|(id, n)| match n {
                ReductionVertexName::Original(v) => Some((*v, id)),
                _ => None,
            })
            .collect();
        ids.sort_unstable();
        ids.into_iter().map(|(_, id)| id).collect()
    }
}

/// Originals, then two copies per edge; `clique` decides whether the originals
/// are made pairwise adjacent.
fn edge_copies(g: &Graph, clique: bool) -> Reduction {
    let n = g.n();
    let mut names: Vec<ReductionVertexName> = (0..n).map(ReductionVertexName::Original).collect();
    let mut pairs = Vec::new();
    if clique {
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
    }
    for (u, v) in g.edges() {
        for copy in [1u8, 2] {
            let id = names.len();
            names.push(ReductionVertexName::EdgeCopy { u, v, copy });
            pairs.push((u, id));
            pairs.push((v, id));
        }
    }
    let graph = Graph::from_edge_list(names.len(), &pairs).expect("construction stays in range");
    Reduction { graph, names }
}

/// Split graph: originals form a clique, each edge contributes two independent
/// vertices adjacent to its endpoints.
pub fn split_construction(g: &Graph) -> Reduction {
    edge_copies(g, true)
}

/// Bipartite graph: as the split construction but with the originals independent.
pub fn bipartite_construction(g: &Graph) -> Result<Reduction> {
    if g.n() < 3 {
        return Err(Error::TooFewVertices { needed: 3, n: g.n() });
    }
    if !g.is_connected() {
        return Err(Error::Precondition(
            "bipartite construction needs a connected graph".into(),
        ));
    }
    Ok(edge_copies(g, false))
}

/// Replaces every edge by a path with `k` interior vertices.
pub fn k_subdivision(g: &Graph, k: usize) -> Result<Reduction> {
    if k < 1 {
        return Err(Error::Precondition("subdivision needs k >= 1".into()));
    }
    let n = g.n();
    let mut names: Vec<ReductionVertexName> = (0..n).map(ReductionVertexName::Original).collect();
    let mut pairs = Vec::new();
    for (a, b) in g.edges() {
        let mut prev = a;
        for d in 1..=k {
            let id = names.len();
            names.push(ReductionVertexName::Subdivision { a, b, d });
            pairs.push((prev, id));
            prev = id;
        }
        pairs.push((prev, b));
    }
    let graph = Graph::from_edge_list(names.len(), &pairs).expect("construction stays in range");
    Ok(Reduction { graph, names })
}

/// `k_subdivision(bipartite_construction(g), k)` with names expressed in terms of `g`.
pub fn full_reduction(g: &Graph, k: usize) -> Result<Reduction> {
    let bip = bipartite_construction(g)?;
    let sub = k_subdivision(&bip.graph, k)?;
    let names = sub
        .names
        .iter()
        .map(|name| match *name {
            ReductionVertexName::Original(id) => bip.names[id],
            ReductionVertexName::Subdivision { a, b, d } => {
                // Edges of the bipartite graph join an original (smaller id) to a copy.
                let from = match bip.names[a] {
                    ReductionVertexName::Original(v) => v,
                    other => unreachable!("bipartite edge starts at {other}"),
                };
                match bip.names[b] {
                    ReductionVertexName::EdgeCopy { u, v, copy } => {
                        ReductionVertexName::PathPoint { from, u, v, copy, d }
                    }
                    other => unreachable!("bipartite edge ends at {other}"),
                }
            }
            other => other,
        })
        .collect();
    Ok(Reduction {
        graph: sub.graph,
        names,
    })
}
