//! Simple undirected graphs with positional vertex ids, plus the vertex
//! colorings and boolean masks that decorate them.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted, so adjacency tests are a binary search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse; loops are rejected.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Sorts and dedups the lists. Callers guarantee symmetry and no loops.
    pub(crate) fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph { adj, edges: twice / 2 }
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
        Graph {
            adj,
            edges: n * n.saturating_sub(1) / 2,
        }
    }

    pub fn path(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edge_list(n, &pairs).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        let mut pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            pairs.push((n - 1, 0));
        }
        Self::from_edge_list(n, &pairs).expect("cycle edges are valid")
    }

    pub fn star(leaves: usize) -> Self {
        let pairs: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edge_list(leaves + 1, &pairs).expect("star edges are valid")
    }

    pub fn petersen() -> Self {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((i, i + 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edge_list(10, &pairs).expect("petersen edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edges == n * n.saturating_sub(1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges == 0
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = Vec::with_capacity(n);
        for v in 0..n {
            let mut list = Vec::with_capacity(n - 1 - self.degree(v));
            let mut it = self.adj[v].iter().peekable();
            for u in 0..n {
                if it.peek() == Some(&&u) {
                    it.next();
                } else if u != v {
                    list.push(u);
                }
            }
            adj.push(list);
        }
        let edges = n * n.saturating_sub(1) / 2 - self.edges;
        Graph { adj, edges }
    }

    /// The subgraph induced by `vertices`. New vertex `i` is `map[i]` in `self`;
    /// the map lists the selected vertices in increasing order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        let mut map: Vec<usize> = vertices.to_vec();
        map.sort_unstable();
        map.dedup();
        if let Some(&v) = map.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let mut local = vec![usize::MAX; n];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&u| (local[u] != usize::MAX).then_some(local[u]))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        let edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok((Graph { adj, edges }, map))
    }

    /// Induced subgraphs of disjoint vertex sets in one O(n + m) pass. Vertex `i`
    /// of the `k`-th graph is `parts[k][i]`.
    pub(crate) fn induced_subgraphs(&self, parts: &[Vec<usize>]) -> Vec<Graph> {
        let mut part = vec![usize::MAX; self.n()];
        let mut local = vec![0; self.n()];
        for (k, p) in parts.iter().enumerate() {
            for (i, &v) in p.iter().enumerate() {
                part[v] = k;
                local[v] = i;
            }
        }
        parts
            .iter()
            .enumerate()
            .map(|(k, p)| {
                let adj: Vec<Vec<usize>> = p
                    .iter()
                    .map(|&v| {
                        let mut list: Vec<usize> = self.adj[v]
                            .iter()
                            .filter(|&&u| part[u] == k)
                            .map(|&u| local[u])
                            .collect();
                        list.sort_unstable();
                        list
                    })
                    .collect();
                let edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
                Graph { adj, edges }
            })
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut part = Vec::new();
            while let Some(v) = queue.pop_front() {
                part.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    /// Connected components of the complement, computed without building it.
    pub fn co_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut remaining: Vec<usize> = (0..n).rev().collect();
        let mut stamp = vec![usize::MAX; n];
        let mut parts = Vec::new();
        while let Some(s) = remaining.pop() {
            let mut part = vec![s];
            let mut i = 0;
            while i < part.len() && !remaining.is_empty() {
                let v = part[i];
                i += 1;
                for &u in &self.adj[v] {
                    stamp[u] = v;
                }
                // Unreached vertices not adjacent to v join the part; the ones
                // kept are neighbors of v, so this scan costs O(deg(v)) amortized.
                let mut kept = Vec::with_capacity(self.degree(v).min(remaining.len()));
                for &u in &remaining {
                    if stamp[u] == v {
                        kept.push(u);
                    } else {
                        part.push(u);
                    }
                }
                remaining = kept;
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts.sort_by_key(|p| p[0]);
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edges + 1 == self.n() && self.is_connected()
    }

    /// Shortest-path distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<usize>>> {
        let n = self.n();
        if source >= n {
            return Err(Error::VertexOutOfRange { vertex: source, n });
        }
        let mut dist = vec![None; n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &u in &self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        Ok(dist)
    }

    /// True iff `p` is a bijection of `V` preserving edges and non-edges.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        if p.len() != self.n() {
            return false;
        }
        self.adj.iter().enumerate().all(|(v, list)| {
            let image = p.apply(v);
            self.degree(image) == list.len() && list.iter().all(|&u| self.has_edge(image, p.apply(u)))
        })
    }

    /// True iff `map` (indexed by vertices of `self`) is an isomorphism onto `other`.
    pub fn is_isomorphism_to(&self, other: &Graph, map: &[usize]) -> bool {
        let n = self.n();
        if other.n() != n || map.len() != n || self.edges != other.edges {
            return false;
        }
        let mut hit = vec![false; n];
        for &w in map {
            if w >= n || std::mem::replace(&mut hit[w], true) {
                return false;
            }
        }
        self.edges().all(|(u, v)| other.has_edge(map[u], map[v]))
    }

    /// The graph with vertex `v` renamed to `p(v)`.
    pub fn relabel(&self, p: &Permutation) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for (v, list) in self.adj.iter().enumerate() {
            adj[p.apply(v)] = list.iter().map(|&u| p.apply(u)).collect();
        }
        Self::from_raw_adjacency(adj)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&u| u + off).collect::<Vec<_>>()),
        );
        Graph {
            adj,
            edges: self.edges + other.edges,
        }
    }

    /// Complete join: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let (a, b) = (self.n(), other.n());
        let mut adj = Vec::with_capacity(a + b);
        for list in &self.adj {
            let mut l = list.clone();
            l.extend(a..a + b);
            adj.push(l);
        }
        for list in &other.adj {
            let mut l: Vec<usize> = (0..a).collect();
            l.extend(list.iter().map(|&u| u + a));
            adj.push(l);
        }
        Graph {
            adj,
            edges: self.edges + other.edges + a * b,
        }
    }

    /// Bipartition check by BFS two-coloring.
    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        queue.push_back(u);
                    } else if side[u] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if parent[v] != u {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Split-graph test via the degree-sequence characterization of Hammer and Simeone.
    pub fn is_split(&self) -> bool {
        let mut deg: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        let m = deg.iter().enumerate().filter(|&(i, &d)| d >= i).count();
        let lhs: usize = deg[..m].iter().sum();
        let rhs: usize = m * m.saturating_sub(1) + deg[m..].iter().sum::<usize>();
        lhs == rhs
    }
}

/// A vertex coloring with contiguous color ids `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexColoring {
    colors: Vec<u32>,
    k: usize,
}

impl VertexColoring {
    pub fn uniform(n: usize) -> Self {
        VertexColoring {
            colors: vec![0; n],
            k: usize::from(n > 0),
        }
    }

    /// Relabels arbitrary color values to `0..k`, preserving their relative order.
    pub fn from_values<T: Ord + Clone>(values: &[T]) -> Self {
        let mut distinct: Vec<T> = values.to_vec();
        distinct.sort();
        distinct.dedup();
        let colors = values
            .iter()
            .map(|v| distinct.binary_search(v).expect("value present") as u32)
            .collect();
        VertexColoring {
            colors,
            k: distinct.len(),
        }
    }

    #[inline]
    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn num_colors(&self) -> usize {
        self.k
    }

    /// Vertices grouped by color, each class in increasing vertex order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c as usize].push(v);
        }
        classes
    }
}

/// Per-vertex permission to be a fixed point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BooleanMask {
    allow_fixed: Vec<bool>,
}

impl BooleanMask {
    pub fn new(allow_fixed: Vec<bool>) -> Self {
        BooleanMask { allow_fixed }
    }

    pub fn all(n: usize, value: bool) -> Self {
        BooleanMask {
            allow_fixed: vec![value; n],
        }
    }

    #[inline]
    pub fn allows(&self, v: usize) -> bool {
        self.allow_fixed[v]
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.allow_fixed
    }

    pub fn len(&self) -> usize {
        self.allow_fixed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.allow_fixed.is_empty()
    }
}
