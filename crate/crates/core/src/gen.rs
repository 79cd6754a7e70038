//! Random graphs from the recursive class grammars: cographs, tree-cographs,
//! P4-sparse graphs, plus trees and a sparse cograph family for scaling runs.
//!
//! Children are often replicated so that symmetric (and hence FPF) instances
//! are common. Every generator returns a randomly relabeled graph.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::perm::Permutation;

/// Applies a uniformly random relabeling.
pub fn random_relabel<R: Rng + ?Sized>(g: Graph, rng: &mut R) -> Graph {
    let mut img: Vec<usize> = (0..g.n()).collect();
    img.shuffle(rng);
    g.relabel(&Permutation::from_images(img).expect("shuffle is a permutation"))
}

/// Random composition of `n` into `parts` positive summands.
fn composition<R: Rng + ?Sized>(n: usize, parts: usize, rng: &mut R) -> Vec<usize> {
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts[..parts - 1].to_vec();
    cuts.sort_unstable();
    let mut sizes = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts.into_iter().chain([n]) {
        sizes.push(c - prev);
        prev = c;
    }
    sizes
}

/// Children sizes for a node on `n >= 2` vertices; `true` when they are copies.
fn split<R: Rng + ?Sized>(n: usize, rng: &mut R) -> (Vec<usize>, bool) {
    let divisors: Vec<usize> = (2..=n.min(4)).filter(|d| n.is_multiple_of(*d)).collect();
    if !divisors.is_empty() && rng.gen_bool(0.4) {
        let r = *divisors.choose(rng).unwrap();
        return (vec![n / r; r], true);
    }
    let r = rng.gen_range(2..=n.min(4));
    (composition(n, r, rng), false)
}

fn combine(children: Vec<Graph>, join: bool) -> Graph {
    let mut it = children.into_iter();
    let first = it.next().expect("at least one child");
    it.fold(first, |acc, g| if join { acc.join(&g) } else { acc.disjoint_union(&g) })
}

fn build_children<R: Rng + ?Sized>(
    sizes: &[usize],
    copies: bool,
    rng: &mut R,
    make: &mut dyn FnMut(usize, &mut R) -> Graph,
) -> Vec<Graph> {
    if copies {
        let g = make(sizes[0], rng);
        vec![g; sizes.len()]
    } else {
        sizes.iter().map(|&s| make(s, rng)).collect()
    }
}

fn cograph_raw<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    let (sizes, copies) = split(n, rng);
    let children = build_children(&sizes, copies, rng, &mut |s, r| cograph_raw(s, r));
    combine(children, rng.gen_bool(0.5))
}

/// Random cograph on `n >= 1` vertices.
pub fn random_cograph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    random_relabel(cograph_raw(n, rng), rng)
}

fn tree_raw<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let pairs: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edge_list(n, &pairs).expect("tree edges in range")
}

/// Uniform-attachment random tree on `n >= 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    random_relabel(tree_raw(n, rng), rng)
}

/// Tree with a symmetric shape when possible: copies of one rooted tree hung
/// from a root, or two copies joined by an edge between their roots.
fn symmetric_tree_raw<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n.is_multiple_of(2) && rng.gen_bool(0.5) {
        let half = tree_raw(n / 2, rng);
        let both = half.disjoint_union(&half);
        let mut pairs: Vec<(usize, usize)> = both.edges().collect();
        pairs.push((0, n / 2));
        return Graph::from_edge_list(n, &pairs).unwrap();
    }
    let rest = n - 1;
    let r = (2..=rest.min(4))
        .filter(|d| rest.is_multiple_of(*d))
        .collect::<Vec<_>>();
    let Some(&r) = r.choose(rng) else {
        return tree_raw(n, rng);
    };
    let branch = tree_raw(rest / r, rng);
    let mut pairs = Vec::new();
    for c in 0..r {
        let off = 1 + c * branch.n();
        pairs.extend(branch.edges().map(|(a, b)| (a + off, b + off)));
        pairs.push((0, off));
    }
    Graph::from_edge_list(n, &pairs).unwrap()
}

fn tree_cograph_raw<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let base = if n <= 2 || rng.gen_bool(0.35) {
        if rng.gen_bool(0.5) {
            symmetric_tree_raw(n, rng)
        } else {
            tree_raw(n, rng)
        }
    } else {
        let (sizes, copies) = split(n, rng);
        combine(
            build_children(&sizes, copies, rng, &mut |s, r| tree_cograph_raw(s, r)),
            false,
        )
    };
    if rng.gen_bool(0.5) {
        base.complement()
    } else {
        base
    }
}

/// Random tree-cograph: trees, disjoint unions and complements.
pub fn random_tree_cograph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    random_relabel(tree_cograph_raw(n, rng), rng)
}

/// Spider with legs `0..k`, knees `k..2k`, then the head graph.
pub fn spider_graph(k: usize, thin: bool, head: &Graph) -> Graph {
    let h = head.n();
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if (i == j) == thin {
                pairs.push((i, k + j));
            }
            if i < j {
                pairs.push((k + i, k + j));
            }
        }
        for x in 0..h {
            pairs.push((k + i, 2 * k + x));
        }
    }
    pairs.extend(head.edges().map(|(a, b)| (2 * k + a, 2 * k + b)));
    Graph::from_edge_list(2 * k + h, &pairs).expect("spider edges in range")
}

fn p4_sparse_raw<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    if n >= 4 && rng.gen_bool(0.4) {
        let k = rng.gen_range(2..=(n / 2).min(6));
        let head = if n > 2 * k {
            p4_sparse_raw(n - 2 * k, rng)
        } else {
            Graph::empty(0)
        };
        return spider_graph(k, rng.gen_bool(0.5), &head);
    }
    let (sizes, copies) = split(n, rng);
    let children = build_children(&sizes, copies, rng, &mut |s, r| p4_sparse_raw(s, r));
    combine(children, rng.gen_bool(0.5))
}

/// Random P4-sparse graph: unions, joins and spiders with P4-sparse heads.
pub fn random_p4_sparse<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    random_relabel(p4_sparse_raw(n, rng), rng)
}

/// Size at which the sparse generators stop worrying about edge density.
const DENSE_LIMIT: usize = 12;

fn sparse_cograph_raw<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= DENSE_LIMIT {
        return cograph_raw(n, rng);
    }
    // A join with a tiny side keeps the edge count near linear.
    if rng.gen_bool(0.15) {
        let a = rng.gen_range(1..=2);
        return sparse_cograph_raw(n - a, rng).join(&cograph_raw(a, rng));
    }
    let (sizes, copies) = split(n, rng);
    combine(
        build_children(&sizes, copies, rng, &mut |s, r| sparse_cograph_raw(s, r)),
        false,
    )
}

/// Random cograph with O(n log n) edges in expectation, for scaling runs.
pub fn random_sparse_cograph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    random_relabel(sparse_cograph_raw(n, rng), rng)
}

fn sparse_p4_sparse_raw<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= DENSE_LIMIT {
        return p4_sparse_raw(n, rng);
    }
    let roll: f64 = rng.gen();
    if roll < 0.1 {
        let a = rng.gen_range(1..=2);
        return sparse_p4_sparse_raw(n - a, rng).join(&cograph_raw(a, rng));
    }
    if roll < 0.3 {
        // Thin spider with a small body; the head keeps the rest.
        let k = rng.gen_range(2..=4);
        let head = sparse_p4_sparse_raw(n - 2 * k, rng);
        return spider_graph(k, true, &head);
    }
    let (sizes, copies) = split(n, rng);
    combine(
        build_children(&sizes, copies, rng, &mut |s, r| sparse_p4_sparse_raw(s, r)),
        false,
    )
}

/// Random P4-sparse graph with near-linear edge count, for scaling runs.
pub fn random_sparse_p4_sparse<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    random_relabel(sparse_p4_sparse_raw(n, rng), rng)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut pairs = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &pairs).expect("pairs in range")
}
