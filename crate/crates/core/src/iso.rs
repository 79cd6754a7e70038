//! Isomorphism and canonical forms for the graph families that occur as
//! modules: small graphs by search, colored trees by AHU ranks, and anything
//! whose modular decomposition bottoms out in supported quotients by a
//! bottom-up canonical string.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexColoring};
use crate::modular::{decompose_step, PartitionKind};
use crate::perm::Permutation;
use crate::pfpf::{classify, QuotientClassTag, SpiderDecomposition};

pub const DEFAULT_BRUTE_CAP: usize = 10;

/// A canonical string plus the labeling that realizes it: `labeling[p]` is the
/// vertex placed at canonical position `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub code: String,
    pub labeling: Vec<usize>,
}

impl CanonicalForm {
    /// Inverse of the labeling: canonical position of each vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.labeling.len()];
        for (p, &v) in self.labeling.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }
}

/// Refines `colors` to the coarsest equitable partition below it. Colors of the
/// result are ranks of iso-invariant signatures, so they are canonical.
pub(crate) fn refine_colors(g: &Graph, colors: &[u32]) -> Vec<u32> {
    let n = g.n();
    let mut current: Vec<u32> = {
        let mut sorted: Vec<u32> = colors.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        colors.iter().map(|c| sorted.binary_search(c).unwrap() as u32).collect()
    };
    let mut classes = current.iter().copied().max().map_or(0, |m| m as usize + 1);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&u| current[u]).collect();
                nb.sort_unstable();
                (current[v], nb)
            })
            .collect();
        let mut uniq: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        uniq.sort();
        uniq.dedup();
        if uniq.len() == classes {
            return current;
        }
        classes = uniq.len();
        current = sigs.iter().map(|s| uniq.binary_search(&s).unwrap() as u32).collect();
    }
}

/// A (color-preserving) isomorphism `g -> h` found by backtracking, as the image vector.
pub fn iso_bruteforce(
    g: &Graph,
    h: &Graph,
    gc: Option<&VertexColoring>,
    hc: Option<&VertexColoring>,
    cap: usize,
) -> Result<Option<Permutation>> {
    let n = g.n();
    if n.max(h.n()) > cap {
        return Err(Error::CapExceeded { n: n.max(h.n()), cap });
    }
    if n != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    for (c, graph) in [(gc, g), (hc, h)] {
        if let Some(c) = c {
            if c.len() != graph.n() {
                return Err(Error::InstanceMismatch(
                    "coloring length differs from vertex count".into(),
                ));
            }
        }
    }
    // Refine both graphs jointly through their disjoint union so the refined
    // colors are comparable across the two sides.
    let union = g.disjoint_union(h);
    let mut init: Vec<u32> = Vec::with_capacity(2 * n);
    init.extend((0..n).map(|v| gc.map_or(0, |c| c.color(v))));
    init.extend((0..n).map(|v| hc.map_or(0, |c| c.color(v))));
    let refined = refine_colors(&union, &init);
    let (rg, rh) = refined.split_at(n);
    let mut count = HashMap::new();
    for &c in rg {
        *count.entry(c).or_insert(0i64) += 1;
    }
    for &c in rh {
        *count.entry(c).or_insert(0i64) -= 1;
    }
    if count.values().any(|&x| x != 0) {
        return Ok(None);
    }
    let order = connected_order(g, rg);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend_iso(g, h, rg, rh, &order, 0, &mut image, &mut used) {
        let p = Permutation::from_images(image)?;
        debug_assert!(g.is_isomorphism_to(h, p.images()));
        Ok(Some(p))
    } else {
        Ok(None)
    }
}

/// Vertex order preferring small color classes, then vertices adjacent to
/// already ordered ones, so adjacency constraints bite early.
fn connected_order(g: &Graph, colors: &[u32]) -> Vec<usize> {
    let n = g.n();
    let mut class_size: HashMap<u32, usize> = HashMap::new();
    for &c in colors {
        *class_size.entry(c).or_default() += 1;
    }
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[&colors[v]], v))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            links[u] += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend_iso(
    g: &Graph,
    h: &Graph,
    gc: &[u32],
    hc: &[u32],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..h.n() {
        if used[w] || hc[w] != gc[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend_iso(g, h, gc, hc, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}

/// Canonical vertex order of a small colored graph: the order minimizing the
/// upper-triangle adjacency bit string among orders sorted by refined color.
pub(crate) fn brute_canonical_order(g: &Graph, colors: &[u32]) -> Vec<usize> {
    let n = g.n();
    let refined = refine_colors(g, colors);
    let mut slot_color: Vec<u32> = refined.clone();
    slot_color.sort_unstable();
    struct Search<'a> {
        g: &'a Graph,
        refined: &'a [u32],
        slot_color: &'a [u32],
        order: Vec<usize>,
        used: Vec<bool>,
        bits: Vec<bool>,
        best: Option<(Vec<bool>, Vec<usize>)>,
    }
    impl Search<'_> {
        fn run(&mut self, p: usize) {
            let n = self.g.n();
            if p == n {
                let better = match &self.best {
                    None => true,
                    Some((b, _)) => self.bits < *b,
                };
                if better {
                    self.best = Some((self.bits.clone(), self.order.clone()));
                }
                return;
            }
            for v in 0..n {
                if self.used[v] || self.refined[v] != self.slot_color[p] {
                    continue;
                }
                let base = self.bits.len();
                for q in 0..p {
                    self.bits.push(self.g.has_edge(self.order[q], v));
                }
                let prune = match &self.best {
                    Some((b, _)) => self.bits[..] > b[..self.bits.len()],
                    None => false,
                };
                if !prune {
                    self.used[v] = true;
                    self.order.push(v);
                    self.run(p + 1);
                    self.order.pop();
                    self.used[v] = false;
                }
                self.bits.truncate(base);
            }
        }
    }
    let mut s = Search {
        g,
        refined: &refined,
        slot_color: &slot_color,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        bits: Vec::new(),
        best: None,
    };
    s.run(0);
    s.best.map(|(_, o)| o).unwrap_or_default()
}

/// Rooted tree view: BFS order from the roots, parent pointers and children.
pub(crate) struct RootedForest {
    pub parent: Vec<usize>,
    pub children: Vec<Vec<usize>>,
    pub bfs: Vec<usize>,
}

impl RootedForest {
    /// Roots the tree at every vertex of `roots`; edges between roots are ignored.
    pub(crate) fn new(t: &Graph, roots: &[usize]) -> Self {
        let n = t.n();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut children = vec![Vec::new(); n];
        let mut bfs: Vec<usize> = roots.to_vec();
        for &r in roots {
            seen[r] = true;
        }
        let mut head = 0;
        while head < bfs.len() {
            let v = bfs[head];
            head += 1;
            for &u in t.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = v;
                    children[v].push(u);
                    bfs.push(u);
                }
            }
        }
        RootedForest { parent, children, bfs }
    }

    /// Interned class of each colored rooted subtree: equal ids iff the
    /// subtrees are color-preservingly isomorphic as rooted trees.
    pub(crate) fn subtree_classes(&self, colors: &[u32]) -> Vec<u32> {
        let mut class = vec![0u32; self.parent.len()];
        let mut intern: HashMap<(u32, Vec<u32>), u32> = HashMap::new();
        for &v in self.bfs.iter().rev() {
            let mut key: Vec<u32> = self.children[v].iter().map(|&c| class[c]).collect();
            key.sort_unstable();
            let next = intern.len() as u32;
            class[v] = *intern.entry((colors[v], key)).or_insert(next);
        }
        class
    }
}

/// Tree centers by repeated leaf removal (one or two vertices).
pub(crate) fn tree_centers(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &u in t.neighbors(v) {
                if degree[u] > 1 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    let mut centers = layer;
    centers.sort_unstable();
    centers
}

/// Canonical preorder of a rooted colored tree with its `(color, parent
/// position)` code; children are visited in order of their rank on each level.
fn rooted_canonical(t: &Graph, colors: &[u32], root: usize) -> (Vec<usize>, Vec<(u32, usize)>) {
    let n = t.n();
    let forest = RootedForest::new(t, &[root]);
    let mut depth = vec![0usize; n];
    for &v in &forest.bfs[1..] {
        depth[v] = depth[forest.parent[v]] + 1;
    }
    let max_depth = forest.bfs.iter().map(|&v| depth[v]).max().unwrap_or(0);
    let mut levels = vec![Vec::new(); max_depth + 1];
    for &v in &forest.bfs {
        levels[depth[v]].push(v);
    }
    // Level-wise ranks: comparable within a level, canonical across relabelings.
    let mut rank = vec![0u32; n];
    for level in levels.iter().rev() {
        let keys: Vec<(u32, Vec<u32>)> = level
            .iter()
            .map(|&v| {
                let mut ch: Vec<u32> = forest.children[v].iter().map(|&c| rank[c]).collect();
                ch.sort_unstable();
                (colors[v], ch)
            })
            .collect();
        let mut uniq: Vec<&(u32, Vec<u32>)> = keys.iter().collect();
        uniq.sort();
        uniq.dedup();
        for (i, &v) in level.iter().enumerate() {
            rank[v] = uniq.binary_search(&&keys[i]).unwrap() as u32;
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut code = Vec::with_capacity(n);
    let mut stack = vec![(root, usize::MAX)];
    while let Some((v, parent_pos)) = stack.pop() {
        let pos = order.len();
        order.push(v);
        code.push((colors[v], parent_pos));
        let mut ch = forest.children[v].clone();
        ch.sort_by_key(|&c| (rank[c], c));
        for &c in ch.iter().rev() {
            stack.push((c, pos));
        }
    }
    (order, code)
}

/// Canonical order of a colored tree, rooted at `root` or at its center(s).
pub(crate) fn tree_canonical_order(t: &Graph, colors: &[u32], root: Option<usize>) -> (Vec<usize>, Vec<(u32, usize)>) {
    match root {
        Some(r) => rooted_canonical(t, colors, r),
        None => tree_centers(t)
            .into_iter()
            .map(|c| rooted_canonical(t, colors, c))
            .min_by(|a, b| a.1.cmp(&b.1))
            .unwrap_or_default(),
    }
}

/// AHU-style canonical form of a (colored, optionally rooted) tree.
pub fn tree_canon(t: &Graph, coloring: Option<&VertexColoring>, root: Option<usize>) -> Result<CanonicalForm> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.n();
    if let Some(r) = root {
        if r >= n {
            return Err(Error::VertexOutOfRange { vertex: r, n });
        }
    }
    let colors: Vec<u32> = match coloring {
        Some(c) if c.len() != n => {
            return Err(Error::InstanceMismatch(
                "coloring length differs from vertex count".into(),
            ))
        }
        Some(c) => c.colors().to_vec(),
        None => vec![0; n],
    };
    let (labeling, code) = tree_canonical_order(t, &colors, root);
    let mut s = String::from(if root.is_some() { "RT" } else { "T" });
    for (c, p) in code {
        if p == usize::MAX {
            let _ = write!(s, ";{c}");
        } else {
            let _ = write!(s, ";{c}^{p}");
        }
    }
    Ok(CanonicalForm { code: s, labeling })
}

/// Canonical order of a spider: (knee, leg) pairs sorted by their colors, then the head.
pub(crate) fn spider_canonical_order(sd: &SpiderDecomposition, colors: &[u32]) -> Vec<usize> {
    let mut pairs: Vec<(usize, usize)> = sd.body.iter().copied().zip(sd.legs.iter().copied()).collect();
    pairs.sort_by_key(|&(k, s)| (colors[k], colors[s], k));
    let mut order: Vec<usize> = pairs.into_iter().flat_map(|(k, s)| [k, s]).collect();
    order.extend(&sd.head);
    order
}

/// Canonical order of the vertices of a prime quotient for the given class tag.
pub(crate) fn prime_canonical_order(
    q: &Graph,
    colors: &[u32],
    tag: QuotientClassTag,
    spider: Option<&SpiderDecomposition>,
) -> Vec<usize> {
    match tag {
        QuotientClassTag::Tree => tree_canonical_order(q, colors, None).0,
        QuotientClassTag::CoTree => tree_canonical_order(&q.complement(), colors, None).0,
        QuotientClassTag::Spider => spider_canonical_order(spider.expect("spider tag carries a decomposition"), colors),
        _ => brute_canonical_order(q, colors),
    }
}

/// Canonizer for graphs whose modular decomposition is supported.
#[derive(Clone, Copy, Debug)]
pub struct Canonizer {
    pub prime_cap: usize,
}

impl Default for Canonizer {
    fn default() -> Self {
        Canonizer {
            prime_cap: DEFAULT_BRUTE_CAP,
        }
    }
}

impl Canonizer {
    pub fn new(prime_cap: usize) -> Self {
        Canonizer { prime_cap }
    }

    /// Canonical string built bottom-up over the modular decomposition.
    pub fn decomposition_canon(&self, g: &Graph) -> Result<CanonicalForm> {
        let n = g.n();
        if n == 0 {
            return Ok(CanonicalForm {
                code: "()".into(),
                labeling: Vec::new(),
            });
        }
        if n == 1 {
            return Ok(CanonicalForm {
                code: "v".into(),
                labeling: vec![0],
            });
        }
        let (kind, partition) = decompose_step(g)?;
        let mut children = Vec::with_capacity(partition.len());
        for part in partition.parts() {
            let (sub, map) = g.induced_subgraph(part)?;
            let f = self.decomposition_canon(&sub)?;
            children.push((f.code, f.labeling.into_iter().map(|v| map[v]).collect::<Vec<_>>()));
        }
        let codes: Vec<&str> = children.iter().map(|c| c.0.as_str()).collect();
        let colors = VertexColoring::from_values(&codes);
        let (tag, order, q) = match kind {
            PartitionKind::Parallel | PartitionKind::Series => {
                let mut order: Vec<usize> = (0..children.len()).collect();
                order.sort_by_key(|&i| (colors.color(i), i));
                let tag = if kind == PartitionKind::Parallel { "U" } else { "J" };
                (tag.to_string(), order, None)
            }
            PartitionKind::Prime => {
                let part_of = partition.part_of(n);
                let q = crate::modular::quotient_of_modules(g, partition.parts(), &part_of);
                let (tag, spider) = classify(&q, self.prime_cap);
                if tag == QuotientClassTag::Unsupported {
                    return Err(Error::Unsupported {
                        module_size: n,
                        quotient_size: q.n(),
                        cap: self.prime_cap,
                    });
                }
                let order = prime_canonical_order(&q, colors.colors(), tag, spider.as_ref());
                (format!("P{}", tag.letter()), order, Some(q))
            }
        };
        let mut code = tag;
        code.push('(');
        for (i, &c) in order.iter().enumerate() {
            if i > 0 {
                code.push(',');
            }
            code.push_str(&children[c].0);
        }
        code.push(')');
        if let Some(q) = q {
            let mut pos = vec![0; order.len()];
            for (p, &v) in order.iter().enumerate() {
                pos[v] = p;
            }
            let mut edges: Vec<(usize, usize)> = q
                .edges()
                .map(|(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
                .collect();
            edges.sort_unstable();
            code.push('[');
            for (a, b) in edges {
                let _ = write!(code, "{a}-{b} ");
            }
            code.push(']');
        }
        let labeling = order.iter().flat_map(|&c| children[c].1.iter().copied()).collect();
        Ok(CanonicalForm { code, labeling })
    }
}

/// Explicit isomorphism `g1 -> g2` from two canonical forms of the same canonizer,
/// verified before it is returned.
pub fn extract_iso(g1: &Graph, f1: &CanonicalForm, g2: &Graph, f2: &CanonicalForm) -> Option<Permutation> {
    if f1.code != f2.code || f1.labeling.len() != f2.labeling.len() || g1.n() != f1.labeling.len() {
        return None;
    }
    let mut map = vec![0; f1.labeling.len()];
    for (&a, &b) in f1.labeling.iter().zip(&f2.labeling) {
        map[a] = b;
    }
    if g1.is_isomorphism_to(g2, &map) {
        Permutation::from_images(map).ok()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn shuffled(g: &Graph, rng: &mut impl Rng) -> (Graph, Permutation) {
        let mut img: Vec<usize> = (0..g.n()).collect();
        img.shuffle(rng);
        let p = Permutation::from_images(img).unwrap();
        (g.relabel(&p), p)
    }

    #[test]
    fn brute_examples() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(1);
        let (p4b, _) = shuffled(&Graph::path(4), &mut rng);
        let m = iso_bruteforce(&Graph::path(4), &p4b, None, None, 10).unwrap().unwrap();
        assert!(Graph::path(4).is_isomorphism_to(&p4b, m.images()));
        assert!(iso_bruteforce(&Graph::complete(3), &Graph::path(3), None, None, 10)
            .unwrap()
            .is_none());
        let rb = VertexColoring::from_values(&[0, 1]);
        let br = VertexColoring::from_values(&[1, 0]);
        let m = iso_bruteforce(&Graph::complete(2), &Graph::complete(2), Some(&rb), Some(&br), 10)
            .unwrap()
            .unwrap();
        assert_eq!(m.images(), &[1, 0]);
        assert!(matches!(
            iso_bruteforce(&Graph::empty(11), &Graph::empty(11), None, None, 10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn tree_canon_examples() {
        // Colored star: center 0 red, leaves blue, blue, green.
        let star = Graph::star(3);
        let c = VertexColoring::from_values(&[0, 1, 1, 2]);
        let p = Permutation::from_images(vec![2, 0, 3, 1]).unwrap();
        let star2 = star.relabel(&p);
        let mut c2 = vec![0u32; 4];
        for v in 0..4 {
            c2[p.apply(v)] = c.color(v);
        }
        let c2 = VertexColoring::from_values(&c2);
        let a = tree_canon(&star, Some(&c), Some(0)).unwrap();
        let b = tree_canon(&star2, Some(&c2), Some(p.apply(0))).unwrap();
        assert_eq!(a.code, b.code);
        let p3 = Graph::path(3);
        assert_ne!(
            tree_canon(&p3, None, Some(1)).unwrap().code,
            tree_canon(&p3, None, Some(0)).unwrap().code
        );
        assert_eq!(tree_canon(&Graph::cycle(3), None, None), Err(Error::NotATree));
    }

    #[test]
    fn tree_canon_matches_brute_force() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..400 {
            let n = rng.gen_range(1..=9);
            let t = crate::gen::random_tree(n, &mut rng);
            let u = crate::gen::random_tree(n, &mut rng);
            let k = rng.gen_range(1..=2);
            let ct = VertexColoring::from_values(&(0..n).map(|_| rng.gen_range(0..k)).collect::<Vec<_>>());
            let cu = VertexColoring::from_values(&(0..n).map(|_| rng.gen_range(0..k)).collect::<Vec<_>>());
            // Raw color ids must mean the same thing on both sides.
            let raw_t: Vec<u32> = ct.colors().to_vec();
            let raw_u: Vec<u32> = cu.colors().to_vec();
            let ft = tree_canon(&t, Some(&ct), None).unwrap();
            let fu = tree_canon(&u, Some(&cu), None).unwrap();
            let same_palette = ct.num_colors() == cu.num_colors();
            let brute = iso_bruteforce(&t, &u, Some(&ct), Some(&cu), 10).unwrap();
            if same_palette {
                assert_eq!(ft.code == fu.code, brute.is_some(), "{raw_t:?} {raw_u:?}");
            }
            let (t2, p) = shuffled(&t, &mut rng);
            let mut c2 = vec![0u32; n];
            for v in 0..n {
                c2[p.apply(v)] = ct.color(v);
            }
            let f2 = tree_canon(&t2, Some(&VertexColoring::from_values(&c2)), None).unwrap();
            assert_eq!(f2.code, ft.code);
            assert!(extract_iso(&t, &ft, &t2, &f2).is_some());
        }
    }

    #[test]
    fn decomposition_canon_examples() {
        let canon = Canonizer::default();
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let g = Graph::path(4).disjoint_union(&Graph::empty(1));
        let (h, _) = shuffled(&g, &mut rng);
        let fg = canon.decomposition_canon(&g).unwrap();
        let fh = canon.decomposition_canon(&h).unwrap();
        assert_eq!(fg.code, fh.code);
        assert!(extract_iso(&g, &fg, &h, &fh).is_some());
        let c5 = canon.decomposition_canon(&Graph::cycle(5)).unwrap();
        let p5 = canon.decomposition_canon(&Graph::path(5)).unwrap();
        assert_ne!(c5.code, p5.code);
        let k3 = canon.decomposition_canon(&Graph::complete(3)).unwrap();
        let e3 = canon.decomposition_canon(&Graph::empty(3)).unwrap();
        assert!(extract_iso(&Graph::complete(3), &k3, &Graph::empty(3), &e3).is_none());
        let id = extract_iso(
            &Graph::path(4),
            &canon.decomposition_canon(&Graph::path(4)).unwrap(),
            &Graph::path(4),
            &canon.decomposition_canon(&Graph::path(4)).unwrap(),
        )
        .unwrap();
        assert!(Graph::path(4).is_automorphism(&id));
    }

    #[test]
    fn decomposition_canon_matches_brute_force() {
        let canon = Canonizer::default();
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..600 {
            let n = rng.gen_range(1..=8);
            let g = crate::gen::random_cograph(n, &mut rng);
            let h = crate::gen::random_cograph(n, &mut rng);
            let fg = canon.decomposition_canon(&g).unwrap();
            let fh = canon.decomposition_canon(&h).unwrap();
            let brute = iso_bruteforce(&g, &h, None, None, 10).unwrap();
            assert_eq!(fg.code == fh.code, brute.is_some());
            let (g2, _) = shuffled(&g, &mut rng);
            let f2 = canon.decomposition_canon(&g2).unwrap();
            assert_eq!(f2.code, fg.code);
            assert!(extract_iso(&g, &fg, &g2, &f2).is_some());
        }
    }
}
