use super::{class_witness, is_co_tree, Mode, PfpfInstance};
use crate::error::{Error, Result};
use crate::graph::VertexColoring;
use crate::iso::{tree_centers, RootedForest};
use crate::perm::Permutation;

struct TreeSolver<'a> {
    inst: &'a PfpfInstance,
    forest: RootedForest,
    class: Vec<u32>,
    ok: Vec<bool>,
}

impl<'a> TreeSolver<'a> {
    /// Bottom-up solvability of every rooted subtree. Vertices in `free_roots`
    /// are treated as allowed to be fixed whatever their mask says.
    fn new(inst: &'a PfpfInstance, roots: &[usize], free_roots: bool) -> Self {
        let forest = RootedForest::new(&inst.graph, roots);
        let class = forest.subtree_classes(inst.coloring.colors());
        let n = inst.n();
        let mut ok = vec![false; n];
        for &v in forest.bfs.iter().rev() {
            let allowed = inst.mask.allows(v) || (free_roots && forest.parent[v] == usize::MAX);
            ok[v] = allowed && Self::children_witness(&forest, &class, &ok, v, inst.mode).is_some();
        }
        TreeSolver {
            inst,
            forest,
            class,
            ok,
        }
    }

    /// Edgeless instance on the children of `v`: colors are subtree classes,
    /// mask is recursive solvability.
    fn children_witness(forest: &RootedForest, class: &[u32], ok: &[bool], v: usize, mode: Mode) -> Option<Vec<usize>> {
        let ch = &forest.children[v];
        if ch.is_empty() {
            return Some(Vec::new());
        }
        let colors = VertexColoring::from_values(&ch.iter().map(|&c| class[c]).collect::<Vec<_>>());
        let mask: Vec<bool> = ch.iter().map(|&c| ok[c]).collect();
        class_witness(&colors, &mask, mode)
    }

    fn sorted_children(&self, v: usize) -> Vec<usize> {
        let mut ch = self.forest.children[v].clone();
        ch.sort_by_key(|&c| (self.class[c], c));
        ch
    }

    /// Maps the subtree of `a` onto the isomorphic subtree of `b`.
    fn map_subtree(&self, a: usize, b: usize, image: &mut [usize]) {
        let mut stack = vec![(a, b)];
        while let Some((x, y)) = stack.pop() {
            image[x] = y;
            let cx = self.sorted_children(x);
            let cy = self.sorted_children(y);
            debug_assert_eq!(cx.len(), cy.len());
            stack.extend(cx.into_iter().zip(cy));
        }
    }

    /// Writes a solution for the subtree of `root`, which must have `ok[root]`
    /// (or be a free root).
    fn fill(&self, root: usize, image: &mut [usize]) {
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            image[v] = v;
            let ch = &self.forest.children[v];
            let sigma = Self::children_witness(&self.forest, &self.class, &self.ok, v, self.inst.mode)
                .expect("solvable vertex has a child witness");
            for (i, &c) in ch.iter().enumerate() {
                let d = ch[sigma[i]];
                if c == d {
                    stack.push(c);
                } else {
                    self.map_subtree(c, d, image);
                }
            }
        }
    }
}

/// PFPF on a colored tree. With `root` given the tree is rooted there and the
/// root may always be fixed; otherwise the tree is rooted at its center(s).
pub fn pfpf_tree(inst: &PfpfInstance, root: Option<usize>) -> Result<Option<Permutation>> {
    inst.validate()?;
    let t = &inst.graph;
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.n();
    let mut image = vec![usize::MAX; n];
    if let Some(r) = root {
        if r >= n {
            return Err(Error::VertexOutOfRange { vertex: r, n });
        }
        let solver = TreeSolver::new(inst, &[r], true);
        if !solver.ok[r] {
            return Ok(None);
        }
        solver.fill(r, &mut image);
        return Permutation::from_images(image).map(Some);
    }
    match tree_centers(t)[..] {
        [c] => {
            let solver = TreeSolver::new(inst, &[c], false);
            if !solver.ok[c] {
                return Ok(None);
            }
            solver.fill(c, &mut image);
        }
        [r1, r2] => {
            let solver = TreeSolver::new(inst, &[r1, r2], false);
            if solver.ok[r1] && solver.ok[r2] {
                solver.fill(r1, &mut image);
                solver.fill(r2, &mut image);
            } else if solver.class[r1] == solver.class[r2] {
                solver.map_subtree(r1, r2, &mut image);
                solver.map_subtree(r2, r1, &mut image);
            } else {
                return Ok(None);
            }
        }
        _ => unreachable!("a tree has one or two centers"),
    }
    Permutation::from_images(image).map(Some)
}

/// PFPF on a graph whose complement is a tree; the witness is the one for the
/// complement.
pub fn pfpf_co_tree(inst: &PfpfInstance) -> Result<Option<Permutation>> {
    inst.validate()?;
    if !is_co_tree(&inst.graph) {
        return Err(Error::NotATree);
    }
    pfpf_tree(&inst.complement(), None)
}
