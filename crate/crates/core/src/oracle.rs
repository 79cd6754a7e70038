//! Ground truth for small graphs. This code shares nothing with the
//! decomposition engine: it is an individualization/refinement backtracking
//! search over permutations, plus subset enumeration for modules.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::pfpf::{Mode, PfpfInstance};

pub const DEFAULT_ORACLE_CAP: usize = 9;
pub const MODULE_ORACLE_CAP: usize = 12;

/// Constraints on the permutation being searched for.
#[derive(Clone, Debug)]
struct Target<'a> {
    g: &'a Graph,
    allow_fixed: Vec<bool>,
    involution: bool,
    /// Reject involutions exchanging the two ends of an edge.
    forbid_edge_swap: bool,
}

/// Refines the domain and image colorings together; `false` if their color
/// class sizes stop matching (no bijection can respect them).
fn joint_refine(g: &Graph, dom: &mut Vec<u32>, img: &mut Vec<u32>) -> bool {
    let n = g.n();
    let signature = |colors: &[u32], v: usize| {
        let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
        nb.sort_unstable();
        (colors[v], nb)
    };
    let mut classes = 0;
    loop {
        let sd: Vec<_> = (0..n).map(|v| signature(dom, v)).collect();
        let si: Vec<_> = (0..n).map(|v| signature(img, v)).collect();
        let mut all: Vec<&(u32, Vec<u32>)> = sd.iter().chain(&si).collect();
        all.sort();
        all.dedup();
        let rank = |s: &(u32, Vec<u32>)| all.binary_search(&s).unwrap() as u32;
        let nd: Vec<u32> = sd.iter().map(rank).collect();
        let ni: Vec<u32> = si.iter().map(rank).collect();
        let mut count = vec![0i64; all.len()];
        for &c in &nd {
            count[c as usize] += 1;
        }
        for &c in &ni {
            count[c as usize] -= 1;
        }
        if count.iter().any(|&x| x != 0) {
            return false;
        }
        let stable = all.len() == classes;
        classes = all.len();
        *dom = nd;
        *img = ni;
        if stable {
            return true;
        }
    }
}

impl Target<'_> {
    fn search(&self, mut dom: Vec<u32>, mut img: Vec<u32>) -> Option<Vec<usize>> {
        let n = self.g.n();
        if !joint_refine(self.g, &mut dom, &mut img) {
            return None;
        }
        let k = dom.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut dom_cells = vec![Vec::new(); k];
        let mut img_cells = vec![Vec::new(); k];
        for v in 0..n {
            dom_cells[dom[v] as usize].push(v);
            img_cells[img[v] as usize].push(v);
        }
        // Forced pairs from singleton cells.
        let mut forced = vec![usize::MAX; n];
        for c in 0..k {
            if dom_cells[c].len() == 1 {
                let (v, w) = (dom_cells[c][0], img_cells[c][0]);
                if v == w && !self.allow_fixed[v] {
                    return None;
                }
                forced[v] = w;
            }
        }
        if self.involution {
            for v in 0..n {
                let w = forced[v];
                if w != usize::MAX && forced[w] != usize::MAX && forced[w] != v {
                    return None;
                }
                if w != usize::MAX && w != v && self.forbid_edge_swap && self.g.has_edge(v, w) {
                    return None;
                }
            }
        }
        let target = (0..k)
            .filter(|&c| dom_cells[c].len() > 1)
            .min_by_key(|&c| (dom_cells[c].len(), c));
        let Some(c) = target else {
            return self.accept(forced);
        };
        let v = dom_cells[c][0];
        let fresh = k as u32;
        for &w in &img_cells[c] {
            if w == v && !self.allow_fixed[v] {
                continue;
            }
            if self.involution && w != v && (dom[w] != img[v] || (self.forbid_edge_swap && self.g.has_edge(v, w))) {
                continue;
            }
            let mut d2 = dom.clone();
            let mut i2 = img.clone();
            d2[v] = fresh;
            i2[w] = fresh;
            if self.involution && w != v {
                d2[w] = fresh + 1;
                i2[v] = fresh + 1;
            }
            if let Some(found) = self.search(d2, i2) {
                return Some(found);
            }
        }
        None
    }

    fn accept(&self, image: Vec<usize>) -> Option<Vec<usize>> {
        let p = Permutation::from_images(image).ok()?;
        let ok = self.g.is_automorphism(&p)
            && (0..p.len()).all(|v| p.apply(v) != v || self.allow_fixed[v])
            && (!self.involution || p.is_involution())
            && (!self.forbid_edge_swap || self.g.edges().all(|(u, v)| p.apply(u) != v || p.apply(v) != u));
        ok.then(|| p.into_images())
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

fn run(target: Target<'_>, colors: &[u32]) -> Result<Option<Permutation>> {
    let found = target.search(colors.to_vec(), colors.to_vec());
    found.map(Permutation::from_images).transpose()
}

/// Some fixed-point-free automorphism of `g`.
pub fn oracle_fpf_aut(g: &Graph, cap: usize) -> Result<Option<Permutation>> {
    check_cap(g.n(), cap)?;
    if g.n() == 0 {
        return Ok(None);
    }
    let target = Target {
        g,
        allow_fixed: vec![false; g.n()],
        involution: false,
        forbid_edge_swap: false,
    };
    run(target, &vec![0; g.n()])
}

/// Some fixed-point-free involution of `g`.
pub fn oracle_fpf_inv(g: &Graph, cap: usize) -> Result<Option<Permutation>> {
    check_cap(g.n(), cap)?;
    if g.n() == 0 || g.n() % 2 == 1 {
        return Ok(None);
    }
    let target = Target {
        g,
        allow_fixed: vec![false; g.n()],
        involution: true,
        forbid_edge_swap: false,
    };
    run(target, &vec![0; g.n()])
}

/// Some PFPF witness for `inst` in its mode.
pub fn oracle_pfpf(inst: &PfpfInstance, cap: usize) -> Result<Option<Permutation>> {
    inst.validate()?;
    check_cap(inst.n(), cap)?;
    let target = Target {
        g: &inst.graph,
        allow_fixed: inst.mask.as_slice().to_vec(),
        involution: inst.mode == Mode::Involution,
        forbid_edge_swap: false,
    };
    run(target, inst.coloring.colors())
}

/// An involution exchanging no edge's endpoints. Fixed vertices are forbidden
/// unless `allow_fixed_vertices` is set.
pub fn oracle_fixed_edge_free_inv(g: &Graph, cap: usize, allow_fixed_vertices: bool) -> Result<Option<Permutation>> {
    check_cap(g.n(), cap)?;
    if g.n() == 0 {
        return Ok(None);
    }
    let target = Target {
        g,
        allow_fixed: vec![allow_fixed_vertices; g.n()],
        involution: true,
        forbid_edge_swap: true,
    };
    run(target, &vec![0; g.n()])
}

/// A module found by subset enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleModule {
    pub vertices: Vec<usize>,
    /// Overlaps no other module.
    pub strong: bool,
}

/// Every nonempty module of `g`, in increasing bitmask order.
pub fn oracle_modules(g: &Graph) -> Result<Vec<OracleModule>> {
    let n = g.n();
    check_cap(n, MODULE_ORACLE_CAP)?;
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect();
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let masks: Vec<u32> = (1..=full)
        .filter(|&s| (0..n).all(|z| s >> z & 1 == 1 || adj[z] & s == 0 || adj[z] & s == s))
        .collect();
    let overlaps = |a: u32, b: u32| a & b != 0 && a & !b != 0 && b & !a != 0;
    Ok(masks
        .iter()
        .map(|&s| OracleModule {
            vertices: (0..n).filter(|&v| s >> v & 1 == 1).collect(),
            strong: masks.iter().all(|&t| !overlaps(s, t)),
        })
        .collect())
}

/// A perfect matching of `V` whose pairs form an equitable partition, found by
/// enumerating all perfect matchings.
pub fn oracle_2homogeneous_equitable_partition(g: &Graph, cap: usize) -> Result<Option<Vec<[usize; 2]>>> {
    let n = g.n();
    check_cap(n, cap)?;
    if n == 0 || n % 2 == 1 {
        return Ok(None);
    }
    fn equitable(g: &Graph, pairs: &[[usize; 2]]) -> bool {
        let mut cell = vec![0; g.n()];
        for (i, p) in pairs.iter().enumerate() {
            cell[p[0]] = i;
            cell[p[1]] = i;
        }
        pairs.iter().all(|&[a, b]| {
            let mut ca = vec![0usize; pairs.len()];
            let mut cb = vec![0usize; pairs.len()];
            for &u in g.neighbors(a) {
                ca[cell[u]] += 1;
            }
            for &u in g.neighbors(b) {
                cb[cell[u]] += 1;
            }
            ca == cb
        })
    }
    fn rec(g: &Graph, used: &mut [bool], pairs: &mut Vec<[usize; 2]>) -> bool {
        let Some(a) = used.iter().position(|&u| !u) else {
            return equitable(g, pairs);
        };
        used[a] = true;
        for b in a + 1..used.len() {
            if used[b] {
                continue;
            }
            used[b] = true;
            pairs.push([a, b]);
            if rec(g, used, pairs) {
                return true;
            }
            pairs.pop();
            used[b] = false;
        }
        used[a] = false;
        false
    }
    let mut pairs = Vec::new();
    Ok(rec(g, &mut vec![false; n], &mut pairs).then_some(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{BooleanMask, VertexColoring};

    #[test]
    fn fpf_aut_examples() {
        let w = oracle_fpf_aut(&Graph::path(4), 9).unwrap().unwrap();
        assert_eq!(w.images(), &[3, 2, 1, 0]);
        assert!(oracle_fpf_aut(&Graph::star(3), 9).unwrap().is_none());
        let w = oracle_fpf_aut(&Graph::cycle(6), 9).unwrap().unwrap();
        assert!(Graph::cycle(6).is_automorphism(&w) && w.is_fixed_point_free());
        assert!(matches!(
            oracle_fpf_aut(&Graph::empty(10), 9),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn fpf_inv_examples() {
        for n in [4, 6] {
            let w = oracle_fpf_inv(&Graph::cycle(n), 9).unwrap().unwrap();
            assert!(Graph::cycle(n).is_automorphism(&w) && w.is_fixed_point_free() && w.is_involution());
        }
        assert!(oracle_fpf_inv(&Graph::cycle(5), 9).unwrap().is_none());
        assert!(oracle_fpf_inv(&Graph::complete(3), 9).unwrap().is_none());
    }

    #[test]
    fn pfpf_examples() {
        let inst = |colors: &[u32], mask: &[bool], g: Graph| {
            PfpfInstance::new(
                g,
                VertexColoring::from_values(colors),
                BooleanMask::new(mask.to_vec()),
                Mode::Automorphism,
            )
            .unwrap()
        };
        let w = oracle_pfpf(&inst(&[0, 0], &[false, false], Graph::complete(2)), 9)
            .unwrap()
            .unwrap();
        assert_eq!(w.images(), &[1, 0]);
        assert!(oracle_pfpf(&inst(&[0, 1], &[false, false], Graph::complete(2)), 9)
            .unwrap()
            .is_none());
        let w = oracle_pfpf(&inst(&[0, 1, 2], &[true; 3], Graph::path(3)), 9)
            .unwrap()
            .unwrap();
        assert_eq!(w, Permutation::identity(3));
    }

    #[test]
    fn fixed_edge_free_examples() {
        assert!(oracle_fixed_edge_free_inv(&Graph::complete(2), 9, false)
            .unwrap()
            .is_none());
        let w = oracle_fixed_edge_free_inv(&Graph::cycle(4), 9, false).unwrap().unwrap();
        assert_eq!(w.images(), &[2, 3, 0, 1]);
        assert!(oracle_fixed_edge_free_inv(&Graph::complete(2), 9, true)
            .unwrap()
            .is_some());
    }

    #[test]
    fn module_examples() {
        let p4 = oracle_modules(&Graph::path(4)).unwrap();
        assert!(p4.iter().all(|m| m.vertices.len() == 1 || m.vertices.len() == 4));
        assert_eq!(p4.len(), 5);
        let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let mods = oracle_modules(&two_k2).unwrap();
        assert!(mods.iter().any(|m| m.vertices == vec![0, 1] && m.strong));
        assert!(mods.iter().any(|m| m.vertices == vec![2, 3] && m.strong));
        assert_eq!(oracle_modules(&Graph::complete(3)).unwrap().len(), 7);
    }

    #[test]
    fn matching_partitions() {
        assert!(oracle_2homogeneous_equitable_partition(&Graph::cycle(4), 9)
            .unwrap()
            .is_some());
        assert!(oracle_2homogeneous_equitable_partition(&Graph::cycle(5), 9)
            .unwrap()
            .is_none());
        assert!(oracle_2homogeneous_equitable_partition(&Graph::star(3), 9)
            .unwrap()
            .is_none());
    }
}
