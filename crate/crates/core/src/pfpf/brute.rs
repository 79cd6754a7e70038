use super::{Mode, PfpfInstance};
use crate::error::{Error, Result};
use crate::perm::Permutation;

struct Search<'a> {
    inst: &'a PfpfInstance,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn consistent(&self, v: usize, w: usize) -> bool {
        let g = &self.inst.graph;
        let c = &self.inst.coloring;
        c.color(v) == c.color(w)
            && g.degree(v) == g.degree(w)
            && (v != w || self.inst.mask.allows(v))
            && (0..self.image.len())
                .filter(|&u| self.image[u] != usize::MAX)
                .all(|u| g.has_edge(u, v) == g.has_edge(self.image[u], w))
    }

    /// Automorphism mode: assign vertices in order, images tried ascending.
    fn aut(&mut self, v: usize) -> bool {
        let n = self.image.len();
        if v == n {
            return true;
        }
        for w in 0..n {
            if self.used[w] || !self.consistent(v, w) {
                continue;
            }
            self.image[v] = w;
            self.used[w] = true;
            if self.aut(v + 1) {
                return true;
            }
            self.used[w] = false;
            self.image[v] = usize::MAX;
        }
        false
    }

    /// Involution mode: the smallest unassigned vertex `v` is paired with some
    /// unassigned `w >= v` (or fixed).
    fn inv(&mut self) -> bool {
        let Some(v) = self.image.iter().position(|&x| x == usize::MAX) else {
            return true;
        };
        let g = &self.inst.graph;
        for w in v..self.image.len() {
            if self.image[w] != usize::MAX || !self.consistent(v, w) {
                continue;
            }
            self.image[v] = w;
            if w != v {
                // w -> v must also agree with everything assigned so far.
                self.image[w] = usize::MAX;
                let ok = (0..self.image.len())
                    .filter(|&u| u != v && self.image[u] != usize::MAX)
                    .all(|u| g.has_edge(u, w) == g.has_edge(self.image[u], v));
                if !ok {
                    self.image[v] = usize::MAX;
                    continue;
                }
                self.image[w] = v;
            }
            if self.inv() {
                return true;
            }
            self.image[v] = usize::MAX;
            self.image[w] = usize::MAX;
        }
        false
    }
}

/// Exhaustive PFPF search returning the witness with the lexicographically
/// smallest image sequence.
pub fn pfpf_bruteforce(inst: &PfpfInstance, cap: usize) -> Result<Option<Permutation>> {
    inst.validate()?;
    let n = inst.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut s = Search {
        inst,
        image: vec![usize::MAX; n],
        used: vec![false; n],
    };
    let found = match inst.mode {
        Mode::Automorphism => s.aut(0),
        Mode::Involution => s.inv(),
    };
    if !found {
        return Ok(None);
    }
    let p = Permutation::from_images(s.image)?;
    debug_assert!(inst.is_witness(&p));
    Ok(Some(p))
}
