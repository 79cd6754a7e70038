//! Equitable partitions, and the correspondence between fixed-point-free
//! involutions and equitable partitions whose cells all have size two.

use std::collections::HashMap;

use crate::engine::{Engine, EngineConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::pfpf::Mode;

/// Disjoint cells covering the vertex set, each sorted, ordered by minimum vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquitablePartition {
    cells: Vec<Vec<usize>>,
}

impl EquitablePartition {
    pub fn new(n: usize, mut cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for cell in &mut cells {
            if cell.is_empty() {
                return Err(Error::NotAPartition("empty cell".into()));
            }
            cell.sort_unstable();
            for &v in cell.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::NotAPartition(format!("vertex {v} in two cells")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::NotAPartition(format!("vertex {v} uncovered")));
        }
        cells.sort_by_key(|c| c[0]);
        Ok(EquitablePartition { cells })
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn is_2homogeneous(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 2)
    }
}

/// Every vertex of a cell has the same number of neighbors in each cell.
pub fn is_equitable(g: &Graph, p: &EquitablePartition) -> Result<bool> {
    let n = g.n();
    let covered: usize = p.cells.iter().map(Vec::len).sum();
    if covered != n || p.cells.iter().flatten().any(|&v| v >= n) {
        return Err(Error::NotAPartition(format!(
            "cells cover {covered} vertices, graph has {n}"
        )));
    }
    let mut cell_of = vec![0; n];
    for (i, cell) in p.cells.iter().enumerate() {
        for &v in cell {
            cell_of[v] = i;
        }
    }
    let counts = |v: usize| {
        let mut m: HashMap<usize, usize> = HashMap::new();
        for &u in g.neighbors(v) {
            *m.entry(cell_of[u]).or_default() += 1;
        }
        m
    };
    Ok(p.cells.iter().all(|cell| {
        let first = counts(cell[0]);
        cell[1..].iter().all(|&v| counts(v) == first)
    }))
}

/// The 2-cycles of a fixed-point-free involution of `g`.
pub fn involution_to_partition(g: &Graph, w: &Permutation) -> Result<EquitablePartition> {
    if w.len() != g.n() {
        return Err(Error::InvalidPermutation(format!(
            "degree {} on a graph with {} vertices",
            w.len(),
            g.n()
        )));
    }
    if !w.is_fixed_point_free() || !w.is_involution() {
        return Err(Error::InvalidPermutation(format!(
            "{w} is not a fixed-point-free involution"
        )));
    }
    if !g.is_automorphism(w) {
        return Err(Error::InvalidPermutation(format!("{w} is not an automorphism")));
    }
    EquitablePartition::new(g.n(), w.cycles())
}

/// A partition into pairs that is equitable, found through the involution engine.
pub fn has_2homogeneous_equitable_partition(g: &Graph, config: EngineConfig) -> Result<Option<EquitablePartition>> {
    if g.n() % 2 == 1 {
        return Ok(None);
    }
    let r = Engine::new(config).solve(g, Mode::Involution)?;
    r.witness.map(|w| involution_to_partition(g, &w)).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: usize, cells: &[&[usize]]) -> EquitablePartition {
        EquitablePartition::new(n, cells.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn equitable_examples() {
        assert!(is_equitable(&Graph::cycle(4), &part(4, &[&[0, 2], &[1, 3]])).unwrap());
        assert!(is_equitable(&Graph::path(3), &part(3, &[&[0, 2], &[1]])).unwrap());
        assert!(!is_equitable(&Graph::path(4), &part(4, &[&[0, 1], &[2, 3]])).unwrap());
        assert!(is_equitable(&Graph::path(4), &part(3, &[&[0], &[1], &[2]])).is_err());
        assert!(EquitablePartition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn involution_examples() {
        let anti = Permutation::from_images(vec![2, 3, 0, 1]).unwrap();
        let p = involution_to_partition(&Graph::cycle(4), &anti).unwrap();
        assert_eq!(p.cells(), &[vec![0, 2], vec![1, 3]]);
        assert!(is_equitable(&Graph::cycle(4), &p).unwrap());
        let swap = Permutation::from_images(vec![1, 0]).unwrap();
        assert_eq!(
            involution_to_partition(&Graph::complete(2), &swap).unwrap().cells(),
            &[vec![0, 1]]
        );
        let rot = Permutation::from_images(vec![1, 2, 3, 0]).unwrap();
        assert!(involution_to_partition(&Graph::cycle(4), &rot).is_err());
    }

    #[test]
    fn finder_examples() {
        let cfg = EngineConfig::default();
        assert!(has_2homogeneous_equitable_partition(&Graph::cycle(5), cfg)
            .unwrap()
            .is_none());
        let p = has_2homogeneous_equitable_partition(&Graph::cycle(4), cfg)
            .unwrap()
            .unwrap();
        assert!(p.is_2homogeneous() && is_equitable(&Graph::cycle(4), &p).unwrap());
        let p = has_2homogeneous_equitable_partition(&Graph::path(4), cfg)
            .unwrap()
            .unwrap();
        assert_eq!(p.cells(), &[vec![0, 3], vec![1, 2]]);
    }
}
