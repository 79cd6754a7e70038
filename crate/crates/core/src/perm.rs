//! Vertex permutations, written and parsed in cycle notation.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A bijection of `0..n` stored as its image vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut hit = vec![false; n];
        for &w in &image {
            if w >= n {
                return Err(Error::InvalidPermutation(format!("image {w} out of range 0..{n}")));
            }
            if std::mem::replace(&mut hit[w], true) {
                return Err(Error::InvalidPermutation(format!("image {w} repeated")));
            }
        }
        Ok(Permutation { image })
    }

    /// Builds a permutation of `0..n` from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (i, &v) in cycle.iter().enumerate() {
                if v >= n {
                    return Err(Error::InvalidPermutation(format!("point {v} out of range 0..{n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPermutation(format!("point {v} appears twice")));
                }
                image[v] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { image })
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn into_images(self) -> Vec<usize> {
        self.image
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (v, &w) in self.image.iter().enumerate() {
            inv[w] = v;
        }
        Permutation { image: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Permutation {
            image: other.image.iter().map(|&w| self.image[w]).collect(),
        }
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.image[v] == v).collect()
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &w)| v != w)
    }

    /// Order at most two (the identity qualifies).
    pub fn is_involution(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &w)| self.image[w] == v)
    }

    /// Nontrivial cycles, each starting at its minimum, sorted by that minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.image[s] == s {
                continue;
            }
            let mut cycle = vec![s];
            seen[s] = true;
            let mut v = self.image[s];
            while v != s {
                seen[v] = true;
                cycle.push(v);
                v = self.image[v];
            }
            out.push(cycle);
        }
        out
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u128 {
        self.cycles().iter().fold(1u128, |acc, c| acc.lcm(&(c.len() as u128)))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, v) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Parsed cycle notation, e.g. `(0 3)(1 2)`; degree is supplied separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleNotation(pub Vec<Vec<usize>>);

impl CycleNotation {
    pub fn into_permutation(self, n: usize) -> Result<Permutation> {
        Permutation::from_cycles(n, &self.0)
    }
}

impl FromStr for CycleNotation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidPermutation(format!("{msg} in {s:?}"));
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            rest = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = rest.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let body = &rest[..close];
            let cycle = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad("bad point")))
                .collect::<Result<Vec<_>>>()?;
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Ok(CycleNotation(cycles))
    }
}
