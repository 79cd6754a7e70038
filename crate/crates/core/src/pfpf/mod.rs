//! Partially fixed-point-free automorphisms and involutions (PFPF): colored
//! instances where a vertex may be fixed only if its mask bit is set.
//!
//! One solver per quotient family; [`classify`] picks the family and
//! [`solve_tagged`] dispatches.

mod brute;
mod complete;
mod spider;
mod tree;

pub use brute::pfpf_bruteforce;
pub use complete::pfpf_complete_or_empty;
pub use spider::{pfpf_spider, recognize_spider, SpiderDecomposition};
pub use tree::{pfpf_co_tree, pfpf_tree};

pub(crate) use complete::class_witness;
pub(crate) use spider::spider_partition;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{BooleanMask, Graph, VertexColoring};
use crate::perm::Permutation;

/// Which kind of witness is sought.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    #[default]
    Automorphism,
    Involution,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Automorphism => "aut",
            Mode::Involution => "inv",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "aut" | "automorphism" => Ok(Mode::Automorphism),
            "inv" | "involution" => Ok(Mode::Involution),
            _ => Err(Error::Precondition(format!("unknown mode {s:?}"))),
        }
    }
}

/// A graph with a coloring and a mask of vertices allowed to stay fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfpfInstance {
    pub graph: Graph,
    pub coloring: VertexColoring,
    pub mask: BooleanMask,
    pub mode: Mode,
}

impl PfpfInstance {
    pub fn new(graph: Graph, coloring: VertexColoring, mask: BooleanMask, mode: Mode) -> Result<Self> {
        let inst = PfpfInstance {
            graph,
            coloring,
            mask,
            mode,
        };
        inst.validate()?;
        Ok(inst)
    }

    /// Uniform coloring and all-zero mask: the plain FPF question.
    pub fn plain(graph: Graph, mode: Mode) -> Result<Self> {
        let n = graph.n();
        Self::new(graph, VertexColoring::uniform(n), BooleanMask::all(n, false), mode)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.graph.n();
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        if self.coloring.len() != n {
            return Err(Error::InstanceMismatch(format!(
                "coloring has {} entries, graph has {n} vertices",
                self.coloring.len()
            )));
        }
        if self.mask.len() != n {
            return Err(Error::InstanceMismatch(format!(
                "mask has {} entries, graph has {n} vertices",
                self.mask.len()
            )));
        }
        Ok(())
    }

    /// The same instance on the complement graph.
    pub fn complement(&self) -> PfpfInstance {
        PfpfInstance {
            graph: self.graph.complement(),
            ..self.clone()
        }
    }

    /// True iff `p` is a color-preserving automorphism fixing only masked
    /// vertices, and an involution in involution mode.
    pub fn is_witness(&self, p: &Permutation) -> bool {
        p.len() == self.n()
            && self.graph.is_automorphism(p)
            && (0..self.n()).all(|v| {
                let w = p.apply(v);
                self.coloring.color(v) == self.coloring.color(w) && (w != v || self.mask.allows(v))
            })
            && (self.mode == Mode::Automorphism || p.is_involution())
    }
}

/// Quotient families the engine knows how to solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuotientClassTag {
    Complete,
    Edgeless,
    Tree,
    CoTree,
    Spider,
    SmallPrime,
    Unsupported,
}

impl QuotientClassTag {
    /// One-letter code used inside canonical strings.
    pub fn letter(self) -> char {
        match self {
            QuotientClassTag::Complete => 'K',
            QuotientClassTag::Edgeless => 'E',
            QuotientClassTag::Tree => 'T',
            QuotientClassTag::CoTree => 'C',
            QuotientClassTag::Spider => 'S',
            QuotientClassTag::SmallPrime => 'B',
            QuotientClassTag::Unsupported => 'X',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            QuotientClassTag::Complete => "complete",
            QuotientClassTag::Edgeless => "edgeless",
            QuotientClassTag::Tree => "tree",
            QuotientClassTag::CoTree => "co-tree",
            QuotientClassTag::Spider => "spider",
            QuotientClassTag::SmallPrime => "small-prime",
            QuotientClassTag::Unsupported => "unsupported",
        }
    }
}

impl fmt::Display for QuotientClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// True iff the complement of `g` is a tree, without building the complement
/// unless the edge count already matches.
pub(crate) fn is_co_tree(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return false;
    }
    let total = n * (n - 1) / 2;
    g.edge_count() + (n - 1) == total && g.complement().is_tree()
}

/// Picks the first matching family in the order edgeless, complete, tree,
/// co-tree, spider, small prime.
pub fn classify(q: &Graph, prime_cap: usize) -> (QuotientClassTag, Option<SpiderDecomposition>) {
    if q.is_edgeless() {
        (QuotientClassTag::Edgeless, None)
    } else if q.is_complete() {
        (QuotientClassTag::Complete, None)
    } else if q.is_tree() {
        (QuotientClassTag::Tree, None)
    } else if is_co_tree(q) {
        (QuotientClassTag::CoTree, None)
    } else if let Some(sd) = recognize_spider(q) {
        (QuotientClassTag::Spider, Some(sd))
    } else if q.n() <= prime_cap {
        (QuotientClassTag::SmallPrime, None)
    } else {
        (QuotientClassTag::Unsupported, None)
    }
}

/// Solves `inst` with the solver matching `tag`.
pub fn solve_tagged(
    inst: &PfpfInstance,
    tag: QuotientClassTag,
    spider: Option<&SpiderDecomposition>,
    prime_cap: usize,
) -> Result<Option<Permutation>> {
    match tag {
        QuotientClassTag::Complete | QuotientClassTag::Edgeless => pfpf_complete_or_empty(inst),
        QuotientClassTag::Tree => pfpf_tree(inst, None),
        QuotientClassTag::CoTree => pfpf_co_tree(inst),
        QuotientClassTag::Spider => match spider {
            Some(sd) => pfpf_spider(inst, sd),
            None => match recognize_spider(&inst.graph) {
                Some(sd) => pfpf_spider(inst, &sd),
                None => Err(Error::BadSpider("graph is not a spider".into())),
            },
        },
        QuotientClassTag::SmallPrime => pfpf_bruteforce(inst, prime_cap),
        QuotientClassTag::Unsupported => Err(Error::Unsupported {
            module_size: inst.n(),
            quotient_size: inst.n(),
            cap: prime_cap,
        }),
    }
}

/// Classifies and solves in one call.
pub fn pfpf_solve(inst: &PfpfInstance, prime_cap: usize) -> Result<Option<Permutation>> {
    inst.validate()?;
    let (tag, sd) = classify(&inst.graph, prime_cap);
    solve_tagged(inst, tag, sd.as_ref(), prime_cap)
}
