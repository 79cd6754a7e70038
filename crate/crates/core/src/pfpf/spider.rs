use super::{class_witness, PfpfInstance};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexColoring};
use crate::perm::Permutation;

/// Spider structure: legs `S` (independent), body `K` (clique), head `R`.
/// `legs[i]` is paired with `body[i]`, i.e. `f(legs[i]) = body[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpiderDecomposition {
    pub legs: Vec<usize>,
    pub body: Vec<usize>,
    pub head: Vec<usize>,
    /// Thin: each leg sees only its own knee. Thick: each leg sees every knee but its own.
    pub thin: bool,
}

impl SpiderDecomposition {
    /// Checks every spider axiom against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let bad = |msg: String| Err(Error::BadSpider(msg));
        let k = self.body.len();
        if self.legs.len() != k || k < 2 {
            return bad(format!(
                "|S| = {}, |K| = {k}; need equal sizes of at least 2",
                self.legs.len()
            ));
        }
        let mut seen = vec![false; n];
        for &v in self.legs.iter().chain(&self.body).chain(&self.head) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return bad(format!("vertex {v} listed twice"));
            }
        }
        if seen.iter().any(|&s| !s) {
            return bad("S, K and R do not cover the graph".into());
        }
        for (i, &s) in self.legs.iter().enumerate() {
            for (j, &s2) in self.legs.iter().enumerate() {
                if i < j && g.has_edge(s, s2) {
                    return bad(format!("legs {s} and {s2} adjacent"));
                }
            }
            for (j, &kv) in self.body.iter().enumerate() {
                let want = (i == j) == self.thin;
                if g.has_edge(s, kv) != want {
                    return bad(format!("leg {s} and knee {kv} break the thin/thick rule"));
                }
            }
            if self.head.iter().any(|&h| g.has_edge(s, h)) {
                return bad(format!("leg {s} adjacent to the head"));
            }
        }
        for (i, &a) in self.body.iter().enumerate() {
            for &b in &self.body[i + 1..] {
                if !g.has_edge(a, b) {
                    return bad(format!("knees {a} and {b} not adjacent"));
                }
            }
            if self.head.iter().any(|&h| !g.has_edge(a, h)) {
                return bad(format!("knee {a} misses part of the head"));
            }
        }
        Ok(())
    }
}

/// Spider structure with an arbitrary head; `None` if `g` is not a spider.
pub(crate) fn spider_partition(g: &Graph) -> Option<SpiderDecomposition> {
    thin_spider(g).or_else(|| thick_spider(g))
}

fn thin_spider(g: &Graph) -> Option<SpiderDecomposition> {
    let n = g.n();
    let legs: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    let k = legs.len();
    if k < 2 || 2 * k > n {
        return None;
    }
    let mut is_body = vec![false; n];
    let mut body = Vec::with_capacity(k);
    for &s in &legs {
        let kv = g.neighbors(s)[0];
        if g.degree(kv) == 1 || std::mem::replace(&mut is_body[kv], true) {
            return None;
        }
        body.push(kv);
    }
    let head_size = n - 2 * k;
    // A knee sees the other knees, its leg, and the whole head.
    for &kv in &body {
        if g.degree(kv) != k + head_size {
            return None;
        }
        if g.neighbors(kv).iter().filter(|&&u| is_body[u]).count() != k - 1 {
            return None;
        }
    }
    let mut is_leg = vec![false; n];
    for &s in &legs {
        is_leg[s] = true;
    }
    let head = (0..n).filter(|&v| !is_leg[v] && !is_body[v]).collect();
    Some(SpiderDecomposition {
        legs,
        body,
        head,
        thin: true,
    })
}

fn thick_spider(g: &Graph) -> Option<SpiderDecomposition> {
    let n = g.n();
    if n < 6 {
        // |K| = 2 is already thin.
        return None;
    }
    let body: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 2).collect();
    let k = body.len();
    if k < 3 || 2 * k > n {
        return None;
    }
    let mut is_body = vec![false; n];
    for &kv in &body {
        is_body[kv] = true;
    }
    let mut is_leg = vec![false; n];
    let mut legs = Vec::with_capacity(k);
    for &kv in &body {
        // The unique non-neighbor of kv other than itself.
        let s = n * (n - 1) / 2 - kv - g.neighbors(kv).iter().sum::<usize>();
        if is_body[s] || std::mem::replace(&mut is_leg[s], true) {
            return None;
        }
        legs.push(s);
    }
    for &s in &legs {
        if g.degree(s) != k - 1 {
            return None;
        }
    }
    let head = (0..n).filter(|&v| !is_leg[v] && !is_body[v]).collect();
    Some(SpiderDecomposition {
        legs,
        body,
        head,
        thin: false,
    })
}

/// The spider decomposition of `g` when `g` is a spider with at most one head vertex.
pub fn recognize_spider(g: &Graph) -> Option<SpiderDecomposition> {
    spider_partition(g).filter(|sd| sd.head.len() <= 1)
}

/// PFPF on a spider: reduce to the body clique with colors `(c(k), c(f^-1(k)))`
/// and mask `b(k) & b(f^-1(k))`, then move each leg with its knee.
pub fn pfpf_spider(inst: &PfpfInstance, sd: &SpiderDecomposition) -> Result<Option<Permutation>> {
    inst.validate()?;
    sd.validate(&inst.graph)?;
    if sd.head.len() > 1 {
        return Err(Error::BadSpider(format!("head has {} vertices", sd.head.len())));
    }
    if sd.head.iter().any(|&h| !inst.mask.allows(h)) {
        return Ok(None);
    }
    let c = &inst.coloring;
    let pairs: Vec<(u32, u32)> = sd
        .body
        .iter()
        .zip(&sd.legs)
        .map(|(&k, &s)| (c.color(k), c.color(s)))
        .collect();
    let colors = VertexColoring::from_values(&pairs);
    let mask: Vec<bool> = sd
        .body
        .iter()
        .zip(&sd.legs)
        .map(|(&k, &s)| inst.mask.allows(k) && inst.mask.allows(s))
        .collect();
    let Some(sigma) = class_witness(&colors, &mask, inst.mode) else {
        return Ok(None);
    };
    let mut image: Vec<usize> = (0..inst.n()).collect();
    for (i, &j) in sigma.iter().enumerate() {
        image[sd.body[i]] = sd.body[j];
        image[sd.legs[i]] = sd.legs[j];
    }
    Permutation::from_images(image).map(Some)
}
