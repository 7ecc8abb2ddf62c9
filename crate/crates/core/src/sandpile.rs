//! Configurations of the abelian sandpile model on a Ferrers graph.
//!
//! The sink is always vertex `0` (the top row). A configuration stores one
//! height per non-sink vertex, indexed by vertex label: entry `k` of
//! [`Configuration::heights`] is the height of vertex `k + 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ferrers::FerrersGraph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    heights: Vec<u32>,
}

impl Configuration {
    pub fn new(heights: Vec<u32>) -> Self {
        Configuration { heights }
    }

    pub fn zeros(n: usize) -> Self {
        Configuration { heights: vec![0; n] }
    }

    /// Checks the length against `graph`.
    pub fn for_graph(graph: &FerrersGraph, heights: Vec<u32>) -> Result<Self> {
        let c = Configuration { heights };
        c.check_len(graph)?;
        Ok(c)
    }

    /// The maximal stable configuration, one grain short of toppling everywhere.
    pub fn max_stable(graph: &FerrersGraph) -> Self {
        Configuration {
            heights: (1..=graph.n()).map(|v| graph.degree(v) as u32 - 1).collect(),
        }
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn into_heights(self) -> Vec<u32> {
        self.heights
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// Height of non-sink vertex `v` (1-based label).
    pub fn get(&self, v: usize) -> u32 {
        self.heights[v - 1]
    }

    pub fn set(&mut self, v: usize, h: u32) {
        self.heights[v - 1] = h;
    }

    pub fn add(&mut self, v: usize, grains: u32) {
        self.heights[v - 1] += grains;
    }

    pub fn total(&self) -> u64 {
        self.heights.iter().map(|&h| h as u64).sum()
    }

    /// Entrywise `self + other`.
    pub fn plus(&self, other: &[u32]) -> Result<Configuration> {
        if other.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        Ok(Configuration {
            heights: self.heights.iter().zip(other).map(|(a, b)| a + b).collect(),
        })
    }

    /// Entrywise `self - other`, or `None` if some entry would go negative.
    pub fn minus(&self, other: &Configuration) -> Option<Vec<u32>> {
        self.heights
            .iter()
            .zip(&other.heights)
            .map(|(a, b)| a.checked_sub(*b))
            .collect()
    }

    /// `true` if every entry is at least the corresponding entry of `other`.
    pub fn dominates(&self, other: &Configuration) -> bool {
        self.len() == other.len() && self.heights.iter().zip(&other.heights).all(|(a, b)| a >= b)
    }

    pub(crate) fn check_len(&self, graph: &FerrersGraph) -> Result<()> {
        if self.len() != graph.n() {
            return Err(Error::LengthMismatch {
                expected: graph.n(),
                actual: self.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: Vec<String> = self.heights.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", h.join(","))
    }
}

impl FromStr for Configuration {
    type Err = Error;

    /// Accepts `0,0,1,2` with optional surrounding parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let heights = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("not a height: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Configuration { heights })
    }
}

/// Result of [`FerrersGraph::stabilize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilization {
    pub stable: Configuration,
    /// `topples[v]` counts the topplings of vertex `v`; index 0 is the sink and stays 0.
    pub topples: Vec<u64>,
    /// Vertices in the order they toppled, when tracing was requested.
    pub trace: Vec<usize>,
}

/// Successful run of the burning algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurningOrder {
    /// `0` followed by every other vertex, each exactly once.
    pub order: Vec<usize>,
}

impl FerrersGraph {
    pub fn is_unstable_at(&self, c: &Configuration, v: usize) -> bool {
        c.get(v) as usize >= self.degree(v)
    }

    pub fn is_stable(&self, c: &Configuration) -> bool {
        (1..=self.n()).all(|v| !self.is_unstable_at(c, v))
    }

    fn first_unstable(&self, c: &Configuration) -> Option<usize> {
        (1..=self.n()).find(|&v| self.is_unstable_at(c, v))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n() {
            return Err(Error::NoSuchVertex { vertex: v, n: self.n() });
        }
        Ok(())
    }

    /// Topples the unstable non-sink vertex `v`.
    pub fn topple(&self, c: &Configuration, v: usize) -> Result<Configuration> {
        c.check_len(self)?;
        self.check_vertex(v)?;
        if !self.is_unstable_at(c, v) {
            return Err(Error::StableVertex {
                vertex: v,
                height: c.get(v),
                degree: self.degree(v),
            });
        }
        let mut out = c.clone();
        self.topple_in_place(&mut out, v);
        Ok(out)
    }

    /// Topples the sink: every neighbor of `0` gains a grain.
    pub fn topple_sink(&self, c: &Configuration) -> Result<Configuration> {
        c.check_len(self)?;
        let mut out = c.clone();
        for &u in self.neighbors(0) {
            out.add(u, 1);
        }
        Ok(out)
    }

    fn topple_in_place(&self, c: &mut Configuration, v: usize) {
        let h = &mut c.heights[v - 1];
        *h -= self.degree(v) as u32;
        for &u in self.neighbors(v) {
            if u != 0 {
                c.heights[u - 1] += 1;
            }
        }
    }

    pub fn stabilize(&self, c: &Configuration) -> Result<Stabilization> {
        self.stabilize_impl(c, false)
    }

    /// As [`stabilize`](Self::stabilize), also recording each toppled vertex.
    pub fn stabilize_traced(&self, c: &Configuration) -> Result<Stabilization> {
        self.stabilize_impl(c, true)
    }

    fn stabilize_impl(&self, c: &Configuration, trace: bool) -> Result<Stabilization> {
        c.check_len(self)?;
        let mut cur = c.clone();
        let mut topples = vec![0u64; self.vertex_count()];
        let mut steps = Vec::new();
        let mut work: BTreeSet<usize> =
            (1..=self.n()).filter(|&v| self.is_unstable_at(&cur, v)).collect();
        while let Some(v) = work.pop_first() {
            self.topple_in_place(&mut cur, v);
            topples[v] += 1;
            if trace {
                steps.push(v);
            }
            if self.is_unstable_at(&cur, v) {
                work.insert(v);
            }
            for &u in self.neighbors(v) {
                if u != 0 && self.is_unstable_at(&cur, u) {
                    work.insert(u);
                }
            }
        }
        Ok(Stabilization {
            stable: cur,
            topples,
            trace: steps,
        })
    }

    /// Dhar's burning test.
    ///
    /// Topples the sink, then keeps toppling any vertex that has become
    /// unstable, each at most once. Returns the toppling order when every
    /// vertex burns, `None` otherwise.
    pub fn burning_order(&self, c: &Configuration) -> Result<Option<BurningOrder>> {
        c.check_len(self)?;
        if let Some(v) = self.first_unstable(c) {
            return Err(Error::Unstable { vertex: v });
        }
        let mut cur = self.topple_sink(c)?;
        let mut burnt = vec![false; self.vertex_count()];
        burnt[0] = true;
        let mut order = vec![0];
        let mut frontier: Vec<usize> = self.neighbors(0).to_vec();
        while let Some(v) = frontier.pop() {
            if burnt[v] || !self.is_unstable_at(&cur, v) {
                continue;
            }
            burnt[v] = true;
            order.push(v);
            self.topple_in_place(&mut cur, v);
            frontier.extend(self.neighbors(v).iter().filter(|&&u| !burnt[u]));
        }
        if order.len() == self.vertex_count() {
            debug_assert_eq!(&cur, c);
            Ok(Some(BurningOrder { order }))
        } else {
            Ok(None)
        }
    }

    pub fn is_recurrent(&self, c: &Configuration) -> Result<bool> {
        Ok(self.burning_order(c)?.is_some())
    }

    /// `sum(c) + deg(sink) - |E|`.
    pub fn level(&self, c: &Configuration) -> i64 {
        c.total() as i64 + self.degree(0) as i64 - self.edge_count() as i64
    }
}
