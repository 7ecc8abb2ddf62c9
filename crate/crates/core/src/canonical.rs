//! Canonical toppling of recurrent configurations, and the quantities read
//! off it: the minimal recurrent configuration with the same toppling and
//! the per-vertex decoration bounds `mu`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ferrers::FerrersGraph;
use crate::sandpile::Configuration;

/// Ordered set partition of `0..=n` into alternating row/column blocks.
///
/// Block 0 is `{0}`; odd-indexed blocks hold column labels, even-indexed
/// blocks row labels. Each block is stored in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalToppling {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl CanonicalToppling {
    pub(crate) fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Self {
        let n1: usize = blocks.iter().map(|b| b.len()).sum();
        let mut block_of = vec![usize::MAX; n1];
        for (k, b) in blocks.iter_mut().enumerate() {
            b.sort_unstable();
            for &v in b.iter() {
                block_of[v] = k;
            }
        }
        CanonicalToppling { blocks, block_of }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Vec<usize>> {
        self.blocks
    }

    /// Index of the block containing vertex `v`.
    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub(crate) fn block_index(&self) -> &[usize] {
        &self.block_of
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `true` if `a` topples strictly before `b`.
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.block_of[a] < self.block_of[b]
    }
}

impl fmt::Display for CanonicalToppling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let v: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", v.join(","))
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Grains owed to neighbors that topple later, given the side of every
/// label and its block index.
///
/// Shared by the configuration side (canonical toppling) and the
/// permutation side (run decomposition, where descent bottoms and `0` play
/// the role of rows).
pub(crate) fn minrec_from_blocks(is_row: &[bool], block_of: &[usize]) -> Vec<u32> {
    let n = is_row.len() - 1;
    (1..=n)
        .map(|j| {
            (0..=n)
                .filter(|&l| adjacent(is_row, j, l) && block_of[l] > block_of[j])
                .count() as u32
        })
        .collect()
}

pub(crate) fn mu_from_blocks(is_row: &[bool], block_of: &[usize]) -> Vec<u32> {
    let n = is_row.len() - 1;
    (1..=n)
        .map(|j| {
            (0..=n)
                .filter(|&l| adjacent(is_row, j, l) && block_of[l] + 1 == block_of[j])
                .count() as u32
        })
        .collect()
}

/// Neighbors of `j` in blocks before its own, i.e. the stable-decoration bound.
pub(crate) fn earlier_neighbors_from_blocks(is_row: &[bool], block_of: &[usize]) -> Vec<u32> {
    let n = is_row.len() - 1;
    (1..=n)
        .map(|j| {
            (0..=n)
                .filter(|&l| adjacent(is_row, j, l) && block_of[l] < block_of[j])
                .count() as u32
        })
        .collect()
}

#[inline]
pub(crate) fn adjacent(is_row: &[bool], a: usize, b: usize) -> bool {
    match (is_row[a], is_row[b]) {
        (true, false) => a < b,
        (false, true) => b < a,
        _ => false,
    }
}

impl FerrersGraph {
    pub(crate) fn row_mask(&self) -> Vec<bool> {
        (0..=self.n()).map(|v| self.labeling().is_row(v)).collect()
    }

    /// Topples the sink, then alternately topples every unstable column
    /// vertex and every unstable row vertex as one block each.
    ///
    /// Fails with [`Error::NotRecurrent`] if some vertex never topples.
    pub fn canon_top(&self, c: &Configuration) -> Result<CanonicalToppling> {
        c.check_len(self)?;
        if let Some(v) = (1..=self.n()).find(|&v| self.is_unstable_at(c, v)) {
            return Err(Error::Unstable { vertex: v });
        }
        let lab = self.labeling();
        let mut cur = self.topple_sink(c)?;
        let mut done = vec![false; self.vertex_count()];
        done[0] = true;
        let mut remaining = self.n();
        let mut blocks = vec![vec![0]];
        let mut side_cols = true;
        while remaining > 0 {
            let candidates = if side_cols { lab.cols() } else { lab.rows() };
            let block: Vec<usize> = candidates
                .iter()
                .copied()
                .filter(|&v| !done[v] && self.is_unstable_at(&cur, v))
                .collect();
            if block.is_empty() {
                return Err(Error::NotRecurrent);
            }
            for &v in &block {
                done[v] = true;
                let h = cur.get(v) - self.degree(v) as u32;
                cur.set(v, h);
                for &u in self.neighbors(v) {
                    if u != 0 {
                        cur.add(u, 1);
                    }
                }
            }
            remaining -= block.len();
            blocks.push(block);
            side_cols = !side_cols;
        }
        debug_assert_eq!(&cur, c);
        Ok(CanonicalToppling::from_blocks(blocks))
    }

    /// The minimal recurrent configuration sharing `c`'s canonical toppling.
    ///
    /// Each vertex gets one grain per neighbor that topples after it.
    pub fn minrec(&self, c: &Configuration) -> Result<Configuration> {
        let ct = self.canon_top(c)?;
        Ok(self.minrec_of(&ct))
    }

    pub(crate) fn minrec_of(&self, ct: &CanonicalToppling) -> Configuration {
        Configuration::new(minrec_from_blocks(&self.row_mask(), ct.block_index()))
    }

    pub fn is_minimal_recurrent(&self, c: &Configuration) -> Result<bool> {
        match self.minrec(c) {
            Ok(m) => Ok(&m == c),
            Err(Error::NotRecurrent) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Number of neighbors of each vertex in the block just before its own.
    ///
    /// Entry `k` belongs to vertex `k + 1`. Depends only on the canonical
    /// toppling, so any recurrent configuration is accepted.
    pub fn mu(&self, c: &Configuration) -> Result<Vec<u32>> {
        let ct = self.canon_top(c)?;
        Ok(mu_from_blocks(&self.row_mask(), ct.block_index()))
    }
}
