//! Stabilization carried out on decorated permutations.
//!
//! The state is an ordered list of blocks `{0}, A1, D1, A2, ...` together
//! with a decoration per letter. It encodes the configuration
//! `minrec(blocks) + a`, and every step below keeps that encoding in step
//! with the sandpile:
//!
//! * a letter outside the first two blocks whose decoration reaches its
//!   bound `mu` is unsettled. It moves two blocks to the left, its
//!   decoration drops by `mu`, and each neighbor it jumps over gains one.
//! * a letter in `A1` or `D1` whose decoration reaches `mu` is unstable.
//!   Toppling it credits one to every neighbor on its left, lowers its own
//!   decoration by `mu` and moves it just past its last neighbor. If `D1`
//!   empties, `A1` and `A2` merge.

use std::fmt;

use crate::canonical::{adjacent, minrec_from_blocks};
use crate::error::{Error, Result};
use crate::ferrers::FerrersGraph;
use crate::perm::{DecoratedPermutation, Permutation};
use crate::sandpile::Configuration;
use crate::tableau::enumerate_tableaux;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    Settle { letter: usize, from: usize, to: usize },
    Topple { letter: usize },
}

/// One step of the run and the state it leaves behind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub kind: StepKind,
    pub state: PermState,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            StepKind::Settle { letter, from, to } => {
                write!(f, "settle {letter} (block {from} -> {to}): {}", self.state)
            }
            StepKind::Topple { letter } => write!(f, "topple {letter}: {}", self.state),
        }
    }
}

/// Blocks in listing order plus decorations; blocks may be empty mid-run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermState {
    is_row: Vec<bool>,
    blocks: Vec<Vec<usize>>,
    a: Vec<u32>,
}

impl PermState {
    pub fn from_decorated(d: &DecoratedPermutation) -> Self {
        PermState {
            is_row: d.perm().descent_mask(),
            blocks: d.perm().run_decomposition().runs().to_vec(),
            a: d.decorations().to_vec(),
        }
    }

    /// Blocks including `{0}`, letters in listing order.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn decorations(&self) -> &[u32] {
        &self.a
    }

    fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.is_row.len()];
        for (k, b) in self.blocks.iter().enumerate() {
            for &l in b {
                out[l] = k;
            }
        }
        out
    }

    /// The configuration this state encodes.
    pub fn configuration(&self) -> Configuration {
        let r = minrec_from_blocks(&self.is_row, &self.block_of());
        Configuration::new(r.iter().zip(&self.a).map(|(r, a)| r + a).collect())
    }

    fn neighbors_in(&self, l: usize, block: usize) -> impl Iterator<Item = usize> + '_ {
        self.blocks[block]
            .iter()
            .copied()
            .filter(move |&m| adjacent(&self.is_row, l, m))
    }

    fn mu(&self, l: usize, block: usize) -> u32 {
        if block == 0 {
            return 0;
        }
        self.neighbors_in(l, block - 1).count() as u32
    }

    fn insert(&mut self, l: usize, block: usize) {
        while self.blocks.len() <= block {
            self.blocks.push(Vec::new());
        }
        let descending = block.is_multiple_of(2);
        let b = &mut self.blocks[block];
        let at = b
            .iter()
            .position(|&m| if descending { m < l } else { m > l })
            .unwrap_or(b.len());
        b.insert(at, l);
    }

    fn remove(&mut self, l: usize, block: usize) {
        self.blocks[block].retain(|&m| m != l);
    }

    fn trim(&mut self) {
        while self.blocks.last().is_some_and(|b| b.is_empty()) {
            self.blocks.pop();
        }
    }

    /// Leftmost letter outside the first two blocks whose decoration reaches `mu`.
    fn first_unsettled(&self) -> Option<(usize, usize)> {
        (3..self.blocks.len()).find_map(|k| {
            self.blocks[k]
                .iter()
                .find(|&&l| self.a[l - 1] >= self.mu(l, k))
                .map(|&l| (l, k))
        })
    }

    fn unstable(&self) -> Vec<usize> {
        (1..self.blocks.len().min(3))
            .flat_map(|k| {
                self.blocks[k]
                    .iter()
                    .copied()
                    .filter(move |&l| self.a[l - 1] >= self.mu(l, k))
            })
            .collect()
    }

    fn settle(&mut self, y: usize, k: usize) {
        let mu = self.mu(y, k);
        let jumped: Vec<usize> = self.neighbors_in(y, k - 1).collect();
        for z in jumped {
            self.a[z - 1] += 1;
        }
        self.a[y - 1] -= mu;
        self.remove(y, k);
        self.insert(y, k - 2);
        self.trim();
    }

    fn topple(&mut self, x: usize) {
        let block_of = self.block_of();
        let k = block_of[x];
        let mu = self.mu(x, k);
        let mut last = 0;
        for (m, &bm) in block_of.iter().enumerate() {
            if adjacent(&self.is_row, x, m) {
                if bm < k && m != 0 {
                    self.a[m - 1] += 1;
                }
                last = last.max(bm);
            }
        }
        self.a[x - 1] = self.a[x - 1]
            .checked_sub(mu)
            .expect("an unstable letter carries at least mu");
        self.remove(x, k);
        self.insert(x, last + 1);
        if self.blocks.len() > 2 && self.blocks[2].is_empty() {
            let a2 = if self.blocks.len() > 3 { self.blocks.remove(3) } else { Vec::new() };
            self.blocks.remove(2);
            for l in a2 {
                self.insert(l, 1);
            }
        }
        self.trim();
    }

    fn position_of(&self) -> Vec<usize> {
        let mut pos = vec![0; self.is_row.len()];
        for (p, &l) in self.blocks.iter().flatten().enumerate() {
            pos[l] = p;
        }
        pos
    }

    fn to_decorated(&self) -> DecoratedPermutation {
        let perm = Permutation::from_blocks(&self.blocks);
        debug_assert_eq!(perm.run_decomposition().runs(), &self.blocks[..]);
        DecoratedPermutation::new(perm, self.a.clone()).expect("lengths agree")
    }
}

impl fmt::Display for PermState {
    /// Like the decorated permutation text, with `∅` for an empty block.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks[1..]
            .iter()
            .map(|b| {
                if b.is_empty() {
                    "∅".to_string()
                } else {
                    b.iter()
                        .map(|&l| format!("{l}^{}", self.a[l - 1]))
                        .collect::<Vec<_>>()
                        .join(" ")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" - "))
    }
}

/// Runs the stabilization on a decorated permutation with arbitrary
/// decorations and returns the canonical result with every step taken.
pub fn stabilize_perm(d: &DecoratedPermutation) -> (DecoratedPermutation, Vec<TraceStep>) {
    let mut s = PermState::from_decorated(d);
    let mut trace = Vec::new();
    loop {
        while let Some((y, k)) = s.first_unsettled() {
            s.settle(y, k);
            trace.push(TraceStep {
                kind: StepKind::Settle { letter: y, from: k, to: k - 2 },
                state: s.clone(),
            });
        }
        let mut u = s.unstable();
        if u.is_empty() {
            return (s.to_decorated(), trace);
        }
        while !u.is_empty() {
            let pos = s.position_of();
            let (i, &x) = u
                .iter()
                .enumerate()
                .min_by_key(|&(_, &l)| pos[l])
                .expect("nonempty");
            u.remove(i);
            s.topple(x);
            trace.push(TraceStep {
                kind: StepKind::Topple { letter: x },
                state: s.clone(),
            });
        }
    }
}

impl FerrersGraph {
    /// A decorated permutation encoding `c`: the first tableau, in
    /// enumeration order, whose minimal recurrent configuration lies below
    /// `c`, with the difference as decorations.
    pub fn encode_as_permutation(&self, c: &Configuration) -> Result<DecoratedPermutation> {
        c.check_len(self)?;
        for t in enumerate_tableaux(self.diagram()) {
            if let Some(a) = c.minus(&t.phi_tc()) {
                return DecoratedPermutation::new(t.to_permutation(), a);
            }
        }
        Err(Error::NoMinimalBelow)
    }
}
