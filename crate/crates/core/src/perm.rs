//! Permutations, run decompositions and decorated permutations.
//!
//! The run decomposition of `pi` splits `0 pi_1 ... pi_n` into `{0}`
//! followed by maximal runs of ascent tops and descent bottoms. Its blocks
//! are exactly the canonical toppling blocks of the matching tableau, with
//! descent bottoms playing the rows and ascent tops the columns.

use std::fmt;
use std::str::FromStr;

use crate::canonical::{earlier_neighbors_from_blocks, minrec_from_blocks, mu_from_blocks, CanonicalToppling};
use crate::decorated::DecoratedTableau;
use crate::error::{Error, Result};
use crate::ferrers::{FerrersDiagram, FerrersGraph};
use crate::sandpile::Configuration;
use crate::tableau::EWTableau;

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &l in &letters {
            if l == 0 || l > n {
                return Err(Error::InvalidPermutation(format!("letter {l} outside 1..={n}")));
            }
            if seen[l] {
                return Err(Error::InvalidPermutation(format!("letter {l} repeated")));
            }
            seen[l] = true;
        }
        Ok(Permutation(letters))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `is_descent[l]` for every letter `l` in `0..=n`; `0` counts as a descent bottom.
    pub(crate) fn descent_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.len() + 1];
        mask[0] = true;
        let mut prev = 0;
        for &l in &self.0 {
            mask[l] = l < prev;
            prev = l;
        }
        mask
    }

    /// Letters smaller than their left neighbor, sorted.
    pub fn descent_bottoms(&self) -> Vec<usize> {
        let mask = self.descent_mask();
        (1..=self.len()).filter(|&l| mask[l]).collect()
    }

    /// The diagram whose row labels are `{0}` and the descent bottoms.
    pub fn shape(&self) -> Result<FerrersDiagram> {
        FerrersDiagram::from_row_labels(self.len(), &self.descent_bottoms())
    }

    pub fn run_decomposition(&self) -> RunDecomposition {
        let mask = self.descent_mask();
        let mut blocks: Vec<Vec<usize>> = vec![vec![0]];
        for &l in &self.0 {
            let last = blocks.last_mut().expect("nonempty");
            if mask[last[0]] == mask[l] && last[0] != 0 {
                last.push(l);
            } else {
                blocks.push(vec![l]);
            }
        }
        RunDecomposition { blocks }
    }

    /// Position of every letter, with `0` at position `0` and `pi_k` at `k`.
    pub(crate) fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len() + 1];
        for (k, &l) in self.0.iter().enumerate() {
            pos[l] = k + 1;
        }
        pos
    }

    /// Lists the blocks of a canonical toppling, columns increasing and rows decreasing.
    pub(crate) fn from_blocks(blocks: &[Vec<usize>]) -> Self {
        let mut letters = Vec::new();
        for (k, b) in blocks.iter().enumerate().skip(1) {
            let mut b = b.clone();
            if k % 2 == 0 {
                b.sort_unstable_by(|x, y| y.cmp(x));
            } else {
                b.sort_unstable();
            }
            letters.extend(b);
        }
        Permutation(letters)
    }
}

impl fmt::Display for Permutation {
    /// Digits run together when every letter is below 10, otherwise space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() < 10 { "" } else { " " };
        let s: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `12738645` or `1 2 7 3` / `1,2,7,3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = if s.contains(|c: char| c == ',' || c.is_whitespace()) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("not a letter: {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("not a digit: {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(letters)
    }
}

/// Blocks `{0}, A1, D1, A2, ...` in the order they appear; each block is
/// stored as a set in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RunDecomposition {
    blocks: Vec<Vec<usize>>,
}

impl RunDecomposition {
    /// Blocks as sorted sets.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| {
                let mut b = b.clone();
                b.sort_unstable();
                b
            })
            .collect()
    }

    /// Blocks with letters in the order they appear in the permutation.
    pub fn runs(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self) -> Vec<usize> {
        let n1: usize = self.blocks.iter().map(|b| b.len()).sum();
        let mut out = vec![0; n1];
        for (k, b) in self.blocks.iter().enumerate() {
            for &l in b {
                out[l] = k;
            }
        }
        out
    }

    pub fn to_toppling(&self) -> CanonicalToppling {
        CanonicalToppling::from_blocks(self.blocks())
    }
}

impl fmt::Display for RunDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "{}", parts.join("-"))
    }
}

impl EWTableau {
    /// The permutation listing the canonical toppling blocks, columns
    /// increasing and rows decreasing.
    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_blocks(self.canon_top().blocks())
    }

    /// Inverse of [`to_permutation`](Self::to_permutation): cell `(i, j)`
    /// holds `1` exactly when `i` comes before `j` (the row `0` comes first).
    pub fn from_permutation(perm: &Permutation, shape: &FerrersDiagram) -> Result<Self> {
        if perm.len() != shape.size() {
            return Err(Error::LengthMismatch {
                expected: shape.size(),
                actual: perm.len(),
            });
        }
        let lab = shape.labeling();
        let expected = lab.rows()[1..].to_vec();
        let actual = perm.descent_bottoms();
        if expected != actual {
            return Err(Error::DescentMismatch { expected, actual });
        }
        let pos = perm.positions();
        let rows: Vec<Vec<bool>> = lab
            .rows()
            .iter()
            .enumerate()
            .map(|(r, &i)| lab.cols()[..shape.parts()[r]].iter().map(|&j| pos[i] < pos[j]).collect())
            .collect();
        Ok(EWTableau::from_rows_unchecked(shape.clone(), &rows))
    }
}

impl FerrersGraph {
    /// The permutation of a minimal recurrent configuration.
    pub fn zeta(&self, c: &Configuration) -> Result<Permutation> {
        let ct = self.canon_top(c)?;
        if self.minrec_of(&ct) != *c {
            return Err(Error::NotMinimal);
        }
        Ok(Permutation::from_blocks(ct.blocks()))
    }

    /// The canonical decorated permutation of a recurrent configuration.
    pub fn decorated_permutation(&self, c: &Configuration) -> Result<DecoratedPermutation> {
        Ok(DecoratedPermutation::from_tableau(&self.psi(c)?))
    }
}

/// A permutation with one decoration per letter: `decorations[l - 1]` belongs to letter `l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPermutation {
    perm: Permutation,
    decorations: Vec<u32>,
}

impl DecoratedPermutation {
    /// Pairs a permutation with arbitrary decorations; only the length is checked.
    pub fn new(perm: Permutation, decorations: Vec<u32>) -> Result<Self> {
        if decorations.len() != perm.len() {
            return Err(Error::LengthMismatch {
                expected: perm.len(),
                actual: decorations.len(),
            });
        }
        Ok(DecoratedPermutation { perm, decorations })
    }

    pub fn undecorated(perm: Permutation) -> Self {
        let n = perm.len();
        DecoratedPermutation {
            perm,
            decorations: vec![0; n],
        }
    }

    pub fn from_tableau(d: &DecoratedTableau) -> Self {
        DecoratedPermutation {
            perm: d.tableau().to_permutation(),
            decorations: d.decorations().to_vec(),
        }
    }

    pub fn to_tableau(&self) -> Result<DecoratedTableau> {
        let shape = self.perm.shape()?;
        DecoratedTableau::new(EWTableau::from_permutation(&self.perm, &shape)?, self.decorations.clone())
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn decorations(&self) -> &[u32] {
        &self.decorations
    }

    /// Decoration of letter `l`.
    pub fn get(&self, l: usize) -> u32 {
        self.decorations[l - 1]
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    fn block_data(&self) -> (Vec<bool>, Vec<usize>) {
        (self.perm.descent_mask(), self.perm.run_decomposition().block_of())
    }

    /// Canonical bounds: neighbors in the block just before each letter.
    pub fn mu(&self) -> Vec<u32> {
        let (rows, block_of) = self.block_data();
        mu_from_blocks(&rows, &block_of)
    }

    /// Stable bounds: neighbors in all earlier blocks.
    pub fn stable_bounds(&self) -> Vec<u32> {
        let (rows, block_of) = self.block_data();
        earlier_neighbors_from_blocks(&rows, &block_of)
    }

    pub fn is_stable(&self) -> bool {
        self.decorations.iter().zip(self.stable_bounds()).all(|(&a, b)| a < b)
    }

    pub fn is_canonical(&self) -> bool {
        self.decorations.iter().zip(self.mu()).all(|(&a, b)| a < b)
    }

    /// Names the first letter whose decoration reaches its bound `mu`.
    pub fn check_canonical(&self) -> Result<()> {
        first_violation(&self.decorations, &self.mu())
    }

    /// Minimal recurrent configuration of the permutation, ignoring the decorations.
    pub fn minrec(&self) -> Configuration {
        minrec_of_permutation(&self.perm)
    }

    /// The encoded configuration: minimal recurrent plus decorations.
    pub fn to_configuration(&self) -> Configuration {
        self.minrec().plus(&self.decorations).expect("lengths agree")
    }

    /// Every canonical decoration of `perm`, in lexicographic order.
    pub fn all_canonical(perm: &Permutation) -> Vec<DecoratedPermutation> {
        let mu = DecoratedPermutation::undecorated(perm.clone()).mu();
        let mut out = Vec::new();
        let mut a = vec![0u32; mu.len()];
        if mu.contains(&0) {
            return out;
        }
        loop {
            out.push(DecoratedPermutation {
                perm: perm.clone(),
                decorations: a.clone(),
            });
            let mut k = a.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                a[k] += 1;
                if a[k] < mu[k] {
                    break;
                }
                a[k] = 0;
            }
        }
    }
}

/// Grains owed by each letter to neighbors in later blocks.
pub fn minrec_of_permutation(perm: &Permutation) -> Configuration {
    let rows = perm.descent_mask();
    let block_of = perm.run_decomposition().block_of();
    Configuration::new(minrec_from_blocks(&rows, &block_of))
}

/// Blocks separated by ` - `, letters written `l^a`; the `0` block is left out.
impl fmt::Display for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rd = self.perm.run_decomposition();
        let parts: Vec<String> = rd.runs()[1..]
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&l| format!("{l}^{}", self.get(l)))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", parts.join(" - "))
    }
}

impl FromStr for DecoratedPermutation {
    type Err = Error;

    /// Parses the caret form, e.g. `3^0 5^0 8^0 - 7^0 1^2`. A leading `0`
    /// block (`0`, `0^` or `0^∅`) is allowed. When dashes are present they
    /// must match the run decomposition. A bare permutation such as
    /// `12738645` reads as zero decorations.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if !s.contains('^') {
            return Ok(DecoratedPermutation::undecorated(s.parse()?));
        }
        let mut groups: Vec<Vec<(usize, u32)>> = Vec::new();
        let mut dashed = false;
        for (g, chunk) in s.split('-').enumerate() {
            dashed |= g > 0;
            let mut group = Vec::new();
            for tok in chunk.split_whitespace() {
                let (l, a) = if tok == "0" { Some(("0", "")) } else { tok.split_once('^') }
                    .ok_or_else(|| Error::Parse(format!("expected letter^decoration, got {tok:?}")))?;
                let l: usize = l
                    .parse()
                    .map_err(|_| Error::Parse(format!("not a letter: {l:?}")))?;
                if l == 0 {
                    if g != 0 || !group.is_empty() || !matches!(a, "" | "∅") {
                        return Err(Error::Parse("0 may only open the first block".into()));
                    }
                    continue;
                }
                let a: u32 = a
                    .parse()
                    .map_err(|_| Error::Parse(format!("not a decoration: {a:?}")))?;
                group.push((l, a));
            }
            groups.push(group);
        }
        if groups.first().is_some_and(|g| g.is_empty()) {
            groups.remove(0);
        }
        let letters: Vec<usize> = groups.iter().flatten().map(|&(l, _)| l).collect();
        let perm = Permutation::new(letters)?;
        let mut decorations = vec![0; perm.len()];
        for &(l, a) in groups.iter().flatten() {
            decorations[l - 1] = a;
        }
        if dashed {
            let given: Vec<Vec<usize>> =
                groups.iter().map(|g| g.iter().map(|&(l, _)| l).collect()).collect();
            if given.iter().any(|g| g.is_empty()) || given[..] != perm.run_decomposition().runs()[1..] {
                return Err(Error::InvalidPermutation(format!(
                    "dashes do not match the run decomposition {}",
                    perm.run_decomposition()
                )));
            }
        }
        DecoratedPermutation::new(perm, decorations)
    }
}

/// First vertex `v` with `a[v - 1] >= bound[v - 1]`, as an error.
pub(crate) fn first_violation(a: &[u32], bound: &[u32]) -> Result<()> {
    match a.iter().zip(bound).position(|(a, b)| a >= b) {
        Some(k) => Err(Error::DecorationOutOfRange {
            letter: k + 1,
            value: a[k],
            bound: bound[k],
        }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn dperm(s: &str) -> DecoratedPermutation {
        s.parse().unwrap()
    }

    fn sets(b: &[&[usize]]) -> Vec<Vec<usize>> {
        b.iter().map(|x| x.to_vec()).collect()
    }

    #[test]
    fn run_decompositions() {
        let rd = perm("12738645").run_decomposition();
        assert_eq!(rd.to_string(), "0-127-3-8-64-5");
        assert_eq!(rd.blocks(), sets(&[&[0], &[1, 2, 7], &[3], &[8], &[4, 6], &[5]]));
        let rd = perm("358714962").run_decomposition();
        assert_eq!(rd.blocks(), sets(&[&[0], &[3, 5, 8], &[1, 7], &[4, 9], &[2, 6]]));
        assert_eq!(Permutation::identity(4).run_decomposition().blocks(), sets(&[&[0], &[1, 2, 3, 4]]));
    }

    #[test]
    fn zeta_examples() {
        let g = FerrersDiagram::new(vec![5, 3, 3, 2]).unwrap().graph();
        let c = Configuration::new(vec![0, 0, 2, 1, 0, 0, 3, 2]);
        assert_eq!(g.zeta(&c).unwrap(), perm("12738645"));
        let g = FerrersDiagram::new(vec![1]).unwrap().graph();
        assert_eq!(g.zeta(&Configuration::new(vec![0])).unwrap(), perm("1"));
        let g = FerrersDiagram::new(vec![3, 2, 1]).unwrap().graph();
        let p = g.zeta(&Configuration::new(vec![0, 0, 1, 0, 2])).unwrap();
        assert_eq!(p, perm("13542"));
        assert_eq!(p.descent_bottoms(), vec![2, 4]);
        assert_eq!(
            g.zeta(&Configuration::new(vec![0, 1, 1, 0, 2])),
            Err(Error::NotMinimal)
        );
    }

    #[test]
    fn tableau_permutation_round_trip() {
        let t: EWTableau = "11111/101/001/00".parse().unwrap();
        let p = t.to_permutation();
        assert_eq!(p, perm("12738645"));
        assert_eq!(EWTableau::from_permutation(&p, t.shape()).unwrap(), t);
        let bad = EWTableau::from_permutation(&perm("12345678"), t.shape());
        assert!(matches!(bad, Err(Error::DescentMismatch { .. })));
    }

    #[test]
    fn minrec_of_permutations() {
        assert_eq!(
            minrec_of_permutation(&perm("12738645")),
            Configuration::new(vec![0, 0, 2, 1, 0, 0, 3, 2])
        );
        assert_eq!(minrec_of_permutation(&Permutation::identity(5)), Configuration::zeros(5));
    }

    #[test]
    fn bounds_of_358714962() {
        let d = DecoratedPermutation::undecorated(perm("358714962"));
        let max_canonical: Vec<u32> = d.mu().iter().map(|m| m - 1).collect();
        assert_eq!(max_canonical, vec![2, 1, 0, 0, 0, 0, 0, 0, 1]);
        let max_stable: Vec<u32> = d.stable_bounds().iter().map(|m| m - 1).collect();
        let expected = dperm("0^∅ - 3^0 5^0 8^0 - 7^0 1^2 - 4^1 9^2 - 6^1 2^4");
        assert_eq!(max_stable, expected.decorations());
        assert!(expected.is_stable() && !expected.is_canonical());
        let canon = dperm("3^0 5^0 8^0 - 7^0 1^2 - 4^0 9^1 - 6^0 2^1");
        assert_eq!(canon.decorations(), max_canonical);
        assert!(canon.is_canonical() && canon.is_stable());
        assert_eq!(canon.to_string(), "3^0 5^0 8^0 - 7^0 1^2 - 4^0 9^1 - 6^0 2^1");
    }

    #[test]
    fn identity_bounds() {
        let d = DecoratedPermutation::undecorated(Permutation::identity(4));
        assert_eq!(d.mu(), vec![1; 4]);
        assert_eq!(DecoratedPermutation::all_canonical(&Permutation::identity(4)).len(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!("1223".parse::<Permutation>().is_err());
        assert!("1 5".parse::<Permutation>().is_err());
        assert!(matches!(
            "3^0 - 1^0 2^0".parse::<DecoratedPermutation>(),
            Err(Error::InvalidPermutation(_))
        ));
        assert!("3^x 1^0".parse::<DecoratedPermutation>().is_err());
        assert_eq!(dperm("0 - 2^0 - 1^0"), dperm("2^0 1^0"));
        assert_eq!(dperm("21"), dperm("2^0 - 1^0"));
        let big = Permutation::identity(11);
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    }
}
