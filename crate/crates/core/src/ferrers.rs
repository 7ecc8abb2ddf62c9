//! Ferrers diagrams, their boundary labeling, and the bipartite Ferrers graph.
//!
//! Diagrams use English notation: the top row is the longest. Walking the
//! south-east border from the top-right corner to the bottom-left corner
//! hands out the labels `0, 1, ..., n` in order. A vertical step labels the
//! row it runs along, a horizontal step labels the column it runs under.
//! The top row therefore always receives label `0`, and a cell in row `i`
//! and column `j` exists exactly when `i < j`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which side of the bipartition a label sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Row,
    Col,
}

/// Row and column labels of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    rows: Vec<usize>,
    cols: Vec<usize>,
    /// `slots[label]` is the side and the position (top-to-bottom for rows,
    /// left-to-right for columns) of `label`.
    slots: Vec<(Side, usize)>,
}

impl Labeling {
    /// Row labels, top to bottom (increasing).
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Column labels, left to right (decreasing).
    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn side(&self, label: usize) -> Side {
        self.slots[label].0
    }

    pub fn is_row(&self, label: usize) -> bool {
        self.side(label) == Side::Row
    }

    /// Position of `label` within its side.
    pub fn index(&self, label: usize) -> usize {
        self.slots[label].1
    }

    /// Number of labels, `n + 1`.
    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }
}

/// A Ferrers diagram, stored as its weakly decreasing row lengths.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FerrersDiagram {
    parts: Vec<usize>,
    labeling: Labeling,
}

impl fmt::Debug for FerrersDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FerrersDiagram({self})")
    }
}

impl fmt::Display for FerrersDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl PartialOrd for FerrersDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FerrersDiagram {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl FerrersDiagram {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidShape("diagram has no rows".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidShape("every part must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        let labeling = label_walk(&parts);
        Ok(FerrersDiagram { parts, labeling })
    }

    /// Rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Result<Self> {
        Self::new(vec![cols; rows])
    }

    /// The diagram whose row labels are `{0} ∪ rows` among `0..=n`.
    ///
    /// Row `i` then has one cell for every column label larger than `i`.
    pub fn from_row_labels(n: usize, rows: &[usize]) -> Result<Self> {
        let mut is_row = vec![false; n + 1];
        is_row[0] = true;
        for &r in rows {
            if r > n {
                return Err(Error::InvalidShape(format!("row label {r} exceeds {n}")));
            }
            is_row[r] = true;
        }
        if is_row[n] {
            return Err(Error::InvalidShape(format!(
                "largest label {n} must be a column label"
            )));
        }
        let mut parts = Vec::new();
        for r in (0..=n).filter(|&l| is_row[l]) {
            parts.push(((r + 1)..=n).filter(|&l| !is_row[l]).count());
        }
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn num_cols(&self) -> usize {
        self.parts[0]
    }

    pub fn semiperimeter(&self) -> usize {
        self.num_rows() + self.num_cols()
    }

    /// Size `n`; labels run over `0..=n`.
    pub fn size(&self) -> usize {
        self.semiperimeter() - 1
    }

    pub fn num_cells(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Height of the column at position `x` (0 = leftmost).
    pub fn col_height(&self, x: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > x).count()
    }

    /// Whether the cell at row position `r`, column position `x` exists.
    pub fn has_cell(&self, r: usize, x: usize) -> bool {
        r < self.parts.len() && x < self.parts[r]
    }

    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.iter().all(|&p| p == self.parts[0])
    }

    pub fn graph(&self) -> FerrersGraph {
        FerrersGraph::new(self.clone())
    }
}

impl FromStr for FerrersDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidShape(format!("not a positive integer: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FerrersDiagram::new(parts)
    }
}

fn label_walk(parts: &[usize]) -> Labeling {
    let n = parts.len() + parts[0] - 1;
    let mut rows = Vec::with_capacity(parts.len());
    let mut cols = vec![0; parts[0]];
    let mut slots = vec![(Side::Row, 0); n + 1];
    let mut label = 0;
    for (r, &len) in parts.iter().enumerate() {
        rows.push(label);
        slots[label] = (Side::Row, r);
        label += 1;
        let next = parts.get(r + 1).copied().unwrap_or(0);
        for x in (next..len).rev() {
            cols[x] = label;
            slots[label] = (Side::Col, x);
            label += 1;
        }
    }
    debug_assert_eq!(label, n + 1);
    Labeling { rows, cols, slots }
}

/// Every diagram with the given semiperimeter, ordered lexicographically by parts.
pub fn enumerate_diagrams(semiperimeter: usize) -> Result<Vec<FerrersDiagram>> {
    if semiperimeter < 2 {
        return Err(Error::SemiperimeterTooSmall(semiperimeter));
    }
    let mut out = Vec::new();
    // rows + first part = semiperimeter; remaining rows are bounded by the first part.
    for first in 1..semiperimeter {
        let rows = semiperimeter - first;
        let mut prefix = vec![first];
        extend_parts(&mut prefix, rows, first, &mut out);
    }
    out.sort();
    Ok(out)
}

fn extend_parts(prefix: &mut Vec<usize>, rows: usize, max: usize, out: &mut Vec<FerrersDiagram>) {
    if prefix.len() == rows {
        out.push(FerrersDiagram::new(prefix.clone()).expect("generated parts are valid"));
        return;
    }
    for p in 1..=max {
        prefix.push(p);
        extend_parts(prefix, rows, p, out);
        prefix.pop();
    }
}

/// All diagrams with semiperimeter in `2..=max`, smallest first.
pub fn diagrams_up_to(max_semiperimeter: usize) -> Vec<FerrersDiagram> {
    (2..=max_semiperimeter)
        .flat_map(|s| enumerate_diagrams(s).expect("semiperimeter >= 2"))
        .collect()
}

/// The bipartite graph of a diagram on vertices `0..=n`, with sink `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FerrersGraph {
    diagram: FerrersDiagram,
    adjacency: Vec<Vec<usize>>,
    edges: usize,
}

impl FerrersGraph {
    pub fn new(diagram: FerrersDiagram) -> Self {
        let lab = diagram.labeling();
        let n = diagram.size();
        let mut adjacency = vec![Vec::new(); n + 1];
        let mut edges = 0;
        for (r, &i) in lab.rows().iter().enumerate() {
            for &j in &lab.cols()[..diagram.parts()[r]] {
                adjacency[i].push(j);
                adjacency[j].push(i);
                edges += 1;
            }
        }
        for a in &mut adjacency {
            a.sort_unstable();
        }
        FerrersGraph {
            diagram,
            adjacency,
            edges,
        }
    }

    pub fn diagram(&self) -> &FerrersDiagram {
        &self.diagram
    }

    pub fn labeling(&self) -> &Labeling {
        self.diagram.labeling()
    }

    /// Number of non-sink vertices.
    pub fn n(&self) -> usize {
        self.adjacency.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges as `(row, column)` pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .labeling()
            .rows()
            .iter()
            .flat_map(|&i| self.adjacency[i].iter().map(move |&j| (i, j)))
            .collect();
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(p: &[usize]) -> FerrersDiagram {
        FerrersDiagram::new(p.to_vec()).unwrap()
    }

    #[test]
    fn labels_of_5332() {
        let d = shape(&[5, 3, 3, 2]);
        assert_eq!(d.labeling().rows(), &[0, 3, 4, 6]);
        assert_eq!(d.labeling().cols(), &[8, 7, 5, 2, 1]);
        assert_eq!(d.size(), 8);
    }

    #[test]
    fn labels_of_321() {
        let d = shape(&[3, 2, 1]);
        assert_eq!(d.labeling().rows(), &[0, 2, 4]);
        assert_eq!(d.labeling().cols(), &[5, 3, 1]);
    }

    #[test]
    fn labels_of_single_cell() {
        let d = shape(&[1]);
        assert_eq!(d.labeling().rows(), &[0]);
        assert_eq!(d.labeling().cols(), &[1]);
        assert_eq!(d.graph().edges(), vec![(0, 1)]);
    }

    #[test]
    #[rustfmt::skip]
    fn graph_of_5332() {
        let g = shape(&[5, 3, 3, 2]).graph();
        assert_eq!(g.edge_count(), 13);
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(3, 5));
        assert!(g.has_edge(6, 8));
        assert!(!g.has_edge(6, 5));
        let expected = vec![
            (0, 1), (0, 2), (0, 5), (0, 7), (0, 8),
            (3, 5), (3, 7), (3, 8),
            (4, 5), (4, 7), (4, 8),
            (6, 7), (6, 8),
        ];
        assert_eq!(g.edges(), expected);
        assert_eq!(g.degree(0), 5);
    }

    #[test]
    fn rectangle_is_complete_bipartite() {
        let g = FerrersDiagram::rectangle(3, 4).unwrap().graph();
        let lab = g.labeling();
        for &i in lab.rows() {
            for &j in lab.cols() {
                assert!(g.has_edge(i, j));
            }
        }
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(FerrersDiagram::new(vec![]).is_err());
        assert!(FerrersDiagram::new(vec![2, 0]).is_err());
        assert!(FerrersDiagram::new(vec![1, 2]).is_err());
        assert!("3,x".parse::<FerrersDiagram>().is_err());
        assert_eq!("5, 3,3,2".parse::<FerrersDiagram>().unwrap().parts(), &[5, 3, 3, 2]);
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_diagrams(2).unwrap(), vec![shape(&[1])]);
        assert_eq!(
            enumerate_diagrams(4).unwrap(),
            vec![shape(&[1, 1, 1]), shape(&[2, 1]), shape(&[2, 2]), shape(&[3])]
        );
        assert!(matches!(enumerate_diagrams(1), Err(Error::SemiperimeterTooSmall(1))));
    }

    #[test]
    fn enumerate_counts_match_brute_force() {
        // Independent count: a shape is a lattice path of `s` steps starting
        // with a vertical step and ending with a horizontal one.
        for s in 2..=10 {
            let brute = (0u32..(1 << s))
                .filter(|m| m & 1 == 1 && (m >> (s - 1)) & 1 == 0)
                .count();
            assert_eq!(enumerate_diagrams(s).unwrap().len(), brute, "s = {s}");
        }
        assert_eq!(enumerate_diagrams(7).unwrap().len(), 32);
    }

    #[test]
    fn from_row_labels_inverts_labeling() {
        for d in diagrams_up_to(8) {
            let rows: Vec<usize> = d.labeling().rows()[1..].to_vec();
            assert_eq!(FerrersDiagram::from_row_labels(d.size(), &rows).unwrap(), d);
        }
    }

    #[test]
    fn labeling_invariants() {
        for d in diagrams_up_to(9) {
            let lab = d.labeling();
            let mut all: Vec<usize> = lab.rows().iter().chain(lab.cols()).copied().collect();
            all.sort_unstable();
            assert_eq!(all, (0..=d.size()).collect::<Vec<_>>());
            let g = d.graph();
            for (i, j) in g.edges() {
                assert!(i < j && lab.is_row(i) && !lab.is_row(j));
            }
            assert_eq!(g.degree(0), d.parts()[0]);
            // cell (r, x) exists iff row label < column label
            for (r, &i) in lab.rows().iter().enumerate() {
                for (x, &j) in lab.cols().iter().enumerate() {
                    assert_eq!(d.has_cell(r, x), i < j);
                }
            }
        }
    }
}
