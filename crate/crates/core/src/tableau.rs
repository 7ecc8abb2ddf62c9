//! EW-tableaux and the bijection with minimal recurrent configurations.
//!
//! A tableau is stored as a dense rectangular grid over row and column
//! positions. Cells outside the diagram hold [`Entry::Absent`].

use std::fmt;
use std::str::FromStr;

use crate::canonical::CanonicalToppling;
use crate::error::{Error, Result};
use crate::ferrers::{FerrersDiagram, FerrersGraph};
use crate::sandpile::Configuration;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Entry {
    Zero,
    One,
    Absent,
}

impl Entry {
    pub fn from_bit(b: bool) -> Self {
        if b {
            Entry::One
        } else {
            Entry::Zero
        }
    }

    /// `Some(bit)` for cells of the diagram.
    pub fn bit(self) -> Option<bool> {
        match self {
            Entry::Zero => Some(false),
            Entry::One => Some(true),
            Entry::Absent => None,
        }
    }
}

/// One broken rule, reported with row and column labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    /// Row `row` (by position) has `actual` cells where the diagram has `expected`.
    ShapeMismatch {
        row: usize,
        expected: usize,
        actual: usize,
    },
    TopRowNotAllOnes { col: usize },
    RowWithoutZero { row: usize },
    /// Rows `rows.0 < rows.1` and columns `cols.0 > cols.1` span a
    /// rectangle with `0`s on one diagonal and `1`s on the other.
    ForbiddenRectangle {
        rows: (usize, usize),
        cols: (usize, usize),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ShapeMismatch {
                row,
                expected,
                actual,
            } => write!(f, "row {row} has {actual} cells, expected {expected}"),
            Violation::TopRowNotAllOnes { col } => {
                write!(f, "top row has a 0 in column {col}")
            }
            Violation::RowWithoutZero { row } => write!(f, "row {row} has no 0"),
            Violation::ForbiddenRectangle { rows, cols } => write!(
                f,
                "rows {}, {} and columns {}, {} form a forbidden rectangle",
                rows.0, rows.1, cols.0, cols.1
            ),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EWTableau {
    shape: FerrersDiagram,
    /// `grid[r][x]` for row position `r` and column position `x`.
    grid: Vec<Vec<Entry>>,
}

impl fmt::Debug for EWTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EWTableau({})", self.to_compact())
    }
}

/// Rows as lines of `0`/`1`, top row first.
impl fmt::Display for EWTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.row_strings().join("\n"))
    }
}

impl FromStr for EWTableau {
    type Err = Error;

    /// Rows of `0`/`1` separated by `/` or newlines; the shape is read off
    /// the row lengths.
    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s
            .split(['/', '\n'])
            .map(|r| r.trim())
            .filter(|r| !r.is_empty())
            .collect();
        let bits = rows
            .iter()
            .map(|r| parse_row(r))
            .collect::<Result<Vec<_>>>()?;
        let parts: Vec<usize> = bits.iter().map(|r| r.len()).collect();
        let shape = FerrersDiagram::new(parts)?;
        EWTableau::validate(&shape, bits)
    }
}

pub(crate) fn parse_row(r: &str) -> Result<Vec<bool>> {
    r.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::Parse(format!("unexpected {c:?} in tableau row {r:?}"))),
        })
        .collect()
}

impl EWTableau {
    /// Checks the three EW rules and returns the tableau, or every violation found.
    ///
    /// `rows[r]` lists the entries of row position `r` from left to right.
    pub fn validate(shape: &FerrersDiagram, rows: Vec<Vec<bool>>) -> Result<Self> {
        let violations = violations(shape, &rows);
        if !violations.is_empty() {
            return Err(Error::InvalidTableau(violations));
        }
        Ok(Self::from_rows_unchecked(shape.clone(), &rows))
    }

    /// Parses `111/00/0` style text against a known shape.
    pub fn parse_with_shape(shape: &FerrersDiagram, s: &str) -> Result<Self> {
        let bits = s
            .split(['/', '\n'])
            .map(|r| r.trim())
            .filter(|r| !r.is_empty())
            .map(parse_row)
            .collect::<Result<Vec<_>>>()?;
        EWTableau::validate(shape, bits)
    }

    pub(crate) fn from_rows_unchecked(shape: FerrersDiagram, rows: &[Vec<bool>]) -> Self {
        let w = shape.num_cols();
        let grid = rows
            .iter()
            .map(|r| {
                let mut line = vec![Entry::Absent; w];
                for (x, &b) in r.iter().enumerate() {
                    line[x] = Entry::from_bit(b);
                }
                line
            })
            .collect();
        EWTableau { shape, grid }
    }

    pub fn shape(&self) -> &FerrersDiagram {
        &self.shape
    }

    pub fn graph(&self) -> FerrersGraph {
        self.shape.graph()
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Entry at row label `i`, column label `j`.
    pub fn get(&self, i: usize, j: usize) -> Entry {
        let lab = self.shape.labeling();
        debug_assert!(lab.is_row(i) && !lab.is_row(j));
        self.grid[lab.index(i)][lab.index(j)]
    }

    /// Entry at row position `r`, column position `x`.
    pub fn at(&self, r: usize, x: usize) -> Entry {
        self.grid[r][x]
    }

    /// Entries of each row, left to right.
    pub fn rows(&self) -> Vec<Vec<bool>> {
        self.grid
            .iter()
            .map(|line| line.iter().filter_map(|e| e.bit()).collect())
            .collect()
    }

    pub fn row_strings(&self) -> Vec<String> {
        self.rows()
            .iter()
            .map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect()
    }

    /// Rows joined by `/`, e.g. `111/00/0`.
    pub fn to_compact(&self) -> String {
        self.row_strings().join("/")
    }

    fn count_in_row(&self, i: usize, value: bool) -> usize {
        let r = self.shape.labeling().index(i);
        self.grid[r].iter().filter(|e| e.bit() == Some(value)).count()
    }

    fn count_in_col(&self, j: usize, value: bool) -> usize {
        let x = self.shape.labeling().index(j);
        self.grid.iter().filter(|l| l[x].bit() == Some(value)).count()
    }

    pub fn ones_in_row(&self, i: usize) -> usize {
        self.count_in_row(i, true)
    }

    pub fn zeros_in_row(&self, i: usize) -> usize {
        self.count_in_row(i, false)
    }

    pub fn ones_in_col(&self, j: usize) -> usize {
        self.count_in_col(j, true)
    }

    pub fn zeros_in_col(&self, j: usize) -> usize {
        self.count_in_col(j, false)
    }

    /// The minimal recurrent configuration of the tableau.
    ///
    /// A row vertex gets the number of `1`s in its row, a column vertex the
    /// number of `0`s in its column.
    pub fn phi_tc(&self) -> Configuration {
        let lab = self.shape.labeling();
        Configuration::new(
            (1..=self.size())
                .map(|v| {
                    if lab.is_row(v) {
                        self.ones_in_row(v) as u32
                    } else {
                        self.zeros_in_col(v) as u32
                    }
                })
                .collect(),
        )
    }

    /// Canonical toppling read directly off the filling.
    ///
    /// Rows of only `1`s are recorded and cleared to `0`; columns of only
    /// `0`s are recorded and filled with `1`; repeat until every label has
    /// been recorded.
    pub fn canon_top(&self) -> CanonicalToppling {
        let lab = self.shape.labeling();
        let (nr, nc) = (self.shape.num_rows(), self.shape.num_cols());
        let parts = self.shape.parts();
        let mut work: Vec<Vec<bool>> = self.rows();
        let mut row_done = vec![false; nr];
        let mut col_done = vec![false; nc];
        let mut remaining = nr + nc;
        let mut blocks = Vec::new();
        while remaining > 0 {
            let full_rows: Vec<usize> = (0..nr)
                .filter(|&r| !row_done[r] && work[r].iter().all(|&b| b))
                .collect();
            for &r in &full_rows {
                row_done[r] = true;
                work[r].iter_mut().for_each(|b| *b = false);
            }
            let empty_cols: Vec<usize> = (0..nc)
                .filter(|&x| {
                    !col_done[x] && (0..self.shape.col_height(x)).all(|r| !work[r][x])
                })
                .collect();
            for &x in &empty_cols {
                col_done[x] = true;
                for (r, line) in work.iter_mut().enumerate() {
                    if x < parts[r] {
                        line[x] = true;
                    }
                }
            }
            let progress = full_rows.len() + empty_cols.len();
            assert!(progress > 0, "canonical toppling stalled on a valid tableau");
            remaining -= progress;
            blocks.push(full_rows.iter().map(|&r| lab.rows()[r]).collect());
            if !empty_cols.is_empty() {
                blocks.push(empty_cols.iter().map(|&x| lab.cols()[x]).collect());
            }
        }
        CanonicalToppling::from_blocks(blocks)
    }
}

fn violations(shape: &FerrersDiagram, rows: &[Vec<bool>]) -> Vec<Violation> {
    let lab = shape.labeling();
    let parts = shape.parts();
    let mut out = Vec::new();
    if rows.len() != parts.len() {
        out.push(Violation::ShapeMismatch {
            row: rows.len().min(parts.len()),
            expected: parts.get(rows.len()).copied().unwrap_or(0),
            actual: rows.get(parts.len()).map_or(0, |r| r.len()),
        });
        return out;
    }
    for (r, (row, &p)) in rows.iter().zip(parts).enumerate() {
        if row.len() != p {
            out.push(Violation::ShapeMismatch {
                row: r,
                expected: p,
                actual: row.len(),
            });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for (x, &b) in rows[0].iter().enumerate() {
        if !b {
            out.push(Violation::TopRowNotAllOnes { col: lab.cols()[x] });
        }
    }
    for (r, row) in rows.iter().enumerate().skip(1) {
        if row.iter().all(|&b| b) {
            out.push(Violation::RowWithoutZero { row: lab.rows()[r] });
        }
    }
    for r2 in 1..rows.len() {
        for r1 in 0..r2 {
            for x2 in 1..parts[r2] {
                for x1 in 0..x2 {
                    if forbidden(rows[r1][x1], rows[r1][x2], rows[r2][x1], rows[r2][x2]) {
                        out.push(Violation::ForbiddenRectangle {
                            rows: (lab.rows()[r1], lab.rows()[r2]),
                            cols: (lab.cols()[x1], lab.cols()[x2]),
                        });
                    }
                }
            }
        }
    }
    out
}

/// `a b / c d` has equal diagonals that differ from each other.
#[inline]
fn forbidden(a: bool, b: bool, c: bool, d: bool) -> bool {
    a == d && b == c && a != b
}

impl FerrersGraph {
    /// The EW-tableau of a minimal recurrent configuration.
    ///
    /// Cell `(i, j)` holds `1` exactly when row `i` topples before column `j`.
    pub fn phi_ct(&self, c: &Configuration) -> Result<EWTableau> {
        let ct = self.canon_top(c)?;
        if self.minrec_of(&ct) != *c {
            return Err(Error::NotMinimal);
        }
        Ok(self.tableau_of_toppling(&ct))
    }

    pub(crate) fn tableau_of_toppling(&self, ct: &CanonicalToppling) -> EWTableau {
        let d = self.diagram();
        let lab = d.labeling();
        let rows: Vec<Vec<bool>> = lab
            .rows()
            .iter()
            .enumerate()
            .map(|(r, &i)| {
                lab.cols()[..d.parts()[r]]
                    .iter()
                    .map(|&j| ct.precedes(i, j))
                    .collect()
            })
            .collect();
        EWTableau::from_rows_unchecked(d.clone(), &rows)
    }
}

/// Every EW-tableau of `shape`, in lexicographic order of the row-major
/// filling read with `0 < 1`.
pub fn enumerate_tableaux(shape: &FerrersDiagram) -> Vec<EWTableau> {
    let parts = shape.parts().to_vec();
    let mut rows: Vec<Vec<bool>> = vec![vec![true; parts[0]]];
    let mut out = Vec::new();
    if parts.len() == 1 {
        out.push(EWTableau::from_rows_unchecked(shape.clone(), &rows));
        return out;
    }
    rows.push(Vec::with_capacity(parts[1]));
    fill(shape, &parts, &mut rows, &mut out);
    out
}

fn fill(shape: &FerrersDiagram, parts: &[usize], rows: &mut Vec<Vec<bool>>, out: &mut Vec<EWTableau>) {
    let r = rows.len() - 1;
    let x = rows[r].len();
    if x == parts[r] {
        if rows[r].iter().all(|&b| b) {
            return;
        }
        if r + 1 == parts.len() {
            out.push(EWTableau::from_rows_unchecked(shape.clone(), rows));
            return;
        }
        rows.push(Vec::with_capacity(parts[r + 1]));
        fill(shape, parts, rows, out);
        rows.pop();
        return;
    }
    for v in [false, true] {
        let ok = (0..r).all(|r1| {
            (0..x).all(|x1| !forbidden(rows[r1][x1], rows[r1][x], rows[r][x1], v))
        });
        if ok {
            rows[r].push(v);
            fill(shape, parts, rows, out);
            rows[r].pop();
        }
    }
}
