//! Supplementary tableaux, cornersupport entries and the bounds `nu`.
//!
//! The supplementary tableau extends an EW-tableau to the full rectangle of
//! row and column labels: `S[i][j]` is `1` when row `i` topples before
//! column `j`. A cell of the tableau is a cornersupport when some other
//! row `j'` and column `k'` complete it to a rectangle of `S` with the
//! opposite value at `(j', k')` and its own value at the two remaining corners.

use std::fmt;

use crate::error::{Error, Result};
use crate::tableau::{EWTableau, Entry};

/// Rectangular 0/1 grid over all (row label, column label) pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupplementaryTableau {
    rows: Vec<usize>,
    cols: Vec<usize>,
    bits: Vec<Vec<bool>>,
}

impl SupplementaryTableau {
    /// Row labels, top to bottom.
    pub fn row_labels(&self) -> &[usize] {
        &self.rows
    }

    /// Column labels, left to right.
    pub fn col_labels(&self) -> &[usize] {
        &self.cols
    }

    /// Entry at row position `r`, column position `x`.
    pub fn at(&self, r: usize, x: usize) -> bool {
        self.bits[r][x]
    }

    pub fn row_strings(&self) -> Vec<String> {
        self.bits
            .iter()
            .map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect()
    }
}

impl fmt::Display for SupplementaryTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.row_strings().join("\n"))
    }
}

/// Which cells of a tableau are cornersupports, by position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CornersupportMask {
    rows: Vec<usize>,
    cols: Vec<usize>,
    marks: Vec<Vec<bool>>,
}

impl CornersupportMask {
    pub fn at(&self, r: usize, x: usize) -> bool {
        self.marks[r][x]
    }

    /// Cornersupport cells as `(row label, column label)`, sorted.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, line) in self.marks.iter().enumerate() {
            for (x, &m) in line.iter().enumerate() {
                if m {
                    out.push((self.rows[r], self.cols[x]));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn count(&self) -> usize {
        self.marks.iter().flatten().filter(|&&m| m).count()
    }
}

impl EWTableau {
    /// The supplementary tableau, built from the canonical toppling.
    pub fn supplementary(&self) -> SupplementaryTableau {
        let ct = self.canon_top();
        let lab = self.shape().labeling();
        let bits = lab
            .rows()
            .iter()
            .map(|&i| lab.cols().iter().map(|&j| ct.precedes(i, j)).collect())
            .collect();
        SupplementaryTableau {
            rows: lab.rows().to_vec(),
            cols: lab.cols().to_vec(),
            bits,
        }
    }

    /// Supplementary entry at row `j`, column `k` with `j > k`, computed
    /// from the filling alone.
    ///
    /// The entry is `0` exactly when some column `k' > j` has `T[j][k'] = 0`
    /// and every row `j' < k` with a `0` in column `k'` also has a `0` in
    /// column `k`.
    pub fn supplementary_entry_direct(&self, j: usize, k: usize) -> Result<bool> {
        let lab = self.shape().labeling();
        if j >= lab.len() || !lab.is_row(j) {
            return Err(Error::NotARow(j));
        }
        if k >= lab.len() || lab.is_row(k) {
            return Err(Error::NotAColumn(k));
        }
        if j < k {
            return Err(Error::CellInsideShape { row: j, col: k });
        }
        Ok(self.direct_unchecked(j, k))
    }

    fn direct_unchecked(&self, j: usize, k: usize) -> bool {
        let lab = self.shape().labeling();
        let witness = lab.cols().iter().filter(|&&kp| kp > j).any(|&kp| {
            self.get(j, kp) == Entry::Zero
                && lab
                    .rows()
                    .iter()
                    .take_while(|&&jp| jp < k)
                    .all(|&jp| self.get(jp, kp) != Entry::Zero || self.get(jp, k) == Entry::Zero)
        });
        !witness
    }

    /// Supplementary entry, read from the tableau when the cell exists and
    /// from [`supplementary_entry_direct`](Self::supplementary_entry_direct) otherwise.
    fn supplementary_entry(&self, j: usize, k: usize) -> bool {
        match self.get(j, k).bit() {
            Some(b) => b,
            None => self.direct_unchecked(j, k),
        }
    }

    /// Cornersupport cells, straight from the definition over the supplementary tableau.
    pub fn cornersupports_definitional(&self) -> CornersupportMask {
        let s = self.supplementary();
        let (nr, nc) = (s.rows.len(), s.cols.len());
        let marks = (0..nr)
            .map(|r| {
                (0..nc)
                    .map(|x| {
                        let Some(v) = self.at(r, x).bit() else {
                            return false;
                        };
                        (0..nr).filter(|&r2| r2 != r).any(|r2| {
                            (0..nc).filter(|&x2| x2 != x).any(|x2| {
                                s.bits[r2][x2] != v && s.bits[r2][x] == v && s.bits[r][x2] == v
                            })
                        })
                    })
                    .collect()
            })
            .collect();
        self.mask(marks)
    }

    /// Cornersupport cells from three-corner witnesses inside the diagram.
    ///
    /// A `0` at `(j, k)` is a cornersupport when some `(j', k')` holds `1`,
    /// `(j, k')` holds `0` and `S[j'][k]` is `0`. A `1` is a cornersupport
    /// when some `(j', k')` holds `0`, `(j', k)` holds `1` and `S[j][k']` is
    /// `1`. Supplementary entries outside the diagram are computed directly.
    pub fn cornersupports(&self) -> CornersupportMask {
        let lab = self.shape().labeling();
        let (rows, cols) = (lab.rows(), lab.cols());
        let marks = rows
            .iter()
            .enumerate()
            .map(|(r, &j)| {
                cols.iter()
                    .enumerate()
                    .map(|(x, &k)| match self.at(r, x) {
                        Entry::Absent => false,
                        Entry::Zero => rows.iter().enumerate().any(|(r2, &jp)| {
                            r2 != r
                                && (0..cols.len()).any(|x2| {
                                    x2 != x
                                        && self.at(r2, x2) == Entry::One
                                        && self.at(r, x2) == Entry::Zero
                                        && !self.supplementary_entry(jp, k)
                                })
                        }),
                        Entry::One => (0..rows.len()).any(|r2| {
                            r2 != r
                                && cols.iter().enumerate().any(|(x2, &kp)| {
                                    x2 != x
                                        && self.at(r2, x2) == Entry::Zero
                                        && self.at(r2, x) == Entry::One
                                        && self.supplementary_entry(j, kp)
                                })
                        }),
                    })
                    .collect()
            })
            .collect();
        self.mask(marks)
    }

    fn mask(&self, marks: Vec<Vec<bool>>) -> CornersupportMask {
        let lab = self.shape().labeling();
        CornersupportMask {
            rows: lab.rows().to_vec(),
            cols: lab.cols().to_vec(),
            marks,
        }
    }

    /// Decoration bounds: non-cornersupport `0`s in each row, non-cornersupport
    /// `1`s in each column. Entry `k` belongs to vertex `k + 1`.
    pub fn nu(&self) -> Vec<u32> {
        let mask = self.cornersupports();
        let lab = self.shape().labeling();
        (1..=self.size())
            .map(|v| {
                let p = lab.index(v);
                if lab.is_row(v) {
                    (0..self.shape().num_cols())
                        .filter(|&x| self.at(p, x) == Entry::Zero && !mask.at(p, x))
                        .count() as u32
                } else {
                    (0..self.shape().num_rows())
                        .filter(|&r| self.at(r, p) == Entry::One && !mask.at(r, p))
                        .count() as u32
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str) -> EWTableau {
        s.parse().unwrap()
    }

    #[test]
    fn supplementary_of_example() {
        let t = tab("11111/101/001/00");
        assert_eq!(t.supplementary().row_strings(), ["11111", "10100", "00100", "00100"]);
        assert_eq!(tab("111").supplementary().row_strings(), ["111"]);
    }

    #[test]
    fn direct_entries() {
        // rows 0,1,2,5; columns 7,6,4,3
        let t = tab("1111/0100/0110/01");
        assert_eq!(t.supplementary_entry_direct(5, 4), Ok(true));
        assert_eq!(t.supplementary_entry_direct(5, 3), Ok(false));
        assert_eq!(
            t.supplementary_entry_direct(1, 4),
            Err(Error::CellInsideShape { row: 1, col: 4 })
        );
        assert_eq!(t.supplementary_entry_direct(4, 3), Err(Error::NotARow(4)));
        assert_eq!(t.supplementary_entry_direct(5, 2), Err(Error::NotAColumn(2)));
    }

    #[test]
    fn corner_at_0_6() {
        // rows 0,2,3,5; columns 7,6,4,1
        let t = tab("1111/010/110/01");
        assert!(t.cornersupports().cells().contains(&(0, 6)));
        assert!(t.cornersupports_definitional().cells().contains(&(0, 6)));
    }

    #[test]
    fn cornersupports_and_nu_of_4432() {
        // rows 0,1,3,5; columns 7,6,4,2
        let t = tab("1111/0000/010/01");
        let expected = vec![(0, 6), (1, 2), (1, 4), (1, 7)];
        assert_eq!(t.cornersupports().cells(), expected);
        assert_eq!(t.cornersupports_definitional().cells(), expected);
        assert_eq!(t.nu(), vec![1, 1, 2, 1, 1, 2, 1]);
    }

    #[test]
    fn nu_of_large_example() {
        let t = tab("1111111111111/00111000000/10111101110/101110/1011/001/101");
        assert_eq!(t.shape().labeling().rows(), &[0, 3, 4, 10, 13, 15, 16]);
        assert_eq!(
            t.nu(),
            vec![1, 1, 1, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1]
        );
        assert_eq!(
            t.supplementary().row_strings(),
            [
                "1111111111111",
                "0011100000000",
                "1011110111000",
                "1011100000000",
                "1011110111000",
                "0011100000000",
                "1011110111000",
            ]
        );
    }

    #[test]
    fn one_row_has_no_cornersupports() {
        let t = tab("1111");
        assert_eq!(t.cornersupports().count(), 0);
        assert_eq!(t.nu(), vec![1, 1, 1, 1]);
        assert_eq!(tab("1").nu(), vec![1]);
    }
}
