//! Decorated EW-tableaux and the classification of recurrent configurations.
//!
//! A decoration assigns a non-negative surplus `a_v` to every non-sink
//! vertex. Adding it to the minimal recurrent configuration of the tableau
//! gives a configuration; that configuration is recurrent with the same
//! tableau exactly when every `a_v` is below the bound `nu_v`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ferrers::{FerrersDiagram, FerrersGraph};
use crate::sandpile::Configuration;
use crate::tableau::{parse_row, EWTableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecorationClass {
    /// Below `nu` everywhere: the image of a recurrent configuration.
    Canonical,
    /// Within the stable bounds but not canonical.
    StableOnly,
    /// Some entry reaches its stable bound.
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecoratedTableau {
    tableau: EWTableau,
    decorations: Vec<u32>,
}

impl DecoratedTableau {
    /// Pairs a tableau with decorations `a_1..a_n`; only the length is checked.
    pub fn new(tableau: EWTableau, decorations: Vec<u32>) -> Result<Self> {
        if decorations.len() != tableau.size() {
            return Err(Error::LengthMismatch {
                expected: tableau.size(),
                actual: decorations.len(),
            });
        }
        Ok(DecoratedTableau {
            tableau,
            decorations,
        })
    }

    pub fn undecorated(tableau: EWTableau) -> Self {
        let n = tableau.size();
        DecoratedTableau {
            tableau,
            decorations: vec![0; n],
        }
    }

    pub fn tableau(&self) -> &EWTableau {
        &self.tableau
    }

    pub fn decorations(&self) -> &[u32] {
        &self.decorations
    }

    /// Decoration of vertex `v` (1-based).
    pub fn get(&self, v: usize) -> u32 {
        self.decorations[v - 1]
    }

    pub fn classify(&self) -> DecorationClass {
        let stable = stable_bounds(&self.tableau);
        if self.decorations.iter().zip(&stable).any(|(a, b)| a >= b) {
            return DecorationClass::Invalid;
        }
        let nu = self.tableau.nu();
        if self.decorations.iter().zip(&nu).all(|(a, b)| a < b) {
            DecorationClass::Canonical
        } else {
            DecorationClass::StableOnly
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.classify() == DecorationClass::Canonical
    }

    /// Names the first vertex whose decoration reaches its bound `nu`.
    pub fn check_canonical(&self) -> Result<()> {
        crate::perm::first_violation(&self.decorations, &self.tableau.nu())
    }

    /// The minimal recurrent configuration of the tableau plus the decorations.
    pub fn to_configuration(&self) -> Configuration {
        self.tableau
            .phi_tc()
            .plus(&self.decorations)
            .expect("lengths agree by construction")
    }

    /// Every canonical decoration of `t`, in lexicographic order.
    pub fn all_canonical(t: &EWTableau) -> Vec<DecoratedTableau> {
        let nu = t.nu();
        let mut out = Vec::new();
        let mut a = vec![0u32; nu.len()];
        loop {
            out.push(DecoratedTableau {
                tableau: t.clone(),
                decorations: a.clone(),
            });
            // odometer, last entry fastest
            let mut k = a.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                a[k] += 1;
                if a[k] < nu[k] {
                    break;
                }
                a[k] = 0;
            }
        }
    }
}

/// Stable bounds: `0`s in row `i`, `1`s in column `j`. Entry `k` belongs
/// to vertex `k + 1`.
pub fn stable_bounds(t: &EWTableau) -> Vec<u32> {
    let lab = t.shape().labeling();
    (1..=t.size())
        .map(|v| {
            if lab.is_row(v) {
                t.zeros_in_row(v) as u32
            } else {
                t.ones_in_col(v) as u32
            }
        })
        .collect()
}

impl FerrersGraph {
    /// Splits a recurrent configuration into the tableau of its minimal
    /// recurrent configuration and the surplus.
    pub fn psi(&self, c: &Configuration) -> Result<DecoratedTableau> {
        let ct = self.canon_top(c)?;
        let m = self.minrec_of(&ct);
        let decorations = c.minus(&m).expect("a recurrent configuration dominates its minrec");
        Ok(DecoratedTableau {
            tableau: self.tableau_of_toppling(&ct),
            decorations,
        })
    }
}

/// Rows as `1 1 1 | a`, absent cells blank, then a dashed line and the
/// column decorations from left to right. The top row has no decoration.
impl fmt::Display for DecoratedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.tableau.shape();
        let lab = d.labeling();
        let width = 2 * d.num_cols() - 1;
        for (r, row) in self.tableau.row_strings().iter().enumerate() {
            let cells: Vec<String> = row.chars().map(String::from).collect();
            let cells = format!("{:width$}", cells.join(" "));
            if r == 0 {
                writeln!(f, "{cells} |")?;
            } else {
                writeln!(f, "{cells} | {}", self.get(lab.rows()[r]))?;
            }
        }
        writeln!(f, "{}", "-".repeat(width))?;
        let cols: Vec<String> = lab.cols().iter().map(|&j| self.get(j).to_string()).collect();
        write!(f, "{}", cols.join(" "))
    }
}

impl FromStr for DecoratedTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().filter(|l| !l.trim().is_empty()).collect();
        let split = lines
            .iter()
            .position(|l| l.trim().chars().all(|c| c == '-'))
            .ok_or_else(|| Error::Parse("missing dashed line before column decorations".into()))?;
        let mut bits = Vec::new();
        let mut row_decs = Vec::new();
        for (r, line) in lines[..split].iter().enumerate() {
            let (cells, dec) = line
                .split_once('|')
                .ok_or_else(|| Error::Parse(format!("row {r} lacks '|'")))?;
            bits.push(parse_row(cells)?);
            let dec = dec.trim();
            match (r, dec.is_empty()) {
                (0, true) => {}
                (0, false) => return Err(Error::Parse("top row carries no decoration".into())),
                (_, true) => return Err(Error::Parse(format!("row {r} has no decoration"))),
                (_, false) => row_decs.push(parse_u32(dec)?),
            }
        }
        let col_decs = lines[split + 1..]
            .iter()
            .flat_map(|l| l.split_whitespace())
            .map(parse_u32)
            .collect::<Result<Vec<_>>>()?;
        let shape = FerrersDiagram::new(bits.iter().map(|r| r.len()).collect())?;
        if col_decs.len() != shape.num_cols() {
            return Err(Error::LengthMismatch {
                expected: shape.num_cols(),
                actual: col_decs.len(),
            });
        }
        let tableau = EWTableau::validate(&shape, bits)?;
        let lab = shape.labeling();
        let mut decorations = vec![0; shape.size()];
        for (&i, &a) in lab.rows()[1..].iter().zip(&row_decs) {
            decorations[i - 1] = a;
        }
        for (&j, &a) in lab.cols().iter().zip(&col_decs) {
            decorations[j - 1] = a;
        }
        DecoratedTableau::new(tableau, decorations)
    }
}

fn parse_u32(s: &str) -> Result<u32> {
    s.parse()
        .map_err(|_| Error::Parse(format!("not a decoration: {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str) -> EWTableau {
        s.parse().unwrap()
    }

    fn dec(t: &str, a: &[u32]) -> DecoratedTableau {
        DecoratedTableau::new(tab(t), a.to_vec()).unwrap()
    }

    #[test]
    fn three_tableaux_reach_one_configuration() {
        let target = Configuration::new(vec![0, 1, 1, 0, 2]);
        let a = dec("111/00/0", &[0, 1, 0, 0, 0]);
        let b = dec("111/01/0", &[0, 0, 1, 0, 0]);
        let c = dec("111/10/0", &[0, 0, 0, 0, 1]);
        for d in [&a, &b, &c] {
            assert_eq!(d.to_configuration(), target);
        }
        assert_eq!(a.classify(), DecorationClass::Canonical);
        assert_eq!(b.classify(), DecorationClass::StableOnly);
        assert_eq!(c.classify(), DecorationClass::StableOnly);
    }

    #[test]
    fn psi_of_non_minimal() {
        let g = FerrersDiagram::new(vec![3, 2, 1]).unwrap().graph();
        let d = g.psi(&Configuration::new(vec![0, 1, 1, 0, 2])).unwrap();
        assert_eq!(d, dec("111/00/0", &[0, 1, 0, 0, 0]));
        let m = Configuration::new(vec![0, 1, 0, 0, 2]);
        assert_eq!(g.psi(&m).unwrap(), dec("111/01/0", &[0; 5]));
        assert_eq!(g.psi(&Configuration::zeros(5)), Err(Error::NotRecurrent));
    }

    #[test]
    fn classification_on_4432() {
        // nu = (1,1,2,1,1,2,1); column 6 holds three 1s, row 1 holds four 0s
        let t = "1111/0000/010/01";
        assert_eq!(dec(t, &[0; 7]).classify(), DecorationClass::Canonical);
        assert_eq!(dec(t, &[0, 0, 0, 0, 0, 1, 0]).classify(), DecorationClass::Canonical);
        assert_eq!(dec(t, &[0, 0, 0, 0, 0, 2, 0]).classify(), DecorationClass::StableOnly);
        assert_eq!(dec(t, &[1, 0, 0, 0, 0, 0, 0]).classify(), DecorationClass::StableOnly);
        // row 3 has only two 0s
        assert_eq!(dec(t, &[0, 0, 2, 0, 0, 0, 0]).classify(), DecorationClass::Invalid);
    }

    #[test]
    fn all_canonical_counts_product_of_nu() {
        let t = tab("1111/0000/010/01");
        let all = DecoratedTableau::all_canonical(&t);
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|d| d.is_canonical()));
    }

    #[test]
    fn ascii_round_trip() {
        let d = dec("111/00/0", &[0, 1, 0, 0, 0]);
        let text = d.to_string();
        assert_eq!(text, "1 1 1 |\n0 0   | 1\n0     | 0\n-----\n0 0 0");
        assert_eq!(text.parse::<DecoratedTableau>().unwrap(), d);
        assert!("1 1 |\n0 | 0\n---\n0".parse::<DecoratedTableau>().is_err());
    }
}
