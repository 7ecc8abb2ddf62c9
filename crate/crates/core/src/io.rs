//! JSON records for diagrams, configurations, tableaux, permutations and trees.
//!
//! Vertex-indexed arrays (`heights`, `decorations`) hold the value of vertex
//! `k + 1` at index `k`.

use serde::{Deserialize, Serialize};

use crate::decorated::DecoratedTableau;
use crate::error::{Error, Result};
use crate::ferrers::FerrersDiagram;
use crate::perm::{DecoratedPermutation, Permutation};
use crate::sandpile::Configuration;
use crate::tableau::EWTableau;
use crate::tree::IntransitiveTree;

/// `{"parts":[5,3,3,2]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeRecord {
    pub parts: Vec<usize>,
}

/// `{"shape":[5,3,3,2],"heights":[0,0,1,2,1,1,0,3]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigRecord {
    pub shape: Vec<usize>,
    pub heights: Vec<u32>,
}

/// `{"shape":[3,2,1],"rows":["111","00","0"],"decorations":[0,1,0,0,0]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauRecord {
    pub shape: Vec<usize>,
    pub rows: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decorations: Option<Vec<u32>>,
}

/// `{"perm":[1,2,7,3,8,6,4,5],"decorations":[0,0,0,0,0,0,0,0]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermRecord {
    pub perm: Vec<usize>,
    #[serde(default)]
    pub decorations: Vec<u32>,
}

/// `{"parent":[null,6,9,2,6,6,0,4,2,0]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRecord {
    pub parent: Vec<Option<usize>>,
}

impl From<&FerrersDiagram> for ShapeRecord {
    fn from(d: &FerrersDiagram) -> Self {
        ShapeRecord {
            parts: d.parts().to_vec(),
        }
    }
}

impl TryFrom<ShapeRecord> for FerrersDiagram {
    type Error = Error;
    fn try_from(r: ShapeRecord) -> Result<Self> {
        FerrersDiagram::new(r.parts)
    }
}

impl ConfigRecord {
    pub fn new(shape: &FerrersDiagram, c: &Configuration) -> Self {
        ConfigRecord {
            shape: shape.parts().to_vec(),
            heights: c.heights().to_vec(),
        }
    }

    /// Checks the shape and the number of heights.
    pub fn decode(self) -> Result<(FerrersDiagram, Configuration)> {
        let d = FerrersDiagram::new(self.shape)?;
        let c = Configuration::for_graph(&d.graph(), self.heights)?;
        Ok((d, c))
    }
}

impl From<&EWTableau> for TableauRecord {
    fn from(t: &EWTableau) -> Self {
        TableauRecord {
            shape: t.shape().parts().to_vec(),
            rows: t.row_strings(),
            decorations: None,
        }
    }
}

impl From<&DecoratedTableau> for TableauRecord {
    fn from(d: &DecoratedTableau) -> Self {
        TableauRecord {
            decorations: Some(d.decorations().to_vec()),
            ..TableauRecord::from(d.tableau())
        }
    }
}

impl TryFrom<TableauRecord> for DecoratedTableau {
    type Error = Error;
    /// Missing decorations read as all zeros.
    fn try_from(r: TableauRecord) -> Result<Self> {
        let shape = FerrersDiagram::new(r.shape)?;
        let t = EWTableau::parse_with_shape(&shape, &r.rows.join("\n"))?;
        match r.decorations {
            Some(a) => DecoratedTableau::new(t, a),
            None => Ok(DecoratedTableau::undecorated(t)),
        }
    }
}

impl From<&DecoratedPermutation> for PermRecord {
    fn from(d: &DecoratedPermutation) -> Self {
        PermRecord {
            perm: d.perm().letters().to_vec(),
            decorations: d.decorations().to_vec(),
        }
    }
}

impl TryFrom<PermRecord> for DecoratedPermutation {
    type Error = Error;
    /// An empty `decorations` array reads as all zeros.
    fn try_from(r: PermRecord) -> Result<Self> {
        let perm = Permutation::new(r.perm)?;
        if r.decorations.is_empty() {
            Ok(DecoratedPermutation::undecorated(perm))
        } else {
            DecoratedPermutation::new(perm, r.decorations)
        }
    }
}

impl From<&IntransitiveTree> for TreeRecord {
    fn from(t: &IntransitiveTree) -> Self {
        TreeRecord {
            parent: t.parents().to_vec(),
        }
    }
}

impl TryFrom<TreeRecord> for IntransitiveTree {
    type Error = Error;
    fn try_from(r: TreeRecord) -> Result<Self> {
        IntransitiveTree::new(r.parent)
    }
}

/// Parses a JSON record, reporting malformed input as [`Error::Parse`].
pub fn from_json<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records always serialize")
}
