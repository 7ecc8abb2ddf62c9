//! Intransitive trees and their bijection with canonical decorated permutations.
//!
//! Level `k` of the tree is block `k` of the run decomposition. A letter in
//! an odd block hangs below one of the smaller letters of the previous
//! level and its decoration is that parent's rank counted from the
//! smallest; in an even block it hangs below a larger letter, ranked from
//! the largest.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{DecoratedPermutation, Permutation};

/// Rooted tree on `0..=n` with root `0`, stored as a parent array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntransitiveTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl IntransitiveTree {
    /// Checks that `parent` describes a tree rooted at `0` in which every
    /// vertex is smaller than all its neighbors or larger than all of them.
    pub fn new(parent: Vec<Option<usize>>) -> Result<Self> {
        let n1 = parent.len();
        if n1 == 0 {
            return Err(Error::InvalidTree("no vertices".into()));
        }
        if parent[0].is_some() {
            return Err(Error::InvalidTree("vertex 0 must be the root".into()));
        }
        let mut children = vec![Vec::new(); n1];
        for (v, p) in parent.iter().enumerate().skip(1) {
            match *p {
                None => return Err(Error::InvalidTree(format!("vertex {v} has no parent"))),
                Some(p) if p >= n1 || p == v => {
                    return Err(Error::InvalidTree(format!("vertex {v} has parent {p}")))
                }
                Some(p) => children[p].push(v),
            }
        }
        let tree = IntransitiveTree { parent, children };
        if tree.bfs_order().len() != n1 {
            return Err(Error::InvalidTree("parent array contains a cycle".into()));
        }
        for v in 0..n1 {
            let mut nb = tree.neighbors(v);
            let lower = nb.clone().all(|u| u > v);
            if !lower && !nb.all(|u| u < v) {
                return Err(Error::NotIntransitive(v));
            }
        }
        Ok(tree)
    }

    /// The star with every vertex attached to `0`.
    pub fn star(n: usize) -> Self {
        let mut parent = vec![Some(0); n + 1];
        parent[0] = None;
        IntransitiveTree::new(parent).expect("a star is intransitive")
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Children in increasing order.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Largest label `n`.
    pub fn n(&self) -> usize {
        self.parent.len() - 1
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + Clone + '_ {
        self.parent[v].into_iter().chain(self.children[v].iter().copied())
    }

    fn bfs_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.parent.len());
        let mut queue = VecDeque::from([0]);
        let mut seen = vec![false; self.parent.len()];
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            out.push(v);
            for &c in &self.children[v] {
                if !seen[c] {
                    seen[c] = true;
                    queue.push_back(c);
                }
            }
        }
        out
    }

    /// Vertices by depth, each level in increasing order.
    pub fn bfs_levels(&self) -> Vec<Vec<usize>> {
        let mut levels: Vec<Vec<usize>> = vec![vec![0]];
        loop {
            let mut next: Vec<usize> = levels
                .last()
                .expect("nonempty")
                .iter()
                .flat_map(|&v| self.children[v].iter().copied())
                .collect();
            if next.is_empty() {
                return levels;
            }
            next.sort_unstable();
            levels.push(next);
        }
    }

    /// Edges `parent -- child`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (p, v)))
            .collect();
        e.sort_unstable();
        e
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph intransitive_tree {\n");
        for (p, c) in self.edges() {
            s.push_str(&format!("  {p} -- {c};\n"));
        }
        s.push('}');
        s
    }

    /// The canonical decorated permutation of the tree.
    pub fn to_permutation(&self) -> DecoratedPermutation {
        let levels = self.bfs_levels();
        let mut decorations = vec![0; self.n()];
        for k in 1..levels.len() {
            for &v in &levels[k] {
                let p = self.parent[v].expect("non-root");
                let below = levels[k - 1].iter().filter(|&&u| u < p).count();
                let rank = if k % 2 == 1 { below } else { levels[k - 1].len() - 1 - below };
                decorations[v - 1] = rank as u32;
            }
        }
        let perm = Permutation::from_blocks(&levels);
        DecoratedPermutation::new(perm, decorations).expect("lengths agree")
    }

    /// The tree of a canonical decorated permutation.
    pub fn from_permutation(d: &DecoratedPermutation) -> Result<Self> {
        d.check_canonical()?;
        let levels = d.perm().run_decomposition().blocks();
        let mut parent = vec![None; d.len() + 1];
        for k in 1..levels.len() {
            for &v in &levels[k] {
                let a = d.get(v) as usize;
                let prev = &levels[k - 1];
                let p = if k % 2 == 1 { prev[a] } else { prev[prev.len() - 1 - a] };
                parent[v] = Some(p);
            }
        }
        IntransitiveTree::new(parent)
    }
}

/// Parent list with `-` for the root: `-,6,9,2,6,6,0,4,2,0`.
impl fmt::Display for IntransitiveTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parent
            .iter()
            .map(|p| p.map_or_else(|| "-".to_string(), |p| p.to_string()))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for IntransitiveTree {
    type Err = Error;

    /// Accepts the display form; `null` also marks the root and brackets are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parent = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t {
                "-" | "null" => Ok(None),
                _ => t
                    .parse()
                    .map(Some)
                    .map_err(|_| Error::Parse(format!("not a parent: {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        IntransitiveTree::new(parent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nine_vertex_tree() -> IntransitiveTree {
        let p = [None, Some(6), Some(9), Some(2), Some(6), Some(6), Some(0), Some(4), Some(2), Some(0)];
        IntransitiveTree::new(p.to_vec()).unwrap()
    }

    #[test]
    fn nine_vertex_tree_both_ways() {
        let d: DecoratedPermutation = "6^0 9^0 - 5^1 4^1 2^0 1^1 - 3^1 7^2 8^1".parse().unwrap();
        assert_eq!(d.perm().to_string(), "695421378");
        let t = IntransitiveTree::from_permutation(&d).unwrap();
        assert_eq!(t, nine_vertex_tree());
        assert_eq!(t.children(0), &[6, 9]);
        assert_eq!(t.children(6), &[1, 4, 5]);
        assert_eq!(t.children(2), &[3, 8]);
        assert_eq!(t.to_permutation(), d);
        assert_eq!(
            t.bfs_levels(),
            vec![vec![0], vec![6, 9], vec![1, 2, 4, 5], vec![3, 7, 8]]
        );
    }

    #[test]
    fn star_is_identity() {
        let t = IntransitiveTree::star(5);
        let d = t.to_permutation();
        assert_eq!(d.perm(), &Permutation::identity(5));
        assert_eq!(d.decorations(), &[0; 5]);
        assert_eq!(IntransitiveTree::from_permutation(&d).unwrap(), t);
        assert_eq!(t.bfs_levels(), vec![vec![0], vec![1, 2, 3, 4, 5]]);
    }

    #[test]
    fn alternating_path() {
        // 0 - 4 - 1 - 3 - 2
        let t = IntransitiveTree::new(vec![None, Some(4), Some(3), Some(1), Some(0)]).unwrap();
        let d = t.to_permutation();
        assert_eq!(d.perm().to_string(), "4132");
        assert_eq!(IntransitiveTree::from_permutation(&d).unwrap(), t);
    }

    #[test]
    fn rejects_bad_trees() {
        // 0 - 1 - 2 is not intransitive at 1
        assert_eq!(
            IntransitiveTree::new(vec![None, Some(0), Some(1)]),
            Err(Error::NotIntransitive(1))
        );
        assert!(matches!(
            IntransitiveTree::new(vec![None, Some(2), Some(1)]),
            Err(Error::InvalidTree(_))
        ));
        assert!(matches!(IntransitiveTree::new(vec![Some(0)]), Err(Error::InvalidTree(_))));
    }

    #[test]
    fn non_canonical_permutation_is_refused() {
        let d: DecoratedPermutation = "3^0 - 1^0 - 4^0 - 2^1".parse().unwrap();
        assert!(matches!(
            IntransitiveTree::from_permutation(&d),
            Err(Error::DecorationOutOfRange { letter: 2, .. })
        ));
    }

    #[test]
    fn text_form() {
        let t = nine_vertex_tree();
        assert_eq!(t.to_string(), "-,6,9,2,6,6,0,4,2,0");
        assert_eq!(t.to_string().parse::<IntransitiveTree>().unwrap(), t);
        assert_eq!("[null, 0]".parse::<IntransitiveTree>().unwrap(), IntransitiveTree::star(1));
        assert!(matches!("-,x".parse::<IntransitiveTree>(), Err(Error::Parse(_))));
    }

    #[test]
    fn dot_output() {
        let dot = IntransitiveTree::star(2).to_dot();
        assert_eq!(dot, "graph intransitive_tree {\n  0 -- 1;\n  0 -- 2;\n}");
    }
}
