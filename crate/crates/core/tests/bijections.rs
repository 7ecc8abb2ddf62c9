use std::collections::BTreeSet;

use ferrers_sandpile::oracle::{
    canonical_decorated_permutations, enumerate_intransitive_trees, enumerate_minimal_recurrent,
    enumerate_tableaux_brute, DEFAULT_BUDGET,
};
use ferrers_sandpile::{diagrams_up_to, enumerate_tableaux, FerrersDiagram, FerrersGraph, IntransitiveTree};

#[test]
fn trees_match_canonical_permutations() {
    for n in 0..=6 {
        let trees: BTreeSet<Vec<Option<usize>>> =
            enumerate_intransitive_trees(n, DEFAULT_BUDGET).unwrap().into_iter().collect();
        let perms = canonical_decorated_permutations(n, DEFAULT_BUDGET).unwrap();
        assert_eq!(trees.len(), perms.len(), "n = {n}");
        let images: BTreeSet<Vec<Option<usize>>> = perms
            .iter()
            .map(|d| {
                let t = IntransitiveTree::from_permutation(d).unwrap();
                assert_eq!(&t.to_permutation(), d);
                t.parents().to_vec()
            })
            .collect();
        assert_eq!(images, trees, "n = {n}");
        for p in &trees {
            let t = IntransitiveTree::new(p.clone()).unwrap();
            assert_eq!(IntransitiveTree::from_permutation(&t.to_permutation()).unwrap(), t);
        }
    }
}

#[test]
fn backtracking_equals_brute_force() {
    for d in diagrams_up_to(6) {
        let mut fast: Vec<String> = enumerate_tableaux(&d).iter().map(|t| t.to_compact()).collect();
        fast.sort();
        assert_eq!(fast, enumerate_tableaux_brute(&d, DEFAULT_BUDGET).unwrap(), "{d}");
    }
}

#[test]
fn tableaux_count_minimal_recurrent() {
    for d in diagrams_up_to(8) {
        let g = d.graph();
        let min = enumerate_minimal_recurrent(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(enumerate_tableaux(&d).len(), min.len(), "{d}");
    }
}

/// Spanning trees by deletion-contraction on a multigraph edge list.
fn deletion_contraction(vertices: usize, edges: &[(usize, usize)]) -> u64 {
    if vertices == 1 {
        return 1;
    }
    let Some(&(a, b)) = edges.first() else {
        return 0;
    };
    let rest = &edges[1..];
    let deleted = deletion_contraction(vertices, rest);
    // merge b into a, renumber the last vertex as b, drop loops
    let last = vertices - 1;
    let relabel = |v: usize| {
        let v = if v == b { a } else { v };
        if v == last { b } else { v }
    };
    let contracted: Vec<(usize, usize)> = rest
        .iter()
        .map(|&(u, v)| (relabel(u), relabel(v)))
        .filter(|(u, v)| u != v)
        .collect();
    deleted + deletion_contraction(vertices - 1, &contracted)
}

#[test]
fn matrix_tree_agrees_with_deletion_contraction() {
    for d in diagrams_up_to(7) {
        let g: FerrersGraph = d.graph();
        let dc = deletion_contraction(g.vertex_count(), &g.edges());
        assert_eq!(g.spanning_tree_count().unwrap(), dc as u128, "{d}");
    }
    let k33: FerrersDiagram = "3,3,3".parse().unwrap();
    assert_eq!(k33.graph().spanning_tree_count().unwrap(), 81);
}
