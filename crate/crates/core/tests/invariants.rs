use ferrers_sandpile::{
    diagrams_up_to, enumerate_tableaux, stabilize_perm, Configuration, DecoratedPermutation,
    DecoratedTableau, FerrersDiagram, FerrersGraph, IntransitiveTree, Permutation,
};
use proptest::prelude::*;

fn small_shapes() -> Vec<FerrersDiagram> {
    diagrams_up_to(8)
}

/// Topples the highest-labelled unstable vertex first.
fn stabilize_descending(g: &FerrersGraph, c: &Configuration) -> Configuration {
    let mut h = c.heights().to_vec();
    while let Some(v) = (1..=g.n()).rev().find(|&v| h[v - 1] as usize >= g.degree(v)) {
        h[v - 1] -= g.degree(v) as u32;
        for &u in g.neighbors(v) {
            if u != 0 {
                h[u - 1] += 1;
            }
        }
    }
    Configuration::new(h)
}

fn shape_and_heights(max: u32) -> impl Strategy<Value = (FerrersDiagram, Vec<u32>)> {
    (0..small_shapes().len()).prop_flat_map(move |i| {
        let d = small_shapes()[i].clone();
        let n = d.size();
        (Just(d), proptest::collection::vec(0..max, n))
    })
}

fn recurrent(g: &FerrersGraph, extra: &[u32]) -> Configuration {
    let c = Configuration::max_stable(g).plus(extra).unwrap();
    g.stabilize(&c).unwrap().stable
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn abelian_property((d, h) in shape_and_heights(12)) {
        let g = d.graph();
        let c = Configuration::new(h);
        prop_assert_eq!(g.stabilize(&c).unwrap().stable, stabilize_descending(&g, &c));
    }

    #[test]
    fn burning_and_level((d, h) in shape_and_heights(4)) {
        let g = d.graph();
        let c = recurrent(&g, &h);
        let order = g.burning_order(&c).unwrap().expect("recurrent configurations burn");
        prop_assert_eq!(order.order.len(), g.vertex_count());
        let level = g.level(&c);
        prop_assert!(level >= 0);
        prop_assert_eq!(level == 0, g.is_minimal_recurrent(&c).unwrap());
        prop_assert!(g.minrec(&c).unwrap().heights().iter().zip(c.heights()).all(|(m, x)| m <= x));
    }

    #[test]
    fn psi_and_perm_round_trip((d, h) in shape_and_heights(4)) {
        let g = d.graph();
        let c = recurrent(&g, &h);
        let dt = g.psi(&c).unwrap();
        prop_assert!(dt.is_canonical());
        prop_assert_eq!(dt.to_configuration(), c.clone());
        let dp = DecoratedPermutation::from_tableau(&dt);
        prop_assert_eq!(&dp, &g.decorated_permutation(&c).unwrap());
        prop_assert_eq!(dp.to_tableau().unwrap(), dt.clone());
        let text = dt.to_string();
        prop_assert_eq!(text.parse::<DecoratedTableau>().unwrap(), dt);
        prop_assert_eq!(dp.to_string().parse::<DecoratedPermutation>().unwrap(), dp.clone());
        let tree = IntransitiveTree::from_permutation(&dp).unwrap();
        prop_assert_eq!(tree.to_permutation(), dp);
    }

    /// Any decoration, stable or not, stabilizes to the permutation of the
    /// graph-side stabilization.
    #[test]
    fn perm_stabilization_matches_graph(
        letters in Just((1..=7usize).collect::<Vec<_>>()).prop_shuffle(),
        a in proptest::collection::vec(0u32..5, 7),
    ) {
        let perm = Permutation::new(letters).unwrap();
        let g = perm.shape().unwrap().graph();
        let d = DecoratedPermutation::new(perm, a).unwrap();
        let stable = g.stabilize(&d.to_configuration()).unwrap().stable;
        let expected = DecoratedPermutation::from_tableau(&g.psi(&stable).unwrap());
        let (got, trace) = stabilize_perm(&d);
        prop_assert_eq!(&got, &expected);
        for step in &trace {
            prop_assert_eq!(step.state.configuration().heights().len(), g.n());
        }
    }

    #[test]
    fn tableau_round_trips(i in 0usize..10_000) {
        let shapes = small_shapes();
        let d = &shapes[i % shapes.len()];
        let all = enumerate_tableaux(d);
        let t = &all[(i / shapes.len()) % all.len()];
        let g = d.graph();
        prop_assert_eq!(&g.phi_ct(&t.phi_tc()).unwrap(), t);
        prop_assert_eq!(&t.to_compact().parse::<ferrers_sandpile::EWTableau>().unwrap(), t);
        prop_assert_eq!(g.mu(&t.phi_tc()).unwrap(), t.nu());
    }
}
