mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use regset::factorization::{
    near_one_factorization_odd, one_factorize_bipartite, one_factorize_complete_even,
};
use regset::transversals::bundle_for_block;
use regset::{catalog, ConnectionBuilder, GroupTable, LayeredCosetGraph, Permutation};

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn generated_tables_are_groups(
        (degree, gens) in (1usize..=5).prop_flat_map(|d| (Just(d), prop::collection::vec(permutation(d), 1..=3)))
    ) {
        let g = GroupTable::from_permutation_generators(degree, &gens).unwrap();
        let again = GroupTable::from_permutation_generators(degree, &gens).unwrap();
        prop_assert_eq!(&g, &again);
        // Re-ingest the table: validates closure, identity, inverses, associativity.
        let rows: Vec<Vec<usize>> = g.rows().map(<[usize]>::to_vec).collect();
        let t = GroupTable::from_table(g.order(), rows).unwrap();
        prop_assert_eq!(t.order(), g.order());
        for i in g.elements() {
            prop_assert_eq!(g.inv(g.inv(i)), i);
            prop_assert_eq!(g.mul(i, g.inv(i)), 0);
            for j in g.elements() {
                prop_assert_eq!(g.inv(g.mul(i, j)), g.mul(g.inv(j), g.inv(i)));
                let pi = g.permutation(i).unwrap();
                let pj = g.permutation(j).unwrap();
                prop_assert_eq!(g.permutation(g.mul(i, j)).unwrap(), &pi.then(pj));
            }
        }
    }

    #[test]
    fn factorizations_cover_disjointly(k in 1usize..=12) {
        let bip = one_factorize_bipartite(k);
        let edges: HashSet<_> = bip.iter().flatten().collect();
        prop_assert_eq!(edges.len(), k * k);
        prop_assert_eq!(bip.iter().map(Vec::len).sum::<usize>(), k * k);

        let even = 2 * k.div_ceil(2);
        let circle = one_factorize_complete_even(even);
        let norm: HashSet<_> = circle.iter().flatten().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        prop_assert_eq!(norm.len(), even * (even - 1) / 2);

        let odd = 2 * (k / 2) + 1;
        let mut all = HashSet::new();
        for i in 1..=odd {
            for (a, b) in near_one_factorization_odd(odd, i).unwrap() {
                prop_assert!(a != i && b != i);
                prop_assert!(all.insert((a.min(b), a.max(b))));
            }
        }
        prop_assert_eq!(all.len(), odd * (odd / 2));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// bundle(b) ⊆ bundle(b + 2) for even b.
    #[test]
    fn even_chain_is_monotone(group_idx in 0usize..100, sub_idx in 0usize..100) {
        let names = common::sweep_names();
        let g = catalog(&names[group_idx % names.len()]).unwrap();
        let subs = common::proper_nontrivial(&g);
        prop_assume!(!subs.is_empty());
        let h = &subs[sub_idx % subs.len()];
        for block in h.class_decomposition().unwrap().blocks {
            let graph = LayeredCosetGraph::build(h, &block);
            for b in (0..h.order().saturating_sub(1)).step_by(2) {
                let small = bundle_for_block(&graph, b).unwrap();
                let large = bundle_for_block(&graph, b + 2).unwrap();
                prop_assert!(small.elements.iter().all(|y| large.elements.contains(y)));
            }
        }
    }

    #[test]
    fn builder_output_verifies(group_idx in 0usize..100, sub_idx in 0usize..100, a_seed in 0usize..64, b_seed in 0usize..64) {
        let names = common::sweep_names();
        let g = catalog(&names[group_idx % names.len()]).unwrap();
        let subs = common::proper_nontrivial(&g);
        prop_assume!(!subs.is_empty());
        let h = &subs[sub_idx % subs.len()];
        let avals = common::admissible_a(h.order());
        let a = avals[a_seed % avals.len()];
        let b = 2 * (b_seed % (h.order() / 2 + 1));
        let s = ConnectionBuilder::new(h).unwrap().build(a, b).unwrap();
        prop_assert_eq!(s.size(), a + b * (h.index() - 1));
        let counts = common::neighbour_counts(&g, &s.elements, h);
        for v in g.elements() {
            prop_assert_eq!(counts[v], if h.contains(v) { a } else { b });
        }
    }
}
