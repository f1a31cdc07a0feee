//! Randomised properties: serialisation round trips, metric axioms,
//! and monotonicity of the packing chromatic number.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use packnum::{
    distances, emit_graph6, mycielski_power, mycielskian, packing_chromatic_number, parse_graph6,
    Budget, Graph,
};

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=24).prop_flat_map(|n| {
        let pairs = n * (n.saturating_sub(1)) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        let line = emit_graph6(&g).unwrap();
        let back = parse_graph6(&line).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_graph6(&back).unwrap(), line);
    }

    #[test]
    fn distance_metric_axioms(g in arb_graph()) {
        let dm = distances(&g);
        let n = g.n();
        for u in 0..n {
            prop_assert_eq!(dm.get(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                prop_assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
                prop_assert_eq!(dm.is_unreachable(u, v), !g.component_of(u).contains(v));
                for w in 0..n {
                    if !dm.is_unreachable(u, v) && !dm.is_unreachable(v, w) {
                        prop_assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
                    }
                }
            }
        }
    }

    #[test]
    fn mycielskian_order_and_size(g in arb_graph()) {
        let m = mycielskian(&g).graph;
        prop_assert_eq!(m.n(), 2 * g.n() + 1);
        prop_assert_eq!(m.edge_count(), 3 * g.edge_count() + g.n());
    }
}

#[test]
fn packing_number_monotone_under_edge_deletion() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let budget = Budget::default();
    let mut checked = 0;
    while checked < 200 {
        let n = rng.gen_range(4..=7);
        let p = [0.3, 0.5, 0.7][rng.gen_range(0..3)];
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        if edges.is_empty() {
            continue;
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let (before, _) = packing_chromatic_number(&g, budget).unwrap();
        let &(u, v) = &edges[rng.gen_range(0..edges.len())];
        let smaller = g.delete_edge(u, v);
        let (after, _) = packing_chromatic_number(&smaller, budget).unwrap();
        assert!(
            after <= before,
            "dropping ({u}, {v}) raised the packing number {before} -> {after}"
        );
        checked += 1;
    }
}

#[test]
fn iterated_mycielskian_orders() {
    for n in 1..=4 {
        let g = Graph::from_edges(n, &[]).unwrap();
        for k in 1..=3 {
            let m = mycielski_power(&g, k);
            assert_eq!(m.n() + 1, (n + 1) << k);
        }
    }
}
