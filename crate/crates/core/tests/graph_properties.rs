use epgraph::graph::{
    connected_components, is_separating, strong_product, vertex_connectivity,
    vertex_connectivity_all_pairs, SimpleGraph,
};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn zero_iff_disconnected(g in graph(9)) {
        let k = vertex_connectivity(&g).unwrap().kappa;
        let disconnected = connected_components(&g).len() > 1;
        prop_assert_eq!(k == 0, disconnected || g.vertex_count() == 1);
    }

    #[test]
    fn pruned_search_matches_all_pairs(g in graph(10)) {
        prop_assert_eq!(vertex_connectivity(&g).unwrap(), vertex_connectivity_all_pairs(&g).unwrap());
    }

    #[test]
    fn cut_is_minimum_and_separates(g in graph(9)) {
        let c = vertex_connectivity(&g).unwrap();
        prop_assert!(c.kappa <= g.min_degree().unwrap());
        match c.witness {
            Some(w) => {
                prop_assert_eq!(w.cut.len(), c.kappa);
                prop_assert!(w.verify(&g));
                prop_assert!(c.kappa == 0 || is_separating(&g, &w.cut));
            }
            None => prop_assert!(g.is_complete()),
        }
    }

    #[test]
    fn strong_product_is_associative(a in graph(3), b in graph(3), c in graph(3)) {
        let ab = strong_product(&[&a, &b]).unwrap();
        let left = strong_product(&[&ab, &c]).unwrap();
        let bc = strong_product(&[&b, &c]).unwrap();
        let right = strong_product(&[&a, &bc]).unwrap();
        let flat = strong_product(&[&a, &b, &c]).unwrap();
        prop_assert_eq!(left.edges(), flat.edges());
        prop_assert_eq!(right.edges(), flat.edges());
    }

    #[test]
    fn strong_product_i_set_bound(a in graph(4), b in graph(4)) {
        let p = strong_product(&[&a, &b]).unwrap();
        let kp = vertex_connectivity(&p).unwrap().kappa;
        prop_assert!(kp < p.vertex_count());
        // a cut of one factor crossed with the whole other factor separates
        for (x, y) in [(&a, &b), (&b, &a)] {
            if !x.is_complete() {
                let kx = vertex_connectivity(x).unwrap().kappa;
                prop_assert!(kp <= kx * y.vertex_count());
            }
        }
    }
}
