use hytrex::activity::EdgeOrder;
use hytrex::graph::{Side, Vertex};
use hytrex::hypertree::{enumerate_by_tree_search, enumerate_hypertrees};
use hytrex::poly::{exterior_polynomial, first_gap, interior_polynomial, IntPoly};
use hytrex::transforms::add_pendant;
use hytrex::verify::corpus::random_graph;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_params() -> impl Strategy<Value = (usize, usize, u64)> {
    (1usize..=5, 1usize..=5, any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polynomials_ignore_the_order((v, e, seed) in graph_params(), order_seed in any::<u64>()) {
        let g = random_graph(v, e, seed).unwrap();
        let id = EdgeOrder::identity(g.e_count());
        let other = EdgeOrder::random(g.e_count(), &mut ChaCha8Rng::seed_from_u64(order_seed));
        prop_assert_eq!(interior_polynomial(&g, &id).unwrap(), interior_polynomial(&g, &other).unwrap());
        prop_assert_eq!(
            exterior_polynomial(&g, &id, Side::E).unwrap(),
            exterior_polynomial(&g, &other, Side::E).unwrap()
        );
    }

    #[test]
    fn interior_is_self_dual((v, e, seed) in graph_params()) {
        let g = random_graph(v, e, seed).unwrap();
        let dual = g.dual();
        prop_assert_eq!(
            interior_polynomial(&g, &EdgeOrder::identity(g.e_count())).unwrap(),
            interior_polynomial(&dual, &EdgeOrder::identity(dual.e_count())).unwrap()
        );
    }

    #[test]
    fn evaluations_at_one_count_hypertrees((v, e, seed) in graph_params()) {
        let g = random_graph(v, e, seed).unwrap();
        let order = EdgeOrder::identity(g.e_count());
        let n = BigInt::from(enumerate_hypertrees(&g).unwrap().len());
        let i = interior_polynomial(&g, &order).unwrap();
        let x = exterior_polynomial(&g, &order, Side::E).unwrap();
        prop_assert_eq!(i.coefficient_sum(), n.clone());
        prop_assert_eq!(x.coefficient_sum(), n);
        prop_assert_eq!(first_gap(&i), None);
        prop_assert_eq!(first_gap(&x), None);
        prop_assert_eq!(i.coeff(1), BigInt::from(g.nullity()));
    }

    #[test]
    fn closure_matches_brute_force((v, e, seed) in graph_params()) {
        let g = random_graph(v, e, seed).unwrap();
        prop_assert_eq!(enumerate_hypertrees(&g).unwrap(), enumerate_by_tree_search(&g).unwrap());
    }

    #[test]
    fn pendants_change_nothing((v, e, seed) in graph_params(), at_v in any::<bool>()) {
        let g = random_graph(v, e, seed).unwrap();
        let u = if at_v { Vertex::V(0) } else { Vertex::E(0) };
        let h = add_pendant(&g, u).unwrap();
        let (og, oh) = (EdgeOrder::identity(g.e_count()), EdgeOrder::identity(h.e_count()));
        prop_assert_eq!(interior_polynomial(&g, &og).unwrap(), interior_polynomial(&h, &oh).unwrap());
        prop_assert_eq!(
            exterior_polynomial(&g, &og, Side::E).unwrap(),
            exterior_polynomial(&h, &oh, Side::E).unwrap()
        );
    }
}

#[test]
fn single_edge_is_trivial() {
    let g = random_graph(1, 1, 0).unwrap();
    let order = EdgeOrder::identity(1);
    assert_eq!(interior_polynomial(&g, &order).unwrap(), IntPoly::one());
    assert_eq!(exterior_polynomial(&g, &order, Side::E).unwrap(), IntPoly::one());
}
