use bei_core::cliques::{leaf_order, maximal_cliques};
use bei_core::gen;
use bei_core::genblock;
use bei_core::io::{parse_edgelist, parse_graph6, to_edgelist, to_graph6};
use bei_core::oracle;
use bei_core::products::{self, JoinSpec};
use bei_core::spectrum::{self, CutSet, Spectrum, DEFAULT_MAX_N};
use bei_core::{Graph, VertexSet};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
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

fn connected_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..0.8, any::<u64>())
        .prop_map(|(n, p, seed)| gen::random_connected_graph(&mut gen::rng(seed), n, p))
}

fn same_cuts(a: &[CutSet], b: &[CutSet]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.set == y.set && x.components == y.components)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn induced_on_everything_is_identity(g in graph_strategy(12)) {
        let sub = g.induced_subgraph(g.vertices());
        prop_assert_eq!(&sub.graph, &g);
        prop_assert_eq!(sub.lift(g.vertices()), g.vertices());
    }

    #[test]
    fn components_partition_the_vertices(g in graph_strategy(12)) {
        let comps = g.connected_components();
        prop_assert_eq!(comps.iter().map(|c| c.len()).sum::<usize>(), g.n());
        let union = comps.iter().fold(VertexSet::EMPTY, |acc, &c| acc.union(c));
        prop_assert_eq!(union, g.vertices());
        for c in &comps {
            prop_assert!(g.induced_subgraph(*c).graph.is_connected());
        }
    }

    #[test]
    fn facets_are_maximal_cliques_covering_edges(g in graph_strategy(12)) {
        let facets = maximal_cliques(&g).facets;
        for (i, &f) in facets.iter().enumerate() {
            prop_assert!(g.is_clique(f));
            for (j, &h) in facets.iter().enumerate() {
                prop_assert!(i == j || !f.is_subset(h));
            }
        }
        for (u, v) in g.edges() {
            prop_assert!(facets.iter().any(|f| f.contains(u) && f.contains(v)));
        }
        let covered = facets.iter().fold(VertexSet::EMPTY, |acc, &f| acc.union(f));
        prop_assert_eq!(covered, g.vertices());
    }

    #[test]
    fn chordal_iff_leaf_order(g in graph_strategy(10)) {
        let order = leaf_order(&maximal_cliques(&g));
        prop_assert_eq!(g.is_chordal(), order.is_some());
        if let Some(order) = order {
            prop_assert!(bei_core::cliques::is_leaf_order(&order));
        }
    }

    #[test]
    fn text_formats_round_trip(g in graph_strategy(20)) {
        prop_assert_eq!(&parse_graph6(to_graph6(&g).unwrap().as_bytes()).unwrap(), &g);
        prop_assert_eq!(&parse_edgelist(to_edgelist(&g).as_bytes()).unwrap(), &g);
    }

    #[test]
    fn cut_sets_match_oracle(g in graph_strategy(10)) {
        let spec = Spectrum::new(&g, DEFAULT_MAX_N).unwrap();
        prop_assert!(same_cuts(spec.cut_sets(), &oracle::bf_cut_sets(&g).unwrap()));
        prop_assert_eq!(spec.dim(), oracle::bf_dim(&g).unwrap());
        prop_assert_eq!(spec.height() + spec.dim(), 2 * g.n());
        prop_assert_eq!(spec.cut_sets()[0].set, VertexSet::EMPTY);
    }

    #[test]
    fn unmixed_iff_equal_heights(g in graph_strategy(10)) {
        let verdict = spectrum::is_unmixed(&g).unwrap();
        let n = g.n();
        let heights: Vec<usize> = spectrum::cut_sets(&g).unwrap().iter().map(|c| c.height(n)).collect();
        prop_assert_eq!(verdict.is_yes(), heights.windows(2).all(|w| w[0] == w[1]));
        prop_assert_eq!(verdict.is_yes(), oracle::bf_unmixed(&g).unwrap());
    }

    #[test]
    fn pair_with_k2_is_plain_unmixedness(g in connected_strategy(10)) {
        prop_assert_eq!(
            spectrum::is_pair_unmixed(2, &g).unwrap().is_yes(),
            spectrum::is_unmixed(&g).unwrap().is_yes()
        );
    }

    #[test]
    fn only_complete_graphs_have_one_prime(g in connected_strategy(10)) {
        let cuts = spectrum::cut_sets(&g).unwrap();
        prop_assert_eq!(cuts.len() == 1, g.is_complete());
    }

    #[test]
    fn generalized_block_closed_forms(n in 1usize..=11, seed in any::<u64>()) {
        let g = gen::random_generalized_block(&mut gen::rng(seed), n);
        let cuts: Vec<VertexSet> = genblock::minimal_cut_sets(&g).unwrap().into_iter().map(|c| c.set).collect();
        prop_assert_eq!(cuts, oracle::bf_minimal_vertex_cuts(&g).unwrap());
        prop_assert_eq!(genblock::unmixed_genblock(&g).unwrap().is_yes(), oracle::bf_unmixed(&g).unwrap());
        let depth = genblock::depth_formula(&g).unwrap();
        let dim = oracle::bf_dim(&g).unwrap();
        prop_assert!(depth <= dim);
        prop_assert_eq!(genblock::cm_status(&g).unwrap().is_yes(), depth == dim);
    }

    #[test]
    fn join_formulas_match_oracle(a in graph_strategy(6), b in graph_strategy(6)) {
        let spec = JoinSpec::new(a, b).unwrap();
        let g = spec.graph();
        prop_assert!(same_cuts(&products::join_cut_sets(&spec).unwrap(), &oracle::bf_cut_sets(&g).unwrap()));
        prop_assert_eq!(products::dim_join(&spec).unwrap(), oracle::bf_dim(&g).unwrap());
        if let Some(v) = products::unmixed_join(&spec, 2).unwrap().decided() {
            prop_assert_eq!(v, oracle::bf_unmixed(&g).unwrap());
        }
        prop_assert!(products::unmixed_join_or_fallback(&spec, 2).unwrap().decided().is_some());
    }

    #[test]
    fn corona_formulas_match_oracle(h in connected_strategy(4), fiber in connected_strategy(3)) {
        let g = products::corona(&h, &fiber).unwrap();
        prop_assert!(same_cuts(&products::cutsets_corona(&h, &fiber).unwrap(), &oracle::bf_cut_sets(&g).unwrap()));
        prop_assert_eq!(products::dim_corona(&h, &fiber).unwrap(), oracle::bf_dim(&g).unwrap());
        if let Some(v) = products::unmixed_corona(2, &h, &fiber).unwrap().decided() {
            prop_assert_eq!(v, oracle::bf_unmixed(&g).unwrap());
        }
    }
}
