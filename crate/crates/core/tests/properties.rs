//! Property tests for cross-module invariants.

use proptest::prelude::*;
use smoothgraph_core::decomposition::{auxiliary_blob_graph, blob_partition};
use smoothgraph_core::expansion::{
    connected_edge_expansion_exact, cut_stats, edge_isoperimetric_exact, sweep_cut_upper_bound,
    vertex_isoperimetric_exact,
};
use smoothgraph_core::graph_core::{degeneracy, diameter, perturb};
use smoothgraph_core::harness::cell_seed;
use smoothgraph_core::longpath::{long_path_blob_heuristic, longest_path_exact};
use smoothgraph_core::subset_enum::{decode_connected_set, encode_connected_set};
use smoothgraph_core::walks::{
    lazy_step, stationary, stationary_flow, tv_distance, worst_tv_trajectory, TransitionOperator,
};
use smoothgraph_core::{Graph, PerturbationParams};

/// Connected graph: a random recursive tree plus a handful of extra pairs.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
        let extra = proptest::collection::vec((0..n, 0..n), 0..=2 * n);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let tree = parents.into_iter().enumerate().map(|(i, p)| (p, i + 1));
            let more = extra.into_iter().filter(|(u, v)| u != v);
            Graph::from_edges_dedup(n, tree.chain(more)).unwrap()
        })
    })
}

fn graph_and_subset(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(any::<bool>(), n)).prop_filter_map("proper subset", |(g, mask)| {
            let set: Vec<usize> = (0..g.n()).filter(|&i| mask[i]).collect();
            (!set.is_empty() && set.len() < g.n()).then_some((g, set))
        })
    })
}

fn edges_inside(g: &Graph, mask: u32) -> usize {
    g.edges().filter(|&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn perturb_union_and_monotone_diameter(g in connected_graph(40), eps in 0.0f64..2.0, seed: u64) {
        let params = PerturbationParams::new(eps, seed);
        let pg = perturb(&g, &params).unwrap();
        let fresh = pg.random_edges.iter().filter(|&&(u, v)| !g.has_edge(u, v)).count();
        prop_assert_eq!(pg.merged.m(), g.m() + fresh);
        for (u, v) in g.edges().chain(pg.random_edges.iter().copied()) {
            prop_assert!(pg.merged.has_edge(u, v));
        }
        prop_assert!(diameter(&pg.merged).unwrap() <= diameter(&g).unwrap());
        let again = perturb(&g, &params).unwrap();
        prop_assert_eq!(&again.random_edges, &pg.random_edges);
    }

    #[test]
    fn degeneracy_at_most_max_degree(g in connected_graph(30)) {
        prop_assert!(degeneracy(&g) <= g.max_degree());
    }

    #[test]
    fn flow_matches_cut_stats((g, set) in graph_and_subset(14)) {
        let stats = cut_stats(&g, &set).unwrap();
        let q = stationary_flow(&g, &set).unwrap();
        prop_assert!((q - stats.q_s).abs() <= 1e-12 * stats.q_s.max(1e-300));
        let x = stats.phi_via_flow();
        let y = stats.phi_via_boundary();
        prop_assert!((x - y).abs() <= 1e-12 * x.max(y));
    }

    #[test]
    fn operator_is_stochastic_and_reversible(g in connected_graph(25)) {
        let op = TransitionOperator::new(&g).unwrap();
        let st = stationary(&g).unwrap();
        prop_assert!(op.max_row_defect() <= 1e-12);
        prop_assert!(op.max_reversibility_defect(&st.pi) <= 1e-12);
        for u in 0..g.n() {
            prop_assert_eq!(op.get(u, u), 0.5);
        }
        // Sparse step agrees with the dense operator.
        let x: Vec<f64> = (0..g.n()).map(|i| (i + 1) as f64).collect();
        let mut out = vec![0.0; g.n()];
        lazy_step(&g, &x, &mut out);
        let dense = op.apply(&x);
        for (a, b) in out.iter().zip(&dense) {
            prop_assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0));
        }
    }

    #[test]
    fn tv_is_half_l1_and_max_over_events(
        p in proptest::collection::vec(0.0f64..1.0, 1..=10),
        q in proptest::collection::vec(0.0f64..1.0, 10),
    ) {
        let n = p.len();
        let norm = |v: &[f64]| {
            let s: f64 = v.iter().sum();
            if s == 0.0 { vec![1.0 / n as f64; n] } else { v.iter().map(|x| x / s).collect::<Vec<_>>() }
        };
        let (p, q) = (norm(&p), norm(&q[..n]));
        let best = (0u32..1 << n)
            .map(|a| (0..n).filter(|i| a >> i & 1 == 1).map(|i| p[i] - q[i]).sum::<f64>().abs())
            .fold(0.0, f64::max);
        prop_assert!((tv_distance(&p, &q) - best).abs() <= 1e-12);
    }

    #[test]
    fn worst_tv_never_increases(g in connected_graph(20)) {
        let traj = worst_tv_trajectory(&g, 60).unwrap();
        for w in traj.windows(2) {
            prop_assert!(w[1] <= w[0] + 1e-12);
        }
    }

    #[test]
    fn expansion_orderings(g in connected_graph(12)) {
        let c = edge_isoperimetric_exact(&g, 0.5).unwrap().value;
        let iota = vertex_isoperimetric_exact(&g, 0.5).unwrap().value;
        prop_assert!(iota >= c / g.max_degree() as f64 - 1e-12);
        prop_assert!(sweep_cut_upper_bound(&g).unwrap().value >= c - 1e-12);
        prop_assert!(connected_edge_expansion_exact(&g).unwrap().value >= c - 1e-12);
    }

    #[test]
    fn encoding_round_trip((g, set) in graph_and_subset(12)) {
        // Only connected sets have codes; take the component of the first member.
        let member: Vec<bool> = (0..g.n()).map(|v| set.contains(&v)).collect();
        let mut comp = vec![set[0]];
        let mut seen = vec![false; g.n()];
        seen[set[0]] = true;
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if member[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        for &root in &comp {
            let code = encode_connected_set(&g, &comp, root).unwrap();
            prop_assert_eq!(decode_connected_set(&g, root, &code.bits).unwrap(), comp.clone());
        }
    }

    #[test]
    fn blob_partition_invariants(g in connected_graph(60), k in 1usize..20) {
        prop_assume!(k <= g.n());
        let part = blob_partition(&g, k).unwrap();
        prop_assert!(part.validate(&g).is_ok());
        let aux = auxiliary_blob_graph(&g, &part).unwrap();
        for (&(i, j), &(x, y)) in &aux.witnesses {
            prop_assert!(g.has_edge(x, y));
            prop_assert_eq!((part.blob_of[x], part.blob_of[y]), (i, j));
        }
    }

    #[test]
    fn heuristic_dominated_by_exact(g in connected_graph(14), eps in 0.1f64..3.0, k in 1usize..6, seed: u64) {
        prop_assume!(k <= g.n());
        let pg = perturb(&g, &PerturbationParams::new(eps.min(g.n() as f64 * 0.9), seed)).unwrap();
        let h = long_path_blob_heuristic(&pg, k, seed).unwrap();
        h.path.validate(&pg.merged).unwrap();
        prop_assert!(h.path.length >= h.aux_length);
        prop_assert!(h.path.length <= longest_path_exact(&pg.merged).unwrap().length);
    }

    #[test]
    fn cell_seeds_are_independent(root: u64, n in 1usize..1 << 20, s in 0usize..100) {
        prop_assert_ne!(cell_seed(root, n, s), cell_seed(root, n, s + 1));
        prop_assert_ne!(cell_seed(root, n, s), cell_seed(root, n + 1, s));
    }
}

/// Edge density of G(n, 1/n): every non-empty S spans fewer than 2|S| edges.
/// Exhaustive over all subsets for n <= 16.
#[test]
fn sparse_random_graph_density_exhaustive() {
    for n in [8usize, 12, 16] {
        for s in 0..20 {
            let pg = perturb(&Graph::empty(n), &PerturbationParams::new(1.0, cell_seed(7, n, s))).unwrap();
            let g = &pg.merged;
            for mask in 1u32..(1 << n) {
                let e = edges_inside(g, mask);
                assert!(e < 2 * mask.count_ones() as usize, "n={n} seed {s}: mask {mask:b} spans {e} edges");
            }
        }
    }
}

/// Same density statement at n = 100 and 1000, spot-checked on connected sets
/// grown along BFS trees.
#[test]
fn sparse_random_graph_density_sampled() {
    for n in [100usize, 1000] {
        for s in 0..10 {
            let pg = perturb(&Graph::empty(n), &PerturbationParams::new(1.0, cell_seed(11, n, s))).unwrap();
            let g = &pg.merged;
            for src in (0..n).step_by(n / 20) {
                let mut inside = vec![false; n];
                let mut order = vec![src];
                inside[src] = true;
                let mut spanned = 0usize;
                let mut i = 0;
                while i < order.len() {
                    for &w in g.neighbors(order[i]) {
                        if !inside[w] {
                            inside[w] = true;
                            // Each prefix of a BFS order is connected.
                            spanned += g.neighbors(w).iter().filter(|&&x| inside[x]).count();
                            order.push(w);
                            assert!(spanned < 2 * order.len(), "n={n} seed {s}: dense BFS prefix of size {}", order.len());
                        }
                    }
                    i += 1;
                }
            }
        }
    }
}
