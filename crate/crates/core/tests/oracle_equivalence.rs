use graphkit::apspaf::{apspaf_floyd, apspaf_squaring, longest_frontier, max_flow_projection, min_distance_projection};
use graphkit::bottleneck::{graph_bottleneck_observed, strongly_connected, strongly_connected_by_closure};
use graphkit::center::{eccentricity, graph_center, graph_center_observed};
use graphkit::graph::{expand_integer_costs, random_graph};
use graphkit::oracle::{bfs_apsp, brute_bottleneck_matrix, brute_eccentricity_center, brute_frontiers, brute_theta, dijkstra_apsp};
use graphkit::semiring::{apbp, apsp, floyd_closure, matrix_closure, MaxMin};
use graphkit::{graph_bottleneck, Capacity, CenterMode, Error, Predicate};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn caps(vals: &[u64]) -> Vec<Capacity> {
    vals.iter().copied().map(Capacity::from_int).collect()
}

#[test]
fn expansion_preserves_distances() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for seed in 0..120 {
        let n = rng.gen_range(1..=20);
        let m = rng.gen_range(0..=(n * n).min(3 * n));
        let g = random_graph(n, m, &caps(&[1, 2]), &[1, 2, 3, 4, 5], seed, false).unwrap();
        let (h, map) = expand_integer_costs(&g).unwrap();
        assert!(h.has_unit_costs());
        let want = dijkstra_apsp(&g);
        let got = bfs_apsp(&h);
        for i in 0..n {
            for j in 0..n {
                assert_eq!(got.get(map[i], map[j]), want.get(i, j), "seed {seed} ({i},{j})");
            }
        }
    }
}

#[test]
fn center_matches_eccentricity_oracle_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for seed in 0..60 {
        let n = rng.gen_range(2..=40);
        let m = rng.gen_range(n..=(3 * n).min(n * n));
        let g = random_graph(n, m, &caps(&[1]), &[1], seed, true).unwrap();
        let dist = bfs_apsp(&g);
        for mode in [CenterMode::Out, CenterMode::In, CenterMode::Both] {
            let want = brute_eccentricity_center(&g, mode).unwrap();
            let got = graph_center(&g, mode).unwrap();
            assert_eq!(got.delta, want.delta, "seed {seed} {mode:?}");
            assert_eq!(eccentricity(&dist, got.center, mode), Some(got.delta));
            assert_eq!(got.center, want.center, "smallest-id tie-break");
        }
    }
}

#[test]
fn center_reports_no_center_when_oracle_does() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut seen_none = 0;
    for seed in 0..200 {
        let n = rng.gen_range(2..=12);
        let m = rng.gen_range(0..=2 * n);
        let g = random_graph(n, m, &caps(&[1]), &[1], seed, false).unwrap();
        for mode in [CenterMode::Out, CenterMode::In, CenterMode::Both] {
            match brute_eccentricity_center(&g, mode) {
                Ok(w) => assert_eq!(graph_center(&g, mode).unwrap().delta, w.delta),
                Err(e) => {
                    seen_none += 1;
                    assert_eq!(graph_center(&g, mode).unwrap_err(), e);
                }
            }
        }
    }
    assert!(seen_none > 0);
}

#[test]
fn center_out_is_center_in_of_reverse() {
    for seed in 0..40 {
        let g = random_graph(17, 40, &caps(&[1]), &[1], seed, true).unwrap();
        let a = graph_center(&g, CenterMode::Out).unwrap();
        let b = graph_center(&g.reversed(), CenterMode::In).unwrap();
        assert_eq!(a.delta, b.delta);
        assert_eq!(eccentricity(&bfs_apsp(&g.reversed()), b.center, CenterMode::In), Some(a.delta));
    }
}

#[test]
fn center_search_invariant_and_product_bound() {
    for seed in 0..40 {
        let n = 2 + seed as usize;
        let g = random_graph(n, 2 * n, &caps(&[1]), &[1], seed, true).unwrap();
        let delta = brute_eccentricity_center(&g, CenterMode::Out).unwrap().delta;
        let (_, stats) = graph_center_observed(&g, CenterMode::Out, |s| {
            assert!(s.alpha < delta && delta <= s.beta, "alpha {} delta {delta} beta {}", s.alpha, s.beta);
        })
        .unwrap();
        let log = n.next_power_of_two().trailing_zeros() as usize;
        assert_eq!(stats.table_squarings, log - 1);
        assert!(stats.search_products <= 2 * log + 1);
    }
}

#[test]
fn bottleneck_matches_widest_path_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for seed in 0..100 {
        let n = rng.gen_range(2..=24);
        let m = rng.gen_range(n..=(3 * n).min(n * n));
        let g = random_graph(n, m, &caps(&[1, 2, 3, 5, 8, 13]), &[1], seed, true).unwrap();
        let want = brute_theta(&g).unwrap();
        for p in [Predicate::Closure, Predicate::Scc] {
            let mut heads = Vec::new();
            let r = graph_bottleneck_observed(&g, p, |caps, (lo, hi)| heads.push((caps[lo], caps.get(hi).copied())))
                .unwrap();
            assert_eq!(r.theta, want, "seed {seed}");
            let t = g.distinct_capacities().len();
            assert!(r.iterations <= (t.next_power_of_two().trailing_zeros() as usize) + 1);
            for (lo, hi) in heads {
                assert!(lo <= want && hi.is_none_or(|h| want < h));
            }
        }
        assert!(strongly_connected(&g, want));
        assert!(g.distinct_capacities().iter().filter(|&&c| c > want).all(|&c| !strongly_connected(&g, c)));
    }
}

#[test]
fn scc_and_closure_predicates_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let mut connected = 0;
    for seed in 0..500 {
        let n = rng.gen_range(1..=16);
        let m = rng.gen_range(0..=(n * n).min(4 * n));
        let g = random_graph(n, m, &caps(&[1, 2, 3, 4]), &[1], seed, rng.gen_bool(0.5) && m >= n).unwrap();
        let mut prev = true;
        for w in [0, 1, 2, 3, 4, 5] {
            let c = Capacity::from_int(w);
            let a = strongly_connected(&g, c);
            assert_eq!(a, strongly_connected_by_closure(&g, c), "seed {seed} w {w}");
            assert!(prev || !a, "monotone in the threshold");
            prev = a;
            connected += a as usize;
        }
    }
    assert!(connected > 0);
}

#[test]
fn bottleneck_rejects_disconnected() {
    let g = random_graph(6, 5, &caps(&[1]), &[1], 3, false).unwrap();
    assert_eq!(graph_bottleneck(&g, Predicate::Scc).unwrap_err(), Error::NotStronglyConnected);
}

#[test]
fn widest_path_enumeration_matches_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    for seed in 0..100 {
        let n = rng.gen_range(1..=8);
        let m = rng.gen_range(0..=(n * n).min(3 * n));
        let g = random_graph(n, m, &caps(&[0, 1, 2, 3, 7]), &[1], seed, false).unwrap();
        assert_eq!(brute_bottleneck_matrix(&g), apbp(&g), "seed {seed}");
    }
    // the label-correcting route above the enumeration limit
    for seed in 0..30 {
        let g = random_graph(20, 50, &caps(&[1, 2, 3, 7]), &[1], seed, false).unwrap();
        assert_eq!(brute_bottleneck_matrix(&g), matrix_closure(&MaxMin, &graphkit::semiring::capacity_matrix(&g)));
        assert_eq!(brute_bottleneck_matrix(&g), floyd_closure(&MaxMin, &graphkit::semiring::capacity_matrix(&g)));
    }
}

#[test]
fn apspaf_matches_simple_path_frontiers() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    for seed in 0..60 {
        let n = rng.gen_range(1..=7);
        let m = rng.gen_range(0..=(n * n).min(3 * n));
        let g = random_graph(n, m, &caps(&[1, 2, 3, 4, 5]), &[1, 2, 3, 4], seed, false).unwrap();
        let floyd = apspaf_floyd(&g).unwrap();
        assert_eq!(floyd, brute_frontiers(&g).unwrap(), "seed {seed}");
        assert_eq!(apspaf_squaring(&g).unwrap(), floyd);
        assert_eq!(min_distance_projection(&floyd), apsp(&g));
        assert_eq!(max_flow_projection(&floyd), apbp(&g));
        assert!(longest_frontier(&floyd) <= g.distinct_capacities().len().max(1));
    }
}
