//! Cross-checks of the breadth-first closeness oracle against an
//! independent Floyd–Warshall computation and against structural
//! properties that must hold on arbitrary graphs.

use lollipop_core::dyadic::Dyadic;
use lollipop_core::families::gen_path;
use lollipop_core::graph::{closeness_oracle, Graph};

use proptest::prelude::*;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, order: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=order {
        for v in (u + 1)..=order {
            if rng.random_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(order, &edges).unwrap()
}

/// All-pairs distances by Floyd–Warshall, independent of the BFS code path.
fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u64>>> {
    let n = g.order();
    let mut d = vec![vec![None; n + 1]; n + 1];
    for v in 1..=n {
        d[v][v] = Some(0);
    }
    for (u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for w in 1..=n {
        for i in 1..=n {
            let Some(a) = d[i][w] else { continue };
            for j in 1..=n {
                let Some(b) = d[w][j] else { continue };
                if d[i][j].map_or(true, |c| a + b < c) {
                    d[i][j] = Some(a + b);
                }
            }
        }
    }
    d
}

fn closeness_of_row(row: &[Option<u64>], source: usize) -> Dyadic {
    let mut sum = Dyadic::ZERO;
    for (v, dist) in row.iter().enumerate().skip(1) {
        if v == source {
            continue;
        }
        if let Some(d) = dist {
            sum = sum + Dyadic::pow2(-(*d as i32));
        }
    }
    sum
}

#[test]
fn oracle_matches_floyd_warshall_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1eaf);
    for order in 1..=12 {
        for &density in &[0.15, 0.35, 0.6, 0.9] {
            let g = random_graph(&mut rng, order, density);
            let d = floyd_warshall(&g);
            let report = closeness_oracle(&g).unwrap();
            let mut total = Dyadic::ZERO;
            for v in g.vertices() {
                let expected = closeness_of_row(&d[v], v);
                assert_eq!(report.vertex(v), expected, "vertex {v} of {g:?}");
                total = total + expected;
            }
            assert_eq!(report.total, total);
        }
    }
}

#[test]
fn bfs_rows_match_floyd_warshall() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd157);
    for order in 1..=12 {
        for &density in &[0.2, 0.5, 0.8] {
            let g = random_graph(&mut rng, order, density);
            let d = floyd_warshall(&g);
            for s in g.vertices() {
                let row = g.bfs_row(s).unwrap();
                assert_eq!(row.source(), s);
                for v in g.vertices() {
                    assert_eq!(
                        row.distance(v).map(u64::from),
                        d[s][v],
                        "distance {s} -> {v} in {g:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn closeness_is_invariant_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e3);
    for trial in 0..40 {
        let order = 2 + (trial % 9);
        let g = random_graph(&mut rng, order, 0.4);
        let mut relabel: Vec<usize> = (1..=order).collect();
        relabel.shuffle(&mut rng);
        let mapped: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .map(|(u, v)| (relabel[u - 1], relabel[v - 1]))
            .collect();
        let h = Graph::from_edges(order, &mapped).unwrap();

        let rg = closeness_oracle(&g).unwrap();
        let rh = closeness_oracle(&h).unwrap();
        assert_eq!(rg.total, rh.total);
        for v in g.vertices() {
            assert_eq!(rg.vertex(v), rh.vertex(relabel[v - 1]));
        }
    }
}

#[test]
fn disjoint_union_adds_closeness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xca7);
    for trial in 0..30 {
        let n1 = 1 + (trial % 7);
        let n2 = 1 + (trial % 5);
        let g1 = random_graph(&mut rng, n1, 0.5);
        let g2 = random_graph(&mut rng, n2, 0.5);
        let mut edges = g1.edges();
        edges.extend(g2.edges().into_iter().map(|(u, v)| (u + n1, v + n1)));
        let union = Graph::from_edges(n1 + n2, &edges).unwrap();

        let r1 = closeness_oracle(&g1).unwrap();
        let r2 = closeness_oracle(&g2).unwrap();
        let ru = closeness_oracle(&union).unwrap();
        assert_eq!(ru.total, r1.total + r2.total);
        for v in g1.vertices() {
            assert_eq!(ru.vertex(v), r1.vertex(v));
        }
        for v in g2.vertices() {
            assert_eq!(ru.vertex(v + n1), r2.vertex(v));
        }
    }
}

#[test]
fn adding_any_absent_link_strictly_increases_closeness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xadd);
    for trial in 0..25 {
        let order = 2 + (trial % 8);
        let g = random_graph(&mut rng, order, 0.3);
        let base = closeness_oracle(&g).unwrap().total;
        for u in g.vertices() {
            for v in (u + 1)..=order {
                if g.has_edge(u, v) {
                    continue;
                }
                let grown = closeness_oracle(&g.add_edge(u, v).unwrap()).unwrap().total;
                assert!(grown > base, "adding ({u}, {v}) to {g:?}");
            }
        }
    }
}

#[test]
fn per_vertex_closeness_is_bounded_and_tight_only_for_dominating_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb0b);
    for trial in 0..40 {
        let order = 2 + (trial % 9);
        let g = random_graph(&mut rng, order, 0.55);
        let cap = Dyadic::new(order as i128 - 1, 1);
        let report = closeness_oracle(&g).unwrap();
        for v in g.vertices() {
            let c = report.vertex(v);
            assert!(c >= Dyadic::ZERO);
            assert!(c <= cap);
            assert_eq!(c == cap, g.degree(v) == order - 1, "vertex {v} of {g:?}");
        }
    }
}

#[test]
fn leaf_closeness_of_a_path() {
    for n in 1..=20 {
        let g = gen_path(n).unwrap();
        let report = closeness_oracle(&g).unwrap();
        assert_eq!(report.vertex(1), Dyadic::ONE - Dyadic::pow2(1 - n as i32));
        assert_eq!(report.vertex(n), report.vertex(1));
    }
}

proptest! {
    #[test]
    fn total_closeness_is_the_sum_over_vertices(
        order in 1usize..=10,
        pairs in prop::collection::vec((1usize..=10, 1usize..=10), 0..=30),
    ) {
        let edges: Vec<(usize, usize)> = pairs
            .into_iter()
            .filter(|&(u, v)| u != v && u <= order && v <= order)
            .collect();
        let g = Graph::from_edges(order, &edges).unwrap();
        let report = closeness_oracle(&g).unwrap();
        let mut sum = Dyadic::ZERO;
        for v in g.vertices() {
            sum = sum + report.vertex(v);
        }
        prop_assert_eq!(report.total, sum);
    }

    #[test]
    fn closeness_never_exceeds_the_complete_graph(
        order in 2usize..=9,
        pairs in prop::collection::vec((1usize..=9, 1usize..=9), 0..=25),
    ) {
        let edges: Vec<(usize, usize)> = pairs
            .into_iter()
            .filter(|&(u, v)| u != v && u <= order && v <= order)
            .collect();
        let g = Graph::from_edges(order, &edges).unwrap();
        let total = closeness_oracle(&g).unwrap().total;
        let n = order as i128;
        prop_assert!(total <= Dyadic::new(n * (n - 1), 1));
        prop_assert!(total >= Dyadic::ZERO);
    }
}
