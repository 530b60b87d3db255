//! Graph families with known closeness: complete graphs, paths, cycles, and
//! lollipop graphs, plus the two composition rules (bridge join and vertex
//! collapse) that the lollipop formula is built from.
//!
//! The lollipop graph `L(m, n)` is a complete graph on vertices `1..=m` with
//! a path on vertices `m+1..=m+n` hung off it by the bridge link
//! `(m, m+1)`. All labels are 1-based, matching [`crate::graph::Graph`].

use crate::dyadic::Dyadic;
use crate::error::Error;
use crate::graph::Graph;

/// Largest `m` or `n` accepted by the family constructors. Within this range
/// every exact value computed by the crate (formulas and oracles alike) fits
/// the 128-bit mantissa budget with a wide margin.
pub const MAX_PARAM: usize = 64;

/// Largest cycle length accepted by [`gen_cycle`] / [`closeness_cycle`].
pub const MAX_CYCLE: usize = 2 * MAX_PARAM;

/// Validated parameters of a lollipop graph: clique size `m >= 3`, path
/// length `n >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LollipopSpec {
    m: usize,
    n: usize,
}

impl LollipopSpec {
    pub fn new(m: usize, n: usize) -> Result<LollipopSpec, Error> {
        check_param("m", m, 3, MAX_PARAM)?;
        check_param("n", n, 1, MAX_PARAM)?;
        Ok(LollipopSpec { m, n })
    }

    /// Clique size.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Path length.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.m + self.n
    }

    /// The link joining the clique to the path: `(m, m+1)`.
    pub fn bridge(&self) -> (usize, usize) {
        (self.m, self.m + 1)
    }
}

pub(crate) fn check_param(
    name: &'static str,
    value: usize,
    min: usize,
    max: usize,
) -> Result<(), Error> {
    if value < min || value > max {
        return Err(Error::ParamRange { name, value, min, max });
    }
    Ok(())
}

/// Complete graph on `m` vertices.
pub fn gen_complete(m: usize) -> Result<Graph, Error> {
    check_param("m", m, 1, MAX_PARAM)?;
    let mut edges = Vec::new();
    for u in 1..=m {
        for v in (u + 1)..=m {
            edges.push((u, v));
        }
    }
    Graph::from_edges(m, &edges)
}

/// Path graph on `n` vertices (a single vertex when `n = 1`).
pub fn gen_path(n: usize) -> Result<Graph, Error> {
    check_param("n", n, 1, MAX_PARAM)?;
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle graph on `len >= 3` vertices.
pub fn gen_cycle(len: usize) -> Result<Graph, Error> {
    check_param("len", len, 3, MAX_CYCLE)?;
    let mut edges: Vec<_> = (1..len).map(|i| (i, i + 1)).collect();
    edges.push((len, 1));
    Graph::from_edges(len, &edges)
}

/// Lollipop graph `L(m, n)`: clique `1..=m`, path `m+1..=m+n`, bridge
/// `(m, m+1)`.
pub fn gen_lollipop(spec: &LollipopSpec) -> Graph {
    let (m, n) = (spec.m, spec.n);
    let mut edges = Vec::new();
    for u in 1..=m {
        for v in (u + 1)..=m {
            edges.push((u, v));
        }
    }
    for i in 0..n {
        edges.push((m + i, m + i + 1));
    }
    Graph::from_edges(m + n, &edges).expect("validated parameters build a simple graph")
}

/// Closeness of the complete graph: `m(m-1)/2`.
pub fn closeness_complete(m: usize) -> Result<Dyadic, Error> {
    check_param("m", m, 1, MAX_PARAM)?;
    let m = m as i128;
    Ok(Dyadic::new(m * (m - 1), 1))
}

/// Closeness of the path graph: `2n - 4 + 2^(2-n)`.
pub fn closeness_path(n: usize) -> Result<Dyadic, Error> {
    check_param("n", n, 1, MAX_PARAM)?;
    Ok(Dyadic::integer(2 * n as i128 - 4) + Dyadic::pow2(2 - n as i32))
}

/// Closeness of one vertex of the cycle graph (all are alike):
/// `2 - 3*2^-p` for even length `2p`, `2 - 2^(1-p)` for odd length `2p+1`.
///
/// This helper owns the even/odd split for cycles; every cycle-flavored
/// formula in the crate goes through it rather than re-branching on parity.
pub fn cycle_vertex_closeness(len: usize) -> Result<Dyadic, Error> {
    check_param("len", len, 3, MAX_CYCLE)?;
    let p = (len / 2) as i32;
    if len % 2 == 0 {
        Ok(2 - 3 * Dyadic::pow2(-p))
    } else {
        Ok(2 - Dyadic::pow2(1 - p))
    }
}

/// Closeness of the cycle graph: `len` times the per-vertex value.
pub fn closeness_cycle(len: usize) -> Result<Dyadic, Error> {
    Ok(len as i128 * cycle_vertex_closeness(len)?)
}

/// Closeness of the lollipop graph:
/// `m(m + 1 - 2^(1-n))/2 + 2n + 3*2^-n - 3`.
pub fn closeness_lollipop(spec: &LollipopSpec) -> Dyadic {
    let m = spec.m as i128;
    let n = spec.n as i128;
    let e = spec.n as i32;
    (m * (m + 1 - Dyadic::pow2(1 - e))) * Dyadic::pow2(-1)
        + 2 * n
        + 3 * Dyadic::pow2(-e)
        - 3
}

/// Closeness after joining two graphs by a new link between a vertex with
/// closeness `cp` in the first (total `c1`) and one with closeness `cq` in
/// the second (total `c2`): `c1 + c2 + (1 + cp)(1 + cq)`.
///
/// Exact for arbitrary disjoint graphs: every cross pair must use the new
/// link, and distances inside either part are unchanged.
pub fn join_closeness(c1: Dyadic, c2: Dyadic, cp: Dyadic, cq: Dyadic) -> Dyadic {
    c1 + c2 + (cp + 1) * (cq + 1)
}

/// Closeness after identifying a vertex with closeness `cp` in the first
/// graph (total `c1`) with one of closeness `cq` in the second (total `c2`):
/// `c1 + c2 + 2*cp*cq`.
pub fn collapse_closeness(c1: Dyadic, c2: Dyadic, cp: Dyadic, cq: Dyadic) -> Dyadic {
    c1 + c2 + 2 * cp * cq
}

/// Disjoint union of `g1` and `g2` plus the link `(p, q)`, where `p` labels
/// a vertex of `g1` and `q` a vertex of `g2`. Vertices of `g2` are relabeled
/// to `g1.order() + 1 ..`.
pub fn bridge_join(g1: &Graph, g2: &Graph, p: usize, q: usize) -> Result<Graph, Error> {
    if p == 0 || p > g1.order() {
        return Err(Error::LabelOutOfRange { label: p, order: g1.order() });
    }
    if q == 0 || q > g2.order() {
        return Err(Error::LabelOutOfRange { label: q, order: g2.order() });
    }
    let shift = g1.order();
    let mut edges = g1.edges();
    edges.extend(g2.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
    edges.push((p, q + shift));
    Graph::from_edges(g1.order() + g2.order(), &edges)
}

/// Disjoint union of `g1` and `g2` with vertex `q` of `g2` identified with
/// vertex `p` of `g1`. The remaining vertices of `g2` are relabeled to
/// `g1.order() + 1 ..` in ascending order.
pub fn collapse_join(g1: &Graph, g2: &Graph, p: usize, q: usize) -> Result<Graph, Error> {
    if p == 0 || p > g1.order() {
        return Err(Error::LabelOutOfRange { label: p, order: g1.order() });
    }
    if q == 0 || q > g2.order() {
        return Err(Error::LabelOutOfRange { label: q, order: g2.order() });
    }
    let shift = g1.order();
    let relabel = |v: usize| {
        if v == q {
            p
        } else if v > q {
            shift + v - 1
        } else {
            shift + v
        }
    };
    let mut edges = g1.edges();
    edges.extend(g2.edges().into_iter().map(|(u, v)| (relabel(u), relabel(v))));
    Graph::from_edges(g1.order() + g2.order() - 1, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::closeness_oracle;

    #[test]
    fn validates_parameters() {
        assert!(LollipopSpec::new(2, 5).is_err());
        assert!(LollipopSpec::new(3, 0).is_err());
        assert!(LollipopSpec::new(65, 1).is_err());
        assert!(gen_cycle(2).is_err());
        assert!(gen_path(0).is_err());
        assert!(gen_complete(0).is_err());
    }

    #[test]
    fn builds_the_expected_structures() {
        assert_eq!(gen_complete(4).unwrap().size(), 6);
        assert_eq!(gen_path(1).unwrap().size(), 0);
        assert_eq!(gen_cycle(5).unwrap().size(), 5);

        let spec = LollipopSpec::new(3, 1).unwrap();
        let g = gen_lollipop(&spec);
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (2, 3), (3, 4)]);
        assert_eq!(spec.bridge(), (3, 4));
    }

    #[test]
    fn complete_graph_values() {
        assert_eq!(closeness_complete(1).unwrap(), Dyadic::ZERO);
        assert_eq!(closeness_complete(3).unwrap(), Dyadic::integer(3));
        assert_eq!(closeness_complete(4).unwrap(), Dyadic::integer(6));
    }

    #[test]
    fn path_values() {
        assert_eq!(closeness_path(1).unwrap(), Dyadic::ZERO);
        assert_eq!(closeness_path(2).unwrap(), Dyadic::ONE);
        assert_eq!(closeness_path(4).unwrap(), Dyadic::new(17, 2));
        assert_eq!(closeness_path(5).unwrap(), Dyadic::new(49, 3));
    }

    #[test]
    fn cycle_values() {
        assert_eq!(closeness_cycle(3).unwrap(), Dyadic::integer(3));
        assert_eq!(closeness_cycle(4).unwrap(), Dyadic::integer(5));
        assert_eq!(closeness_cycle(5).unwrap(), Dyadic::new(15, 1));
        assert_eq!(closeness_cycle(6).unwrap(), Dyadic::new(39, 2));
        // Per-vertex value times length is the total, for both parities.
        assert_eq!(cycle_vertex_closeness(3).unwrap(), Dyadic::ONE);
        assert_eq!(cycle_vertex_closeness(5).unwrap(), Dyadic::new(3, 1));
    }

    #[test]
    fn lollipop_values() {
        let value = |m, n| closeness_lollipop(&LollipopSpec::new(m, n).unwrap());
        assert_eq!(value(3, 1), Dyadic::integer(5));
        assert_eq!(value(3, 2), Dyadic::integer(7));
        assert_eq!(value(4, 2), Dyadic::new(43, 2));
    }

    #[test]
    fn join_rule_builds_a_path_from_two_paths() {
        // Two 2-paths joined leaf to leaf form a 4-path.
        let c2 = closeness_path(2).unwrap();
        let leaf = Dyadic::pow2(-1);
        assert_eq!(join_closeness(c2, c2, leaf, leaf), closeness_path(4).unwrap());

        let p2 = gen_path(2).unwrap();
        let joined = bridge_join(&p2, &p2, 2, 1).unwrap();
        assert_eq!(joined.edges(), gen_path(4).unwrap().edges());
    }

    #[test]
    fn collapse_rule_builds_a_path_from_two_paths() {
        // Two 3-paths sharing an endpoint form a 5-path. A 3-path leaf has
        // closeness 1/2 + 1/4 = 3/4.
        let c3 = closeness_path(3).unwrap();
        let leaf = Dyadic::new(3, 2);
        assert_eq!(collapse_closeness(c3, c3, leaf, leaf), closeness_path(5).unwrap());

        let p3 = gen_path(3).unwrap();
        let collapsed = collapse_join(&p3, &p3, 3, 1).unwrap();
        assert_eq!(collapsed.order(), 5);
        assert_eq!(
            closeness_oracle(&collapsed).unwrap().total,
            closeness_path(5).unwrap()
        );
    }
}
