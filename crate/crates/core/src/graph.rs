//! Undirected simple graphs with 1-based vertex labels, breadth-first
//! distances, and the brute-force closeness oracle.
//!
//! Closeness is the exponential-decay kind: every ordered pair of distinct
//! vertices at distance `d` contributes `2^-d`, and unreachable pairs
//! contribute nothing, so the measure is defined on disconnected graphs too.

use std::collections::{BTreeSet, VecDeque};
use std::ops::RangeInclusive;

use crate::dyadic::Dyadic;
use crate::error::Error;

/// An undirected simple graph on vertices labeled `1..=order`.
///
/// The structure is immutable: mutating operations return a new graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Builds a graph of the given order from an edge list. Labels must lie
    /// in `1..=order`; duplicate edges are collapsed; self-loops are errors.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph, Error> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut adj = vec![BTreeSet::new(); order];
        for &(u, v) in edges {
            check_label(u, order)?;
            check_label(v, order)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u - 1].insert(v);
            adj[v - 1].insert(u);
        }
        Ok(Graph { adj })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> RangeInclusive<usize> {
        1..=self.order()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.order() && self.adj[u - 1].contains(&v)
    }

    /// Neighbors of `v` in ascending label order. Panics on a bad label.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v - 1].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in self.vertices() {
            for &v in &self.adj[u - 1] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.adj.iter().all(|s| s.len() == self.order() - 1)
    }

    /// A copy with one more link.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, Error> {
        check_label(u, self.order())?;
        check_label(v, self.order())?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u - 1].insert(v);
        g.adj[v - 1].insert(u);
        Ok(g)
    }

    /// A copy with one link removed.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph, Error> {
        check_label(u, self.order())?;
        check_label(v, self.order())?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u - 1].remove(&v);
        g.adj[v - 1].remove(&u);
        Ok(g)
    }

    /// A copy with vertex `r` (and its links) removed. Labels above `r`
    /// shift down by one so the result is again labeled `1..=order-1`.
    pub fn remove_vertex(&self, r: usize) -> Result<Graph, Error> {
        check_label(r, self.order())?;
        if self.order() == 1 {
            return Err(Error::GraphTooSmall { order: 1, needed: 2 });
        }
        let relabel = |v: usize| if v > r { v - 1 } else { v };
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| u != r && v != r)
            .map(|(u, v)| (relabel(u), relabel(v)))
            .collect();
        Graph::from_edges(self.order() - 1, &edges)
    }

    /// Single-source shortest-path distances by breadth-first search.
    pub fn bfs_row(&self, source: usize) -> Result<DistanceRow, Error> {
        check_label(source, self.order())?;
        let mut dist: Vec<Option<u32>> = vec![None; self.order()];
        dist[source - 1] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u - 1].unwrap();
            for &v in &self.adj[u - 1] {
                if dist[v - 1].is_none() {
                    dist[v - 1] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(DistanceRow { source, dist })
    }
}

fn check_label(v: usize, order: usize) -> Result<(), Error> {
    if v == 0 || v > order {
        return Err(Error::LabelOutOfRange { label: v, order });
    }
    Ok(())
}

/// Distances from one source vertex; `None` marks unreachable vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRow {
    source: usize,
    dist: Vec<Option<u32>>,
}

impl DistanceRow {
    pub fn source(&self) -> usize {
        self.source
    }

    /// Distance from the source to `v`, or `None` if `v` is unreachable.
    pub fn distance(&self, v: usize) -> Option<u32> {
        self.dist[v - 1]
    }

    /// All distances, indexed by `label - 1`.
    pub fn distances(&self) -> &[Option<u32>] {
        &self.dist
    }
}

/// Total and per-vertex closeness of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosenessReport {
    /// Sum over ordered pairs of distinct vertices of `2^-d(i,j)`.
    pub total: Dyadic,
    /// `per_vertex[v - 1]` is the closeness of vertex `v`, the sum of
    /// `2^-d(v,j)` over all other vertices `j` reachable from `v`.
    pub per_vertex: Vec<Dyadic>,
}

impl ClosenessReport {
    pub fn vertex(&self, v: usize) -> Dyadic {
        self.per_vertex[v - 1]
    }
}

/// Brute-force closeness: one BFS per vertex, summed exactly.
///
/// This is the reference implementation every closed form in the crate is
/// checked against. It accepts any graph, connected or not; the only failure
/// mode is mantissa overflow on graphs far outside the supported parameter
/// budget.
pub fn closeness_oracle(g: &Graph) -> Result<ClosenessReport, Error> {
    let mut per_vertex = Vec::with_capacity(g.order());
    let mut total = Dyadic::ZERO;
    for v in g.vertices() {
        let row = g.bfs_row(v).expect("vertex labels are valid by construction");
        let mut c = Dyadic::ZERO;
        for u in g.vertices() {
            if u == v {
                continue;
            }
            if let Some(d) = row.distance(u) {
                c = c.try_add(Dyadic::pow2(-(d as i32)))?;
            }
        }
        total = total.try_add(c)?;
        per_vertex.push(c);
    }
    Ok(ClosenessReport { total, per_vertex })
}
