//! The plain-text edge-list format the CLI reads and writes.
//!
//! A file is a sequence of lines. `#` starts a comment that runs to the end
//! of the line; blank lines are ignored. An optional `order N` header names
//! the vertex count (necessary when trailing vertices are isolated); it
//! must precede every edge line. Every other line is an edge `u v` with
//! 1-based labels. Without a header the order is the largest label seen.

use anyhow::{bail, Context, Result};
use lollipop_core::graph::Graph;

/// Largest graph the CLI will read.
pub const MAX_ORDER: usize = 128;

pub fn parse(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_label = 0;
    for (index, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let number = index + 1;
        let mut tokens = line.split_whitespace();
        let first = tokens.next().expect("a non-empty line has a first token");
        if first == "order" {
            if declared.is_some() {
                bail!("line {number}: repeated order header");
            }
            if !edges.is_empty() {
                bail!("line {number}: the order header must precede every edge");
            }
            let value = tokens
                .next()
                .with_context(|| format!("line {number}: order header without a count"))?;
            if tokens.next().is_some() {
                bail!("line {number}: trailing tokens after the order header");
            }
            declared = Some(
                value
                    .parse()
                    .with_context(|| format!("line {number}: invalid order `{value}`"))?,
            );
            continue;
        }
        let second = tokens
            .next()
            .with_context(|| format!("line {number}: expected an edge `u v`"))?;
        if tokens.next().is_some() {
            bail!("line {number}: trailing tokens after the edge");
        }
        let u: usize = first
            .parse()
            .with_context(|| format!("line {number}: invalid label `{first}`"))?;
        let v: usize = second
            .parse()
            .with_context(|| format!("line {number}: invalid label `{second}`"))?;
        max_label = max_label.max(u).max(v);
        edges.push((u, v));
    }
    let order = match declared {
        Some(order) => order,
        None if max_label > 0 => max_label,
        None => bail!("empty edge list: declare `order N` to mean an edgeless graph"),
    };
    if order > MAX_ORDER {
        bail!("order {order} exceeds the supported maximum of {MAX_ORDER}");
    }
    Ok(Graph::from_edges(order, &edges)?)
}

/// Canonical form: an `order` header and the edges in ascending order.
pub fn serialize(g: &Graph) -> String {
    let mut out = format!("order {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
