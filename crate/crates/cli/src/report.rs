//! JSON shapes the CLI prints on stdout. Collections are ordered and maps
//! are sorted, so serialization is byte-deterministic for a given input.

use lollipop_core::dyadic::Dyadic;
use lollipop_core::graph::Graph;
use lollipop_core::robustness::Target;
use serde::Serialize;

/// An exact value and its binary64 shadow for human eyes.
#[derive(Serialize)]
pub struct DyadicValue {
    pub exact: String,
    pub decimal: f64,
}

impl From<Dyadic> for DyadicValue {
    fn from(value: Dyadic) -> DyadicValue {
        DyadicValue { exact: value.to_string(), decimal: value.to_f64() }
    }
}

#[derive(Serialize)]
pub struct GraphSummary {
    pub order: usize,
    pub size: usize,
}

impl From<&Graph> for GraphSummary {
    fn from(g: &Graph) -> GraphSummary {
        GraphSummary { order: g.order(), size: g.size() }
    }
}

#[derive(Serialize)]
pub struct TargetReport {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub link: Option<(usize, usize)>,
}

impl From<Target> for TargetReport {
    fn from(target: Target) -> TargetReport {
        match target {
            Target::Vertex(v) => {
                TargetReport { kind: "vertex", vertex: Some(v), link: None }
            }
            Target::Link(u, v) => {
                TargetReport { kind: "link", vertex: None, link: Some((u, v)) }
            }
        }
    }
}

#[derive(Serialize)]
pub struct CaseValue {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
    pub value: DyadicValue,
}

/// The closed-form side of a `--lollipop M N` claim.
#[derive(Serialize)]
pub struct LollipopReport {
    pub m: usize,
    pub n: usize,
    /// Whether the input graph is exactly the claimed lollipop graph.
    pub structure: bool,
    /// Closed-form value of the chosen metric for the claimed parameters.
    pub formula: DyadicValue,
    /// Structure holds and the formula equals the computed value.
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Serialize)]
pub struct ComputeReport {
    pub metric: &'static str,
    pub graph: GraphSummary,
    pub value: DyadicValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_vertex: Option<Vec<DyadicValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<TargetReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximizers: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cases: Option<Vec<CaseValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lollipop: Option<LollipopReport>,
}

#[derive(Serialize)]
pub struct GenReport {
    pub family: &'static str,
    pub order: usize,
    pub size: usize,
    pub path: String,
}

pub fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}
