//! Residual closeness of lollipop graphs under vertex and link removal.
//!
//! Vertex residual closeness (VR) is the minimum closeness over all
//! single-vertex deletions; link residual closeness (LR) is the minimum over
//! all single-link deletions. For lollipop graphs both minima have closed
//! forms, and every distinct way of hitting the graph falls into a small
//! case taxonomy with its own closed form:
//!
//! | case | deleted                         | defined for |
//! |------|---------------------------------|-------------|
//! | 4.1  | the bridge-side clique vertex   | always      |
//! | 4.2  | any other clique vertex         | always      |
//! | 4.3  | the far end of the path         | always      |
//! | 4.4  | the path vertex next the bridge | n >= 2      |
//! | 4.5  | a middle path vertex (position j) | 2 <= j <= n-1 |
//! | 5.1  | the bridge link                 | always      |
//! | 5.2  | the leaf link                   | n >= 2      |
//! | 5.3  | an inner path link (position k) | 1 <= k <= n-2 |
//! | 5.4  | a clique link touching the bridge vertex | always |
//! | 5.5  | a clique link missing the bridge vertex  | always |
//!
//! At `n = 1` the leaf link *is* the bridge link, so case 5.2 only exists
//! from `n = 2` up; likewise 4.4 needs a second path vertex.

use crate::dyadic::Dyadic;
use crate::error::Error;
use crate::families::{closeness_lollipop, gen_lollipop, LollipopSpec};
use crate::graph::{closeness_oracle, Graph};

/// What a perturbation did to the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PerturbationKind {
    VertexRemoval,
    LinkRemoval,
    LinkAddition,
}

/// Which vertex or link the perturbation touched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Vertex(usize),
    Link(usize, usize),
}

/// Outcome of an extremal perturbation scan: the chosen target and the
/// closeness of the perturbed graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbationResult {
    pub kind: PerturbationKind,
    pub target: Target,
    pub value: Dyadic,
}

impl PerturbationResult {
    pub fn vertex(&self) -> Option<usize> {
        match self.target {
            Target::Vertex(v) => Some(v),
            Target::Link(..) => None,
        }
    }

    pub fn link(&self) -> Option<(usize, usize)> {
        match self.target {
            Target::Link(u, v) => Some((u, v)),
            Target::Vertex(_) => None,
        }
    }
}

/// Brute-force VR: closeness of every single-vertex deletion, minimized.
/// Ties resolve to the smallest vertex label.
pub fn vr_oracle(g: &Graph) -> Result<PerturbationResult, Error> {
    if g.order() < 2 {
        return Err(Error::GraphTooSmall { order: g.order(), needed: 2 });
    }
    let mut best: Option<(Dyadic, usize)> = None;
    for r in g.vertices() {
        let value = closeness_oracle(&g.remove_vertex(r)?)?.total;
        if best.map_or(true, |(min, _)| value < min) {
            best = Some((value, r));
        }
    }
    let (value, r) = best.expect("order >= 2 scans at least one removal");
    Ok(PerturbationResult {
        kind: PerturbationKind::VertexRemoval,
        target: Target::Vertex(r),
        value,
    })
}

/// Brute-force LR: closeness of every single-link deletion, minimized.
/// Ties resolve to the lexicographically smallest link.
pub fn lr_oracle(g: &Graph) -> Result<PerturbationResult, Error> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::NoLinks);
    }
    let mut best: Option<(Dyadic, (usize, usize))> = None;
    for (u, v) in edges {
        let value = closeness_oracle(&g.remove_edge(u, v)?)?.total;
        if best.map_or(true, |(min, _)| value < min) {
            best = Some((value, (u, v)));
        }
    }
    let (value, (u, v)) = best.expect("at least one link was scanned");
    Ok(PerturbationResult {
        kind: PerturbationKind::LinkRemoval,
        target: Target::Link(u, v),
        value,
    })
}

/// Closed-form VR of the lollipop graph: `(m-1)(m-2)/2 + 2n + 2^(2-n) - 4`,
/// attained by deleting the bridge-side clique vertex `m`.
pub fn vr_lollipop(spec: &LollipopSpec) -> Dyadic {
    VertexCase::BridgeVertex
        .closeness(spec)
        .expect("the bridge-vertex case is defined for every lollipop")
}

/// Closed-form LR of the lollipop graph: `m(m-1)/2 + 2n + 2^(2-n) - 4`,
/// attained by deleting the bridge link `(m, m+1)`.
pub fn lr_lollipop(spec: &LollipopSpec) -> Dyadic {
    LinkCase::Bridge
        .closeness(spec)
        .expect("the bridge-link case is defined for every lollipop")
}

/// The vertex-deletion cases. Position parameters are path-relative: the
/// vertex at path position `j` is label `m + j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexCase {
    /// "4.1": delete the clique vertex carrying the bridge (label `m`).
    BridgeVertex,
    /// "4.2": delete a clique vertex not on the bridge (representative: 1).
    CliqueVertex,
    /// "4.3": delete the far end of the path (label `m + n`).
    LeafVertex,
    /// "4.4": delete the path vertex adjacent to the bridge (label `m + 1`).
    PathHead,
    /// "4.5": delete the path vertex at position `j`, `2 <= j <= n - 1`.
    PathMiddle(usize),
}

impl VertexCase {
    pub fn id(self) -> &'static str {
        match self {
            VertexCase::BridgeVertex => "4.1",
            VertexCase::CliqueVertex => "4.2",
            VertexCase::LeafVertex => "4.3",
            VertexCase::PathHead => "4.4",
            VertexCase::PathMiddle(_) => "4.5",
        }
    }

    /// Path position for the parameterized case.
    pub fn position(self) -> Option<usize> {
        match self {
            VertexCase::PathMiddle(j) => Some(j),
            _ => None,
        }
    }

    pub fn is_defined(self, spec: &LollipopSpec) -> bool {
        match self {
            VertexCase::BridgeVertex | VertexCase::CliqueVertex | VertexCase::LeafVertex => true,
            VertexCase::PathHead => spec.n() >= 2,
            VertexCase::PathMiddle(j) => 2 <= j && j + 1 <= spec.n(),
        }
    }

    /// Label of the deleted vertex.
    pub fn removed_vertex(self, spec: &LollipopSpec) -> Option<usize> {
        if !self.is_defined(spec) {
            return None;
        }
        Some(match self {
            VertexCase::BridgeVertex => spec.m(),
            VertexCase::CliqueVertex => 1,
            VertexCase::LeafVertex => spec.m() + spec.n(),
            VertexCase::PathHead => spec.m() + 1,
            VertexCase::PathMiddle(j) => spec.m() + j,
        })
    }

    /// Closed-form closeness of the graph after this deletion.
    pub fn closeness(self, spec: &LollipopSpec) -> Option<Dyadic> {
        if !self.is_defined(spec) {
            return None;
        }
        let m = spec.m() as i128;
        let n = spec.n() as i128;
        let e = spec.n() as i32;
        Some(match self {
            VertexCase::BridgeVertex => {
                Dyadic::new((m - 1) * (m - 2), 1) + 2 * n - 4 + Dyadic::pow2(2 - e)
            }
            VertexCase::CliqueVertex => {
                ((m - 1) * (m - Dyadic::pow2(1 - e))) * Dyadic::pow2(-1)
                    + 2 * n
                    + 3 * Dyadic::pow2(-e)
                    - 3
            }
            VertexCase::LeafVertex => {
                (m * (m + 1 - Dyadic::pow2(2 - e))) * Dyadic::pow2(-1)
                    + 2 * n
                    + 3 * Dyadic::pow2(1 - e)
                    - 5
            }
            VertexCase::PathHead => {
                Dyadic::new(m * (m - 1), 1) + 2 * n - 6 + Dyadic::pow2(3 - e)
            }
            VertexCase::PathMiddle(j) => {
                let j = j as i32;
                (m * (m + 1 - Dyadic::pow2(2 - j))) * Dyadic::pow2(-1)
                    + 2 * n
                    - 9
                    + 3 * Dyadic::pow2(1 - j)
                    + Dyadic::pow2(2 + j - e)
            }
        })
    }

    /// The physically deleted graph, for checking the closed form.
    pub fn mutated(self, spec: &LollipopSpec) -> Option<Graph> {
        let r = self.removed_vertex(spec)?;
        Some(
            gen_lollipop(spec)
                .remove_vertex(r)
                .expect("a lollipop graph keeps at least 3 vertices after one deletion"),
        )
    }

    /// Every defined case at `spec`, one entry per deletable position.
    pub fn enumerate(spec: &LollipopSpec) -> Vec<VertexCase> {
        let mut cases = vec![
            VertexCase::BridgeVertex,
            VertexCase::CliqueVertex,
            VertexCase::LeafVertex,
        ];
        if spec.n() >= 2 {
            cases.push(VertexCase::PathHead);
        }
        for j in 2..spec.n() {
            cases.push(VertexCase::PathMiddle(j));
        }
        cases
    }
}

/// The link-deletion cases. Position parameters are path-relative: the link
/// at path position `k` joins labels `m + k` and `m + k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkCase {
    /// "5.1": delete the bridge link `(m, m+1)`.
    Bridge,
    /// "5.2": delete the leaf link `(m+n-1, m+n)`.
    LeafLink,
    /// "5.3": delete the path link at position `k`, `1 <= k <= n - 2`.
    PathLink(usize),
    /// "5.4": delete a clique link touching the bridge vertex
    /// (representative: `(1, m)`).
    CliqueBridgeLink,
    /// "5.5": delete a clique link missing the bridge vertex
    /// (representative: `(1, 2)`).
    CliqueInnerLink,
}

impl LinkCase {
    pub fn id(self) -> &'static str {
        match self {
            LinkCase::Bridge => "5.1",
            LinkCase::LeafLink => "5.2",
            LinkCase::PathLink(_) => "5.3",
            LinkCase::CliqueBridgeLink => "5.4",
            LinkCase::CliqueInnerLink => "5.5",
        }
    }

    pub fn position(self) -> Option<usize> {
        match self {
            LinkCase::PathLink(k) => Some(k),
            _ => None,
        }
    }

    pub fn is_defined(self, spec: &LollipopSpec) -> bool {
        match self {
            LinkCase::Bridge | LinkCase::CliqueBridgeLink | LinkCase::CliqueInnerLink => true,
            LinkCase::LeafLink => spec.n() >= 2,
            LinkCase::PathLink(k) => 1 <= k && k + 2 <= spec.n(),
        }
    }

    /// The deleted link.
    pub fn removed_link(self, spec: &LollipopSpec) -> Option<(usize, usize)> {
        if !self.is_defined(spec) {
            return None;
        }
        let (m, n) = (spec.m(), spec.n());
        Some(match self {
            LinkCase::Bridge => (m, m + 1),
            LinkCase::LeafLink => (m + n - 1, m + n),
            LinkCase::PathLink(k) => (m + k, m + k + 1),
            LinkCase::CliqueBridgeLink => (1, m),
            LinkCase::CliqueInnerLink => (1, 2),
        })
    }

    /// Closed-form closeness of the graph after this deletion.
    pub fn closeness(self, spec: &LollipopSpec) -> Option<Dyadic> {
        if !self.is_defined(spec) {
            return None;
        }
        let m = spec.m() as i128;
        let n = spec.n() as i128;
        let e = spec.n() as i32;
        Some(match self {
            LinkCase::Bridge => {
                Dyadic::new(m * (m - 1), 1) + 2 * n - 4 + Dyadic::pow2(2 - e)
            }
            LinkCase::LeafLink => {
                (m * (m + 1 - Dyadic::pow2(2 - e))) * Dyadic::pow2(-1)
                    + 2 * n
                    - 5
                    + 3 * Dyadic::pow2(1 - e)
            }
            LinkCase::PathLink(k) => {
                let k = k as i32;
                (m * (m + 1 - Dyadic::pow2(1 - k))) * Dyadic::pow2(-1)
                    + 2 * n
                    - 7
                    + 3 * Dyadic::pow2(-k)
                    + Dyadic::pow2(2 + k - e)
            }
            LinkCase::CliqueBridgeLink => {
                closeness_lollipop(spec) - 1 + Dyadic::pow2(-e - 1)
            }
            LinkCase::CliqueInnerLink => closeness_lollipop(spec) - Dyadic::pow2(-1),
        })
    }

    /// The physically deleted graph, for checking the closed form.
    pub fn mutated(self, spec: &LollipopSpec) -> Option<Graph> {
        let (u, v) = self.removed_link(spec)?;
        Some(
            gen_lollipop(spec)
                .remove_edge(u, v)
                .expect("every case targets a link the lollipop graph has"),
        )
    }

    /// Every defined case at `spec`, one entry per deletable position.
    pub fn enumerate(spec: &LollipopSpec) -> Vec<LinkCase> {
        let mut cases = vec![LinkCase::Bridge];
        if spec.n() >= 2 {
            cases.push(LinkCase::LeafLink);
        }
        for k in 1..spec.n().saturating_sub(1) {
            cases.push(LinkCase::PathLink(k));
        }
        cases.push(LinkCase::CliqueBridgeLink);
        cases.push(LinkCase::CliqueInnerLink);
        cases
    }
}

/// A closed-form case value inside a [`CaseBreakdown`]. For the
/// parameterized cases ("4.5", "5.3") `position` records the path position
/// that minimizes the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseEntry {
    pub id: &'static str,
    pub position: Option<usize>,
    pub value: Dyadic,
}

/// Ordered map of case id to closed-form value for one lollipop graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseBreakdown {
    pub entries: Vec<CaseEntry>,
}

impl CaseBreakdown {
    pub fn get(&self, id: &str) -> Option<&CaseEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Entry with the smallest value; earlier entries win ties.
    pub fn min_entry(&self) -> &CaseEntry {
        self.entries
            .iter()
            .min_by_key(|e| e.value)
            .expect("a breakdown always carries at least one case")
    }
}

/// Closed-form values of all defined vertex-deletion cases. Parameterized
/// case "4.5" is folded to its minimum over positions.
pub fn vr_cases(spec: &LollipopSpec) -> CaseBreakdown {
    fold_cases(
        VertexCase::enumerate(spec)
            .into_iter()
            .map(|c| (c.id(), c.position(), c.closeness(spec).unwrap())),
    )
}

/// Closed-form values of all defined link-deletion cases. Parameterized
/// case "5.3" is folded to its minimum over positions.
pub fn lr_cases(spec: &LollipopSpec) -> CaseBreakdown {
    fold_cases(
        LinkCase::enumerate(spec)
            .into_iter()
            .map(|c| (c.id(), c.position(), c.closeness(spec).unwrap())),
    )
}

fn fold_cases(
    values: impl Iterator<Item = (&'static str, Option<usize>, Dyadic)>,
) -> CaseBreakdown {
    let mut entries: Vec<CaseEntry> = Vec::new();
    for (id, position, value) in values {
        match entries.iter_mut().find(|e| e.id == id) {
            Some(entry) if value < entry.value => {
                entry.position = position;
                entry.value = value;
            }
            Some(_) => {}
            None => entries.push(CaseEntry { id, position, value }),
        }
    }
    CaseBreakdown { entries }
}

/// One strict inequality between case values, evaluated exactly.
#[derive(Clone, Debug)]
pub struct OrderingCheck {
    pub label: String,
    pub difference: Dyadic,
    pub holds: bool,
}

fn check(label: String, difference: Dyadic, threshold: Dyadic) -> OrderingCheck {
    OrderingCheck { label, holds: difference > threshold, difference }
}

/// The strict case orderings that make "4.1" the vertex-deletion minimum.
///
/// The gap of case 4.4 over 4.1 is `(m - 3) + 2^(2-n)`: from `m = 4` up it
/// exceeds 1, but at `m = 3` it dips to exactly 1 at `n = 2` and below 1
/// after that, so only the plain strict bound applies there.
pub fn vr_orderings(spec: &LollipopSpec) -> Vec<OrderingCheck> {
    let base = VertexCase::BridgeVertex.closeness(spec).unwrap();
    let mut checks = vec![
        check(
            "C(4.2) - C(4.1) > 0".into(),
            VertexCase::CliqueVertex.closeness(spec).unwrap() - base,
            Dyadic::ZERO,
        ),
        check(
            "C(4.3) - C(4.1) > 1".into(),
            VertexCase::LeafVertex.closeness(spec).unwrap() - base,
            Dyadic::ONE,
        ),
    ];
    if spec.n() >= 2 {
        let head = VertexCase::PathHead.closeness(spec).unwrap();
        let threshold = if spec.m() >= 4 { Dyadic::ONE } else { Dyadic::ZERO };
        checks.push(check(
            format!("C(4.4) - C(4.1) > {threshold}"),
            head - base,
            threshold,
        ));
        for j in 2..spec.n() {
            checks.push(check(
                format!("C(4.5 @ j={j}) - C(4.4) > 0"),
                VertexCase::PathMiddle(j).closeness(spec).unwrap() - head,
                Dyadic::ZERO,
            ));
        }
    }
    checks
}

/// The strict case orderings that make "5.1" the link-deletion minimum.
pub fn lr_orderings(spec: &LollipopSpec) -> Vec<OrderingCheck> {
    let base = LinkCase::Bridge.closeness(spec).unwrap();
    let mut checks = Vec::new();
    if spec.n() >= 2 {
        checks.push(check(
            "C(5.2) - C(5.1) > 0".into(),
            LinkCase::LeafLink.closeness(spec).unwrap() - base,
            Dyadic::ZERO,
        ));
    }
    for k in 1..spec.n().saturating_sub(1) {
        checks.push(check(
            format!("C(5.3 @ k={k}) - C(5.1) > 0"),
            LinkCase::PathLink(k).closeness(spec).unwrap() - base,
            Dyadic::ZERO,
        ));
    }
    checks.push(check(
        "C(5.4) - C(5.1) > 0".into(),
        LinkCase::CliqueBridgeLink.closeness(spec).unwrap() - base,
        Dyadic::ZERO,
    ));
    checks.push(check(
        "C(5.5) - C(5.1) > 0".into(),
        LinkCase::CliqueInnerLink.closeness(spec).unwrap() - base,
        Dyadic::ZERO,
    ));
    checks
}
