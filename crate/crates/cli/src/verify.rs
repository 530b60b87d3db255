//! The `verify` subcommand: re-derive every closed form on a parameter
//! grid and compare it against the brute-force oracle, cell by cell.

use std::collections::BTreeMap;

use anyhow::{bail, Result};
use lollipop_core::additional::{
    additional_lollipop, additional_oracle, closeness_a, closeness_b, closeness_c,
    closeness_d, diff_ac, optimal_k_scan, verify_a_dominates_d, vertex_b_closeness,
    CaseAParams, CaseBParams, CaseCParams, CaseDParams,
};
use lollipop_core::dyadic::Dyadic;
use lollipop_core::families::{
    closeness_complete, closeness_cycle, closeness_lollipop, closeness_path, gen_complete,
    gen_cycle, gen_lollipop, gen_path, LollipopSpec, MAX_PARAM,
};
use lollipop_core::graph::{closeness_oracle, Graph};
use lollipop_core::robustness::{
    lr_cases, lr_lollipop, lr_oracle, lr_orderings, vr_cases, vr_lollipop, vr_oracle,
    vr_orderings, LinkCase, Target, VertexCase,
};
use serde::Serialize;

use crate::commands::RangeArg;

/// Cycle lengths the families suite always sweeps, whatever the ranges.
const CYCLE_LENGTHS: std::ops::RangeInclusive<usize> = 3..=16;

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
pub enum Suite {
    /// Closed-form closeness of complete graphs, paths, cycles, lollipops.
    Families,
    /// Vertex residual closeness: value, argmin, cases, orderings.
    Vr,
    /// Link residual closeness: value, argmin, cases, orderings.
    Lr,
    /// Additional closeness: value, argmax, maximizer makeup.
    Additional,
    /// Chord-shape closed forms, their difference, and dominance.
    Appendices,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Families => "families",
            Suite::Vr => "vr",
            Suite::Lr => "lr",
            Suite::Additional => "additional",
            Suite::Appendices => "appendices",
        }
    }
}

#[derive(Serialize, Debug)]
pub struct CellReport {
    pub id: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Serialize, Debug)]
pub struct VerifyReport {
    pub suite: &'static str,
    pub m_range: String,
    pub n_range: String,
    pub cells_checked: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_divergence: Option<String>,
    pub counts: BTreeMap<String, usize>,
    pub cells: Vec<CellReport>,
}

/// 0 when every cell agreed, 1 otherwise.
pub fn exit_code(report: &VerifyReport) -> i32 {
    if report.failures == 0 {
        0
    } else {
        1
    }
}

/// One closed-form-versus-oracle comparison.
pub fn compare_cell(id: String, formula: Dyadic, oracle: Dyadic) -> CellReport {
    if formula == oracle {
        CellReport { id, ok: true, detail: None }
    } else {
        CellReport {
            id,
            ok: false,
            detail: Some(format!("closed form {formula} differs from oracle {oracle}")),
        }
    }
}

fn pass(id: String) -> CellReport {
    CellReport { id, ok: true, detail: None }
}

fn fail(id: String, detail: String) -> CellReport {
    CellReport { id, ok: false, detail: Some(detail) }
}

#[derive(Default)]
struct Collector {
    counts: BTreeMap<String, usize>,
    cells: Vec<CellReport>,
}

impl Collector {
    fn push(&mut self, kind: &str, cell: CellReport) {
        *self.counts.entry(kind.to_string()).or_default() += 1;
        self.cells.push(cell);
    }

    fn into_report(self, suite: Suite, m: &RangeArg, n: &RangeArg) -> VerifyReport {
        let failures = self.cells.iter().filter(|c| !c.ok).count();
        let first_divergence =
            self.cells.iter().find(|c| !c.ok).map(|c| c.id.clone());
        VerifyReport {
            suite: suite.name(),
            m_range: m.to_string(),
            n_range: n.to_string(),
            cells_checked: self.cells.len(),
            failures,
            first_divergence,
            counts: self.counts,
            cells: self.cells,
        }
    }
}

pub fn run(suite: Suite, m: &RangeArg, n: &RangeArg) -> Result<VerifyReport> {
    if m.end() > MAX_PARAM || n.end() > MAX_PARAM {
        bail!("ranges reach past the supported parameter maximum of {MAX_PARAM}");
    }
    let mut c = Collector::default();
    match suite {
        Suite::Families => families(&mut c, m, n),
        Suite::Vr => removal(&mut c, m, n, Removal::Vertex),
        Suite::Lr => removal(&mut c, m, n, Removal::Link),
        Suite::Additional => additional(&mut c, m, n),
        Suite::Appendices => appendices(&mut c, m, n),
    }
    Ok(c.into_report(suite, m, n))
}

fn brute(g: &Graph) -> Dyadic {
    closeness_oracle(g).expect("graphs within the parameter caps cannot overflow").total
}

fn lollipop_specs(m: &RangeArg, n: &RangeArg) -> Vec<LollipopSpec> {
    let mut specs = Vec::new();
    for m_ in m.iter().filter(|&v| v >= 3) {
        for n_ in n.iter() {
            specs.push(LollipopSpec::new(m_, n_).expect("ranges were pre-validated"));
        }
    }
    specs
}

fn families(c: &mut Collector, m: &RangeArg, n: &RangeArg) {
    for m_ in m.iter() {
        let id = format!("complete m={m_}");
        let formula = closeness_complete(m_).expect("range was pre-validated");
        let g = gen_complete(m_).expect("range was pre-validated");
        c.push("complete", compare_cell(id, formula, brute(&g)));
    }
    for n_ in n.iter() {
        let id = format!("path n={n_}");
        let formula = closeness_path(n_).expect("range was pre-validated");
        let g = gen_path(n_).expect("range was pre-validated");
        c.push("path", compare_cell(id, formula, brute(&g)));
    }
    for len in CYCLE_LENGTHS {
        let id = format!("cycle len={len}");
        let formula = closeness_cycle(len).expect("the fixed lengths are valid");
        let g = gen_cycle(len).expect("the fixed lengths are valid");
        c.push("cycle", compare_cell(id, formula, brute(&g)));
    }
    for spec in lollipop_specs(m, n) {
        let id = format!("lollipop m={} n={}", spec.m(), spec.n());
        let formula = closeness_lollipop(&spec);
        c.push("lollipop", compare_cell(id, formula, brute(&gen_lollipop(&spec))));
    }
}

enum Removal {
    Vertex,
    Link,
}

fn removal(c: &mut Collector, m: &RangeArg, n: &RangeArg, kind: Removal) {
    let name = match kind {
        Removal::Vertex => "vr",
        Removal::Link => "lr",
    };
    for spec in lollipop_specs(m, n) {
        let id = format!("{name} m={} n={}", spec.m(), spec.n());
        let cell = match kind {
            Removal::Vertex => vr_cell(&spec, id),
            Removal::Link => lr_cell(&spec, id),
        };
        c.push(name, cell);
    }
}

fn vr_cell(spec: &LollipopSpec, id: String) -> CellReport {
    let g = gen_lollipop(spec);
    let oracle = match vr_oracle(&g) {
        Ok(r) => r,
        Err(e) => return fail(id, format!("oracle failed: {e}")),
    };
    let formula = vr_lollipop(spec);
    if oracle.value != formula {
        return fail(id, format!("closed form {formula} differs from oracle {}", oracle.value));
    }
    if oracle.target != Target::Vertex(spec.m()) {
        return fail(id, format!("argmin {:?} is not the bridge vertex", oracle.target));
    }
    for case in VertexCase::enumerate(spec) {
        let value = case.closeness(spec).expect("enumerated cases are defined");
        let mutated = case.mutated(spec).expect("enumerated cases are defined");
        if value != brute(&mutated) {
            return fail(id, format!("case {} disagrees with its graph", case.id()));
        }
    }
    for check in vr_orderings(spec) {
        if !check.holds {
            return fail(id, format!("ordering {} fails by {}", check.label, check.difference));
        }
    }
    let min = vr_cases(spec).min_entry().clone();
    if min.id != "4.1" {
        return fail(id, format!("case breakdown bottoms out at {}", min.id));
    }
    pass(id)
}

fn lr_cell(spec: &LollipopSpec, id: String) -> CellReport {
    let g = gen_lollipop(spec);
    let oracle = match lr_oracle(&g) {
        Ok(r) => r,
        Err(e) => return fail(id, format!("oracle failed: {e}")),
    };
    let formula = lr_lollipop(spec);
    if oracle.value != formula {
        return fail(id, format!("closed form {formula} differs from oracle {}", oracle.value));
    }
    if oracle.target != Target::Link(spec.m(), spec.m() + 1) {
        return fail(id, format!("argmin {:?} is not the bridge", oracle.target));
    }
    for case in LinkCase::enumerate(spec) {
        let value = case.closeness(spec).expect("enumerated cases are defined");
        let mutated = case.mutated(spec).expect("enumerated cases are defined");
        if value != brute(&mutated) {
            return fail(id, format!("case {} disagrees with its graph", case.id()));
        }
    }
    for check in lr_orderings(spec) {
        if !check.holds {
            return fail(id, format!("ordering {} fails by {}", check.label, check.difference));
        }
    }
    let min = lr_cases(spec).min_entry().clone();
    if min.id != "5.1" {
        return fail(id, format!("case breakdown bottoms out at {}", min.id));
    }
    pass(id)
}

fn additional(c: &mut Collector, m: &RangeArg, n: &RangeArg) {
    for spec in lollipop_specs(m, n) {
        let (m_, n_) = (spec.m(), spec.n());
        let id = format!("additional m={m_} n={n_}");
        let scan = match additional_oracle(&gen_lollipop(&spec)) {
            Ok(s) => s,
            Err(e) => {
                c.push("additional", fail(id, format!("oracle failed: {e}")));
                continue;
            }
        };
        let formula = additional_lollipop(&spec);
        let cell = if formula != scan.best.value {
            fail(id, format!("closed form {formula} differs from oracle {}", scan.best.value))
        } else if n_ <= 3 && !scan.maximizers.iter().any(|&(u, _)| u < m_) {
            fail(id, "no maximizer leaves from below the bridge vertex".into())
        } else if n_ == 4
            && !(scan.maximizers.iter().any(|&(u, _)| u < m_)
                && scan.maximizers.contains(&(m_, m_ + 4)))
        {
            fail(id, "expected both chord shapes among the maximizers".into())
        } else if n_ >= 5 {
            match optimal_k_scan(m_, n_) {
                Ok(best) if scan.best.link() != Some((m_, m_ + best.k)) => fail(
                    id,
                    format!("argmax {:?} is not the scanned chord k={}", scan.best.link(), best.k),
                ),
                Ok(best) => match best.advisory_p {
                    Some(p) => {
                        let (p, k) = (p as i64, best.k as i64);
                        if (2 * p - k).abs() <= 3 && (2 * p - 3..=2 * p + 1).contains(&k) {
                            pass(id)
                        } else {
                            fail(id, format!("advisory p={p} does not bracket k={k}"))
                        }
                    }
                    None => fail(id, "no advisory slope crossover".into()),
                },
                Err(e) => fail(id, format!("chord scan failed: {e}")),
            }
        } else {
            pass(id)
        };
        c.push("additional", cell);
    }
}

fn appendices(c: &mut Collector, m: &RangeArg, n: &RangeArg) {
    for m_ in m.iter().filter(|&v| v >= 3) {
        for n_ in n.iter() {
            for k in 2..=n_ {
                let id = format!("shape-a m={m_} n={n_} k={k}");
                let params = CaseAParams::new(m_, n_, k).expect("domain was filtered");
                c.push("shape-a", compare_cell(id, closeness_a(&params), brute(&params.build())));
            }
        }
        for k in n.iter() {
            let id = format!("shape-b m={m_} k={k}");
            let params = CaseBParams::new(m_, k).expect("domain was filtered");
            let report = closeness_oracle(&params.build())
                .expect("graphs within the parameter caps cannot overflow");
            let mut cell = compare_cell(id.clone(), closeness_b(&params), report.total);
            if cell.ok {
                let end = vertex_b_closeness(&params);
                let observed = report.vertex(m_ + k);
                if end != observed {
                    cell = fail(
                        id,
                        format!("path-end closeness {end} differs from oracle {observed}"),
                    );
                }
            }
            c.push("shape-b", cell);
        }
        for n_ in n.iter() {
            for k in 1..=n_ {
                let id = format!("shape-c m={m_} n={n_} k={k}");
                let params = CaseCParams::new(m_, n_, k).expect("domain was filtered");
                c.push("shape-c", compare_cell(id, closeness_c(&params), brute(&params.build())));
            }
        }
        for n_ in n.iter().filter(|&v| v >= 3) {
            for q in 1..=(n_ - 2) {
                for k in (q + 2)..=n_ {
                    let id = format!("shape-d m={m_} n={n_} q={q} k={k}");
                    let params = CaseDParams::new(m_, n_, q, k).expect("domain was filtered");
                    c.push(
                        "shape-d",
                        compare_cell(id, closeness_d(&params), brute(&params.build())),
                    );
                }
            }
        }
    }
    for n_ in n.iter().filter(|&v| v >= 2) {
        for k in 2..=n_ {
            let id = format!("diff n={n_} k={k}");
            let expected = diff_ac(n_, k).expect("domain was filtered");
            let divergence = m.iter().filter(|&v| v >= 3).find_map(|m_| {
                let a = closeness_a(&CaseAParams::new(m_, n_, k).ok()?);
                let c_ = closeness_c(&CaseCParams::new(m_, n_, k).ok()?);
                (a - c_ != expected).then(|| (m_, a - c_))
            });
            let cell = match divergence {
                None => pass(id),
                Some((m_, got)) => fail(
                    id,
                    format!("difference {got} at m={m_} differs from the closed form {expected}"),
                ),
            };
            c.push("diff", cell);
        }
    }
    for m_ in m.iter().filter(|&v| v >= 3) {
        for n_ in n.iter().filter(|&v| v >= 3) {
            let id = format!("dominance m={m_} n={n_}");
            let cell = match verify_a_dominates_d(m_, n_) {
                Ok(report) if report.violations.is_empty() && report.gap_violations.is_empty() => {
                    pass(id)
                }
                Ok(report) => fail(
                    id,
                    format!(
                        "violations {:?}, gap violations {:?}",
                        report.violations, report.gap_violations
                    ),
                ),
                Err(e) => fail(id, format!("dominance check failed: {e}")),
            };
            c.push("dominance", cell);
        }
    }
}
