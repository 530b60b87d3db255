//! Command-line surface: argument types and the dispatch into the library.
//!
//! Exit codes: 0 for success, 1 when a verification ran and found a
//! divergence, 2 for usage, parse, or precondition failures.

use std::fmt;
use std::fs;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lollipop_core::additional::{additional_lollipop, additional_oracle};
use lollipop_core::families::{
    closeness_lollipop, gen_complete, gen_cycle, gen_lollipop, gen_path, LollipopSpec,
};
use lollipop_core::graph::closeness_oracle;
use lollipop_core::robustness::{
    lr_cases, lr_lollipop, lr_oracle, vr_cases, vr_lollipop, vr_oracle, CaseBreakdown,
};

use crate::edgelist;
use crate::report::{
    CaseValue, ComputeReport, DyadicValue, GenReport, GraphSummary, LollipopReport,
    TargetReport,
};
use crate::verify::{self, Suite};

/// Exact closeness, residual closeness, and link-addition analysis for
/// lollipop graphs.
#[derive(Parser)]
#[command(name = "lollipop", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Generate a graph family member as an edge list.
    Gen(GenArgs),
    /// Compute a closeness metric of a graph read from an edge-list file.
    Compute(ComputeArgs),
    /// Sweep closed forms against the brute-force oracle on a grid.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy)]
pub enum Family {
    Complete,
    Path,
    Cycle,
    Lollipop,
}

#[derive(Args)]
pub struct GenArgs {
    /// Which family to generate.
    #[arg(value_enum)]
    pub family: Family,
    /// Clique size (complete, lollipop).
    #[arg(short)]
    pub m: Option<usize>,
    /// Vertex count (path, cycle) or path length (lollipop).
    #[arg(short)]
    pub n: Option<usize>,
    /// Write the edge list here and print a JSON summary instead.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    /// Total closeness.
    Closeness,
    /// Vertex residual closeness: worst single vertex removal.
    Vr,
    /// Link residual closeness: worst single link removal.
    Lr,
    /// Additional closeness: best single link addition.
    Additional,
}

impl Metric {
    fn name(self) -> &'static str {
        match self {
            Metric::Closeness => "closeness",
            Metric::Vr => "vr",
            Metric::Lr => "lr",
            Metric::Additional => "additional",
        }
    }
}

#[derive(Args)]
pub struct ComputeArgs {
    /// Which metric to compute.
    #[arg(value_enum)]
    pub metric: Metric,
    /// Edge-list file to read.
    pub input: PathBuf,
    /// Include the closeness of every vertex (closeness only).
    #[arg(long)]
    pub per_vertex: bool,
    /// Include the closed-form case breakdown (vr and lr, with --lollipop).
    #[arg(long)]
    pub cases: bool,
    /// Claim the input is the lollipop graph with these parameters and
    /// check the closed form against the computed value.
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    pub lollipop: Option<Vec<usize>>,
}

/// An inclusive range written `a..b`.
#[derive(Clone, Debug)]
pub struct RangeArg {
    start: usize,
    end: usize,
}

impl RangeArg {
    pub fn new(start: usize, end: usize) -> Result<RangeArg, String> {
        if start == 0 {
            return Err("ranges are 1-based".into());
        }
        if start > end {
            return Err(format!("empty range {start}..{end}"));
        }
        Ok(RangeArg { start, end })
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn iter(&self) -> RangeInclusive<usize> {
        self.start..=self.end
    }
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<RangeArg, String> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| format!("expected an inclusive range like 3..10, got `{s}`"))?;
        let start = a.trim().parse::<usize>().map_err(|_| format!("invalid bound `{a}`"))?;
        let end = b.trim().parse::<usize>().map_err(|_| format!("invalid bound `{b}`"))?;
        RangeArg::new(start, end)
    }
}

impl fmt::Display for RangeArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Which suite to sweep.
    #[arg(value_enum)]
    pub suite: Suite,
    /// Clique sizes to cover, as an inclusive range.
    #[arg(short, long, default_value = "3..10")]
    pub m: RangeArg,
    /// Path lengths to cover, as an inclusive range.
    #[arg(short, long, default_value = "1..12")]
    pub n: RangeArg,
}

pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Gen(args) => gen(args),
        Command::Compute(args) => compute(args),
        Command::Verify(args) => verify_sweep(args),
    }
}

fn require(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.with_context(|| format!("{family} needs {flag}"))
}

fn forbid(value: Option<usize>, flag: &str, family: &str) -> Result<()> {
    if value.is_some() {
        bail!("{family} does not take {flag}");
    }
    Ok(())
}

fn gen(args: GenArgs) -> Result<i32> {
    let (name, graph) = match args.family {
        Family::Complete => {
            forbid(args.n, "-n", "complete")?;
            ("complete", gen_complete(require(args.m, "-m", "complete")?)?)
        }
        Family::Path => {
            forbid(args.m, "-m", "path")?;
            ("path", gen_path(require(args.n, "-n", "path")?)?)
        }
        Family::Cycle => {
            forbid(args.m, "-m", "cycle")?;
            ("cycle", gen_cycle(require(args.n, "-n", "cycle")?)?)
        }
        Family::Lollipop => {
            let spec = LollipopSpec::new(
                require(args.m, "-m", "lollipop")?,
                require(args.n, "-n", "lollipop")?,
            )?;
            ("lollipop", gen_lollipop(&spec))
        }
    };
    let text = edgelist::serialize(&graph);
    match args.output {
        None => print!("{text}"),
        Some(path) => {
            fs::write(&path, &text)
                .with_context(|| format!("cannot write {}", path.display()))?;
            crate::report::print_json(&GenReport {
                family: name,
                order: graph.order(),
                size: graph.size(),
                path: path.display().to_string(),
            })?;
        }
    }
    Ok(0)
}

fn claimed_spec(args: &ComputeArgs) -> Result<Option<LollipopSpec>> {
    match args.lollipop.as_deref() {
        None => Ok(None),
        Some(&[m, n]) => Ok(Some(LollipopSpec::new(m, n)?)),
        Some(other) => bail!("--lollipop takes two values, got {}", other.len()),
    }
}

fn compute(args: ComputeArgs) -> Result<i32> {
    if args.per_vertex && args.metric != Metric::Closeness {
        bail!("--per-vertex applies only to the closeness metric");
    }
    if args.cases && !matches!(args.metric, Metric::Vr | Metric::Lr) {
        bail!("--cases applies only to the vr and lr metrics");
    }
    if args.cases && args.lollipop.is_none() {
        bail!("--cases needs --lollipop to name the parameters");
    }
    let claim = claimed_spec(&args)?;
    let text = fs::read_to_string(&args.input)
        .with_context(|| format!("cannot read {}", args.input.display()))?;
    let graph = edgelist::parse(&text)
        .with_context(|| format!("cannot parse {}", args.input.display()))?;

    let mut per_vertex = None;
    let mut target = None;
    let mut maximizers = None;
    let value = match args.metric {
        Metric::Closeness => {
            let report = closeness_oracle(&graph)?;
            if args.per_vertex {
                per_vertex = Some(
                    graph.vertices().map(|v| report.vertex(v).into()).collect(),
                );
            }
            report.total
        }
        Metric::Vr => {
            let result = vr_oracle(&graph)?;
            target = Some(TargetReport::from(result.target));
            result.value
        }
        Metric::Lr => {
            let result = lr_oracle(&graph)?;
            target = Some(TargetReport::from(result.target));
            result.value
        }
        Metric::Additional => {
            let scan = additional_oracle(&graph)?;
            target = Some(TargetReport::from(scan.best.target));
            maximizers = Some(scan.maximizers);
            scan.best.value
        }
    };

    let mut exit = 0;
    let lollipop = claim.map(|spec| {
        let structure = graph == gen_lollipop(&spec);
        let formula = match args.metric {
            Metric::Closeness => closeness_lollipop(&spec),
            Metric::Vr => vr_lollipop(&spec),
            Metric::Lr => lr_lollipop(&spec),
            Metric::Additional => additional_lollipop(&spec),
        };
        let matches = structure && formula == value;
        if !matches {
            exit = 1;
        }
        LollipopReport {
            m: spec.m(),
            n: spec.n(),
            structure,
            formula: formula.into(),
            matches,
        }
    });
    let cases = match (args.cases, claim) {
        (true, Some(spec)) => {
            let breakdown = match args.metric {
                Metric::Vr => vr_cases(&spec),
                _ => lr_cases(&spec),
            };
            Some(case_values(&breakdown))
        }
        _ => None,
    };

    crate::report::print_json(&ComputeReport {
        metric: args.metric.name(),
        graph: GraphSummary::from(&graph),
        value: DyadicValue::from(value),
        per_vertex,
        target,
        maximizers,
        cases,
        lollipop,
    })?;
    Ok(exit)
}

fn case_values(breakdown: &CaseBreakdown) -> Vec<CaseValue> {
    breakdown
        .entries
        .iter()
        .map(|entry| CaseValue {
            id: entry.id.to_string(),
            position: entry.position,
            value: entry.value.into(),
        })
        .collect()
}

fn verify_sweep(args: VerifyArgs) -> Result<i32> {
    let report = verify::run(args.suite, &args.m, &args.n)?;
    eprintln!(
        "verified {} cells, {} diverged",
        report.cells_checked, report.failures
    );
    crate::report::print_json(&report)?;
    Ok(verify::exit_code(&report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse_inclusively() {
        let range: RangeArg = "3..10".parse().unwrap();
        assert_eq!(range.iter().next(), Some(3));
        assert_eq!(range.end(), 10);
        assert_eq!(range.iter().count(), 8);
        assert_eq!(range.to_string(), "3..10");
    }

    #[test]
    fn bad_ranges_are_rejected() {
        assert!("".parse::<RangeArg>().is_err());
        assert!("3".parse::<RangeArg>().is_err());
        assert!("5..3".parse::<RangeArg>().is_err());
        assert!("0..3".parse::<RangeArg>().is_err());
        assert!("a..b".parse::<RangeArg>().is_err());
    }
}
