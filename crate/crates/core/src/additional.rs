//! Additional closeness: how much one extra link can raise the closeness of
//! a lollipop graph, and where that link goes.
//!
//! The brute-force side ([`additional_oracle`]) tries every absent link. The
//! closed-form side covers the four shapes a useful new link can take on
//! `L(m, n)` (clique `1..=m`, path `m+1..=m+n`):
//!
//! * **A** — chord from the bridge clique vertex to path position `k`:
//!   link `(m, m+k)`, closing a cycle of length `k + 1` through the path.
//! * **B** — a clique with a path strung between two of its vertices:
//!   links `(m, m+1)` and `(m-1, m+k)` around a `k`-vertex path.
//! * **C** — chord from a non-bridge clique vertex to path position `k`:
//!   link `(m-1, m+k)`, closing a cycle of length `k + 2`.
//! * **D** — chord between two path positions `q` and `k`: link
//!   `(m+q, m+k)`, closing a cycle away from the clique.
//!
//! Shape A wins for every path long enough (`n >= 5`); for shorter paths the
//! winner flips to shape C, with a tie at `n = 2`. [`additional_lollipop`]
//! stitches those regimes into the closed-form optimum, and
//! [`optimal_k_scan`] locates the best `k` for shape A exhaustively, with a
//! floating-point slope heuristic reported alongside as a cross-check.

use crate::dyadic::Dyadic;
use crate::error::Error;
use crate::families::{
    check_param, cycle_vertex_closeness, gen_lollipop, LollipopSpec, MAX_PARAM,
};
use crate::graph::{closeness_oracle, Graph};
use crate::robustness::{PerturbationKind, PerturbationResult, Target};

/// Outcome of the brute-force link-addition scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkAdditionScan {
    /// The maximizing addition; ties resolve to the lexicographically
    /// smallest link.
    pub best: PerturbationResult,
    /// Every link attaining the maximum, in lexicographic order.
    pub maximizers: Vec<(usize, usize)>,
}

/// Brute-force additional closeness: closeness of every single-link
/// addition, maximized. Fails on complete graphs, which have no link to add.
pub fn additional_oracle(g: &Graph) -> Result<LinkAdditionScan, Error> {
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    let mut scanned: Vec<((usize, usize), Dyadic)> = Vec::new();
    let mut max: Option<Dyadic> = None;
    for u in g.vertices() {
        for v in (u + 1)..=g.order() {
            if g.has_edge(u, v) {
                continue;
            }
            let value = closeness_oracle(&g.add_edge(u, v)?)?.total;
            if max.map_or(true, |m| value > m) {
                max = Some(value);
            }
            scanned.push(((u, v), value));
        }
    }
    let max = max.expect("an incomplete graph has at least one absent link");
    let maximizers: Vec<(usize, usize)> = scanned
        .iter()
        .filter(|(_, v)| *v == max)
        .map(|&(link, _)| link)
        .collect();
    let (u, v) = maximizers[0];
    Ok(LinkAdditionScan {
        best: PerturbationResult {
            kind: PerturbationKind::LinkAddition,
            target: Target::Link(u, v),
            value: max,
        },
        maximizers,
    })
}

/// Shape A: `L(m, n)` plus the chord `(m, m+k)`, `2 <= k <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseAParams {
    m: usize,
    n: usize,
    k: usize,
}

impl CaseAParams {
    pub fn new(m: usize, n: usize, k: usize) -> Result<CaseAParams, Error> {
        check_param("m", m, 3, MAX_PARAM)?;
        check_param("n", n, 1, MAX_PARAM)?;
        check_param("k", k, 2, n)?;
        Ok(CaseAParams { m, n, k })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn chord(&self) -> (usize, usize) {
        (self.m, self.m + self.k)
    }

    pub fn build(&self) -> Graph {
        let spec = LollipopSpec::new(self.m, self.n).expect("params were validated");
        gen_lollipop(&spec)
            .add_edge(self.m, self.m + self.k)
            .expect("the chord skips the bridge, so it is a new link")
    }
}

/// Closeness of shape A:
/// `(m+1-2^(k-n))(m-1)/2 + 2(n-k) - 2 + 2^(1+k-n) + (k+m+2-2^(1+k-n)) * f`,
/// where `f` is the per-vertex closeness of the cycle on `k + 1` vertices.
pub fn closeness_a(p: &CaseAParams) -> Dyadic {
    let (m, n, k) = (p.m as i128, p.n as i128, p.k as i128);
    let (en, ek) = (p.n as i32, p.k as i32);
    let f = cycle_vertex_closeness(p.k + 1).expect("k + 1 <= 65 is a valid cycle length");
    ((m + 1 - Dyadic::pow2(ek - en)) * (m - 1)) * Dyadic::pow2(-1)
        + 2 * (n - k)
        - 2
        + Dyadic::pow2(1 + ek - en)
        + (k + m + 2 - Dyadic::pow2(1 + ek - en)) * f
}

/// Shape B: a clique on `1..=m` and a path on `m+1..=m+k`, tied together by
/// the links `(m, m+1)` and `(m-1, m+k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseBParams {
    m: usize,
    k: usize,
}

impl CaseBParams {
    pub fn new(m: usize, k: usize) -> Result<CaseBParams, Error> {
        check_param("m", m, 3, MAX_PARAM)?;
        check_param("k", k, 1, MAX_PARAM)?;
        Ok(CaseBParams { m, k })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn build(&self) -> Graph {
        let (m, k) = (self.m, self.k);
        let mut edges = Vec::new();
        for u in 1..=m {
            for v in (u + 1)..=m {
                edges.push((u, v));
            }
        }
        for i in 1..k {
            edges.push((m + i, m + i + 1));
        }
        edges.push((m, m + 1));
        edges.push((m - 1, m + k));
        Graph::from_edges(m + k, &edges).expect("validated parameters build a simple graph")
    }
}

/// Closeness of shape B:
/// `m(m+3)/2 + 4p - 1 - (3p+2m-1)*2^-p` for even `k = 2p`,
/// `m(m+3)/2 + 4p + 1 - (4p+3m)*2^-(p+1)` for odd `k = 2p+1`.
pub fn closeness_b(params: &CaseBParams) -> Dyadic {
    let m = params.m as i128;
    let p = (params.k / 2) as i128;
    let ep = p as i32;
    let base = Dyadic::new(m * (m + 3), 1);
    if params.k % 2 == 0 {
        base + 4 * p - 1 - (3 * p + 2 * m - 1) * Dyadic::pow2(-ep)
    } else {
        base + 4 * p + 1 - (4 * p + 3 * m) * Dyadic::pow2(-ep - 1)
    }
}

/// Closeness of the mid-path vertex `m + k` of shape B:
/// `3/2 + m/4 - 3*2^-(p+1)` for even `k = 2p`,
/// `3/2 + m/4 - 2^-p` for odd `k = 2p+1`.
pub fn vertex_b_closeness(params: &CaseBParams) -> Dyadic {
    let m = params.m as i128;
    let ep = (params.k / 2) as i32;
    let base = Dyadic::new(3, 1) + m * Dyadic::pow2(-2);
    if params.k % 2 == 0 {
        base - 3 * Dyadic::pow2(-ep - 1)
    } else {
        base - Dyadic::pow2(-ep)
    }
}

/// Shape C: `L(m, n)` plus the chord `(m-1, m+k)`, `1 <= k <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseCParams {
    m: usize,
    n: usize,
    k: usize,
}

impl CaseCParams {
    pub fn new(m: usize, n: usize, k: usize) -> Result<CaseCParams, Error> {
        check_param("m", m, 3, MAX_PARAM)?;
        check_param("n", n, 1, MAX_PARAM)?;
        check_param("k", k, 1, n)?;
        Ok(CaseCParams { m, n, k })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn chord(&self) -> (usize, usize) {
        (self.m - 1, self.m + self.k)
    }

    pub fn build(&self) -> Graph {
        let spec = LollipopSpec::new(self.m, self.n).expect("params were validated");
        gen_lollipop(&spec)
            .add_edge(self.m - 1, self.m + self.k)
            .expect("vertex m-1 has no path links, so the chord is new")
    }
}

/// Closeness of shape C, split on the parity of `k`:
/// for even `k = 2p`,
/// `m(m+4-2^(k-n)-2^(2-p))/2 + 2n - 2k + p(4-3*2^-p) - 2^(1-p)
///  + (3*2^-p - 1)*2^(k-n)`,
/// and for odd `k = 2p+1`,
/// `m(m+4-2^(k-n)-3*2^-p)/2 + 2n - 2k + p(4-2^(1-p)) + 2 - 2^(1-p)
///  + (2^(1-p) - 1)*2^(k-n)`.
pub fn closeness_c(params: &CaseCParams) -> Dyadic {
    let (m, n, k) = (params.m as i128, params.n as i128, params.k as i128);
    let (en, ek) = (params.n as i32, params.k as i32);
    let p = (params.k / 2) as i128;
    let ep = p as i32;
    if params.k % 2 == 0 {
        (m * (m + 4 - Dyadic::pow2(ek - en) - Dyadic::pow2(2 - ep))) * Dyadic::pow2(-1)
            + 2 * n
            - 2 * k
            + p * (4 - 3 * Dyadic::pow2(-ep))
            - Dyadic::pow2(1 - ep)
            + (3 * Dyadic::pow2(-ep) - 1) * Dyadic::pow2(ek - en)
    } else {
        (m * (m + 4 - Dyadic::pow2(ek - en) - 3 * Dyadic::pow2(-ep))) * Dyadic::pow2(-1)
            + 2 * n
            - 2 * k
            + p * (4 - Dyadic::pow2(1 - ep))
            + 2
            - Dyadic::pow2(1 - ep)
            + (Dyadic::pow2(1 - ep) - 1) * Dyadic::pow2(ek - en)
    }
}

/// Shape D: `L(m, n)` plus the chord `(m+q, m+k)`, `1 <= q`, `q+2 <= k <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseDParams {
    m: usize,
    n: usize,
    q: usize,
    k: usize,
}

impl CaseDParams {
    pub fn new(m: usize, n: usize, q: usize, k: usize) -> Result<CaseDParams, Error> {
        check_param("m", m, 3, MAX_PARAM)?;
        check_param("n", n, 3, MAX_PARAM)?;
        check_param("q", q, 1, n.saturating_sub(2))?;
        check_param("k", k, q + 2, n)?;
        Ok(CaseDParams { m, n, q, k })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn chord(&self) -> (usize, usize) {
        (self.m + self.q, self.m + self.k)
    }

    pub fn build(&self) -> Graph {
        let spec = LollipopSpec::new(self.m, self.n).expect("params were validated");
        gen_lollipop(&spec)
            .add_edge(self.m + self.q, self.m + self.k)
            .expect("the chord spans at least two path links, so it is new")
    }
}

/// Closeness of shape D:
/// `m(m+1-2^-q-2^(k-n-q))/2 + 2(n+q-k) - 4
///  + (k-q+5+(m-3)*2^-q-2^(1+k-n)) * f + 2^(k-n) + 3*2^-(q+1)
///  + 3*2^(k-n-q-1)`,
/// where `f` is the per-vertex closeness of the cycle on `k - q + 1`
/// vertices.
pub fn closeness_d(params: &CaseDParams) -> Dyadic {
    let (m, n, q, k) =
        (params.m as i128, params.n as i128, params.q as i128, params.k as i128);
    let (en, eq, ek) = (params.n as i32, params.q as i32, params.k as i32);
    let f = cycle_vertex_closeness(params.k - params.q + 1)
        .expect("the chord closes a cycle of at least 3 vertices");
    (m * (m + 1 - Dyadic::pow2(-eq) - Dyadic::pow2(ek - en - eq))) * Dyadic::pow2(-1)
        + 2 * (n + q - k)
        - 4
        + (k - q + 5 + (m - 3) * Dyadic::pow2(-eq) - Dyadic::pow2(1 + ek - en)) * f
        + Dyadic::pow2(ek - en)
        + 3 * Dyadic::pow2(-eq - 1)
        + 3 * Dyadic::pow2(ek - en - eq - 1)
}

/// Closed form for `closeness_a - closeness_c` at the same `(n, k)`. The
/// clique size cancels, so it is not a parameter:
/// for even `k = 2p`, `3/2 - (p+2)*2^-p + 2^(p-n)*(1 - 2^(p-1))`;
/// for odd `k = 2p+1`, `3/2 - (1-2^(1-p))*2^(2p-n) - (5+2p)*2^-(1+p)`.
///
/// At `k = 2` the difference vanishes; at `k = 3` it is exactly `-1/4`
/// whatever `n` is.
pub fn diff_ac(n: usize, k: usize) -> Result<Dyadic, Error> {
    check_param("n", n, 1, MAX_PARAM)?;
    check_param("k", k, 2, n)?;
    let en = n as i32;
    let p = (k / 2) as i128;
    let ep = p as i32;
    let half3 = Dyadic::new(3, 1);
    if k % 2 == 0 {
        Ok(half3 - (p + 2) * Dyadic::pow2(-ep)
            + Dyadic::pow2(ep - en) * (1 - Dyadic::pow2(ep - 1)))
    } else {
        Ok(half3 - (1 - Dyadic::pow2(1 - ep)) * Dyadic::pow2(2 * ep - en)
            - (5 + 2 * p) * Dyadic::pow2(-1 - ep))
    }
}

/// Exhaustive comparison of shape A against shape D at one `(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominanceReport {
    /// `(q, k)` pairs compared; each must satisfy `C(A at k) > C(D at q, k)`.
    pub pairs_checked: usize,
    /// Pairs where the strict dominance failed (expected empty).
    pub violations: Vec<(usize, usize)>,
    /// Consecutive same-`k` comparisons of the off-clique gap sequence.
    pub gap_pairs_checked: usize,
    /// `(k, r)` positions where the gap sequence failed to decrease
    /// strictly (expected empty).
    pub gap_violations: Vec<(usize, usize)>,
}

/// Checks that chording from the clique (shape A) strictly beats chording
/// within the path (shape D) for every placement at `(m, n)`.
///
/// Alongside the raw comparison, the gap `F(r) = C(A) - C(D)` is tracked
/// along same-cycle-size slices: fix an odd chord span `k = 2p - 1` (an even
/// cycle through the clique) and let `r` index the odd cycle `k - q = 2r`
/// the path chord closes. As the path chord slides away from the clique
/// (`r` up, `q` down) the gap must shrink strictly: `F(r) > F(r+1)`.
pub fn verify_a_dominates_d(m: usize, n: usize) -> Result<DominanceReport, Error> {
    check_param("m", m, 3, MAX_PARAM)?;
    check_param("n", n, 3, MAX_PARAM)?;
    let mut report = DominanceReport {
        pairs_checked: 0,
        violations: Vec::new(),
        gap_pairs_checked: 0,
        gap_violations: Vec::new(),
    };
    for q in 1..=(n - 2) {
        for k in (q + 2)..=n {
            let a = closeness_a(&CaseAParams::new(m, n, k)?);
            let d = closeness_d(&CaseDParams::new(m, n, q, k)?);
            report.pairs_checked += 1;
            if a <= d {
                report.violations.push((q, k));
            }
        }
    }
    let gap = |k: usize, r: usize| -> Result<Dyadic, Error> {
        let a = closeness_a(&CaseAParams::new(m, n, k)?);
        let d = closeness_d(&CaseDParams::new(m, n, k - 2 * r, k)?);
        Ok(a - d)
    };
    for k in (3..=n).step_by(2) {
        let p = (k + 1) / 2;
        for r in 1..=p.saturating_sub(2) {
            report.gap_pairs_checked += 1;
            if gap(k, r)? <= gap(k, r + 1)? {
                report.gap_violations.push((k, r));
            }
        }
    }
    Ok(report)
}

/// Natural log of 2, as the slope heuristics need `2 / ln 2`.
const TWO_OVER_LN2: f64 = 2.0 / std::f64::consts::LN_2;

/// Binary64 slope heuristic for the odd-`k` chain of shape-A placements
/// (`k = 2p - 1`): positive while moving the chord out by two still pays.
pub fn odd_k_slope(m: usize, n: usize, p: usize) -> f64 {
    let (m, n, p) = (m as f64, n as f64, p as f64);
    2.0 * p + m + 1.0 + (2.0 * p - n).exp2() - (m / 3.0 + 1.0) * (3.0 * p - n - 1.0).exp2()
        - TWO_OVER_LN2
}

/// Binary64 slope heuristic for the even-`k` chain (`k = 2p`).
pub fn even_k_slope(m: usize, n: usize, p: usize) -> f64 {
    let (m, n, p) = (m as f64, n as f64, p as f64);
    2.0 * p + m + 2.0 + (1.0 + 2.0 * p - n).exp2() - (m + 3.0) * (3.0 * p - n - 1.0).exp2()
        - TWO_OVER_LN2
}

/// Where the best shape-A chord lands for `n >= 5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalK {
    /// Exhaustive argmax of [`closeness_a`] over `2 <= k <= n` (smallest
    /// `k` on ties).
    pub k: usize,
    pub value: Dyadic,
    /// First `p >= 2` where either slope heuristic turns negative. Advisory
    /// only: the exact scan is authoritative, but `2p` must land within 3
    /// of `k`.
    pub advisory_p: Option<usize>,
}

/// Exhaustive scan for the best shape-A chord position at `(m, n)`,
/// `n >= 5`, with the floating-point slope crossover reported alongside.
pub fn optimal_k_scan(m: usize, n: usize) -> Result<OptimalK, Error> {
    check_param("m", m, 3, MAX_PARAM)?;
    check_param("n", n, 5, MAX_PARAM)?;
    let mut best_k = 2;
    let mut best = closeness_a(&CaseAParams::new(m, n, 2)?);
    for k in 3..=n {
        let value = closeness_a(&CaseAParams::new(m, n, k)?);
        if value > best {
            best = value;
            best_k = k;
        }
    }
    let first_negative = |slope: &dyn Fn(usize, usize, usize) -> f64| {
        (2..=n).find(|&p| slope(m, n, p) < 0.0)
    };
    let advisory_p = match (first_negative(&odd_k_slope), first_negative(&even_k_slope)) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    Ok(OptimalK { k: best_k, value: best, advisory_p })
}

/// Closed-form additional closeness of the lollipop graph: the largest
/// closeness gain a single new link can deliver.
///
/// * `n = 1`: `m^2/2 + 1`
/// * `n = 2`: `m(m+1)/2 + 2`
/// * `n = 3`: `m(2m+3)/4 + 4`
/// * `n = 4`: `m(m+2)/2 + 6`
/// * `n >= 5`: the exhaustive shape-A optimum from [`optimal_k_scan`]
pub fn additional_lollipop(spec: &LollipopSpec) -> Dyadic {
    let m = spec.m() as i128;
    match spec.n() {
        1 => Dyadic::new(m * m, 1) + 1,
        2 => Dyadic::new(m * (m + 1), 1) + 2,
        3 => Dyadic::new(m * (2 * m + 3), 2) + 4,
        4 => Dyadic::new(m * (m + 2), 1) + 6,
        _ => {
            optimal_k_scan(spec.m(), spec.n())
                .expect("spec parameters are within the scan's domain")
                .value
        }
    }
}
