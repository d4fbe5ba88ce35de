//! Exhaustive search over small graph classes.
//!
//! Classes are enumerated as labeled graphs: every edge subset of `K_n` for
//! general classes, every `n`-edge subset for unicyclic ones. Cheap filters
//! (edge count, pendant count, isolated vertices) run on bitsets before the
//! connectivity and bipartiteness tests. Extremality over labeled graphs is
//! extremality over isomorphism classes, so canonical forms are computed only
//! for the few graphs that tie for the optimum.
//!
//! Work splits into `W` shards by the values of the first `⌈log₂ W⌉` edge
//! decisions. Shards share nothing and their partial results merge with an
//! associative, commutative reduction, so the outcome does not depend on the
//! shard count.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::analysis::{Location, PatternReport, Violation};
use crate::error::{invalid, Error, Result};
use crate::families::{build_k, build_u_std, PendantProfile};
use crate::graph::{bit, canonical_form, coalesce, full_mask, structure_report, BitIter, Graph};
use crate::spectra::{eigenvalues_sym, least_eigenvalue, q_matrix, q_min_of, Tolerances};

/// Highest order any enumeration accepts.
pub const HARD_GENERAL_ORDER: usize = 8;
pub const HARD_UNICYCLIC_ORDER: usize = 9;

const CHECK_TOL: f64 = 1e-8;

/// A class of graphs of order `n` with exactly `k` pendant vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassQuery {
    pub n: usize,
    pub k: usize,
    pub require_connected: bool,
    pub require_nonbipartite: bool,
    /// When present: exactly `n` edges and the unique cycle has this odd length.
    pub unicyclic_girth: Option<usize>,
}

impl ClassQuery {
    /// Connected non-bipartite graphs of order `n` with `k` pendant vertices.
    pub fn nonbipartite(n: usize, k: usize) -> Self {
        ClassQuery {
            n,
            k,
            require_connected: true,
            require_nonbipartite: true,
            unicyclic_girth: None,
        }
    }

    /// Unicyclic graphs of order `n` with `k` pendant vertices and odd girth `g`.
    pub fn unicyclic(n: usize, k: usize, g: usize) -> Self {
        ClassQuery {
            unicyclic_girth: Some(g),
            ..ClassQuery::nonbipartite(n, k)
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return invalid("order must be positive");
        }
        if self.require_nonbipartite && self.k + 3 > self.n {
            return invalid(format!(
                "a non-bipartite graph of order {} has at most {} pendant vertices, asked for {}",
                self.n,
                self.n.saturating_sub(3),
                self.k
            ));
        }
        if let Some(g) = self.unicyclic_girth {
            if g < 3 || g % 2 == 0 || g > self.n {
                return invalid(format!("unicyclic girth must be odd, at least 3 and at most n, got {g}"));
            }
            if !self.require_connected {
                return invalid("unicyclic classes are connected");
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchConfig {
    pub shards: usize,
    pub tolerances: Tolerances,
    pub max_general_order: usize,
    pub max_unicyclic_order: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            shards: 1,
            tolerances: Tolerances::default(),
            max_general_order: HARD_GENERAL_ORDER,
            max_unicyclic_order: 8,
        }
    }
}

impl SearchConfig {
    pub fn with_shards(shards: usize) -> Self {
        SearchConfig {
            shards,
            ..SearchConfig::default()
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn check_capacity(q: &ClassQuery, cfg: &SearchConfig) -> Result<()> {
    let edges = (q.n * (q.n - 1) / 2) as u64;
    let (limit, hard, estimate) = match q.unicyclic_girth {
        Some(_) => (cfg.max_unicyclic_order, HARD_UNICYCLIC_ORDER, binomial(edges, q.n as u64)),
        None => (cfg.max_general_order, HARD_GENERAL_ORDER, 1u64 << edges),
    };
    if q.n > limit.min(hard) {
        return Err(Error::CapacityExceeded {
            what: "labeled graphs to enumerate",
            limit: match q.unicyclic_girth {
                Some(_) => binomial((limit.min(hard) * (limit.min(hard) - 1) / 2) as u64, limit.min(hard) as u64),
                None => 1u64 << (limit.min(hard) * (limit.min(hard) - 1) / 2),
            },
            requested: estimate,
        });
    }
    if cfg.shards == 0 {
        return invalid("shard count must be at least 1");
    }
    Ok(())
}

/// Column-order edge list of `K_n`; bit `i` of a mask is edge `i`.
fn edge_table(n: usize) -> Vec<(usize, usize)> {
    let mut t = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            t.push((i, j));
        }
    }
    t
}

fn is_bipartite_rows(rows: &[u64]) -> bool {
    let n = rows.len();
    let mut seen = 0u64;
    for s in 0..n {
        if seen & bit(s) != 0 {
            continue;
        }
        let mut sides = [bit(s), 0u64];
        let mut frontier = bit(s);
        let mut side = 0;
        seen |= frontier;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= rows[v];
            }
            next &= !seen;
            seen |= next;
            side ^= 1;
            sides[side] |= next;
            frontier = next;
        }
        for part in sides {
            if BitIter(part).any(|v| rows[v] & part != 0) {
                return false;
            }
        }
    }
    true
}

fn connected_rows(rows: &[u64]) -> bool {
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        for v in BitIter(frontier) {
            next |= rows[v];
        }
        next &= !seen;
        seen |= next;
        frontier = next;
    }
    seen == full_mask(rows.len())
}

/// Length of the unique cycle of a connected unicyclic graph.
fn cycle_length(rows: &[u64]) -> usize {
    let mut alive = full_mask(rows.len());
    loop {
        let leaf = BitIter(alive).find(|&v| (rows[v] & alive).count_ones() <= 1);
        match leaf {
            Some(v) => alive &= !bit(v),
            None => return alive.count_ones() as usize,
        }
    }
}

struct Enumerator<'a> {
    q: &'a ClassQuery,
    table: Vec<(usize, usize)>,
    min_edges: u32,
}

impl<'a> Enumerator<'a> {
    fn new(q: &'a ClassQuery) -> Self {
        let n = q.n as u32;
        let min_edges = if q.require_connected && q.require_nonbipartite {
            n
        } else if q.require_connected {
            n.saturating_sub(1)
        } else {
            0
        };
        Enumerator {
            q,
            table: edge_table(q.n),
            min_edges,
        }
    }

    /// Builds the graph for `mask` if it belongs to the class.
    #[inline]
    fn admit(&self, mask: u64) -> Option<Graph> {
        let q = self.q;
        if mask.count_ones() < self.min_edges {
            return None;
        }
        let mut rows = [0u64; 64];
        let rows = &mut rows[..q.n];
        for e in BitIter(mask) {
            let (i, j) = self.table[e];
            rows[i] |= bit(j);
            rows[j] |= bit(i);
        }
        let mut pendants = 0;
        for r in rows.iter() {
            match r.count_ones() {
                0 if q.require_connected && q.n > 1 => return None,
                1 => pendants += 1,
                _ => {}
            }
        }
        if pendants != q.k {
            return None;
        }
        if q.require_connected && !connected_rows(rows) {
            return None;
        }
        if let Some(g) = q.unicyclic_girth {
            if cycle_length(rows) != g {
                return None;
            }
        } else if q.require_nonbipartite && is_bipartite_rows(rows) {
            return None;
        }
        Some(Graph::from_rows_unchecked(rows.to_vec()))
    }
}

fn prefix_bits(shards: usize, edges: usize) -> usize {
    (shards.next_power_of_two().trailing_zeros() as usize).min(edges)
}

/// Visits the class members whose first edge decisions fall in `shard`.
pub fn enumerate_shard<F: FnMut(&Graph)>(
    q: &ClassQuery,
    shard: usize,
    cfg: &SearchConfig,
    mut visit: F,
) -> Result<u64> {
    q.validate()?;
    check_capacity(q, cfg)?;
    if shard >= cfg.shards {
        return invalid(format!("shard {shard} out of range for {} shards", cfg.shards));
    }
    let en = Enumerator::new(q);
    let edges = en.table.len();
    let b = prefix_bits(cfg.shards, edges);
    let low = (1u64 << b) - 1;
    let mut count = 0u64;
    let mut consider = |mask: u64| {
        if let Some(g) = en.admit(mask) {
            visit(&g);
            count += 1;
        }
    };
    match q.unicyclic_girth {
        None => {
            for prefix in (0..1u64 << b).filter(|p| *p as usize % cfg.shards == shard) {
                for high in 0..1u64 << (edges - b) {
                    consider(high << b | prefix);
                }
            }
        }
        Some(_) => {
            if q.n <= edges {
                let mut x = (1u64 << q.n) - 1;
                let end = 1u64 << edges;
                while x < end {
                    if (x & low) as usize % cfg.shards == shard {
                        consider(x);
                    }
                    let c = x & x.wrapping_neg();
                    let r = x + c;
                    x = (((r ^ x) >> 2) / c) | r;
                }
            }
        }
    }
    Ok(count)
}

/// Visits every labeled member of the class exactly once, in a fixed order.
pub fn enumerate_class<F: FnMut(&Graph)>(q: &ClassQuery, cfg: &SearchConfig, mut visit: F) -> Result<u64> {
    let mut total = 0;
    for shard in 0..cfg.shards {
        total += enumerate_shard(q, shard, cfg, &mut visit)?;
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    Min,
    Max,
}

impl Objective {
    fn better(self, a: f64, b: f64) -> bool {
        match self {
            Objective::Min => a < b,
            Objective::Max => a > b,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub objective: Objective,
    pub extremal_value: f64,
    /// Canonical representatives of the isomorphism classes attaining the
    /// optimum within the tie tolerance, in canonical-code order.
    pub witnesses: Vec<Graph>,
    pub graphs_examined: u64,
    pub elapsed: Duration,
}

impl SearchResult {
    /// Equality of everything except the timing.
    pub fn same_outcome(&self, other: &SearchResult) -> bool {
        self.objective == other.objective
            && self.extremal_value.to_bits() == other.extremal_value.to_bits()
            && self.witnesses == other.witnesses
            && self.graphs_examined == other.graphs_examined
    }
}

struct Partial {
    best: Option<f64>,
    candidates: Vec<(f64, Graph)>,
    examined: u64,
}

impl Partial {
    fn offer(&mut self, objective: Objective, value: f64, g: &Graph, window: f64) {
        self.examined += 1;
        match self.best {
            Some(b) if !objective.better(value, b) => {
                if (value - b).abs() <= window {
                    self.candidates.push((value, g.clone()));
                }
            }
            _ => {
                self.best = Some(value);
                self.candidates.retain(|(v, _)| (v - value).abs() <= window);
                self.candidates.push((value, g.clone()));
            }
        }
    }

    fn merge(mut self, other: Partial, objective: Objective) -> Partial {
        self.best = match (self.best, other.best) {
            (Some(a), Some(b)) => Some(if objective.better(b, a) { b } else { a }),
            (a, b) => a.or(b),
        };
        self.candidates.extend(other.candidates);
        self.examined += other.examined;
        self
    }
}

/// Least Q-eigenvalue over the class: its minimum or maximum and every
/// isomorphism class attaining it.
pub fn find_extremal(q: &ClassQuery, objective: Objective, cfg: &SearchConfig) -> Result<SearchResult> {
    q.validate()?;
    check_capacity(q, cfg)?;
    let start = Instant::now();
    let tol = cfg.tolerances;
    // q_min ≤ n − 1, so this window covers the final tie threshold from
    // any running optimum.
    let window = tol.tie * (1.0 + q.n as f64);
    let partials: Vec<Partial> = (0..cfg.shards)
        .into_par_iter()
        .map(|shard| {
            let mut part = Partial {
                best: None,
                candidates: Vec::new(),
                examined: 0,
            };
            let mut failure = None;
            enumerate_shard(q, shard, cfg, |g| match least_eigenvalue(g, tol.eig) {
                Ok(v) => part.offer(objective, v, g, window),
                Err(e) => failure = Some(e),
            })?;
            match failure {
                Some(e) => Err(e),
                None => Ok(part),
            }
        })
        .collect::<Result<_>>()?;
    let merged = partials
        .into_iter()
        .reduce(|a, b| a.merge(b, objective))
        .expect("at least one shard");
    let Some(best) = merged.best else {
        return invalid("class is empty");
    };
    let threshold = tol.tie * (1.0 + best.abs());
    let mut classes = BTreeSet::new();
    for (v, g) in &merged.candidates {
        if (v - best).abs() <= threshold {
            classes.insert(canonical_form(g)?);
        }
    }
    Ok(SearchResult {
        objective,
        extremal_value: best,
        witnesses: classes.iter().map(|c| c.to_graph()).collect(),
        graphs_examined: merged.examined,
        elapsed: start.elapsed(),
    })
}

/// Least Q-eigenvalue of `U_n^k(g)`, the minimum over the unicyclic class.
pub fn alpha(n: usize, k: usize, g: usize, tol: &Tolerances) -> Result<f64> {
    least_eigenvalue(&build_u_std(n, k, g)?.graph, tol.eig)
}

/// Edge-deletion interlacing `λ_i(G − e) ≤ λ_i(G) ≤ λ_{i+1}(G − e)` on
/// ascending spectra.
pub fn interlacing_check(g: &Graph, e: (usize, usize), tol: &Tolerances) -> Result<PatternReport> {
    let minus = g.without_edge(e.0, e.1)?;
    let full = eigenvalues_sym(&q_matrix(g), tol.eig)?;
    let less = eigenvalues_sym(&q_matrix(&minus), tol.eig)?;
    let mut violations = Vec::new();
    for i in 0..full.len() {
        if less[i] > full[i] + CHECK_TOL {
            violations.push(Violation {
                check: "interlacing-lower",
                location: Location::Index(i),
                observed: vec![less[i], full[i]],
            });
        }
        if i + 1 < full.len() && full[i] > less[i + 1] + CHECK_TOL {
            violations.push(Violation {
                check: "interlacing-upper",
                location: Location::Index(i),
                observed: vec![full[i], less[i + 1]],
            });
        }
    }
    Ok(PatternReport::from_violations(violations))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelocationScope {
    /// Any connected bipartite branch: non-strict decrease.
    BipartiteBranch,
    /// A nontrivial path rooted at an end vertex on a non-bipartite base:
    /// strict decrease.
    PendantPath,
}

#[derive(Clone, Debug)]
pub struct RelocationOutcome {
    pub scope: RelocationScope,
    /// `q_min` of `G = G1(v2) ◇ G2(u)`.
    pub q_before: f64,
    /// `q_min` of `G* = G1(v1) ◇ G2(u)`.
    pub q_after: f64,
    /// `|x(v1)|` and `|x(v2)|` for the first eigenvector `x` of `G`.
    pub magnitude_v1: f64,
    pub magnitude_v2: f64,
    /// Whether the non-strict and the strict decrease were asserted.
    pub asserted_non_strict: bool,
    pub asserted_strict: bool,
    /// `d_{G2}(u) x(u) + Σ_{w ∈ N_{G2}(u)} x(w)`; zero is necessary for
    /// equality in the non-strict case. Reported, never asserted.
    pub equality_defect: f64,
    pub report: PatternReport,
}

const HYPOTHESIS_TOL: f64 = 1e-9;

/// Moves branch `g2` (rooted at `u`) from `v2` to `v1` of `g1` and compares
/// least eigenvalues. When the first eigenvector of the original graph is
/// at least as large in magnitude at `v1` as at `v2`, the move cannot
/// increase `q_min`; for a pendant path on a non-bipartite base it strictly
/// decreases it.
pub fn relocation_experiment(
    g1: &Graph,
    v1: usize,
    v2: usize,
    g2: &Graph,
    u: usize,
    tol: &Tolerances,
) -> Result<RelocationOutcome> {
    g1.check_vertex(v1)?;
    g1.check_vertex(v2)?;
    g2.check_vertex(u)?;
    if v1 == v2 {
        return invalid("relocation needs two distinct vertices");
    }
    let base = structure_report(g1);
    let branch = structure_report(g2);
    if !base.connected || !branch.connected {
        return invalid("both graphs must be connected");
    }
    if branch.bipartite.is_none() {
        return invalid("relocated branch must be bipartite");
    }
    let is_path_from_end =
        g2.order() >= 2 && g2.edge_count() == g2.order() - 1 && branch.degrees.iter().all(|&d| d <= 2) && g2.degree(u) == 1;
    let scope = if is_path_from_end && base.bipartite.is_none() {
        RelocationScope::PendantPath
    } else {
        RelocationScope::BipartiteBranch
    };

    let before = coalesce(g1, v2, g2, u)?;
    let after = coalesce(g1, v1, g2, u)?;
    let first = q_min_of(&before, tol)?;
    let q_after = least_eigenvalue(&after, tol.eig)?;
    let x = &first.vector;
    let (a1, a2) = (x[v1].abs(), x[v2].abs());

    let map = |w: usize| if w < u { g1.order() + w } else { g1.order() + w - 1 };
    let equality_defect =
        g2.degree(u) as f64 * x[v2] + g2.neighbors(u).map(|w| x[map(w)]).sum::<f64>();

    let asserted_non_strict = a1 >= a2 - HYPOTHESIS_TOL;
    let asserted_strict = scope == RelocationScope::PendantPath && asserted_non_strict && a1 > CHECK_TOL;
    let mut violations = Vec::new();
    if asserted_non_strict && q_after > first.value + CHECK_TOL {
        violations.push(Violation {
            check: "relocation-non-increasing",
            location: Location::Edge(v2, v1),
            observed: vec![first.value, q_after],
        });
    }
    if asserted_strict && q_after >= first.value - CHECK_TOL {
        violations.push(Violation {
            check: "relocation-strict",
            location: Location::Edge(v2, v1),
            observed: vec![first.value, q_after],
        });
    }
    Ok(RelocationOutcome {
        scope,
        q_before: first.value,
        q_after,
        magnitude_v1: a1,
        magnitude_v2: a2,
        asserted_non_strict,
        asserted_strict,
        equality_defect,
        report: PatternReport::from_violations(violations),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct MajorizationRow {
    pub nu: PendantProfile,
    pub mu: PendantProfile,
    pub qmin_nu: f64,
    pub qmin_mu: f64,
    /// `q_min(K(μ)) − q_min(K(ν))`, non-negative when the inequality holds.
    pub slack: f64,
}

#[derive(Clone, Debug)]
pub struct MajorizationReport {
    pub rows: Vec<MajorizationRow>,
    /// Failures of `q_min(K(ν)) ≤ q_min(K(μ))` and of the eigenvector
    /// ordering `ν_i > ν_j ⇒ |x(v_i)| ≥ |x(v_j)|`.
    pub report: PatternReport,
    /// Profiles whose simple least eigenvalue admitted the ordering check.
    pub profiles_checked: usize,
}

pub const MAJORIZATION_CSV_HEADER: &str = "nu,mu,qmin_nu,qmin_mu,slack";

impl MajorizationReport {
    pub fn to_csv(&self) -> String {
        let fmt = |p: &PendantProfile| {
            p.entries().iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
        };
        let mut out = format!("{MAJORIZATION_CSV_HEADER}\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{},{},{}\n", fmt(&r.nu), fmt(&r.mu), r.qmin_nu, r.qmin_mu, r.slack));
        }
        out
    }
}

/// For every profile of the given length and sum, moves one pendant edge
/// from a vertex with `ν_i` pendants to one with `ν_j ≤ ν_i − 2` and checks
/// that `q_min` does not decrease.
pub fn majorization_scan(len: usize, sum: usize, tol: &Tolerances) -> Result<MajorizationReport> {
    if len < 3 || sum == 0 {
        return invalid(format!("need length ≥ 3 and sum ≥ 1, got {len}, {sum}"));
    }
    if len + sum > 11 {
        return Err(Error::CapacityExceeded {
            what: "K(ν) order in majorization scan",
            limit: 11,
            requested: (len + sum) as u64,
        });
    }
    let profiles = PendantProfile::all(len, sum);
    let mut least = BTreeMap::new();
    let mut violations = Vec::new();
    let mut profiles_checked = 0;
    for nu in &profiles {
        let k = build_k(nu)?;
        let pair = q_min_of(&k.graph, tol)?;
        if pair.multiplicity == 1 {
            profiles_checked += 1;
            let e = nu.entries();
            for i in 0..len {
                for j in 0..len {
                    let (xi, xj) = (pair.vector[k.clique[i]].abs(), pair.vector[k.clique[j]].abs());
                    if e[i] > e[j] && xi < xj - CHECK_TOL {
                        violations.push(Violation {
                            check: "pendant-order",
                            location: Location::Edge(i, j),
                            observed: vec![xi, xj],
                        });
                    }
                }
            }
        }
        least.insert(nu.clone(), pair.value);
    }
    let mut rows = Vec::new();
    for nu in &profiles {
        let e = nu.entries();
        let mut targets = BTreeSet::new();
        for i in 0..len {
            for j in 0..len {
                if e[i] >= e[j] + 2 {
                    let mut m = e.to_vec();
                    m[i] -= 1;
                    m[j] += 1;
                    targets.insert(PendantProfile::from_unsorted(m)?);
                }
            }
        }
        for mu in targets.into_iter().rev() {
            let (qn, qm) = (least[nu], least[&mu]);
            if qn > qm + CHECK_TOL {
                violations.push(Violation {
                    check: "majorization",
                    location: Location::Index(rows.len()),
                    observed: vec![qn, qm],
                });
            }
            rows.push(MajorizationRow {
                nu: nu.clone(),
                mu,
                qmin_nu: qn,
                qmin_mu: qm,
                slack: qm - qn,
            });
        }
    }
    Ok(MajorizationReport {
        rows,
        report: PatternReport::from_violations(violations),
        profiles_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{balanced_profile, build_k};
    use crate::graph::{complete_graph, cycle_graph, is_isomorphic, path_graph};

    #[test]
    fn triangle_with_pendant_labelings() {
        let q = ClassQuery::nonbipartite(4, 1);
        let mut seen = Vec::new();
        let count = enumerate_class(&q, &SearchConfig::default(), |g| seen.push(g.clone())).unwrap();
        assert_eq!(count, 12);
        let paw = crate::graph::attach_pendants(&cycle_graph(3).unwrap(), 0, 1).unwrap();
        assert!(seen.iter().all(|g| is_isomorphic(g, &paw).unwrap()));
    }

    #[test]
    fn pentagon_labelings() {
        let q = ClassQuery::unicyclic(5, 0, 5);
        let count = enumerate_class(&q, &SearchConfig::default(), |g| {
            assert!(is_isomorphic(g, &cycle_graph(5).unwrap()).unwrap());
        })
        .unwrap();
        assert_eq!(count, 12);
    }

    #[test]
    fn invalid_queries() {
        let cfg = SearchConfig::default();
        assert!(matches!(
            enumerate_class(&ClassQuery::nonbipartite(4, 4), &cfg, |_| {}),
            Err(Error::InvalidParameter(_))
        ));
        assert!(enumerate_class(&ClassQuery::unicyclic(6, 1, 4), &cfg, |_| {}).is_err());
        assert!(matches!(
            enumerate_class(&ClassQuery::nonbipartite(9, 1), &cfg, |_| {}),
            Err(Error::CapacityExceeded { .. })
        ));
        assert!(matches!(
            enumerate_class(&ClassQuery::unicyclic(9, 1, 3), &cfg, |_| {}),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn deterministic_order_and_shards() {
        let q = ClassQuery::nonbipartite(5, 1);
        let run = |cfg: &SearchConfig| {
            let mut v = Vec::new();
            enumerate_class(&q, cfg, |g| v.push(g.clone())).unwrap();
            v
        };
        let a = run(&SearchConfig::default());
        assert_eq!(a, run(&SearchConfig::default()));
        let mut b = run(&SearchConfig::with_shards(3));
        let mut a2 = a.clone();
        a2.sort_by_key(|g| g.edges());
        b.sort_by_key(|g| g.edges());
        assert_eq!(a2, b);
    }

    #[test]
    fn small_minimizers() {
        let cfg = SearchConfig::default();
        for k in 1..=2 {
            let r = find_extremal(&ClassQuery::nonbipartite(6, k), Objective::Min, &cfg).unwrap();
            assert_eq!(r.witnesses.len(), 1);
            assert!(is_isomorphic(&r.witnesses[0], &build_u_std(6, k, 3).unwrap().graph).unwrap());
        }
    }

    #[test]
    fn small_maximizer() {
        let r = find_extremal(&ClassQuery::nonbipartite(7, 4), Objective::Max, &SearchConfig::with_shards(4)).unwrap();
        let k = build_k(&balanced_profile(7, 4).unwrap()).unwrap();
        assert!(r.witnesses.iter().any(|w| is_isomorphic(w, &k.graph).unwrap()));
    }

    #[test]
    fn alpha_values() {
        let tol = Tolerances::default();
        let a = alpha(5, 1, 3, &tol).unwrap();
        assert!(a > 0.0 && a < 1.0);
        assert!(alpha(15, 2, 3, &tol).unwrap() < alpha(15, 2, 5, &tol).unwrap());
        assert!(alpha(15, 1, 3, &tol).unwrap() < alpha(15, 2, 3, &tol).unwrap());
        assert!(alpha(5, 3, 3, &tol).is_err());
    }

    #[test]
    fn interlacing_small() {
        let tol = Tolerances::default();
        assert!(interlacing_check(&complete_graph(4).unwrap(), (0, 1), &tol).unwrap().passed);
        assert!(interlacing_check(&cycle_graph(5).unwrap(), (0, 4), &tol).unwrap().passed);
        assert!(interlacing_check(&cycle_graph(5).unwrap(), (0, 2), &tol).is_err());
    }

    #[test]
    fn relocation_symmetric_vertices() {
        let tol = Tolerances::default();
        let out = relocation_experiment(&cycle_graph(5).unwrap(), 1, 3, &path_graph(3).unwrap(), 0, &tol).unwrap();
        assert!((out.q_after - out.q_before).abs() < 1e-8);
        assert!(out.report.passed);
        assert_eq!(out.scope, RelocationScope::PendantPath);
    }

    #[test]
    fn relocation_rejects_bad_scope() {
        let tol = Tolerances::default();
        let c3 = cycle_graph(3).unwrap();
        assert!(relocation_experiment(&c3, 0, 1, &c3, 0, &tol).is_err());
        assert!(relocation_experiment(&c3, 0, 0, &path_graph(2).unwrap(), 0, &tol).is_err());
    }

    #[test]
    fn majorization_small() {
        let tol = Tolerances::default();
        let r = majorization_scan(3, 2, &tol).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].nu.entries(), &[2, 0, 0]);
        assert_eq!(r.rows[0].mu.entries(), &[1, 1, 0]);
        assert!(r.rows[0].slack >= 0.0);
        assert!(r.report.passed);
        assert!(majorization_scan(3, 1, &tol).unwrap().rows.is_empty());
        assert!(matches!(majorization_scan(6, 6, &tol), Err(Error::CapacityExceeded { .. })));
        assert!(majorization_scan(2, 3, &tol).is_err());
    }
}
