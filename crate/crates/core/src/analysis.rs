//! Executable checks of the sign and magnitude structure of first
//! Q-eigenvectors.
//!
//! Every check returns a [`PatternReport`] listing each violated assertion
//! with the vertex or edge where it failed and the values observed there.
//! Preconditions that make an assertion meaningless (a non-bipartite branch,
//! a vector that is not a first eigenvector, a degenerate least eigenvalue)
//! are errors instead.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::families::UGraph;
use crate::graph::{bit, structure_report, BitIter, Graph};
use crate::spectra::{least_eigenvalue, q_min_of, rayleigh, residual, Tolerances, VertexVector};

/// Relative threshold below which an entry counts as zero.
pub const ZERO_TOL: f64 = 1e-8;

/// Absolute margin for the strict inequalities of the cycle pattern.
pub const PATTERN_MARGIN: f64 = 1e-8;

const EIGEN_CHECK_TOL: f64 = 1e-6;

/// A branch of `G` at `root`: a connected vertex set that meets the rest of
/// the graph only at `root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSpec {
    root: usize,
    members: Vec<usize>,
}

impl BranchSpec {
    pub fn new(g: &Graph, root: usize, mut members: Vec<usize>) -> Result<Self> {
        g.check_vertex(root)?;
        members.sort_unstable();
        members.dedup();
        let mut mask = 0u64;
        for &v in &members {
            g.check_vertex(v)?;
            mask |= bit(v);
        }
        if mask & bit(root) == 0 {
            return invalid("branch members must contain the root");
        }
        let reach = component_within(g, root, mask);
        if reach != mask {
            return invalid("branch is not connected");
        }
        for &v in members.iter().filter(|&&v| v != root) {
            if g.neighbor_mask(v) & !mask != 0 {
                return invalid(format!("branch vertex {v} has a neighbour outside the branch"));
            }
        }
        Ok(BranchSpec { root, members })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    fn mask(&self) -> u64 {
        self.members.iter().fold(0, |m, &v| m | bit(v))
    }

    fn edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        let mask = self.mask();
        g.edges()
            .into_iter()
            .filter(|&(u, v)| mask & bit(u) != 0 && mask & bit(v) != 0)
            .collect()
    }
}

fn component_within(g: &Graph, start: usize, allowed: u64) -> u64 {
    g.component_mask(start, !allowed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Vertex(usize),
    Edge(usize, usize),
    /// Position in an ascending spectrum or a profile.
    Index(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub check: &'static str,
    pub location: Location,
    pub observed: Vec<f64>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PatternReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl PatternReport {
    pub(crate) fn from_violations(violations: Vec<Violation>) -> Self {
        PatternReport {
            passed: violations.is_empty(),
            violations,
        }
    }

    pub fn failed_checks(&self) -> Vec<&'static str> {
        let mut names: Vec<_> = self.violations.iter().map(|v| v.check).collect();
        names.dedup();
        names
    }
}

impl fmt::Display for PatternReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            return write!(f, "passed");
        }
        write!(f, "{} violation(s):", self.violations.len())?;
        for v in &self.violations {
            write!(f, " [{} at {:?}: {:?}]", v.check, v.location, v.observed)?;
        }
        Ok(())
    }
}

/// One branch per component of `G − v`, each with `v` added back as root,
/// ordered by smallest member. A lone vertex is its own single branch.
pub fn split_branches(g: &Graph, v: usize) -> Result<Vec<BranchSpec>> {
    g.check_vertex(v)?;
    let mut left = crate::graph::full_mask(g.order()) & !bit(v);
    let mut out = Vec::new();
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let comp = g.component_mask(start, bit(v));
        left &= !comp;
        let mut members: Vec<usize> = BitIter(comp | bit(v)).collect();
        members.sort_unstable();
        out.push(BranchSpec { root: v, members });
    }
    if out.is_empty() {
        out.push(BranchSpec {
            root: v,
            members: vec![v],
        });
    }
    Ok(out)
}

/// Errors unless `x` is (a multiple of) a first Q-eigenvector of `g`.
fn require_first_eigenvector(g: &Graph, x: &VertexVector) -> Result<()> {
    if x.len() != g.order() {
        return invalid("vector length differs from graph order");
    }
    if x.norm() == 0.0 {
        return invalid("zero vector is not an eigenvector");
    }
    let unit = x.normalized();
    let q = rayleigh(g, &unit)?;
    let defect = residual(g, q, &unit)?;
    if defect > EIGEN_CHECK_TOL {
        return invalid(format!("vector is not an eigenvector (residual {defect:e})"));
    }
    let least = least_eigenvalue(g, Tolerances::default().eig)?;
    if q > least + EIGEN_CHECK_TOL {
        return invalid(format!("eigenvalue {q} is not the least eigenvalue {least}"));
    }
    Ok(())
}

fn branch_coloring(g: &Graph, b: &BranchSpec) -> Result<Vec<u8>> {
    let sub = g.induced(b.members())?;
    let coloring = structure_report(&sub)
        .bipartite
        .ok_or_else(|| Error::InvalidParameter("branch is not bipartite".into()))?;
    // index by original vertex
    let mut part = vec![u8::MAX; g.order()];
    for (i, &v) in b.members().iter().enumerate() {
        part[v] = coloring.part[i];
    }
    Ok(part)
}

/// Bipartite branch structure for a first eigenvector: a branch whose root
/// vanishes vanishes entirely; otherwise no member vanishes, members share
/// the root's sign exactly when they share its colour class, and the
/// vector alternates in sign along every branch edge.
pub fn check_bipartite_branch(
    g: &Graph,
    x: &VertexVector,
    b: &BranchSpec,
    zero_tol: f64,
) -> Result<PatternReport> {
    branch_coloring(g, b)?;
    require_first_eigenvector(g, x)?;
    branch_sign_pattern(g, x, b, zero_tol)
}

/// The assertions of [`check_bipartite_branch`] without its eigenvector
/// precondition, for arbitrary vectors.
pub fn branch_sign_pattern(
    g: &Graph,
    x: &VertexVector,
    b: &BranchSpec,
    zero_tol: f64,
) -> Result<PatternReport> {
    if x.len() != g.order() {
        return invalid("vector length differs from graph order");
    }
    let part = branch_coloring(g, b)?;
    let thr = zero_tol * x.max_abs();
    let root = b.root();
    let mut violations = Vec::new();
    if x[root].abs() <= thr {
        for &p in b.members() {
            if x[p].abs() > thr {
                violations.push(Violation {
                    check: "zero-branch",
                    location: Location::Vertex(p),
                    observed: vec![x[root], x[p]],
                });
            }
        }
        return Ok(PatternReport::from_violations(violations));
    }
    for &p in b.members() {
        if x[p].abs() <= thr {
            violations.push(Violation {
                check: "nonzero-entry",
                location: Location::Vertex(p),
                observed: vec![x[p]],
            });
            continue;
        }
        let same_side = part[p] == part[root];
        if (x[p] * x[root] > 0.0) != same_side {
            violations.push(Violation {
                check: "sign-vs-root",
                location: Location::Vertex(p),
                observed: vec![x[root], x[p]],
            });
        }
    }
    for (p, q) in b.edges(g) {
        if x[p] * x[q] >= 0.0 {
            violations.push(Violation {
                check: "edge-sign",
                location: Location::Edge(p, q),
                observed: vec![x[p], x[q]],
            });
        }
    }
    Ok(PatternReport::from_violations(violations))
}

/// `|x|` strictly increases along every path leaving the root of a tree
/// branch that is nonzero for a first eigenvector of a connected
/// non-bipartite graph.
pub fn check_tree_monotone(g: &Graph, x: &VertexVector, b: &BranchSpec) -> Result<PatternReport> {
    let report = structure_report(g);
    if !report.connected || report.bipartite.is_some() {
        return invalid("graph must be connected and non-bipartite");
    }
    let edges = b.edges(g);
    if edges.len() + 1 != b.members().len() {
        return invalid("branch is not a tree");
    }
    require_first_eigenvector(g, x)?;
    let thr = ZERO_TOL * x.max_abs();
    if b.members().iter().all(|&v| x[v].abs() <= thr) {
        return invalid("branch is a zero branch");
    }
    let mask = b.mask();
    let mut seen = bit(b.root());
    let mut queue = VecDeque::from([b.root()]);
    let mut violations = Vec::new();
    while let Some(p) = queue.pop_front() {
        for c in BitIter(g.neighbor_mask(p) & mask & !seen) {
            seen |= bit(c);
            if x[c].abs() <= x[p].abs() + thr {
                violations.push(Violation {
                    check: "tree-monotone",
                    location: Location::Edge(p, c),
                    observed: vec![x[p], x[c]],
                });
            }
            queue.push_back(c);
        }
    }
    Ok(PatternReport::from_violations(violations))
}

/// Structure of the first eigenvector of `U_n^k(g)` with cycle
/// `v_1, …, v_g` and the stem at `v_g`, `h = (g − 1) / 2`:
///
/// 1. `x(v_i) = x(v_{g−i})` for `1 ≤ i ≤ h`;
/// 2. `x(v_h) x(v_{h+1}) > 0` and `x` alternates in sign on every other edge;
/// 3. `|x(v_g)| > |x(v_1)| > … > |x(v_h)| > 0`;
/// 4. no entry of `x` is zero.
///
/// `x` is rescaled to unit length; equalities hold to and strict
/// inequalities by [`PATTERN_MARGIN`].
pub fn check_u_pattern(u: &UGraph, x: &VertexVector, tol: &Tolerances) -> Result<PatternReport> {
    if !u.params.is_standard() {
        return invalid("pattern applies to U_n^k(g) with all pendant paths of length 2");
    }
    if x.len() != u.graph.order() {
        return invalid("vector length differs from graph order");
    }
    let least = q_min_of(&u.graph, tol)?;
    if least.multiplicity != 1 {
        return Err(Error::DegenerateSpectrum {
            multiplicity: least.multiplicity,
        });
    }
    let x = x.normalized();
    let lm = &u.landmarks;
    let g = u.params.g;
    let h = (g - 1) / 2;
    let v = |i: usize| lm.cycle_vertex(i);
    let mut violations = Vec::new();

    for i in 1..=h {
        let (a, b) = (v(i), v(g - i));
        if (x[a] - x[b]).abs() > PATTERN_MARGIN {
            violations.push(Violation {
                check: "symmetry",
                location: Location::Edge(a, b),
                observed: vec![x[a], x[b]],
            });
        }
    }

    let special = {
        let (a, b) = (v(h), v(h + 1));
        (a.min(b), a.max(b))
    };
    for (a, b) in u.graph.edges() {
        let product = x[a] * x[b];
        let ok = if (a, b) == special { product > 0.0 } else { product < 0.0 };
        if !ok {
            violations.push(Violation {
                check: "sign-pattern",
                location: Location::Edge(a, b),
                observed: vec![x[a], x[b]],
            });
        }
    }

    let mut chain = vec![v(g)];
    chain.extend((1..=h).map(v));
    for w in chain.windows(2) {
        if x[w[0]].abs() <= x[w[1]].abs() + PATTERN_MARGIN {
            violations.push(Violation {
                check: "cycle-decay",
                location: Location::Edge(w[0], w[1]),
                observed: vec![x[w[0]], x[w[1]]],
            });
        }
    }

    for p in 0..u.graph.order() {
        if x[p].abs() <= PATTERN_MARGIN {
            violations.push(Violation {
                check: "no-zero-entry",
                location: Location::Vertex(p),
                observed: vec![x[p]],
            });
        }
    }
    Ok(PatternReport::from_violations(violations))
}
