//! The two extremal families.
//!
//! `U_n^k(g; l; l_1, …, l_k)` is an odd cycle `C_g` with a stem path `P_l`
//! hanging from one cycle vertex, and `k` paths `P_{l_i}` hanging from the far
//! end of the stem. With every `l_i = 2` this is `U_n^k(g)`, the minimizer.
//!
//! `K(ν)` is the complete graph `K_{n−k}` with `ν_i` pendant edges at its
//! `i`-th vertex, the maximizer family when `ν` is balanced.

use std::fmt;

use crate::error::{invalid, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UParams {
    pub n: usize,
    pub k: usize,
    pub g: usize,
    pub l: usize,
    pub lengths: Vec<usize>,
}

impl UParams {
    pub fn new(n: usize, g: usize, l: usize, lengths: Vec<usize>) -> Result<Self> {
        let k = lengths.len();
        if k == 0 {
            return invalid("at least one pendant path is required");
        }
        if g < 3 || g.is_multiple_of(2) {
            return invalid(format!("girth must be odd and at least 3, got {g}"));
        }
        if l == 0 {
            return invalid("stem length must be at least 1");
        }
        if let Some(bad) = lengths.iter().find(|&&li| li < 2) {
            return invalid(format!("pendant path length must be at least 2, got {bad}"));
        }
        let lhs = g + l + lengths.iter().sum::<usize>();
        if lhs != n + k + 1 {
            return invalid(format!(
                "g + l + Σ l_i = {lhs} but n + k + 1 = {}",
                n + k + 1
            ));
        }
        Ok(UParams { n, k, g, l, lengths })
    }

    /// All pendant paths of length 2; the stem takes up the rest.
    pub fn standard(n: usize, k: usize, g: usize) -> Result<Self> {
        if k == 0 {
            return invalid("at least one pendant vertex is required");
        }
        let l = (n + k + 1) as i64 - g as i64 - 2 * k as i64;
        if l < 1 {
            return invalid(format!("U({n},{k},{g}) infeasible: stem length would be {l}"));
        }
        UParams::new(n, g, l as usize, vec![2; k])
    }

    pub fn is_standard(&self) -> bool {
        self.lengths.iter().all(|&li| li == 2)
    }
}

/// Named vertices of a `U` graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ULandmarks {
    /// `v_1, …, v_g` around the cycle; `v_g` carries the stem.
    pub cycle: Vec<usize>,
    /// Stem from `v_g` to its far end, `l` vertices.
    pub stem: Vec<usize>,
    /// Each pendant path from the stem end outwards, `l_i` vertices.
    pub pendant_paths: Vec<Vec<usize>>,
}

impl ULandmarks {
    /// `v_i`, 1-based as around the cycle.
    pub fn cycle_vertex(&self, i: usize) -> usize {
        self.cycle[i - 1]
    }

    pub fn stem_end(&self) -> usize {
        *self.stem.last().unwrap()
    }

    /// Degree-one vertices, one per pendant path.
    pub fn pendants(&self) -> Vec<usize> {
        self.pendant_paths.iter().map(|p| *p.last().unwrap()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct UGraph {
    pub graph: Graph,
    pub params: UParams,
    pub landmarks: ULandmarks,
}

/// Vertex layout: cycle `0..g` (so `v_i = i − 1`), then the stem interior,
/// then each pendant path in turn.
pub fn build_u(p: &UParams) -> Result<UGraph> {
    let p = UParams::new(p.n, p.g, p.l, p.lengths.clone())?;
    let mut edges = Vec::with_capacity(p.n);
    let cycle: Vec<usize> = (0..p.g).collect();
    for i in 0..p.g {
        edges.push((i, (i + 1) % p.g));
    }
    let mut next = p.g;
    let mut stem = vec![p.g - 1];
    for _ in 1..p.l {
        edges.push((*stem.last().unwrap(), next));
        stem.push(next);
        next += 1;
    }
    let end = *stem.last().unwrap();
    let mut pendant_paths = Vec::with_capacity(p.k);
    for &li in &p.lengths {
        let mut path = vec![end];
        for _ in 1..li {
            edges.push((*path.last().unwrap(), next));
            path.push(next);
            next += 1;
        }
        pendant_paths.push(path);
    }
    debug_assert_eq!(next, p.n);
    Ok(UGraph {
        graph: Graph::from_edges(p.n, &edges)?,
        landmarks: ULandmarks {
            cycle,
            stem,
            pendant_paths,
        },
        params: p,
    })
}

/// `U_n^k(g)`.
pub fn build_u_std(n: usize, k: usize, g: usize) -> Result<UGraph> {
    build_u(&UParams::standard(n, k, g)?)
}

/// Non-increasing sequence of pendant counts `ν_1 ≥ … ≥ ν_{n−k} ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PendantProfile(Vec<usize>);

impl PendantProfile {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return invalid("profile must be non-empty");
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("profile {entries:?} is not non-increasing"));
        }
        Ok(PendantProfile(entries))
    }

    pub fn from_unsorted(mut entries: Vec<usize>) -> Result<Self> {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        PendantProfile::new(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Clique order `n − k`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of pendant vertices `k`.
    pub fn pendant_total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Graph order `n`.
    pub fn order(&self) -> usize {
        self.len() + self.pendant_total()
    }

    /// Every profile of the given length and sum, in lexicographically
    /// decreasing order.
    pub fn all(len: usize, sum: usize) -> Vec<PendantProfile> {
        fn rec(len: usize, sum: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<PendantProfile>) {
            if cur.len() == len {
                if sum == 0 {
                    out.push(PendantProfile(cur.clone()));
                }
                return;
            }
            let slots = len - cur.len();
            for v in (0..=cap.min(sum)).rev() {
                if v * slots < sum {
                    break;
                }
                cur.push(v);
                rec(len, sum - v, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if len > 0 {
            rec(len, sum, sum, &mut Vec::with_capacity(len), &mut out);
        }
        out
    }
}

impl fmt::Display for PendantProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct KGraph {
    pub graph: Graph,
    pub profile: PendantProfile,
    /// `v_1, …, v_{n−k}`.
    pub clique: Vec<usize>,
    /// Pendant neighbours of each clique vertex.
    pub pendants: Vec<Vec<usize>>,
}

/// Vertex layout: clique `0..n−k`, then the pendants of `v_1`, of `v_2`, …
pub fn build_k(nu: &PendantProfile) -> Result<KGraph> {
    let m = nu.len();
    if m < 3 {
        return invalid(format!("K(ν) needs a clique of order at least 3, got {m}"));
    }
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            edges.push((i, j));
        }
    }
    let mut next = m;
    let mut pendants = Vec::with_capacity(m);
    for (i, &c) in nu.entries().iter().enumerate() {
        let mine: Vec<usize> = (next..next + c).collect();
        for &p in &mine {
            edges.push((i, p));
        }
        next += c;
        pendants.push(mine);
    }
    Ok(KGraph {
        graph: Graph::from_edges(next, &edges)?,
        profile: nu.clone(),
        clique: (0..m).collect(),
        pendants,
    })
}

/// `ν ⪰ μ`: every prefix sum of `ν` dominates that of `μ`.
pub fn majorizes(nu: &PendantProfile, mu: &PendantProfile) -> Result<bool> {
    if nu.len() != mu.len() {
        return invalid(format!("profile lengths differ: {} vs {}", nu.len(), mu.len()));
    }
    if nu.pendant_total() != mu.pendant_total() {
        return invalid(format!(
            "profile sums differ: {} vs {}",
            nu.pendant_total(),
            mu.pendant_total()
        ));
    }
    let mut a = 0;
    let mut b = 0;
    for (x, y) in nu.entries().iter().zip(mu.entries()) {
        a += x;
        b += y;
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The profile whose entries differ by at most one.
pub fn balanced_profile(n: usize, k: usize) -> Result<PendantProfile> {
    if k == 0 || k > n || n - k < 3 {
        return invalid(format!("balanced profile needs k ≥ 1 and n − k ≥ 3, got n={n}, k={k}"));
    }
    let m = n - k;
    let (q, r) = (k / m, k % m);
    PendantProfile::new((0..m).map(|i| if i < r { q + 1 } else { q }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic, structure_report};

    fn profile(v: &[usize]) -> PendantProfile {
        PendantProfile::new(v.to_vec()).unwrap()
    }

    #[test]
    fn u_small() {
        let u = build_u(&UParams::new(5, 3, 2, vec![2]).unwrap()).unwrap();
        assert_eq!(u.graph.edges(), vec![(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(u.graph.degrees(), vec![2, 2, 3, 2, 1]);
        assert_eq!(u.landmarks.cycle, vec![0, 1, 2]);
        assert_eq!(u.landmarks.stem, vec![2, 3]);
        assert_eq!(u.landmarks.pendant_paths, vec![vec![3, 4]]);
        assert_eq!(u.landmarks.stem_end(), 3);
    }

    #[test]
    fn u_two_pendants() {
        let u = build_u(&UParams::new(7, 3, 3, vec![2, 2]).unwrap()).unwrap();
        assert_eq!(u.graph, build_u_std(7, 2, 3).unwrap().graph);
        let r = structure_report(&u.graph);
        assert_eq!((r.pendant_count, r.girth), (2, Some(3)));
        assert!(matches!(UParams::new(5, 3, 1, vec![2]), Err(crate::Error::InvalidParameter(_))));
        assert!(UParams::new(7, 3, 2, vec![2, 2]).is_err());
    }

    #[test]
    fn u_standard() {
        let a = build_u_std(5, 1, 3).unwrap();
        let b = build_u(&UParams::new(5, 3, 2, vec![2]).unwrap()).unwrap();
        assert_eq!(a.graph, b.graph);
        // n = g + k − 1 leaves no room for the stem
        assert!(build_u_std(4, 2, 3).is_err());
        assert!(build_u_std(7, 3, 5).is_err());
        let u = build_u_std(10, 3, 5).unwrap();
        assert_eq!(u.params.l, 3);
        let r = structure_report(&u.graph);
        assert_eq!((u.graph.order(), r.girth, r.pendant_count), (10, Some(5), 3));
        assert!(build_u_std(6, 0, 3).is_err());
        assert!(build_u_std(8, 1, 4).is_err());
    }

    #[test]
    fn u_stem_of_length_one() {
        let u = build_u_std(6, 3, 3).unwrap();
        assert_eq!(u.params.l, 1);
        assert_eq!(u.landmarks.stem_end(), u.landmarks.cycle_vertex(3));
        assert_eq!(u.graph.degree(2), 5);
    }

    #[test]
    fn k_graphs() {
        let k = build_k(&profile(&[2, 2, 2, 0])).unwrap();
        assert_eq!(k.graph.order(), 10);
        assert_eq!(k.graph.edge_count(), 12);
        assert_eq!(k.pendants, vec![vec![4, 5], vec![6, 7], vec![8, 9], vec![]]);
        let t = build_k(&profile(&[1, 0, 0])).unwrap();
        assert_eq!(t.graph.degrees(), vec![3, 2, 2, 1]);
        assert!(build_k(&profile(&[2, 1])).is_err());
        let right = build_k(&profile(&[2, 2, 1, 1])).unwrap();
        assert!(!is_isomorphic(&k.graph, &right.graph).unwrap());
    }

    #[test]
    fn majorization_examples() {
        assert!(majorizes(&profile(&[2, 1, 0]), &profile(&[1, 1, 1])).unwrap());
        assert!(majorizes(&profile(&[2, 2, 2, 0]), &profile(&[2, 2, 1, 1])).unwrap());
        assert!(!majorizes(&profile(&[2, 2, 1, 1]), &profile(&[2, 2, 2, 0])).unwrap());
        assert!(majorizes(&profile(&[1, 1, 1]), &profile(&[1, 1, 1])).unwrap());
        assert!(majorizes(&profile(&[1, 1]), &profile(&[1, 1, 0])).is_err());
        assert!(majorizes(&profile(&[2, 1]), &profile(&[1, 1])).is_err());
    }

    #[test]
    fn balanced() {
        assert_eq!(balanced_profile(10, 6).unwrap(), profile(&[2, 2, 1, 1]));
        assert_eq!(balanced_profile(8, 4).unwrap(), profile(&[1, 1, 1, 1]));
        assert_eq!(balanced_profile(7, 1).unwrap(), profile(&[1, 0, 0, 0, 0, 0]));
        assert!(balanced_profile(5, 3).is_err());
        assert!(balanced_profile(5, 0).is_err());
    }

    #[test]
    fn profile_validation() {
        assert!(PendantProfile::new(vec![0, 1]).is_err());
        assert_eq!(PendantProfile::from_unsorted(vec![0, 2, 1]).unwrap(), profile(&[2, 1, 0]));
        assert_eq!(PendantProfile::all(3, 2), vec![profile(&[2, 0, 0]), profile(&[1, 1, 0])]);
        assert_eq!(profile(&[2, 1, 0]).to_string(), "(2,1,0)");
    }
}
