//! Closed-form upper bounds on the least signless Laplacian eigenvalue.
//!
//! With `m = n − k` non-pendant vertices and `t = ⌈k/m⌉`:
//!
//! ```text
//! pendant(n, k)      = (m + k/m − √((m − 2)² + 2k + k²/m²)) / 2
//! submatrix(n, k)    = (m + t − √((m + t)² − 4(m − 1))) / 2
//! lima(n, δ)         = (n − 1 + δ − √((n − 1 − δ)² + 4)) / 2
//! ```
//!
//! `submatrix` is the least eigenvalue of the principal submatrix of
//! `Q(K(ν))` on a clique vertex carrying `t` pendants and those pendants;
//! replacing `t` by `k/m` gives `pendant`, which is weaker since the
//! expression decreases in `t`.

use std::collections::BTreeMap;

use crate::error::{invalid, Result};

fn check_nk(n: usize, k: usize) -> Result<usize> {
    if k == 0 || k > n || n - k < 3 {
        return invalid(format!("need k ≥ 1 and n − k ≥ 3, got n={n}, k={k}"));
    }
    Ok(n - k)
}

pub fn bound_pendant(n: usize, k: usize) -> Result<f64> {
    let m = check_nk(n, k)? as f64;
    let k = k as f64;
    let r = k / m;
    Ok((m + r - ((m - 2.0).powi(2) + 2.0 * k + r * r).sqrt()) / 2.0)
}

/// Bound for any graph with at least one pendant vertex; the `k = 1` case
/// of [`bound_pendant`].
pub fn bound_pendant_general(n: usize) -> Result<f64> {
    if n < 4 {
        return invalid(format!("need n ≥ 4, got {n}"));
    }
    let n = n as f64;
    let inv = 1.0 / (n - 1.0);
    Ok((n - 1.0 + inv - (n * n - 6.0 * n + 11.0 + inv * inv).sqrt()) / 2.0)
}

pub fn bound_submatrix(n: usize, k: usize) -> Result<f64> {
    let m = check_nk(n, k)?;
    let t = k.div_ceil(m) as f64;
    let m = m as f64;
    Ok((m + t - ((m + t).powi(2) - 4.0 * (m - 1.0)).sqrt()) / 2.0)
}

/// Minimum-degree bound; always strictly below `delta`.
pub fn bound_lima(n: usize, delta: usize) -> Result<f64> {
    if n < 2 || delta == 0 || delta > n - 1 {
        return invalid(format!("need n ≥ 2 and 1 ≤ δ ≤ n − 1, got n={n}, δ={delta}"));
    }
    let (n, d) = (n as f64, delta as f64);
    let value = (n - 1.0 + d - ((n - 1.0 - d).powi(2) + 4.0).sqrt()) / 2.0;
    debug_assert!(value < d);
    Ok(value)
}

/// `q_min(G) < δ(G)`.
pub fn das_bound_holds(q_min: f64, delta: usize) -> bool {
    q_min < delta as f64
}

/// Bounds applicable to graphs of order `n` with `k` pendant vertices and
/// minimum degree `delta`, with the worst excess seen over checked graphs.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub k: Option<usize>,
    pub delta: usize,
    pub values: BTreeMap<&'static str, f64>,
    pub witnesses_checked: u64,
    /// Largest `q_min − bound` over all checks; `≤ 0` means every bound held.
    pub max_violation: f64,
}

impl BoundReport {
    /// Bounds for graphs with `k ≥ 1` pendant vertices (so `δ = 1`).
    pub fn for_pendant_class(n: usize, k: usize) -> Result<Self> {
        let mut values = BTreeMap::new();
        values.insert("pendant", bound_pendant(n, k)?);
        values.insert("submatrix", bound_submatrix(n, k)?);
        values.insert("lima", bound_lima(n, 1)?);
        values.insert("das", 1.0);
        Ok(BoundReport {
            n,
            k: Some(k),
            delta: 1,
            values,
            witnesses_checked: 0,
            max_violation: f64::NEG_INFINITY,
        })
    }

    pub fn record(&mut self, q_min: f64) {
        self.witnesses_checked += 1;
        for &bound in self.values.values() {
            self.max_violation = self.max_violation.max(q_min - bound);
        }
    }

    pub fn merge(&mut self, other: &BoundReport) {
        self.witnesses_checked += other.witnesses_checked;
        self.max_violation = self.max_violation.max(other.max_violation);
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundRow {
    pub n: usize,
    pub pendant_general: f64,
    pub lima_delta1: f64,
    pub submatrix_k1: f64,
    /// `pendant_general − lima_delta1`.
    pub diff: f64,
}

impl BoundRow {
    pub fn general_exceeds_lima(&self) -> bool {
        self.diff > 0.0
    }

    pub fn smaller(&self) -> &'static str {
        if self.general_exceeds_lima() {
            "lima"
        } else {
            "pendant_general"
        }
    }
}

pub const BOUNDS_CSV_HEADER: &str =
    "n,bound_pendant_general,bound_lima_delta1,bound_submatrix_k1,diff,general_exceeds_lima";

/// Tabulates the general pendant bound against the `δ = 1` minimum-degree
/// bound; the direction between them is reported, not assumed.
pub fn compare_bounds(ns: impl IntoIterator<Item = usize>) -> Result<Vec<BoundRow>> {
    ns.into_iter()
        .map(|n| {
            let pendant_general = bound_pendant_general(n)?;
            let lima_delta1 = bound_lima(n, 1)?;
            Ok(BoundRow {
                n,
                pendant_general,
                lima_delta1,
                submatrix_k1: bound_submatrix(n, 1)?,
                diff: pendant_general - lima_delta1,
            })
        })
        .collect()
}

pub fn bounds_csv(rows: &[BoundRow]) -> String {
    let mut out = String::from(BOUNDS_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n,
            r.pendant_general,
            r.lima_delta1,
            r.submatrix_k1,
            r.diff,
            r.general_exceeds_lima()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pendant_values() {
        let want = (5.5 - 18.25f64.sqrt()) / 2.0;
        assert!((bound_pendant(10, 6).unwrap() - want).abs() < 1e-15);
        assert!((bound_pendant(10, 6).unwrap() - 0.6139991).abs() < 1e-6);
        assert!(bound_pendant(10, 6).unwrap() > (5.0 - 17f64.sqrt()) / 2.0);
        assert!(bound_pendant(10, 8).is_err());
        assert!(bound_pendant(10, 0).is_err());
    }

    #[test]
    fn general_values() {
        let ten = (9.0 + 1.0 / 9.0 - (51.0 + 1.0 / 81.0f64).sqrt()) / 2.0;
        assert!((bound_pendant_general(10).unwrap() - ten).abs() < 1e-15);
        assert!((bound_pendant_general(10).unwrap() - 0.9844).abs() < 1e-4);
        let four = (5.0 - 7f64.sqrt()) / 3.0;
        assert!((bound_pendant_general(4).unwrap() - four).abs() < 1e-14);
        for n in 4..=20 {
            assert!((bound_pendant_general(n).unwrap() - bound_pendant(n, 1).unwrap()).abs() < 1e-12);
        }
        assert!(bound_pendant_general(3).is_err());
    }

    #[test]
    fn submatrix_values() {
        assert!((bound_submatrix(10, 6).unwrap() - (3.0 - 6f64.sqrt())).abs() < 1e-14);
        assert!(bound_submatrix(10, 6).unwrap() <= bound_pendant(10, 6).unwrap());
        // (n − k) | k makes the relaxation tight
        for (n, k) in [(8, 4), (9, 6), (12, 8), (6, 3)] {
            assert!((bound_submatrix(n, k).unwrap() - bound_pendant(n, k).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn lima_values() {
        assert!((bound_lima(10, 1).unwrap() - (5.0 - 17f64.sqrt())).abs() < 1e-14);
        assert!((bound_lima(4, 1).unwrap() - (2.0 - 2f64.sqrt())).abs() < 1e-14);
        for n in 2..30 {
            for d in 1..n {
                assert!(bound_lima(n, d).unwrap() < d as f64);
            }
        }
        assert!(bound_lima(5, 5).is_err());
        assert!(bound_lima(5, 0).is_err());
    }

    #[test]
    fn comparison_rows() {
        let rows = compare_bounds([4, 10]).unwrap();
        assert!((rows[1].pendant_general - 0.9844).abs() < 1e-4);
        assert!((rows[1].lima_delta1 - 0.8769).abs() < 1e-4);
        assert!((rows[0].submatrix_k1 - (2.0 - 2f64.sqrt())).abs() < 1e-14);
        assert!(rows.iter().all(BoundRow::general_exceeds_lima));
        let csv = bounds_csv(&rows);
        assert!(csv.starts_with(BOUNDS_CSV_HEADER));
        assert_eq!(csv.lines().count(), 3);
    }

    #[test]
    fn report_tracks_violation() {
        let mut r = BoundReport::for_pendant_class(10, 6).unwrap();
        r.record(0.4384471871911697);
        assert!(r.max_violation < 0.0);
        r.record(0.7);
        assert!(r.max_violation > 0.0);
        assert_eq!(r.witnesses_checked, 2);
        assert!(das_bound_holds(0.99, 1) && !das_bound_holds(1.0, 1));
    }
}
