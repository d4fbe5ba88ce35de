//! Signless Laplacian matrices and their spectra.
//!
//! Eigenvalues are stored ascending, so the usual descending labelling
//! `q_1 ≥ … ≥ q_n` maps to `eigenvalues[n - i]` and the least eigenvalue
//! `q_min` is `eigenvalues[0]`.

mod jacobi;
mod oracle;

pub use jacobi::{eig_sym, eigenvalues_sym};
pub use oracle::{charpoly_oracle, oracle_spectrum, CharPoly};

use std::ops::Index;

use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Numeric tolerances shared by the spectral and search code.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Relative off-diagonal norm at which the eigensolver stops.
    pub eig: f64,
    /// Eigenvalues within `group * (1 + |q_min|)` of `q_min` count towards
    /// its multiplicity.
    pub group: f64,
    /// Graphs within `tie * (1 + |best|)` of the optimum are co-extremal.
    pub tie: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eig: 1e-10,
            group: 1e-8,
            tie: 1e-8,
        }
    }
}

/// Dense symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Rejects entries that are not exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return invalid("matrix is not square");
        }
        let data: Vec<f64> = rows.iter().flatten().copied().collect();
        for i in 0..n {
            for j in 0..i {
                if data[i * n + j] != data[j * n + i] {
                    return invalid(format!("matrix is not symmetric at ({i}, {j})"));
                }
            }
        }
        Ok(SymMatrix { n, data })
    }

    #[cfg(test)]
    pub(crate) fn from_data_unchecked(n: usize, data: Vec<f64>) -> Self {
        SymMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n.max(1)).map(<[f64]>::to_vec).collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        self.data
            .chunks(self.n)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub(crate) fn data(&self) -> &[f64] {
        &self.data
    }
}

/// `Q(G) = D(G) + A(G)`.
pub fn q_matrix(g: &Graph) -> SymMatrix {
    let n = g.order();
    let mut data = vec![0.0; n * n];
    for v in 0..n {
        data[v * n + v] = g.degree(v) as f64;
        for u in g.neighbors(v) {
            data[v * n + u] = 1.0;
        }
    }
    SymMatrix { n, data }
}

/// A real-valued function on the vertex set.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexVector(pub Vec<f64>);

impl VertexVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn normalized(&self) -> VertexVector {
        let n = self.norm();
        if n == 0.0 {
            return self.clone();
        }
        VertexVector(self.0.iter().map(|x| x / n).collect())
    }

    /// Flips the sign so the largest-magnitude entry is positive; entries
    /// within a relative `1e-9` of the maximum tie and the lowest index wins.
    pub fn sign_normalized(&self) -> VertexVector {
        let max = self.max_abs();
        let pivot = self.0.iter().position(|x| x.abs() >= max * (1.0 - 1e-9));
        match pivot {
            Some(i) if self.0[i] < 0.0 => VertexVector(self.0.iter().map(|x| -x).collect()),
            _ => self.clone(),
        }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

impl Index<usize> for VertexVector {
    type Output = f64;
    fn index(&self, v: usize) -> &f64 {
        &self.0[v]
    }
}

/// Full eigendecomposition with ascending eigenvalues.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[i]` pairs with `eigenvalues[i]`; unit length.
    pub eigenvectors: Vec<Vec<f64>>,
    /// Largest `‖M x − λ x‖_∞` over all pairs.
    pub residual_bound: f64,
}

impl Spectrum {
    /// `q_i` in descending labelling, `1 ≤ i ≤ n`.
    pub fn q(&self, i: usize) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - i]
    }
}

/// Least eigenvalue of `Q(G)` with a unit eigenvector and its multiplicity.
#[derive(Clone, Debug)]
pub struct LeastEigenpair {
    pub value: f64,
    pub vector: VertexVector,
    pub multiplicity: usize,
}

pub fn q_min_of(g: &Graph, tol: &Tolerances) -> Result<LeastEigenpair> {
    let spectrum = eig_sym(&q_matrix(g), tol.eig)?;
    Ok(least_eigenpair(&spectrum, tol))
}

pub(crate) fn least_eigenpair(spectrum: &Spectrum, tol: &Tolerances) -> LeastEigenpair {
    let value = spectrum.eigenvalues[0];
    let cutoff = value + tol.group * (1.0 + value.abs());
    let multiplicity = spectrum.eigenvalues.iter().take_while(|&&l| l <= cutoff).count();
    LeastEigenpair {
        value,
        vector: VertexVector(spectrum.eigenvectors[0].clone()).sign_normalized(),
        multiplicity,
    }
}

/// Least eigenvalue only; skips eigenvector accumulation.
pub fn least_eigenvalue(g: &Graph, eig_tol: f64) -> Result<f64> {
    let values = eigenvalues_sym(&q_matrix(g), eig_tol)?;
    Ok(values[0])
}

fn check_domain(g: &Graph, x: &VertexVector) -> Result<()> {
    if x.len() != g.order() {
        return invalid(format!(
            "vector has {} entries, graph has {} vertices",
            x.len(),
            g.order()
        ));
    }
    Ok(())
}

/// `xᵀ Q x` as the edge sum `Σ_{uv ∈ E} (x(u) + x(v))²`.
pub fn rayleigh(g: &Graph, x: &VertexVector) -> Result<f64> {
    check_domain(g, x)?;
    Ok(g.edges().iter().map(|&(u, v)| (x[u] + x[v]).powi(2)).sum())
}

/// Largest defect of the vertex-wise eigen-equation
/// `(q − d(v)) x(v) = Σ_{u ~ v} x(u)`.
pub fn residual(g: &Graph, q: f64, x: &VertexVector) -> Result<f64> {
    check_domain(g, x)?;
    Ok((0..g.order())
        .map(|v| {
            let s: f64 = g.neighbors(v).map(|u| x[u]).sum();
            ((q - g.degree(v) as f64) * x[v] - s).abs()
        })
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};

    #[test]
    fn q_of_small_graphs() {
        let q = q_matrix(&cycle_graph(3).unwrap());
        assert_eq!(q.rows(), vec![vec![2.0, 1.0, 1.0], vec![1.0, 2.0, 1.0], vec![1.0, 1.0, 2.0]]);
        assert_eq!(q_matrix(&path_graph(2).unwrap()).rows(), vec![vec![1.0, 1.0], vec![1.0, 1.0]]);
        let k4 = q_matrix(&complete_graph(4).unwrap());
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(k4.get(i, j), if i == j { 3.0 } else { 1.0 });
            }
        }
    }

    #[test]
    fn rayleigh_values() {
        let p2 = path_graph(2).unwrap();
        assert_eq!(rayleigh(&p2, &VertexVector(vec![0.0, 0.0])).unwrap(), 0.0);
        let h = 0.5f64.sqrt();
        assert!(rayleigh(&p2, &VertexVector(vec![h, -h])).unwrap().abs() < 1e-15);
        assert!(rayleigh(&p2, &VertexVector(vec![1.0])).is_err());
    }

    #[test]
    fn residual_values() {
        let c3 = cycle_graph(3).unwrap();
        let h = 0.5f64.sqrt();
        let x = VertexVector(vec![h, -h, 0.0]);
        assert!(residual(&c3, 1.0, &x).unwrap() < 1e-15);
        // At q = 2 the defect at vertices 0 and 1 is |0·x(v) − (−x(v))| = 1/√2.
        assert!((residual(&c3, 2.0, &x).unwrap() - h).abs() < 1e-15);
        assert!(residual(&c3, 1.0, &VertexVector(vec![1.0; 4])).is_err());
    }

    #[test]
    fn least_pair_of_bipartite_graph() {
        let least = q_min_of(&path_graph(4).unwrap(), &Tolerances::default()).unwrap();
        assert!(least.value.abs() < 1e-10);
        assert_eq!(least.multiplicity, 1);
        // Sign pattern of the kernel vector alternates along the path.
        let x = &least.vector;
        assert!(x[0] * x[1] < 0.0 && x[1] * x[2] < 0.0);
    }

    #[test]
    fn sign_normalization() {
        let x = VertexVector(vec![0.1, -0.9, 0.3]).sign_normalized();
        assert_eq!(x.0, vec![-0.1, 0.9, -0.3]);
        let tie = VertexVector(vec![-0.5, 0.5]).sign_normalized();
        assert_eq!(tie.0, vec![0.5, -0.5]);
    }

    #[test]
    fn non_symmetric_rejected() {
        assert!(SymMatrix::from_rows(&[vec![1.0, 2.0], vec![0.0, 1.0]]).is_err());
        assert!(SymMatrix::from_rows(&[vec![1.0, 2.0]]).is_err());
    }
}
