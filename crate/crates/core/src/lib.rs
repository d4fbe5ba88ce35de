//! Signless Laplacian toolkit for non-bipartite graphs with pendant vertices.
//!
//! The crate builds the graphs that minimize and maximize the least
//! eigenvalue of `Q(G) = D(G) + A(G)` among connected non-bipartite graphs of
//! fixed order with a fixed number of pendant vertices, computes their spectra
//! with a self-contained Jacobi eigensolver, and checks the extremal and
//! eigenvector-structure statements by exhaustive search at small orders.
//!
//! | Module | Purpose |
//! |--------|---------|
//! | [`graph`] | dense bitset graphs, constructors, structure report, isomorphism, graph6 and edge-list I/O |
//! | [`families`] | the cycle-stem-star family `U`, the clique-with-pendants family `K(ν)`, majorization |
//! | [`spectra`] | `Q(G)`, Jacobi eigendecomposition, least eigenpair, exact characteristic-polynomial oracle |
//! | [`analysis`] | branch decomposition and eigenvector sign/magnitude pattern checks |
//! | [`extremal`] | labeled enumeration of graph classes, sharded extremal search, relocation experiments |
//! | [`bounds`] | closed-form upper bounds on the least eigenvalue and their comparison |
//! | [`cli`] | the `qspec` command-line front end |
//!
//! ```
//! use qspec::families::{build_k, PendantProfile};
//! use qspec::spectra::{q_min_of, Tolerances};
//!
//! let k2220 = build_k(&PendantProfile::new(vec![2, 2, 2, 0]).unwrap()).unwrap();
//! let least = q_min_of(&k2220.graph, &Tolerances::default()).unwrap();
//! assert!((least.value - (5.0 - 17f64.sqrt()) / 2.0).abs() < 1e-9);
//! assert_eq!(least.multiplicity, 2);
//! ```

pub mod analysis;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::Graph;
