//! Exact skew energy of oriented graphs at desk scale.
//!
//! An oriented graph is a simple undirected graph together with a direction
//! for each edge. Its skew-adjacency matrix `S` is the real skew-symmetric
//! `{-1, 0, 1}` matrix with `s[i][j] = 1` exactly when the arc `i -> j` is
//! present; the skew energy is the sum of the absolute values of the
//! eigenvalues of `S`. Because `S` is skew-symmetric, the characteristic
//! polynomial `det(xI - S)` has only even-indexed, nonnegative integer
//! coefficients, which this crate computes exactly by four independent
//! routes:
//!
//! * a combinatorial expansion over linear subgraphs whose components are
//!   single edges and even cycles ([`spectrum::char_poly_expansion`]),
//! * a deletion recurrence pivoting on an arc
//!   ([`spectrum::char_poly_recurrence_edge`]),
//! * a deletion recurrence pivoting on a vertex
//!   ([`spectrum::char_poly_recurrence_vertex`]),
//! * exact determinant evaluation plus interpolation
//!   ([`spectrum::char_poly_oracle`]).
//!
//! On top of the polynomial layer sit the coefficientwise quasi-order
//! ([`spectrum::quasi_compare`]), two skew-energy evaluators (spectral and
//! integral), switching equivalence of orientations ([`orientations`]),
//! constructors for the extremal path/star/cycle/`T`/`U`/`B` families
//! ([`families`]), exhaustive enumeration of bicyclic graphs up to
//! isomorphism ([`enumeration`]), and a verification harness that sweeps
//! entire graph classes and emits machine-readable reports ([`verify`]).
//!
//! The `examples/` directory of this crate has one runnable example per
//! capability; `skewen` is the thin companion CLI.

pub mod error;
pub mod graph;
pub mod spectrum;
pub mod orientations;
pub mod families;
pub mod enumeration;
pub mod verify;
pub mod input;

pub use error::{Error, Result};
pub use graph::{BicyclicShape, Graph, LinearSubgraph, OrientedGraph};
pub use spectrum::{QuasiOrder, SkewPolynomial};
pub use families::FamilySpec;
pub use enumeration::CanonicalForm;
pub use verify::VerificationReport;
