//! Exact computations in cluster algebras of affine quivers: sparse Laurent
//! arithmetic, quiver representations over prime fields, quiver Grassmannian
//! point counts, the cluster character (Caldero-Chapoton) map, Chebyshev
//! recursions, seed mutation, and machine checks of the product/positivity
//! identities they satisfy.

pub mod laurent;

pub use laurent::{LaurentError, LaurentPoly, Mono, TermWitness};
