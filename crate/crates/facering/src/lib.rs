//! Exact computation in topological face rings of nice manifolds with
//! corners.
//!
//! A model consists of a finite face poset with facet labels, one
//! graded-commutative cohomology algebra per face, and restriction
//! homomorphisms on covering pairs. On top of that combinatorial data the
//! crate computes, entirely in exact arithmetic:
//!
//! - elements of the direct sum of the per-face polynomial extensions, the
//!   restriction and transfer morphisms between components, and the subring
//!   spanned by face elements ([`ring`]);
//! - canonical support-based decomposition and membership, the grading and
//!   exact Hilbert series, Thom-class elements, and the torus structure map;
//! - total equivariant Stiefel-Whitney and Pontrjagin classes
//!   ([`charclass`]);
//! - independent brute-force verifiers for all of the above: a
//!   Stanley-Reisner monomial count, exhaustive basis enumeration with exact
//!   rank computation, and linear-algebra membership ([`oracle`]).
//!
//! Builtin example models and a JSON file format live in [`models`]; the
//! [`cli`] module is the batch front end behind the `facering` binary.

pub mod algebra;
pub mod charclass;
pub mod cli;
pub mod corners;
mod linalg;
pub mod models;
pub mod oracle;
pub mod ring;
pub mod sample;
pub mod scalar;

pub use algebra::{AlgebraElement, AlgebraMap, BasisElement, GradedAlgebra};
pub use corners::{Face, FaceComplex, FaceId, ValidationReport};
pub use ring::{FaceDecomposition, FacePolynomial, Monomial, RingElement, TorusData};
pub use scalar::{FieldSpec, Scalar};
