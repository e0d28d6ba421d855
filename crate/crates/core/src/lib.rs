//! Exact-arithmetic toolkit for attractor decompositions of affine schemes
//! under algebraic-group and algebraic-monoid actions.
//!
//! The crate is organized bottom-up:
//!
//! * [`poly`]: sparse multivariate polynomials over Q, monomial orders,
//!   parsing and canonical printing;
//! * [`groebner`] / [`ideal`]: Buchberger's algorithm, normal forms, ideal
//!   arithmetic with cached reduced bases;
//! * [`elim`]: elimination ideals and subalgebra membership;
//! * [`linalg`]: dense rational row reduction and subspaces;
//! * [`grading`]: torus weights, isotypic components, weight monoids;
//! * [`coaction`]: group/monoid presentations, saturation, the universal
//!   quotient tower, Kempf one-parameter subgroups;
//! * [`bb`]: fixed-point and attractor ideals with their structure maps;
//! * [`formal`]: truncated algebras, stabilization indices, algebraization.

pub mod bb;
pub mod coaction;
pub mod elim;
pub mod error;
pub mod formal;
pub mod grading;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod presentations;

pub use error::{Error, Result};
pub use ideal::{GroebnerBasis, Ideal};
pub use linalg::LinearSubspace;
pub use poly::{parse_poly, Monomial, MonomialOrder, MultiPoly, PolyRing};
