//! Decides whether the compositional semigroup generated by a set of monic
//! quadratics over an odd finite field consists only of irreducible
//! polynomials.
//!
//! The decision reduces to a finite check over `F_q`: no `b_f` may be a
//! square, and nothing reachable from `{-b_f}` in the graph `a -> f(a)` by a
//! path of positive length may be a square. [`oracle`] provides an
//! independent dense-polynomial irreducibility test used to cross-validate.

pub mod cli;
pub mod criterion;
pub mod error;
pub mod field;
pub mod oracle;
pub mod quadratic;
pub mod search;

pub use criterion::{GeneratorSet, ReachGraph, Reason, Verdict, VerdictKind};
pub use error::{Error, Result};
pub use field::{Elem, FieldCtx, FieldSpec};
pub use oracle::{crosscheck, CrosscheckReport, DensePoly, PolyRing};
pub use quadratic::{compose_word, MonicQuadratic, Word};
