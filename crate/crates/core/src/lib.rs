//! Gröbner bases in algebras of solvable type.
//!
//! This crate implements left Gröbner basis computation for PBW algebras
//! (commutative polynomial rings, Weyl algebras, universal enveloping
//! algebras of Lie algebras, and arbitrary quadric commutation systems),
//! together with the combinatorial machinery built on top of it: cone
//! decompositions of monomial and homogeneous ideals, Macaulay constants,
//! Hilbert functions, syzygy module generators, two-sided bases via the
//! enveloping algebra, and exact-arithmetic evaluation of the
//! doubly-exponential degree bounds these computations are known to obey.
//!
//! The crate is `no_std` (it requires `alloc`); all coefficient arithmetic
//! is exact (arbitrary-precision rationals or a prime field), and all
//! public operations are deterministic.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod bounds;
pub mod coeff;
pub mod cone;
pub mod constructions;
pub mod envelope;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod monomial;
pub mod ordering;
pub mod parse;
pub mod poly;
pub mod syzygy;
pub mod weights;

pub use algebra::{CommutationSystem, Relation, SolvableAlgebra};
pub use coeff::{Coefficient, FieldSpec};
pub use cone::{Cone, ConeDecomposition, MacaulayConstants};
pub use envelope::EnvelopingContext;
pub use error::Error;
pub use groebner::{GroebnerBasis, Membership, ReductionCertificate};
pub use monomial::{MultiIndex, VarSet};
pub use ordering::MonomialOrdering;
pub use hilbert::HilbertData;
pub use poly::Polynomial;
pub use syzygy::{ModuleVector, SyzygyGenerators};
pub use weights::WeightVector;
