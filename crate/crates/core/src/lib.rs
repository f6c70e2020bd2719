//! Exact symbolic engine for a multiparametric quantum (m+n)-superspace.
//!
//! The engine implements, over an exact coefficient ring of rationals
//! extended by Laurent monomials in deformation parameters `p_i` and
//! polynomials in their formal logarithms `h_i`:
//!
//! * the quantum superspace with normal-ordering rewriting ([`superalgebra`]),
//! * its Hopf superalgebra structure and machine-checked axioms ([`hopf`]),
//! * the bicovariant differential calculus and Weyl superalgebra
//!   ([`calculus`]),
//! * Maurer-Cartan forms and the quantum Lie superalgebra of vector fields
//!   ([`cartan`]),
//! * the logarithmic extension with nonhomogeneous commutation relations,
//!   its Hopf structure, calculus, Maurer-Cartan algebra, and vector fields
//!   ([`logext`]).
//!
//! Every algebraic identity the deformation is supposed to satisfy is
//! available as a seeded, deterministic verification suite returning a
//! [`report::CheckReport`].

pub mod calculus;
pub mod cartan;
pub mod coeff;
pub mod config;
mod error;
pub mod hopf;
pub mod linear;
pub mod logext;
pub mod report;
pub mod sample;
pub mod superalgebra;
pub mod verify;

pub use coeff::{ParamCoeff, Rational};
pub use config::ParamConfig;
pub use error::AlgebraError;
pub use linear::LinComb;
pub use report::CheckReport;
pub use superalgebra::{AElement, SuperMonomial};
