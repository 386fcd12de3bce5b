//! Exact computations for Artinian quotients `R = k[x_1..x_n]/I` by monomial ideals.
//!
//! The crate covers monomial ideal arithmetic, the quotient as a based algebra over
//! a prime field, finite modules and their Hom spaces, the canonical module with its
//! trace ideal and tilde involution, Gorenstein covers, and combinatorial criteria
//! for the almost-Gorenstein conditions in types two and three.
//!
//! ```
//! use agt_core::{FiniteAlgebra, MonomialIdeal, PrimeField};
//!
//! let i = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
//! let r = FiniteAlgebra::new(&i, PrimeField::default()).unwrap();
//! assert_eq!(r.dim(), 3);
//! assert_eq!(r.cm_type(), 2);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod analysis;
pub mod canonical;
pub mod classify;
pub mod cover;
pub mod error;
pub mod field;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod oracle;
mod perm;

pub use algebra::FiniteAlgebra;
pub use canonical::CanonicalModule;
pub use module::{hom_space, HomSpace, ModuleRep};

pub use error::{Error, Result};
pub use field::PrimeField;
pub use linalg::{Matrix, Subspace};

pub use monomial::{
    enclosing_irreducible, irreducible_colon, minimalize, EnclosingIrreducible,
    IrreducibleComponent, Monomial, MonomialIdeal,
};
