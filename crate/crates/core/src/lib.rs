//! Exact computations with Lie algebras given by structure constants.
//!
//! The crate computes derived and lower central series, centers, maximal
//! abelian ideals and the breadth `b(L) = max rank ad_x`, and brings pure
//! solvable algebras of breadth at most 2 into a catalog normal form with a
//! checkable basis-change witness.
//!
//! ```
//! use liebreadth::catalog::{build, FamilyTag};
//! use liebreadth::field::Field;
//! use liebreadth::generate::conjugate;
//! use liebreadth::recognize::classify;
//!
//! let l = conjugate(&build(&FamilyTag::L6, Field::Rationals).unwrap(), 3, 5).unwrap();
//! let r = classify(&l).unwrap();
//! assert_eq!(r.family, FamilyTag::L6);
//! assert!(r.verified);
//! ```
//!
//! Arithmetic is over ℚ, `GF(p)` or one quadratic extension `ℚ(√d)`
//! ([`field`]). Algebras are [`algebra::StructureTensor`]s; [`breadth`]
//! computes and certifies breadth; [`catalog`] and [`recognize`] hold the
//! normal forms and the recognizer; [`generate`] has seeded generators and
//! the exhaustive `GF(p)` scan; [`json`] is the interchange format.

pub mod algebra;
pub mod breadth;
pub mod catalog;
pub mod error;
pub mod field;
pub mod generate;
pub mod invariants;
pub mod json;
pub mod matrix;
pub mod poly;
pub mod recognize;
pub mod subspace;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    struct Readme;
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/structure-constants.md")]
    struct StructureConstants;
    #[doc = include_str!("../../../book/src/fields.md")]
    struct Fields;
    #[doc = include_str!("../../../book/src/breadth.md")]
    struct Breadth;
    #[doc = include_str!("../../../book/src/catalog.md")]
    struct Catalog;
    #[doc = include_str!("../../../book/src/classification.md")]
    struct Classification;
    #[doc = include_str!("../../../book/src/generators.md")]
    struct Generators;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
