//! Verification engine for torsion units in integral group rings.
//!
//! Given character-theoretic data for a finite group (conjugacy classes,
//! power maps, ordinary and Brauer characters, decomposition rows), the
//! crate enumerates the partial-augmentation vectors a hypothetical
//! normalized unit of a given order could have, and then tries to eliminate
//! the candidates by analysing the module structure their eigenvalues force
//! on reductions of lattices: block spectra, partition families,
//! Littlewood-Richardson filtration feasibility, dominance and radical
//! bounds, plus closed-form block-theoretic criteria.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub(crate) mod arith;
pub mod chartab;
pub mod criteria;
pub mod cyclotomic;
pub mod helpkit;
pub mod latticefilter;
pub mod lrcalc;


pub use cyclotomic::CyclotomicNumber;


