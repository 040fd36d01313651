//! Local homology of finite and affine Artin groups with coefficients in
//! `ℚ[q^{±1}]`, computed through precise discrete Morse matchings on the
//! complex `K_W` of finite parabolic subgroups.

pub mod builtin;
pub mod complex;
pub mod coxeter;
pub mod error;
pub mod families;
pub mod homology;
pub mod linalg;
pub mod morse;
pub mod poly;
pub mod search;
pub mod simplex;
pub mod snf;
pub mod sweep;
pub mod tables;

pub use builtin::{Family, TypeName};
pub use complex::{build_kw, ComplexK, WeightedLevel};
pub use coxeter::{CoxeterGraph, CyclotomicVector, FiniteType};
pub use error::{Error, Result};
pub use morse::{Matching, MorseData};
pub use simplex::Simplex;
