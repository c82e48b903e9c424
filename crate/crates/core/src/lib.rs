//! t-analogs of q-characters of standard modules of quantum loop algebras of
//! simply-laced type, with closed tableaux formulas for types A and D and a
//! monomial realization of crystals.

pub mod char_engine;
pub mod error;
pub mod io;
pub mod monomial_crystal;
pub mod root_data;
pub mod scalar;
pub mod tableaux_a;
pub mod tableaux_d;
pub mod yalgebra;

pub use error::{Error, Result};
pub use root_data::{Coloring, DiagramKind, DynkinDiagram, Node, WeightVector};
pub use scalar::Coefficient;
pub use yalgebra::{
    a_monomial, drinfeld_from_monomial, e_decompose, e_expansion, leq, monomial_from_rational_tuple,
    pairing_d, t_binomial, v_profile, weight_of, Base, Character, DrinfeldData, Laurent, SpectralParam,
    VProfile, Var, YMonomial,
};

pub type IntLaurent = Laurent<i64>;
pub type QCharacter = Character<i64>;
pub type BigLaurent = Laurent<num_bigint::BigInt>;
pub type BigQCharacter = Character<num_bigint::BigInt>;
