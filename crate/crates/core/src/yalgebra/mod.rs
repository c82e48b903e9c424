//! Monomials in the variables `Y_{i,a}`, their Laurent coefficients, and the
//! combinatorics built on them.

pub mod character;
pub mod drinfeld;
pub mod expansion;
pub mod laurent;
pub mod monomial;
pub mod order;

pub use character::{weight_of, Character};
pub use drinfeld::{drinfeld_from_monomial, monomial_from_rational_tuple, DrinfeldData};
pub use expansion::{e_decompose, e_expansion};
pub use laurent::{t_binomial, Laurent};
pub use monomial::{Base, SpectralParam, Var, YMonomial};
pub use order::{a_monomial, leq, pairing_d, v_profile, VProfile};
