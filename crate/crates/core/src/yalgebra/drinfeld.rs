//! Drinfeld polynomials and their l-dominant monomials.

use std::fmt;

use crate::error::{Error, Result};
use crate::root_data::Node;

use super::monomial::{SpectralParam, Var, YMonomial};

/// An `I`-tuple of polynomials `P_i(u) = prod (1 - a u)`, stored as the
/// sorted multiset of its roots `(i, a)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DrinfeldData {
    roots: Vec<(Node, SpectralParam)>,
}

impl DrinfeldData {
    pub fn new(roots: impl IntoIterator<Item = (Node, SpectralParam)>) -> Self {
        let mut roots: Vec<_> = roots.into_iter().collect();
        roots.sort_by(|x, y| (&x.1, x.0).cmp(&(&y.1, y.0)));
        Self { roots }
    }

    /// Roots in `(base, qexp, node)` order, repeated by multiplicity.
    pub fn roots(&self) -> &[(Node, SpectralParam)] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `m_P = prod Y_{i,a}`.
    pub fn monomial(&self) -> YMonomial {
        YMonomial::from_exponents(self.roots.iter().map(|(i, a)| (Var::new(*i, a), 1)))
    }
}

impl fmt::Display for DrinfeldData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.roots.iter().map(|(i, a)| format!("(1-{a}u)@{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `m_{Q/R} = prod_i prod_alpha Y_{i,alpha} prod_beta Y_{i,beta}^-1`.
pub fn monomial_from_rational_tuple(q: &DrinfeldData, r: &DrinfeldData) -> YMonomial {
    q.monomial().div(&r.monomial())
}

/// The Drinfeld polynomials of an l-dominant monomial.
pub fn drinfeld_from_monomial(m: &YMonomial) -> Result<DrinfeldData> {
    if !m.is_l_dominant() {
        return Err(Error::NotLDominant(m.to_string()));
    }
    Ok(DrinfeldData::new(m.iter().flat_map(|(v, e)| {
        std::iter::repeat((v.node, v.param())).take(e as usize)
    })))
}
