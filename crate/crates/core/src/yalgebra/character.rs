//! Finite sums `sum a_m(t) m` over monomials.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::root_data::WeightVector;
use crate::scalar::Coefficient;

use super::laurent::Laurent;
use super::monomial::YMonomial;

/// An element of the Laurent ring in the `Y_{i,a}` with `Z[t, t^-1]`
/// coefficients, e.g. a value of the `t`-analog of the `q`-character.
///
/// Terms are kept in canonical monomial order and zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Character<C> {
    terms: BTreeMap<YMonomial, Laurent<C>>,
}

impl<C: Coefficient> Default for Character<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Character<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    /// The character `1 * m`.
    pub fn from_monomial(m: YMonomial) -> Self {
        let mut out = Self::zero();
        out.terms.insert(m, Laurent::one());
        out
    }

    /// The unit character (the unit monomial with coefficient 1).
    pub fn unit() -> Self {
        Self::from_monomial(YMonomial::one())
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (YMonomial, Laurent<C>)>) -> Result<Self> {
        let mut out = Self::zero();
        for (m, c) in pairs {
            out.add_term(m, &c)?;
        }
        Ok(out)
    }

    pub fn add_term(&mut self, m: YMonomial, c: &Laurent<C>) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                existing.add_assign_checked(c)?;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
        Ok(())
    }

    pub fn coeff(&self, m: &YMonomial) -> Laurent<C> {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn get(&self, m: &YMonomial) -> Option<&Laurent<C>> {
        self.terms.get(m)
    }

    pub fn contains(&self, m: &YMonomial) -> bool {
        self.terms.contains_key(m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&YMonomial, &Laurent<C>)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &YMonomial> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(m.clone(), &c.checked_neg()?)?;
        }
        Ok(out)
    }

    /// Multiplication by a scalar of the coefficient ring.
    pub fn scale(&self, c: &Laurent<C>) -> Result<Self> {
        let mut out = Self::zero();
        for (m, a) in self.iter() {
            out.add_term(m.clone(), &a.checked_mul(c)?)?;
        }
        Ok(out)
    }

    /// The ordinary (commutative) product of characters.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (m1, a1) in self.iter() {
            for (m2, a2) in other.iter() {
                out.add_term(m1.mul(m2), &a1.checked_mul(a2)?)?;
            }
        }
        Ok(out)
    }

    /// Coefficients evaluated at `t = t0`; monomials whose value vanishes are
    /// dropped.
    pub fn specialize_t(&self, t0: i64) -> Result<BTreeMap<YMonomial, C>> {
        let mut out = BTreeMap::new();
        for (m, c) in self.iter() {
            let v = c.eval(t0)?;
            if !v.is_zero() {
                out.insert(m.clone(), v);
            }
        }
        Ok(out)
    }

    /// Sum of all coefficients at `t = t0`.
    pub fn total_at(&self, t0: i64) -> Result<C> {
        let mut total = C::zero();
        for (_, c) in self.iter() {
            total = total.checked_add(&c.eval(t0)?).ok_or(Error::Overflow)?;
        }
        Ok(total)
    }

    /// Collapse `Y_{i,a} -> y_i`. Keys are the classical monomials, written as
    /// weights `sum u_i Lambda_i`.
    pub fn forget_spectral(&self) -> Result<BTreeMap<WeightVector, Laurent<C>>> {
        let mut out: BTreeMap<WeightVector, Laurent<C>> = BTreeMap::new();
        for (m, c) in self.iter() {
            let key = weight_of(m);
            let slot = out.entry(key.clone()).or_default();
            slot.add_assign_checked(c)?;
            if slot.is_zero() {
                out.remove(&key);
            }
        }
        Ok(out)
    }

    /// Distinct l-dominant monomials of the support.
    pub fn l_dominant_monomials(&self) -> Vec<&YMonomial> {
        self.monomials().filter(|m| m.is_l_dominant()).collect()
    }
}

/// `wt(m) = sum u_{i,a}(m) Lambda_i`.
pub fn weight_of(m: &YMonomial) -> WeightVector {
    WeightVector::from_pairs(m.iter().map(|(v, e)| (v.node, e)))
}

impl<C: Coefficient> fmt::Display for Character<C> {
    /// One term per line: `(coefficient) monomial`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, c) in self.iter() {
            if c.is_one() {
                writeln!(f, "{m}")?;
            } else {
                writeln!(f, "({c}) {m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Character<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(m, c)| (m.to_string(), c.to_string()))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yalgebra::monomial::SpectralParam;

    type Ch = Character<i64>;

    fn m(s: &str) -> YMonomial {
        s.parse().unwrap()
    }

    #[test]
    fn zero_terms_are_pruned() {
        let mut ch = Ch::from_monomial(m("Y_{1,a}"));
        ch.add_term(m("Y_{1,a}"), &Laurent::constant(-1)).unwrap();
        assert!(ch.is_empty());
    }

    #[test]
    fn forget_spectral_of_vector_chain() {
        // A_2 vector representation: Y_{1,a} + Y_{1,aq^2}^{-1}Y_{2,aq} + Y_{2,aq^3}^{-1}
        let ch = Ch::from_terms(
            ["Y_{1,a}", "Y_{1,aq^2}^{-1}Y_{2,aq}", "Y_{2,aq^3}^{-1}"]
                .into_iter()
                .map(|s| (m(s), Laurent::one())),
        )
        .unwrap();
        let classical = ch.forget_spectral().unwrap();
        let keys: Vec<String> = classical.keys().map(|w| w.to_string()).collect();
        assert_eq!(keys.len(), 3);
        for k in ["y1", "y1^-1 y2", "y2^-1"] {
            assert!(keys.contains(&k.to_string()), "{k}");
        }
    }

    #[test]
    fn specialize_empty() {
        assert!(Ch::zero().specialize_t(1).unwrap().is_empty());
    }

    #[test]
    fn product_is_commutative() {
        let x = Ch::from_terms([
            (YMonomial::y(1, &SpectralParam::q(0)), Laurent::one()),
            (YMonomial::y(2, &SpectralParam::q(1)), Laurent::t_pow(2)),
        ])
        .unwrap();
        let y = Ch::from_monomial(m("Y_{1,aq^2}^{-1}"));
        assert_eq!(x.checked_mul(&y).unwrap(), y.checked_mul(&x).unwrap());
    }
}
