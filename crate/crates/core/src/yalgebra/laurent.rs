//! Exact Laurent polynomials in `t` and balanced `t`-binomial coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// A Laurent polynomial `sum c_k t^k` with exact coefficients.
///
/// Zero coefficients are never stored, so equality is map equality. The
/// operator impls panic on overflow; use the `checked_*` methods where an
/// error is preferable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Laurent<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Laurent<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    /// `c t^k`.
    pub fn monomial(c: C, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(C::one(), k)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, C)>) -> Result<Self> {
        let mut out = Self::zero();
        for (k, c) in pairs {
            out.add_term(k, c)?;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, k: i64) -> C {
        self.terms.get(&k).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero terms in increasing order of the exponent.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, k: i64, c: C) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&k) {
            Some(existing) => {
                let sum = existing.checked_add(&c).ok_or(Error::Overflow)?;
                if sum.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_assign_checked(other)?;
        Ok(out)
    }

    pub fn add_assign_checked(&mut self, other: &Self) -> Result<()> {
        for (k, c) in other.iter() {
            self.add_term(k, c.clone())?;
        }
        Ok(())
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (k, c) in self.iter() {
            terms.insert(k, c.checked_negate().ok_or(Error::Overflow)?);
        }
        Ok(Self { terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (k1, c1) in self.iter() {
            for (k2, c2) in other.iter() {
                let k = k1.checked_add(k2).ok_or(Error::Overflow)?;
                out.add_term(k, c1.checked_mul(c2).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in self.iter() {
            terms.insert(e.checked_add(k).ok_or(Error::Overflow)?, c.clone());
        }
        Ok(Self { terms })
    }

    /// The substitution `t -> t^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Value at the integer `t0`. Negative powers are allowed only for
    /// `t0 = 1` or `t0 = -1`, where the result stays integral.
    pub fn eval(&self, t0: i64) -> Result<C> {
        let base = C::from_int(t0).ok_or(Error::Overflow)?;
        let mut total = C::zero();
        for (k, c) in self.iter() {
            let term = if t0 == 1 {
                c.clone()
            } else if t0 == -1 {
                if k.rem_euclid(2) == 0 {
                    c.clone()
                } else {
                    c.checked_negate().ok_or(Error::Overflow)?
                }
            } else if k < 0 {
                return Err(Error::NonIntegralEvaluation(t0));
            } else {
                let mut p = C::one();
                for _ in 0..k {
                    p = p.checked_mul(&base).ok_or(Error::Overflow)?;
                }
                c.checked_mul(&p).ok_or(Error::Overflow)?
            };
            total = total.checked_add(&term).ok_or(Error::Overflow)?;
        }
        Ok(total)
    }
}

/// Balanced Gaussian binomial `[n, r]_t = [n]! / ([r]! [n-r]!)` with
/// `[k] = (t^k - t^-k) / (t - t^-1)`. Zero when `r < 0` or `r > n`.
///
/// The balanced normalization is the one under which
/// `t^{r(u-r)} [u, r]_t` gives the coefficient `1 + t^2` in `E_i(Y^2)`.
pub fn t_binomial<C: Coefficient>(n: u32, r: i64) -> Result<Laurent<C>> {
    let n = n as i64;
    if r < 0 || r > n {
        return Ok(Laurent::zero());
    }
    // the unbalanced Gaussian binomial in t^2 is a polynomial with
    // nonnegative coefficients; compute it by the q-Pascal rule on a single row
    // and then recenter by t^{-r(n-r)}.
    let mut row: Vec<Vec<C>> = vec![vec![C::one()]];
    for m in 1..=n {
        let mut next: Vec<Vec<C>> = Vec::with_capacity(m as usize + 1);
        for k in 0..=m {
            // [m, k]_{s} = [m-1, k-1]_{s} + s^k [m-1, k]_{s}, s = t^2
            let mut poly: Vec<C> = Vec::new();
            if k >= 1 {
                poly = row[(k - 1) as usize].clone();
            }
            if k < m {
                let prev = &row[k as usize];
                let need = prev.len() + k as usize;
                if poly.len() < need {
                    poly.resize(need, C::zero());
                }
                for (e, c) in prev.iter().enumerate() {
                    let slot = &mut poly[e + k as usize];
                    *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
                }
            }
            next.push(poly);
        }
        row = next;
    }
    let shift = -r * (n - r);
    Laurent::from_terms(
        row[r as usize]
            .iter()
            .enumerate()
            .map(|(e, c)| (2 * e as i64 + shift, c.clone())),
    )
}

impl<C: Coefficient> fmt::Display for Laurent<C> {
    /// `1 + t^2`, `t^-1 + t`, `-2t^3`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.iter() {
            let negative = *c < C::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = abs.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{abs}t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{abs}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl<C: Coefficient> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Self) -> Laurent<C> {
        self.checked_add(rhs).expect("coefficient overflow")
    }
}

impl<C: Coefficient> Add for Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Self) -> Laurent<C> {
        &self + &rhs
    }
}

impl<C: Coefficient> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Laurent<C> {
        self.checked_sub(rhs).expect("coefficient overflow")
    }
}

impl<C: Coefficient> Sub for Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Laurent<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        self.checked_mul(rhs).expect("coefficient overflow")
    }
}

impl<C: Coefficient> Mul for Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        self.checked_neg().expect("coefficient overflow")
    }
}

impl<C: Coefficient> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}
