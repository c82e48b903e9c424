//! The monomials `A_{i,a}`, the partial order `m <= m'` and the exponents
//! `v_{i,a}(m, m')`, and the pairing `d(m1, mP1; m2, mP2)` entering twisted
//! products.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::root_data::{DynkinDiagram, Node};

use super::monomial::{Base, SpectralParam, Var, YMonomial};

/// `A_{i,a} = Y_{i,aq} Y_{i,aq^-1} prod_{j != i} Y_{j,a}^{c_ij}`.
pub fn a_monomial(d: &DynkinDiagram, i: Node, a: &SpectralParam) -> Result<YMonomial> {
    d.check_node(i)?;
    let mut factors = vec![(Var::new(i, &a.shift(1)), 1), (Var::new(i, &a.shift(-1)), 1)];
    factors.extend(d.neighbors(i).iter().map(|&j| (Var::new(j, a), -1)));
    Ok(YMonomial::from_exponents(factors))
}

/// The exponents `v_{i,a}(m, m')` with `m = m' prod A_{i,a}^{-v_{i,a}}`.
/// Only nonzero entries are stored; all of them are positive.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct VProfile(BTreeMap<Var, i64>);

impl VProfile {
    pub fn get(&self, node: Node, a: &SpectralParam) -> i64 {
        self.0.get(&Var::new(node, a)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, i64)> {
        self.0.iter().map(|(v, e)| (v, *e))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `sum_{i,a} v_{i,a}`, the number of `A^{-1}` factors.
    pub fn degree(&self) -> i64 {
        self.0.values().sum()
    }

    /// `prod A_{i,a}^{-v_{i,a}}`.
    pub fn to_monomial(&self, d: &DynkinDiagram) -> Result<YMonomial> {
        let mut out = YMonomial::one();
        for (v, e) in self.iter() {
            out = out.mul(&a_monomial(d, v.node, &v.param())?.pow(-e));
        }
        Ok(out)
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Node, SpectralParam, i64)>) -> Self {
        let mut map = BTreeMap::new();
        for (node, a, e) in entries {
            if e != 0 {
                *map.entry(Var::new(node, &a)).or_insert(0) += e;
            }
        }
        map.retain(|_, e| *e != 0);
        VProfile(map)
    }
}

/// Solve `m = m' prod A_{i,a}^{-v_{i,a}}` for `v`.
///
/// Each base is handled separately. With `delta = m / m'`, the exponent of
/// `Y_{i,q^s}` gives `delta_{i,s} = -v_{i,s-1} - v_{i,s+1} + sum_{j~i} v_{j,s}`.
/// Since `v` vanishes at and below the lowest exponent of `delta`, scanning
/// `s` upward determines `v_{., s+1}` from the rows below; the solution
/// exists iff the rows above the top of `delta` come out zero. It is an
/// element of the order iff every entry is nonnegative.
pub fn v_profile(m: &YMonomial, m_prime: &YMonomial, d: &DynkinDiagram) -> Result<VProfile> {
    let delta = m.div(m_prime);
    let not_comparable = || Error::NotComparable(m.to_string(), m_prime.to_string());
    let mut by_base: BTreeMap<Base, Vec<(i64, Node, i64)>> = BTreeMap::new();
    for (v, e) in delta.iter() {
        d.check_node(v.node)?;
        by_base.entry(v.base.clone()).or_default().push((v.qexp, v.node, e));
    }
    let n = d.rank();
    let mut out = BTreeMap::new();
    for (base, entries) in by_base {
        let smin = entries.iter().map(|e| e.0).min().expect("nonempty");
        let smax = entries.iter().map(|e| e.0).max().expect("nonempty");
        let width = (smax - smin) as usize;
        // rows[k] holds v_{., smin + k}; rows 0 and (width + 1) bracket the scan
        let mut delta_rows = vec![vec![0i64; n + 1]; width + 1];
        for (s, node, e) in entries {
            delta_rows[(s - smin) as usize][node] = e;
        }
        let mut rows = vec![vec![0i64; n + 1]; width + 2];
        for k in 0..=width {
            for i in 1..=n {
                let below = if k == 0 { 0 } else { rows[k - 1][i] };
                let side: i64 = d.neighbors(i).iter().map(|&j| rows[k][j]).sum();
                let next = side
                    .checked_sub(below)
                    .and_then(|x| x.checked_sub(delta_rows[k][i]))
                    .ok_or(Error::Overflow)?;
                rows[k + 1][i] = next;
            }
        }
        if rows[width].iter().chain(rows[width + 1].iter()).any(|&x| x != 0) {
            return Err(not_comparable());
        }
        for (k, row) in rows.iter().enumerate() {
            for (i, &x) in row.iter().enumerate().skip(1) {
                if x < 0 {
                    return Err(not_comparable());
                }
                if x > 0 {
                    let param = SpectralParam::new(base.clone(), smin + k as i64);
                    out.insert(Var::new(i, &param), x);
                }
            }
        }
    }
    Ok(VProfile(out))
}

/// `m <= m'`: `m / m'` is a product of nonnegative powers of `A_{i,a}^{-1}`.
pub fn leq(m: &YMonomial, m_prime: &YMonomial, d: &DynkinDiagram) -> bool {
    v_profile(m, m_prime, d).is_ok()
}

/// `d(m1, mP1; m2, mP2) = sum_{i,a} v_{i,aq}(m1, mP1) u_{i,a}(m2) + u_{i,aq}(mP1) v_{i,a}(m2, mP2)`.
pub fn pairing_d(
    m1: &YMonomial,
    mp1: &YMonomial,
    m2: &YMonomial,
    mp2: &YMonomial,
    d: &DynkinDiagram,
) -> Result<i64> {
    let v1 = v_profile(m1, mp1, d)?;
    let v2 = v_profile(m2, mp2, d)?;
    Ok(pairing_from_profiles(&v1, m2, mp1, &v2))
}

/// The pairing from precomputed profiles `v1 = v(m1, mP1)`, `v2 = v(m2, mP2)`.
pub(crate) fn pairing_from_profiles(
    v1: &VProfile,
    m2: &YMonomial,
    mp1: &YMonomial,
    v2: &VProfile,
) -> i64 {
    first_pairing_term(v1, m2) + second_pairing_term(mp1, v2)
}

/// `sum_{i,a} v_{i,aq}(m1, mP1) u_{i,a}(m2)`.
pub(crate) fn first_pairing_term(v1: &VProfile, m2: &YMonomial) -> i64 {
    v1.iter()
        .map(|(var, e)| e * m2.u(var.node, &var.param().shift(-1)))
        .sum()
}

/// `sum_{i,a} u_{i,aq}(mP1) v_{i,a}(m2, mP2)`.
pub(crate) fn second_pairing_term(mp1: &YMonomial, v2: &VProfile) -> i64 {
    v2.iter()
        .map(|(var, e)| e * mp1.u(var.node, &var.param().shift(1)))
        .sum()
}
