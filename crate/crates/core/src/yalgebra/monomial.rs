//! Spectral parameters and monomials in the variables `Y_{i,a}`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::root_data::Node;

/// An opaque symbol naming a class of spectral parameters `b q^Z`.
///
/// Two different bases are never related by a power of `q`. Base symbols are
/// ASCII identifiers (letters, digits, `_`) that start with a letter and do
/// not end in `q`, so that `aq^2` parses unambiguously.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Base(Arc<str>);

impl Base {
    pub fn new(symbol: &str) -> Result<Self> {
        let valid = symbol.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && symbol.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            && !symbol.ends_with('q');
        if valid {
            Ok(Base(Arc::from(symbol)))
        } else {
            Err(Error::Parse(format!("invalid base symbol {symbol:?}")))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Default for Base {
    fn default() -> Self {
        Base(Arc::from("a"))
    }
}

impl fmt::Debug for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The spectral parameter `base * q^qexp`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpectralParam {
    pub base: Base,
    pub qexp: i64,
}

impl SpectralParam {
    pub fn new(base: Base, qexp: i64) -> Self {
        Self { base, qexp }
    }

    /// `q^k` on the default base `a`.
    pub fn q(qexp: i64) -> Self {
        Self::new(Base::default(), qexp)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self::new(self.base.clone(), self.qexp + k)
    }
}

impl fmt::Display for SpectralParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.qexp {
            0 => write!(f, "{}", self.base),
            1 => write!(f, "{}q", self.base),
            k => write!(f, "{}q^{}", self.base, k),
        }
    }
}

impl fmt::Debug for SpectralParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The variable `Y_{node, base q^qexp}`. Ordered by (base, qexp, node), the
/// canonical order used for iteration and serialization.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub base: Base,
    pub qexp: i64,
    pub node: Node,
}

impl Var {
    pub fn new(node: Node, param: &SpectralParam) -> Self {
        Self {
            base: param.base.clone(),
            qexp: param.qexp,
            node,
        }
    }

    pub fn param(&self) -> SpectralParam {
        SpectralParam::new(self.base.clone(), self.qexp)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y_{{{},{}}}", self.node, self.param())
    }
}

/// A monomial `prod Y_{i,a}^{u_{i,a}}` with finitely many nonzero exponents.
///
/// Stored as a vector sorted by [`Var`] without zero exponents; the empty
/// vector is the unit monomial.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct YMonomial {
    exps: Vec<(Var, i64)>,
}

impl Ord for YMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl PartialOrd for YMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl YMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// `Y_{node, param}`.
    pub fn y(node: Node, param: &SpectralParam) -> Self {
        Self::y_pow(node, param, 1)
    }

    /// `Y_{node, param}^exp`.
    pub fn y_pow(node: Node, param: &SpectralParam, exp: i64) -> Self {
        Self::from_exponents([(Var::new(node, param), exp)])
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (Var, i64)>) -> Self {
        let mut exps: Vec<(Var, i64)> = pairs.into_iter().collect();
        exps.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Var, i64)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((last, acc)) if *last == v => *acc += e,
                _ => merged.push((v, e)),
            }
        }
        merged.retain(|(_, e)| *e != 0);
        Self { exps: merged }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Nonzero exponents in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Var, i64)> + Clone {
        self.exps.iter().map(|(v, e)| (v, *e))
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, var: &Var) -> i64 {
        self.exps
            .binary_search_by(|(v, _)| v.cmp(var))
            .map(|k| self.exps[k].1)
            .unwrap_or(0)
    }

    /// `u_{i,a}(m)`, the degree in `Y_{i,a}`.
    pub fn u(&self, node: Node, param: &SpectralParam) -> i64 {
        self.exponent(&Var::new(node, param))
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            let ord = match (self.exps.get(i), other.exps.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Less => {
                    out.push(self.exps[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (v, e) = &other.exps[j];
                    out.push((v.clone(), sign * e));
                    j += 1;
                }
                Ordering::Equal => {
                    let e = self.exps[i].1 + sign * other.exps[j].1;
                    if e != 0 {
                        out.push((self.exps[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self { exps: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    pub fn pow(&self, k: i64) -> Self {
        Self {
            exps: if k == 0 {
                Vec::new()
            } else {
                self.exps.iter().map(|(v, e)| (v.clone(), e * k)).collect()
            },
        }
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    /// Replace every base by `base` and multiply by `q^k`. Only meaningful
    /// for single-base monomials.
    pub fn relocate(&self, base: &Base, k: i64) -> Self {
        Self::from_exponents(self.exps.iter().map(|(v, e)| {
            (
                Var {
                    base: base.clone(),
                    qexp: v.qexp + k,
                    node: v.node,
                },
                *e,
            )
        }))
    }

    /// Multiply every spectral parameter by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            exps: self
                .exps
                .iter()
                .map(|(v, e)| {
                    (
                        Var {
                            base: v.base.clone(),
                            qexp: v.qexp + k,
                            node: v.node,
                        },
                        *e,
                    )
                })
                .collect(),
        }
    }

    pub fn is_i_dominant(&self, node: Node) -> bool {
        self.iter().all(|(v, e)| v.node != node || e >= 0)
    }

    pub fn is_l_dominant(&self) -> bool {
        self.iter().all(|(_, e)| e >= 0)
    }

    /// Distinct bases occurring, in order.
    pub fn bases(&self) -> Vec<Base> {
        let mut out: Vec<Base> = Vec::new();
        for (v, _) in self.iter() {
            if out.last() != Some(&v.base) {
                out.push(v.base.clone());
            }
        }
        out
    }

    /// Nodes occurring, sorted and deduplicated.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out: Vec<Node> = self.iter().map(|(v, _)| v.node).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Whether every variable at the largest `q`-exponent has a negative
    /// exponent. The monomial must be supported on `base` alone; the unit
    /// monomial is not right negative.
    pub fn is_right_negative(&self, base: &Base) -> Result<bool> {
        if self.iter().any(|(v, _)| &v.base != base) {
            return Err(Error::MixedBase(self.to_string()));
        }
        let Some(top) = self.iter().map(|(v, _)| v.qexp).max() else {
            return Ok(false);
        };
        Ok(self.iter().filter(|(v, _)| v.qexp == top).all(|(_, e)| e < 0))
    }
}

impl fmt::Display for YMonomial {
    /// `Y_{1,a}Y_{2,aq^3}^{-1}`, or `1` for the unit monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (v, e) in &self.exps {
            write!(f, "Y_{{{},{}}}", v.node, v.param())?;
            if *e != 1 {
                write!(f, "^{{{e}}}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SpectralParam {
    type Err = Error;

    /// Parses `a`, `aq`, `aq^3`, `aq^-1`, `aq^{-1}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let err = || Error::Parse(format!("invalid spectral parameter {s:?}"));
        let (base, qexp) = if let Some(pos) = s.find("q^") {
            let exp = s[pos + 2..].trim_start_matches('{').trim_end_matches('}');
            (&s[..pos], exp.parse::<i64>().map_err(|_| err())?)
        } else if let Some(stripped) = s.strip_suffix('q') {
            (stripped, 1)
        } else {
            (s, 0)
        };
        Ok(SpectralParam::new(Base::new(base).map_err(|_| err())?, qexp))
    }
}

impl FromStr for YMonomial {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) format; whitespace and `*`
    /// between factors are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if compact == "1" {
            return Ok(Self::one());
        }
        let err = |msg: &str| Error::Parse(format!("{msg} in monomial {s:?}"));
        let mut rest = compact.as_str();
        let mut factors = Vec::new();
        while !rest.is_empty() {
            rest = rest.strip_prefix("Y_{").ok_or_else(|| err("expected Y_{"))?;
            let close = rest.find('}').ok_or_else(|| err("unclosed subscript"))?;
            let inner = &rest[..close];
            // qexp braces nest one level: Y_{1,aq^{-1}}
            let (inner, close) = if inner.contains("^{") {
                let close2 = rest[close + 1..].find('}').ok_or_else(|| err("unclosed subscript"))?
                    + close
                    + 1;
                (&rest[..close2], close2)
            } else {
                (inner, close)
            };
            let (node, param) = inner.split_once(',').ok_or_else(|| err("expected node,param"))?;
            let node: Node = node.parse().map_err(|_| err("invalid node"))?;
            let param: SpectralParam = param.parse()?;
            rest = &rest[close + 1..];
            let mut exp = 1;
            if let Some(r) = rest.strip_prefix('^') {
                let (digits, after) = if let Some(r) = r.strip_prefix('{') {
                    let c = r.find('}').ok_or_else(|| err("unclosed exponent"))?;
                    (&r[..c], &r[c + 1..])
                } else {
                    let end = r
                        .char_indices()
                        .find(|(k, c)| !(c.is_ascii_digit() || (*k == 0 && *c == '-')))
                        .map(|(k, _)| k)
                        .unwrap_or(r.len());
                    (&r[..end], &r[end..])
                };
                exp = digits.parse().map_err(|_| err("invalid exponent"))?;
                rest = after;
            }
            factors.push((Var::new(node, &param), exp));
        }
        Ok(Self::from_exponents(factors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> YMonomial {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "1",
            "Y_{1,a}",
            "Y_{1,a}Y_{2,aq}",
            "Y_{2,aq}^{2}Y_{1,aq^2}^{-1}",
            "Y_{1,aq^-3}Y_{3,b}^{-2}",
        ] {
            assert_eq!(m(s).to_string(), s);
        }
        assert_eq!(m("Y_{1,aq^{-1}}^2"), YMonomial::y_pow(1, &SpectralParam::q(-1), 2));
        assert!("Y_{1,a".parse::<YMonomial>().is_err());
        assert!("X_{1,a}".parse::<YMonomial>().is_err());
    }

    #[test]
    fn base_validation() {
        assert!(Base::new("a").is_ok());
        assert!(Base::new("b2").is_ok());
        assert!(Base::new("aq").is_err());
        assert!(Base::new("").is_err());
        assert!(Base::new("1a").is_err());
    }

    #[test]
    fn u_exponents() {
        let x = m("Y_{1,a}Y_{2,aq}");
        assert_eq!(x.u(1, &SpectralParam::q(0)), 1);
        assert_eq!(x.u(2, &SpectralParam::q(0)), 0);
        let y = m("Y_{1,a}Y_{1,aq^2}Y_{2,aq^3}^{-1}");
        assert_eq!(y.u(2, &SpectralParam::q(3)), -1);
    }

    #[test]
    fn dominance() {
        assert!(m("Y_{1,a}Y_{2,aq}").is_l_dominant());
        let x = m("Y_{1,aq^2}^{-1}Y_{2,aq}^2");
        assert!(!x.is_i_dominant(1));
        assert!(x.is_i_dominant(2));
        assert!(YMonomial::one().is_l_dominant());
    }

    #[test]
    fn products_prune_zeros() {
        let x = m("Y_{1,a}Y_{2,aq}");
        assert!(x.div(&x).is_one());
        assert_eq!(x.mul(&x), m("Y_{1,a}^2Y_{2,aq}^2"));
        assert_eq!(x.shift(2), m("Y_{1,aq^2}Y_{2,aq^3}"));
    }

    #[test]
    fn right_negativity() {
        let a = Base::default();
        assert!(m("Y_{1,aq^2}^{-1}Y_{2,aq}").is_right_negative(&a).unwrap());
        assert!(!m("Y_{1,a}").is_right_negative(&a).unwrap());
        assert!(!YMonomial::one().is_right_negative(&a).unwrap());
        assert!(m("Y_{1,b}").is_right_negative(&a).is_err());
    }

    #[test]
    fn canonical_order_is_base_qexp_node() {
        let x = m("Y_{2,a}Y_{1,aq}Y_{1,b}");
        let order: Vec<_> = x.iter().map(|(v, _)| (v.base.to_string(), v.qexp, v.node)).collect();
        assert_eq!(
            order,
            vec![("a".into(), 0, 2), ("a".into(), 1, 1), ("b".into(), 0, 1)]
        );
    }
}
