//! Tableaux sums for type `D_n`: vector columns over the alphabet
//! `1 < ... < n-1 < {n, n̄} < n-1̄ < ... < 1̄` and half-width spin columns.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::char_engine::{factors_of, order_factors, validate_order, FundamentalSpec};
use crate::error::{Error, Result};
use crate::root_data::{DynkinDiagram, Node, WeightVector};
use crate::scalar::Coefficient;
use crate::tableaux_a::Odometer;
use crate::yalgebra::{pairing_d, weight_of, Character, DrinfeldData, Laurent, SpectralParam, YMonomial};

/// A letter `i` or `ī` of the type D alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DLetter {
    value: usize,
    bar: bool,
}

impl DLetter {
    pub fn plain(i: usize) -> Self {
        Self { value: i, bar: false }
    }

    pub fn barred(i: usize) -> Self {
        Self { value: i, bar: true }
    }

    pub fn value(&self) -> usize {
        self.value
    }

    pub fn is_barred(&self) -> bool {
        self.bar
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.value == 0 || self.value > n {
            return Err(Error::OutOfRange(format!("letter {self} for D_{n}")));
        }
        Ok(())
    }

    // position in the chain; n and n̄ get n and n+1 but are incomparable
    fn key(&self, n: usize) -> usize {
        if self.bar {
            2 * n + 1 - self.value
        } else {
            self.value
        }
    }

    fn comparable(&self, other: &Self, n: usize) -> bool {
        !(self.value == n && other.value == n && self.bar != other.bar)
    }

    /// `self ≺ other`.
    pub fn precedes(&self, other: &Self, n: usize) -> bool {
        self.comparable(other, n) && self.key(n) < other.key(n)
    }

    /// `self ⪯ other`.
    pub fn precedes_eq(&self, other: &Self, n: usize) -> bool {
        self == other || self.precedes(other, n)
    }

    /// Every letter of `B`, in chain order with `n` before `n̄`.
    pub fn alphabet(n: usize) -> Vec<Self> {
        (1..=n).map(Self::plain).chain((1..=n).rev().map(Self::barred)).collect()
    }
}

impl fmt::Display for DLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bar {
            write!(f, "{}\u{0304}", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

fn y(node: Node, a: &SpectralParam, k: i64, e: i64) -> YMonomial {
    if node == 0 {
        YMonomial::one()
    } else {
        YMonomial::y_pow(node, &a.shift(k), e)
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::InvalidDiagram("D_n needs n >= 4".into()));
    }
    Ok(())
}

/// The full-width box of a letter at `a`.
pub fn box_monomial_d(n: usize, letter: DLetter, a: &SpectralParam) -> Result<YMonomial> {
    check_rank(n)?;
    letter.check(n)?;
    let (i, ni) = (letter.value, letter.value as i64);
    let nn = n as i64;
    Ok(match (letter.bar, i) {
        (false, i) if i + 2 <= n => y(i - 1, a, ni, -1).mul(&y(i, a, ni - 1, 1)),
        (false, i) if i + 1 == n => y(n - 2, a, nn - 1, -1)
            .mul(&y(n - 1, a, nn - 2, 1))
            .mul(&y(n, a, nn - 2, 1)),
        (false, _) => y(n - 1, a, nn, -1).mul(&y(n, a, nn - 2, 1)),
        (true, i) if i == n => y(n - 1, a, nn - 2, 1).mul(&y(n, a, nn, -1)),
        (true, i) if i + 1 == n => y(n - 2, a, nn - 1, 1)
            .mul(&y(n - 1, a, nn, -1))
            .mul(&y(n, a, nn, -1)),
        (true, i) => y(i - 1, a, 2 * nn - 2 - ni, 1).mul(&y(i, a, 2 * nn - 1 - ni, -1)),
    })
}

/// The half-width box of a letter at `a`, used by spin columns.
pub fn half_box_monomial_d(n: usize, letter: DLetter, a: &SpectralParam) -> Result<YMonomial> {
    check_rank(n)?;
    letter.check(n)?;
    let (i, ni) = (letter.value, letter.value as i64);
    let nn = n as i64;
    Ok(match (letter.bar, i) {
        (false, i) if i + 2 <= n => y(i - 1, a, ni - 1, -1).mul(&y(i, a, ni - 2, 1)),
        (false, i) if i + 1 == n => y(n - 2, a, nn - 2, -1),
        (false, _) => y(n, a, nn - 1, 1),
        (true, i) if i == n => y(n - 1, a, nn - 1, 1),
        (true, i) if i + 1 == n => y(n - 1, a, nn + 1, -1).mul(&y(n, a, nn + 1, -1)),
        (true, _) => YMonomial::one(),
    })
}

fn row_param(center: &SpectralParam, len: usize, p: usize) -> SpectralParam {
    center.shift(len as i64 + 1 - 2 * p as i64)
}

fn entry_index(center: &SpectralParam, len: usize, b: &SpectralParam) -> Option<usize> {
    if b.base != center.base {
        return None;
    }
    let offset = len as i64 + 1 - (b.qexp - center.qexp);
    if offset % 2 != 0 || offset < 2 || offset / 2 > len as i64 {
        return None;
    }
    Some((offset / 2 - 1) as usize)
}

// the entry in 1-based row p, if p is a row of the column
fn row(entries: &[DLetter], p: i64) -> Option<DLetter> {
    if p < 1 {
        return None;
    }
    entries.get(p as usize - 1).copied()
}

fn half(x: i64) -> Option<i64> {
    (x % 2 == 0).then_some(x / 2)
}

/// A vector column: entries `i_1 ⋡ i_2 ⋡ ... ⋡ i_N`, entry `p` at `aq^{N+1-2p}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DColumn {
    rank: usize,
    entries: Vec<DLetter>,
    center: SpectralParam,
}

impl DColumn {
    /// Lengths up to `n` are accepted so padding columns can be represented.
    pub fn new(n: usize, entries: Vec<DLetter>, center: SpectralParam) -> Result<Self> {
        check_rank(n)?;
        if entries.is_empty() || entries.len() > n {
            return Err(Error::OutOfRange(format!("column length {} for D_{n}", entries.len())));
        }
        for l in &entries {
            l.check(n)?;
        }
        Ok(Self {
            rank: n,
            entries,
            center,
        })
    }

    /// `1, 2, ..., N` at `a`.
    pub fn initial(n: usize, len: usize, center: SpectralParam) -> Result<Self> {
        Self::new(n, (1..=len).map(DLetter::plain).collect(), center)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[DLetter] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn center(&self) -> &SpectralParam {
        &self.center
    }

    pub fn param_of_row(&self, p: usize) -> SpectralParam {
        row_param(&self.center, self.len(), p)
    }

    pub fn entry_at(&self, b: &SpectralParam) -> Option<DLetter> {
        entry_index(&self.center, self.len(), b).map(|k| self.entries[k])
    }

    /// `i_p ⋡ i_{p+1}` for every consecutive pair.
    pub fn is_admissible(&self) -> bool {
        self.entries
            .windows(2)
            .all(|w| !w[1].precedes_eq(&w[0], self.rank))
    }

    pub fn monomial(&self) -> YMonomial {
        self.entries.iter().enumerate().fold(YMonomial::one(), |m, (k, &l)| {
            m.mul(&box_monomial_d(self.rank, l, &self.param_of_row(k + 1)).expect("validated letter"))
        })
    }

    /// The monomial of `1, ..., N` at the same center (`Y_{N,a}` for `N <= n-2`).
    pub fn highest(&self) -> YMonomial {
        Self::initial(self.rank, self.len(), self.center.clone())
            .expect("same length")
            .monomial()
    }

    /// `#{p | i_p = i, i_{p+n-1-i} = ī, 1 <= i <= n-2}`.
    pub fn l_degree(&self) -> usize {
        let n = self.rank;
        self.entries
            .iter()
            .enumerate()
            .filter(|(k, l)| {
                !l.bar
                    && l.value + 2 <= n
                    && self.entries.get(k + n - 1 - l.value) == Some(&DLetter::barred(l.value))
            })
            .count()
    }

    // p(i,s) and p'(i,s)
    fn row_indices(&self, i: Node, s: i64) -> (Option<i64>, Option<i64>) {
        let (nn, ni, len) = (self.rank as i64, i as i64, self.len() as i64);
        if i == self.rank {
            (half(len + nn - 1 - s), half(len + nn + 1 - s))
        } else {
            (half(len + ni - s), half(len - 2 + 2 * nn - ni - s))
        }
    }

    fn is(&self, p: Option<i64>, shift: i64, l: DLetter) -> i64 {
        p.and_then(|p| row(&self.entries, p + shift)).map_or(0, |x| (x == l) as i64)
    }

    /// `u_{i,aq^s}(m_T)` by the closed row formula.
    pub fn closed_u(&self, i: Node, s: i64) -> i64 {
        let n = self.rank;
        if i == 0 || i > n {
            return 0;
        }
        let (p, pp) = self.row_indices(i, s);
        if i < n {
            self.is(p, 0, DLetter::plain(i)) - self.is(p, 1, DLetter::plain(i + 1)) + self.is(pp, 0, DLetter::barred(i + 1))
                - self.is(pp, 1, DLetter::barred(i))
        } else {
            self.is(p, 0, DLetter::plain(n - 1)) + self.is(p, 0, DLetter::plain(n))
                - self.is(pp, 0, DLetter::barred(n))
                - self.is(pp, 0, DLetter::barred(n - 1))
        }
    }

    /// `v_{i,aq^{s+1}}(m_T, Y_{N,a})` by the closed row formula.
    pub fn closed_v(&self, i: Node, s: i64) -> i64 {
        let n = self.rank;
        if i == 0 || i > n {
            return 0;
        }
        let (p, pp) = self.row_indices(i, s);
        let at = |p: Option<i64>| p.and_then(|p| row(&self.entries, p));
        let above = |l: DLetter, p: Option<i64>| at(p).is_some_and(|x| l.precedes_eq(&x, n)) as i64;
        if i + 2 <= n {
            let first = match (p, at(p)) {
                (Some(p), Some(x)) => (p <= i as i64 && DLetter::plain(i).precedes(&x, n)) as i64,
                _ => 0,
            };
            first + above(DLetter::barred(i), pp)
        } else if i + 1 == n {
            above(DLetter::plain(n), p)
        } else {
            above(DLetter::barred(n), p)
        }
    }
}

impl fmt::Display for DColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.entries.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]_{}", e.join(","), self.center)
    }
}

/// All vector columns of length `1 <= N <= n-2` at center `a`.
pub fn enumerate_fundamental_columns_d(n: usize, len: usize, a: &SpectralParam) -> Result<Vec<DColumn>> {
    check_rank(n)?;
    if len == 0 || len + 2 > n {
        return Err(Error::OutOfRange(format!("N = {len} for D_{n}; spin nodes use spin columns")));
    }
    let alphabet = DLetter::alphabet(n);
    let mut out = Vec::new();
    let mut cur: Vec<DLetter> = Vec::with_capacity(len);
    fn go(n: usize, len: usize, alphabet: &[DLetter], cur: &mut Vec<DLetter>, out: &mut Vec<Vec<DLetter>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for &l in alphabet {
            if cur.last().is_some_and(|prev| l.precedes_eq(prev, n)) {
                continue;
            }
            cur.push(l);
            go(n, len, alphabet, cur, out);
            cur.pop();
        }
    }
    go(n, len, &alphabet, &mut cur, &mut out);
    Ok(out
        .into_iter()
        .map(|e| DColumn::new(n, e, a.clone()).expect("valid letters"))
        .collect())
}

/// `sum_{T in B(Lambda_N)_a} t^{2 l(T)} m_T`.
pub fn fundamental_char_tableaux_d<C: Coefficient>(n: usize, len: usize, a: &SpectralParam) -> Result<Character<C>> {
    let mut out = Character::zero();
    for c in enumerate_fundamental_columns_d(n, len, a)? {
        out.add_term(c.monomial(), &Laurent::t_pow(2 * c.l_degree() as i64))?;
    }
    Ok(out)
}

/// Which spin representation a spin column belongs to: `Plus` for
/// `Lambda_n`, `Minus` for `Lambda_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chirality {
    Plus,
    Minus,
}

impl Chirality {
    pub fn node(&self, n: usize) -> Node {
        match self {
            Chirality::Plus => n,
            Chirality::Minus => n - 1,
        }
    }

    pub fn of_node(n: usize, node: Node) -> Option<Self> {
        match node {
            x if x == n => Some(Chirality::Plus),
            x if x + 1 == n => Some(Chirality::Minus),
            _ => None,
        }
    }

    pub fn sign(&self) -> char {
        match self {
            Chirality::Plus => '+',
            Chirality::Minus => '-',
        }
    }
}

/// A spin column: `i_1 ≺ ... ≺ i_n` with exactly one of `i`, `ī` for
/// each `i`, entry `p` at `aq^{n+1-2p}`, built from half-width boxes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinColumn {
    rank: usize,
    entries: Vec<DLetter>,
    center: SpectralParam,
}

impl SpinColumn {
    pub fn new(n: usize, entries: Vec<DLetter>, center: SpectralParam) -> Result<Self> {
        check_rank(n)?;
        if entries.len() != n {
            return Err(Error::OutOfRange(format!("spin column needs {n} entries")));
        }
        for l in &entries {
            l.check(n)?;
        }
        if !entries.windows(2).all(|w| w[0].precedes(&w[1], n)) {
            return Err(Error::OutOfRange("spin column entries must increase".into()));
        }
        let mut seen = vec![false; n + 1];
        for l in &entries {
            if std::mem::replace(&mut seen[l.value], true) {
                return Err(Error::OutOfRange(format!("{} and its bar both occur", l.value)));
            }
        }
        Ok(Self {
            rank: n,
            entries,
            center,
        })
    }

    /// The column of `barred` indices, in chain order.
    pub fn from_barred_set(n: usize, barred: &[usize], center: SpectralParam) -> Result<Self> {
        let entries = (1..=n)
            .filter(|i| !barred.contains(i))
            .map(DLetter::plain)
            .chain((1..=n).rev().filter(|i| barred.contains(i)).map(DLetter::barred))
            .collect();
        Self::new(n, entries, center)
    }

    pub fn highest_column(n: usize, chirality: Chirality, center: SpectralParam) -> Result<Self> {
        match chirality {
            Chirality::Plus => Self::from_barred_set(n, &[], center),
            Chirality::Minus => Self::from_barred_set(n, &[n], center),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[DLetter] {
        &self.entries
    }

    pub fn center(&self) -> &SpectralParam {
        &self.center
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn param_of_row(&self, p: usize) -> SpectralParam {
        row_param(&self.center, self.len(), p)
    }

    pub fn entry_at(&self, b: &SpectralParam) -> Option<DLetter> {
        entry_index(&self.center, self.len(), b).map(|k| self.entries[k])
    }

    /// Barred indices in increasing order.
    pub fn barred_positions(&self) -> Vec<usize> {
        let mut xs: Vec<usize> = self.entries.iter().filter(|l| l.bar).map(|l| l.value).collect();
        xs.sort_unstable();
        xs
    }

    /// `Plus` iff an even number of letters is barred; equivalently `n - p`
    /// is even when `i_p = n` and odd when `i_p = n̄`.
    pub fn chirality(&self) -> Chirality {
        if self.barred_positions().len() % 2 == 0 {
            Chirality::Plus
        } else {
            Chirality::Minus
        }
    }

    pub fn monomial(&self) -> YMonomial {
        self.entries.iter().enumerate().fold(YMonomial::one(), |m, (k, &l)| {
            m.mul(&half_box_monomial_d(self.rank, l, &self.param_of_row(k + 1)).expect("validated letter"))
        })
    }

    /// `Y_{n,a}` or `Y_{n-1,a}`.
    pub fn highest(&self) -> YMonomial {
        YMonomial::y(self.chirality().node(self.rank), &self.center)
    }

    /// `u_{i,aq^s}(m_T)`: for `i <= n-2`, `(i_p = i) - (i_{p+1} = i+1)` at
    /// `s = n-2p+i-1`; for `i = n-1`, `(i_p = n̄) - (i_{p+1} = n-1̄)` at
    /// `s = 2n-2p`; for `i = n`, `(i_p = n) - (i_{p+1} = n-1̄)` at `s = 2n-2p`.
    pub fn closed_u(&self, i: Node, s: i64) -> i64 {
        let n = self.rank;
        let nn = n as i64;
        let is = |p: i64, l: DLetter| row(&self.entries, p).map_or(0, |x| (x == l) as i64);
        if i == 0 || i > n {
            return 0;
        }
        if i + 2 <= n {
            return half(nn + i as i64 - 1 - s)
                .map_or(0, |p| is(p, DLetter::plain(i)) - is(p + 1, DLetter::plain(i + 1)));
        }
        let top = if i == n { DLetter::plain(n) } else { DLetter::barred(n) };
        half(2 * nn - s).map_or(0, |p| is(p, top) - is(p + 1, DLetter::barred(n - 1)))
    }

    /// `v_{i,aq^s}(m_T, m_P)`. With barred indices `x_0 < x_1 < ...` and
    /// `c = 0` (plus) or `1` (minus): for `i <= n-2` it is `(x_k <= i)` at
    /// `s = n-i+2k`; for `i = n-1` it is `(k != c mod 2, x_k <= n-1)` at
    /// `s = 1+2k`; for `i = n` it is `(k = c mod 2, k+1 < #barred)` at
    /// `s = 1+2k`.
    pub fn closed_v(&self, i: Node, s: i64) -> i64 {
        let n = self.rank;
        if i == 0 || i > n {
            return 0;
        }
        let xs = self.barred_positions();
        let c = (self.chirality() == Chirality::Minus) as i64;
        let base = if i + 2 <= n { (n - i) as i64 } else { 1 };
        let k = match half(s - base) {
            Some(k) if k >= 0 && (k as usize) < xs.len() => k,
            _ => return 0,
        };
        let xk = xs[k as usize];
        let hit = if i + 2 <= n {
            xk <= i
        } else if i + 1 == n {
            k % 2 != c && xk < n
        } else {
            k % 2 == c && (k as usize) + 1 < xs.len()
        };
        hit as i64
    }
}

impl fmt::Display for SpinColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.entries.iter().map(|l| l.to_string()).collect();
        write!(f, "<{}>{}_{}", e.join(","), self.chirality().sign(), self.center)
    }
}

/// All `2^{n-1}` spin columns of one chirality.
pub fn enumerate_spin(n: usize, a: &SpectralParam, chirality: Chirality) -> Result<Vec<SpinColumn>> {
    check_rank(n)?;
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0u64..(1 << n) {
        if (mask.count_ones() % 2 == 0) != (chirality == Chirality::Plus) {
            continue;
        }
        let barred: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        out.push(SpinColumn::from_barred_set(n, &barred, a.clone())?);
    }
    out.sort();
    Ok(out)
}

/// `sum m_T` over the spin columns of one chirality.
pub fn spin_char<C: Coefficient>(n: usize, a: &SpectralParam, chirality: Chirality) -> Result<Character<C>> {
    let mut out = Character::zero();
    for c in enumerate_spin(n, a, chirality)? {
        out.add_term(c.monomial(), &Laurent::one())?;
    }
    Ok(out)
}

/// A column of a type D tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DCol {
    Vector(DColumn),
    Spin(SpinColumn),
}

impl DCol {
    pub fn rank(&self) -> usize {
        match self {
            DCol::Vector(c) => c.rank,
            DCol::Spin(c) => c.rank,
        }
    }

    pub fn entries(&self) -> &[DLetter] {
        match self {
            DCol::Vector(c) => &c.entries,
            DCol::Spin(c) => &c.entries,
        }
    }

    pub fn center(&self) -> &SpectralParam {
        match self {
            DCol::Vector(c) => &c.center,
            DCol::Spin(c) => &c.center,
        }
    }

    pub fn len(&self) -> usize {
        self.entries().len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries().is_empty()
    }

    pub fn param_of_row(&self, p: usize) -> SpectralParam {
        row_param(self.center(), self.len(), p)
    }

    pub fn entry_at(&self, b: &SpectralParam) -> Option<DLetter> {
        entry_index(self.center(), self.len(), b).map(|k| self.entries()[k])
    }

    pub fn monomial(&self) -> YMonomial {
        match self {
            DCol::Vector(c) => c.monomial(),
            DCol::Spin(c) => c.monomial(),
        }
    }

    pub fn highest(&self) -> YMonomial {
        match self {
            DCol::Vector(c) => c.highest(),
            DCol::Spin(c) => c.highest(),
        }
    }

    pub fn l_degree(&self) -> usize {
        match self {
            DCol::Vector(c) => c.l_degree(),
            DCol::Spin(_) => 0,
        }
    }

    fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries()
            .iter()
            .map(|l| json!({"value": l.value, "bar": l.bar}))
            .collect();
        let mut v = json!({
            "kind": if matches!(self, DCol::Spin(_)) { "spin" } else { "vector" },
            "entries": entries,
            "base": self.center().base.as_str(),
            "qexp": self.center().qexp,
        });
        if let DCol::Spin(s) = self {
            v["chirality"] = json!(s.chirality().sign().to_string());
        }
        v
    }
}

impl fmt::Display for DCol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DCol::Vector(c) => c.fmt(f),
            DCol::Spin(c) => c.fmt(f),
        }
    }
}

/// `d(m_{T_alpha}, m_{P^alpha}; m_{T_beta}, m_{P^beta})` from the generic
/// pairing.
pub fn d_columns_d(ta: &DCol, tb: &DCol) -> Result<i64> {
    let d = DynkinDiagram::type_d(ta.rank())?;
    pairing_d(&ta.monomial(), &ta.highest(), &tb.monomial(), &tb.highest(), &d)
}

/// A sequence of vector and spin columns.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DTableau {
    columns: Vec<DCol>,
}

impl DTableau {
    pub fn new(columns: Vec<DCol>) -> Self {
        Self { columns }
    }

    pub fn from_vectors(columns: Vec<DColumn>) -> Self {
        Self::new(columns.into_iter().map(DCol::Vector).collect())
    }

    pub fn columns(&self) -> &[DCol] {
        &self.columns
    }

    pub fn monomial(&self) -> YMonomial {
        self.columns.iter().fold(YMonomial::one(), |m, c| m.mul(&c.monomial()))
    }

    pub fn l_degree(&self) -> usize {
        self.columns.iter().map(|c| c.l_degree()).sum()
    }

    /// `d(T) = sum_{alpha < beta} d(T_alpha, T_beta)`.
    pub fn d(&self) -> Result<i64> {
        let mut total = 0;
        for (x, a) in self.columns.iter().enumerate() {
            for b in &self.columns[x + 1..] {
                total += d_columns_d(a, b)?;
            }
        }
        Ok(total)
    }

    /// The exponent `2 d(T) + 2 l(T)` of `t`.
    pub fn t_degree(&self) -> Result<i64> {
        Ok(2 * self.d()? + 2 * self.l_degree() as i64)
    }

    /// Letter counts per row; spin columns are counted with their own rows.
    pub fn box_counts(&self) -> BTreeMap<(SpectralParam, DLetter), i64> {
        let mut out = BTreeMap::new();
        for c in &self.columns {
            for (k, &l) in c.entries().iter().enumerate() {
                *out.entry((c.param_of_row(k + 1), l)).or_insert(0) += 1;
            }
        }
        out
    }

    /// Rows top to bottom, columns left to right; spin entries are shown as
    /// `<x>`.
    pub fn render_text(&self) -> String {
        if self.columns.is_empty() {
            return "(empty)\n".into();
        }
        let mut rows: Vec<SpectralParam> = self
            .columns
            .iter()
            .flat_map(|c| (1..=c.len()).map(move |p| c.param_of_row(p)))
            .collect();
        rows.sort_by(|x, y| x.base.cmp(&y.base).then(y.qexp.cmp(&x.qexp)));
        rows.dedup();
        let cell = |c: &DCol, l: DLetter| match c {
            DCol::Vector(_) => l.to_string(),
            DCol::Spin(_) => format!("<{l}>"),
        };
        let width = |s: &str| s.chars().filter(|&ch| ch != '\u{0304}').count();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .map(|c| c.entries().iter().map(|&l| width(&cell(c, l))).max().unwrap_or(1))
            .collect();
        let mut s = String::new();
        for r in &rows {
            let cells: Vec<String> = self
                .columns
                .iter()
                .zip(&widths)
                .map(|(c, &w)| match c.entry_at(r) {
                    None => " ".repeat(w),
                    Some(l) => {
                        let txt = cell(c, l);
                        format!("{}{txt}", " ".repeat(w - width(&txt)))
                    }
                })
                .collect();
            s.push_str(cells.join(" ").trim_end());
            s.push('\n');
        }
        let last = self.columns.last().expect("nonempty");
        s.push_str(&format!("_{}\n", last.param_of_row(last.len())));
        s
    }

    pub fn to_json(&self) -> Value {
        json!({ "columns": self.columns.iter().map(|c| c.to_json()).collect::<Vec<_>>() })
    }
}

impl fmt::Display for DTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", cols.join(" "))
    }
}

/// The columns a fundamental factor can take.
pub fn columns_for_factor(n: usize, f: &FundamentalSpec) -> Result<Vec<DCol>> {
    check_rank(n)?;
    if f.node == 0 || f.node > n {
        return Err(Error::UnknownNode(f.node));
    }
    Ok(match Chirality::of_node(n, f.node) {
        Some(ch) => enumerate_spin(n, &f.param, ch)?.into_iter().map(DCol::Spin).collect(),
        None => enumerate_fundamental_columns_d(n, f.node, &f.param)?
            .into_iter()
            .map(DCol::Vector)
            .collect(),
    })
}

/// `sum_{T in B(P)} t^{2 d(T) + 2 l(T)} m_T`, columns in ascending spectral
/// order of the factors of `P`.
pub fn standard_char_tableaux_d<C: Coefficient>(n: usize, p: &DrinfeldData) -> Result<Character<C>> {
    let order = order_factors(&factors_of(p))?;
    standard_char_tableaux_d_ordered(n, &order)
}

/// The tableaux sum for factors in the given order.
pub fn standard_char_tableaux_d_ordered<C: Coefficient>(n: usize, fs: &[FundamentalSpec]) -> Result<Character<C>> {
    let d = DynkinDiagram::type_d(n)?;
    validate_order(fs)?;
    let choices: Vec<Vec<DCol>> = fs.iter().map(|f| columns_for_factor(n, f)).collect::<Result<_>>()?;
    let monomials: Vec<Vec<YMonomial>> = choices.iter().map(|cs| cs.iter().map(|c| c.monomial()).collect()).collect();
    let highest: Vec<YMonomial> = choices.iter().map(|cs| cs[0].highest()).collect();
    let ls: Vec<Vec<i64>> = choices
        .iter()
        .map(|cs| cs.iter().map(|c| c.l_degree() as i64).collect())
        .collect();
    let mut dtab: BTreeMap<(usize, usize), Vec<Vec<i64>>> = BTreeMap::new();
    for x in 0..fs.len() {
        for y in x + 1..fs.len() {
            let mut table = Vec::with_capacity(choices[x].len());
            for ma in &monomials[x] {
                let row = monomials[y]
                    .iter()
                    .map(|mb| pairing_d(ma, &highest[x], mb, &highest[y], &d))
                    .collect::<Result<Vec<_>>>()?;
                table.push(row);
            }
            dtab.insert((x, y), table);
        }
    }
    let mut out = Character::zero();
    for idx in Odometer::new(choices.iter().map(|c| c.len()).collect()) {
        let mut m = YMonomial::one();
        let mut deg = 0;
        for (x, &j) in idx.iter().enumerate() {
            m = m.mul(&monomials[x][j]);
            deg += ls[x][j];
            for (y, &k) in idx.iter().enumerate().skip(x + 1) {
                deg += dtab[&(x, y)][j][k];
            }
        }
        out.add_term(m, &Laurent::t_pow(2 * deg))?;
    }
    Ok(out)
}

/// The `t = 1`, spectral-parameter-free sum over vector columns with no
/// consecutive pair `(n̄, n)`.
pub fn restricted_character_d(n: usize, len: usize) -> Result<BTreeMap<WeightVector, i64>> {
    let (nbar, nplain) = (DLetter::barred(n), DLetter::plain(n));
    let mut out: BTreeMap<WeightVector, i64> = BTreeMap::new();
    for c in enumerate_fundamental_columns_d(n, len, &SpectralParam::q(0))? {
        if c.entries.windows(2).any(|w| w[0] == nbar && w[1] == nplain) {
            continue;
        }
        *out.entry(weight_of(&c.monomial())).or_insert(0) += 1;
    }
    Ok(out)
}

/// The columns `1..i` at `c` and `ī..1̄` at `cq^{2-2n}`, whose monomials
/// multiply to 1.
pub fn padding_pair(n: usize, i: usize, c: &SpectralParam) -> Result<(DColumn, DColumn)> {
    let lower = DColumn::new(n, (1..=i).rev().map(DLetter::barred).collect(), c.shift(2 - 2 * n as i64))?;
    Ok((DColumn::initial(n, i, c.clone())?, lower))
}

/// Same multiset of letters in every row.
pub fn is_equivalent_d(t: &DTableau, u: &DTableau) -> bool {
    t.box_counts() == u.box_counts()
}

/// Add padding pairs to either side until the tableaux become equivalent;
/// `None` exactly when the monomials differ. Vector columns only.
pub fn pad_pairs_equivalence_d(n: usize, t: &DTableau, u: &DTableau) -> Option<(DTableau, DTableau)> {
    if t.columns.iter().chain(&u.columns).any(|c| matches!(c, DCol::Spin(_))) {
        return None;
    }
    let mut diff = t.box_counts();
    for (k, c) in u.box_counts() {
        *diff.entry(k).or_insert(0) -= c;
    }
    // the pair (i, c) is the only remaining source of letter i at cq^{1-i}
    let mut pairs: Vec<(usize, SpectralParam, i64)> = Vec::new();
    for i in (1..=n).rev() {
        let hits: Vec<(SpectralParam, i64)> = diff
            .iter()
            .filter(|((_, l), c)| **c != 0 && *l == DLetter::plain(i))
            .map(|((b, _), c)| (b.clone(), *c))
            .collect();
        for (b, dc) in hits {
            let c = b.shift(i as i64 - 1);
            let (upper, lower) = padding_pair(n, i, &c).ok()?;
            for col in [&upper, &lower] {
                for (k, &l) in col.entries.iter().enumerate() {
                    *diff.entry((col.param_of_row(k + 1), l)).or_insert(0) -= dc;
                }
            }
            pairs.push((i, c, dc));
        }
    }
    if diff.values().any(|&c| c != 0) {
        return None;
    }
    let (mut tp, mut up) = (t.clone(), u.clone());
    for (i, c, dc) in pairs {
        let (upper, lower) = padding_pair(n, i, &c).ok()?;
        let target = if dc > 0 { &mut up } else { &mut tp };
        for _ in 0..dc.abs() {
            target.columns.push(DCol::Vector(upper.clone()));
            target.columns.push(DCol::Vector(lower.clone()));
        }
    }
    Some((tp, up))
}
