//! Tableaux sums for type `A_n`.
//!
//! The box `i` at `b` is `Y_{i-1,bq^i}^{-1} Y_{i,bq^{i-1}}` (with
//! `Y_0 = Y_{n+1} = 1`). A column of length `N` and center `a` places its
//! `p`-th entry at `aq^{N+1-2p}`; its monomial is the product of its boxes.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::char_engine::{factors_of, order_factors, validate_order, FundamentalSpec};
use crate::error::{Error, Result};
use crate::root_data::Node;
use crate::scalar::Coefficient;
use crate::yalgebra::{pairing_d, Base, Character, DrinfeldData, Laurent, SpectralParam, VProfile, YMonomial};

/// `Y_{i-1,aq^i}^{-1} Y_{i,aq^{i-1}}` for `1 <= i <= n+1`.
pub fn box_monomial_a(n: usize, i: usize, a: &SpectralParam) -> Result<YMonomial> {
    if i == 0 || i > n + 1 {
        return Err(Error::OutOfRange(format!("box {i} for A_{n}")));
    }
    let mut out = YMonomial::one();
    if i >= 2 {
        out = out.div(&YMonomial::y(i - 1, &a.shift(i as i64)));
    }
    if i <= n {
        out = out.mul(&YMonomial::y(i, &a.shift(i as i64 - 1)));
    }
    Ok(out)
}

/// A column: entries `i_1, ..., i_N` at `aq^{N-1}, aq^{N-3}, ..., aq^{1-N}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AColumn {
    rank: usize,
    entries: Vec<usize>,
    center: SpectralParam,
}

impl AColumn {
    /// A column for `A_n`; lengths up to `n + 1` (the full column) are allowed.
    pub fn new(n: usize, entries: Vec<usize>, center: SpectralParam) -> Result<Self> {
        if entries.is_empty() || entries.len() > n + 1 {
            return Err(Error::OutOfRange(format!("column length {} for A_{n}", entries.len())));
        }
        if let Some(&bad) = entries.iter().find(|&&i| i == 0 || i > n + 1) {
            return Err(Error::OutOfRange(format!("entry {bad} for A_{n}")));
        }
        Ok(Self {
            rank: n,
            entries,
            center,
        })
    }

    /// The column `1, 2, ..., N` with monomial `Y_{N,a}` (the full column when
    /// `N = n + 1`).
    pub fn initial(n: usize, len: usize, center: SpectralParam) -> Result<Self> {
        Self::new(n, (1..=len).collect(), center)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[usize] {
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

    /// Spectral parameter of row `p` (1-based, top to bottom).
    pub fn param_of_row(&self, p: usize) -> SpectralParam {
        self.center.shift(self.len() as i64 + 1 - 2 * p as i64)
    }

    /// `T(b)`, with 0 off the support.
    pub fn entry_at(&self, b: &SpectralParam) -> usize {
        if b.base != self.center.base {
            return 0;
        }
        let offset = self.len() as i64 + 1 - (b.qexp - self.center.qexp);
        if offset % 2 != 0 || offset < 2 {
            return 0;
        }
        self.entries.get((offset / 2 - 1) as usize).copied().unwrap_or(0)
    }

    pub fn support(&self) -> Vec<SpectralParam> {
        (1..=self.len()).map(|p| self.param_of_row(p)).collect()
    }

    pub fn is_increasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] < w[1])
    }

    pub fn monomial(&self) -> YMonomial {
        let mut out = YMonomial::one();
        for (k, &i) in self.entries.iter().enumerate() {
            out = out.mul(&box_monomial_a(self.rank, i, &self.param_of_row(k + 1)).expect("validated entry"));
        }
        out
    }

    /// `Y_{N,a}`, the highest monomial of the column's fundamental module.
    pub fn highest(&self) -> YMonomial {
        if self.len() > self.rank {
            YMonomial::one()
        } else {
            YMonomial::y(self.len(), &self.center)
        }
    }

    /// `v(m_T, Y_{N,a})` in closed form: `A_{i,aq^{N+1-2p+i}}` with
    /// exponent 1 for `p <= i <= i_p - 1`.
    pub fn closed_v(&self) -> VProfile {
        let n = self.len() as i64;
        VProfile::from_entries(self.entries.iter().enumerate().flat_map(|(k, &ip)| {
            let p = k as i64 + 1;
            (p..ip as i64).map(move |i| (i as Node, self.center.shift(n + 1 - 2 * p + i), 1))
        }))
    }
}

impl fmt::Display for AColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.entries.iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]_{}", e.join(","), self.center)
    }
}

/// `s` with `a_alpha q^{N_alpha} / a_beta q^{N_beta} = q^{2s}`; `None`
/// stands for minus infinity.
pub fn s_offset(ta: &AColumn, tb: &AColumn) -> Option<i64> {
    if ta.center.base != tb.center.base {
        return None;
    }
    let diff = ta.center.qexp + ta.len() as i64 - tb.center.qexp - tb.len() as i64;
    (diff % 2 == 0).then_some(diff / 2)
}

/// The closed formula for `d(T_alpha, T_beta)`, where `T_a(bq^2)` is the
/// entry one row above `b`:
/// `sum_b (T_a(bq^2) < T_b(b) < T_a(b))
///  - (N_a < T_b(a_a q^{-1-N_a}) <= T_a(a_a q^{1-N_a}))
///  + (N_a - s < N_a < T_b(a_a q^{-1-N_a}))`.
pub fn d_columns_a(ta: &AColumn, tb: &AColumn) -> i64 {
    let mut d = 0;
    for b in tb.support() {
        let (lo, mid, hi) = (ta.entry_at(&b.shift(2)), tb.entry_at(&b), ta.entry_at(&b));
        if lo < mid && mid < hi {
            d += 1;
        }
    }
    let na = ta.len();
    let below = tb.entry_at(&ta.center.shift(-1 - na as i64));
    let bottom = ta.entry_at(&ta.center.shift(1 - na as i64));
    if na < below && below <= bottom {
        d -= 1;
    }
    if matches!(s_offset(ta, tb), Some(s) if s > 0) && na < below {
        d += 1;
    }
    d
}

/// `d(m_{T_alpha}, Y_{N_alpha,a_alpha}; m_{T_beta}, Y_{N_beta,a_beta})` from
/// the generic pairing.
pub fn d_columns_via_pairing(ta: &AColumn, tb: &AColumn) -> Result<i64> {
    let d = crate::root_data::DynkinDiagram::type_a(ta.rank)?;
    pairing_d(&ta.monomial(), &ta.highest(), &tb.monomial(), &tb.highest(), &d)
}

/// All strictly increasing columns of length `N` at center `a`.
pub fn enumerate_fundamental_columns_a(n: usize, len: usize, a: &SpectralParam) -> Result<Vec<AColumn>> {
    if len == 0 || len > n {
        return Err(Error::OutOfRange(format!("N = {len} for A_{n}")));
    }
    Ok(increasing_sequences(n + 1, len)
        .into_iter()
        .map(|e| AColumn::new(n, e, a.clone()).expect("entries in range"))
        .collect())
}

/// Strictly increasing sequences of length `len` in `1..=top`, in
/// lexicographic order.
pub(crate) fn increasing_sequences(top: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(start: usize, top: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..=top {
            if top - i + 1 < len - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, top, len, cur, out);
            cur.pop();
        }
    }
    go(1, top, len, &mut cur, &mut out);
    out
}

/// `sum_{T in B(Lambda_N)_a} m_T`.
pub fn fundamental_char_tableaux_a<C: Coefficient>(n: usize, len: usize, a: &SpectralParam) -> Result<Character<C>> {
    let mut out = Character::zero();
    for col in enumerate_fundamental_columns_a(n, len, a)? {
        out.add_term(col.monomial(), &Laurent::one())?;
    }
    Ok(out)
}

/// A sequence of columns.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ATableau {
    columns: Vec<AColumn>,
}

impl ATableau {
    pub fn new(columns: Vec<AColumn>) -> Self {
        Self { columns }
    }

    pub fn columns(&self) -> &[AColumn] {
        &self.columns
    }

    pub fn shape(&self) -> Vec<(usize, SpectralParam)> {
        self.columns.iter().map(|c| (c.len(), c.center.clone())).collect()
    }

    pub fn monomial(&self) -> YMonomial {
        self.columns.iter().fold(YMonomial::one(), |m, c| m.mul(&c.monomial()))
    }

    /// `d(T) = sum_{alpha < beta} d(T_alpha, T_beta)`.
    pub fn d(&self) -> i64 {
        let mut total = 0;
        for (x, a) in self.columns.iter().enumerate() {
            for b in &self.columns[x + 1..] {
                total += d_columns_a(a, b);
            }
        }
        total
    }

    pub fn is_column_increasing(&self) -> bool {
        self.columns.iter().all(|c| c.is_increasing())
    }

    /// `#{alpha | T_alpha(b) = i}` for every `(b, i)` that occurs.
    pub fn box_counts(&self) -> BTreeMap<(SpectralParam, usize), i64> {
        let mut out = BTreeMap::new();
        for c in &self.columns {
            for (k, &i) in c.entries.iter().enumerate() {
                *out.entry((c.param_of_row(k + 1), i)).or_insert(0) += 1;
            }
        }
        out
    }

    /// `m_T` from box counts: `prod Y_{i,a}^{#[i]_{aq^{1-i}} - #[i+1]_{aq^{-1-i}}}`.
    pub fn monomial_from_counts(&self) -> YMonomial {
        let mut out = YMonomial::one();
        for ((b, i), c) in self.box_counts() {
            let n = self.columns[0].rank;
            if i <= n {
                out = out.mul(&YMonomial::y_pow(i, &b.shift(i as i64 - 1), c));
            }
            if i >= 2 {
                out = out.mul(&YMonomial::y_pow(i - 1, &b.shift(i as i64), -c));
            }
        }
        out
    }

    /// Rows drawn top to bottom, columns left to right, rows matched by
    /// spectral parameter; the last line names the parameter of the bottom
    /// row of the last column.
    pub fn render_text(&self) -> String {
        if self.columns.is_empty() {
            return "(empty)\n".into();
        }
        let mut rows: Vec<SpectralParam> = self.columns.iter().flat_map(|c| c.support()).collect();
        rows.sort_by(|x, y| x.base.cmp(&y.base).then(y.qexp.cmp(&x.qexp)));
        rows.dedup();
        let width = self
            .columns
            .iter()
            .flat_map(|c| c.entries.iter())
            .map(|i| i.to_string().len())
            .max()
            .unwrap_or(1);
        let mut s = String::new();
        for r in &rows {
            let cells: Vec<String> = self
                .columns
                .iter()
                .map(|c| match c.entry_at(r) {
                    0 => " ".repeat(width),
                    i => format!("{i:>width$}"),
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
        json!({
            "columns": self.columns.iter().map(|c| json!({
                "entries": c.entries,
                "base": c.center.base.as_str(),
                "qexp": c.center.qexp,
            })).collect::<Vec<_>>()
        })
    }
}

impl fmt::Display for ATableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", cols.join(" "))
    }
}

/// Every column-increasing tableau of the given shape, streamed in
/// lexicographic order of the per-column choices.
pub fn enumerate_bp_a(n: usize, shape: &[(usize, SpectralParam)]) -> Result<impl Iterator<Item = ATableau>> {
    let choices: Vec<Vec<AColumn>> = shape
        .iter()
        .map(|(len, a)| enumerate_fundamental_columns_a(n, *len, a))
        .collect::<Result<_>>()?;
    Ok(Odometer::new(choices.iter().map(|c| c.len()).collect()).map(move |idx| {
        ATableau::new(idx.iter().enumerate().map(|(k, &j)| choices[k][j].clone()).collect())
    }))
}

/// Mixed-radix counter over a product of finite sets.
pub(crate) struct Odometer {
    radix: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Odometer {
    pub(crate) fn new(radix: Vec<usize>) -> Self {
        let next = if radix.iter().any(|&r| r == 0) {
            None
        } else {
            Some(vec![0; radix.len()])
        };
        Self { radix, next }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for k in (0..succ.len()).rev() {
            succ[k] += 1;
            if succ[k] < self.radix[k] {
                self.next = Some(succ);
                return Some(current);
            }
            succ[k] = 0;
        }
        Some(current)
    }
}

fn check_type_a_factors(n: usize, fs: &[FundamentalSpec]) -> Result<()> {
    for f in fs {
        if f.node == 0 || f.node > n {
            return Err(Error::UnknownNode(f.node));
        }
    }
    Ok(())
}

/// `sum_{T in B(P)} t^{2 d(T)} m_T`, with the columns in ascending spectral
/// order of the factors of `P`.
pub fn standard_char_tableaux_a<C: Coefficient>(n: usize, p: &DrinfeldData) -> Result<Character<C>> {
    let order = order_factors(&factors_of(p))?;
    standard_char_tableaux_a_ordered(n, &order)
}

/// The tableaux sum for factors in the given order.
pub fn standard_char_tableaux_a_ordered<C: Coefficient>(n: usize, fs: &[FundamentalSpec]) -> Result<Character<C>> {
    check_type_a_factors(n, fs)?;
    validate_order(fs)?;
    let choices: Vec<Vec<AColumn>> = fs
        .iter()
        .map(|f| enumerate_fundamental_columns_a(n, f.node, &f.param))
        .collect::<Result<_>>()?;
    let monomials: Vec<Vec<YMonomial>> = choices.iter().map(|cs| cs.iter().map(|c| c.monomial()).collect()).collect();
    // pairwise d tables, indexed [alpha][beta][choice_alpha][choice_beta]
    let mut dtab: BTreeMap<(usize, usize), Vec<Vec<i64>>> = BTreeMap::new();
    for x in 0..fs.len() {
        for y in x + 1..fs.len() {
            let table = choices[x]
                .iter()
                .map(|a| choices[y].iter().map(|b| d_columns_a(a, b)).collect())
                .collect();
            dtab.insert((x, y), table);
        }
    }
    let mut out = Character::zero();
    for idx in Odometer::new(choices.iter().map(|c| c.len()).collect()) {
        let mut m = YMonomial::one();
        let mut dt = 0;
        for (x, &j) in idx.iter().enumerate() {
            m = m.mul(&monomials[x][j]);
            for (y, &k) in idx.iter().enumerate().skip(x + 1) {
                dt += dtab[&(x, y)][j][k];
            }
        }
        out.add_term(m, &Laurent::t_pow(2 * dt))?;
    }
    Ok(out)
}

/// Same multiset of entries in every row.
pub fn is_equivalent(t: &ATableau, u: &ATableau) -> bool {
    t.box_counts() == u.box_counts()
}

/// Add full columns `1, ..., n+1` to either side until the two become
/// equivalent; `None` if that is impossible, which happens exactly when the
/// monomials differ.
pub fn pad_to_equivalent(n: usize, t: &ATableau, u: &ATableau) -> Option<(ATableau, ATableau)> {
    let mut diff: BTreeMap<(SpectralParam, usize), i64> = t.box_counts();
    for (k, c) in u.box_counts() {
        *diff.entry(k).or_insert(0) -= c;
    }
    diff.retain(|_, c| *c != 0);
    // box i at aq^{2n+2-2i} must carry the same excess d_a for every i
    let mut deficit: BTreeMap<SpectralParam, i64> = BTreeMap::new();
    for (b, i) in diff.keys() {
        deficit.entry(b.shift(2 * *i as i64 - 2 * n as i64 - 2)).or_insert(0);
    }
    for (a, da) in deficit.iter_mut() {
        let values: Vec<i64> = (1..=n + 1)
            .map(|i| diff.get(&(a.shift(2 * n as i64 + 2 - 2 * i as i64), i)).copied().unwrap_or(0))
            .collect();
        if values.iter().any(|v| *v != values[0]) {
            return None;
        }
        *da = values[0];
    }
    let (mut tp, mut up) = (t.clone(), u.clone());
    for (a, da) in deficit {
        let full = AColumn::initial(n, n + 1, a.shift(n as i64)).expect("full column");
        let target = if da > 0 { &mut up } else { &mut tp };
        for _ in 0..da.abs() {
            target.columns.push(full.clone());
        }
    }
    Some((tp, up))
}

/// For `m_T` l-dominant, a tableau with columns `1..i` only that is
/// equivalent to `T`.
pub fn ldominant_column_form(n: usize, t: &ATableau) -> Option<ATableau> {
    let m = t.monomial();
    if !m.is_l_dominant() {
        return None;
    }
    let mut cols = Vec::new();
    for (v, e) in m.iter() {
        for _ in 0..e {
            cols.push(AColumn::initial(n, v.node, v.param()).ok()?);
        }
    }
    let (tp, form) = pad_to_equivalent(n, t, &ATableau::new(cols))?;
    (tp == *t).then_some(form)
}

/// The base of every column, if it is shared.
pub fn common_base(t: &ATableau) -> Option<Base> {
    let first = t.columns.first()?.center.base.clone();
    t.columns.iter().all(|c| c.center.base == first).then_some(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yalgebra::v_profile;

    fn m(s: &str) -> YMonomial {
        s.parse().unwrap()
    }

    fn col(n: usize, e: &[usize], k: i64) -> AColumn {
        AColumn::new(n, e.to_vec(), SpectralParam::q(k)).unwrap()
    }

    #[test]
    fn boxes() {
        let a = SpectralParam::q(0);
        assert_eq!(box_monomial_a(2, 1, &a).unwrap(), m("Y_{1,a}"));
        assert_eq!(box_monomial_a(2, 3, &a).unwrap(), m("Y_{2,aq^3}^{-1}"));
        assert_eq!(box_monomial_a(2, 2, &a).unwrap(), m("Y_{1,aq^2}^{-1}Y_{2,aq}"));
        assert_eq!(box_monomial_a(5, 6, &a).unwrap(), m("Y_{5,aq^6}^{-1}"));
        assert!(box_monomial_a(2, 4, &a).is_err());
    }

    #[test]
    fn columns() {
        assert_eq!(col(3, &[1], 0).monomial(), m("Y_{1,a}"));
        for len in 1..=3 {
            let c = AColumn::initial(3, len, SpectralParam::q(2)).unwrap();
            assert_eq!(c.monomial(), c.highest());
        }
        assert!(AColumn::initial(3, 4, SpectralParam::q(0)).unwrap().monomial().is_one());
    }

    #[test]
    fn tableaux_monomials() {
        let t = ATableau::new(vec![col(2, &[1], 0), col(2, &[2], 0)]);
        assert_eq!(t.monomial(), m("Y_{1,a}Y_{1,aq^2}^{-1}Y_{2,aq}"));
        assert!(ATableau::default().monomial().is_one());
        let t = ATableau::new(vec![col(2, &[2], 0), col(2, &[1, 2], 1)]);
        assert_eq!(t.monomial(), m("Y_{1,aq^2}^{-1}Y_{2,aq}^{2}"));
    }

    #[test]
    fn count_formula_agrees() {
        for n in 1..=3 {
            for l1 in 1..=n {
                for l2 in 1..=n {
                    for k in -2..=2 {
                        let sh = [(l1, SpectralParam::q(0)), (l2, SpectralParam::q(k))];
                        for t in enumerate_bp_a(n, &sh).unwrap() {
                            assert_eq!(t.monomial(), t.monomial_from_counts());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumerations() {
        let a = SpectralParam::q(0);
        assert_eq!(enumerate_fundamental_columns_a(2, 1, &a).unwrap().len(), 3);
        let two: Vec<Vec<usize>> = enumerate_fundamental_columns_a(2, 2, &a)
            .unwrap()
            .iter()
            .map(|c| c.entries().to_vec())
            .collect();
        assert_eq!(two, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(enumerate_fundamental_columns_a(4, 2, &a).unwrap().len(), 10);
        assert!(enumerate_fundamental_columns_a(2, 3, &a).is_err());
    }

    #[test]
    fn fundamental_sums() {
        let a = SpectralParam::q(0);
        let chi: Character<i64> = fundamental_char_tableaux_a(1, 1, &a).unwrap();
        assert_eq!(chi.len(), 2);
        assert!(chi.contains(&m("Y_{1,aq^2}^{-1}")));
        let chi: Character<i64> = fundamental_char_tableaux_a(3, 2, &a).unwrap();
        assert_eq!(chi.len(), 6);
        assert_eq!(chi.l_dominant_monomials(), vec![&m("Y_{2,a}")]);
    }

    #[test]
    fn offsets() {
        assert_eq!(s_offset(&col(2, &[1], 0), &col(2, &[1], 0)), Some(0));
        assert_eq!(s_offset(&col(2, &[1], 0), &col(2, &[1], -2)), Some(1));
        let b = AColumn::new(2, vec![1], SpectralParam::new(Base::new("b").unwrap(), 0)).unwrap();
        assert_eq!(s_offset(&col(2, &[1], 0), &b), None);
        assert_eq!(s_offset(&col(2, &[1], 0), &col(2, &[1], 1)), None);
    }

    #[test]
    fn d_examples() {
        assert_eq!(d_columns_a(&col(2, &[2], 0), &col(2, &[1], 0)), 1);
        assert_eq!(d_columns_a(&col(2, &[1], 0), &col(2, &[2], 0)), 0);
        let b = AColumn::new(2, vec![1], SpectralParam::new(Base::new("b").unwrap(), 0)).unwrap();
        assert_eq!(d_columns_a(&col(2, &[2], 0), &b), 0);
        assert_eq!(d_columns_via_pairing(&col(2, &[2], 0), &col(2, &[1], 0)).unwrap(), 1);
    }

    #[test]
    fn closed_v_matches_generic() {
        for n in 1..=4 {
            let d = crate::root_data::DynkinDiagram::type_a(n).unwrap();
            for len in 1..=n {
                for c in enumerate_fundamental_columns_a(n, len, &SpectralParam::q(1)).unwrap() {
                    assert_eq!(v_profile(&c.monomial(), &c.highest(), &d).unwrap(), c.closed_v());
                }
            }
        }
    }

    #[test]
    fn equivalence_and_padding() {
        let t = ATableau::new(vec![col(2, &[1], 0), col(2, &[2], 0)]);
        let u = ATableau::new(vec![col(2, &[2], 0), col(2, &[1], 0)]);
        assert!(is_equivalent(&t, &u));
        let full = ATableau::new(vec![AColumn::initial(2, 3, SpectralParam::q(5)).unwrap()]);
        let (tp, up) = pad_to_equivalent(2, &full, &ATableau::default()).unwrap();
        assert_eq!(tp, full);
        assert!(is_equivalent(&tp, &up));
        let x = ATableau::new(vec![col(2, &[1], 0)]);
        let y = ATableau::new(vec![col(2, &[2], 0)]);
        assert!(!is_equivalent(&x, &y));
        assert!(pad_to_equivalent(2, &x, &y).is_none());
    }

    #[test]
    fn padding_iff_equal_monomials() {
        for n in 1..=3 {
            let mut all = vec![ATableau::default()];
            for k in -2..=2 {
                for len in 1..=n + 1 {
                    for e in increasing_sequences(n + 1, len) {
                        all.push(ATableau::new(vec![AColumn::new(n, e, SpectralParam::q(k)).unwrap()]));
                    }
                }
            }
            let singles = all.clone();
            for a in &singles[1..] {
                for b in &singles[1..] {
                    if a.columns()[0] <= b.columns()[0] {
                        all.push(ATableau::new(vec![a.columns()[0].clone(), b.columns()[0].clone()]));
                    }
                }
            }
            let by_monomial: Vec<YMonomial> = all.iter().map(|t| t.monomial()).collect();
            for (x, t) in all.iter().enumerate().step_by(7) {
                for (y, u) in all.iter().enumerate() {
                    let padded = pad_to_equivalent(n, t, u);
                    assert_eq!(padded.is_some(), by_monomial[x] == by_monomial[y], "{t} vs {u}");
                    if let Some((tp, up)) = padded {
                        assert!(is_equivalent(&tp, &up));
                    }
                }
            }
        }
    }

    #[test]
    fn ldominant_forms() {
        let t = ATableau::new(vec![AColumn::initial(3, 2, SpectralParam::q(0)).unwrap()]);
        assert_eq!(ldominant_column_form(3, &t), Some(t.clone()));
        assert_eq!(ldominant_column_form(2, &ATableau::new(vec![col(2, &[2], 0)])), None);
        let full = AColumn::initial(2, 3, SpectralParam::new(Base::new("b").unwrap(), 0)).unwrap();
        let t = ATableau::new(vec![col(2, &[1], 0), full.clone()]);
        let form = ldominant_column_form(2, &t).unwrap();
        assert!(form.columns().contains(&full));
        assert!(is_equivalent(&form, &t));
    }

    #[test]
    fn rendering() {
        let t = ATableau::new(vec![col(2, &[2], 0), col(2, &[1, 2], 1)]);
        assert_eq!(t.render_text(), "  1\n2 2\n_a\n");
        let j = t.to_json();
        assert_eq!(j["columns"][1]["entries"], json!([1, 2]));
        assert_eq!(j["columns"][1]["qexp"], json!(1));
    }

    #[test]
    fn odometer_counts() {
        assert_eq!(Odometer::new(vec![2, 3]).count(), 6);
        assert_eq!(Odometer::new(vec![]).count(), 1);
        assert_eq!(Odometer::new(vec![2, 0]).count(), 0);
    }
}
