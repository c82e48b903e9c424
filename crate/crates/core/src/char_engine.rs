//! Characters of l-fundamental and standard modules from the axioms: the
//! highest monomial has coefficient 1, every direction `i` decomposes into
//! `E_i` blocks, and products of factors satisfying the admissibility
//! condition are twisted by `t^{2d}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::root_data::{DynkinDiagram, Node};
use crate::scalar::Coefficient;
use crate::yalgebra::expansion::e_terms;
use crate::yalgebra::order::{first_pairing_term, second_pairing_term};
use crate::yalgebra::{
    a_monomial, pairing_d, v_profile, Base, Character, DrinfeldData, Laurent, SpectralParam, VProfile, YMonomial,
};

pub const DEFAULT_MAX_ROUNDS: usize = 100_000;

/// The l-fundamental module `L(Lambda_N)_a`, with highest monomial `Y_{N,a}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FundamentalSpec {
    pub node: Node,
    pub param: SpectralParam,
}

impl FundamentalSpec {
    pub fn new(node: Node, param: SpectralParam) -> Self {
        Self { node, param }
    }

    pub fn highest(&self) -> YMonomial {
        YMonomial::y(self.node, &self.param)
    }
}

impl fmt::Display for FundamentalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L(Lambda_{})_{}", self.node, self.param)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct EngineOptions {
    /// Bound on the number of monomials processed.
    pub max_rounds: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        Self {
            max_rounds: DEFAULT_MAX_ROUNDS,
        }
    }
}

pub fn fundamental_character<C: Coefficient>(d: &DynkinDiagram, f: &FundamentalSpec) -> Result<Character<C>> {
    fundamental_character_with(d, f, EngineOptions::default())
}

/// Inductive closure from the highest monomial.
///
/// Monomials are processed in order of their distance `|v(m, m_P)|` from the
/// top, so every block containing `m` is known when `m` is reached. If `m`
/// is not `i`-dominant its coefficient must equal what the `E_i` blocks
/// above it contribute; all such `i` have to agree. For every `i` with `m`
/// `i`-dominant, the excess over the contributions starts a new `E_i(m)`
/// block whose lower terms are pushed down.
pub fn fundamental_character_with<C: Coefficient>(
    d: &DynkinDiagram,
    f: &FundamentalSpec,
    opts: EngineOptions,
) -> Result<Character<C>> {
    d.check_node(f.node)?;
    let top = f.highest();
    let mut out = Character::zero();
    let mut frontier: BTreeMap<i64, BTreeSet<YMonomial>> = BTreeMap::from([(0, BTreeSet::from([top.clone()]))]);
    let mut contrib: HashMap<YMonomial, BTreeMap<Node, Laurent<C>>> = HashMap::new();
    let mut rounds = 0;
    while let Some((depth, layer)) = frontier.pop_first() {
        for m in layer {
            rounds += 1;
            if rounds > opts.max_rounds {
                return Err(Error::IterationCap(opts.max_rounds));
            }
            let from_above = contrib.remove(&m).unwrap_or_default();
            let coef = if m == top {
                Laurent::one()
            } else {
                forced_coefficient(d, &m, &from_above)?
            };
            for i in d.nodes().filter(|&i| m.is_i_dominant(i)) {
                let block = match from_above.get(&i) {
                    Some(c) => coef.checked_sub(c)?,
                    None => coef.clone(),
                };
                if block.is_zero() {
                    continue;
                }
                for t in e_terms::<C>(&m, i, d)?.into_iter().skip(1) {
                    let slot = contrib.entry(t.monomial.clone()).or_default().entry(i).or_default();
                    slot.add_assign_checked(&t.coeff.checked_mul(&block)?)?;
                    frontier.entry(depth + t.depth).or_default().insert(t.monomial);
                }
            }
            out.add_term(m, &coef)?;
        }
    }
    Ok(out)
}

fn forced_coefficient<C: Coefficient>(
    d: &DynkinDiagram,
    m: &YMonomial,
    from_above: &BTreeMap<Node, Laurent<C>>,
) -> Result<Laurent<C>> {
    let mut forced: Option<(Node, Laurent<C>)> = None;
    for i in d.nodes().filter(|&i| !m.is_i_dominant(i)) {
        let c = from_above.get(&i).cloned().unwrap_or_default();
        match &forced {
            None => forced = Some((i, c)),
            Some((j, prev)) if prev != &c => {
                return Err(Error::Inconsistent {
                    monomial: m.to_string(),
                    detail: format!("direction {j} forces {prev}, direction {i} forces {c}"),
                });
            }
            Some(_) => {}
        }
    }
    match forced {
        Some((_, c)) => Ok(c),
        None if from_above.values().all(|c| c.is_zero()) => Ok(Laurent::zero()),
        None => Err(Error::LDominantEncountered(m.to_string())),
    }
}

/// Whether the ordered pair `(P1, P2)` is admissible: no root `a` of `P1`
/// and `b` of `P2` have `a / b = q^n` with `n >= 2`.
pub fn check_zcondition(p1: &DrinfeldData, p2: &DrinfeldData) -> bool {
    p1.roots()
        .iter()
        .all(|(_, a)| p2.roots().iter().all(|(_, b)| a.base != b.base || a.qexp - b.qexp <= 1))
}

/// The fundamental factors of `P`, one per root.
pub fn factors_of(p: &DrinfeldData) -> Vec<FundamentalSpec> {
    p.roots().iter().map(|(i, a)| FundamentalSpec::new(*i, a.clone())).collect()
}

fn as_drinfeld(fs: &[FundamentalSpec]) -> DrinfeldData {
    DrinfeldData::new(fs.iter().map(|f| (f.node, f.param.clone())))
}

/// Stable ascending sort by `(base, qexp)`, then a check that every prefix
/// is admissible against the next factor.
pub fn order_factors(fs: &[FundamentalSpec]) -> Result<Vec<FundamentalSpec>> {
    let mut out = fs.to_vec();
    out.sort_by(|x, y| x.param.cmp(&y.param));
    validate_order(&out)?;
    Ok(out)
}

/// `NoAdmissibleOrder` unless every prefix is admissible against the next factor.
pub fn validate_order(fs: &[FundamentalSpec]) -> Result<()> {
    for k in 1..fs.len() {
        if !check_zcondition(&as_drinfeld(&fs[..k]), &as_drinfeld(&fs[k..=k])) {
            return Err(Error::NoAdmissibleOrder);
        }
    }
    Ok(())
}

/// Every ordering of `fs` (as a multiset) that passes the admissibility check
/// on all prefixes.
pub fn admissible_orders(fs: &[FundamentalSpec]) -> Vec<Vec<FundamentalSpec>> {
    let mut sorted = fs.to_vec();
    sorted.sort();
    let mut out = Vec::new();
    let mut used = vec![false; sorted.len()];
    let mut current = Vec::new();
    permute(&sorted, &mut used, &mut current, &mut out);
    out
}

fn permute(
    items: &[FundamentalSpec],
    used: &mut [bool],
    current: &mut Vec<FundamentalSpec>,
    out: &mut Vec<Vec<FundamentalSpec>>,
) {
    if current.len() == items.len() {
        out.push(current.clone());
        return;
    }
    for k in 0..items.len() {
        if used[k] || (k > 0 && items[k] == items[k - 1] && !used[k - 1]) {
            continue;
        }
        let next = &items[k..=k];
        if !current.is_empty() && !check_zcondition(&as_drinfeld(current), &as_drinfeld(next)) {
            continue;
        }
        used[k] = true;
        current.push(items[k].clone());
        permute(items, used, current, out);
        current.pop();
        used[k] = false;
    }
}

fn profiles<C: Coefficient>(chi: &Character<C>, top: &YMonomial, d: &DynkinDiagram) -> Result<Vec<VProfile>> {
    chi.monomials().map(|m| v_profile(m, top, d)).collect()
}

/// `sum t^{2 d(m1, mP1; m2, mP2)} a_{m1} a_{m2} m1 m2`.
pub fn twisted_product<C: Coefficient>(
    chi1: &Character<C>,
    mp1: &YMonomial,
    chi2: &Character<C>,
    mp2: &YMonomial,
    d: &DynkinDiagram,
) -> Result<Character<C>> {
    let v1 = profiles(chi1, mp1, d)?;
    let v2 = profiles(chi2, mp2, d)?;
    let second: Vec<i64> = v2.iter().map(|v| second_pairing_term(mp1, v)).collect();
    let mut out = Character::zero();
    for ((m1, a1), v1) in chi1.iter().zip(&v1) {
        for ((m2, a2), s) in chi2.iter().zip(&second) {
            let twist = 2 * (first_pairing_term(v1, m2) + s);
            out.add_term(m1.mul(m2), &a1.checked_mul(a2)?.shift(twist)?)?;
        }
    }
    Ok(out)
}

/// The character of the standard module `M(P)`, folding fundamentals in
/// ascending spectral order.
pub fn standard_character<C: Coefficient>(d: &DynkinDiagram, p: &DrinfeldData) -> Result<Character<C>> {
    let order = order_factors(&factors_of(p))?;
    fold_factors(d, &order)
}

/// The same product taken in a caller-chosen order, which must be admissible.
pub fn standard_character_ordered<C: Coefficient>(d: &DynkinDiagram, fs: &[FundamentalSpec]) -> Result<Character<C>> {
    validate_order(fs)?;
    fold_factors(d, fs)
}

fn fold_factors<C: Coefficient>(d: &DynkinDiagram, fs: &[FundamentalSpec]) -> Result<Character<C>> {
    let mut cache: HashMap<Node, Character<C>> = HashMap::new();
    let mut acc = Character::unit();
    let mut top = YMonomial::one();
    for f in fs {
        d.check_node(f.node)?;
        if !cache.contains_key(&f.node) {
            let at_origin = FundamentalSpec::new(f.node, SpectralParam::new(Base::default(), 0));
            cache.insert(f.node, fundamental_character(d, &at_origin)?);
        }
        let chi = relocate(&cache[&f.node], &f.param.base, f.param.qexp)?;
        acc = twisted_product(&acc, &top, &chi, &f.highest(), d)?;
        top = top.mul(&f.highest());
    }
    Ok(acc)
}

/// Replace the base and shift every monomial of a single-base character.
pub fn relocate<C: Coefficient>(chi: &Character<C>, base: &Base, k: i64) -> Result<Character<C>> {
    Character::from_terms(chi.iter().map(|(m, c)| (m.relocate(base, k), c.clone())))
}

/// The rescaled variant `sum t^{-d(m, mP; m, mP)} a_m(t) m`.
pub fn tilde_rescale<C: Coefficient>(chi: &Character<C>, mp: &YMonomial, d: &DynkinDiagram) -> Result<Character<C>> {
    let mut out = Character::zero();
    for (m, c) in chi.iter() {
        let k = pairing_d(m, mp, m, mp, d)?;
        out.add_term(m.clone(), &c.shift(-k)?)?;
    }
    Ok(out)
}

/// An arrow `source -> target = source * A_{node,param}^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaEdge {
    pub source: YMonomial,
    pub target: YMonomial,
    pub node: Node,
    pub param: SpectralParam,
}

/// The monomials of a character with their coefficients, joined by the
/// arrows `m -> m A_{i,a}^{-1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct GammaGraph<C> {
    vertices: Character<C>,
    edges: BTreeSet<GammaEdge>,
}

pub fn gamma_graph<C: Coefficient>(chi: &Character<C>, d: &DynkinDiagram) -> Result<GammaGraph<C>> {
    // the exponent of Y_{i,aq} changes along an arrow, so aq lies in the support
    let mut candidates: BTreeMap<Node, BTreeSet<SpectralParam>> = BTreeMap::new();
    for m in chi.monomials() {
        for (v, _) in m.iter() {
            candidates.entry(v.node).or_default().insert(v.param().shift(-1));
        }
    }
    let mut edges = BTreeSet::new();
    for m in chi.monomials() {
        for (&i, params) in &candidates {
            for a in params {
                let target = m.div(&a_monomial(d, i, a)?);
                if chi.contains(&target) {
                    edges.insert(GammaEdge {
                        source: m.clone(),
                        target,
                        node: i,
                        param: a.clone(),
                    });
                }
            }
        }
    }
    Ok(GammaGraph {
        vertices: chi.clone(),
        edges,
    })
}

impl<C: Coefficient> GammaGraph<C> {
    pub fn vertices(&self) -> &Character<C> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<GammaEdge> {
        &self.edges
    }

    /// Edge label `i,q^k`, with the base written out only when the graph
    /// uses several.
    pub fn edge_label(&self, e: &GammaEdge) -> String {
        let single_base = self.edges.iter().all(|x| x.param.base == e.param.base);
        let power = match e.param.qexp {
            0 => "1".to_string(),
            1 => "q".to_string(),
            k => format!("q^{k}"),
        };
        if single_base {
            format!("{},{power}", e.node)
        } else {
            format!("{},{}", e.node, e.param)
        }
    }

    pub fn to_dot(&self) -> String {
        let ids: BTreeMap<&YMonomial, usize> = self.vertices.monomials().enumerate().map(|(k, m)| (m, k)).collect();
        let mut s = String::from("digraph gamma {\n");
        for (m, c) in self.vertices.iter() {
            let label = if c.is_one() { m.to_string() } else { format!("({c}) · {m}") };
            let _ = writeln!(s, "  v{} [label=\"{label}\"];", ids[m]);
        }
        for e in &self.edges {
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", ids[&e.source], ids[&e.target], self.edge_label(e));
        }
        s.push_str("}\n");
        s
    }
}
