//! Crystals realized on monomials in the variables `Y_{i,q^n}`.
//!
//! For a single base and a node `i`, with `u_k = u_{i,q^k}(m)`:
//! `eps_{i,n} = -sum_{k >= n} u_k` and `phi_{i,n} = sum_{k <= n} u_k`.
//! The lowering operator `f_i` multiplies by `A_{i,q^{q_i+1}}^{-1}` and the
//! raising operator `e_i` by `A_{i,q^{p_i-1}}`; [`CrystalRule::Literal`]
//! keeps the opposite assignment of inverses for comparison.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::root_data::{Coloring, DynkinDiagram, Node, WeightVector};
use crate::yalgebra::{a_monomial, weight_of, Base, DrinfeldData, SpectralParam, YMonomial};

pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CrystalRule {
    /// `f_i` lowers the weight by `alpha_i`.
    #[default]
    Lowering,
    /// `e_i(m) = m A^{-1}`, `f_i(m) = m A`: the two operators trade places
    /// and generation from a dominant monomial climbs instead of descending.
    Literal,
}

/// The base of a monomial supported on at most one base.
fn single_base(m: &YMonomial) -> Result<Option<Base>> {
    let bases = m.bases();
    match bases.len() {
        0 => Ok(None),
        1 => Ok(Some(bases[0].clone())),
        _ => Err(Error::MixedBase(m.to_string())),
    }
}

/// `(k, u_{i,q^k})` for the nonzero exponents at node `i`, ascending in `k`.
fn row(m: &YMonomial, i: Node) -> Result<Vec<(i64, i64)>> {
    single_base(m)?;
    Ok(m.iter().filter(|(v, _)| v.node == i).map(|(v, e)| (v.qexp, e)).collect())
}

pub fn eps_n(m: &YMonomial, i: Node, n: i64) -> Result<i64> {
    Ok(-row(m, i)?.iter().filter(|(k, _)| *k >= n).map(|(_, u)| u).sum::<i64>())
}

pub fn phi_n(m: &YMonomial, i: Node, n: i64) -> Result<i64> {
    Ok(row(m, i)?.iter().filter(|(k, _)| *k <= n).map(|(_, u)| u).sum())
}

/// `(eps_i, p_i)`; `p_i` is `None` (infinite) when `eps_i = 0`.
fn eps_and_p(m: &YMonomial, i: Node) -> Result<(i64, Option<i64>)> {
    let r = row(m, i)?;
    // eps_{i,n} is constant on (k_{j-1}, k_j]; the largest n attaining the
    // maximum is a support point
    let (mut best, mut arg) = (0, None);
    let mut tail = 0;
    for &(k, u) in r.iter().rev() {
        tail -= u;
        if tail > best {
            best = tail;
            arg = Some(k);
        }
    }
    Ok((best, arg))
}

/// `(phi_i, q_i)`; `q_i` is `None` (minus infinity) when `phi_i = 0`.
fn phi_and_q(m: &YMonomial, i: Node) -> Result<(i64, Option<i64>)> {
    let r = row(m, i)?;
    let (mut best, mut arg) = (0, None);
    let mut head = 0;
    for &(k, u) in r.iter() {
        head += u;
        if head > best {
            best = head;
            arg = Some(k);
        }
    }
    Ok((best, arg))
}

pub fn eps(m: &YMonomial, i: Node) -> Result<i64> {
    Ok(eps_and_p(m, i)?.0)
}

pub fn phi(m: &YMonomial, i: Node) -> Result<i64> {
    Ok(phi_and_q(m, i)?.0)
}

pub fn p_index(m: &YMonomial, i: Node) -> Result<Option<i64>> {
    Ok(eps_and_p(m, i)?.1)
}

pub fn q_index(m: &YMonomial, i: Node) -> Result<Option<i64>> {
    Ok(phi_and_q(m, i)?.1)
}

/// `wt(m) = sum u_{i,q^n}(m) Lambda_i`.
pub fn weight(m: &YMonomial) -> WeightVector {
    weight_of(m)
}

pub fn kashiwara_e(m: &YMonomial, i: Node, d: &DynkinDiagram) -> Result<Option<YMonomial>> {
    kashiwara_e_with(m, i, d, CrystalRule::Lowering)
}

pub fn kashiwara_f(m: &YMonomial, i: Node, d: &DynkinDiagram) -> Result<Option<YMonomial>> {
    kashiwara_f_with(m, i, d, CrystalRule::Lowering)
}

pub fn kashiwara_e_with(
    m: &YMonomial,
    i: Node,
    d: &DynkinDiagram,
    rule: CrystalRule,
) -> Result<Option<YMonomial>> {
    let (_, p) = eps_and_p(m, i)?;
    let Some(p) = p else { return Ok(None) };
    let base = single_base(m)?.unwrap_or_default();
    let a = a_monomial(d, i, &SpectralParam::new(base, p - 1))?;
    Ok(Some(match rule {
        CrystalRule::Lowering => m.mul(&a),
        CrystalRule::Literal => m.div(&a),
    }))
}

pub fn kashiwara_f_with(
    m: &YMonomial,
    i: Node,
    d: &DynkinDiagram,
    rule: CrystalRule,
) -> Result<Option<YMonomial>> {
    let (_, q) = phi_and_q(m, i)?;
    let Some(q) = q else { return Ok(None) };
    let base = single_base(m)?.unwrap_or_default();
    let a = a_monomial(d, i, &SpectralParam::new(base, q + 1))?;
    Ok(Some(match rule {
        CrystalRule::Lowering => m.div(&a),
        CrystalRule::Literal => m.mul(&a),
    }))
}

/// Membership in the parity subset: `u_{i,q^n}(m) = 0` whenever
/// `n = a_i mod 2`.
pub fn in_m_prime(m: &YMonomial, coloring: &Coloring) -> bool {
    single_base(m).is_ok()
        && m.iter().all(|(v, _)| v.qexp.rem_euclid(2) != coloring.color(v.node) as i64)
}

/// The bipartite coloring (normalized, or else its flip) for which `m` lies
/// in the parity subset.
pub fn admissible_coloring(m: &YMonomial, d: &DynkinDiagram) -> Result<Coloring> {
    let c = d.bipartite_coloring()?;
    if in_m_prime(m, &c) {
        return Ok(c);
    }
    let flipped = c.flipped();
    if in_m_prime(m, &flipped) {
        return Ok(flipped);
    }
    Err(Error::NotInMPrime(m.to_string()))
}

#[derive(Debug, Clone, Copy)]
pub struct CrystalOptions {
    pub max_vertices: usize,
    pub rule: CrystalRule,
}

impl Default for CrystalOptions {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_VERTEX_CAP,
            rule: CrystalRule::Lowering,
        }
    }
}

/// A colored graph with an edge `m -i-> m'` for each `m' = f_i(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    diagram: DynkinDiagram,
    highest: YMonomial,
    vertices: BTreeSet<YMonomial>,
    edges: BTreeSet<(YMonomial, YMonomial, Node)>,
}

impl CrystalGraph {
    /// Assemble a graph without checking it; see [`verify_crystal_axioms`].
    pub fn from_parts(
        diagram: DynkinDiagram,
        highest: YMonomial,
        vertices: BTreeSet<YMonomial>,
        edges: BTreeSet<(YMonomial, YMonomial, Node)>,
    ) -> Self {
        Self {
            diagram,
            highest,
            vertices,
            edges,
        }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn highest(&self) -> &YMonomial {
        &self.highest
    }

    pub fn vertices(&self) -> &BTreeSet<YMonomial> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(YMonomial, YMonomial, Node)> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The graph up to relabeling of vertices: each vertex is named by its
    /// shortlex-least path of colors from the highest vertex, and the result
    /// is the sorted edge list in those names. Unreachable vertices get no
    /// name and their edges are dropped.
    pub fn canonical_form(&self) -> Vec<(Vec<Node>, Vec<Node>, Node)> {
        let mut out_edges: BTreeMap<&YMonomial, Vec<(Node, &YMonomial)>> = BTreeMap::new();
        for (s, t, i) in &self.edges {
            out_edges.entry(s).or_default().push((*i, t));
        }
        for list in out_edges.values_mut() {
            list.sort();
        }
        // breadth-first with colors in increasing order visits shortlex-least paths first
        let mut name: BTreeMap<&YMonomial, Vec<Node>> = BTreeMap::new();
        let mut queue = VecDeque::new();
        if self.vertices.contains(&self.highest) {
            name.insert(&self.highest, Vec::new());
            queue.push_back(&self.highest);
        }
        while let Some(v) = queue.pop_front() {
            let here = name[v].clone();
            for (i, t) in out_edges.get(v).into_iter().flatten() {
                if !name.contains_key(t) {
                    let mut w = here.clone();
                    w.push(*i);
                    name.insert(t, w);
                    queue.push_back(t);
                }
            }
        }
        let mut out: Vec<_> = self
            .edges
            .iter()
            .filter_map(|(s, t, i)| Some((name.get(s)?.clone(), name.get(t)?.clone(), *i)))
            .collect();
        out.sort();
        out
    }

    /// Graphviz rendering with vertices labeled by monomials and edges by color.
    pub fn to_dot(&self) -> String {
        let ids: BTreeMap<&YMonomial, usize> = self.vertices.iter().enumerate().map(|(k, v)| (v, k)).collect();
        let mut s = String::from("digraph crystal {\n");
        for (v, k) in &ids {
            let _ = writeln!(s, "  v{k} [label=\"{v}\"];");
        }
        for (a, b, i) in &self.edges {
            if let (Some(x), Some(y)) = (ids.get(a), ids.get(b)) {
                let _ = writeln!(s, "  v{x} -> v{y} [label=\"{i}\"];");
            }
        }
        s.push_str("}\n");
        s
    }
}

/// The closure of an l-dominant monomial of the parity subset under all `f_i`.
pub fn generate_crystal(m0: &YMonomial, d: &DynkinDiagram) -> Result<CrystalGraph> {
    generate_crystal_with(m0, d, CrystalOptions::default())
}

pub fn generate_crystal_with(m0: &YMonomial, d: &DynkinDiagram, opts: CrystalOptions) -> Result<CrystalGraph> {
    single_base(m0)?;
    for (v, _) in m0.iter() {
        d.check_node(v.node)?;
    }
    if !m0.is_l_dominant() {
        return Err(Error::NotLDominant(m0.to_string()));
    }
    admissible_coloring(m0, d)?;
    let mut vertices = BTreeSet::from([m0.clone()]);
    let mut edges = BTreeSet::new();
    let mut queue = VecDeque::from([m0.clone()]);
    while let Some(m) = queue.pop_front() {
        for i in d.nodes() {
            if let Some(next) = kashiwara_f_with(&m, i, d, opts.rule)? {
                edges.insert((m.clone(), next.clone(), i));
                if vertices.insert(next.clone()) {
                    if vertices.len() > opts.max_vertices {
                        return Err(Error::CapExceeded(opts.max_vertices));
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(CrystalGraph {
        diagram: d.clone(),
        highest: m0.clone(),
        vertices,
        edges,
    })
}

/// Check the crystal axioms on every vertex and that the edges are exactly
/// the `f_i` moves. Returns one line per violation.
pub fn verify_crystal_axioms(g: &CrystalGraph) -> Vec<String> {
    let d = &g.diagram;
    let mut bad = Vec::new();
    let mut expected = BTreeSet::new();
    for m in &g.vertices {
        let wt = weight(m);
        for i in d.nodes() {
            let stats = eps(m, i).and_then(|e| Ok((e, phi(m, i)?)));
            let Ok((e, p)) = stats else {
                bad.push(format!("{m}: statistics undefined"));
                continue;
            };
            if p - e != wt.get(i) {
                bad.push(format!("{m}: phi_{i} - eps_{i} = {} but weight gives {}", p - e, wt.get(i)));
            }
            let alpha = d.simple_root_in_weights(i).expect("valid node");
            match kashiwara_f(m, i, d) {
                Ok(Some(n)) => {
                    expected.insert((m.clone(), n.clone(), i));
                    if kashiwara_e(&n, i, d).ok().flatten().as_ref() != Some(m) {
                        bad.push(format!("{m}: e_{i} f_{i} is not the identity"));
                    }
                    if weight(&n) != &wt - &alpha {
                        bad.push(format!("{m}: weight of f_{i} is not lowered by alpha_{i}"));
                    }
                    if eps(&n, i).ok() != Some(e + 1) || phi(&n, i).ok() != Some(p - 1) {
                        bad.push(format!("{m}: eps/phi of f_{i} not shifted by one"));
                    }
                }
                Ok(None) => {
                    if p != 0 {
                        bad.push(format!("{m}: f_{i} vanishes with phi_{i} = {p}"));
                    }
                }
                Err(err) => bad.push(format!("{m}: {err}")),
            }
            match kashiwara_e(m, i, d) {
                Ok(Some(n)) => {
                    if kashiwara_f(&n, i, d).ok().flatten().as_ref() != Some(m) {
                        bad.push(format!("{m}: f_{i} e_{i} is not the identity"));
                    }
                }
                Ok(None) => {
                    if e != 0 {
                        bad.push(format!("{m}: e_{i} vanishes with eps_{i} = {e}"));
                    }
                }
                Err(err) => bad.push(format!("{m}: {err}")),
            }
        }
    }
    for edge in expected.difference(&g.edges) {
        bad.push(format!("missing edge {} -{}-> {}", edge.0, edge.2, edge.1));
    }
    for edge in g.edges.difference(&expected) {
        bad.push(format!("unexpected edge {} -{}-> {}", edge.0, edge.2, edge.1));
    }
    for (_, t, _) in &g.edges {
        if !g.vertices.contains(t) {
            bad.push(format!("edge target {t} is not a vertex"));
        }
    }
    bad
}

/// Integers `m(i)` with `m(i) - m(j) = 1` for every oriented edge `i -> j`,
/// shifted so that the minimum is 0. `orientation` must list every edge of
/// the diagram exactly once.
pub fn orientation_placement(d: &DynkinDiagram, orientation: &[(Node, Node)]) -> Result<BTreeMap<Node, i64>> {
    let mut seen = BTreeSet::new();
    let mut adj: BTreeMap<Node, Vec<(Node, i64)>> = BTreeMap::new();
    for &(i, j) in orientation {
        if !d.is_adjacent(i, j) || !seen.insert((i.min(j), i.max(j))) {
            return Err(Error::InvalidDiagram(format!("{i}->{j} is not a new edge of the diagram")));
        }
        adj.entry(i).or_default().push((j, -1));
        adj.entry(j).or_default().push((i, 1));
    }
    let edge_count: usize = d.nodes().map(|i| d.neighbors(i).len()).sum::<usize>() / 2;
    if seen.len() != edge_count {
        return Err(Error::InvalidDiagram("orientation must cover every edge".into()));
    }
    let mut m = BTreeMap::from([(1, 0i64)]);
    let mut queue = VecDeque::from([1]);
    while let Some(i) = queue.pop_front() {
        for &(j, delta) in adj.get(&i).into_iter().flatten() {
            let want = m[&i] + delta;
            match m.get(&j) {
                Some(&have) if have != want => {
                    return Err(Error::InvalidDiagram("orientation admits no placement".into()));
                }
                Some(_) => {}
                None => {
                    m.insert(j, want);
                    queue.push_back(j);
                }
            }
        }
    }
    let low = *m.values().min().expect("node 1 present");
    Ok(m.into_iter().map(|(i, x)| (i, x - low)).collect())
}

/// `P_i(u) = (1 - u a q^{m(i)})^{w_i}` for a placement `m` and multiplicities `w`.
pub fn placement_drinfeld(placement: &BTreeMap<Node, i64>, weights: &WeightVector, base: &Base) -> DrinfeldData {
    DrinfeldData::new(weights.iter().flat_map(|(&i, &w)| {
        let a = SpectralParam::new(base.clone(), placement.get(&i).copied().unwrap_or(0));
        std::iter::repeat((i, a)).take(w.max(0) as usize)
    }))
}
