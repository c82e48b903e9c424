//! Simply-laced Dynkin diagrams, Cartan data and weights.
//!
//! Nodes are numbered `1..=n`. Type `A_n` is the path `1 - 2 - ... - n`;
//! type `D_n` is the path `1 - ... - (n-2)` with both `n-1` and `n` attached
//! to `n-2`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

pub type Node = usize;

const ROOT_CLOSURE_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagramKind {
    TypeA,
    TypeD,
    GeneralSimplyLaced,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    kind: DiagramKind,
    rank: usize,
    // adjacency[i] for i in 1..=rank, sorted; adjacency[0] is unused
    adjacency: Vec<Vec<Node>>,
}

impl DynkinDiagram {
    pub fn type_a(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidDiagram("A_n needs n >= 1".into()));
        }
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        let mut d = Self::simply_laced(n, &edges)?;
        d.kind = DiagramKind::TypeA;
        Ok(d)
    }

    pub fn type_d(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidDiagram("D_n needs n >= 4".into()));
        }
        let mut edges: Vec<_> = (1..n - 2).map(|i| (i, i + 1)).collect();
        edges.push((n - 2, n - 1));
        edges.push((n - 2, n));
        let mut d = Self::simply_laced(n, &edges)?;
        d.kind = DiagramKind::TypeD;
        Ok(d)
    }

    /// A general simply-laced diagram from an edge list. The graph must be
    /// connected, without loops and without repeated edges.
    pub fn simply_laced(n: usize, edges: &[(Node, Node)]) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidDiagram("empty diagram".into()));
        }
        let mut adjacency = vec![Vec::new(); n + 1];
        for &(i, j) in edges {
            for k in [i, j] {
                if k == 0 || k > n {
                    return Err(Error::UnknownNode(k));
                }
            }
            if i == j {
                return Err(Error::InvalidDiagram(format!("loop at node {i}")));
            }
            if adjacency[i].contains(&j) {
                return Err(Error::InvalidDiagram(format!("repeated edge {i}-{j}")));
            }
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        for adj in adjacency.iter_mut() {
            adj.sort_unstable();
        }
        let d = Self {
            kind: DiagramKind::GeneralSimplyLaced,
            rank: n,
            adjacency,
        };
        let mut seen = vec![false; n + 1];
        let mut queue = VecDeque::from([1]);
        seen[1] = true;
        while let Some(i) = queue.pop_front() {
            for &j in d.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::InvalidDiagram("diagram is not connected".into()));
        }
        Ok(d)
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + Clone {
        1..=self.rank
    }

    pub fn contains(&self, i: Node) -> bool {
        (1..=self.rank).contains(&i)
    }

    pub fn check_node(&self, i: Node) -> Result<()> {
        if self.contains(i) {
            Ok(())
        } else {
            Err(Error::UnknownNode(i))
        }
    }

    /// Neighbors of `i` in increasing order. Panics on an unknown node.
    pub fn neighbors(&self, i: Node) -> &[Node] {
        &self.adjacency[i]
    }

    pub fn is_adjacent(&self, i: Node, j: Node) -> bool {
        self.contains(i) && self.adjacency[i].binary_search(&j).is_ok()
    }

    pub fn cartan_entry(&self, i: Node, j: Node) -> Result<i64> {
        self.check_node(i)?;
        self.check_node(j)?;
        Ok(if i == j {
            2
        } else if self.is_adjacent(i, j) {
            -1
        } else {
            0
        })
    }

    /// The 2-coloring with `a_i + a_j = 1` across every edge, normalized by
    /// `a_1 = 0`.
    pub fn bipartite_coloring(&self) -> Result<Coloring> {
        let mut color: Vec<Option<u8>> = vec![None; self.rank + 1];
        color[1] = Some(0);
        let mut queue = VecDeque::from([1]);
        while let Some(i) = queue.pop_front() {
            let c = color[i].expect("queued nodes are colored");
            for &j in self.neighbors(i) {
                match color[j] {
                    None => {
                        color[j] = Some(1 - c);
                        queue.push_back(j);
                    }
                    Some(cj) if cj == c => return Err(Error::OddCycle),
                    Some(_) => {}
                }
            }
        }
        Ok(Coloring(color.into_iter().skip(1).flatten().collect()))
    }

    /// `alpha_i = sum_j c_ji Lambda_j`.
    pub fn simple_root_in_weights(&self, i: Node) -> Result<WeightVector> {
        self.check_node(i)?;
        let mut w = WeightVector::zero();
        w.set(i, 2);
        for &j in self.neighbors(i) {
            w.set(j, -1);
        }
        Ok(w)
    }

    /// Positive roots as coefficient vectors in the simple root basis
    /// (index `k - 1` holds the coefficient of `alpha_k`). Fails for diagrams
    /// that are not of finite type.
    pub fn positive_roots(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.rank;
        if !self.is_positive_definite() {
            return Err(Error::NotFiniteType(n));
        }
        let mut roots: Vec<Vec<i64>> = (1..=n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i - 1] = 1;
                r
            })
            .collect();
        let mut known: std::collections::BTreeSet<Vec<i64>> = roots.iter().cloned().collect();
        let mut idx = 0;
        while idx < roots.len() {
            let beta = roots[idx].clone();
            for i in 1..=n {
                // (beta, alpha_i) = sum_k beta_k c_ki; simply-laced strings have length <= 1
                let pairing: i64 = (1..=n)
                    .map(|k| beta[k - 1] * self.cartan_entry(k, i).expect("valid nodes"))
                    .sum();
                if pairing == -1 {
                    let mut next = beta.clone();
                    next[i - 1] += 1;
                    if known.insert(next.clone()) {
                        roots.push(next);
                        if roots.len() > ROOT_CLOSURE_CAP {
                            return Err(Error::NotFiniteType(ROOT_CLOSURE_CAP));
                        }
                    }
                }
            }
            idx += 1;
        }
        Ok(roots)
    }

    /// Sylvester's criterion on the Cartan matrix, with fraction-free
    /// elimination.
    fn is_positive_definite(&self) -> bool {
        let n = self.rank;
        let mut a: Vec<Vec<i128>> = (1..=n)
            .map(|i| (1..=n).map(|j| self.cartan_entry(i, j).expect("valid nodes") as i128).collect())
            .collect();
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] <= 0 {
                return false;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        true
    }

    /// Coefficients of `2 rho` in the simple root basis (`None` outside finite
    /// type). The functional `m -> sum u_{i,a}(m) * h[i]` drops by exactly 2
    /// under multiplication by any `A_{i,a}^{-1}`.
    pub fn height_functional(&self) -> Option<Vec<i64>> {
        let roots = self.positive_roots().ok()?;
        let mut h = vec![0; self.rank + 1];
        for r in &roots {
            for (k, c) in r.iter().enumerate() {
                h[k + 1] += c;
            }
        }
        Some(h)
    }

    /// Dimension of the irreducible module of highest weight `lambda`, by the
    /// Weyl dimension product over positive roots.
    pub fn weyl_dimension(&self, lambda: &WeightVector) -> Result<u128> {
        for (&i, &c) in lambda.iter() {
            self.check_node(i)?;
            if c < 0 {
                return Err(Error::NonDominant);
            }
        }
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for root in self.positive_roots()? {
            let height: i64 = root.iter().sum();
            let shifted: i64 = root
                .iter()
                .enumerate()
                .map(|(k, c)| c * (lambda.get(k + 1) + 1))
                .sum();
            num *= BigUint::from(shifted as u64);
            den *= BigUint::from(height as u64);
        }
        (num / den).to_u128().ok_or(Error::Overflow)
    }

    pub fn name(&self) -> String {
        match self.kind {
            DiagramKind::TypeA => format!("A{}", self.rank),
            DiagramKind::TypeD => format!("D{}", self.rank),
            DiagramKind::GeneralSimplyLaced => format!("simply-laced rank {}", self.rank),
        }
    }
}

/// A bipartite coloring `i -> a_i in {0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<u8>);

impl Coloring {
    pub fn color(&self, i: Node) -> u8 {
        self.0[i - 1]
    }

    /// The other coloring, `a_i -> 1 - a_i`.
    pub fn flipped(&self) -> Self {
        Coloring(self.0.iter().map(|c| 1 - c).collect())
    }

    pub fn to_map(&self) -> BTreeMap<Node, u8> {
        self.0.iter().enumerate().map(|(k, &c)| (k + 1, c)).collect()
    }
}

/// A weight written in fundamental weight coordinates `sum c_i Lambda_i`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(BTreeMap<Node, i64>);

impl WeightVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `Lambda_i`.
    pub fn fundamental(i: Node) -> Self {
        Self::from_pairs([(i, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Node, i64)>) -> Self {
        let mut w = Self::zero();
        for (i, c) in pairs {
            w.add_to(i, c);
        }
        w
    }

    pub fn get(&self, i: Node) -> i64 {
        self.0.get(&i).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: Node, c: i64) {
        if c == 0 {
            self.0.remove(&i);
        } else {
            self.0.insert(i, c);
        }
    }

    pub fn add_to(&mut self, i: Node, c: i64) {
        let v = self.get(i) + c;
        self.set(i, v);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Node, &i64)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.values().all(|&c| c >= 0)
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        let mut out = self.clone();
        for (&i, &c) in rhs.iter() {
            out.add_to(i, c);
        }
        out
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        self + &(-rhs)
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector(self.0.iter().map(|(&i, &c)| (i, -c)).collect())
    }
}

impl fmt::Display for WeightVector {
    /// Renders as a classical monomial `y1^2 y3^-1` (`1` for zero).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, c) in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if *c == 1 {
                write!(f, "y{i}")?;
            } else {
                write!(f, "y{i}^{c}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_entries() {
        let a2 = DynkinDiagram::type_a(2).unwrap();
        assert_eq!(a2.cartan_entry(1, 1).unwrap(), 2);
        assert_eq!(a2.cartan_entry(1, 2).unwrap(), -1);
        assert_eq!(a2.cartan_entry(1, 3), Err(Error::UnknownNode(3)));
        let d4 = DynkinDiagram::type_d(4).unwrap();
        assert_eq!(d4.cartan_entry(3, 4).unwrap(), 0);
        assert_eq!(d4.cartan_entry(2, 4).unwrap(), -1);
        assert_eq!(d4.neighbors(2), &[1, 3, 4]);
    }

    #[test]
    fn colorings() {
        let a3 = DynkinDiagram::type_a(3).unwrap();
        let c = a3.bipartite_coloring().unwrap().to_map();
        assert_eq!(c, BTreeMap::from([(1, 0), (2, 1), (3, 0)]));
        let d4 = DynkinDiagram::type_d(4).unwrap();
        let c = d4.bipartite_coloring().unwrap().to_map();
        assert_eq!(c, BTreeMap::from([(1, 0), (2, 1), (3, 0), (4, 0)]));
        let triangle = DynkinDiagram::simply_laced(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(triangle.bipartite_coloring(), Err(Error::OddCycle));
    }

    #[test]
    fn invalid_diagrams() {
        assert!(DynkinDiagram::simply_laced(3, &[(1, 2)]).is_err());
        assert!(DynkinDiagram::simply_laced(2, &[(1, 1)]).is_err());
        assert!(DynkinDiagram::simply_laced(2, &[(1, 2), (2, 1)]).is_err());
        assert!(DynkinDiagram::type_d(3).is_err());
    }

    #[test]
    fn simple_roots() {
        let a2 = DynkinDiagram::type_a(2).unwrap();
        assert_eq!(
            a2.simple_root_in_weights(1).unwrap(),
            WeightVector::from_pairs([(1, 2), (2, -1)])
        );
        let a1 = DynkinDiagram::type_a(1).unwrap();
        assert_eq!(
            a1.simple_root_in_weights(1).unwrap(),
            WeightVector::from_pairs([(1, 2)])
        );
        let d4 = DynkinDiagram::type_d(4).unwrap();
        assert_eq!(
            d4.simple_root_in_weights(2).unwrap(),
            WeightVector::from_pairs([(1, -1), (2, 2), (3, -1), (4, -1)])
        );
    }

    #[test]
    fn positive_root_counts() {
        for n in 1..=8 {
            let a = DynkinDiagram::type_a(n).unwrap();
            assert_eq!(a.positive_roots().unwrap().len(), n * (n + 1) / 2);
        }
        for n in 4..=8 {
            let d = DynkinDiagram::type_d(n).unwrap();
            assert_eq!(d.positive_roots().unwrap().len(), n * (n - 1));
        }
        // affine A_2 (triangle) is not of finite type
        let tri = DynkinDiagram::simply_laced(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(tri.positive_roots().is_err());
    }

    #[test]
    fn height_functional_is_two_on_simple_roots() {
        let d5 = DynkinDiagram::type_d(5).unwrap();
        let h = d5.height_functional().unwrap();
        for i in d5.nodes() {
            let pairing: i64 = d5.nodes().map(|j| d5.cartan_entry(i, j).unwrap() * h[j]).sum();
            assert_eq!(pairing, 2);
        }
    }

    /// Hook-content formula for `A_n`: dimension of the `GL_{n+1}` module with
    /// partition `lambda` (independent of the Weyl product).
    fn hook_content(n: usize, w: &WeightVector) -> u128 {
        let mut parts = vec![0i64; n + 1];
        for i in 1..=n {
            for k in 0..i {
                parts[k] += w.get(i);
            }
        }
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for (r, &len) in parts.iter().enumerate() {
            for c in 0..len as usize {
                num *= (n as i64 + 1 + c as i64 - r as i64) as u128;
                let arm = len as usize - c - 1;
                let leg = parts.iter().skip(r + 1).filter(|&&l| l as usize > c).count();
                den *= (arm + leg + 1) as u128;
            }
        }
        num / den
    }

    #[test]
    fn weyl_dimension_examples() {
        let a2 = DynkinDiagram::type_a(2).unwrap();
        assert_eq!(a2.weyl_dimension(&WeightVector::fundamental(1)).unwrap(), 3);
        assert_eq!(a2.weyl_dimension(&WeightVector::from_pairs([(1, 2)])).unwrap(), 6);
        assert_eq!(
            a2.weyl_dimension(&WeightVector::from_pairs([(1, 1), (2, 1)])).unwrap(),
            8
        );
        let d4 = DynkinDiagram::type_d(4).unwrap();
        assert_eq!(d4.weyl_dimension(&WeightVector::fundamental(2)).unwrap(), 28);
        assert_eq!(
            a2.weyl_dimension(&WeightVector::from_pairs([(1, -1)])),
            Err(Error::NonDominant)
        );
    }

    #[test]
    fn weyl_dimension_matches_hook_content() {
        for n in 1..=4 {
            let a = DynkinDiagram::type_a(n).unwrap();
            for i in 1..=n {
                for j in i..=n {
                    let w = &WeightVector::fundamental(i) + &WeightVector::fundamental(j);
                    assert_eq!(a.weyl_dimension(&w).unwrap(), hook_content(n, &w));
                }
            }
        }
    }

    #[test]
    fn vector_representations() {
        for n in 1..=8 {
            let a = DynkinDiagram::type_a(n).unwrap();
            assert_eq!(a.weyl_dimension(&WeightVector::fundamental(1)).unwrap(), n as u128 + 1);
        }
        for n in 4..=8 {
            let d = DynkinDiagram::type_d(n).unwrap();
            assert_eq!(d.weyl_dimension(&WeightVector::fundamental(1)).unwrap(), 2 * n as u128);
        }
    }
}
