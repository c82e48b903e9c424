//! The `sl_2`-strings `E_i(m)` and the decomposition of a character into them.

use crate::error::{Error, Result};
use crate::root_data::{DynkinDiagram, Node};
use crate::scalar::Coefficient;

use super::character::Character;
use super::laurent::{t_binomial, Laurent};
use super::monomial::YMonomial;
use super::order::{a_monomial, leq};

const DECOMPOSE_CAP: usize = 1_000_000;

/// One term of `E_i(m)`: the monomial, its coefficient and the number of
/// `A^{-1}` factors separating it from `m`.
pub(crate) struct ExpansionTerm<C> {
    pub monomial: YMonomial,
    pub coeff: Laurent<C>,
    pub depth: i64,
}

/// `E_i(m) = m prod_a sum_{r=0}^{u} t^{r(u-r)} [u, r]_t A_{i,aq}^{-r}` with
/// `u = u_{i,a}(m)`, as a list of terms starting with `m` itself.
pub(crate) fn e_terms<C: Coefficient>(
    m: &YMonomial,
    i: Node,
    d: &DynkinDiagram,
) -> Result<Vec<ExpansionTerm<C>>> {
    d.check_node(i)?;
    if !m.is_i_dominant(i) {
        return Err(Error::NotIDominant {
            monomial: m.to_string(),
            node: i,
        });
    }
    let mut terms = vec![ExpansionTerm {
        monomial: m.clone(),
        coeff: Laurent::one(),
        depth: 0,
    }];
    for (var, u) in m.iter().filter(|(v, _)| v.node == i) {
        let step = a_monomial(d, i, &var.param().shift(1))?.inv();
        let mut factors = Vec::with_capacity(u as usize + 1);
        let mut power = YMonomial::one();
        for r in 0..=u {
            let c = t_binomial::<C>(u as u32, r)?.shift(r * (u - r))?;
            factors.push((power.clone(), c, r));
            power = power.mul(&step);
        }
        let mut next = Vec::with_capacity(terms.len() * factors.len());
        for t in &terms {
            for (p, c, r) in &factors {
                next.push(ExpansionTerm {
                    monomial: t.monomial.mul(p),
                    coeff: t.coeff.checked_mul(c)?,
                    depth: t.depth + r,
                });
            }
        }
        terms = next;
    }
    Ok(terms)
}

/// `E_i(m)` for an `i`-dominant monomial `m`.
pub fn e_expansion<C: Coefficient>(m: &YMonomial, i: Node, d: &DynkinDiagram) -> Result<Character<C>> {
    Character::from_terms(e_terms::<C>(m, i, d)?.into_iter().map(|t| (t.monomial, t.coeff)))
}

/// Write `chi = sum_k c_k E_i(m_k)` with `i`-dominant `m_k`, peeling off a
/// maximal monomial at each step.
pub fn e_decompose<C: Coefficient>(
    chi: &Character<C>,
    i: Node,
    d: &DynkinDiagram,
) -> Result<Vec<(YMonomial, Laurent<C>)>> {
    d.check_node(i)?;
    let height = d.height_functional();
    let mut rest = chi.clone();
    let mut blocks = Vec::new();
    while !rest.is_empty() {
        if blocks.len() >= DECOMPOSE_CAP {
            return Err(Error::IterationCap(DECOMPOSE_CAP));
        }
        let top = match &height {
            Some(h) => highest_by_height(&rest, h),
            None => maximal_by_order(&rest, d),
        };
        if !top.is_i_dominant(i) {
            return Err(Error::NotDecomposable {
                monomial: top.to_string(),
                node: i,
            });
        }
        let c = rest.coeff(&top);
        for t in e_terms::<C>(&top, i, d)? {
            rest.add_term(t.monomial, &t.coeff.checked_mul(&c)?.checked_neg()?)?;
        }
        blocks.push((top, c));
    }
    Ok(blocks)
}

/// `sum u_{j,a}(m) h[j]`, which drops by exactly 2 under every `A^{-1}`.
pub(crate) fn height(m: &YMonomial, h: &[i64]) -> i64 {
    m.iter().map(|(v, e)| e * h.get(v.node).copied().unwrap_or(0)).sum()
}

// Nothing can lie above a monomial of maximal height.
fn highest_by_height<C: Coefficient>(chi: &Character<C>, h: &[i64]) -> YMonomial {
    chi.monomials()
        .max_by(|x, y| height(x, h).cmp(&height(y, h)).then_with(|| y.cmp(x)))
        .expect("nonempty")
        .clone()
}

fn maximal_by_order<C: Coefficient>(chi: &Character<C>, d: &DynkinDiagram) -> YMonomial {
    let all: Vec<&YMonomial> = chi.monomials().collect();
    all.iter()
        .find(|&&m| all.iter().all(|&o| o == m || !leq(m, o, d)))
        .copied()
        .unwrap_or(all[0])
        .clone()
}
