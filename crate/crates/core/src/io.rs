//! JSON forms of characters, Γ graphs and crystal graphs.
//!
//! A character is an array of terms
//! `{"monomial": [{"node", "base", "qexp", "exp"}...], "coeff": [{"texp", "c"}...]}`
//! in canonical monomial order.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::char_engine::GammaGraph;
use crate::error::{Error, Result};
use crate::monomial_crystal::CrystalGraph;
use crate::root_data::Node;
use crate::scalar::Coefficient;
use crate::yalgebra::{Base, Character, Laurent, SpectralParam, Var, YMonomial};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarJson {
    pub node: Node,
    pub base: String,
    pub qexp: i64,
    pub exp: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub texp: i64,
    pub c: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub monomial: Vec<VarJson>,
    pub coeff: Vec<CoeffJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaEdgeJson {
    pub source: usize,
    pub target: usize,
    pub node: Node,
    pub base: String,
    pub qexp: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaJson {
    pub character: Vec<TermJson>,
    pub edges: Vec<GammaEdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalEdgeJson {
    pub source: usize,
    pub target: usize,
    pub color: Node,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalJson {
    pub highest: String,
    pub vertices: Vec<String>,
    pub edges: Vec<CrystalEdgeJson>,
}

pub fn monomial_to_json(m: &YMonomial) -> Vec<VarJson> {
    m.iter()
        .map(|(v, e)| VarJson {
            node: v.node,
            base: v.base.as_str().to_string(),
            qexp: v.qexp,
            exp: e,
        })
        .collect()
}

pub fn monomial_from_json(vars: &[VarJson]) -> Result<YMonomial> {
    let mut pairs = Vec::with_capacity(vars.len());
    for v in vars {
        if v.node == 0 {
            return Err(Error::Parse("node 0 in monomial".into()));
        }
        let param = SpectralParam::new(Base::new(&v.base)?, v.qexp);
        pairs.push((Var::new(v.node, &param), v.exp));
    }
    Ok(YMonomial::from_exponents(pairs))
}

fn laurent_to_json<C: Coefficient>(c: &Laurent<C>) -> Result<Vec<CoeffJson>> {
    c.iter()
        .map(|(k, x)| {
            Ok(CoeffJson {
                texp: k,
                c: x.to_i64().ok_or(Error::Overflow)?,
            })
        })
        .collect()
}

fn laurent_from_json<C: Coefficient>(terms: &[CoeffJson]) -> Result<Laurent<C>> {
    let mut out = Laurent::zero();
    for t in terms {
        out.add_assign_checked(&Laurent::monomial(C::from_i64(t.c).ok_or(Error::Overflow)?, t.texp))?;
    }
    Ok(out)
}

pub fn character_terms<C: Coefficient>(chi: &Character<C>) -> Result<Vec<TermJson>> {
    chi.iter()
        .map(|(m, c)| {
            Ok(TermJson {
                monomial: monomial_to_json(m),
                coeff: laurent_to_json(c)?,
            })
        })
        .collect()
}

pub fn character_from_terms<C: Coefficient>(terms: &[TermJson]) -> Result<Character<C>> {
    let mut out = Character::zero();
    for t in terms {
        out.add_term(monomial_from_json(&t.monomial)?, &laurent_from_json(&t.coeff)?)?;
    }
    Ok(out)
}

pub fn character_to_json<C: Coefficient>(chi: &Character<C>) -> Result<Value> {
    serde_json::to_value(character_terms(chi)?).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty-printed JSON text with a trailing newline.
pub fn character_to_json_string<C: Coefficient>(chi: &Character<C>) -> Result<String> {
    pretty(&character_terms(chi)?)
}

pub fn character_from_json_str<C: Coefficient>(s: &str) -> Result<Character<C>> {
    let terms: Vec<TermJson> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    character_from_terms(&terms)
}

pub fn gamma_to_json<C: Coefficient>(g: &GammaGraph<C>) -> Result<GammaJson> {
    let index: std::collections::BTreeMap<&YMonomial, usize> =
        g.vertices().monomials().enumerate().map(|(k, m)| (m, k)).collect();
    Ok(GammaJson {
        character: character_terms(g.vertices())?,
        edges: g
            .edges()
            .iter()
            .map(|e| GammaEdgeJson {
                source: index[&e.source],
                target: index[&e.target],
                node: e.node,
                base: e.param.base.as_str().to_string(),
                qexp: e.param.qexp,
            })
            .collect(),
    })
}

pub fn crystal_to_json(g: &CrystalGraph) -> CrystalJson {
    let index: std::collections::BTreeMap<&YMonomial, usize> =
        g.vertices().iter().enumerate().map(|(k, m)| (m, k)).collect();
    CrystalJson {
        highest: g.highest().to_string(),
        vertices: g.vertices().iter().map(|m| m.to_string()).collect(),
        edges: g
            .edges()
            .iter()
            .filter_map(|(s, t, i)| {
                Some(CrystalEdgeJson {
                    source: *index.get(s)?,
                    target: *index.get(t)?,
                    color: *i,
                })
            })
            .collect(),
    }
}

pub fn pretty<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}
