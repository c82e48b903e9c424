//! Parsing of the diagram flag and factor tokens.

use std::fmt;
use std::str::FromStr;

use tqchar::char_engine::FundamentalSpec;
use tqchar::{Base, DrinfeldData, DynkinDiagram, SpectralParam, YMonomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    A,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramArg {
    pub family: Family,
    pub rank: usize,
}

impl DiagramArg {
    pub fn diagram(&self) -> tqchar::Result<DynkinDiagram> {
        match self.family {
            Family::A => DynkinDiagram::type_a(self.rank),
            Family::D => DynkinDiagram::type_d(self.rank),
        }
    }
}

impl FromStr for DiagramArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (fam, rank) = s
            .split_once(':')
            .ok_or_else(|| format!("expected A:<n> or D:<n>, got '{s}'"))?;
        let family = match fam {
            "A" | "a" => Family::A,
            "D" | "d" => Family::D,
            other => return Err(format!("unknown family '{other}' (expected A or D)")),
        };
        let rank: usize = rank
            .parse()
            .map_err(|_| format!("rank '{rank}' is not a positive integer"))?;
        let min = if family == Family::A { 1 } else { 4 };
        if rank < min {
            return Err(format!("{fam}:{rank} needs rank >= {min}"));
        }
        Ok(Self { family, rank })
    }
}

impl fmt::Display for DiagramArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = if self.family == Family::A { "A" } else { "D" };
        write!(f, "{fam}:{}", self.rank)
    }
}

/// Parse `node:base:qexp` tokens (or `spin+:base:qexp`, `spin-:base:qexp`
/// in type D) separated by commas.
pub fn parse_factors(list: &str, diagram: &DiagramArg) -> Result<Vec<FundamentalSpec>, String> {
    let mut out = Vec::new();
    for (k, tok) in list.split(',').enumerate() {
        let pos = k + 1;
        let tok = tok.trim();
        let parts: Vec<&str> = tok.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("factor {pos} ('{tok}'): expected node:base:qexp"));
        }
        let node = match parts[0] {
            "spin+" | "spin-" if diagram.family == Family::D => {
                if parts[0] == "spin+" {
                    diagram.rank
                } else {
                    diagram.rank - 1
                }
            }
            "spin+" | "spin-" => return Err(format!("factor {pos} ('{tok}'): spin factors need a D diagram")),
            s => s
                .parse::<usize>()
                .ok()
                .filter(|&i| (1..=diagram.rank).contains(&i))
                .ok_or_else(|| format!("factor {pos} ('{tok}'): node '{s}' is not in 1..={}", diagram.rank))?,
        };
        let base = Base::new(parts[1]).map_err(|e| format!("factor {pos} ('{tok}'): {e}"))?;
        let qexp: i64 = parts[2]
            .parse()
            .map_err(|_| format!("factor {pos} ('{tok}'): qexp '{}' is not an integer", parts[2]))?;
        out.push(FundamentalSpec::new(node, SpectralParam::new(base, qexp)));
    }
    Ok(out)
}

pub fn drinfeld(fs: &[FundamentalSpec]) -> DrinfeldData {
    DrinfeldData::new(fs.iter().map(|f| (f.node, f.param.clone())))
}

pub fn highest_monomial(fs: &[FundamentalSpec]) -> YMonomial {
    fs.iter().fold(YMonomial::one(), |m, f| m.mul(&f.highest()))
}
