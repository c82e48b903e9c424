//! Differential checks run by `tqchar verify`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tqchar::char_engine::{
    admissible_orders, fundamental_character, standard_character, standard_character_ordered, FundamentalSpec,
};
use tqchar::monomial_crystal::{generate_crystal, verify_crystal_axioms};
use tqchar::tableaux_a::{
    d_columns_a, d_columns_via_pairing, enumerate_fundamental_columns_a, fundamental_char_tableaux_a,
    standard_char_tableaux_a_ordered,
};
use tqchar::tableaux_d::{
    enumerate_fundamental_columns_d, enumerate_spin, fundamental_char_tableaux_d, restricted_character_d, spin_char,
    standard_char_tableaux_d_ordered, Chirality,
};
use tqchar::{
    e_decompose, v_profile, DynkinDiagram, QCharacter, Result, SpectralParam, WeightVector, YMonomial,
};

use crate::args::{DiagramArg, Family};

pub struct Check {
    pub name: String,
    pub failures: Vec<String>,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check(name: &str, body: impl FnOnce(&mut Vec<String>) -> Result<()>) -> Check {
    let mut failures = Vec::new();
    if let Err(e) = body(&mut failures) {
        failures.push(format!("error: {e}"));
    }
    Check {
        name: name.to_string(),
        failures,
    }
}

fn q(k: i64) -> SpectralParam {
    SpectralParam::q(k)
}

/// Every direction decomposes into `E_i` blocks and `m_P` is the only
/// l-dominant monomial with nothing above it.
fn axioms_hold(chi: &QCharacter, mp: &YMonomial, d: &DynkinDiagram, fundamental: bool) -> Result<Option<String>> {
    for i in d.nodes() {
        if let Err(e) = e_decompose(chi, i, d) {
            return Ok(Some(format!("direction {i}: {e}")));
        }
    }
    if !chi.coeff(mp).is_one() {
        return Ok(Some(format!("coefficient of {mp} is {}", chi.coeff(mp))));
    }
    for m in chi.monomials().filter(|&m| m != mp) {
        if v_profile(m, mp, d).map(|v| v.is_zero()).unwrap_or(true) {
            return Ok(Some(format!("{m} is not below {mp}")));
        }
    }
    if fundamental && chi.l_dominant_monomials() != vec![mp] {
        return Ok(Some("more than one l-dominant monomial".into()));
    }
    Ok(None)
}

fn tableaux_ordered(family: Family, n: usize, order: &[FundamentalSpec]) -> Result<QCharacter> {
    match family {
        Family::A => standard_char_tableaux_a_ordered(n, order),
        Family::D => standard_char_tableaux_d_ordered(n, order),
    }
}

fn weight(pairs: &[(usize, i64)]) -> WeightVector {
    WeightVector::from_pairs(pairs.iter().copied())
}

pub fn run(arg: &DiagramArg, seed: Option<u64>) -> Result<Vec<Check>> {
    let d = arg.diagram()?;
    let n = arg.rank;
    let mut out = Vec::new();

    out.push(check("fundamentals: tableaux = engine", |bad| {
        let nodes: Vec<usize> = match arg.family {
            Family::A => (1..=n).collect(),
            Family::D => (1..=n).filter(|&i| i + 2 > n || i <= 3).collect(),
        };
        for i in nodes {
            let f = FundamentalSpec::new(i, q(0));
            let engine: QCharacter = fundamental_character(&d, &f)?;
            let closed: QCharacter = match (arg.family, Chirality::of_node(n, i)) {
                (Family::A, _) => fundamental_char_tableaux_a(n, i, &q(0))?,
                (Family::D, Some(ch)) => spin_char(n, &q(0), ch)?,
                (Family::D, None) => fundamental_char_tableaux_d(n, i, &q(0))?,
            };
            if engine != closed {
                bad.push(format!("{f}"));
            }
            if let Some(why) = axioms_hold(&engine, &f.highest(), &d, true)? {
                bad.push(format!("{f}: {why}"));
            }
        }
        Ok(())
    }));

    out.push(check("two-factor products: tableaux = engine", |bad| {
        let nodes: Vec<usize> = if n <= 4 { (1..=n).collect() } else { vec![1, 2, n - 1, n] };
        let span = if arg.family == Family::D { 0..=2 } else { 0..=3 };
        for &i in &nodes {
            for &j in &nodes {
                for k in span.clone() {
                    let fs = [FundamentalSpec::new(i, q(0)), FundamentalSpec::new(j, q(k))];
                    for order in admissible_orders(&fs) {
                        let engine: QCharacter = standard_character_ordered(&d, &order)?;
                        if engine != tableaux_ordered(arg.family, n, &order)? {
                            bad.push(format!("{}, {}", order[0], order[1]));
                        }
                    }
                }
            }
        }
        Ok(())
    }));

    out.push(check("closed forms = generic u and v", |bad| {
        match arg.family {
            Family::A => {
                let m = n.min(4);
                for la in 1..=m {
                    for lb in 1..=m {
                        for k in -4..=4 {
                            for ca in enumerate_fundamental_columns_a(m, la, &q(0))? {
                                for cb in enumerate_fundamental_columns_a(m, lb, &q(k))? {
                                    if d_columns_a(&ca, &cb) != d_columns_via_pairing(&ca, &cb)? {
                                        bad.push(format!("d({ca}, {cb}) on A_{m}"));
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Family::D => {
                let span = -4 * n as i64..=4 * n as i64;
                for len in 1..=(n - 2).min(3) {
                    for c in enumerate_fundamental_columns_d(n, len, &q(0))? {
                        let (mt, v) = (c.monomial(), v_profile(&c.monomial(), &c.highest(), &d)?);
                        for i in 1..=n {
                            for s in span.clone() {
                                if c.closed_u(i, s) != mt.u(i, &q(s)) || c.closed_v(i, s) != v.get(i, &q(s + 1)) {
                                    bad.push(format!("{c} at ({i}, {s})"));
                                }
                            }
                        }
                    }
                }
                for ch in [Chirality::Plus, Chirality::Minus] {
                    for c in enumerate_spin(n, &q(0), ch)? {
                        let (mt, v) = (c.monomial(), v_profile(&c.monomial(), &c.highest(), &d)?);
                        for i in 1..=n {
                            for s in span.clone() {
                                if c.closed_u(i, s) != mt.u(i, &q(s)) || c.closed_v(i, s) != v.get(i, &q(s)) {
                                    bad.push(format!("{c} at ({i}, {s})"));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }));

    out.push(check("crystals: size and axioms", |bad| {
        let mut tops: Vec<(YMonomial, WeightVector)> = match arg.family {
            Family::A => vec![
                (YMonomial::y(1, &q(0)).mul(&YMonomial::y(1, &q(2))), weight(&[(1, 2)])),
            ],
            Family::D => vec![(YMonomial::y(2, &q(1)), weight(&[(2, 1)]))],
        };
        if arg.family == Family::A && n >= 2 {
            tops.push((YMonomial::y(1, &q(0)).mul(&YMonomial::y(2, &q(1))), weight(&[(1, 1), (2, 1)])));
        }
        for i in 1..=n {
            tops.push((YMonomial::y(i, &q(0)), weight(&[(i, 1)])));
        }
        for (m0, w) in tops {
            let g = generate_crystal(&m0, &d)?;
            let dim = d.weyl_dimension(&w)?;
            if g.len() as u128 != dim {
                bad.push(format!("B from {m0}: {} vertices, expected {dim}", g.len()));
            }
            for line in verify_crystal_axioms(&g) {
                bad.push(format!("B from {m0}: {line}"));
            }
        }
        Ok(())
    }));

    if arg.family == Family::D {
        out.push(check("restriction of L(Lambda_2)", |bad| {
            let r = restricted_character_d(n, 2)?;
            let total: i64 = r.values().sum();
            let dim = d.weyl_dimension(&weight(&[(2, 1)]))?;
            if total as u128 != dim {
                bad.push(format!("restricted count {total}, expected {dim}"));
            }
            let full: QCharacter = fundamental_char_tableaux_d(n, 2, &q(0))?;
            let mut rest: BTreeMap<WeightVector, i64> = BTreeMap::new();
            for (m, c) in full.iter() {
                *rest.entry(tqchar::weight_of(m)).or_insert(0) += c.eval(1)?;
            }
            for (w, c) in &r {
                *rest.entry(w.clone()).or_insert(0) -= c;
            }
            rest.retain(|_, c| *c != 0);
            if rest != BTreeMap::from([(WeightVector::zero(), 1)]) {
                bad.push(format!("residual {rest:?}"));
            }
            Ok(())
        }));
    }

    if let Some(seed) = seed {
        out.push(check("random products: tableaux = engine", |bad| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let nodes: Vec<usize> = (1..=n).filter(|&i| arg.family == Family::A || i <= 2 || i + 2 > n).collect();
            for _ in 0..6 {
                let count = rng.gen_range(2..=3);
                let fs: Vec<FundamentalSpec> = (0..count)
                    .map(|_| FundamentalSpec::new(nodes[rng.gen_range(0..nodes.len())], q(rng.gen_range(0..4))))
                    .collect();
                let p = crate::args::drinfeld(&fs);
                let engine: QCharacter = standard_character(&d, &p)?;
                let order = tqchar::char_engine::order_factors(&fs)?;
                if engine != tableaux_ordered(arg.family, n, &order)? {
                    bad.push(format!("{p}"));
                }
                if let Some(why) = axioms_hold(&engine, &p.monomial(), &d, false)? {
                    bad.push(format!("{p}: {why}"));
                }
            }
            Ok(())
        }));
    }
    Ok(out)
}
