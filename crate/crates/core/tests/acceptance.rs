//! Acceptance report: one PASS/FAIL line per criterion.
//!
//! Exit status is 0 when every criterion passes or fails only with a
//! mismatch listed in `KNOWN_MISMATCHES`; such lines are still printed as
//! FAIL with their details.

use std::cell::Cell;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use tqchar::char_engine::{
    admissible_orders, fundamental_character, gamma_graph, standard_character, standard_character_ordered,
    FundamentalSpec,
};
use tqchar::monomial_crystal::{generate_crystal, orientation_placement, placement_drinfeld, verify_crystal_axioms};
use tqchar::tableaux_a::{
    d_columns_a, d_columns_via_pairing, enumerate_fundamental_columns_a, fundamental_char_tableaux_a,
    standard_char_tableaux_a, standard_char_tableaux_a_ordered,
};
use tqchar::tableaux_d::{
    enumerate_fundamental_columns_d, enumerate_spin, fundamental_char_tableaux_d, restricted_character_d, spin_char,
    standard_char_tableaux_d, standard_char_tableaux_d_ordered, Chirality, DColumn, DLetter,
};
use tqchar::{
    e_decompose, leq, v_profile, weight_of, Base, DrinfeldData, DynkinDiagram, IntLaurent, QCharacter, SpectralParam,
    WeightVector, YMonomial,
};

/// Criterion 1 compares against an arrangement that draws 9 of the 10
/// arrows `m -> m A_{i,a}^{-1}`; the tenth would be diagonal.
const KNOWN_MISMATCHES: &[u32] = &[1];

type Outcome = Result<(), Vec<String>>;

fn m(s: &str) -> YMonomial {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn q(k: i64) -> SpectralParam {
    SpectralParam::q(k)
}

fn p(roots: &[(usize, i64)]) -> DrinfeldData {
    DrinfeldData::new(roots.iter().map(|&(i, k)| (i, q(k))))
}

fn one_plus_t2() -> IntLaurent {
    IntLaurent::from_terms([(0, 1), (2, 1)]).unwrap()
}

fn a2() -> DynkinDiagram {
    DynkinDiagram::type_a(2).unwrap()
}

fn expect(bad: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        bad.push(what());
    }
}

fn finish(bad: Vec<String>) -> Outcome {
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

type Arrow = (YMonomial, YMonomial, usize, i64);

fn arrows(list: &[(&str, &str, usize, i64)]) -> BTreeSet<Arrow> {
    list.iter().map(|&(s, t, i, k)| (m(s), m(t), i, k)).collect()
}

fn gamma_arrows(chi: &QCharacter, d: &DynkinDiagram) -> BTreeSet<Arrow> {
    gamma_graph(chi, d)
        .unwrap()
        .edges()
        .iter()
        .map(|e| (e.source.clone(), e.target.clone(), e.node, e.param.qexp))
        .collect()
}

fn compare_arrows(bad: &mut Vec<String>, got: &BTreeSet<Arrow>, want: &BTreeSet<Arrow>) {
    for (s, t, i, k) in got.difference(want) {
        bad.push(format!("computed arrow not displayed: {s} -({i},q^{k})-> {t}"));
    }
    for (s, t, i, k) in want.difference(got) {
        bad.push(format!("displayed arrow missing: {s} -({i},q^{k})-> {t}"));
    }
}

fn c1() -> Outcome {
    let mut bad = Vec::new();
    let chi: QCharacter = standard_character(&a2(), &p(&[(1, 0), (2, 1)])).unwrap();
    expect(&mut bad, chi.len() == 8, || format!("{} monomials", chi.len()));
    let special = m("Y_{2,aq}Y_{2,aq^3}^{-1}");
    for (mono, c) in chi.iter() {
        let want = if *mono == special { one_plus_t2() } else { IntLaurent::one() };
        expect(&mut bad, *c == want, || format!("coefficient {c} at {mono}"));
    }
    expect(&mut bad, chi.total_at(1).unwrap() == 9, || "total at t=1".into());
    let displayed = arrows(&[
        ("Y_{1,a}Y_{2,aq}", "Y_{1,a}Y_{1,aq^2}Y_{2,aq^3}^{-1}", 2, 2),
        ("Y_{1,a}Y_{1,aq^2}Y_{2,aq^3}^{-1}", "Y_{1,a}Y_{1,aq^4}^{-1}", 1, 3),
        ("Y_{1,a}Y_{1,aq^4}^{-1}", "Y_{1,aq^2}^{-1}Y_{1,aq^4}^{-1}Y_{2,aq}", 1, 1),
        ("Y_{1,a}Y_{2,aq}", "Y_{1,aq^2}^{-1}Y_{2,aq}^2", 1, 1),
        ("Y_{1,a}Y_{1,aq^2}Y_{2,aq^3}^{-1}", "Y_{2,aq}Y_{2,aq^3}^{-1}", 1, 1),
        ("Y_{1,aq^2}^{-1}Y_{1,aq^4}^{-1}Y_{2,aq}", "Y_{1,aq^4}^{-1}Y_{2,aq^3}^{-1}", 2, 2),
        ("Y_{1,aq^2}^{-1}Y_{2,aq}^2", "Y_{2,aq}Y_{2,aq^3}^{-1}", 2, 2),
        ("Y_{2,aq}Y_{2,aq^3}^{-1}", "Y_{1,aq^2}Y_{2,aq^3}^{-2}", 2, 2),
        ("Y_{1,aq^2}Y_{2,aq^3}^{-2}", "Y_{1,aq^4}^{-1}Y_{2,aq^3}^{-1}", 1, 3),
    ]);
    compare_arrows(&mut bad, &gamma_arrows(&chi, &a2()), &displayed);
    finish(bad)
}

fn c2() -> Outcome {
    let mut bad = Vec::new();
    let chi: QCharacter = standard_character(&a2(), &p(&[(1, 0), (1, 0)])).unwrap();
    let want = [
        ("Y_{1,a}^2", false),
        ("Y_{1,a}Y_{1,aq^2}^{-1}Y_{2,aq}", true),
        ("Y_{1,aq^2}^{-2}Y_{2,aq}^2", false),
        ("Y_{1,a}Y_{2,aq^3}^{-1}", true),
        ("Y_{1,aq^2}^{-1}Y_{2,aq}Y_{2,aq^3}^{-1}", true),
        ("Y_{2,aq^3}^{-2}", false),
    ];
    expect(&mut bad, chi.len() == 6, || format!("{} monomials", chi.len()));
    for (s, special) in want {
        let c = if special { one_plus_t2() } else { IntLaurent::one() };
        expect(&mut bad, chi.coeff(&m(s)) == c, || format!("coefficient {} at {s}", chi.coeff(&m(s))));
    }
    expect(&mut bad, chi.total_at(1).unwrap() == 9, || "total at t=1".into());
    finish(bad)
}

fn c3() -> Outcome {
    let mut bad = Vec::new();
    let chi: QCharacter = standard_character(&a2(), &p(&[(1, 0), (1, 2)])).unwrap();
    expect(&mut bad, chi.len() == 9, || format!("{} monomials", chi.len()));
    expect(&mut bad, chi.iter().all(|(_, c)| c.is_one()), || "a coefficient differs from 1".into());
    let grid = [
        ["Y_{1,a}Y_{1,aq^2}", "Y_{2,aq}", "Y_{1,aq^2}Y_{2,aq^3}^{-1}"],
        [
            "Y_{1,a}Y_{1,aq^4}^{-1}Y_{2,aq^3}",
            "Y_{1,aq^2}^{-1}Y_{1,aq^4}^{-1}Y_{2,aq}Y_{2,aq^3}",
            "Y_{1,aq^4}^{-1}",
        ],
        ["Y_{1,a}Y_{2,aq^5}^{-1}", "Y_{1,aq^2}^{-1}Y_{2,aq}Y_{2,aq^5}^{-1}", "Y_{2,aq^3}^{-1}Y_{2,aq^5}^{-1}"],
    ];
    let across = [(1, 1), (2, 2)];
    let down = [(1, 3), (2, 4)];
    let mut want = Vec::new();
    for r in 0..3 {
        for c in 0..2 {
            want.push((grid[r][c], grid[r][c + 1], across[c].0, across[c].1));
            want.push((grid[c][r], grid[c + 1][r], down[c].0, down[c].1));
        }
    }
    compare_arrows(&mut bad, &gamma_arrows(&chi, &a2()), &arrows(&want));
    finish(bad)
}

fn c4() -> Outcome {
    let mut bad = Vec::new();
    let d = DynkinDiagram::type_d(4).unwrap();
    let engine: QCharacter = fundamental_character(&d, &FundamentalSpec::new(2, q(0))).unwrap();
    let tableaux: QCharacter = fundamental_char_tableaux_d(4, 2, &q(0)).unwrap();
    expect(&mut bad, engine == tableaux, || "routes differ".into());
    expect(&mut bad, engine.len() == 28, || format!("{} monomials", engine.len()));
    let col = |i| DColumn::new(4, vec![DLetter::plain(i), DLetter::barred(i)], q(0)).unwrap().monomial();
    let shared = col(2);
    expect(&mut bad, col(3) == shared, || "[2,2̄] and [3,3̄] have different monomials".into());
    for (mono, c) in engine.iter() {
        let want = if *mono == shared { one_plus_t2() } else { IntLaurent::one() };
        expect(&mut bad, *c == want, || format!("coefficient {c} at {mono}"));
    }
    expect(&mut bad, engine.total_at(1).unwrap() == 29, || "total at t=1".into());
    finish(bad)
}

fn c5() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=4 {
        let d = DynkinDiagram::type_a(n).unwrap();
        for i in 1..=n {
            let e: QCharacter = fundamental_character(&d, &FundamentalSpec::new(i, q(0))).unwrap();
            let t: QCharacter = fundamental_char_tableaux_a(n, i, &q(0)).unwrap();
            expect(&mut bad, e == t, || format!("A_{n} fundamental {i}"));
        }
    }
    for n in 2..=3 {
        let d = DynkinDiagram::type_a(n).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                for ki in 0..=3 {
                    for kj in 0..=3 {
                        let fs = [FundamentalSpec::new(i, q(ki)), FundamentalSpec::new(j, q(kj))];
                        let data = p(&[(i, ki), (j, kj)]);
                        let e: QCharacter = standard_character(&d, &data).unwrap();
                        let t: QCharacter = standard_char_tableaux_a(n, &data).unwrap();
                        expect(&mut bad, e == t, || format!("A_{n} {data}"));
                        for order in admissible_orders(&fs) {
                            let eo: QCharacter = standard_character_ordered(&d, &order).unwrap();
                            let to: QCharacter = standard_char_tableaux_a_ordered(n, &order).unwrap();
                            expect(&mut bad, eo == to && eo == e, || format!("A_{n} order {}, {}", order[0], order[1]));
                        }
                    }
                }
            }
        }
    }
    finish(bad)
}

fn c6() -> Outcome {
    let mut bad = Vec::new();
    for n in 4..=5 {
        let d = DynkinDiagram::type_d(n).unwrap();
        for len in 1..=n - 2 {
            let e: QCharacter = fundamental_character(&d, &FundamentalSpec::new(len, q(0))).unwrap();
            let t: QCharacter = fundamental_char_tableaux_d(n, len, &q(0)).unwrap();
            expect(&mut bad, e == t, || format!("D_{n} fundamental {len}"));
        }
        for ch in [Chirality::Plus, Chirality::Minus] {
            let e: QCharacter = fundamental_character(&d, &FundamentalSpec::new(ch.node(n), q(0))).unwrap();
            let t: QCharacter = spin_char(n, &q(0), ch).unwrap();
            expect(&mut bad, e == t, || format!("D_{n} spin {}", ch.sign()));
        }
    }
    let d = DynkinDiagram::type_d(4).unwrap();
    let mut mixed = 0;
    for i in 1..=4 {
        for j in 1..=4 {
            for k in 0..=3 {
                let fs = [FundamentalSpec::new(i, q(0)), FundamentalSpec::new(j, q(k))];
                let data = p(&[(i, 0), (j, k)]);
                let e: QCharacter = standard_character(&d, &data).unwrap();
                let t: QCharacter = standard_char_tableaux_d(4, &data).unwrap();
                expect(&mut bad, e == t, || format!("D_4 {data}"));
                for order in admissible_orders(&fs) {
                    let to: QCharacter = standard_char_tableaux_d_ordered(4, &order).unwrap();
                    expect(&mut bad, to == e, || format!("D_4 order {}, {}", order[0], order[1]));
                }
                if (i <= 2) != (j <= 2) {
                    mixed += 1;
                }
            }
        }
    }
    expect(&mut bad, mixed > 0, || "no mixed spin-vector product".into());
    finish(bad)
}

/// Every `E_i` decomposition exists, `m_P` has coefficient 1 and every other
/// monomial lies strictly below it; fundamentals have no other l-dominant term.
fn axioms(chi: &QCharacter, mp: &YMonomial, d: &DynkinDiagram, fundamental: bool) -> Result<(), String> {
    for i in d.nodes() {
        e_decompose(chi, i, d).map_err(|e| format!("direction {i}: {e}"))?;
    }
    if !chi.coeff(mp).is_one() {
        return Err(format!("coefficient of {mp}"));
    }
    if let Some(x) = chi.monomials().find(|&x| x != mp && !leq(x, mp, d)) {
        return Err(format!("{x} not below {mp}"));
    }
    if fundamental && chi.l_dominant_monomials() != vec![mp] {
        return Err("several l-dominant monomials".into());
    }
    Ok(())
}

fn c7() -> Outcome {
    let diagrams = [
        DynkinDiagram::type_a(2).unwrap(),
        DynkinDiagram::type_a(3).unwrap(),
        DynkinDiagram::type_d(4).unwrap(),
    ];
    let config = Config {
        cases: 60,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[7; 32]));
    let count = Cell::new(0usize);
    let strategy = (0usize..3, prop::collection::vec((0usize..8, 0i64..4), 1..=3));
    let result = runner.run(&strategy, |(k, raw)| {
        let d = &diagrams[k];
        let roots: Vec<(usize, i64)> = raw.iter().map(|&(i, s)| (1 + i % d.rank(), s)).collect();
        let data = p(&roots);
        let chi: QCharacter = standard_character(d, &data).map_err(|e| TestCaseError::fail(e.to_string()))?;
        axioms(&chi, &data.monomial(), d, roots.len() == 1).map_err(|e| TestCaseError::fail(format!("{data}: {e}")))?;
        count.set(count.get() + 1);
        Ok(())
    });
    let mut bad = Vec::new();
    if let Err(e) = result {
        bad.push(e.to_string());
    }
    expect(&mut bad, count.get() >= 50, || format!("only {} instances", count.get()));
    finish(bad)
}

type Edge = (YMonomial, YMonomial, usize);

fn crystal_matches(bad: &mut Vec<String>, top: &str, edges: &[(&str, &str, usize)]) {
    let g = generate_crystal(&m(top), &a2()).unwrap();
    let want_edges: BTreeSet<Edge> = edges.iter().map(|&(s, t, i)| (m(s), m(t), i)).collect();
    let mut want_vertices: BTreeSet<YMonomial> = want_edges.iter().flat_map(|e| [e.0.clone(), e.1.clone()]).collect();
    want_vertices.insert(m(top));
    expect(bad, *g.vertices() == want_vertices, || format!("vertices of B({top})"));
    expect(bad, *g.edges() == want_edges, || format!("edges of B({top})"));
    for line in verify_crystal_axioms(&g) {
        bad.push(format!("B({top}): {line}"));
    }
}

fn c8() -> Outcome {
    let mut bad = Vec::new();
    crystal_matches(
        &mut bad,
        "Y_{1,a}Y_{2,aq}",
        &[
            ("Y_{1,a}Y_{2,aq}", "Y_{1,a}Y_{1,aq^2}Y_{2,aq^3}^{-1}", 2),
            ("Y_{1,a}Y_{1,aq^2}Y_{2,aq^3}^{-1}", "Y_{1,a}Y_{1,aq^4}^{-1}", 1),
            ("Y_{1,a}Y_{1,aq^4}^{-1}", "Y_{1,aq^2}^{-1}Y_{1,aq^4}^{-1}Y_{2,aq}", 1),
            ("Y_{1,a}Y_{2,aq}", "Y_{1,aq^2}^{-1}Y_{2,aq}^2", 1),
            ("Y_{1,aq^2}^{-1}Y_{1,aq^4}^{-1}Y_{2,aq}", "Y_{1,aq^4}^{-1}Y_{2,aq^3}^{-1}", 2),
            ("Y_{1,aq^2}^{-1}Y_{2,aq}^2", "Y_{2,aq}Y_{2,aq^3}^{-1}", 2),
            ("Y_{2,aq}Y_{2,aq^3}^{-1}", "Y_{1,aq^2}Y_{2,aq^3}^{-2}", 2),
            ("Y_{1,aq^2}Y_{2,aq^3}^{-2}", "Y_{1,aq^4}^{-1}Y_{2,aq^3}^{-1}", 1),
        ],
    );
    crystal_matches(
        &mut bad,
        "Y_{1,a}^2",
        &[
            ("Y_{1,a}^2", "Y_{1,a}Y_{1,aq^2}^{-1}Y_{2,aq}", 1),
            ("Y_{1,a}Y_{1,aq^2}^{-1}Y_{2,aq}", "Y_{1,aq^2}^{-2}Y_{2,aq}^2", 1),
            ("Y_{1,a}Y_{1,aq^2}^{-1}Y_{2,aq}", "Y_{1,a}Y_{2,aq^3}^{-1}", 2),
            ("Y_{1,aq^2}^{-2}Y_{2,aq}^2", "Y_{1,aq^2}^{-1}Y_{2,aq}Y_{2,aq^3}^{-1}", 2),
            ("Y_{1,a}Y_{2,aq^3}^{-1}", "Y_{1,aq^2}^{-1}Y_{2,aq}Y_{2,aq^3}^{-1}", 1),
            ("Y_{1,aq^2}^{-1}Y_{2,aq}Y_{2,aq^3}^{-1}", "Y_{2,aq^3}^{-2}", 2),
        ],
    );
    crystal_matches(
        &mut bad,
        "Y_{1,a}Y_{1,aq^2}",
        &[
            ("Y_{1,a}Y_{1,aq^2}", "Y_{1,a}Y_{1,aq^4}^{-1}Y_{2,aq^3}", 1),
            ("Y_{1,a}Y_{1,aq^4}^{-1}Y_{2,aq^3}", "Y_{1,aq^2}^{-1}Y_{1,aq^4}^{-1}Y_{2,aq}Y_{2,aq^3}", 1),
            ("Y_{1,a}Y_{1,aq^4}^{-1}Y_{2,aq^3}", "Y_{1,a}Y_{2,aq^5}^{-1}", 2),
            ("Y_{1,aq^2}^{-1}Y_{1,aq^4}^{-1}Y_{2,aq}Y_{2,aq^3}", "Y_{1,aq^2}^{-1}Y_{2,aq}Y_{2,aq^5}^{-1}", 2),
            ("Y_{1,a}Y_{2,aq^5}^{-1}", "Y_{1,aq^2}^{-1}Y_{2,aq}Y_{2,aq^5}^{-1}", 1),
            ("Y_{1,aq^2}^{-1}Y_{2,aq}Y_{2,aq^5}^{-1}", "Y_{2,aq^3}^{-1}Y_{2,aq^5}^{-1}", 2),
        ],
    );

    let mut cases: Vec<(DynkinDiagram, YMonomial)> = Vec::new();
    for n in 2..=3 {
        let d = DynkinDiagram::type_a(n).unwrap();
        for i in 1..=n {
            cases.push((d.clone(), YMonomial::y(i, &q(0))));
        }
        cases.push((d.clone(), m("Y_{1,a}Y_{1,aq^2}")));
        cases.push((d.clone(), m("Y_{1,a}Y_{2,aq}")));
    }
    cases.push((DynkinDiagram::type_d(4).unwrap(), YMonomial::y(2, &q(1))));
    for (d, top) in cases {
        let g = generate_crystal(&top, &d).unwrap();
        let dim = d.weyl_dimension(&weight_of(&top)).unwrap();
        expect(&mut bad, g.len() as u128 == dim, || {
            format!("{}: B({top}) has {} vertices, dimension {dim}", d.name(), g.len())
        });
        for line in verify_crystal_axioms(&g) {
            bad.push(format!("{}: B({top}): {line}", d.name()));
        }
    }
    finish(bad)
}

fn c9() -> Outcome {
    let mut bad = Vec::new();
    let d = a2();
    let base = Base::new("a").unwrap();
    let cases = [
        (vec![(2, 1)], WeightVector::from_pairs([(1, 1), (2, 1)])),
        (vec![(1, 2)], WeightVector::from_pairs([(1, 2)])),
        (vec![(2, 1)], WeightVector::from_pairs([(1, 2)])),
    ];
    for (orientation, w) in cases {
        let placement = orientation_placement(&d, &orientation).unwrap();
        let data = placement_drinfeld(&placement, &w, &base);
        let chi: QCharacter = standard_character(&d, &data).unwrap();
        let g = generate_crystal(&data.monomial(), &d).unwrap();
        let monomials: BTreeSet<YMonomial> = chi.monomials().cloned().collect();
        expect(&mut bad, monomials == *g.vertices(), || format!("{data}: monomials differ from crystal vertices"));
    }
    finish(bad)
}

fn c10() -> Outcome {
    let mut bad = Vec::new();
    let mut pairs = 0usize;
    for n in 2..=3 {
        for la in 1..=n {
            for lb in 1..=n {
                for k in -4..=4 {
                    for ca in enumerate_fundamental_columns_a(n, la, &q(0)).unwrap() {
                        for cb in enumerate_fundamental_columns_a(n, lb, &q(k)).unwrap() {
                            pairs += 1;
                            expect(&mut bad, d_columns_a(&ca, &cb) == d_columns_via_pairing(&ca, &cb).unwrap(), || {
                                format!("A_{n}: d({ca}, {cb})")
                            });
                        }
                    }
                }
            }
        }
    }
    let mut columns = 0usize;
    for n in 4..=5 {
        let d = DynkinDiagram::type_d(n).unwrap();
        let span = -4 * n as i64..=4 * n as i64;
        for len in 1..=n - 2 {
            for c in enumerate_fundamental_columns_d(n, len, &q(0)).unwrap() {
                columns += 1;
                let (mono, v) = (c.monomial(), v_profile(&c.monomial(), &c.highest(), &d).unwrap());
                for i in 1..=n {
                    for s in span.clone() {
                        expect(&mut bad, c.closed_u(i, s) == mono.u(i, &q(s)), || format!("D_{n}: u of {c} at ({i},{s})"));
                        expect(&mut bad, c.closed_v(i, s) == v.get(i, &q(s + 1)), || {
                            format!("D_{n}: v of {c} at ({i},{s})")
                        });
                    }
                }
            }
        }
        for ch in [Chirality::Plus, Chirality::Minus] {
            for c in enumerate_spin(n, &q(0), ch).unwrap() {
                columns += 1;
                let (mono, v) = (c.monomial(), v_profile(&c.monomial(), &c.highest(), &d).unwrap());
                for i in 1..=n {
                    for s in span.clone() {
                        expect(&mut bad, c.closed_u(i, s) == mono.u(i, &q(s)), || format!("D_{n}: u of {c} at ({i},{s})"));
                        expect(&mut bad, c.closed_v(i, s) == v.get(i, &q(s)), || format!("D_{n}: v of {c} at ({i},{s})"));
                    }
                }
            }
        }
    }
    expect(&mut bad, pairs > 0 && columns > 0, || "nothing enumerated".into());
    finish(bad)
}

fn c11() -> Outcome {
    let mut bad = Vec::new();
    let r = restricted_character_d(4, 2).unwrap();
    let count: i64 = r.values().sum();
    expect(&mut bad, count == 28, || format!("restricted count {count}"));
    let full: QCharacter = fundamental_char_tableaux_d(4, 2, &q(0)).unwrap();
    let mut residual = std::collections::BTreeMap::<WeightVector, i64>::new();
    for (mono, c) in full.iter() {
        *residual.entry(weight_of(mono)).or_insert(0) += c.eval(1).unwrap();
    }
    for (w, c) in &r {
        *residual.entry(w.clone()).or_insert(0) -= c;
    }
    residual.retain(|_, c| *c != 0);
    expect(&mut bad, residual == [(WeightVector::zero(), 1)].into(), || format!("residual {residual:?}"));
    let d = DynkinDiagram::type_d(4).unwrap();
    let dim = d.weyl_dimension(&WeightVector::fundamental(2)).unwrap();
    expect(&mut bad, dim == 28, || format!("dim V(Lambda_2) = {dim}"));
    finish(bad)
}

fn main() {
    let criteria: [(u32, &str, Duration, fn() -> Outcome); 11] = [
        (1, "A_2 Y_{1,a}Y_{2,aq}: 8 terms, one 1+t^2, total 9, graph arrows", Duration::from_secs(1), c1),
        (2, "A_2 Y_{1,a}^2: 6 terms with coefficients 1,1+t^2,1,1+t^2,1+t^2,1", Duration::from_secs(1), c2),
        (3, "A_2 Y_{1,a}Y_{1,aq^2}: 9 terms, 3x3 grid", Duration::from_secs(1), c3),
        (4, "D_4 L(Lambda_2): 28 terms, one 1+t^2, total 29, both routes", Duration::from_secs(5), c4),
        (5, "type A tableaux = engine", Duration::from_secs(120), c5),
        (6, "type D tableaux = engine", Duration::from_secs(300), c6),
        (7, "axioms on random standard modules", Duration::from_secs(300), c7),
        (8, "monomial crystals: graphs and Weyl dimensions", Duration::from_secs(30), c8),
        (9, "orientation data: monomials = crystal vertices", Duration::from_secs(30), c9),
        (10, "closed d, u, v = generic pairing", Duration::from_secs(300), c10),
        (11, "D_4 restriction: 28 + trivial", Duration::from_secs(30), c11),
    ];
    let mut unexpected = 0;
    for (id, name, limit, body) in criteria {
        let start = Instant::now();
        let mut outcome = body();
        let elapsed = start.elapsed();
        if elapsed > limit {
            outcome = Err(vec![format!("took {elapsed:?}, limit {limit:?}")]);
        }
        match outcome {
            Ok(()) => println!("PASS {id:>2} {name} ({} ms)", elapsed.as_millis()),
            Err(details) => {
                let known = KNOWN_MISMATCHES.contains(&id);
                let tag = if known { " [known mismatch]" } else { "" };
                println!("FAIL {id:>2} {name} ({} ms){tag}", elapsed.as_millis());
                for line in &details {
                    println!("       {line}");
                }
                if !known {
                    unexpected += 1;
                }
            }
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
