mod args;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tqchar::char_engine::{
    fundamental_character, gamma_graph, order_factors, standard_character, standard_character_ordered,
    FundamentalSpec,
};
use tqchar::io::{character_terms, crystal_to_json, gamma_to_json, monomial_to_json, pretty};
use tqchar::monomial_crystal::{generate_crystal_with, CrystalOptions};
use tqchar::tableaux_a::{fundamental_char_tableaux_a, standard_char_tableaux_a_ordered};
use tqchar::tableaux_d::{
    fundamental_char_tableaux_d, restricted_character_d, spin_char, standard_char_tableaux_d_ordered, Chirality,
};
use tqchar::{DynkinDiagram, Error, QCharacter};

use args::{parse_factors, DiagramArg, Family};

#[derive(Parser, Debug)]
#[command(name = "tqchar", version, about = "t-analogs of q-characters of standard modules (types A and D)")]
struct Cli {
    /// Diagram, `A:<n>` or `D:<n>`.
    #[arg(long, global = true, default_value = "A:2")]
    diagram: DiagramArg,

    /// Comma separated `node:base:qexp` tokens; `spin+:base:qexp` and
    /// `spin-:base:qexp` name the spin nodes of D.
    #[arg(long, global = true)]
    factors: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    /// Evaluate coefficients at this integer value of t.
    #[arg(long = "t-eval", global = true, allow_hyphen_values = true)]
    t_eval: Option<i64>,

    /// Seed for the randomized part of `verify`.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    Engine,
    Tableaux,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character of one l-fundamental module.
    Fundamental {
        #[arg(long, value_enum, default_value_t = Route::Engine)]
        route: Route,
    },
    /// Character of the standard module of a product of fundamentals.
    Standard {
        #[arg(long, value_enum, default_value_t = Route::Engine)]
        route: Route,
        /// Use the factors in the given order instead of ascending order.
        #[arg(long)]
        keep_order: bool,
    },
    /// Character of a spin module of D (factor `spin+:base:qexp` or `spin-:...`).
    Spin {
        #[arg(long, value_enum, default_value_t = Route::Tableaux)]
        route: Route,
    },
    /// Crystal generated from the product of the factors' highest monomials.
    Crystal,
    /// The graph of a standard character: arrows m -> m A_{i,a}^{-1}.
    Graph,
    /// Differential checks of the two routes, closed forms and crystals.
    Verify,
    /// Restricted vector-column character of L(Lambda_N) for D.
    Restrict {
        #[arg(long)]
        node: usize,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownNode(_)
            | Error::InvalidDiagram(_)
            | Error::OutOfRange(_)
            | Error::Parse(_)
            | Error::NoAdmissibleOrder
            | Error::NotLDominant(_)
            | Error::NotInMPrime(_) => Failure::Usage(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn factors(cli: &Cli) -> Result<Vec<FundamentalSpec>, Failure> {
    let list = cli
        .factors
        .as_deref()
        .ok_or_else(|| Failure::Usage("--factors is required for this command".into()))?;
    parse_factors(list, &cli.diagram).map_err(Failure::Usage)
}

fn single_factor(cli: &Cli) -> Result<FundamentalSpec, Failure> {
    let mut fs = factors(cli)?;
    if fs.len() != 1 {
        return Err(Failure::Usage(format!("expected exactly one factor, got {}", fs.len())));
    }
    Ok(fs.remove(0))
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let d = cli.diagram.diagram()?;
    let n = cli.diagram.rank;
    let text = match &cli.command {
        Command::Fundamental { route } => {
            let f = single_factor(cli)?;
            let chi = match route {
                Route::Engine => fundamental_character(&d, &f)?,
                Route::Tableaux => closed_fundamental(cli.diagram.family, n, &f)?,
            };
            render_character(cli, &chi, &d)?
        }
        Command::Spin { route } => {
            let f = single_factor(cli)?;
            let ch = match (cli.diagram.family, Chirality::of_node(n, f.node)) {
                (Family::D, Some(ch)) => ch,
                _ => return Err(Failure::Usage("spin needs a D diagram and a spin+/spin- factor".into())),
            };
            let chi = match route {
                Route::Engine => fundamental_character(&d, &f)?,
                Route::Tableaux => spin_char(n, &f.param, ch)?,
            };
            render_character(cli, &chi, &d)?
        }
        Command::Standard { route, keep_order } => {
            let chi = standard(cli, &d, *route, *keep_order)?;
            render_character(cli, &chi, &d)?
        }
        Command::Graph => {
            let chi = standard(cli, &d, Route::Engine, false)?;
            let g = gamma_graph(&chi, &d)?;
            match cli.output {
                Output::Dot => g.to_dot(),
                Output::Json => pretty(&gamma_to_json(&g)?)?,
                Output::Text => {
                    let mut s = chi.to_string();
                    for e in g.edges() {
                        s.push_str(&format!("{} -[{}]-> {}\n", e.source, g.edge_label(e), e.target));
                    }
                    s
                }
            }
        }
        Command::Crystal => {
            let m0 = args::highest_monomial(&factors(cli)?);
            let mut opts = CrystalOptions::default();
            if let Some(cap) = max_vertices_override()? {
                opts.max_vertices = cap;
            }
            let g = generate_crystal_with(&m0, &d, opts)?;
            match cli.output {
                Output::Dot => g.to_dot(),
                Output::Json => pretty(&crystal_to_json(&g))?,
                Output::Text => {
                    let mut s = format!("vertices: {}\n", g.len());
                    for v in g.vertices() {
                        s.push_str(&format!("{v}\n"));
                    }
                    for (a, b, i) in g.edges() {
                        s.push_str(&format!("{a} -{i}-> {b}\n"));
                    }
                    s
                }
            }
        }
        Command::Restrict { node } => {
            if cli.diagram.family != Family::D {
                return Err(Failure::Usage("restrict needs a D diagram".into()));
            }
            let r = restricted_character_d(n, *node)?;
            let total: i64 = r.values().sum();
            match cli.output {
                Output::Json => pretty(&json!({
                    "weights": r.iter().map(|(w, c)| json!({
                        "weight": w.iter().map(|(i, x)| json!([i, x])).collect::<Vec<_>>(),
                        "mult": c,
                    })).collect::<Vec<_>>(),
                    "total": total,
                }))?,
                _ => {
                    let mut s = String::new();
                    for (w, c) in &r {
                        s.push_str(&format!("{c} {w}\n"));
                    }
                    s.push_str(&format!("total: {total}\n"));
                    s
                }
            }
        }
        Command::Verify => {
            let checks = verify::run(&cli.diagram, cli.seed)?;
            let ok = checks.iter().all(|c| c.ok());
            let s = match cli.output {
                Output::Json => pretty(&json!({
                    "diagram": cli.diagram.to_string(),
                    "checks": checks.iter().map(|c| json!({
                        "name": c.name, "pass": c.ok(), "failures": c.failures,
                    })).collect::<Vec<_>>(),
                    "pass": ok,
                }))?,
                _ => {
                    let mut s = String::new();
                    for c in &checks {
                        let tag = if c.ok() { "PASS" } else { "FAIL" };
                        s.push_str(&format!("{tag} {}\n", c.name));
                        for f in c.failures.iter().take(10) {
                            s.push_str(&format!("  {f}\n"));
                        }
                    }
                    s.push_str(if ok { "verify: pass\n" } else { "verify: FAIL\n" });
                    s
                }
            };
            return Ok((s, ok));
        }
    };
    Ok((text, true))
}

fn closed_fundamental(family: Family, n: usize, f: &FundamentalSpec) -> tqchar::Result<QCharacter> {
    match (family, Chirality::of_node(n, f.node)) {
        (Family::A, _) => fundamental_char_tableaux_a(n, f.node, &f.param),
        (Family::D, Some(ch)) => spin_char(n, &f.param, ch),
        (Family::D, None) => fundamental_char_tableaux_d(n, f.node, &f.param),
    }
}

fn standard(cli: &Cli, d: &DynkinDiagram, route: Route, keep_order: bool) -> Result<QCharacter, Failure> {
    let fs = factors(cli)?;
    let order = if keep_order { fs.clone() } else { order_factors(&fs)? };
    Ok(match route {
        Route::Engine if keep_order => standard_character_ordered(d, &order)?,
        Route::Engine => standard_character(d, &args::drinfeld(&fs))?,
        Route::Tableaux => match cli.diagram.family {
            Family::A => standard_char_tableaux_a_ordered(cli.diagram.rank, &order)?,
            Family::D => standard_char_tableaux_d_ordered(cli.diagram.rank, &order)?,
        },
    })
}

fn max_vertices_override() -> Result<Option<usize>, Failure> {
    match std::env::var("QCHAR_MAX_VERTICES") {
        Ok(v) => v
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("QCHAR_MAX_VERTICES='{v}' is not a positive integer"))),
        Err(_) => Ok(None),
    }
}

fn render_character(cli: &Cli, chi: &QCharacter, d: &DynkinDiagram) -> Result<String, Failure> {
    if cli.output == Output::Dot {
        return Ok(gamma_graph(chi, d)?.to_dot());
    }
    match (cli.t_eval, cli.output) {
        (None, Output::Json) => Ok(pretty(&character_terms(chi)?)?),
        (None, _) => Ok(chi.to_string()),
        (Some(t0), Output::Json) => {
            let values = chi.specialize_t(t0)?;
            Ok(pretty(&json!({
                "t": t0,
                "terms": values.iter().map(|(m, c)| json!({"monomial": monomial_to_json(m), "value": c})).collect::<Vec<_>>(),
                "total": chi.total_at(t0)?,
            }))?)
        }
        (Some(t0), _) => {
            let mut s = String::new();
            for (m, c) in chi.specialize_t(t0)? {
                s.push_str(&format!("{c} {m}\n"));
            }
            s.push_str(&format!("total: {}\n", chi.total_at(t0)?));
            Ok(s)
        }
    }
}
