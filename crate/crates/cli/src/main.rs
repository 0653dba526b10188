//! Command-line front end: construction, computation, verification, search
//! and reference-value reproduction. Machine-readable JSON goes to stdout,
//! diagnostics to stderr; the exit code is 0 iff all checks passed.

mod spec;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spectrajoin::graph::{build_matrix, Graph, MatrixKind};
use spectrajoin::join::{join, JoinKind};
use spectrajoin::lab::nics::{nics_pair, NicsTemplate};
use spectrajoin::lab::regression;
use spectrajoin::lab::search::SearchCache;
use spectrajoin::lab::theorems::{verify_charpoly_theorem, CharpolyTheorem};
use spectrajoin::spectra::{closed_form_spectrum, numeric_spectrum};

use crate::spec::parse_graph_spec;

#[derive(Parser)]
#[command(name = "spectrajoin", version, about = "Splitting joins, exact spectra and cospectral graph construction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the plain, NS or NNS join of two graphs
    Join {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
        /// Output format: graph6, json or dot
        #[arg(long, default_value = "json")]
        out: String,
    },
    /// Print one of the four matrices of a graph, exactly
    Matrix {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        matrix: String,
    },
    /// Exact characteristic polynomial of one of the four matrices
    Charpoly {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        matrix: String,
    },
    /// Eigenvalues, by direct numeric solve or by the closed join formulas
    Spectrum {
        #[arg(long, conflicts_with = "join")]
        graph: Option<String>,
        /// Join context: KIND G1 G2 (e.g. --join nns K2 K1)
        #[arg(long, num_args = 3, value_names = ["KIND", "G1", "G2"])]
        join: Option<Vec<String>>,
        #[arg(long)]
        matrix: String,
        /// direct | closed-form
        #[arg(long, default_value = "direct")]
        method: String,
    },
    /// Check a characteristic-polynomial or spectrum identity
    Verify {
        /// 4.1a 4.1b 4.2a 4.2b 4.3a 4.3b (exact identities) or
        /// 5.1 6.1 6.2 6.3 6.4 (closed form vs numeric oracle)
        #[arg(long)]
        theorem: String,
        #[arg(long, requires = "g2")]
        g1: Option<String>,
        #[arg(long, requires = "g1")]
        g2: Option<String>,
        /// Number of random trials (alternative to --g1/--g2)
        #[arg(long, conflicts_with_all = ["g1", "g2"])]
        random: Option<usize>,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build and certify a cospectral non-isomorphic pair from a template
    Nics {
        /// cor4.4a cor4.4b cor4.5a cor4.5b cor5.2 cor6.5
        #[arg(long)]
        template: String,
        /// Template inputs (3 graphs, or 4 for the double-pair templates)
        #[arg(long, num_args = 3..=4)]
        inputs: Vec<String>,
    },
    /// Exhaustively enumerate r-regular graphs on n vertices and bucket
    /// them by exact adjacency characteristic polynomial
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Isomorphism test with witness
    Iso {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
    },
    /// Recompute reference spectra and constructions and diff them
    Reproduce {
        /// all, one of the eight reference names (k2-ns-f .. h-nns-k2),
        /// fig8 or fig9
        #[arg(long)]
        example: String,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}

fn matrix_kind(s: &str) -> Result<MatrixKind> {
    MatrixKind::parse(s).ok_or_else(|| anyhow!("unknown matrix kind `{s}` (use A, L, Q or NL)"))
}

fn join_kind(s: &str) -> Result<JoinKind> {
    JoinKind::parse(s).ok_or_else(|| anyhow!("unknown join kind `{s}` (use plain, ns or nns)"))
}

fn emit(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Join { kind, g1, g2, out } => {
            let joined = join(join_kind(&kind)?, &parse_graph_spec(&g1)?, &parse_graph_spec(&g2)?);
            match out.as_str() {
                "graph6" => println!("{}", spectrajoin::graph6::encode(&joined)?),
                "json" => emit(&joined.to_json()),
                "dot" => println!("{}", joined.to_dot()),
                other => bail!("unknown output format `{other}`"),
            }
            Ok(0)
        }
        Command::Matrix { graph, matrix } => {
            let g = parse_graph_spec(&graph)?;
            let kind = matrix_kind(&matrix)?;
            let m = build_matrix(&g, kind);
            let rows: Vec<Vec<String>> = (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| spectrajoin::algebra::rat_to_string(&m[(i, j)])).collect())
                .collect();
            emit(&serde_json::json!({"kind": kind.letter(), "n": m.rows(), "entries": rows}));
            Ok(0)
        }
        Command::Charpoly { graph, matrix } => {
            let g = parse_graph_spec(&graph)?;
            let p = build_matrix(&g, matrix_kind(&matrix)?).charpoly()?;
            emit(&p.to_json());
            Ok(0)
        }
        Command::Spectrum { graph, join: join_ctx, matrix, method } => {
            let kind = matrix_kind(&matrix)?;
            let spectrum = match (method.as_str(), &graph, &join_ctx) {
                ("direct", Some(spec), None) => numeric_spectrum(&parse_graph_spec(spec)?, kind),
                ("direct", None, Some(ctx)) => {
                    let (jk, g1, g2) = parse_join_ctx(ctx)?;
                    numeric_spectrum(&join(jk, &g1, &g2), kind)
                }
                ("closed-form", None, Some(ctx)) => {
                    let (jk, g1, g2) = parse_join_ctx(ctx)?;
                    closed_form_spectrum(jk, kind, &g1, &g2)
                        .context("closed-form spectra require a regular join context")?
                }
                ("closed-form", Some(_), None) => {
                    bail!("closed-form spectra need a join context (--join KIND G1 G2)")
                }
                (m, None, None) => bail!("`{m}` needs either --graph or --join"),
                (m, _, _) => bail!("unknown method `{m}` (use direct or closed-form)"),
            };
            emit(&spectrum.to_json());
            Ok(0)
        }
        Command::Verify { theorem, g1, g2, random, max_n, seed } => {
            run_verify(&theorem, g1.as_deref(), g2.as_deref(), random, max_n, seed)
        }
        Command::Nics { template, inputs } => {
            let t = NicsTemplate::parse(&template)
                .ok_or_else(|| anyhow!("unknown template `{template}`"))?;
            let graphs: Result<Vec<Graph>> = inputs.iter().map(|s| parse_graph_spec(s)).collect();
            let report = nics_pair(t, &graphs?)?;
            emit(&report.to_json());
            Ok(if report.snics() { 0 } else { 1 })
        }
        Command::Search { n, r } => {
            let outcome = SearchCache::from_env().find_pairs(n, r)?;
            let graphs: Result<Vec<String>, _> =
                outcome.graphs.iter().map(spectrajoin::graph6::encode).collect();
            emit(&serde_json::json!({
                "n": outcome.n,
                "r": outcome.r,
                "graphs": graphs?,
                "pairs": outcome.pairs.iter().map(|&(i, j)| vec![i, j]).collect::<Vec<_>>(),
            }));
            Ok(0)
        }
        Command::Iso { g1, g2 } => {
            let a = parse_graph_spec(&g1)?;
            let b = parse_graph_spec(&g2)?;
            let witness = spectrajoin::iso::are_isomorphic(&a, &b);
            emit(&serde_json::json!({
                "isomorphic": witness.is_some(),
                "witness": witness,
            }));
            Ok(0)
        }
        Command::Reproduce { example } => run_reproduce(&example),
    }
}

fn parse_join_ctx(ctx: &[String]) -> Result<(JoinKind, Graph, Graph)> {
    Ok((
        join_kind(&ctx[0])?,
        parse_graph_spec(&ctx[1])?,
        parse_graph_spec(&ctx[2])?,
    ))
}

/// Spectrum-theorem oracles compare at this tolerance.
const ORACLE_TOL: f64 = 1e-8;

enum TheoremCheck {
    Identity(CharpolyTheorem),
    SpectrumOracle { jk: JoinKind, mk: MatrixKind },
}

fn theorem_check(token: &str) -> Result<TheoremCheck> {
    if let Some(t) = CharpolyTheorem::parse(token) {
        return Ok(TheoremCheck::Identity(t));
    }
    let (jk, mk) = match token {
        "5.1" => (JoinKind::Ns, MatrixKind::NormalizedLaplacian),
        "6.1" => (JoinKind::Nns, MatrixKind::Adjacency),
        "6.2" => (JoinKind::Nns, MatrixKind::Laplacian),
        "6.3" => (JoinKind::Nns, MatrixKind::SignlessLaplacian),
        "6.4" => (JoinKind::Nns, MatrixKind::NormalizedLaplacian),
        _ => bail!("unknown theorem `{token}`"),
    };
    Ok(TheoremCheck::SpectrumOracle { jk, mk })
}

fn check_pair(check: &TheoremCheck, g1: &Graph, g2: &Graph) -> Result<(bool, serde_json::Value)> {
    match check {
        TheoremCheck::Identity(t) => {
            let rep = verify_charpoly_theorem(*t, g1, g2)?;
            Ok((rep.equal, rep.to_json()))
        }
        TheoremCheck::SpectrumOracle { jk, mk } => {
            let closed = closed_form_spectrum(*jk, *mk, g1, g2)?;
            let direct = numeric_spectrum(&join(*jk, g1, g2), *mk);
            let pass = closed.approx_eq(&direct, ORACLE_TOL);
            Ok((
                pass,
                serde_json::json!({
                    "closed_form": closed.to_json(),
                    "direct": direct.to_json(),
                }),
            ))
        }
    }
}

fn run_verify(
    token: &str,
    g1: Option<&str>,
    g2: Option<&str>,
    random: Option<usize>,
    max_n: usize,
    seed: u64,
) -> Result<i32> {
    let check = theorem_check(token)?;
    let mut all_pass = true;
    let mut trials: Vec<(Graph, Graph)> = Vec::new();
    match (g1, g2, random) {
        (Some(a), Some(b), None) => {
            trials.push((parse_graph_spec(a)?, parse_graph_spec(b)?));
        }
        (None, None, Some(count)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let regular = matches!(check, TheoremCheck::SpectrumOracle { .. });
            for _ in 0..count {
                let (a, b) = if regular {
                    let needs_degree = matches!(
                        check,
                        TheoremCheck::SpectrumOracle {
                            mk: MatrixKind::NormalizedLaplacian,
                            ..
                        }
                    );
                    (
                        random_regular(&mut rng, max_n.min(8), needs_degree)?,
                        random_regular(&mut rng, max_n.min(8), false)?,
                    )
                } else {
                    (random_graph(&mut rng, max_n), random_graph(&mut rng, max_n))
                };
                trials.push((a, b));
            }
        }
        _ => bail!("give either --g1/--g2 or --random N"),
    }
    for (i, (a, b)) in trials.iter().enumerate() {
        let (pass, detail) = check_pair(&check, a, b)?;
        all_pass &= pass;
        emit(&serde_json::json!({
            "trial": i,
            "theorem": token,
            "g1": spectrajoin::graph6::encode(a)?,
            "g2": spectrajoin::graph6::encode(b)?,
            "pass": pass,
            "detail": detail,
        }));
        eprintln!("trial {i}: {}", if pass { "PASS" } else { "FAIL" });
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n.max(1));
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid")
}

fn random_regular(rng: &mut ChaCha8Rng, max_n: usize, positive_degree: bool) -> Result<Graph> {
    loop {
        let n = rng.gen_range(if positive_degree { 2 } else { 1 }..=max_n.max(2));
        let lo = usize::from(positive_degree);
        if n <= lo {
            continue;
        }
        let r = rng.gen_range(lo..n);
        if n * r % 2 == 1 {
            continue;
        }
        let graphs = spectrajoin::lab::search::enumerate_regular(n, r)?;
        if graphs.is_empty() {
            continue;
        }
        let idx = rng.gen_range(0..graphs.len());
        return Ok(graphs[idx].clone());
    }
}

fn run_reproduce(example: &str) -> Result<i32> {
    let mut all_pass = true;
    let mut run_one = |name: &str| -> Result<()> {
        let out = regression::reproduce(name)?;
        emit(&out.to_json());
        eprintln!(
            "{name}: {} (max deviation {:.2e})",
            if out.pass { "PASS" } else { "FAIL" },
            out.max_deviation
        );
        all_pass &= out.pass;
        Ok(())
    };
    match example {
        "all" => {
            for name in regression::reference_example_names() {
                run_one(&name)?;
            }
            for fig in ["fig8", "fig9"] {
                all_pass &= run_figure(fig)?;
            }
        }
        "fig8" | "fig9" => {
            all_pass &= run_figure(example)?;
        }
        name => run_one(name)?,
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn run_figure(fig: &str) -> Result<bool> {
    let cache = SearchCache::from_env();
    let report = if fig == "fig8" {
        regression::double_pair_ns_report(&cache)?
    } else {
        regression::double_pair_nns_report(&cache)?
    };
    emit(&report.to_json());
    let pass = report.snics();
    eprintln!("{fig}: {}", if pass { "PASS" } else { "FAIL" });
    Ok(pass)
}
