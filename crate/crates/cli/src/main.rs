//! Command line front end for the degree-similarity toolkit.
//!
//! Machine-readable JSON goes to standard output; diagnostics go to
//! standard error.  Exit codes: 0 success, 1 failed mathematical
//! assertion, 2 usage error (from the argument parser), 3 bad input data.

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use degsim_core::algebra::{determinant_divisor, snf, tpoly_primitive_bipoly, BiPoly};
use degsim_core::canon::{are_isomorphic, canonical_form};
use degsim_core::constructions::{
    apply_op_vector_pair, builtin_seed_pair, degree_preserving, mckay_pair, path_family_pair,
    validate_tree_t, OpVector, TreeTData,
};
use degsim_core::error::{Error, Result};
use degsim_core::graph6::{parse_auto, parse_graph6, to_graph6};
use degsim_core::named;
use degsim_core::par;
use degsim_core::search::{
    ds_determined_assertions, ds_pair_search, mu_char_matrix, snf_family_experiment,
    snf_random_tree_experiment, BaseKind, FilterKind, SearchConfig,
};
use degsim_core::similarity::{degree_similar, DsOptions};
use degsim_core::spectra::{alpha_polynomial, cospectral, mu_polynomial, SpectrumKind};
use degsim_core::srg::{srg_params, sweep_mu_equal};
use degsim_core::{DegreePartition, Graph, RootedGraph};

/// Exact-arithmetic toolkit for mu-polynomials, Smith normal forms over
/// Q(mu)[t], degree-similarity decisions, and cospectral-pair generators.
#[derive(Parser)]
#[command(name = "degsim", version, max_term_width = 100)]
struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Graph input: a file path (graph6 or edge list, auto-detected),
    /// `named:NAME` (e.g. named:petersen, named:C5, "named:K3,3"),
    /// `g6:STRING` for an inline graph6 literal, or `-` for stdin.
    #[arg(long)]
    graph: String,
}

#[derive(Args)]
struct PairArg {
    /// First graph (same forms as --graph).
    #[arg(long)]
    g1: String,
    /// Second graph (same forms as --graph).
    #[arg(long)]
    g2: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print psi(G) = det(tI - A + mu D) with its coefficient array.
    MuPoly(GraphArg),
    /// Print det(tI - A - alpha J) with its coefficient array.
    AlphaPoly(GraphArg),
    /// Smith normal form of tI - A + mu D over Q(mu)[t].
    Snf(GraphArg),
    /// k-th determinant divisor (gcd of all k x k minors) of tI - A + mu D.
    DetDivisor {
        #[command(flatten)]
        graph: GraphArg,
        /// Minor order k, 1..=n.
        #[arg(long)]
        k: usize,
    },
    /// Exact cospectrality test for a chosen matrix family.
    Cospectral {
        #[command(flatten)]
        pair: PairArg,
        /// adjacency | laplacian | signless | normalized | mu | alpha |
        /// complement-pair
        #[arg(long, default_value = "adjacency")]
        kind: String,
    },
    /// Decide degree similarity: is there one invertible M with
    /// M^-1 A1 M = A2 and M^-1 D1 M = D2?
    DegreeSimilar {
        #[command(flatten)]
        pair: PairArg,
        #[arg(long, default_value_t = 0xD5)]
        seed: u64,
        /// Randomized rounds before a probabilistic refusal.
        #[arg(long, default_value_t = 40)]
        rounds: usize,
    },
    /// Rewrite a degree-similar pair cell by cell (keep / complement /
    /// empty inside each degree class and across each class pair),
    /// streaming the cospectral output pairs as JSON lines.
    Construct {
        /// First input graph; defaults to the builtin seed pair.
        #[arg(long, requires = "g2")]
        g1: Option<String>,
        /// Second input graph, degree-similar to the first.
        #[arg(long, requires = "g1")]
        g2: Option<String>,
        /// Single rewrite plan by enumeration index; omit for all plans.
        #[arg(long)]
        index: Option<u128>,
        /// Re-verify adjacency cospectrality (and complement
        /// cospectrality) of every output pair; any failure exits 1.
        #[arg(long)]
        verify: bool,
    },
    /// Coalesce a rooted base graph with the builtin 16-vertex tree at
    /// each of the tree's two distinguished roots, yielding a
    /// mu-cospectral pair.
    MckayPair {
        /// Attach a path with this many edges (0 = the bare tree pair).
        #[arg(long, conflicts_with_all = ["base", "root"])]
        path_m: Option<usize>,
        /// Base graph to attach (same forms as --graph).
        #[arg(long, requires = "root")]
        base: Option<String>,
        /// Root vertex of the base graph.
        #[arg(long, requires = "base")]
        root: Option<usize>,
    },
    /// Strongly regular graph utilities.
    #[command(subcommand)]
    Srg(SrgCommand),
    /// Search enumerated graph families for degree-similar pairs.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Long-form verification experiments.
    #[command(subcommand)]
    Experiment(ExperimentCommand),
    /// Basic isomorphism-invariant summary of one graph.
    Invariants(GraphArg),
    /// Validate the shipped data files (tree, seed pair, optional
    /// strongly-regular family); any failing check exits 3.
    ValidateData {
        /// Directory holding the data files; defaults to $DEGSIM_DATA_DIR,
        /// then ./data.
        #[arg(long)]
        data_dir: Option<PathBuf>,
    },
    /// Canonical form of a graph as graph6.
    Canon(GraphArg),
}

#[derive(Subcommand)]
enum SrgCommand {
    /// Strongly-regular parameters (n, k, a, c), if any.
    Params(GraphArg),
    /// Delete a subgraph inside every clique of the given size and check
    /// all resulting mu-polynomials agree; exits 1 if they differ.
    Sweep {
        #[command(flatten)]
        graph: GraphArg,
        /// Subgraph to delete (same forms as --graph, e.g. named:P3).
        #[arg(long)]
        h: String,
        /// Size of the host cliques (must equal the subgraph order).
        #[arg(long)]
        clique_size: usize,
        /// Also require the complement mu-polynomials to agree (host must
        /// be strongly regular).
        #[arg(long)]
        complement: bool,
    },
}

#[derive(Subcommand)]
enum SearchCommand {
    /// Exhaustive degree-similar pair search over connected unicyclic
    /// graphs with at most --max-n vertices.
    Unicyclic {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Comma-separated filter chain, in order; a pair reaches the
        /// oracle only if it agrees on every filter key.
        #[arg(long, default_value = "degree-sequence,girth,mu-polynomial,snf")]
        filters: String,
        #[arg(long, default_value_t = 0xD5)]
        seed: u64,
        /// Work-unit cap (filter evaluations + oracle calls).
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Subcommand)]
enum ExperimentCommand {
    /// Coalescence-family Smith normal forms: attach a path or star of
    /// each size in --m-lo..=--m-hi and report per-instance results as
    /// JSON lines plus a summary line.
    SnfFamily {
        /// path (attached by an endpoint) or star (attached by its
        /// centre; needs at least 2 leaves).
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 0)]
        m_lo: usize,
        #[arg(long, default_value_t = 2)]
        m_hi: usize,
    },
    /// The same measurements on random rooted tree bases.
    RandomTrees {
        #[arg(long, default_value_t = 3)]
        trials: usize,
        /// Largest base tree size, 2..=6.
        #[arg(long, default_value_t = 5)]
        max_base: usize,
        #[arg(long, default_value_t = 0xD5)]
        seed: u64,
    },
    /// Check that near-cycle and cycle-tree family members are determined
    /// by degree similarity among unicyclic graphs of the same order.
    DsDetermined {
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Offer every same-order unicyclic graph to the oracle instead
        /// of only those matching on degree sequence and mu-polynomial.
        #[arg(long)]
        no_prefilter: bool,
    },
}

#[derive(Serialize)]
struct PolyOutput {
    /// Human-readable polynomial, canonical term order.
    formatted: String,
    /// Exact degree in t.
    degree_t: Option<usize>,
    /// Exact degree in the second variable.
    degree_other: Option<usize>,
    /// coefficients[i][j] multiplies t^i * (mu or alpha)^j.
    coefficients: Vec<Vec<String>>,
}

impl PolyOutput {
    fn new(p: &BiPoly, other: &str) -> Self {
        PolyOutput {
            formatted: p.format("t", other),
            degree_t: p.deg_t(),
            degree_other: p.deg_mu(),
            coefficients: p.coeff_strings(),
        }
    }
}

fn read_graph(spec: &str) -> Result<Graph> {
    if let Some(name) = spec.strip_prefix("named:") {
        return named::from_name(name);
    }
    if let Some(lit) = spec.strip_prefix("g6:") {
        return parse_graph6(lit.trim());
    }
    let text = if spec == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(spec)?
    };
    parse_auto(&text)
}

fn emit<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serialization")
    );
}

fn emit_line<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("report serialization")
    );
}

/// Ok(true) = success, Ok(false) = a mathematical assertion failed
/// (exit 1); Err = input or data problem.
fn run(cli: Cli) -> Result<bool> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Error::InvalidInput("--jobs must be at least 1".into()));
        }
        par::configure_threads(jobs);
    }
    match cli.command {
        Command::MuPoly(arg) => {
            let g = read_graph(&arg.graph)?;
            let psi = mu_polynomial(&g)?;
            emit(&PolyOutput::new(&psi, "mu"));
            Ok(true)
        }
        Command::AlphaPoly(arg) => {
            let g = read_graph(&arg.graph)?;
            let p = alpha_polynomial(&g)?;
            emit(&PolyOutput::new(&p, "alpha"));
            Ok(true)
        }
        Command::Snf(arg) => {
            let g = read_graph(&arg.graph)?;
            let s = snf(&mu_char_matrix(&g))?;
            #[derive(Serialize)]
            struct SnfOutput {
                rank: usize,
                /// Monic invariant factors d_1 | ... | d_rank over Q(mu)[t].
                invariant_factors: Vec<String>,
                /// The same factors as primitive integer polynomials.
                primitive_factors: Vec<String>,
                /// True when the first rank-1 factors are all 1.
                ones_then_single: bool,
                det_recheck: bool,
            }
            emit(&SnfOutput {
                rank: s.rank,
                invariant_factors: s
                    .invariant_factors
                    .iter()
                    .map(degsim_core::algebra::format_tpoly)
                    .collect(),
                primitive_factors: s
                    .primitive_factors
                    .iter()
                    .map(|p| p.format("t", "mu"))
                    .collect(),
                ones_then_single: s.is_ones_then_single_nontrivial(),
                det_recheck: s.det_recheck,
            });
            Ok(true)
        }
        Command::DetDivisor { graph, k } => {
            let g = read_graph(&graph.graph)?;
            let d = determinant_divisor(&mu_char_matrix(&g), k)?;
            #[derive(Serialize)]
            struct DivisorOutput {
                k: usize,
                divisor: String,
                primitive: String,
            }
            emit(&DivisorOutput {
                k,
                divisor: degsim_core::algebra::format_tpoly(&d),
                primitive: tpoly_primitive_bipoly(&d).format("t", "mu"),
            });
            Ok(true)
        }
        Command::Cospectral { pair, kind } => {
            let kind = SpectrumKind::parse(&kind)?;
            let g1 = read_graph(&pair.g1)?;
            let g2 = read_graph(&pair.g2)?;
            let equal = cospectral(&g1, &g2, kind)?;
            #[derive(Serialize)]
            struct CospectralOutput {
                kind: String,
                cospectral: bool,
            }
            emit(&CospectralOutput {
                kind: format!("{kind:?}"),
                cospectral: equal,
            });
            Ok(true)
        }
        Command::DegreeSimilar { pair, seed, rounds } => {
            let g1 = read_graph(&pair.g1)?;
            let g2 = read_graph(&pair.g2)?;
            let opts = DsOptions {
                seed,
                rounds,
                ..DsOptions::default()
            };
            let decision = degree_similar(&g1, &g2, &opts);
            emit(&decision);
            Ok(true)
        }
        Command::Construct {
            g1,
            g2,
            index,
            verify,
        } => {
            let (g1, g2) = match (g1, g2) {
                (Some(a), Some(b)) => (read_graph(&a)?, read_graph(&b)?),
                _ => builtin_seed_pair(),
            };
            let pi = DegreePartition::of(&g1);
            if !pi.matches(&DegreePartition::of(&g2)) {
                return Err(Error::Precondition(
                    "the input graphs have different degree partitions".into(),
                ));
            }
            if pi.cells != DegreePartition::of(&g2).cells {
                return Err(Error::Precondition(
                    "the degree partitions are not cell-aligned; relabel the inputs".into(),
                ));
            }
            let t = pi.part_count();
            let plans: Vec<OpVector> = match index {
                Some(i) => vec![OpVector::from_index(t, i).ok_or_else(|| {
                    Error::InvalidInput(format!("index {i} out of range for {t} cells"))
                })?],
                None => OpVector::all_for(t)?,
            };
            #[derive(Serialize)]
            struct ConstructLine {
                index: u128,
                g1: String,
                g2: String,
                degree_preserving: bool,
                verified: Option<bool>,
            }
            let mut all_verified = true;
            for ops in &plans {
                let (h1, h2) = apply_op_vector_pair(&g1, &g2, &pi, ops)?;
                let verified = if verify {
                    let ok = cospectral(&h1, &h2, SpectrumKind::AdjacencyAndComplement)?;
                    all_verified &= ok;
                    Some(ok)
                } else {
                    None
                };
                emit_line(&ConstructLine {
                    index: ops.index(),
                    g1: to_graph6(&h1),
                    g2: to_graph6(&h2),
                    degree_preserving: degree_preserving(&pi, &g1, ops)?
                        && degree_preserving(&pi, &g2, ops)?,
                    verified,
                });
            }
            Ok(all_verified)
        }
        Command::MckayPair { path_m, base, root } => {
            let data = TreeTData::builtin();
            let (c1, c2) = match (path_m, base) {
                (Some(m), _) => path_family_pair(&data, m)?,
                (None, Some(spec)) => {
                    let g = read_graph(&spec)?;
                    let rooted = RootedGraph::new(g, root.expect("clap enforces --root"))?;
                    mckay_pair(&data, &rooted)?
                }
                (None, None) => {
                    return Err(Error::InvalidInput(
                        "give either --path-m or --base with --root".into(),
                    ))
                }
            };
            #[derive(Serialize)]
            struct PairOutput {
                n: usize,
                g1: String,
                g2: String,
                mu_cospectral: bool,
                isomorphic: bool,
            }
            emit(&PairOutput {
                n: c1.n(),
                g1: to_graph6(&c1),
                g2: to_graph6(&c2),
                mu_cospectral: mu_polynomial(&c1)? == mu_polynomial(&c2)?,
                isomorphic: are_isomorphic(&c1, &c2)?,
            });
            Ok(true)
        }
        Command::Srg(SrgCommand::Params(arg)) => {
            let g = read_graph(&arg.graph)?;
            #[derive(Serialize)]
            struct ParamsOutput {
                strongly_regular: bool,
                params: Option<degsim_core::srg::SrgParams>,
            }
            let params = srg_params(&g);
            emit(&ParamsOutput {
                strongly_regular: params.is_some(),
                params,
            });
            Ok(true)
        }
        Command::Srg(SrgCommand::Sweep {
            graph,
            h,
            clique_size,
            complement,
        }) => {
            let g = read_graph(&graph.graph)?;
            let h = read_graph(&h)?;
            let report = sweep_mu_equal(&g, &h, clique_size)?;
            if complement && report.complement_psi_distinct.is_none() {
                return Err(Error::Precondition(
                    "--complement needs a strongly regular host graph".into(),
                ));
            }
            let ok = report.psi_distinct <= 1
                && (!complement || report.complement_psi_distinct == Some(1));
            emit(&report);
            Ok(ok)
        }
        Command::Search(SearchCommand::Unicyclic {
            max_n,
            filters,
            seed,
            budget,
        }) => {
            let filters = filters
                .split(',')
                .map(|s| FilterKind::parse(s.trim()))
                .collect::<Result<Vec<_>>>()?;
            let config = SearchConfig {
                max_n,
                filters,
                seed,
                budget,
            };
            let report = ds_pair_search(&config)?;
            let ok = report.total_yes == 0;
            emit(&report);
            Ok(ok)
        }
        Command::Experiment(ExperimentCommand::SnfFamily { base, m_lo, m_hi }) => {
            let base = BaseKind::parse(&base)?;
            let data = TreeTData::builtin();
            let report = snf_family_experiment(&data, base, m_lo, m_hi)?;
            for instance in &report.instances {
                emit_line(instance);
            }
            emit_line(&summary_of(&report));
            Ok(report.all_expected)
        }
        Command::Experiment(ExperimentCommand::RandomTrees {
            trials,
            max_base,
            seed,
        }) => {
            let data = TreeTData::builtin();
            let report = snf_random_tree_experiment(&data, trials, max_base, seed)?;
            for instance in &report.instances {
                emit_line(instance);
            }
            emit_line(&summary_of(&report));
            Ok(report.all_expected)
        }
        Command::Experiment(ExperimentCommand::DsDetermined {
            min_n,
            max_n,
            no_prefilter,
        }) => {
            let report = ds_determined_assertions(min_n, max_n, !no_prefilter)?;
            let ok = report.violations.is_empty();
            emit(&report);
            Ok(ok)
        }
        Command::Invariants(arg) => {
            let g = read_graph(&arg.graph)?;
            emit(&g.invariants());
            Ok(true)
        }
        Command::ValidateData { data_dir } => {
            let report = validate_data(data_dir)?;
            let ok = report.all_passed;
            emit(&report);
            if ok {
                Ok(true)
            } else {
                // A shipped file failing its checks is a data error, not a
                // mathematical assertion failure.
                Err(Error::DataValidation {
                    check: report
                        .failing
                        .first()
                        .cloned()
                        .unwrap_or_else(|| "unknown".into()),
                    msg: "see the JSON report on standard output".into(),
                })
            }
        }
        Command::Canon(arg) => {
            let g = read_graph(&arg.graph)?;
            let c = canonical_form(&g)?;
            #[derive(Serialize)]
            struct CanonOutput {
                canonical_graph6: String,
            }
            emit(&CanonOutput {
                canonical_graph6: to_graph6(&c),
            });
            Ok(true)
        }
    }
}

#[derive(Serialize)]
struct FamilySummary {
    base: String,
    instances: usize,
    all_expected: bool,
    snf_shape_all: bool,
    findings: Vec<String>,
}

fn summary_of(report: &degsim_core::search::SnfFamilyReport) -> FamilySummary {
    FamilySummary {
        base: report.base.clone(),
        instances: report.instances.len(),
        all_expected: report.all_expected,
        snf_shape_all: report.snf_shape_all,
        findings: report.findings.clone(),
    }
}

#[derive(Serialize)]
struct DataCheck {
    file: String,
    check: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct DataReport {
    checks: Vec<DataCheck>,
    /// Optional files that were absent (not an error).
    skipped: Vec<String>,
    all_passed: bool,
    #[serde(skip)]
    failing: Vec<String>,
}

fn data_root(cli_dir: Option<PathBuf>) -> PathBuf {
    cli_dir
        .or_else(|| std::env::var_os("DEGSIM_DATA_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("data"))
}

fn validate_data(cli_dir: Option<PathBuf>) -> Result<DataReport> {
    let root = data_root(cli_dir);
    let mut checks = Vec::new();
    let mut skipped = Vec::new();

    // The 16-vertex tree with its two roots.
    let tree_path = root.join("mckay-tree16.txt");
    let file = tree_path.display().to_string();
    match std::fs::read_to_string(&tree_path) {
        Err(e) => checks.push(DataCheck {
            file,
            check: "readable".into(),
            passed: false,
            detail: e.to_string(),
        }),
        Ok(text) => match TreeTData::from_text(&text) {
            Err(e) => checks.push(DataCheck {
                file,
                check: "parse".into(),
                passed: false,
                detail: e.to_string(),
            }),
            Ok(data) => {
                let report = validate_tree_t(&data)?;
                for c in report.checks {
                    checks.push(DataCheck {
                        file: file.clone(),
                        check: c.name,
                        passed: c.passed,
                        detail: c.detail,
                    });
                }
            }
        },
    }

    // The seed pair for the rewrite generator.
    for name in ["seed-pair-a.txt", "seed-pair-b.txt"] {
        let path = root.join(name);
        let file = path.display().to_string();
        match std::fs::read_to_string(&path).map_err(Error::from).and_then(|t| parse_auto(&t)) {
            Err(e) => checks.push(DataCheck {
                file,
                check: "parse".into(),
                passed: false,
                detail: e.to_string(),
            }),
            Ok(g) => {
                let expected = if name.ends_with("a.txt") {
                    builtin_seed_pair().0
                } else {
                    builtin_seed_pair().1
                };
                let matches = g.n() == expected.n() && g.edges() == expected.edges();
                checks.push(DataCheck {
                    file,
                    check: "matches-builtin".into(),
                    passed: matches,
                    detail: format!("{} vertices, {} edges", g.n(), g.num_edges()),
                });
            }
        }
    }
    if checks.iter().all(|c| c.passed) {
        let (s1, s2) = builtin_seed_pair();
        let decision = degree_similar(&s1, &s2, &DsOptions::default());
        checks.push(DataCheck {
            file: "builtin seed pair".into(),
            check: "degree-similar-non-isomorphic".into(),
            passed: format!("{:?}", decision.verdict) == "Yes" && !are_isomorphic(&s1, &s2)?,
            detail: format!("verdict {:?}", decision.verdict),
        });
    }

    // Optional strongly-regular (25, 12; 5, 6) family, one graph6 per line.
    let srg_path = root.join("srg-25-12-5-6.g6");
    if srg_path.exists() {
        let file = srg_path.display().to_string();
        let text = std::fs::read_to_string(&srg_path)?;
        let mut parsed = 0usize;
        let mut srg_ok = true;
        let mut detail = String::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match parse_graph6(line) {
                Err(e) => {
                    srg_ok = false;
                    detail = format!("line {}: {e}", i + 1);
                    break;
                }
                Ok(g) => {
                    let p = srg_params(&g);
                    let want = p.map(|p| (p.n, p.d, p.a, p.c)) == Some((25, 12, 5, 6));
                    if !want {
                        srg_ok = false;
                        detail = format!("line {}: not srg(25, 12; 5, 6): {p:?}", i + 1);
                        break;
                    }
                    parsed += 1;
                }
            }
        }
        if srg_ok {
            detail = format!("{parsed} graphs, all srg(25, 12; 5, 6)");
        }
        checks.push(DataCheck {
            file,
            check: "srg-family".into(),
            passed: srg_ok,
            detail,
        });
    } else {
        skipped.push(srg_path.display().to_string());
    }

    let failing: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.check.clone())
        .collect();
    let all_passed = failing.is_empty();
    Ok(DataReport {
        checks,
        skipped,
        all_passed,
        failing,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("degsim: assertion failed; see the JSON report");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("degsim: {e}");
            if e.is_data_error() {
                ExitCode::from(3)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
