//! Command-line front end. Exit codes: 0 success, 1 failed verification or
//! internal inconsistency, 2 bad input.

use std::ffi::OsString;
use std::fs;
use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::families::{generate, Family, FamilySpec};
use crate::graph::{Graph, Vertex};
use crate::independence::independence_polynomial;
use crate::poly::Poly;
use crate::stable_path::{
    factor_decomposition, sigma_dfs_tree, sigma_stable_path_tree, stable_path_tree, tree_for,
    DeepDecision, EdgeLabeling, StablePathError,
};
use crate::verify::{run_suite, Suite, VerifyOptions};

#[derive(Debug, Parser)]
#[command(
    name = "sptree",
    version,
    about = "Independence polynomials and stable-path trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a family graph as an edge list.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(short = 'n', long = "n", default_value_t = 0)]
        n: usize,
    },
    /// Independence polynomial of a graph.
    Indpoly {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Ordered stable-path tree in DOT.
    Spt {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        root: Option<Vertex>,
    },
    /// Stable-path tree for a deep decision, in DOT.
    SigmaSpt {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        decision: DecisionArgs,
    },
    /// DFS spanning tree as an edge list.
    Dfs {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        decision: DecisionArgs,
    },
    /// Factor list with multiplicities and the certified product identity.
    Factors {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        decision: DecisionArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sturm certificate for a graph's independence polynomial or a
    /// polynomial given as a JSON coefficient array.
    Realrooted {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = parse_suite, default_value = "all")]
        suite: Suite,
        #[arg(long = "n-max", default_value_t = 12)]
        n_max: usize,
        /// Corpus size for the ratio suite.
        #[arg(long, default_value_t = 100)]
        random_graphs: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DecisionKind {
    LabelOrder,
    EdgeLabel,
}

/// Graph source: a file path (`-` for stdin) or a family.
#[derive(Debug, Args)]
struct Input {
    /// Edge-list file, or `-` for stdin.
    input: Option<String>,
    #[arg(long)]
    family: Option<String>,
    #[arg(short = 'n', long = "n")]
    n: Option<usize>,
}

#[derive(Debug, Args)]
struct DecisionArgs {
    #[arg(long)]
    root: Option<Vertex>,
    #[arg(long, value_enum, default_value_t = DecisionKind::LabelOrder)]
    decision: DecisionKind,
    /// `lex`, `revlex`, or `shuffle:<seed>`.
    #[arg(long, default_value = "lex")]
    edge_order: String,
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    msg: String,
}

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        msg: msg.to_string(),
    }
}

fn internal(msg: impl std::fmt::Display) -> Failure {
    Failure {
        code: 1,
        msg: msg.to_string(),
    }
}

fn from_stable(e: StablePathError) -> Failure {
    match e {
        StablePathError::Inconsistent(_) => internal(e),
        _ => usage(e),
    }
}

enum Loaded {
    Graph { graph: Graph, root: Option<Vertex> },
    Poly(Poly),
}

impl Input {
    fn load_text(&self, stdin: &mut dyn BufRead) -> Result<Option<String>, Failure> {
        match self.input.as_deref() {
            None => Ok(None),
            Some("-") => {
                let mut s = String::new();
                stdin.read_to_string(&mut s).map_err(usage)?;
                Ok(Some(s))
            }
            Some(path) => fs::read_to_string(path)
                .map(Some)
                .map_err(|e| usage(format!("{path}: {e}"))),
        }
    }

    fn load(&self, stdin: &mut dyn BufRead, allow_poly: bool) -> Result<Loaded, Failure> {
        match (&self.family, self.input.is_some()) {
            (Some(_), true) => {
                return Err(usage("give either an input file or --family, not both"))
            }
            (None, false) => return Err(usage("missing input: give a file, `-`, or --family")),
            _ => {}
        }
        if let Some(name) = &self.family {
            let family: Family = name.parse().map_err(usage)?;
            let spec = FamilySpec::new(family, self.n.unwrap_or(0));
            let graph = generate(spec).map_err(usage)?;
            return Ok(Loaded::Graph {
                graph,
                root: spec.root(),
            });
        }
        let text = self.load_text(stdin)?.expect("input present");
        if allow_poly && text.trim_start().starts_with('[') {
            return Poly::from_json(&text).map(Loaded::Poly).map_err(usage);
        }
        let graph = Graph::parse_edge_list(&text).map_err(usage)?;
        Ok(Loaded::Graph { graph, root: None })
    }

    fn graph(&self, stdin: &mut dyn BufRead) -> Result<(Graph, Option<Vertex>), Failure> {
        match self.load(stdin, false)? {
            Loaded::Graph { graph, root } => Ok((graph, root)),
            Loaded::Poly(_) => unreachable!("polynomials not accepted here"),
        }
    }
}

/// Explicit root, else the family's designated root, else the smallest
/// label.
fn pick_root(
    g: &Graph,
    explicit: Option<Vertex>,
    designated: Option<Vertex>,
) -> Result<Vertex, Failure> {
    let root = explicit
        .or(designated)
        .or_else(|| g.labels().first().copied())
        .ok_or_else(|| usage("graph has no vertices"))?;
    if !g.contains(root) {
        return Err(usage(format!("root {root} is not a vertex")));
    }
    Ok(root)
}

fn decision(g: &Graph, args: &DecisionArgs) -> Result<DeepDecision, Failure> {
    if args.decision == DecisionKind::LabelOrder {
        return Ok(DeepDecision::LabelOrder);
    }
    let labeling = match args.edge_order.as_str() {
        "lex" => EdgeLabeling::lexicographic(g),
        "revlex" => EdgeLabeling::reverse_lexicographic(g),
        other => {
            let seed = other
                .strip_prefix("shuffle:")
                .and_then(|s| s.parse::<u64>().ok())
                .ok_or_else(|| usage(format!("unknown edge order {other:?}")))?;
            EdgeLabeling::shuffled(g, &mut ChaCha8Rng::seed_from_u64(seed))
        }
    };
    Ok(DeepDecision::EdgeLabel(labeling))
}

fn io(e: std::io::Error) -> Failure {
    internal(e)
}

/// Parses `args` (program name first) and runs the command. `-n-max` is
/// accepted as a spelling of `--n-max`.
pub fn run<I, S>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString>,
{
    let args = args.into_iter().map(|a| {
        let a: OsString = a.into();
        if a == "-n-max" {
            OsString::from("--n-max")
        } else {
            a
        }
    });
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(cli.command, stdin, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn execute(command: Command, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Gen { family, n } => {
            let family: Family = family.parse().map_err(usage)?;
            let spec = FamilySpec::new(family, n);
            let g = generate(spec).map_err(usage)?;
            let root = spec.root().map_or("none".to_string(), |r| r.to_string());
            writeln!(out, "# family {family} n {n} root {root}").map_err(io)?;
            out.write_all(g.to_edge_list().as_bytes()).map_err(io)?;
        }
        Command::Indpoly { input, format } => {
            let (g, _) = input.graph(stdin)?;
            let p = independence_polynomial(&g);
            match format {
                Format::Text => writeln!(out, "{p}"),
                Format::Json => writeln!(out, "{}", p.to_json()),
            }
            .map_err(io)?;
        }
        Command::Spt { input, root } => {
            let (g, designated) = input.graph(stdin)?;
            let u = pick_root(&g, root, designated)?;
            let t = stable_path_tree(&g, u).map_err(from_stable)?;
            out.write_all(t.to_dot().as_bytes()).map_err(io)?;
        }
        Command::SigmaSpt { input, decision: d } => {
            let (g, designated) = input.graph(stdin)?;
            let u = pick_root(&g, d.root, designated)?;
            let sigma = decision(&g, &d)?;
            let t = sigma_stable_path_tree(&g, u, &sigma).map_err(from_stable)?;
            out.write_all(t.to_dot().as_bytes()).map_err(io)?;
        }
        Command::Dfs { input, decision: d } => {
            let (g, designated) = input.graph(stdin)?;
            let u = pick_root(&g, d.root, designated)?;
            let sigma = decision(&g, &d)?;
            let t = sigma_dfs_tree(&g, u, &sigma).map_err(from_stable)?;
            let edges = t.edges().map(|(a, b)| (t.endpoint(a), t.endpoint(b)));
            let f = Graph::new([u], edges).map_err(internal)?;
            out.write_all(f.to_edge_list().as_bytes()).map_err(io)?;
        }
        Command::Factors {
            input,
            decision: d,
            format,
        } => {
            let (g, designated) = input.graph(stdin)?;
            let u = pick_root(&g, d.root, designated)?;
            let sigma = decision(&g, &d)?;
            let factors = factor_decomposition(&g, u, &sigma).map_err(from_stable)?;
            let product = factors.product(&g).map_err(from_stable)?;
            let tree = tree_for(&g, u, &sigma).map_err(from_stable)?;
            let lhs = &independence_polynomial(&g) * &product;
            let certified = lhs == independence_polynomial(&tree.to_graph());
            match format {
                Format::Text => {
                    for f in &factors.factors {
                        let poly = independence_polynomial(
                            &g.induced_subgraph(&f.vertices).map_err(internal)?,
                        );
                        writeln!(
                            out,
                            "{:?} x{}: {poly}",
                            g.subset_labels(&f.vertices),
                            f.multiplicity
                        )
                        .map_err(io)?;
                    }
                    writeln!(out, "product: {product}").map_err(io)?;
                    let status = if certified { "certified" } else { "FAILED" };
                    writeln!(out, "I(G) * product = I(T): {status}").map_err(io)?;
                }
                Format::Json => {
                    let list: Vec<serde_json::Value> = factors
                        .factors
                        .iter()
                        .map(|f| {
                            serde_json::json!({
                                "vertices": g.subset_labels(&f.vertices),
                                "multiplicity": f.multiplicity,
                            })
                        })
                        .collect();
                    let doc = serde_json::json!({
                        "factors": list,
                        "product": serde_json::from_str::<serde_json::Value>(&product.to_json())
                            .expect("polynomial JSON parses"),
                        "certified": certified,
                    });
                    writeln!(out, "{doc}").map_err(io)?;
                }
            }
            if !certified {
                return Ok(1);
            }
        }
        Command::Realrooted { input, format } => {
            let p = match input.load(stdin, true)? {
                Loaded::Graph { graph, .. } => independence_polynomial(&graph),
                Loaded::Poly(p) => p,
            };
            let r = p.sturm_report().map_err(usage)?;
            match format {
                Format::Text => {
                    let verdict = if r.is_real_rooted() { "yes" } else { "no" };
                    writeln!(out, "real-rooted: {verdict}").map_err(io)?;
                    writeln!(out, "degree: {}", r.degree).map_err(io)?;
                    writeln!(out, "square-free degree: {}", r.squarefree_degree).map_err(io)?;
                    writeln!(
                        out,
                        "sign variations: {} at -inf, {} at +inf",
                        r.variations_neg_inf, r.variations_pos_inf
                    )
                    .map_err(io)?;
                    writeln!(out, "distinct real roots: {}", r.distinct_real_roots())
                        .map_err(io)?;
                }
                Format::Json => {
                    let doc = serde_json::json!({
                        "real_rooted": r.is_real_rooted(),
                        "degree": r.degree,
                        "squarefree_degree": r.squarefree_degree,
                        "variations_neg_inf": r.variations_neg_inf,
                        "variations_pos_inf": r.variations_pos_inf,
                        "distinct_real_roots": r.distinct_real_roots(),
                    });
                    writeln!(out, "{doc}").map_err(io)?;
                }
            }
        }
        Command::Verify {
            suite,
            n_max,
            random_graphs,
            seed,
        } => {
            let opts = VerifyOptions {
                n_max,
                random_graphs,
                seed,
                ..VerifyOptions::default()
            };
            let checks = run_suite(suite, &opts);
            let failed = checks.iter().filter(|c| !c.passed).count();
            for c in &checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    writeln!(out, "{tag} {}", c.name)
                } else {
                    writeln!(out, "{tag} {} ({})", c.name, c.detail)
                }
                .map_err(io)?;
            }
            writeln!(out, "{} checks, {failed} failed", checks.len()).map_err(io)?;
            if failed > 0 {
                return Ok(1);
            }
        }
    }
    Ok(0)
}
