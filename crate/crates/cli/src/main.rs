//! `wellcovered`: well-coveredness of graphs and Cartesian products.
//!
//! Exit status: 0 on success or pass, 1 when a violation or counterexample is
//! found, 2 on usage or input errors.

mod input;

use std::collections::BTreeSet;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wellcovered::certificates::{
    build_clique_family, family_product_assignment, verify_certificate, witness_prism_girth5_isolatable_traced,
    witness_product_isolatable_deg2, witness_product_leaf, witness_product_order3, Certificate, FamilySpec,
};
use wellcovered::graphio::{enumerate_graphs, read_graph6_stream, write_edge_list, write_graph6, EnumFilter};
use wellcovered::harness::{conjecture_search, verify_statement, Bounds, ConjectureSource, DEFAULT_EXACT_CAP};
use wellcovered::independence::{
    enumerate_mis_with, independence_summary_with, is_one_well_covered, isolatable, isolatable_vertices,
    random_maximal_independent_set, SizeGuard,
};
use wellcovered::{cartesian_product, prism, GirthValue, Graph, ProductLabeling};

use input::load_graph;

#[derive(Parser)]
#[command(name = "wellcovered", version, about = "Well-coveredness of graphs and their Cartesian products")]
struct Cli {
    /// Structured JSON output instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// Graph arguments accept a name (`cycle:5`, `complete:3`, `path:4`, `wl8`,
/// `fig1h`), an inline edge list (`4:0-1,1-2`), a file or `-` holding an edge
/// list or graph6 line, or a graph6 string.
#[derive(Subcommand)]
enum Command {
    /// Structural and independence invariants of a graph.
    Analyze {
        graph: String,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        exact_cap: usize,
    },
    /// Cartesian product as an edge list.
    Product { g: String, h: String },
    /// `G □ K2` as an edge list.
    Prism { g: String },
    /// Every maximal independent set, one per line.
    Mis {
        graph: String,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        exact_cap: usize,
    },
    /// An independent set isolating a vertex, or `none`.
    Isolatable { graph: String, vertex: usize },
    /// Build and verify a strong-support certificate for a product.
    Certificate(CertificateArgs),
    /// Build a clique-family graph from a JSON spec file.
    Family {
        spec: String,
        /// Also build the layer assignment on the product with this graph.
        #[arg(long)]
        partner: Option<String>,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        exact_cap: usize,
    },
    /// graph6 stream of graphs of one order, one per isomorphism class.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Include disconnected graphs.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        min_girth: Option<GirthValue>,
        #[arg(long)]
        triangle_free: bool,
        #[arg(long)]
        min_degree: Option<usize>,
        #[arg(long)]
        contains_c4: bool,
        /// Print only the number of graphs.
        #[arg(long)]
        count: bool,
    },
    /// Run a bounded verification suite.
    Verify {
        /// thm-1.1, thm-2.2, thm-2.4, thm-3.1, cor-3.6, thm-3.8, cor-3.9, tv-cycles or kn-product.
        statement: String,
        #[arg(long)]
        max_factor: Option<usize>,
        #[arg(long)]
        max_product: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        exact_cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Search for graphs with an isolatable vertex and a well-covered prism.
    Conjecture {
        /// Order range `a..b` (inclusive) for the built-in generator.
        #[arg(long, default_value = "4..8", conflicts_with = "stdin_graph6")]
        orders: String,
        /// Read graphs as graph6 lines from standard input.
        #[arg(long)]
        stdin_graph6: bool,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        exact_cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// Isolatable vertex of degree at least 2 (anchors --x, --s).
    #[value(name = "lemma-3.2")]
    IsolatableDeg2,
    /// Leaf of G (anchors --x, --s).
    #[value(name = "lemma-3.4")]
    Leaf,
    /// No isolatable vertices, orders at least 3 (anchors --y, --s1, --s2).
    #[value(name = "lemma-3.5")]
    Order3,
    /// Prism of a girth-5 graph with an isolatable vertex (anchor --x; no H).
    #[value(name = "thm-3.7")]
    Prism,
}

#[derive(Args)]
struct CertificateArgs {
    construction: Construction,
    g: String,
    /// Second factor; omitted for thm-3.7.
    h: Option<String>,
    #[arg(long)]
    x: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    y: Option<usize>,
    #[arg(long)]
    s1: Option<usize>,
    #[arg(long)]
    s2: Option<usize>,
}

enum Status {
    Success,
    Violation,
}

struct Output {
    json: bool,
    out: BufWriter<io::Stdout>,
}

impl Output {
    fn line(&mut self, text: impl AsRef<str>) -> Result<(), String> {
        writeln!(self.out, "{}", text.as_ref()).map_err(|e| e.to_string())
    }

    fn value(&mut self, v: &Value) -> Result<(), String> {
        let text = serde_json::to_string_pretty(v).map_err(|e| e.to_string())?;
        self.line(text)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Output {
        json: cli.json,
        out: BufWriter::new(io::stdout()),
    };
    let result = dispatch(cli.command, &mut out);
    let flushed = out.out.flush();
    match (result, flushed) {
        (Ok(Status::Success), Ok(())) => ExitCode::SUCCESS,
        (Ok(Status::Violation), Ok(())) => ExitCode::from(1),
        (Err(e), _) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        // A closed pipe on the reading side is not worth a diagnostic.
        (Ok(_), Err(_)) => ExitCode::from(2),
    }
}

fn dispatch(command: Command, out: &mut Output) -> Result<Status, String> {
    match command {
        Command::Analyze { graph, exact_cap } => analyze(&load_graph(&graph)?, exact_cap, out),
        Command::Product { g, h } => {
            let (g, h) = (load_graph(&g)?, load_graph(&h)?);
            let (p, lab) = cartesian_product(&g, &h).map_err(|e| e.to_string())?;
            emit_product(&p, lab, out)
        }
        Command::Prism { g } => {
            let (p, lab) = prism(&load_graph(&g)?).map_err(|e| e.to_string())?;
            emit_product(&p, lab, out)
        }
        Command::Mis { graph, limit, exact_cap } => mis(&load_graph(&graph)?, limit, exact_cap, out),
        Command::Isolatable { graph, vertex } => {
            let g = load_graph(&graph)?;
            let j = isolatable(&g, vertex).map_err(|e| e.to_string())?;
            if out.json {
                out.value(&json!({ "vertex": vertex, "isolating_set": j }))?;
            } else {
                out.line(j.map_or("none".to_string(), |j| format!("J={j}")))?;
            }
            Ok(Status::Success)
        }
        Command::Certificate(args) => certificate(args, out),
        Command::Family {
            spec,
            partner,
            samples,
            seed,
            exact_cap,
        } => family(&spec, partner.as_deref(), samples, seed, exact_cap, out),
        Command::Enumerate {
            order,
            all,
            min_girth,
            triangle_free,
            min_degree,
            contains_c4,
            count,
        } => {
            let filter = EnumFilter {
                order,
                connected: !all,
                min_girth,
                triangle_free,
                min_degree,
                must_contain_c4: contains_c4,
            };
            let graphs = enumerate_graphs(&filter).map_err(|e| e.to_string())?;
            if count {
                out.line(graphs.count().to_string())?;
            } else {
                for g in graphs {
                    out.line(write_graph6(&g).map_err(|e| e.to_string())?)?;
                }
            }
            Ok(Status::Success)
        }
        Command::Verify {
            statement,
            max_factor,
            max_product,
            exact_cap,
            seed,
        } => {
            let bounds = Bounds {
                max_factor,
                max_product,
                exact_cap,
                seed,
            };
            let report = verify_statement(&statement, &bounds).map_err(|e| e.to_string())?;
            emit_report(&report, out)
        }
        Command::Conjecture {
            orders,
            stdin_graph6,
            exact_cap,
            seed,
        } => {
            let source = if stdin_graph6 {
                let graphs = read_graph6_stream(io::stdin().lock())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| e.to_string())?;
                ConjectureSource::Graphs(graphs)
            } else {
                let (min_order, max_order) = parse_range(&orders)?;
                ConjectureSource::Builtin { min_order, max_order }
            };
            let report = conjecture_search(&source, exact_cap, seed).map_err(|e| e.to_string())?;
            emit_report(&report, out)
        }
    }
}

fn parse_range(text: &str) -> Result<(usize, usize), String> {
    let bad = || format!("invalid order range `{text}`: expected a..b");
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let (a, b) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn guard(g: &Graph, exact_cap: usize) -> Result<SizeGuard, String> {
    if g.order() > exact_cap {
        return Err(format!(
            "OrderTooLarge: order {} exceeds the exact cap {exact_cap}; raise --exact-cap to enumerate",
            g.order()
        ));
    }
    Ok(SizeGuard::Override)
}

fn analyze(g: &Graph, exact_cap: usize, out: &mut Output) -> Result<Status, String> {
    let s = independence_summary_with(g, guard(g, exact_cap)?).map_err(|e| e.to_string())?;
    let isol = isolatable_vertices(g).map_err(|e| e.to_string())?;
    let one_wc = is_one_well_covered(g).map_err(|e| e.to_string())?;
    let degrees = g.degrees();
    let supports = g.strong_support_vertices();
    if out.json {
        let girth = match g.girth() {
            GirthValue::Finite(n) => json!(n),
            GirthValue::Infinite => json!("inf"),
        };
        out.value(&json!({
            "order": g.order(),
            "size": g.size(),
            "girth": girth,
            "connected": g.is_connected(),
            "degrees": degrees,
            "strong_supports": supports,
            "alpha": s.alpha,
            "idom": s.idom,
            "well_covered": s.well_covered,
            "witness": s.witness.map(|(first, second)| Certificate::UnequalMaximalSets { first, second }),
            "isolatable": isol,
            "one_well_covered": one_wc,
        }))?;
    } else {
        let degrees: Vec<String> = degrees.iter().map(usize::to_string).collect();
        out.line(format!("order: {}", g.order()))?;
        out.line(format!("size: {}", g.size()))?;
        out.line(format!("girth: {}", g.girth()))?;
        out.line(format!("connected: {}", g.is_connected()))?;
        out.line(format!("degrees: {}", degrees.join(" ")))?;
        out.line(format!("strong supports: {supports}"))?;
        out.line(format!("alpha: {}", s.alpha))?;
        out.line(format!("i: {}", s.idom))?;
        out.line(format!("well-covered: {}", s.well_covered))?;
        if let Some((first, second)) = s.witness {
            out.line(format!("witness: {}", Certificate::UnequalMaximalSets { first, second }))?;
        }
        out.line(format!("isolatable: {isol}"))?;
        out.line(format!("1-well-covered: {one_wc}"))?;
    }
    Ok(Status::Success)
}

fn emit_product(p: &Graph, lab: ProductLabeling, out: &mut Output) -> Result<Status, String> {
    if out.json {
        out.value(&json!({
            "order": p.order(),
            "size": p.size(),
            "edges": p.edges(),
            "labeling": {
                "left_order": lab.left_order,
                "right_order": lab.right_order,
                "rule": "(g, h) -> g * right_order + h",
            },
        }))?;
    } else {
        out.line(format!(
            "# labeling: (g,h) -> g*{}+h, |V(G)|={}, |V(H)|={}",
            lab.right_order, lab.left_order, lab.right_order
        ))?;
        out.line(write_edge_list(p).trim_end())?;
    }
    Ok(Status::Success)
}

fn mis(g: &Graph, limit: Option<usize>, exact_cap: usize, out: &mut Output) -> Result<Status, String> {
    let sets = enumerate_mis_with(g, guard(g, exact_cap)?).map_err(|e| e.to_string())?;
    for m in sets.take(limit.unwrap_or(usize::MAX)) {
        if out.json {
            out.line(serde_json::to_string(&m).map_err(|e| e.to_string())?)?;
        } else {
            out.line(m.to_string())?;
        }
    }
    Ok(Status::Success)
}

fn anchor(v: Option<usize>, flag: &str, id: &str) -> Result<usize, String> {
    v.ok_or_else(|| format!("{id} needs the anchor --{flag}"))
}

fn certificate(args: CertificateArgs, out: &mut Output) -> Result<Status, String> {
    let id = match args.construction {
        Construction::IsolatableDeg2 => "lemma-3.2",
        Construction::Leaf => "lemma-3.4",
        Construction::Order3 => "lemma-3.5",
        Construction::Prism => "thm-3.7",
    };
    let g = load_graph(&args.g)?;
    let (cert, product, case) = if let Construction::Prism = args.construction {
        if args.h.is_some() {
            return Err("thm-3.7 works on the prism G □ K2 and takes no second graph".into());
        }
        let x = anchor(args.x, "x", id)?;
        let (cert, case) = witness_prism_girth5_isolatable_traced(&g, x).map_err(|e| e.to_string())?;
        let (p, _) = prism(&g).map_err(|e| e.to_string())?;
        (cert, p, Some(format!("{case:?}")))
    } else {
        let h = load_graph(args.h.as_deref().ok_or_else(|| format!("{id} needs a second graph H"))?)?;
        let cert = match args.construction {
            Construction::IsolatableDeg2 => {
                witness_product_isolatable_deg2(&g, anchor(args.x, "x", id)?, &h, anchor(args.s, "s", id)?)
            }
            Construction::Leaf => witness_product_leaf(&g, anchor(args.x, "x", id)?, &h, anchor(args.s, "s", id)?),
            _ => witness_product_order3(
                &g,
                anchor(args.y, "y", id)?,
                &h,
                anchor(args.s1, "s1", id)?,
                anchor(args.s2, "s2", id)?,
            ),
        }
        .map_err(|e| e.to_string())?;
        let (p, _) = cartesian_product(&g, &h).map_err(|e| e.to_string())?;
        (cert, p, None)
    };
    let verified = verify_certificate(&product, &cert).map_err(|e| e.to_string())?;
    if out.json {
        out.value(&json!({
            "construction": id,
            "product_order": product.order(),
            "certificate": cert,
            "case": case,
            "verified": verified,
        }))?;
    } else {
        out.line(format!("certificate: {cert}"))?;
        out.line(format!("product order: {}", product.order()))?;
        if let Some(case) = case {
            out.line(format!("case: {case}"))?;
        }
        out.line(format!("verifier: {}", if verified { "OK" } else { "REJECTED" }))?;
    }
    Ok(if verified { Status::Success } else { Status::Violation })
}

fn family(
    spec_path: &str,
    partner: Option<&str>,
    samples: u64,
    seed: u64,
    exact_cap: usize,
    out: &mut Output,
) -> Result<Status, String> {
    let text = std::fs::read_to_string(spec_path).map_err(|e| format!("cannot read {spec_path}: {e}"))?;
    let spec: FamilySpec = serde_json::from_str(&text).map_err(|e| format!("{spec_path}: {e}"))?;
    let g = build_clique_family(&spec).map_err(|e| e.to_string())?;
    let exact = if g.order() <= exact_cap {
        Some(independence_summary_with(&g, SizeGuard::Override).map_err(|e| e.to_string())?)
    } else {
        None
    };
    let mut report = json!({
        "order": g.order(),
        "size": g.size(),
        "r": spec.r,
        "alpha": exact.as_ref().map(|s| s.alpha),
        "well_covered": exact.as_ref().map(|s| s.well_covered),
    });
    let mut text_lines = vec![
        format!("order: {}", g.order()),
        format!("size: {}", g.size()),
        format!("cliques: {}", spec.r),
    ];
    match &exact {
        Some(s) => {
            text_lines.push(format!("alpha: {}", s.alpha));
            text_lines.push(format!("well-covered: {}", s.well_covered));
        }
        None => text_lines.push(format!("exact check: skipped (order {} above exact cap {exact_cap})", g.order())),
    }
    let mut status = match &exact {
        Some(s) if !s.well_covered || s.alpha != spec.r => Status::Violation,
        _ => Status::Success,
    };

    if let Some(partner) = partner {
        let h = load_graph(partner)?;
        let assignment = family_product_assignment(&spec, &h).map_err(|e| e.to_string())?;
        let (p, _) = cartesian_product(&g, &h).map_err(|e| e.to_string())?;
        let expected = spec.r * h.order();
        let sizes: BTreeSet<usize> = (0..samples)
            .map(|i| random_maximal_independent_set(&p, seed.wrapping_add(i)).len())
            .collect();
        let maximal = p.is_maximal_independent(&assignment);
        let product_exact = if p.order() <= exact_cap {
            Some(independence_summary_with(&p, SizeGuard::Override).map_err(|e| e.to_string())?)
        } else {
            None
        };
        if !maximal
            || assignment.len() != expected
            || sizes.iter().any(|&s| s != expected)
            || product_exact.as_ref().is_some_and(|s| !s.well_covered || s.alpha != expected)
        {
            status = Status::Violation;
        }
        report["product"] = json!({
            "partner_order": h.order(),
            "order": p.order(),
            "assignment": assignment,
            "assignment_size": assignment.len(),
            "expected_size": expected,
            "maximal_independent": maximal,
            "samples": samples,
            "seed": seed,
            "sample_sizes": sizes,
            "alpha": product_exact.as_ref().map(|s| s.alpha),
            "well_covered": product_exact.as_ref().map(|s| s.well_covered),
        });
        text_lines.push(format!("partner: order {}, max degree {}", h.order(), h.max_degree()));
        text_lines.push(format!("product order: {}", p.order()));
        text_lines.push(format!("assignment: {assignment}"));
        text_lines.push(format!("assignment size: {} (expected {expected})", assignment.len()));
        text_lines.push(format!("maximal independent: {maximal}"));
        let sizes: Vec<String> = sizes.iter().map(usize::to_string).collect();
        text_lines.push(format!(
            "random maximal sets: {samples} samples from seed {seed}, sizes {{{}}}",
            sizes.join(",")
        ));
        match &product_exact {
            Some(s) => text_lines.push(format!("product alpha: {}, well-covered: {}", s.alpha, s.well_covered)),
            None => text_lines.push(format!(
                "product exact check: skipped (order {} above exact cap {exact_cap}); sampling only",
                p.order()
            )),
        }
    }
    if out.json {
        out.value(&report)?;
    } else {
        for l in text_lines {
            out.line(l)?;
        }
    }
    Ok(status)
}

fn emit_report(report: &wellcovered::harness::VerificationReport, out: &mut Output) -> Result<Status, String> {
    if out.json {
        out.value(&serde_json::to_value(report).map_err(|e| e.to_string())?)?;
    } else {
        out.line(report.to_string().trim_end())?;
    }
    Ok(if report.passed() { Status::Success } else { Status::Violation })
}
