//! The `degpoly` command line.
//!
//! Every command writes one JSON report (`command`, `inputs`, `results`) to
//! standard output, or `key: value` lines with `--plain`. Exit status is 0
//! on success or a positive verdict, 1 on a negative verdict from `graphic`,
//! `vertex-check` or `decisive`, and 2 on any error.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use degpoly::blossom::{find_integral_33_blossom, find_integral_blossom_general, Blossom};
use degpoly::decisive::{
    build_catalog, decisive_all, decisive_by_b_free, decisive_by_blossoms, decisive_by_eg, decisive_by_structure,
    DecisiveVerdict, Witness,
};
use degpoly::formats::{parse_degree_sequence, parse_edge_list, parse_graph6, parse_labeling, to_graph6};
use degpoly::graphic::{eg_profile, havel_hakimi, is_graphic_list};
use degpoly::polytope::{
    dimension, enumerate_vertices, is_vertex_by_rank, is_vertex_by_structure, majorization_dimension_survey,
};
use degpoly::realizations::{enumerate_isomorphism_classes, enumerate_labeled_realizations};
use degpoly::structure::{classify_core, decompose};
use degpoly::{DegreeSequence, Error, FractionalLabeling, LabeledGraph, Limits};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "degpoly", version, about = "Degree sequences, their realization polytopes and decisive sequences")]
struct Cli {
    /// Print `key: value` lines instead of JSON.
    #[arg(long, global = true)]
    plain: bool,
    /// Largest n accepted by exhaustive operations.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_N)]
    max_n: usize,
    /// Worker threads for parallel searches.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edges,
    G6,
}

#[derive(clap::Args, Debug)]
struct GraphInput {
    /// Path to the graph, `-` for standard input, or the graph itself with `--inline`.
    graph: String,
    #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
    format: GraphFormat,
    /// Treat GRAPH as the graph text; `;` separates lines.
    #[arg(long)]
    inline: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumerateMode {
    Labeled,
    IsoClasses,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Oracle {
    Structure,
    Rank,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DecisiveMethod {
    Eg,
    Structure,
    Blossoms,
    Bfree,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test a degree sequence for graphicality.
    Graphic { sequence: String },
    /// Build the Havel–Hakimi realization.
    Realize { sequence: String },
    /// List all realizations.
    Enumerate {
        sequence: String,
        #[arg(long, value_enum, default_value_t = EnumerateMode::Labeled)]
        mode: EnumerateMode,
    },
    /// Enumerate the vertices of P(d).
    PolytopeVertices {
        sequence: String,
        /// Include every vertex in the report.
        #[arg(long)]
        list: bool,
    },
    /// Affine dimension of P(d) and its forced coordinates.
    PolytopeDim { sequence: String },
    /// Test whether a labeling is a vertex of P(d).
    VertexCheck {
        sequence: String,
        /// Path to an `i j p/q` labeling, `-` for standard input, or the text with `--inline`.
        labeling: String,
        /// Treat LABELING as the labeling text; `;` separates lines.
        #[arg(long)]
        inline: bool,
        #[arg(long, value_enum, default_value_t = Oracle::Both)]
        oracle: Oracle,
    },
    /// Search a graph for an integral blossom.
    Blossom {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        l: usize,
    },
    /// Decide whether a sequence is decisive.
    Decisive {
        sequence: String,
        #[arg(long, value_enum, default_value_t = DecisiveMethod::Eg)]
        method: DecisiveMethod,
    },
    /// Decompose a graph into independent set, clique and core.
    Decompose {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Emit the forbidden catalog.
    Catalog,
    /// Compare polytope dimensions along majorization.
    SurveyMajorization {
        #[arg(long)]
        n: usize,
    },
}

struct Report {
    command: &'static str,
    inputs: Value,
    results: Value,
    /// Exit status on success.
    status: i32,
}

fn read_source(arg: &str, inline: bool) -> Result<String, Error> {
    if inline {
        return Ok(arg.replace(';', "\n"));
    }
    let text = if arg == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(arg)
    };
    text.map_err(|e| Error::Domain(format!("cannot read `{arg}`: {e}")))
}

fn read_graph(input: &GraphInput) -> Result<LabeledGraph, Error> {
    let text = read_source(&input.graph, input.inline)?;
    match input.format {
        GraphFormat::Edges => parse_edge_list(&text),
        GraphFormat::G6 => parse_graph6(&text),
    }
}

fn read_sequence(text: &str) -> Result<DegreeSequence, Error> {
    let mut terms = parse_degree_sequence(text)?;
    terms.sort_unstable_by(|a, b| b.cmp(a));
    DegreeSequence::new(terms)
}

fn one_based(vs: &[usize]) -> Value {
    json!(vs.iter().map(|v| v + 1).collect::<Vec<_>>())
}

fn graph_json(g: &LabeledGraph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u + 1, v + 1]).collect();
    json!({ "n": g.order(), "graph6": to_graph6(g), "edges": edges })
}

fn blossom_json(b: &Blossom) -> Value {
    json!({
        "v_tour": one_based(b.v_tour()),
        "w_tour": one_based(b.w_tour()),
        "polarity": b.polarity(),
        "kind": b.kind(),
    })
}

fn labeling_json(x: &FractionalLabeling) -> Value {
    let idx = x.index();
    let labels: Vec<Value> = x
        .values()
        .iter()
        .enumerate()
        .filter(|(_, v)| *v.numer() != 0)
        .map(|(k, v)| {
            let (i, j) = idx.pair(k);
            json!([i + 1, j + 1, v.to_string()])
        })
        .collect();
    json!(labels)
}

fn verdict_json(v: &DecisiveVerdict) -> Value {
    let witness = v.witness.as_ref().map(|w| match w {
        Witness::Eg { condition, k, m, ell, core_end, tail } => json!({
            "type": "eg",
            "condition": condition,
            "k": k,
            "m": m,
            "ell": ell,
            "core_end": core_end,
            "tail": tail,
        }),
        Witness::Structure { realization, decomposition, core } => json!({
            "type": "structure",
            "realization": graph_json(realization),
            "v1": one_based(&decomposition.v1),
            "v2": one_based(&decomposition.v2),
            "v3": one_based(&decomposition.v3),
            "core": core,
        }),
        Witness::Blossom { realization, blossom } => json!({
            "type": "blossom",
            "realization": graph_json(realization),
            "blossom": blossom_json(blossom),
        }),
        Witness::BMember { realization, vertices } => json!({
            "type": "b_member",
            "realization": graph_json(realization),
            "vertices": one_based(vertices),
        }),
    });
    json!({ "method": v.method, "decisive": v.decisive, "witness": witness })
}

fn execute(cli: &Cli, limits: &Limits) -> Result<Report, Error> {
    let report = match &cli.command {
        Command::Graphic { sequence } => {
            let mut terms = parse_degree_sequence(sequence)?;
            terms.sort_unstable_by(|a, b| b.cmp(a));
            let graphic = is_graphic_list(&terms);
            let mut results = json!({ "graphic": graphic });
            if graphic {
                let d = DegreeSequence::new(terms.clone())?;
                results["eg"] = serde_json::to_value(eg_profile(&d)?).expect("serializable");
            }
            let shown: Vec<String> = terms.iter().map(ToString::to_string).collect();
            Report {
                command: "graphic",
                inputs: json!({ "sequence": shown.join(",") }),
                results,
                status: if graphic { 0 } else { 1 },
            }
        }
        Command::Realize { sequence } => {
            let d = read_sequence(sequence)?;
            let g = havel_hakimi(&d)?;
            Report {
                command: "realize",
                inputs: json!({ "sequence": d.to_string() }),
                results: json!({ "realization": graph_json(&g) }),
                status: 0,
            }
        }
        Command::Enumerate { sequence, mode } => {
            let d = read_sequence(sequence)?;
            let graphs: Vec<String> = match mode {
                EnumerateMode::Labeled => enumerate_labeled_realizations(&d, limits)?.iter().map(to_graph6).collect(),
                EnumerateMode::IsoClasses => enumerate_isomorphism_classes(&d, limits)?
                    .iter()
                    .map(|c| to_graph6(&c.to_graph()))
                    .collect(),
            };
            Report {
                command: "enumerate",
                inputs: json!({
                    "sequence": d.to_string(),
                    "mode": match mode { EnumerateMode::Labeled => "labeled", EnumerateMode::IsoClasses => "iso-classes" },
                }),
                results: json!({ "count": graphs.len(), "graph6": graphs }),
                status: 0,
            }
        }
        Command::PolytopeVertices { sequence, list } => {
            let d = read_sequence(sequence)?;
            let vs = enumerate_vertices(&d, limits)?;
            let fractional = vs.iter().filter(|v| !v.is_integral()).count();
            let mut results = json!({
                "total": vs.len(),
                "integral": vs.len() - fractional,
                "fractional": fractional,
            });
            if *list {
                results["vertices"] = vs
                    .iter()
                    .map(|v| {
                        json!({
                            "labels": labeling_json(&v.point),
                            "half_cycles": v.half_cycles.iter().map(|c| one_based(c)).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
            }
            Report {
                command: "polytope-vertices",
                inputs: json!({ "sequence": d.to_string() }),
                results,
                status: 0,
            }
        }
        Command::PolytopeDim { sequence } => {
            let d = read_sequence(sequence)?;
            let r = dimension(&d, limits)?;
            let forced: Vec<Value> = r
                .forced
                .iter()
                .map(|f| json!({ "pair": [f.i + 1, f.j + 1], "value": f.value.to_string() }))
                .collect();
            Report {
                command: "polytope-dim",
                inputs: json!({ "sequence": d.to_string() }),
                results: json!({ "dimension": r.dimension, "vertices": r.vertex_count, "forced": forced }),
                status: 0,
            }
        }
        Command::VertexCheck { sequence, labeling, inline, oracle } => {
            let d = read_sequence(sequence)?;
            let x = parse_labeling(&read_source(labeling, *inline)?, d.len())?;
            let mut results = json!({});
            let mut verdicts = Vec::new();
            if matches!(oracle, Oracle::Structure | Oracle::Both) {
                let s = is_vertex_by_structure(&d, &x)?;
                results["structure"] = json!(s);
                verdicts.push(s);
            }
            if matches!(oracle, Oracle::Rank | Oracle::Both) {
                let r = is_vertex_by_rank(&d, &x)?;
                results["rank"] = json!(r);
                verdicts.push(r);
            }
            if verdicts.iter().any(|&v| v != verdicts[0]) {
                return Err(Error::InvariantViolation("vertex oracles disagree".into()));
            }
            results["vertex"] = json!(verdicts[0]);
            Report {
                command: "vertex-check",
                inputs: json!({ "sequence": d.to_string(), "labeling": labeling_json(&x) }),
                results,
                status: if verdicts[0] { 0 } else { 1 },
            }
        }
        Command::Blossom { input, k, l } => {
            let g = read_graph(input)?;
            let found = if (*k, *l) == (3, 3) {
                find_integral_33_blossom(&g)
            } else {
                find_integral_blossom_general(&g, *k, *l)?
            };
            Report {
                command: "blossom",
                inputs: json!({ "graph": graph_json(&g), "k": k, "l": l }),
                results: json!({ "found": found.is_some(), "blossom": found.as_ref().map(blossom_json) }),
                status: 0,
            }
        }
        Command::Decisive { sequence, method } => {
            let d = read_sequence(sequence)?;
            let verdicts = match method {
                DecisiveMethod::Eg => vec![decisive_by_eg(&d)?],
                DecisiveMethod::Structure => vec![decisive_by_structure(&d, limits)?],
                DecisiveMethod::Blossoms => vec![decisive_by_blossoms(&d, limits)?],
                DecisiveMethod::Bfree => vec![decisive_by_b_free(&d, limits, true)?],
                DecisiveMethod::All => decisive_all(&d, limits)?,
            };
            let decisive = verdicts[0].decisive;
            let mut results = json!({
                "decisive": decisive,
                "verdicts": verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
            });
            if *method == DecisiveMethod::All {
                // decisive_all fails on any disagreement
                results["agree"] = json!(true);
            }
            Report {
                command: "decisive",
                inputs: json!({ "sequence": d.to_string(), "method": format!("{method:?}").to_lowercase() }),
                results,
                status: if decisive { 0 } else { 1 },
            }
        }
        Command::Decompose { input } => {
            let g = read_graph(input)?;
            let d = decompose(&g)?;
            let core = classify_core(&g.induced_subgraph(&d.v3)?)?;
            Report {
                command: "decompose",
                inputs: json!({ "graph": graph_json(&g) }),
                results: json!({
                    "v1": one_based(&d.v1),
                    "v2": one_based(&d.v2),
                    "v3": one_based(&d.v3),
                    "certified": d.certified,
                    "core": core,
                }),
                status: 0,
            }
        }
        Command::Catalog => {
            let c = build_catalog()?;
            let groups: Vec<Value> = c
                .sequences
                .iter()
                .map(|s| {
                    let graphs: Vec<String> = c.graphs[s].iter().map(|f| to_graph6(&f.to_graph())).collect();
                    json!({ "sequence": s.to_string(), "graph6": graphs })
                })
                .collect();
            Report {
                command: "catalog",
                inputs: json!({}),
                results: json!({ "sequences": c.sequences.len(), "graphs": c.len(), "groups": groups }),
                status: 0,
            }
        }
        Command::SurveyMajorization { n } => {
            let s = majorization_dimension_survey(*n, limits)?;
            Report {
                command: "survey-majorization",
                inputs: json!({ "n": n }),
                results: serde_json::to_value(&s).expect("serializable"),
                status: 0,
            }
        }
    };
    Ok(report)
}

fn plain_lines(prefix: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                plain_lines(&key, v, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push(format!("{prefix}: {}", parts.join(" ")));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                plain_lines(&format!("{prefix}[{i}]"), v, out);
            }
        }
        _ => out.push(format!("{prefix}: {}", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Parses `args` (including the program name), runs the command, and writes
/// the report to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let to_out = matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion);
            if to_out {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{e}");
            return 2;
        }
    };
    let limits = Limits::new(cli.max_n);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker threads: {e}");
            return 2;
        }
    };
    let start = Instant::now();
    let report = match pool.install(|| execute(&cli, &limits)) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let mut doc = json!({
        "command": report.command,
        "inputs": report.inputs,
        "results": report.results,
    });
    if cli.timing {
        doc["timing_ms"] = json!(start.elapsed().as_secs_f64() * 1000.0);
    }
    let text = if cli.plain {
        let mut lines = Vec::new();
        plain_lines("", &doc, &mut lines);
        lines.join("\n") + "\n"
    } else {
        serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
    };
    if out.write_all(text.as_bytes()).is_err() {
        return 2;
    }
    report.status
}
