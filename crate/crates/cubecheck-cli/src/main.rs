//! cubecheck: generation, recognition, analysis, classification, and census
//! for partial cubes, with machine-readable reports.
//!
//! Exit codes: 0 clean, 1 when any input contradicts the classification
//! (a reportable falsification, never a crash), 2 on usage or parse errors.

mod report;

use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

use cubecheck::generators;
use cubecheck::{
    census, claims_audit, classify, coxeter_edge_coloring, cycles_up_to, default_cycle_bound,
    enumerate_convex_cycles, euler_report, find_convex_traverse, girth_signature, parse_graph6,
    write_graph6, Classification, CubeVerdict, Error as CubeError, Graph,
};

use report::*;

#[derive(Parser)]
#[command(
    name = "cubecheck",
    version,
    about = "Partial-cube toolkit: generate, recognize, analyze, classify, census"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a named graph as one graph6 line (plus a JSON sidecar with --meta)
    Generate {
        /// cycle, hypercube, prism, gp, middle-levels, graph-x, coxeter,
        /// permutahedron, trunc-cubocta, trunc-icosidodeca, product
        family: String,
        /// family parameters (integers; two graph6 strings for product)
        params: Vec<String>,
        /// also print a JSON line mapping vertices to their meaning
        #[arg(long)]
        meta: bool,
        /// element cap for Coxeter group generation
        #[arg(long, default_value_t = generators::DEFAULT_ELEMENT_CAP)]
        element_cap: usize,
    },
    /// Partial-cube recognition with theta classes and embedding labels
    Recognize {
        /// graph6 files (stdin when empty), one graph per line
        files: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
        /// include wall-clock timings (breaks byte-for-byte reproducibility)
        #[arg(long)]
        timings: bool,
    },
    /// Classification against the known cubic vertex-transitive families
    Classify {
        files: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        timings: bool,
    },
    /// Girth signature, convex cycles, and optional deeper reports
    Analyze {
        files: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
        /// add the Euler face-count report (needs signature (4,6,6))
        #[arg(long)]
        euler: bool,
        /// audit the convex-cycle sharing claims
        #[arg(long)]
        claims: bool,
        /// check the Coxeter edge coloring for the given top cycle length
        #[arg(long, value_name = "K")]
        coloring: Option<u32>,
        /// find a convex traverse between the edges (U1,V1) and (U2,V2)
        #[arg(long, num_args = 4, value_names = ["U1", "V1", "U2", "V2"])]
        traverse: Option<Vec<u32>>,
        /// cycle enumeration bound (default: twice the diameter plus two)
        #[arg(long)]
        max_cycle_len: Option<u32>,
        #[arg(long)]
        timings: bool,
    },
    /// Classify every connected cubic graph up to --max-n vertices
    Census {
        #[arg(long, default_value_t = 16)]
        max_n: u32,
        /// worker threads; output is identical for any value
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("cubecheck: {msg}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.cmd {
        Cmd::Generate { family, params, meta, element_cap } => {
            cmd_generate(&family, &params, meta, element_cap)
        }
        Cmd::Recognize { files, json, timings } => cmd_recognize(&files, json, timings),
        Cmd::Classify { files, json, timings } => cmd_classify(&files, json, timings),
        Cmd::Analyze { files, json, euler, claims, coloring, traverse, max_cycle_len, timings } => {
            let opts = AnalyzeOpts { euler, claims, coloring, traverse, max_cycle_len, timings };
            cmd_analyze(&files, json, &opts)
        }
        Cmd::Census { max_n, jobs, json } => cmd_census(max_n, jobs, json),
    }
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

fn want<T: std::str::FromStr>(params: &[String], idx: usize, name: &str) -> Result<T, String> {
    params
        .get(idx)
        .ok_or_else(|| format!("missing parameter <{name}>"))?
        .parse()
        .map_err(|_| format!("parameter <{name}> must be an integer, got {:?}", params[idx]))
}

fn cmd_generate(
    family: &str,
    params: &[String],
    meta: bool,
    element_cap: usize,
) -> Result<i32, String> {
    let err = |e: CubeError| e.to_string();
    let (graph, meanings): (Graph, Vec<String>) = match family {
        "cycle" => {
            let k: u32 = want(params, 0, "k")?;
            let g = generators::cycle(k).map_err(err)?;
            let names = (0..k).map(|i| format!("position {i}")).collect();
            (g, names)
        }
        "hypercube" => {
            let d: u32 = want(params, 0, "d")?;
            let g = generators::hypercube(d).map_err(err)?;
            let names = (0..g.n()).map(|x| format!("{x:0width$b}", width = d as usize)).collect();
            (g, names)
        }
        "prism" => {
            let k: u32 = want(params, 0, "k")?;
            let g = generators::prism(k).map_err(err)?;
            let names = (0..g.n()).map(|v| format!("layer {} position {}", v / k, v % k)).collect();
            (g, names)
        }
        "gp" => {
            let n: u32 = want(params, 0, "n")?;
            let k: u32 = want(params, 1, "k")?;
            let g = generators::generalized_petersen(n, k).map_err(err)?;
            let names = (0..2 * n)
                .map(|v| if v < n { format!("outer {v}") } else { format!("inner {}", v - n) })
                .collect();
            (g, names)
        }
        "middle-levels" => {
            let t: u32 = want(params, 0, "t")?;
            let g = generators::middle_levels(t).map_err(err)?;
            let d = (2 * t - 1) as usize;
            let masks: Vec<u32> = (0u32..1 << d)
                .filter(|x| x.count_ones() == t || x.count_ones() == t - 1)
                .collect();
            let names = masks.iter().map(|m| format!("{m:0d$b}")).collect();
            (g, names)
        }
        "graph-x" => {
            let g = generators::graph_x();
            let names = (1..=8)
                .map(|i| format!("v{i}"))
                .chain(["c1".into(), "c2".into()])
                .collect();
            (g, names)
        }
        "coxeter" => {
            let m12: u32 = want(params, 0, "m12")?;
            let m23: u32 = want(params, 1, "m23")?;
            let m13: u32 = want(params, 2, "m13")?;
            let cm = generators::CoxeterMatrix::new(m12, m23, m13).map_err(err)?;
            let cay = generators::coxeter_cayley_capped(&cm, element_cap).map_err(err)?;
            (cay.graph, cay.words)
        }
        "permutahedron" => {
            let cay = generators::coxeter_cayley(&generators::CoxeterMatrix::a3()).map_err(err)?;
            (cay.graph, cay.words)
        }
        "trunc-cubocta" => {
            let cay = generators::coxeter_cayley(&generators::CoxeterMatrix::b3()).map_err(err)?;
            (cay.graph, cay.words)
        }
        "trunc-icosidodeca" => {
            let cay = generators::coxeter_cayley(&generators::CoxeterMatrix::h3()).map_err(err)?;
            (cay.graph, cay.words)
        }
        "product" => {
            let a = parse_graph6(params.first().ok_or("missing first graph6 factor")?)
                .map_err(err)?;
            let b = parse_graph6(params.get(1).ok_or("missing second graph6 factor")?)
                .map_err(err)?;
            let g = a.cartesian_product(&b);
            let names = (0..g.n()).map(|v| format!("({}, {})", v / b.n(), v % b.n())).collect();
            (g, names)
        }
        other => return Err(format!("unknown family {other:?}")),
    };
    println!("{}", write_graph6(&graph));
    if meta {
        let doc = MetaDoc {
            schema_version: SCHEMA_VERSION,
            family: family.to_string(),
            params: params.to_vec(),
            n: graph.n(),
            m: graph.m(),
            vertices: meanings,
        };
        println!("{}", serde_json::to_string(&doc).expect("meta serializes"));
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// input plumbing
// ---------------------------------------------------------------------------

struct Input {
    source: String,
    line: usize,
    text: String,
}

fn read_inputs(files: &[PathBuf]) -> Result<Vec<Input>, String> {
    let mut inputs = Vec::new();
    let mut push_lines = |source: &str, text: String| {
        for (idx, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if !trimmed.is_empty() {
                inputs.push(Input {
                    source: source.to_string(),
                    line: idx + 1,
                    text: trimmed.to_string(),
                });
            }
        }
    };
    if files.is_empty() {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        push_lines("stdin", buf);
    } else {
        for path in files {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("reading {}: {e}", path.display()))?;
            push_lines(&path.display().to_string(), text);
        }
    }
    if inputs.is_empty() {
        return Err("no input graphs".into());
    }
    Ok(inputs)
}

fn parse_input(input: &Input) -> Result<(Graph, InputDesc), String> {
    let graph = parse_graph6(&input.text)
        .map_err(|e| format!("{} line {}: {e}", input.source, input.line))?;
    let desc = InputDesc {
        source: input.source.clone(),
        line: input.line,
        graph6: input.text.clone(),
        n: graph.n(),
        m: graph.m(),
    };
    Ok((graph, desc))
}

fn elapsed_ms(enabled: bool, start: Instant) -> Option<u64> {
    enabled.then(|| start.elapsed().as_millis() as u64)
}

// ---------------------------------------------------------------------------
// recognize
// ---------------------------------------------------------------------------

fn cmd_recognize(files: &[PathBuf], json: bool, timings: bool) -> Result<i32, String> {
    for input in read_inputs(files)? {
        let (graph, desc) = parse_input(&input)?;
        let start = Instant::now();
        let verdict = cubecheck::check_partial_cube(&graph);
        let doc = match &verdict {
            CubeVerdict::Cube(pc) => RecognizeReport {
                schema_version: SCHEMA_VERSION,
                input: desc,
                partial_cube: true,
                dimension: Some(pc.labeling().dim()),
                theta_classes: Some(theta_rows(&graph, pc.theta())),
                labels_hex: Some((0..graph.n()).map(|v| pc.labeling().hex(v)).collect()),
                witness: None,
                timings_ms: elapsed_ms(timings, start),
            },
            CubeVerdict::Not(witness) => RecognizeReport {
                schema_version: SCHEMA_VERSION,
                input: desc,
                partial_cube: false,
                dimension: None,
                theta_classes: None,
                labels_hex: None,
                witness: Some(witness_doc(witness)),
                timings_ms: elapsed_ms(timings, start),
            },
        };
        if json {
            println!("{}", serde_json::to_string(&doc).expect("report serializes"));
        } else {
            print_recognize(&doc);
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

fn cmd_classify(files: &[PathBuf], json: bool, timings: bool) -> Result<i32, String> {
    let mut contradiction = false;
    for input in read_inputs(files)? {
        let (graph, desc) = parse_input(&input)?;
        let start = Instant::now();
        let verdict = classify(&graph);
        if matches!(verdict.outcome, Classification::ContradictsTheorem { .. }) {
            contradiction = true;
        }
        let doc = classify_doc(desc, &verdict, elapsed_ms(timings, start));
        if json {
            println!("{}", serde_json::to_string(&doc).expect("report serializes"));
        } else {
            print_classify(&doc);
        }
    }
    Ok(if contradiction { 1 } else { 0 })
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeOpts {
    euler: bool,
    claims: bool,
    coloring: Option<u32>,
    traverse: Option<Vec<u32>>,
    max_cycle_len: Option<u32>,
    timings: bool,
}

fn cmd_analyze(files: &[PathBuf], json: bool, opts: &AnalyzeOpts) -> Result<i32, String> {
    for input in read_inputs(files)? {
        let (graph, desc) = parse_input(&input)?;
        let start = Instant::now();
        let mut errors: Vec<String> = Vec::new();
        let d = graph.distances();
        let bound = opts.max_cycle_len.unwrap_or_else(|| default_cycle_bound(&d)).max(4) & !1;

        let signature = match girth_signature(&graph, &d) {
            Ok(sig) => Some(SignatureDoc { triple: sig.triple, uniform: sig.uniform }),
            Err(e) => {
                errors.push(format!("signature: {e}"));
                None
            }
        };
        let convex_cycles = match enumerate_convex_cycles(&graph, &d, bound) {
            Ok(cycles) => cycles
                .iter()
                .map(|c| CycleDoc { length: c.len(), vertices: c.vertices.clone() })
                .collect(),
            Err(e) => {
                errors.push(format!("cycles: {e}"));
                Vec::new()
            }
        };
        let four_cycle_count = match cycles_up_to(&graph, &d, 4) {
            Ok(cycles) => cycles.iter().filter(|c| c.len() == 4).count(),
            Err(_) => 0,
        };
        let euler = opts
            .euler
            .then(|| match euler_report(&graph) {
                Ok(rep) => Some(EulerDoc {
                    n: rep.n,
                    e: rep.e,
                    f4: rep.f4,
                    f6: rep.f6,
                    f: rep.f,
                    chi: rep.chi,
                }),
                Err(e) => {
                    errors.push(format!("euler: {e}"));
                    None
                }
            })
            .flatten();
        let claims = opts
            .claims
            .then(|| match claims_audit(&graph, bound) {
                Ok(audit) => Some(ClaimsDoc {
                    passed: audit.passed(),
                    four_cycles: audit.four_cycle_count,
                    convex_cycles: audit.convex_cycle_count,
                    nonconvex_four_cycles: audit.nonconvex_four_cycles.len(),
                    non_intertwining_pairs: audit.non_intertwining_pairs.len(),
                    four_cycle_overlaps: audit.four_cycle_overlaps.len(),
                }),
                Err(e) => {
                    errors.push(format!("claims: {e}"));
                    None
                }
            })
            .flatten();
        let coloring = opts
            .coloring
            .map(|k| match coxeter_edge_coloring(&graph, k) {
                Ok(rep) => Some(ColoringDoc {
                    k,
                    green_red_steps: rep.green_red_steps,
                    green_blue_steps: rep.green_blue_steps,
                    red_blue_steps: rep.red_blue_steps,
                }),
                Err(e) => {
                    errors.push(format!("coloring: {e}"));
                    None
                }
            })
            .flatten();
        let traverse = opts
            .traverse
            .as_ref()
            .map(|args| match traverse_doc(&graph, args) {
                Ok(doc) => Some(doc),
                Err(e) => {
                    errors.push(format!("traverse: {e}"));
                    None
                }
            })
            .flatten();
        let doc = AnalyzeReport {
            schema_version: SCHEMA_VERSION,
            input: desc,
            max_cycle_len: bound,
            signature,
            four_cycle_count,
            convex_cycles,
            euler,
            claims,
            coloring,
            traverse,
            errors,
            timings_ms: elapsed_ms(opts.timings, start),
        };
        if json {
            println!("{}", serde_json::to_string(&doc).expect("report serializes"));
        } else {
            print_analyze(&doc);
        }
    }
    Ok(0)
}

fn traverse_doc(graph: &Graph, args: &[u32]) -> Result<TraverseDoc, String> {
    let pc = match cubecheck::check_partial_cube(graph) {
        CubeVerdict::Cube(pc) => pc,
        CubeVerdict::Not(_) => return Err("graph is not a partial cube".into()),
    };
    let e1 = graph
        .edge_id(args[0], args[1])
        .ok_or_else(|| format!("({}, {}) is not an edge", args[0], args[1]))?;
    let e2 = graph
        .edge_id(args[2], args[3])
        .ok_or_else(|| format!("({}, {}) is not an edge", args[2], args[3]))?;
    let t = find_convex_traverse(&pc, e1, e2).map_err(|e| e.to_string())?;
    Ok(TraverseDoc {
        length: t.length(),
        cycles: t
            .cycles
            .iter()
            .map(|c| CycleDoc { length: c.len(), vertices: c.vertices.clone() })
            .collect(),
        side_v: t.side_v,
        side_u: t.side_u,
    })
}

// ---------------------------------------------------------------------------
// census
// ---------------------------------------------------------------------------

fn cmd_census(max_n: u32, jobs: usize, json: bool) -> Result<i32, String> {
    match census(max_n, jobs) {
        Ok(entries) => {
            if json {
                let doc = CensusDoc {
                    schema_version: SCHEMA_VERSION,
                    max_n,
                    entries: entries
                        .iter()
                        .map(|e| CensusEntryDoc {
                            n: e.n,
                            cubic_count: e.cubic_count,
                            positives: e
                                .positives
                                .iter()
                                .map(|p| CensusPositiveDoc {
                                    graph6: p.graph6.clone(),
                                    tag: p.outcome.tag(),
                                })
                                .collect(),
                        })
                        .collect(),
                    contradictions: 0,
                };
                println!("{}", serde_json::to_string(&doc).expect("census serializes"));
            } else {
                for e in &entries {
                    if e.positives.is_empty() {
                        println!("{}\t{}\t-\t-", e.n, e.cubic_count);
                    }
                    for p in &e.positives {
                        println!("{}\t{}\t{}\t{}", e.n, e.cubic_count, p.graph6, p.outcome.tag());
                    }
                }
            }
            Ok(0)
        }
        Err(CubeError::CensusContradiction { n, graph6 }) => {
            eprintln!("cubecheck: counterexample candidate at n={n}: {graph6}");
            Ok(1)
        }
        Err(e) => Err(e.to_string()),
    }
}
