//! Report documents. Field order is fixed by struct order and there are no
//! timestamps unless timings are requested, so identical invocations print
//! byte-identical output. The schema version bumps on any breaking change.

use serde::Serialize;

use cubecheck::{
    Classification, ClassificationVerdict, EdgeId, Graph, NonCubeWitness, ThetaPartition, Vertex,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct InputDesc {
    pub source: String,
    pub line: usize,
    pub graph6: String,
    pub n: u32,
    pub m: usize,
}

#[derive(Serialize)]
pub struct ThetaClassRow {
    pub id: usize,
    pub size: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

pub fn theta_rows(g: &Graph, theta: &ThetaPartition) -> Vec<ThetaClassRow> {
    theta
        .classes()
        .iter()
        .enumerate()
        .map(|(id, class)| ThetaClassRow {
            id,
            size: class.len(),
            edges: class.iter().map(|&e: &EdgeId| g.edge_endpoints(e)).collect(),
        })
        .collect()
}

#[derive(Serialize)]
pub struct WitnessDoc {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walk: Option<Vec<Vertex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(Vertex, Vertex)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<(Vertex, Vertex)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

pub fn witness_doc(w: &NonCubeWitness) -> WitnessDoc {
    match w {
        NonCubeWitness::Disconnected => WitnessDoc {
            kind: "disconnected".into(),
            walk: None,
            edges: None,
            pair: None,
            detail: None,
        },
        NonCubeWitness::OddWalk(walk) => WitnessDoc {
            kind: "odd_closed_walk".into(),
            walk: Some(walk.clone()),
            edges: None,
            pair: None,
            detail: None,
        },
        NonCubeWitness::ThetaNotTransitive { e, f, h } => WitnessDoc {
            kind: "theta_not_transitive".into(),
            walk: None,
            edges: None,
            pair: None,
            detail: Some(format!("edge ids ({e}, {f}, {h}): e~f and f~h but not e~h")),
        },
        NonCubeWitness::HammingViolation { u, v, hamming, dist } => WitnessDoc {
            kind: "hamming_violation".into(),
            walk: None,
            edges: None,
            pair: Some((*u, *v)),
            detail: Some(format!("label distance {hamming}, graph distance {dist}")),
        },
    }
}

#[derive(Serialize)]
pub struct RecognizeReport {
    pub schema_version: u32,
    pub input: InputDesc,
    pub partial_cube: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta_classes: Option<Vec<ThetaClassRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels_hex: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<u64>,
}

pub fn print_recognize(doc: &RecognizeReport) {
    println!(
        "# {} line {}: n={} m={}",
        doc.input.source, doc.input.line, doc.input.n, doc.input.m
    );
    if doc.partial_cube {
        println!("partial cube: yes");
        println!("dimension: {}", doc.dimension.unwrap());
        if let Some(classes) = &doc.theta_classes {
            let sizes: Vec<String> = classes.iter().map(|c| c.size.to_string()).collect();
            println!("theta classes: {} (sizes {})", classes.len(), sizes.join(","));
        }
    } else {
        let w = doc.witness.as_ref().unwrap();
        println!("partial cube: no ({})", w.kind);
        if let Some(walk) = &w.walk {
            println!("witness walk: {walk:?}");
        }
        if let Some(detail) = &w.detail {
            println!("witness: {detail}");
        }
    }
    if let Some(ms) = doc.timings_ms {
        println!("elapsed_ms: {ms}");
    }
}

#[derive(Serialize)]
pub struct SignatureDoc {
    pub triple: [u32; 3],
    pub uniform: bool,
}

#[derive(Serialize)]
pub struct ClassifyReport {
    pub schema_version: u32,
    pub input: InputDesc,
    pub tag: String,
    pub positive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<Vertex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<SignatureDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<u64>,
}

pub fn classify_doc(
    input: InputDesc,
    verdict: &ClassificationVerdict,
    timings_ms: Option<u64>,
) -> ClassifyReport {
    let outcome = &verdict.outcome;
    ClassifyReport {
        schema_version: SCHEMA_VERSION,
        input,
        tag: outcome.tag(),
        positive: outcome.is_positive(),
        certificate: outcome.certificate().map(|c| c.to_vec()),
        note: outcome.note().map(|s| s.to_string()),
        signature: verdict
            .signature
            .as_ref()
            .map(|s| SignatureDoc { triple: s.triple, uniform: s.uniform }),
        witness: match outcome {
            Classification::NotPartialCube { witness } => Some(witness_doc(witness)),
            _ => None,
        },
        reason: match outcome {
            Classification::ContradictsTheorem { reason } => Some(reason.clone()),
            _ => None,
        },
        timings_ms,
    }
}

pub fn print_classify(doc: &ClassifyReport) {
    println!(
        "# {} line {}: n={} m={}",
        doc.input.source, doc.input.line, doc.input.n, doc.input.m
    );
    println!("tag: {}", doc.tag);
    if let Some(sig) = &doc.signature {
        println!(
            "signature: ({},{},{}){}",
            sig.triple[0],
            sig.triple[1],
            sig.triple[2],
            if sig.uniform { "" } else { " (non-uniform)" }
        );
    }
    if doc.positive {
        println!("certificate: verified isomorphism onto the reference constructor");
    }
    if let Some(note) = &doc.note {
        println!("note: {note}");
    }
    if let Some(w) = &doc.witness {
        println!("witness: {}", w.kind);
    }
    if let Some(reason) = &doc.reason {
        println!("reason: {reason}");
    }
    if let Some(ms) = doc.timings_ms {
        println!("elapsed_ms: {ms}");
    }
}

#[derive(Serialize)]
pub struct CycleDoc {
    pub length: u32,
    pub vertices: Vec<Vertex>,
}

#[derive(Serialize)]
pub struct EulerDoc {
    pub n: u32,
    pub e: u32,
    pub f4: u32,
    pub f6: u32,
    pub f: u32,
    pub chi: i64,
}

#[derive(Serialize)]
pub struct ClaimsDoc {
    pub passed: bool,
    pub four_cycles: usize,
    pub convex_cycles: usize,
    pub nonconvex_four_cycles: usize,
    pub non_intertwining_pairs: usize,
    pub four_cycle_overlaps: usize,
}

#[derive(Serialize)]
pub struct ColoringDoc {
    pub k: u32,
    pub green_red_steps: u32,
    pub green_blue_steps: u32,
    pub red_blue_steps: u32,
}

#[derive(Serialize)]
pub struct TraverseDoc {
    pub length: u32,
    pub cycles: Vec<CycleDoc>,
    pub side_v: Vec<Vertex>,
    pub side_u: Vec<Vertex>,
}

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub schema_version: u32,
    pub input: InputDesc,
    pub max_cycle_len: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<SignatureDoc>,
    pub four_cycle_count: usize,
    pub convex_cycles: Vec<CycleDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler: Option<EulerDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claims: Option<ClaimsDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<ColoringDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub traverse: Option<TraverseDoc>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<u64>,
}

pub fn print_analyze(doc: &AnalyzeReport) {
    println!(
        "# {} line {}: n={} m={}",
        doc.input.source, doc.input.line, doc.input.n, doc.input.m
    );
    if let Some(sig) = &doc.signature {
        println!(
            "signature: ({},{},{}){}",
            sig.triple[0],
            sig.triple[1],
            sig.triple[2],
            if sig.uniform { "" } else { " (non-uniform)" }
        );
    }
    let mut by_len: Vec<(u32, usize)> = Vec::new();
    for c in &doc.convex_cycles {
        match by_len.last_mut() {
            Some(last) if last.0 == c.length => last.1 += 1,
            _ => by_len.push((c.length, 1)),
        }
    }
    let counts: Vec<String> = by_len.iter().map(|(l, c)| format!("{c} of length {l}")).collect();
    println!(
        "convex cycles (length <= {}): {}{}",
        doc.max_cycle_len,
        doc.convex_cycles.len(),
        if counts.is_empty() { String::new() } else { format!(" ({})", counts.join(", ")) }
    );
    println!("four-cycles: {}", doc.four_cycle_count);
    if let Some(e) = &doc.euler {
        println!(
            "euler: n={} e={} f4={} f6={} f={} chi={}",
            e.n, e.e, e.f4, e.f6, e.f, e.chi
        );
    }
    if let Some(c) = &doc.claims {
        println!(
            "claims: {} (4-cycles {}, convex cycles {}, violations {}/{}/{})",
            if c.passed { "pass" } else { "FAIL" },
            c.four_cycles,
            c.convex_cycles,
            c.nonconvex_four_cycles,
            c.non_intertwining_pairs,
            c.four_cycle_overlaps
        );
    }
    if let Some(c) = &doc.coloring {
        println!(
            "coloring: k={} walks close after {}/{}/{} steps",
            c.k, c.green_red_steps, c.green_blue_steps, c.red_blue_steps
        );
    }
    if let Some(t) = &doc.traverse {
        println!(
            "traverse: {} cycles, length {}, side_v {:?}",
            t.cycles.len(),
            t.length,
            t.side_v
        );
    }
    for e in &doc.errors {
        println!("error: {e}");
    }
    if let Some(ms) = doc.timings_ms {
        println!("elapsed_ms: {ms}");
    }
}

#[derive(Serialize)]
pub struct CensusPositiveDoc {
    pub graph6: String,
    pub tag: String,
}

#[derive(Serialize)]
pub struct CensusEntryDoc {
    pub n: u32,
    pub cubic_count: usize,
    pub positives: Vec<CensusPositiveDoc>,
}

#[derive(Serialize)]
pub struct CensusDoc {
    pub schema_version: u32,
    pub max_n: u32,
    pub entries: Vec<CensusEntryDoc>,
    pub contradictions: usize,
}

#[derive(Serialize)]
pub struct MetaDoc {
    pub schema_version: u32,
    pub family: String,
    pub params: Vec<String>,
    pub n: u32,
    pub m: usize,
    pub vertices: Vec<String>,
}
