//! Report documents (JSON, stable field order) and human summaries.
//!
//! Machine documents never contain timings, so two runs with the same
//! inputs serialize to identical bytes. Timings appear only in summaries.

use std::fmt::Write as _;

use serde::Serialize;

use crate::balance::{BalanceClass, EdgeBalance};
use crate::codec::graph6;
use crate::enumerate::{Certificate, Match, ScanReport, CONNECTED_CLASS_COUNTS};
use crate::graph::Graph;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct VerdictDoc {
    k: u32,
    gdb: bool,
    gndb: bool,
    gamma: Option<usize>,
}

#[derive(Serialize)]
struct DEntryDoc {
    i: usize,
    j: usize,
    count: usize,
}

#[derive(Serialize)]
struct EdgeDoc {
    a: usize,
    b: usize,
    w_ab: usize,
    w_ba: usize,
    eq_count: usize,
    d_table: Vec<DEntryDoc>,
}

impl From<&EdgeBalance> for EdgeDoc {
    fn from(eb: &EdgeBalance) -> Self {
        EdgeDoc {
            a: eb.a,
            b: eb.b,
            w_ab: eb.w_ab,
            w_ba: eb.w_ba,
            eq_count: eb.eq_count,
            d_table: eb
                .d_table
                .iter()
                .map(|(&(i, j), &count)| DEntryDoc { i, j, count })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct AnalysisInputs<'a> {
    source: &'a str,
    graph6: String,
    ks: Vec<u32>,
}

#[derive(Serialize)]
struct GraphDoc {
    n: usize,
    edges: usize,
    diameter: Option<usize>,
    bipartite: bool,
}

#[derive(Serialize)]
struct AnalysisDoc<'a> {
    schema_version: u32,
    kind: &'static str,
    inputs: AnalysisInputs<'a>,
    graph: GraphDoc,
    db: bool,
    ndb_gamma: Option<usize>,
    verdicts: Vec<VerdictDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    per_edge: Option<Vec<EdgeDoc>>,
}

fn verdicts(class: &BalanceClass) -> Vec<VerdictDoc> {
    class
        .kgdb
        .iter()
        .map(|(&k, &gdb)| {
            let gamma = class.gamma(k);
            VerdictDoc { k, gdb, gndb: gamma.is_some(), gamma }
        })
        .collect()
}

/// JSON document for one classified graph.
pub fn analysis_document(source: &str, g: &Graph, class: &BalanceClass, with_edges: bool) -> String {
    let doc = AnalysisDoc {
        schema_version: SCHEMA_VERSION,
        kind: "analysis",
        inputs: AnalysisInputs {
            source,
            graph6: graph6::encode(g),
            ks: class.kgdb.keys().copied().collect(),
        },
        graph: GraphDoc {
            n: g.n(),
            edges: g.edge_count(),
            diameter: g.diameter().ok(),
            bipartite: g.is_bipartite(),
        },
        db: class.is_db,
        ndb_gamma: class.ndb_gamma,
        verdicts: verdicts(class),
        per_edge: with_edges.then(|| class.per_edge.iter().map(EdgeDoc::from).collect()),
    };
    to_json(&doc)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn analysis_summary(source: &str, g: &Graph, class: &BalanceClass, with_edges: bool) -> String {
    let mut s = String::new();
    let diameter = g.diameter().map_or("undefined".to_string(), |d| d.to_string());
    let _ = writeln!(s, "graph {} ({source})", graph6::encode(g));
    let _ = writeln!(
        s,
        "  n={} edges={} diameter={} bipartite={}",
        g.n(),
        g.edge_count(),
        diameter,
        yes_no(g.is_bipartite())
    );
    match class.ndb_gamma {
        Some(gamma) => {
            let _ = writeln!(s, "  DB: yes, NDB with gamma={gamma}");
        }
        None => {
            let _ = writeln!(s, "  DB: {}, NDB: no", yes_no(class.is_db));
        }
    }
    for (&k, &gdb) in &class.kgdb {
        match class.gamma(k) {
            Some(gamma) => {
                let _ = writeln!(s, "  k={k}: {k}-GDB yes, {k}-GNDB with gamma={gamma}");
            }
            None => {
                let _ = writeln!(s, "  k={k}: {k}-GDB {}, {k}-GNDB no", yes_no(gdb));
            }
        }
    }
    if with_edges {
        for eb in &class.per_edge {
            let table: Vec<String> = eb
                .d_table
                .iter()
                .map(|(&(i, j), &c)| format!("D[{i},{j}]={c}"))
                .collect();
            let _ = writeln!(
                s,
                "  edge {}-{}: |W_ab|={} |W_ba|={} eq={}  {}",
                eb.a,
                eb.b,
                eb.w_ab,
                eb.w_ba,
                eb.eq_count,
                table.join(" ")
            );
        }
    }
    s
}

#[derive(Serialize)]
struct ScanInputs<'a> {
    n_min: usize,
    n_max: usize,
    ks: &'a [u32],
    gamma: Option<usize>,
    paranoid: bool,
    source: &'a str,
}

#[derive(Serialize)]
struct CorpusDoc {
    n: usize,
    examined: usize,
    classified: usize,
    expected_classes: Option<usize>,
}

#[derive(Serialize)]
struct MatchDoc<'a> {
    graph6: &'a str,
    n: usize,
    edges: usize,
    diameter: usize,
    bipartite: bool,
    verdicts: Vec<VerdictDoc>,
}

impl<'a> From<&'a Match> for MatchDoc<'a> {
    fn from(m: &'a Match) -> Self {
        MatchDoc {
            graph6: &m.graph6,
            n: m.n,
            edges: m.edges,
            diameter: m.diameter,
            bipartite: m.bipartite,
            verdicts: m
                .verdicts
                .iter()
                .map(|v| VerdictDoc { k: v.k, gdb: v.gdb, gndb: v.gamma.is_some(), gamma: v.gamma })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct CertificateDoc<'a> {
    graph6: &'a str,
    predicate: &'static str,
    k: Option<u32>,
    gamma: Option<usize>,
    edge: Option<[usize; 2]>,
    detail: &'a str,
    injected: bool,
}

impl<'a> From<&'a Certificate> for CertificateDoc<'a> {
    fn from(c: &'a Certificate) -> Self {
        CertificateDoc {
            graph6: &c.graph6,
            predicate: c.predicate.name(),
            k: c.k,
            gamma: c.gamma,
            edge: c.edge.map(|(a, b)| [a, b]),
            detail: &c.detail,
            injected: c.injected,
        }
    }
}

#[derive(Serialize)]
struct ScanDoc<'a> {
    schema_version: u32,
    kind: &'static str,
    inputs: ScanInputs<'a>,
    corpus: Vec<CorpusDoc>,
    corpus_size: usize,
    skipped: usize,
    clean: bool,
    matches: Vec<MatchDoc<'a>>,
    violations: Vec<CertificateDoc<'a>>,
    carve_outs: Vec<CertificateDoc<'a>>,
}

/// JSON document for a scan or verification run.
pub fn scan_document(r: &ScanReport) -> String {
    let generated = r.source == "generated";
    let doc = ScanDoc {
        schema_version: SCHEMA_VERSION,
        kind: r.kind.name(),
        inputs: ScanInputs {
            n_min: r.n_min,
            n_max: r.n_max,
            ks: &r.ks,
            gamma: r.gamma,
            paranoid: r.paranoid,
            source: &r.source,
        },
        corpus: r
            .corpus
            .iter()
            .map(|c| CorpusDoc {
                n: c.n,
                examined: c.examined,
                classified: c.classified,
                expected_classes: generated.then(|| CONNECTED_CLASS_COUNTS.get(c.n).copied()).flatten(),
            })
            .collect(),
        corpus_size: r.corpus_size(),
        skipped: r.skipped,
        clean: r.is_clean(),
        matches: r.matches.iter().map(MatchDoc::from).collect(),
        violations: r.violations.iter().map(CertificateDoc::from).collect(),
        carve_outs: r.carve_outs.iter().map(CertificateDoc::from).collect(),
    };
    to_json(&doc)
}

fn format_match(m: &Match) -> String {
    let gammas: Vec<String> = m
        .verdicts
        .iter()
        .filter_map(|v| v.gamma.map(|g| format!("k={} gamma={g}", v.k)))
        .collect();
    format!(
        "{:<12} n={} edges={} diameter={} bipartite={}  {}",
        m.graph6,
        m.n,
        m.edges,
        m.diameter,
        yes_no(m.bipartite),
        gammas.join(", ")
    )
}

fn format_certificate(c: &Certificate) -> String {
    let mut s = format!("{:<12} {}", c.graph6, c.predicate);
    if let Some(k) = c.k {
        let _ = write!(s, " k={k}");
    }
    if let Some(gamma) = c.gamma {
        let _ = write!(s, " gamma={gamma}");
    }
    if let Some((a, b)) = c.edge {
        let _ = write!(s, " edge={a}-{b}");
    }
    if c.injected {
        s.push_str(" [injected]");
    }
    let _ = write!(s, ": {}", c.detail);
    s
}

/// Human-readable summary. Lists at most `max_matches` matches.
pub fn scan_summary(r: &ScanReport, max_matches: usize) -> String {
    let mut s = String::new();
    let ks: Vec<String> = r.ks.iter().map(u32::to_string).collect();
    let _ = write!(s, "{} n={}..={} k={{{}}}", r.kind.name(), r.n_min, r.n_max, ks.join(","));
    if let Some(gamma) = r.gamma {
        let _ = write!(s, " gamma={gamma}");
    }
    let _ = writeln!(
        s,
        " source={}{}",
        r.source,
        if r.paranoid { " (paranoid)" } else { "" }
    );
    for c in &r.corpus {
        let _ = writeln!(
            s,
            "  n={}: {} graphs, {} classified, {:.3}s",
            c.n,
            c.examined,
            c.classified,
            c.elapsed.as_secs_f64()
        );
    }
    if r.skipped > 0 {
        let _ = writeln!(s, "  skipped {} disconnected or out-of-range inputs", r.skipped);
    }
    let _ = writeln!(s, "matches: {}", r.matches.len());
    for m in r.matches.iter().take(max_matches) {
        let _ = writeln!(s, "  {}", format_match(m));
    }
    if r.matches.len() > max_matches {
        let _ = writeln!(s, "  ... {} more (see --out)", r.matches.len() - max_matches);
    }
    let _ = writeln!(s, "violations: {}", r.violations.len());
    for c in &r.violations {
        let _ = writeln!(s, "  {}", format_certificate(c));
    }
    if !r.carve_outs.is_empty() {
        let _ = writeln!(s, "k=1 carve-outs (NDB but not bipartite): {}", r.carve_outs.len());
        for c in r.carve_outs.iter().take(max_matches) {
            let _ = writeln!(s, "  {}", format_certificate(c));
        }
    }
    let _ = writeln!(s, "elapsed: {:.3}s", r.elapsed().as_secs_f64());
    s
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("report documents serialize");
    out.push('\n');
    out
}
