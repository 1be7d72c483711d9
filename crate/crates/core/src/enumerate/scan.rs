use std::collections::BTreeSet;
use std::time::Instant;

use super::report::{Certificate, CorpusStats, Match, Predicate, ReportKind, ScanReport, Verdict};
use super::{check_order, next_level};
use crate::balance::{self, classify_with, BalanceClass};
use crate::codec::graph6;
use crate::error::{Error, Result};
use crate::families::complete_bipartite;
use crate::graph::{are_isomorphic, canonical_labeling, Graph};

pub const DEFAULT_KS: [u32; 3] = [1, 2, 3];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub ks: Vec<u32>,
    /// Keep only matches whose gamma equals this value.
    pub gamma: Option<usize>,
    pub jobs: usize,
    /// Disable necessary-condition pre-filters.
    pub paranoid: bool,
}

impl ScanConfig {
    pub fn new(n_max: usize, ks: &[u32]) -> Self {
        ScanConfig {
            n_min: 1,
            n_max,
            ks: ks.to_vec(),
            gamma: None,
            jobs: 1,
            paranoid: false,
        }
    }

    pub fn gamma(mut self, gamma: usize) -> Self {
        self.gamma = Some(gamma);
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn paranoid(mut self, paranoid: bool) -> Self {
        self.paranoid = paranoid;
        self
    }

    fn validate(&self) -> Result<Vec<u32>> {
        check_order(self.n_max)?;
        check_order(self.n_min)?;
        let ks: BTreeSet<u32> = self.ks.iter().copied().collect();
        if let Some(&k) = ks.iter().find(|&&k| k == 0) {
            return Err(Error::InvalidK(k));
        }
        if ks.is_empty() {
            return Err(Error::Inapplicable("no balance parameter k requested".into()));
        }
        Ok(ks.into_iter().collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub jobs: usize,
    /// Deliberately invert the partition-completeness check so that a
    /// working harness must report violations.
    pub inject_fault: bool,
}

impl VerifyConfig {
    pub fn new(n_max: usize) -> Self {
        VerifyConfig { n_max, jobs: 1, inject_fault: false }
    }
}

/// Builds a certificate for the graph under test from (predicate, k, gamma,
/// edge, detail).
type MakeCertificate<'a> =
    dyn Fn(Predicate, Option<u32>, Option<usize>, Option<(usize, usize)>, String) -> Certificate + 'a;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Scan,
    Verify,
}

/// Per-graph predicate evaluation shared by scan and verify.
struct Checker {
    ks: Vec<u32>,
    gamma: Option<usize>,
    prefilter: bool,
    mode: Mode,
    inject_fault: bool,
}

#[derive(Default)]
struct Outcome {
    classified: bool,
    matched: Option<Match>,
    violations: Vec<Certificate>,
    carve_outs: Vec<Certificate>,
}

impl Checker {
    /// Necessary conditions for being k-GNDB with k >= 2: bipartite, and
    /// order `(k + 1) * gamma` when gamma is fixed.
    fn may_match(&self, g: &Graph) -> bool {
        let bipartite = g.is_bipartite();
        self.ks.iter().any(|&k| {
            k == 1
                || (bipartite && self.gamma.is_none_or(|gamma| g.n() == (k as usize + 1) * gamma))
        })
    }

    fn check(&self, g: &Graph) -> Result<Outcome> {
        let mut out = Outcome::default();
        if g.n() < 2 || (self.prefilter && !self.may_match(g)) {
            return Ok(out);
        }
        out.classified = true;
        let dm = g.distances();
        let diameter = dm.diameter()?;
        let class = classify_with(g, &dm, &self.ks)?;
        let coloring = g.two_coloring();
        let bipartite = coloring.is_ok();
        let code = graph6::encode(g);
        let cert = |predicate, k: Option<u32>, gamma, edge, detail: String| Certificate {
            graph6: code.clone(),
            predicate,
            k,
            gamma,
            edge,
            detail,
            injected: false,
        };

        if self.mode == Mode::Verify {
            self.check_edges(g, &class, bipartite, &cert, &mut out);
        }

        for &k in &self.ks {
            let Some(gamma) = class.gamma(k) else { continue };
            if !balance::diameter_bound_holds(diameter, k, gamma) {
                out.violations.push(cert(
                    Predicate::DiameterBound,
                    Some(k),
                    Some(gamma),
                    None,
                    format!("diameter {diameter} > k*gamma = {}", k as usize * gamma),
                ));
            }
            if let Err(edge) = coloring {
                let c = cert(
                    Predicate::Bipartite,
                    Some(k),
                    Some(gamma),
                    Some(edge),
                    format!("{k}-GNDB with gamma {gamma} but not bipartite"),
                );
                if k == 1 {
                    out.carve_outs.push(c);
                } else {
                    out.violations.push(c);
                }
            }
            if k < 2 {
                continue;
            }
            if bipartite && !balance::order_equals_expected(g, k, gamma)? {
                out.violations.push(cert(
                    Predicate::Order,
                    Some(k),
                    Some(gamma),
                    None,
                    format!("n = {} but (k+1)*gamma = {}", g.n(), (k as usize + 1) * gamma),
                ));
            }
            if diameter == 2 {
                if !balance::degree_ratio_holds(g, k)? {
                    let edge = class.per_edge.iter().find(|eb| {
                        let (da, db) = (g.degree(eb.a).unwrap_or(0), g.degree(eb.b).unwrap_or(0));
                        da.max(db) != k as usize * da.min(db)
                    });
                    out.violations.push(cert(
                        Predicate::DegreeRatio,
                        Some(k),
                        Some(gamma),
                        edge.map(|eb| (eb.a, eb.b)),
                        "degree ratio differs from k".into(),
                    ));
                }
                let expected = complete_bipartite(gamma, k as usize * gamma)?;
                if !are_isomorphic(g, &expected) {
                    out.violations.push(cert(
                        Predicate::CompleteBipartiteShape,
                        Some(k),
                        Some(gamma),
                        None,
                        format!("diameter 2 but not K_{{{gamma},{}}}", k as usize * gamma),
                    ));
                }
            }
            if self.mode == Mode::Verify && k == 3 {
                let expected = match gamma {
                    1 => Some((Predicate::GammaOneClassification, complete_bipartite(1, 3)?)),
                    2 => Some((Predicate::GammaTwoClassification, complete_bipartite(2, 6)?)),
                    _ => None,
                };
                if let Some((predicate, expected)) = expected {
                    if !are_isomorphic(g, &expected) {
                        out.violations.push(cert(
                            predicate,
                            Some(3),
                            Some(gamma),
                            None,
                            "unexpected 3-GNDB graph".into(),
                        ));
                    }
                }
            }
        }

        let hit = self.ks.iter().any(|&k| match (class.gamma(k), self.gamma) {
            (Some(found), Some(wanted)) => found == wanted,
            (Some(_), None) => true,
            (None, _) => false,
        });
        if hit {
            out.matched = Some(Match {
                graph6: code.clone(),
                n: g.n(),
                edges: g.edge_count(),
                diameter,
                bipartite,
                verdicts: self
                    .ks
                    .iter()
                    .map(|&k| Verdict { k, gdb: class.is_kgdb(k), gamma: class.gamma(k) })
                    .collect(),
            });
        }
        Ok(out)
    }

    fn check_edges(
        &self,
        g: &Graph,
        class: &BalanceClass,
        bipartite: bool,
        cert: &MakeCertificate<'_>,
        out: &mut Outcome,
    ) {
        for eb in &class.per_edge {
            let edge = Some((eb.a, eb.b));
            let complete = eb.w_ab + eb.w_ba + eb.eq_count == g.n();
            if complete == self.inject_fault {
                let mut c = cert(
                    Predicate::PartitionCompleteness,
                    None,
                    None,
                    edge,
                    format!("{} + {} + {} vs n = {}", eb.w_ab, eb.w_ba, eb.eq_count, g.n()),
                );
                c.injected = self.inject_fault;
                out.violations.push(c);
            }
            for &k in &self.ks {
                if balance::check_sum_identity(eb, k) != balance::is_consistent_edge(eb, k) {
                    out.violations.push(cert(
                        Predicate::SumIdentity,
                        Some(k),
                        None,
                        edge,
                        "D-table identity disagrees with the W ratio".into(),
                    ));
                }
            }
            if bipartite && eb.eq_count != 0 {
                out.violations.push(cert(
                    Predicate::BipartiteNoEquidistant,
                    None,
                    None,
                    edge,
                    format!("{} equidistant vertices", eb.eq_count),
                ));
            }
        }
    }

    /// Runs the checker over one level, split into `jobs` interleaved shards.
    fn run_level(&self, graphs: &[Graph], jobs: usize, report: &mut ScanReport) -> Result<usize> {
        let jobs = jobs.max(1).min(graphs.len().max(1));
        let run_shard = |index: usize| -> Result<Vec<Outcome>> {
            graphs.iter().skip(index).step_by(jobs).map(|g| self.check(g)).collect()
        };
        let shards: Vec<Result<Vec<Outcome>>> = if jobs == 1 {
            vec![run_shard(0)]
        } else {
            std::thread::scope(|s| {
                let handles: Vec<_> = (0..jobs).map(|i| s.spawn(move || run_shard(i))).collect();
                handles.into_iter().map(|h| h.join().expect("scan shard panicked")).collect()
            })
        };
        let mut classified = 0;
        for shard in shards {
            for outcome in shard? {
                classified += outcome.classified as usize;
                report.matches.extend(outcome.matched);
                report.violations.extend(outcome.violations);
                report.carve_outs.extend(outcome.carve_outs);
            }
        }
        Ok(classified)
    }
}

fn generated(checker: &Checker, n_min: usize, n_max: usize, jobs: usize, report: &mut ScanReport) -> Result<()> {
    let mut level = vec![Graph::new(1)?];
    for n in 1..=n_max {
        let start = Instant::now();
        if n > 1 {
            level = next_level(&level, jobs);
        }
        if n < n_min {
            continue;
        }
        let classified = checker.run_level(&level, jobs, report)?;
        report.corpus.push(CorpusStats {
            n,
            examined: level.len(),
            classified,
            elapsed: start.elapsed(),
        });
    }
    Ok(())
}

/// Classifies every connected graph with `n_min <= n <= n_max`.
pub fn scan(config: &ScanConfig) -> Result<ScanReport> {
    let ks = config.validate()?;
    let checker = Checker {
        ks: ks.clone(),
        gamma: config.gamma,
        prefilter: !config.paranoid,
        mode: Mode::Scan,
        inject_fault: false,
    };
    let mut report = ScanReport::empty(ReportKind::Scan, config.n_min, config.n_max, ks);
    report.gamma = config.gamma;
    report.paranoid = config.paranoid;
    generated(&checker, config.n_min, config.n_max, config.jobs, &mut report)?;
    report.normalize();
    Ok(report)
}

/// Scans an external corpus instead of the generated one. Inputs are
/// canonicalized and deduplicated; disconnected inputs and inputs outside
/// `n_min..=n_max` are skipped.
pub fn scan_corpus(config: &ScanConfig, graphs: &[Graph], source: &str) -> Result<ScanReport> {
    let ks = config.validate()?;
    let checker = Checker {
        ks: ks.clone(),
        gamma: config.gamma,
        prefilter: !config.paranoid,
        mode: Mode::Scan,
        inject_fault: false,
    };
    let mut report = ScanReport::empty(ReportKind::Scan, config.n_min, config.n_max, ks);
    report.gamma = config.gamma;
    report.paranoid = config.paranoid;
    report.source = source.to_string();
    let mut by_n: Vec<Vec<(crate::graph::CanonKey, Graph)>> = vec![Vec::new(); config.n_max + 1];
    for g in graphs {
        if g.n() < config.n_min || g.n() > config.n_max || !g.is_connected() {
            report.skipped += 1;
            continue;
        }
        let canon = canonical_labeling(g);
        by_n[g.n()].push((canon.key.clone(), canon.apply(g)));
    }
    for (n, mut level) in by_n.into_iter().enumerate() {
        if level.is_empty() {
            continue;
        }
        let start = Instant::now();
        let examined = level.len();
        level.sort_by(|a, b| a.0.cmp(&b.0));
        level.dedup_by(|a, b| a.0 == b.0);
        let level: Vec<Graph> = level.into_iter().map(|(_, g)| g).collect();
        let classified = checker.run_level(&level, config.jobs, &mut report)?;
        report.corpus.push(CorpusStats { n, examined, classified, elapsed: start.elapsed() });
    }
    report.normalize();
    Ok(report)
}

/// Runs the full predicate suite over every connected graph on at most
/// `n_max` vertices, with `k` in {1, 2, 3} and no pre-filtering.
pub fn verify_theorems(config: &VerifyConfig) -> Result<ScanReport> {
    check_order(config.n_max)?;
    let ks = DEFAULT_KS.to_vec();
    let checker = Checker {
        ks: ks.clone(),
        gamma: None,
        prefilter: false,
        mode: Mode::Verify,
        inject_fault: config.inject_fault,
    };
    let mut report = ScanReport::empty(ReportKind::Verify, 1, config.n_max, ks);
    report.paranoid = true;
    generated(&checker, 1, config.n_max, config.jobs, &mut report)?;

    let expected = [
        (Predicate::GammaOneClassification, 1, complete_bipartite(1, 3)?),
        (Predicate::GammaTwoClassification, 2, complete_bipartite(2, 6)?),
    ];
    for (predicate, gamma, graph) in expected {
        if graph.n() > config.n_max {
            continue;
        }
        let code = graph6::encode(&canonical_labeling(&graph).apply(&graph));
        if !report.matches.iter().any(|m| m.graph6 == code && m.gamma(3) == Some(gamma)) {
            report.violations.push(Certificate {
                graph6: code,
                predicate,
                k: Some(3),
                gamma: Some(gamma),
                edge: None,
                detail: "expected 3-GNDB graph not found".into(),
                injected: false,
            });
        }
    }
    report.normalize();
    Ok(report)
}
