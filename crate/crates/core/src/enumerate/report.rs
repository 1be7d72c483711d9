use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use crate::balance::{self, classify};
use crate::codec::graph6;
use crate::error::Result;
use crate::families::complete_bipartite;
use crate::graph::are_isomorphic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ReportKind {
    Scan,
    Verify,
}

impl ReportKind {
    pub fn name(self) -> &'static str {
        match self {
            ReportKind::Scan => "scan",
            ReportKind::Verify => "verify",
        }
    }
}

/// Checked statements. Names are stable and appear in report documents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Predicate {
    /// `|W_ab| + |W_ba| + eq = n` on every edge.
    PartitionCompleteness,
    /// D-table identity agrees with the W-ratio test on every edge.
    SumIdentity,
    /// No equidistant vertex on any edge of a bipartite graph.
    BipartiteNoEquidistant,
    /// Every k-GNDB graph (k >= 2) is bipartite.
    Bipartite,
    /// Bipartite k-GNDB graphs have `(k + 1) * gamma` vertices.
    Order,
    /// k-GNDB graphs have diameter at most `k * gamma`.
    DiameterBound,
    /// Diameter-2 k-GNDB graphs have degree ratio `k` on every edge.
    DegreeRatio,
    /// Diameter-2 k-GNDB graphs are `K_{gamma, k*gamma}`.
    CompleteBipartiteShape,
    /// The 3-GNDB graphs with gamma 1 are exactly `K_{1,3}`.
    GammaOneClassification,
    /// The 3-GNDB graphs with gamma 2 are exactly `K_{2,6}`.
    GammaTwoClassification,
}

impl Predicate {
    pub const ALL: [Predicate; 10] = [
        Predicate::PartitionCompleteness,
        Predicate::SumIdentity,
        Predicate::BipartiteNoEquidistant,
        Predicate::Bipartite,
        Predicate::Order,
        Predicate::DiameterBound,
        Predicate::DegreeRatio,
        Predicate::CompleteBipartiteShape,
        Predicate::GammaOneClassification,
        Predicate::GammaTwoClassification,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::PartitionCompleteness => "partition-completeness",
            Predicate::SumIdentity => "sum-identity",
            Predicate::BipartiteNoEquidistant => "bipartite-no-equidistant",
            Predicate::Bipartite => "gndb-bipartite",
            Predicate::Order => "gndb-order",
            Predicate::DiameterBound => "diameter-bound",
            Predicate::DegreeRatio => "degree-ratio",
            Predicate::CompleteBipartiteShape => "complete-bipartite-shape",
            Predicate::GammaOneClassification => "gamma1-classification",
            Predicate::GammaTwoClassification => "gamma2-classification",
        }
    }

    pub fn from_name(name: &str) -> Option<Predicate> {
        Predicate::ALL.into_iter().find(|p| p.name() == name)
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A counterexample (or documented exemption) that can be replayed from
/// its graph6 string alone.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Certificate {
    pub graph6: String,
    pub predicate: Predicate,
    pub k: Option<u32>,
    pub gamma: Option<usize>,
    pub edge: Option<(usize, usize)>,
    pub detail: String,
    /// Produced under deliberate fault injection.
    pub injected: bool,
}

impl Certificate {
    /// Re-evaluates the predicate on the decoded graph. `Ok(true)` means the
    /// recorded failure reproduces.
    pub fn replay(&self) -> Result<bool> {
        let g = graph6::decode(&self.graph6)?;
        let k = self.k.unwrap_or(1);
        let dm = g.distances();
        let edge_balance = || -> Result<balance::EdgeBalance> {
            let (a, b) = self.edge.ok_or_else(|| {
                crate::error::Error::Inapplicable("certificate has no edge witness".into())
            })?;
            balance::edge_partition(&g, &dm, a, b)
        };
        let gamma_of = |k: u32| -> Result<Option<usize>> { Ok(classify(&g, &[k])?.gamma(k)) };
        let reproduced = match self.predicate {
            Predicate::PartitionCompleteness => {
                let eb = edge_balance()?;
                let complete = eb.w_ab + eb.w_ba + eb.eq_count == g.n();
                complete == self.injected
            }
            Predicate::SumIdentity => {
                let eb = edge_balance()?;
                balance::check_sum_identity(&eb, k) != balance::is_consistent_edge(&eb, k)
            }
            Predicate::BipartiteNoEquidistant => g.is_bipartite() && edge_balance()?.eq_count != 0,
            Predicate::Bipartite => gamma_of(k)?.is_some() && !g.is_bipartite(),
            Predicate::Order => match gamma_of(k)? {
                Some(gamma) if g.is_bipartite() => !balance::order_equals_expected(&g, k, gamma)?,
                _ => false,
            },
            Predicate::DiameterBound => match gamma_of(k)? {
                Some(gamma) => !balance::diameter_bound_holds(dm.diameter()?, k, gamma),
                None => false,
            },
            Predicate::DegreeRatio => matches!(balance::degree_ratio_holds(&g, k), Ok(false)),
            Predicate::CompleteBipartiteShape => match gamma_of(k)? {
                Some(gamma) if dm.diameter()? == 2 => {
                    !are_isomorphic(&g, &complete_bipartite(gamma, k as usize * gamma)?)
                }
                _ => false,
            },
            Predicate::GammaOneClassification => {
                (gamma_of(3)? == Some(1)) != are_isomorphic(&g, &complete_bipartite(1, 3)?)
            }
            Predicate::GammaTwoClassification => {
                (gamma_of(3)? == Some(2)) != are_isomorphic(&g, &complete_bipartite(2, 6)?)
            }
        };
        Ok(reproduced)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub k: u32,
    pub gdb: bool,
    pub gamma: Option<usize>,
}

/// A graph in the k-GNDB class for at least one requested `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Match {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub diameter: usize,
    pub bipartite: bool,
    pub verdicts: Vec<Verdict>,
}

impl Match {
    pub fn gamma(&self, k: u32) -> Option<usize> {
        self.verdicts.iter().find(|v| v.k == k).and_then(|v| v.gamma)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusStats {
    pub n: usize,
    /// Graphs read or generated.
    pub examined: usize,
    /// Graphs that went through full classification (after pre-filters).
    pub classified: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub kind: ReportKind,
    pub n_min: usize,
    pub n_max: usize,
    pub ks: Vec<u32>,
    pub gamma: Option<usize>,
    pub paranoid: bool,
    /// `"generated"` or the path of an external graph6 corpus.
    pub source: String,
    pub corpus: Vec<CorpusStats>,
    /// Inputs skipped because they were disconnected.
    pub skipped: usize,
    pub matches: Vec<Match>,
    pub violations: Vec<Certificate>,
    /// Failures of the bipartite predicate at `k = 1`, which the statement
    /// does not cover (complete graphs are NDB and not bipartite).
    pub carve_outs: Vec<Certificate>,
}

impl ScanReport {
    pub(crate) fn empty(kind: ReportKind, n_min: usize, n_max: usize, ks: Vec<u32>) -> Self {
        ScanReport {
            kind,
            n_min,
            n_max,
            ks,
            gamma: None,
            paranoid: false,
            source: "generated".into(),
            corpus: Vec::new(),
            skipped: 0,
            matches: Vec::new(),
            violations: Vec::new(),
            carve_outs: Vec::new(),
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn elapsed(&self) -> Duration {
        self.corpus.iter().map(|c| c.elapsed).sum()
    }

    pub fn corpus_size(&self) -> usize {
        self.corpus.iter().map(|c| c.examined).sum()
    }

    /// Matches that are k-GNDB with exactly this `gamma`.
    pub fn matches_with(&self, k: u32, gamma: usize) -> Vec<&Match> {
        self.matches.iter().filter(|m| m.gamma(k) == Some(gamma)).collect()
    }

    /// Combines two partial reports over disjoint sub-corpora. Associative
    /// and commutative up to the header, which is taken from `self`.
    pub fn merge(mut self, other: ScanReport) -> ScanReport {
        let mut by_n: BTreeMap<usize, CorpusStats> = BTreeMap::new();
        for c in self.corpus.drain(..).chain(other.corpus) {
            by_n.entry(c.n)
                .and_modify(|acc| {
                    acc.examined += c.examined;
                    acc.classified += c.classified;
                    acc.elapsed += c.elapsed;
                })
                .or_insert(c);
        }
        self.corpus = by_n.into_values().collect();
        self.skipped += other.skipped;
        self.matches.extend(other.matches);
        self.violations.extend(other.violations);
        self.carve_outs.extend(other.carve_outs);
        self.normalize();
        self
    }

    pub(crate) fn normalize(&mut self) {
        self.corpus.sort_by_key(|c| c.n);
        self.matches.sort_by(|a, b| (a.n, &a.graph6).cmp(&(b.n, &b.graph6)));
        self.violations.sort();
        self.carve_outs.sort();
    }
}
