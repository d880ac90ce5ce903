//! Exhaustive enumeration of small lattices and claim sweeps over them.
//!
//! Lattices of size `n ≥ 3` are generated as a bottom, a top, and an interior
//! poset on `n - 2` elements. The interior is grown one element at a time,
//! each new element choosing a down-closed set of earlier elements as its
//! strict down-set; every poset appears under some such labeling. Prefixes in
//! which two elements already lack a greatest lower bound are cut off, since
//! later elements never sit below earlier ones. Complete candidates are
//! validated as lattices and then deduplicated up to isomorphism.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::claims::{self, ClaimId, ClaimReport, Status, UnknownClaim};
use crate::graph::Girth;
use crate::ideal::{enumerate_ideals, IdealSet};
use crate::lattice::{generated_labels, lattices_isomorphic, Lattice};
use crate::zdgraph::build_gamma_i;

/// Largest census bound; reaching it needs an explicit opt-in.
pub const MAX_CENSUS_SIZE: usize = 8;
pub const DEFAULT_CENSUS_SIZE: usize = 7;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("size bound must be at least 1")]
    ZeroBound,
    #[error("size bound {0} exceeds the supported maximum of {MAX_CENSUS_SIZE}")]
    BoundTooLarge(usize),
    #[error("size bound 8 must be requested explicitly")]
    Size8NotAllowed,
    #[error("worker count must be at least 1")]
    ZeroWorkers,
    #[error(transparent)]
    UnknownClaim(#[from] UnknownClaim),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("writing counterexamples: {0}")]
    Io(#[from] std::io::Error),
}

/// All lattices with exactly `n` elements, one per isomorphism class, in a
/// fixed order.
pub fn lattices_of_size(n: usize) -> Vec<Lattice> {
    match n {
        0 => vec![],
        1 | 2 => vec![crate::lattice::chain(n)],
        _ => {
            let mut gen = Generator {
                interior: n - 2,
                downs: Vec::with_capacity(n - 2),
                reps: Vec::new(),
                by_invariant: HashMap::new(),
            };
            gen.grow();
            gen.reps
        }
    }
}

/// Lattices with `1..=max_size` elements, size by size.
pub fn enumerate_lattices(max_size: usize) -> impl Iterator<Item = Lattice> {
    (1..=max_size).flat_map(lattices_of_size)
}

struct Generator {
    interior: usize,
    /// Strict down-set of each interior element placed so far.
    downs: Vec<BitSet>,
    reps: Vec<Lattice>,
    by_invariant: HashMap<Vec<crate::lattice::ElementProfileKey>, Vec<usize>>,
}

impl Generator {
    fn grow(&mut self) {
        let k = self.downs.len();
        if k == self.interior {
            self.finish();
            return;
        }
        for bits in 0..(1u64 << k) {
            let d = BitSet::from_bits(bits);
            if !d.iter().all(|j| self.downs[j].is_subset(d)) {
                continue;
            }
            if !self.meets_exist(k, d) {
                continue;
            }
            self.downs.push(d);
            self.grow();
            self.downs.pop();
        }
    }

    /// Every earlier element and the new element `k` (strict down-set `d`)
    /// must have a greatest common lower bound among the placed elements, or
    /// none at all (then the bottom is the meet).
    fn meets_exist(&self, k: usize, d: BitSet) -> bool {
        let closed_k = d.with(k);
        (0..k).all(|i| {
            let common = self.downs[i].with(i).intersection(closed_k);
            common.is_empty() || common.iter().any(|c| common.is_subset(self.closed_down(c, k, d)))
        })
    }

    fn closed_down(&self, c: usize, k: usize, d: BitSet) -> BitSet {
        if c == k {
            d.with(k)
        } else {
            self.downs[c].with(c)
        }
    }

    fn finish(&mut self) {
        let m = self.interior;
        let n = m + 2;
        let top = n - 1;
        let mut up = vec![BitSet::empty(); n];
        up[0] = BitSet::full(n);
        up[top] = BitSet::singleton(top);
        for j in 0..m {
            let mut u = BitSet::singleton(j + 1).with(top);
            for (k, dk) in self.downs.iter().enumerate() {
                if dk.contains(j) {
                    u.insert(k + 1);
                }
            }
            up[j + 1] = u;
        }
        let Ok(candidate) = Lattice::from_up_sets(generated_labels(n), up) else {
            return;
        };
        let key = crate::lattice::invariant_key(&candidate);
        let bucket = self.by_invariant.entry(key).or_default();
        if bucket.iter().any(|&r| lattices_isomorphic(&self.reps[r], &candidate).is_some()) {
            return;
        }
        bucket.push(self.reps.len());
        self.reps.push(candidate);
    }
}

/// Which ideals of each lattice a sweep visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "UPPERCASE")]
pub enum IdealFilter {
    /// Every ideal, including the whole lattice (claims needing a proper
    /// ideal report VACUOUS there).
    #[default]
    All,
    Proper,
    /// Principal ideals `(a]`; on finite lattices these are all ideals.
    Principal,
}

impl std::str::FromStr for IdealFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(IdealFilter::All),
            "proper" => Ok(IdealFilter::Proper),
            "principal" => Ok(IdealFilter::Principal),
            _ => Err(format!("unknown ideal filter `{s}` (expected all, proper or principal)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusConfig {
    pub max_size: usize,
    pub distributive_only: bool,
    pub claims: Vec<ClaimId>,
    pub ideal_filter: IdealFilter,
    pub worker_count: usize,
    /// Required for `max_size == 8`.
    pub allow_size_8: bool,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            max_size: DEFAULT_CENSUS_SIZE,
            distributive_only: false,
            claims: ClaimId::ALL.to_vec(),
            ideal_filter: IdealFilter::All,
            worker_count: 1,
            allow_size_8: false,
        }
    }
}

impl CensusConfig {
    pub fn validate(&self) -> Result<(), CensusError> {
        check_bound(self.max_size, self.allow_size_8)?;
        if self.worker_count == 0 {
            return Err(CensusError::ZeroWorkers);
        }
        Ok(())
    }
}

fn check_bound(max_size: usize, allow_8: bool) -> Result<(), CensusError> {
    match max_size {
        0 => Err(CensusError::ZeroBound),
        n if n > MAX_CENSUS_SIZE => Err(CensusError::BoundTooLarge(n)),
        MAX_CENSUS_SIZE if !allow_8 => Err(CensusError::Size8NotAllowed),
        _ => Ok(()),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusCounts {
    pub holds: usize,
    pub fails: usize,
    pub vacuous: usize,
}

impl StatusCounts {
    fn add(&mut self, s: Status) {
        match s {
            Status::Holds => self.holds += 1,
            Status::Fails => self.fails += 1,
            Status::Vacuous => self.vacuous += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.holds + self.fails + self.vacuous
    }
}

/// Shape statistics of `Γ_I(L)` over the proper-ideal instances of a sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub graphs: usize,
    /// Girth (or `acyclic`) to number of graphs.
    pub girths: BTreeMap<String, usize>,
    pub max_diameter: usize,
    pub disconnected: usize,
    /// Vertices of cyclic graphs that are neither on the core nor pendants.
    pub off_core_non_pendant_vertices: usize,
}

/// One failing instance, with everything needed to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub claim_id: ClaimId,
    pub lattice_size: usize,
    pub lattice_text: String,
    pub ideal: Vec<String>,
    pub witness: String,
    pub report: ClaimReport,
}

impl Counterexample {
    pub fn new(l: &Lattice, ideal: &IdealSet, report: ClaimReport) -> Self {
        Counterexample {
            claim_id: report.claim_id,
            lattice_size: l.len(),
            lattice_text: l.to_text(),
            ideal: ideal.members().iter().map(|x| l.label(x).to_string()).collect(),
            witness: report.witness.as_ref().map(|w| w.render(l)).unwrap_or_default(),
            report,
        }
    }

    /// Rebuilds the instance from the stored text and re-runs the claim.
    pub fn replay(&self) -> Result<(Lattice, IdealSet, ClaimReport), crate::Error> {
        let l = Lattice::parse(&self.lattice_text)?;
        let members = l
            .set_from_labels(self.ideal.iter().map(String::as_str))
            .map_err(crate::Error::UnknownLabel)?;
        let ideal = IdealSet::ideal(&l, members)?;
        let report = claims::check(self.claim_id, &l, &ideal)?;
        Ok((l, ideal, report))
    }

    /// The lattice file with the instance recorded in leading comments.
    pub fn to_file_text(&self) -> String {
        format!(
            "# claim: {}\n# ideal: {}\n# witness: {}\n{}",
            self.claim_id,
            self.ideal.join(","),
            self.witness,
            self.lattice_text
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    /// `lattice_counts[k]` = lattices with `k + 1` elements that were swept.
    pub lattice_counts: Vec<usize>,
    pub instance_count: usize,
    pub per_claim: BTreeMap<ClaimId, StatusCounts>,
    pub graph_stats: GraphStats,
    pub counterexamples: Vec<Counterexample>,
}

impl CensusSummary {
    pub fn fails(&self, claim: ClaimId) -> usize {
        self.per_claim.get(&claim).map_or(0, |c| c.fails)
    }

    /// Fixed-column plain text table.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let counts: Vec<String> = self.lattice_counts.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "lattices: {}", counts.join(" "));
        let _ = writeln!(out, "instances: {}", self.instance_count);
        let _ = writeln!(out, "{:<16} {:>8} {:>8} {:>8}", "claim", "HOLDS", "FAILS", "VACUOUS");
        for (claim, c) in &self.per_claim {
            let _ = writeln!(out, "{:<16} {:>8} {:>8} {:>8}", claim.as_str(), c.holds, c.fails, c.vacuous);
        }
        let g = &self.graph_stats;
        let girths: Vec<String> = g.girths.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        let _ = writeln!(out, "graphs: {}", g.graphs);
        let _ = writeln!(out, "girths: {}", girths.join(" "));
        let _ = writeln!(out, "max diameter: {}", g.max_diameter);
        let _ = writeln!(out, "disconnected graphs: {}", g.disconnected);
        let _ = writeln!(out, "off-core non-pendant vertices: {}", g.off_core_non_pendant_vertices);
        let _ = writeln!(out, "counterexamples: {}", self.counterexamples.len());
        for c in &self.counterexamples {
            let _ = writeln!(
                out,
                "  {} on {}-element lattice, ideal {{{}}}: {}",
                c.claim_id,
                c.lattice_size,
                c.ideal.join(","),
                c.witness
            );
        }
        out
    }

    /// Writes each counterexample as a replayable lattice file; returns the paths.
    pub fn write_counterexamples(&self, dir: &Path) -> Result<Vec<PathBuf>, CensusError> {
        std::fs::create_dir_all(dir)?;
        let mut paths = Vec::new();
        for (i, c) in self.counterexamples.iter().enumerate() {
            let path = dir.join(format!("{:03}-{}.lattice", i, c.claim_id));
            std::fs::write(&path, c.to_file_text())?;
            paths.push(path);
        }
        Ok(paths)
    }
}

struct Outcome {
    reports: Vec<ClaimReport>,
    graph: Option<GraphObservation>,
}

struct GraphObservation {
    girth: Girth,
    diameter: Option<usize>,
    off_core_non_pendant: usize,
}

fn ideals_for(l: &Lattice, filter: IdealFilter) -> Vec<IdealSet> {
    let all = enumerate_ideals(l);
    match filter {
        IdealFilter::All | IdealFilter::Principal => all,
        IdealFilter::Proper => all.into_iter().filter(IdealSet::is_proper).collect(),
    }
}

/// Runs a claim, mapping an unmet precondition to a VACUOUS report.
pub fn evaluate(claim: ClaimId, l: &Lattice, ideal: &IdealSet) -> ClaimReport {
    match claims::check(claim, l, ideal) {
        Ok(r) => r,
        Err(e) => ClaimReport {
            claim_id: claim,
            status: Status::Vacuous,
            witness: None,
            details: BTreeMap::new(),
            notes: vec![format!("vacuous: {e}")],
        },
    }
}

fn observe(l: &Lattice, ideal: &IdealSet) -> Option<GraphObservation> {
    let zd = build_gamma_i(l, ideal).ok()?;
    let inv = zd.invariants();
    let off = if inv.has_cycle() {
        (0..inv.vertex_count)
            .filter(|&v| !inv.core_vertices.contains(v) && inv.degrees[v] != 1)
            .count()
    } else {
        0
    };
    Some(GraphObservation {
        girth: inv.girth,
        diameter: match inv.diameter {
            crate::graph::Diameter::Finite(d) => Some(d),
            crate::graph::Diameter::Infinite => None,
        },
        off_core_non_pendant: off,
    })
}

pub fn run_census(config: &CensusConfig) -> Result<CensusSummary, CensusError> {
    config.validate()?;
    let mut lattice_counts = vec![0; config.max_size];
    let mut instances: Vec<(usize, IdealSet)> = Vec::new();
    let mut lattices = Vec::new();
    for l in enumerate_lattices(config.max_size) {
        if config.distributive_only && !l.is_distributive() {
            continue;
        }
        lattice_counts[l.len() - 1] += 1;
        for ideal in ideals_for(&l, config.ideal_filter) {
            instances.push((lattices.len(), ideal));
        }
        lattices.push(l);
    }

    let pool = rayon::ThreadPoolBuilder::new().num_threads(config.worker_count).build()?;
    let outcomes: Vec<Outcome> = pool.install(|| {
        instances
            .par_iter()
            .map(|(li, ideal)| {
                let l = &lattices[*li];
                Outcome {
                    reports: config.claims.iter().map(|&c| evaluate(c, l, ideal)).collect(),
                    graph: observe(l, ideal),
                }
            })
            .collect()
    });

    let mut per_claim: BTreeMap<ClaimId, StatusCounts> =
        config.claims.iter().map(|&c| (c, StatusCounts::default())).collect();
    let mut graph_stats = GraphStats::default();
    let mut counterexamples = Vec::new();
    for ((li, ideal), outcome) in instances.iter().zip(outcomes) {
        let l = &lattices[*li];
        for report in outcome.reports {
            per_claim.entry(report.claim_id).or_default().add(report.status);
            if report.status == Status::Fails {
                counterexamples.push(Counterexample::new(l, ideal, report));
            }
        }
        if let Some(g) = outcome.graph {
            graph_stats.graphs += 1;
            *graph_stats.girths.entry(g.girth.to_string()).or_default() += 1;
            match g.diameter {
                Some(d) => graph_stats.max_diameter = graph_stats.max_diameter.max(d),
                None => graph_stats.disconnected += 1,
            }
            graph_stats.off_core_non_pendant_vertices += g.off_core_non_pendant;
        }
    }

    Ok(CensusSummary {
        lattice_counts,
        instance_count: instances.len(),
        per_claim,
        graph_stats,
        counterexamples,
    })
}

/// The first failing instance of `claim` in enumeration order, visiting every
/// lattice up to `max_size` and every ideal of each.
pub fn search_counterexample(
    claim: ClaimId,
    max_size: usize,
) -> Result<Option<(Lattice, IdealSet, ClaimReport)>, CensusError> {
    check_bound(max_size, true)?;
    for l in enumerate_lattices(max_size) {
        for ideal in enumerate_ideals(&l) {
            let report = evaluate(claim, &l, &ideal);
            if report.status == Status::Fails {
                return Ok(Some((l, ideal, report)));
            }
        }
    }
    Ok(None)
}

pub fn search_counterexample_by_name(
    claim: &str,
    max_size: usize,
) -> Result<Option<(Lattice, IdealSet, ClaimReport)>, CensusError> {
    search_counterexample(claim.parse()?, max_size)
}
