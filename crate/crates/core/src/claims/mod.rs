//! One checker per statement about zero-divisor graphs of lattices, each
//! producing a [`ClaimReport`] for a single `(lattice, ideal)` instance.
//!
//! Failing reports carry a [`Witness`] that [`witness_revalidates`] can
//! re-check against the instance without re-running the full checker.

mod fixtures;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::graph::{bfs_distances, Diameter, Girth, GraphInvariants, SimpleGraph};
use crate::ideal::{
    is_finite_intersection_of_primes, is_ideal, radical, IdealError, IdealSet, RadicalVariant,
};
use crate::lattice::Lattice;
use crate::zdgraph::{build_gamma, build_gamma_i, gamma_without_zero, graphs_isomorphic, ZdGraph, ZdGraphError};

pub use fixtures::{
    truncation, truncation_with_ideal, grid, grid_spec, builtin_fixtures, Fixture, TruncationTooSmall,
    GRID_TEXT,
};

const NOTE_VERTEX_RULE: &str = "vertex rule: x outside I with x ∧ y ∈ I for some y ≠ x outside I";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    /// Γ_I connected, diameter ≤ 3, girth ≤ 7 when cyclic.
    #[serde(rename = "P1.3")]
    P1_3,
    /// A path a–x–y has `I ∪ {x}` an ideal or lies on a cycle of length ≤ 4.
    #[serde(rename = "L1.4")]
    L1_4,
    /// The core is a union of 3- and 4-cycles.
    #[serde(rename = "T1.5a")]
    T1_5a,
    /// With ≥ 3 vertices, every vertex is in the core or has degree one.
    #[serde(rename = "T1.5b")]
    T1_5b,
    /// No path a–x–y–b with a pendant, x and y off the core and b on it.
    #[serde(rename = "CASE4")]
    Case4,
    /// `⋂_{a∈I} [a]^u = {1}` forces Γ_I to have no cut vertex.
    #[serde(rename = "P1.6")]
    P1_6,
    /// `√I = I` with primes contained in I.
    #[serde(rename = "P2.1-CONTAINED")]
    P2_1Contained,
    /// `√I = I` with primes containing I.
    #[serde(rename = "P2.1-CONTAINING")]
    P2_1Containing,
    /// I is a finite intersection of prime ideals.
    #[serde(rename = "T2.3")]
    T2_3,
    /// `Γ_{{0}}(L) ≅ Γ(L)`.
    #[serde(rename = "GAMMA0")]
    Gamma0,
}

impl ClaimId {
    pub const ALL: [ClaimId; 10] = [
        ClaimId::P1_3,
        ClaimId::L1_4,
        ClaimId::T1_5a,
        ClaimId::T1_5b,
        ClaimId::Case4,
        ClaimId::P1_6,
        ClaimId::P2_1Contained,
        ClaimId::P2_1Containing,
        ClaimId::T2_3,
        ClaimId::Gamma0,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::P1_3 => "P1.3",
            ClaimId::L1_4 => "L1.4",
            ClaimId::T1_5a => "T1.5a",
            ClaimId::T1_5b => "T1.5b",
            ClaimId::Case4 => "CASE4",
            ClaimId::P1_6 => "P1.6",
            ClaimId::P2_1Contained => "P2.1-CONTAINED",
            ClaimId::P2_1Containing => "P2.1-CONTAINING",
            ClaimId::T2_3 => "T2.3",
            ClaimId::Gamma0 => "GAMMA0",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown claim id `{0}`")]
pub struct UnknownClaim(pub String);

impl FromStr for ClaimId {
    type Err = UnknownClaim;

    fn from_str(s: &str) -> Result<Self, UnknownClaim> {
        let norm = s.trim().to_ascii_uppercase();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str().to_ascii_uppercase() == norm)
            .ok_or_else(|| UnknownClaim(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Holds,
    Fails,
    Vacuous,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "HOLDS",
            Status::Fails => "FAILS",
            Status::Vacuous => "VACUOUS",
        })
    }
}

/// A counterexample, in lattice element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// No path joins the two vertices.
    Disconnected { from: usize, to: usize },
    /// Two vertices farther apart than allowed.
    Distance { from: usize, to: usize, distance: usize },
    /// The shortest cycle is too long.
    Girth { length: usize },
    /// A path of vertices violating the claim.
    Path { vertices: Vec<usize> },
    /// An edge `(u, v)` violating the claim.
    Edge { u: usize, v: usize },
    /// A vertex violating the claim.
    Vertex { vertex: usize, degree: usize },
    /// A radical different from the ideal.
    Radical { value: BitSet, family: Vec<BitSet> },
    /// No subfamily of the primes intersects to the ideal under any reading.
    NotPrimeIntersection { ideal: BitSet },
    /// The two graphs differ in vertex or edge counts, or in shape.
    NotIsomorphic {
        gamma_vertices: usize,
        gamma_edges: usize,
        gamma_i_vertices: usize,
        gamma_i_edges: usize,
    },
}

impl Witness {
    pub fn render(&self, l: &Lattice) -> String {
        let lab = |x: usize| l.label(x).to_string();
        match self {
            Witness::Disconnected { from, to } => format!("disconnected {} {}", lab(*from), lab(*to)),
            Witness::Distance { from, to, distance } => {
                format!("distance({},{})={distance}", lab(*from), lab(*to))
            }
            Witness::Girth { length } => format!("girth={length}"),
            Witness::Path { vertices } => {
                let p: Vec<String> = vertices.iter().map(|&v| lab(v)).collect();
                format!("path {}", p.join("-"))
            }
            Witness::Edge { u, v } => format!("edge {}-{}", lab(*u), lab(*v)),
            Witness::Vertex { vertex, degree } => format!("vertex {} degree={degree}", lab(*vertex)),
            Witness::Radical { value, family } => {
                let fam: Vec<String> = family.iter().map(|p| l.format_set(*p)).collect();
                format!("radical={} family=[{}]", l.format_set(*value), fam.join(" "))
            }
            Witness::NotPrimeIntersection { ideal } => format!("ideal={}", l.format_set(*ideal)),
            Witness::NotIsomorphic {
                gamma_vertices,
                gamma_edges,
                gamma_i_vertices,
                gamma_i_edges,
            } => format!(
                "|V(gamma)|={gamma_vertices} |E(gamma)|={gamma_edges} |V(gamma_0)|={gamma_i_vertices} |E(gamma_0)|={gamma_i_edges}"
            ),
        }
    }
}

/// Outcome of checking one claim on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: ClaimId,
    pub status: Status,
    pub witness: Option<Witness>,
    /// Measured quantities, keyed by stable names.
    pub details: BTreeMap<String, String>,
    pub notes: Vec<String>,
}

impl ClaimReport {
    fn new(claim_id: ClaimId) -> Self {
        ClaimReport {
            claim_id,
            status: Status::Holds,
            witness: None,
            details: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    fn vacuous(mut self, why: &str) -> Self {
        self.status = Status::Vacuous;
        self.notes.push(format!("vacuous: {why}"));
        self
    }

    fn fails(mut self, w: Witness) -> Self {
        self.status = Status::Fails;
        self.witness = Some(w);
        self
    }

    fn detail(mut self, key: &str, value: impl ToString) -> Self {
        self.details.insert(key.into(), value.to_string());
        self
    }

    fn note(mut self, note: &str) -> Self {
        self.notes.push(note.into());
        self
    }

    /// `claim_id status [witness]`.
    pub fn line(&self, l: &Lattice) -> String {
        match &self.witness {
            Some(w) => format!("{} {} {}", self.claim_id, self.status, w.render(l)),
            None => format!("{} {}", self.claim_id, self.status),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ClaimError {
    #[error("the claim assumes a distributive lattice")]
    NotDistributive,
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

impl From<ZdGraphError> for ClaimError {
    fn from(e: ZdGraphError) -> Self {
        match e {
            ZdGraphError::Ideal(i) => ClaimError::Ideal(i),
            ZdGraphError::UnknownVertex(v) => unreachable!("graph built from scratch has vertex {v}"),
        }
    }
}

/// Runs the checker for `claim`.
pub fn check(claim: ClaimId, l: &Lattice, ideal: &IdealSet) -> Result<ClaimReport, ClaimError> {
    match claim {
        ClaimId::P1_3 => check_p1_3(l, ideal),
        ClaimId::L1_4 => check_l1_4(l, ideal),
        ClaimId::T1_5a => check_t1_5a(l, ideal),
        ClaimId::T1_5b => check_t1_5b(l, ideal),
        ClaimId::Case4 => check_case4(l, ideal),
        ClaimId::P1_6 => check_p1_6(l, ideal),
        ClaimId::P2_1Contained => check_p2_1(l, ideal, RadicalVariant::Contained),
        ClaimId::P2_1Containing => check_p2_1(l, ideal, RadicalVariant::Containing),
        ClaimId::T2_3 => check_t2_3(l, ideal),
        ClaimId::Gamma0 => check_gamma0(l, ideal),
    }
}

fn require_distributive(l: &Lattice) -> Result<(), ClaimError> {
    if l.is_distributive() {
        Ok(())
    } else {
        Err(ClaimError::NotDistributive)
    }
}

struct Instance {
    zd: ZdGraph,
    inv: GraphInvariants,
}

impl Instance {
    fn build(l: &Lattice, ideal: &IdealSet) -> Result<Instance, ClaimError> {
        let zd = build_gamma_i(l, ideal)?;
        let inv = zd.invariants();
        Ok(Instance { zd, inv })
    }

    fn g(&self) -> &SimpleGraph {
        self.zd.graph()
    }

    fn el(&self, p: usize) -> usize {
        self.zd.vertex_elements()[p]
    }
}

/// Connected with diameter at most 3, and girth at most 7 when a cycle exists.
///
/// The statement is phrased for a proper filter; every other use treats `I`
/// as an ideal, so an ideal is what this checker takes.
pub fn check_p1_3(l: &Lattice, ideal: &IdealSet) -> Result<ClaimReport, ClaimError> {
    let inst = Instance::build(l, ideal)?;
    let r = ClaimReport::new(ClaimId::P1_3)
        .note("hypothesis read as a proper ideal (the statement says filter)")
        .note(NOTE_VERTEX_RULE)
        .detail("vertices", inst.inv.vertex_count)
        .detail("diameter", inst.inv.diameter)
        .detail("girth", inst.inv.girth);
    if inst.inv.vertex_count <= 1 {
        return Ok(r.vacuous("graph has at most one vertex"));
    }
    let g = inst.g();
    if let Diameter::Infinite = inst.inv.diameter {
        for s in 0..g.vertex_count() {
            if let Some(t) = bfs_distances(g, s).iter().position(Option::is_none) {
                return Ok(r.fails(Witness::Disconnected {
                    from: inst.el(s),
                    to: inst.el(t),
                }));
            }
        }
    }
    if let Diameter::Finite(d) = inst.inv.diameter {
        if d > 3 {
            for s in 0..g.vertex_count() {
                if let Some(t) = bfs_distances(g, s).iter().position(|&x| x == Some(d)) {
                    return Ok(r.fails(Witness::Distance {
                        from: inst.el(s),
                        to: inst.el(t),
                        distance: d,
                    }));
                }
            }
        }
    }
    if let Girth::Cycle(len) = inst.inv.girth {
        if len > 7 {
            return Ok(r.fails(Witness::Girth { length: len }));
        }
    }
    Ok(r)
}

/// Is `a–x–y` contained in a cycle of length at most 4?
fn path_on_short_cycle(g: &SimpleGraph, a: usize, x: usize, y: usize) -> bool {
    g.has_edge(a, y)
        || g.neighbors(y)
            .difference(BitSet::from_iter([a, x]))
            .iter()
            .any(|w| g.has_edge(w, a))
}

/// For each path `a–x–y`, either `I ∪ {x}` is an ideal or the path lies on a
/// cycle of length at most 4.
pub fn check_l1_4(l: &Lattice, ideal: &IdealSet) -> Result<ClaimReport, ClaimError> {
    require_distributive(l)?;
    let inst = Instance::build(l, ideal)?;
    let g = inst.g();
    let mut r = ClaimReport::new(ClaimId::L1_4).note(NOTE_VERTEX_RULE);
    let (mut paths, mut ideal_branch, mut cycle_branch) = (0usize, 0usize, 0usize);
    for x in 0..g.vertex_count() {
        let extended = is_ideal(l, ideal.members().with(inst.el(x)));
        for a in g.neighbors(x) {
            for y in g.neighbors(x).without(a) {
                paths += 1;
                let on_cycle = path_on_short_cycle(g, a, x, y);
                ideal_branch += usize::from(extended);
                cycle_branch += usize::from(on_cycle);
                if !extended && !on_cycle {
                    let w = Witness::Path {
                        vertices: vec![inst.el(a), inst.el(x), inst.el(y)],
                    };
                    return Ok(r.detail("paths", paths).fails(w));
                }
            }
        }
    }
    r = r
        .detail("paths", paths)
        .detail("ideal_branch", ideal_branch)
        .detail("cycle_branch", cycle_branch);
    if paths == 0 {
        return Ok(r.vacuous("no path of length 2"));
    }
    let fired = match (ideal_branch > 0, cycle_branch > 0) {
        (true, true) => "both branches fired",
        (true, false) => "only the ideal branch fired",
        (false, true) => "only the short-cycle branch fired",
        (false, false) => unreachable!("a path satisfied neither branch"),
    };
    Ok(r.note(fired))
}

/// Does edge `u–v` lie on a cycle of length 3 or 4?
fn edge_on_short_cycle(g: &SimpleGraph, u: usize, v: usize) -> bool {
    let nu = g.neighbors(u).without(v);
    let nv = g.neighbors(v).without(u);
    !nu.intersection(nv).is_empty() || nv.iter().any(|w| !g.neighbors(w).intersection(nu).without(w).is_empty())
}

fn cyclic_instance(l: &Lattice, ideal: &IdealSet, id: ClaimId) -> Result<(Instance, ClaimReport), ClaimError> {
    let inst = Instance::build(l, ideal)?;
    let r = ClaimReport::new(id)
        .note("core: union of all cycles, i.e. the non-bridge edges and their endpoints")
        .detail("vertices", inst.inv.vertex_count)
        .detail("girth", inst.inv.girth);
    Ok((inst, r))
}

/// Every core edge lies on a 3-cycle or a 4-cycle.
pub fn check_t1_5a(l: &Lattice, ideal: &IdealSet) -> Result<ClaimReport, ClaimError> {
    require_distributive(l)?;
    let (inst, r) = cyclic_instance(l, ideal, ClaimId::T1_5a)?;
    if !inst.inv.has_cycle() {
        return Ok(r.vacuous("graph has no cycle"));
    }
    let r = r.detail("core_edges", inst.inv.core_edges.len());
    for &(u, v) in &inst.inv.core_edges {
        if !edge_on_short_cycle(inst.g(), u, v) {
            return Ok(r.fails(Witness::Edge {
                u: inst.el(u),
                v: inst.el(v),
            }));
        }
    }
    Ok(r)
}

/// With at least three vertices, every vertex is a core vertex or a pendant.
pub fn check_t1_5b(l: &Lattice, ideal: &IdealSet) -> Result<ClaimReport, ClaimError> {
    require_distributive(l)?;
    let (inst, r) = cyclic_instance(l, ideal, ClaimId::T1_5b)?;
    if !inst.inv.has_cycle() {
        return Ok(r.vacuous("graph has no cycle"));
    }
    if inst.inv.vertex_count < 3 {
        return Ok(r.vacuous("fewer than three vertices"));
    }
    for v in 0..inst.inv.vertex_count {
        let degree = inst.inv.degrees[v];
        if !inst.inv.core_vertices.contains(v) && degree != 1 {
            return Ok(r.fails(Witness::Vertex {
                vertex: inst.el(v),
                degree,
            }));
        }
    }
    Ok(r)
}

/// Both parts of the core theorem.
pub fn check_t1_5(l: &Lattice, ideal: &IdealSet) -> Result<(ClaimReport, ClaimReport), ClaimError> {
    Ok((check_t1_5a(l, ideal)?, check_t1_5b(l, ideal)?))
}

fn find_case4_path(g: &SimpleGraph, inv: &GraphInvariants) -> Option<[usize; 4]> {
    let core = inv.core_vertices;
    for a in (0..g.vertex_count()).filter(|&a| inv.degrees[a] == 1) {
        for x in g.neighbors(a).difference(core) {
            for y in g.neighbors(x).difference(core).without(a) {
                if let Some(b) = g.neighbors(y).intersection(core).without(a).without(x).first() {
                    return Some([a, x, y, b]);
                }
            }
        }
    }
    None
}

/// No path `a–x–y–b` with `a` of degree one, `x, y` outside the core and `b`
/// in the core.
pub fn check_case4(l: &Lattice, ideal: &IdealSet) -> Result<ClaimReport, ClaimError> {
    let (inst, r) = cyclic_instance(l, ideal, ClaimId::Case4)?;
    if !inst.inv.has_cycle() {
        return Ok(r.vacuous("graph has no cycle"));
    }
    let g = inst.g();
    let pendants_touch_core = (0..g.vertex_count())
        .filter(|&v| inst.inv.degrees[v] == 1)
        .all(|v| !g.neighbors(v).intersection(inst.inv.core_vertices).is_empty());
    let r = r.detail("pendants_adjacent_to_core", pendants_touch_core);
    match find_case4_path(g, &inst.inv) {
        Some(p) => Ok(r.fails(Witness::Path {
            vertices: p.iter().map(|&v| inst.el(v)).collect(),
        })),
        None => Ok(r),
    }
}

/// `⋂_{a ∈ I} [a]^u`.
pub fn upper_set_intersection(l: &Lattice, ideal: &IdealSet) -> BitSet {
    ideal
        .members()
        .iter()
        .map(|a| l.upper_set(a).expect("member in range"))
        .fold(l.elements(), BitSet::intersection)
}

/// If `⋂_{a∈I} [a]^u = {1}` then Γ_I has no cut vertex.
pub fn check_p1_6(l: &Lattice, ideal: &IdealSet) -> Result<ClaimReport, ClaimError> {
    let inst = Instance::build(l, ideal)?;
    let hyp = upper_set_intersection(l, ideal);
    let r = ClaimReport::new(ClaimId::P1_6)
        .note("intersection index read as a ranging over I")
        .detail("hypothesis_intersection", l.format_set(hyp));
    if hyp != BitSet::singleton(l.top()) {
        return Ok(r.vacuous("upper-set intersection is not {1}"));
    }
    if !l.is_distributive() {
        return Ok(r.vacuous("lattice is not distributive"));
    }
    match inst.inv.cut_vertices.first() {
        Some(v) => Ok(r.fails(Witness::Vertex {
            vertex: inst.el(v),
            degree: inst.inv.degrees[v],
        })),
        None => Ok(r),
    }
}

/// `√I = I`, with the radical taken over the given prime family.
pub fn check_p2_1(l: &Lattice, ideal: &IdealSet, variant: RadicalVariant) -> Result<ClaimReport, ClaimError> {
    require_distributive(l)?;
    if !ideal.is_proper() {
        return Err(IdealError::Improper.into());
    }
    let id = match variant {
        RadicalVariant::Contained => ClaimId::P2_1Contained,
        RadicalVariant::Containing => ClaimId::P2_1Containing,
    };
    let rad = radical(l, ideal, variant);
    let r = ClaimReport::new(id).detail("family_size", rad.family_size);
    match rad.value {
        None => Ok(r.vacuous("no qualifying prime ideal")),
        Some(v) if v == ideal.members() => Ok(r.detail("radical", l.format_set(v))),
        Some(v) => Ok(r.detail("radical", l.format_set(v)).fails(Witness::Radical {
            value: v,
            family: rad.family,
        })),
    }
}

/// On finite instances χ and ω are finite, so the equivalence reduces to
/// whether `I` is a finite intersection of primes. Both prime families are
/// tried and recorded.
pub fn check_t2_3(l: &Lattice, ideal: &IdealSet) -> Result<ClaimReport, ClaimError> {
    require_distributive(l)?;
    let inst = Instance::build(l, ideal)?;
    let mut r = ClaimReport::new(ClaimId::T2_3)
        .note("χ ≤ ∞ and ω ≤ ∞ read as finiteness, which always holds here")
        .detail("omega", inst.inv.clique_number)
        .detail("chi", inst.inv.chromatic_number);
    let mut any = false;
    for v in RadicalVariant::ALL {
        let value = match is_finite_intersection_of_primes(l, ideal, v) {
            Some(w) => {
                any = true;
                let sets: Vec<String> = w.iter().map(|p| l.format_set(*p)).collect();
                format!("[{}]", sets.join(" "))
            }
            None => "none".into(),
        };
        r = r.detail(&format!("iii_{}", v.name()), value);
    }
    if any {
        Ok(r)
    } else {
        Ok(r.fails(Witness::NotPrimeIntersection {
            ideal: ideal.members(),
        }))
    }
}

/// For `I = {0}`, `Γ_I(L) ≅ Γ(L)`. The report also records the corrected
/// relation `Γ_{{0}}(L) ≅ Γ(L) − 0`.
pub fn check_gamma0(l: &Lattice, ideal: &IdealSet) -> Result<ClaimReport, ClaimError> {
    let r = ClaimReport::new(ClaimId::Gamma0);
    if ideal.members() != BitSet::singleton(l.bottom()) {
        return Ok(r.vacuous("ideal is not {0}"));
    }
    if !ideal.is_proper() {
        return Ok(r.vacuous("lattice has a single element"));
    }
    let gamma = build_gamma(l);
    let gamma_i = build_gamma_i(l, ideal)?;
    let corrected = graphs_isomorphic(&gamma_without_zero(l), &gamma_i).is_some();
    let r = r
        .detail("gamma_vertices", gamma.vertex_count())
        .detail("gamma_i_vertices", gamma_i.vertex_count())
        .detail("corrected_relation", if corrected { "holds" } else { "fails" });
    if graphs_isomorphic(&gamma, &gamma_i).is_some() {
        Ok(r)
    } else {
        Ok(r.fails(Witness::NotIsomorphic {
            gamma_vertices: gamma.vertex_count(),
            gamma_edges: gamma.edge_count(),
            gamma_i_vertices: gamma_i.vertex_count(),
            gamma_i_edges: gamma_i.edge_count(),
        }))
    }
}

/// Re-checks a failing report from its witness alone. False when the report
/// does not fail or the witness does not reproduce the failure.
pub fn witness_revalidates(l: &Lattice, ideal: &IdealSet, report: &ClaimReport) -> bool {
    if report.status != Status::Fails {
        return false;
    }
    let Some(w) = &report.witness else {
        return false;
    };
    let graph = || build_gamma_i(l, ideal).ok();
    let pos = |zd: &ZdGraph, x: usize| zd.position(x);
    match (report.claim_id, w) {
        (ClaimId::P1_3, Witness::Disconnected { from, to }) => graph().is_some_and(|zd| {
            matches!((pos(&zd, *from), pos(&zd, *to)), (Some(s), Some(t)) if bfs_distances(zd.graph(), s)[t].is_none())
        }),
        (ClaimId::P1_3, Witness::Distance { from, to, distance }) => graph().is_some_and(|zd| {
            *distance > 3
                && matches!((pos(&zd, *from), pos(&zd, *to)),
                    (Some(s), Some(t)) if bfs_distances(zd.graph(), s)[t] == Some(*distance))
        }),
        (ClaimId::P1_3, Witness::Girth { length }) => {
            graph().is_some_and(|zd| *length > 7 && crate::graph::girth(zd.graph()) == Girth::Cycle(*length))
        }
        (ClaimId::L1_4, Witness::Path { vertices }) => graph().is_some_and(|zd| {
            let Some(p) = vertices.iter().map(|&x| pos(&zd, x)).collect::<Option<Vec<_>>>() else {
                return false;
            };
            let g = zd.graph();
            let [a, x, y] = p[..] else { return false };
            a != y
                && g.has_edge(a, x)
                && g.has_edge(x, y)
                && !is_ideal(l, ideal.members().with(vertices[1]))
                && !path_on_short_cycle(g, a, x, y)
        }),
        (ClaimId::T1_5a, Witness::Edge { u, v }) => graph().is_some_and(|zd| {
            let (Some(pu), Some(pv)) = (pos(&zd, *u), pos(&zd, *v)) else {
                return false;
            };
            let inv = zd.invariants();
            inv.core_edges.contains(&(pu.min(pv), pu.max(pv))) && !edge_on_short_cycle(zd.graph(), pu, pv)
        }),
        (ClaimId::T1_5b, Witness::Vertex { vertex, degree }) => graph().is_some_and(|zd| {
            let Some(p) = pos(&zd, *vertex) else { return false };
            let inv = zd.invariants();
            inv.vertex_count >= 3
                && inv.has_cycle()
                && !inv.core_vertices.contains(p)
                && inv.degrees[p] == *degree
                && *degree != 1
        }),
        (ClaimId::Case4, Witness::Path { vertices }) => graph().is_some_and(|zd| {
            let Some(p) = vertices.iter().map(|&x| pos(&zd, x)).collect::<Option<Vec<_>>>() else {
                return false;
            };
            let [a, x, y, b] = p[..] else { return false };
            let g = zd.graph();
            let inv = zd.invariants();
            let core = inv.core_vertices;
            BitSet::from_iter([a, x, y, b]).len() == 4
                && g.has_edge(a, x)
                && g.has_edge(x, y)
                && g.has_edge(y, b)
                && inv.degrees[a] == 1
                && !core.contains(x)
                && !core.contains(y)
                && core.contains(b)
        }),
        (ClaimId::P1_6, Witness::Vertex { vertex, .. }) => graph().is_some_and(|zd| {
            let Some(p) = pos(&zd, *vertex) else { return false };
            let g = zd.graph();
            let components = |h: &SimpleGraph| {
                let mut seen = BitSet::empty();
                let mut count = 0;
                for s in 0..h.vertex_count() {
                    if !seen.contains(s) {
                        count += 1;
                        for (t, d) in bfs_distances(h, s).iter().enumerate() {
                            if d.is_some() {
                                seen.insert(t);
                            }
                        }
                    }
                }
                count
            };
            upper_set_intersection(l, ideal) == BitSet::singleton(l.top())
                && components(&g.induced(g.vertices().without(p))) > components(g)
        }),
        (ClaimId::P2_1Contained | ClaimId::P2_1Containing, Witness::Radical { value, family }) => {
            let variant = if report.claim_id == ClaimId::P2_1Contained {
                RadicalVariant::Contained
            } else {
                RadicalVariant::Containing
            };
            let intersection = family.iter().copied().reduce(BitSet::intersection);
            *value != ideal.members()
                && intersection == Some(*value)
                && family
                    .iter()
                    .all(|&p| crate::ideal::is_prime_ideal(l, p) && variant.qualifies(p, ideal.members()))
                && radical(l, ideal, variant).value == Some(*value)
        }
        (ClaimId::T2_3, Witness::NotPrimeIntersection { ideal: members }) => {
            *members == ideal.members()
                && RadicalVariant::ALL
                    .iter()
                    .all(|&v| is_finite_intersection_of_primes(l, ideal, v).is_none())
        }
        (ClaimId::Gamma0, Witness::NotIsomorphic { .. }) => {
            ideal.members() == BitSet::singleton(l.bottom())
                && graph().is_some_and(|zd| graphs_isomorphic(&build_gamma(l), &zd).is_none())
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::chain;

    fn z_ideal(l: &Lattice) -> IdealSet {
        IdealSet::principal(l, l.index_of("z").unwrap())
    }

    #[test]
    fn claim_ids_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(c.as_str().parse::<ClaimId>().unwrap(), c);
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(json, format!("\"{}\"", c.as_str()));
        }
        assert!("P9.9".parse::<ClaimId>().is_err());
        assert_eq!("p2.1-contained".parse::<ClaimId>().unwrap(), ClaimId::P2_1Contained);
    }

    #[test]
    fn diameter_claim_cases() {
        let l = grid();
        let r = check_p1_3(&l, &IdealSet::zero(&l)).unwrap();
        assert_eq!(r.status, Status::Holds);
        assert_eq!(r.details["diameter"], "2");
        assert_eq!(r.details["girth"], "4");
        assert_eq!(check_p1_3(&l, &z_ideal(&l)).unwrap().status, Status::Vacuous);
        let two = chain(2);
        assert_eq!(check_p1_3(&two, &IdealSet::zero(&two)).unwrap().status, Status::Vacuous);
    }

    #[test]
    fn path_claim_cases() {
        let l = grid();
        let r = check_l1_4(&l, &IdealSet::zero(&l)).unwrap();
        assert_eq!(r.status, Status::Holds);
        assert!(r.notes.iter().any(|n| n == "both branches fired"));
        assert_eq!(check_l1_4(&l, &z_ideal(&l)).unwrap().status, Status::Vacuous);
        let (t, chain_ideal) = truncation_with_ideal(6).unwrap();
        assert_eq!(check_l1_4(&t, &chain_ideal), Err(ClaimError::NotDistributive));
    }

    #[test]
    fn path_claim_uses_ideal_branch() {
        // Boolean lattice 2^3 with I = {0}: atoms p,q,r form a triangle and
        // each coatom hangs off the opposite atom. Paths through a pendant
        // like P–p–q lie on no short cycle, so the ideal branch must fire.
        let l = Lattice::parse(
            "elements: 0 p q r P Q R 1\n\
             covers: 0<p,0<q,0<r, p<R,q<R, p<Q,r<Q, q<P,r<P, P<1,Q<1,R<1",
        )
        .unwrap();
        assert!(l.is_distributive());
        let r = check_l1_4(&l, &IdealSet::zero(&l)).unwrap();
        assert_eq!(r.status, Status::Holds, "{r:?}");
        assert_eq!(r.notes.last().unwrap(), "both branches fired");
    }

    #[test]
    fn core_claims_on_grid() {
        let l = grid();
        let zero = IdealSet::zero(&l);
        let (a, b) = check_t1_5(&l, &zero).unwrap();
        assert_eq!((a.status, b.status), (Status::Holds, Status::Holds));
        let c = check_case4(&l, &zero).unwrap();
        assert_eq!(c.status, Status::Holds);
        assert_eq!(c.details["pendants_adjacent_to_core"], "true");
        let z = z_ideal(&l);
        assert_eq!(check_t1_5a(&l, &z).unwrap().status, Status::Vacuous);
        assert_eq!(check_case4(&l, &z).unwrap().status, Status::Vacuous);
    }

    #[test]
    fn cut_point_claim_cases() {
        let l = grid();
        let r = check_p1_6(&l, &IdealSet::zero(&l)).unwrap();
        assert_eq!(r.status, Status::Vacuous);
        let (t, chain_ideal) = truncation_with_ideal(6).unwrap();
        let r = check_p1_6(&t, &chain_ideal).unwrap();
        assert_eq!(r.status, Status::Vacuous);
        assert_eq!(r.details["hypothesis_intersection"], "{{4..6},{1..6}}");
    }

    #[test]
    fn radical_claim_cases() {
        let l = grid();
        let z = z_ideal(&l);
        let r = check_p2_1(&l, &z, RadicalVariant::Contained).unwrap();
        assert_eq!(r.status, Status::Fails);
        assert_eq!(r.line(&l), "P2.1-CONTAINED FAILS radical={0,a,c} family=[{0,a,c} {0,a,c,x,y,z}]");
        assert!(witness_revalidates(&l, &z, &r));
        assert_eq!(check_p2_1(&l, &z, RadicalVariant::Containing).unwrap().status, Status::Holds);
        let zero = IdealSet::zero(&l);
        let r = check_p2_1(&l, &zero, RadicalVariant::Contained).unwrap();
        assert_eq!(r.status, Status::Vacuous);
        assert_eq!(r.details["family_size"], "0");

        let c3 = chain(3);
        let i = IdealSet::principal(&c3, 1);
        let r = check_p2_1(&c3, &i, RadicalVariant::Contained).unwrap();
        assert_eq!(r.status, Status::Fails);
        assert_eq!(r.witness, Some(Witness::Radical {
            value: BitSet::singleton(0),
            family: vec![BitSet::singleton(0), BitSet::full(2)],
        }));
    }

    #[test]
    fn prime_intersection_claim_cases() {
        let l = grid();
        let r = check_t2_3(&l, &z_ideal(&l)).unwrap();
        assert_eq!(r.status, Status::Holds);
        assert_eq!(r.details["iii_containing"], "[{0,a,c,x,y,z}]");
        let two = chain(2);
        let r = check_t2_3(&two, &IdealSet::zero(&two)).unwrap();
        assert_eq!(r.status, Status::Holds);
        assert_eq!(r.details["iii_containing"], "[{0}]");
        assert_eq!(r.details["omega"], "0");
    }

    #[test]
    fn gamma0_cases() {
        let l = grid();
        let zero = IdealSet::zero(&l);
        let r = check_gamma0(&l, &zero).unwrap();
        assert_eq!(r.status, Status::Fails);
        assert_eq!(r.details["corrected_relation"], "holds");
        assert_eq!(r.details["gamma_vertices"], "5");
        assert_eq!(r.details["gamma_i_vertices"], "4");
        assert!(witness_revalidates(&l, &zero, &r));
        assert_eq!(check_gamma0(&l, &z_ideal(&l)).unwrap().status, Status::Vacuous);
        let one = chain(1);
        assert_eq!(check_gamma0(&one, &IdealSet::zero(&one)).unwrap().status, Status::Vacuous);
    }

    #[test]
    fn revalidation_rejects_mismatches() {
        let l = grid();
        let zero = IdealSet::zero(&l);
        let holds = check_p1_3(&l, &zero).unwrap();
        assert!(!witness_revalidates(&l, &zero, &holds));
        let forged = ClaimReport {
            status: Status::Fails,
            witness: Some(Witness::Edge { u: 3, v: 5 }),
            ..ClaimReport::new(ClaimId::T1_5a)
        };
        assert!(!witness_revalidates(&l, &zero, &forged));
    }

    #[test]
    fn improper_ideal_is_an_error() {
        let l = grid();
        let all = IdealSet::principal(&l, l.top());
        for c in [ClaimId::P1_3, ClaimId::P2_1Contained, ClaimId::T2_3] {
            assert_eq!(check(c, &l, &all), Err(ClaimError::Ideal(IdealError::Improper)));
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let l = grid();
        let zero = IdealSet::zero(&l);
        for c in ClaimId::ALL {
            let a = serde_json::to_string(&check(c, &l, &zero).unwrap()).unwrap();
            let b = serde_json::to_string(&check(c, &l, &zero).unwrap()).unwrap();
            assert_eq!(a, b);
        }
    }
}
