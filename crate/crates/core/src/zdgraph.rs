//! Zero-divisor graphs of a lattice: the classic `Γ(L)` and the ideal-based `Γ_I(L)`.
//!
//! `Γ(L)` has as vertices the elements `x` with `x ∧ y = 0` for some nonzero
//! `y`, taken literally, so `0` itself is a vertex as soon as the lattice has
//! a nonzero element. Distinct vertices are adjacent when their meet is `0`.
//!
//! `Γ_I(L)` has as vertices the `x ∉ I` with `x ∧ y ∈ I` for some `y ∉ I`,
//! `y ≠ x`, and distinct vertices are adjacent when their meet lies in `I`.
//! The vertex condition uses membership in `I` rather than equality with `0`;
//! the two agree for `I = {0}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::graph::{GraphInvariants, SimpleGraph};
use crate::ideal::{IdealError, IdealSet};
use crate::lattice::Lattice;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ZdGraphError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("element `{0}` is not a vertex of the graph")]
    UnknownVertex(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphKind {
    /// `Γ(L)`, adjacency `x ∧ y = 0`.
    Classic,
    /// `Γ_I(L)`, adjacency `x ∧ y ∈ I`.
    Ideal,
}

/// What a [`ZdGraph`] was built from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphOrigin {
    pub kind: GraphKind,
    pub lattice_size: usize,
    /// The ideal whose membership decides adjacency (`{0}` for `Γ(L)`).
    pub ideal: BitSet,
    /// Set when the graph is an induced subgraph of the constructed one.
    pub restricted_to: Option<BitSet>,
}

/// A zero-divisor graph whose vertices are lattice elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZdGraph {
    vertex_elements: Vec<usize>,
    vertex_labels: Vec<String>,
    graph: SimpleGraph,
    origin: GraphOrigin,
}

pub fn build_gamma(l: &Lattice) -> ZdGraph {
    let zero = l.bottom();
    let nonzero = l.elements().without(zero);
    let vertices: BitSet = (0..l.len())
        .filter(|&x| nonzero.iter().any(|y| l.meet(x, y) == zero))
        .collect();
    assemble(l, vertices, BitSet::singleton(zero), GraphKind::Classic)
}

/// `Γ_I(L)` for a proper ideal `I`.
pub fn build_gamma_i(l: &Lattice, ideal: &IdealSet) -> Result<ZdGraph, ZdGraphError> {
    if !ideal.flags().is_ideal {
        return Err(IdealError::NotAnIdeal(l.format_set(ideal.members())).into());
    }
    if !ideal.is_proper() {
        return Err(IdealError::Improper.into());
    }
    let i = ideal.members();
    let outside = l.elements().difference(i);
    let vertices: BitSet = outside
        .iter()
        .filter(|&x| outside.without(x).iter().any(|y| i.contains(l.meet(x, y))))
        .collect();
    Ok(assemble(l, vertices, i, GraphKind::Ideal))
}

fn assemble(l: &Lattice, vertices: BitSet, ideal: BitSet, kind: GraphKind) -> ZdGraph {
    let vertex_elements = vertices.to_vec();
    let mut graph = SimpleGraph::new(vertex_elements.len());
    for (i, &x) in vertex_elements.iter().enumerate() {
        for (j, &y) in vertex_elements.iter().enumerate().skip(i + 1) {
            if ideal.contains(l.meet(x, y)) {
                graph.add_edge(i, j);
            }
        }
    }
    ZdGraph {
        vertex_labels: vertex_elements.iter().map(|&x| l.label(x).to_string()).collect(),
        vertex_elements,
        graph,
        origin: GraphOrigin {
            kind,
            lattice_size: l.len(),
            ideal,
            restricted_to: None,
        },
    }
}

impl ZdGraph {
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn origin(&self) -> &GraphOrigin {
        &self.origin
    }

    /// Lattice element of each vertex, ascending.
    pub fn vertex_elements(&self) -> &[usize] {
        &self.vertex_elements
    }

    pub fn vertex_set(&self) -> BitSet {
        self.vertex_elements.iter().copied().collect()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_elements.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Vertex position of a lattice element.
    pub fn position(&self, element: usize) -> Option<usize> {
        self.vertex_elements.binary_search(&element).ok()
    }

    /// Edges as lattice element pairs, in vertex order.
    pub fn element_edges(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(u, v)| (self.vertex_elements[u], self.vertex_elements[v]))
            .collect()
    }

    /// Maps a set of vertex positions to lattice elements.
    pub fn elements_of(&self, positions: BitSet) -> BitSet {
        positions.iter().map(|p| self.vertex_elements[p]).collect()
    }

    pub fn invariants(&self) -> GraphInvariants {
        GraphInvariants::of(&self.graph)
    }

    /// Restriction to the vertices whose lattice elements are in `keep`.
    pub fn induced_subgraph(&self, l: &Lattice, keep: BitSet) -> Result<ZdGraph, ZdGraphError> {
        let positions: BitSet = keep
            .iter()
            .map(|x| {
                self.position(x).ok_or_else(|| {
                    let label = if x < l.len() { l.label(x).to_string() } else { format!("#{x}") };
                    ZdGraphError::UnknownVertex(label)
                })
            })
            .collect::<Result<_, _>>()?;
        let vertex_elements: Vec<usize> = positions.iter().map(|p| self.vertex_elements[p]).collect();
        Ok(ZdGraph {
            vertex_labels: positions.iter().map(|p| self.vertex_labels[p].clone()).collect(),
            vertex_elements,
            graph: self.graph.induced(positions),
            origin: GraphOrigin {
                restricted_to: Some(keep),
                ..self.origin.clone()
            },
        })
    }

    /// Recomputes the adjacency from the origin and compares bit for bit.
    pub fn matches_origin(&self, l: &Lattice) -> bool {
        let n = self.vertex_count();
        self.graph.is_symmetric_loopless()
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    let expect = i != j
                        && self
                            .origin
                            .ideal
                            .contains(l.meet(self.vertex_elements[i], self.vertex_elements[j]));
                    self.graph.has_edge(i, j) == expect
                })
            })
    }

    /// Undirected DOT rendering with lattice labels as node names.
    pub fn to_dot(&self) -> String {
        let name = match self.origin.kind {
            GraphKind::Classic => "gamma",
            GraphKind::Ideal => "gamma_i",
        };
        let mut out = format!("graph {name} {{\n");
        for l in &self.vertex_labels {
            let _ = writeln!(out, "  {};", dot_id(l));
        }
        for (u, v) in self.graph.edges() {
            let _ = writeln!(out, "  {} -- {};", dot_id(&self.vertex_labels[u]), dot_id(&self.vertex_labels[v]));
        }
        out.push_str("}\n");
        out
    }

    /// Flat `key: value` report of the invariants, one key per line.
    pub fn invariants_report(&self) -> String {
        let inv = self.invariants();
        let set = |s: BitSet| {
            let parts: Vec<&str> = s.iter().map(|p| self.vertex_labels[p].as_str()).collect();
            format!("{{{}}}", parts.join(","))
        };
        let edges = |es: &[(usize, usize)]| {
            let parts: Vec<String> = es
                .iter()
                .map(|&(u, v)| format!("{}-{}", self.vertex_labels[u], self.vertex_labels[v]))
                .collect();
            format!("{{{}}}", parts.join(","))
        };
        let degrees: Vec<String> = inv
            .degrees
            .iter()
            .zip(&self.vertex_labels)
            .map(|(d, l)| format!("{l}:{d}"))
            .collect();
        let mut out = String::new();
        let _ = writeln!(out, "vertices: {}", inv.vertex_count);
        let _ = writeln!(out, "edges: {}", inv.edge_count);
        let _ = writeln!(out, "connected: {}", inv.connected);
        let _ = writeln!(out, "diameter: {}", inv.diameter);
        let _ = writeln!(out, "girth: {}", inv.girth);
        let _ = writeln!(out, "cut_vertices: {}", set(inv.cut_vertices));
        let _ = writeln!(out, "bridges: {}", edges(&inv.bridges));
        let _ = writeln!(out, "core_vertices: {}", set(inv.core_vertices));
        let _ = writeln!(out, "core_edges: {}", edges(&inv.core_edges));
        let _ = writeln!(out, "omega: {}", inv.clique_number);
        let _ = writeln!(out, "chi: {}", inv.chromatic_number);
        let _ = writeln!(out, "degrees: {}", if degrees.is_empty() { "-".to_string() } else { degrees.join(" ") });
        if inv.vertex_count == 0 {
            out.push_str("note: empty graph reported as connected with diameter 0\n");
        }
        out
    }
}

pub fn graphs_isomorphic(g: &ZdGraph, h: &ZdGraph) -> Option<Vec<usize>> {
    crate::graph::graphs_isomorphic(&g.graph, &h.graph)
}

fn dot_id(label: &str) -> String {
    let plain = label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && (!label.starts_with(|c: char| c.is_ascii_digit()) || label.chars().all(|c| c.is_ascii_digit()));
    if plain && !label.is_empty() {
        label.to_string()
    } else {
        format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// `Γ(L)` with the bottom element deleted, which is the graph `Γ_{{0}}(L)`
/// coincides with.
pub fn gamma_without_zero(l: &Lattice) -> ZdGraph {
    let g = build_gamma(l);
    let keep = g.vertex_set().without(l.bottom());
    g.induced_subgraph(l, keep).expect("subset of the vertex set")
}
