//! Pants-decomposition-graph semantics.
//!
//! A connected at-most-cubic multigraph with at least one edge stands for a
//! topological type of pants decomposition of the surface S_{g,n}: vertices
//! are pairs of pants, edges are shared curves. The genus is the cycle rank
//! of the graph and the boundary count is the number of free valence slots,
//! n = sum over vertices of (3 - degree). Both counts are derived, never
//! stored independently of the graph.

use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;
use serde::{Deserialize, Serialize};

/// A validated pants decomposition graph with its derived signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PantsGraph {
    graph: MultiGraph,
    genus: usize,
    boundary: usize,
}

/// What removing one edge does to the underlying surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeClassification {
    /// Removal does not separate, or separates off only a trivial piece
    /// (a single loop-free vertex).
    NonSeparating,
    /// Separating with at least one acyclic side: cuts off boundary
    /// components (an S2 curve).
    SeparatingBoundary,
    /// Separating with both sides cyclic: cuts off genus (an S1 curve).
    SeparatingGenus,
}

/// Which separating curves count as the target of a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SeparatingKind {
    AnySeparating,
    GenusOnly,
}

/// Where to create a new boundary component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundarySite {
    /// Split the given edge instance with a new valence-two vertex
    /// (a loop becomes a parallel pair).
    SubdivideEdge(usize),
    /// Join a new valence-one vertex to the given vertex.
    AttachPendant(u32),
}

impl PantsGraph {
    /// Checks the pants-graph conditions and derives the signature.
    pub fn validate(graph: MultiGraph) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let degrees = graph.degrees();
        if let Some((v, &d)) = degrees.iter().enumerate().find(|(_, &d)| d > 3) {
            return Err(Error::DegreeExceedsCubic {
                vertex: v as u32,
                degree: d,
            });
        }
        if graph.edge_count() == 0 {
            return Err(Error::ComplexityTooLow { complexity: 0 });
        }
        let genus = graph.cycle_rank();
        let boundary: usize = degrees.iter().map(|&d| (3 - d) as usize).sum();
        let p = PantsGraph {
            graph,
            genus,
            boundary,
        };
        debug_assert_eq!(p.graph.vertex_count() + 2, 2 * p.genus + p.boundary);
        debug_assert_eq!(p.graph.edge_count() + 3, 3 * p.genus + p.boundary);
        Ok(p)
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundary(&self) -> usize {
        self.boundary
    }

    /// `(g, n)` of the underlying surface.
    pub fn surface_signature(&self) -> (usize, usize) {
        (self.genus, self.boundary)
    }

    /// Number of curves, `3g - 3 + n`.
    pub fn complexity(&self) -> usize {
        self.graph.edge_count()
    }

    /// Classifies the edge at `edge_index` by deleting it and inspecting the
    /// pieces. A separation counts only if both sides are non-trivial: at
    /// least two vertices, or a single vertex carrying a loop.
    pub fn classify_edge(&self, edge_index: usize) -> Result<EdgeClassification> {
        let edges = self.graph.edges();
        let &(u, v) = edges.get(edge_index).ok_or(Error::EdgeNotFound {
            u: 0,
            v: 0,
            copy: edge_index,
        })?;
        if u == v {
            // Removing a loop never disconnects.
            return Ok(EdgeClassification::NonSeparating);
        }
        let remaining: Vec<(u32, u32)> = edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != edge_index)
            .map(|(_, &e)| e)
            .collect();
        let cut =
            MultiGraph::new(self.graph.vertex_count(), remaining).expect("endpoints unchanged");
        let labels = cut.component_labels(&[]);
        if labels.component_count < 2 {
            return Ok(EdgeClassification::NonSeparating);
        }
        debug_assert_eq!(labels.component_count, 2);
        let members = labels.members();
        let side_stats = |side: &[u32]| -> (bool, bool) {
            // (non-trivial, cyclic)
            let vertex_count = side.len();
            let edge_count = cut
                .edges()
                .iter()
                .filter(|&&(a, _)| labels.label[a as usize] == labels.label[side[0] as usize])
                .count();
            let has_loop = side.iter().any(|&w| cut.loop_count(w) > 0);
            let nontrivial = vertex_count >= 2 || has_loop;
            let cyclic = edge_count >= vertex_count;
            (nontrivial, cyclic)
        };
        let (nt_a, cyc_a) = side_stats(&members[0]);
        let (nt_b, cyc_b) = side_stats(&members[1]);
        if !(nt_a && nt_b) {
            // Trivially separating: one side is a bare vertex.
            return Ok(EdgeClassification::NonSeparating);
        }
        if cyc_a && cyc_b {
            Ok(EdgeClassification::SeparatingGenus)
        } else {
            Ok(EdgeClassification::SeparatingBoundary)
        }
    }

    /// True iff some curve of the decomposition separates in the requested
    /// sense.
    pub fn has_separating(&self, target: SeparatingKind) -> bool {
        let edges = self.graph.edges();
        let mut i = 0;
        while i < edges.len() {
            // Parallel copies classify identically; test one per bundle.
            let class = self.classify_edge(i).expect("index in range");
            match (target, class) {
                (SeparatingKind::AnySeparating, EdgeClassification::SeparatingBoundary)
                | (_, EdgeClassification::SeparatingGenus) => return true,
                _ => {}
            }
            let cur = edges[i];
            while i < edges.len() && edges[i] == cur {
                i += 1;
            }
        }
        false
    }

    /// Adds one boundary component: genus is preserved, `n` grows by one,
    /// and both |V| and |E| grow by one.
    pub fn add_boundary(&self, site: BoundarySite) -> Result<PantsGraph> {
        let n = self.graph.vertex_count();
        let new_vertex = n as u32;
        let mut edges = self.graph.edges().to_vec();
        match site {
            BoundarySite::SubdivideEdge(idx) => {
                let &(u, v) = edges.get(idx).ok_or(Error::EdgeNotFound {
                    u: 0,
                    v: 0,
                    copy: idx,
                })?;
                edges.remove(idx);
                edges.push((u, new_vertex));
                edges.push((new_vertex, v));
            }
            BoundarySite::AttachPendant(v) => {
                if v as usize >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count: n,
                    });
                }
                if self.graph.degree(v) >= 3 {
                    return Err(Error::PendantTargetFull { vertex: v });
                }
                edges.push((v, new_vertex));
            }
        }
        let result = PantsGraph::validate(MultiGraph::new(n + 1, edges)?)?;
        debug_assert_eq!(result.genus, self.genus);
        debug_assert_eq!(result.boundary, self.boundary + 1);
        Ok(result)
    }

    /// Fills the boundary slot at a valence one or two vertex: the vertex is
    /// deleted and, at valence two, its edges are spliced into one (a loop
    /// when both led to the same neighbor). Inverse of `add_boundary` at the
    /// created vertex.
    pub fn fill_boundary(&self, v: u32) -> Result<PantsGraph> {
        let n = self.graph.vertex_count();
        if v as usize >= n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: n,
            });
        }
        let degree = self.graph.degree(v);
        if degree >= 3 {
            return Err(Error::NoBoundarySlot { vertex: v });
        }
        if self.graph.loop_count(v) > 0 {
            return Err(Error::LoopVertexFill { vertex: v });
        }
        if self.graph.edge_count() < 2 {
            return Err(Error::ComplexityTooLow { complexity: 0 });
        }
        let mut incident: Vec<u32> = Vec::new();
        let mut kept: Vec<(u32, u32)> = Vec::new();
        for &(a, b) in self.graph.edges() {
            if a == v {
                incident.push(b);
            } else if b == v {
                incident.push(a);
            } else {
                kept.push((a, b));
            }
        }
        match degree {
            1 => {}
            2 => kept.push((incident[0], incident[1])),
            _ => unreachable!("degree 0 is impossible in a connected graph with edges"),
        }
        // Drop v, shifting later labels down by one.
        let shift = |w: u32| if w > v { w - 1 } else { w };
        let edges: Vec<(u32, u32)> = kept
            .into_iter()
            .map(|(a, b)| (shift(a), shift(b)))
            .collect();
        let result = PantsGraph::validate(MultiGraph::new(n - 1, edges)?)?;
        debug_assert_eq!(result.genus, self.genus);
        debug_assert_eq!(result.boundary, self.boundary - 1);
        Ok(result)
    }

    /// True iff there is a walk v1-v2-v3 on three distinct vertices, each of
    /// degree at most two.
    pub fn has_three_consecutive_low_degree(&self) -> bool {
        let degrees = self.graph.degrees();
        let adj = self.graph.neighbor_lists();
        for mid in 0..self.graph.vertex_count() {
            if degrees[mid] > 2 {
                continue;
            }
            let nbrs: Vec<u32> = adj[mid]
                .iter()
                .filter(|&&(w, _)| degrees[w as usize] <= 2)
                .map(|&(w, _)| w)
                .collect();
            // Degree <= 2 means the middle vertex has at most two distinct
            // neighbors; any two distinct qualifying ones complete the walk.
            if nbrs.len() >= 2 {
                return true;
            }
        }
        false
    }
}
