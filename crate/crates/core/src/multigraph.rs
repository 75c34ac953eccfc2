//! Undirected multigraphs with loops and parallel edges.
//!
//! This is the universal carrier type for the crate: values are immutable
//! after construction, edges are kept as a sorted multiset of normalized
//! `(min, max)` pairs, and a loop is stored as `(v, v)`. A loop contributes
//! two to the degree of its vertex.

use crate::error::{Error, Result};

/// An immutable undirected multigraph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(u32, u32)>,
}

impl MultiGraph {
    /// Builds a graph, normalizing each edge to `(min, max)` and sorting the
    /// edge multiset. Fails if any endpoint is out of range.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut norm: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w as usize >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            norm.push(if u <= v { (u, v) } else { (v, u) });
        }
        norm.sort_unstable();
        Ok(MultiGraph {
            vertex_count,
            edges: norm,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted normalized edge multiset; loops appear as `(v, v)`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn is_loop(edge: (u32, u32)) -> bool {
        edge.0 == edge.1
    }

    /// Number of edge-end incidences at `v`; a loop contributes 2.
    pub fn degree(&self, v: u32) -> u32 {
        let mut d = 0;
        for &(a, b) in &self.edges {
            if a == v {
                d += 1;
            }
            if b == v {
                d += 1;
            }
        }
        d
    }

    /// Degrees of all vertices, loops counted twice.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d = vec![0u32; self.vertex_count];
        for &(a, b) in &self.edges {
            d[a as usize] += 1;
            d[b as usize] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Number of loops at `v`.
    pub fn loop_count(&self, v: u32) -> u32 {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v && b == v)
            .count() as u32
    }

    /// Adjacency lists over distinct neighbors, excluding loops; each entry
    /// is `(neighbor, multiplicity)`.
    pub fn neighbor_lists(&self) -> Vec<Vec<(u32, u32)>> {
        let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); self.vertex_count];
        for &(a, b) in &self.edges {
            if a == b {
                continue;
            }
            push_mult(&mut adj[a as usize], b);
            push_mult(&mut adj[b as usize], a);
        }
        adj
    }

    /// True iff every pair of vertices is joined by a walk. Graphs with at
    /// most one vertex are connected.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        let labels = self.component_labels(&[]);
        labels.component_count == 1
    }

    /// Connected components after deleting the vertices of `removed`
    /// (pass an empty slice for the full graph). Removed vertices get label
    /// `usize::MAX`.
    pub fn component_labels(&self, removed: &[u32]) -> ComponentLabels {
        let mut gone = vec![false; self.vertex_count];
        for &v in removed {
            gone[v as usize] = true;
        }
        let adj = self.neighbor_lists();
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.vertex_count {
            if gone[start] || label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &(w, _) in &adj[v] {
                    let w = w as usize;
                    if !gone[w] && label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        ComponentLabels {
            component_count: count,
            label,
        }
    }

    /// `|E| - |V| + #components`: the rank of the first homology (equally,
    /// the rank of the fundamental group when connected).
    pub fn cycle_rank(&self) -> usize {
        let comps = self.component_labels(&[]).component_count;
        self.edges.len() + comps - self.vertex_count
    }

    /// Length in edges of a shortest cycle: a loop counts 1, a parallel pair
    /// counts 2, and `None` means acyclic (infinite girth).
    pub fn girth(&self) -> Option<u32> {
        if self.edges.iter().any(|&(a, b)| a == b) {
            return Some(1);
        }
        if self.edges.windows(2).any(|w| w[0] == w[1]) {
            return Some(2);
        }
        // Loop-free and parallel-free from here on: for each edge (u, v),
        // a shortest cycle through it is 1 + shortest u-v path avoiding it.
        let adj = self.neighbor_lists();
        let mut best: Option<u32> = None;
        let mut dist = vec![u32::MAX; self.vertex_count];
        let mut queue = std::collections::VecDeque::new();
        for &(u, v) in self.edges.iter() {
            let cap = best.map(|b| b - 1);
            dist.fill(u32::MAX);
            queue.clear();
            dist[u as usize] = 0;
            queue.push_back(u);
            'bfs: while let Some(x) = queue.pop_front() {
                let dx = dist[x as usize];
                if let Some(c) = cap {
                    if dx + 1 >= c {
                        break;
                    }
                }
                for &(y, _) in &adj[x as usize] {
                    if x == u && y == v {
                        // Skip the edge itself (simple here: one u-v edge).
                        continue;
                    }
                    if dist[y as usize] == u32::MAX {
                        dist[y as usize] = dx + 1;
                        if y == v {
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if dist[v as usize] != u32::MAX {
                let cycle = dist[v as usize] + 1;
                if best.is_none_or(|b| cycle < b) {
                    best = Some(cycle);
                }
            }
        }
        best
    }

    /// True iff the graph has a cycle of length strictly below `bound`.
    pub fn has_cycle_shorter_than(&self, bound: u32) -> bool {
        match self.girth() {
            Some(g) => g < bound,
            None => false,
        }
    }

    /// BFS distances from `source` over the underlying simple structure
    /// (loops ignored, parallels collapse to one edge). `u32::MAX` marks
    /// unreachable vertices.
    pub fn bfs_distances(&self, source: u32) -> Vec<u32> {
        bfs_from(&self.neighbor_lists(), source)
    }
}

fn push_mult(list: &mut Vec<(u32, u32)>, w: u32) {
    if let Some(last) = list.iter_mut().find(|e| e.0 == w) {
        last.1 += 1;
    } else {
        list.push((w, 1));
    }
}

pub(crate) fn bfs_from(adj: &[Vec<(u32, u32)>], source: u32) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adj.len()];
    let mut queue = std::collections::VecDeque::new();
    dist[source as usize] = 0;
    queue.push_back(source);
    while let Some(x) = queue.pop_front() {
        for &(y, _) in &adj[x as usize] {
            if dist[y as usize] == u32::MAX {
                dist[y as usize] = dist[x as usize] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Component labelling of a (possibly vertex-deleted) graph.
#[derive(Debug, Clone)]
pub struct ComponentLabels {
    pub component_count: usize,
    /// Per-vertex component id, `usize::MAX` for deleted vertices.
    pub label: Vec<usize>,
}

impl ComponentLabels {
    /// Vertex sets of the components, in label order.
    pub fn members(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.component_count];
        for (v, &l) in self.label.iter().enumerate() {
            if l != usize::MAX {
                out[l].push(v as u32);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{dumbbell, k4, path, theta};

    fn petersen() -> MultiGraph {
        crate::lcf::named_graph("petersen").unwrap()
    }

    #[test]
    fn endpoint_validation() {
        assert!(matches!(
            MultiGraph::new(2, vec![(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn degrees_count_loops_twice() {
        let g = dumbbell();
        assert_eq!(g.degrees(), vec![3, 3]);
        assert_eq!(g.loop_count(0), 1);
        let sum: u32 = g.degrees().iter().sum();
        assert_eq!(sum as usize, 2 * g.edge_count());
    }

    #[test]
    fn connectivity_cases() {
        assert!(path(4).is_connected());
        let two_loops = MultiGraph::new(2, vec![(0, 0), (1, 1)]).unwrap();
        assert!(!two_loops.is_connected());
        assert!(theta().is_connected());
        assert!(MultiGraph::new(0, vec![]).unwrap().is_connected());
        assert!(MultiGraph::new(1, vec![]).unwrap().is_connected());
    }

    #[test]
    fn girth_cases() {
        assert_eq!(dumbbell().girth(), Some(1));
        assert_eq!(theta().girth(), Some(2));
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(path(4).girth(), None);
        assert_eq!(k4().girth(), Some(3));
        let c6 = MultiGraph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(c6.girth(), Some(6));
    }

    #[test]
    fn girth_one_iff_loop_two_iff_parallel() {
        let with_loop = MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 2)]).unwrap();
        assert_eq!(with_loop.girth(), Some(1));
        let with_parallel = MultiGraph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(with_parallel.girth(), Some(2));
    }

    #[test]
    fn cycle_rank_cases() {
        assert_eq!(path(4).cycle_rank(), 0);
        assert_eq!(theta().cycle_rank(), 2);
        assert_eq!(k4().cycle_rank(), 3);
        let two_loops = MultiGraph::new(2, vec![(0, 0), (1, 1)]).unwrap();
        assert_eq!(two_loops.cycle_rank(), 2);
    }

    #[test]
    fn component_deletion() {
        let g = path(5);
        let labels = g.component_labels(&[2]);
        assert_eq!(labels.component_count, 2);
        let members = labels.members();
        assert_eq!(members[0], vec![0, 1]);
        assert_eq!(members[1], vec![3, 4]);
    }
}
