//! Exhaustive enumeration of pants-graph isomorphism classes and breadth
//! first search over the move rewrite space.
//!
//! Enumeration recurses on the signature: every (g, n) class with n >= 1
//! arises from a (g, n-1) class by adding one boundary (filling any low
//! valence vertex inverts it), and every cubic (g, 0) class arises from a
//! (g-1, 2) class by closing its two free valence slots with one edge (a
//! loop when the slot vertex has valence one). The bases are the single
//! classes of complexity one. Classes are deduplicated and ordered by
//! canonical form, and the stored representative of a class is the graph
//! decoded from its own canonical key, so results do not depend on
//! discovery order or thread count.

use crate::canon::{canonical_form, CanonicalForm, CANON_CAP};
use crate::error::{Error, Result};
use crate::exec;
use crate::metrics::min_upper_bound;
use crate::moves::{neighbor_classes, MoveEdit};
use crate::multigraph::MultiGraph;
use crate::pants::{BoundarySite, PantsGraph, SeparatingKind};
use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::Arc;

/// Shortest-move-path answer for one decomposition.
#[derive(Debug, Clone)]
pub struct DistanceResult {
    pub distance: usize,
    pub target: SeparatingKind,
    /// One optimal edit sequence; replaying it from the source graph lands
    /// on a decomposition satisfying the target.
    pub witness: Vec<MoveEdit>,
}

/// Full eccentricity report for one signature cell.
#[derive(Debug, Clone)]
pub struct DmaxReport {
    pub g: usize,
    pub n: usize,
    pub class_count: usize,
    pub dmax: usize,
    /// Canonical form of a class realizing the maximum (smallest key among
    /// them).
    pub eccentric_witness: CanonicalForm,
    /// distance -> number of classes at that distance.
    pub histogram: std::collections::BTreeMap<usize, usize>,
}

/// The classes of one cell, sorted by canonical key.
#[derive(Debug, Clone)]
pub struct ClassSet {
    keys: Arc<Vec<CanonicalForm>>,
    index: HashMap<CanonicalForm, usize>,
}

impl ClassSet {
    fn from_keys(keys: Arc<Vec<CanonicalForm>>) -> Self {
        let index = keys
            .iter()
            .enumerate()
            .map(|(i, k)| (k.clone(), i))
            .collect();
        ClassSet { keys, index }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[CanonicalForm] {
        &self.keys
    }

    pub fn index_of(&self, key: &CanonicalForm) -> Option<usize> {
        self.index.get(key).copied()
    }

    /// Canonical representative of class `i`.
    pub fn representative(&self, i: usize) -> PantsGraph {
        PantsGraph::validate(self.keys[i].to_graph())
            .expect("enumerated key decodes to a valid pants graph")
    }

    pub fn representatives(&self) -> Vec<PantsGraph> {
        exec::map_range(self.len(), |i| self.representative(i))
    }
}

/// Signature sanity: complexity at least one and a positive vertex count.
fn check_cell(g: usize, n: usize) -> Result<usize> {
    let complexity = 3 * g as i64 - 3 + n as i64;
    if complexity < 1 {
        return Err(Error::ComplexityTooLow { complexity });
    }
    let vertices = 2 * g as i64 - 2 + n as i64;
    debug_assert!(vertices >= 1);
    if vertices as usize > CANON_CAP {
        return Err(Error::TooLargeForCanonicalization {
            vertices: vertices as usize,
            cap: CANON_CAP,
        });
    }
    Ok(vertices as usize)
}

/// Memoizing enumerator with an optional on-disk cache.
#[derive(Default)]
pub struct Enumerator {
    memo: HashMap<(usize, usize), Arc<Vec<CanonicalForm>>>,
    cache_dir: Option<PathBuf>,
}

const CACHE_FORMAT: &str = "pdg-enum-v1";

impl Enumerator {
    pub fn new() -> Self {
        Enumerator::default()
    }

    pub fn with_cache(dir: impl Into<PathBuf>) -> Self {
        Enumerator {
            memo: HashMap::new(),
            cache_dir: Some(dir.into()),
        }
    }

    /// All isomorphism classes of connected at-most-cubic multigraphs with
    /// the vertex and edge counts of signature (g, n), as sorted canonical
    /// keys.
    pub fn class_keys(&mut self, g: usize, n: usize) -> Result<Arc<Vec<CanonicalForm>>> {
        check_cell(g, n)?;
        if let Some(hit) = self.memo.get(&(g, n)) {
            return Ok(hit.clone());
        }
        if let Some(keys) = self.read_cache(g, n) {
            let keys = Arc::new(keys);
            self.memo.insert((g, n), keys.clone());
            return Ok(keys);
        }

        let keys: Vec<CanonicalForm> = match (g, n) {
            (0, 4) => vec![canonical_form(
                &MultiGraph::new(2, vec![(0, 1)]).expect("edge fits"),
            )?],
            (1, 1) => vec![canonical_form(
                &MultiGraph::new(1, vec![(0, 0)]).expect("loop fits"),
            )?],
            (g, 0) => {
                let prev = self.class_keys(g - 1, 2)?;
                expand(&prev, close_free_slots)?
            }
            (g, n) => {
                let prev = self.class_keys(g, n - 1)?;
                expand(&prev, boundary_additions)?
            }
        };
        let keys = Arc::new(keys);
        self.write_cache(g, n, &keys);
        self.memo.insert((g, n), keys.clone());
        Ok(keys)
    }

    pub fn classes(&mut self, g: usize, n: usize) -> Result<ClassSet> {
        Ok(ClassSet::from_keys(self.class_keys(g, n)?))
    }

    fn cache_path(&self, g: usize, n: usize) -> Option<PathBuf> {
        self.cache_dir
            .as_ref()
            .map(|d| d.join(format!("{CACHE_FORMAT}-g{g}-n{n}.txt")))
    }

    fn read_cache(&self, g: usize, n: usize) -> Option<Vec<CanonicalForm>> {
        let path = self.cache_path(g, n)?;
        let text = std::fs::read_to_string(path).ok()?;
        let mut lines = text.lines();
        let header = lines.next()?;
        let expect = format!("{CACHE_FORMAT} g={g} n={n}");
        let (tag, count) = header.rsplit_once(" count=")?;
        if tag != expect {
            return None;
        }
        let count: usize = count.parse().ok()?;
        let mut keys = Vec::with_capacity(count);
        for line in lines {
            let bytes = decode_hex(line)?;
            keys.push(CanonicalForm::from_key(bytes));
        }
        if keys.len() != count || keys.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        Some(keys)
    }

    fn write_cache(&self, g: usize, n: usize, keys: &[CanonicalForm]) {
        let Some(path) = self.cache_path(g, n) else {
            return;
        };
        let Some(parent) = path.parent() else {
            return;
        };
        if std::fs::create_dir_all(parent).is_err() {
            return;
        }
        let mut text = format!("{CACHE_FORMAT} g={g} n={n} count={}\n", keys.len());
        for k in keys {
            text.push_str(&k.hex());
            text.push('\n');
        }
        let _ = std::fs::write(path, text);
    }
}

fn decode_hex(line: &str) -> Option<Vec<u8>> {
    let line = line.trim();
    if !line.len().is_multiple_of(2) {
        return None;
    }
    (0..line.len() / 2)
        .map(|i| u8::from_str_radix(&line[2 * i..2 * i + 2], 16).ok())
        .collect()
}

/// Expands every class of the previous cell and merges the canonical keys
/// of the results, sorted and deduplicated.
fn expand(
    prev: &[CanonicalForm],
    step: fn(&PantsGraph) -> Result<Vec<CanonicalForm>>,
) -> Result<Vec<CanonicalForm>> {
    let produced: Vec<Result<Vec<CanonicalForm>>> = exec::map_collect(prev, |key| {
        let rep = PantsGraph::validate(key.to_graph())?;
        step(&rep)
    });
    let mut all: Vec<CanonicalForm> = Vec::new();
    for batch in produced {
        all.extend(batch?);
    }
    all.sort_unstable();
    all.dedup();
    Ok(all)
}

/// Single boundary additions: each distinct edge subdivided, plus a pendant
/// at each vertex of valence at most two.
fn boundary_additions(p: &PantsGraph) -> Result<Vec<CanonicalForm>> {
    let mut out = Vec::new();
    let edges = p.graph().edges();
    for idx in 0..edges.len() {
        if idx > 0 && edges[idx] == edges[idx - 1] {
            continue; // parallel copies subdivide identically
        }
        let grown = p.add_boundary(BoundarySite::SubdivideEdge(idx))?;
        out.push(canonical_form(grown.graph())?);
    }
    for v in 0..p.graph().vertex_count() as u32 {
        if p.graph().degree(v) <= 2 {
            let grown = p.add_boundary(BoundarySite::AttachPendant(v))?;
            out.push(canonical_form(grown.graph())?);
        }
    }
    Ok(out)
}

/// Closes the two free valence slots of an (g-1, 2) class with one edge:
/// either a loop at its single valence-one vertex, or an edge joining its
/// two valence-two vertices. The result is cubic.
fn close_free_slots(p: &PantsGraph) -> Result<Vec<CanonicalForm>> {
    debug_assert_eq!(p.boundary(), 2);
    let degrees = p.graph().degrees();
    let low: Vec<u32> = (0..degrees.len() as u32)
        .filter(|&v| degrees[v as usize] < 3)
        .collect();
    let new_edge = match low.as_slice() {
        [v] => {
            debug_assert_eq!(degrees[*v as usize], 1);
            (*v, *v)
        }
        [u, v] => {
            debug_assert!(degrees[*u as usize] == 2 && degrees[*v as usize] == 2);
            (*u, *v)
        }
        other => {
            return Err(Error::Integrity(format!(
                "boundary-two class with free vertices {other:?}"
            )))
        }
    };
    let mut edges = p.graph().edges().to_vec();
    edges.push(new_edge);
    let closed = PantsGraph::validate(MultiGraph::new(p.graph().vertex_count(), edges)?)?;
    debug_assert_eq!(closed.boundary(), 0);
    Ok(vec![canonical_form(closed.graph())?])
}

/// One validated graph per isomorphism class at signature (g, n).
pub fn enumerate_pants_graphs(g: usize, n: usize) -> Result<Vec<PantsGraph>> {
    Ok(Enumerator::new().classes(g, n)?.representatives())
}

/// Default search depth: the applicable closed-form bound plus slack, so a
/// legitimate search never hits the cap.
pub fn default_max_depth(g: usize, n: usize) -> usize {
    let bound = match g {
        0 => 1,
        1 => 2,
        _ => min_upper_bound(g, n).expect("bounds exist for g >= 2"),
    };
    bound + 2
}

/// Breadth first search from `p` to the nearest class satisfying `target`,
/// with a replayable witness. Distance zero when `p` itself qualifies.
pub fn distance_to_target(
    p: &PantsGraph,
    target: SeparatingKind,
    max_depth: usize,
) -> Result<DistanceResult> {
    if target == SeparatingKind::GenusOnly && p.genus() < 2 {
        return Err(Error::GenusTooLow {
            genus: p.genus() as u32,
        });
    }
    if p.has_separating(target) {
        return Ok(DistanceResult {
            distance: 0,
            target,
            witness: Vec::new(),
        });
    }

    let source_key = canonical_form(p.graph())?;
    let mut visited: std::collections::HashSet<CanonicalForm> = std::collections::HashSet::new();
    visited.insert(source_key.clone());
    // Class key -> (parent key, edit applied to the parent's stored graph).
    let mut parent: HashMap<CanonicalForm, (CanonicalForm, MoveEdit)> = HashMap::new();
    let mut frontier: Vec<(CanonicalForm, PantsGraph)> = vec![(source_key, p.clone())];

    for depth in 1..=max_depth {
        let expanded: Vec<Result<Vec<(CanonicalForm, PantsGraph, MoveEdit)>>> =
            exec::map_collect(&frontier, |(_, graph)| neighbor_classes(graph));
        let mut next: Vec<(CanonicalForm, PantsGraph)> = Vec::new();
        let mut hit: Option<CanonicalForm> = None;
        'merge: for ((from_key, _), batch) in frontier.iter().zip(expanded) {
            for (key, graph, edit) in batch? {
                if !visited.insert(key.clone()) {
                    continue;
                }
                parent.insert(key.clone(), (from_key.clone(), edit));
                if graph.has_separating(target) {
                    hit = Some(key);
                    break 'merge;
                }
                next.push((key, graph));
            }
        }
        if let Some(found) = hit {
            let mut witness = Vec::new();
            let mut cursor = found;
            while let Some((prev, edit)) = parent.get(&cursor) {
                witness.push(*edit);
                cursor = prev.clone();
            }
            witness.reverse();
            debug_assert_eq!(witness.len(), depth);
            return Ok(DistanceResult {
                distance: depth,
                target,
                witness,
            });
        }
        if next.is_empty() {
            // The whole reachable class space lacks the target.
            let (g, n) = p.surface_signature();
            return Err(Error::NoTargetAtSignature {
                g: g as u32,
                n: n as u32,
            });
        }
        frontier = next;
    }
    Err(Error::MaxDepthExceeded(max_depth))
}

/// Replays a witness from `p`, returning the final decomposition.
pub fn replay_witness(p: &PantsGraph, witness: &[MoveEdit]) -> Result<PantsGraph> {
    let mut cur = p.clone();
    for edit in witness {
        cur = crate::moves::apply_move(&cur, edit)?;
    }
    Ok(cur)
}

/// A cell with its class-level move adjacency.
pub struct CellAnalysis {
    pub classes: ClassSet,
    pub representatives: Vec<PantsGraph>,
    pub adjacency: Vec<Vec<usize>>,
}

/// Enumerates a cell and materializes the move relation between classes.
/// Errors if some neighbor falls outside the enumeration (which would mean
/// the enumeration is not closed under moves).
pub fn analyze_cell(enumerator: &mut Enumerator, g: usize, n: usize) -> Result<CellAnalysis> {
    let classes = enumerator.classes(g, n)?;
    let representatives = classes.representatives();
    let adjacency_raw: Vec<Result<Vec<usize>>> = exec::map_collect(&representatives, |rep| {
        let mut ids = Vec::new();
        for (key, _, _) in neighbor_classes(rep)? {
            match classes.index_of(&key) {
                Some(i) => ids.push(i),
                None => {
                    return Err(Error::Integrity(format!(
                        "neighbor class {} missing from enumeration at (g={g}, n={n})",
                        key.hex()
                    )))
                }
            }
        }
        Ok(ids)
    });
    let mut adjacency = Vec::with_capacity(representatives.len());
    for a in adjacency_raw {
        adjacency.push(a?);
    }
    Ok(CellAnalysis {
        classes,
        representatives,
        adjacency,
    })
}

impl CellAnalysis {
    /// Multi-source BFS distance from every class to the nearest class
    /// satisfying `target`, seeded on the target classes and propagated
    /// backward over the symmetric move relation.
    pub fn distances(&self, target: SeparatingKind) -> Result<Vec<usize>> {
        let n = self.representatives.len();
        let seeds: Vec<usize> = (0..n)
            .filter(|&i| self.representatives[i].has_separating(target))
            .collect();
        if seeds.is_empty() {
            let (g, nn) = self.representatives[0].surface_signature();
            return Err(Error::NoTargetAtSignature {
                g: g as u32,
                n: nn as u32,
            });
        }
        let mut dist = vec![usize::MAX; n];
        let mut frontier = seeds;
        for &s in &frontier {
            dist[s] = 0;
        }
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            let mut next = Vec::new();
            for &v in &frontier {
                for &w in &self.adjacency[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = level;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        if let Some(unreached) = dist.iter().position(|&d| d == usize::MAX) {
            return Err(Error::Integrity(format!(
                "class {} unreached by multi-source search",
                self.classes.keys()[unreached].hex()
            )));
        }
        Ok(dist)
    }
}

/// Exact D_{g,n}: the maximum over classes of the move distance to the
/// separating locus, with the full distance histogram.
pub fn compute_dmax(enumerator: &mut Enumerator, g: usize, n: usize) -> Result<DmaxReport> {
    let cell = analyze_cell(enumerator, g, n)?;
    let dist = cell.distances(SeparatingKind::AnySeparating)?;
    let dmax = dist.iter().copied().max().expect("cell is nonempty");
    let mut histogram = std::collections::BTreeMap::new();
    for &d in &dist {
        *histogram.entry(d).or_insert(0usize) += 1;
    }
    let eccentric_witness = (0..dist.len())
        .filter(|&i| dist[i] == dmax)
        .map(|i| cell.classes.keys()[i].clone())
        .min()
        .expect("some class attains the maximum");
    Ok(DmaxReport {
        g,
        n,
        class_count: cell.classes.len(),
        dmax,
        eccentric_witness,
        histogram,
    })
}
