//! Cut-set metrics and the closed-form distance bounds.
//!
//! A non-trivial connected cut-set is a vertex set inducing a connected
//! subgraph whose deletion leaves at least two non-trivial components
//! (two or more vertices, or a single vertex with a loop); extra bare
//! singletons are allowed alongside. The minimum is found by exhaustive
//! enumeration of connected subsets in increasing size, so results at a
//! given cap are exact.

use crate::error::{Error, Result};
use crate::exec;
use crate::multigraph::MultiGraph;
use crate::pants::PantsGraph;
use serde::Serialize;

/// Outcome of a capped exact cut-set search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutsetResult {
    /// Smallest qualifying size, or `None` if nothing qualifies up to the cap.
    pub size: Option<usize>,
    /// Lexicographically smallest witness of that size.
    pub witness: Option<Vec<u32>>,
    /// Largest size exhaustively searched.
    pub search_cap: usize,
}

/// Exact minimum non-trivial connected cut-set of a connected graph,
/// searched up to `cap` vertices.
pub fn min_nontrivial_connected_cutset(g: &MultiGraph, cap: usize) -> Result<CutsetResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let adj = g.neighbor_lists();
    let has_loop: Vec<bool> = (0..n).map(|v| g.loop_count(v as u32) > 0).collect();

    // Per-seed shards; the merged minimum is independent of sharding because
    // every witness of the winning size is still enumerated and compared.
    let shard_best = exec::map_range(n, |seed| {
        let mut best: Option<(usize, Vec<u32>)> = None;
        let mut sub: Vec<u32> = vec![seed as u32];
        let ext: Vec<u32> = adj[seed]
            .iter()
            .map(|&(w, _)| w)
            .filter(|&w| w > seed as u32)
            .collect();
        extend_subsets(&adj, seed as u32, &mut sub, ext, cap, &mut |cand| {
            let limit = best.as_ref().map_or(cap, |(s, _)| *s);
            if cand.len() > limit {
                return limit;
            }
            if qualifies(g, &has_loop, cand) {
                let mut witness = cand.to_vec();
                witness.sort_unstable();
                let better = match &best {
                    None => true,
                    Some((s, w)) => cand.len() < *s || (cand.len() == *s && witness < *w),
                };
                if better {
                    best = Some((cand.len(), witness));
                }
            }
            best.as_ref().map_or(cap, |(s, _)| *s)
        });
        best
    });

    let best = shard_best.into_iter().flatten().min();
    Ok(match best {
        Some((size, witness)) => CutsetResult {
            size: Some(size),
            witness: Some(witness),
            search_cap: cap,
        },
        None => CutsetResult {
            size: None,
            witness: None,
            search_cap: cap,
        },
    })
}

/// Deleting `cand` must leave at least two non-trivial components.
fn qualifies(g: &MultiGraph, has_loop: &[bool], cand: &[u32]) -> bool {
    let labels = g.component_labels(cand);
    if labels.component_count < 2 {
        return false;
    }
    let mut size = vec![0usize; labels.component_count];
    let mut looped = vec![false; labels.component_count];
    for (v, &l) in labels.label.iter().enumerate() {
        if l == usize::MAX {
            continue;
        }
        size[l] += 1;
        looped[l] |= has_loop[v];
    }
    let nontrivial = (0..labels.component_count)
        .filter(|&c| size[c] >= 2 || looped[c])
        .count();
    nontrivial >= 2
}

/// Connected-subset enumeration rooted at `seed`, visiting each connected
/// subset whose minimum vertex is `seed` exactly once. The visitor returns
/// the current size limit, letting the search shrink its own depth bound.
fn extend_subsets(
    adj: &[Vec<(u32, u32)>],
    seed: u32,
    sub: &mut Vec<u32>,
    ext: Vec<u32>,
    cap: usize,
    visit: &mut impl FnMut(&[u32]) -> usize,
) {
    let limit = visit(sub);
    if sub.len() >= limit.min(cap) {
        return;
    }
    let mut ext = ext;
    while let Some(w) = ext.pop() {
        // Exclusive neighbors of w: beyond the seed, not in the subset, and
        // not adjacent to it (those are already in some extension set).
        let mut next_ext = ext.clone();
        for &(u, _) in &adj[w as usize] {
            if u <= seed || sub.contains(&u) || u == w {
                continue;
            }
            let adjacent_to_sub = sub
                .iter()
                .any(|&s| adj[s as usize].iter().any(|&(x, _)| x == u));
            if !adjacent_to_sub && !next_ext.contains(&u) {
                next_ext.push(u);
            }
        }
        sub.push(w);
        extend_subsets(adj, seed, sub, next_ext, cap, visit);
        sub.pop();
    }
}

/// Lower bound for the move distance from `p` to any decomposition with a
/// genus-cutting separating curve: `min(girth, d) - 1`, where `d` is the
/// minimal non-trivial connected cut-set size (treated as `cap + 1` when the
/// capped search finds none).
pub fn s1_lower_bound(p: &PantsGraph, cap: usize) -> Result<usize> {
    if p.genus() < 2 {
        return Err(Error::GenusTooLow {
            genus: p.genus() as u32,
        });
    }
    let girth = p.graph().girth().expect("genus >= 2 forces a cycle") as usize;
    let cut = min_nontrivial_connected_cutset(p.graph(), cap)?;
    let d = cut.size.unwrap_or(cap + 1);
    Ok(girth.min(d) - 1)
}

/// The two closed-form upper bounds on the maximal distance to a separating
/// decomposition: `floor(2*log2(g-1) + 3)` for `g >= 2`, and
/// `floor(16(g-1)/n + 12)` for `g >= 2, n >= 3`. Evaluated in integer
/// arithmetic.
pub fn upper_bounds(g: usize, n: usize) -> (Option<usize>, Option<usize>) {
    let log_bound = if g >= 2 {
        let m = (g - 1) as u128;
        let sq = m * m;
        Some((127 - sq.leading_zeros()) as usize + 3)
    } else {
        None
    };
    let boundary_bound = if g >= 2 && n >= 3 {
        Some(16 * (g - 1) / n + 12)
    } else {
        None
    };
    (log_bound, boundary_bound)
}

/// The smaller applicable upper bound, when any applies.
pub fn min_upper_bound(g: usize, n: usize) -> Option<usize> {
    match upper_bounds(g, n) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (Some(a), None) => Some(a),
        (None, Some(b)) => Some(b),
        (None, None) => None,
    }
}
