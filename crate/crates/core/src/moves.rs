//! The elementary-move rewrite calculus on pants decomposition graphs.
//!
//! A move is anchored at a pivot edge between two distinct vertices. One
//! edge-end at each endpoint (or an empty slot standing for a free boundary
//! valence) is exchanged across the pivot; the pivot itself never moves.
//! Legality is exactly "the result is a connected at-most-cubic graph".
//! Moves pivoted on a loop act trivially on the graph and are excluded.

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;
use crate::pants::PantsGraph;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An edge instance named by its normalized endpoints and its index among
/// parallel copies. Stable under the sorted-edge-list normalization.
/// On the wire it is the triple `[u, v, copy]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeRef {
    pub endpoints: (u32, u32),
    pub copy: usize,
}

impl Serialize for EdgeRef {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.endpoints.0, self.endpoints.1, self.copy as u64).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EdgeRef {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (u, v, copy): (u32, u32, u64) = Deserialize::deserialize(deserializer)?;
        if u > v {
            return Err(D::Error::custom("edge endpoints must be normalized"));
        }
        Ok(EdgeRef {
            endpoints: (u, v),
            copy: copy as usize,
        })
    }
}

impl EdgeRef {
    pub fn new(u: u32, v: u32, copy: usize) -> Self {
        EdgeRef {
            endpoints: if u <= v { (u, v) } else { (v, u) },
            copy,
        }
    }

    /// Index of this edge instance in the graph's sorted edge list.
    pub fn resolve(&self, g: &MultiGraph) -> Result<usize> {
        let (u, v) = self.endpoints;
        let base = g.edges().partition_point(|&e| e < (u, v));
        let idx = base + self.copy;
        if g.edges().get(idx) == Some(&(u, v)) {
            Ok(idx)
        } else {
            Err(Error::EdgeNotFound {
                u,
                v,
                copy: self.copy,
            })
        }
    }
}

/// One end of an edge to drag across the pivot, or nothing. Serialized as
/// `null` or `{"edge": [u, v, copy], "at": vertex}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Empty,
    End { edge: EdgeRef, at: u32 },
}

#[derive(Serialize, Deserialize)]
struct SlotWire {
    edge: EdgeRef,
    at: u32,
}

impl Serialize for Slot {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Slot::Empty => serializer.serialize_none(),
            Slot::End { edge, at } => SlotWire {
                edge: *edge,
                at: *at,
            }
            .serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for Slot {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire: Option<SlotWire> = Deserialize::deserialize(deserializer)?;
        Ok(match wire {
            None => Slot::Empty,
            Some(SlotWire { edge, at }) => Slot::End { edge, at },
        })
    }
}

/// A single elementary-move rewrite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveEdit {
    pub v1: u32,
    pub v2: u32,
    pub pivot: EdgeRef,
    pub slot1: Slot,
    pub slot2: Slot,
}

/// Applies `edit` to the graph of `p`. The vertex set is unchanged, so
/// witnesses replay directly on concrete graphs.
pub fn apply_move(p: &PantsGraph, edit: &MoveEdit) -> Result<PantsGraph> {
    let g = p.graph();
    if edit.v1 == edit.v2 {
        return Err(Error::MalformedMove(
            "pivot endpoints must be distinct (loop pivots act trivially)".into(),
        ));
    }
    let pivot_idx = edit.pivot.resolve(g)?;
    {
        let (a, b) = g.edges()[pivot_idx];
        let (lo, hi) = (edit.v1.min(edit.v2), edit.v1.max(edit.v2));
        if (a, b) != (lo, hi) {
            return Err(Error::MalformedMove(format!(
                "pivot {:?} does not join v1={} and v2={}",
                edit.pivot, edit.v1, edit.v2
            )));
        }
    }
    if edit.slot1 == Slot::Empty && edit.slot2 == Slot::Empty {
        return Err(Error::MalformedMove("both slots empty".into()));
    }

    // Edge endpoints as a mutable table; ends are (edge index, side).
    let mut ends: Vec<[u32; 2]> = g.edges().iter().map(|&(a, b)| [a, b]).collect();

    let resolve_slot = |slot: &Slot, home: u32| -> Result<Option<(usize, usize)>> {
        match slot {
            Slot::Empty => Ok(None),
            Slot::End { edge, at } => {
                if *at != home {
                    return Err(Error::MalformedMove(format!(
                        "slot end sits at {} but must sit at {}",
                        at, home
                    )));
                }
                let idx = edge.resolve(g)?;
                if idx == pivot_idx {
                    return Err(Error::MalformedMove(
                        "slot may not use the pivot edge".into(),
                    ));
                }
                let side = if ends[idx][0] == home {
                    0
                } else if ends[idx][1] == home {
                    1
                } else {
                    return Err(Error::MalformedMove(format!(
                        "edge {:?} has no end at {}",
                        edge, home
                    )));
                };
                Ok(Some((idx, side)))
            }
        }
    };

    let end1 = resolve_slot(&edit.slot1, edit.v1)?;
    let end2 = resolve_slot(&edit.slot2, edit.v2)?;
    if let (Some((i, s)), Some((j, t))) = (end1, end2) {
        if i == j && s == t {
            return Err(Error::MalformedMove(
                "slots name the same edge-end twice".into(),
            ));
        }
    }

    if let Some((idx, side)) = end1 {
        ends[idx][side] = edit.v2;
    }
    if let Some((idx, side)) = end2 {
        ends[idx][side] = edit.v1;
    }

    let moved = MultiGraph::new(g.vertex_count(), ends.into_iter().map(|[a, b]| (a, b)))?;
    for v in [edit.v1, edit.v2] {
        let d = moved.degree(v);
        if d > 3 {
            return Err(Error::MoveDegreeViolation { vertex: v });
        }
    }
    if !moved.is_connected() {
        return Err(Error::MoveDisconnects);
    }
    let result = PantsGraph::validate(moved)?;
    debug_assert_eq!(result.surface_signature(), p.surface_signature());
    Ok(result)
}

/// Every well-formed edit of `p`, in ascending (v1, v2, pivot copy, slot1,
/// slot2) order. Includes edits whose application fails legality checks;
/// callers filter by applying.
pub fn enumerate_edits(p: &PantsGraph) -> Vec<MoveEdit> {
    let g = p.graph();
    let mut edits = Vec::new();
    let edges = g.edges();

    // Distinct adjacent pairs (v1 < v2).
    let mut pairs: Vec<(u32, u32)> = edges.iter().filter(|&&(a, b)| a != b).copied().collect();
    pairs.dedup();

    for (v1, v2) in pairs {
        let multiplicity = edges.iter().filter(|&&e| e == (v1, v2)).count();
        for pivot_copy in 0..multiplicity {
            let pivot = EdgeRef::new(v1, v2, pivot_copy);
            let slots1 = slot_candidates(g, v1, pivot);
            let slots2 = slot_candidates(g, v2, pivot);
            for &slot1 in &slots1 {
                for &slot2 in &slots2 {
                    if slot1 == Slot::Empty && slot2 == Slot::Empty {
                        continue;
                    }
                    edits.push(MoveEdit {
                        v1,
                        v2,
                        pivot,
                        slot1,
                        slot2,
                    });
                }
            }
        }
    }
    edits
}

/// Empty plus each edge-end at `home` other than the pivot's end there.
/// A loop contributes one candidate end; moving either of its ends gives
/// the same graph.
fn slot_candidates(g: &MultiGraph, home: u32, pivot: EdgeRef) -> Vec<Slot> {
    let mut slots = vec![Slot::Empty];
    let mut seen: std::collections::HashMap<(u32, u32), usize> = std::collections::HashMap::new();
    for &(a, b) in g.edges() {
        let copy = {
            let c = seen.entry((a, b)).or_insert(0);
            let cur = *c;
            *c += 1;
            cur
        };
        if a != home && b != home {
            continue;
        }
        let edge = EdgeRef::new(a, b, copy);
        if edge == pivot {
            continue;
        }
        slots.push(Slot::End { edge, at: home });
    }
    slots
}

/// Isomorphism classes reachable from `p` by one legal move, excluding the
/// class of `p` itself. Each class carries the concrete post-move graph and
/// the first edit (in enumeration order) that produced it.
pub fn neighbor_classes(p: &PantsGraph) -> Result<Vec<(CanonicalForm, PantsGraph, MoveEdit)>> {
    let own = canonical_form(p.graph())?;
    let mut out: Vec<(CanonicalForm, PantsGraph, MoveEdit)> = Vec::new();
    let mut seen: std::collections::HashSet<CanonicalForm> = std::collections::HashSet::new();
    seen.insert(own);
    for edit in enumerate_edits(p) {
        let moved = match apply_move(p, &edit) {
            Ok(m) => m,
            Err(Error::MoveDegreeViolation { .. } | Error::DegreeExceedsCubic { .. }) => continue,
            // An enumerated edit keeps the pivot in place, so it can never
            // disconnect; a disconnect here is an internal bug.
            Err(Error::MoveDisconnects) => {
                return Err(Error::Integrity(format!(
                    "enumerated edit {edit:?} disconnected the graph"
                )))
            }
            Err(e) => return Err(e),
        };
        let form = canonical_form(moved.graph())?;
        if seen.insert(form.clone()) {
            out.push((form, moved, edit));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Neighbor set of `p` as pants graphs, canonical-deduplicated.
pub fn neighbors(p: &PantsGraph) -> Result<Vec<PantsGraph>> {
    Ok(neighbor_classes(p)?
        .into_iter()
        .map(|(_, g, _)| g)
        .collect())
}
