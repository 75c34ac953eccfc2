//! Canonical forms for multigraphs with loops.
//!
//! The key is the edge list of a canonical relabeling: two graphs get equal
//! keys iff they are isomorphic as multigraphs. The relabeling is found by a
//! backtracking search for the lexicographically minimal adjacency encoding,
//! restricted to vertex orderings compatible with an iterated degree
//! refinement. Exactness matters more than speed here; everything that gets
//! canonicalized is small.

use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;
use std::cmp::Ordering;

/// Largest vertex count accepted by [`canonical_form`].
pub const CANON_CAP: usize = 32;

/// Isomorphism-invariant byte key plus a 64-bit digest of it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonicalForm {
    key: Vec<u8>,
    hash: u64,
}

impl std::hash::Hash for CanonicalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        // The digest stands in for the key; hash-table lookups confirm with
        // full-key equality.
        state.write_u64(self.hash);
    }
}

impl CanonicalForm {
    pub fn key(&self) -> &[u8] {
        &self.key
    }

    pub fn hash64(&self) -> u64 {
        self.hash
    }

    pub fn hex(&self) -> String {
        let mut s = String::with_capacity(self.key.len() * 2);
        for b in &self.key {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }

    pub fn from_key(key: Vec<u8>) -> Self {
        let hash = fnv1a(&key);
        CanonicalForm { key, hash }
    }

    /// Rebuilds the canonical representative graph encoded in the key.
    pub fn to_graph(&self) -> MultiGraph {
        let n = self.key[0] as usize;
        let edges = self.key[1..]
            .chunks_exact(2)
            .map(|c| (c[0] as u32, c[1] as u32));
        MultiGraph::new(n, edges).expect("canonical key decodes to a valid graph")
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Canonical form of `g`. Errors if the graph exceeds [`CANON_CAP`] vertices.
pub fn canonical_form(g: &MultiGraph) -> Result<CanonicalForm> {
    let n = g.vertex_count();
    if n > CANON_CAP {
        return Err(Error::TooLargeForCanonicalization {
            vertices: n,
            cap: CANON_CAP,
        });
    }
    if n == 0 {
        return Ok(CanonicalForm::from_key(vec![0]));
    }

    // Multiplicity matrix; mult[v][v] counts loops once.
    let mut mult = vec![0u16; n * n];
    for &(u, v) in g.edges() {
        let (u, v) = (u as usize, v as usize);
        if u == v {
            mult[u * n + u] += 1;
        } else {
            mult[u * n + v] += 1;
            mult[v * n + u] += 1;
        }
    }
    if mult.iter().any(|&m| m > u8::MAX as u16) {
        return Err(Error::Integrity(
            "edge multiplicity exceeds canonical encoding range".into(),
        ));
    }
    let mult: Vec<u8> = mult.into_iter().map(|m| m as u8).collect();

    let class_of = refine(n, &mult);
    let order = min_ordering(n, &mult, &class_of);

    let mut pos = vec![0u8; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = i as u8;
    }
    let mut relabeled: Vec<(u8, u8)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (pos[u as usize], pos[v as usize]);
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    relabeled.sort_unstable();

    let mut key = Vec::with_capacity(1 + relabeled.len() * 2);
    key.push(n as u8);
    for (a, b) in relabeled {
        key.push(a);
        key.push(b);
    }
    Ok(CanonicalForm::from_key(key))
}

/// True iff the two graphs are isomorphic as multigraphs with loops.
pub fn is_isomorphic(g: &MultiGraph, h: &MultiGraph) -> Result<bool> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        // Still enforce the cap contract before answering.
        for x in [g, h] {
            if x.vertex_count() > CANON_CAP {
                return Err(Error::TooLargeForCanonicalization {
                    vertices: x.vertex_count(),
                    cap: CANON_CAP,
                });
            }
        }
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Iterated neighborhood refinement. Returns a per-vertex class id; ids are
/// dense and ordered by an isomorphism-invariant signature, so they agree
/// across isomorphic graphs.
fn refine(n: usize, mult: &[u8]) -> Vec<u32> {
    let degree = |v: usize| -> u32 {
        let mut d = 0u32;
        for u in 0..n {
            if u == v {
                d += 2 * mult[v * n + v] as u32;
            } else {
                d += mult[v * n + u] as u32;
            }
        }
        d
    };
    let init: Vec<(u32, u8)> = (0..n).map(|v| (degree(v), mult[v * n + v])).collect();
    let mut class = dense_ranks(&init);
    let mut class_count = count_classes(&class);

    loop {
        let sigs: Vec<(u32, Vec<(u32, u8)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(u32, u8)> = (0..n)
                    .filter(|&u| u != v && mult[v * n + u] > 0)
                    .map(|u| (class[u], mult[v * n + u]))
                    .collect();
                nb.sort_unstable();
                (class[v], nb)
            })
            .collect();
        let new_class = dense_ranks(&sigs);
        let new_count = count_classes(&new_class);
        if new_count == class_count {
            return new_class;
        }
        class = new_class;
        class_count = new_count;
    }
}

fn dense_ranks<T: Ord + Clone>(sig: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = sig.to_vec();
    sorted.sort();
    sorted.dedup();
    sig.iter()
        .map(|s| sorted.binary_search(s).unwrap() as u32)
        .collect()
}

fn count_classes(class: &[u32]) -> usize {
    class.iter().max().map_or(0, |&m| m as usize + 1)
}

/// Branch-and-bound search for the vertex ordering whose adjacency encoding
/// is lexicographically minimal among orderings that list refinement classes
/// in ascending id order.
fn min_ordering(n: usize, mult: &[u8], class_of: &[u32]) -> Vec<u32> {
    // Fixed class id required at each position.
    let mut class_seq: Vec<u32> = class_of.to_vec();
    class_seq.sort_unstable();

    let total = n * (n + 1) / 2;
    let mut search = Search {
        n,
        mult,
        class_of,
        class_seq,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        cur: vec![0u8; total],
        best: None,
        best_order: vec![0u32; n],
        rows: (0..n).map(|k| vec![0u8; n * (k + 1)]).collect(),
    };
    search.recurse(0, false);
    search.best_order
}

struct Search<'a> {
    n: usize,
    mult: &'a [u8],
    class_of: &'a [u32],
    class_seq: Vec<u32>,
    placed: Vec<u32>,
    used: Vec<bool>,
    /// Flat row encoding: position k holds k+1 bytes at offset k(k+1)/2
    /// (loop count, then adjacency to positions 0..k).
    cur: Vec<u8>,
    best: Option<Vec<u8>>,
    best_order: Vec<u32>,
    /// Per-depth scratch: candidate rows, n slots of k+1 bytes at depth k.
    rows: Vec<Vec<u8>>,
}

impl Search<'_> {
    fn offset(k: usize) -> usize {
        k * (k + 1) / 2
    }

    /// Returns true if `best` was replaced somewhere in this subtree.
    fn recurse(&mut self, k: usize, tight: bool) -> bool {
        let n = self.n;
        if k == n {
            if !tight {
                self.best = Some(self.cur.clone());
                self.best_order.copy_from_slice(&self.placed);
                return true;
            }
            return false;
        }

        let want = self.class_seq[k];
        let row_len = k + 1;
        let off = Self::offset(k);

        // Materialize candidate rows into this depth's scratch.
        let mut cands: Vec<u32> = Vec::with_capacity(n);
        for v in 0..n {
            if self.used[v] || self.class_of[v] != want {
                continue;
            }
            let slot = cands.len() * row_len;
            let row = &mut self.rows[k][slot..slot + row_len];
            row[0] = self.mult[v * n + v];
            for (j, &p) in self.placed.iter().enumerate() {
                row[j + 1] = self.mult[v * n + p as usize];
            }
            cands.push(v as u32);
        }
        let rows = &self.rows[k];
        let mut idx: Vec<usize> = (0..cands.len()).collect();
        idx.sort_by(|&a, &b| {
            rows[a * row_len..a * row_len + row_len]
                .cmp(&rows[b * row_len..b * row_len + row_len])
                .then(cands[a].cmp(&cands[b]))
        });

        let mut replaced_any = false;
        let mut tight_here = tight;
        for &i in &idx {
            let child_tight = if tight_here {
                let best = self.best.as_ref().expect("tight implies best exists");
                match self.rows[k][i * row_len..i * row_len + row_len]
                    .cmp(&best[off..off + row_len])
                {
                    Ordering::Greater => break,
                    Ordering::Equal => true,
                    Ordering::Less => false,
                }
            } else {
                false
            };

            let v = cands[i];
            self.cur[off..off + row_len]
                .copy_from_slice(&self.rows[k][i * row_len..i * row_len + row_len]);
            self.placed.push(v);
            self.used[v as usize] = true;
            let replaced = self.recurse(k + 1, child_tight);
            self.used[v as usize] = false;
            self.placed.pop();

            if replaced {
                replaced_any = true;
                // The new best runs through this node, so remaining siblings
                // compare tight against it.
                tight_here = true;
            }
        }
        replaced_any
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{dumbbell, k4, star, theta};

    /// Brute-force isomorphism over all vertex bijections; the independent
    /// oracle for small graphs.
    pub(crate) fn isomorphic_by_permutation(g: &MultiGraph, h: &MultiGraph) -> bool {
        if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
            return false;
        }
        let n = g.vertex_count();
        let h_edges = h.edges().to_vec();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        permute_all(&mut perm, 0, &mut |p| {
            let mut mapped: Vec<(u32, u32)> = g
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (p[u as usize], p[v as usize]);
                    if a <= b {
                        (a, b)
                    } else {
                        (b, a)
                    }
                })
                .collect();
            mapped.sort_unstable();
            mapped == h_edges
        })
    }

    fn permute_all(perm: &mut Vec<u32>, k: usize, found: &mut impl FnMut(&[u32]) -> bool) -> bool {
        if k == perm.len() {
            return found(perm);
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if permute_all(perm, k + 1, found) {
                perm.swap(k, i);
                return true;
            }
            perm.swap(k, i);
        }
        false
    }

    fn relabel(g: &MultiGraph, perm: &[u32]) -> MultiGraph {
        MultiGraph::new(
            g.vertex_count(),
            g.edges()
                .iter()
                .map(|&(u, v)| (perm[u as usize], perm[v as usize])),
        )
        .unwrap()
    }

    #[test]
    fn relabeling_invariance_k4() {
        let g = k4();
        let base = canonical_form(&g).unwrap();
        let perms = [[1u32, 0, 3, 2], [3, 2, 1, 0], [2, 0, 3, 1]];
        for p in perms {
            assert_eq!(canonical_form(&relabel(&g, &p)).unwrap(), base);
        }
    }

    #[test]
    fn distinguishes_theta_from_dumbbell() {
        let a = canonical_form(&theta()).unwrap();
        let b = canonical_form(&dumbbell()).unwrap();
        assert_ne!(a, b);
        assert!(!is_isomorphic(&theta(), &dumbbell()).unwrap());
        assert!(is_isomorphic(&k4(), &relabel(&k4(), &[2, 3, 0, 1])).unwrap());
    }

    #[test]
    fn key_decodes_to_isomorphic_graph() {
        for g in [theta(), dumbbell(), k4(), star()] {
            let form = canonical_form(&g).unwrap();
            let back = form.to_graph();
            assert!(isomorphic_by_permutation(&g, &back));
            assert_eq!(canonical_form(&back).unwrap(), form);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let big = MultiGraph::new(CANON_CAP + 1, vec![]).unwrap();
        assert!(matches!(
            canonical_form(&big),
            Err(Error::TooLargeForCanonicalization { .. })
        ));
    }

    #[test]
    fn agrees_with_permutation_oracle_on_small_multigraphs() {
        // All multigraphs on 3 vertices with up to 4 edges drawn from the six
        // possible slots (three loops, three pair slots), compared pairwise.
        let slots = [(0u32, 0u32), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)];
        let mut graphs = Vec::new();
        for count in 0..=4usize {
            enumerate_multisets(&slots, count, &mut |edges| {
                graphs.push(MultiGraph::new(3, edges.to_vec()).unwrap());
            });
        }
        let forms: Vec<CanonicalForm> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        for i in 0..graphs.len() {
            for j in (i + 1)..graphs.len() {
                let oracle = isomorphic_by_permutation(&graphs[i], &graphs[j]);
                assert_eq!(
                    forms[i] == forms[j],
                    oracle,
                    "disagreement on {:?} vs {:?}",
                    graphs[i],
                    graphs[j]
                );
            }
        }
    }

    fn enumerate_multisets(
        slots: &[(u32, u32)],
        count: usize,
        out: &mut impl FnMut(&[(u32, u32)]),
    ) {
        fn go(
            slots: &[(u32, u32)],
            from: usize,
            left: usize,
            acc: &mut Vec<(u32, u32)>,
            out: &mut impl FnMut(&[(u32, u32)]),
        ) {
            if left == 0 {
                out(acc);
                return;
            }
            for i in from..slots.len() {
                acc.push(slots[i]);
                go(slots, i, left - 1, acc, out);
                acc.pop();
            }
        }
        go(slots, 0, count, &mut Vec::new(), out);
    }

    #[test]
    fn petersen_canonicalizes() {
        let p = crate::lcf::named_graph("petersen").unwrap();
        let form = canonical_form(&p).unwrap();
        assert_eq!(form.to_graph().girth(), Some(5));
    }
}
