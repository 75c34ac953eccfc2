//! LCF notation for cubic Hamiltonian graphs, plus the small named graphs
//! used throughout: cages up to girth six and the two-vertex multigraphs.
//!
//! A code `[j1,...,jk]^m` describes the cycle `0-1-...-(n-1)-0` on `n = k*m`
//! vertices together with one chord per vertex: vertex `i` connects to
//! `(i + j_{i mod k}) mod n`. Negative jumps subtract. The chord assignment
//! must be an involution and each jump must satisfy `2 <= |j| <= n-2`, which
//! keeps the result simple and 3-regular.

use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;

pub fn parse_lcf(text: &str) -> Result<MultiGraph> {
    let (jumps, exponent) = parse_code(text)?;
    let k = jumps.len();
    if k == 0 {
        return Err(Error::LcfSyntax("empty jump list".into()));
    }
    let n = k
        .checked_mul(exponent)
        .ok_or_else(|| Error::LcfSyntax("vertex count overflow".into()))?;
    if n < 3 {
        return Err(Error::LcfSyntax(format!(
            "need at least 3 vertices, got {n}"
        )));
    }
    for &j in &jumps {
        let a = j.unsigned_abs() as usize;
        if a < 2 || a > n - 2 {
            return Err(Error::LcfJumpOutOfRange { jump: j, n });
        }
    }

    let target = |i: usize| -> usize {
        let j = jumps[i % k];
        (i as i64 + j).rem_euclid(n as i64) as usize
    };
    for i in 0..n {
        let t = target(i);
        if target(t) != i {
            return Err(Error::LcfInvolution { vertex: i as u32 });
        }
    }

    let mut edges: Vec<(u32, u32)> = (0..n).map(|i| (i as u32, ((i + 1) % n) as u32)).collect();
    for i in 0..n {
        let t = target(i);
        if i < t {
            edges.push((i as u32, t as u32));
        }
    }
    let g = MultiGraph::new(n, edges)?;
    // Guard the simplicity the jump range should already force.
    if let Some(w) = g.edges().windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::LcfParallelEdge {
            u: w[0].0,
            v: w[0].1,
        });
    }
    debug_assert!(g.degrees().iter().all(|&d| d == 3));
    Ok(g)
}

fn parse_code(text: &str) -> Result<(Vec<i64>, usize)> {
    let s = text.trim();
    let open = s
        .find('[')
        .ok_or_else(|| Error::LcfSyntax("expected '['".into()))?;
    if s[..open].trim() != "" {
        return Err(Error::LcfSyntax("unexpected text before '['".into()));
    }
    let close = s
        .find(']')
        .ok_or_else(|| Error::LcfSyntax("expected ']'".into()))?;
    if close < open {
        return Err(Error::LcfSyntax("']' before '['".into()));
    }
    let body = &s[open + 1..close];
    let mut jumps = Vec::new();
    for tok in body.split(',') {
        let tok = tok.trim().replace('\u{2212}', "-");
        if tok.is_empty() {
            return Err(Error::LcfSyntax("empty jump entry".into()));
        }
        let j: i64 = tok
            .parse()
            .map_err(|_| Error::LcfSyntax(format!("bad jump {tok:?}")))?;
        jumps.push(j);
    }
    let rest = s[close + 1..].trim();
    let exponent = if rest.is_empty() {
        1
    } else if let Some(exp) = rest.strip_prefix('^') {
        let exp = exp.trim();
        let m: usize = exp
            .parse()
            .map_err(|_| Error::LcfSyntax(format!("bad exponent {exp:?}")))?;
        if m == 0 {
            return Err(Error::LcfSyntax("exponent must be at least 1".into()));
        }
        m
    } else {
        return Err(Error::LcfSyntax(format!(
            "unexpected trailing text {rest:?}"
        )));
    };
    Ok((jumps, exponent))
}

/// The standard graphs referenced by name. Petersen is built from its
/// outer/inner five-cycle description (it has no LCF code); Heawood is
/// `[5,-5]^7`.
pub fn named_graph(name: &str) -> Result<MultiGraph> {
    match name.to_ascii_lowercase().as_str() {
        "k4" => parse_lcf("[2]^4"),
        "k33" => parse_lcf("[3]^6"),
        "heawood" => parse_lcf("[5,-5]^7"),
        "petersen" => {
            let mut edges = Vec::new();
            for i in 0..5u32 {
                edges.push((i, (i + 1) % 5)); // outer cycle
                edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
                edges.push((i, 5 + i)); // spokes
            }
            MultiGraph::new(10, edges)
        }
        "theta" => MultiGraph::new(2, vec![(0, 1), (0, 1), (0, 1)]),
        "dumbbell" => MultiGraph::new(2, vec![(0, 0), (0, 1), (1, 1)]),
        "cube" => {
            let edges = (0..8u32).flat_map(|v| {
                [1u32, 2, 4]
                    .into_iter()
                    .filter_map(move |bit| (v < (v ^ bit)).then_some((v, v ^ bit)))
            });
            MultiGraph::new(8, edges)
        }
        "wagner" => {
            let mut edges: Vec<(u32, u32)> = (0..8u32).map(|i| (i, (i + 1) % 8)).collect();
            edges.extend((0..4u32).map(|i| (i, i + 4)));
            MultiGraph::new(8, edges)
        }
        other => Err(Error::UnknownNamedGraph(other.to_string())),
    }
}
