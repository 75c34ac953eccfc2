//! Command-line interface: enumeration, distances, D tables, the high-girth
//! construction, verification, and LCF parsing.
//!
//! stdout carries exactly one JSON payload on success; progress and
//! diagnostics go to stderr prefixed with `#`. Exit codes: 0 success,
//! 1 domain error, 2 usage error. `--out FILE` writes the raw edge-list or
//! DOT artifact next to the JSON payload.

use pantsdecomp::construct::{
    add_spaced_boundaries, build_gamma, build_tower, complete_tower, verify_construction,
};
use pantsdecomp::io;
use pantsdecomp::lcf::{named_graph, parse_lcf};
use pantsdecomp::multigraph::MultiGraph;
use pantsdecomp::pants::{PantsGraph, SeparatingKind};
use pantsdecomp::search::{
    compute_dmax, default_max_depth, distance_to_target, DmaxReport, Enumerator,
};
use serde_json::{json, Value};

const USAGE: &str = "usage: pantsdecomp <command> [options]

commands:
  enumerate <g> <n>                    list isomorphism classes at a signature
  distance <graphfile|-> [--target sep|genus] [--witness] [--max-depth D]
  dmax <g> <n>                         eccentricity of a signature cell
  table --max-genus G --max-boundary N reproduce a block of the D table
  construct tower <g> [--complete] [--out FILE]
  construct gamma <2m> [--boundaries n] [--out FILE]
  verify <graphfile|-> --girth <g>
  lcf parse <code>
  lcf named <name>
  export --dot <graphfile|-> [--out FILE]

global options:
  --threads K      size of the worker pool (output is identical for any K)
  --cache-dir DIR  on-disk cache for enumerations
  --seed S         accepted and recorded; all algorithms are deterministic
";

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(run(args));
}

struct Global {
    threads: Option<usize>,
    cache_dir: Option<String>,
    seed: Option<u64>,
}

fn run(mut args: Vec<String>) -> i32 {
    let global = match extract_global(&mut args) {
        Ok(g) => g,
        Err(msg) => return usage_error(&msg),
    };
    if args.is_empty() {
        return usage_error("missing command");
    }
    if let Some(s) = global.seed {
        eprintln!("# seed {s} recorded (all algorithms are deterministic)");
    }
    let outcome = pantsdecomp::run_with_threads(global.threads, || dispatch(&args, &global));
    match outcome {
        Ok(mut payload) => {
            if let (Some(seed), Some(obj)) = (global.seed, payload.as_object_mut()) {
                obj.insert("seed".into(), json!(seed));
            }
            println!("{payload}");
            0
        }
        Err(CliError::Usage(msg)) => usage_error(&msg),
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    eprintln!("{USAGE}");
    2
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl From<pantsdecomp::Error> for CliError {
    fn from(e: pantsdecomp::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CliResult = Result<Value, CliError>;

fn extract_global(args: &mut Vec<String>) -> Result<Global, String> {
    let mut global = Global {
        threads: None,
        cache_dir: None,
        seed: None,
    };
    let mut i = 0;
    while i < args.len() {
        match args[i].as_str() {
            "--threads" => {
                let v = take_value(args, i, "--threads")?;
                global.threads = Some(v.parse().map_err(|_| format!("bad --threads {v:?}"))?);
            }
            "--cache-dir" => {
                global.cache_dir = Some(take_value(args, i, "--cache-dir")?);
            }
            "--seed" => {
                let v = take_value(args, i, "--seed")?;
                global.seed = Some(v.parse().map_err(|_| format!("bad --seed {v:?}"))?);
            }
            _ => {
                i += 1;
                continue;
            }
        }
    }
    Ok(global)
}

fn take_value(args: &mut Vec<String>, i: usize, flag: &str) -> Result<String, String> {
    if i + 1 >= args.len() {
        return Err(format!("{flag} needs a value"));
    }
    args.remove(i);
    Ok(args.remove(i))
}

fn dispatch(args: &[String], global: &Global) -> CliResult {
    match args[0].as_str() {
        "enumerate" => cmd_enumerate(&args[1..], global),
        "distance" => cmd_distance(&args[1..]),
        "dmax" => cmd_dmax(&args[1..], global),
        "table" => cmd_table(&args[1..], global),
        "construct" => cmd_construct(&args[1..]),
        "verify" => cmd_verify(&args[1..]),
        "lcf" => cmd_lcf(&args[1..]),
        "export" => cmd_export(&args[1..]),
        other => Err(CliError::Usage(format!("unknown command {other:?}"))),
    }
}

fn parse_unsigned(args: &[String], pos: usize, what: &str) -> Result<usize, CliError> {
    let tok = args
        .get(pos)
        .ok_or_else(|| CliError::Usage(format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| CliError::Usage(format!("invalid {what} {tok:?}")))
}

fn enumerator(global: &Global) -> Enumerator {
    match &global.cache_dir {
        Some(dir) => Enumerator::with_cache(dir),
        None => Enumerator::new(),
    }
}

fn warn_if_large(g: usize, n: usize) {
    let vertices = 2 * g as i64 - 2 + n as i64;
    if vertices > 12 {
        eprintln!(
            "# warning: signature ({g},{n}) has {vertices}-vertex graphs; the class space is large and this may take a long time"
        );
    }
}

fn graph_json(g: &MultiGraph) -> Value {
    json!({ "vertices": g.vertex_count(), "edges": g.edges() })
}

fn pants_json(p: &PantsGraph) -> Value {
    json!({
        "vertices": p.graph().vertex_count(),
        "edges": p.graph().edges(),
        "genus": p.genus(),
        "boundary": p.boundary(),
    })
}

fn read_graph(path: &str) -> Result<MultiGraph, CliError> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)
            .map_err(|e| CliError::Domain(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Domain(format!("reading {path}: {e}")))?
    };
    Ok(io::sniff_parse(&text)?)
}

fn write_artifact(out: &Option<String>, content: &str) -> Result<(), CliError> {
    if let Some(path) = out {
        std::fs::write(path, content)
            .map_err(|e| CliError::Domain(format!("writing {path}: {e}")))?;
        eprintln!("# wrote {path}");
    }
    Ok(())
}

fn cmd_enumerate(args: &[String], global: &Global) -> CliResult {
    let g = parse_unsigned(args, 0, "genus")?;
    let n = parse_unsigned(args, 1, "boundary count")?;
    warn_if_large(g, n);
    eprintln!("# enumerating isomorphism classes at ({g},{n})");
    let mut en = enumerator(global);
    let classes = en.classes(g, n)?;
    let reps: Vec<Value> = (0..classes.len())
        .map(|i| graph_json(classes.representative(i).graph()))
        .collect();
    Ok(json!({ "g": g, "n": n, "count": reps.len(), "classes": reps }))
}

fn cmd_distance(args: &[String]) -> CliResult {
    let path = args
        .first()
        .ok_or_else(|| CliError::Usage("missing graph file".into()))?;
    let mut target = SeparatingKind::AnySeparating;
    let mut with_witness = false;
    let mut max_depth: Option<usize> = None;
    let mut i = 1;
    while i < args.len() {
        match args[i].as_str() {
            "--target" => {
                let v = args
                    .get(i + 1)
                    .ok_or_else(|| CliError::Usage("--target needs sep|genus".into()))?;
                target = match v.as_str() {
                    "sep" => SeparatingKind::AnySeparating,
                    "genus" => SeparatingKind::GenusOnly,
                    other => return Err(CliError::Usage(format!("bad --target {other:?}"))),
                };
                i += 2;
            }
            "--witness" => {
                with_witness = true;
                i += 1;
            }
            "--max-depth" => {
                let v = args
                    .get(i + 1)
                    .ok_or_else(|| CliError::Usage("--max-depth needs a number".into()))?;
                max_depth = Some(
                    v.parse()
                        .map_err(|_| CliError::Usage(format!("bad --max-depth {v:?}")))?,
                );
                i += 2;
            }
            other => return Err(CliError::Usage(format!("unknown option {other:?}"))),
        }
    }
    let graph = read_graph(path)?;
    let p = PantsGraph::validate(graph)?;
    let (g, n) = p.surface_signature();
    warn_if_large(g, n);
    let depth = max_depth.unwrap_or_else(|| default_max_depth(g, n));
    eprintln!("# searching from a ({g},{n}) decomposition, depth cap {depth}");
    let result = distance_to_target(&p, target, depth)?;
    let mut payload = json!({
        "distance": result.distance,
        "target": match target {
            SeparatingKind::AnySeparating => "sep",
            SeparatingKind::GenusOnly => "genus",
        },
        "g": g,
        "n": n,
    });
    if with_witness {
        payload["witness"] = serde_json::to_value(&result.witness)
            .map_err(|e| CliError::Domain(format!("serializing witness: {e}")))?;
    }
    Ok(payload)
}

fn dmax_json(r: &DmaxReport) -> Value {
    let histogram: serde_json::Map<String, Value> = r
        .histogram
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    json!({
        "g": r.g,
        "n": r.n,
        "classes": r.class_count,
        "dmax": r.dmax,
        "eccentric_witness": r.eccentric_witness.hex(),
        "eccentric_example": graph_json(&r.eccentric_witness.to_graph()),
        "histogram": histogram,
    })
}

fn cmd_dmax(args: &[String], global: &Global) -> CliResult {
    let g = parse_unsigned(args, 0, "genus")?;
    let n = parse_unsigned(args, 1, "boundary count")?;
    warn_if_large(g, n);
    eprintln!("# computing D at ({g},{n})");
    let mut en = enumerator(global);
    let report = compute_dmax(&mut en, g, n)?;
    Ok(dmax_json(&report))
}

fn cmd_table(args: &[String], global: &Global) -> CliResult {
    let mut max_genus: Option<usize> = None;
    let mut max_boundary: Option<usize> = None;
    let mut i = 0;
    while i < args.len() {
        match args[i].as_str() {
            "--max-genus" => {
                let v = args
                    .get(i + 1)
                    .ok_or_else(|| CliError::Usage("--max-genus needs a number".into()))?;
                max_genus = Some(
                    v.parse()
                        .map_err(|_| CliError::Usage(format!("bad --max-genus {v:?}")))?,
                );
                i += 2;
            }
            "--max-boundary" => {
                let v = args
                    .get(i + 1)
                    .ok_or_else(|| CliError::Usage("--max-boundary needs a number".into()))?;
                max_boundary = Some(
                    v.parse()
                        .map_err(|_| CliError::Usage(format!("bad --max-boundary {v:?}")))?,
                );
                i += 2;
            }
            other => return Err(CliError::Usage(format!("unknown option {other:?}"))),
        }
    }
    let max_genus = max_genus.ok_or_else(|| CliError::Usage("--max-genus is required".into()))?;
    let max_boundary =
        max_boundary.ok_or_else(|| CliError::Usage("--max-boundary is required".into()))?;
    let mut en = enumerator(global);
    let mut cells = Vec::new();
    for g in 0..=max_genus {
        for n in 0..=max_boundary {
            // Signatures below complexity three have no separating curves;
            // those cells stay blank.
            if 3 * g as i64 - 3 + n as i64 >= 3 {
                warn_if_large(g, n);
                eprintln!("# cell ({g},{n})");
                let report = compute_dmax(&mut en, g, n)?;
                cells.push(json!({
                    "g": g,
                    "n": n,
                    "dmax": report.dmax,
                    "classes": report.class_count,
                }));
            } else {
                cells.push(json!({ "g": g, "n": n, "dmax": null, "classes": null }));
            }
        }
    }
    Ok(json!({
        "max_genus": max_genus,
        "max_boundary": max_boundary,
        "cells": cells,
    }))
}

fn cmd_construct(args: &[String]) -> CliResult {
    let kind = args
        .first()
        .ok_or_else(|| CliError::Usage("construct needs tower|gamma".into()))?;
    match kind.as_str() {
        "tower" => {
            let g = parse_unsigned(args, 1, "girth parameter")? as u32;
            let mut rest = args[2..].to_vec();
            let complete = if let Some(pos) = rest.iter().position(|a| a == "--complete") {
                rest.remove(pos);
                true
            } else {
                false
            };
            let out = parse_out(&rest)?;
            eprintln!("# building tower for girth {g}");
            let (tower, layout) = build_tower(g)?;
            let graph = if complete {
                eprintln!("# completing tower to a 3-regular graph");
                complete_tower(&tower, &layout)?
            } else {
                tower
            };
            let report = verify_construction(&graph, g);
            write_artifact(&out, &io::to_edge_list(&graph))?;
            Ok(json!({
                "kind": if complete { "tower-completed" } else { "tower" },
                "girth": g,
                "cycles": layout.cycle_count(),
                "graph": graph_json(&graph),
                "report": serde_json::to_value(&report).expect("report serializes"),
            }))
        }
        "gamma" => {
            let two_m = parse_unsigned(args, 1, "vertex budget")?;
            let mut boundaries = 0usize;
            let mut rest = args[2..].to_vec();
            if let Some(pos) = rest.iter().position(|a| a == "--boundaries") {
                let v = rest
                    .get(pos + 1)
                    .ok_or_else(|| CliError::Usage("--boundaries needs a number".into()))?;
                boundaries = v
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad --boundaries {v:?}")))?;
                rest.drain(pos..=pos + 1);
            }
            let out = parse_out(&rest)?;
            eprintln!("# building gamma on {two_m} vertices");
            let gamma = build_gamma(two_m)?;
            let girth = gamma.girth().expect("3-regular graphs have cycles");
            let report = verify_construction(&gamma, girth);
            let (graph_value, artifact) = if boundaries > 0 {
                eprintln!("# spacing {boundaries} boundary vertices");
                let p = add_spaced_boundaries(&gamma, boundaries)?;
                (pants_json(&p), io::to_edge_list(p.graph()))
            } else {
                (graph_json(&gamma), io::to_edge_list(&gamma))
            };
            write_artifact(&out, &artifact)?;
            Ok(json!({
                "kind": "gamma",
                "two_m": two_m,
                "girth": girth,
                "boundaries": boundaries,
                "graph": graph_value,
                "report": serde_json::to_value(&report).expect("report serializes"),
            }))
        }
        other => Err(CliError::Usage(format!("unknown construct kind {other:?}"))),
    }
}

fn parse_out(args: &[String]) -> Result<Option<String>, CliError> {
    match args {
        [] => Ok(None),
        [flag, path] if flag == "--out" => Ok(Some(path.clone())),
        other => Err(CliError::Usage(format!("unexpected options {other:?}"))),
    }
}

fn cmd_verify(args: &[String]) -> CliResult {
    let path = args
        .first()
        .ok_or_else(|| CliError::Usage("missing graph file".into()))?;
    let mut girth: Option<u32> = None;
    let mut i = 1;
    while i < args.len() {
        match args[i].as_str() {
            "--girth" => {
                let v = args
                    .get(i + 1)
                    .ok_or_else(|| CliError::Usage("--girth needs a number".into()))?;
                girth = Some(
                    v.parse()
                        .map_err(|_| CliError::Usage(format!("bad --girth {v:?}")))?,
                );
                i += 2;
            }
            other => return Err(CliError::Usage(format!("unknown option {other:?}"))),
        }
    }
    let girth = girth.ok_or_else(|| CliError::Usage("--girth is required".into()))?;
    let graph = read_graph(path)?;
    eprintln!(
        "# verifying {}-vertex graph against girth {girth}",
        graph.vertex_count()
    );
    let report = verify_construction(&graph, girth);
    Ok(serde_json::to_value(&report).expect("report serializes"))
}

fn cmd_lcf(args: &[String]) -> CliResult {
    let graph = match args.first().map(|s| s.as_str()) {
        Some("parse") => {
            let code = args
                .get(1)
                .ok_or_else(|| CliError::Usage("lcf parse needs a code".into()))?;
            parse_lcf(code)?
        }
        Some("named") => {
            let name = args
                .get(1)
                .ok_or_else(|| CliError::Usage("lcf named needs a name".into()))?;
            named_graph(name)?
        }
        other => {
            return Err(CliError::Usage(format!(
                "lcf needs parse|named, got {other:?}"
            )))
        }
    };
    let out = parse_out(&args[2..])?;
    write_artifact(&out, &io::to_edge_list(&graph))?;
    Ok(graph_json(&graph))
}

fn cmd_export(args: &[String]) -> CliResult {
    if args.first().map(|s| s.as_str()) != Some("--dot") {
        return Err(CliError::Usage("export needs --dot <graphfile|->".into()));
    }
    let path = args
        .get(1)
        .ok_or_else(|| CliError::Usage("export --dot needs a graph file".into()))?;
    let out = parse_out(&args[2..])?;
    let graph = read_graph(path)?;
    let dot = io::to_dot(&graph);
    write_artifact(&out, &dot)?;
    Ok(json!({ "dot": dot }))
}
