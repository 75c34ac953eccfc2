//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `--nocapture` to see them). Expected values are pinned
//! constants; a mismatch fails the test with the computed value flagged
//! against the pinned one.

use pantsdecomp::canon::canonical_form;
use pantsdecomp::construct::{build_gamma, build_tower, complete_tower, verify_construction};
use pantsdecomp::lcf::{named_graph, parse_lcf};
use pantsdecomp::metrics::{min_nontrivial_connected_cutset, min_upper_bound};
use pantsdecomp::moves::{apply_move, neighbor_classes};
use pantsdecomp::multigraph::MultiGraph;
use pantsdecomp::pants::{BoundarySite, PantsGraph, SeparatingKind};
use pantsdecomp::search::{
    analyze_cell, compute_dmax, default_max_depth, distance_to_target, CellAnalysis, Enumerator,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Pinned expected D values per signature cell.
const DMAX_TABLE: &[(usize, usize, usize)] = &[
    (0, 6, 1),
    (0, 7, 0),
    (1, 3, 2),
    (1, 4, 2),
    (2, 0, 1),
    (2, 1, 1),
    (2, 2, 1),
    (2, 3, 2),
    (3, 0, 2),
    (3, 1, 2),
    (3, 2, 3),
    (4, 0, 3),
];

const ALL_CELLS: &[(usize, usize)] = &[
    (0, 6),
    (0, 7),
    (1, 3),
    (1, 4),
    (2, 0),
    (2, 1),
    (2, 2),
    (2, 3),
    (3, 0),
    (3, 1),
    (3, 2),
    (4, 0),
    (2, 7),
];

fn genus_two_plus_cells() -> Vec<(usize, usize)> {
    ALL_CELLS.iter().copied().filter(|&(g, _)| g >= 2).collect()
}

/// Simple 3-regular sub-filter of a closed-surface cell, partitioned by girth.
fn simple_cubic_row(en: &mut Enumerator, genus: usize) -> (usize, [usize; 4]) {
    let cell = en.classes(genus, 0).expect("cell enumerates");
    let mut simple = 0usize;
    let mut rows = [0usize; 4];
    for i in 0..cell.len() {
        let rep = cell.representative(i);
        let girth = rep.graph().girth().expect("cubic graphs have cycles");
        if girth >= 3 {
            simple += 1;
            for (slot, thr) in [3u32, 4, 5, 6].iter().enumerate() {
                if girth >= *thr {
                    rows[slot] += 1;
                }
            }
        }
    }
    (simple, rows)
}

#[test]
fn criterion_01_enumeration_crosscheck() {
    let mut en = Enumerator::new();
    let expected: &[(usize, usize, [usize; 4])] = &[
        (3, 1, [1, 0, 0, 0]),    // 4 vertices
        (4, 2, [2, 1, 0, 0]),    // 6 vertices
        (5, 5, [5, 2, 0, 0]),    // 8 vertices
        (6, 19, [19, 6, 1, 0]),  // 10 vertices
        (7, 85, [85, 22, 2, 0]), // 12 vertices
    ];
    let mut failures = Vec::new();
    for &(genus, want_simple, want_rows) in expected {
        let (simple, rows) = simple_cubic_row(&mut en, genus);
        let vertices = 2 * genus - 2;
        if simple != want_simple || rows != want_rows {
            failures.push(format!(
                "{vertices} vertices: simple={simple} (want {want_simple}), girth rows {rows:?} (want {want_rows:?})"
            ));
        } else {
            println!(
                "[criterion 1] {vertices} vertices: {simple} simple cubic classes, girth>=3/4/5/6 = {rows:?} ok"
            );
        }
    }
    if failures.is_empty() {
        println!(
            "[criterion 1] PASS — simple cubic counts and girth rows match for 4..=12 vertices"
        );
    } else {
        println!("[criterion 1] FAIL — {failures:?}");
        panic!("enumeration cross-check failed: {failures:?}");
    }
}

/// Slow optional row (~1 minute): 14 vertices.
#[test]
#[ignore = "slow optional row, run explicitly"]
fn criterion_01_optional_fourteen_vertex_row() {
    let mut en = Enumerator::new();
    let (simple, rows) = simple_cubic_row(&mut en, 8);
    println!("[criterion 1+] 14 vertices: {simple} simple, rows {rows:?}");
    assert_eq!(simple, 509);
    assert_eq!(rows, [509, 110, 9, 1]);
    println!("[criterion 1+] PASS — 14-vertex row matches");
}

#[test]
fn criterion_02_dmax_table_reproduction() {
    let mut en = Enumerator::new();
    let mut failures = Vec::new();
    for &(g, n, want) in DMAX_TABLE {
        let report = compute_dmax(&mut en, g, n).expect("cell computes");
        if report.dmax == want {
            println!(
                "[criterion 2] D_{{{g},{n}}} = {} ok ({} classes)",
                report.dmax, report.class_count
            );
        } else {
            println!(
                "[criterion 2] D_{{{g},{n}}} computed {} but pinned value is {} ({} classes; histogram {:?})",
                report.dmax, want, report.class_count, report.histogram
            );
            failures.push((g, n, report.dmax, want));
        }
    }
    if failures.is_empty() {
        println!("[criterion 2] PASS — all twelve table cells reproduced");
    } else {
        println!(
            "[criterion 2] FAIL — computed value flagged against pinned cell(s): {failures:?}"
        );
        panic!("D table mismatch (computed vs pinned): {failures:?}");
    }
}

#[test]
fn criterion_03_many_boundaries_regime() {
    let mut en = Enumerator::new();
    let report = compute_dmax(&mut en, 2, 7).expect("cell computes");
    println!(
        "[criterion 3] D_{{2,7}} = {} ({} classes, histogram {:?})",
        report.dmax, report.class_count, report.histogram
    );
    assert_eq!(report.dmax, 2, "D_{{2,7}} must be 2");
    println!("[criterion 3] PASS — D_{{2,7}} = 2");
}

#[test]
fn criterion_04_cutset_girth_lower_bound() {
    let mut en = Enumerator::new();
    let mut violations = Vec::new();
    for (g, n) in genus_two_plus_cells() {
        let cell = analyze_cell(&mut en, g, n).expect("cell analyzes");
        let dist = cell
            .distances(SeparatingKind::GenusOnly)
            .expect("genus targets exist for g >= 2");
        for (i, rep) in cell.representatives.iter().enumerate() {
            let girth = rep.graph().girth().expect("g >= 2 forces a cycle") as usize;
            let cap = rep.graph().vertex_count();
            let cut = min_nontrivial_connected_cutset(rep.graph(), cap).expect("connected");
            let d = cut.size.unwrap_or(cap + 1);
            let bound = girth.min(d) - 1;
            if dist[i] < bound {
                violations.push(format!(
                    "({g},{n}) class {i} {:?}: genus distance {} < min(girth {girth}, cutset {:?})-1 = {bound}",
                    rep.graph().edges(),
                    dist[i],
                    cut.size
                ));
            }
        }
    }
    if violations.is_empty() {
        println!("[criterion 4] PASS — no class beats the min(girth, cutset)-1 bound");
    } else {
        for v in &violations {
            println!("[criterion 4] violation: {v}");
        }
        println!(
            "[criterion 4] FAIL — {} classes sit strictly below the stated bound",
            violations.len()
        );
        panic!(
            "{} violations of the min(girth, cutset)-1 lower bound",
            violations.len()
        );
    }
}

#[test]
fn criterion_05_girth_upper_bound() {
    let mut en = Enumerator::new();
    let mut violations = Vec::new();
    for &(g, n) in ALL_CELLS {
        let cell = analyze_cell(&mut en, g, n).expect("cell analyzes");
        let dist = cell
            .distances(SeparatingKind::AnySeparating)
            .expect("separating targets exist");
        for (i, rep) in cell.representatives.iter().enumerate() {
            if let Some(girth) = rep.graph().girth() {
                if dist[i] > girth as usize - 1 {
                    violations.push(format!(
                        "({g},{n}) class {i}: distance {} > girth-1 = {}",
                        dist[i],
                        girth - 1
                    ));
                }
            }
        }
    }
    if violations.is_empty() {
        println!("[criterion 5] PASS — every finite-girth class is within girth-1 of the separating locus");
    } else {
        println!("[criterion 5] FAIL — {violations:?}");
        panic!("girth bound violated: {violations:?}");
    }
}

#[test]
fn criterion_06_three_low_valence_upper_bound() {
    let mut en = Enumerator::new();
    let mut violations = Vec::new();
    for &(g, n) in ALL_CELLS {
        let cell = analyze_cell(&mut en, g, n).expect("cell analyzes");
        let dist = cell
            .distances(SeparatingKind::AnySeparating)
            .expect("separating targets exist");
        for (i, rep) in cell.representatives.iter().enumerate() {
            if rep.has_three_consecutive_low_degree() && dist[i] > 2 {
                violations.push(format!("({g},{n}) class {i}: distance {}", dist[i]));
            }
        }
    }
    if violations.is_empty() {
        println!("[criterion 6] PASS — three consecutive low-valence vertices keep distance <= 2");
    } else {
        println!("[criterion 6] FAIL — {violations:?}");
        panic!("five-move bound violated: {violations:?}");
    }
}

#[test]
fn criterion_07_closed_form_upper_bounds() {
    let mut en = Enumerator::new();
    let mut failures = Vec::new();
    for (g, n) in genus_two_plus_cells() {
        let report = compute_dmax(&mut en, g, n).expect("cell computes");
        let bound = min_upper_bound(g, n).expect("bounds apply for g >= 2");
        if report.dmax > bound {
            failures.push(format!("({g},{n}): D = {} > bound {bound}", report.dmax));
        } else {
            println!(
                "[criterion 7] ({g},{n}): D = {} <= {} ok",
                report.dmax, bound
            );
        }
    }
    if failures.is_empty() {
        println!("[criterion 7] PASS — computed D never exceeds the closed-form bounds");
    } else {
        println!("[criterion 7] FAIL — {failures:?}");
        panic!("closed-form bound violated: {failures:?}");
    }
}

#[test]
fn criterion_08_construction_certificates() {
    let (t8, _) = build_tower(8).expect("tower builds");
    assert_eq!(t8.vertex_count(), 504, "tower(8) vertex count");
    println!("[criterion 8] tower(8): 504 vertices ok");

    for g in [5u32, 6, 7] {
        let (t, _) = build_tower(g).expect("tower builds");
        let valence2 = t.degrees().iter().filter(|&&d| d == 2).count();
        assert!(
            valence2 >= 1usize << g,
            "tower({g}) valence-2 count {valence2} below 2^{g}"
        );
        println!("[criterion 8] tower({g}): {valence2} valence-2 vertices >= 2^{g} ok");
    }

    let (t5, layout5) = build_tower(5).expect("tower builds");
    let gamma5 = complete_tower(&t5, &layout5).expect("completion succeeds");
    for (name, graph, girth) in [
        ("complete_tower(tower(5))", &gamma5, 5u32),
        ("gamma(140)", &build_gamma(140).expect("gamma builds"), 5),
    ] {
        assert_eq!(graph.vertex_count(), 140, "{name} vertex count");
        assert!(graph.degrees().iter().all(|&d| d == 3), "{name} regularity");
        assert_eq!(graph.girth(), Some(girth), "{name} girth");
        let cut = min_nontrivial_connected_cutset(graph, 1).expect("connected");
        assert_eq!(cut.size, None, "{name} has a cutset below 2");
        println!("[criterion 8] {name}: 140 vertices, 3-regular, girth {girth}, no cutset < 2 ok");
    }

    let gamma180 = build_gamma(180).expect("gamma builds");
    assert_eq!(gamma180.vertex_count(), 180);
    assert!(gamma180.degrees().iter().all(|&d| d == 3));
    assert_eq!(gamma180.girth(), Some(6), "gamma(180) girth");
    let cut = min_nontrivial_connected_cutset(&gamma180, 2).expect("connected");
    assert_eq!(cut.size, None, "gamma(180) has a cutset of size <= 2");
    println!("[criterion 8] gamma(180): girth 6, no nontrivial connected cutset <= 2 ok");

    let report = verify_construction(&gamma180, 6);
    assert!(report.passed, "verifier rejects gamma(180): {report:?}");
    println!("[criterion 8] PASS — construction certificates verified");
}

#[test]
fn criterion_09_lcf_and_named_graphs() {
    let k4 = parse_lcf("[2]^4").expect("parses");
    assert!(pantsdecomp::is_isomorphic(&k4, &named_graph("k4").unwrap()).unwrap());

    let k33 = parse_lcf("[3]^6").expect("parses");
    assert!(pantsdecomp::is_isomorphic(&k33, &named_graph("k33").unwrap()).unwrap());
    assert_eq!(k33.girth(), Some(4));

    let petersen = named_graph("petersen").unwrap();
    assert_eq!(petersen.vertex_count(), 10);
    assert_eq!(petersen.girth(), Some(5));

    let heawood = named_graph("heawood").unwrap();
    assert_eq!(heawood.vertex_count(), 14);
    assert_eq!(heawood.girth(), Some(6));
    let cut = min_nontrivial_connected_cutset(&heawood, 2).expect("connected");
    assert_eq!(cut.size, None, "Heawood clears cutset sizes <= 2");

    for code in ["[-3,3]^4", "[\u{2212}3,3]^4"] {
        let cube = parse_lcf(code).expect("parses");
        assert!(pantsdecomp::is_isomorphic(&cube, &named_graph("cube").unwrap()).unwrap());
    }
    let wagner = parse_lcf("[4]^8").expect("parses");
    assert!(pantsdecomp::is_isomorphic(&wagner, &named_graph("wagner").unwrap()).unwrap());
    println!("[criterion 9] PASS — cage codes, Petersen, Heawood, cube and Wagner identities hold");
}

fn relabel(g: &MultiGraph, perm: &[u32]) -> MultiGraph {
    MultiGraph::new(
        g.vertex_count(),
        g.edges()
            .iter()
            .map(|&(u, v)| (perm[u as usize], perm[v as usize])),
    )
    .expect("permutation preserves range")
}

#[test]
fn criterion_10_property_suites() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x9e3779b97f4a7c15);
    let mut en = Enumerator::new();

    for &(g, n) in ALL_CELLS {
        let cell: CellAnalysis = analyze_cell(&mut en, g, n).expect("cell analyzes");
        let class_count = cell.representatives.len();

        // Move relation: symmetric, and every neighbor stays in the cell
        // with the same signature (analyze_cell already errors otherwise).
        for (i, nbrs) in cell.adjacency.iter().enumerate() {
            for &j in nbrs {
                assert!(
                    cell.adjacency[j].contains(&i),
                    "({g},{n}): move relation asymmetric between {i} and {j}"
                );
                assert_ne!(i, j, "({g},{n}): self-loop in class graph");
            }
        }
        for rep in &cell.representatives {
            assert_eq!(rep.surface_signature(), (g, n));
        }

        // Canonical form invariance under 100 random relabelings per class.
        for rep in &cell.representatives {
            let base = canonical_form(rep.graph()).expect("within cap");
            let vcount = rep.graph().vertex_count();
            let mut perm: Vec<u32> = (0..vcount as u32).collect();
            for _ in 0..100 {
                perm.shuffle(&mut rng);
                let shuffled = relabel(rep.graph(), &perm);
                assert_eq!(
                    canonical_form(&shuffled).expect("within cap"),
                    base,
                    "({g},{n}): canonical form changed under relabeling"
                );
            }
        }

        // fill_boundary(add_boundary(P, s)) is the identity class for every
        // legal site s.
        for rep in &cell.representatives {
            let new_vertex = rep.graph().vertex_count() as u32;
            let mut sites: Vec<BoundarySite> = (0..rep.graph().edge_count())
                .map(BoundarySite::SubdivideEdge)
                .collect();
            sites.extend(
                (0..new_vertex)
                    .filter(|&v| rep.graph().degree(v) <= 2)
                    .map(BoundarySite::AttachPendant),
            );
            for site in sites {
                let grown = rep.add_boundary(site).expect("site is legal");
                let back = grown.fill_boundary(new_vertex).expect("fill inverts");
                assert!(
                    pantsdecomp::is_isomorphic(back.graph(), rep.graph()).unwrap(),
                    "({g},{n}): fill after add is not the identity at {site:?}"
                );
            }
        }

        // Multi-source field agrees with per-class forward search on a
        // sample of at least 20 classes (all, for small cells).
        let field = cell
            .distances(SeparatingKind::AnySeparating)
            .expect("targets exist");
        let sample: Vec<usize> = if class_count <= 20 {
            (0..class_count).collect()
        } else {
            (0..20).map(|_| rng.gen_range(0..class_count)).collect()
        };
        let depth = default_max_depth(g, n);
        for i in sample {
            let fwd = distance_to_target(
                &cell.representatives[i],
                SeparatingKind::AnySeparating,
                depth,
            )
            .expect("forward search succeeds");
            assert_eq!(
                fwd.distance, field[i],
                "({g},{n}) class {i}: forward {} vs field {}",
                fwd.distance, field[i]
            );
            // Witness replays to a separating class.
            let end = pantsdecomp::search::replay_witness(&cell.representatives[i], &fwd.witness)
                .expect("witness replays");
            assert!(end.has_separating(SeparatingKind::AnySeparating));
        }
        println!("[criterion 10] ({g},{n}): {class_count} classes checked");
    }

    // Double application of a swap edit and its reverse restores the graph.
    let theta = PantsGraph::validate(named_graph("theta").unwrap()).unwrap();
    for (key, moved, edit) in neighbor_classes(&theta).unwrap() {
        let again = apply_move(&theta, &edit).unwrap();
        assert_eq!(canonical_form(again.graph()).unwrap(), key);
        let _ = moved;
    }
    println!("[criterion 10] PASS — symmetry, invariance, inverse and agreement properties hold");
}
