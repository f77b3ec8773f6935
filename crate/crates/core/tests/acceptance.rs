//! End-to-end acceptance gate. Each numbered check prints exactly one
//! PASS/FAIL line; run with `--nocapture` to see them all.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng as _, SeedableRng as _};
use rand_chacha::ChaCha8Rng;

use trapset_core::cages::validate_cage;
use trapset_core::constructions::{self, construct_best};
use trapset_core::{
    class_exists, eq1_lower, moore_bound, parity_correct, table, CageRegistry, Category,
    ConstructError, Girth, Graph, TannerGraph,
};

const G6_16: [usize; 6] = [6, 8, 10, 12, 14, 16];

fn report(n: usize, name: &str, errs: Vec<String>) {
    if errs.is_empty() {
        println!("[{n}] {name}: PASS");
    } else {
        println!("[{n}] {name}: FAIL ({} problems)", errs.len());
        panic!("[{n}] {name} failed:\n{}", errs.join("\n"));
    }
}

fn row(vals: &[i64]) -> Vec<Option<u64>> {
    vals.iter().map(|&v| if v < 0 { None } else { Some(v as u64) }).collect()
}

/// Independent accumulation of the degree/girth lower bound on regular
/// graph order, kept separate from the library implementation.
fn moore_oracle(r: u64, g: u64) -> u64 {
    if g % 2 == 1 {
        let mut total = 1u64;
        let mut layer = r;
        for _ in 0..(g - 1) / 2 {
            total += layer;
            layer *= r - 1;
        }
        total
    } else {
        let mut total = 0u64;
        let mut layer = 1;
        for _ in 0..g / 2 {
            total += 2 * layer;
            layer *= r - 1;
        }
        total
    }
}

#[test]
fn check_1_moore_bound_and_cage_sizes() {
    let mut errs = Vec::new();
    let reg = CageRegistry::new();
    for r in 3..=7u64 {
        for g in 3..=12u64 {
            if moore_bound(r, g) != moore_oracle(r, g) {
                errs.push(format!("moore_bound({r};{g}) disagrees with oracle"));
            }
        }
    }
    let sizes: [[i64; 10]; 5] = [
        [4, 6, 10, 14, 24, 30, 58, 70, 112, 126],
        [5, 8, 19, 26, 67, 80, 275, 384, -1, 728],
        [6, 10, 30, 42, 152, 170, -1, -1, -1, 2730],
        [7, 12, 40, 62, 294, 312, -1, -1, -1, 7812],
        [8, 14, 50, 90, -1, -1, -1, -1, -1, -1],
    ];
    for (ri, srow) in sizes.iter().enumerate() {
        for (gi, &want) in srow.iter().enumerate() {
            let want = if want < 0 { None } else { Some(want as u64) };
            let got = reg.cage_size(ri + 3, gi + 3);
            if got != want {
                errs.push(format!("cage_size({};{}) = {:?}, want {:?}", ri + 3, gi + 3, got, want));
            }
        }
    }
    // degree/girth extremal cells: the bound is attained exactly here
    // (7;6) is deliberately absent: no order-6 projective plane exists, so
    // the minimum order 90 sits above the degree/girth bound 86
    let tight = [(3, 5), (3, 6), (4, 6), (5, 6), (6, 6), (7, 5), (3, 12), (4, 12), (5, 12), (6, 12)];
    for (r, g) in tight {
        if Some(moore_bound(r as u64, g as u64)) != reg.cage_size(r, g) {
            errs.push(format!("bound not tight at ({r};{g})"));
        }
    }
    report(1, "minimum-order grid and tight cells", errs);
}

#[test]
fn check_2_cage_materialization() {
    let mut errs = Vec::new();
    let reg = CageRegistry::new();
    let set: [(usize, usize); 23] = [
        (3, 3), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8),
        (4, 3), (4, 4), (4, 5), (4, 6), (4, 8),
        (5, 3), (5, 4), (5, 5), (5, 6), (5, 8),
        (6, 3), (6, 4), (6, 6), (6, 8),
        (7, 3), (7, 4), (7, 5),
    ];
    let start = Instant::now();
    for (r, g) in set {
        match reg.get_cage(r, g) {
            Ok(graph) => {
                let n = reg.cage_size(r, g).unwrap() as usize;
                let rep = validate_cage(&graph, r, g, n);
                if !rep.all_pass() {
                    errs.push(format!("({r};{g}) failed validation:\n{rep}"));
                }
            }
            Err(e) => errs.push(format!("({r};{g}) not materializable: {e}")),
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs() >= 60 {
        errs.push(format!("materialization took {elapsed:?}, budget is 60 s"));
    }
    report(2, "all registry graphs validate (regularity, exact girth, order)", errs);
}

#[test]
fn check_3_codeword_class_exact_values() {
    let mut errs = Vec::new();
    let reg = CageRegistry::new();
    let want: [(usize, [i64; 6]); 4] = [
        (3, [4, 6, 10, 14, 24, 30]),
        (4, [5, 8, 19, 26, 67, 80]),
        (5, [6, 10, 30, 42, 152, 170]),
        (6, [7, 12, 40, 62, 294, 312]),
    ];
    for (dv, vals) in want {
        let t = table(&reg, Category::Lets, dv, 0, &G6_16);
        if t.upper_row() != row(&vals) {
            errs.push(format!("leafless b=0 dv={dv}: got {:?}", t.upper_row()));
        }
        for r in &t.rows {
            if r.exact != r.upper {
                errs.push(format!("b=0 cells are exact; dv={dv} g={} differs", r.g));
            }
        }
    }
    report(3, "leafless codeword classes match graph minimum orders", errs);
}

#[test]
fn check_4_remaining_table_rows() {
    let mut errs = Vec::new();
    let reg = CageRegistry::new();
    let mut check = |cat: Category, dv: usize, b: usize, vals: [i64; 6]| {
        let got = table(&reg, cat, dv, b, &G6_16).upper_row();
        if got != row(&vals) {
            errs.push(format!("{cat} dv={dv} b={b}: got {got:?}, want {vals:?}"));
        }
    };
    check(Category::Lets, 3, 1, [5, 7, 11, 15, 25, 31]);
    check(Category::Lets, 5, 1, [7, -1, 31, -1, -1, -1]);
    check(Category::Lets, 3, 2, [4, 6, 10, 14, 24, 30]);
    check(Category::Lets, 4, 2, [5, 8, 19, 26, 67, 80]);
    check(Category::Lets, 5, 2, [6, 10, 30, 42, 152, 170]);
    check(Category::Lets, 6, 2, [7, 12, 40, 62, 294, 312]);
    check(Category::Lets, 3, 3, [3, 5, 9, 13, 23, 29]);
    check(Category::Lets, 5, 3, [7, 11, 31, 42, 153, 171]);
    check(Category::Lets, 3, 4, [-1, 4, 8, 12, 22, 28]);
    check(Category::Lets, 4, 4, [4, 7, 18, 25, 66, 79]);
    check(Category::Lets, 3, 5, [-1, -1, -1, 13, 23, 29]);
    check(Category::Lets, 5, 5, [5, 9, 29, 41, 151, 169]);
    check(Category::Etsl, 3, 2, [6, 8, 12, 16, 26, 32]);
    check(Category::Etsl, 5, 4, [8, -1, 32, -1, -1, -1]);
    check(Category::Nets, 3, 0, [8, 12, 18, 28, 40, 60]);
    check(Category::Nets, 4, 0, [7, 16, 25, 52, 79, 160]);
    check(Category::Nets, 5, 0, [12, 20, 60, 84, 304, 340]);
    check(Category::Nets, 3, 1, [5, 9, 13, 23, 29, 57]);
    check(Category::Nets, 5, 1, [9, 29, 41, 151, 169, -1]);
    check(Category::Nets, 3, 2, [6, 10, 14, 24, 30, 58]);
    check(Category::Nets, 5, 2, [12, 20, 60, 84, 304, 340]);
    check(Category::Nets, 3, 3, [5, 7, 11, 15, 25, 31]);
    check(Category::Nets, 5, 3, [9, 29, 41, 151, 169, -1]);
    check(Category::Nets, 3, 4, [6, 8, 12, 16, 26, 32]);
    check(Category::Nets, 4, 4, [6, 9, 20, 27, 68, 81]);
    check(Category::Nets, 3, 5, [5, 7, 11, 15, 25, 31]);
    check(Category::Nets, 5, 5, [7, 11, 31, 43, 153, 171]);
    // lower rows: tree/codeword bounds after the parity filter
    let mut check_lower = |cat: Category, dv: usize, b: usize, vals: [i64; 6]| {
        let got = table(&reg, cat, dv, b, &G6_16).lower_row();
        if got != row(&vals) {
            errs.push(format!("lower {cat} dv={dv} b={b}: got {got:?}, want {vals:?}"));
        }
    };
    check_lower(Category::Lets, 3, 0, [4, 6, 10, 14, 22, 30]);
    check_lower(Category::Lets, 4, 0, [5, 8, 17, 26, 53, 80]);
    check_lower(Category::Lets, 5, 0, [6, 10, 26, 42, 106, 170]);
    check_lower(Category::Lets, 6, 0, [7, 12, 37, 62, 187, 312]);
    check_lower(Category::Nets, 3, 1, [5, 9, 13, 21, 29, 45]);
    report(4, "remaining published bound rows reproduce", errs);
}

/// Backtracking graph isomorphism, adequate for 10-node graphs.
fn isomorphic(g1: &Graph, g2: &Graph) -> bool {
    let n = g1.node_count();
    if n != g2.node_count() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let e1: BTreeSet<(usize, usize)> = g1.edges().collect();
    let e2: BTreeSet<(usize, usize)> = g2.edges().collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        v: usize,
        n: usize,
        e1: &BTreeSet<(usize, usize)>,
        e2: &BTreeSet<(usize, usize)>,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        g1: &Graph,
        g2: &Graph,
    ) -> bool {
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || g1.degree(v) != g2.degree(w) {
                continue;
            }
            let ok = (0..v).all(|u| {
                let has1 = e1.contains(&(u.min(v), u.max(v)));
                let has2 = e2.contains(&(map[u].min(w), map[u].max(w)));
                has1 == has2
            });
            if ok {
                map[v] = w;
                used[w] = true;
                if go(v + 1, n, e1, e2, map, used, g1, g2) {
                    return true;
                }
                used[w] = false;
                map[v] = usize::MAX;
            }
        }
        false
    }
    go(0, n, &e1, &e2, &mut map, &mut used, g1, g2)
}

#[test]
fn check_5_witness_soundness_sweep() {
    let mut errs = Vec::new();
    let reg = CageRegistry::new();
    let mut built = 0usize;
    for category in [Category::Lets, Category::Etsl, Category::Nets] {
        for dv in 3..=7 {
            for g in G6_16 {
                for b in 0..=6 {
                    match construct_best(&reg, category, dv, g, b) {
                        Ok(w) => {
                            built += 1;
                            if let Err(e) = w.validate() {
                                errs.push(format!(
                                    "{category} dv={dv} g={g} b={b} via {}: {e}",
                                    w.provenance
                                ));
                            }
                            if (w.claimed_a, w.claimed_b, w.claimed_category) != (w.claimed_a, b, category) {
                                errs.push(format!("{category} dv={dv} g={g} b={b}: wrong certificate"));
                            }
                        }
                        Err(ConstructError::Inconsistent { provenance, detail }) => {
                            errs.push(format!("inconsistent {provenance}: {detail}"));
                        }
                        Err(_) => {} // base graph unavailable or precondition unmet
                    }
                }
            }
        }
    }
    if built < 100 {
        errs.push(format!("only {built} witnesses materialized; sweep too thin"));
    }
    // pinned single-structure checks
    let spots: [(Category, usize, usize, usize, usize); 5] = [
        (Category::Lets, 3, 6, 0, 4),
        (Category::Lets, 3, 6, 1, 5),
        (Category::Lets, 3, 10, 0, 10),
        (Category::Etsl, 3, 10, 2, 12),
        (Category::Nets, 3, 6, 0, 8),
    ];
    for (category, dv, g, b, a) in spots {
        match construct_best(&reg, category, dv, g, b) {
            Ok(w) if w.claimed_a == a => {}
            Ok(w) => errs.push(format!("{category} dv={dv} g={g} b={b}: a={}, want {a}", w.claimed_a)),
            Err(e) => errs.push(format!("{category} dv={dv} g={g} b={b}: {e}")),
        }
    }
    // the (10,0) witness collapses back to the 3-regular girth-5 graph it came from
    let w = construct_best(&reg, Category::Lets, 3, 10, 0).unwrap();
    let petersen = reg.get_cage(3, 5).unwrap();
    match w.graph.normal_graph() {
        Ok(n) if isomorphic(&n, &petersen) => {}
        Ok(_) => errs.push("(10,0) normal graph is not the expected girth-5 graph".into()),
        Err(e) => errs.push(format!("(10,0) normal graph: {e}")),
    }
    report(5, "constructed witnesses classify to their certificates", errs);
}

#[test]
fn check_6_tree_bound_grid() {
    let mut errs = Vec::new();
    // codeword-class lower rows for g = 8, 12, 16 at b = 0
    let want: [(u64, [u64; 3]); 4] =
        [(3, [6, 14, 30]), (4, [8, 26, 80]), (5, [10, 42, 170]), (6, [12, 62, 312])];
    for (dv, vals) in want {
        for (gi, g) in [8u64, 12, 16].into_iter().enumerate() {
            let got = eq1_lower(dv, g, 0, 2).value;
            if got != Some(vals[gi]) {
                errs.push(format!("tree bound dv={dv} g={g}: got {got:?}, want {}", vals[gi]));
            }
        }
    }
    let worked = [((3, 14, 0), 22), ((4, 10, 2), 12), ((3, 8, 0), 6)];
    for ((dv, g, b), a) in worked {
        if eq1_lower(dv, g, b, 2).value != Some(a) {
            errs.push(format!("worked cell ({dv},{g},{b}) != {a}"));
        }
    }
    report(6, "tree lower bound matches published cells", errs);
}

#[test]
fn check_7_parity_machinery() {
    let mut errs = Vec::new();
    for dv in 3..=6u64 {
        for a in 1..=20u64 {
            for b in 0..=6u64 {
                // handshake over variable-side edge ends: dv*a and b agree mod 2
                let oracle = (dv * a) % 2 == b % 2;
                if class_exists(dv, a, b) != oracle {
                    errs.push(format!("class_exists({dv},{a},{b}) disagrees with parity oracle"));
                }
            }
        }
    }
    if parity_correct(3, 0, 39) != Some(40) {
        errs.push("parity_correct(3,0,39) != 40".into());
    }
    if parity_correct(3, 0, 7) != Some(8) {
        errs.push("parity_correct(3,0,7) != 8".into());
    }
    report(7, "existence parity filter matches brute-force oracle", errs);
}

#[test]
fn check_8_good_graph_builder() {
    let mut errs = Vec::new();
    let reg = CageRegistry::new();
    for (g_half, girth) in [(3usize, 3usize), (4, 4)] {
        match reg.build_good_graph(5, g_half) {
            Ok(graph) => {
                let mut degs: Vec<usize> = (0..graph.node_count()).map(|v| graph.degree(v)).collect();
                degs.sort_unstable();
                let n = degs.len();
                if degs[n - 1] != 6 || degs[..n - 1].iter().any(|&d| d != 5) {
                    errs.push(format!("build(5,{g_half}): degree profile {degs:?}"));
                }
                if graph.girth() != Girth::Finite(girth) {
                    errs.push(format!("build(5,{g_half}): girth {} != {girth}", graph.girth()));
                }
            }
            Err(e) => errs.push(format!("build(5,{g_half}): {e}")),
        }
    }
    match constructions::fact1_lets_b1(&reg, 6) {
        Ok(w) => {
            if (w.claimed_a, w.claimed_b) != (7, 1) {
                errs.push(format!("near-regular base gave ({},{}), want (7,1)", w.claimed_a, w.claimed_b));
            }
            if let Err(e) = w.validate() {
                errs.push(format!("(7,1) witness: {e}"));
            }
        }
        Err(e) => errs.push(format!("(7,1) construction: {e}")),
    }
    report(8, "near-regular graph builder and its (7,1) witness", errs);
}

#[test]
fn check_9_property_substitution() {
    // Exhaustive-search minimality and uniqueness results from the source
    // material are out of desk-scale reach; the randomized invariant suites
    // stand in for them. Run a compact replica here.
    let mut errs = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..200 {
        let n = rng.gen_range(3..=10usize);
        let mut g = Graph::new(n);
        for _ in 0..rng.gen_range(0..=2 * n) {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v {
                let _ = g.add_edge(u, v);
            }
        }
        let doubled = match g.girth() {
            Girth::Finite(c) => Girth::Finite(2 * c),
            Girth::Infinite => Girth::Infinite,
        };
        if g.subdivide().graph.girth() != doubled {
            errs.push(format!("subdivision girth broke on {:?}", g.edges().collect::<Vec<_>>()));
        }
    }
    for _ in 0..200 {
        let (nv, nc) = (rng.gen_range(2..=12usize), rng.gen_range(1..=14usize));
        let mut t = TannerGraph::new(nv, nc);
        for _ in 0..rng.gen_range(1..=40) {
            let _ = t.add_edge(rng.gen_range(0..nv), rng.gen_range(0..nc));
        }
        if (0..nv).any(|v| t.variable_degree(v) == 0) {
            continue;
        }
        let c = t.classify().expect("no isolated variables");
        let dc: Vec<usize> = (0..nc).map(|ch| t.check_degree(ch)).collect();
        let b = dc.iter().filter(|&&d| d % 2 == 1).count();
        let want = if dc.iter().any(|&d| d >= 3) {
            "NETS"
        } else if (0..nv)
            .all(|v| t.variable_neighbors(v).iter().filter(|&&ch| dc[ch] == 2).count() >= 2)
        {
            "LETS"
        } else {
            "ETSL"
        };
        if c.a != nv || c.b != b || c.category.to_string() != want {
            errs.push(format!("classifier mismatch on {}", t.to_text(None)));
        }
    }
    // upper bounds can never undercut valid lower bounds where both exist
    let reg = CageRegistry::new();
    for category in [Category::Lets, Category::Etsl, Category::Nets] {
        for dv in 3..=6 {
            for b in 0..=6 {
                for r in table(&reg, category, dv, b, &G6_16).rows {
                    if let (Some(lo), Some(up)) = (r.improved_lower.or(r.lower), r.upper) {
                        if lo > up {
                            errs.push(format!(
                                "{category} dv={dv} b={b} g={}: lower {lo} > upper {up}",
                                r.g
                            ));
                        }
                    }
                }
            }
        }
    }
    report(9, "invariant suites substitute for exhaustive-search claims", errs);
}

#[test]
fn check_witnesses_respect_lower_bounds() {
    // every materialized witness must sit at or above the parity-corrected
    // lower bound for its class
    let reg = CageRegistry::new();
    for category in [Category::Lets, Category::Etsl, Category::Nets] {
        for dv in 3..=6u64 {
            for g in G6_16 {
                for b in 0..=6usize {
                    // tree-shaped leafy sets (possible once b >= dv) evade
                    // the cycle-based tree bound entirely
                    if category == Category::Etsl && b as u64 >= dv {
                        continue;
                    }
                    let Ok(w) = construct_best(&reg, category, dv as usize, g, b) else {
                        continue;
                    };
                    let raw = match (category, b) {
                        (Category::Nets, 0) => trapset_core::eq2_lne(dv, g as u64),
                        (Category::Nets, _) => eq1_lower(dv, g as u64, b as u64, 3),
                        _ => eq1_lower(dv, g as u64, b as u64, 2),
                    };
                    let Some(lo) = raw.value.and_then(|v| parity_correct(dv, b as u64, v)) else {
                        continue;
                    };
                    assert!(
                        w.claimed_a as u64 >= lo,
                        "{category} dv={dv} g={g} b={b}: witness {} below bound {lo}",
                        w.claimed_a
                    );
                }
            }
        }
    }
}
