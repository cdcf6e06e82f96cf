//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use tsc_core::corpus::{connected_small_graphs, disconnected_small_graphs, small_graphs};
use tsc_core::homology::reduced_betti_below;
use tsc_core::{
    boundary_matrix, build_tsc, c42, c42_fixture, friendship, friendship_facets_closed_form, homology_summary,
    is_cm, is_cm_t, is_unmixed, minimal_vertex_covers, tsc_cm_shortcut, vertex_links_connected, FieldSpec,
    Graph, SimplicialComplex, TotalLabeling,
};

struct Outcome {
    ok: bool,
    detail: String,
}

type Check = fn() -> Outcome;

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn friendship_tsc(n: u32) -> SimplicialComplex {
    let (g, l) = friendship(n).unwrap();
    build_tsc(&g, &l).unwrap()
}

fn tsc_of(g: &Graph) -> SimplicialComplex {
    build_tsc(g, &TotalLabeling::default_for(g)).unwrap()
}

fn within(start: Instant, limit: Duration, detail: &mut String) -> bool {
    let t = start.elapsed();
    detail.push_str(&format!("; {:.2}s (limit {}s)", t.as_secs_f64(), limit.as_secs()));
    t < limit
}

fn f_vector_reproduction() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut seen = Vec::new();
    for n in 1..=4u64 {
        let alpha: Vec<u64> = friendship_tsc(n as u32).f_vector().0.iter().map(|&a| a as u64).collect();
        let expected = vec![5 * n + 1, 10 * n * n + 5 * n, (4 * n.pow(3) + 42 * n * n + 14 * n) / 3];
        ok &= alpha == expected;
        seen.push(format!("n={n} {alpha:?}"));
    }
    let mut detail = seen.join(", ");
    ok &= within(start, Duration::from_secs(5), &mut detail);
    outcome(ok, detail)
}

fn closed_form_facets() -> Outcome {
    let mut ok = true;
    for n in 1..=3 {
        let built: BTreeSet<Vec<u32>> = friendship_tsc(n).facets().iter().cloned().collect();
        let closed: BTreeSet<Vec<u32>> = friendship_facets_closed_form(n).iter().map(|t| t.to_vec()).collect();
        ok &= built == closed;
    }
    outcome(ok, "n=1..3 set equality")
}

fn homology_reproduction() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut seen = Vec::new();
    for n in 1..=3usize {
        let c = friendship_tsc(n as u32);
        for field in [FieldSpec::Rationals, FieldSpec::default()] {
            let h = homology_summary(&c, field);
            let b2 = (4 * n.pow(3) + 12 * n * n + 14 * n) / 3;
            ok &= h.rank_im[1] == 5 * n && h.rank_im[2] == 10 * n * n && h.betti == vec![1, 0, b2];
            seen.push(format!("n={n} {field}: ranks ({},{}) betti {:?}", h.rank_im[1], h.rank_im[2], h.betti));
        }
    }
    let mut detail = seen.join(", ");
    ok &= within(start, Duration::from_secs(30), &mut detail);
    outcome(ok, detail)
}

fn cm_verdicts() -> Outcome {
    let field = FieldSpec::default();
    let mut ok = true;
    for n in 1..=2 {
        ok &= is_cm(&friendship_tsc(n), field).verdict;
    }
    for n in 1..=3 {
        let (g, l) = friendship(n).unwrap();
        ok &= tsc_cm_shortcut(&g, &l, field) == Ok(true);
    }
    outcome(ok, "Reisner n=1,2; shortcut n=1..3")
}

fn c42_counterexample() -> Outcome {
    let c = c42_fixture();
    let report = minimal_vertex_covers(&c);
    let listed = [vec![1, 4, 5, 6, 8, 9], vec![1, 2, 4, 5, 6, 8, 10]];
    let covers_ok = listed.iter().all(|cover| report.covers.contains(cover));
    let unmixed = is_unmixed(&c);
    let cm = is_cm(&c, FieldSpec::default());
    let ok = covers_ok && !unmixed && !cm.verdict && cm.witness.is_some();
    let detail = format!(
        "listed covers minimal: {covers_ok}; unmixed: {unmixed}; is_cm: {} (witness {:?}; betti {:?})",
        cm.verdict,
        cm.witness,
        homology_summary(&c, FieldSpec::Rationals).betti
    );
    outcome(ok, detail)
}

fn cover_counting() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut seen = Vec::new();
    let r1 = minimal_vertex_covers(&friendship_tsc(1));
    ok &= r1.cardinalities.iter().all(|&s| s == 4);
    seen.push(format!("n=1 {} covers, sizes {:?} (prediction 15, formula 10)", r1.covers.len(), r1.size_histogram()));
    for (n, expected) in [(2usize, 55usize), (3, 252)] {
        let r = minimal_vertex_covers(&friendship_tsc(n as u32));
        ok &= r.covers.len() == expected && r.cardinalities.iter().all(|&s| s == 3 * n + 1);
        seen.push(format!("n={n} {} covers, sizes {:?} (expected {expected} of size {})", r.covers.len(), r.size_histogram(), 3 * n + 1));
    }
    let mut detail = seen.join(", ");
    ok &= within(start, Duration::from_secs(60), &mut detail);
    outcome(ok, detail)
}

fn buchsbaum_suite() -> Outcome {
    let field = FieldSpec::default();
    let mut bad = Vec::new();
    let connected = connected_small_graphs(5);
    for g in &connected {
        let c = tsc_of(g);
        if !(is_cm_t(&c, 1, field).verdict && c.is_facet_connected() && vertex_links_connected(&c)) {
            bad.push(format!("{:?}/{}", g.edges(), g.vertex_count()));
        }
    }
    let disconnected = disconnected_small_graphs(5);
    for g in &disconnected {
        if tsc_of(g).is_facet_connected() {
            bad.push(format!("{:?}/{}", g.edges(), g.vertex_count()));
        }
    }
    let detail = format!("{} connected, {} disconnected graphs; failures {bad:?}", connected.len(), disconnected.len());
    outcome(bad.is_empty(), detail)
}

fn theorem_equivalence() -> Outcome {
    let field = FieldSpec::default();
    let mut bad = Vec::new();
    let graphs = connected_small_graphs(5);
    for g in &graphs {
        let c = tsc_of(g);
        let h1_zero = reduced_betti_below(&c, field, 2).get(1).is_none_or(|&b| b == 0);
        if is_cm(&c, field).verdict != h1_zero {
            bad.push(format!("{:?}/{}", g.edges(), g.vertex_count()));
        }
    }
    outcome(bad.is_empty(), format!("{} connected graphs; mismatches {bad:?}", graphs.len()))
}

fn corpus() -> Vec<(String, SimplicialComplex)> {
    let mut out: Vec<(String, SimplicialComplex)> =
        small_graphs(5).iter().map(|g| (format!("{:?}/{}", g.edges(), g.vertex_count()), tsc_of(g))).collect();
    for n in 1..=3 {
        out.push((format!("F{}", 5 * n + 1), friendship_tsc(n)));
    }
    let (g, l) = c42();
    out.push(("C42".into(), build_tsc(&g, &l).unwrap()));
    out.push(("C42 fixture".into(), c42_fixture()));
    out
}

fn masks(c: &SimplicialComplex) -> Vec<u64> {
    let pos = |v: &u32| c.vertices().binary_search(v).unwrap();
    c.facets().iter().map(|f| f.iter().fold(0u64, |m, v| m | 1 << pos(v))).collect()
}

fn unmask(c: &SimplicialComplex, m: u64) -> Vec<u32> {
    (0..c.vertices().len()).filter(|i| m >> i & 1 == 1).map(|i| c.vertices()[i]).collect()
}

fn brute_face_count(c: &SimplicialComplex) -> usize {
    let facets = masks(c);
    (1u64..1 << c.vertices().len()).filter(|&m| facets.iter().any(|&f| m & f == m)).count()
}

fn brute_covers(c: &SimplicialComplex) -> Vec<Vec<u32>> {
    let facets = masks(c);
    let nv = c.vertices().len();
    let covers = |m: u64| facets.iter().all(|&f| f & m != 0);
    let mut out: Vec<Vec<u32>> = (0u64..1 << nv)
        .filter(|&m| covers(m) && (0..nv).all(|i| m >> i & 1 == 0 || !covers(m & !(1 << i))))
        .map(|m| unmask(c, m))
        .collect();
    out.sort();
    out
}

fn algebraic_invariants() -> Outcome {
    let mut bad = Vec::new();
    let items = corpus();
    let (mut faces_checked, mut covers_checked) = (0, 0);
    for (name, c) in &items {
        let dim = c.dimension().max(0) as usize;
        for r in 1..dim {
            let a = boundary_matrix(c, r).unwrap();
            let b = boundary_matrix(c, r + 1).unwrap();
            if a.compose(&b).iter().flatten().any(|&x| x != 0) {
                bad.push(format!("{name}: boundary^2 at r={r}"));
            }
        }
        let h = homology_summary(c, FieldSpec::default());
        let alt = |v: &[usize]| v.iter().enumerate().map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) }).sum::<i64>();
        if alt(&c.f_vector().0) != alt(&h.betti) {
            bad.push(format!("{name}: Euler"));
        }
        let nv = c.vertices().len();
        if nv <= 12 {
            faces_checked += 1;
            let total: usize = c.f_vector().0.iter().sum();
            if total != brute_face_count(c) {
                bad.push(format!("{name}: faces"));
            }
        }
        if nv <= 16 {
            covers_checked += 1;
            if minimal_vertex_covers(c).covers != brute_covers(c) {
                bad.push(format!("{name}: covers"));
            }
        }
    }
    let detail = format!(
        "{} complexes, {faces_checked} face oracles, {covers_checked} cover oracles; failures {bad:?}",
        items.len()
    );
    outcome(bad.is_empty(), detail)
}

/// Not a numbered criterion: the cross-module property that every CM corpus
/// complex is unmixed.
fn cm_implies_unmixed() -> Outcome {
    let mut bad = Vec::new();
    for (name, c) in corpus() {
        if is_cm(&c, FieldSpec::default()).verdict && !is_unmixed(&c) {
            bad.push(name);
        }
    }
    outcome(bad.is_empty(), format!("CM but mixed: {bad:?}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 10] = [
        ("1 f-vector reproduction", f_vector_reproduction),
        ("2 closed-form facet equality", closed_form_facets),
        ("3 homology reproduction", homology_reproduction),
        ("4 CM verdicts", cm_verdicts),
        ("5 C42 counterexample", c42_counterexample),
        ("6 cover counting", cover_counting),
        ("7 Buchsbaum suite", buchsbaum_suite),
        ("8 theorem equivalence", theorem_equivalence),
        ("9 algebraic invariants", algebraic_invariants),
        ("- CM implies unmixed", cm_implies_unmixed),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let o = check();
        failed += usize::from(!o.ok);
        println!("{} {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
