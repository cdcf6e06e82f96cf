//! Total indices and the total simplicial complex Δ_T(G).
//!
//! A triple of labels is a total index when its induced subgraph in T(G) is
//! connected, i.e. at least two of its three pairs are adjacent or incident
//! in G. Isolated vertices of G contribute singleton indices.

use std::collections::BTreeSet;

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::exec::Exec;
use crate::graph::{Graph, Node, TotalGraph, TotalLabeling};

const C42_EXAMPLE: &str = include_str!("../data/c42_example.json");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalIndexSet {
    /// Sorted triples in lexicographic order.
    pub triples: Vec<[u32; 3]>,
    /// Labels of the isolated vertices of G.
    pub singletons: Vec<u32>,
}

pub fn total_indices(graph: &Graph, labeling: &TotalLabeling) -> Result<TotalIndexSet> {
    total_indices_with(graph, labeling, Exec::default())
}

pub fn total_indices_with(
    graph: &Graph,
    labeling: &TotalLabeling,
    exec: Exec,
) -> Result<TotalIndexSet> {
    let t = TotalGraph::new(graph, labeling)?;
    let n = t.order() as u32;
    let firsts: Vec<u32> = (1..=n).collect();
    let triples = exec.flat_map(&firsts, |&p| {
        let mut out = Vec::new();
        for q in p + 1..=n {
            let pq = t.adjacent(p, q);
            for r in q + 1..=n {
                let links = pq as u8 + t.adjacent(p, r) as u8 + t.adjacent(q, r) as u8;
                if links >= 2 {
                    out.push([p, q, r]);
                }
            }
        }
        out
    });
    let mut singletons: Vec<u32> = (1..=graph.vertex_count() as u32)
        .filter(|&v| graph.is_isolated(v))
        .map(|v| labeling.label(Node::Vertex(v)))
        .collect();
    singletons.sort_unstable();
    Ok(TotalIndexSet { triples, singletons })
}

pub fn build_tsc(graph: &Graph, labeling: &TotalLabeling) -> Result<SimplicialComplex> {
    build_tsc_with(graph, labeling, Exec::default())
}

pub fn build_tsc_with(
    graph: &Graph,
    labeling: &TotalLabeling,
    exec: Exec,
) -> Result<SimplicialComplex> {
    let idx = total_indices_with(graph, labeling, exec)?;
    let sets = idx
        .triples
        .iter()
        .map(|t| t.to_vec())
        .chain(idx.singletons.iter().map(|&s| vec![s]));
    SimplicialComplex::from_facets(sets)
}

/// Inclusive arithmetic progression `a, a+s, ..., <= b`; empty when `b < a`.
fn prog(a: i64, b: i64, s: i64) -> impl Iterator<Item = i64> + Clone {
    (a..=b).step_by(s as usize)
}

/// The facets of Δ_T(F_{5n+1}) listed as thirteen closed-form families over
/// the friendship labeling of [`crate::graph::friendship`]. Paired index
/// sequences advance in lockstep; inner `k` ranges are expanded fully.
pub fn friendship_facet_families(n: u32) -> Vec<Vec<[u32; 3]>> {
    let n = n as i64;
    let c = 5 * n + 1;
    let mut fams: Vec<Vec<[u32; 3]>> = vec![Vec::new(); 13];
    let mut add = |fam: usize, a: i64, b: i64, d: i64| {
        let mut t = [a as u32, b as u32, d as u32];
        t.sort_unstable();
        fams[fam - 1].push(t);
    };

    // 1: the outer triangles {a_k, a_k b_k, b_k}
    for i in prog(1, 3 * n - 2, 3) {
        add(1, i, i + 1, i + 2);
    }
    // 2: outer vertex, any center edge, center
    for i in prog(1, 3 * n - 2, 3).chain(prog(3, 3 * n, 3)) {
        for j in prog(3 * n + 1, 5 * n, 1) {
            add(2, i, j, c);
        }
    }
    // 3: three center edges
    for i in prog(1, 2 * n - 2, 1) {
        for j in prog(i + 1, 2 * n - 1, 1) {
            for k in prog(j + 1, 2 * n, 1) {
                add(3, 3 * n + i, 3 * n + j, 3 * n + k);
            }
        }
    }
    // 4: two center edges and the center
    for i in prog(1, 2 * n - 1, 1) {
        for j in prog(i + 1, 2 * n, 1) {
            add(4, 3 * n + i, 3 * n + j, c);
        }
    }
    // 5: consecutive outer labels with a center edge of the same triangle
    for (is, ks) in [(prog(1, 3 * n - 2, 3), prog(1, 2 * n - 1, 2)), (prog(2, 3 * n - 1, 3), prog(1, 2 * n - 1, 2))] {
        for (i, k) in is.zip(ks) {
            add(5, i, i + 1, 3 * n + k);
            add(5, i, i + 1, 3 * n + k + 1);
        }
    }
    // 6: consecutive outer labels with the center
    for i in prog(1, 3 * n - 2, 3).chain(prog(2, 3 * n - 1, 3)) {
        add(6, i, i + 1, c);
    }
    // 7: outer elements of different triangles with the center
    for i in prog(1, 3 * n - 5, 3) {
        for j in prog(i + 3, 3 * n - 2, 3) {
            add(7, i, j, c);
            add(7, i, j - 1, c);
        }
    }
    for i in prog(3, 3 * n - 3, 3) {
        for j in prog(i + 1, 3 * n - 2, 3) {
            add(7, i, j, c);
            add(7, i, j + 2, c);
        }
    }
    for i in prog(1, 3 * n - 2, 3) {
        add(7, i, 3 * n, c);
    }
    // 8: outer edge, one of its center edges, center
    for (i, j) in prog(2, 3 * n - 1, 3).zip(prog(1, 2 * n - 1, 2)) {
        add(8, i, 3 * n + j, c);
        add(8, i, 3 * n + j + 1, c);
    }
    // 9: outer edge with two center edges
    for (i, j) in prog(2, 3 * n - 1, 3).zip(prog(1, 2 * n - 1, 2)) {
        for k in prog(j + 1, 2 * n, 1) {
            add(9, i, 3 * n + j, 3 * n + k);
        }
    }
    for (i, j) in prog(2, 3 * n - 4, 3).zip(prog(2, 2 * n - 2, 2)) {
        for k in prog(j + 1, 2 * n, 1) {
            add(9, i, 3 * n + j, 3 * n + k);
        }
    }
    // 10: counted down from the last triangle
    for (i, j) in prog(1, 3 * n - 5, 3).zip(prog(0, 2 * n - 4, 2)) {
        for k in prog(j + 2, 2 * n - 1, 1) {
            add(10, 3 * n - i, 5 * n - k, 5 * n - j);
        }
    }
    for (i, j) in prog(1, 3 * n - 5, 3).zip(prog(1, 2 * n - 3, 2)) {
        for k in prog(j + 1, 2 * n - 1, 1) {
            add(10, 3 * n - i, 5 * n - k, 5 * n - j);
        }
    }
    // 11: both outer vertices with a center edge of their triangle
    for (i, j) in prog(1, 3 * n - 2, 3).zip(prog(1, 2 * n - 1, 2)) {
        add(11, i, i + 2, 3 * n + j);
        add(11, i, i + 2, 3 * n + j + 1);
    }
    // 12: outer vertex with two center edges
    for (i, j) in prog(1, 3 * n - 2, 3).zip(prog(1, 2 * n - 1, 2)) {
        for k in prog(j + 1, 2 * n, 1) {
            add(12, i, 3 * n + j, 3 * n + k);
        }
    }
    for (i, j) in prog(3, 3 * n - 3, 3).zip(prog(2, 2 * n - 2, 2)) {
        for k in prog(j + 1, 2 * n, 1) {
            add(12, i, 3 * n + j, 3 * n + k);
        }
    }
    // 13: counted down from the last triangle
    for (i, j) in prog(2, 3 * n - 4, 3).zip(prog(1, 2 * n - 3, 2)) {
        for k in prog(j + 1, 2 * n - 1, 1) {
            add(13, 3 * n - i, 5 * n - k, 5 * n - j);
        }
    }
    for (i, j) in prog(0, 3 * n - 3, 3).zip(prog(0, 2 * n - 2, 2)) {
        for k in prog(j + 1, 2 * n - 1, 1) {
            add(13, 3 * n - i, 5 * n - k, 5 * n - j);
        }
    }
    fams
}

/// Union of [`friendship_facet_families`].
pub fn friendship_facets_closed_form(n: u32) -> BTreeSet<[u32; 3]> {
    friendship_facet_families(n).into_iter().flatten().collect()
}

/// The 73 facets of Δ_T(C_{4,2}) exactly as transcribed, in listing order.
pub fn c42_example_facets() -> Vec<Vec<u32>> {
    let file = crate::complex::ComplexFile::from_json(C42_EXAMPLE).expect("bundled fixture parses");
    file.facets
}

/// Raw bytes of the bundled C_{4,2} fixture file.
pub fn c42_fixture_json() -> &'static str {
    C42_EXAMPLE
}

pub fn c42_fixture() -> SimplicialComplex {
    SimplicialComplex::from_facets(c42_example_facets()).expect("bundled fixture is a complex")
}
