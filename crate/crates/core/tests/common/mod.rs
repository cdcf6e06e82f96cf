#![allow(dead_code)]

use tsc_core::corpus::small_graphs;
use tsc_core::{build_tsc, c42, c42_fixture, friendship, Graph, SimplicialComplex, TotalLabeling};

pub struct Named {
    pub name: String,
    pub complex: SimplicialComplex,
}

pub fn cx(f: &[&[u32]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(f.iter().map(|s| s.to_vec())).unwrap()
}

pub fn tsc_of(g: &Graph) -> SimplicialComplex {
    build_tsc(g, &TotalLabeling::default_for(g)).unwrap()
}

/// Δ_T of every graph on <= 5 vertices, the friendship complexes for
/// n = 1..=max_n, both C_{4,2} complexes and a few hand-made complexes.
pub fn corpus(max_n: u32) -> Vec<Named> {
    let mut out: Vec<Named> = small_graphs(5)
        .iter()
        .map(|g| Named { name: format!("T{:?}/{}", g.edges(), g.vertex_count()), complex: tsc_of(g) })
        .collect();
    for n in 1..=max_n {
        let (g, l) = friendship(n).unwrap();
        out.push(Named { name: format!("F{}", 5 * n + 1), complex: build_tsc(&g, &l).unwrap() });
    }
    let (g, l) = c42();
    out.push(Named { name: "C42 (definition)".into(), complex: build_tsc(&g, &l).unwrap() });
    out.push(Named { name: "C42 (fixture)".into(), complex: c42_fixture() });
    for (name, f) in [
        ("simplex", &[&[1u32, 2, 3, 4][..]][..]),
        ("hollow triangle", &[&[1, 2], &[2, 3], &[1, 3]]),
        ("mixed", &[&[1], &[2, 3]]),
        ("bowtie", &[&[1, 2, 3], &[3, 4, 5]]),
        ("octahedron", &[&[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 2, 5], &[6, 2, 3], &[6, 3, 4], &[6, 4, 5], &[6, 2, 5]]),
    ] {
        out.push(Named { name: name.into(), complex: cx(f) });
    }
    out
}

/// Bitmask of a face over the complex's vertex positions.
pub fn mask(complex: &SimplicialComplex, face: &[u32]) -> u64 {
    face.iter()
        .map(|v| 1u64 << complex.vertices().binary_search(v).unwrap())
        .fold(0, |a, b| a | b)
}

pub fn unmask(complex: &SimplicialComplex, m: u64) -> Vec<u32> {
    (0..complex.vertices().len())
        .filter(|i| m >> i & 1 == 1)
        .map(|i| complex.vertices()[i])
        .collect()
}
