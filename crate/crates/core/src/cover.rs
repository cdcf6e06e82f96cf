//! Minimal vertex covers, unmixedness, facet-ideal primary decomposition and
//! Stanley-Reisner generators.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{for_each_subset, is_subset, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exec::Exec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    /// Minimal vertex covers, each sorted, in lexicographic order.
    pub covers: Vec<Face>,
    /// Cover sizes, aligned with `covers`.
    pub cardinalities: Vec<usize>,
    pub unmixed: bool,
}

impl CoverReport {
    /// `(size, count)` pairs, sizes ascending.
    pub fn size_histogram(&self) -> Vec<(usize, usize)> {
        let mut h: Vec<(usize, usize)> = Vec::new();
        let mut sizes = self.cardinalities.clone();
        sizes.sort_unstable();
        for s in sizes {
            match h.last_mut() {
                Some((k, c)) if *k == s => *c += 1,
                _ => h.push((s, 1)),
            }
        }
        h
    }
}

/// Prime `(x_i : i ∈ variables)` of the facet ideal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PrimeComponent {
    pub variables: Vec<u32>,
}

impl fmt::Display for PrimeComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self.variables.iter().map(|v| format!("x{v}")).collect();
        write!(f, "({})", vars.join(","))
    }
}

/// Facet-ideal decomposition as written to disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub components: Vec<Vec<u32>>,
    pub unmixed: bool,
    pub cardinalities: Vec<usize>,
}

impl Decomposition {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("decomposition serializes")
    }

    /// `(x1,x2) ∩ (x3)` style presentation.
    pub fn render_text(&self) -> String {
        self.components
            .iter()
            .map(|c| PrimeComponent { variables: c.clone() }.to_string())
            .collect::<Vec<_>>()
            .join(" ∩ ")
    }
}

/// Incidence data for the facet hypergraph over dense vertex indices.
struct Hypergraph {
    vertices: Vec<u32>,
    facets: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
}

impl Hypergraph {
    fn new(complex: &SimplicialComplex) -> Self {
        let vertices = complex.vertices().to_vec();
        let idx = |v: &u32| vertices.binary_search(v).unwrap();
        let facets: Vec<Vec<usize>> =
            complex.facets().iter().map(|f| f.iter().map(idx).collect()).collect();
        let mut incident = vec![Vec::new(); vertices.len()];
        for (fi, f) in facets.iter().enumerate() {
            for &v in f {
                incident[v].push(fi);
            }
        }
        Hypergraph { vertices, facets, incident }
    }
}

/// Search state: chosen vertices, forbidden vertices, and for every facet
/// how many chosen vertices it contains.
#[derive(Clone)]
struct Partial {
    chosen: Vec<usize>,
    forbidden: Vec<bool>,
    hits: Vec<u32>,
}

impl Partial {
    fn root(h: &Hypergraph) -> Self {
        Partial {
            chosen: Vec::new(),
            forbidden: vec![false; h.vertices.len()],
            hits: vec![0; h.facets.len()],
        }
    }

    fn add(&mut self, h: &Hypergraph, v: usize) {
        self.chosen.push(v);
        for &f in &h.incident[v] {
            self.hits[f] += 1;
        }
    }

    /// Every chosen vertex still owns a facet met by no other chosen vertex.
    /// Private facets only disappear as vertices are added, so a failure
    /// here rules out the whole subtree.
    fn all_private(&self, h: &Hypergraph) -> bool {
        self.chosen.iter().all(|&v| h.incident[v].iter().any(|&f| self.hits[f] == 1))
    }

    fn first_uncovered(&self) -> Option<usize> {
        self.hits.iter().position(|&c| c == 0)
    }

    /// Children in branch order: the j-th child takes the j-th vertex of the
    /// first uncovered facet and forbids the earlier ones, so every minimal
    /// cover is reached along exactly one path.
    fn children(&self, h: &Hypergraph, facet: usize) -> Vec<Partial> {
        let mut out = Vec::new();
        let mut forbidden = self.forbidden.clone();
        for &v in &h.facets[facet] {
            if !forbidden[v] {
                let mut child = Partial { forbidden: forbidden.clone(), ..self.clone() };
                child.add(h, v);
                if child.all_private(h) {
                    out.push(child);
                }
                forbidden[v] = true;
            }
        }
        out
    }
}

fn search(h: &Hypergraph, node: Partial, out: &mut Vec<Vec<usize>>) {
    match node.first_uncovered() {
        None => out.push(node.chosen),
        Some(f) => {
            for child in node.children(h, f) {
                search(h, child, out);
            }
        }
    }
}

pub fn minimal_vertex_covers(complex: &SimplicialComplex) -> CoverReport {
    minimal_vertex_covers_with(complex, Exec::default())
}

/// Branch and bound on the first uncovered facet, followed by a minimality
/// filter. The top levels of the tree are expanded up front and the
/// resulting subtrees are searched independently.
pub fn minimal_vertex_covers_with(complex: &SimplicialComplex, exec: Exec) -> CoverReport {
    let h = Hypergraph::new(complex);
    if complex.dimension() < 0 {
        return CoverReport { covers: vec![], cardinalities: vec![], unmixed: true };
    }

    let mut frontier = vec![Partial::root(&h)];
    let mut found = Vec::new();
    for _ in 0..4 {
        let mut next = Vec::new();
        for node in frontier {
            match node.first_uncovered() {
                None => found.push(node.chosen),
                Some(f) => next.extend(node.children(&h, f)),
            }
        }
        frontier = next;
    }
    found.extend(exec.flat_map(&frontier, |node| {
        let mut out = Vec::new();
        search(&h, node.clone(), &mut out);
        out
    }));

    let mut covers: Vec<Face> = found
        .into_iter()
        .map(|c| {
            let mut f: Face = c.into_iter().map(|v| h.vertices[v]).collect();
            f.sort_unstable();
            f
        })
        .collect();
    covers.sort_unstable();
    covers.dedup();
    let covers = keep_minimal(covers);
    let cardinalities: Vec<usize> = covers.iter().map(Vec::len).collect();
    let unmixed = cardinalities.windows(2).all(|w| w[0] == w[1]);
    CoverReport { covers, cardinalities, unmixed }
}

/// Drops every set that strictly contains another set of the list.
fn keep_minimal(sets: Vec<Face>) -> Vec<Face> {
    let mut by_size = sets.clone();
    by_size.sort_by_key(Vec::len);
    sets.into_iter()
        .filter(|s| !by_size.iter().take_while(|t| t.len() < s.len()).any(|t| is_subset(t, s)))
        .collect()
}

pub fn is_unmixed(complex: &SimplicialComplex) -> bool {
    minimal_vertex_covers(complex).unmixed
}

/// Minimal primes of the facet ideal `I_F(Δ)`; one per minimal vertex cover.
pub fn facet_ideal_decomposition(complex: &SimplicialComplex) -> Vec<PrimeComponent> {
    minimal_vertex_covers(complex)
        .covers
        .into_iter()
        .map(|variables| PrimeComponent { variables })
        .collect()
}

pub fn decomposition(complex: &SimplicialComplex) -> Decomposition {
    let report = minimal_vertex_covers(complex);
    Decomposition {
        components: report.covers,
        unmixed: report.unmixed,
        cardinalities: report.cardinalities,
    }
}

/// Minimal non-faces of Δ (generators of the Stanley-Reisner ideal), sorted
/// by size and then lexicographically. Candidates of size k are built from
/// (k-1)-faces, so sizes above `dim + 2` never need to be considered.
pub fn stanley_reisner_generators(complex: &SimplicialComplex) -> Vec<Face> {
    let faces = complex.all_faces();
    let face_set: HashSet<&[u32]> = faces.iter().flatten().map(Vec::as_slice).collect();
    let mut out = Vec::new();
    for k in 2..=faces.len() + 1 {
        let base = &faces[k - 2];
        for f in base {
            let last = *f.last().unwrap();
            for &v in complex.vertices().iter().filter(|&&v| v > last) {
                let mut cand = f.clone();
                cand.push(v);
                if face_set.contains(cand.as_slice()) {
                    continue;
                }
                let mut all_faces = true;
                for_each_subset(&cand, k - 1, |s| all_faces &= face_set.contains(s));
                if all_faces {
                    out.push(cand);
                }
            }
        }
    }
    out
}

/// Closed-form count `3^(n-2) (2n^2 + 19n + 9)` of minimal covers of size
/// `3n + 1` of Δ_T(F_{5n+1}); stated for `n >= 2`.
pub fn friendship_cover_count(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::CoverCountDomain(n));
    }
    Ok(3u64.pow((n - 2) as u32) * (2 * n * n + 19 * n + 9))
}
