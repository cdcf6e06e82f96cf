//! Abstract simplicial complexes stored by their facets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::UnionFind;

/// A face: strictly increasing vertex labels.
pub type Face = Vec<u32>;

/// A simplicial complex given by its facets (an antichain of sorted faces,
/// in lexicographic order).
///
/// The complex `{∅}` whose only face is the empty face is represented by a
/// single empty facet and has dimension -1. It only arises as a link.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
    vertices: Vec<u32>,
}

/// Face counts per dimension: `alpha[k]` is the number of k-faces.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn get(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl SimplicialComplex {
    pub fn from_facets<I, F>(sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = u32>,
    {
        let mut faces = Vec::new();
        for set in sets {
            let mut f: Face = set.into_iter().collect();
            if f.is_empty() {
                return Err(Error::EmptyFacet);
            }
            f.sort_unstable();
            f.dedup();
            faces.push(f);
        }
        if faces.is_empty() {
            return Err(Error::NoFacets);
        }
        Ok(Self::from_faces_unchecked(faces))
    }

    /// The complex `{∅}`.
    pub fn empty_face_only() -> Self {
        SimplicialComplex { facets: vec![Vec::new()], vertices: Vec::new() }
    }

    /// The full simplex on `1..=k`.
    pub fn simplex(k: u32) -> Self {
        Self::from_faces_unchecked(vec![(1..=k).collect()])
    }

    /// Keeps the inclusion-maximal members of `faces` (each already sorted).
    fn from_faces_unchecked(mut faces: Vec<Face>) -> Self {
        faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let mut facets: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces {
            if !facets.iter().any(|g| g.len() > f.len() && is_subset(&f, g)) {
                facets.push(f);
            }
        }
        facets.sort_unstable();
        if facets.iter().all(|f| f.is_empty()) {
            return Self::empty_face_only();
        }
        facets.retain(|f| !f.is_empty());
        let mut vertices: Vec<u32> = facets.iter().flatten().copied().collect();
        vertices.sort_unstable();
        vertices.dedup();
        SimplicialComplex { facets, vertices }
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn dimension(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        face.windows(2).all(|w| w[0] < w[1]) && self.facets.iter().any(|f| is_subset(face, f))
    }

    /// All non-empty faces, grouped by dimension; each group is sorted.
    pub fn all_faces(&self) -> Vec<Vec<Face>> {
        self.all_faces_with(Exec::default())
    }

    pub fn all_faces_with(&self, exec: Exec) -> Vec<Vec<Face>> {
        let dim = self.dimension();
        if dim < 0 {
            return Vec::new();
        }
        let dims: Vec<usize> = (0..=dim as usize).collect();
        exec.map(&dims, |&k| self.faces_of_dim(k))
    }

    pub fn faces_of_dim(&self, k: usize) -> Vec<Face> {
        let mut out = Vec::new();
        for f in &self.facets {
            if f.len() > k {
                for_each_subset(f, k + 1, |s| out.push(s.to_vec()));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.all_faces().iter().map(Vec::len).collect())
    }

    /// Components of the facet-intersection graph (0 for `{∅}`).
    pub fn component_count(&self) -> usize {
        let idx = |v: u32| self.vertices.binary_search(&v).unwrap();
        let mut uf = UnionFind::new(self.vertices.len());
        for f in &self.facets {
            for w in f.windows(2) {
                uf.union(idx(w[0]), idx(w[1]));
            }
        }
        (0..self.vertices.len()).filter(|&i| uf.find(i) == i).count()
    }

    /// True iff any two facets are joined by a chain of facets with
    /// consecutive non-empty intersections. `{∅}` counts as connected.
    pub fn is_facet_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// `link(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`; the link at ∅ is Δ itself and
    /// the link at a facet is `{∅}`.
    pub fn link(&self, face: &[u32]) -> Result<SimplicialComplex> {
        if face.is_empty() {
            return Ok(self.clone());
        }
        let mut sigma = face.to_vec();
        sigma.sort_unstable();
        if !self.contains_face(&sigma) {
            return Err(Error::NotAFace(face.to_vec()));
        }
        let rests = self
            .facets
            .iter()
            .filter(|f| is_subset(&sigma, f))
            .map(|f| f.iter().copied().filter(|v| sigma.binary_search(v).is_err()).collect())
            .collect();
        Ok(Self::from_faces_unchecked(rests))
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            n: self.vertices.last().copied().unwrap_or(0) as usize,
            facets: self.facets.clone(),
        }
    }

    /// One facet per line, canonical order.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for f in &self.facets {
            let items: Vec<String> = f.iter().map(u32::to_string).collect();
            s.push('{');
            s.push_str(&items.join(","));
            s.push_str("}\n");
        }
        s
    }
}

/// On-disk complex format: `{"n": <max label>, "facets": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub n: usize,
    pub facets: Vec<Vec<u32>>,
}

impl ComplexFile {
    pub fn into_complex(self) -> Result<SimplicialComplex> {
        if let Some(&v) = self.facets.iter().flatten().find(|&&v| v == 0 || v as usize > self.n) {
            return Err(Error::Parse(format!("facet label {v} outside 1..={}", self.n)));
        }
        SimplicialComplex::from_facets(self.facets)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("complex file serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// `a ⊆ b` for sorted slices.
pub fn is_subset(a: &[u32], b: &[u32]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// Calls `f` on every `k`-subset of the sorted slice `set`, in lexicographic order.
pub fn for_each_subset(set: &[u32], k: usize, mut f: impl FnMut(&[u32])) {
    if k > set.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf = vec![0; k];
    loop {
        for (b, &i) in buf.iter_mut().zip(&idx) {
            *b = set[i];
        }
        f(&buf);
        let Some(pos) = (0..k).rev().find(|&p| idx[p] != p + set.len() - k) else {
            return;
        };
        idx[pos] += 1;
        for p in pos + 1..k {
            idx[p] = idx[p - 1] + 1;
        }
    }
}
