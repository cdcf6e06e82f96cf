//! Cohen-Macaulay, CM_t and Buchsbaum checks via reduced homology of links.

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::FieldSpec;
use crate::graph::{Graph, TotalLabeling};
use crate::homology::reduced_betti_below;
use crate::tsc::build_tsc;

/// A face whose link has non-vanishing reduced homology below its dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub face: Face,
    pub r: usize,
    pub betti: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmReport {
    pub verdict: bool,
    pub field: FieldSpec,
    pub witness: Option<Witness>,
    pub purity_ok: bool,
}

impl CmReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Reisner's criterion: for every face σ (including ∅) and every
/// `0 <= r < dim link(σ)`, `H̃_r(link σ) = 0`. The r = -1 group is never
/// inspected; it vanishes for every non-void link.
pub fn is_cm(complex: &SimplicialComplex, field: FieldSpec) -> CmReport {
    is_cm_with(complex, field, Exec::default())
}

pub fn is_cm_with(complex: &SimplicialComplex, field: FieldSpec, exec: Exec) -> CmReport {
    let witness = first_link_witness(complex, field, 0, exec);
    CmReport { verdict: witness.is_none(), field, witness, purity_ok: complex.is_pure() }
}

/// CM_t: the complex is pure and every face σ with `#σ >= t` has
/// `H̃_r(link σ) = 0` for `r < d - #σ - 1`, where `d = dim + 1`.
/// `t = 0` is Cohen-Macaulay, `t = 1` is Buchsbaum.
pub fn is_cm_t(complex: &SimplicialComplex, t: usize, field: FieldSpec) -> CmReport {
    is_cm_t_with(complex, t, field, Exec::default())
}

pub fn is_cm_t_with(complex: &SimplicialComplex, t: usize, field: FieldSpec, exec: Exec) -> CmReport {
    if !complex.is_pure() {
        return CmReport { verdict: false, field, witness: None, purity_ok: false };
    }
    let witness = first_link_witness(complex, field, t, exec);
    CmReport { verdict: witness.is_none(), field, witness, purity_ok: true }
}

pub fn is_buchsbaum(complex: &SimplicialComplex, field: FieldSpec) -> CmReport {
    is_cm_t(complex, 1, field)
}

/// Faces of size >= `min_size`, largest first, lexicographic within a size,
/// with ∅ last when `min_size == 0`.
fn faces_to_check(complex: &SimplicialComplex, min_size: usize) -> Vec<Face> {
    let mut out: Vec<Face> = complex
        .all_faces()
        .into_iter()
        .rev()
        .flatten()
        .filter(|f| f.len() >= min_size)
        .collect();
    if min_size == 0 {
        out.push(Vec::new());
    }
    out
}

fn first_link_witness(
    complex: &SimplicialComplex,
    field: FieldSpec,
    min_size: usize,
    exec: Exec,
) -> Option<Witness> {
    // For a pure complex dim link(σ) = dim Δ - #σ, so this range matches
    // both the Reisner and the CM_t bound.
    let faces = faces_to_check(complex, min_size);
    exec.find_map_first(&faces, |face| {
        let link = complex.link(face).expect("enumerated face");
        let dim = link.dimension();
        if dim <= 0 {
            return None;
        }
        reduced_betti_below(&link, field, dim as usize)
            .into_iter()
            .enumerate()
            .find(|&(_, b)| b != 0)
            .map(|(r, betti)| Witness { face: face.clone(), r, betti })
    })
}

/// For connected G, Δ_T(G) is CM exactly when `H̃_1(Δ_T(G)) = 0`.
pub fn tsc_cm_shortcut(graph: &Graph, labeling: &TotalLabeling, field: FieldSpec) -> Result<bool> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let tsc = build_tsc(graph, labeling)?;
    Ok(reduced_betti_below(&tsc, field, 2)[1] == 0)
}

pub fn vertex_links_connected(complex: &SimplicialComplex) -> bool {
    vertex_links_connected_with(complex, Exec::default())
}

pub fn vertex_links_connected_with(complex: &SimplicialComplex, exec: Exec) -> bool {
    exec.all(complex.vertices(), |&v| {
        complex.link(&[v]).expect("vertex is a face").is_facet_connected()
    })
}
