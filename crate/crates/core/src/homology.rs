//! Boundary matrices, ranks, Betti numbers and reduced homology.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::complex::{FVector, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{FieldSpec, SparseVec};

/// The matrix of ∂_r : C_r → C_{r-1} over the canonical (lexicographic)
/// face bases. Column j is the boundary of the j-th r-face; deleting the
/// vertex at position i carries the sign (-1)^i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub r: usize,
    pub rows: Vec<Face>,
    pub cols: Vec<Face>,
    /// Sparse columns `(row index, ±1)`, row indices increasing.
    pub columns: Vec<SparseVec>,
}

impl BoundaryMatrix {
    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        field.rank(&self.columns)
    }

    /// Plain-text triplets `r row col value`, 1-based row/col, one per line.
    pub fn to_triplets(&self) -> String {
        let mut s = String::new();
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                writeln!(s, "{} {} {} {:+}", self.r, i + 1, j + 1, v).unwrap();
            }
        }
        s
    }

    /// Dense product `self * rhs` with integer entries.
    pub fn compose(&self, rhs: &BoundaryMatrix) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; rhs.cols.len()]; self.rows.len()];
        for (j, col) in rhs.columns.iter().enumerate() {
            for &(k, b) in col {
                for &(i, a) in &self.columns[k] {
                    out[i][j] += a * b;
                }
            }
        }
        out
    }
}

pub fn boundary_matrix(complex: &SimplicialComplex, r: usize) -> Result<BoundaryMatrix> {
    let dim = complex.dimension();
    if r < 1 || r as i64 > dim {
        return Err(Error::DimensionOutOfRange { r, dim });
    }
    Ok(boundary_from_faces(r, complex.faces_of_dim(r - 1), complex.faces_of_dim(r), Exec::default()))
}

fn boundary_from_faces(r: usize, rows: Vec<Face>, cols: Vec<Face>, exec: Exec) -> BoundaryMatrix {
    let index: HashMap<&[u32], usize> = rows.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
    let columns = exec.map(&cols, |face| {
        let mut col: SparseVec = (0..face.len())
            .map(|drop| {
                let sub: Face = face
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != drop)
                    .map(|(_, &v)| v)
                    .collect();
                let sign = if drop % 2 == 0 { 1 } else { -1 };
                (index[sub.as_slice()], sign)
            })
            .collect();
        col.sort_unstable();
        col
    });
    BoundaryMatrix { r, rows, cols, columns }
}

/// Ranks and Betti numbers of a complex over one field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySummary {
    pub field: FieldSpec,
    pub alpha: FVector,
    /// `rank_im[r] = rank ∂_r`, for r = 0..=dim (∂_0 = 0).
    pub rank_im: Vec<usize>,
    /// `rank_ker[r] = α_r - rank ∂_r`.
    pub rank_ker: Vec<usize>,
    pub betti: Vec<usize>,
    pub reduced_betti: Vec<usize>,
}

pub fn homology_summary(complex: &SimplicialComplex, field: FieldSpec) -> HomologySummary {
    homology_summary_with(complex, field, Exec::default())
}

pub fn homology_summary_with(
    complex: &SimplicialComplex,
    field: FieldSpec,
    exec: Exec,
) -> HomologySummary {
    let faces = complex.all_faces_with(exec);
    let alpha = FVector(faces.iter().map(Vec::len).collect());
    let top = faces.len();
    let ranks: Vec<usize> = {
        let rs: Vec<usize> = (1..top).collect();
        exec.map(&rs, |&r| {
            boundary_from_faces(r, faces[r - 1].clone(), faces[r].clone(), Exec::Sequential)
                .rank(field)
        })
    };
    let mut rank_im = vec![0];
    rank_im.extend(ranks);
    rank_im.truncate(top);
    let rank_ker: Vec<usize> = (0..top).map(|r| alpha.0[r] - rank_im[r]).collect();
    let betti: Vec<usize> = (0..top)
        .map(|r| rank_ker[r] - rank_im.get(r + 1).copied().unwrap_or(0))
        .collect();
    let mut reduced_betti = betti.clone();
    if let Some(b0) = reduced_betti.first_mut() {
        *b0 -= 1;
    }
    HomologySummary { field, alpha, rank_im, rank_ker, betti, reduced_betti }
}

/// Reduced Betti numbers `β̃_r` for `0 <= r < upto`, computing only the
/// boundary ranks that are needed. The complex `{∅}` has all of them zero.
pub fn reduced_betti_below(complex: &SimplicialComplex, field: FieldSpec, upto: usize) -> Vec<usize> {
    let dim = complex.dimension();
    if dim < 0 || upto == 0 {
        return vec![0; upto];
    }
    let top = (upto as i64).min(dim + 1) as usize;
    // faces of dims 0..=top (rank ∂_{top} needed for β_{top-1})
    let faces: Vec<Vec<Face>> = (0..=top.min(dim as usize)).map(|k| complex.faces_of_dim(k)).collect();
    let rank = |r: usize| -> usize {
        if r == 0 || r >= faces.len() {
            0
        } else {
            boundary_from_faces(r, faces[r - 1].clone(), faces[r].clone(), Exec::Sequential)
                .rank(field)
        }
    };
    let ranks: Vec<usize> = (0..=top).map(rank).collect();
    (0..upto)
        .map(|r| {
            if r >= top {
                return 0;
            }
            let b = faces[r].len() - ranks[r] - ranks[r + 1];
            if r == 0 {
                b - 1
            } else {
                b
            }
        })
        .collect()
}

pub fn euler_characteristic(complex: &SimplicialComplex) -> i64 {
    complex
        .f_vector()
        .0
        .iter()
        .enumerate()
        .map(|(k, &a)| if k % 2 == 0 { a as i64 } else { -(a as i64) })
        .sum()
}
