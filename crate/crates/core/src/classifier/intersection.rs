use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphcore::SrgParams;

/// The 27 intersection numbers `pᵢⱼᵏ` of the rank-3 scheme of an SRG.
/// Relation 0 is equality, 1 adjacency, 2 non-adjacency.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionNumbers {
    pub params: SrgParams,
    /// Indexed `[i][j][k]`.
    pub p: [[[u64; 3]; 3]; 3],
}

pub fn intersection_numbers(params: &SrgParams) -> Result<IntersectionNumbers> {
    params.validate()?;
    let (n, k, l, m) = (params.n as i64, params.k as i64, params.lambda as i64, params.mu as i64);
    let mut p = [[[0i64; 3]; 3]; 3];
    p[0][0][0] = 1;
    p[1][1][0] = k;
    p[2][2][0] = n - k - 1;

    p[0][1][1] = 1;
    p[1][0][1] = 1;
    p[1][1][1] = l;
    p[1][2][1] = k - l - 1;
    p[2][1][1] = k - l - 1;
    p[2][2][1] = n - 2 * k + l;

    p[0][2][2] = 1;
    p[2][0][2] = 1;
    p[1][1][2] = m;
    p[1][2][2] = k - m;
    p[2][1][2] = k - m;
    p[2][2][2] = n - 2 * k + m - 2;

    let mut out = [[[0u64; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for kk in 0..3 {
                out[i][j][kk] =
                    u64::try_from(p[i][j][kk]).map_err(|_| Error::InconsistentParams { n, k, lambda: l, mu: m })?;
            }
        }
    }
    Ok(IntersectionNumbers { params: *params, p: out })
}

impl IntersectionNumbers {
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.p[i][j][k]
    }

    pub fn nonzero_count(&self) -> usize {
        self.p.iter().flatten().flatten().filter(|&&x| x != 0).count()
    }

    /// Entry `(i, k)` counts the `j` with `pᵢⱼᵏ ≠ 0`; this is the block
    /// dimension of `E*ᵢ T₀ E*ₖ`.
    pub fn block_counts(&self) -> [[usize; 3]; 3] {
        let mut out = [[0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (k, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).filter(|&j| self.p[i][j][k] != 0).count();
            }
        }
        out
    }
}

/// Which of the four structural cases a parameter set falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum T0Case {
    Imprimitive,
    BothTriangleFree,
    OneTriangleFree,
    BothHaveTriangles,
}

pub fn t0_case(params: &SrgParams) -> T0Case {
    if !params.is_primitive() {
        return T0Case::Imprimitive;
    }
    let free = params.lambda == 0;
    let comp_free = params.complement().lambda == 0;
    match (free, comp_free) {
        (true, true) => T0Case::BothTriangleFree,
        (false, false) => T0Case::BothHaveTriangles,
        _ => T0Case::OneTriangleFree,
    }
}

/// The block matrices listed for each case, in the `Δ₁, Δ₂` order.
pub fn t0_templates(case: T0Case) -> Vec<[[usize; 3]; 3]> {
    match case {
        T0Case::Imprimitive => vec![[[1, 1, 1], [1, 2, 1], [1, 1, 3]], [[1, 1, 1], [1, 2, 1], [1, 1, 2]]],
        T0Case::BothTriangleFree => vec![[[1, 1, 1], [1, 2, 2], [1, 2, 2]]],
        T0Case::OneTriangleFree => vec![[[1, 1, 1], [1, 2, 2], [1, 2, 3]], [[1, 1, 1], [1, 3, 2], [1, 2, 2]]],
        T0Case::BothHaveTriangles => vec![[[1, 1, 1], [1, 3, 2], [1, 2, 3]]],
    }
}

/// Exchanges the roles of `Δ₁` and `Δ₂`.
pub fn swap_cells(b: &[[usize; 3]; 3]) -> [[usize; 3]; 3] {
    let s = [0, 2, 1];
    let mut out = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = b[s[i]][s[j]];
        }
    }
    out
}

/// Whether `blocks` is one of the case templates, allowing `Δ₁ ↔ Δ₂`
/// (passing to the complement).
pub fn matches_t0_template(params: &SrgParams, blocks: &[[usize; 3]; 3]) -> bool {
    let swapped = swap_cells(blocks);
    t0_templates(t0_case(params)).iter().any(|t| t == blocks || *t == swapped)
}
