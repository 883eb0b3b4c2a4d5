use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::classifier::require_primitive;
use crate::error::Result;
use crate::exactmath::srg_eigenvalues;
use crate::graphcore::{is_strongly_regular, Graph};

/// Eigenvalues closer than this are the same eigenvalue.
pub const CLUSTER_TOL: f64 = 1e-8;
/// Distinct eigenvalues closer than this make the count unreliable.
pub const GAP_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SpectralOutcome {
    Conclusive { dim: usize, m1: usize, m2: usize, n1: usize, n2: usize },
    Inconclusive { reason: String },
}

fn spectrum(h: &Graph) -> Vec<f64> {
    let n = h.order();
    if n == 0 {
        return Vec::new();
    }
    let a = DMatrix::from_fn(n, n, |i, j| if h.has_edge(i, j) { 1.0 } else { 0.0 });
    let mut ev: Vec<f64> = SymmetricEigen::new(a).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Distinct eigenvalues other than one copy of the valency, as
/// `(in {θ, τ}, not in {θ, τ})` counts.
fn counts(h: &Graph, theta: f64, tau: f64) -> std::result::Result<(usize, usize), String> {
    let mut ev = spectrum(h);
    if let Some(val) = h.regular_degree() {
        let val = val as f64;
        if let Some(i) = ev.iter().position(|&x| (x - val).abs() <= CLUSTER_TOL) {
            ev.remove(i);
        }
    }
    let mut clusters: Vec<f64> = Vec::new();
    for x in ev {
        match clusters.last() {
            Some(&c) if x - c <= CLUSTER_TOL => {}
            Some(&c) if x - c < GAP_TOL => return Err(format!("eigenvalues {c} and {x} are {:e} apart", x - c)),
            _ => clusters.push(x),
        }
    }
    let (mut m, mut other) = (0, 0);
    for c in clusters {
        let d = (c - theta).abs().min((c - tau).abs());
        if d <= CLUSTER_TOL {
            m += 1;
        } else if d < GAP_TOL {
            return Err(format!("eigenvalue {c} is within {d:e} of θ or τ"));
        } else {
            other += 1;
        }
    }
    Ok((m, other))
}

/// `dim T = m₁ + m₂ + 4n₁ + 9` from the subconstituent spectra, where `mᵢ`
/// counts the distinct non-principal eigenvalues of `Γᵢ` among `θ, τ` and
/// `nᵢ` the others. Advisory only: floating point.
pub fn t_dim_spectral_crosscheck(g: &Graph, omega: usize) -> Result<SpectralOutcome> {
    let params = is_strongly_regular(g)?;
    require_primitive(&params)?;
    let (th, ta) = srg_eigenvalues(&params)?;
    let (theta, tau) = (th.to_f64(), ta.to_f64());
    let (g1, g2, _) = g.subconstituents(omega)?;
    let (m1, n1) = match counts(&g1, theta, tau) {
        Ok(c) => c,
        Err(reason) => return Ok(SpectralOutcome::Inconclusive { reason }),
    };
    let (m2, n2) = match counts(&g2, theta, tau) {
        Ok(c) => c,
        Err(reason) => return Ok(SpectralOutcome::Inconclusive { reason }),
    };
    Ok(SpectralOutcome::Conclusive { dim: m1 + m2 + 4 * n1 + 9, m1, m2, n1, n2 })
}
