use std::collections::BTreeSet;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{t0_report, t_report_checked, t_tilde_report, BlockReport, TOptions};
use crate::autgrp::AutomorphismGroup;
use crate::classifier::matches_t0_template;
use crate::error::{Error, Result};
use crate::graphcore::{is_strongly_regular, Graph, SrgParams};
use crate::permgroup::orbit_labels;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub t0: usize,
    pub t: usize,
    pub t_tilde: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Blocks {
    pub t0: [[usize; 3]; 3],
    pub t: [[usize; 3]; 3],
    pub t_tilde: [[usize; 3]; 3],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub transitive: bool,
    /// Rank of the group; only defined for transitive groups.
    pub rank: Option<usize>,
    pub rank3: bool,
    /// `T₀ = T` at this vertex, equivalent to triple regularity.
    pub triply_regular: bool,
    /// `None` when the input is an intransitive candidate for which no
    /// verdict is defined.
    pub triply_transitive: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    /// The group came from an interrupted search and may be too small.
    pub aut_lower_bound_only: bool,
    /// Intransitive group whose orbits are `{ω}, Δ₁, Δ₂`, with all three
    /// algebras equal at ω.
    pub case_b_candidate: bool,
    /// Primes over which `dim T` was computed.
    pub primes: [u64; 2],
    pub rational_verified: bool,
    /// The `T₀` blocks are one of the templates for the parameter case.
    pub t0_template_match: bool,
}

/// Everything computed at one base vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub params: SrgParams,
    pub omega: usize,
    pub dims: Dims,
    pub blocks: Blocks,
    pub r1: usize,
    pub r2: usize,
    pub t_offdiag: usize,
    pub verdicts: Verdicts,
    #[serde(with = "decimal")]
    pub aut_order: BigUint,
    pub flags: Flags,
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        BigUint::parse_bytes(s.as_bytes(), 10).ok_or_else(|| D::Error::custom(format!("not a decimal integer: {s:?}")))
    }
}

impl AlgebraReport {
    /// `T₀ = T = T̃` at ω.
    pub fn all_equal(&self) -> bool {
        self.dims.t0 == self.dims.t && self.dims.t == self.dims.t_tilde
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub t: TOptions,
    /// Analyze every vertex rather than one per orbit.
    pub all_vertices: bool,
}

/// Orbits of the group are exactly `{ω}`, `Δ₁`, `Δ₂`.
fn orbits_are_cells(labels: &[usize], g: &Graph, omega: usize) -> Result<bool> {
    let part = g.partition_at(omega)?;
    let cells: Vec<&Vec<usize>> = part.cells.iter().filter(|c| !c.is_empty()).collect();
    let uniform = cells.iter().all(|c| c.iter().all(|&v| labels[v] == labels[c[0]]));
    let distinct: BTreeSet<usize> = cells.iter().map(|c| labels[c[0]]).collect();
    Ok(uniform && distinct.len() == cells.len())
}

/// The report at a single base vertex.
pub fn analyze_at(g: &Graph, group: &AutomorphismGroup, omega: usize, opts: &AnalysisOptions) -> Result<AlgebraReport> {
    let params = is_strongly_regular(g)?;
    let n = g.order();
    let (transitive, rank) = group.bsgs.transitivity_rank();
    let t0: BlockReport = t0_report(g, omega)?;
    let t = t_report_checked(g, omega, &opts.t)?;
    let tt = t_tilde_report(g, &group.bsgs, omega)?;
    if !(t0.dim <= t.report.dim && t.report.dim <= tt.dim) {
        return Err(Error::InternalDisagreement(format!(
            "expected dim T0 ≤ dim T ≤ dim T~, got {} {} {}",
            t0.dim, t.report.dim, tt.dim
        )));
    }
    let dims = Dims { t0: t0.dim, t: t.report.dim, t_tilde: tt.dim };
    let equal = dims.t0 == dims.t && dims.t == dims.t_tilde;
    let labels = orbit_labels(&group.generators, n)?;
    let case_b_candidate = !transitive && equal && orbits_are_cells(&labels, g, omega)?;
    let rank3 = rank == Some(3);
    let triply_transitive = if case_b_candidate { None } else { Some(transitive && rank3 && equal) };
    Ok(AlgebraReport {
        params,
        omega,
        dims,
        blocks: Blocks { t0: t0.blocks, t: t.report.blocks, t_tilde: tt.blocks },
        r1: tt.blocks[1][1],
        r2: tt.blocks[2][2],
        t_offdiag: tt.blocks[1][2],
        verdicts: Verdicts { transitive, rank, rank3, triply_regular: dims.t0 == dims.t, triply_transitive },
        aut_order: group.bsgs.order().clone(),
        flags: Flags {
            aut_lower_bound_only: group.lower_bound,
            case_b_candidate,
            primes: t.primes,
            rational_verified: t.rational_verified,
            t0_template_match: matches_t0_template(&params, &t0.blocks),
        },
    })
}

/// Reports at ω = 0 for a transitive group, otherwise at the least vertex
/// of every orbit (every vertex with `all_vertices`).
pub fn analyze(g: &Graph, group: &AutomorphismGroup, opts: &AnalysisOptions) -> Result<Vec<AlgebraReport>> {
    let n = g.order();
    let (transitive, _) = group.bsgs.transitivity_rank();
    let reps: Vec<usize> = if opts.all_vertices {
        (0..n).collect()
    } else if transitive {
        vec![0]
    } else {
        let labels = orbit_labels(&group.generators, n)?;
        (0..n).filter(|&v| labels[v] == v).collect()
    };
    reps.par_iter().map(|&omega| analyze_at(g, group, omega, opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgrp::{automorphism_group, AutOptions, GroupSource};
    use crate::families;

    fn group(g: &Graph) -> AutomorphismGroup {
        automorphism_group(g, &AutOptions::default()).unwrap()
    }

    #[test]
    fn petersen_report() {
        let g = families::johnson(5).unwrap().complement();
        let reps = analyze(&g, &group(&g), &AnalysisOptions::default()).unwrap();
        assert_eq!(reps.len(), 1);
        let r = &reps[0];
        assert_eq!((r.dims.t0, r.dims.t, r.dims.t_tilde), (14, 15, 15));
        assert_eq!((r.r1, r.r2, r.t_offdiag), (2, 4, 2));
        assert_eq!(r.aut_order, BigUint::from(120u32));
        assert_eq!(r.verdicts.rank, Some(3));
        assert_eq!(r.verdicts.triply_transitive, Some(false));
        assert!(r.flags.t0_template_match);
    }

    #[test]
    fn json_round_trip() {
        let g = families::paley(9).unwrap();
        let r = analyze(&g, &group(&g), &AnalysisOptions::default()).unwrap().remove(0);
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"aut_order\":\"72\""));
        let back: AlgebraReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(r.verdicts.triply_transitive, Some(true));
    }

    #[test]
    fn trivial_group_gives_per_vertex_reports() {
        let g = families::cycle(5).unwrap();
        let grp = AutomorphismGroup::from_generators(5, Vec::new(), GroupSource::Import, false).unwrap();
        let reps = analyze(&g, &grp, &AnalysisOptions::default()).unwrap();
        assert_eq!(reps.len(), 5);
        for r in &reps {
            assert!(!r.verdicts.transitive);
            assert_eq!(r.verdicts.triply_transitive, Some(false));
            assert!(!r.flags.case_b_candidate);
            assert_eq!(r.dims.t_tilde, 25);
        }
    }
}
