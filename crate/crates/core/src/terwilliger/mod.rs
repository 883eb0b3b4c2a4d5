//! The algebras `T₀ ⊆ T ⊆ T̃` attached to a base vertex ω of an SRG, with
//! their block dimension decompositions relative to `Δ₀, Δ₁, Δ₂`.
//!
//! `T₀` is the span of the 27 products `E*ᵢ Aⱼ E*ₖ`, `T` is generated by
//! the adjacency matrices and the `E*ᵢ`, and `T̃` is the centralizer algebra
//! of the point stabilizer `G_ω`, whose dimension is its number of orbitals.

mod report;
mod spectral;

pub use report::{analyze, analyze_at, AlgebraReport, AnalysisOptions, Blocks, Dims, Flags, Verdicts};
pub use spectral::{t_dim_spectral_crosscheck, SpectralOutcome, CLUSTER_TOL, GAP_TOL};

use serde::{Deserialize, Serialize};

use crate::classifier::intersection_numbers;
use crate::error::{Error, Result};
use crate::exactmath::{random_prime, PrimeField, DEFAULT_PRIME, SECOND_PRIME};
use crate::graphcore::{is_strongly_regular, Graph, VertexPartition};
use crate::linalg::{
    algebra_closure, block_dims, span_dim, verify_product_closed, Exact, Field, MatVec, SparseMatrix, SubspaceBasis,
    CLOSURE_CAP_FACTOR,
};
use crate::permgroup::{orbit_count, orbit_labels, orbital_count_block, GroupBsgs};
use crate::size_guard;

/// Vertex limit for the algebra closure.
pub const CLOSURE_GUARD: u64 = 1500;
/// Random basis products checked after each closure.
pub const VERIFY_SAMPLES: usize = 50;

/// The diagonal idempotents `E*₀, E*₁, E*₂` at ω.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotents {
    pub omega: usize,
    pub partition: VertexPartition,
    pub supports: [Vec<bool>; 3],
}

impl Idempotents {
    pub fn traces(&self) -> [usize; 3] {
        self.partition.cells.each_ref().map(Vec::len)
    }

    pub fn matrices<F: Field>(&self, f: &F) -> [MatVec<F::Elem>; 3] {
        self.supports.each_ref().map(|s| MatVec::diagonal(f, s))
    }
}

pub fn idempotents(g: &Graph, omega: usize) -> Result<Idempotents> {
    is_strongly_regular(g)?;
    idempotents_unchecked(g, omega)
}

fn idempotents_unchecked(g: &Graph, omega: usize) -> Result<Idempotents> {
    let n = g.order();
    let partition = g.partition_at(omega)?;
    let labels = partition.labels(n);
    let supports = [0u8, 1, 2].map(|c| labels.iter().map(|&l| l == c).collect());
    Ok(Idempotents { omega, partition, supports })
}

/// Dimension and block dimension decomposition of one algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub dim: usize,
    pub blocks: [[usize; 3]; 3],
}

fn block_sum(b: &[[usize; 3]; 3]) -> usize {
    b.iter().flatten().sum()
}

/// `T₀` over the field `f`, cross-checked against the intersection numbers.
pub fn t0_report_in<F: Field>(f: &F, g: &Graph, omega: usize) -> Result<BlockReport> {
    let params = is_strongly_regular(g)?;
    let idem = idempotents_unchecked(g, omega)?;
    let n = g.order();
    let adj = [MatVec::identity(f, n), MatVec::adjacency(f, g), MatVec::adjacency(f, &g.complement())];
    let mut products = Vec::with_capacity(27);
    for i in 0..3 {
        for a in &adj {
            for k in 0..3 {
                products.push(a.mask(f, &idem.supports[i], &idem.supports[k]).into_vec());
            }
        }
    }
    let dim = span_dim(f.clone(), n * n, &products)?;
    let mut basis = SubspaceBasis::new(f.clone(), n * n);
    for p in &products {
        basis.span_insert(p)?;
    }
    let blocks = block_dims(&basis, n, &idem.matrices(f))?;
    let oracle = intersection_numbers(&params)?;
    if dim != oracle.nonzero_count() || blocks != oracle.block_counts() {
        return Err(Error::OracleMismatch(format!(
            "T0 span has dim {dim}, blocks {blocks:?}; intersection numbers give {}, {:?}",
            oracle.nonzero_count(),
            oracle.block_counts()
        )));
    }
    Ok(BlockReport { dim, blocks })
}

pub fn t0_report(g: &Graph, omega: usize) -> Result<BlockReport> {
    t0_report_in(&PrimeField::default(), g, omega)
}

fn check_closure_guard(n: usize, limit: u64) -> Result<()> {
    if n as u64 > limit {
        return Err(Error::SizeGuardExceeded { what: "algebra closure".into(), size: n as u64, limit });
    }
    Ok(())
}

/// `T` over the field `f`: closure of `{A₁, A₂, E*₀, E*₁, E*₂}` with the
/// identity, then a sampled product check.
pub fn t_report_in<F: Field>(f: &F, g: &Graph, omega: usize, seed: u64) -> Result<BlockReport> {
    is_strongly_regular(g)?;
    let n = g.order();
    check_closure_guard(n, size_guard(CLOSURE_GUARD))?;
    let idem = idempotents_unchecked(g, omega)?;
    let mut gens = vec![SparseMatrix::adjacency(f, g), SparseMatrix::adjacency(f, &g.complement())];
    gens.extend(idem.supports.iter().map(|s| SparseMatrix::diagonal(f, s)));
    let basis = algebra_closure(f, &gens, n, CLOSURE_CAP_FACTOR * n)?;
    verify_product_closed(&basis, n, VERIFY_SAMPLES, seed)?;
    let blocks = block_dims(&basis, n, &idem.matrices(f))?;
    Ok(BlockReport { dim: basis.dim(), blocks })
}

pub fn t_report(g: &Graph, omega: usize) -> Result<BlockReport> {
    t_report_in(&PrimeField::default(), g, omega, 0)
}

/// Field choices for computing `T`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TOptions {
    /// Main prime; `None` uses the default.
    pub prime: Option<u64>,
    /// Seed for the second prime and the sampled product check; `None`
    /// uses the fixed second prime.
    pub seed: Option<u64>,
    /// Also compute over the rationals.
    pub rational: bool,
}

/// `T` with its dimension confirmed over a second prime, and over `Q` on
/// request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckedT {
    pub report: BlockReport,
    pub primes: [u64; 2],
    pub rational_verified: bool,
}

pub fn t_report_checked(g: &Graph, omega: usize, opts: &TOptions) -> Result<CheckedT> {
    let p1 = opts.prime.unwrap_or(DEFAULT_PRIME);
    let seed = opts.seed.unwrap_or(0);
    let p2 = match opts.seed {
        Some(s) => {
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(s);
            std::iter::repeat_with(|| random_prime(&mut rng)).find(|&p| p != p1).expect("infinitely many primes")
        }
        None if p1 == SECOND_PRIME => DEFAULT_PRIME,
        None => SECOND_PRIME,
    };
    let r1 = t_report_in(&PrimeField::new(p1)?, g, omega, seed)?;
    let r2 = t_report_in(&PrimeField::new(p2)?, g, omega, seed)?;
    if r1 != r2 {
        return Err(Error::PrimeDisagreement { p1, d1: r1.dim, p2, d2: r2.dim });
    }
    if opts.rational {
        let rq = t_report_in(&Exact::<num_rational::BigRational>::new(), g, omega, seed)?;
        if rq != r1 {
            return Err(Error::InternalDisagreement(format!(
                "dim T over Q is {} but {} over GF({p1})",
                rq.dim, r1.dim
            )));
        }
    }
    Ok(CheckedT { report: r1, primes: [p1, p2], rational_verified: opts.rational })
}

/// `T̃`: orbitals of `G_ω` on each `Δᵢ × Δⱼ`.
///
/// The total is cross-checked against the sum, over representatives `r`
/// of the `G_ω`-orbits, of the number of orbits of `G_ω ∩ G_r`.
pub fn t_tilde_report(g: &Graph, group: &GroupBsgs, omega: usize) -> Result<BlockReport> {
    let n = g.order();
    if group.degree() != n {
        return Err(Error::DegreeMismatch { expected: n, found: group.degree() });
    }
    let part = g.partition_at(omega)?;
    let stab = group.point_stabilizer(omega)?;
    let gens = stab.strong_generators();
    let mut blocks = [[0; 3]; 3];
    for (i, row) in blocks.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = orbital_count_block(gens, &part.cells[i], &part.cells[j])?;
        }
    }
    let labels = orbit_labels(gens, n)?;
    let mut total = 0;
    for r in (0..n).filter(|&r| labels[r] == r) {
        total += if r == omega {
            orbit_count(gens, n)?
        } else {
            orbit_count(group.two_point_stabilizer(omega, r)?.strong_generators(), n)?
        };
    }
    let dim = block_sum(&blocks);
    if dim != total {
        return Err(Error::InternalDisagreement(format!(
            "orbital blocks sum to {dim} but stabilizer orbit counts sum to {total}"
        )));
    }
    Ok(BlockReport { dim, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgrp::{automorphism_group, AutOptions};
    use crate::families;
    use crate::linalg::Approx;

    fn petersen() -> Graph {
        families::johnson(5).unwrap().complement()
    }

    #[test]
    fn traces() {
        assert_eq!(idempotents(&petersen(), 0).unwrap().traces(), [1, 3, 6]);
        assert_eq!(idempotents(&families::cycle(5).unwrap(), 0).unwrap().traces(), [1, 2, 2]);
        assert_eq!(idempotents(&families::grid(3).unwrap(), 0).unwrap().traces(), [1, 4, 4]);
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(idempotents(&path, 0), Err(Error::NotSrg { .. })));
    }

    #[test]
    fn idempotent_relations() {
        let f = PrimeField::default();
        let es = idempotents(&petersen(), 4).unwrap().matrices(&f);
        let mut sum = MatVec::zeros(&f, 10);
        for i in 0..3 {
            for j in 0..3 {
                let prod = es[i].mul(&f, &es[j]);
                if i == j {
                    assert_eq!(prod, es[i]);
                } else {
                    assert!(prod.is_zero(&f));
                }
            }
            sum = sum.add(&f, &es[i]);
        }
        assert_eq!(sum, MatVec::identity(&f, 10));
    }

    #[test]
    fn t0_examples() {
        assert_eq!(t0_report(&petersen(), 0).unwrap().dim, 14);
        assert_eq!(t0_report(&families::paley(13).unwrap(), 0).unwrap().dim, 15);
        assert_eq!(t0_report(&families::complete_multipartite(2, 3).unwrap(), 0).unwrap().dim, 11);
    }

    #[test]
    fn t_examples() {
        let r = t_report(&petersen(), 0).unwrap();
        assert_eq!(r.dim, 15);
        assert_eq!(r.blocks, [[1, 1, 1], [1, 2, 2], [1, 2, 4]]);
        for n in 3..=6 {
            assert_eq!(t_report(&families::grid(n).unwrap(), 0).unwrap().dim, 15);
        }
        assert_eq!(t_report(&families::grid(2).unwrap(), 0).unwrap().dim, 10);
    }

    #[test]
    fn t_agrees_across_fields() {
        let g = families::paley(13).unwrap();
        let a = t_report_in(&PrimeField::default(), &g, 0, 1).unwrap();
        let b = t_report_in(&Exact::<num_rational::BigRational>::new(), &g, 0, 1).unwrap();
        let c = t_report_in(&Approx::<f64> { eps: 1e-9 }, &g, 0, 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        let checked =
            t_report_checked(&g, 0, &TOptions { rational: true, seed: Some(5), ..TOptions::default() }).unwrap();
        assert_eq!(checked.report, a);
        assert!(checked.rational_verified);
        assert_ne!(checked.primes[0], checked.primes[1]);
    }

    #[test]
    fn closure_guard() {
        assert!(check_closure_guard(12, 12).is_ok());
        assert!(matches!(check_closure_guard(13, 12), Err(Error::SizeGuardExceeded { limit: 12, .. })));
    }

    #[test]
    fn t_tilde_examples() {
        let g = petersen();
        let grp = automorphism_group(&g, &AutOptions::default()).unwrap();
        let r = t_tilde_report(&g, &grp.bsgs, 0).unwrap();
        assert_eq!(r.dim, 15);
        assert_eq!(r.blocks, [[1, 1, 1], [1, 2, 2], [1, 2, 4]]);
        let g = families::complete_multipartite(3, 3).unwrap();
        let grp = automorphism_group(&g, &AutOptions::default()).unwrap();
        assert_eq!(t_tilde_report(&g, &grp.bsgs, 0).unwrap().dim, 12);
    }
}
