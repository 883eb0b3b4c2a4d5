use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;

use super::{Field, MatVec, SparseMatrix, SubspaceBasis};
use crate::error::{Error, Result};

/// Default closure dimension cap as a multiple of `n`.
pub const CLOSURE_CAP_FACTOR: usize = 4;

/// The matrix algebra generated by `gens` (identity included).
///
/// Breadth-first over words: starting from `I`, every new basis element is
/// multiplied on the left by each generator. The span of all words is the
/// generated algebra, so the result equals the closure under pairwise basis
/// products while each step costs one sparse-times-dense product.
pub fn algebra_closure<F: Field>(
    f: &F,
    gens: &[SparseMatrix<F::Elem>],
    n: usize,
    cap: usize,
) -> Result<SubspaceBasis<F>> {
    if let Some(g) = gens.iter().find(|g| g.n() != n) {
        return Err(Error::DimMismatch { expected: n, found: g.n() });
    }
    let mut basis = SubspaceBasis::new(f.clone(), n * n);
    let id = MatVec::identity(f, n);
    basis.span_insert(id.as_slice())?;
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        let products: Vec<MatVec<F::Elem>> = gens.par_iter().map(|g| g.mul_dense(f, &x)).collect();
        for y in products {
            if basis.span_insert(y.as_slice())? {
                if basis.dim() > cap {
                    return Err(Error::ClosureBudgetExceeded { cap });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(basis)
}

/// Closure of dense generators; see [`algebra_closure`].
pub fn algebra_closure_dense<F: Field>(f: &F, gens: &[MatVec<F::Elem>], cap: usize) -> Result<SubspaceBasis<F>> {
    let n = gens.first().map_or(0, MatVec::n);
    let sparse: Vec<SparseMatrix<F::Elem>> = gens.iter().map(|g| SparseMatrix::from_dense(f, g)).collect();
    algebra_closure(f, &sparse, n, cap)
}

/// Checks `samples` random products of basis elements for membership.
pub fn verify_product_closed<F: Field>(basis: &SubspaceBasis<F>, n: usize, samples: usize, seed: u64) -> Result<()> {
    let f = basis.field();
    let mats = basis.matrices(n);
    let mut pairs: Vec<(usize, usize)> = (0..mats.len()).flat_map(|i| (0..mats.len()).map(move |j| (i, j))).collect();
    pairs.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    pairs.truncate(samples);
    let bad =
        pairs.par_iter().find_any(|&&(i, j)| !basis.contains(mats[i].mul(f, &mats[j]).as_slice()).unwrap_or(false));
    match bad {
        Some((i, j)) => {
            Err(Error::InternalDisagreement(format!("product of basis elements {i} and {j} leaves the span")))
        }
        None => Ok(()),
    }
}

/// Block dimensions `dim span{Eᵢ b Eⱼ : b ∈ B}` for diagonal idempotents
/// `E₀, E₁, E₂` summing to the identity.
pub fn block_dims<F: Field>(basis: &SubspaceBasis<F>, n: usize, es: &[MatVec<F::Elem>; 3]) -> Result<[[usize; 3]; 3]> {
    let f = basis.field();
    let mut supports = Vec::with_capacity(3);
    for e in es {
        supports.push(e.diagonal_support(f).ok_or(Error::NotIdempotent)?);
    }
    for v in 0..n {
        if supports.iter().filter(|s| s[v]).count() != 1 {
            return Err(Error::NotPartitionOfIdentity);
        }
    }
    let cells: Vec<Vec<usize>> = supports.iter().map(|s| (0..n).filter(|&v| s[v]).collect()).collect();
    let mut out = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let len = cells[i].len() * cells[j].len();
            let mut sub = SubspaceBasis::new(f.clone(), len);
            for b in basis.vectors() {
                let block: Vec<F::Elem> =
                    cells[i].iter().flat_map(|&r| cells[j].iter().map(move |&c| b[r * n + c].clone())).collect();
                sub.span_insert(&block)?;
            }
            out[i][j] = sub.dim();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::PrimeField;
    use crate::families;
    use crate::graphcore::Graph;
    use crate::linalg::{Approx, Exact};
    use num_rational::BigRational;

    fn terwilliger_gens<F: Field>(f: &F, g: &Graph) -> (Vec<SparseMatrix<F::Elem>>, [MatVec<F::Elem>; 3]) {
        let n = g.order();
        let labels = g.partition_at(0).unwrap().labels(n);
        let sup = |c: u8| -> Vec<bool> { labels.iter().map(|&l| l == c).collect() };
        let comp = g.complement();
        let gens = vec![
            SparseMatrix::adjacency(f, g),
            SparseMatrix::adjacency(f, &comp),
            SparseMatrix::diagonal(f, &sup(0)),
            SparseMatrix::diagonal(f, &sup(1)),
            SparseMatrix::diagonal(f, &sup(2)),
        ];
        let es = [MatVec::diagonal(f, &sup(0)), MatVec::diagonal(f, &sup(1)), MatVec::diagonal(f, &sup(2))];
        (gens, es)
    }

    #[test]
    fn identity_only() {
        let f = PrimeField::default();
        let b = algebra_closure(&f, &[], 5, 20).unwrap();
        assert_eq!(b.dim(), 1);
        let id = MatVec::identity(&f, 5);
        assert_eq!(algebra_closure_dense(&f, &[id], 20).unwrap().dim(), 1);
    }

    #[test]
    fn petersen_algebra_over_three_scalar_types() {
        let g = families::johnson(5).unwrap().complement();
        let p = PrimeField::default();
        let (gens, es) = terwilliger_gens(&p, &g);
        let b = algebra_closure(&p, &gens, 10, 40).unwrap();
        assert_eq!(b.dim(), 15);
        verify_product_closed(&b, 10, 50, 1).unwrap();
        assert_eq!(block_dims(&b, 10, &es).unwrap(), [[1, 1, 1], [1, 2, 2], [1, 2, 4]]);
        let q = Exact::<BigRational>::new();
        let (gens, _) = terwilliger_gens(&q, &g);
        assert_eq!(algebra_closure(&q, &gens, 10, 40).unwrap().dim(), 15);
        let a = Approx { eps: 1e-9 };
        let (gens, _) = terwilliger_gens(&a, &g);
        assert_eq!(algebra_closure(&a, &gens, 10, 40).unwrap().dim(), 15);
    }

    #[test]
    fn idempotent_validation() {
        let f = PrimeField::default();
        let b = algebra_closure(&f, &[], 3, 10).unwrap();
        let d = |s: [bool; 3]| MatVec::diagonal(&f, &s);
        let es = [d([true, false, false]), d([false, true, false]), d([false, false, true])];
        assert_eq!(block_dims(&b, 3, &es).unwrap(), [[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let overlap = [d([true, true, false]), d([false, true, false]), d([false, false, true])];
        assert!(matches!(block_dims(&b, 3, &overlap), Err(Error::NotPartitionOfIdentity)));
        let twice = [d([true, false, false]).scale(&f, &2), d([false, true, false]), d([false, false, true])];
        assert!(matches!(block_dims(&b, 3, &twice), Err(Error::NotIdempotent)));
    }

    #[test]
    fn budget() {
        let f = PrimeField::default();
        let g = families::cycle(7).unwrap();
        let (gens, _) = terwilliger_gens(&f, &g);
        assert!(matches!(algebra_closure(&f, &gens, 7, 3), Err(Error::ClosureBudgetExceeded { cap: 3 })));
    }
}
