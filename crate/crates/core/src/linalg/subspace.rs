use super::{Field, MatVec};
use crate::error::{Error, Result};

/// A subspace of `F^len` held in reduced row-echelon form.
#[derive(Clone, Debug)]
pub struct SubspaceBasis<F: Field> {
    field: F,
    len: usize,
    vecs: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> SubspaceBasis<F> {
    pub fn new(field: F, len: usize) -> Self {
        SubspaceBasis { field, len, vecs: Vec::new(), pivots: Vec::new() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.vecs.len()
    }

    /// Strictly increasing pivot positions, one per basis vector.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> &[Vec<F::Elem>] {
        &self.vecs
    }

    /// Basis vectors viewed as n×n matrices.
    pub fn matrices(&self, n: usize) -> Vec<MatVec<F::Elem>> {
        self.vecs.iter().map(|v| MatVec::from_vec(n, v.clone())).collect()
    }

    fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (b, &p) in self.vecs.iter().zip(&self.pivots) {
            if f.is_zero(&w[p]) {
                continue;
            }
            let c = w[p].clone();
            for (x, y) in w.iter_mut().zip(b) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        w
    }

    fn check_len(&self, v: &[F::Elem]) -> Result<()> {
        if v.len() != self.len {
            return Err(Error::DimMismatch { expected: self.len, found: v.len() });
        }
        Ok(())
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        self.check_len(v)?;
        let f = &self.field;
        Ok(self.reduce(v).iter().all(|x| f.is_zero(x)))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn span_insert(&mut self, v: &[F::Elem]) -> Result<bool> {
        self.check_len(v)?;
        let f = self.field.clone();
        let mut w = self.reduce(v);
        let Some(q) = w.iter().position(|x| !f.is_zero(x)) else { return Ok(false) };
        let inv = f.inv(&w[q]).expect("pivot is nonzero");
        for x in w.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        for b in self.vecs.iter_mut() {
            if f.is_zero(&b[q]) {
                continue;
            }
            let c = b[q].clone();
            for (x, y) in b.iter_mut().zip(&w) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(at, q);
        self.vecs.insert(at, w);
        Ok(true)
    }
}

/// Dimension of the span of `vectors`.
pub fn span_dim<F: Field>(field: F, len: usize, vectors: &[Vec<F::Elem>]) -> Result<usize> {
    let mut b = SubspaceBasis::new(field, len);
    for v in vectors {
        b.span_insert(v)?;
    }
    Ok(b.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::PrimeField;
    use crate::linalg::Exact;
    use num_rational::BigRational;
    use proptest::prelude::*;

    #[test]
    fn trivial_inserts() {
        let f = PrimeField::default();
        let mut b = SubspaceBasis::new(f, 3);
        assert!(!b.span_insert(&[0, 0, 0]).unwrap());
        assert!(b.span_insert(&[1, 0, 0]).unwrap());
        assert!(!b.span_insert(&[2, 0, 0]).unwrap());
        assert_eq!(b.dim(), 1);
        assert!(matches!(b.span_insert(&[1, 0]), Err(Error::DimMismatch { expected: 3, found: 2 })));
    }

    /// Rank by fraction-free Gaussian elimination over the integers (Bareiss).
    fn integer_rank(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let cols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        let mut prev = 1i128;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
            m.swap(rank, p);
            for i in rank + 1..m.len() {
                for j in c + 1..cols {
                    m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
                }
                m[i][c] = 0;
            }
            prev = m[rank][c];
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn echelon_invariants_and_rank(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 6), 0..8)) {
            let f = PrimeField::default();
            let mut b = SubspaceBasis::new(f, 6);
            for r in &rows {
                let v: Vec<u64> = r.iter().map(|&x| f.reduce_i64(x)).collect();
                b.span_insert(&v).unwrap();
            }
            prop_assert!(b.pivots().windows(2).all(|w| w[0] < w[1]));
            for (i, v) in b.vectors().iter().enumerate() {
                for (j, &p) in b.pivots().iter().enumerate() {
                    prop_assert_eq!(v[p], u64::from(i == j));
                }
            }
            prop_assert_eq!(b.dim(), integer_rank(&rows));
            let q = Exact::<BigRational>::new();
            let qrows: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(|&x| q.from_i64(x)).collect()).collect();
            prop_assert_eq!(span_dim(q, 6, &qrows).unwrap(), b.dim());
            for r in &rows {
                let v: Vec<u64> = r.iter().map(|&x| f.reduce_i64(x)).collect();
                prop_assert!(b.contains(&v).unwrap());
            }
        }
    }
}
