use super::Field;
use crate::graphcore::Graph;

/// An n×n matrix flattened row-major into a length-n² vector.
///
/// Storage is dense; products skip zero entries of the left factor, which
/// keeps the 0/1 and block-structured matrices met here cheap.
#[derive(Clone, Debug, PartialEq)]
pub struct MatVec<E> {
    n: usize,
    data: Vec<E>,
}

impl<E: Clone + PartialEq> MatVec<E> {
    pub fn zeros<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        MatVec { n, data: vec![f.zero(); n * n] }
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Self::diagonal(f, &vec![true; n])
    }

    /// Diagonal 0/1 matrix with the given support.
    pub fn diagonal<F: Field<Elem = E>>(f: &F, support: &[bool]) -> Self {
        let n = support.len();
        let mut m = Self::zeros(f, n);
        for (i, &s) in support.iter().enumerate() {
            if s {
                m.data[i * n + i] = f.one();
            }
        }
        m
    }

    pub fn adjacency<F: Field<Elem = E>>(f: &F, g: &Graph) -> Self {
        let n = g.order();
        let mut m = Self::zeros(f, n);
        for (u, v) in g.edges() {
            m.data[u * n + v] = f.one();
            m.data[v * n + u] = f.one();
        }
        m
    }

    pub fn from_fn<F: Field<Elem = E>>(f: &F, n: usize, mut entry: impl FnMut(usize, usize) -> i64) -> Self {
        let data = (0..n * n).map(|k| f.from_i64(entry(k / n, k % n))).collect();
        MatVec { n, data }
    }

    pub fn from_vec(n: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), n * n, "matrix data must have n² entries");
        MatVec { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[E] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<E> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        MatVec { n: self.n, data }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        MatVec { n: self.n, data: self.data.iter().map(|a| f.mul(a, c)).collect() }
    }

    /// Matrix product `self · other`.
    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(f, n);
        for i in 0..n {
            let row = &mut out.data[i * n..(i + 1) * n];
            for k in 0..n {
                let a = &self.data[i * n + k];
                if f.is_zero(a) {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (c, b) in row.iter_mut().zip(brow) {
                    if !f.is_zero(b) {
                        *c = f.add(c, &f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    /// `D · self · D'` for 0/1 diagonals given by their supports: zero out
    /// rows outside `rows` and columns outside `cols`.
    pub fn mask<F: Field<Elem = E>>(&self, f: &F, rows: &[bool], cols: &[bool]) -> Self {
        let n = self.n;
        let data =
            (0..n * n).map(|k| if rows[k / n] && cols[k % n] { self.data[k].clone() } else { f.zero() }).collect();
        MatVec { n, data }
    }

    /// Support of the diagonal if the matrix is a diagonal 0/1 matrix.
    pub fn diagonal_support<F: Field<Elem = E>>(&self, f: &F) -> Option<Vec<bool>> {
        let n = self.n;
        let one = f.one();
        let mut support = vec![false; n];
        for i in 0..n {
            for j in 0..n {
                let x = &self.data[i * n + j];
                if i == j {
                    if *x == one {
                        support[i] = true;
                    } else if !f.is_zero(x) {
                        return None;
                    }
                } else if !f.is_zero(x) {
                    return None;
                }
            }
        }
        Some(support)
    }
}

/// Row-sparse matrix used as a left multiplier during closure.
#[derive(Clone, Debug)]
pub struct SparseMatrix<E> {
    n: usize,
    rows: Vec<Vec<(u32, E)>>,
}

impl<E: Clone + PartialEq> SparseMatrix<E> {
    pub fn from_dense<F: Field<Elem = E>>(f: &F, m: &MatVec<E>) -> Self {
        let n = m.n();
        let rows = (0..n)
            .map(|i| (0..n).filter(|&j| !f.is_zero(m.get(i, j))).map(|j| (j as u32, m.get(i, j).clone())).collect())
            .collect();
        SparseMatrix { n, rows }
    }

    pub fn adjacency<F: Field<Elem = E>>(f: &F, g: &Graph) -> Self {
        let rows = (0..g.order()).map(|u| g.neighbors(u).iter().map(|&v| (v, f.one())).collect()).collect();
        SparseMatrix { n: g.order(), rows }
    }

    pub fn diagonal<F: Field<Elem = E>>(f: &F, support: &[bool]) -> Self {
        let rows =
            support.iter().enumerate().map(|(i, &s)| if s { vec![(i as u32, f.one())] } else { vec![] }).collect();
        SparseMatrix { n: support.len(), rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_dense<F: Field<Elem = E>>(&self, f: &F) -> MatVec<E> {
        let mut m = MatVec::zeros(f, self.n);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                m.set(i, *j as usize, v.clone());
            }
        }
        m
    }

    /// `self · x`.
    pub fn mul_dense<F: Field<Elem = E>>(&self, f: &F, x: &MatVec<E>) -> MatVec<E> {
        let n = self.n;
        let mut out = MatVec::zeros(f, n);
        let xs = x.as_slice();
        for (i, row) in self.rows.iter().enumerate() {
            let orow = &mut out.data[i * n..(i + 1) * n];
            for (k, a) in row {
                let k = *k as usize;
                let xrow = &xs[k * n..(k + 1) * n];
                let unit = *a == f.one();
                for (c, b) in orow.iter_mut().zip(xrow) {
                    if f.is_zero(b) {
                        continue;
                    }
                    *c = if unit { f.add(c, b) } else { f.add(c, &f.mul(a, b)) };
                }
            }
        }
        out
    }
}
