//! Deterministic constructors for the graph families under study.
//!
//! Field elements are the integer indices of [`FiniteField`]; vectors over
//! GF(q) are encoded base `q`, first coordinate lowest.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{is_prime_u64, prime_power, FiniteField};
use crate::graphcore::{Graph, SrgParams};
use crate::size_guard;

/// Vertex limit for the affine (Cayley) families.
pub const AFFINE_GUARD: u64 = 1 << 14;
/// Vertex limit for Grassmann and Paley graphs.
pub const GENERAL_GUARD: u64 = 5000;
/// Vertex limit for the polar-space collinearity graph.
pub const POLAR_GUARD: u64 = 2000;

fn guard(what: impl FnOnce() -> String, size: u128, default: u64) -> Result<()> {
    let limit = size_guard(default);
    if size > limit as u128 {
        return Err(Error::SizeGuardExceeded { what: what(), size: size.min(u64::MAX as u128) as u64, limit });
    }
    Ok(())
}

fn range(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ParamRange(msg()))
    }
}

/// `n` parts of size `m`.
pub fn complete_multipartite(parts: usize, size: usize) -> Result<Graph> {
    range(parts >= 2 && size >= 1 && parts * size >= 3, || {
        format!("complete multipartite needs n ≥ 2, m ≥ 1, nm ≥ 3; got n={parts}, m={size}")
    })?;
    Ok(Graph::from_fn(parts * size, |u, v| u / size != v / size))
}

pub fn cycle(n: usize) -> Result<Graph> {
    range(n >= 3, || format!("cycle needs n ≥ 3; got {n}"))?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The n×n rook's graph; vertex `(i, j)` is `i·n + j`.
pub fn grid(n: usize) -> Result<Graph> {
    range(n >= 2, || format!("grid needs n ≥ 2; got {n}"))?;
    Ok(Graph::from_fn(n * n, |u, v| u / n == v / n || u % n == v % n))
}

/// J(n,2): 2-subsets of `{0..n}` in lexicographic order, adjacent when they meet.
pub fn johnson(n: usize) -> Result<Graph> {
    range(n >= 4, || format!("johnson needs n ≥ 4; got {n}"))?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    Ok(Graph::from_fn(pairs.len(), |i, j| {
        let (a, b) = pairs[i];
        let (c, d) = pairs[j];
        a == c || a == d || b == c || b == d
    }))
}

/// `[n choose d]_q`.
pub fn gaussian_binomial(n: u32, d: u32, q: u64) -> u128 {
    if d > n {
        return 0;
    }
    let q = q as u128;
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..d {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// Row-echelon rank of a small matrix over GF(q); consumes the rows.
fn rank(f: &FiniteField, mut rows: Vec<Vec<u32>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let inv = f.inv(rows[r][c]).expect("pivot is nonzero");
        for i in r + 1..rows.len() {
            if rows[i][c] != 0 {
                let factor = f.mul(rows[i][c], inv);
                for j in c..cols {
                    let t = f.mul(factor, rows[r][j]);
                    rows[i][j] = f.sub(rows[i][j], t);
                }
            }
        }
        r += 1;
    }
    r
}

/// J_q(n,2): lines of PG(n−1,q) as reduced-echelon 2×n matrices,
/// adjacent when they meet.
pub fn grassmann(q: u64, n: usize) -> Result<Graph> {
    let f = FiniteField::of_order(q)?;
    range(n >= 4, || format!("grassmann needs n ≥ 4; got {n}"))?;
    guard(|| format!("J_{q}({n},2)"), gaussian_binomial(n as u32, 2, q), GENERAL_GUARD)?;
    let q32 = f.order();
    let mut verts: Vec<[Vec<u32>; 2]> = Vec::new();
    for c1 in 0..n {
        for c2 in c1 + 1..n {
            let free1: Vec<usize> = (c1 + 1..n).filter(|&j| j != c2).collect();
            let free2: Vec<usize> = (c2 + 1..n).collect();
            let slots = free1.len() + free2.len();
            let total = (q32 as u64).pow(slots as u32);
            for idx in 0..total {
                let mut r1 = vec![0; n];
                let mut r2 = vec![0; n];
                r1[c1] = 1;
                r2[c2] = 1;
                let mut x = idx;
                for &j in free1.iter() {
                    r1[j] = (x % q32 as u64) as u32;
                    x /= q32 as u64;
                }
                for &j in free2.iter() {
                    r2[j] = (x % q32 as u64) as u32;
                    x /= q32 as u64;
                }
                verts.push([r1, r2]);
            }
        }
    }
    Ok(Graph::from_fn(verts.len(), |a, b| {
        let rows = vec![verts[a][0].clone(), verts[a][1].clone(), verts[b][0].clone(), verts[b][1].clone()];
        rank(&f, rows) == 3
    }))
}

/// GF(q)^dim with base-q index encoding.
struct VectorSpace {
    f: FiniteField,
    dim: usize,
    size: usize,
}

impl VectorSpace {
    fn new(f: FiniteField, dim: usize) -> Self {
        let size = (f.order() as usize).pow(dim as u32);
        VectorSpace { f, dim, size }
    }

    fn coords(&self, mut idx: usize) -> Vec<u32> {
        let q = self.f.order() as usize;
        (0..self.dim)
            .map(|_| {
                let c = (idx % q) as u32;
                idx /= q;
                c
            })
            .collect()
    }

    fn add(&self, a: usize, b: usize) -> usize {
        if self.f.characteristic() == 2 {
            return a ^ b;
        }
        let q = self.f.order() as usize;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.dim {
            out += self.f.add((a % q) as u32, (b % q) as u32) as usize * place;
            a /= q;
            b /= q;
            place *= q;
        }
        out
    }

    /// Cayley graph on `(GF(q)^dim, +)` for a symmetric connection set.
    fn cayley(&self, connection: &[usize]) -> Graph {
        let mut edges = Vec::with_capacity(self.size * connection.len() / 2);
        for x in 0..self.size {
            for &s in connection {
                let y = self.add(x, s);
                if x < y {
                    edges.push((x, y));
                }
            }
        }
        Graph::from_edges(self.size, edges).expect("connection set excludes 0")
    }
}

/// Paley graph P(q), q ≡ 1 (mod 4).
pub fn paley(q: u64) -> Result<Graph> {
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if q % 4 != 1 {
        return Err(Error::BadCongruence(format!("Paley graph needs q ≡ 1 (mod 4); got {q}")));
    }
    guard(|| format!("P({q})"), q as u128, GENERAL_GUARD)?;
    let space = VectorSpace::new(FiniteField::of_order(q)?, 1);
    let squares: Vec<usize> = (1..q as u32).filter(|&a| space.f.is_square(a)).map(|a| a as usize).collect();
    Ok(space.cayley(&squares))
}

/// Peisert graph P*(p^{2t}): connection set ⟨ω⁴⟩ ∪ ω⟨ω⁴⟩ for the primitive element ω.
pub fn peisert(p: u64, t: u32) -> Result<Graph> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 3 {
        return Err(Error::BadCongruence(format!("Peisert graph needs p ≡ 3 (mod 4); got {p}")));
    }
    range(t >= 1, || "Peisert graph needs t ≥ 1".into())?;
    let q = (p as u128).checked_pow(2 * t).unwrap_or(u128::MAX);
    guard(|| format!("P*({p}^{})", 2 * t), q, AFFINE_GUARD)?;
    let space = VectorSpace::new(FiniteField::new(p, 2 * t)?, 1);
    let conn: Vec<usize> =
        (1..q as u32).filter(|&a| space.f.log(a).is_some_and(|l| l % 4 <= 1)).map(|a| a as usize).collect();
    Ok(space.cayley(&conn))
}

/// Least `a` with `t² + t + a` root-free over `f`.
fn anisotropic_coefficient(f: &FiniteField) -> u32 {
    f.elements()
        .find(|&a| f.elements().all(|t| f.add(f.add(f.mul(t, t), t), a) != 0))
        .expect("every finite field has an anisotropic binary form")
}

/// Quadratic form `x₁x₂ + … (+ N(x_{2m−1}, x_{2m}) when ε = −1)`.
struct QuadraticForm {
    eps: i8,
    a: u32,
}

impl QuadraticForm {
    fn new(f: &FiniteField, eps: i8) -> Self {
        QuadraticForm { eps, a: if eps < 0 { anisotropic_coefficient(f) } else { 0 } }
    }

    fn eval(&self, f: &FiniteField, x: &[u32]) -> u32 {
        let pairs = x.len() / 2;
        let mut acc = 0;
        for i in 0..pairs {
            let (u, v) = (x[2 * i], x[2 * i + 1]);
            let term = if self.eps < 0 && i == pairs - 1 {
                f.add(f.add(f.mul(u, u), f.mul(u, v)), f.mul(self.a, f.mul(v, v)))
            } else {
                f.mul(u, v)
            };
            acc = f.add(acc, term);
        }
        acc
    }
}

/// VO^ε_{2m}(q): vectors of GF(q)^{2m}, adjacent when their difference is singular.
pub fn affine_polar(eps: i8, m: usize, q: u64) -> Result<Graph> {
    range(eps == 1 || eps == -1, || format!("ε must be ±1; got {eps}"))?;
    range(m >= 1, || "affine polar graph needs m ≥ 1".into())?;
    range(!(eps < 0 && m == 1), || "VO⁻₂(q) is edgeless".into())?;
    let f = FiniteField::of_order(q)?;
    let n = (q as u128).checked_pow(2 * m as u32).unwrap_or(u128::MAX);
    guard(|| format!("VO^{}_{}({q})", if eps > 0 { "+" } else { "-" }, 2 * m), n, AFFINE_GUARD)?;
    let form = QuadraticForm::new(&f, eps);
    let space = VectorSpace::new(f, 2 * m);
    let conn: Vec<usize> = (1..space.size).filter(|&v| form.eval(&space.f, &space.coords(v)) == 0).collect();
    Ok(space.cayley(&conn))
}

/// Collinearity graph of the polar space O⁻₆(q): singular projective points,
/// adjacent when orthogonal.
pub fn o6_minus_collinearity(q: u64) -> Result<Graph> {
    let f = FiniteField::of_order(q)?;
    guard(|| format!("O6-({q})"), (q as u128 + 1) * (q as u128).pow(3).saturating_add(1), POLAR_GUARD)?;
    let form = QuadraticForm::new(&f, -1);
    let space = VectorSpace::new(f, 6);
    let points: Vec<Vec<u32>> = (1..space.size)
        .map(|v| space.coords(v))
        .filter(|x| x.iter().find(|&&c| c != 0) == Some(&1))
        .filter(|x| form.eval(&space.f, x) == 0)
        .collect();
    let f = &space.f;
    Ok(Graph::from_fn(points.len(), |a, b| {
        let sum: Vec<u32> = points[a].iter().zip(&points[b]).map(|(&x, &y)| f.add(x, y)).collect();
        // both points are singular, so B(x,y) = Q(x+y)
        form.eval(f, &sum) == 0
    }))
}

/// H_q(2,e): 2×e matrices (row-major coordinates), adjacent when the
/// difference has rank 1.
pub fn bilinear_forms(q: u64, e: usize) -> Result<Graph> {
    range(e >= 2, || format!("bilinear forms graph needs e ≥ 2; got {e}"))?;
    let f = FiniteField::of_order(q)?;
    let n = (q as u128).checked_pow(2 * e as u32).unwrap_or(u128::MAX);
    guard(|| format!("H_{q}(2,{e})"), n, AFFINE_GUARD)?;
    let space = VectorSpace::new(f, 2 * e);
    let f = &space.f;
    let conn: Vec<usize> = (1..space.size)
        .filter(|&v| {
            let x = space.coords(v);
            let (r1, r2) = x.split_at(e);
            (0..e).all(|i| (i + 1..e).all(|j| f.mul(r1[i], r2[j]) == f.mul(r1[j], r2[i])))
        })
        .collect();
    Ok(space.cayley(&conn))
}

/// A buildable family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    Multipartite { parts: usize, size: usize },
    Cycle { n: usize },
    Grid { n: usize },
    Johnson { n: usize },
    Grassmann { q: u64, n: usize },
    Paley { q: u64 },
    Peisert { p: u64, t: u32 },
    Vo { eps: i8, m: usize, q: u64 },
    O6minus { q: u64 },
    Bilinear { q: u64, e: usize },
}

impl FamilySpec {
    pub const TAGS: [&'static str; 10] =
        ["multipartite", "cycle", "grid", "johnson", "grassmann", "paley", "peisert", "vo", "o6minus", "bilinear"];

    /// Parses a family tag and its integer arguments, e.g. `("vo", [-1, 2, 2])`.
    pub fn parse(tag: &str, args: &[i64]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            range(args.len() == k, || format!("{tag} takes {k} parameter(s), got {}", args.len()))
        };
        let nonneg = |i: usize| -> Result<u64> {
            u64::try_from(args[i]).map_err(|_| Error::ParamRange(format!("{tag}: parameter {} must be ≥ 0", i + 1)))
        };
        let spec = match tag {
            "multipartite" => {
                want(2)?;
                FamilySpec::Multipartite { parts: nonneg(0)? as usize, size: nonneg(1)? as usize }
            }
            "cycle" => {
                want(1)?;
                FamilySpec::Cycle { n: nonneg(0)? as usize }
            }
            "grid" => {
                want(1)?;
                FamilySpec::Grid { n: nonneg(0)? as usize }
            }
            "johnson" => {
                want(1)?;
                FamilySpec::Johnson { n: nonneg(0)? as usize }
            }
            "grassmann" => {
                want(2)?;
                FamilySpec::Grassmann { q: nonneg(0)?, n: nonneg(1)? as usize }
            }
            "paley" => {
                want(1)?;
                FamilySpec::Paley { q: nonneg(0)? }
            }
            "peisert" => {
                want(2)?;
                FamilySpec::Peisert { p: nonneg(0)?, t: nonneg(1)?.min(u32::MAX as u64) as u32 }
            }
            "vo" => {
                want(3)?;
                let eps = match args[0] {
                    1 => 1,
                    -1 => -1,
                    e => return Err(Error::ParamRange(format!("vo: ε must be ±1; got {e}"))),
                };
                FamilySpec::Vo { eps, m: nonneg(1)? as usize, q: nonneg(2)? }
            }
            "o6minus" => {
                want(1)?;
                FamilySpec::O6minus { q: nonneg(0)? }
            }
            "bilinear" => {
                want(2)?;
                FamilySpec::Bilinear { q: nonneg(0)?, e: nonneg(1)? as usize }
            }
            other => {
                return Err(Error::ParamRange(format!(
                    "unknown family {other:?}; expected one of {}",
                    Self::TAGS.join(", ")
                )))
            }
        };
        Ok(spec)
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Multipartite { parts, size } => complete_multipartite(parts, size),
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::Grid { n } => grid(n),
            FamilySpec::Johnson { n } => johnson(n),
            FamilySpec::Grassmann { q, n } => grassmann(q, n),
            FamilySpec::Paley { q } => paley(q),
            FamilySpec::Peisert { p, t } => peisert(p, t),
            FamilySpec::Vo { eps, m, q } => affine_polar(eps, m, q),
            FamilySpec::O6minus { q } => o6_minus_collinearity(q),
            FamilySpec::Bilinear { q, e } => bilinear_forms(q, e),
        }
    }

    /// Closed-form SRG parameters, or `None` when the member is not an SRG
    /// (complete graphs, cycles other than C₄ and C₅).
    pub fn expected_params(&self) -> Option<SrgParams> {
        let p = |n: u128, k: u128, l: i128, m: u128| {
            SrgParams::new(n as u64, k as u64, u64::try_from(l).ok()?, m as u64).ok()
        };
        match *self {
            FamilySpec::Multipartite { parts, size } => {
                if size < 2 {
                    return None;
                }
                let (n, m) = (parts as u128, size as u128);
                p(n * m, (n - 1) * m, ((n - 2) * m) as i128, (n - 1) * m)
            }
            FamilySpec::Cycle { n: 4 } => p(4, 2, 0, 2),
            FamilySpec::Cycle { n: 5 } => p(5, 2, 0, 1),
            FamilySpec::Cycle { .. } => None,
            FamilySpec::Grid { n } => {
                let n = n as u128;
                p(n * n, 2 * (n - 1), n as i128 - 2, 2)
            }
            FamilySpec::Johnson { n } => {
                let n = n as u128;
                p(n * (n - 1) / 2, 2 * (n - 2), n as i128 - 2, 4)
            }
            FamilySpec::Grassmann { q, n } => {
                let g1 = gaussian_binomial(n as u32 - 1, 1, q);
                let q = q as u128;
                p(
                    gaussian_binomial(n as u32, 2, q as u64),
                    (q + 1) * (g1 - 1),
                    (g1 + q * q - 2) as i128,
                    (q + 1) * (q + 1),
                )
            }
            FamilySpec::Paley { .. } | FamilySpec::Peisert { .. } => {
                let q = match *self {
                    FamilySpec::Paley { q } => q as u128,
                    FamilySpec::Peisert { p, t } => (p as u128).pow(2 * t),
                    _ => unreachable!(),
                };
                p(q, (q - 1) / 2, (q as i128 - 5) / 4, (q - 1) / 4)
            }
            FamilySpec::Vo { eps, m, q } => {
                let (e, q, m) = (eps as i128, q as i128, m as u32);
                if eps < 0 && m == 1 {
                    return None;
                }
                let lambda = if m == 1 { q - 2 } else { q * (q.pow(m - 1) - e) * (q.pow(m - 2) + e) + q - 2 };
                let k = (q.pow(m) - e) * (q.pow(m - 1) + e);
                let mu = q.pow(m - 1) * (q.pow(m - 1) + e);
                p(q.pow(2 * m) as u128, k as u128, lambda, mu as u128)
            }
            FamilySpec::O6minus { q } => {
                let q = q as u128;
                p((q + 1) * (q * q * q + 1), q * (q * q + 1), q as i128 - 1, q * q + 1)
            }
            FamilySpec::Bilinear { q, e } => {
                let q = q as u128;
                let qe = q.pow(e as u32);
                p(qe * qe, (q + 1) * (qe - 1), (qe + (q - 2) * (q + 1)) as i128, q * (q + 1))
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Multipartite { parts, size } => write!(f, "multipartite({parts},{size})"),
            FamilySpec::Cycle { n } => write!(f, "cycle({n})"),
            FamilySpec::Grid { n } => write!(f, "grid({n})"),
            FamilySpec::Johnson { n } => write!(f, "johnson({n})"),
            FamilySpec::Grassmann { q, n } => write!(f, "grassmann({q},{n})"),
            FamilySpec::Paley { q } => write!(f, "paley({q})"),
            FamilySpec::Peisert { p, t } => write!(f, "peisert({p},{t})"),
            FamilySpec::Vo { eps, m, q } => write!(f, "vo({eps},{m},{q})"),
            FamilySpec::O6minus { q } => write!(f, "o6minus({q})"),
            FamilySpec::Bilinear { q, e } => write!(f, "bilinear({q},{e})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::is_strongly_regular;

    fn params(g: &Graph) -> (u64, u64, u64, u64) {
        is_strongly_regular(g).unwrap().as_tuple()
    }

    #[test]
    fn multipartite() {
        assert_eq!(params(&complete_multipartite(2, 3).unwrap()), (6, 3, 0, 3));
        assert_eq!(params(&complete_multipartite(3, 2).unwrap()), (6, 4, 2, 4));
        assert!(is_strongly_regular(&complete_multipartite(3, 1).unwrap()).is_err());
        assert!(complete_multipartite(1, 3).is_err());
        assert!(complete_multipartite(2, 1).is_err());
    }

    #[test]
    fn cycles() {
        assert_eq!(params(&cycle(5).unwrap()), (5, 2, 0, 1));
        assert_eq!(params(&cycle(4).unwrap()), (4, 2, 0, 2));
        assert!(is_strongly_regular(&cycle(6).unwrap()).is_err());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn grids_and_johnson() {
        assert_eq!(params(&grid(2).unwrap()), (4, 2, 0, 2));
        assert_eq!(params(&grid(3).unwrap()), (9, 4, 1, 2));
        assert_eq!(params(&grid(4).unwrap()), (16, 6, 2, 2));
        assert_eq!(params(&johnson(4).unwrap()), (6, 4, 2, 4));
        assert_eq!(params(&johnson(5).unwrap()), (10, 6, 3, 4));
        assert_eq!(params(&johnson(5).unwrap().complement()), (10, 3, 0, 1));
        assert_eq!(params(&johnson(6).unwrap()), (15, 8, 4, 4));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
        assert_eq!(gaussian_binomial(5, 2, 2), 155);
        assert_eq!(gaussian_binomial(3, 1, 3), 13);
        // q = 1 limit is unavailable, so cross-check the Pascal-type recurrence
        for n in 2..8 {
            for d in 1..n {
                let lhs = gaussian_binomial(n, d, 3);
                let rhs = gaussian_binomial(n - 1, d - 1, 3) + 3u128.pow(d) * gaussian_binomial(n - 1, d, 3);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn grassmann_graphs() {
        assert_eq!(params(&grassmann(2, 4).unwrap()), (35, 18, 9, 9));
        let g = grassmann(3, 4).unwrap();
        assert_eq!(g.order(), 130);
        assert_eq!(g.regular_degree(), Some(48));
        assert_eq!(grassmann(2, 5).unwrap().order(), 155);
        assert!(matches!(grassmann(6, 4), Err(Error::NotPrimePower(6))));
        assert!(grassmann(2, 3).is_err());
    }

    #[test]
    fn paley_graphs() {
        assert_eq!(params(&paley(5).unwrap()), (5, 2, 0, 1));
        assert_eq!(params(&paley(9).unwrap()), (9, 4, 1, 2));
        assert_eq!(params(&paley(13).unwrap()), (13, 6, 2, 3));
        assert!(matches!(paley(7), Err(Error::BadCongruence(_))));
        assert!(matches!(paley(21), Err(Error::NotPrimePower(21))));
    }

    #[test]
    fn peisert_graphs() {
        assert_eq!(params(&peisert(3, 1).unwrap()), (9, 4, 1, 2));
        assert_eq!(params(&peisert(7, 1).unwrap()), (49, 24, 11, 12));
        assert_eq!(params(&peisert(3, 2).unwrap()), (81, 40, 19, 20));
        assert!(matches!(peisert(5, 1), Err(Error::BadCongruence(_))));
        assert!(matches!(peisert(19, 2), Err(Error::SizeGuardExceeded { .. })));
    }

    #[test]
    fn affine_polar_graphs() {
        assert_eq!(params(&affine_polar(-1, 2, 2).unwrap()), (16, 5, 0, 2));
        assert_eq!(params(&affine_polar(-1, 3, 2).unwrap()), (64, 27, 10, 12));
        assert_eq!(params(&affine_polar(1, 2, 2).unwrap()), (16, 9, 4, 6));
        for q in [2, 3, 4, 5] {
            assert_eq!(params(&affine_polar(1, 1, q).unwrap()), params(&grid(q as usize).unwrap()));
        }
        assert!(affine_polar(-1, 1, 3).is_err());
        assert!(matches!(affine_polar(1, 8, 2), Err(Error::SizeGuardExceeded { .. })));
    }

    #[test]
    fn anisotropic_forms() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = FiniteField::of_order(q).unwrap();
            let a = anisotropic_coefficient(&f);
            let form = QuadraticForm { eps: -1, a };
            for x in 0..q as u32 {
                for y in 0..q as u32 {
                    assert_eq!(form.eval(&f, &[x, y]) == 0, x == 0 && y == 0);
                }
            }
        }
    }

    #[test]
    fn polar_graphs() {
        assert_eq!(params(&o6_minus_collinearity(2).unwrap()), (27, 10, 1, 5));
        assert_eq!(o6_minus_collinearity(3).unwrap().order(), 112);
    }

    #[test]
    fn bilinear_graphs() {
        assert_eq!(params(&bilinear_forms(2, 2).unwrap()), (16, 9, 4, 6));
        assert_eq!(params(&bilinear_forms(2, 3).unwrap()), (64, 21, 8, 6));
        assert_eq!(params(&bilinear_forms(3, 2).unwrap()), (81, 32, 13, 12));
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(FamilySpec::parse("vo", &[-1, 2, 2]).unwrap(), FamilySpec::Vo { eps: -1, m: 2, q: 2 });
        assert!(FamilySpec::parse("vo", &[0, 2, 2]).is_err());
        assert!(FamilySpec::parse("paley", &[5, 1]).is_err());
        assert!(FamilySpec::parse("hoffman", &[]).is_err());
        assert_eq!(FamilySpec::parse("grid", &[3]).unwrap().to_string(), "grid(3)");
    }

    /// Every buildable member small enough for CI matches its closed form, and
    /// its subconstituents are λ- and (k−μ)-regular.
    #[test]
    fn closed_forms_and_subconstituent_regularity() {
        let mut specs = Vec::new();
        for parts in 2..6 {
            for size in (1..5).filter(|&s| parts * s >= 3) {
                specs.push(FamilySpec::Multipartite { parts, size });
            }
        }
        specs.extend((3..9).map(|n| FamilySpec::Cycle { n }));
        specs.extend((2..8).map(|n| FamilySpec::Grid { n }));
        specs.extend((4..10).map(|n| FamilySpec::Johnson { n }));
        specs.extend([(2, 4), (3, 4), (2, 5), (4, 4)].map(|(q, n)| FamilySpec::Grassmann { q, n }));
        specs.extend(
            [5, 9, 13, 17, 25, 29, 37, 41, 49, 53, 61, 73, 81, 89, 97, 101, 109, 113, 121, 125]
                .map(|q| FamilySpec::Paley { q }),
        );
        specs.extend([(3, 1), (7, 1), (3, 2), (11, 1), (19, 1)].map(|(p, t)| FamilySpec::Peisert { p, t }));
        for (eps, m, q) in [
            (1, 1, 2),
            (1, 1, 7),
            (1, 2, 2),
            (-1, 2, 2),
            (1, 3, 2),
            (-1, 3, 2),
            (1, 2, 3),
            (-1, 2, 3),
            (1, 2, 4),
            (-1, 2, 4),
            (1, 2, 5),
            (-1, 2, 5),
        ] {
            specs.push(FamilySpec::Vo { eps, m, q });
        }
        specs.extend([2, 3].map(|q| FamilySpec::O6minus { q }));
        specs.extend([(2, 2), (2, 3), (3, 2), (2, 4), (4, 2)].map(|(q, e)| FamilySpec::Bilinear { q, e }));

        for spec in specs {
            let g = spec.build().unwrap();
            let got = is_strongly_regular(&g).ok();
            assert_eq!(got, spec.expected_params(), "{spec}");
            let Some(p) = got else { continue };
            let (g1, g2, _) = g.subconstituents(0).unwrap();
            assert_eq!(g1.regular_degree(), Some(p.lambda as usize), "{spec} Γ₁");
            assert_eq!(g2.regular_degree(), Some((p.k - p.mu) as usize), "{spec} Γ₂");
        }
    }

    #[test]
    fn affine_polar_latin_square_forms() {
        // VO^ε_{2m}(2) parameters are Latin-square type for ε = +1 and
        // negative-Latin-square type for ε = −1
        for m in 1..=4usize {
            for eps in [1i8, -1] {
                let Some(p) = (FamilySpec::Vo { eps, m, q: 2 }).expected_params() else { continue };
                let n = 1u64 << m;
                assert_eq!(p.n, n * n);
                if eps > 0 {
                    let mm = n / 2 + 1;
                    assert_eq!((p.k, p.lambda, p.mu), (mm * (n - 1), (mm - 1) * (mm - 2) + n - 2, mm * (mm - 1)));
                } else {
                    let mm = n / 2 - 1;
                    assert_eq!((p.k, p.lambda + n, p.mu), (mm * (n + 1), mm * (mm + 3), mm * (mm + 1)));
                }
            }
        }
    }
}
