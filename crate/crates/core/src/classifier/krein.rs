use crate::error::{Error, Result};
use crate::exactmath::{srg_eigenvalues, QuadExt};
use crate::graphcore::SrgParams;

/// Krein parameters `q₁₁¹` and `q₂₂²`, by two routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KreinReport {
    pub theta: QuadExt,
    pub tau: QuadExt,
    /// Multiplicities of `θ` and `τ`.
    pub f: QuadExt,
    pub g: QuadExt,
    pub q11_paper: QuadExt,
    pub q22_paper: QuadExt,
    pub q11_oracle: QuadExt,
    pub q22_oracle: QuadExt,
    pub agreement: bool,
}

impl KreinReport {
    /// Signs of the oracle values.
    pub fn signs(&self) -> (i32, i32) {
        (self.q11_oracle.signum(), self.q22_oracle.signum())
    }

    pub fn some_vanishes(&self) -> bool {
        self.q11_oracle.is_zero() || self.q22_oracle.is_zero()
    }
}

fn q(v: i64) -> QuadExt {
    QuadExt::from_int(v)
}

/// Eigenmatrix `P[i][l]`: eigenvalue of `A_l` on the `i`-th eigenspace,
/// with eigenspaces ordered `k, θ, τ`.
fn eigenmatrix(n: i64, k: i64, theta: &QuadExt, tau: &QuadExt) -> [[QuadExt; 3]; 3] {
    let minus_one = q(-1);
    [[q(1), q(k), q(n - k - 1)], [q(1), theta.clone(), &minus_one - theta], [q(1), tau.clone(), &minus_one - tau]]
}

/// All `qᵢⱼᵏ` from `qᵢⱼᵏ = (mᵢ mⱼ / n) Σ_l Pᵢₗ Pⱼₗ Pₖₗ / k_l²`.
pub fn krein_all(params: &SrgParams) -> Result<[[[QuadExt; 3]; 3]; 3]> {
    let (theta, tau) = srg_eigenvalues(params)?;
    let (n, k) = (params.n as i64, params.k as i64);
    let p = eigenmatrix(n, k, &theta, &tau);
    let (f, g) = multiplicities(params, &theta, &tau);
    let mult = [q(1), f, g];
    let val = [q(1), q(k), q(n - k - 1)];
    let inv_n = q(n).recip().expect("n > 0");
    let out = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            std::array::from_fn(|kk| {
                let mut s = q(0);
                for l in 0..3 {
                    let num = &(&p[i][l] * &p[j][l]) * &p[kk][l];
                    let den = &val[l] * &val[l];
                    s = &s + &(&num / &den);
                }
                let c = &(&mult[i] * &mult[j]) * &inv_n;
                &c * &s
            })
        })
    });
    Ok(out)
}

fn multiplicities(params: &SrgParams, theta: &QuadExt, tau: &QuadExt) -> (QuadExt, QuadExt) {
    let (n, k) = (params.n as i64, params.k as i64);
    let diff = theta - tau;
    let f = &(&q(-k) - &(&q(n - 1) * tau)) / &diff;
    let g = &(&q(k) + &(&q(n - 1) * theta)) / &diff;
    (f, g)
}

/// `q₁₁¹` and `q₂₂²` as displayed polynomials in `k, θ, τ`.
fn paper_polynomials(k: &QuadExt, th: &QuadExt, ta: &QuadExt) -> (QuadExt, QuadExt) {
    let th2 = th * th;
    let ta2 = ta * ta;
    let two = q(2);
    let q11 = [th * &ta2, -(&(&two * &th2) * ta), -th2.clone(), -(k * th), k * &ta2, &(&two * k) * ta];
    let q22 = [&th2 * ta, -(&(&two * th) * &ta2), -th2.clone(), -(k * ta), k * &th2, &(&two * k) * th];
    let sum = |v: &[QuadExt]| v.iter().fold(q(0), |acc, x| &acc + x);
    (sum(&q11), sum(&q22))
}

/// Krein parameters of a primitive parameter set. Decisions elsewhere use
/// the oracle values; the displayed polynomials are kept for comparison.
pub fn krein(params: &SrgParams) -> Result<KreinReport> {
    params.validate()?;
    if !params.is_primitive() {
        let &SrgParams { n, k, lambda, mu } = params;
        return Err(Error::ImprimitiveParams { n: n as i64, k: k as i64, lambda: lambda as i64, mu: mu as i64 });
    }
    let (theta, tau) = srg_eigenvalues(params)?;
    let (f, g) = multiplicities(params, &theta, &tau);
    let all = krein_all(params)?;
    let (q11_paper, q22_paper) = paper_polynomials(&q(params.k as i64), &theta, &tau);
    let q11_oracle = all[1][1][1].clone();
    let q22_oracle = all[2][2][2].clone();
    let agreement = q11_paper == q11_oracle && q22_paper == q22_oracle;
    Ok(KreinReport { theta, tau, f, g, q11_paper, q22_paper, q11_oracle, q22_oracle, agreement })
}
