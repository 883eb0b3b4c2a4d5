use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::krein::krein;
use crate::error::{Error, Result};
use crate::exactmath::{srg_eigenvalues, QuadExt};
use crate::graphcore::SrgParams;

/// A named parameter family with the witnesses that realise it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum ParamForm {
    /// `(n², m(n−1), (m−1)(m−2)+n−2, m(m−1))`, `2 ≤ m ≤ n`.
    LatinSquare {
        m: u64,
        n: u64,
    },
    /// `(n², m(n+1), m(m+3)−n, m(m+1))`, `2 ≤ m ≤ n`.
    NegativeLatinSquare {
        m: u64,
        n: u64,
    },
    /// `(4t², t(2t+s), t(t+s), t(t+s))` with `s = ±1`, `t ≥ 2`.
    FourTSquare {
        t: u64,
        sign: i8,
    },
    /// `(r²(r+3)², r³+3r²+r, 0, r²+r)`.
    RSpecial {
        r: u64,
    },
    Grid {
        n: u64,
    },
    Smith {
        theta: i64,
        tau: i64,
    },
}

impl fmt::Display for ParamForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ParamForm::LatinSquare { m, n } => write!(f, "LS(m={m},n={n})"),
            ParamForm::NegativeLatinSquare { m, n } => write!(f, "nLS(m={m},n={n})"),
            ParamForm::FourTSquare { t, sign } => write!(f, "4t²(t={t},{})", if sign > 0 { '+' } else { '-' }),
            ParamForm::RSpecial { r } => write!(f, "r²(r+3)²(r={r})"),
            ParamForm::Grid { n } => write!(f, "grid({n})"),
            ParamForm::Smith { theta, tau } => write!(f, "Smith(θ={theta},τ={tau})"),
        }
    }
}

impl ParamForm {
    pub fn is_ls_or_nls(&self) -> bool {
        matches!(self, ParamForm::LatinSquare { .. } | ParamForm::NegativeLatinSquare { .. })
    }
}

fn exact_sqrt(v: u64) -> Option<u64> {
    let s = num_integer::Roots::sqrt(&v);
    (s * s == v).then_some(s)
}

fn latin_squares(p: &SrgParams, out: &mut Vec<ParamForm>) {
    let Some(s) = exact_sqrt(p.n) else { return };
    if s < 2 {
        return;
    }
    let (k, l, mu) = (p.k as i128, p.lambda as i128, p.mu as i128);
    let si = s as i128;
    if k % (si - 1) == 0 {
        let m = k / (si - 1);
        if (2..=si).contains(&m) && l == (m - 1) * (m - 2) + si - 2 && mu == m * (m - 1) {
            out.push(ParamForm::LatinSquare { m: m as u64, n: s });
        }
    }
    if k % (si + 1) == 0 {
        let m = k / (si + 1);
        if (2..=si).contains(&m) && l == m * (m + 3) - si && mu == m * (m + 1) {
            out.push(ParamForm::NegativeLatinSquare { m: m as u64, n: s });
        }
    }
    if s == p.n / s && p.k == 2 * (s - 1) && p.lambda + 2 == s && p.mu == 2 {
        out.push(ParamForm::Grid { n: s });
    }
    if s % 2 == 0 && s >= 4 {
        let t = s / 2;
        for sign in [1i8, -1] {
            let (a, b) = if sign > 0 { (2 * t + 1, t + 1) } else { (2 * t - 1, t - 1) };
            if p.k == t * a && p.lambda == t * b && p.mu == t * b {
                out.push(ParamForm::FourTSquare { t, sign });
            }
        }
    }
    // s = r(r+3)
    let mut r = 1u64;
    while r * (r + 3) <= s {
        if r * (r + 3) == s && p.k == r * r * r + 3 * r * r + r && p.lambda == 0 && p.mu == r * r + r {
            out.push(ParamForm::RSpecial { r });
        }
        r += 1;
    }
}

/// Evaluates the four Smith displays at the exact eigenvalues.
fn smith(p: &SrgParams) -> Option<ParamForm> {
    let (th, ta) = srg_eigenvalues(p).ok()?;
    let (theta, tau) = (th.to_integer()?.to_i64()?, ta.to_integer()?.to_i64()?);
    let q = QuadExt::from_int;
    let d = theta - tau;
    let s = theta * (theta + 1);
    if d < theta * (theta + 3) {
        return None;
    }
    let den_n = d * d - s * s;
    let den = d + s;
    if den_n == 0 || den == 0 {
        return None;
    }
    let ratio = |num: i64, den: i64| &q(num) / &q(den);
    let n = ratio(2 * d * d * ((2 * theta + 1) * d - 3 * s), den_n);
    let k = ratio(-tau * ((2 * theta + 1) * d - s), den);
    let l = ratio(-theta * (tau + 1) * (d - theta * (theta + 3)), den);
    let m = ratio(-(theta + 1) * tau * (d - s), den);
    let want = [p.n, p.k, p.lambda, p.mu].map(|x| q(x as i64));
    ([n, k, l, m] == want).then_some(ParamForm::Smith { theta, tau })
}

/// Every family whose defining equations the parameters satisfy.
pub fn param_form(p: &SrgParams) -> Vec<ParamForm> {
    let mut out = Vec::new();
    latin_squares(p, &mut out);
    out.extend(smith(p));
    out.sort();
    out.dedup();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExclusionVerdict {
    NotTriplyRegular,
    NoConclusion,
}

impl fmt::Display for ExclusionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExclusionVerdict::NotTriplyRegular => "NotTriplyRegular",
            ExclusionVerdict::NoConclusion => "NoConclusion",
        })
    }
}

/// Both Krein parameters positive and no (negative) Latin square form
/// rule out triple regularity.
pub fn exclusion_lemma(p: &SrgParams) -> Result<ExclusionVerdict> {
    let kr = krein(p)?;
    let (s11, s22) = kr.signs();
    let ls = param_form(p).iter().any(ParamForm::is_ls_or_nls);
    Ok(if s11 > 0 && s22 > 0 && !ls { ExclusionVerdict::NotTriplyRegular } else { ExclusionVerdict::NoConclusion })
}

/// Outcome of the rank-3 Latin-square lemma.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LsLemmaOutcome {
    /// The hypotheses on the parameters hold.
    pub applies: bool,
    /// The graph or its complement has `4t²` parameters.
    pub four_t_square: bool,
    /// Set when the input is not known to be rank 3: the conclusion then
    /// rests on the Cameron–Goethals–Seidel conjecture.
    pub conjecture_conditional: bool,
}

/// Under LS/nLS parameters other than grids and the `r²(r+3)²` family, with
/// strongly regular subconstituents, the parameters of the graph or its
/// complement must be of `4t²` form.
pub fn ls_nls_lemma(p: &SrgParams, rank3: bool, subconstituents_srg: bool) -> Result<LsLemmaOutcome> {
    p.validate()?;
    let forms = param_form(p);
    let excluded = forms.iter().any(|f| matches!(f, ParamForm::Grid { .. } | ParamForm::RSpecial { .. }));
    let applies = subconstituents_srg && forms.iter().any(ParamForm::is_ls_or_nls) && !excluded;
    let is_four = |q: &SrgParams| param_form(q).iter().any(|f| matches!(f, ParamForm::FourTSquare { .. }));
    let four_t_square = is_four(p) || is_four(&p.complement());
    Ok(LsLemmaOutcome { applies, four_t_square, conjecture_conditional: !rank3 })
}

/// `ImprimitiveParams` for parameter sets the Krein machinery cannot take.
pub fn require_primitive(p: &SrgParams) -> Result<()> {
    if p.is_primitive() {
        Ok(())
    } else {
        Err(Error::ImprimitiveParams { n: p.n as i64, k: p.k as i64, lambda: p.lambda as i64, mu: p.mu as i64 })
    }
}
