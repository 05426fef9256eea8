//! Weibull-G family members (WE, WBXII), the exponentiated Weibull and
//! exponential models, and the beta Burr XII model.

use super::special::{ln_beta, log1mexp};
use super::{check_positive, check_positive_data};
use crate::{Error, Result};

/// CDF of the Weibull-G construction at parent CDF value `g`:
/// `1 - exp(-alpha * (g / (1 - g))^beta)`.
pub fn weibull_g_cdf(g: f64, alpha: f64, beta: f64) -> Result<f64> {
    check_positive("alpha", alpha)?;
    check_positive("beta", beta)?;
    if !(0.0..=1.0).contains(&g) {
        return Err(Error::Domain(format!("parent CDF value must lie in [0, 1], got {g}")));
    }
    if g == 1.0 {
        return Ok(1.0);
    }
    let odds = g / (1.0 - g);
    Ok(-(-alpha * odds.powf(beta)).exp_m1())
}

/// Weibull-exponential log-likelihood.
///
/// `n ln α + n ln β + n ln λ + Σ (β-1) ln(1 - e^{-λx}) + Σ [λβx - α(e^{λx} - 1)^β]`
pub fn loglik_we(alpha: f64, beta: f64, lambda: f64, x: &[f64]) -> Result<f64> {
    check_positive("alpha", alpha)?;
    check_positive("beta", beta)?;
    check_positive("lambda", lambda)?;
    check_positive_data(x)?;
    let n = x.len() as f64;
    let mut sum = 0.0;
    for &xi in x {
        let z = lambda * xi;
        sum += (beta - 1.0) * log1mexp(z) + lambda * beta * xi - alpha * z.exp_m1().powf(beta);
    }
    Ok(n * (alpha.ln() + beta.ln() + lambda.ln()) + sum)
}

/// Exponentiated Weibull log-likelihood,
/// `Σ ln[αβλ^β x^{β-1} e^{-(λx)^β} (1 - e^{-(λx)^β})^{α-1}]`.
pub fn loglik_ew(alpha: f64, beta: f64, lambda: f64, x: &[f64]) -> Result<f64> {
    check_positive("alpha", alpha)?;
    check_positive("beta", beta)?;
    check_positive("lambda", lambda)?;
    check_positive_data(x)?;
    let n = x.len() as f64;
    let mut sum = 0.0;
    for &xi in x {
        let z = (lambda * xi).powf(beta);
        sum += (beta - 1.0) * xi.ln() - z + (alpha - 1.0) * log1mexp(z);
    }
    Ok(n * (alpha.ln() + beta.ln() + beta * lambda.ln()) + sum)
}

/// Exponentiated exponential log-likelihood,
/// `Σ ln[αλ e^{-λx} (1 - e^{-λx})^{α-1}]`.
pub fn loglik_ee(alpha: f64, lambda: f64, x: &[f64]) -> Result<f64> {
    check_positive("alpha", alpha)?;
    check_positive("lambda", lambda)?;
    check_positive_data(x)?;
    let n = x.len() as f64;
    let mut sum = 0.0;
    for &xi in x {
        let z = lambda * xi;
        sum += -z + (alpha - 1.0) * log1mexp(z);
    }
    Ok(n * (alpha.ln() + lambda.ln()) + sum)
}

/// Weibull-Burr XII log-likelihood:
///
/// ```text
/// n[ln α + ln β + ln c + ln k - c ln s] + (c-1) Σ ln x - (1-k) Σ ln(1 + (x/s)^c)
///   - α Σ [(1 + (x/s)^c)^k - 1]^β + (β-1) Σ ln((1 + (x/s)^c)^k - 1)
/// ```
///
/// `(1 + u)^k - 1` is evaluated as `expm1(k ln1p(u))` so the ridge at tiny `k`
/// keeps full precision. Overflow propagates as a non-finite value.
pub fn loglik_wbxii(alpha: f64, beta: f64, s: f64, k: f64, c: f64, x: &[f64]) -> Result<f64> {
    for (name, v) in [("alpha", alpha), ("beta", beta), ("s", s), ("k", k), ("c", c)] {
        check_positive(name, v)?;
    }
    check_positive_data(x)?;
    let n = x.len() as f64;
    let mut sum = 0.0;
    for &xi in x {
        let t = (xi / s).powf(c).ln_1p();
        let odds = (k * t).exp_m1();
        sum += (c - 1.0) * xi.ln() - (1.0 - k) * t - alpha * odds.powf(beta)
            + (beta - 1.0) * odds.ln();
    }
    Ok(n * (alpha.ln() + beta.ln() + c.ln() + k.ln() - c * s.ln()) + sum)
}

/// Beta-Burr XII log-likelihood:
///
/// ```text
/// n[ln c + ln k - c ln s] + (c-1) Σ ln x - n ln B(α, β)
///   - (kβ + 1) Σ ln(1 + (x/s)^c) + (α-1) Σ ln(1 - (1 + (x/s)^c)^{-k})
/// ```
pub fn loglik_bbxii(alpha: f64, beta: f64, s: f64, k: f64, c: f64, x: &[f64]) -> Result<f64> {
    for (name, v) in [("alpha", alpha), ("beta", beta), ("s", s), ("k", k), ("c", c)] {
        check_positive(name, v)?;
    }
    check_positive_data(x)?;
    let n = x.len() as f64;
    let mut sum = 0.0;
    for &xi in x {
        let t = (xi / s).powf(c).ln_1p();
        sum += (c - 1.0) * xi.ln() - (k * beta + 1.0) * t + (alpha - 1.0) * log1mexp(k * t);
    }
    Ok(n * (c.ln() + k.ln() - c * s.ln() - ln_beta(alpha, beta)) + sum)
}
