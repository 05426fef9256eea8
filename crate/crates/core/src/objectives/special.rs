//! Small numerical helpers shared by the likelihood families.

use statrs::function::gamma::ln_gamma;

/// `ln(1 - exp(-z))` for `z > 0`, accurate for both small and large `z`.
#[inline]
pub fn log1mexp(z: f64) -> f64 {
    if z <= std::f64::consts::LN_2 {
        (-(-z).exp_m1()).ln()
    } else {
        (-(-z).exp()).ln_1p()
    }
}

/// `ln B(a, b) = lnΓ(a) + lnΓ(b) - lnΓ(a + b)`.
pub fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

/// `ln C(n, k)` for real-valued counts via log-gamma.
pub fn ln_choose(n: f64, k: f64) -> f64 {
    if k == 0.0 || k == n {
        return 0.0;
    }
    ln_gamma(n + 1.0) - ln_gamma(k + 1.0) - ln_gamma(n - k + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log1mexp_matches_naive_in_the_middle() {
        for z in [0.1, 0.5, 1.0, 2.0, 5.0] {
            let naive = (1.0 - (-z as f64).exp()).ln();
            assert!((log1mexp(z) - naive).abs() < 1e-14);
        }
    }

    #[test]
    fn log1mexp_extremes() {
        // ln(1 - e^{-z}) ~ ln z for tiny z and ~ -e^{-z} for large z
        let z = 1e-300;
        assert!((log1mexp(z) - z.ln()).abs() < 1e-12);
        let z = 50.0;
        assert!((log1mexp(z) + (-z as f64).exp()).abs() < 1e-30);
        assert_eq!(log1mexp(0.0), f64::NEG_INFINITY);
    }

    #[test]
    fn ln_beta_known_values() {
        assert!(ln_beta(1.0, 1.0).abs() < 1e-14);
        // B(2,3) = 1/12
        assert!((ln_beta(2.0, 3.0) - (1.0f64 / 12.0).ln()).abs() < 1e-13);
        assert!((ln_choose(5.0, 2.0) - 10f64.ln()).abs() < 1e-12);
        assert_eq!(ln_choose(1.0, 1.0), 0.0);
    }
}
