//! Poisson tail helpers and the Chernoff bound used to pick truncation
//! levels. Gamma-family special functions are delegated to `statrs`.

pub use statrs::function::gamma::ln_gamma;
use statrs::function::gamma::{gamma_lr, gamma_ur};

/// Regularized lower incomplete gamma P(a, x).
#[inline]
pub fn reg_lower_gamma(a: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    gamma_lr(a, x)
}

/// P(N <= k) for N ~ Poisson(lambda).
#[inline]
pub fn poisson_cdf(k: u64, lambda: f64) -> f64 {
    if lambda <= 0.0 {
        return 1.0;
    }
    gamma_ur((k + 1) as f64, lambda)
}

/// P(N >= k) for N ~ Poisson(lambda).
#[inline]
pub fn poisson_sf_ge(k: u64, lambda: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    if lambda <= 0.0 {
        return 0.0;
    }
    gamma_lr(k as f64, lambda)
}

/// P(N > n1) for N ~ Poisson(lambda), exact via the incomplete gamma.
#[inline]
pub fn poisson_tail_exact(n1: u64, lambda: f64) -> f64 {
    poisson_sf_ge(n1 + 1, lambda)
}

/// Chernoff bound on the Poisson tail:
/// P(N > n1) <= exp(-lambda) (e lambda)^(n1+1) / (n1+1)^(n1+1).
///
/// Evaluated in log space; exceeds the exact tail for n1 >= lambda - 1 and
/// is the cheap selector for truncation levels.
pub fn poisson_tail_chernoff(lambda: f64, n1: u64) -> f64 {
    let m = (n1 + 1) as f64;
    let ln_val = -lambda + m * (1.0 + lambda.ln() - m.ln());
    ln_val.exp()
}

/// Poisson pmf exp(-lambda) lambda^n / n! in log space.
#[inline]
pub fn poisson_pmf(n: u64, lambda: f64) -> f64 {
    if lambda <= 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    (-lambda + n as f64 * lambda.ln() - ln_gamma(n as f64 + 1.0)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poisson_cdf_small_cases() {
        // P(N<=1), N~Poisson(2) = e^-2 (1 + 2)
        let v = poisson_cdf(1, 2.0);
        assert!((v - 3.0 * (-2.0f64).exp()).abs() < 1e-14);
    }

    #[test]
    fn sf_complements_cdf() {
        for k in [0u64, 1, 5, 40] {
            let lambda = 7.3;
            let s = poisson_sf_ge(k, lambda);
            let c = if k == 0 { 0.0 } else { poisson_cdf(k - 1, lambda) };
            assert!((s + c - 1.0).abs() < 1e-12, "k={k}");
        }
    }

    #[test]
    fn chernoff_at_lambda_one_n_zero_is_one() {
        assert!((poisson_tail_chernoff(1.0, 0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn chernoff_dominates_exact_tail() {
        for &lambda in &[1.0f64, 3.0, 10.0, 50.0] {
            let start = lambda.ceil() as u64; // valid for n1 >= lambda - 1
            for n1 in start..start + 30 {
                let exact = poisson_tail_exact(n1, lambda);
                let bound = poisson_tail_chernoff(lambda, n1);
                assert!(bound >= exact, "lambda={lambda} n1={n1} {bound} < {exact}");
            }
        }
    }

    #[test]
    fn chernoff_strictly_decreasing_past_mean() {
        let lambda = 10.0;
        let mut prev = f64::INFINITY;
        for n1 in 10..60 {
            let b = poisson_tail_chernoff(lambda, n1);
            assert!(b < prev);
            prev = b;
        }
    }

    #[test]
    fn poisson_pmf_matches_direct() {
        let v = poisson_pmf(3, 2.5);
        let direct = (-2.5f64).exp() * 2.5f64.powi(3) / 6.0;
        assert!((v - direct).abs() < 1e-15);
    }
}
