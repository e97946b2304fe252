//! Distribution primitives: Pareto claims, integrated tails, moment
//! (size-biased) distributions, the Erlang smoothing kernel and the
//! Mellin–Stieltjes convolution against a discrete scaling law.
//!
//! Conventions used throughout the crate:
//!
//! * claim sizes follow `F(x) = 1 - (1 + x/(phi-1))^-phi`, `phi > 1`, which
//!   has mean exactly 1;
//! * the integrated tail (stationary excess) of a distribution with mean
//!   `mu` is `Fhat(u) = (1/mu) ∫_0^u (1 - F(t)) dt`;
//! * the moment distribution is the size-biased law `dH(s) = s dF(s)/mu`;
//! * the Erlang kernel `Erlang(xi, xi)` has mean exactly 1 and concentrates
//!   at 1 as `xi` grows.

use crate::discretize::DiscreteScaling;
use crate::numerics::quad;
use crate::numerics::special::{ln_gamma, poisson_cdf, poisson_sf_ge, reg_lower_gamma};
use crate::{domain_err, Result};

/// Right-continuous cumulative distribution function.
pub trait Cdf: Send + Sync {
    fn cdf(&self, x: f64) -> f64;

    /// Survival function; override when `1 - cdf` loses precision in the tail.
    fn sf(&self, x: f64) -> f64 {
        1.0 - self.cdf(x)
    }
}

/// Absolutely continuous distribution on `[0, inf)` with the functionals the
/// discretizer and the error bounds consume.
pub trait ContinuousDist: Cdf {
    fn pdf(&self, x: f64) -> f64;

    /// Inverse cdf on (0, 1). The default brackets and bisects.
    fn quantile(&self, q: f64) -> f64 {
        assert!((0.0..1.0).contains(&q));
        if q == 0.0 {
            return 0.0;
        }
        let mut hi = 1.0;
        while self.cdf(hi) < q && hi < 1e300 {
            hi *= 2.0;
        }
        crate::numerics::search::bisect_root(|x| self.cdf(x) - q, 0.0, hi, 0.0)
            .expect("quantile bracket")
    }

    /// `None` when the mean is infinite.
    fn mean(&self) -> Option<f64>;

    /// Restricted mean `E[X; X > t]`; `None` when infinite.
    fn restricted_mean_above(&self, t: f64) -> Option<f64> {
        let mu = self.mean()?;
        let head = quad::integrate(
            |x| x * self.pdf(x),
            0.0,
            t,
            quad::DEFAULT_ABS_TOL,
            quad::DEFAULT_MAX_PANELS,
        )
        .ok()?;
        Some((mu - head).max(0.0))
    }

    /// Moment-distribution cdf `H(s) = ∫_0^s t dF(t) / mu`.
    ///
    /// Uses adaptive quadrature at 1e-12 absolute tolerance unless the
    /// implementor supplies a closed form.
    fn moment_cdf(&self, s: f64) -> Result<f64> {
        if s <= 0.0 {
            return Ok(0.0);
        }
        let mu = self
            .mean()
            .ok_or_else(|| domain_err("moment distribution needs a finite mean"))?;
        if mu <= 0.0 {
            return Err(domain_err("moment distribution needs a positive mean"));
        }
        let raw = quad::integrate(
            |t| t * self.pdf(t),
            0.0,
            s,
            quad::DEFAULT_ABS_TOL,
            quad::DEFAULT_MAX_PANELS,
        )?;
        Ok((raw / mu).clamp(0.0, 1.0))
    }
}

/// Moment-distribution cdf of an arbitrary handle (size-biased law).
pub fn moment_cdf(dist: &dyn ContinuousDist, s: f64) -> Result<f64> {
    dist.moment_cdf(s)
}

// ---------------------------------------------------------------------------
// Pareto claims and their integrated tail
// ---------------------------------------------------------------------------

/// Pareto claim-size distribution with unit mean:
/// `F(x) = 1 - (1 + x/(phi-1))^-phi`, `phi > 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParetoClaim {
    phi: f64,
}

impl ParetoClaim {
    pub fn new(phi: f64) -> Result<Self> {
        if !(phi > 1.0) || !phi.is_finite() {
            return Err(domain_err(format!("pareto shape must satisfy phi > 1, got {phi}")));
        }
        Ok(Self { phi })
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Integrated tail of these claims.
    pub fn integrated_tail(&self) -> IntegratedTail {
        IntegratedTail { phi: self.phi }
    }

    #[inline]
    fn base(&self, x: f64) -> f64 {
        1.0 + x / (self.phi - 1.0)
    }
}

impl Cdf for ParetoClaim {
    fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            0.0
        } else {
            1.0 - self.base(x).powf(-self.phi)
        }
    }

    fn sf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            1.0
        } else {
            self.base(x).powf(-self.phi)
        }
    }
}

impl ContinuousDist for ParetoClaim {
    fn pdf(&self, x: f64) -> f64 {
        if x < 0.0 {
            0.0
        } else {
            self.phi / (self.phi - 1.0) * self.base(x).powf(-self.phi - 1.0)
        }
    }

    fn quantile(&self, q: f64) -> f64 {
        assert!((0.0..1.0).contains(&q));
        (self.phi - 1.0) * ((1.0 - q).powf(-1.0 / self.phi) - 1.0)
    }

    fn mean(&self) -> Option<f64> {
        Some(1.0)
    }

    fn restricted_mean_above(&self, t: f64) -> Option<f64> {
        if t <= 0.0 {
            return Some(1.0);
        }
        // ∫_t^inf x dF(x) = phi V^(1-phi) - (phi-1) V^-phi with V = 1 + t/(phi-1)
        let v = self.base(t);
        Some(self.phi * v.powf(1.0 - self.phi) - (self.phi - 1.0) * v.powf(-self.phi))
    }

    fn moment_cdf(&self, s: f64) -> Result<f64> {
        if s <= 0.0 {
            return Ok(0.0);
        }
        // mean is 1, so H_F(s) = 1 - E[X; X > s]
        Ok((1.0 - self.restricted_mean_above(s).expect("finite mean")).clamp(0.0, 1.0))
    }
}

/// Integrated tail of the unit-mean Pareto claim:
/// `Fhat(x) = 1 - (1 + x/(phi-1))^-(phi-1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratedTail {
    phi: f64,
}

impl IntegratedTail {
    pub fn new(source: &ParetoClaim) -> Self {
        source.integrated_tail()
    }

    pub fn of_pareto(phi: f64) -> Result<Self> {
        Ok(ParetoClaim::new(phi)?.integrated_tail())
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    #[inline]
    fn base(&self, x: f64) -> f64 {
        1.0 + x / (self.phi - 1.0)
    }
}

impl Cdf for IntegratedTail {
    fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            0.0
        } else {
            1.0 - self.base(x).powf(1.0 - self.phi)
        }
    }

    fn sf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            1.0
        } else {
            self.base(x).powf(1.0 - self.phi)
        }
    }
}

impl ContinuousDist for IntegratedTail {
    fn pdf(&self, x: f64) -> f64 {
        // density of the integrated tail is sf_F(x)/mu_F and mu_F = 1
        if x < 0.0 {
            0.0
        } else {
            self.base(x).powf(-self.phi)
        }
    }

    fn quantile(&self, q: f64) -> f64 {
        assert!((0.0..1.0).contains(&q));
        (self.phi - 1.0) * ((1.0 - q).powf(-1.0 / (self.phi - 1.0)) - 1.0)
    }

    fn mean(&self) -> Option<f64> {
        // tail index phi-1: finite mean only for phi > 2
        if self.phi > 2.0 {
            Some((self.phi - 1.0) / (self.phi - 2.0))
        } else {
            None
        }
    }

    fn restricted_mean_above(&self, t: f64) -> Option<f64> {
        if self.phi <= 2.0 {
            return None;
        }
        if t <= 0.0 {
            return self.mean();
        }
        let p = self.phi;
        let v = self.base(t);
        Some((p - 1.0) * (p - 1.0) / (p - 2.0) * v.powf(2.0 - p) - (p - 1.0) * v.powf(1.0 - p))
    }
}

/// Integrated-tail cdf of the unit-mean Pareto claim at `x`.
pub fn pareto_integrated_tail(x: f64, phi: f64) -> Result<f64> {
    if x < 0.0 {
        return Err(domain_err(format!("x must be nonnegative, got {x}")));
    }
    Ok(IntegratedTail::of_pareto(phi)?.cdf(x))
}

// ---------------------------------------------------------------------------
// Moment (size-biased) distribution wrapper
// ---------------------------------------------------------------------------

/// Size-biased law `dH(s) = s dF(s)/mu` of a source distribution.
///
/// The `Cdf` impl panics if the source has to fall back to quadrature and
/// the quadrature fails; use [`moment_cdf`] for the fallible path.
#[derive(Debug, Clone)]
pub struct MomentDistribution<D: ContinuousDist> {
    source: D,
    mu: f64,
}

impl<D: ContinuousDist> MomentDistribution<D> {
    pub fn new(source: D) -> Result<Self> {
        let mu = source
            .mean()
            .ok_or_else(|| domain_err("moment distribution needs a finite mean"))?;
        if mu <= 0.0 {
            return Err(domain_err("moment distribution needs a positive mean"));
        }
        Ok(Self { source, mu })
    }

    pub fn source(&self) -> &D {
        &self.source
    }
}

impl<D: ContinuousDist> Cdf for MomentDistribution<D> {
    fn cdf(&self, x: f64) -> f64 {
        self.source.moment_cdf(x).expect("moment cdf quadrature")
    }
}

impl<D: ContinuousDist> ContinuousDist for MomentDistribution<D> {
    fn pdf(&self, x: f64) -> f64 {
        if x < 0.0 {
            0.0
        } else {
            x * self.source.pdf(x) / self.mu
        }
    }

    fn mean(&self) -> Option<f64> {
        None // second moment of the source; not needed, left unexposed
    }
}

// ---------------------------------------------------------------------------
// Erlang kernel
// ---------------------------------------------------------------------------

/// The mean-one `Erlang(xi, xi)` smoothing kernel `G_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ErlangKernel {
    xi: u32,
}

impl ErlangKernel {
    pub fn new(xi: u32) -> Result<Self> {
        if xi == 0 {
            return Err(domain_err("erlang shape xi must be >= 1"));
        }
        Ok(Self { xi })
    }

    pub fn xi(&self) -> u32 {
        self.xi
    }

    /// `G_m(s)`, computed through the regularized incomplete gamma so large
    /// `xi * s` never overflows.
    pub fn cdf(&self, s: f64) -> f64 {
        if s <= 0.0 {
            0.0
        } else {
            reg_lower_gamma(self.xi as f64, self.xi as f64 * s)
        }
    }

    pub fn sf(&self, s: f64) -> f64 {
        1.0 - self.cdf(s)
    }

    pub fn pdf(&self, s: f64) -> f64 {
        if s <= 0.0 {
            return 0.0;
        }
        let xi = self.xi as f64;
        (xi * xi.ln() + (xi - 1.0) * s.ln() - xi * s - ln_gamma(xi)).exp()
    }

    /// `eps_m = ∫_0^1 G_m = e^-xi xi^xi / xi!`, via log-gamma.
    pub fn epsilon(&self) -> f64 {
        let xi = self.xi as f64;
        (xi * xi.ln() - xi - ln_gamma(xi + 1.0)).exp()
    }

    /// `eps_m(delta) = ∫_0^delta G_m(s) ds`.
    ///
    /// Closed form `delta - 1 + P(N<=xi-1) - delta P(N<=xi-2)` with
    /// `N ~ Poisson(xi delta)`; evaluated through whichever Poisson tail is
    /// small so neither branch cancels.
    pub fn epsilon_delta(&self, delta: f64) -> f64 {
        assert!(delta >= 0.0, "delta must be nonnegative");
        if delta == 0.0 {
            return 0.0;
        }
        let lambda = self.xi as f64 * delta;
        let v = if delta <= 1.0 {
            // delta * P(N >= xi-1) - P(N >= xi); both factors are small here
            let r2 = poisson_sf_ge(u64::from(self.xi) - 1, lambda);
            let r1 = poisson_sf_ge(u64::from(self.xi), lambda);
            delta * r2 - r1
        } else {
            let q1 = poisson_cdf(u64::from(self.xi) - 1, lambda);
            let q2 = if self.xi >= 2 {
                poisson_cdf(u64::from(self.xi) - 2, lambda)
            } else {
                0.0
            };
            delta - 1.0 + q1 - delta * q2
        };
        v.max(0.0)
    }

    /// Integrated tail `Ghat_m(s) = ∫_0^s (1 - G_m(t)) dt = s - eps_m(s)`.
    ///
    /// `1 - G_m` is a probability density (the kernel has mean one), so
    /// `Ghat_m` is a proper cdf with `Ghat_m(inf) = 1`.
    pub fn integrated_tail(&self, s: f64) -> f64 {
        if s <= 0.0 {
            return 0.0;
        }
        let lambda = self.xi as f64 * s;
        let v = if s <= 1.0 {
            // s (1 - P(N >= xi-1)) + P(N >= xi)
            let r2 = poisson_sf_ge(u64::from(self.xi) - 1, lambda);
            let r1 = poisson_sf_ge(u64::from(self.xi), lambda);
            s * (1.0 - r2) + r1
        } else {
            let q1 = poisson_cdf(u64::from(self.xi) - 1, lambda);
            let q2 = if self.xi >= 2 {
                poisson_cdf(u64::from(self.xi) - 2, lambda)
            } else {
                0.0
            };
            1.0 - q1 + s * q2
        };
        v.clamp(0.0, 1.0)
    }
}

/// `Erlang(xi, xi)` cdf at `s`.
pub fn erlang_cdf(s: f64, xi: u32) -> Result<f64> {
    if s < 0.0 {
        return Err(domain_err(format!("s must be nonnegative, got {s}")));
    }
    Ok(ErlangKernel::new(xi)?.cdf(s))
}

/// Integrated tail `Ghat_m(s)` of the `Erlang(xi, xi)` kernel.
pub fn erlang_integrated_tail(s: f64, xi: u32) -> Result<f64> {
    if s < 0.0 {
        return Err(domain_err(format!("s must be nonnegative, got {s}")));
    }
    Ok(ErlangKernel::new(xi)?.integrated_tail(s))
}

/// `eps_m = e^-xi xi^xi / xi!`.
pub fn epsilon_m(xi: u32) -> Result<f64> {
    Ok(ErlangKernel::new(xi)?.epsilon())
}

/// `eps_m(delta) = ∫_0^delta G_m(s) ds`.
pub fn epsilon_m_delta(xi: u32, delta: f64) -> Result<f64> {
    if delta < 0.0 {
        return Err(domain_err(format!("delta must be nonnegative, got {delta}")));
    }
    Ok(ErlangKernel::new(xi)?.epsilon_delta(delta))
}

// ---------------------------------------------------------------------------
// Mellin–Stieltjes convolution against a discrete scaling law
// ---------------------------------------------------------------------------

/// `(Pi ⋆ G_m)(u) = Σ_j pi_j G_m(u / s_j)`.
///
/// Atoms whose scaled argument is deep in either Erlang tail contribute an
/// exact 0 or 1; those ranges are folded in through the stored cumulative
/// masses so the cost is proportional to the atoms near `u`.
pub fn mellin_star_cdf(pi: &DiscreteScaling, xi: u32, u: f64) -> Result<f64> {
    let kernel = ErlangKernel::new(xi)?;
    if u <= 0.0 {
        return Ok(0.0);
    }
    let (x_lo, x_hi) = erlang_support_window(kernel);
    // atoms with s_j <= u / x_hi sit where G_m = 1 (up to 1e-18)
    let ones = pi.cdf_at(u / x_hi);
    let mut acc = ones;
    for (s_j, p_j) in pi.atoms() {
        let r = u / s_j;
        if r >= x_hi {
            continue; // already counted through the prefix mass
        }
        if r <= x_lo {
            break; // atoms are ascending, every later ratio is smaller
        }
        acc += p_j * kernel.cdf(r);
    }
    Ok(acc.clamp(0.0, 1.0))
}

/// `[x_lo, x_hi]` outside which `G_m` is 0 resp. 1 to within 1e-18.
fn erlang_support_window(kernel: ErlangKernel) -> (f64, f64) {
    let lo = crate::numerics::search::bisect_root(|x| kernel.cdf(x) - 1e-18, 0.0, 1.0, 1e-6)
        .unwrap_or(0.0);
    let mut hi = 2.0;
    while kernel.sf(hi) > 1e-18 && hi < 1e6 {
        hi *= 2.0;
    }
    let hi = crate::numerics::search::bisect_root(|x| kernel.sf(x) - 1e-18, 1.0, hi, 1e-6)
        .unwrap_or(hi);
    (lo, hi)
}
