//! Discretization of a target distribution onto a geometric grid.
//!
//! The scaling law puts mass `pi_j = F(w_j) - F(w_(j-1))` on the grid point
//! `s_j = exp(t0 + (j-1)/K)`, where the evaluation points `w_j` sit inside
//! `[s_j, s_(j+1)]` according to the chosen [`Mode`]. The law is stored
//! truncated at `N2` atoms with explicit residual mass `eps1` and residual
//! mean `eps2`; the truncation bounds consume both directly, so the law is
//! deliberately not renormalized.

use std::io::Write;

use crate::dist::{Cdf, ContinuousDist};
use crate::numerics::KahanSum;
use crate::{domain_err, Result};

/// Geometric support grid `s_j = exp(t0 + (j-1)/K)`, `j = 1..=N2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricGrid {
    t0: f64,
    k: u32,
    n2: usize,
}

impl GeometricGrid {
    pub fn new(t0: f64, k: u32, n2: usize) -> Result<Self> {
        if k == 0 {
            return Err(domain_err("grid resolution K must be >= 1"));
        }
        if n2 == 0 {
            return Err(domain_err("atom count N2 must be >= 1"));
        }
        if !t0.is_finite() {
            return Err(domain_err("t0 must be finite"));
        }
        Ok(Self { t0, k, n2 })
    }

    /// `s_j` for 1-based `j` (also valid at `n2 + 1`, the next grid point).
    pub fn point(&self, j: usize) -> f64 {
        (self.t0 + (j - 1) as f64 / self.k as f64).exp()
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n2(&self) -> usize {
        self.n2
    }
}

/// Placement of the evaluation point `w_j` within `[s_j, s_(j+1)]`.
///
/// `Middle` is the geometric midpoint `sqrt(s_j s_(j+1))`, the
/// scale-invariant choice on a geometric grid; the arithmetic variant is
/// kept for sensitivity checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// `w_j = s_(j+1)`: the law's cdf upcrosses the target.
    Below,
    /// `w_j = sqrt(s_j s_(j+1))`.
    Middle,
    /// `w_j = (s_j + s_(j+1)) / 2`.
    MiddleArithmetic,
    /// `w_j = s_j`: the law's cdf stays below the target.
    Above,
}

impl Mode {
    fn w(self, grid: &GeometricGrid, j: usize) -> f64 {
        match self {
            Mode::Below => grid.point(j + 1),
            Mode::Middle => (grid.point(j) * grid.point(j + 1)).sqrt(),
            Mode::MiddleArithmetic => 0.5 * (grid.point(j) + grid.point(j + 1)),
            Mode::Above => grid.point(j),
        }
    }
}

/// Discrete scaling law: ascending atoms, truncated with explicit residuals.
#[derive(Debug, Clone)]
pub struct DiscreteScaling {
    support: Vec<f64>,
    probs: Vec<f64>,
    /// cumulative masses; `cum[j]` = total mass of atoms `0..=j`
    cum: Vec<f64>,
    residual_mass: f64,
    residual_mean: f64,
    mean: f64,
}

impl DiscreteScaling {
    /// Assemble from explicit atoms. `residual_mean` may be `f64::INFINITY`
    /// for laws with an infinite tail mean.
    pub fn from_atoms(
        support: Vec<f64>,
        probs: Vec<f64>,
        residual_mass: f64,
        residual_mean: f64,
    ) -> Result<Self> {
        if support.is_empty() || support.len() != probs.len() {
            return Err(domain_err("support and probability vectors must match and be nonempty"));
        }
        if support.windows(2).any(|w| w[0] >= w[1]) || support[0] <= 0.0 {
            return Err(domain_err("support must be strictly increasing and positive"));
        }
        if probs.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
            return Err(domain_err("atom probabilities must lie in [0, 1]"));
        }
        if !(0.0..=1.0).contains(&residual_mass) {
            return Err(domain_err("residual mass must lie in [0, 1]"));
        }
        if residual_mean < 0.0 {
            return Err(domain_err("residual mean must be nonnegative"));
        }
        let mut cum = Vec::with_capacity(probs.len());
        let mut acc = KahanSum::new();
        for &p in &probs {
            acc.add(p);
            cum.push(acc.value());
        }
        let total = acc.value() + residual_mass;
        if (total - 1.0).abs() > 1e-12 {
            return Err(domain_err(format!(
                "atom masses plus residual must sum to 1, got {total}"
            )));
        }
        let mut m = KahanSum::new();
        for (s, p) in support.iter().zip(&probs) {
            m.add(s * p);
        }
        let mean = m.value() + residual_mean;
        Ok(Self { support, probs, cum, residual_mass, residual_mean, mean })
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> &[f64] {
        &self.support
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn atoms(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.support.iter().copied().zip(self.probs.iter().copied())
    }

    /// Smallest support point `s_1`.
    pub fn s1(&self) -> f64 {
        self.support[0]
    }

    /// Truncated tail mass `eps1 = P(S > s_N2)`.
    pub fn residual_mass(&self) -> f64 {
        self.residual_mass
    }

    /// Truncated tail mean `eps2 = E[S; S > s_N2]`; `inf` when the target
    /// has no finite mean.
    pub fn residual_mean(&self) -> f64 {
        self.residual_mean
    }

    /// Full mean `mu_Pi = sum pi_j s_j + eps2` (`inf` when `eps2` is).
    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Total retained mass `1 - eps1`.
    pub fn total_mass(&self) -> f64 {
        1.0 - self.residual_mass
    }

    /// Step-function cdf at `s` (mass of atoms `<= s`).
    pub fn cdf_at(&self, s: f64) -> f64 {
        let idx = self.support.partition_point(|&x| x <= s);
        if idx == 0 {
            0.0
        } else {
            self.cum[idx - 1]
        }
    }

    /// `E[S; S > t]` of the law including the residual; `inf` when the
    /// residual mean is.
    pub fn restricted_mean_above(&self, t: f64) -> f64 {
        let idx = self.support.partition_point(|&x| x <= t);
        let mut acc = KahanSum::new();
        for j in idx..self.support.len() {
            acc.add(self.support[j] * self.probs[j]);
        }
        acc.value() + self.residual_mean
    }

    /// Moment (size-biased) law `H_Pi` with atoms `s_j pi_j / mu_Pi` and
    /// residual mass `eps2 / mu_Pi`.
    ///
    /// The moment law's own residual mean (a second moment of the source) is
    /// reported as `inf`: the bounds never consume it.
    pub fn moment_scaling(&self) -> Result<DiscreteScaling> {
        if !self.mean.is_finite() {
            return Err(crate::Error::InfiniteMean);
        }
        let probs: Vec<f64> =
            self.atoms().map(|(s, p)| (s * p / self.mean).min(1.0)).collect();
        let mut cum = Vec::with_capacity(probs.len());
        let mut acc = KahanSum::new();
        for &p in &probs {
            acc.add(p);
            cum.push(acc.value());
        }
        Ok(DiscreteScaling {
            support: self.support.clone(),
            probs,
            cum,
            residual_mass: (self.residual_mean / self.mean).clamp(0.0, 1.0),
            residual_mean: f64::INFINITY,
            mean: f64::INFINITY,
        })
    }

    /// CSV dump (`index,s,pi` with a header row) for inspection.
    pub fn write_csv<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "index,s,pi")?;
        for (j, (s, p)) in self.atoms().enumerate() {
            writeln!(out, "{},{},{}", j + 1, fmt_sig(s, 12), fmt_sig(p, 12))?;
        }
        Ok(())
    }
}

impl Cdf for DiscreteScaling {
    fn cdf(&self, x: f64) -> f64 {
        self.cdf_at(x)
    }
}

/// Format `x` with `digits` significant digits, C `%g` style.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..12).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        // trim trailing zeros but keep at least one digit after '.'
        if s.contains('.') {
            let t = s.trim_end_matches('0').trim_end_matches('.');
            t.to_string()
        } else {
            s
        }
    } else {
        let s = format!("{:.*e}", digits - 1, x);
        // normalize exponent: Rust prints e-4, keep as-is; trim mantissa zeros
        if let Some((mant, ex)) = s.split_once('e') {
            let mant = if mant.contains('.') {
                mant.trim_end_matches('0').trim_end_matches('.')
            } else {
                mant
            };
            format!("{mant}e{ex}")
        } else {
            s
        }
    }
}

/// Build the scaling law for `target` on `grid` with evaluation mode `mode`.
///
/// Atom masses come from survival-function differences, which stay exact in
/// the deep tail where `cdf` differences would cancel. `eps2` is the
/// target's restricted mean beyond `s_N2` (`inf` for infinite-mean targets).
pub fn build_scaling(
    target: &dyn ContinuousDist,
    grid: &GeometricGrid,
    mode: Mode,
) -> Result<DiscreteScaling> {
    let n2 = grid.n2();
    let mut support = Vec::with_capacity(n2);
    let mut probs = Vec::with_capacity(n2);
    let mut sf_prev = 1.0; // sf at w_0 = 0
    for j in 1..=n2 {
        let sf_j = target.sf(mode.w(grid, j));
        support.push(grid.point(j));
        probs.push((sf_prev - sf_j).max(0.0));
        sf_prev = sf_j;
    }
    let residual_mass = sf_prev.max(0.0);
    let residual_mean = target
        .restricted_mean_above(grid.point(n2))
        .unwrap_or(f64::INFINITY);
    DiscreteScaling::from_atoms(support, probs, residual_mass, residual_mean)
}

/// Smallest `N2` such that the residual mass of the `mode` discretization of
/// `target` on `(t0, K)` falls below `eps1_target`.
pub fn grid_for_eps1(
    target: &dyn ContinuousDist,
    t0: f64,
    k: u32,
    mode: Mode,
    eps1_target: f64,
) -> Result<GeometricGrid> {
    if !(eps1_target > 0.0 && eps1_target < 1.0) {
        return Err(domain_err("eps1 target must lie in (0, 1)"));
    }
    // eps1(N2) = sf(w_N2) is nonincreasing in N2; locate the crossing from
    // the quantile and then scan to the exact smallest index.
    let x_star = target.quantile(1.0 - eps1_target);
    let guess = ((x_star.ln() - t0) * k as f64).ceil().max(1.0) as usize + 2;
    let eps1_at = |n2: usize| -> f64 {
        let grid = GeometricGrid { t0, k, n2 };
        target.sf(mode.w(&grid, n2))
    };
    let mut n2 = guess.max(1);
    while eps1_at(n2) >= eps1_target {
        n2 += 1;
        if n2 > 100_000_000 {
            return Err(domain_err("eps1 target unreachable on this grid"));
        }
    }
    while n2 > 1 && eps1_at(n2 - 1) < eps1_target {
        n2 -= 1;
    }
    GeometricGrid::new(t0, k, n2)
}

/// Exact supremum of `|target(s) - Pi(s)|` over `s in [lo, hi]`.
///
/// `Pi` is a right-continuous step function and `target` a continuous
/// monotone cdf, so the supremum is attained at an atom (from either side)
/// or an interval endpoint; that finite candidate set is evaluated exactly.
/// `hi` may be `f64::INFINITY`.
pub fn sup_diff_step(target: &dyn Cdf, pi: &DiscreteScaling, lo: f64, hi: f64) -> f64 {
    assert!(lo >= 0.0 && hi >= lo, "need 0 <= lo <= hi");
    let mut best = (target.cdf(lo) - pi.cdf_at(lo)).abs();
    if hi > lo {
        let end = if hi.is_finite() {
            (target.cdf(hi) - pi.cdf_at(hi)).abs()
        } else {
            // limit at infinity: target -> 1, Pi -> 1 - eps1
            pi.residual_mass()
        };
        best = best.max(end);
    }
    let support = pi.support();
    let start = support.partition_point(|&s| s <= lo);
    for j in start..support.len() {
        let s = support[j];
        if s > hi {
            break;
        }
        let t = target.cdf(s);
        let left = if j == 0 { 0.0 } else { pi.cum[j - 1] };
        best = best.max((t - left).abs()).max((t - pi.cum[j]).abs());
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::{IntegratedTail, ParetoClaim};

    /// Degenerate point mass at `c`, exposed through the continuous-handle
    /// interface so the builder accepts it.
    struct PointMass(f64);

    impl Cdf for PointMass {
        fn cdf(&self, x: f64) -> f64 {
            if x >= self.0 {
                1.0
            } else {
                0.0
            }
        }
    }

    impl ContinuousDist for PointMass {
        fn pdf(&self, _x: f64) -> f64 {
            0.0
        }
        fn quantile(&self, _q: f64) -> f64 {
            self.0
        }
        fn mean(&self) -> Option<f64> {
            Some(self.0)
        }
        fn restricted_mean_above(&self, t: f64) -> Option<f64> {
            Some(if t < self.0 { self.0 } else { 0.0 })
        }
    }

    fn pareto_fhat() -> IntegratedTail {
        IntegratedTail::of_pareto(2.0).unwrap()
    }

    #[test]
    fn grid_points_are_geometric() {
        let grid = GeometricGrid::new(-3.0, 270, 10).unwrap();
        assert!((grid.point(1) - (-3.0f64).exp()).abs() < 1e-15);
        let ratio = grid.point(2) / grid.point(1);
        assert!((ratio - (1.0f64 / 270.0).exp()).abs() < 1e-15);
    }

    #[test]
    fn coarse_middle_masses_match_direct_cdf_differences() {
        let fhat = pareto_fhat();
        let grid = GeometricGrid::new(-3.0, 1, 10).unwrap();
        let pi = build_scaling(&fhat, &grid, Mode::Middle).unwrap();
        let mut prev_w = 0.0;
        for j in 1..=10usize {
            let w = (grid.point(j) * grid.point(j + 1)).sqrt();
            let direct = fhat.cdf(w) - fhat.cdf(prev_w);
            assert!(
                (pi.probs()[j - 1] - direct).abs() < 1e-14,
                "j={j}: {} vs {direct}",
                pi.probs()[j - 1]
            );
            prev_w = w;
        }
        assert!((pi.residual_mass() - fhat.sf(prev_w)).abs() < 1e-15);
        // integrated tail of phi = 2 has no mean
        assert!(pi.residual_mean().is_infinite());
        assert!(pi.mean().is_infinite());
    }

    #[test]
    fn point_mass_gives_single_atom_and_zero_residual() {
        let grid = GeometricGrid::new(-1.0, 3, 12).unwrap(); // brackets 1
        let pi = build_scaling(&PointMass(1.0), &grid, Mode::Middle).unwrap();
        let carriers: Vec<usize> =
            (0..pi.len()).filter(|&j| pi.probs()[j] > 0.0).collect();
        assert_eq!(carriers.len(), 1);
        assert!((pi.probs()[carriers[0]] - 1.0).abs() < 1e-15);
        assert_eq!(pi.residual_mass(), 0.0);
    }

    #[test]
    fn benchmark_grid_hits_eps1_target() {
        let fhat = pareto_fhat();
        let target = 9.5701e-14;
        let grid = grid_for_eps1(&fhat, -3.0, 270, Mode::Middle, target).unwrap();
        let pi = build_scaling(&fhat, &grid, Mode::Middle).unwrap();
        assert!(pi.residual_mass() < target, "eps1={}", pi.residual_mass());
        // smallest such N2
        let smaller = GeometricGrid::new(-3.0, 270, grid.n2() - 1).unwrap();
        let pi_smaller = build_scaling(&fhat, &smaller, Mode::Middle).unwrap();
        assert!(pi_smaller.residual_mass() >= target);
    }

    #[test]
    fn residuals_nonincreasing_in_n2() {
        let claim = ParetoClaim::new(2.0).unwrap(); // finite mean: eps2 finite
        let mut prev = (1.0f64, f64::INFINITY);
        for n2 in [50usize, 100, 200, 400] {
            let grid = GeometricGrid::new(-2.0, 10, n2).unwrap();
            let pi = build_scaling(&claim, &grid, Mode::Middle).unwrap();
            assert!(pi.residual_mass() <= prev.0);
            assert!(pi.residual_mean() <= prev.1);
            prev = (pi.residual_mass(), pi.residual_mean());
        }
    }

    #[test]
    fn middle_mode_sign_change_within_each_cell() {
        let fhat = pareto_fhat();
        let grid = GeometricGrid::new(-2.0, 5, 40).unwrap();
        let pi = build_scaling(&fhat, &grid, Mode::Middle).unwrap();
        for j in 1..=pi.len() {
            let s_j = grid.point(j);
            let s_next = grid.point(j + 1);
            // Pi sits above the target at the cell's left edge and below it
            // just before the next atom (the cdfs cross at w_j).
            assert!(pi.cdf_at(s_j) >= fhat.cdf(s_j) - 1e-15, "j={j}");
            let just_before = f64::from_bits(s_next.to_bits() - 1);
            assert!(pi.cdf_at(just_before) <= fhat.cdf(just_before) + 1e-15, "j={j}");
        }
    }

    #[test]
    fn sup_diff_degenerate_interval() {
        let fhat = pareto_fhat();
        let grid = GeometricGrid::new(-2.0, 5, 40).unwrap();
        let pi = build_scaling(&fhat, &grid, Mode::Middle).unwrap();
        for &x in &[0.0, 0.3, 1.7, 50.0] {
            let v = sup_diff_step(&fhat, &pi, x, x);
            assert!((v - (fhat.cdf(x) - pi.cdf_at(x)).abs()).abs() < 1e-16);
        }
    }

    #[test]
    fn sup_diff_single_atom_interval_is_max_one_sided_gap() {
        let fhat = pareto_fhat();
        let grid = GeometricGrid::new(-1.0, 2, 10).unwrap();
        let pi = build_scaling(&fhat, &grid, Mode::Middle).unwrap();
        // interval straddling atom j = 4 only
        let j = 4usize;
        let s = pi.support()[j];
        let lo = 0.5 * (pi.support()[j - 1] + s);
        let hi = 0.5 * (s + pi.support()[j + 1]);
        let v = sup_diff_step(&fhat, &pi, lo, hi);
        let gap_left = (fhat.cdf(s) - pi.cum[j - 1]).abs();
        let gap_right = (fhat.cdf(s) - pi.cum[j]).abs();
        let ends = (fhat.cdf(lo) - pi.cdf_at(lo)).abs().max((fhat.cdf(hi) - pi.cdf_at(hi)).abs());
        assert!((v - gap_left.max(gap_right).max(ends)).abs() < 1e-16);
        assert!(v >= gap_left.max(gap_right));
    }

    #[test]
    fn sup_diff_matches_dense_scan_oracle() {
        let fhat = pareto_fhat();
        let grid = grid_for_eps1(&fhat, -3.0, 30, Mode::Middle, 1e-8).unwrap();
        let pi = build_scaling(&fhat, &grid, Mode::Middle).unwrap();
        let exact = sup_diff_step(&fhat, &pi, 0.0, f64::INFINITY);

        // brute force: 1e6 log-spaced points plus both sides of every atom
        let mut scan: f64 = pi.residual_mass();
        let (lo, hi) = (1e-4f64.ln(), 1e9f64.ln());
        for i in 0..1_000_000 {
            let x = (lo + (hi - lo) * i as f64 / 999_999.0).exp();
            scan = scan.max((fhat.cdf(x) - pi.cdf_at(x)).abs());
        }
        for &s in pi.support() {
            let before = f64::from_bits(s.to_bits() - 1);
            scan = scan.max((fhat.cdf(s) - pi.cdf_at(s)).abs());
            scan = scan.max((fhat.cdf(before) - pi.cdf_at(before)).abs());
        }
        assert!((exact - scan).abs() <= 1e-12, "exact={exact} scan={scan}");

        // never exceeds the largest cell increment of the target; the head
        // cell [0, s_1) counts (its whole mass sits on the first atom)
        let max_incr = (1..=pi.len())
            .map(|j| fhat.cdf(grid.point(j + 1)) - fhat.cdf(grid.point(j)))
            .fold(fhat.cdf(grid.point(1)), f64::max);
        assert!(exact <= max_incr);
    }

    #[test]
    fn doubling_k_never_increases_global_sup() {
        let fhat = pareto_fhat();
        let mut prev = f64::INFINITY;
        for k in [30u32, 60, 120] {
            let grid = grid_for_eps1(&fhat, -3.0, k, Mode::Middle, 1e-8).unwrap();
            let pi = build_scaling(&fhat, &grid, Mode::Middle).unwrap();
            let sup = sup_diff_step(&fhat, &pi, 0.0, f64::INFINITY);
            assert!(sup <= prev, "K={k}: {sup} > {prev}");
            prev = sup;
        }
    }

    #[test]
    fn esm_approximation_sharpens_with_resolution() {
        // Convergence needs every part of the law to refine: K controls the
        // cell width and the kernel sharpness, t0 the untiled head below
        // s_1 (whose mass is lumped onto the first atom). Deepen both, as a
        // doubly-infinite grid would, and the sup-grid distance between
        // Pi_m ⋆ G_m and the target strictly decreases.
        let fhat = pareto_fhat();
        let mut prev = f64::INFINITY;
        for (k, t0) in [(30u32, -3.0), (90, -4.0), (270, -5.0)] {
            let grid = grid_for_eps1(&fhat, t0, k, Mode::Middle, 1e-10).unwrap();
            let pi = build_scaling(&fhat, &grid, Mode::Middle).unwrap();
            let mut sup = 0.0f64;
            for i in 0..400 {
                let x = 10f64.powf(-3.0 + 6.0 * i as f64 / 399.0);
                let esm = crate::dist::mellin_star_cdf(&pi, k, x).unwrap();
                sup = sup.max((esm - fhat.cdf(x)).abs());
            }
            assert!(sup < prev, "K={k}: {sup} >= {prev}");
            prev = sup;
        }
    }

    #[test]
    fn modes_order_the_cdf() {
        let fhat = pareto_fhat();
        let grid = GeometricGrid::new(-2.0, 10, 60).unwrap();
        let below = build_scaling(&fhat, &grid, Mode::Below).unwrap();
        let above = build_scaling(&fhat, &grid, Mode::Above).unwrap();
        let middle = build_scaling(&fhat, &grid, Mode::Middle).unwrap();
        // bracketing holds on the covered range [s_1, s_N2]
        for i in 0..100 {
            let x = grid.point(1) + 0.05 * (i + 1) as f64;
            let (b, m, a) = (below.cdf_at(x), middle.cdf_at(x), above.cdf_at(x));
            assert!(b >= m - 1e-15 && m >= a - 1e-15, "x={x}");
            assert!(a <= fhat.cdf(x) + 1e-15 && b >= fhat.cdf(x) - 1e-15, "x={x}");
        }
    }

    #[test]
    fn moment_scaling_masses_are_size_biased() {
        let claim = ParetoClaim::new(2.0).unwrap();
        let grid = grid_for_eps1(&claim, -2.0, 20, Mode::Middle, 1e-9).unwrap();
        let pi = build_scaling(&claim, &grid, Mode::Middle).unwrap();
        let h = pi.moment_scaling().unwrap();
        let mu = pi.mean();
        for j in [0usize, 5, 100] {
            let expected = pi.support()[j] * pi.probs()[j] / mu;
            assert!((h.probs()[j] - expected).abs() < 1e-15);
        }
        assert!((h.residual_mass() - pi.residual_mean() / mu).abs() < 1e-15);
        // infinite-mean law refuses
        let fhat_pi = build_scaling(
            &pareto_fhat(),
            &GeometricGrid::new(-2.0, 10, 50).unwrap(),
            Mode::Middle,
        )
        .unwrap();
        assert!(matches!(fhat_pi.moment_scaling(), Err(crate::Error::InfiniteMean)));
    }

    #[test]
    fn from_atoms_validates() {
        assert!(DiscreteScaling::from_atoms(vec![], vec![], 0.0, 0.0).is_err());
        assert!(DiscreteScaling::from_atoms(vec![2.0, 1.0], vec![0.5, 0.5], 0.0, 0.0).is_err());
        assert!(DiscreteScaling::from_atoms(vec![1.0], vec![0.4], 0.0, 0.0).is_err()); // mass deficit
        assert!(DiscreteScaling::from_atoms(vec![1.0], vec![0.9], 0.1, 0.0).is_ok());
    }

    #[test]
    fn csv_round_trip_shape() {
        let pi =
            DiscreteScaling::from_atoms(vec![0.5, 2.0], vec![0.25, 0.75], 0.0, 0.0).unwrap();
        let mut buf = Vec::new();
        pi.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "index,s,pi");
        assert_eq!(lines[1], "1,0.5,0.25");
        assert_eq!(lines[2], "2,2,0.75");
    }

    #[test]
    fn fmt_sig_basic() {
        assert_eq!(fmt_sig(0.0, 12), "0");
        assert_eq!(fmt_sig(1.0, 12), "1");
        assert_eq!(fmt_sig(0.915506746, 12), "0.915506746");
        assert_eq!(fmt_sig(3.6522e-9, 12), "3.6522e-9");
        assert_eq!(fmt_sig(f64::INFINITY, 12), "inf");
    }
}
