//! 1-D searches: golden-section minimization, grid-seeded suprema and
//! bisection root finding.

use crate::{Error, Result};

const INV_GOLDEN: f64 = 0.618_033_988_749_894_9; // 1/phi
const RESP: f64 = 1.0 - INV_GOLDEN;

/// Golden-section search for the minimum of `f` on `[a, b]`.
///
/// Returns `(x_min, f_min)` after `max_iter` shrink steps (or earlier once
/// the bracket collapses to floating-point resolution).
pub fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, max_iter: usize) -> (f64, f64) {
    let mut x1 = a + RESP * (b - a);
    let mut x2 = b - RESP * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);

    for _ in 0..max_iter {
        if (b - a).abs() <= f64::EPSILON * (a.abs() + b.abs()) {
            break;
        }
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + RESP * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - RESP * (b - a);
            f2 = f(x2);
        }
    }
    if f1 < f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Supremum of `f` over `(lo, hi)`: dense grid seed plus golden-section
/// refinement around the best cell.
///
/// Unimodality is not assumed; the grid localizes the global maximum and the
/// golden step only polishes it. `log_grid` spaces the seed geometrically
/// (natural for scale families), which requires `lo > 0`.
pub fn grid_sup(f: impl Fn(f64) -> f64, lo: f64, hi: f64, points: usize, log_grid: bool) -> f64 {
    assert!(points >= 2 && hi > lo);
    let xs: Vec<f64> = if log_grid {
        assert!(lo > 0.0);
        let (la, lb) = (lo.ln(), hi.ln());
        (0..points)
            .map(|i| (la + (lb - la) * i as f64 / (points - 1) as f64).exp())
            .collect()
    } else {
        (0..points)
            .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
            .collect()
    };

    let mut best_i = 0;
    let mut best = f64::NEG_INFINITY;
    for (i, &x) in xs.iter().enumerate() {
        let v = f(x);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let a = xs[best_i.saturating_sub(1)];
    let b = xs[(best_i + 1).min(points - 1)];
    let (_, neg_min) = golden_min(|x| -f(x), a, b, 80);
    best.max(-neg_min)
}

/// Bisection for a sign change of `f` on `[a, b]`.
///
/// Requires `f(a)` and `f(b)` of opposite sign (zero endpoints are accepted
/// as roots); refines to absolute `x` tolerance `tol`.
pub fn bisect_root(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> Result<f64> {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoRoot);
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (b - a).abs() <= tol || m <= a || m >= b {
            return Ok(m);
        }
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}
