//! Shared numerical machinery: compensated summation, adaptive quadrature,
//! 1-D searches and special-function helpers.

pub mod quad;
pub mod search;
pub mod special;

/// Kahan compensated accumulator.
///
/// The κ recursion chains ~10⁶ convolution sums; plain accumulation loses
/// digits that the downstream Poisson mixture cannot recover.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let y = value - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }

    pub fn sum_iter<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc.value()
    }
}

/// Dot product `a[i] * b[rev(i)]` with Kahan compensation.
#[inline]
pub fn kahan_dot_rev(a: &[f64], b_rev: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b_rev.len());
    let mut acc = KahanSum::new();
    for (x, y) in a.iter().zip(b_rev.iter().rev()) {
        acc.add(x * y);
    }
    acc.value()
}
