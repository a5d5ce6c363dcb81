//! Interpolation and scalar root/extremum search helpers.

/// Monotone cubic (Fritsch–Carlson) interpolant on a strictly increasing grid.
#[derive(Debug, Clone)]
pub struct Pchip {
    xs: Vec<f64>,
    ys: Vec<f64>,
    slopes: Vec<f64>,
}

impl Pchip {
    /// Cubic Hermite with caller-supplied exact slopes.
    pub fn with_slopes(xs: Vec<f64>, ys: Vec<f64>, slopes: Vec<f64>) -> Self {
        assert!(xs.len() == ys.len() && xs.len() == slopes.len() && xs.len() >= 2);
        Pchip { xs, ys, slopes }
    }

    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Self {
        assert!(xs.len() == ys.len() && xs.len() >= 2);
        let n = xs.len();
        let mut d = vec![0.0; n - 1];
        for i in 0..n - 1 {
            d[i] = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        }
        let mut m = vec![0.0; n];
        m[0] = d[0];
        m[n - 1] = d[n - 2];
        for i in 1..n - 1 {
            if d[i - 1] * d[i] <= 0.0 {
                m[i] = 0.0;
            } else {
                let w1 = 2.0 * (xs[i + 1] - xs[i]) + (xs[i] - xs[i - 1]);
                let w2 = (xs[i + 1] - xs[i]) + 2.0 * (xs[i] - xs[i - 1]);
                m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
            }
        }
        Pchip { xs, ys, slopes: m }
    }

    fn segment(&self, x: f64) -> usize {
        match self.xs.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
            Ok(i) => i.min(self.xs.len() - 2),
            Err(i) => i.clamp(1, self.xs.len() - 1) - 1,
        }
    }

    /// Evaluate; extrapolates with the boundary cubic outside the grid.
    pub fn eval(&self, x: f64) -> f64 {
        let i = self.segment(x);
        let h = self.xs[i + 1] - self.xs[i];
        let t = (x - self.xs[i]) / h;
        let (y0, y1) = (self.ys[i], self.ys[i + 1]);
        let (m0, m1) = (self.slopes[i] * h, self.slopes[i + 1] * h);
        let t2 = t * t;
        let t3 = t2 * t;
        y0 * (2.0 * t3 - 3.0 * t2 + 1.0)
            + m0 * (t3 - 2.0 * t2 + t)
            + y1 * (-2.0 * t3 + 3.0 * t2)
            + m1 * (t3 - t2)
    }

    pub fn x_min(&self) -> f64 {
        self.xs[0]
    }

    pub fn x_max(&self) -> f64 {
        *self.xs.last().unwrap()
    }
}

/// Piecewise-linear interpolation with zero extension outside the grid.
/// `xs` strictly increasing.
pub fn lerp_zero_ext(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    if xs.is_empty() || x < xs[0] || x > *xs.last().unwrap() {
        return 0.0;
    }
    let i = match xs.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
        Ok(i) => return ys[i],
        Err(i) => i.clamp(1, xs.len() - 1) - 1,
    };
    let t = (x - xs[i]) / (xs[i + 1] - xs[i]);
    ys[i] * (1.0 - t) + ys[i + 1] * t
}

/// Bisection for a strictly monotone continuous `f` with a sign change on
/// [lo, hi]; refines to relative tolerance `rel` in the argument.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, rel: f64) -> f64 {
    let flo = f(lo);
    let fhi = f(hi);
    assert!(
        flo == 0.0 || fhi == 0.0 || (flo < 0.0) != (fhi < 0.0),
        "bisect: no sign change on [{lo}, {hi}] (f: {flo}, {fhi})"
    );
    if flo == 0.0 {
        return lo;
    }
    if fhi == 0.0 {
        return hi;
    }
    let increasing = fhi > 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (hi - lo).abs() <= rel * mid.abs().max(1e-300) {
            return mid;
        }
        let fm = f(mid);
        if (fm > 0.0) == increasing {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Golden-section maximization of a unimodal `f` on [lo, hi]; returns (x, f(x)).
pub fn golden_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, iters: usize) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 > f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pchip_reproduces_power_law_on_log_grid() {
        // log-log interpolation of y = x^1.7 is exact up to rounding.
        let xs: Vec<f64> = (0..50).map(|i| -8.0 + 0.4 * i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|&lx| 1.7 * lx).collect();
        let p = Pchip::new(xs, ys);
        let v = p.eval(-3.17);
        assert!((v - 1.7 * (-3.17)).abs() < 1e-12);
    }

    #[test]
    fn bisect_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14);
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn golden_finds_peak() {
        let (x, v) = golden_max(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 80);
        assert!((x - 0.3).abs() < 1e-9 && v.abs() < 1e-15);
    }
}
