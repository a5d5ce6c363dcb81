//! Log-log memoization of the slow thermodynamic integrals (k, e, and P for
//! laws without a closed form). Built once at construction; immutable after.

use crate::interp::Pchip;

/// Monotone positive function cached as PCHIP in (ln rho, ln F), with
/// power-law extensions outside the grid.
#[derive(Debug, Clone)]
pub struct LogLogCache {
    interp: Pchip,
    /// (exponent, coefficient) for F ~ coeff * rho^exponent below the grid.
    lo: (f64, f64),
    /// Additive tail above the grid: F(rho) = f_top + hi_coeff*(rho^hi_exp - top^hi_exp).
    hi: (f64, f64),
    rho_min: f64,
    rho_max: f64,
    f_top: f64,
}

impl LogLogCache {
    /// `values` and analytic `derivs` (dF/drho) at `rhos` (strictly
    /// increasing, all positive); tail exponents and tail coefficients
    /// supply the extensions. Interpolation is cubic Hermite in
    /// (ln rho, ln F) with the exact logarithmic slopes rho F'/F.
    pub fn new(
        rhos: &[f64],
        values: &[f64],
        derivs: &[f64],
        lo_exp: f64,
        hi_exp: f64,
        hi_coeff: f64,
    ) -> Self {
        let xs: Vec<f64> = rhos.iter().map(|r| r.ln()).collect();
        let ys: Vec<f64> = values.iter().map(|v| v.ln()).collect();
        let slopes: Vec<f64> = rhos
            .iter()
            .zip(values)
            .zip(derivs)
            .map(|((&r, &v), &d)| r * d / v)
            .collect();
        let rho_min = rhos[0];
        let rho_max = *rhos.last().unwrap();
        let f_lo = values[0];
        let f_top = *values.last().unwrap();
        LogLogCache {
            interp: Pchip::with_slopes(xs, ys, slopes),
            lo: (lo_exp, f_lo / rho_min.powf(lo_exp)),
            hi: (hi_exp, hi_coeff),
            rho_min,
            rho_max,
            f_top,
        }
    }

    pub fn eval(&self, rho: f64) -> f64 {
        if rho < self.rho_min {
            self.lo.1 * rho.powf(self.lo.0)
        } else if rho > self.rho_max {
            self.f_top + self.hi.1 * (rho.powf(self.hi.0) - self.rho_max.powf(self.hi.0))
        } else {
            self.interp.eval(rho.ln()).exp()
        }
    }

    /// Invert the (monotone increasing) cached function.
    pub fn inverse(&self, value: f64) -> f64 {
        if value <= 0.0 {
            return 0.0;
        }
        let f_lo = self.lo.1 * self.rho_min.powf(self.lo.0);
        if value <= f_lo {
            return (value / self.lo.1).powf(1.0 / self.lo.0);
        }
        if value >= self.f_top {
            let arg = (value - self.f_top) / self.hi.1 + self.rho_max.powf(self.hi.0);
            return arg.powf(1.0 / self.hi.0);
        }
        let target = value.ln();
        let g = |lx: f64| self.interp.eval(lx) - target;
        crate::interp::bisect(g, self.rho_min.ln(), self.rho_max.ln(), 1e-15).exp()
    }

    pub fn range(&self) -> (f64, f64) {
        (self.rho_min, self.rho_max)
    }
}
