//! Closed-form pressure laws and their first two derivatives.

use crate::quad;

/// Degenerate-electron pressure integrand antiderivative:
/// `f(x) = 8 * integral_0^x t^4 (1+t^2)^(-1/2) dt = x(2x^2-3)sqrt(1+x^2) + 3 asinh(x)`.
///
/// The closed form cancels catastrophically near zero, so a series is used
/// for small arguments.
pub fn fermi_f(x: f64) -> f64 {
    if x < 0.6 {
        // 8 * sum_n c_n x^{5+2n}/(5+2n), c_n = binom(-1/2, n)
        let x2 = x * x;
        let mut c = 1.0; // c_0
        let mut pow = x2 * x2 * x; // x^5
        let mut sum = 0.0;
        for n in 0..48 {
            let term = 8.0 * c * pow / (5.0 + 2.0 * n as f64);
            sum += term;
            if term.abs() < 1e-17 * sum.abs() {
                break;
            }
            c *= -(0.5 + n as f64) / (n as f64 + 1.0);
            pow *= x2;
        }
        sum
    } else {
        x * (2.0 * x * x - 3.0) * (1.0 + x * x).sqrt() + 3.0 * x.asinh()
    }
}

/// White-dwarf pressure: `P = c1 * c3^2 / 8 * f(c2 rho^{1/3} / sqrt(c3))`.
pub fn wd_pressure(c1: f64, c2: f64, c3: f64, rho: f64) -> f64 {
    let x = c2 * rho.powf(1.0 / 3.0) / c3.sqrt();
    c1 * c3 * c3 / 8.0 * fermi_f(x)
}

pub fn wd_dp(c1: f64, c2: f64, c3: f64, rho: f64) -> f64 {
    let y = c2 * c2 * rho.powf(2.0 / 3.0);
    c1 * c2.powi(5) / 3.0 * rho.powf(2.0 / 3.0) / (c3 + y).sqrt()
}

pub fn wd_d2p(c1: f64, c2: f64, c3: f64, rho: f64) -> f64 {
    let y = c2 * c2 * rho.powf(2.0 / 3.0);
    2.0 * c1 * c2.powi(5) / 9.0 * rho.powf(-1.0 / 3.0) * (c3 + 0.5 * y) * (c3 + y).powf(-1.5)
}

/// Interpolating-exponent pressure: `P = integral_0^{rho^{1/3}} s^4 (delta + s^{2+e0})^{-1/2} ds`.
pub fn pdelta_pressure(delta: f64, e0: f64, rho: f64) -> f64 {
    let x = rho.powf(1.0 / 3.0);
    quad::integrate(|s| s.powi(4) / (delta + s.powf(2.0 + e0)).sqrt(), 0.0, x, 1e-13)
}

pub fn pdelta_dp(delta: f64, e0: f64, rho: f64) -> f64 {
    let q = (2.0 + e0) / 3.0;
    rho.powf(2.0 / 3.0) / (3.0 * (delta + rho.powf(q)).sqrt())
}

pub fn pdelta_d2p(delta: f64, e0: f64, rho: f64) -> f64 {
    let q = (2.0 + e0) / 3.0;
    let rq = rho.powf(q);
    rho.powf(-1.0 / 3.0) / 3.0 * (delta + rq).powf(-1.5) * (2.0 / 3.0 * delta + (2.0 / 3.0 - 0.5 * q) * rq)
}

/// White-dwarf `k(rho) = sqrt(3 c1 c2^5) * integral_0^{rho^{1/3}} (c3 + c2^2 w^2)^{-1/4} dw`.
pub fn wd_k(c1: f64, c2: f64, c3: f64, rho: f64) -> f64 {
    let x = rho.powf(1.0 / 3.0);
    (3.0 * c1 * c2.powi(5)).sqrt()
        * quad::integrate(|w| (c3 + c2 * c2 * w * w).powf(-0.25), 0.0, x, 1e-13)
}

pub fn pdelta_k(delta: f64, e0: f64, rho: f64) -> f64 {
    let x = rho.powf(1.0 / 3.0);
    3f64.sqrt() * quad::integrate(|w| (delta + w.powf(2.0 + e0)).powf(-0.25), 0.0, x, 1e-13)
}

/// Internal energy for the interpolating-exponent law, with the order of the
/// double integral swapped so a single smooth quadrature remains:
/// `e(rho) = integral_0^{rho^{1/3}} g(t) (t^{-3} - rho^{-1}) dt`.
pub fn pdelta_e(delta: f64, e0: f64, rho: f64) -> f64 {
    let x = rho.powf(1.0 / 3.0);
    quad::integrate(
        |t| {
            let g = t.powi(4) / (delta + t.powf(2.0 + e0)).sqrt();
            g * (t.powi(-3) - 1.0 / rho)
        },
        0.0,
        x,
        1e-13,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermi_series_matches_closed_form_at_crossover() {
        for &x in &[0.55, 0.6, 0.65, 0.8] {
            let series = {
                let x2: f64 = x * x;
                let mut c = 1.0;
                let mut pow = x2 * x2 * x;
                let mut sum: f64 = 0.0;
                for n in 0..80 {
                    sum += 8.0 * c * pow / (5.0 + 2.0 * n as f64);
                    c *= -(0.5 + n as f64) / (n as f64 + 1.0);
                    pow *= x2;
                }
                sum
            };
            let closed = x * (2.0 * x * x - 3.0) * (1.0 + x * x).sqrt() + 3.0 * f64::asinh(x);
            assert!((series - closed).abs() < 1e-13 * closed.abs());
        }
    }

    #[test]
    fn wd_dp_is_derivative_of_pressure() {
        let (c1, c2, c3) = (1.0, 1.0, 1.0);
        for &rho in &[1e-3, 0.5, 2.0, 1e3] {
            let h = rho * 1e-6;
            let fd = (wd_pressure(c1, c2, c3, rho + h) - wd_pressure(c1, c2, c3, rho - h)) / (2.0 * h);
            let an = wd_dp(c1, c2, c3, rho);
            assert!((fd - an).abs() < 1e-8 * an.abs(), "rho={rho}: {fd} vs {an}");
        }
    }

    #[test]
    fn wd_d2p_is_second_derivative() {
        let (c1, c2, c3) = (2.0, 1.5, 0.7);
        for &rho in &[1e-2, 1.0, 1e2] {
            let h = rho * 1e-5;
            let fd = (wd_dp(c1, c2, c3, rho + h) - wd_dp(c1, c2, c3, rho - h)) / (2.0 * h);
            let an = wd_d2p(c1, c2, c3, rho);
            assert!((fd - an).abs() < 1e-7 * an.abs());
        }
    }

    #[test]
    fn pdelta_derivatives_consistent() {
        let (delta, e0) = (1.0, 0.5);
        for &rho in &[0.1, 1.0, 10.0] {
            let h = rho * 1e-6;
            let fd = (pdelta_pressure(delta, e0, rho + h) - pdelta_pressure(delta, e0, rho - h)) / (2.0 * h);
            let an = pdelta_dp(delta, e0, rho);
            assert!((fd - an).abs() < 1e-7 * an.abs());
            let h2 = rho * 1e-5;
            let fd2 = (pdelta_dp(delta, e0, rho + h2) - pdelta_dp(delta, e0, rho - h2)) / (2.0 * h2);
            let an2 = pdelta_d2p(delta, e0, rho);
            assert!((fd2 - an2).abs() < 1e-7 * an2.abs());
        }
    }
}
