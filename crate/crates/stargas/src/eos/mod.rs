//! Barotropic pressure laws with power-law behavior at vacuum and at high
//! density, plus all thermodynamic functions derived from them.

mod bounds;
mod cache;
mod forms;

pub use bounds::{verify_asymptotic_bounds, BoundViolation, BoundsReport, QuantityBounds};

use cache::LogLogCache;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quad;

/// Closed-form variants of the pressure function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PressureLaw {
    /// `P = kappa * rho^gamma`.
    Polytropic { kappa: f64, gamma: f64 },
    /// Degenerate-electron gas: `P = c1 * integral_0^{c2 rho^{1/3}} s^4/sqrt(c3+s^2) ds`.
    WhiteDwarf { c1: f64, c2: f64, c3: f64 },
    /// `P = integral_0^{rho^{1/3}} s^4/sqrt(delta + s^{2+eps0}) ds`, `eps0 in (0, 4/5)`.
    PDelta { delta: f64, eps0: f64 },
}

#[derive(Debug, Error, PartialEq)]
pub enum EosError {
    #[error("low-density exponent gamma1 = {0} outside (1, 3)")]
    GammaLowOutOfRange(f64),
    #[error("high-density exponent gamma2 = {0} outside ({1}, gamma1]")]
    GammaHighOutOfRange(f64, f64),
    #[error("law parameter {name} = {value} must be positive")]
    NonPositiveParameter { name: &'static str, value: f64 },
    #[error("eps0 = {0} outside (0, 4/5)")]
    Eps0OutOfRange(f64),
    #[error("density {0} outside the domain of {1}")]
    DomainError(f64, &'static str),
    #[error("thresholds must satisfy 0 < rho_lo < rho_hi, got ({0}, {1})")]
    BadThresholds(f64, f64),
}

/// Where the law will be used; the viscous solver needs the stronger
/// high-density exponent restriction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Usage {
    /// Requires `gamma2 > 6/5`.
    Solver,
    /// Requires only `gamma2 > 1`.
    KernelOnly,
}

/// A validated pressure law with derived structural constants and caches
/// for the slow integrals. Immutable and safe to share across threads.
#[derive(Debug, Clone)]
pub struct Eos {
    pub law: PressureLaw,
    /// Exponent near vacuum (gamma1).
    pub gamma_lo: f64,
    /// Exponent at high density (gamma2).
    pub gamma_hi: f64,
    /// Pressure scale near vacuum (kappa1).
    pub kappa_lo: f64,
    /// Pressure scale at high density (kappa2).
    pub kappa_hi: f64,
    /// Low-density threshold rho_* below which P ~ kappa1 rho^gamma1.
    pub rho_lo: f64,
    /// High-density threshold rho^* above which P ~ kappa2 rho^gamma2.
    pub rho_hi: f64,
    /// Decay exponent of the high-density correction.
    pub tail_decay: f64,
    k_cache: Option<LogLogCache>,
    e_cache: Option<LogLogCache>,
}

impl Eos {
    /// Validate for solver use (`gamma2 in (6/5, gamma1]`).
    pub fn new(law: PressureLaw) -> Result<Self, EosError> {
        Self::with_usage(law, Usage::Solver)
    }

    /// Validate for entropy-kernel work only (`gamma2 in (1, gamma1]`).
    pub fn new_kernel_only(law: PressureLaw) -> Result<Self, EosError> {
        Self::with_usage(law, Usage::KernelOnly)
    }

    pub fn with_usage(law: PressureLaw, usage: Usage) -> Result<Self, EosError> {
        let (gamma_lo, gamma_hi, kappa_lo, kappa_hi, tail_decay, scale) = match law {
            PressureLaw::Polytropic { kappa, gamma } => {
                check_positive("kappa", kappa)?;
                (gamma, gamma, kappa, kappa, 1.0, 1.0)
            }
            PressureLaw::WhiteDwarf { c1, c2, c3 } => {
                check_positive("c1", c1)?;
                check_positive("c2", c2)?;
                check_positive("c3", c3)?;
                let kappa1 = c1 * c2.powi(5) / (5.0 * c3.sqrt());
                let kappa2 = c1 * c2.powi(4) / 4.0;
                // Natural density scale: relativity parameter x = 1.
                let scale = c3.powf(1.5) / c2.powi(3);
                (5.0 / 3.0, 4.0 / 3.0, kappa1, kappa2, 2.0 / 3.0, scale)
            }
            PressureLaw::PDelta { delta, eps0 } => {
                check_positive("delta", delta)?;
                if !(eps0 > 0.0 && eps0 < 0.8) {
                    return Err(EosError::Eps0OutOfRange(eps0));
                }
                let kappa1 = 1.0 / (5.0 * delta.sqrt());
                let kappa2 = 2.0 / (8.0 - eps0);
                let scale = delta.powf(3.0 / (2.0 + eps0));
                (5.0 / 3.0, 4.0 / 3.0 - eps0 / 6.0, kappa1, kappa2, (2.0 + eps0) / 3.0, scale)
            }
        };
        if !(gamma_lo > 1.0 && gamma_lo < 3.0) {
            return Err(EosError::GammaLowOutOfRange(gamma_lo));
        }
        let min_hi = match usage {
            Usage::Solver => 1.2,
            Usage::KernelOnly => 1.0,
        };
        if !(gamma_hi > min_hi && gamma_hi <= gamma_lo) {
            return Err(EosError::GammaHighOutOfRange(gamma_hi, min_hi));
        }
        let mut eos = Eos {
            law,
            gamma_lo,
            gamma_hi,
            kappa_lo,
            kappa_hi,
            rho_lo: 1e-3 * scale,
            rho_hi: 1e3 * scale,
            tail_decay,
            k_cache: None,
            e_cache: None,
        };
        eos.build_caches();
        Ok(eos)
    }

    /// Override the default tail thresholds.
    pub fn with_thresholds(mut self, rho_lo: f64, rho_hi: f64) -> Result<Self, EosError> {
        if !(rho_lo > 0.0 && rho_hi > rho_lo) {
            return Err(EosError::BadThresholds(rho_lo, rho_hi));
        }
        self.rho_lo = rho_lo;
        self.rho_hi = rho_hi;
        Ok(self)
    }

    fn build_caches(&mut self) {
        // Only the white-dwarf law is both cache-worthy (solver hot loop)
        // and closed-form-free for k and e. Polytropic laws have closed
        // forms; the interpolating-exponent law is evaluated by direct
        // quadrature since it never enters the solver inner loop.
        let PressureLaw::WhiteDwarf { c1, c2, c3 } = self.law else {
            return;
        };
        let scale = self.rho_lo * 1e3; // crossover scale
        let rho_min = scale * 1e-12;
        let rho_max = scale * 1e12;
        let per_decade = 64usize;
        let decades = (rho_max / rho_min).log10();
        let n = (decades * per_decade as f64).ceil() as usize + 1;
        let rhos: Vec<f64> = (0..n)
            .map(|i| rho_min * 10f64.powf(decades * i as f64 / (n - 1) as f64))
            .collect();

        // k(rho): smooth integrand after the w = y^{1/3} substitution.
        let theta_lo = (self.gamma_lo - 1.0) / 2.0;
        let theta_hi = (self.gamma_hi - 1.0) / 2.0;
        let k_vals = cumulative_k(&rhos, move |w| {
            (3.0 * c1 * c2.powi(5)).sqrt() * (c3 + c2 * c2 * w * w).powf(-0.25)
        });
        let k_derivs: Vec<f64> = rhos.iter().map(|&r| self.dp(r).sqrt() / r).collect();
        let k_hi_coeff = 2.0 * (self.gamma_hi * self.kappa_hi).sqrt() / (self.gamma_hi - 1.0);
        self.k_cache = Some(LogLogCache::new(
            &rhos, &k_vals, &k_derivs, theta_lo, theta_hi, k_hi_coeff,
        ));

        // e(rho) = integral_0^rho P(s)/s^2 ds; the vacuum cusp is removed by
        // the substitution s = w^3 on the first segment.
        let press = |r: f64| self.pressure_raw(r);
        let mut e_vals = Vec::with_capacity(rhos.len());
        let first = quad::integrate(
            |w| 3.0 * press(w * w * w) / w.powi(4),
            0.0,
            rhos[0].powf(1.0 / 3.0),
            1e-12,
        );
        e_vals.push(first);
        for i in 1..rhos.len() {
            let seg = quad::integrate(|s| press(s) / (s * s), rhos[i - 1], rhos[i], 1e-12);
            e_vals.push(e_vals[i - 1] + seg);
        }
        let e_derivs: Vec<f64> = rhos.iter().map(|&r| press(r) / (r * r)).collect();
        let e_hi_coeff = self.kappa_hi / (self.gamma_hi - 1.0);
        self.e_cache = Some(LogLogCache::new(
            &rhos,
            &e_vals,
            &e_derivs,
            self.gamma_lo - 1.0,
            self.gamma_hi - 1.0,
            e_hi_coeff,
        ));
    }

    fn pressure_raw(&self, rho: f64) -> f64 {
        match self.law {
            PressureLaw::Polytropic { kappa, gamma } => kappa * rho.powf(gamma),
            PressureLaw::WhiteDwarf { c1, c2, c3 } => forms::wd_pressure(c1, c2, c3, rho),
            PressureLaw::PDelta { delta, eps0 } => forms::pdelta_pressure(delta, eps0, rho),
        }
    }

    /// P(rho). Errors on negative density.
    pub fn pressure(&self, rho: f64) -> Result<f64, EosError> {
        if rho < 0.0 {
            return Err(EosError::DomainError(rho, "pressure"));
        }
        if rho == 0.0 {
            return Ok(0.0);
        }
        Ok(self.pressure_raw(rho))
    }

    /// P'(rho), closed form for every law.
    pub fn dp(&self, rho: f64) -> f64 {
        match self.law {
            PressureLaw::Polytropic { kappa, gamma } => kappa * gamma * rho.powf(gamma - 1.0),
            PressureLaw::WhiteDwarf { c1, c2, c3 } => forms::wd_dp(c1, c2, c3, rho),
            PressureLaw::PDelta { delta, eps0 } => forms::pdelta_dp(delta, eps0, rho),
        }
    }

    /// P''(rho), closed form for every law.
    pub fn d2p(&self, rho: f64) -> f64 {
        match self.law {
            PressureLaw::Polytropic { kappa, gamma } => {
                kappa * gamma * (gamma - 1.0) * rho.powf(gamma - 2.0)
            }
            PressureLaw::WhiteDwarf { c1, c2, c3 } => forms::wd_d2p(c1, c2, c3, rho),
            PressureLaw::PDelta { delta, eps0 } => forms::pdelta_d2p(delta, eps0, rho),
        }
    }

    /// Sound speed `c = sqrt(P')`; requires `rho > 0`.
    pub fn sound_speed(&self, rho: f64) -> Result<f64, EosError> {
        if rho <= 0.0 {
            return Err(EosError::DomainError(rho, "sound_speed"));
        }
        Ok(self.dp(rho).sqrt())
    }

    /// `k(rho) = integral_0^rho sqrt(P'(y))/y dy`; strictly increasing, k(0)=0.
    pub fn k(&self, rho: f64) -> Result<f64, EosError> {
        if rho < 0.0 {
            return Err(EosError::DomainError(rho, "k"));
        }
        if rho == 0.0 {
            return Ok(0.0);
        }
        Ok(match self.law {
            PressureLaw::Polytropic { kappa, gamma } => {
                2.0 * (kappa * gamma).sqrt() / (gamma - 1.0) * rho.powf((gamma - 1.0) / 2.0)
            }
            PressureLaw::WhiteDwarf { .. } => self.k_cache.as_ref().unwrap().eval(rho),
            PressureLaw::PDelta { delta, eps0 } => forms::pdelta_k(delta, eps0, rho),
        })
    }

    /// `k'(rho) = sqrt(P')/rho`.
    pub fn k_prime(&self, rho: f64) -> f64 {
        self.dp(rho).sqrt() / rho
    }

    /// `k''(rho) = k'(rho) (d(rho) - 2) / rho`.
    pub fn k_second(&self, rho: f64) -> f64 {
        self.k_prime(rho) * (self.d_of_rho(rho).unwrap() - 2.0) / rho
    }

    /// Inverse of `k`; returns the density with the given k-value.
    pub fn k_inv(&self, kval: f64) -> f64 {
        if kval <= 0.0 {
            return 0.0;
        }
        match self.law {
            PressureLaw::Polytropic { kappa, gamma } => {
                let theta = (gamma - 1.0) / 2.0;
                let c = 2.0 * (kappa * gamma).sqrt() / (gamma - 1.0);
                (kval / c).powf(1.0 / theta)
            }
            PressureLaw::WhiteDwarf { .. } => self.k_cache.as_ref().unwrap().inverse(kval),
            PressureLaw::PDelta { .. } => {
                let mut hi = 1.0;
                while self.k(hi).unwrap() < kval {
                    hi *= 1e3;
                }
                let mut lo = hi * 1e-3;
                while self.k(lo).unwrap() > kval {
                    lo *= 1e-3;
                }
                crate::interp::bisect(|r| self.k(r).unwrap() - kval, lo, hi, 1e-13)
            }
        }
    }

    /// Internal energy: `e' = P/rho^2`, `e(0) = 0`.
    pub fn internal_energy(&self, rho: f64) -> Result<f64, EosError> {
        if rho < 0.0 {
            return Err(EosError::DomainError(rho, "internal_energy"));
        }
        if rho == 0.0 {
            return Ok(0.0);
        }
        Ok(match self.law {
            PressureLaw::Polytropic { kappa, gamma } => {
                kappa * rho.powf(gamma - 1.0) / (gamma - 1.0)
            }
            PressureLaw::WhiteDwarf { .. } => self.e_cache.as_ref().unwrap().eval(rho),
            PressureLaw::PDelta { delta, eps0 } => forms::pdelta_e(delta, eps0, rho),
        })
    }

    /// `e'(rho) = P/rho^2`.
    pub fn e_prime(&self, rho: f64) -> f64 {
        self.pressure(rho).unwrap_or(0.0) / (rho * rho)
    }

    /// `d(rho) = 2 + rho k''/k' = 1 + rho P''/(2 P')`; bounded in (0, C].
    pub fn d_of_rho(&self, rho: f64) -> Result<f64, EosError> {
        if rho <= 0.0 {
            return Err(EosError::DomainError(rho, "d_of_rho"));
        }
        Ok(1.0 + rho * self.d2p(rho) / (2.0 * self.dp(rho)))
    }

    /// Invert the (monotone) pressure.
    pub fn pressure_inv(&self, p: f64) -> f64 {
        if p <= 0.0 {
            return 0.0;
        }
        if let PressureLaw::Polytropic { kappa, gamma } = self.law {
            return (p / kappa).powf(1.0 / gamma);
        }
        // Bracket by scanning decades, then bisect.
        let mut lo = 1e-30;
        let mut hi = 1e30;
        while self.pressure_raw(lo) > p {
            lo *= 1e-6;
        }
        while self.pressure_raw(hi) < p {
            hi *= 1e6;
        }
        crate::interp::bisect(|r| self.pressure(r).unwrap() - p, lo, hi, 1e-14)
    }

    /// Exponent split used by the entropy estimates: gamma1 at or below
    /// rho_*, gamma2 above.
    pub fn gamma_at(&self, rho: f64) -> f64 {
        if rho <= self.rho_lo {
            self.gamma_lo
        } else {
            self.gamma_hi
        }
    }

    pub fn theta_at(&self, rho: f64) -> f64 {
        (self.gamma_at(rho) - 1.0) / 2.0
    }

    pub fn theta_lo(&self) -> f64 {
        (self.gamma_lo - 1.0) / 2.0
    }

    pub fn theta_hi(&self) -> f64 {
        (self.gamma_hi - 1.0) / 2.0
    }

    /// Kernel cone exponent `lambda1 = (3 - gamma1) / (2 (gamma1 - 1)) > 0`.
    pub fn lambda1(&self) -> f64 {
        (3.0 - self.gamma_lo) / (2.0 * (self.gamma_lo - 1.0))
    }

    /// Tail bound on `|rho k''/k'|`.
    ///
    /// The sandwich bounds give `rho P''/P' >= (3 g1 - 1)(g - 1)/(g1 + 5)`
    /// on a tail with exponent `g`, so the binding constant over both tails
    /// carries the smaller exponent:
    /// `nu = 1 - (3 g1 - 1)(g2 - 1)/(2 (5 + g1)) < 1`.
    pub fn nu(&self) -> f64 {
        let g1 = self.gamma_lo;
        let g2 = self.gamma_hi;
        1.0 - (3.0 * g1 - 1.0) * (g2 - 1.0) / (2.0 * (5.0 + g1))
    }

    /// Sandwich half-width for the tail bounds: `a0 = (3 - g1)/(2 (g1 + 1))`.
    pub fn a0_margin(&self) -> f64 {
        (3.0 - self.gamma_lo) / (2.0 * (self.gamma_lo + 1.0))
    }
}

fn check_positive(name: &'static str, value: f64) -> Result<(), EosError> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(EosError::NonPositiveParameter { name, value })
    }
}

/// Cumulative quadrature of `k` on the grid, integrating the substituted
/// integrand `g(w)` over w = rho^{1/3} segments.
fn cumulative_k<F: Fn(f64) -> f64>(rhos: &[f64], g: F) -> Vec<f64> {
    let mut out = Vec::with_capacity(rhos.len());
    let mut acc = quad::integrate(&g, 0.0, rhos[0].powf(1.0 / 3.0), 1e-13);
    out.push(acc);
    for i in 1..rhos.len() {
        acc += quad::integrate(&g, rhos[i - 1].powf(1.0 / 3.0), rhos[i].powf(1.0 / 3.0), 1e-13);
        out.push(acc);
    }
    out
}
