//! Tail sandwich verification: on both density tails every thermodynamic
//! function must sit within the (1 ± a0) band around its pure power-law
//! reference, a0 = (3 - gamma1)/(2 (gamma1 + 1)).

use super::Eos;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct BoundViolation {
    pub quantity: String,
    pub rho: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct QuantityBounds {
    pub quantity: String,
    /// Smallest and largest observed value of F / F_ref over the tail grid.
    pub ratio_min: f64,
    pub ratio_max: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub margin: f64,
    pub pass: bool,
    pub quantities: Vec<QuantityBounds>,
    pub violations: Vec<BoundViolation>,
    /// Largest overshoot of |ratio - 1| beyond the margin, if any.
    pub worst_excess: f64,
}

/// Check the sandwich bounds for P, P', P'', e, e', k, k', |k''| on a
/// logarithmic grid spanning both tails.
pub fn verify_asymptotic_bounds(eos: &Eos, points_per_tail: usize) -> BoundsReport {
    let margin = eos.a0_margin();
    let n = points_per_tail.max(8);

    let mut grid = Vec::with_capacity(2 * n);
    for i in 0..n {
        // (0, rho_lo]: six decades below the threshold up to it.
        grid.push(eos.rho_lo * 10f64.powf(-6.0 + 6.0 * i as f64 / (n - 1) as f64));
    }
    for i in 0..n {
        // [rho_hi, inf): threshold up six decades.
        grid.push(eos.rho_hi * 10f64.powf(6.0 * i as f64 / (n - 1) as f64));
    }

    type Ref = (&'static str, fn(&Eos, f64) -> f64, fn(f64, f64, f64) -> f64);
    let quantities: [Ref; 8] = [
        ("P", |e, r| e.pressure(r).unwrap(), |k, g, r| k * r.powf(g)),
        ("P'", |e, r| e.dp(r), |k, g, r| k * g * r.powf(g - 1.0)),
        ("P''", |e, r| e.d2p(r), |k, g, r| k * g * (g - 1.0) * r.powf(g - 2.0)),
        ("e", |e, r| e.internal_energy(r).unwrap(), |k, g, r| {
            k * r.powf(g - 1.0) / (g - 1.0)
        }),
        ("e'", |e, r| e.e_prime(r), |k, g, r| k * r.powf(g - 2.0)),
        ("k", |e, r| e.k(r).unwrap(), |k, g, r| {
            2.0 * (k * g).sqrt() / (g - 1.0) * r.powf((g - 1.0) / 2.0)
        }),
        ("k'", |e, r| e.k_prime(r), |k, g, r| (k * g).sqrt() * r.powf((g - 1.0) / 2.0 - 1.0)),
        ("|k''|", |e, r| e.k_second(r).abs(), |k, g, r| {
            (1.0 - (g - 1.0) / 2.0) * (k * g).sqrt() * r.powf((g - 1.0) / 2.0 - 2.0)
        }),
    ];

    let mut report = BoundsReport {
        margin,
        pass: true,
        quantities: Vec::new(),
        violations: Vec::new(),
        worst_excess: 0.0,
    };

    for (name, value, reference) in quantities {
        let mut rmin = f64::INFINITY;
        let mut rmax = 0.0f64;
        let mut pass = true;
        for &rho in &grid {
            let (kap, gam) = if rho <= eos.rho_lo {
                (eos.kappa_lo, eos.gamma_lo)
            } else {
                (eos.kappa_hi, eos.gamma_hi)
            };
            let ratio = value(eos, rho) / reference(kap, gam, rho);
            rmin = rmin.min(ratio);
            rmax = rmax.max(ratio);
            if !(ratio >= 1.0 - margin && ratio <= 1.0 + margin) {
                pass = false;
                report.worst_excess = report.worst_excess.max((ratio - 1.0).abs() - margin);
                report.violations.push(BoundViolation {
                    quantity: name.to_string(),
                    rho,
                    ratio,
                });
            }
        }
        report.pass &= pass;
        report.quantities.push(QuantityBounds {
            quantity: name.to_string(),
            ratio_min: rmin,
            ratio_max: rmax,
            pass,
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eos::PressureLaw;

    #[test]
    fn polytropic_all_ratios_exactly_one() {
        let eos = Eos::new(PressureLaw::Polytropic { kappa: 1.3, gamma: 1.7 }).unwrap();
        let rep = verify_asymptotic_bounds(&eos, 20);
        assert!(rep.pass);
        for q in &rep.quantities {
            assert!((q.ratio_min - 1.0).abs() < 1e-9, "{q:?}");
            assert!((q.ratio_max - 1.0).abs() < 1e-9, "{q:?}");
        }
    }

    #[test]
    fn white_dwarf_default_thresholds_pass() {
        let eos = Eos::new(PressureLaw::WhiteDwarf { c1: 1.0, c2: 1.0, c3: 1.0 })
            .unwrap()
            .with_thresholds(1e-3, 1e3)
            .unwrap();
        let rep = verify_asymptotic_bounds(&eos, 40);
        assert!(rep.pass, "violations: {:?}", rep.violations);
    }

    #[test]
    fn white_dwarf_oversized_rho_lo_fails() {
        let eos = Eos::new(PressureLaw::WhiteDwarf { c1: 1.0, c2: 1.0, c3: 1.0 })
            .unwrap()
            .with_thresholds(1.0, 1e3)
            .unwrap();
        let rep = verify_asymptotic_bounds(&eos, 40);
        assert!(!rep.pass);
        assert!(!rep.violations.is_empty());
        assert!(rep.worst_excess > 0.0);
    }
}
