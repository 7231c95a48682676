use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const TWO_PI: f64 = 2.0 * PI;

/// Temporal envelope of the carrier, as a function of the phase `phi`.
///
/// Pulsed envelopes have support `[0, total]` in phase and vanish at both
/// ends; the monochromatic envelope is identically one.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Envelope {
    Monochromatic,
    /// `sin^2` ramps of `ramp_cycles` on either side of a flat plateau.
    FlatTop { ramp_cycles: u32, plateau_cycles: u32 },
    /// `sin^2(phi / 2N)` over `total_cycles = N` carrier periods.
    Sin2 { total_cycles: u32 },
    /// Gaussian of width `sigma_cycles`, truncated at `cutoff_sigmas` on
    /// each side and shifted so that it reaches zero at the cut.
    Gaussian { sigma_cycles: f64, cutoff_sigmas: f64 },
}

impl Envelope {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Envelope::Monochromatic => Ok(()),
            Envelope::FlatTop { ramp_cycles, plateau_cycles } => {
                if ramp_cycles == 0 {
                    Err(Error::invalid("ramp_cycles", "must be at least 1"))
                } else if plateau_cycles == 0 {
                    Err(Error::invalid("plateau_cycles", "must be at least 1"))
                } else {
                    Ok(())
                }
            }
            Envelope::Sin2 { total_cycles } => {
                if total_cycles == 0 {
                    Err(Error::invalid("total_cycles", "must be at least 1"))
                } else {
                    Ok(())
                }
            }
            Envelope::Gaussian { sigma_cycles, cutoff_sigmas } => {
                if !(sigma_cycles.is_finite() && sigma_cycles > 0.0) {
                    Err(Error::invalid("sigma_cycles", "must be positive and finite"))
                } else if !(cutoff_sigmas.is_finite() && cutoff_sigmas > 0.0) {
                    Err(Error::invalid("cutoff_sigmas", "must be positive and finite"))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Phase interval outside of which the envelope is zero, `None` for a
    /// monochromatic wave.
    pub fn support(&self) -> Option<(f64, f64)> {
        match *self {
            Envelope::Monochromatic => None,
            Envelope::FlatTop { ramp_cycles, plateau_cycles } => {
                Some((0.0, TWO_PI * f64::from(2 * ramp_cycles + plateau_cycles)))
            }
            Envelope::Sin2 { total_cycles } => Some((0.0, TWO_PI * f64::from(total_cycles))),
            Envelope::Gaussian { sigma_cycles, cutoff_sigmas } => {
                Some((0.0, 2.0 * cutoff_sigmas * sigma_cycles * TWO_PI))
            }
        }
    }

    /// Phase interval on which the envelope is exactly one and the carrier is
    /// periodic. Begins on a multiple of `2 pi`.
    pub fn plateau(&self) -> Option<(f64, f64)> {
        match *self {
            Envelope::Monochromatic => Some((f64::NEG_INFINITY, f64::INFINITY)),
            Envelope::FlatTop { ramp_cycles, plateau_cycles } => Some((
                TWO_PI * f64::from(ramp_cycles),
                TWO_PI * f64::from(ramp_cycles + plateau_cycles),
            )),
            _ => None,
        }
    }

    pub fn is_periodic(&self) -> bool {
        self.plateau().is_some()
    }

    /// The ramp is long enough for the field to be switched on adiabatically.
    pub fn is_adiabatic(&self) -> bool {
        match *self {
            Envelope::Monochromatic => true,
            Envelope::FlatTop { ramp_cycles, .. } => ramp_cycles >= 4,
            Envelope::Sin2 { total_cycles } => total_cycles >= 8,
            Envelope::Gaussian { sigma_cycles, .. } => sigma_cycles >= 2.0,
        }
    }

    /// Envelope value in `[0, 1]`.
    pub fn value(&self, phi: f64) -> f64 {
        self.value_and_slope(phi).0
    }

    /// Envelope value and its derivative with respect to `phi`.
    ///
    /// At the ends of the support the value is exactly zero and the slope is
    /// the one-sided limit from inside, which is nonzero for the truncated
    /// Gaussian.
    pub fn value_and_slope(&self, phi: f64) -> (f64, f64) {
        let support = self.support();
        if let Some((lo, hi)) = support {
            if phi < lo || phi > hi {
                return (0.0, 0.0);
            }
        }
        let (value, slope) = self.inside(phi);
        match support {
            Some((lo, hi)) if phi == lo || phi == hi => (0.0, slope),
            _ => (value, slope),
        }
    }

    fn inside(&self, phi: f64) -> (f64, f64) {
        match *self {
            Envelope::Monochromatic => (1.0, 0.0),
            Envelope::FlatTop { ramp_cycles, plateau_cycles } => {
                let r = f64::from(ramp_cycles);
                let ramp = TWO_PI * r;
                let fall = TWO_PI * f64::from(ramp_cycles + plateau_cycles);
                let end = fall + ramp;
                if phi < ramp {
                    let u = phi / (4.0 * r);
                    (u.sin().powi(2), (2.0 * u).sin() / (4.0 * r))
                } else if phi <= fall {
                    (1.0, 0.0)
                } else {
                    let u = (end - phi) / (4.0 * r);
                    (u.sin().powi(2), -(2.0 * u).sin() / (4.0 * r))
                }
            }
            Envelope::Sin2 { total_cycles } => {
                let n = f64::from(total_cycles);
                let u = phi / (2.0 * n);
                (u.sin().powi(2), (2.0 * u).sin() / (2.0 * n))
            }
            Envelope::Gaussian { sigma_cycles, cutoff_sigmas } => {
                let s = sigma_cycles * TWO_PI;
                let center = cutoff_sigmas * s;
                let floor = (-0.5 * cutoff_sigmas * cutoff_sigmas).exp();
                let d = phi - center;
                let g = (-0.5 * d * d / (s * s)).exp();
                let norm = 1.0 - floor;
                (((g - floor) / norm).clamp(0.0, 1.0), -g * d / (s * s) / norm)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all() -> Vec<Envelope> {
        vec![
            Envelope::Monochromatic,
            Envelope::FlatTop { ramp_cycles: 4, plateau_cycles: 3 },
            Envelope::FlatTop { ramp_cycles: 1, plateau_cycles: 1 },
            Envelope::Sin2 { total_cycles: 10 },
            Envelope::Gaussian { sigma_cycles: 2.0, cutoff_sigmas: 4.0 },
            Envelope::Gaussian { sigma_cycles: 0.5, cutoff_sigmas: 1.0 },
        ]
    }

    #[test]
    fn values_in_unit_interval() {
        for env in all() {
            let (lo, hi) = env.support().unwrap_or((-50.0, 50.0));
            for i in 0..=4000 {
                let phi = lo - 1.0 + (hi - lo + 2.0) * f64::from(i) / 4000.0;
                let v = env.value(phi);
                assert!((0.0..=1.0).contains(&v), "{env:?} at {phi}: {v}");
            }
        }
    }

    #[test]
    fn pulses_vanish_at_support_ends() {
        for env in all().into_iter().skip(1) {
            let (lo, hi) = env.support().unwrap();
            assert_eq!(env.value(lo), 0.0);
            assert_eq!(env.value(hi), 0.0);
            assert!(env.value(lo + 1e-9) < 1e-8, "{env:?}");
            assert!(env.value(hi - 1e-9) < 1e-8, "{env:?}");
            assert_eq!(env.value(hi + 1.0), 0.0);
            assert_eq!(env.value(lo - 1.0), 0.0);
        }
    }

    #[test]
    fn flat_top_plateau_is_exactly_one() {
        let env = Envelope::FlatTop { ramp_cycles: 4, plateau_cycles: 3 };
        let (a, b) = env.plateau().unwrap();
        assert_eq!(a, 8.0 * PI);
        for i in 0..=100 {
            let phi = a + (b - a) * f64::from(i) / 100.0;
            assert_eq!(env.value(phi), 1.0);
        }
    }

    #[test]
    fn slope_matches_central_difference() {
        for env in all() {
            let (lo, hi) = env.support().unwrap_or((0.0, 30.0));
            for i in 1..200 {
                let phi = lo + (hi - lo) * f64::from(i) / 200.0;
                let h = 1e-6;
                let fd = (env.value(phi + h) - env.value(phi - h)) / (2.0 * h);
                let (_, slope) = env.value_and_slope(phi);
                assert!((fd - slope).abs() < 1e-7, "{env:?} at {phi}: {fd} vs {slope}");
            }
        }
    }

    #[test]
    fn invalid_envelopes_rejected() {
        assert!(Envelope::FlatTop { ramp_cycles: 0, plateau_cycles: 2 }.validate().is_err());
        assert!(Envelope::FlatTop { ramp_cycles: 2, plateau_cycles: 0 }.validate().is_err());
        assert!(Envelope::Sin2 { total_cycles: 0 }.validate().is_err());
        assert!(Envelope::Gaussian { sigma_cycles: -1.0, cutoff_sigmas: 3.0 }.validate().is_err());
        assert!(Envelope::Gaussian { sigma_cycles: 1.0, cutoff_sigmas: f64::NAN }.validate().is_err());
    }

    #[test]
    fn periodicity() {
        assert!(Envelope::Monochromatic.is_periodic());
        assert!(Envelope::FlatTop { ramp_cycles: 4, plateau_cycles: 1 }.is_periodic());
        assert!(!Envelope::Sin2 { total_cycles: 4 }.is_periodic());
        assert!(!Envelope::Gaussian { sigma_cycles: 1.0, cutoff_sigmas: 3.0 }.is_periodic());
    }
}
