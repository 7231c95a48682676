//! `p = m u` is a four-vector with an invariant length `m`; the grouping
//! `(m gamma)(dx/dt)` is not. This module only reports numbers that show the
//! difference: it does not expose `m gamma` as a quantity to compute with.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minkowski::{dot3, is_finite3, norm3, scale3, FourVector, LorentzBoost, ThreeVector};

/// `u = gamma (1, v)` for a 3-velocity in units of c.
pub fn four_velocity(v3: ThreeVector) -> Result<FourVector> {
    if !is_finite3(v3) {
        return Err(Error::NonFinite("velocity"));
    }
    let speed = norm3(v3);
    if speed >= 1.0 {
        return Err(Error::Superluminal { speed });
    }
    let gamma = 1.0 / (1.0 - dot3(v3, v3)).sqrt();
    Ok(FourVector::from_parts(gamma, scale3(v3, gamma)))
}

/// `p = m u`.
pub fn momentum_from_velocity(mass: f64, v3: ThreeVector) -> Result<FourVector> {
    if !(mass > 0.0 && mass.is_finite()) {
        return Err(Error::invalid("mass", "must be positive"));
    }
    Ok(four_velocity(v3)? * mass)
}

/// 3-velocity of a timelike four-vector.
pub fn velocity_of(p: &FourVector) -> ThreeVector {
    scale3(p.space(), 1.0 / p.t())
}

/// Velocity composition by boosting the four-velocity itself.
pub fn compose_velocity(v3: ThreeVector, boost: &LorentzBoost) -> Result<ThreeVector> {
    Ok(velocity_of(&boost.apply(&four_velocity(v3)?)))
}

/// One row of the per-frame table.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrameRow {
    pub boost: ThreeVector,
    pub energy: f64,
    pub momentum: f64,
    pub invariant_mass: f64,
    pub m_gamma: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CovarianceReport {
    pub rows: Vec<FrameRow>,
    pub invariant_mass_per_frame: Vec<f64>,
    pub m_gamma_per_frame: Vec<f64>,
    /// Largest componentwise `|L(m u(v)) - m u(v')|` with `v'` the composed
    /// velocity.
    pub covariance_residual: f64,
}

impl CovarianceReport {
    /// Relative spread `(max - min) / mean` of the invariant mass.
    pub fn invariant_mass_spread(&self) -> f64 {
        relative_spread(&self.invariant_mass_per_frame)
    }

    pub fn m_gamma_spread(&self) -> f64 {
        relative_spread(&self.m_gamma_per_frame)
    }
}

fn relative_spread(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    let max = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = xs.iter().cloned().fold(f64::INFINITY, f64::min);
    let mean = xs.iter().sum::<f64>() / xs.len() as f64;
    (max - min) / mean.abs()
}

/// Views a particle of mass `m` and velocity `v3` from every frame in
/// `boosts`, listing `sqrt(p.p)` and `p^0 = m gamma` per frame.
pub fn covariance_report(mass: f64, v3: ThreeVector, boosts: &[LorentzBoost]) -> Result<CovarianceReport> {
    let p = momentum_from_velocity(mass, v3)?;
    let mut rows = Vec::with_capacity(boosts.len());
    let mut residual: f64 = 0.0;
    for b in boosts {
        let q = b.apply(&p);
        let composed = compose_velocity(v3, b)?;
        let direct = momentum_from_velocity(mass, composed)?;
        residual = residual.max(q.max_abs_diff(&direct));
        rows.push(FrameRow {
            boost: b.velocity(),
            energy: q.t(),
            momentum: norm3(q.space()),
            invariant_mass: q.norm_sqr().sqrt(),
            m_gamma: q.t(),
        });
    }
    Ok(CovarianceReport {
        invariant_mass_per_frame: rows.iter().map(|r| r.invariant_mass).collect(),
        m_gamma_per_frame: rows.iter().map(|r| r.m_gamma).collect(),
        rows,
        covariance_residual: residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_velocity_examples() {
        assert_eq!(four_velocity([0.0; 3]).unwrap(), FourVector::new(1.0, 0.0, 0.0, 0.0));
        let u = four_velocity([0.6, 0.0, 0.0]).unwrap();
        assert!(u.max_abs_diff(&FourVector::new(1.25, 0.75, 0.0, 0.0)) < 1e-15);
        assert!((u.norm_sqr() - 1.0).abs() < 1e-12);
        assert!(four_velocity([1.0, 0.0, 0.0]).is_err());
        assert!(four_velocity([0.0, f64::NAN, 0.0]).is_err());
    }

    #[test]
    fn momentum_examples() {
        assert_eq!(momentum_from_velocity(1.0, [0.0; 3]).unwrap(), FourVector::new(1.0, 0.0, 0.0, 0.0));
        let p = momentum_from_velocity(2.0, [0.6, 0.0, 0.0]).unwrap();
        assert!((p.norm_sqr().sqrt() - 2.0).abs() < 1e-12);
        assert!(momentum_from_velocity(0.0, [0.1, 0.0, 0.0]).is_err());
    }

    #[test]
    fn identity_frame_only() {
        let r = covariance_report(1.0, [0.0; 3], &[LorentzBoost::identity()]).unwrap();
        assert_eq!(r.m_gamma_per_frame, vec![1.0]);
        assert_eq!(r.covariance_residual, 0.0);
    }

    #[test]
    fn two_frames() {
        let boosts = [LorentzBoost::identity(), LorentzBoost::new([0.6, 0.0, 0.0]).unwrap()];
        let r = covariance_report(1.0, [0.0; 3], &boosts).unwrap();
        assert!((r.invariant_mass_per_frame[0] - 1.0).abs() < 1e-15);
        assert!((r.invariant_mass_per_frame[1] - 1.0).abs() < 1e-12);
        assert_eq!(r.m_gamma_per_frame[0], 1.0);
        assert!((r.m_gamma_per_frame[1] - 1.25).abs() < 1e-15);
        assert!(r.m_gamma_spread() > 0.2);
    }

    #[test]
    fn collinear_composition_matches_textbook_formula() {
        let b = LorentzBoost::new([0.5, 0.0, 0.0]).unwrap();
        let v = compose_velocity([0.5, 0.0, 0.0], &b).unwrap();
        assert!((v[0] - 0.8).abs() < 1e-15);
    }
}
