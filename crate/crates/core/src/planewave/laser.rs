//! SI boundary: laboratory laser parameters and CODATA constants.
//!
//! All conversions into the natural-unit world (m = c = hbar = 1, energies in
//! units of the electron rest energy) happen here.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{Envelope, PlaneWaveField, Polarization};
use crate::error::{Error, Result};

/// Dimensional constants, CODATA 2018.
///
/// `alpha` is stored and `epsilon0` derived from it, as in the revised SI.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    pub alpha: f64,
    pub electron_mass: f64,
    pub light_speed: f64,
    pub planck: f64,
    pub reduced_planck: f64,
    pub elementary_charge: f64,
    pub epsilon0: f64,
    pub reduced_compton: f64,
}

impl PhysicalConstants {
    pub fn codata2018() -> Self {
        let alpha = 7.297_352_569_3e-3;
        let electron_mass = 9.109_383_701_5e-31;
        let light_speed = 299_792_458.0;
        let planck = 6.626_070_15e-34;
        let elementary_charge = 1.602_176_634e-19;
        let reduced_planck = planck / (2.0 * PI);
        PhysicalConstants {
            alpha,
            electron_mass,
            light_speed,
            planck,
            reduced_planck,
            elementary_charge,
            epsilon0: elementary_charge * elementary_charge / (2.0 * alpha * planck * light_speed),
            reduced_compton: reduced_planck / (electron_mass * light_speed),
        }
    }

    /// Electron rest energy in joules.
    pub fn rest_energy(&self) -> f64 {
        self.electron_mass * self.light_speed * self.light_speed
    }

    /// Electron rest energy in electronvolts.
    pub fn rest_energy_ev(&self) -> f64 {
        self.rest_energy() / self.elementary_charge
    }

    /// Converts an energy in units of m c^2 to eV.
    pub fn natural_to_ev(&self, energy: f64) -> f64 {
        energy * self.rest_energy_ev()
    }

    pub fn angular_frequency(&self, wavelength: f64) -> f64 {
        2.0 * PI * self.light_speed / wavelength
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::codata2018()
    }
}

/// A laser described in laboratory units.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaserParams {
    /// Cycle-averaged intensity in W/cm^2.
    pub intensity: f64,
    /// Vacuum wavelength in metres.
    pub wavelength: f64,
    pub polarization: Polarization,
}

impl LaserParams {
    pub fn new(intensity: f64, wavelength: f64, polarization: Polarization) -> Result<Self> {
        let p = LaserParams { intensity, wavelength, polarization };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.intensity.is_finite() && self.intensity >= 0.0) {
            return Err(Error::invalid("intensity", format!("{} W/cm^2 is not a valid intensity", self.intensity)));
        }
        if !(self.wavelength.is_finite() && self.wavelength > 0.0) {
            return Err(Error::invalid("wavelength", format!("{} m is not positive", self.wavelength)));
        }
        Ok(())
    }

    fn intensity_si(&self) -> f64 {
        self.intensity * 1e4
    }

    /// Peak electric field of a linearly polarized wave with this intensity,
    /// from `I = eps0 c E0^2 / 2`.
    pub fn peak_field_linear(&self, k: &PhysicalConstants) -> f64 {
        (2.0 * self.intensity_si() / (k.epsilon0 * k.light_speed)).sqrt()
    }

    /// Amplitude of each field component: `E0` for linear, `E0/sqrt 2` for
    /// circular, at equal intensity.
    pub fn component_field(&self, k: &PhysicalConstants) -> f64 {
        let e0 = self.peak_field_linear(k);
        match self.polarization {
            Polarization::Linear => e0,
            Polarization::Circular => e0 / 2f64.sqrt(),
        }
    }

    /// Cycle-averaged photon number density `rho = u / (hbar omega)` with
    /// `u = eps0 E0^2 / 2 = I / c` the total (electric plus magnetic) energy
    /// density.
    pub fn photon_density(&self, k: &PhysicalConstants) -> f64 {
        let omega = k.angular_frequency(self.wavelength);
        let e0 = self.peak_field_linear(k);
        k.epsilon0 * e0 * e0 / (2.0 * k.reduced_planck * omega)
    }

    /// Ponderomotive potential in joules, `e^2 E0^2 / (4 m omega^2)`.
    pub fn ponderomotive_energy_si(&self, k: &PhysicalConstants) -> f64 {
        let omega = k.angular_frequency(self.wavelength);
        let e0 = self.peak_field_linear(k);
        k.elementary_charge.powi(2) * e0 * e0 / (4.0 * k.electron_mass * omega * omega)
    }
}

/// Builds the natural-unit plane wave equivalent to `p`, propagating along
/// `+z` with a monochromatic envelope.
pub fn from_laser_params(p: &LaserParams, k: &PhysicalConstants) -> Result<PlaneWaveField> {
    p.validate()?;
    let omega_si = k.angular_frequency(p.wavelength);
    let omega = k.reduced_planck * omega_si / k.rest_energy();
    let a0 = k.elementary_charge * p.component_field(k) / (k.electron_mass * omega_si * k.light_speed);
    PlaneWaveField::new(omega, [0.0, 0.0, 1.0], p.polarization, a0, Envelope::Monochromatic)
}

/// Inverse of [`from_laser_params`]: recovers intensity and wavelength.
pub fn to_laser_params(field: &PlaneWaveField, k: &PhysicalConstants) -> LaserParams {
    let omega_si = field.omega() * k.rest_energy() / k.reduced_planck;
    let wavelength = 2.0 * PI * k.light_speed / omega_si;
    let component = field.a0() * k.electron_mass * omega_si * k.light_speed / k.elementary_charge;
    let e0 = match field.polarization() {
        Polarization::Linear => component,
        Polarization::Circular => component * 2f64.sqrt(),
    };
    LaserParams {
        intensity: 0.5 * k.epsilon0 * k.light_speed * e0 * e0 * 1e-4,
        wavelength,
        polarization: field.polarization(),
    }
}

/// The coupling constant evaluated as a photon-density-enhanced fine-structure
/// constant, `z_f = alpha rho (2 lambda lambdabar_C^2)`.
pub fn zf_photon_density(p: &LaserParams, k: &PhysicalConstants) -> Result<f64> {
    p.validate()?;
    let rho = p.photon_density(k);
    Ok(k.alpha * rho * 2.0 * p.wavelength * k.reduced_compton * k.reduced_compton)
}
