//! Transverse plane waves whose 4-potential depends on spacetime only
//! through the phase `phi = k.x`.
//!
//! Potentials are normalized so that `|e| A / (m c)` is dimensionless; with
//! that normalization the peak amplitude of each polarization component is
//! `a0`, and the ponderomotive potential in units of `m c^2` is
//! `<|A.A|> / 2`: `a0^2 / 4` for linear and `a0^2 / 2` for circular
//! polarization.

mod envelope;
mod gauge;
mod laser;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

pub use envelope::Envelope;
pub use gauge::{apply_gauge, GaugeGenerator, GaugedField, Harmonic};
pub use laser::{from_laser_params, to_laser_params, zf_photon_density, LaserParams, PhysicalConstants};

use crate::error::{Error, Result};
use crate::minkowski::{
    cross3, dot3, is_finite3, norm3, scale3, two_prod, two_sum, FourVector, LorentzBoost, SplitFourVector,
    ThreeVector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarization {
    Linear,
    Circular,
}

impl std::str::FromStr for Polarization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "linear" | "lin" => Ok(Polarization::Linear),
            "circular" | "circ" => Ok(Polarization::Circular),
            other => Err(Error::invalid("polarization", format!("unknown polarization `{other}`"))),
        }
    }
}

impl std::fmt::Display for Polarization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Polarization::Linear => "linear",
            Polarization::Circular => "circular",
        })
    }
}

/// Anything that supplies a phase-dependent 4-potential and its wave vector.
pub trait VectorPotential {
    fn wave_vector(&self) -> FourVector;
    fn potential_at(&self, phi: f64) -> FourVector;

    /// The potential as `hi + lo`; only types that add vectors of very
    /// different size (gauge shifts) need more than `lo = 0`.
    fn potential_split_at(&self, phi: f64) -> SplitFourVector {
        SplitFourVector::from(self.potential_at(phi))
    }
}

/// A plane wave in natural units (m = c = hbar = 1).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlaneWaveField {
    omega: f64,
    direction: ThreeVector,
    // correction making direction + direction_lo a unit vector to about
    // eps^2, so that k.k vanishes well below working precision
    direction_lo: ThreeVector,
    polarization: Polarization,
    a0: f64,
    envelope: Envelope,
    // orthonormal transverse basis
    e1: ThreeVector,
    e2: ThreeVector,
}

impl PlaneWaveField {
    /// `direction` need not be normalized but must be nonzero.
    pub fn new(
        omega: f64,
        direction: ThreeVector,
        polarization: Polarization,
        a0: f64,
        envelope: Envelope,
    ) -> Result<Self> {
        if !(omega.is_finite() && omega > 0.0) {
            return Err(Error::invalid("omega", "must be positive and finite"));
        }
        if !(a0.is_finite() && a0 >= 0.0) {
            return Err(Error::invalid("a0", "must be non-negative and finite"));
        }
        if !is_finite3(direction) {
            return Err(Error::NonFinite("propagation direction"));
        }
        let n = norm3(direction);
        if n == 0.0 {
            return Err(Error::invalid("direction", "must be nonzero"));
        }
        envelope.validate()?;
        let khat = scale3(direction, 1.0 / n);
        let (e1, e2) = transverse_basis(khat);
        let direction_lo = unit_correction(khat);
        Ok(PlaneWaveField { omega, direction: khat, direction_lo, polarization, a0, envelope, e1, e2 })
    }

    /// Monochromatic wave along `+z` with `omega = 1`.
    pub fn monochromatic(polarization: Polarization, a0: f64) -> Result<Self> {
        Self::new(1.0, [0.0, 0.0, 1.0], polarization, a0, Envelope::Monochromatic)
    }

    pub fn with_envelope(&self, envelope: Envelope) -> Result<Self> {
        Self::new(self.omega, self.direction, self.polarization, self.a0, envelope)
    }

    pub fn with_a0(&self, a0: f64) -> Result<Self> {
        Self::new(self.omega, self.direction, self.polarization, a0, self.envelope)
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Unit propagation direction.
    pub fn direction(&self) -> ThreeVector {
        self.direction
    }

    pub fn polarization(&self) -> Polarization {
        self.polarization
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    pub fn envelope(&self) -> Envelope {
        self.envelope
    }

    pub fn polarization_basis(&self) -> (ThreeVector, ThreeVector) {
        (self.e1, self.e2)
    }

    /// Propagation 4-vector `k = omega (1, khat)`; null by construction.
    pub fn wave_vector(&self) -> FourVector {
        FourVector::from_parts(self.omega, scale3(self.direction, self.omega))
    }

    /// `wave_vector` with the rounding of `omega khat` kept in `lo`.
    pub fn wave_vector_split(&self) -> SplitFourVector {
        let mut hi = [0.0; 3];
        let mut lo = [0.0; 3];
        for i in 0..3 {
            let (p, e) = two_prod(self.omega, self.direction[i]);
            hi[i] = p;
            lo[i] = e + self.omega * self.direction_lo[i];
        }
        SplitFourVector { hi: FourVector::from_parts(self.omega, hi), lo: FourVector::from_parts(0.0, lo) }
    }

    /// Radiation-gauge potential: zero time component, transverse space part.
    pub fn potential_at(&self, phi: f64) -> FourVector {
        let env = self.envelope.value(phi);
        let amp = self.a0 * env;
        let (c, s) = (phi.cos(), phi.sin());
        let space = match self.polarization {
            Polarization::Linear => scale3(self.e1, amp * c),
            Polarization::Circular => add3(scale3(self.e1, amp * c), scale3(self.e2, amp * s)),
        };
        FourVector::from_parts(0.0, space)
    }

    /// `dA/dphi`.
    pub fn potential_derivative_at(&self, phi: f64) -> FourVector {
        let (env, slope) = self.envelope.value_and_slope(phi);
        let (c, s) = (phi.cos(), phi.sin());
        let space = match self.polarization {
            Polarization::Linear => scale3(self.e1, self.a0 * (slope * c - env * s)),
            Polarization::Circular => add3(
                scale3(self.e1, self.a0 * (slope * c - env * s)),
                scale3(self.e2, self.a0 * (slope * s + env * c)),
            ),
        };
        FourVector::from_parts(0.0, space)
    }

    /// Closed-form `<|A.A|>` over one carrier period on the plateau.
    pub fn cycle_average_abs_aa(&self) -> Result<f64> {
        if !self.envelope.is_periodic() {
            return Err(Error::NonPeriodicEnvelope(envelope_name(&self.envelope)));
        }
        let a2 = self.a0 * self.a0;
        Ok(match self.polarization {
            Polarization::Linear => 0.5 * a2,
            Polarization::Circular => a2,
        })
    }

    /// Ponderomotive potential in units of `m c^2`.
    pub fn ponderomotive_potential(&self) -> Result<f64> {
        Ok(0.5 * self.cycle_average_abs_aa()?)
    }

    /// `z_f = 2 U_p / (m c^2)`.
    pub fn zf(&self) -> Result<f64> {
        Ok(2.0 * self.ponderomotive_potential()?)
    }

    /// The same wave seen from a boosted frame: `k -> L k`, with `a0`,
    /// polarization and envelope carried over. `a0` and `U_p` are
    /// invariant; the transverse basis is rebuilt in the new frame, which
    /// changes `A` only by a gauge term and a rotation about `k`.
    pub fn boosted(&self, boost: &LorentzBoost) -> Result<Self> {
        let k = boost.apply(&self.wave_vector());
        Self::new(k.t(), k.space(), self.polarization, self.a0, self.envelope)
    }

    /// First phase of a full carrier period with the envelope at its plateau.
    pub fn plateau_start(&self) -> Result<f64> {
        match self.envelope.plateau() {
            Some((lo, _)) if lo.is_finite() => Ok(lo),
            Some(_) => Ok(0.0),
            None => Err(Error::NonPeriodicEnvelope(envelope_name(&self.envelope))),
        }
    }
}

impl VectorPotential for PlaneWaveField {
    fn wave_vector(&self) -> FourVector {
        PlaneWaveField::wave_vector(self)
    }

    fn potential_at(&self, phi: f64) -> FourVector {
        PlaneWaveField::potential_at(self, phi)
    }
}

fn envelope_name(e: &Envelope) -> &'static str {
    match e {
        Envelope::Monochromatic => "monochromatic",
        Envelope::FlatTop { .. } => "flat_top",
        Envelope::Sin2 { .. } => "sin2",
        Envelope::Gaussian { .. } => "gaussian",
    }
}

// -(|khat|^2 - 1) khat / 2, with |khat|^2 accumulated exactly enough that
// the correction is right to first order.
fn unit_correction(khat: ThreeVector) -> ThreeVector {
    let (mut hi, mut lo) = (0.0, 0.0);
    for c in khat {
        let (p, pe) = two_prod(c, c);
        let (s, se) = two_sum(hi, p);
        hi = s;
        lo += se + pe;
    }
    let delta = (hi - 1.0) + lo;
    scale3(khat, -0.5 * delta)
}

fn add3(a: ThreeVector, b: ThreeVector) -> ThreeVector {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

// e1 is built from the coordinate axis least aligned with khat, so that
// khat = z gives (e1, e2) = (x, y).
fn transverse_basis(khat: ThreeVector) -> (ThreeVector, ThreeVector) {
    let mut axis = 0;
    for i in 1..3 {
        if khat[i].abs() < khat[axis].abs() {
            axis = i;
        }
    }
    let mut a = [0.0; 3];
    a[axis] = 1.0;
    let proj = dot3(a, khat);
    let raw = [a[0] - proj * khat[0], a[1] - proj * khat[1], a[2] - proj * khat[2]];
    let e1 = scale3(raw, 1.0 / norm3(raw));
    let e2 = cross3(khat, e1);
    (e1, e2)
}

/// Ponderomotive potential, `U_p = <|A.A|>/2` in units of `m c^2`.
pub fn ponderomotive_potential(field: &PlaneWaveField) -> Result<f64> {
    field.ponderomotive_potential()
}

/// `<|A.A|>` of an arbitrary phase-dependent 4-vector over one period
/// `[start, start + 2 pi)`, by the periodic trapezoid rule on `points` nodes.
pub fn cycle_average_abs_square<F: Fn(f64) -> FourVector>(potential: F, start: f64, points: usize) -> f64 {
    let n = points.max(1);
    let h = 2.0 * PI / n as f64;
    (0..n).map(|j| potential(start + h * j as f64).norm_sqr().abs()).sum::<f64>() / n as f64
}

/// `cycle_average_abs_square` of a `VectorPotential`, using its split
/// representation so gauge-shifted potentials lose nothing to rounding.
pub fn cycle_average_abs_aa_numeric<P: VectorPotential + ?Sized>(potential: &P, start: f64, points: usize) -> f64 {
    let n = points.max(1);
    let h = 2.0 * PI / n as f64;
    (0..n).map(|j| potential.potential_split_at(start + h * j as f64).norm_sqr().abs()).sum::<f64>() / n as f64
}

/// Quadrature estimate of `U_p` for any potential on a periodic stretch
/// beginning at `start`.
pub fn ponderomotive_potential_numeric<P: VectorPotential + ?Sized>(potential: &P, start: f64, points: usize) -> f64 {
    0.5 * cycle_average_abs_aa_numeric(potential, start, points)
}
