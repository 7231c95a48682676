//! The dressed mass shell.
//!
//! Inside a plane wave the free momentum `p` is supplemented by the
//! ponderomotive 4-potential `U`, a null vector parallel to `k` whose time
//! part in the electron's rest frame is `U_p`. The dressed invariant
//! `(p + U).(p + U) = m^2 + 2 m U_p = m^2 (1 + z_f)` then reproduces the
//! strong-field mass shell with no change of mass.
//!
//! Units: `c = hbar = 1`, energies and momenta in units of the electron rest
//! energy unless a `mass` argument says otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minkowski::{norm3, FourVector, LorentzBoost, ThreeVector};
use crate::planewave::PlaneWaveField;

/// Relative tolerance for accepting a momentum as lying on the free shell.
pub const FREE_SHELL_TOLERANCE: f64 = 1e-9;

/// `U = (U_p / omega) k = (U_p, U_p khat)`: the ponderomotive 4-potential of
/// an electron at rest in the frame where the field has frequency `omega`.
pub fn ponderomotive_four_potential(field: &PlaneWaveField) -> Result<FourVector> {
    if !(field.omega() > 0.0) {
        return Err(Error::invalid("omega", "must be positive"));
    }
    let up = field.ponderomotive_potential()?;
    Ok(field.wave_vector() * (up / field.omega()))
}

/// Covariant form of the ponderomotive 4-potential for a particle of
/// 4-momentum `p`: `U = U_p m k / (k.p)`.
///
/// In the rest frame of `p`, `k.p = m omega`, so this is exactly
/// [`ponderomotive_four_potential`]; in any other frame it is the boosted
/// image of that rest-frame vector.
pub fn ponderomotive_four_potential_for(field: &PlaneWaveField, p: &FourVector, mass: f64) -> Result<FourVector> {
    let k = field.wave_vector();
    let kp = k.inner(p);
    if !(kp > 0.0) {
        return Err(Error::SingularLightFront);
    }
    let up = field.ponderomotive_potential()?;
    Ok(k * (up * mass / kp))
}

fn check_free_shell(p: &FourVector, mass: f64) -> Result<()> {
    if !(mass > 0.0 && mass.is_finite()) {
        return Err(Error::invalid("mass", "must be positive"));
    }
    let q = p.norm_sqr();
    let m2 = mass * mass;
    if (q - m2).abs() > FREE_SHELL_TOLERANCE * m2 || p.t() <= 0.0 {
        return Err(Error::OffShell { invariant: q, expected: m2 });
    }
    Ok(())
}

/// Free momentum `p` dressed with the ponderomotive 4-potential `U`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DressedMomentum {
    pub free_p: FourVector,
    pub pond_u: FourVector,
}

impl DressedMomentum {
    /// Dresses an on-shell electron momentum (`m = 1`) with the potential of
    /// `field`.
    pub fn new(p: FourVector, field: &PlaneWaveField) -> Result<Self> {
        Self::with_mass(p, field, 1.0)
    }

    pub fn with_mass(p: FourVector, field: &PlaneWaveField, mass: f64) -> Result<Self> {
        check_free_shell(&p, mass)?;
        let pond_u = ponderomotive_four_potential_for(field, &p, mass)?;
        Ok(DressedMomentum { free_p: p, pond_u })
    }

    /// `p + U`.
    pub fn total(&self) -> FourVector {
        self.free_p + self.pond_u
    }

    /// `(p + U).(p + U)`.
    pub fn invariant(&self) -> f64 {
        self.total().norm_sqr()
    }

    /// Boosts both parts by the same transformation.
    pub fn boosted(&self, boost: &LorentzBoost) -> Self {
        DressedMomentum { free_p: boost.apply(&self.free_p), pond_u: boost.apply(&self.pond_u) }
    }
}

/// Outcome of a dressed-shell evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShellReport {
    pub dressed_invariant: f64,
    /// `m^2 (1 + z_f)`
    pub expected: f64,
    pub residual: f64,
    pub e_min: f64,
    pub z_f: f64,
}

impl ShellReport {
    pub fn from_dressed(d: &DressedMomentum, z_f: f64, mass: f64) -> Self {
        let dressed_invariant = d.invariant();
        let expected = mass * mass * (1.0 + z_f);
        ShellReport {
            dressed_invariant,
            expected,
            residual: dressed_invariant - expected,
            e_min: minimum_energy(0.5 * z_f * mass, mass),
            z_f,
        }
    }

    pub fn relative_residual(&self) -> f64 {
        self.residual.abs() / self.expected.abs()
    }
}

/// Evaluates `(p + U).(p + U)` against `m^2 (1 + z_f)` for an electron.
///
/// `p` must be on the free shell; a dressed momentum passed here by mistake
/// is rejected with [`Error::OffShell`].
pub fn dressed_shell_invariant(p: &FourVector, field: &PlaneWaveField) -> Result<ShellReport> {
    let d = DressedMomentum::new(*p, field)?;
    Ok(ShellReport::from_dressed(&d, field.zf()?, 1.0))
}

/// Expansion of the dressed product with the fixed lab-frame potential
/// `U = (U_p/omega) k`: returns the direct product `(p+U).(p+U)` and the
/// expanded form `p.p + 2 U_p (p.k) / omega` (using `U.U = 0`).
///
/// Both equal `m^2 (1 + z_f)` only when `p` is at rest in the lab.
pub fn lab_frame_expansion(p: &FourVector, field: &PlaneWaveField) -> Result<(f64, f64)> {
    let u = ponderomotive_four_potential(field)?;
    let up = field.ponderomotive_potential()?;
    let direct = (*p + u).norm_sqr();
    let expanded = p.norm_sqr() + 2.0 * up * field.wave_vector().inner(p) / field.omega();
    Ok((direct, expanded))
}

/// `E_min = m + U_p`.
pub fn minimum_energy(up: f64, mass: f64) -> f64 {
    mass + up
}

/// `E_min` from the dressed shell evaluated at the minimal momentum
/// `|p| = U_p`: `sqrt(m^2 + 2 U_p m + U_p^2)`.
pub fn minimum_energy_from_shell(up: f64, mass: f64) -> f64 {
    shell_energy(up, up, mass)
}

/// Energy on the dressed shell, `E = sqrt(m^2 + 2 U_p m + |p|^2)`.
pub fn shell_energy(momentum: f64, up: f64, mass: f64) -> f64 {
    (mass * mass + 2.0 * up * mass + momentum * momentum).sqrt()
}

/// Kinetic energy `T = E - E_min`.
///
/// Evaluated as `(|p|^2 - U_p^2) / (E + E_min)`, which is algebraically
/// identical and free of cancellation. `T` vanishes at `|p| = U_p`, grows
/// monotonically with `|p|`, and is negative below the minimal momentum.
pub fn kinetic_energy(p3: ThreeVector, up: f64, mass: f64) -> f64 {
    let p = norm3(p3);
    let e = shell_energy(p, up, mass);
    (p - up) * (p + up) / (e + minimum_energy(up, mass))
}

/// Nonrelativistic kinetic energy `|p|^2 / 2m`.
pub fn kinetic_energy_nr(p3: ThreeVector, mass: f64) -> f64 {
    let p = norm3(p3);
    p * p / (2.0 * mass)
}

/// `(p - n k).(p - n k) - m^2 (1 + z_f)`; zero on the `n`-th pole.
pub fn multipole_residual(p: &FourVector, n: i64, field: &PlaneWaveField, mass: f64) -> Result<f64> {
    let q = *p - field.wave_vector() * (n as f64);
    Ok(q.norm_sqr() - mass * mass * (1.0 + field.zf()?))
}

/// The positive-energy momentum with spatial part `p_space` that lies on the
/// `n`-th pole: solves `(E - n omega)^2 - |p - n omega khat|^2 = m^2 (1 + z_f)`.
pub fn pole_momentum(n: i64, p_space: ThreeVector, field: &PlaneWaveField, mass: f64) -> Result<FourVector> {
    let k = field.wave_vector();
    let nf = n as f64;
    let shifted = [p_space[0] - nf * k.x(), p_space[1] - nf * k.y(), p_space[2] - nf * k.z()];
    let m2 = mass * mass * (1.0 + field.zf()?);
    let s = norm3(shifted);
    let energy = nf * k.t() + (m2 + s * s).sqrt();
    FourVector::try_new(energy, p_space[0], p_space[1], p_space[2])
}

/// Comparison of the quadratic shell form `m^2 + dm^2` with a genuine mass
/// shift `(m + dm)^2` at the same `dm`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShellFormComparison {
    pub z_f: f64,
    /// `dm = m sqrt(z_f)`, so that `m^2 + dm^2 = m^2 (1 + z_f)`.
    pub delta_m: f64,
    pub quadratic_form: f64,
    pub shifted_form: f64,
    /// `quadratic_form - shifted_form`, evaluated directly.
    pub residual: f64,
}

pub fn shell_form_comparison(z_f: f64, mass: f64) -> ShellFormComparison {
    let delta_m = mass * z_f.sqrt();
    let quadratic_form = mass * mass * (1.0 + z_f);
    let shifted_form = (mass + delta_m).powi(2);
    ShellFormComparison { z_f, delta_m, quadratic_form, shifted_form, residual: quadratic_form - shifted_form }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planewave::{Envelope, Polarization};

    fn field(pol: Polarization, a0: f64) -> PlaneWaveField {
        PlaneWaveField::monochromatic(pol, a0).unwrap()
    }

    fn rest() -> FourVector {
        FourVector::new(1.0, 0.0, 0.0, 0.0)
    }

    #[test]
    fn four_potential_examples() {
        assert_eq!(ponderomotive_four_potential(&field(Polarization::Linear, 0.0)).unwrap(), FourVector::ZERO);
        let u = ponderomotive_four_potential(&field(Polarization::Linear, 1.0)).unwrap();
        assert_eq!(u, FourVector::new(0.25, 0.0, 0.0, 0.25));
        assert_eq!(u.norm_sqr(), 0.0);
    }

    #[test]
    fn four_potential_for_rest_momentum_matches_lab_form() {
        let f = PlaneWaveField::new(2.3, [1.0, -1.0, 0.5], Polarization::Circular, 0.8, Envelope::Monochromatic)
            .unwrap();
        let lab = ponderomotive_four_potential(&f).unwrap();
        let cov = ponderomotive_four_potential_for(&f, &rest(), 1.0).unwrap();
        assert!(lab.max_abs_diff(&cov) < 1e-15);
        assert!((lab.t() - f.ponderomotive_potential().unwrap()).abs() < 1e-15);
    }

    #[test]
    fn shell_examples() {
        let r = dressed_shell_invariant(&rest(), &field(Polarization::Linear, 0.0)).unwrap();
        assert_eq!(r.dressed_invariant, 1.0);
        assert_eq!(r.residual, 0.0);
        // z_f = 0.5 from linear a0 = 1
        let r = dressed_shell_invariant(&rest(), &field(Polarization::Linear, 1.0)).unwrap();
        assert_eq!(r.z_f, 0.5);
        assert!((r.dressed_invariant - 1.5).abs() < 1e-15);
        assert!(r.relative_residual() <= 1e-12);
        assert_eq!(r.e_min, 1.25);
    }

    #[test]
    fn boosted_shell_is_unchanged() {
        let f = field(Polarization::Linear, 1.0);
        let d = DressedMomentum::new(rest(), &f).unwrap();
        for v in [[0.6, 0.0, 0.0], [0.0, -0.3, 0.9], [0.5, 0.5, -0.5]] {
            let b = LorentzBoost::new(v).unwrap();
            assert!((d.boosted(&b).invariant() - 1.5).abs() < 1e-9);
        }
    }

    #[test]
    fn moving_electron_uses_covariant_potential() {
        let f = field(Polarization::Circular, 0.7);
        let b = LorentzBoost::new([0.2, -0.4, 0.3]).unwrap();
        let p = b.apply(&rest());
        let r = dressed_shell_invariant(&p, &f).unwrap();
        assert!(r.relative_residual() < 1e-12);
        // with the fixed lab-frame potential the product is frame dependent
        let (direct, expanded) = lab_frame_expansion(&p, &f).unwrap();
        assert!((direct - expanded).abs() < 1e-12);
        assert!((direct - r.expected).abs() > 1e-3);
    }

    #[test]
    fn lab_expansion_reproduces_rest_frame_value() {
        let f = field(Polarization::Linear, 1.3);
        let (direct, expanded) = lab_frame_expansion(&rest(), &f).unwrap();
        let expected = 1.0 + f.zf().unwrap();
        assert!((direct - expected).abs() < 1e-14);
        assert!((expanded - expected).abs() < 1e-14);
    }

    #[test]
    fn off_shell_momentum_rejected() {
        let f = field(Polarization::Linear, 1.0);
        let dressed = FourVector::new(1.25, 0.0, 0.0, 0.25);
        assert!(matches!(dressed_shell_invariant(&dressed, &f), Err(Error::OffShell { .. })));
        let negative = FourVector::new(-1.0, 0.0, 0.0, 0.0);
        assert!(dressed_shell_invariant(&negative, &f).is_err());
    }

    #[test]
    fn minimum_energy_examples() {
        assert_eq!(minimum_energy(0.0, 1.0), 1.0);
        assert_eq!(minimum_energy(0.25, 1.0), 1.25);
        assert_eq!(minimum_energy_from_shell(0.25, 1.0), 1.25);
    }

    #[test]
    fn kinetic_energy_examples() {
        assert_eq!(kinetic_energy([0.0, 0.0, 0.25], 0.25, 1.0), 0.0);
        assert_eq!(kinetic_energy([0.0; 3], 0.0, 1.0), 0.0);
        let t = kinetic_energy([1e-3, 0.0, 0.0], 1e-6, 1.0);
        assert!((t - 5e-7).abs() / 5e-7 < 1e-3);
        assert!(kinetic_energy([0.0, 0.1, 0.0], 0.25, 1.0) < 0.0);
        assert_eq!(kinetic_energy_nr([0.0; 3], 1.0), 0.0);
        assert!((kinetic_energy_nr([1e-3, 0.0, 0.0], 1.0) - 5e-7).abs() < 1e-22);
    }

    #[test]
    fn kinetic_energy_agrees_with_direct_difference() {
        for &(p, up) in &[(0.3, 0.1), (2.0, 1.5), (10.0, 0.0), (0.01, 0.5)] {
            let direct = shell_energy(p, up, 1.0) - minimum_energy(up, 1.0);
            let t = kinetic_energy([p, 0.0, 0.0], up, 1.0);
            assert!((t - direct).abs() < 1e-14, "{t} vs {direct}");
        }
    }

    #[test]
    fn kinetic_energy_is_monotone() {
        let up = 0.4;
        let mut last = f64::NEG_INFINITY;
        for i in 0..2000 {
            let t = kinetic_energy([0.0, 0.0, 0.002 * f64::from(i)], up, 1.0);
            assert!(t > last);
            last = t;
        }
    }

    #[test]
    fn multipole_examples() {
        let f = field(Polarization::Linear, 1.0);
        let dressed_rest = FourVector::new(1.25, 0.0, 0.0, 0.25);
        assert!(multipole_residual(&dressed_rest, 0, &f, 1.0).unwrap().abs() < 1e-12);
        let free = field(Polarization::Linear, 0.0);
        let p = LorentzBoost::new([0.1, 0.2, 0.3]).unwrap().apply(&rest());
        assert!(multipole_residual(&p, 0, &free, 1.0).unwrap().abs() < 1e-12);
        for n in [-3, -1, 1, 2, 5] {
            let q = pole_momentum(n, [0.3, -0.2, 0.7], &f, 1.0).unwrap();
            assert!(multipole_residual(&q, n, &f, 1.0).unwrap().abs() < 1e-12);
            assert!(multipole_residual(&q, 0, &f, 1.0).unwrap().abs() > 1e-3);
        }
    }

    #[test]
    fn shell_form_is_not_a_mass_shift() {
        for z in [0.1, 0.5, 1.0] {
            let c = shell_form_comparison(z, 1.0);
            assert!(c.residual < 0.0);
            assert!((c.residual + 2.0 * c.delta_m).abs() < 1e-14);
        }
        assert_eq!(shell_form_comparison(0.0, 1.0).residual, 0.0);
    }
}
