//! Classical motion of a charge in a plane-wave pulse.
//!
//! Because the field depends on spacetime only through `phi = k.x`, the
//! phase is used as the independent variable. With `dphi/dtau = k.p / m`
//! the Lorentz force becomes
//!
//! ```text
//! dp/dphi = q [ k (A'.p) / (k.p) - A' ]      dx/dphi = p / (k.p)
//! ```
//!
//! and has the closed-form solution
//!
//! ```text
//! p(phi) = p0 - q A + k [2 q p0.A - q^2 A.A] / (2 k.p0)
//! ```
//!
//! for a particle that had momentum `p0` where `A` vanished. `k.p` is an
//! exact constant of the motion. Potentials use the normalization of
//! [`crate::planewave`], charges are in units of `|e|` and the mass is one.
//!
//! Averages over a carrier period are taken in proper time, which is
//! uniform in phase because `k.p` is constant. That makes the averaged
//! momentum a four-vector. For a rest start it equals `p0 + U`, where
//! `U = (U_p, U_p khat)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minkowski::FourVector;
use crate::planewave::PlaneWaveField;

/// Electron charge in units of `|e|`.
pub const ELECTRON_CHARGE: f64 = -1.0;

/// Default integration step: a thousand steps per carrier period.
pub const DEFAULT_STEP: f64 = 2.0 * PI / 1000.0;

fn check_initial(field: &PlaneWaveField, p0: &FourVector) -> Result<f64> {
    let q = p0.norm_sqr();
    if (q - 1.0).abs() > 1e-12 || p0.t() <= 0.0 {
        return Err(Error::OffShell { invariant: q, expected: 1.0 });
    }
    let kp = field.wave_vector().inner(p0);
    if !(kp > 0.0) {
        return Err(Error::SingularLightFront);
    }
    Ok(kp)
}

/// Kinetic 4-momentum of an electron at phase `phi`, given its momentum
/// `p0` at a phase where the potential vanishes.
pub fn exact_momentum(field: &PlaneWaveField, p0: &FourVector, phi: f64) -> Result<FourVector> {
    exact_momentum_with_charge(field, p0, phi, ELECTRON_CHARGE)
}

pub fn exact_momentum_with_charge(field: &PlaneWaveField, p0: &FourVector, phi: f64, charge: f64) -> Result<FourVector> {
    let kp = check_initial(field, p0)?;
    let k = field.wave_vector();
    let a = field.potential_at(phi);
    let light_front = (2.0 * charge * p0.inner(&a) - charge * charge * a.norm_sqr()) / (2.0 * kp);
    Ok(*p0 - a * charge + k * light_front)
}

/// One sample along a trajectory.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryState {
    pub phase: f64,
    pub position: FourVector,
    /// Kinetic 4-momentum `m u`.
    pub momentum: FourVector,
}

/// Uniformly sampled trajectory.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub states: Vec<TrajectoryState>,
    pub field: PlaneWaveField,
    pub step: f64,
    pub charge: f64,
}

impl Trajectory {
    pub fn initial(&self) -> &TrajectoryState {
        &self.states[0]
    }

    pub fn last(&self) -> &TrajectoryState {
        self.states.last().expect("trajectory has at least one state")
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Largest `|p.p - 1|` along the trajectory.
    pub fn max_shell_violation(&self) -> f64 {
        self.states.iter().map(|s| (s.momentum.norm_sqr() - 1.0).abs()).fold(0.0, f64::max)
    }

    /// Largest relative drift of `k.p` from its initial value.
    pub fn max_light_front_drift(&self) -> f64 {
        let k = self.field.wave_vector();
        let kp0 = k.inner(&self.states[0].momentum);
        self.states.iter().map(|s| (k.inner(&s.momentum) - kp0).abs() / kp0).fold(0.0, f64::max)
    }
}

type State = [f64; 8];

fn rhs(field: &PlaneWaveField, charge: f64, phi: f64, y: &State) -> State {
    let p = FourVector::new(y[4], y[5], y[6], y[7]);
    let k = field.wave_vector();
    let kp = k.inner(&p);
    let da = field.potential_derivative_at(phi);
    let dp = (k * (da.inner(&p) / kp) - da) * charge;
    let dx = p * (1.0 / kp);
    [dx.t(), dx.x(), dx.y(), dx.z(), dp.t(), dp.x(), dp.y(), dp.z()]
}

fn axpy(y: &State, h: f64, k: &State) -> State {
    let mut out = *y;
    for i in 0..8 {
        out[i] += h * k[i];
    }
    out
}

// `phi1 = phi + h` is passed in so the last stage lands exactly on the end
// of the range, where a pulse may switch off with a kink.
fn rk4_step(field: &PlaneWaveField, charge: f64, phi: f64, phi1: f64, y: &State, h: f64) -> State {
    let k1 = rhs(field, charge, phi, y);
    let k2 = rhs(field, charge, phi + 0.5 * h, &axpy(y, 0.5 * h, &k1));
    let k3 = rhs(field, charge, phi + 0.5 * h, &axpy(y, 0.5 * h, &k2));
    let k4 = rhs(field, charge, phi1, &axpy(y, h, &k3));
    let mut out = *y;
    for i in 0..8 {
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

/// Integrates an electron trajectory over `phi_range` with classic RK4.
///
/// The step is shrunk, if needed, so that a whole number of steps spans the
/// range. The potential must vanish at the start phase, where the momentum
/// is `p0` and the position is `(phi_start / omega, 0, 0, 0)`.
pub fn integrate(field: &PlaneWaveField, p0: &FourVector, phi_range: (f64, f64), step: f64) -> Result<Trajectory> {
    integrate_with_charge(field, p0, phi_range, step, ELECTRON_CHARGE)
}

pub fn integrate_with_charge(
    field: &PlaneWaveField,
    p0: &FourVector,
    phi_range: (f64, f64),
    step: f64,
    charge: f64,
) -> Result<Trajectory> {
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::invalid("step", "must be positive"));
    }
    let (start, end) = phi_range;
    if !(start.is_finite() && end.is_finite() && end > start) {
        return Err(Error::invalid("phi_range", "must be a finite, non-empty interval"));
    }
    check_initial(field, p0)?;
    let a_start = field.potential_at(start).euclidean_norm();
    if a_start > 1e-12 * field.a0().max(1.0) {
        return Err(Error::FieldNotVanishing { phase: start, magnitude: a_start });
    }
    let n = ((end - start) / step * (1.0 - 1e-12)).ceil().max(1.0) as usize;
    let h = (end - start) / n as f64;
    let mut y: State = [start / field.omega(), 0.0, 0.0, 0.0, p0.t(), p0.x(), p0.y(), p0.z()];
    let mut states = Vec::with_capacity(n + 1);
    let to_state = |phase: f64, y: &State| TrajectoryState {
        phase,
        position: FourVector::new(y[0], y[1], y[2], y[3]),
        momentum: FourVector::new(y[4], y[5], y[6], y[7]),
    };
    states.push(to_state(start, &y));
    let node = |i: usize| if i == n { end } else { start + h * i as f64 };
    for i in 0..n {
        y = rk4_step(field, charge, node(i), node(i + 1), &y, h);
        states.push(to_state(node(i + 1), &y));
    }
    Ok(Trajectory { states, field: field.clone(), step: h, charge })
}

// Index of the state at `phase`, if the grid hits it.
fn grid_index(traj: &Trajectory, phase: f64) -> Option<usize> {
    let start = traj.initial().phase;
    let x = (phase - start) / traj.step;
    let i = x.round();
    ((x - i).abs() < 1e-6 && i >= 0.0 && (i as usize) < traj.len()).then_some(i as usize)
}

fn plateau_window(traj: &Trajectory, cycles: usize) -> Result<(usize, usize)> {
    if cycles == 0 {
        return Err(Error::invalid("cycles", "must be at least 1"));
    }
    let env = traj.field.envelope();
    let (lo, hi) = env.plateau().ok_or(Error::NonPeriodicEnvelope("pulse without plateau"))?;
    let first = traj.initial().phase;
    let last = traj.last().phase;
    // first whole period on the plateau that the trajectory reaches
    let start = if lo.is_finite() { lo.max(first) } else { first };
    let start = if lo.is_finite() && start > lo {
        lo + ((start - lo) / (2.0 * PI)).ceil() * 2.0 * PI
    } else {
        start
    };
    let stop = hi.min(last);
    let available = if stop > start { ((stop - start) / (2.0 * PI) + 1e-9).floor() as usize } else { 0 };
    if available < cycles {
        return Err(Error::InsufficientCoverage { requested: cycles, available });
    }
    let i0 = grid_index(traj, start)
        .ok_or_else(|| Error::invalid("step", "plateau start does not fall on the integration grid"))?;
    let i1 = grid_index(traj, start + 2.0 * PI * cycles as f64)
        .ok_or_else(|| Error::invalid("step", "whole periods do not fall on the integration grid"))?;
    Ok((i0, i1))
}

/// Proper-time average of the kinetic 4-momentum over `cycles` carrier
/// periods on the envelope plateau.
pub fn cycle_averaged_four_momentum(traj: &Trajectory, cycles: usize) -> Result<FourVector> {
    let (i0, i1) = plateau_window(traj, cycles)?;
    // trapezoid on a periodic integrand: interior weight 1, endpoints 1/2
    let mut sum = (traj.states[i0].momentum + traj.states[i1].momentum) * 0.5;
    for s in &traj.states[i0 + 1..i1] {
        sum += s.momentum;
    }
    Ok(sum * (1.0 / (i1 - i0) as f64))
}

/// Lab-time average of the kinetic 4-momentum, weighting each phase by
/// `dt/dphi = E / (k.p)`.
///
/// Unlike the proper-time average this is not a four-vector. For linear
/// polarization its time part exceeds `m + U_p`, because the electron
/// spends more lab time at the high-energy turning points of its
/// figure-eight orbit.
pub fn lab_time_averaged_four_momentum(traj: &Trajectory, cycles: usize) -> Result<FourVector> {
    let (i0, i1) = plateau_window(traj, cycles)?;
    let w = |s: &TrajectoryState| s.momentum.t();
    let mut sum = FourVector::ZERO;
    let mut norm = 0.0;
    for (j, s) in traj.states[i0..=i1].iter().enumerate() {
        let edge = if j == 0 || j == i1 - i0 { 0.5 } else { 1.0 };
        sum += s.momentum * (edge * w(s));
        norm += edge * w(s);
    }
    Ok(sum * (1.0 / norm))
}

/// Terminal-momentum errors of the integrator against the exact solution at
/// `step` and `step / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceEstimate {
    pub step: f64,
    pub error_coarse: f64,
    pub error_fine: f64,
    pub ratio: f64,
    pub order: f64,
}

pub fn convergence_estimate(
    field: &PlaneWaveField,
    p0: &FourVector,
    phi_range: (f64, f64),
    step: f64,
) -> Result<ConvergenceEstimate> {
    let exact = exact_momentum(field, p0, phi_range.1)?;
    let coarse = integrate(field, p0, phi_range, step)?;
    let fine = integrate(field, p0, phi_range, coarse.step / 2.0)?;
    let error_coarse = coarse.last().momentum.max_abs_diff(&exact);
    let error_fine = fine.last().momentum.max_abs_diff(&exact);
    let ratio = error_coarse / error_fine;
    Ok(ConvergenceEstimate { step: coarse.step, error_coarse, error_fine, ratio, order: ratio.log2() })
}

/// Cycle-averaged kinetic energy of a nonrelativistic electron driven by
/// `E(t) = E0 cos(omega t)`, in the same units as `mass`.
///
/// The velocity is integrated over one period with RK4 from rest at `t = 0`,
/// which puts the electron in the drift-free state, and `m v^2 / 2` is then
/// averaged with the periodic trapezoid rule. Requires
/// `|e| E0 / (m omega c) < 0.01`.
pub fn quiver_energy_nr(field_amplitude: f64, omega: f64, mass: f64) -> Result<f64> {
    if !(omega > 0.0 && mass > 0.0) {
        return Err(Error::invalid("omega/mass", "must be positive"));
    }
    let drive = ELECTRON_CHARGE.abs() * field_amplitude.abs() / (mass * omega);
    if !(drive < 0.01) {
        return Err(Error::RegimeViolation(drive));
    }
    let accel = |t: f64| ELECTRON_CHARGE * field_amplitude * (omega * t).cos() / mass;
    let n = 2000;
    let h = 2.0 * PI / omega / n as f64;
    let mut v = 0.0;
    let mut sum = 0.0;
    for i in 0..n {
        let t = h * i as f64;
        sum += 0.5 * mass * v * v;
        let k1 = accel(t);
        let k2 = accel(t + 0.5 * h);
        let k4 = accel(t + h);
        v += h / 6.0 * (k1 + 4.0 * k2 + k4);
    }
    Ok(sum / n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::LorentzBoost;
    use crate::planewave::{Envelope, Polarization};

    // The truncated Gaussian switches on with a finite slope, so the
    // integrator must see the one-sided derivative at the support ends.
    #[test]
    fn gaussian_kink_keeps_fourth_order_on_any_grid() {
        let env = Envelope::Gaussian { sigma_cycles: 2.0, cutoff_sigmas: 4.0 };
        let f = PlaneWaveField::new(1.0, [0.0, 0.0, 1.0], Polarization::Linear, 0.68, env).unwrap();
        let p0 = FourVector::new(1.0, 0.0, 0.0, 0.0);
        let (lo, hi) = env.support().unwrap();
        for n in [8001usize, 16000, 32001, 32002] {
            let t = integrate(&f, &p0, (lo, hi), (hi - lo) / n as f64).unwrap();
            let mid = &t.states[t.len() / 2];
            let exact_mid = exact_momentum(&f, &p0, mid.phase).unwrap();
            let h4 = t.step.powi(4);
            assert!(mid.momentum.max_abs_diff(&exact_mid) < 10.0 * h4 + 1e-13, "n={n}");
            assert!(t.last().momentum.max_abs_diff(&p0) < 10.0 * h4 + 1e-13, "n={n}");
        }
    }

    fn rest() -> FourVector {
        FourVector::new(1.0, 0.0, 0.0, 0.0)
    }

    fn flat_top(pol: Polarization, a0: f64) -> PlaneWaveField {
        PlaneWaveField::new(1.0, [0.0, 0.0, 1.0], pol, a0, Envelope::FlatTop { ramp_cycles: 4, plateau_cycles: 2 })
            .unwrap()
    }

    #[test]
    fn zero_field_leaves_momentum_alone() {
        let f = PlaneWaveField::monochromatic(Polarization::Linear, 0.0).unwrap();
        let p0 = LorentzBoost::new([0.3, 0.0, -0.2]).unwrap().apply(&rest());
        assert_eq!(exact_momentum(&f, &p0, 3.0).unwrap(), p0);
        let traj = integrate(&f, &p0, (0.0, 20.0), DEFAULT_STEP).unwrap();
        for s in &traj.states {
            assert!(s.momentum.max_abs_diff(&p0) < 1e-15);
        }
    }

    #[test]
    fn exact_solution_is_on_shell() {
        let p0 = LorentzBoost::new([0.1, -0.5, 0.4]).unwrap().apply(&rest());
        for pol in [Polarization::Linear, Polarization::Circular] {
            let f = PlaneWaveField::new(0.8, [1.0, 1.0, 0.3], pol, 3.0, Envelope::Monochromatic).unwrap();
            let k = f.wave_vector();
            for i in 0..300 {
                let p = exact_momentum(&f, &p0, 0.05 * f64::from(i)).unwrap();
                assert!((p.norm_sqr() - 1.0).abs() < 1e-12);
                assert!((k.inner(&p) - k.inner(&p0)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn rest_start_linear_figure_eight() {
        // p(phi) = (1 + a0^2 cos^2/2, a0 cos, 0, a0^2 cos^2/2) for q = -1, k = (1,0,0,1)
        let f = PlaneWaveField::monochromatic(Polarization::Linear, 1.0).unwrap();
        for i in 0..50 {
            let phi = 0.2 * f64::from(i);
            let c = phi.cos();
            let expect = FourVector::new(1.0 + 0.5 * c * c, c, 0.0, 0.5 * c * c);
            assert!(exact_momentum(&f, &rest(), phi).unwrap().max_abs_diff(&expect) < 1e-15);
        }
    }

    #[test]
    fn charge_sign_flip_equals_half_period_shift() {
        let f = PlaneWaveField::monochromatic(Polarization::Linear, 1.5).unwrap();
        let p0 = LorentzBoost::new([0.2, 0.1, 0.0]).unwrap().apply(&rest());
        for i in 0..40 {
            let phi = 0.3 * f64::from(i);
            let pos = exact_momentum_with_charge(&f, &p0, phi, 1.0).unwrap();
            let neg = exact_momentum_with_charge(&f, &p0, phi + PI, -1.0).unwrap();
            assert!(pos.max_abs_diff(&neg) < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let f = PlaneWaveField::monochromatic(Polarization::Linear, 1.0).unwrap();
        // co-moving with the wave: k.p = 0 is only reachable in the massless limit
        let null = FourVector::new(1.0, 0.0, 0.0, 1.0);
        assert!(exact_momentum(&f, &null, 0.0).is_err());
        assert!(integrate(&f, &rest(), (PI / 2.0, 10.0), 0.0).is_err());
        assert!(integrate(&f, &rest(), (PI / 2.0, 10.0), -0.1).is_err());
        assert!(matches!(integrate(&f, &rest(), (0.0, 10.0), 0.01), Err(Error::FieldNotVanishing { .. })));
        assert!(integrate(&f, &FourVector::new(1.1, 0.0, 0.0, 0.0), (PI / 2.0, 10.0), 0.01).is_err());
    }

    #[test]
    fn phase_of_position_tracks_integration_variable() {
        let f = flat_top(Polarization::Circular, 2.0);
        let traj = integrate(&f, &rest(), (0.0, 20.0 * PI), DEFAULT_STEP).unwrap();
        let k = f.wave_vector();
        for s in traj.states.iter().step_by(97) {
            assert!((k.inner(&s.position) - s.phase).abs() < 1e-9 * s.phase.max(1.0));
        }
    }

    #[test]
    fn integrator_conserves_shell_and_light_front() {
        let f = flat_top(Polarization::Linear, 2.0);
        let (_, end) = f.envelope().support().unwrap();
        let traj = integrate(&f, &rest(), (0.0, end), DEFAULT_STEP).unwrap();
        assert!(traj.max_shell_violation() < 1e-9);
        assert!(traj.max_light_front_drift() < 1e-10);
    }

    #[test]
    fn sin2_pulse_returns_initial_momentum() {
        let f = PlaneWaveField::new(1.0, [0.0, 0.0, 1.0], Polarization::Linear, 1.0, Envelope::Sin2 { total_cycles: 8 })
            .unwrap();
        let (_, end) = f.envelope().support().unwrap();
        let exact = exact_momentum(&f, &rest(), end).unwrap();
        assert!(exact.max_abs_diff(&rest()) < 1e-10);
        let traj = integrate(&f, &rest(), (0.0, end), DEFAULT_STEP).unwrap();
        assert!(traj.last().momentum.max_abs_diff(&rest()) < 1e-6);
    }

    #[test]
    fn flat_top_average_is_dressed_momentum() {
        for pol in [Polarization::Linear, Polarization::Circular] {
            let f = flat_top(pol, 1.0);
            let up = f.ponderomotive_potential().unwrap();
            let (_, end) = f.envelope().support().unwrap();
            let traj = integrate(&f, &rest(), (0.0, end), DEFAULT_STEP).unwrap();
            let avg = cycle_averaged_four_momentum(&traj, 2).unwrap();
            let expect = FourVector::new(1.0 + up, 0.0, 0.0, up);
            assert!(avg.max_abs_diff(&expect) < 1e-9, "{pol}: {avg}");
        }
    }

    #[test]
    fn lab_time_average_differs_for_linear_polarization() {
        let f = flat_top(Polarization::Linear, 1.0);
        let (_, end) = f.envelope().support().unwrap();
        let traj = integrate(&f, &rest(), (0.0, end), DEFAULT_STEP).unwrap();
        let lab = lab_time_averaged_four_momentum(&traj, 1).unwrap();
        // int (1 + c^2/2)^2 / int (1 + c^2/2) = (1 + 1/2 + 3/32) / (5/4) = 1.275
        assert!((lab.t() - 1.275).abs() < 1e-9);
    }

    #[test]
    fn averaging_requires_coverage() {
        let f = flat_top(Polarization::Linear, 1.0);
        let traj = integrate(&f, &rest(), (0.0, 10.0 * PI), DEFAULT_STEP).unwrap();
        assert!(matches!(
            cycle_averaged_four_momentum(&traj, 2),
            Err(Error::InsufficientCoverage { requested: 2, available: 1 })
        ));
        let pulse = f.with_envelope(Envelope::Sin2 { total_cycles: 4 }).unwrap();
        let traj = integrate(&pulse, &rest(), (0.0, 8.0 * PI), DEFAULT_STEP).unwrap();
        assert!(cycle_averaged_four_momentum(&traj, 1).is_err());
    }

    #[test]
    fn zero_field_average_is_rest_momentum() {
        let f = flat_top(Polarization::Linear, 0.0);
        let traj = integrate(&f, &rest(), (0.0, 20.0 * PI), DEFAULT_STEP).unwrap();
        assert_eq!(cycle_averaged_four_momentum(&traj, 2).unwrap(), rest());
    }

    #[test]
    fn quiver_examples() {
        assert_eq!(quiver_energy_nr(0.0, 1.0, 1.0).unwrap(), 0.0);
        let q = quiver_energy_nr(1e-3, 1.0, 1.0).unwrap();
        assert!((q - 2.5e-7).abs() / 2.5e-7 < 1e-9, "{q}");
        assert!(matches!(quiver_energy_nr(0.02, 1.0, 1.0), Err(Error::RegimeViolation(_))));
    }
}
