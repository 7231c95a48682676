//! Relativistic kinematics of a charge in a plane-wave laser field.
//!
//! The electron's modified mass shell inside a plane wave,
//! `p.p = (mc)^2 (1 + z_f)`, is reproduced here without any change of mass:
//! the free momentum is supplemented by a lightlike ponderomotive
//! 4-potential `U = (U_p, U_p khat)` parallel to the wave vector. The
//! crate provides
//!
//! * [`minkowski`]: four-vectors, boosts and causal classes;
//! * [`planewave`]: plane-wave potentials, cycle averages, gauge transforms,
//!   `U_p` and `z_f`, and the SI boundary;
//! * [`pondshell`]: the ponderomotive 4-potential, dressed shell invariant,
//!   minimum and kinetic energies, and the multi-pole shell residual;
//! * [`trajectory`]: an independent classical oracle, exact and RK4
//!   integrated motion in plane-wave pulses;
//! * [`relmass`]: a demonstrator showing that `m gamma` is frame dependent
//!   while `sqrt(p.p)` is not;
//! * [`cli`]: scenarios, reports and the verification suite behind the
//!   `pondkit` binary.
//!
//! Internally everything uses natural units `m = c = hbar = 1`.

pub mod cli;
pub mod error;
pub mod minkowski;
pub mod planewave;
pub mod pondshell;
pub mod relmass;
pub mod trajectory;

pub use error::{Error, Result};
pub use minkowski::{boost, classify, inner, CausalClass, FourVector, LorentzBoost, ThreeVector};
pub use planewave::{
    Envelope, GaugeGenerator, LaserParams, PhysicalConstants, PlaneWaveField, Polarization,
};
