//! The trajectory oracle: an electron at rest overtaken by a flat-top pulse.
//! Its kinetic 4-momentum averaged over a plateau cycle is p0 + U, the
//! dressed momentum, even though no mass ever changed.

use ponderomotive::pondshell::DressedMomentum;
use ponderomotive::trajectory::{cycle_averaged_four_momentum, integrate, lab_time_averaged_four_momentum, DEFAULT_STEP};
use ponderomotive::{Envelope, FourVector, PlaneWaveField, Polarization};

fn main() -> ponderomotive::Result<()> {
    let env = Envelope::FlatTop { ramp_cycles: 4, plateau_cycles: 2 };
    let p0 = FourVector::new(1.0, 0.0, 0.0, 0.0);
    for pol in [Polarization::Linear, Polarization::Circular] {
        for a0 in [0.1, 1.0, 2.0] {
            let field = PlaneWaveField::new(1.0, [0.0, 0.0, 1.0], pol, a0, env)?;
            let traj = integrate(&field, &p0, env.support().expect("pulse"), DEFAULT_STEP)?;
            let avg = cycle_averaged_four_momentum(&traj, 2)?;
            let dressed = DressedMomentum::new(p0, &field)?.total();
            println!("{pol:>8} a0 = {a0}: <p> = {avg}");
            println!(
                "{:>17} p0 + U = {dressed}, rel. diff {:.1e}, <p>^2 = {:.10} vs 1 + z_f = {}",
                "",
                avg.max_abs_diff(&dressed) / dressed.euclidean_norm(),
                avg.norm_sqr(),
                1.0 + field.zf()?
            );
            if pol == Polarization::Linear && a0 == 1.0 {
                let lab = lab_time_averaged_four_momentum(&traj, 2)?;
                println!("{:>17} lab-time average {lab} is not a four-vector average", "");
            }
            println!("{:>17} max |p.p - 1| = {:.1e}", "", traj.max_shell_violation());
        }
    }
    Ok(())
}
