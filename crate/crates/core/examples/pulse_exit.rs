//! After a pulse has passed, the electron's momentum returns to its initial
//! value: the mass-shell change exists only inside the field. Also shows
//! the fourth-order convergence of the integrator against the exact
//! plane-wave solution.

use std::f64::consts::PI;

use ponderomotive::trajectory::{convergence_estimate, exact_momentum, integrate, DEFAULT_STEP};
use ponderomotive::{Envelope, FourVector, PlaneWaveField, Polarization};

fn main() -> ponderomotive::Result<()> {
    let starts = [FourVector::new(1.0, 0.0, 0.0, 0.0), FourVector::from_parts(1.13f64.sqrt(), [0.3, 0.0, -0.2])];
    for env in [Envelope::Sin2 { total_cycles: 8 }, Envelope::Gaussian { sigma_cycles: 2.0, cutoff_sigmas: 4.0 }] {
        let field = PlaneWaveField::new(1.0, [0.0, 0.0, 1.0], Polarization::Circular, 2.0, env)?;
        let (lo, hi) = env.support().expect("pulse");
        for p0 in starts {
            let traj = integrate(&field, &p0, (lo, hi), DEFAULT_STEP)?;
            let peak = traj.states.iter().map(|s| s.momentum.t()).fold(0.0, f64::max);
            println!("{env:?}, p0 = {p0}");
            println!("  peak energy {peak:.6}, exit {}", traj.last().momentum);
            println!(
                "  |exit - p0|: RK4 {:.1e}, exact {:.1e}",
                traj.last().momentum.max_abs_diff(&p0),
                exact_momentum(&field, &p0, hi)?.max_abs_diff(&p0)
            );
        }
    }
    let env = Envelope::Sin2 { total_cycles: 4 };
    let field = PlaneWaveField::new(1.0, [0.0, 0.0, 1.0], Polarization::Linear, 1.0, env)?;
    let end = 0.6 * env.support().expect("pulse").1;
    for n in [40.0, 80.0, 160.0] {
        let c = convergence_estimate(&field, &FourVector::new(1.0, 0.0, 0.0, 0.0), (0.0, end), 2.0 * PI / n)?;
        println!("step 2pi/{n}: errors {:.3e} -> {:.3e}, ratio {:.2}, order {:.2}", c.error_coarse, c.error_fine, c.ratio, c.order);
    }
    Ok(())
}
