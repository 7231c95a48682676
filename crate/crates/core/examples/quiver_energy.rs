//! A slow electron shaken by E0 cos(omega t) carries a cycle-averaged
//! kinetic energy equal to the ponderomotive potential.

use ponderomotive::trajectory::quiver_energy_nr;
use ponderomotive::{PlaneWaveField, Polarization};

fn main() -> ponderomotive::Result<()> {
    for e0 in [1e-5, 1e-4, 1e-3, 5e-3] {
        let quiver = quiver_energy_nr(e0, 1.0, 1.0)?;
        let up = PlaneWaveField::monochromatic(Polarization::Linear, e0)?.ponderomotive_potential()?;
        println!("eE0/(m omega c) = {e0:e}: <m v^2/2> = {quiver:.12e}, U_p = {up:.12e}, rel. diff {:.1e}", (quiver - up).abs() / up);
    }
    match quiver_energy_nr(0.1, 1.0, 1.0) {
        Err(e) => println!("a0 = 0.1 rejected: {e}"),
        Ok(v) => println!("unexpected: {v}"),
    }
    Ok(())
}
