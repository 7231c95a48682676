//! From laboratory laser parameters to the natural-unit plane wave:
//! ponderomotive energy, a0, and the coupling constant z_f computed two
//! independent ways.

use ponderomotive::planewave::{from_laser_params, to_laser_params, zf_photon_density};
use ponderomotive::{LaserParams, PhysicalConstants, Polarization};

fn main() -> ponderomotive::Result<()> {
    let k = PhysicalConstants::codata2018();
    println!("{:>10} {:>8} {:>9} {:>14} {:>12} {:>14} {:>14}", "I [W/cm2]", "lambda", "pol", "U_p [eV]", "a0", "z_f (U_p)", "z_f (rho)");
    for (intensity, wavelength) in [(1e14, 800e-9), (1e16, 800e-9), (1e18, 800e-9), (1e14, 3.2e-6), (1e20, 1.06e-6)] {
        for pol in [Polarization::Linear, Polarization::Circular] {
            let params = LaserParams::new(intensity, wavelength, pol)?;
            let field = from_laser_params(&params, &k)?;
            let up = field.ponderomotive_potential()?;
            println!(
                "{intensity:>10.1e} {:>6.0}nm {:>9} {:>14.6} {:>12.6} {:>14.6e} {:>14.6e}",
                wavelength * 1e9,
                pol.to_string(),
                k.natural_to_ev(up),
                field.a0(),
                field.zf()?,
                zf_photon_density(&params, &k)?
            );
            let back = to_laser_params(&field, &k);
            assert!((back.intensity - intensity).abs() / intensity < 1e-12);
        }
    }
    println!("rest energy {:.6} eV, reduced Compton wavelength {:.6e} m", k.rest_energy_ev(), k.reduced_compton);
    Ok(())
}
