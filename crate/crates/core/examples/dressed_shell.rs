//! The dressed mass shell: p + U with a lightlike ponderomotive
//! 4-potential U reproduces (mc)^2 (1 + z_f) in every frame, the minimum
//! energy m + U_p sits at |p| = U_p, and the n-th pole of the shell.

use ponderomotive::pondshell::{
    kinetic_energy, minimum_energy, multipole_residual, pole_momentum, shell_energy, shell_form_comparison,
    DressedMomentum,
};
use ponderomotive::{FourVector, LorentzBoost, PlaneWaveField, Polarization};

fn main() -> ponderomotive::Result<()> {
    let field = PlaneWaveField::monochromatic(Polarization::Linear, 1.0)?;
    let up = field.ponderomotive_potential()?;
    let zf = field.zf()?;
    println!("a0 = 1 linear: U_p = {up}, z_f = {zf}, U.U = {:+.1e}", field.wave_vector().norm_sqr());

    let rest = DressedMomentum::new(FourVector::new(1.0, 0.0, 0.0, 0.0), &field)?;
    println!("rest: p = {}, U = {}, (p+U)^2 = {}", rest.free_p, rest.pond_u, rest.invariant());
    for v in [[0.6, 0.0, 0.0], [0.0, 0.0, 0.9], [-0.5, 0.4, -0.7]] {
        let moved = rest.boosted(&LorentzBoost::new(v)?);
        println!("boost {v:?}: p + U = {}, (p+U)^2 = {:.15}", moved.total(), moved.invariant());
    }

    println!("E_min = m + U_p = {}", minimum_energy(up, 1.0));
    for p in [0.0, 0.5 * up, up, 2.0 * up, 1.0] {
        println!(
            "  |p| = {p:<6} E = {:.12}  T = E - E_min = {:+.3e}",
            shell_energy(p, up, 1.0),
            kinetic_energy([p, 0.0, 0.0], up, 1.0)
        );
    }

    for n in [-1, 1, 2] {
        let q = pole_momentum(n, [0.1, 0.0, 0.3], &field, 1.0)?;
        println!("pole n = {n:+}: p = {q}, residual {:+.1e}", multipole_residual(&q, n, &field, 1.0)?);
    }

    let c = shell_form_comparison(zf, 1.0);
    println!(
        "m^2 + dm^2 = {} but (m + dm)^2 = {}: the shell is not a mass shift (residual {})",
        c.quadratic_form, c.shifted_form, c.residual
    );
    Ok(())
}
