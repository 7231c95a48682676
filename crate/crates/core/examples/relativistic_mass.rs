//! p = m u is a four-vector of fixed length m. The grouping m gamma is just
//! its time component and changes from frame to frame.

use ponderomotive::relmass::{compose_velocity, covariance_report};
use ponderomotive::LorentzBoost;

fn main() -> ponderomotive::Result<()> {
    let v = [0.6, 0.0, 0.0];
    let frames = [
        LorentzBoost::identity(),
        LorentzBoost::new([-0.6, 0.0, 0.0])?,
        LorentzBoost::new([0.5, 0.0, 0.0])?,
        LorentzBoost::new([0.0, 0.8, 0.0])?,
        LorentzBoost::new([-0.3, 0.3, 0.9])?,
    ];
    let r = covariance_report(1.0, v, &frames)?;
    println!("{:>22} {:>14} {:>14} {:>14} {:>14}", "frame velocity", "p0", "|p|", "sqrt(p.p)", "m gamma");
    for row in &r.rows {
        println!(
            "{:>22} {:>14.10} {:>14.10} {:>14.10} {:>14.10}",
            format!("{:?}", row.boost),
            row.energy,
            row.momentum,
            row.invariant_mass,
            row.m_gamma
        );
    }
    println!("sqrt(p.p) spread {:.1e}, m gamma spread {:.3}", r.invariant_mass_spread(), r.m_gamma_spread());
    println!("L(m u(v)) vs m u(v composed): {:.1e}", r.covariance_residual);
    let w = compose_velocity(v, &LorentzBoost::new([0.6, 0.0, 0.0])?)?;
    println!("0.6 (+) 0.6 = {:.6}", w[0]);
    Ok(())
}
