//! A gauge shift A -> A + k Lambda'(phi) gives the potential a time part and
//! breaks transversality, yet leaves A.A and its cycle average unchanged
//! because k is null.

use ponderomotive::planewave::{
    cycle_average_abs_aa_numeric, cycle_average_abs_square, GaugedField, VectorPotential,
};
use ponderomotive::{Envelope, GaugeGenerator, PlaneWaveField, Polarization};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> ponderomotive::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let field = PlaneWaveField::new(1.4, [0.3, -0.7, 0.65], Polarization::Circular, 0.2, Envelope::Monochromatic)?;
    let generator = GaugeGenerator::random(&mut rng, 8);
    let gauged = GaugedField { field: &field, generator: &generator };
    let k = field.wave_vector();

    for phi in [0.0, 0.7, 2.1] {
        let a = field.potential_at(phi);
        let b = gauged.potential_at(phi);
        println!("phi = {phi}");
        println!("  A  = {a}   k.A  = {:+.2e}", k.inner(&a));
        println!("  A~ = {b}   k.A~ = {:+.2e}", k.inner(&b));
        println!("  A.A = {:+.15}   A~.A~ = {:+.15}", a.norm_sqr(), gauged.potential_split_at(phi).norm_sqr());
    }

    let closed = field.cycle_average_abs_aa()?;
    let base = cycle_average_abs_aa_numeric(&field, 0.0, 1024);
    let split = cycle_average_abs_aa_numeric(&gauged, 0.0, 1024);
    // adding k Lambda' in plain floating point drops the low bits of A
    let plain = cycle_average_abs_square(|phi| gauged.potential_at(phi), 0.0, 1024);
    println!("<|A.A|> closed form      {closed:.16}");
    println!("<|A.A|> radiation gauge  {base:.16}");
    println!("<|A~.A~|> split sum      {split:.16}  rel. change {:.1e}", (split - base).abs() / base);
    println!("<|A~.A~|> plain f64      {plain:.16}  rel. change {:.1e}", (plain - base).abs() / base);
    Ok(())
}
