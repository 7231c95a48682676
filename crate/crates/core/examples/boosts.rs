//! Four-vectors and active boosts: the inner product and the causal class
//! survive any boost, the components do not.

use ponderomotive::{classify, FourVector, LorentzBoost};

fn main() -> ponderomotive::Result<()> {
    let events = [
        ("timelike", FourVector::new(2.0, 0.5, -0.3, 1.0)),
        ("lightlike", FourVector::new(1.0, 0.0, 0.6, 0.8)),
        ("spacelike", FourVector::new(0.2, 1.0, 0.0, 0.0)),
    ];
    let l = LorentzBoost::new([0.6, -0.3, 0.5])?;
    println!("boost v = {:?}, gamma = {:.6}", l.velocity(), l.gamma());
    for (name, x) in events {
        let y = l.apply(&x);
        println!("{name:>9}: x = {x}");
        println!("{:>9}  Lx = {y}", "");
        println!(
            "{:>9}  x.x = {:+.15}  Lx.Lx = {:+.15}  class {:?} -> {:?}",
            "",
            x.norm_sqr(),
            y.norm_sqr(),
            classify(&x, 1e-12)?,
            classify(&y, 1e-12)?
        );
        let back = l.inverse().apply(&y);
        println!("{:>9}  round trip error {:.1e}", "", back.max_abs_diff(&x));
    }
    // active convention: the rest vector acquires the boost velocity
    let u = LorentzBoost::new([0.6, 0.0, 0.0])?.apply(&FourVector::new(1.0, 0.0, 0.0, 0.0));
    println!("rest (1,0,0,0) boosted by 0.6 x: {u}");
    Ok(())
}
