//! The projective plane is acyclic over the rationals but not over the integers.

use dualcx::builders::catalog;
use dualcx::homology::{betti_q, homology_z, is_q_acyclic};

fn main() -> Result<(), dualcx::Error> {
    let rp2 = catalog("rp2")?;
    let h = homology_z(&rp2, false);
    for (k, d) in h.degrees.iter().enumerate() {
        let torsion: Vec<String> = d.torsion.iter().map(|t| format!("Z/{t}")).collect();
        println!("H{k}: rank {} torsion [{}]", d.betti, torsion.join(", "));
    }
    println!("betti over Q: {:?}", betti_q(&rp2, false));
    println!("Q-acyclic: {}", is_q_acyclic(&rp2));
    Ok(())
}
