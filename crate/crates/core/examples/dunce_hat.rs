//! The dunce hat has the homology of a point but no free face at all.

use dualcx::builders::catalog;
use dualcx::collapse::{collapsible_search, free_pairs, DEFAULT_BUDGET};
use dualcx::homology::homology_z;

fn main() -> Result<(), dualcx::Error> {
    let hat = catalog("dunce_hat")?;
    println!("f = {:?}, chi = {}", hat.f_vector(), hat.euler_characteristic());
    println!("reduced homology trivial: {}", homology_z(&hat, true).is_trivial());
    println!("free pairs: {}", free_pairs(&hat).len());
    println!("search verdict: {}", collapsible_search(&hat, DEFAULT_BUDGET).name());
    Ok(())
}
