//! Strata descriptor to complex and back, through the JSON documents.

use dualcx::builders::{dual_complex, fig3_descriptor, strata_of};
use dualcx::io;
use dualcx::isomorphism::is_isomorphic;

fn main() -> Result<(), dualcx::Error> {
    let desc = fig3_descriptor();
    print!("{}", io::to_canonical_string(&io::strata_to_value(&desc)));

    let cx = dual_complex(&desc)?;
    let again = dual_complex(&strata_of(&cx))?;
    println!("f = {:?}", cx.f_vector());
    println!("round trip isomorphic: {}", is_isomorphic(&cx, &again).is_some());
    Ok(())
}
