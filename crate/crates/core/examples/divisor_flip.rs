//! Two divisors meeting along one stratum give an edge; removing the
//! intersection splits it into two points and changes the Euler characteristic.

use dualcx::builders::{dual_complex, StrataDescriptor};
use dualcx::io;

fn main() -> Result<(), dualcx::Error> {
    let mut d = StrataDescriptor::new();
    d.divisor("A1").divisor("A2");
    d.stratum("A1", &["A1"], "").stratum("A2", &["A2"], "");
    d.stratum("A1+A2", &["A1", "A2"], "").infer_unique_parents();

    let before = dual_complex(&d)?;
    let edge = before.cells_of_dim(1).next().expect("one edge");
    let after = before.delete_open_cell(edge)?;

    print!("{}", io::complex_to_string(&before));
    println!("chi before: {}", before.euler_characteristic());
    println!("chi after:  {}", after.euler_characteristic());
    println!("components after: {}", after.connected_components().len());
    Ok(())
}
