//! Two triangles glued along their whole boundary do not form a simplicial
//! complex. One barycentric subdivision fixes that without changing homology.

use dualcx::complex::Complex;
use dualcx::homology::homology_z;
use dualcx::subdivision::barycentric_subdivide;

fn main() -> Result<(), dualcx::Error> {
    let mut pillow = Complex::from_maximal_simplices([["a", "b", "c"]]);
    let tri = pillow.cells_of_dim(2).next().unwrap();
    let facets = pillow.cell(tri).unwrap().facets().to_vec();
    pillow.attach_cell(vec!["a".into(), "b".into(), "c".into()], facets)?;

    let sd = barycentric_subdivide(&pillow);
    println!(
        "input simplicial: {}, f = {:?}",
        pillow.is_simplicial(),
        pillow.f_vector()
    );
    println!("output simplicial: {}, f = {:?}", sd.is_simplicial(), sd.f_vector());
    println!("betti before: {:?}", homology_z(&pillow, false).betti());
    println!("betti after:  {:?}", homology_z(&sd, false).betti());
    Ok(())
}
