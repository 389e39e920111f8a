//! The two triangulations of a square differ by their diagonal. Subdividing
//! each diagonal at a new point gives the same complex.

use dualcx::builders::catalog;
use dualcx::complex::Complex;
use dualcx::isomorphism::is_isomorphic;
use dualcx::subdivision::stellar_subdivide;

fn subdivide_diagonal(cx: &Complex, a: &str, b: &str) -> Result<Complex, dualcx::Error> {
    let diagonal = cx.cells_with_vertices(&[a.into(), b.into()])[0];
    Ok(stellar_subdivide(cx, diagonal, "p")?)
}

fn main() -> Result<(), dualcx::Error> {
    let left = subdivide_diagonal(&catalog("fig3_left")?, "A1", "A2")?;
    let right = subdivide_diagonal(&catalog("fig3_right")?, "B1", "B2")?;
    println!("f-vectors: {:?} and {:?}", left.f_vector(), right.f_vector());
    match is_isomorphic(&left, &right) {
        Some(bij) => {
            for (a, b) in &bij {
                println!("{a} -> {b}");
            }
        }
        None => println!("not isomorphic"),
    }
    Ok(())
}
