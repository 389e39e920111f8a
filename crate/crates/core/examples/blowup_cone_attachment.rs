//! Glue the cone over a join onto a triangle and collapse it away again.

use dualcx::complex::Complex;
use dualcx::subdivision::{attach_cone_over_join, collapse_coned_join, VertexMap};

fn main() -> Result<(), dualcx::Error> {
    let tri = Complex::from_maximal_simplices([["a", "b", "c"]]);
    let center = tri.cells_with_vertices(&["a".into(), "b".into()])[0];
    // the link is a single point sent to the opposite vertex
    let link = Complex::from_maximal_simplices([["l"]]);
    let tau = VertexMap::new([("l", "c")]);

    let (big, record) = attach_cone_over_join(&tri, center, &link, &tau, "e0")?;
    println!("after attaching: f = {:?}", big.f_vector());
    let (back, seq) = collapse_coned_join(&big, &record)?;
    println!(
        "collapsed back in {} pairs, original restored: {}",
        seq.len(),
        back == tri
    );
    Ok(())
}
