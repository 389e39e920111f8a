//! Two triangles sharing a vertex, exchanged by a symmetry. Each collapse step
//! removes a whole orbit of free pairs so the result stays symmetric.

use dualcx::collapse::{equivariant_collapse, Automorphism, EquivariantMode, GroupAction, DEFAULT_MAX_ORDER};
use dualcx::complex::Complex;

fn main() -> Result<(), dualcx::Error> {
    let cx = Complex::from_maximal_simplices([["v0", "a1", "b1"], ["v0", "a2", "b2"]]);
    let swap = [("v0", "v0"), ("a1", "a2"), ("a2", "a1"), ("b1", "b2"), ("b2", "b1")]
        .into_iter()
        .map(|(a, b)| (a.into(), b.into()))
        .collect();
    let g = Automorphism::from_vertex_map(&cx, swap)?;
    let action = GroupAction::generate(&cx, vec![g], DEFAULT_MAX_ORDER)?;

    let (out, seq) = equivariant_collapse(&cx, &action, &EquivariantMode::Greedy)?;
    println!("group order {}", action.order());
    for p in seq.iter() {
        println!("remove ({}, {})", p.coface, p.face);
    }
    println!(
        "result f = {:?}, invariant: {}",
        out.f_vector(),
        action.fixes_setwise(&out.cell_ids())
    );
    Ok(())
}
