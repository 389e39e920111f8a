//! Contracting an edge in the link of a vertex removes one free pair, and an
//! independent search confirms the result is reachable by collapses.

use dualcx::builders::catalog;
use dualcx::collapse::{collapses_to, mmp_collapse, MmpInstruction, DEFAULT_BUDGET};
use dualcx::isomorphism::same_up_to_ids;

fn main() -> Result<(), dualcx::Error> {
    let left = catalog("fig2_left")?;
    let edge = left.cells_with_vertices(&["A1".into(), "A2".into()])[0];
    let instr = MmpInstruction::new("B1", [edge]);

    let (right, seq) = mmp_collapse(&left, &instr)?;
    for p in seq.iter() {
        println!("remove {} with its free face {}", p.coface, p.face);
    }
    println!(
        "matches fig2_right: {}",
        same_up_to_ids(&right, &catalog("fig2_right")?)
    );
    let verdict = collapses_to(&left, &right.cell_ids(), DEFAULT_BUDGET)?;
    println!("search verdict: {}", verdict.name());
    Ok(())
}
