//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for each
//! with its running time, and exits non-zero if any criterion fails or
//! overruns its time limit.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use dualcx::builders::{catalog, dual_complex, StrataDescriptor, CATALOG_NAMES};
use dualcx::collapse::{
    collapses_to, collapsible_search, elementary_collapse, equivariant_collapse, free_pairs, greedy_collapse,
    mmp_collapse, orbit_step, replay, Automorphism, CollapseError, EquivariantMode, FreePair, GroupAction,
    MmpInstruction, Verdict, DEFAULT_BUDGET, DEFAULT_MAX_ORDER,
};
use dualcx::complex::{CellId, Complex, VertexLabel};
use dualcx::homology::{homology_z, is_q_acyclic};
use dualcx::io;
use dualcx::isomorphism::{is_isomorphic, same_up_to_ids};
use dualcx::subdivision::{attach_cone_over_join, barycentric_subdivide, collapse_coned_join, stellar_subdivide};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{random_complex, random_cone_instance, random_instruction, signature};

const CORPUS: usize = 200;
const CONE_INSTANCES: usize = 60;
const SEED: u64 = 0x5eed_d0a1;

fn cell(cx: &Complex, verts: &[&str]) -> CellId {
    let v: Vec<VertexLabel> = verts.iter().map(|&s| s.into()).collect();
    let found = cx.cells_with_vertices(&v);
    assert_eq!(found.len(), 1, "no unique cell on {verts:?}");
    found[0]
}

fn corpus() -> Vec<Complex> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..CORPUS).map(|_| random_complex(&mut rng)).collect()
}

fn divisor_flip() -> Result<String, String> {
    let mut d = StrataDescriptor::new();
    d.divisor("A1").divisor("A2");
    d.stratum("A1", &["A1"], "").stratum("A2", &["A2"], "");
    d.stratum("A1+A2", &["A1", "A2"], "").infer_unique_parents();
    let left = dual_complex(&d).map_err(|e| e.to_string())?;
    if !same_up_to_ids(&left, &catalog("fig1_left").unwrap()) {
        return Err("dual complex differs from fig1_left".into());
    }
    let right = left
        .delete_open_cell(cell(&left, &["A1", "A2"]))
        .map_err(|e| e.to_string())?;
    if !same_up_to_ids(&right, &catalog("fig1_right").unwrap()) {
        return Err("deleting the edge does not give fig1_right".into());
    }
    let (a, b) = (left.euler_characteristic(), right.euler_characteristic());
    if (a, b) != (1, 2) {
        return Err(format!("euler characteristic {a} -> {b}"));
    }
    Ok(format!("chi {a} -> {b}"))
}

fn edge_contraction() -> Result<String, String> {
    let left = catalog("fig2_left").unwrap();
    let instr = MmpInstruction::new("B1", [cell(&left, &["A1", "A2"])]);
    let (out, seq) = mmp_collapse(&left, &instr).map_err(|e| e.to_string())?;
    if seq.len() != 1 {
        return Err(format!("sequence length {}", seq.len()));
    }
    if !same_up_to_ids(&out, &catalog("fig2_right").unwrap()) {
        return Err("result differs from fig2_right".into());
    }
    match collapses_to(&left, &out.cell_ids(), DEFAULT_BUDGET).map_err(|e| e.to_string())? {
        Verdict::Collapsible(s) if replay(&left, &s).as_ref() == Ok(&out) => Ok("1 pair; search agrees".into()),
        v => Err(format!("independent search returned {}", v.name())),
    }
}

fn square_flop() -> Result<String, String> {
    let left = catalog("fig3_left").unwrap();
    let right = catalog("fig3_right").unwrap();
    let l = stellar_subdivide(&left, cell(&left, &["A1", "A2"]), "p").map_err(|e| e.to_string())?;
    let r = stellar_subdivide(&right, cell(&right, &["B1", "B2"]), "p").map_err(|e| e.to_string())?;
    if is_isomorphic(&left, &right).is_none() {
        return Err("the two squares are not even isomorphic".into());
    }
    match is_isomorphic(&l, &r) {
        Some(_) => Ok(format!("f-vector {:?} on both sides", l.f_vector())),
        None => Err("subdivisions are not isomorphic".into()),
    }
}

fn collapse_invariance() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let (mut elementary, mut greedy, mut mmp) = (0, 0, 0);
    for (i, cx) in corpus().iter().enumerate() {
        let before = signature(cx, 4);
        for pair in free_pairs(cx) {
            let out = elementary_collapse(cx, pair).map_err(|e| format!("complex {i}: {e}"))?;
            if signature(&out, 4) != before {
                return Err(format!("complex {i}: elementary collapse {pair:?} changed homology"));
            }
            elementary += 1;
        }
        let (out, seq) = greedy_collapse(cx);
        if signature(&out, 4) != before || replay(cx, &seq).as_ref() != Ok(&out) {
            return Err(format!("complex {i}: greedy collapse changed homology"));
        }
        greedy += 1;
        for _ in 0..4 {
            let Some(instr) = random_instruction(cx, &mut rng) else {
                continue;
            };
            if let Ok((out, _)) = mmp_collapse(cx, &instr) {
                if signature(&out, 4) != before {
                    return Err(format!("complex {i}: mmp collapse {instr:?} changed homology"));
                }
                mmp += 1;
            }
        }
    }
    if mmp < 50 {
        return Err(format!("only {mmp} valid contraction instructions were generated"));
    }
    Ok(format!(
        "{CORPUS} complexes; {elementary} elementary, {greedy} greedy, {mmp} mmp collapses"
    ))
}

fn subdivision_invariance() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let mut stellar = 0;
    for (i, cx) in corpus().iter().enumerate() {
        let before = signature(cx, 4);
        let positive: Vec<CellId> = cx.cells().filter(|(_, c)| c.dim() > 0).map(|(id, _)| id).collect();
        for &c in positive.choose_multiple(&mut rng, 3) {
            let out = stellar_subdivide(cx, c, "p").map_err(|e| format!("complex {i}: {e}"))?;
            if signature(&out, 4) != before || out.vertex_labels().count() != cx.vertex_labels().count() + 1 {
                return Err(format!("complex {i}: stellar subdivision at {c} changed homology"));
            }
            stellar += 1;
        }
        let bary = barycentric_subdivide(cx);
        if !bary.is_simplicial() {
            return Err(format!("complex {i}: barycentric subdivision is not simplicial"));
        }
        if signature(&bary, 4) != before {
            return Err(format!("complex {i}: barycentric subdivision changed homology"));
        }
    }
    Ok(format!("{CORPUS} barycentric, {stellar} stellar subdivisions"))
}

fn cone_round_trip() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let mut glued = 0;
    for i in 0..CONE_INSTANCES {
        let inst = random_cone_instance(&mut rng);
        let (big, rec) = attach_cone_over_join(&inst.cx, inst.center, &inst.link, &inst.tau, "e0")
            .map_err(|e| format!("instance {i}: {e}"))?;
        let (back, seq) = collapse_coned_join(&big, &rec).map_err(|e| format!("instance {i}: {e}"))?;
        if back != inst.cx {
            return Err(format!("instance {i}: round trip does not restore the complex"));
        }
        if seq.len() * 2 != big.len() - inst.cx.len() {
            return Err(format!("instance {i}: not every glued cell was removed"));
        }
        glued += rec.cone_cells.len() + 1;
    }
    Ok(format!("{CONE_INSTANCES} instances, {glued} glued cells removed"))
}

fn collapsibility_verdicts() -> Result<String, String> {
    for n in 0..=5 {
        let cx = catalog(&format!("simplex({n})")).unwrap();
        match collapsible_search(&cx, DEFAULT_BUDGET) {
            Verdict::Collapsible(seq) if replay(&cx, &seq).map(|p| p.len()) == Ok(1) => {}
            v => return Err(format!("simplex({n}): {}", v.name())),
        }
    }
    for n in 1..=5 {
        let cx = catalog(&format!("boundary({n})")).unwrap();
        let v = collapsible_search(&cx, DEFAULT_BUDGET);
        if v != Verdict::NoFreePair {
            return Err(format!("boundary({n}): {}", v.name()));
        }
    }
    let hat = catalog("dunce_hat").unwrap();
    let v = collapsible_search(&hat, DEFAULT_BUDGET);
    if v != Verdict::NoFreePair {
        return Err(format!("dunce_hat: {}", v.name()));
    }
    if !homology_z(&hat, true).is_trivial() || hat.euler_characteristic() != 1 {
        return Err("dunce_hat homology is not that of a point".into());
    }
    Ok("simplices collapsible, spheres and dunce hat have no free pair".into())
}

fn torsion_oracle() -> Result<String, String> {
    let rp2 = catalog("rp2").unwrap();
    let h = homology_z(&rp2, false);
    let h1: Vec<String> = h.degrees[1].torsion.iter().map(ToString::to_string).collect();
    if h1 != ["2"] || h.betti() != [1, 0, 0] {
        return Err(format!("betti {:?}, H1 torsion {h1:?}", h.betti()));
    }
    if !is_q_acyclic(&rp2) {
        return Err("rp2 is not Q-acyclic".into());
    }
    Ok("H1 = Z/2, Q-acyclic".into())
}

fn equivariant_suite() -> Result<String, String> {
    let cx = Complex::from_maximal_simplices([["v0", "a1", "b1"], ["v0", "a2", "b2"]]);
    let swap = [("v0", "v0"), ("a1", "a2"), ("a2", "a1"), ("b1", "b2"), ("b2", "b1")]
        .into_iter()
        .map(|(a, b)| (a.into(), b.into()))
        .collect();
    let swap = Automorphism::from_vertex_map(&cx, swap).map_err(|e| e.to_string())?;
    let action = GroupAction::generate(&cx, vec![swap], DEFAULT_MAX_ORDER).map_err(|e| e.to_string())?;
    let first = FreePair::new(cell(&cx, &["a1", "b1", "v0"]), cell(&cx, &["a1", "b1"]));
    let twin = FreePair::new(cell(&cx, &["a2", "b2", "v0"]), cell(&cx, &["a2", "b2"]));
    let (out, orbit) = orbit_step(&cx, &action, first).map_err(|e| e.to_string())?;
    let removed: BTreeSet<FreePair> = orbit.iter().copied().collect();
    if removed != BTreeSet::from([first, twin]) || out.cells_of_dim(2).count() != 0 {
        return Err(format!("orbit step removed {orbit:?}"));
    }
    if !action.fixes_setwise(&out.cell_ids()) {
        return Err("result is not fixed by the action".into());
    }
    let (end, seq) = equivariant_collapse(&cx, &action, &EquivariantMode::Greedy).map_err(|e| e.to_string())?;
    let step: BTreeSet<FreePair> = seq.pairs().iter().take(2).copied().collect();
    let orbit_of_first: BTreeSet<FreePair> = action.orbit(seq.pairs()[0]).into_iter().collect();
    if step.len() != 2 || step != orbit_of_first {
        return Err("equivariant collapse did not start with a full orbit".into());
    }
    if !action.fixes_setwise(&end.cell_ids()) {
        return Err("full equivariant collapse is not fixed by the action".into());
    }

    // a reflection of a triangle swaps two edges that share the triangle
    let tri = catalog("simplex(2)").unwrap();
    let flip = [("v0", "v1"), ("v1", "v0"), ("v2", "v2")]
        .into_iter()
        .map(|(a, b)| (a.into(), b.into()))
        .collect();
    let flip = Automorphism::from_vertex_map(&tri, flip).map_err(|e| e.to_string())?;
    let action = GroupAction::generate(&tri, vec![flip], DEFAULT_MAX_ORDER).map_err(|e| e.to_string())?;
    let bad = FreePair::new(cell(&tri, &["v0", "v1", "v2"]), cell(&tri, &["v0", "v2"]));
    match orbit_step(&tri, &action, bad) {
        Err(CollapseError::OverlappingOrbit(p)) if p == bad => Ok("orbit of 2 removed; overlap rejected".into()),
        other => Err(format!("overlapping orbit gave {other:?}")),
    }
}

fn cli_round_trip() -> Result<String, String> {
    let mut names: Vec<String> = Vec::new();
    for name in CATALOG_NAMES {
        if let Some(stem) = name.strip_suffix("(n)") {
            let start = if stem == "boundary" { 1 } else { 0 };
            names.extend((start..=5).map(|n| format!("{stem}({n})")));
        } else {
            names.push((*name).to_owned());
        }
    }
    for name in &names {
        let (code, printed, err) = run_cli(&["catalog", name], "");
        if code != 0 {
            return Err(format!("catalog {name}: exit {code}: {err}"));
        }
        let parsed = io::complex_from_str(&printed).map_err(|e| format!("{name}: {e}"))?;
        let (code, _, err) = run_cli(&["verify", "-"], &printed);
        if code != 0 {
            return Err(format!("verify {name}: exit {code}: {err}"));
        }
        if io::complex_to_string(&parsed) != printed {
            return Err(format!("{name}: reprinted document differs"));
        }
    }
    Ok(format!("{} catalog complexes byte-identical", names.len()))
}

fn run_cli(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv: Vec<&str> = std::iter::once("dualcx").chain(args.iter().copied()).collect();
    let code = dualcx::cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

type Criterion = (u32, &'static str, u64, fn() -> Result<String, String>);

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "two-divisor flip", 1, divisor_flip),
        (2, "edge contraction collapse", 1, edge_contraction),
        (3, "square flop", 1, square_flop),
        (4, "collapse invariance suite", 60, collapse_invariance),
        (5, "subdivision invariance suite", 60, subdivision_invariance),
        (6, "cone attachment round trip", 30, cone_round_trip),
        (7, "collapsibility verdicts", 10, collapsibility_verdicts),
        (8, "torsion oracle", 1, torsion_oracle),
        (9, "equivariant suite", 1, equivariant_suite),
        (10, "cli round trip", 5, cli_round_trip),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > Duration::from_secs(limit) => Err(format!("exceeded {limit} s")),
            other => other,
        };
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {n:>2} {status}  {name} [{:.3} s, limit {limit} s] {detail}",
            elapsed.as_secs_f64()
        );
    }
    let _ = panic::take_hook();
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
