//! Named complexes: simplices and their boundaries, the quadric-cone flip and
//! flop instances, and two contractible-or-acyclic test spaces.
//!
//! The dunce hat and the projective plane are stored as frozen maximal-simplex
//! lists under `catalog/`. The dunce hat comes from the triangle with boundary
//! word `a a a^-1`, each side split into three segments, with a ring of nine
//! interior vertices and a centre; the projective plane is the 6-vertex,
//! 10-triangle triangulation.

use serde::Deserialize;

use super::strata::{dual_complex, StrataDescriptor};
use super::BuildError;
use crate::complex::{Complex, VertexLabel};

const DUNCE_HAT: &str = include_str!("../../catalog/dunce_hat.json");
const RP2: &str = include_str!("../../catalog/rp2.json");

pub const CATALOG_NAMES: &[&str] = &[
    "simplex(n)",
    "boundary(n)",
    "two_edge_circle",
    "fig1_left",
    "fig1_right",
    "fig2_left",
    "fig2_right",
    "fig3_left",
    "fig3_right",
    "dunce_hat",
    "rp2",
];

#[derive(Deserialize)]
struct Golden {
    maximal_simplices: Vec<Vec<String>>,
}

fn golden(src: &str) -> Complex {
    let g: Golden = serde_json::from_str(src).expect("catalog file is valid JSON");
    Complex::from_maximal_simplices(g.maximal_simplices)
}

fn simplex_labels(n: usize) -> Vec<String> {
    (0..=n).map(|i| format!("v{i}")).collect()
}

fn simplex(n: usize) -> Complex {
    Complex::from_maximal_simplices([simplex_labels(n)])
}

fn boundary(n: usize) -> Complex {
    let all = simplex_labels(n);
    if n == 0 {
        return Complex::new();
    }
    Complex::from_maximal_simplices((0..=n).map(|skip| {
        all.iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, v)| v.clone())
            .collect::<Vec<_>>()
    }))
}

fn two_edge_circle() -> Complex {
    let mut cx = Complex::new();
    let v1 = cx.add_vertex("v1").unwrap();
    let v2 = cx.add_vertex("v2").unwrap();
    let edge: Vec<VertexLabel> = vec!["v1".into(), "v2".into()];
    cx.attach_cell(edge.clone(), vec![v2, v1]).unwrap();
    cx.attach_cell(edge, vec![v2, v1]).unwrap();
    cx
}

/// Strata of the flop instance: four planes through the quadric cone vertex,
/// the `A1 A2` curve on the left-hand small resolution.
pub fn fig3_descriptor() -> StrataDescriptor {
    let mut d = StrataDescriptor::new();
    for x in ["A1", "A2", "B1", "B2"] {
        d.divisor(x).stratum(x, &[x], "");
    }
    for pair in [["B1", "A2"], ["A2", "B2"], ["B2", "A1"], ["A1", "B1"], ["A1", "A2"]] {
        d.stratum(&pair.join("+"), &pair, "");
    }
    d.stratum("B1+A1+A2", &["B1", "A1", "A2"], "");
    d.stratum("A1+A2+B2", &["A1", "A2", "B2"], "");
    d.infer_unique_parents();
    d
}

fn parse_arg(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?
        .strip_prefix('(')?
        .strip_suffix(')')?
        .trim()
        .parse()
        .ok()
}

/// Looks up a named complex. `simplex(n)` and `boundary(n)` use vertices `v0..vn`.
pub fn catalog(name: &str) -> Result<Complex, BuildError> {
    if let Some(n) = parse_arg(name, "simplex") {
        return Ok(simplex(n));
    }
    if let Some(n) = parse_arg(name, "boundary") {
        if n > 0 {
            return Ok(boundary(n));
        }
    }
    let cx = match name {
        "two_edge_circle" => two_edge_circle(),
        "fig1_left" => Complex::from_maximal_simplices([["A1", "A2"]]),
        "fig1_right" => Complex::from_maximal_simplices([["A1"], ["A2"]]),
        "fig2_left" => Complex::from_maximal_simplices([["A1", "A2", "B1"]]),
        "fig2_right" => Complex::from_maximal_simplices([["A1", "B1"], ["A2", "B1"]]),
        "fig3_left" => dual_complex(&fig3_descriptor())?,
        "fig3_right" => Complex::from_maximal_simplices([["A1", "B1", "B2"], ["A2", "B1", "B2"]]),
        "dunce_hat" => golden(DUNCE_HAT),
        "rp2" => golden(RP2),
        _ => return Err(BuildError::UnknownName(name.to_owned())),
    };
    Ok(cx)
}
