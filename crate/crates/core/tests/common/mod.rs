//! Random desk-scale complexes and instances shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use dualcx::collapse::MmpInstruction;
use dualcx::complex::{CellId, Complex, VertexLabel};
use dualcx::homology::{betti_q, homology_z};
use dualcx::subdivision::VertexMap;
use rand::seq::SliceRandom;
use rand::Rng;

pub const MAX_CELLS: usize = 40;
pub const MAX_DIM: usize = 3;

fn label(i: usize) -> String {
    format!("x{i}")
}

/// Adds a parallel copy of a random maximal cell of positive dimension.
fn add_parallel_cell<R: Rng>(cx: &mut Complex, rng: &mut R) {
    let maximal: Vec<CellId> = cx
        .cells()
        .filter(|&(id, c)| c.dim() > 0 && cx.coface_count(id) == 0)
        .map(|(id, _)| id)
        .collect();
    if let Some(&m) = maximal.choose(rng) {
        let c = cx.cell(m).unwrap().clone();
        cx.attach_cell(c.vertices().to_vec(), c.facets().to_vec()).unwrap();
    }
}

/// Replaces one facet of a random triangle by a parallel copy of that edge,
/// giving a triangle on the same vertices glued along a different edge.
fn add_parallel_triangle<R: Rng>(cx: &mut Complex, rng: &mut R) {
    let tris: Vec<CellId> = cx.cells_of_dim(2).collect();
    let Some(&t) = tris.choose(rng) else {
        return;
    };
    let tc = cx.cell(t).unwrap().clone();
    let i = rng.gen_range(0..3);
    let e = cx.cell(tc.facets()[i]).unwrap().clone();
    let copy = cx.attach_cell(e.vertices().to_vec(), e.facets().to_vec()).unwrap();
    let mut facets = tc.facets().to_vec();
    facets[i] = copy;
    cx.attach_cell(tc.vertices().to_vec(), facets).unwrap();
}

/// A random complex of dimension at most 3 with at most 40 cells. About a
/// third of the outputs are not simplicial.
pub fn random_complex<R: Rng>(rng: &mut R) -> Complex {
    loop {
        let n = rng.gen_range(2..=7);
        let k = rng.gen_range(1..=5);
        let simplices: Vec<Vec<String>> = (0..k)
            .map(|_| {
                let size = rng.gen_range(1..=MAX_DIM + 1).min(n);
                let mut idx: Vec<usize> = (0..n).collect();
                idx.shuffle(rng);
                idx[..size].iter().map(|&i| label(i)).collect()
            })
            .collect();
        let mut cx = Complex::from_maximal_simplices(simplices);
        match rng.gen_range(0..6) {
            0 => add_parallel_cell(&mut cx, rng),
            1 => add_parallel_triangle(&mut cx, rng),
            _ => {}
        }
        if cx.len() <= MAX_CELLS && cx.dim().unwrap_or(0) <= MAX_DIM {
            return cx;
        }
    }
}

/// Euler characteristic, rational Betti numbers and integer invariant factors,
/// padded to a fixed number of degrees so that dimension drops compare equal.
#[derive(Debug, PartialEq, Eq)]
pub struct Signature {
    pub euler: i64,
    pub betti_q: Vec<usize>,
    pub betti_z: Vec<usize>,
    pub torsion: Vec<Vec<String>>,
}

pub fn signature(cx: &Complex, degrees: usize) -> Signature {
    let h = homology_z(cx, false);
    let mut bq = betti_q(cx, false);
    let mut bz = h.betti();
    let mut torsion: Vec<Vec<String>> = h
        .degrees
        .iter()
        .map(|d| d.torsion.iter().map(ToString::to_string).collect())
        .collect();
    bq.resize(degrees, 0);
    bz.resize(degrees, 0);
    torsion.resize(degrees, Vec::new());
    Signature {
        euler: cx.euler_characteristic(),
        betti_q: bq,
        betti_z: bz,
        torsion,
    }
}

/// An instruction for a random vertex: a random set of link cells closed
/// upward inside the link. It may still fail the free-pair hypothesis.
pub fn random_instruction<R: Rng>(cx: &Complex, rng: &mut R) -> Option<MmpInstruction> {
    let labels: Vec<VertexLabel> = cx.vertex_labels().cloned().collect();
    let v0 = labels.choose(rng)?.clone();
    let link = cx.link(cx.vertex_cell(&v0)?).ok()?.complex;
    let ids: Vec<CellId> = link.cell_ids().into_iter().collect();
    if ids.is_empty() {
        return None;
    }
    let picks = rng.gen_range(1..=ids.len().min(3));
    let mut chosen: BTreeSet<CellId> = BTreeSet::new();
    for _ in 0..picks {
        let w = *ids.choose(rng).unwrap();
        chosen.extend(link.star(w).unwrap());
    }
    Some(MmpInstruction::new(v0, chosen))
}

/// A cone-attachment instance: a cell `c`, a cell `u` having `c` as a face,
/// and `L` a random subcomplex of the simplex on the vertices of `u` outside
/// `c`, relabeled and mapped back by `tau`. The image of `c * l` is named
/// explicitly, so parallel cells never make it ambiguous.
pub struct ConeInstance {
    pub cx: Complex,
    pub center: CellId,
    pub link: Complex,
    pub tau: VertexMap,
}

pub fn random_cone_instance<R: Rng>(rng: &mut R) -> ConeInstance {
    let cx = random_complex(rng);
    let ids: Vec<CellId> = cx.cell_ids().into_iter().collect();
    let center = *ids.choose(rng).unwrap();
    let star: Vec<CellId> = cx.star(center).unwrap().into_iter().collect();
    let u = *star.choose(rng).unwrap();
    let cv = cx.cell(center).unwrap().vertices().to_vec();
    let extra: Vec<VertexLabel> = cx
        .cell(u)
        .unwrap()
        .vertices()
        .iter()
        .filter(|v| !cv.contains(v))
        .cloned()
        .collect();
    let rename = |v: &VertexLabel| format!("z_{v}");
    let link = if extra.is_empty() {
        Complex::new()
    } else {
        let mut faces: Vec<Vec<String>> = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let mut pick: Vec<String> = extra.iter().filter(|_| rng.gen_bool(0.6)).map(rename).collect();
            if pick.is_empty() {
                pick.push(rename(extra.choose(rng).unwrap()));
            }
            faces.push(pick);
        }
        Complex::from_maximal_simplices(faces)
    };
    let back: BTreeMap<String, VertexLabel> = extra.iter().map(|v| (rename(v), v.clone())).collect();
    let mut tau = VertexMap::new(back.iter().map(|(k, v)| (k.clone(), v.clone())));
    for (lid, lc) in link.cells() {
        let mut span: Vec<VertexLabel> = cv.clone();
        span.extend(lc.vertices().iter().map(|x| back[x.as_str()].clone()));
        span.sort();
        tau = tau.with_cell(lid, cx.face_with_vertices(u, &span).unwrap());
    }
    ConeInstance { cx, center, link, tau }
}
