//! Stratification descriptors and the dual complex they determine.
//!
//! A descriptor lists divisors, strata (a non-empty set `J` of divisors plus a
//! tag separating several components of the same intersection) and, for every
//! stratum and every `j` in its `J`, the unique stratum with index set `J \ {j}`
//! containing it. The dual complex has one vertex per divisor and one
//! `(|J| - 1)`-cell per stratum, glued along those parent maps.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::builders::BuildError;
use crate::complex::{CellId, Complex, ComplexError, VertexLabel};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivisorId(pub String);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StratumId(pub String);

impl fmt::Display for DivisorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for StratumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for DivisorId {
    fn from(s: &str) -> Self {
        DivisorId(s.to_owned())
    }
}

impl From<&str> for StratumId {
    fn from(s: &str) -> Self {
        StratumId(s.to_owned())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub id: StratumId,
    pub divisors: BTreeSet<DivisorId>,
    pub tag: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StrataDescriptor {
    pub divisors: Vec<DivisorId>,
    pub strata: Vec<Stratum>,
    /// `(stratum, dropped divisor) -> parent stratum`.
    pub parents: BTreeMap<(StratumId, DivisorId), StratumId>,
}

impl StrataDescriptor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn divisor(&mut self, name: &str) -> &mut Self {
        self.divisors.push(name.into());
        self
    }

    pub fn stratum(&mut self, id: &str, divisors: &[&str], tag: &str) -> &mut Self {
        self.strata.push(Stratum {
            id: id.into(),
            divisors: divisors.iter().map(|&d| d.into()).collect(),
            tag: tag.to_owned(),
        });
        self
    }

    pub fn parent(&mut self, stratum: &str, drop: &str, parent: &str) -> &mut Self {
        self.parents.insert((stratum.into(), drop.into()), parent.into());
        self
    }

    /// Fills in every parent that is forced because exactly one stratum has the
    /// required index set. Existing entries are kept.
    pub fn infer_unique_parents(&mut self) -> &mut Self {
        let mut by_set: BTreeMap<&BTreeSet<DivisorId>, Vec<&StratumId>> = BTreeMap::new();
        for s in &self.strata {
            by_set.entry(&s.divisors).or_default().push(&s.id);
        }
        let mut found = Vec::new();
        for s in &self.strata {
            if s.divisors.len() < 2 {
                continue;
            }
            for j in &s.divisors {
                let key = (s.id.clone(), j.clone());
                if self.parents.contains_key(&key) {
                    continue;
                }
                let mut rest = s.divisors.clone();
                rest.remove(j);
                if let Some([only]) = by_set.get(&rest).map(Vec::as_slice) {
                    found.push((key, (*only).clone()));
                }
            }
        }
        self.parents.extend(found);
        self
    }
}

/// The dual complex together with the cell assigned to each stratum.
#[derive(Clone, Debug)]
pub struct DualComplex {
    pub complex: Complex,
    pub cells: BTreeMap<StratumId, CellId>,
}

pub fn dual_complex(desc: &StrataDescriptor) -> Result<Complex, BuildError> {
    dual_complex_indexed(desc).map(|d| d.complex)
}

pub fn dual_complex_indexed(desc: &StrataDescriptor) -> Result<DualComplex, BuildError> {
    let divisors: BTreeSet<&DivisorId> = desc.divisors.iter().collect();
    if divisors.len() != desc.divisors.len() {
        let dup = desc
            .divisors
            .iter()
            .enumerate()
            .find(|(i, d)| desc.divisors[..*i].contains(d))
            .map(|(_, d)| d.clone())
            .unwrap();
        return Err(BuildError::DuplicateDivisor(dup));
    }

    let mut by_id: BTreeMap<&StratumId, &Stratum> = BTreeMap::new();
    let mut keys: BTreeSet<(&BTreeSet<DivisorId>, &str)> = BTreeSet::new();
    let mut singleton: BTreeMap<&DivisorId, &Stratum> = BTreeMap::new();
    for s in &desc.strata {
        if by_id.insert(&s.id, s).is_some() || !keys.insert((&s.divisors, s.tag.as_str())) {
            return Err(BuildError::DuplicateStratum(s.id.clone()));
        }
        if s.divisors.is_empty() {
            return Err(BuildError::EmptyStratum(s.id.clone()));
        }
        if let Some(d) = s.divisors.iter().find(|d| !divisors.contains(d)) {
            return Err(BuildError::UnknownDivisor {
                stratum: s.id.clone(),
                divisor: d.clone(),
            });
        }
        if s.divisors.len() == 1 {
            let d = s.divisors.iter().next().unwrap();
            if singleton.insert(d, s).is_some() {
                return Err(BuildError::ReducibleDivisor {
                    stratum: s.id.clone(),
                    divisor: d.clone(),
                });
            }
        }
    }
    let used: BTreeSet<&DivisorId> = desc.strata.iter().flat_map(|s| &s.divisors).collect();
    if let Some(d) = desc.divisors.iter().find(|d| !used.contains(d)) {
        return Err(BuildError::DanglingDivisor(d.clone()));
    }

    let mut ordered: Vec<&Stratum> = desc.strata.iter().collect();
    ordered.sort_by(|x, y| (x.divisors.len(), &x.divisors, &x.tag).cmp(&(y.divisors.len(), &y.divisors, &y.tag)));

    let mut complex = Complex::new();
    let mut cells: BTreeMap<StratumId, CellId> = BTreeMap::new();
    for s in ordered {
        let vertices: Vec<VertexLabel> = s.divisors.iter().map(|d| VertexLabel::new(d.0.clone())).collect();
        let id = if vertices.len() == 1 {
            complex.add_vertex(vertices[0].clone())?
        } else {
            let mut facets = Vec::with_capacity(vertices.len());
            for j in &s.divisors {
                let parent = desc
                    .parents
                    .get(&(s.id.clone(), j.clone()))
                    .ok_or_else(|| BuildError::MissingParent {
                        stratum: s.id.clone(),
                        drop: j.clone(),
                    })?;
                let bad = || BuildError::BadParent {
                    stratum: s.id.clone(),
                    drop: j.clone(),
                    parent: parent.clone(),
                };
                let p = by_id.get(parent).ok_or_else(bad)?;
                let mut expected = s.divisors.clone();
                expected.remove(j);
                if p.divisors != expected {
                    return Err(bad());
                }
                facets.push(cells[parent]);
            }
            complex.attach_cell(vertices, facets).map_err(|e| match e {
                ComplexError::IncoherentBoundary { .. } => BuildError::NonCommutingParents(s.id.clone()),
                other => BuildError::Complex(other),
            })?
        };
        cells.insert(s.id.clone(), id);
    }
    Ok(DualComplex { complex, cells })
}

/// Inverse encoding: one divisor per vertex, one stratum `s<id>` per cell, tagged
/// with the cell id.
pub fn strata_of(cx: &Complex) -> StrataDescriptor {
    let sid = |c: CellId| StratumId(format!("s{c}"));
    let mut desc = StrataDescriptor {
        divisors: cx.vertex_labels().map(|v| DivisorId(v.as_str().to_owned())).collect(),
        ..Default::default()
    };
    for (id, cell) in cx.cells() {
        desc.strata.push(Stratum {
            id: sid(id),
            divisors: cell
                .vertices()
                .iter()
                .map(|v| DivisorId(v.as_str().to_owned()))
                .collect(),
            tag: id.to_string(),
        });
        for (v, &f) in cell.vertices().iter().zip(cell.facets()) {
            desc.parents.insert((sid(id), DivisorId(v.as_str().to_owned())), sid(f));
        }
    }
    desc
}
