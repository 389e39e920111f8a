//! Depth-first search over free-pair choices.
//!
//! States are subcomplexes of the input, so the set of surviving cell ids is a
//! canonical key; failed states are memoized by that key. Branches are tried in
//! [`free_pairs`](super::free_pairs) order, so the first success found is the
//! lexicographically least one under that order.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::{CollapseError, CollapseSequence, FreePair};
use crate::complex::{CellId, Complex};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// A sequence reaching the goal.
    Collapsible(CollapseSequence),
    /// Every reachable state was explored without reaching the goal.
    NotCollapsible,
    /// The node budget ran out first.
    Inconclusive,
    /// No admissible free pair exists at the start.
    NoFreePair,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Collapsible(_) => "Collapsible",
            Verdict::NotCollapsible => "NotCollapsible",
            Verdict::Inconclusive => "Inconclusive",
            Verdict::NoFreePair => "NoFreePair",
        }
    }

    pub fn sequence(&self) -> Option<&CollapseSequence> {
        match self {
            Verdict::Collapsible(s) => Some(s),
            _ => None,
        }
    }
}

/// Searches for a collapse of `cx` to a single vertex.
pub fn collapsible_search(cx: &Complex, budget: u64) -> Verdict {
    let mut s = Search::new(cx, &BTreeSet::new());
    s.run(1, budget)
}

/// Searches for a collapse of `cx` onto the subcomplex `target`, never removing
/// target cells.
pub fn collapses_to(cx: &Complex, target: &BTreeSet<CellId>, budget: u64) -> Result<Verdict, CollapseError> {
    for &id in target {
        let cell = cx.cell(id).ok_or(CollapseError::NotASubcomplex(id))?;
        if let Some(&f) = cell.facets().iter().find(|f| !target.contains(f)) {
            return Err(CollapseError::NotASubcomplex(f));
        }
    }
    let mut s = Search::new(cx, target);
    Ok(s.run(target.len(), budget))
}

struct Search {
    ids: Vec<CellId>,
    dims: Vec<usize>,
    facets: Vec<Vec<usize>>,
    cofaces: Vec<Vec<usize>>,
    protected: Vec<bool>,
    alive: Vec<bool>,
    live_cofaces: Vec<usize>,
    live: usize,
    failed: HashSet<Vec<u64>>,
    nodes: u64,
    path: Vec<FreePair>,
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search {
    fn new(cx: &Complex, target: &BTreeSet<CellId>) -> Self {
        let ids: Vec<CellId> = cx.cells().map(|(id, _)| id).collect();
        let index: BTreeMap<CellId, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        let mut facets = vec![Vec::new(); ids.len()];
        let mut cofaces = vec![Vec::new(); ids.len()];
        let mut dims = vec![0; ids.len()];
        for (i, &id) in ids.iter().enumerate() {
            let cell = cx.cell(id).unwrap();
            dims[i] = cell.dim();
            for f in cell.facets() {
                let j = index[f];
                facets[i].push(j);
                cofaces[j].push(i);
            }
        }
        let live_cofaces = cofaces.iter().map(Vec::len).collect();
        Search {
            protected: ids.iter().map(|id| target.contains(id)).collect(),
            alive: vec![true; ids.len()],
            live: ids.len(),
            ids,
            dims,
            facets,
            cofaces,
            live_cofaces,
            failed: HashSet::new(),
            nodes: 0,
            path: Vec::new(),
        }
    }

    fn key(&self) -> Vec<u64> {
        let mut key = vec![0u64; self.alive.len().div_ceil(64)];
        for (i, &a) in self.alive.iter().enumerate() {
            if a {
                key[i / 64] |= 1 << (i % 64);
            }
        }
        key
    }

    /// Admissible free pairs as (coface, face) indices in canonical order.
    fn moves(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.ids.len())
            .filter(|&w| self.alive[w] && !self.protected[w] && self.live_cofaces[w] == 1)
            .map(|w| {
                let v = *self.cofaces[w].iter().find(|&&v| self.alive[v]).unwrap();
                (v, w)
            })
            .filter(|&(v, _)| !self.protected[v])
            .collect();
        out.sort_by_key(|&(v, w)| (std::cmp::Reverse(self.dims[v]), self.ids[v], self.ids[w]));
        out
    }

    fn remove(&mut self, c: usize) {
        self.alive[c] = false;
        self.live -= 1;
        for &f in &self.facets[c] {
            self.live_cofaces[f] -= 1;
        }
    }

    fn restore(&mut self, c: usize) {
        self.alive[c] = true;
        self.live += 1;
        for &f in &self.facets[c] {
            self.live_cofaces[f] += 1;
        }
    }

    fn run(&mut self, goal: usize, budget: u64) -> Verdict {
        if self.live == goal {
            return Verdict::Collapsible(CollapseSequence::new());
        }
        if self.moves().is_empty() {
            return Verdict::NoFreePair;
        }
        match self.dfs(goal, budget) {
            Outcome::Found => Verdict::Collapsible(self.path.clone().into()),
            Outcome::Exhausted => Verdict::NotCollapsible,
            Outcome::OutOfBudget => Verdict::Inconclusive,
        }
    }

    fn dfs(&mut self, goal: usize, budget: u64) -> Outcome {
        if self.live == goal {
            return Outcome::Found;
        }
        self.nodes += 1;
        if self.nodes > budget {
            return Outcome::OutOfBudget;
        }
        let key = self.key();
        if self.failed.contains(&key) {
            return Outcome::Exhausted;
        }
        for (v, w) in self.moves() {
            self.remove(v);
            self.remove(w);
            self.path.push(FreePair::new(self.ids[v], self.ids[w]));
            match self.dfs(goal, budget) {
                Outcome::Exhausted => {}
                other => return other,
            }
            self.path.pop();
            self.restore(w);
            self.restore(v);
        }
        self.failed.insert(key);
        Outcome::Exhausted
    }
}
