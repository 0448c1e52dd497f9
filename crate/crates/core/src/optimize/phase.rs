//! Two-dimensional points whose rows and columns are all shifts of a periodic
//! word `ŵ^∞`.
//!
//! Row `j` of such a point is `ŵ` shifted by a phase `c_j`, so the point is
//! determined by the phase sequence. For primitive `ŵ` of period `m`, a
//! sequence is a shift of `ŵ^∞` iff each of its `(m+1)`-windows is a window
//! of `ŵ^∞`, so the column condition only constrains `m` consecutive phase
//! increments `δ_j = c_{j+1} - c_j` at a time. Valid increment windows form a
//! de Bruijn-style graph; finite-orbit points are its cycles, and the
//! diagonal point `ŵ_{i+j}` is the all-ones loop. The only-one-orbit
//! condition thus holds iff no other cycle exists.

use std::collections::{HashMap, HashSet, VecDeque};

use petgraph::graph::DiGraph;
use serde::Serialize;

use crate::shift::{SetLetter, SetWord};

/// Cap on valid increment windows before falling back to bounded search.
const DELTA_GRAPH_CAP: usize = 1_000_000;

/// The point `x(i, j) = ŵ[(i + c_j) mod m]` with `c_{j+t} = c_j + drift`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhaseOrbit2D {
    pub period: usize,
    /// `c_0 .. c_{t-1}`, with `c_0 = 0`.
    pub phases: Vec<usize>,
    pub drift: usize,
}

impl PhaseOrbit2D {
    pub fn diagonal(m: usize) -> Self {
        PhaseOrbit2D { period: m, phases: vec![0], drift: 1 % m.max(1) }
    }

    pub fn anti_diagonal(m: usize) -> Self {
        PhaseOrbit2D { period: m, phases: vec![0], drift: (m - 1) % m.max(1) }
    }

    pub fn t(&self) -> usize {
        self.phases.len()
    }

    /// Row phase `c_j` reduced mod `m`.
    pub fn phase(&self, j: i64) -> usize {
        let t = self.t() as i64;
        let m = self.period as i64;
        let q = j.div_euclid(t);
        let r = j.rem_euclid(t) as usize;
        (self.phases[r] as i64 + q * self.drift as i64).rem_euclid(m) as usize
    }

    /// Index into `ŵ` of the cell at `(i, j)`.
    pub fn cell_index(&self, i: i64, j: i64) -> usize {
        (i + self.phase(j) as i64).rem_euclid(self.period as i64) as usize
    }

    /// True if the point is a shift of the diagonal point.
    pub fn is_diagonal_orbit(&self) -> bool {
        let m = self.period;
        let c0 = self.phases[0] % m;
        self.phases.iter().enumerate().all(|(j, &c)| (c + m - j % m) % m == c0) && self.drift % m == self.t() % m
    }

    /// Direct check that every column is a shift of `ŵ^∞`; rows are by construction.
    pub fn columns_are_shifts(&self, word: &SetWord) -> bool {
        let w = word.cells();
        let m = self.period;
        let span = (self.t() * m) as i64;
        (0..m as i64).all(|i| {
            (0..m).any(|r| (0..span).all(|j| w[self.cell_index(i, j)] == w[(r + j as usize) % m]))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConditionTwo {
    /// No non-diagonal finite orbit was found. `certified` means the search
    /// covered all periods; otherwise only periods up to `bound` were tried.
    UniqueWithinBound { bound: usize, certified: bool },
    Counterexample(PhaseOrbit2D),
}

fn primitive_root(word: &SetWord) -> SetWord {
    let w = word.cells();
    let m = w.len();
    let p = (1..=m).find(|&p| m.is_multiple_of(p) && (0..m).all(|i| w[i] == w[i % p])).unwrap_or(m);
    SetWord(w[..p].to_vec())
}

/// Decides whether the diagonal orbit is the only finite orbit of
/// two-dimensional points with all rows and columns shifts of `word^∞`.
///
/// Runs the exact increment-graph decision when it fits, and otherwise a
/// bounded search over periods `t <= bound` (default `2m`).
pub fn check_condition_two(word: &SetWord, bound: Option<usize>) -> ConditionTwo {
    let w = primitive_root(word);
    let m = w.len();
    if m == 1 {
        return ConditionTwo::UniqueWithinBound { bound: bound.unwrap_or(2), certified: true };
    }
    if m > 2 && w.reversed().is_rotation_of(&w) {
        return ConditionTwo::Counterexample(PhaseOrbit2D::anti_diagonal(m));
    }
    if let Some(result) = increment_graph_decision(&w) {
        return result;
    }
    let bound = bound.unwrap_or(2 * m);
    match bounded_search(&w, bound) {
        Some(orbit) => ConditionTwo::Counterexample(orbit),
        None => ConditionTwo::UniqueWithinBound { bound, certified: false },
    }
}

struct Windows {
    /// `prefixes[l]` holds every length-`l` window of `ŵ^∞`.
    prefixes: Vec<HashSet<Vec<SetLetter>>>,
}

impl Windows {
    fn new(w: &[SetLetter]) -> Self {
        let m = w.len();
        let prefixes =
            (0..=m + 1).map(|l| (0..m).map(|r| (0..l).map(|j| w[(r + j) % m]).collect()).collect()).collect();
        Windows { prefixes }
    }

    /// Column windows starting at row phase 0 with the given increments.
    fn consistent(&self, w: &[SetLetter], deltas: &[usize]) -> bool {
        let m = w.len();
        let mut positions = Vec::with_capacity(deltas.len() + 1);
        positions.push(0usize);
        for &d in deltas {
            positions.push((positions.last().unwrap() + d) % m);
        }
        let set = &self.prefixes[positions.len()];
        (0..m).all(|i| {
            let col: Vec<SetLetter> = positions.iter().map(|&p| w[(i + p) % m]).collect();
            set.contains(&col)
        })
    }
}

fn increment_graph_decision(w: &SetWord) -> Option<ConditionTwo> {
    let cells = w.cells();
    let m = cells.len();
    let windows = Windows::new(cells);

    // valid increment words of length m, by DFS with prefix pruning
    let mut vertices: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::with_capacity(m);
    let mut overflow = false;
    fn grow(
        cells: &[SetLetter],
        windows: &Windows,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        overflow: &mut bool,
    ) {
        let m = cells.len();
        if *overflow {
            return;
        }
        if stack.len() == m {
            out.push(stack.clone());
            if out.len() > DELTA_GRAPH_CAP {
                *overflow = true;
            }
            return;
        }
        for d in 0..m {
            stack.push(d);
            if windows.consistent(cells, stack) {
                grow(cells, windows, stack, out, overflow);
            }
            stack.pop();
        }
    }
    grow(cells, &windows, &mut stack, &mut vertices, &mut overflow);
    if overflow {
        return None;
    }

    let index: HashMap<&[usize], usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    let mut pg: DiGraph<(), ()> = DiGraph::new();
    for _ in 0..vertices.len() {
        pg.add_node(());
    }
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for (i, v) in vertices.iter().enumerate() {
        let mut next = v[1..].to_vec();
        next.push(0);
        for d in 0..m {
            next[m - 1] = d;
            if let Some(&j) = index.get(next.as_slice()) {
                pg.add_edge((i as u32).into(), (j as u32).into(), ());
                succ[i].push(j);
            }
        }
    }
    let ones = vec![1usize; m];
    let diag = index.get(ones.as_slice()).copied();

    for comp in petgraph::algo::tarjan_scc(&pg) {
        let comp: Vec<usize> = comp.into_iter().map(|n| n.index()).collect();
        let cyclic = comp.len() > 1 || succ[comp[0]].contains(&comp[0]);
        if !cyclic {
            continue;
        }
        let Some(&start) = comp.iter().filter(|&&v| Some(v) != diag).min() else { continue };
        let members: HashSet<usize> = comp.iter().copied().collect();
        let cycle = shortest_cycle_through(start, &succ, &members);
        let deltas: Vec<usize> = cycle.iter().map(|&v| vertices[v][0]).collect();
        return Some(ConditionTwo::Counterexample(orbit_from_deltas(m, &deltas)));
    }
    Some(ConditionTwo::UniqueWithinBound { bound: vertices.len(), certified: true })
}

fn shortest_cycle_through(start: usize, succ: &[Vec<usize>], members: &HashSet<usize>) -> Vec<usize> {
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in &succ[v] {
            if !members.contains(&w) {
                continue;
            }
            if w == start {
                let mut cycle = vec![v];
                let mut cur = v;
                while cur != start {
                    cur = parent[&cur];
                    cycle.push(cur);
                }
                cycle.reverse();
                return cycle;
            }
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(w) {
                e.insert(v);
                queue.push_back(w);
            }
        }
    }
    unreachable!("start lies on a cycle of its component")
}

fn orbit_from_deltas(m: usize, deltas: &[usize]) -> PhaseOrbit2D {
    let mut phases = Vec::with_capacity(deltas.len());
    let mut c = 0usize;
    for &d in deltas {
        phases.push(c);
        c = (c + d) % m;
    }
    PhaseOrbit2D { period: m, phases, drift: c }
}

/// Enumerates phase data with period `t <= bound` and returns the first point
/// outside the diagonal orbit whose columns are all shifts of `w^∞`.
pub fn bounded_search(word: &SetWord, bound: usize) -> Option<PhaseOrbit2D> {
    let w = primitive_root(word);
    let windows = Windows::new(w.cells());
    for t in 1..=bound {
        let mut deltas: Vec<usize> = Vec::with_capacity(t);
        if let Some(o) = bounded_dfs(&w, &windows, t, &mut deltas) {
            return Some(o);
        }
    }
    None
}

fn bounded_dfs(w: &SetWord, windows: &Windows, t: usize, deltas: &mut Vec<usize>) -> Option<PhaseOrbit2D> {
    let cells = w.cells();
    let m = cells.len();
    if deltas.len() == t {
        let orbit = orbit_from_deltas(m, deltas);
        if !orbit.is_diagonal_orbit() && orbit.columns_are_shifts(w) {
            return Some(orbit);
        }
        return None;
    }
    for d in 0..m {
        deltas.push(d);
        // prune on the non-wrapping prefix of column windows
        let tail = &deltas[deltas.len().saturating_sub(m)..];
        if windows.consistent(cells, tail) {
            if let Some(o) = bounded_dfs(w, windows, t, deltas) {
                return Some(o);
            }
        }
        deltas.pop();
    }
    None
}
