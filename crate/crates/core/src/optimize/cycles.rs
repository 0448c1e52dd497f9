//! Enumeration of simple cycles whose geometric mean equals a known optimum.
//!
//! With the optimum `t` known, take reduced weights `ln w(e) - t`; no cycle
//! has positive reduced length, so longest-path potentials `π` exist and every
//! edge satisfies `π(u) + ln w(e) - t <= π(v)`. A cycle attains `t` exactly
//! when all of its edges are tight, so the search runs only over edges whose
//! slack is within a float tolerance of zero, and each closed cycle is then
//! checked with exact arithmetic.

use std::cmp::Ordering;

use num_bigint::BigUint;

use super::karp::MeanValue;
use crate::automaton::WindowGraph;
use crate::score::ln_biguint;

/// Slack tolerance; true critical edges sit within ~1e-12 of zero.
const TIGHT_TOL: f64 = 1e-7;

pub(crate) struct CycleSearch {
    /// Edge-id cycles, each found once from its smallest vertex.
    pub cycles: Vec<Vec<usize>>,
    pub complete: bool,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct SearchLimits {
    pub max_len: usize,
    pub max_count: usize,
    pub node_budget: u64,
}

fn tight_edges(g: &WindowGraph, weights: &[BigUint], target: &MeanValue) -> Vec<bool> {
    let t = (ln_biguint(&target.num) - ln_biguint(&target.den)) / target.len as f64;
    let reduced: Vec<f64> = weights.iter().map(|w| ln_biguint(w) - t).collect();
    let n = g.vertex_count();
    let mut pot = vec![0.0f64; n];
    for _ in 0..n {
        let mut changed = false;
        for (i, e) in g.edges().iter().enumerate() {
            let cand = pot[e.src] + reduced[i];
            if cand > pot[e.dst] + 1e-15 {
                pot[e.dst] = cand;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    g.edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let slack = pot[e.src] + reduced[i] - pot[e.dst];
            slack >= -TIGHT_TOL * (1.0 + pot[e.src].abs().max(pot[e.dst].abs()))
        })
        .collect()
}

pub(crate) fn critical_cycles(
    g: &WindowGraph,
    weights: &[BigUint],
    target: &MeanValue,
    limits: SearchLimits,
) -> CycleSearch {
    let tight = tight_edges(g, weights, target);
    let adj: Vec<Vec<usize>> =
        (0..g.vertex_count()).map(|v| g.out_edges(v).iter().copied().filter(|&e| tight[e]).collect()).collect();

    // look for one cycle past the limit so a full result is recognisable
    let wanted = limits.max_count;
    let mut search = Search {
        g,
        weights,
        target,
        adj: &adj,
        limits: SearchLimits { max_count: wanted.saturating_add(1), ..limits },
        nodes: 0,
        on_path: vec![false; g.vertex_count()],
        path: Vec::new(),
        out: Vec::new(),
        complete: true,
    };
    for s in 0..g.vertex_count() {
        if search.stopped() {
            break;
        }
        search.on_path[s] = true;
        search.dfs(s, s);
        search.on_path[s] = false;
    }
    let mut complete = search.complete;
    let mut cycles = search.out;
    if cycles.len() > wanted {
        cycles.truncate(wanted);
        complete = false;
    }
    CycleSearch { cycles, complete }
}

struct Search<'a> {
    g: &'a WindowGraph,
    weights: &'a [BigUint],
    target: &'a MeanValue,
    adj: &'a [Vec<usize>],
    limits: SearchLimits,
    nodes: u64,
    on_path: Vec<bool>,
    path: Vec<usize>,
    out: Vec<Vec<usize>>,
    complete: bool,
}

impl Search<'_> {
    fn stopped(&self) -> bool {
        self.out.len() >= self.limits.max_count || self.nodes >= self.limits.node_budget
    }

    fn dfs(&mut self, start: usize, v: usize) {
        self.nodes += 1;
        if self.nodes >= self.limits.node_budget {
            self.complete = false;
            return;
        }
        for &e in &self.adj[v] {
            if self.stopped() {
                return;
            }
            let w = self.g.edges()[e].dst;
            if w == start {
                self.path.push(e);
                if MeanValue::of_cycle(self.weights, &self.path).cmp(self.target) == Ordering::Equal {
                    self.out.push(self.path.clone());
                }
                self.path.pop();
            } else if w > start && !self.on_path[w] {
                if self.path.len() + 2 > self.limits.max_len {
                    self.complete = false;
                    continue;
                }
                self.path.push(e);
                self.on_path[w] = true;
                self.dfs(start, w);
                self.on_path[w] = false;
                self.path.pop();
            }
        }
    }
}
