//! Exact maximum geometric-mean cycle by Karp's dynamic program.
//!
//! Walk weights are products of edge weights held as big integers, so the
//! table `best[l][v]` is the largest product over walks of exactly `l` edges
//! ending at `v` (any start vertex). For a strongly connected component with
//! `N` vertices the optimum mean is
//!
//! ```text
//! max_v  min_{0 <= l < N}  ( best[N][v] / best[l][v] ) ^ (1 / (N - l))
//! ```
//!
//! evaluated with exact cross-powered comparisons.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::One;
use petgraph::graph::DiGraph;

use crate::automaton::WindowGraph;
use crate::score::cmp_log_means;

/// `(num / den) ^ (1 / len)`, the optimum of a component.
#[derive(Clone, Debug)]
pub(crate) struct MeanValue {
    pub num: BigUint,
    pub den: BigUint,
    pub len: u64,
}

impl MeanValue {
    pub fn cmp(&self, other: &MeanValue) -> Ordering {
        cmp_log_means(&self.num, &self.den, self.len, &other.num, &other.den, other.len)
    }

    pub fn of_cycle(weights: &[BigUint], cycle: &[usize]) -> MeanValue {
        let num = cycle.iter().fold(BigUint::one(), |acc, &e| acc * &weights[e]);
        MeanValue { num, den: BigUint::one(), len: cycle.len() as u64 }
    }
}

/// Strongly connected components that contain at least one cycle, each as a
/// sorted vertex list, ordered by their smallest vertex.
pub(crate) fn cyclic_components(g: &WindowGraph) -> Vec<Vec<usize>> {
    let mut pg: DiGraph<(), ()> = DiGraph::with_capacity(g.vertex_count(), g.edges().len());
    for _ in 0..g.vertex_count() {
        pg.add_node(());
    }
    for e in g.edges() {
        pg.add_edge((e.src as u32).into(), (e.dst as u32).into(), ());
    }
    let mut comps: Vec<Vec<usize>> = petgraph::algo::tarjan_scc(&pg)
        .into_iter()
        .map(|c| {
            let mut v: Vec<usize> = c.into_iter().map(|n| n.index()).collect();
            v.sort_unstable();
            v
        })
        .filter(|c| c.len() > 1 || g.out_edges(c[0]).iter().any(|&e| g.edges()[e].dst == c[0]))
        .collect();
    comps.sort();
    comps
}

pub(crate) struct KarpOutcome {
    pub value: MeanValue,
    /// Edge ids of a walk of `N` edges ending at the critical vertex.
    pub walk: Vec<usize>,
}

/// Runs the dynamic program on each cyclic component and keeps the best.
pub(crate) fn karp(g: &WindowGraph, weights: &[BigUint]) -> Option<KarpOutcome> {
    let comps = cyclic_components(g);
    let mut best: Option<KarpOutcome> = None;
    for comp in comps {
        let outcome = karp_component(g, weights, &comp);
        match &best {
            Some(b) if outcome.value.cmp(&b.value) != Ordering::Greater => {}
            _ => best = Some(outcome),
        }
    }
    best
}

fn karp_component(g: &WindowGraph, weights: &[BigUint], comp: &[usize]) -> KarpOutcome {
    let n = comp.len();
    let mut local = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in comp.iter().enumerate() {
        local[v] = i;
    }
    let edges: Vec<(usize, usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| local[e.src] != usize::MAX && local[e.dst] != usize::MAX)
        .map(|(id, e)| (id, local[e.src], local[e.dst]))
        .collect();

    let mut table: Vec<Vec<Option<BigUint>>> = Vec::with_capacity(n + 1);
    let mut pred: Vec<Vec<usize>> = Vec::with_capacity(n + 1);
    table.push(vec![Some(BigUint::one()); n]);
    pred.push(vec![usize::MAX; n]);
    for l in 1..=n {
        let prev = &table[l - 1];
        let mut row: Vec<Option<BigUint>> = vec![None; n];
        let mut prow = vec![usize::MAX; n];
        for &(id, u, v) in &edges {
            let Some(du) = &prev[u] else { continue };
            let cand = du * &weights[id];
            let better = match &row[v] {
                None => true,
                Some(cur) => cand > *cur,
            };
            if better {
                row[v] = Some(cand);
                prow[v] = id;
            }
        }
        table.push(row);
        pred.push(prow);
    }

    let mut best: Option<(MeanValue, usize)> = None;
    for v in 0..n {
        let Some(top) = &table[n][v] else { continue };
        let mut worst: Option<MeanValue> = None;
        for (l, row) in table.iter().enumerate().take(n) {
            let Some(dl) = &row[v] else { continue };
            let cand = MeanValue { num: top.clone(), den: dl.clone(), len: (n - l) as u64 };
            match &worst {
                Some(w) if cand.cmp(w) != Ordering::Less => {}
                _ => worst = Some(cand),
            }
        }
        let worst = worst.expect("level 0 is always present");
        match &best {
            Some((b, _)) if worst.cmp(b) != Ordering::Greater => {}
            _ => best = Some((worst, v)),
        }
    }
    let (value, v) = best.expect("cyclic component has a vertex with walks of every length");

    let mut walk = Vec::with_capacity(n);
    let mut cur = v;
    for l in (1..=n).rev() {
        let id = pred[l][cur];
        walk.push(id);
        cur = local[g.edges()[id].src];
    }
    walk.reverse();
    KarpOutcome { value, walk }
}

/// Splits a walk (edge ids) into its simple cycles.
pub(crate) fn cycles_in_walk(g: &WindowGraph, walk: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    // stack of (vertex, edge that entered it)
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut pos = vec![usize::MAX; g.vertex_count()];
    if let Some(&first) = walk.first() {
        let s = g.edges()[first].src;
        pos[s] = 0;
        stack.push((s, usize::MAX));
    }
    for &e in walk {
        let v = g.edges()[e].dst;
        if pos[v] != usize::MAX {
            let at = pos[v];
            let mut cycle: Vec<usize> = stack[at + 1..].iter().map(|&(_, e)| e).collect();
            cycle.push(e);
            for &(u, _) in &stack[at + 1..] {
                pos[u] = usize::MAX;
            }
            stack.truncate(at + 1);
            out.push(cycle);
        } else {
            pos[v] = stack.len();
            stack.push((v, e));
        }
    }
    out
}
