//! Box counts for axial powers, one-dimensional topological entropy, and a
//! brute-force independence-entropy oracle.
//!
//! Counting works on a compressed alphabet: letters that occur in no
//! forbidden word are interchangeable, so they are merged into one symbol of
//! weight `|free|`. Two exact methods are provided. The transfer method sweeps
//! sites in row-major order keeping the last `k·stride` letters as state; the
//! backtracking method enumerates fillings and records how many free sites
//! each one uses.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};
use petgraph::graph::DiGraph;
use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::optimize::independence_entropy;
use crate::score::{ln_biguint, ExactScore};
use crate::shift::SubshiftSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMethod {
    Auto,
    Transfer,
    Backtrack,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoxCount {
    pub n: usize,
    pub d: usize,
    pub count: BigUint,
    /// `ln(count) / n^d`.
    pub estimate: f64,
    pub method: CountMethod,
}

struct Compressed {
    /// Weight of each compressed symbol.
    weights: Vec<u64>,
    /// Index of the free symbol, if any letters are free.
    free: Option<u8>,
    /// Forbidden words grouped by last symbol, without that symbol.
    by_last: Vec<Vec<Vec<u8>>>,
    k: usize,
}

impl Compressed {
    fn new(spec: &SubshiftSpec) -> Self {
        let constrained = spec.constrained_mask();
        let mut map = vec![u8::MAX; spec.sigma()];
        let mut weights = Vec::new();
        for (a, slot) in map.iter_mut().enumerate() {
            if constrained >> a & 1 == 1 {
                *slot = weights.len() as u8;
                weights.push(1);
            }
        }
        let nfree = spec.free_mask().count_ones() as u64;
        let free = (nfree > 0).then(|| {
            weights.push(nfree);
            (weights.len() - 1) as u8
        });
        let mut by_last = vec![Vec::new(); weights.len()];
        for w in spec.forbidden() {
            let letters: Vec<u8> = w.letters().iter().map(|&a| map[a as usize]).collect();
            let (&last, prefix) = letters.split_last().expect("forbidden words are nonempty");
            by_last[last as usize].push(prefix.to_vec());
        }
        Compressed { weights, free, by_last, k: spec.memory() }
    }

    fn symbols(&self) -> u8 {
        self.weights.len() as u8
    }
}

/// Row-major strides and per-site coordinates of a rectangular shape.
struct Shape {
    dims: Vec<usize>,
    strides: Vec<usize>,
    sites: usize,
}

impl Shape {
    fn new(dims: &[usize]) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::InvalidArgument("box sides must be at least 1".into()));
        }
        let mut strides = vec![1usize; dims.len()];
        for i in (0..dims.len() - 1).rev() {
            strides[i] = strides[i + 1]
                .checked_mul(dims[i + 1])
                .ok_or_else(|| Error::cap("box sites", "overflow", usize::MAX))?;
        }
        let sites = strides[0]
            .checked_mul(dims[0])
            .ok_or_else(|| Error::cap("box sites", "overflow", usize::MAX))?;
        Ok(Shape { dims: dims.to_vec(), strides, sites })
    }

    fn coord(&self, s: usize, axis: usize) -> usize {
        (s / self.strides[axis]) % self.dims[axis]
    }

    fn long_axes(&self) -> usize {
        self.dims.iter().filter(|&&n| n > 1).count()
    }

    /// Stride of the slowest axis longer than 1, which bounds how far back
    /// any axis line reaches.
    fn reach(&self) -> usize {
        self.dims.iter().zip(&self.strides).find(|(&n, _)| n > 1).map_or(0, |(_, &s)| s)
    }
}

/// Whether placing `x` at site `s` avoids completing a forbidden word on
/// every axis; `letter(p)` reads an already placed site `p < s`.
fn placement_ok(c: &Compressed, shape: &Shape, s: usize, x: u8, letter: impl Fn(usize) -> u8) -> bool {
    let words = &c.by_last[x as usize];
    if words.is_empty() {
        return true;
    }
    for axis in 0..shape.dims.len() {
        let back = shape.coord(s, axis).min(c.k);
        let stride = shape.strides[axis];
        for f in words {
            let l = f.len();
            if l <= back && f.iter().enumerate().all(|(i, &a)| letter(s - (l - i) * stride) == a) {
                return false;
            }
        }
    }
    true
}

fn count_transfer(c: &Compressed, shape: &Shape, caps: &Caps) -> Result<BigUint> {
    let width = c.k * shape.reach();
    let mut states: HashMap<Vec<u8>, BigUint> = HashMap::new();
    states.insert(Vec::new(), BigUint::one());
    for s in 0..shape.sites {
        let mut next: HashMap<Vec<u8>, BigUint> = HashMap::with_capacity(states.len());
        for (state, count) in &states {
            let len = state.len();
            for x in 0..c.symbols() {
                if !placement_ok(c, shape, s, x, |p| state[len - (s - p)]) {
                    continue;
                }
                let mut ns = state.clone();
                ns.push(x);
                if ns.len() > width {
                    ns.remove(0);
                }
                let add = count * c.weights[x as usize];
                *next.entry(ns).or_insert_with(BigUint::zero) += add;
            }
        }
        if next.len() > caps.transfer_states {
            return Err(Error::cap("transfer states", next.len(), caps.transfer_states));
        }
        states = next;
    }
    Ok(states.into_values().sum())
}

struct Backtrack<'a> {
    c: &'a Compressed,
    shape: &'a Shape,
    nodes: &'a AtomicU64,
    abort: &'a AtomicBool,
    cap: u64,
}

impl Backtrack<'_> {
    /// Fills sites from `s` on; `hist[f]` counts completions using `f` free sites.
    fn run(&self, grid: &mut [u8], s: usize, free_used: usize, hist: &mut [u64], local: &mut u64) {
        if self.abort.load(AtomicOrdering::Relaxed) {
            return;
        }
        *local += 1;
        if *local >= 4096 {
            let total = self.nodes.fetch_add(*local, AtomicOrdering::Relaxed) + *local;
            *local = 0;
            if total > self.cap {
                self.abort.store(true, AtomicOrdering::Relaxed);
                return;
            }
        }
        if s == self.shape.sites {
            hist[free_used] += 1;
            return;
        }
        for x in 0..self.c.symbols() {
            if placement_ok(self.c, self.shape, s, x, |p| grid[p]) {
                grid[s] = x;
                let f = free_used + usize::from(self.c.free == Some(x));
                self.run(grid, s + 1, f, hist, local);
            }
        }
    }
}

fn count_backtrack(c: &Compressed, shape: &Shape, caps: &Caps) -> Result<BigUint> {
    if shape.sites > caps.sites {
        return Err(Error::cap("box sites", shape.sites, caps.sites));
    }
    // split on legal prefixes so branches can run in parallel
    let mut prefixes: Vec<Vec<u8>> = vec![Vec::new()];
    while !prefixes.is_empty() && prefixes.len() < 256 && prefixes[0].len() < shape.sites.min(6) {
        let s = prefixes[0].len();
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| {
                (0..c.symbols())
                    .filter(|&x| placement_ok(c, shape, s, x, |q| p[q]))
                    .map(|x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let bt = Backtrack { c, shape, nodes: &nodes, abort: &abort, cap: caps.nodes };
    let hists: Vec<Vec<u64>> = prefixes
        .par_iter()
        .map(|p| {
            let mut grid = vec![0u8; shape.sites];
            grid[..p.len()].copy_from_slice(p);
            let used = p.iter().filter(|&&x| c.free == Some(x)).count();
            let mut hist = vec![0u64; shape.sites + 1];
            let mut local = 0;
            bt.run(&mut grid, p.len(), used, &mut hist, &mut local);
            nodes.fetch_add(local, AtomicOrdering::Relaxed);
            hist
        })
        .collect();
    if abort.load(AtomicOrdering::Relaxed) || nodes.load(AtomicOrdering::Relaxed) > caps.nodes {
        return Err(Error::cap("backtracking nodes", nodes.load(AtomicOrdering::Relaxed), caps.nodes));
    }
    let fw = BigUint::from(c.free.map_or(1, |f| c.weights[f as usize]));
    let mut total = BigUint::zero();
    for f in 0..=shape.sites {
        let h: u64 = hists.iter().map(|h| h[f]).sum();
        if h > 0 {
            total += BigUint::from(h) * Pow::pow(&fw, f as u32);
        }
    }
    Ok(total)
}

/// Exact number of fillings of a rectangular box with side lengths `dims`
/// whose every axis-parallel line avoids the forbidden words.
pub fn count_shape(spec: &SubshiftSpec, dims: &[usize], method: CountMethod, caps: &Caps) -> Result<(BigUint, CountMethod)> {
    let shape = Shape::new(dims)?;
    let c = Compressed::new(spec);
    match method {
        CountMethod::Transfer => count_transfer(&c, &shape, caps).map(|n| (n, CountMethod::Transfer)),
        CountMethod::Backtrack => count_backtrack(&c, &shape, caps).map(|n| (n, CountMethod::Backtrack)),
        CountMethod::Auto => {
            let long = shape.long_axes();
            let narrow = long <= 1 || (long == 2 && shape.dims.iter().all(|&n| n <= caps.transfer_side));
            if narrow {
                match count_transfer(&c, &shape, caps) {
                    Ok(n) => return Ok((n, CountMethod::Transfer)),
                    Err(e) if e.is_cap() && shape.sites <= caps.sites => {}
                    Err(e) => return Err(e),
                }
            }
            count_backtrack(&c, &shape, caps).map(|n| (n, CountMethod::Backtrack))
        }
    }
}

/// Count of the cube `[0, n-1]^d`.
pub fn count_box(spec: &SubshiftSpec, n: usize, d: usize, caps: &Caps) -> Result<BoxCount> {
    count_box_with(spec, n, d, CountMethod::Auto, caps)
}

pub fn count_box_with(spec: &SubshiftSpec, n: usize, d: usize, method: CountMethod, caps: &Caps) -> Result<BoxCount> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("n and d must be at least 1".into()));
    }
    let (count, method) = count_shape(spec, &vec![n; d], method, caps)?;
    let sites = (n as f64).powi(d as i32);
    let estimate = if count.is_zero() { f64::NEG_INFINITY } else { ln_biguint(&count) / sites };
    Ok(BoxCount { n, d, count, estimate, method })
}

/// Whether a filled cube (row-major letters) has every axis line legal.
pub fn box_is_legal(spec: &SubshiftSpec, n: usize, d: usize, letters: &[u8]) -> bool {
    let sites = n.pow(d as u32);
    if letters.len() != sites {
        return false;
    }
    let mut line = Vec::with_capacity(n);
    for axis in 0..d {
        let stride = n.pow((d - 1 - axis) as u32);
        for start in 0..sites {
            if !(start / stride).is_multiple_of(n) {
                continue;
            }
            line.clear();
            line.extend((0..n).map(|j| letters[start + j * stride]));
            if !spec.word_is_legal(&line) {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableChecks {
    /// Every estimate is at least `h_ind - 1e-9`.
    pub sandwich: bool,
    /// `ĥ(2n, d) <= ĥ(n, d)` wherever both are present.
    pub doubling: bool,
    /// `count(n, d+1) <= count(n, d)^n` wherever both are present.
    pub slice: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceTable {
    pub rows: Vec<BoxCount>,
    pub h_ind: ExactScore,
    pub checks: TableChecks,
}

pub const SANDWICH_TOL: f64 = 1e-9;

pub fn entropy_estimate_table(spec: &SubshiftSpec, ns: &[usize], ds: &[usize], caps: &Caps) -> Result<ConvergenceTable> {
    let (h_ind, _) = independence_entropy(spec, caps)?;
    let mut rows = Vec::new();
    for &d in ds {
        for &n in ns {
            rows.push(count_box(spec, n, d, caps)?);
        }
    }
    let find = |n: usize, d: usize| rows.iter().find(|r| r.n == n && r.d == d);
    let h = h_ind.nats();
    let sandwich = rows.iter().all(|r| r.estimate >= h - SANDWICH_TOL);
    let doubling = rows.iter().all(|r| find(2 * r.n, r.d).is_none_or(|big| big.estimate <= r.estimate + 1e-12));
    let slice = rows
        .iter()
        .all(|r| find(r.n, r.d + 1).is_none_or(|up| up.count <= Pow::pow(&r.count, r.n as u32)));
    Ok(ConvergenceTable { rows, h_ind, checks: TableChecks { sandwich, doubling, slice } })
}

/// Default relative tolerance for `entropy_1d`.
pub const ENTROPY_TOL: f64 = 1e-10;

/// Topological entropy in nats from the letter-level `k`-window graph.
pub fn entropy_1d(spec: &SubshiftSpec, tol: f64, caps: &Caps) -> Result<f64> {
    let k = spec.memory();
    let sigma = spec.sigma();
    let total = (sigma as u128).checked_pow(k as u32);
    if total.is_none_or(|t| t > caps.vertices as u128) {
        return Err(Error::cap("letter windows", total.map_or("overflow".into(), |t| t.to_string()), caps.vertices));
    }
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..k {
        words = words
            .into_iter()
            .flat_map(|w| {
                (0..sigma as u8).filter_map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    spec.word_is_legal(&v).then_some(v)
                })
            })
            .collect();
    }
    let index: HashMap<&[u8], usize> = words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, w) in words.iter().enumerate() {
        for a in 0..sigma as u8 {
            let mut v = w.clone();
            v.push(a);
            if !spec.forbidden_ends_at_last(&v) {
                edges.push((i, index[&v[1..]]));
            }
        }
    }

    // trim vertices without successors or predecessors
    let nv = words.len();
    let mut alive = vec![true; nv];
    loop {
        let mut indeg = vec![0usize; nv];
        let mut outdeg = vec![0usize; nv];
        for &(u, v) in edges.iter().filter(|&&(u, v)| alive[u] && alive[v]) {
            outdeg[u] += 1;
            indeg[v] += 1;
        }
        let mut changed = false;
        for v in 0..nv {
            if alive[v] && (indeg[v] == 0 || outdeg[v] == 0) {
                alive[v] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    edges.retain(|&(u, v)| alive[u] && alive[v]);
    if edges.is_empty() {
        return Err(Error::EmptyLanguage);
    }

    let mut g: DiGraph<(), ()> = DiGraph::new();
    let nodes: Vec<_> = (0..nv).map(|_| g.add_node(())).collect();
    for &(u, v) in &edges {
        g.add_edge(nodes[u], nodes[v], ());
    }
    let mut best = 0.0f64;
    for comp in petgraph::algo::tarjan_scc(&g) {
        let members: Vec<usize> = comp.iter().map(|n| n.index()).collect();
        let mut local = vec![usize::MAX; nv];
        for (i, &v) in members.iter().enumerate() {
            local[v] = i;
        }
        let inner: Vec<(usize, usize)> = edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]))
            .collect();
        if inner.is_empty() {
            continue;
        }
        best = best.max(perron_root(members.len(), &inner, tol));
    }
    Ok(best.ln())
}

/// Spectral radius of an irreducible 0/1 multigraph adjacency matrix, by power
/// iteration on `A + I` with Collatz–Wielandt bounds.
fn perron_root(n: usize, edges: &[(usize, usize)], tol: f64) -> f64 {
    let mut x = vec![1.0f64; n];
    let mut y = vec![0.0f64; n];
    let (mut lo, mut hi) = (0.0f64, f64::INFINITY);
    for _ in 0..10_000_000 {
        y.copy_from_slice(&x);
        // y = (A + I) x, with A[u][v] = 1 for an edge u -> v
        for &(u, v) in edges {
            y[u] += x[v];
        }
        lo = f64::INFINITY;
        hi = 0.0;
        for i in 0..n {
            let r = y[i] / x[i];
            lo = lo.min(r);
            hi = hi.max(r);
        }
        if hi - lo <= tol * hi {
            break;
        }
        let m = y.iter().cloned().fold(0.0, f64::max);
        for i in 0..n {
            x[i] = y[i] / m;
        }
    }
    (lo + hi) / 2.0 - 1.0
}

/// Brute-force independence entropy: the best score over cyclic set-words of
/// length at most `max_len` whose periodic repetition is fully legal.
///
/// Legality is decided by listing every selection of each window, so this
/// shares no code with the window graph.
pub fn oracle_hind(spec: &SubshiftSpec, max_len: usize, caps: &Caps) -> Result<ExactScore> {
    let sigma = spec.sigma();
    let cells = (1u64 << sigma) - 1;
    let work = (cells as f64).powi(max_len as i32);
    if sigma > 16 || work > caps.nodes as f64 {
        return Err(Error::cap("oracle search", format!("{work:e}"), caps.nodes));
    }
    if max_len == 0 {
        return Err(Error::InvalidArgument("max_len must be at least 1".into()));
    }
    let mut oracle = Oracle {
        spec,
        k: spec.memory(),
        memo: HashMap::new(),
        best: None,
        best_ln: f64::NEG_INFINITY,
        max_size: sigma as u32,
    };
    for len in 1..=max_len {
        let mut word = Vec::with_capacity(len);
        oracle.extend(&mut word, len);
    }
    oracle.best.ok_or(Error::EmptyLanguage)
}

struct Oracle<'a> {
    spec: &'a SubshiftSpec,
    k: usize,
    memo: HashMap<Vec<u64>, bool>,
    best: Option<ExactScore>,
    best_ln: f64,
    max_size: u32,
}

impl Oracle<'_> {
    /// Every selection of the window avoids the forbidden words.
    fn window_legal(&mut self, window: &[u64]) -> bool {
        if let Some(&v) = self.memo.get(window) {
            return v;
        }
        let mut selection = vec![0u8; window.len()];
        let ok = self.selections_legal(window, 0, &mut selection);
        self.memo.insert(window.to_vec(), ok);
        ok
    }

    fn selections_legal(&self, window: &[u64], i: usize, sel: &mut Vec<u8>) -> bool {
        if i == window.len() {
            return self.spec.word_is_legal(sel);
        }
        (0..64u8).filter(|&a| window[i] >> a & 1 == 1).all(|a| {
            sel[i] = a;
            self.selections_legal(window, i + 1, sel)
        })
    }

    fn extend(&mut self, word: &mut Vec<u64>, len: usize) {
        let size_ln: f64 = word.iter().map(|&c| (c.count_ones() as f64).ln()).sum();
        let rest = (len - word.len()) as f64 * (self.max_size as f64).ln();
        if (size_ln + rest) / (len as f64) < self.best_ln - 1e-12 {
            return;
        }
        if word.len() == len {
            self.finish(word);
            return;
        }
        let all = (1u64 << self.spec.sigma()) - 1;
        for c in 1..=all {
            // the first cell is the least cell of the cycle
            if word.first().is_some_and(|&f| c < f) {
                continue;
            }
            word.push(c);
            let l = word.len();
            let ok = l < self.k + 1 || self.window_legal(&word[l - self.k - 1..]);
            if ok {
                self.extend(word, len);
            }
            word.pop();
        }
    }

    fn finish(&mut self, word: &[u64]) {
        let len = word.len();
        let span = self.k + 1;
        // all windows of the periodic repetition, including wrapping ones
        for start in 0..len {
            let window: Vec<u64> = (0..span).map(|j| word[(start + j) % len]).collect();
            if !self.window_legal(&window) {
                return;
            }
        }
        let p: BigUint = word.iter().map(|&c| BigUint::from(c.count_ones())).product();
        let score = ExactScore::new(p, len as u64);
        if self.best.as_ref().is_none_or(|b| score.compare(b).is_gt()) {
            self.best_ln = score.nats();
            self.best = Some(score.canonicalize());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{build_model, ModelDescriptor};

    fn spec(d: ModelDescriptor) -> SubshiftSpec {
        build_model(&d).unwrap()
    }

    fn count(s: &SubshiftSpec, n: usize, d: usize) -> BigUint {
        count_box(s, n, d, &Caps::default()).unwrap().count
    }

    #[test]
    fn hard_square_counts() {
        let hs = spec(ModelDescriptor::HardSquare);
        assert_eq!(count(&hs, 2, 2), BigUint::from(7u32));
        assert_eq!(count(&hs, 3, 1), BigUint::from(5u32));
        assert_eq!(count(&hs, 3, 2), BigUint::from(63u32));
        assert_eq!(count(&hs, 4, 2), BigUint::from(1234u32));
    }

    #[test]
    fn add_line_count() {
        let add = spec(ModelDescriptor::add());
        assert_eq!(count(&add, 3, 1), BigUint::from(17575u32));
    }

    #[test]
    fn methods_agree() {
        let caps = Caps::default();
        let hs = spec(ModelDescriptor::Coloring(3));
        for n in 1..=4 {
            let a = count_box_with(&hs, n, 2, CountMethod::Transfer, &caps).unwrap();
            let b = count_box_with(&hs, n, 2, CountMethod::Backtrack, &caps).unwrap();
            assert_eq!(a.count, b.count);
        }
    }

    #[test]
    fn caps_are_errors() {
        let hs = spec(ModelDescriptor::HardSquare);
        let e = count_box_with(&hs, 5, 2, CountMethod::Backtrack, &Caps::default()).unwrap_err();
        assert!(e.is_cap());
        assert!(count_box(&hs, 3, 3, &Caps::default()).unwrap_err().is_cap());
    }

    #[test]
    fn full_shift_estimate() {
        let full = spec(ModelDescriptor::Full(2));
        let r = count_box(&full, 3, 2, &Caps::default()).unwrap();
        assert_eq!(r.count, BigUint::from(512u32));
        assert!((r.estimate - 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn entropy_1d_values() {
        let caps = Caps::default();
        let golden = ((1.0 + 5f64.sqrt()) / 2.0).ln();
        assert!((entropy_1d(&spec(ModelDescriptor::HardSquare), ENTROPY_TOL, &caps).unwrap() - golden).abs() < 1e-9);
        assert!((entropy_1d(&spec(ModelDescriptor::Full(26)), ENTROPY_TOL, &caps).unwrap() - 26f64.ln()).abs() < 1e-9);
        let plastic = entropy_1d(&spec(ModelDescriptor::Plastic), ENTROPY_TOL, &caps).unwrap();
        assert!((plastic - 0.2811995743).abs() < 1e-9);
    }

    #[test]
    fn oracle_examples() {
        let caps = Caps::default();
        assert_eq!(oracle_hind(&spec(ModelDescriptor::HardSquare), 4, &caps).unwrap(), ExactScore::new(2u32, 2));
        assert_eq!(oracle_hind(&spec(ModelDescriptor::Plastic), 6, &caps).unwrap(), ExactScore::new(1u32, 1));
        assert_eq!(oracle_hind(&spec(ModelDescriptor::Full(3)), 1, &caps).unwrap(), ExactScore::new(3u32, 1));
    }

    #[test]
    fn legality_predicate() {
        let hs = spec(ModelDescriptor::HardSquare);
        assert!(box_is_legal(&hs, 2, 2, &[1, 0, 0, 1]));
        assert!(!box_is_legal(&hs, 2, 2, &[1, 1, 0, 0]));
        assert!(!box_is_legal(&hs, 2, 2, &[1, 0, 1, 0]));
    }
}
