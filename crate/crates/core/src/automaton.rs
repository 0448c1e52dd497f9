//! Window graphs of the multi-choice shift.
//!
//! A vertex is a length-`k` window of set-letters in which no selection
//! contains a forbidden word; an edge appends one cell while keeping the
//! `(k+1)`-window fully legal. Cycles of the trimmed graph are exactly the
//! periodic points of the multi-choice shift, and vertex-simple cycles are
//! the periodic words with no repeated `k`-window.
//!
//! # Candidate reduction
//!
//! Call a letter *constrained* if it occurs in a forbidden word and *free*
//! otherwise. Adding every free letter to a cell cannot create a forbidden
//! selection, because forbidden words use only constrained letters, and it
//! does not lower the score of any cell. So every periodic point can be
//! enlarged cell by cell to one whose cells all have the form
//! `free ∪ B` with `B` a set of constrained letters, without losing legality
//! or score; the maximum over these candidate cells is the maximum over all
//! cells. The same holds for positive single-site weights.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::shift::{SetLetter, SetWord, SubshiftSpec, Word};

/// Start index of a forbidden word occurring in `cells` and ending at `end`,
/// with the index of that word in the spec's forbidden list.
pub(crate) fn occurrence_ending_at(spec: &SubshiftSpec, cells: &[SetLetter], end: usize) -> Option<(usize, usize)> {
    spec.forbidden().iter().enumerate().find_map(|(fi, f)| {
        let len = f.len();
        if len > end + 1 {
            return None;
        }
        let start = end + 1 - len;
        f.letters().iter().enumerate().all(|(j, &a)| cells[start + j].contains(a)).then_some((start, fi))
    })
}

/// True if no selection of `cells` contains a forbidden word.
pub fn is_locally_legal(spec: &SubshiftSpec, cells: &[SetLetter]) -> bool {
    (0..cells.len()).all(|end| occurrence_ending_at(spec, cells, end).is_none())
}

/// The set-letters `free ∪ B` for every subset `B` of the constrained letters,
/// in increasing mask order.
pub fn candidate_set_letters(spec: &SubshiftSpec, caps: &Caps) -> Result<Vec<SetLetter>> {
    let constrained = spec.constrained_mask();
    let free = spec.free_mask();
    let bits = constrained.count_ones();
    let count = 1u128 << bits;
    if count > caps.candidates as u128 {
        return Err(Error::cap("candidate set-letters", count, caps.candidates));
    }
    let mut out = Vec::with_capacity(count as usize);
    // enumerate submasks of `constrained`
    let mut sub = constrained;
    loop {
        if let Some(c) = SetLetter::new(free | sub) {
            out.push(c);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & constrained;
    }
    out.sort();
    Ok(out)
}

/// Every nonempty subset of the alphabet.
pub fn all_set_letters(spec: &SubshiftSpec) -> Vec<SetLetter> {
    (1..=spec.alphabet().full_mask()).filter_map(SetLetter::new).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Universe {
    Candidates,
    Exhaustive,
    Custom(Vec<SetLetter>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindowEdge {
    pub src: usize,
    pub dst: usize,
    /// The appended cell.
    pub cell: SetLetter,
}

impl WindowEdge {
    pub fn weight(&self) -> u32 {
        self.cell.size()
    }
}

#[derive(Clone, Debug)]
pub struct WindowGraph {
    k: usize,
    vertices: Vec<Vec<SetLetter>>,
    edges: Vec<WindowEdge>,
    out: Vec<Vec<usize>>,
    index: HashMap<Vec<SetLetter>, usize>,
    universe: Vec<SetLetter>,
}

impl WindowGraph {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertices(&self) -> &[Vec<SetLetter>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[WindowEdge] {
        &self.edges
    }

    /// Edge ids leaving `v`, in edge order.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn universe(&self) -> &[SetLetter] {
        &self.universe
    }

    pub fn vertex_id(&self, window: &[SetLetter]) -> Option<usize> {
        self.index.get(window).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// True if `w` is read along some walk of the graph.
    pub fn labels_path(&self, w: &SetWord) -> bool {
        let cells = w.cells();
        let k = self.k;
        if k == 0 {
            return cells.iter().all(|c| self.edges.iter().any(|e| e.cell == *c));
        }
        if cells.len() >= k {
            cells.windows(k).all(|win| self.index.contains_key(win))
        } else {
            self.vertices.iter().any(|v| v.windows(cells.len()).any(|x| x == cells))
        }
    }

    /// Text dump: `vertex <id> <window>` then `edge <src> <dst> <weight> <setletter>`.
    pub fn dump(&self, spec: &SubshiftSpec) -> String {
        let alphabet = spec.alphabet();
        let cell = |c: &SetLetter| format!("{{{}}}", c.symbols(alphabet).join(","));
        let mut s = String::new();
        for (i, v) in self.vertices.iter().enumerate() {
            let win: String = if v.is_empty() { "ε".into() } else { v.iter().map(cell).collect() };
            writeln!(s, "vertex {i} {win}").unwrap();
        }
        for e in &self.edges {
            writeln!(s, "edge {} {} {} {}", e.src, e.dst, e.weight(), cell(&e.cell)).unwrap();
        }
        s
    }
}

/// Builds and trims the window graph over the chosen set-letter universe.
pub fn build_window_graph(spec: &SubshiftSpec, universe: Universe, caps: &Caps) -> Result<WindowGraph> {
    let mut letters = match universe {
        Universe::Candidates => candidate_set_letters(spec, caps)?,
        Universe::Exhaustive => {
            let needed = (spec.alphabet().full_mask() as u128).checked_pow(spec.memory() as u32);
            if needed.is_none_or(|n| n > caps.vertices as u128) {
                return Err(Error::cap(
                    "exhaustive window count",
                    needed.map_or_else(|| "overflow".to_string(), |n| n.to_string()),
                    caps.vertices,
                ));
            }
            all_set_letters(spec)
        }
        Universe::Custom(v) => v,
    };
    letters.sort();
    letters.dedup();
    build_over(spec, letters, caps)
}

fn build_over(spec: &SubshiftSpec, universe: Vec<SetLetter>, caps: &Caps) -> Result<WindowGraph> {
    let k = spec.memory();
    let needed = (universe.len() as u128).checked_pow(k as u32);
    if needed.is_none_or(|n| n > caps.vertices as u128) {
        return Err(Error::cap(
            "window count",
            needed.map_or_else(|| "overflow".to_string(), |n| n.to_string()),
            caps.vertices,
        ));
    }

    // lexicographic enumeration of locally legal k-windows
    let mut windows: Vec<Vec<SetLetter>> = Vec::new();
    let mut stack: Vec<SetLetter> = Vec::with_capacity(k);
    extend_windows(spec, &universe, k, &mut stack, &mut windows);

    let index: HashMap<Vec<SetLetter>, usize> = windows.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();

    let edges: Vec<WindowEdge> = windows
        .par_iter()
        .enumerate()
        .map(|(src, u)| {
            let mut buf: Vec<SetLetter> = Vec::with_capacity(k + 1);
            let mut out = Vec::new();
            for &c in &universe {
                buf.clear();
                buf.extend_from_slice(u);
                buf.push(c);
                if occurrence_ending_at(spec, &buf, k).is_some() {
                    continue;
                }
                let dst = index[&buf[1..]];
                out.push(WindowEdge { src, dst, cell: c });
            }
            out
        })
        .flatten()
        .collect();

    let graph = trim(k, windows, edges, universe);
    if graph.vertices.is_empty() {
        return Err(Error::EmptyLanguage);
    }
    Ok(graph)
}

fn extend_windows(
    spec: &SubshiftSpec,
    universe: &[SetLetter],
    k: usize,
    stack: &mut Vec<SetLetter>,
    out: &mut Vec<Vec<SetLetter>>,
) {
    if stack.len() == k {
        out.push(stack.clone());
        return;
    }
    for &c in universe {
        stack.push(c);
        if occurrence_ending_at(spec, stack, stack.len() - 1).is_none() {
            extend_windows(spec, universe, k, stack, out);
        }
        stack.pop();
    }
}

/// Repeatedly removes vertices without in- or out-edges.
fn trim(k: usize, windows: Vec<Vec<SetLetter>>, edges: Vec<WindowEdge>, universe: Vec<SetLetter>) -> WindowGraph {
    let n = windows.len();
    let mut alive = vec![true; n];
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    let mut ins: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut outs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        indeg[e.dst] += 1;
        outdeg[e.src] += 1;
        ins[e.dst].push(i);
        outs[e.src].push(i);
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0 || outdeg[v] == 0).collect();
    for &v in &queue {
        alive[v] = false;
    }
    while let Some(v) = queue.pop() {
        for &ei in &outs[v] {
            let w = edges[ei].dst;
            if w == v {
                continue;
            }
            indeg[w] -= 1;
            if alive[w] && indeg[w] == 0 {
                alive[w] = false;
                queue.push(w);
            }
        }
        for &ei in &ins[v] {
            let u = edges[ei].src;
            if u == v {
                continue;
            }
            outdeg[u] -= 1;
            if alive[u] && outdeg[u] == 0 {
                alive[u] = false;
                queue.push(u);
            }
        }
    }

    let mut remap = vec![usize::MAX; n];
    let mut vertices = Vec::new();
    for (v, w) in windows.into_iter().enumerate() {
        if alive[v] {
            remap[v] = vertices.len();
            vertices.push(w);
        }
    }
    let edges: Vec<WindowEdge> = edges
        .into_iter()
        .filter(|e| alive[e.src] && alive[e.dst])
        .map(|e| WindowEdge { src: remap[e.src], dst: remap[e.dst], cell: e.cell })
        .collect();
    let mut out = vec![Vec::new(); vertices.len()];
    for (i, e) in edges.iter().enumerate() {
        out[e.src].push(i);
    }
    let index = vertices.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    WindowGraph { k, vertices, edges, out, index, universe }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegalityMode {
    /// No selection contains a forbidden word.
    Local,
    /// Additionally the word occurs in some bi-infinite point of the multi-choice shift.
    Extendable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// A selection of the word containing the forbidden word.
    pub selection: Word,
    pub position: usize,
    pub forbidden: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegalityReport {
    pub legal: bool,
    pub violation: Option<Violation>,
    pub reason: Option<String>,
}

pub fn is_independently_legal(
    w: &SetWord,
    spec: &SubshiftSpec,
    mode: LegalityMode,
    caps: &Caps,
) -> Result<LegalityReport> {
    let cells = w.cells();
    if let Some(mask) = cells.iter().map(|c| c.mask()).find(|m| m & !spec.alphabet().full_mask() != 0) {
        return Err(Error::InvalidWord(format!("cell mask {mask:#x} outside the alphabet")));
    }
    for end in 0..cells.len() {
        if let Some((start, fi)) = occurrence_ending_at(spec, cells, end) {
            let forbidden = spec.forbidden()[fi].clone();
            let selection = cells
                .iter()
                .enumerate()
                .map(|(i, c)| if i >= start && i <= end { forbidden.letters()[i - start] } else { c.first() })
                .collect();
            return Ok(LegalityReport {
                legal: false,
                violation: Some(Violation { selection: Word(selection), position: start, forbidden }),
                reason: Some("forbidden selection".into()),
            });
        }
    }
    if mode == LegalityMode::Local {
        return Ok(LegalityReport { legal: true, violation: None, reason: None });
    }

    let mut universe = candidate_set_letters(spec, caps)?;
    universe.extend((0..spec.sigma() as u8).map(SetLetter::singleton));
    universe.extend_from_slice(cells);
    let graph = match build_window_graph(spec, Universe::Custom(universe), caps) {
        Ok(g) => g,
        Err(Error::EmptyLanguage) => {
            return Ok(LegalityReport { legal: false, violation: None, reason: Some("not extendable".into()) })
        }
        Err(e) => return Err(e),
    };
    if graph.labels_path(w) {
        Ok(LegalityReport { legal: true, violation: None, reason: None })
    } else {
        Ok(LegalityReport { legal: false, violation: None, reason: Some("not extendable".into()) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{build_model, ModelDescriptor};

    fn sw(sets: &[&[u8]]) -> SetWord {
        SetWord::from_sets(sets).unwrap()
    }

    #[test]
    fn candidates_for_models() {
        let caps = Caps::default();
        let hs = build_model(&ModelDescriptor::HardSquare).unwrap();
        let c = candidate_set_letters(&hs, &caps).unwrap();
        assert_eq!(c, vec![SetLetter::from_letters(&[0]).unwrap(), SetLetter::from_letters(&[0, 1]).unwrap()]);

        let full = build_model(&ModelDescriptor::Full(3)).unwrap();
        assert_eq!(candidate_set_letters(&full, &caps).unwrap(), vec![SetLetter::new(0b111).unwrap()]);

        let add = build_model(&ModelDescriptor::add()).unwrap();
        let c = candidate_set_letters(&add, &caps).unwrap();
        assert_eq!(c.len(), 4);
        let a = 0u8;
        let d = 3u8;
        let sizes: Vec<(bool, bool, u32)> = c.iter().map(|s| (s.contains(a), s.contains(d), s.size())).collect();
        assert!(sizes.contains(&(false, false, 24)));
        assert!(sizes.contains(&(false, true, 25)));
        assert!(sizes.contains(&(true, false, 25)));
        assert!(sizes.contains(&(true, true, 26)));
    }

    #[test]
    fn candidate_cap() {
        let caps = Caps { candidates: 2, ..Caps::default() };
        let c3 = build_model(&ModelDescriptor::Coloring(3)).unwrap();
        assert!(candidate_set_letters(&c3, &caps).unwrap_err().is_cap());
    }

    #[test]
    fn hard_square_graph() {
        let hs = build_model(&ModelDescriptor::HardSquare).unwrap();
        let g = build_window_graph(&hs, Universe::Candidates, &Caps::default()).unwrap();
        assert_eq!(g.vertex_count(), 2);
        let zero = SetLetter::from_letters(&[0]).unwrap();
        let both = SetLetter::from_letters(&[0, 1]).unwrap();
        let pairs: Vec<(SetLetter, SetLetter)> =
            g.edges().iter().map(|e| (g.vertices()[e.src][0], g.vertices()[e.dst][0])).collect();
        assert_eq!(pairs, vec![(zero, zero), (zero, both), (both, zero)]);
    }

    #[test]
    fn full_shift_graph_is_one_loop() {
        let full = build_model(&ModelDescriptor::Full(2)).unwrap();
        let g = build_window_graph(&full, Universe::Candidates, &Caps::default()).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edges().len(), 1);
        assert_eq!(g.edges()[0].weight(), 2);
    }

    #[test]
    fn add_graph_drops_fitting_selection() {
        let add = build_model(&ModelDescriptor::add()).unwrap();
        let caps = Caps::default();
        let g = build_window_graph(&add, Universe::Candidates, &caps).unwrap();
        let cands = candidate_set_letters(&add, &caps).unwrap();
        assert!(g.vertex_count() <= 16);
        let s3 = *cands.iter().find(|c| c.contains(0) && !c.contains(3)).unwrap();
        let s4 = *cands.iter().find(|c| c.size() == 26).unwrap();
        let src = g.vertex_id(&[s3, s4]);
        let dst = g.vertex_id(&[s4, s4]);
        if let (Some(src), Some(dst)) = (src, dst) {
            assert!(!g.edges().iter().any(|e| e.src == src && e.dst == dst));
        }
        // the maximizing pair survives
        assert!(g.vertex_id(&[s3, s4]).is_some());
        assert!(g.vertex_id(&[s4, s3]).is_some());
    }

    #[test]
    fn trimming_is_a_fixed_point() {
        let spec = build_model(&ModelDescriptor::Rll { d: 2, k: Some(5) }).unwrap();
        let caps = Caps::default();
        let g = build_window_graph(&spec, Universe::Candidates, &caps).unwrap();
        let again = build_window_graph(&spec, Universe::Custom(g.universe().to_vec()), &caps).unwrap();
        assert_eq!(g.vertices(), again.vertices());
        assert_eq!(g.edges(), again.edges());
        for v in 0..g.vertex_count() {
            assert!(!g.out_edges(v).is_empty());
            assert!(g.edges().iter().any(|e| e.dst == v));
        }
    }

    #[test]
    fn memory_zero_deletes_forbidden_letters() {
        let spec = crate::shift::validate_spec(&["a", "b", "c"], &[crate::shift::RawWord::Text("b".into())], 8).unwrap();
        let g = build_window_graph(&spec, Universe::Candidates, &Caps::default()).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edges().len(), 1);
        assert_eq!(g.edges()[0].cell, SetLetter::from_letters(&[0, 2]).unwrap());
    }

    #[test]
    fn empty_language_is_an_error() {
        let spec = crate::shift::validate_spec(&["a"], &[crate::shift::RawWord::Text("a".into())], 8).unwrap();
        assert_eq!(build_window_graph(&spec, Universe::Candidates, &Caps::default()).unwrap_err(), Error::EmptyLanguage);
    }

    #[test]
    fn legality_examples() {
        let caps = Caps::default();
        let hs = build_model(&ModelDescriptor::HardSquare).unwrap();
        let r = is_independently_legal(&sw(&[&[0, 1], &[0], &[0, 1]]), &hs, LegalityMode::Local, &caps).unwrap();
        assert!(r.legal);
        let r = is_independently_legal(&sw(&[&[0, 1], &[0], &[0, 1]]), &hs, LegalityMode::Extendable, &caps).unwrap();
        assert!(r.legal);

        let r = is_independently_legal(&sw(&[&[0, 1], &[0, 1], &[0]]), &hs, LegalityMode::Local, &caps).unwrap();
        assert!(!r.legal);
        let v = r.violation.unwrap();
        assert_eq!(v.selection, Word(vec![1, 1, 0]));
        assert_eq!(v.position, 0);

        let plastic = build_model(&ModelDescriptor::Plastic).unwrap();
        // letters 1,2,3 are indices 0,1,2
        let w = sw(&[&[0], &[1, 2]]);
        assert!(is_independently_legal(&w, &plastic, LegalityMode::Local, &caps).unwrap().legal);
        let r = is_independently_legal(&w, &plastic, LegalityMode::Extendable, &caps).unwrap();
        assert!(!r.legal);
        assert_eq!(r.reason.as_deref(), Some("not extendable"));
        assert!(r.violation.is_none());
    }

    #[test]
    fn dump_format() {
        let hs = build_model(&ModelDescriptor::HardSquare).unwrap();
        let g = build_window_graph(&hs, Universe::Candidates, &Caps::default()).unwrap();
        assert_eq!(
            g.dump(&hs),
            "vertex 0 {0}\nvertex 1 {0,1}\nedge 0 0 1 {0}\nedge 0 1 2 {0,1}\nedge 1 0 1 {0}\n"
        );
    }
}
