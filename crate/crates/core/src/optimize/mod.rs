//! Independence entropy, simple maximizing cycles, classification of the
//! isotropic limiting measures of maximal entropy, and single-site pressure.

mod cycles;
mod karp;
pub mod phase;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::automaton::{build_window_graph, Universe, WindowGraph};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::score::{lcm_of_denominators, ExactScore, RationalScore};
use crate::shift::{independence_score, SetWord, SubshiftSpec};

pub use phase::{bounded_search, check_condition_two, ConditionTwo, PhaseOrbit2D};

use cycles::{critical_cycles, SearchLimits};
use karp::{cycles_in_walk, karp, MeanValue};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximizingCycle {
    /// One period, rotated to its lexicographically least form.
    pub word: SetWord,
    pub score: ExactScore,
    /// No repeated `k`-window in the cyclic word.
    pub simple: bool,
}

impl MaximizingCycle {
    fn from_edges(g: &WindowGraph, edges: &[usize]) -> Self {
        let word = SetWord(edges.iter().map(|&e| g.edges()[e].cell).collect());
        let mut seen = BTreeSet::new();
        let simple = edges.iter().all(|&e| seen.insert(g.edges()[e].src));
        let word = word.least_rotation();
        let score = independence_score(&word);
        MaximizingCycle { word, score, simple }
    }
}

fn size_weights(g: &WindowGraph) -> Vec<BigUint> {
    g.edges().iter().map(|e| BigUint::from(e.weight())).collect()
}

/// Best cycle under `weights`: its edge ids and its exact mean.
fn best_cycle(g: &WindowGraph, weights: &[BigUint], caps: &Caps) -> Result<(Vec<usize>, MeanValue)> {
    let outcome = karp(g, weights).ok_or(Error::EmptyLanguage)?;
    let mut best: Option<(Vec<usize>, MeanValue)> = None;
    for c in cycles_in_walk(g, &outcome.walk) {
        let v = MeanValue::of_cycle(weights, &c);
        match &best {
            Some((_, b)) if v.cmp(b) != Ordering::Greater => {}
            _ => best = Some((c, v)),
        }
    }
    if let Some((c, v)) = best {
        if v.cmp(&outcome.value) == Ordering::Equal {
            return Ok((c, v));
        }
    }
    // the critical walk held no optimal cycle; search the tight subgraph
    let limits = SearchLimits { max_len: g.vertex_count(), max_count: 1, node_budget: caps.nodes };
    let found = critical_cycles(g, weights, &outcome.value, limits);
    let c = found.cycles.into_iter().next().ok_or_else(|| Error::cap("critical cycle search", "budget", caps.nodes))?;
    let v = MeanValue::of_cycle(weights, &c);
    Ok((c, v))
}

/// Exact maximum geometric-mean cycle of a window graph under cell-size weights.
pub fn max_mean_cycle(g: &WindowGraph, caps: &Caps) -> Result<(ExactScore, MaximizingCycle)> {
    let weights = size_weights(g);
    let (edges, _) = best_cycle(g, &weights, caps)?;
    let cycle = MaximizingCycle::from_edges(g, &edges);
    Ok((cycle.score.clone(), cycle))
}

/// Independence entropy, which equals the limiting entropy of the axial powers.
pub fn independence_entropy(spec: &SubshiftSpec, caps: &Caps) -> Result<(ExactScore, MaximizingCycle)> {
    let g = build_window_graph(spec, Universe::Candidates, caps)?;
    max_mean_cycle(&g, caps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleLimits {
    /// Longest cycle to consider; `None` means the vertex count.
    pub max_len: Option<usize>,
    pub max_count: usize,
}

impl Default for CycleLimits {
    fn default() -> Self {
        CycleLimits { max_len: None, max_count: 10_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleEnumeration {
    pub entropy: ExactScore,
    pub cycles: Vec<MaximizingCycle>,
    /// False when a limit cut the search short.
    pub complete: bool,
}

/// Every simple maximizing cycle, up to rotation, sorted by canonical word.
pub fn enumerate_simple_maximizing_cycles(
    spec: &SubshiftSpec,
    limits: CycleLimits,
    caps: &Caps,
) -> Result<CycleEnumeration> {
    let g = build_window_graph(spec, Universe::Candidates, caps)?;
    let weights = size_weights(&g);
    let (_, target) = best_cycle(&g, &weights, caps)?;
    let search = critical_cycles(
        &g,
        &weights,
        &target,
        SearchLimits {
            max_len: limits.max_len.unwrap_or(g.vertex_count()),
            max_count: limits.max_count,
            node_budget: caps.nodes,
        },
    );
    let mut cycles: Vec<MaximizingCycle> = search.cycles.iter().map(|c| MaximizingCycle::from_edges(&g, c)).collect();
    cycles.sort_by(|a, b| a.word.cmp(&b.word));
    cycles.dedup_by(|a, b| a.word == b.word);
    let entropy = ExactScore::new(target.num, target.len).canonicalize();
    Ok(CycleEnumeration { entropy, cycles, complete: search.complete })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Unique,
    ExactlyK { k: usize },
    Multiple,
    UnknownWithinBounds,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MmeClassification {
    pub verdict: Verdict,
    pub entropy: ExactScore,
    pub cycles: Vec<MaximizingCycle>,
    /// Outcome of the orbit check for each cycle, in cycle order.
    pub condition_two: Vec<ConditionTwo>,
    pub enumeration_complete: bool,
    pub letters_disjoint: bool,
    pub bound: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassifyBounds {
    pub cycles: CycleLimits,
    /// Period bound for the fallback orbit search; default `2m`.
    pub orbit_bound: Option<usize>,
}

/// Decides uniqueness or the number of ergodic isotropic measures of maximal
/// entropy of the infinite-dimensional axial power.
pub fn classify_mme(spec: &SubshiftSpec, bounds: ClassifyBounds, caps: &Caps) -> Result<MmeClassification> {
    let en = enumerate_simple_maximizing_cycles(spec, bounds.cycles, caps)?;
    let condition_two: Vec<ConditionTwo> =
        en.cycles.iter().map(|c| check_condition_two(&c.word, bounds.orbit_bound)).collect();
    let letters_disjoint = en.cycles.iter().enumerate().all(|(i, a)| {
        let sa: BTreeSet<_> = a.word.cells().iter().collect();
        en.cycles[i + 1..].iter().all(|b| b.word.cells().iter().all(|c| !sa.contains(c)))
    });
    let any_counterexample = condition_two.iter().any(|c| matches!(c, ConditionTwo::Counterexample(_)));
    let all_certified =
        condition_two.iter().all(|c| matches!(c, ConditionTwo::UniqueWithinBound { certified: true, .. }));

    let verdict = if !en.complete {
        if en.cycles.len() >= 2 || any_counterexample {
            Verdict::Multiple
        } else {
            Verdict::UnknownWithinBounds
        }
    } else if en.cycles.len() == 1 {
        if any_counterexample {
            Verdict::Multiple
        } else if all_certified {
            Verdict::Unique
        } else {
            Verdict::UnknownWithinBounds
        }
    } else if any_counterexample || !letters_disjoint {
        Verdict::Multiple
    } else if all_certified {
        Verdict::ExactlyK { k: en.cycles.len() }
    } else {
        Verdict::UnknownWithinBounds
    };
    Ok(MmeClassification {
        verdict,
        entropy: en.entropy,
        cycles: en.cycles,
        condition_two,
        enumeration_complete: en.complete,
        letters_disjoint,
        bound: bounds.orbit_bound,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PressureResult {
    pub pressure: RationalScore,
    /// Witness cycle; its `score` field is the plain independence score.
    pub witness: MaximizingCycle,
}

/// Single-site pressure: cycle optimization with cell weight `Σ_{a ∈ cell} g(a)`.
pub fn independence_pressure(
    spec: &SubshiftSpec,
    g: &BTreeMap<u8, BigRational>,
    caps: &Caps,
) -> Result<PressureResult> {
    let sigma = spec.sigma();
    let mut values = Vec::with_capacity(sigma);
    for a in 0..sigma as u8 {
        let v = g.get(&a).cloned().ok_or_else(|| {
            Error::InvalidArgument(format!("missing weight for symbol {}", spec.alphabet().symbol(a)))
        })?;
        if !v.is_positive() {
            return Err(Error::InvalidArgument(format!("weight for {} must be positive", spec.alphabet().symbol(a))));
        }
        values.push(v);
    }
    let scale = lcm_of_denominators(values.iter());
    let scale_q = BigRational::from_integer(BigInt::from(scale.clone()));
    let int_values: Vec<BigUint> = values
        .iter()
        .map(|v| (v * &scale_q).to_integer().to_biguint().expect("positive"))
        .collect();

    let graph = build_window_graph(spec, Universe::Candidates, caps)?;
    let weights: Vec<BigUint> = graph
        .edges()
        .iter()
        .map(|e| e.cell.letters().fold(BigUint::from(0u32), |acc, a| acc + &int_values[a as usize]))
        .collect();
    let (edges, value) = best_cycle(&graph, &weights, caps)?;
    let den = num_traits::pow(scale, value.len as usize);
    let p = BigRational::new(BigInt::from(value.num), BigInt::from(den));
    let pressure = RationalScore::new(p, value.len).canonicalize();
    Ok(PressureResult { pressure, witness: MaximizingCycle::from_edges(&graph, &edges) })
}

/// Weight map assigning 1 to every letter.
pub fn unit_weights(spec: &SubshiftSpec) -> BTreeMap<u8, BigRational> {
    (0..spec.sigma() as u8).map(|a| (a, BigRational::one())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{build_model, ModelDescriptor};

    fn sw(sets: &[&[u8]]) -> SetWord {
        SetWord::from_sets(sets).unwrap()
    }

    fn hind(desc: ModelDescriptor) -> (ExactScore, MaximizingCycle) {
        independence_entropy(&build_model(&desc).unwrap(), &Caps::default()).unwrap()
    }

    #[test]
    fn hard_square_entropy() {
        let (h, c) = hind(ModelDescriptor::HardSquare);
        assert_eq!(h, ExactScore::new(2u32, 2));
        assert_eq!(c.word, sw(&[&[0], &[0, 1]]));
        assert!(c.simple);
    }

    #[test]
    fn full_shift_entropy() {
        let (h, _) = hind(ModelDescriptor::Full(5));
        assert_eq!(h, ExactScore::new(5u32, 1));
    }

    #[test]
    fn coloring_and_beach_and_rll() {
        assert_eq!(hind(ModelDescriptor::Coloring(3)).0, ExactScore::new(2u32, 2));
        assert_eq!(hind(ModelDescriptor::Beach(3)).0, ExactScore::new(3u32, 1));
        assert_eq!(hind(ModelDescriptor::Rll { d: 2, k: Some(5) }).0, ExactScore::new(2u32, 6));
    }

    #[test]
    fn hard_square_cycles() {
        let spec = build_model(&ModelDescriptor::HardSquare).unwrap();
        let en = enumerate_simple_maximizing_cycles(&spec, CycleLimits::default(), &Caps::default()).unwrap();
        assert!(en.complete);
        assert_eq!(en.cycles.len(), 1);
        assert_eq!(en.cycles[0].word, sw(&[&[0], &[0, 1]]));
    }

    #[test]
    fn beach_cycles_are_two_loops() {
        let spec = build_model(&ModelDescriptor::Beach(3)).unwrap();
        let en = enumerate_simple_maximizing_cycles(&spec, CycleLimits::default(), &Caps::default()).unwrap();
        let words: Vec<SetWord> = en.cycles.iter().map(|c| c.word.clone()).collect();
        // -3,-2,-1 are indices 0..3 and 1,2,3 are 3..6
        assert_eq!(words, vec![sw(&[&[0, 1, 2]]), sw(&[&[3, 4, 5]])]);
    }

    #[test]
    fn classify_examples() {
        let caps = Caps::default();
        let v = |d: ModelDescriptor| classify_mme(&build_model(&d).unwrap(), ClassifyBounds::default(), &caps).unwrap().verdict;
        assert_eq!(v(ModelDescriptor::HardSquare), Verdict::Unique);
        assert_eq!(v(ModelDescriptor::Coloring(3)), Verdict::ExactlyK { k: 3 });
        assert_eq!(v(ModelDescriptor::Rll { d: 1, k: Some(3) }), Verdict::Multiple);
        assert_eq!(v(ModelDescriptor::Full(2)), Verdict::Unique);
    }

    #[test]
    fn pressure_examples() {
        let caps = Caps::default();
        let hs = build_model(&ModelDescriptor::HardSquare).unwrap();
        let r = independence_pressure(&hs, &unit_weights(&hs), &caps).unwrap();
        assert_eq!(r.pressure.compare_exact(&ExactScore::new(2u32, 2)), Ordering::Equal);

        let g: BTreeMap<u8, BigRational> =
            [(0u8, BigRational::one()), (1u8, BigRational::from_integer(8.into()))].into_iter().collect();
        let r = independence_pressure(&hs, &g, &caps).unwrap();
        assert_eq!(r.pressure.compare_exact(&ExactScore::new(9u32, 2)), Ordering::Equal);
        assert_eq!((r.pressure.p_string().as_str(), r.pressure.n()), ("3", 1));
        assert_eq!(r.witness.word, sw(&[&[0], &[0, 1]]));

        let full = build_model(&ModelDescriptor::Full(2)).unwrap();
        let g: BTreeMap<u8, BigRational> =
            [(0u8, BigRational::one()), (1u8, BigRational::from_integer(3.into()))].into_iter().collect();
        let r = independence_pressure(&full, &g, &caps).unwrap();
        assert_eq!(r.pressure.p_string(), "4");
        assert_eq!(r.pressure.n(), 1);
    }

    #[test]
    fn pressure_rejects_nonpositive() {
        let hs = build_model(&ModelDescriptor::HardSquare).unwrap();
        let g: BTreeMap<u8, BigRational> =
            [(0u8, BigRational::one()), (1u8, BigRational::from_integer(0.into()))].into_iter().collect();
        assert!(matches!(independence_pressure(&hs, &g, &Caps::default()), Err(Error::InvalidArgument(_))));
    }
}
