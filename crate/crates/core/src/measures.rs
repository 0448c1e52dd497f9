//! The diagonal field of a maximizing cycle on a box, and sampling from the
//! limiting measure it induces.
//!
//! Random streams: sample `i` of a batch with seed `s` uses ChaCha20 seeded by
//! `seed_from_u64(s)` with stream number `i`. It draws the phase from
//! `0..m`, then visits sites in row-major order and draws an index into each
//! cell with more than one letter. Singleton cells consume no randomness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::automaton::is_locally_legal;
use crate::counting::box_is_legal;
use crate::error::{Error, Result};
use crate::score::ExactScore;
use crate::shift::{independence_score, SetLetter, SetWord, SubshiftSpec};

/// Identifier recorded with every batch.
pub const RNG_ALGORITHM: &str = "chacha20/seed_from_u64/stream=sample_index";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximizingBoxField {
    pub word: SetWord,
    pub phase: usize,
    pub n: usize,
    pub d: usize,
    /// Row-major cells of `[0, n-1]^d`.
    pub cells: Vec<SetLetter>,
}

impl MaximizingBoxField {
    pub fn cell(&self, coords: &[usize]) -> SetLetter {
        let idx = coords.iter().fold(0, |acc, &c| acc * self.n + c);
        self.cells[idx]
    }
}

fn coord_sum(mut s: usize, n: usize, d: usize) -> usize {
    let mut total = 0;
    for _ in 0..d {
        total += s % n;
        s /= n;
    }
    total
}

/// True if the periodic repetition of `w` has no forbidden selection.
pub fn is_periodic_legal(spec: &SubshiftSpec, w: &SetWord) -> bool {
    let m = w.len();
    if m == 0 {
        return false;
    }
    let reps = (m + spec.memory()).div_ceil(m) + 1;
    let cells: Vec<SetLetter> = w.cells().iter().copied().cycle().take(reps * m).collect();
    is_locally_legal(spec, &cells)
}

fn field_cells(w: &SetWord, r: usize, n: usize, d: usize) -> Vec<SetLetter> {
    let m = w.len();
    let sites = n.pow(d as u32);
    (0..sites).map(|s| w.cells()[(r + coord_sum(s, n, d)) % m]).collect()
}

fn check_args(spec: &SubshiftSpec, w: &SetWord, n: usize, d: usize) -> Result<()> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("n and d must be at least 1".into()));
    }
    if (n as f64).powi(d as i32) > 1e8 {
        return Err(Error::cap("box sites", format!("{n}^{d}"), 100_000_000));
    }
    if w.cells().iter().any(|c| c.mask() & !spec.alphabet().full_mask() != 0) {
        return Err(Error::InvalidWord("cell outside the alphabet".into()));
    }
    if !is_periodic_legal(spec, w) {
        return Err(Error::InvalidWord(format!("{} does not repeat legally", w.render(spec.alphabet()))));
    }
    Ok(())
}

pub fn maximizing_point_box(spec: &SubshiftSpec, w: &SetWord, r: usize, n: usize, d: usize) -> Result<MaximizingBoxField> {
    check_args(spec, w, n, d)?;
    if r >= w.len() {
        return Err(Error::InvalidArgument(format!("phase {r} not below period {}", w.len())));
    }
    let cells = field_cells(w, r, n, d);
    // every axis line must be free of forbidden selections
    for axis in 0..d {
        let stride = n.pow((d - 1 - axis) as u32);
        for start in (0..cells.len()).filter(|s| (s / stride).is_multiple_of(n)) {
            let line: Vec<SetLetter> = (0..n).map(|j| cells[start + j * stride]).collect();
            if !is_locally_legal(spec, &line) {
                return Err(Error::InvalidWord("field line has a forbidden selection".into()));
            }
        }
    }
    Ok(MaximizingBoxField { word: w.clone(), phase: r, n, d, cells })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sample {
    pub phase: usize,
    /// Row-major letters.
    pub letters: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleBatch {
    pub word: SetWord,
    pub n: usize,
    pub d: usize,
    pub seed: u64,
    pub algorithm: &'static str,
    pub samples: Vec<Sample>,
    /// `frequencies[site][letter]`: number of samples with that letter there.
    pub frequencies: Vec<Vec<u64>>,
    pub violations: usize,
}

fn draw(w: &SetWord, n: usize, d: usize, seed: u64, index: u64) -> Sample {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let m = w.len();
    let phase = rng.gen_range(0..m);
    let letters = field_cells(w, phase, n, d)
        .into_iter()
        .map(|c| if c.size() == 1 { c.first() } else { c.nth(rng.gen_range(0..c.size() as usize)) })
        .collect();
    Sample { phase, letters }
}

pub fn sample_box(spec: &SubshiftSpec, w: &SetWord, n: usize, d: usize, seed: u64, count: usize) -> Result<SampleBatch> {
    check_args(spec, w, n, d)?;
    if count == 0 {
        return Err(Error::InvalidArgument("count must be at least 1".into()));
    }
    let samples: Vec<Sample> = (0..count as u64).into_par_iter().map(|i| draw(w, n, d, seed, i)).collect();
    let violations = samples.iter().filter(|s| !box_is_legal(spec, n, d, &s.letters)).count();
    assert_eq!(violations, 0, "a sampled box broke a forbidden word");
    let sites = n.pow(d as u32);
    let mut frequencies = vec![vec![0u64; spec.sigma()]; sites];
    for s in &samples {
        for (site, &a) in s.letters.iter().enumerate() {
            frequencies[site][a as usize] += 1;
        }
    }
    Ok(SampleBatch { word: w.clone(), n, d, seed, algorithm: RNG_ALGORITHM, samples, frequencies, violations })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmpiricalStats {
    pub samples: usize,
    /// Mean over sites of the plug-in Shannon entropy of the site marginal.
    pub per_site_entropy: f64,
    /// Mean of `ln|cell|` over sites and all phases.
    pub mean_log_cell_size: ExactScore,
    /// The same mean over the sampled phases only.
    pub sampled_mean_log_cell_size: f64,
    /// Letter frequencies over sites whose cell has at least two letters.
    pub multi_cell_frequencies: Vec<f64>,
    /// Fraction of samples in which the even-sum or the odd-sum sites all
    /// carry letter 0.
    pub parity_rate: f64,
    pub violations: usize,
}

pub fn empirical_stats(batch: &SampleBatch) -> EmpiricalStats {
    let total = batch.samples.len() as f64;
    let sites = batch.frequencies.len();
    let per_site_entropy = batch
        .frequencies
        .iter()
        .map(|f| {
            f.iter()
                .filter(|&&c| c > 0)
                .map(|&c| {
                    let p = c as f64 / total;
                    -p * p.ln()
                })
                .sum::<f64>()
        })
        .sum::<f64>()
        / sites as f64;

    let sigma = batch.frequencies.first().map_or(0, |f| f.len());
    let mut multi = vec![0u64; sigma];
    let mut log_sum = 0.0;
    let mut parity_hits = 0usize;
    for s in &batch.samples {
        let cells = field_cells(&batch.word, s.phase, batch.n, batch.d);
        for (c, &a) in cells.iter().zip(&s.letters) {
            log_sum += (c.size() as f64).ln();
            if c.size() > 1 {
                multi[a as usize] += 1;
            }
        }
        let class_zero = |parity: usize| {
            (0..sites).filter(|&g| coord_sum(g, batch.n, batch.d) % 2 == parity).all(|g| s.letters[g] == 0)
        };
        if class_zero(0) || class_zero(1) {
            parity_hits += 1;
        }
    }
    let multi_total: u64 = multi.iter().sum();
    EmpiricalStats {
        samples: batch.samples.len(),
        per_site_entropy,
        mean_log_cell_size: independence_score(&batch.word),
        sampled_mean_log_cell_size: log_sum / (total * sites as f64),
        multi_cell_frequencies: multi.iter().map(|&c| if multi_total == 0 { 0.0 } else { c as f64 / multi_total as f64 }).collect(),
        parity_rate: parity_hits as f64 / total,
        violations: batch.violations,
    }
}
