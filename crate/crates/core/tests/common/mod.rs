#![allow(dead_code)]

use std::collections::BTreeSet;

use axial_core::models::{build_model, ModelDescriptor};
use axial_core::{Alphabet, SubshiftSpec, Word};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

pub fn model(d: ModelDescriptor) -> SubshiftSpec {
    build_model(&d).unwrap()
}

/// Every built-in model with default caps.
pub fn built_in_models() -> Vec<(String, SubshiftSpec)> {
    let mut descs = vec![
        ModelDescriptor::HardSquare,
        ModelDescriptor::Plastic,
        ModelDescriptor::add(),
        ModelDescriptor::Full(2),
        ModelDescriptor::Full(3),
    ];
    descs.extend((3..=6).map(ModelDescriptor::Coloring));
    descs.extend((1..=3).map(ModelDescriptor::Beach));
    for (d, k) in [(1, Some(2)), (1, Some(3)), (2, Some(5)), (1, None), (2, None), (3, None)] {
        descs.push(ModelDescriptor::Rll { d, k });
    }
    descs.into_iter().map(|d| (d.to_string(), model(d))).collect()
}

/// A fixed list of distinct specs with at most three letters and forbidden
/// words of length at most three.
pub fn small_specs(count: usize) -> Vec<SubshiftSpec> {
    let mut rng = ChaCha20Rng::seed_from_u64(0x5eed_0001);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let sigma: usize = if rng.gen_bool(0.05) { 1 } else { rng.gen_range(2..=3) };
        let words: usize = rng.gen_range(1..=4);
        let mut list = Vec::new();
        for _ in 0..words {
            let len = if rng.gen_bool(0.1) { 1 } else { rng.gen_range(2..=3) };
            list.push(Word((0..len).map(|_| rng.gen_range(0..sigma) as u8).collect()));
        }
        let symbols: Vec<String> = (0..sigma).map(|a| a.to_string()).collect();
        let spec = SubshiftSpec::from_words(Alphabet::new(&symbols).unwrap(), list);
        let key = (sigma, spec.forbidden().to_vec());
        if seen.insert(key) {
            out.push(spec);
        }
    }
    out
}

/// Counts fillings of a box by listing all of them.
pub fn brute_count(spec: &SubshiftSpec, dims: &[usize]) -> BigUint {
    let sites: usize = dims.iter().product();
    let sigma = spec.sigma();
    assert!((sigma as f64).powi(sites as i32) <= 2e7, "brute force too large");
    let mut strides = vec![1usize; dims.len()];
    for i in (0..dims.len() - 1).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    let mut grid = vec![0u8; sites];
    let mut total = 0u64;
    let mut line = Vec::new();
    loop {
        let mut ok = true;
        'axes: for axis in 0..dims.len() {
            for start in 0..sites {
                if !(start / strides[axis]).is_multiple_of(dims[axis]) {
                    continue;
                }
                line.clear();
                line.extend((0..dims[axis]).map(|j| grid[start + j * strides[axis]]));
                if !spec.word_is_legal(&line) {
                    ok = false;
                    break 'axes;
                }
            }
        }
        total += u64::from(ok);
        // next grid in lexicographic order
        let mut i = 0;
        loop {
            if i == sites {
                return BigUint::from(total);
            }
            grid[i] += 1;
            if (grid[i] as usize) < sigma {
                break;
            }
            grid[i] = 0;
            i += 1;
        }
    }
}
