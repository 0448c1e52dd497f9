mod common;

use std::cmp::Ordering;

use axial_core::counting::{entropy_1d, ENTROPY_TOL};
use axial_core::models::{build_model, build_model_with, ModelDescriptor};
use axial_core::optimize::{enumerate_simple_maximizing_cycles, independence_entropy, CycleLimits};
use axial_core::{Caps, ExactScore, SetWord};
use common::model;
use num_bigint::BigUint;

fn hind(spec: &axial_core::SubshiftSpec, caps: &Caps) -> ExactScore {
    independence_entropy(spec, caps).unwrap().0
}

#[test]
fn coloring_closed_form() {
    let caps = Caps::default();
    for n in 3..=6usize {
        let h = hind(&model(ModelDescriptor::Coloring(n)), &caps);
        // ½ log ⌊n/2⌋ + ½ log ⌈n/2⌉
        let want = ExactScore::new((n / 2 * n.div_ceil(2)) as u64, 2);
        assert_eq!(h.compare(&want), Ordering::Equal, "coloring {n}");
    }
}

#[test]
fn rll_closed_forms_and_words() {
    let caps = Caps { max_forbidden_len: 10, ..Caps::default() };
    for d in 0..=3usize {
        let ks: Vec<Option<usize>> = (d + 1..=9).map(Some).chain([None]).collect();
        for k in ks {
            let spec = build_model_with(&ModelDescriptor::Rll { d, k }, &caps).unwrap();
            let (h, _) = independence_entropy(&spec, &caps).unwrap();
            let (want, word) = match k {
                None => {
                    let mut cells: Vec<&[u8]> = vec![&[0]; d];
                    cells.push(&[0, 1]);
                    (ExactScore::new(2u32, d as u64 + 1), SetWord::from_sets(&cells).unwrap())
                }
                Some(k) => {
                    let q = (k - d) / (d + 1);
                    let den = (k + 1) / (d + 1) * (d + 1);
                    let mut cells: Vec<&[u8]> = vec![&[0]; d];
                    cells.push(&[1]);
                    for _ in 0..q {
                        cells.extend(std::iter::repeat_n(&[0u8][..], d));
                        cells.push(&[0, 1]);
                    }
                    (ExactScore::new(BigUint::from(2u32).pow(q as u32), den as u64), SetWord::from_sets(&cells).unwrap())
                }
            };
            assert_eq!(h.compare(&want), Ordering::Equal, "rll({d},{k:?}): {h} vs {want}");
            if !want.is_zero() {
                let en = enumerate_simple_maximizing_cycles(&spec, CycleLimits::default(), &caps).unwrap();
                assert!(en.cycles.iter().any(|c| c.word.is_rotation_of(&word)), "rll({d},{k:?}) word missing");
            }
        }
    }
}

#[test]
fn golden_mean_aliases() {
    let caps = Caps::default();
    let a = model(ModelDescriptor::Rll { d: 1, k: None });
    let b = model(ModelDescriptor::HardSquare);
    assert_eq!(hind(&a, &caps), hind(&b, &caps));
}

#[test]
fn plastic_has_zero_independence_entropy() {
    let caps = Caps::default();
    let spec = model(ModelDescriptor::Plastic);
    assert!(hind(&spec, &caps).is_zero());
    assert!(entropy_1d(&spec, ENTROPY_TOL, &caps).unwrap() > 0.28);
}

#[test]
fn add_from_json_file() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../models/add.json");
    let spec = build_model(&ModelDescriptor::File(path.into())).unwrap();
    assert_eq!(spec, model(ModelDescriptor::add()));
}
