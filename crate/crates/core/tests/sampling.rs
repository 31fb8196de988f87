use std::collections::HashMap;

use kerov_core::clt::{ks_two_sample, ks_two_sample_critical_1pct, sample_w, w_statistic};
use kerov_core::exact::to_f64;
use kerov_core::growth::{sample_path, substream, FastGrowth};
use kerov_core::measures::jack_weight;
use kerov_core::{partitions_of, Alpha, Partition};

#[test]
fn sampled_shapes_follow_jack_measure() {
    let samples = 40_000;
    for alpha in [Alpha::from_ratio(2, 1).unwrap(), Alpha::from_ratio(1, 2).unwrap()] {
        let mut counts: HashMap<Partition, usize> = HashMap::new();
        for s in 0..samples {
            let mut rng = substream(99, s);
            let mut g = FastGrowth::new(alpha.to_f64());
            for _ in 0..5 {
                g.step(&mut rng);
            }
            *counts.entry(g.shape()).or_default() += 1;
        }
        for la in partitions_of(5) {
            let p = to_f64(&jack_weight(&la, &alpha));
            let observed = *counts.get(&la).unwrap_or(&0) as f64 / samples as f64;
            let sd = (p * (1.0 - p) / samples as f64).sqrt();
            assert!((observed - p).abs() < 5.0 * sd, "alpha={alpha} {la}: {observed} vs {p}");
        }
    }
}

#[test]
fn paths_are_reproducible() {
    let a = Alpha::from_ratio(5, 3).unwrap();
    let p1 = sample_path(40, &a, 7).unwrap();
    let p2 = sample_path(40, &a, 7).unwrap();
    assert_eq!(p1, p2);
    assert_eq!(p1.endpoint().size(), 40);
    assert_ne!(sample_path(40, &a, 8).unwrap(), p1);
}

#[test]
fn w_is_antisymmetric_under_transpose_duality() {
    let a = Alpha::from_ratio(2, 1).unwrap();
    for n in 2..=7 {
        for la in partitions_of(n) {
            let w = w_statistic(&la, &a).unwrap();
            let dual = w_statistic(&la.conjugate(), &a.inverse()).unwrap();
            assert!((w + dual).abs() < 1e-12, "{la}");
        }
    }
}

#[test]
fn sampled_w_respects_duality() {
    let samples = 20_000;
    let a = Alpha::from_ratio(2, 1).unwrap();
    let w = sample_w(&[60], &a, samples, 1).unwrap().remove(0);
    let dual: Vec<f64> = sample_w(&[60], &a.inverse(), samples, 2)
        .unwrap()
        .remove(0)
        .into_iter()
        .map(|x| -x)
        .collect();
    let d = ks_two_sample(&w, &dual);
    assert!(d < ks_two_sample_critical_1pct(samples, samples), "{d}");
}
