mod support;

use ontoalign_core::engine::PenaltyForm;
use ontoalign_core::{Aligner, AlignmentConfig, Origin};
use std::collections::BTreeMap;
use support::oracle::{max_diff, Naive};
use support::random::{random_pair, Shape};

const TOL: f64 = 1e-9;

fn compare(seed: u64, cfg: AlignmentConfig, iterations: usize) {
    let (o1, o2) = random_pair(seed, Shape::default());
    let mut engine = Aligner::new(&o1, &o2, cfg.clone()).unwrap();
    let mut naive = Naive::new(&o1, &o2, cfg);
    for it in 1..=iterations {
        engine.step();
        let snap = naive.step();
        let eq: BTreeMap<_, _> = engine.equivalences().entries().into_iter().map(|(a, b, p)| ((a, b), p)).collect();
        let d = max_diff(&eq, &snap.equivalences);
        assert!(d <= TOL, "seed {seed} iteration {it}: equivalences differ by {d}");
        for (side, expected) in [(Origin::First, &snap.first_in_second), (Origin::Second, &snap.second_in_first)] {
            let got: BTreeMap<_, _> = engine.subrelations().entries(side).into_iter().map(|(a, b, p)| ((a, b), p)).collect();
            let d = max_diff(&got, expected);
            assert!(d <= TOL, "seed {seed} iteration {it}: {side:?} subrelations differ by {d}");
        }
    }
    let classes = engine.class_alignment();
    let (forward, backward) = naive.classes();
    for (side, expected) in [(Origin::First, &forward), (Origin::Second, &backward)] {
        let got: BTreeMap<_, _> = classes.entries(side).into_iter().map(|(a, b, s)| ((a, b), s.score)).collect();
        let d = max_diff(&got, expected);
        assert!(d <= TOL, "seed {seed}: {side:?} classes differ by {d}");
    }
}

#[test]
fn default_configuration_matches_naive_evaluator() {
    for seed in 0..12 {
        compare(seed, AlignmentConfig::default(), 4);
    }
}

#[test]
fn unrestricted_evidence_matches_naive_evaluator() {
    let cfg = AlignmentConfig {
        restrict_to_assignment: false,
        ..AlignmentConfig::default()
    };
    for seed in 100..108 {
        compare(seed, cfg.clone(), 3);
    }
}

#[test]
fn negative_evidence_matches_naive_evaluator() {
    for form in [PenaltyForm::ObjectMismatch, PenaltyForm::SubjectMismatch] {
        let cfg = AlignmentConfig {
            negative_evidence: true,
            penalty_form: form,
            ..AlignmentConfig::default()
        };
        for seed in 200..206 {
            compare(seed, cfg.clone(), 3);
        }
    }
}

#[test]
fn low_theta_matches_naive_evaluator() {
    let cfg = AlignmentConfig {
        theta: 0.001,
        ..AlignmentConfig::default()
    };
    for seed in 300..306 {
        compare(seed, cfg.clone(), 3);
    }
}
