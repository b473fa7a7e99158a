mod common;

use gevidence::io::EvidenceDocument;
use gevidence::{
    conflict_coefficient, dempster_combine, dif_betp, gbel, gbpa_distance, gcr_combine,
    generalized_cf, gpl, liu_cf, modified_cf, Frame, Gbpa,
};
use proptest::prelude::*;

fn arb_gbpa(n: usize, open_world: bool) -> impl Strategy<Value = Gbpa> {
    let lo = if open_world { 0u64 } else { 1 };
    prop::collection::btree_map(lo..(1u64 << n), 0.01f64..1.0, 1..6).prop_map(move |entries| {
        let f = common::frame(n);
        let total: f64 = entries.values().sum();
        Gbpa::new(
            f.clone(),
            entries
                .iter()
                .map(|(&b, &w)| (f.subset_from_bits(b).unwrap(), w / total)),
        )
        .unwrap()
    })
}

fn pair(open_world: bool) -> impl Strategy<Value = (Gbpa, Gbpa)> {
    (1usize..=5).prop_flat_map(move |n| (arb_gbpa(n, open_world), arb_gbpa(n, open_world)))
}

fn triple(open_world: bool) -> impl Strategy<Value = (Gbpa, Gbpa, Gbpa)> {
    (1usize..=4).prop_flat_map(move |n| {
        (
            arb_gbpa(n, open_world),
            arb_gbpa(n, open_world),
            arb_gbpa(n, open_world),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn belief_below_plausibility(m in (1usize..=5).prop_flat_map(|n| arb_gbpa(n, true))) {
        let f = m.frame().clone();
        for a in common::all_nonempty(&f) {
            prop_assert!(gbel(&m, &a).unwrap() <= gpl(&m, &a).unwrap() + 1e-15);
        }
        let open = 1.0 - m.empty_mass();
        prop_assert!((gbel(&m, &f.full_set()).unwrap() - open).abs() < 1e-12);
        prop_assert!((gpl(&m, &f.full_set()).unwrap() - open).abs() < 1e-12);
        prop_assert_eq!(gbel(&m, &f.empty_set()).unwrap(), m.empty_mass());
    }

    #[test]
    fn gcr_closure_and_symmetry((m1, m2) in pair(true)) {
        let a = gcr_combine(&m1, &m2).unwrap();
        let b = gcr_combine(&m2, &m1).unwrap();
        prop_assert!((a.result.total_mass() - 1.0).abs() < 1e-9);
        prop_assert_eq!(&a.result, &b.result);
        prop_assert_eq!(a.conflict_k, b.conflict_k);
        prop_assert!((0.0..=1.0).contains(&a.conflict_k));
        if a.conflict_k < 1.0 - 1e-12 {
            prop_assert_eq!(a.result.empty_mass(), m1.empty_mass() * m2.empty_mass());
        } else {
            prop_assert_eq!(a.result.empty_mass(), 1.0);
            prop_assert_eq!(a.result.focal_count(), 1);
        }
    }

    #[test]
    fn gcr_reduces_to_dempster((m1, m2) in pair(false)) {
        let k = conflict_coefficient(&m1, &m2).unwrap();
        prop_assume!(k < 1.0 - 1e-12);
        let g = gcr_combine(&m1, &m2).unwrap();
        let d = dempster_combine(&m1, &m2).unwrap();
        prop_assert!(g.result.is_classical());
        prop_assert!(common::gbpa_max_diff(&g.result, &d.result) < 1e-12);
    }

    #[test]
    fn gcr_associative((m1, m2, m3) in triple(true)) {
        let k12 = conflict_coefficient(&m1, &m2).unwrap();
        let k23 = conflict_coefficient(&m2, &m3).unwrap();
        prop_assume!(k12 < 1.0 - 1e-9 && k23 < 1.0 - 1e-9);
        let left = gcr_combine(&m1, &m2).unwrap();
        let right = gcr_combine(&m2, &m3).unwrap();
        let l = gcr_combine(&left.result, &m3).unwrap();
        let r = gcr_combine(&m1, &right.result).unwrap();
        prop_assume!(l.conflict_k < 1.0 - 1e-9 && r.conflict_k < 1.0 - 1e-9);
        prop_assert!(common::gbpa_max_diff(&l.result, &r.result) < 1e-9);
    }

    #[test]
    fn distance_metric_axioms((m1, m2, m3) in triple(true)) {
        let d12 = gbpa_distance(&m1, &m2).unwrap();
        let d21 = gbpa_distance(&m2, &m1).unwrap();
        let d13 = gbpa_distance(&m1, &m3).unwrap();
        let d23 = gbpa_distance(&m2, &m3).unwrap();
        prop_assert_eq!(d12, d21);
        prop_assert_eq!(gbpa_distance(&m1, &m1).unwrap(), 0.0);
        prop_assert!((0.0..=1.0 + 1e-12).contains(&d12));
        prop_assert!(d13 <= d12 + d23 + 1e-9);
    }

    #[test]
    fn pignistic_distance_is_symmetric_and_bounded((m1, m2) in pair(false)) {
        let a = dif_betp(&m1, &m2).unwrap();
        prop_assert_eq!(a, dif_betp(&m2, &m1).unwrap());
        prop_assert!((0.0..=1.0).contains(&a));
        prop_assert_eq!(dif_betp(&m1, &m1).unwrap(), 0.0);
    }

    #[test]
    fn conflict_models_symmetric((m1, m2) in pair(false)) {
        let liu = liu_cf(&m1, &m2).unwrap();
        let liu_r = liu_cf(&m2, &m1).unwrap();
        prop_assert_eq!(liu.coefficient, liu_r.coefficient);
        prop_assert_eq!(liu.distance, liu_r.distance);
        let modified = modified_cf(&m1, &m2).unwrap();
        let generalized = generalized_cf(&m1, &m2).unwrap();
        prop_assert_eq!(modified.coefficient, generalized.coefficient);
        prop_assert_eq!(modified.distance, generalized.distance);
        let gr = generalized_cf(&m2, &m1).unwrap();
        prop_assert_eq!(generalized.coefficient, gr.coefficient);
        prop_assert_eq!(generalized.distance, gr.distance);
    }

    #[test]
    fn bayesian_inputs_match_conditioning(seed in any::<u64>(), n in 2usize..6) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let f = common::frame(n);
        let m1 = common::random_bayesian(&mut rng, &f);
        let m2 = common::random_bayesian(&mut rng, &f);
        let out = dempster_combine(&m1, &m2).unwrap();
        let products: Vec<f64> = (0..n)
            .map(|i| {
                let s = f.singleton(i).unwrap();
                m1.mass(&s) * m2.mass(&s)
            })
            .collect();
        let z: f64 = products.iter().sum();
        for (i, p) in products.iter().enumerate() {
            prop_assert!((out.result.mass(&f.singleton(i).unwrap()) - p / z).abs() < 1e-12);
        }
    }

    #[test]
    fn document_round_trip(bodies in (1usize..=5).prop_flat_map(|n| prop::collection::vec(arb_gbpa(n, true), 1..4))) {
        let frame: Frame = bodies[0].frame().clone();
        let mut doc = EvidenceDocument::new(frame);
        for (i, b) in bodies.iter().enumerate() {
            doc.push(format!("m{i}"), b.clone()).unwrap();
        }
        let text = doc.to_json();
        let back = EvidenceDocument::parse(text.as_bytes()).unwrap();
        prop_assert_eq!(back.frame.labels(), doc.frame.labels());
        for ((id_a, a), (id_b, b)) in doc.bodies.iter().zip(&back.bodies) {
            prop_assert_eq!(id_a, id_b);
            prop_assert!(common::gbpa_max_diff(a, b) < 1e-12);
        }
        prop_assert_eq!(back.to_json(), text);
    }
}
