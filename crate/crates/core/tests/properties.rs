mod common;

use common::*;
use prc_core::decoder::{
    build_candidate_list, error_factor_poly, error_locator_poly, error_locator_test, partial_gcd_i,
    partial_gcd_ii, upper_parts, DEFAULT_CANDIDATE_CAP,
};
use prc_core::io::{codeword_to_string, parse_codeword, parse_spec, spec_to_string};
use prc_core::oracle::{brute_force_decode, Metric, DEFAULT_SEARCH_CAP};
use prc_core::sim::{simulate, ChannelKind, ChannelModel, DecoderKind, SimMode};
use prc_core::{decode, DecodeOptions, Field, Poly, Stopping};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn decode_is_total(seed in any::<u64>(), field_idx in 0usize..4) {
        let mut r = rng(seed);
        let s = random_spec(&test_fields()[field_idx], 6, 3, &mut r);
        let y = random_word(&s, &mut r);
        for o in DecodeOptions::all_valid() {
            let out = decode(&s, &y, &o).unwrap();
            if let Some(m) = out.message() {
                prop_assert!(m.deg() < s.big_k());
            }
        }
    }

    #[test]
    fn within_radius_errors_are_corrected(seed in any::<u64>(), field_idx in 0usize..4) {
        let mut r = rng(seed);
        let s = random_spec(&test_fields()[field_idx], 6, 3, &mut r);
        let a = random_message(&s, &mut r);
        let model = ChannelModel { kind: ChannelKind::RandomDegreeWeight(s.t_d()), master_seed: seed };
        if model.check(&s).is_err() {
            return Ok(());
        }
        let (y, _) = prc_core::sim::corrupt(&s, &s.encode(&a).unwrap(), &model, 0).unwrap();
        for o in DecodeOptions::all_valid() {
            let out = decode(&s, &y, &o).unwrap();
            prop_assert_eq!(out.message(), Some(&a));
        }
    }

    #[test]
    fn stopping_rules_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = rs42();
        let a = random_message(&s, &mut r);
        let model = ChannelModel { kind: ChannelKind::RandomHammingWeight(1), master_seed: seed };
        let (y, _) = prc_core::sim::corrupt(&s, &s.encode(&a).unwrap(), &model, 1).unwrap();
        let yp = s.psi_inverse(&y).unwrap();
        let one = [Stopping::DegreeRelative, Stopping::Threshold]
            .map(|st| partial_gcd_i(s.mn(), &yp, s.big_k(), st).unwrap());
        prop_assert_eq!(&one[0], &one[1]);
        let (mu, eu) = upper_parts(&s, &yp).unwrap();
        let two = [Stopping::DegreeRelative, Stopping::Threshold]
            .map(|st| partial_gcd_ii(&mu, &eu, s.big_n(), s.big_k(), st).unwrap());
        prop_assert_eq!(&two[0], &two[1]);
        prop_assert_eq!((&one[0].s, &one[0].t), (&two[0].s, &two[0].t));
    }

    #[test]
    fn spec_and_codeword_files_round_trip(seed in any::<u64>(), field_idx in 0usize..4) {
        let mut r = rng(seed);
        let s = random_spec(&test_fields()[field_idx], 6, 3, &mut r);
        let back = parse_spec(&spec_to_string(&s)).unwrap();
        prop_assert_eq!(&back, &s);
        let w = random_word(&s, &mut r);
        prop_assert_eq!(parse_codeword(&s, &codeword_to_string(&s, &w)).unwrap(), w);
    }

    #[test]
    fn factor_divides_locator(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = reducible_larger();
        let e = random_word(&s, &mut r);
        let lf = error_factor_poly(&s.psi_inverse(&e).unwrap(), s.mn()).unwrap();
        let le = error_locator_poly(&s, &e).unwrap();
        prop_assert!(lf.divides(&le).unwrap());
    }
}

#[test]
fn decoder_matches_degree_metric_oracle() {
    let s = mixed_gf4();
    let mut r = rng(11);
    for _ in 0..300 {
        let a = random_message(&s, &mut r);
        let model = ChannelModel {
            kind: ChannelKind::RandomDegreeWeight(2),
            master_seed: 3,
        };
        let (y, _) =
            prc_core::sim::corrupt(&s, &s.encode(&a).unwrap(), &model, rand::Rng::gen(&mut r))
                .unwrap();
        let bf = brute_force_decode(&s, &y, Metric::Degree, DEFAULT_SEARCH_CAP).unwrap();
        assert_eq!(bf.messages, vec![a.clone()]);
        assert_eq!(
            decode(&s, &y, &DecodeOptions::default()).unwrap().message(),
            Some(&a)
        );
    }
}

#[test]
fn hamming_oracle_can_disagree_on_two_errors() {
    // Two errors in the degree-1 symbols are within the degree radius, but a
    // different codeword may be as close in Hamming distance.
    let s = mixed_gf4();
    let f = s.field().clone();
    let mut ties = 0;
    for idx in 0..64u32 {
        let a = Poly::from_coeffs(&f, vec![idx % 4, (idx / 4) % 4, idx / 16]).unwrap();
        let mut y = s.encode(&a).unwrap();
        y.symbols[0] = &y.symbols[0] + &Poly::one(&f);
        y.symbols[1] = &y.symbols[1] + &Poly::one(&f);
        let d = brute_force_decode(&s, &y, Metric::Degree, DEFAULT_SEARCH_CAP).unwrap();
        assert_eq!(d.messages, vec![a.clone()]);
        let h = brute_force_decode(&s, &y, Metric::Hamming, DEFAULT_SEARCH_CAP).unwrap();
        if h.messages != vec![a] {
            ties += 1;
        }
    }
    assert!(ties > 0);
}

#[test]
fn locator_test_on_heavy_symbol() {
    let s = ladder_gf2();
    let f = s.field().clone();
    let mut r = rng(6);
    for _ in 0..50 {
        let a = random_message(&s, &mut r);
        let mut w = s.encode(&a).unwrap();
        w.symbols[4] = &w.symbols[4] + &Poly::from_coeffs(&f, vec![0, 1, 1]).unwrap();
        let y = s.psi_inverse(&w).unwrap();
        let v = error_locator_test(&s, &y, &[4]).unwrap();
        assert!(v.passed);
        assert_eq!(v.z.div_exact(&s.moduli()[4]).unwrap(), a);
    }
}

#[test]
fn mixed_gf4_has_no_candidates() {
    assert!(build_candidate_list(&mixed_gf4(), DEFAULT_CANDIDATE_CAP)
        .unwrap()
        .is_empty());
}

#[test]
fn simulated_decoder_comparison() {
    let s = ladder_gf2();
    let decoders = [
        DecoderKind::Gcd(DecodeOptions::default()),
        DecoderKind::List(DecodeOptions::default()),
    ];
    let model = ChannelModel {
        kind: ChannelKind::RandomHammingWeight(1),
        master_seed: 42,
    };
    let mode = SimMode::Exhaustive {
        supports: (0..5).map(|i| vec![i]).collect(),
        messages: 20,
    };
    let report = simulate(&s, &model, &mode, &decoders).unwrap();
    for i in 0..4 {
        let row = &report.by_support[&vec![i]];
        assert_eq!(row[0].success, row[0].total());
    }
    let heavy = &report.by_support[&vec![4]];
    assert!(heavy[0].success < heavy[0].total());
    assert_eq!(heavy[1].success, heavy[1].total());

    let s7 = mixed_gf4();
    let supports = vec![
        vec![0, 1],
        vec![0, 2],
        vec![1, 2],
        vec![0],
        vec![1],
        vec![2],
    ];
    let mode = SimMode::Exhaustive {
        supports,
        messages: 16,
    };
    let report = simulate(&s7, &model, &mode, &decoders[..1]).unwrap();
    assert_eq!(report.totals[0].success, report.trials);
}

#[test]
fn monte_carlo_is_deterministic_across_thread_counts() {
    let s = mixed_gf4();
    let model = ChannelModel {
        kind: ChannelKind::RandomDegreeWeight(3),
        master_seed: 5,
    };
    let decoders = [DecoderKind::Gcd(DecodeOptions::default())];
    let mode = SimMode::MonteCarlo { trials: 2000 };
    let a = simulate(&s, &model, &mode, &decoders).unwrap();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let b = pool.install(|| simulate(&s, &model, &mode, &decoders).unwrap());
    assert_eq!(a.to_string(), b.to_string());
    assert_eq!(a.totals[0].total(), 2000);
}

#[test]
fn binary_field_spec_file_uses_default_reduction() {
    let s = parse_spec(r#"{"p": 2, "m": 4, "moduli": [[0,1],[1,1],[2,1]], "k": 1}"#).unwrap();
    assert_eq!(s.field(), &Field::binary(4).unwrap());
}
