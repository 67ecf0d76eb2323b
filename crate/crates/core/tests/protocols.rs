use braidlab::braid_core::BraidWord;
use braidlab::normal_form::GarsideNormalForm;
use braidlab::protocols::*;
use braidlab::rng::{stream, KEYGEN};

fn w(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

#[test]
fn aag_sides_agree_and_transcripts_verify() {
    for dist in [Distribution::Uniform, Distribution::Markov { beta: 4.0 }] {
        let params = AagParams {
            dist,
            ..Default::default()
        };
        for seed in 0..50 {
            let inst = aag_keygen(&params, &mut stream(11, KEYGEN, seed)).unwrap();
            assert!(inst.verify().unwrap());
            assert_eq!(
                aag_shared(Side::Alice, &inst).unwrap(),
                aag_shared(Side::Bob, &inst).unwrap()
            );
        }
    }
}

#[test]
fn aag_key_is_the_commutator() {
    let gens = vec![w(4, &[1, 2]), w(4, &[-3, 1]), w(4, &[2, 2, -1])];
    let inst = AagInstance::from_secrets(gens, vec![1, -2, 3], vec![-3, 2]).unwrap();
    let (a, b) = (&inst.alice_secret.value, &inst.bob_secret.value);
    let k = GarsideNormalForm::of(&a.concat(b).concat(&a.inverse()).concat(&b.inverse()));
    assert_eq!(aag_shared(Side::Alice, &inst).unwrap(), k);
    assert_eq!(aag_shared(Side::Bob, &inst).unwrap(), k);
}

#[test]
fn aag_rejects_unknown_generator_indices() {
    let gens = vec![w(4, &[1])];
    assert!(AagInstance::from_secrets(gens.clone(), vec![2], vec![1]).is_err());
    assert!(AagInstance::from_secrets(gens, vec![0], vec![1]).is_err());
    assert!(AagInstance::from_secrets(vec![], vec![], vec![]).is_err());
}

#[test]
fn ko_sides_agree() {
    for seed in 0..50 {
        let inst = ko_keygen(&KoParams::default(), &mut stream(12, KEYGEN, seed)).unwrap();
        assert!(in_subgroup(&inst.alice_secret, &Constraint::Lower));
        assert!(in_subgroup(&inst.bob_secret, &Constraint::Upper));
        assert_eq!(ko_shared(Side::Alice, &inst), ko_shared(Side::Bob, &inst));
    }
}

#[test]
fn ko_rejects_secrets_outside_their_subgroups() {
    let p = w(8, &[1, 5, -4]);
    assert!(KoInstance::from_secrets(p.clone(), w(8, &[5]), w(8, &[6])).is_err());
    assert!(KoInstance::from_secrets(p.clone(), w(8, &[1]), w(8, &[2])).is_err());
    assert!(KoInstance::from_secrets(w(7, &[1]), w(7, &[1]), w(7, &[5])).is_err());
    assert!(KoInstance::from_secrets(p, w(8, &[1, -3]), w(8, &[5, 7])).is_ok());
}

#[test]
fn encryption_round_trips_and_needs_the_key() {
    let mut rng = stream(13, KEYGEN, 0);
    let p = draw_key(8, Distribution::Uniform, 20, &Constraint::All, &mut rng).unwrap();
    let s = draw_key(8, Distribution::Uniform, 10, &Constraint::Lower, &mut rng).unwrap();
    let pk = KoPublicKey::new(p, &s).unwrap();
    for len in [0, 1, 31, 32, 33, 200] {
        let msg: Vec<u8> = (0..len).map(|i| (i * 7 + 3) as u8).collect();
        let ct = ko_encrypt(&msg, &pk, Distribution::Uniform, 10, &mut rng).unwrap();
        assert_eq!(ko_decrypt(&s, &ct).unwrap(), msg);
        if len >= 16 {
            let wrong = w(8, &[1, 2, 3]);
            assert_ne!(ko_decrypt(&wrong, &ct).unwrap(), msg);
        }
    }
    let too_long = vec![0u8; MAX_MESSAGE_BYTES + 1];
    assert!(ko_encrypt(&too_long, &pk, Distribution::Uniform, 10, &mut rng).is_err());
    assert!(KoPublicKey::new(w(8, &[1]), &w(8, &[6])).is_err());
}

#[test]
fn sdg_accepts_only_the_secret() {
    let mut rng = stream(14, KEYGEN, 0);
    for _ in 0..30 {
        let (pk, s) = sdg_keygen(8, 20, 10, Distribution::Uniform, &mut rng).unwrap();
        let r = draw_key(8, Distribution::Uniform, 10, &Constraint::Upper, &mut rng).unwrap();
        assert!(
            sdg_authenticate(&pk, &Prover::Honest(s), &r, &mut rng)
                .unwrap()
                .accepted
        );
        let guess = draw_key(8, Distribution::Uniform, 10, &Constraint::Lower, &mut rng).unwrap();
        assert!(
            !sdg_authenticate(&pk, &Prover::Honest(guess), &r, &mut rng)
                .unwrap()
                .accepted
        );
        assert!(
            !sdg_authenticate(&pk, &Prover::Random, &r, &mut rng)
                .unwrap()
                .accepted
        );
    }
}

#[test]
fn shifted_conjugacy_is_self_distributive() {
    let mut rng = stream(15, KEYGEN, 0);
    for _ in 0..100 {
        let [x, y, z] = [0, 1, 2]
            .map(|_| draw_key(5, Distribution::Uniform, 4, &Constraint::All, &mut rng).unwrap());
        let lhs = shifted_star(&x, &shifted_star(&y, &z));
        let rhs = shifted_star(&shifted_star(&x, &y), &shifted_star(&x, &z));
        assert!(infinite_equal(&lhs, &rhs));
    }
}

#[test]
fn shifted_authentication() {
    let mut rng = stream(16, KEYGEN, 0);
    for _ in 0..30 {
        let [p, s, r] = [20, 10, 10]
            .map(|l| draw_key(8, Distribution::Uniform, l, &Constraint::All, &mut rng).unwrap());
        let p_prime = shifted_star(&s, &p);
        for c in [false, true] {
            assert!(
                dehornoy_auth(&p, &p_prime, &Prover::Honest(s.clone()), &r, c, &mut rng).accepted
            );
            assert!(!dehornoy_auth(&p, &p_prime, &Prover::Random, &r, c, &mut rng).accepted);
        }
    }
}

#[test]
fn hash_depends_only_on_the_braid() {
    let a = hash_braid(&w(3, &[1, 2, 1]), 48);
    let b = hash_braid(&w(3, &[2, 1, 2, 1, -1]), 48);
    assert_eq!(a, b);
    assert_eq!(a.len(), 48);
    assert_ne!(a, hash_braid(&w(3, &[1, 2]), 48));
    assert_eq!(
        &hash_braid(&w(3, &[1]), 48)[..16],
        &hash_braid(&w(3, &[1]), 16)[..]
    );
}

#[test]
fn markov_walk_favours_neighbours() {
    let beta = 5.0;
    let letters = alphabet(8, &Constraint::All).unwrap();
    let mut rng = stream(17, KEYGEN, 0);
    let walk = draw_letters(Distribution::Markov { beta }, &letters, 200_000, &mut rng);
    for i in [1u32, 4, 7] {
        let (mut from, mut near) = (0usize, 0usize);
        for pair in walk.windows(2) {
            if pair[0].unsigned_abs() == i {
                from += 1;
                near += usize::from(pair[1].unsigned_abs().abs_diff(i) == 1);
            }
        }
        let observed = near as f64 / from as f64;
        let expected = markov_neighbour_probability(8, &Constraint::All, beta, i).unwrap();
        assert!(
            (observed - expected).abs() < 0.02,
            "index {i}: {observed} vs {expected}"
        );
    }
    let uniform = draw_letters(Distribution::Uniform, &letters, 1000, &mut rng);
    assert!(uniform.iter().all(|l| letters.contains(l)));
    assert!("markov:0".parse::<Distribution>().is_err());
    assert_eq!(
        "markov:2.5".parse::<Distribution>().unwrap(),
        Distribution::Markov { beta: 2.5 }
    );
}

#[test]
fn protocol_rows_are_deterministic() {
    let params = ProtocolParams::default();
    for scheme in Scheme::ALL {
        let a = run_protocol(scheme, &params, 5, 3).unwrap();
        let b = run_protocol(scheme, &params, 5, 3).unwrap();
        assert_eq!(a.csv_row(false), b.csv_row(false));
        assert!(a.agree, "{scheme}");
        assert_eq!(a.csv_row(false), format!("3,{scheme},8,1,0"));
    }
}
