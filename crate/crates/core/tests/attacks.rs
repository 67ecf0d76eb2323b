use braidlab::attacks::*;
use braidlab::braid_core::BraidWord;
use braidlab::conjugacy::send_to_sss;
use braidlab::normal_form::{GarsideNormalForm, LengthFn};
use braidlab::protocols::{ko_keygen, Constraint, KoParams};
use braidlab::rng::{stream, ATTACK, KEYGEN};
use braidlab::selftest::peak_pair;

const LF: LengthFn = LengthFn::ReducedGarside;

fn w(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

fn artin_instance(us: &[&[i32]], v: &[i32]) -> AttackInstance {
    let n = 6;
    AttackInstance::new(
        InstanceKind::MultipleSimultaneous,
        us.iter().map(|u| w(n, u)).collect(),
        w(n, v),
        Candidate::artin(n, &Constraint::All).unwrap(),
    )
    .unwrap()
}

fn assert_sound(inst: &AttackInstance, r: &AttackReport) {
    if r.success {
        assert!(inst.conjugates_all(r.recovered.as_ref().unwrap()));
    } else {
        assert!(r.recovered.is_none());
    }
}

#[test]
fn trivial_conjugator_needs_no_steps() {
    let inst = artin_instance(&[&[1, 2, -3, 4, 4, 5], &[2, 2, 1]], &[]);
    let reports = [
        lba_basic(&inst, LF, DEFAULT_MAX_STEPS),
        lba_lookahead(&inst, LF, 3, DEFAULT_MAX_STEPS),
        lba_memory(&inst, LF, 8, true, DEFAULT_MAX_STEPS),
        hs_attack(&inst, 8).unwrap(),
    ];
    for r in &reports[..3] {
        assert!(r.success);
        assert_eq!(r.steps, 0);
    }
    assert!(reports[3].success);
    assert_eq!(reports[3].steps, 1, "the identity is tried first");
}

#[test]
fn single_generator_is_peeled_in_one_step() {
    let inst = artin_instance(&[&[1, 2, 3, 4, 5, 1, 2, 3], &[5, 4, 3, 2, 2]], &[3]);
    let r = lba_basic(&inst, LF, DEFAULT_MAX_STEPS);
    assert!(r.success);
    assert_eq!(r.steps, 1);
    assert_eq!(r.trace[0].split(' ').nth(1), Some("3"));
    assert_sound(&inst, &r);
}

#[test]
fn degenerate_variants_replay_basic() {
    let params = InstanceParams::default();
    for seed in 0..15 {
        let inst = generate_instance(&params, &mut stream(9, ATTACK, seed)).unwrap();
        assert!(inst.verify());
        let basic = lba_basic(&inst, LF, DEFAULT_MAX_STEPS);
        let look = lba_lookahead(&inst, LF, 1, DEFAULT_MAX_STEPS);
        let mem = lba_memory(&inst, LF, 1, false, DEFAULT_MAX_STEPS);
        assert_eq!(basic.trace, look.trace, "seed {seed}");
        assert_eq!(basic.trace, mem.trace, "seed {seed}");
        assert_eq!((basic.success, basic.steps), (mem.success, mem.steps));
        for r in [&basic, &look, &mem] {
            assert_sound(&inst, r);
        }
    }
}

#[test]
fn peak_extension_counts() {
    let g = w(5, &[1, 2]);
    assert_eq!(peak_extend(std::slice::from_ref(&g)), vec![g.clone()]);
    let gens = vec![g, w(5, &[3, -4]), w(5, &[2, 2])];
    let ext = peak_extend(&gens);
    assert!(ext.len() <= 3 + 3 * 2 * 2);
    assert_eq!(&ext[..3], &gens[..]);
    let nfs: std::collections::HashSet<_> = ext.iter().map(GarsideNormalForm::of).collect();
    assert_eq!(nfs.len(), ext.len());
    assert!(nfs.iter().all(|x| !x.is_identity()));
    // far-apart generators commute: their commutators vanish
    let far = peak_extend(&[w(5, &[1]), w(5, &[4])]);
    assert_eq!(far.len(), 2);
}

#[test]
fn peak_pair_commutators() {
    let (a1, a2) = peak_pair();
    let ext = peak_extend(&[a1, a2]);
    let nfs: Vec<_> = ext.iter().map(GarsideNormalForm::of).collect();
    assert!(nfs.contains(&GarsideNormalForm::of(&w(74, &[7, -8]))));
    assert!(nfs.contains(&GarsideNormalForm::of(&w(74, &[8, -7]))));
}

#[test]
fn commutator_peak_defeats_greedy_descent() {
    let (a1, a2) = peak_pair();
    let v = a1.inverse().concat(&a2.inverse()).concat(&a1).concat(&a2);
    let us = vec![w(74, &[7, 8, 6, 9, 7]), w(74, &[8, -7, 6, 6, 9])];
    let inst = AttackInstance::new(
        InstanceKind::MultipleSimultaneous,
        us,
        v,
        Candidate::from_generators(&[a1, a2]),
    )
    .unwrap();
    assert!(inst.verify());
    let lf = LengthFn::Garside;
    let greedy = lba_basic(&inst, lf, DEFAULT_MAX_STEPS);
    assert!(!greedy.success);
    assert_eq!(greedy.steps, 0, "every single letter climbs the peak");
    let deep = lba_lookahead(&inst, lf, 4, DEFAULT_MAX_STEPS);
    assert!(deep.success);
    assert_sound(&inst, &deep);
    let with_peaks = inst
        .clone()
        .with_candidates(peak_candidates(&inst.candidates));
    let r = lba_basic(&with_peaks, lf, DEFAULT_MAX_STEPS);
    assert!(r.success);
    assert_eq!(r.steps, 1);
    assert_sound(&with_peaks, &r);
}

#[test]
fn hs_recovers_simple_conjugators_of_summit_elements() {
    let x = send_to_sss(&w(5, &[1, 2, 3, 4, 1, 2, -3, 1, 2, 2]))
        .unwrap()
        .element
        .to_word();
    for p in braidlab::braid_core::enumerate_simples(5, 5)
        .unwrap()
        .iter()
        .step_by(7)
    {
        let inst = AttackInstance::new(
            InstanceKind::SingleConjugacy,
            vec![x.clone()],
            p.word(),
            vec![],
        )
        .unwrap();
        let r = hs_attack(&inst, 8).unwrap();
        let (xn, y) = (
            GarsideNormalForm::of(&x),
            GarsideNormalForm::of(&x).conjugate_by_simple(p),
        );
        if (y.inf(), y.sup()) == (xn.inf(), xn.sup()) {
            assert!(r.success, "{p}");
        }
        assert_sound(&inst, &r);
    }
}

#[test]
fn hs_on_ko_instances_is_sound() {
    let mut wins = 0;
    for seed in 0..10 {
        let ko = ko_keygen(&KoParams::default(), &mut stream(21, KEYGEN, seed)).unwrap();
        let inst = AttackInstance::from_ko(&ko).unwrap();
        assert!(inst.verify());
        let r = hs_attack(&inst, 8).unwrap();
        assert_sound(&inst, &r);
        wins += usize::from(r.success);
    }
    println!("hs on ko-derived instances: {wins}/10");
    let big = AttackInstance::new(
        InstanceKind::SingleConjugacy,
        vec![w(9, &[1])],
        w(9, &[2]),
        vec![],
    )
    .unwrap();
    assert!(hs_attack(&big, 8).is_err());
}

#[test]
fn aag_instances_use_generator_letters() {
    let aag =
        braidlab::protocols::aag_keygen(&Default::default(), &mut stream(22, KEYGEN, 0)).unwrap();
    let inst = AttackInstance::from_aag(&aag).unwrap();
    assert!(inst.verify());
    assert_eq!(inst.pairs.len(), 4);
    assert_eq!(inst.candidates.len(), 8);
    let r = lba_memory(&inst, LF, 4, true, DEFAULT_MAX_STEPS);
    assert_sound(&inst, &r);
}

#[test]
fn bench_is_deterministic_and_headed() {
    let params = InstanceParams::default();
    let cfg = [AttackConfig {
        kind: AttackKind::LbaMem,
        memory: 2,
        ..Default::default()
    }];
    assert_eq!(
        bench_csv(&bench(&params, &cfg, &[], 1, 1).unwrap(), false),
        format!("{BENCH_CSV_HEADER}\n")
    );
    let a = bench_csv(&bench(&params, &cfg, &[4, 4, 7], 1, 1).unwrap(), false);
    let b = bench_csv(&bench(&params, &cfg, &[4, 4, 7], 1, 3).unwrap(), false);
    assert_eq!(a, b);
    let lines: Vec<&str> = a.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[1], lines[2]);
    assert!(lines[1].starts_with("4,lba-mem,redgar,2,1,0,0,"));
}

#[test]
fn paired_trends_on_shared_seeds() {
    let params = InstanceParams::default();
    let base = AttackConfig::default();
    let configs = vec![
        AttackConfig {
            kind: AttackKind::Random,
            ..base.clone()
        },
        base.clone(),
        AttackConfig {
            kind: AttackKind::LbaLook,
            depth: 2,
            ..base.clone()
        },
        AttackConfig {
            kind: AttackKind::LbaMem,
            memory: 4,
            ..base.clone()
        },
        AttackConfig {
            kind: AttackKind::LbaMem,
            memory: 4,
            dedup: true,
            ..base.clone()
        },
    ];
    let seeds: Vec<u64> = (0..100).collect();
    let csv = bench_csv(&bench(&params, &configs, &seeds, 2024, 1).unwrap(), false);
    let counts: Vec<usize> = success_counts(&csv)
        .unwrap()
        .into_iter()
        .map(|c| c.1)
        .collect();
    println!("random, basic, depth 2, memory 4, memory 4 + dedup: {counts:?}");
    assert!(counts[1] > counts[0], "basic beats random guessing");
    assert!(counts[2] >= counts[1], "depth 2 at least depth 1");
    assert!(counts[4] >= counts[3], "dedup at least no dedup");
}

#[test]
fn length_functions_parse_by_id() {
    for lf in LengthFn::ALL {
        assert_eq!(lf.id().parse::<LengthFn>().unwrap(), lf);
    }
    for kind in AttackKind::ALL {
        assert_eq!(kind.to_string().parse::<AttackKind>().unwrap(), kind);
    }
    assert!("greedy".parse::<AttackKind>().is_err());
}
