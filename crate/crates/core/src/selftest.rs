//! Reproducible end-to-end checks, one per numbered criterion.
//!
//! Each check returns an [`Outcome`]; a check passes only when its
//! assertion holds and it finishes inside its pinned time limit.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::Rng;

use crate::attacks::{
    bench, bench_csv, generate_instance, lba_basic, lba_lookahead, lba_memory, peak_extend,
    success_counts, AttackConfig, AttackKind, InstanceParams, DEFAULT_MAX_STEPS,
};
use crate::braid_core::{enumerate_simples, BandLetter, BandWord, BraidWord, PermutationBraid};
use crate::conjugacy::{
    compute_summit_graph, conjugacy_decide, conjugacy_search, cycle, minimal_conjugators, send_to,
    ConjugatorStrategy, SummitKind, SummitOptions, SummitSet,
};
use crate::error::Result;
use crate::normal_form::{
    enumerate_canonical_factors, Artin, BklNormalForm, GarsideNormalForm, LengthFn,
};
use crate::protocols::{
    dehornoy_auth, draw_key, infinite_equal, run_protocol, sdg_authenticate, sdg_keygen,
    shifted_star, Constraint, Distribution, ProtocolParams, Prover, Scheme,
};
use crate::rng::stream;
use crate::word_problem::{colored_burau_eval, handle_reduce, permute_tuple, reduced_burau};

/// Master seed for every randomised check.
pub const SELFTEST_SEED: u64 = 2024;

#[derive(Clone, Copy, Debug)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub limit: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub const CRITERIA: [Criterion; 12] = [
    Criterion {
        id: 1,
        title: "normal form of s1 s3^-1 s2 in B4",
        limit: Duration::from_millis(1),
    },
    Criterion {
        id: 2,
        title: "USS and SSS of the B4 rigid example",
        limit: secs(10),
    },
    Criterion {
        id: 3,
        title: "sliding circuits of delta_n, n = 4..10",
        limit: secs(60),
    },
    Criterion {
        id: 4,
        title: "super summit set of Delta s1^2 in B4",
        limit: secs(1),
    },
    Criterion {
        id: 5,
        title: "ultra summit set of s1, n = 3..8",
        limit: secs(10),
    },
    Criterion {
        id: 6,
        title: "Catalan and factorial simple counts",
        limit: secs(30),
    },
    Criterion {
        id: 7,
        title: "handle reduction examples",
        limit: secs(1),
    },
    Criterion {
        id: 8,
        title: "relations and representation laws",
        limit: secs(60),
    },
    Criterion {
        id: 9,
        title: "protocol correctness",
        limit: secs(300),
    },
    Criterion {
        id: 10,
        title: "length-based attack suite",
        limit: secs(900),
    },
    Criterion {
        id: 11,
        title: "conjugacy solver ground truth in B5",
        limit: secs(300),
    },
    Criterion {
        id: 12,
        title: "oracle equivalences over all simples",
        limit: secs(120),
    },
];

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    /// The check's own verdict, before the time limit is applied.
    pub holds: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.holds && self.elapsed <= self.limit
    }

    /// `criterion  N PASS|FAIL  title  (elapsed / limit)  detail`
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {}  {}  ({:.3?} / {:?})  {}",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed,
            self.limit,
            self.detail
        )
    }
}

/// Run criterion `id` (1 to 12).
pub fn run(id: u8) -> Option<Outcome> {
    let c = CRITERIA.iter().find(|c| c.id == id)?;
    let start = Instant::now();
    let result = match id {
        1 => c1(),
        2 => c2(),
        3 => c3(),
        4 => c4(),
        5 => c5(),
        6 => c6(),
        7 => c7(),
        8 => c8(),
        9 => c9(),
        10 => c10(),
        11 => c11(),
        12 => c12(),
        _ => unreachable!(),
    };
    let elapsed = start.elapsed();
    let (holds, detail) = match result {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    Some(Outcome {
        id,
        title: c.title,
        holds,
        detail,
        elapsed,
        limit: c.limit,
    })
}

pub fn run_all() -> Vec<Outcome> {
    CRITERIA.iter().filter_map(|c| run(c.id)).collect()
}

type Check = Result<(bool, String)>;

fn w(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).expect("valid literal word")
}

fn simple(n: usize, letters: &[i32]) -> PermutationBraid {
    PermutationBraid::from_word(&w(n, letters)).expect("literal is simple")
}

fn nf_of_factors(n: usize, p: i64, factors: &[&[i32]]) -> GarsideNormalForm {
    GarsideNormalForm::from_parts(
        Artin::new(n),
        p,
        factors.iter().map(|f| simple(n, f)).collect(),
    )
}

fn c1() -> Check {
    let x = GarsideNormalForm::of(&w(4, &[1, -3, 2]));
    let want = nf_of_factors(4, -1, &[&[2, 1, 3, 2, 1], &[1, 2]]);
    Ok((x == want, format!("got {x}")))
}

fn c2() -> Check {
    let x = w(4, &[1, 3, 2, 1, 1, 2, 2, 1, 3]);
    let uss = compute_summit_graph(&x, SummitKind::Uss)?;
    let sss = compute_summit_graph(&x, SummitKind::Sss)?;
    let o1 = [
        nf_of_factors(4, 0, &[&[1, 3, 2, 1], &[1, 2], &[2, 1, 3]]),
        nf_of_factors(4, 0, &[&[1, 2], &[2, 1, 3], &[1, 3, 2, 1]]),
        nf_of_factors(4, 0, &[&[2, 1, 3], &[1, 3, 2, 1], &[1, 2]]),
    ];
    let o2 = [
        nf_of_factors(4, 0, &[&[3, 1, 2, 3], &[3, 2], &[2, 3, 1]]),
        nf_of_factors(4, 0, &[&[3, 2], &[2, 3, 1], &[3, 1, 2, 3]]),
        nf_of_factors(4, 0, &[&[2, 3, 1], &[3, 1, 2, 3], &[3, 2]]),
    ];
    let listed: HashSet<_> = o1.iter().chain(&o2).cloned().collect();
    let orbits =
        (0..3).all(|k| cycle(&o1[k]) == o1[(k + 1) % 3] && cycle(&o2[k]) == o2[(k + 1) % 3]);
    let tau = (0..3).all(|k| o1[k].tau_power(1) == o2[k]);
    let ok = uss.len() == 6 && sss.len() == 22 && uss.element_set() == listed && orbits && tau;
    Ok((
        ok,
        format!(
            "|USS| = {}, |SSS| = {}, orbits match listing: {}, O2 = tau(O1): {}",
            uss.len(),
            sss.len(),
            uss.element_set() == listed && orbits,
            tau
        ),
    ))
}

fn c3() -> Check {
    let mut sizes = Vec::new();
    let mut ok = true;
    for n in 4..=10 {
        let g = compute_summit_graph(&BraidWord::small_delta(n), SummitKind::Sc)?;
        ok &= g.len() == (1 << (n - 2)) - 2;
        sizes.push(format!("{n}:{}", g.len()));
    }
    Ok((ok, format!("sizes {}", sizes.join(" "))))
}

fn c4() -> Check {
    let x = w(4, &[1, 2, 1, 3, 2, 1, 1, 1]);
    let g = compute_summit_graph(&x, SummitKind::Sss)?;
    let want: HashSet<_> = [nf_of_factors(4, 1, &[&[1, 3]])].into_iter().collect();
    Ok((g.element_set() == want, format!("|SSS| = {}", g.len())))
}

fn c5() -> Check {
    let mut ok = true;
    for n in 3..=8 {
        let g = compute_summit_graph(&w(n, &[1]), SummitKind::Uss)?;
        let want: HashSet<_> = (1..n as i32)
            .map(|i| GarsideNormalForm::of(&w(n, &[i])))
            .collect();
        ok &= g.element_set() == want;
    }
    Ok((ok, "n = 3..8".into()))
}

fn c6() -> Check {
    let catalan: Vec<usize> = (3..=5)
        .map(|n| enumerate_canonical_factors(n, n).map(|v| v.len()))
        .collect::<Result<_>>()?;
    let simples: Vec<usize> = (2..=6)
        .map(|n| enumerate_simples(n, n).map(|v| v.len()))
        .collect::<Result<_>>()?;
    let ok = catalan == [5, 14, 42] && simples == [2, 6, 24, 120, 720];
    Ok((
        ok,
        format!("canonical factors {catalan:?}, simples {simples:?}"),
    ))
}

/// The pair of long-range conjugator letters whose commutator collapses.
pub fn peak_pair() -> (BraidWord, BraidWord) {
    let a1 = w(74, &[-39, 12, 7, -3, -1, 70, 25, -24]);
    let a2 = w(74, &[42, -56, 8, -18, 19, 73, -33, -22]);
    (a1, a2)
}

fn c7() -> Check {
    let first = handle_reduce(&w(3, &[1, 2, 1, -2, -1, -2]))?;
    let (a1, a2) = peak_pair();
    let comm = a1.inverse().concat(&a2.inverse()).concat(&a1).concat(&a2);
    let reduced = handle_reduce(&comm)?;
    let got = GarsideNormalForm::of(&reduced);
    let stated = GarsideNormalForm::of(&w(74, &[7, -8]));
    let swapped = GarsideNormalForm::of(&w(74, &[8, -7]));
    let second = got == stated;
    let detail = format!(
        "first word -> {:?}; a1^-1 a2^-1 a1 a2 -> {} letters, equals s7 s8^-1: {second}, equals s8 s7^-1: {}",
        first.letters(),
        reduced.len(),
        got == swapped
    );
    Ok((first.is_empty() && second, detail))
}

fn band(n: usize, t: usize, s: usize) -> BandWord {
    BandWord::new(
        n,
        vec![BandLetter {
            t,
            s,
            inverse: false,
        }],
    )
    .expect("valid band letter")
}

fn c8() -> Check {
    let mut failures = Vec::new();
    let nf = GarsideNormalForm::of;
    let band_nf = BklNormalForm::of_band;
    for n in 3..=7 {
        let m = n as i32;
        for i in 1..m {
            for j in 1..m {
                if (i - j).abs() >= 2 && nf(&w(n, &[i, j])) != nf(&w(n, &[j, i])) {
                    failures.push(format!("far commutation {i},{j} in B{n}"));
                }
            }
            if i + 1 < m && nf(&w(n, &[i, i + 1, i])) != nf(&w(n, &[i + 1, i, i + 1])) {
                failures.push(format!("braid relation {i} in B{n}"));
            }
        }
        for t in 1..=n {
            for s in 1..t {
                for r in 1..s {
                    let ts_sr = band(n, t, s).concat(&band(n, s, r));
                    let tr_ts = band(n, t, r).concat(&band(n, t, s));
                    let sr_tr = band(n, s, r).concat(&band(n, t, r));
                    if band_nf(&ts_sr) != band_nf(&tr_ts) || band_nf(&tr_ts) != band_nf(&sr_tr) {
                        failures.push(format!("band triangle {t},{s},{r} in B{n}"));
                    }
                }
                for q in 1..=n {
                    for p in 1..q {
                        let apart = (t as i64 - q as i64)
                            * (t as i64 - p as i64)
                            * (s as i64 - q as i64)
                            * (s as i64 - p as i64)
                            > 0;
                        if apart {
                            let a = band(n, t, s).concat(&band(n, q, p));
                            let b = band(n, q, p).concat(&band(n, t, s));
                            if band_nf(&a) != band_nf(&b) {
                                failures.push(format!("band commutation {t}{s},{q}{p} in B{n}"));
                            }
                        }
                    }
                }
            }
        }
    }
    let mut rng = stream(SELFTEST_SEED, "selftest-relations", 0);
    for k in 0..20 {
        let n = 3 + k % 4;
        let u = BraidWord::random(n, 6, &mut rng);
        let v = BraidWord::random(n, 6, &mut rng);
        if reduced_burau(&u.concat(&v)) != reduced_burau(&u).mul(&reduced_burau(&v)) {
            failures.push(format!("burau multiplicativity on {u} * {v}"));
        }
    }
    for n in 3..=6 {
        for i in 1..n as i32 - 1 {
            if reduced_burau(&w(n, &[i, i + 1, i])) != reduced_burau(&w(n, &[i + 1, i, i + 1])) {
                failures.push(format!("burau braid relation {i} in B{n}"));
            }
        }
    }
    let p = crate::word_problem::FINGERPRINT_PRIME;
    for _ in 0..5 {
        let n = 5;
        let taus: Vec<u64> = (0..n).map(|_| rng.gen_range(2..p)).collect();
        let u = BraidWord::random(n, 8, &mut rng);
        let v = BraidWord::random(n, 8, &mut rng);
        let (pu, mu) = colored_burau_eval(&u, &permute_tuple(&v.perm_of().inverse(), &taus), p)?;
        let (pv, mv) = colored_burau_eval(&v, &taus, p)?;
        let (puv, muv) = colored_burau_eval(&u.concat(&v), &taus, p)?;
        if puv != pu.then(&pv) || muv != mu.mul(&mv) {
            failures.push(format!("colored burau law on {u} * {v}"));
        }
    }
    for _ in 0..500 {
        let n = 4;
        let x = BraidWord::random(n, 3, &mut rng);
        let y = BraidWord::random(n, 3, &mut rng);
        let z = BraidWord::random(n, 3, &mut rng);
        let lhs = shifted_star(&x, &shifted_star(&y, &z));
        let rhs = shifted_star(&shifted_star(&x, &y), &shifted_star(&x, &z));
        if !infinite_equal(&lhs, &rhs) {
            failures.push(format!("LD law on {x}, {y}, {z}"));
        }
    }
    let detail = if failures.is_empty() {
        "zero failures".to_string()
    } else {
        format!("{} failures, first: {}", failures.len(), failures[0])
    };
    Ok((failures.is_empty(), detail))
}

fn c9() -> Check {
    let params = ProtocolParams::default();
    let mut counts = Vec::new();
    let mut ok = true;
    for scheme in Scheme::ALL {
        let agree = (0..1000u64)
            .map(|s| run_protocol(scheme, &params, SELFTEST_SEED, s).map(|r| r.agree))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|&a| a)
            .count();
        ok &= agree == 1000;
        counts.push(format!("{scheme} {agree}/1000"));
    }
    let mut rng = stream(SELFTEST_SEED, "selftest-impostor", 0);
    let mut sdg_rejected = 0;
    let mut shifted_rejected = 0;
    for _ in 0..1000 {
        let (pk, _) = sdg_keygen(8, 20, 10, Distribution::Uniform, &mut rng)?;
        let r = draw_key(8, Distribution::Uniform, 10, &Constraint::Upper, &mut rng)?;
        sdg_rejected +=
            usize::from(!sdg_authenticate(&pk, &Prover::Random, &r, &mut rng)?.accepted);
        let p = draw_key(8, Distribution::Uniform, 20, &Constraint::All, &mut rng)?;
        let s = draw_key(8, Distribution::Uniform, 10, &Constraint::All, &mut rng)?;
        let r = draw_key(8, Distribution::Uniform, 10, &Constraint::All, &mut rng)?;
        let c = rng.gen();
        let t = dehornoy_auth(&p, &shifted_star(&s, &p), &Prover::Random, &r, c, &mut rng);
        shifted_rejected += usize::from(!t.accepted);
    }
    ok &= sdg_rejected == 1000 && shifted_rejected == 1000;
    counts.push(format!(
        "random responses rejected: sdg {sdg_rejected}/1000, shifted {shifted_rejected}/1000"
    ));
    Ok((ok, counts.join(", ")))
}

fn c10() -> Check {
    let params = InstanceParams::default();
    let lf = LengthFn::ReducedGarside;
    let mut identical = 0;
    let mut unverified = 0;
    for seed in 0..50u64 {
        let inst = generate_instance(
            &params,
            &mut stream(SELFTEST_SEED, crate::rng::ATTACK, seed),
        )?;
        let basic = lba_basic(&inst, lf, DEFAULT_MAX_STEPS);
        let look = lba_lookahead(&inst, lf, 1, DEFAULT_MAX_STEPS);
        let mem = lba_memory(&inst, lf, 1, false, DEFAULT_MAX_STEPS);
        if basic.trace_text() == look.trace_text()
            && basic.trace_text() == mem.trace_text()
            && basic.success == look.success
            && basic.success == mem.success
        {
            identical += 1;
        }
        for r in [&basic, &look, &mem] {
            if r.success && !r.recovered.as_ref().is_some_and(|v| inst.conjugates_all(v)) {
                unverified += 1;
            }
        }
    }
    let configs: Vec<AttackConfig> = [4, 16, 64]
        .into_iter()
        .map(|memory| AttackConfig {
            kind: AttackKind::LbaMem,
            length: lf,
            memory,
            ..Default::default()
        })
        .collect();
    let seeds: Vec<u64> = (0..200).collect();
    let rows = bench(&params, &configs, &seeds, SELFTEST_SEED, 1)?;
    let counts = success_counts(&bench_csv(&rows, false))?;
    let rates: Vec<usize> = counts.iter().map(|c| c.1).collect();
    let monotone = rates.len() == 3 && rates.windows(2).all(|p| p[0] <= p[1]);
    let (a1, a2) = peak_pair();
    let peak = GarsideNormalForm::of(&w(74, &[7, -8]));
    let has_peak = peak_extend(&[a1, a2])
        .iter()
        .any(|g| GarsideNormalForm::of(g) == peak);
    let ok = identical == 50 && unverified == 0 && monotone && has_peak;
    Ok((
        ok,
        format!(
            "identical traces {identical}/50, unverified successes {unverified}, memory 4/16/64 successes {rates:?} of 200, peak found: {has_peak}"
        ),
    ))
}

fn c11() -> Check {
    let mut rng = stream(SELFTEST_SEED, "selftest-conjugacy", 0);
    let n = 5;
    let mut found = 0;
    let mut rejected = 0;
    let mut total = 0;
    while total < 200 {
        let x = BraidWord::random(n, 8, &mut rng);
        if GarsideNormalForm::of(&x).canonical_length() > 4 {
            continue;
        }
        total += 1;
        let v = BraidWord::random(n, 6, &mut rng);
        let y = v.inverse().concat(&x).concat(&v);
        if let Some(c) = conjugacy_search(&x, &y, SummitKind::Uss)? {
            if GarsideNormalForm::of(&c.inverse().concat(&x).concat(&c))
                == GarsideNormalForm::of(&y)
            {
                found += 1;
            }
        }
        let mut z = BraidWord::random(n, 8, &mut rng);
        while z.exponent_sum() == x.exponent_sum() {
            z = BraidWord::random(n, 8, &mut rng);
        }
        if !conjugacy_decide(&x, &z, SummitKind::Uss)? {
            rejected += 1;
        }
    }
    Ok((
        found == 200 && rejected == 200,
        format!(
            "conjugate pairs solved {found}/200, distinct exponent sums rejected {rejected}/200"
        ),
    ))
}

/// Minimal non-trivial simples conjugating `y` back into `set`, by exhaustion.
fn brute_minimal(
    y: &GarsideNormalForm,
    set: &SummitSet,
    simples: &[PermutationBraid],
) -> Vec<PermutationBraid> {
    let inside: Vec<&PermutationBraid> = simples
        .iter()
        .filter(|s| !s.is_identity() && set.contains(&y.conjugate_by_simple(s)))
        .collect();
    let mut out: Vec<PermutationBraid> = inside
        .iter()
        .filter(|s| !inside.iter().any(|t| t != *s && t.is_prefix_of(s)))
        .map(|s| (*s).clone())
        .collect();
    out.sort();
    out
}

fn c12() -> Check {
    let mut failures = Vec::new();
    for n in [4, 5] {
        let simples = enumerate_simples(n, n)?;
        for s in &simples {
            let gens: Vec<PermutationBraid> =
                (1..n).map(|i| PermutationBraid::generator(n, i)).collect();
            let start: Vec<usize> = (1..n).filter(|&i| gens[i - 1].is_prefix_of(s)).collect();
            let finish: Vec<usize> = (1..n)
                .filter(|&i| gens[i - 1].right_divide(s).is_some())
                .collect();
            if s.starting_set() != start || s.finishing_set() != finish {
                failures.push(format!("descent sets of {s}"));
            }
        }
    }
    let simples = enumerate_simples(4, 4)?;
    for a in &simples {
        for b in &simples {
            let common: Vec<&PermutationBraid> = simples
                .iter()
                .filter(|c| c.is_prefix_of(a) && c.is_prefix_of(b))
                .collect();
            let top = common
                .iter()
                .max_by_key(|c| c.len())
                .expect("identity is common");
            let unique = common.iter().all(|c| c.is_prefix_of(top));
            if !unique || a.meet(b) != **top {
                failures.push(format!("meet of {a} and {b}"));
            }
        }
    }
    let mut rng = stream(SELFTEST_SEED, "selftest-oracle", 0);
    let mut seeds = vec![
        w(4, &[1, 3, 2, 1, 1, 2, 2, 1, 3]),
        w(4, &[1, 2, 1, 3, 2, 1, 1, 1]),
    ];
    seeds.extend((0..12).map(|_| BraidWord::random(4, 7, &mut rng)));
    let opts = SummitOptions::default();
    let mut compared = 0;
    for x in &seeds {
        for kind in SummitKind::ALL {
            let y = send_to(&GarsideNormalForm::of(x), kind, &opts)?.element;
            let set = SummitSet::of(kind, &y);
            let want = brute_minimal(&y, &set, &simples);
            for strategy in [ConjugatorStrategy::Fast, ConjugatorStrategy::BruteForce] {
                let got = minimal_conjugators(
                    &y,
                    kind,
                    &SummitOptions {
                        strategy,
                        ..opts.clone()
                    },
                )?;
                compared += 1;
                let mut sorted = got.clone();
                sorted.sort();
                if sorted != want {
                    failures.push(format!("{kind} minimal conjugators of {y} ({strategy:?})"));
                }
            }
        }
    }
    let detail = if failures.is_empty() {
        format!("all agree ({compared} conjugator sets)")
    } else {
        format!("{} mismatches, first: {}", failures.len(), failures[0])
    };
    Ok((failures.is_empty(), detail))
}
