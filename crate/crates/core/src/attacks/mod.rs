//! Probabilistic attacks on conjugacy-based protocols.

mod instance;
mod lba;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;

pub use instance::{generate_instance, AttackInstance, Candidate, InstanceKind, InstanceParams};
pub use lba::{lba_basic, lba_lookahead, lba_memory, DEFAULT_MAX_STEPS};

use crate::braid_core::{enumerate_simples, BraidWord};
use crate::conjugacy::{send_to_sss_nf, ConjugacyWitness};
use crate::error::{Error, Result};
use crate::normal_form::{GarsideNormalForm, LengthFn};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttackReport {
    /// The recovered conjugator re-verified on every pair.
    pub success: bool,
    pub steps: usize,
    /// One `"step label length"` line per committed letter.
    pub trace: Vec<String>,
    pub recovered: Option<BraidWord>,
    pub micros: u128,
}

impl AttackReport {
    pub fn trace_text(&self) -> String {
        self.trace.join("\n")
    }
}

/// Add all conjugates `g_j^{-1} g_i g_j` and commutators `g_i^{-1} g_j^{-1} g_i g_j`
/// (`i ≠ j`), dropping trivial entries and duplicates by normal form.
pub fn peak_extend(generators: &[BraidWord]) -> Vec<BraidWord> {
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut add = |w: BraidWord| {
        let nf = GarsideNormalForm::of(&w);
        if !nf.is_identity() && seen.insert(nf) {
            out.push(w);
        }
    };
    for g in generators {
        add(g.clone());
    }
    for (i, gi) in generators.iter().enumerate() {
        for (j, gj) in generators.iter().enumerate() {
            if i != j {
                add(gj.inverse().concat(gi).concat(gj));
            }
        }
    }
    for (i, gi) in generators.iter().enumerate() {
        for (j, gj) in generators.iter().enumerate() {
            if i != j {
                add(gi.inverse().concat(&gj.inverse()).concat(gi).concat(gj));
            }
        }
    }
    out
}

/// Candidate letters extended by [`peak_extend`], each with its inverse.
pub fn peak_candidates(cands: &[Candidate]) -> Vec<Candidate> {
    let mut gens: Vec<BraidWord> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for c in cands {
        let nf = GarsideNormalForm::of(&c.word);
        if !seen.contains(&nf) && !seen.contains(&nf.inverse()) {
            seen.insert(nf);
            gens.push(c.word.clone());
        }
    }
    let ext = peak_extend(&gens);
    let mut out = cands.to_vec();
    let mut have: std::collections::HashSet<GarsideNormalForm> = cands
        .iter()
        .map(|c| GarsideNormalForm::of(&c.word))
        .collect();
    for (k, w) in ext.iter().enumerate().skip(gens.len()) {
        for (suffix, word) in [("", w.clone()), ("^-1", w.inverse())] {
            if have.insert(GarsideNormalForm::of(&word)) {
                out.push(Candidate::new(
                    format!("p{}{suffix}", k - gens.len() + 1),
                    word,
                ));
            }
        }
    }
    out
}

/// Send both sides of the first pair to their super summit sets and look
/// for one simple `P` with `P^{-1} x̃ P = x̃'`. Refuses when `n` exceeds `cap`.
pub fn hs_attack(inst: &AttackInstance, cap: usize) -> Result<AttackReport> {
    let start = Instant::now();
    let mut simples = enumerate_simples(inst.n, cap)?;
    simples.sort_by_key(|s| s.len());
    let (u, w) = &inst.pairs[0];
    let a = summit_representative(&GarsideNormalForm::of(u))?;
    let b = summit_representative(w)?;
    let mut tried = 0;
    let mut recovered = None;
    if a.element.inf() == b.element.inf() && a.element.sup() == b.element.sup() {
        let b_inv = b.conjugator.inverse();
        for p in &simples {
            tried += 1;
            if a.element.conjugate_by_simple(p) == b.element {
                let v = a.conjugator.concat(&p.word()).concat(&b_inv);
                if inst.conjugates_all(&v) {
                    recovered = Some(v);
                    break;
                }
            }
        }
    }
    Ok(AttackReport {
        success: recovered.is_some(),
        steps: tried,
        trace: Vec::new(),
        recovered,
        micros: start.elapsed().as_micros(),
    })
}

/// `x` itself when it already lies in its super summit set.
fn summit_representative(x: &GarsideNormalForm) -> Result<ConjugacyWitness> {
    let wit = send_to_sss_nf(x)?;
    if (wit.element.inf(), wit.element.sup()) == (x.inf(), x.sup()) {
        Ok(ConjugacyWitness::trivial(x.clone()))
    } else {
        Ok(wit)
    }
}

/// Baseline: guess `len` random candidate letters and check.
pub fn random_guess<R: Rng + ?Sized>(
    inst: &AttackInstance,
    len: usize,
    rng: &mut R,
) -> AttackReport {
    let start = Instant::now();
    let mut v = BraidWord::identity(inst.n);
    if !inst.candidates.is_empty() {
        for _ in 0..len {
            let c = &inst.candidates[rng.gen_range(0..inst.candidates.len())];
            v = v.concat(&c.word);
        }
    }
    let success = inst.conjugates_all(&v);
    AttackReport {
        success,
        steps: len,
        trace: Vec::new(),
        recovered: success.then_some(v),
        micros: start.elapsed().as_micros(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AttackKind {
    Lba,
    LbaMem,
    LbaLook,
    Hs,
    Random,
}

impl AttackKind {
    pub const ALL: [AttackKind; 5] = [
        AttackKind::Lba,
        AttackKind::LbaMem,
        AttackKind::LbaLook,
        AttackKind::Hs,
        AttackKind::Random,
    ];
}

impl fmt::Display for AttackKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AttackKind::Lba => "lba",
            AttackKind::LbaMem => "lba-mem",
            AttackKind::LbaLook => "lba-look",
            AttackKind::Hs => "hs",
            AttackKind::Random => "random",
        })
    }
}

impl FromStr for AttackKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AttackKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown attack {s:?}")))
    }
}

/// One attack configuration in a benchmark.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttackConfig {
    pub kind: AttackKind,
    pub length: LengthFn,
    pub memory: usize,
    pub depth: usize,
    pub dedup: bool,
    pub peaks: bool,
    pub max_steps: usize,
    /// Largest `n` for the simple-element search of `hs`.
    pub cap: usize,
}

impl Default for AttackConfig {
    fn default() -> Self {
        Self {
            kind: AttackKind::Lba,
            length: LengthFn::ReducedGarside,
            memory: 1,
            depth: 1,
            dedup: false,
            peaks: false,
            max_steps: DEFAULT_MAX_STEPS,
            cap: 8,
        }
    }
}

impl AttackConfig {
    pub fn run<R: Rng + ?Sized>(&self, inst: &AttackInstance, rng: &mut R) -> Result<AttackReport> {
        let extended;
        let inst = if self.peaks {
            extended = inst
                .clone()
                .with_candidates(peak_candidates(&inst.candidates));
            &extended
        } else {
            inst
        };
        Ok(match self.kind {
            AttackKind::Lba => lba_basic(inst, self.length, self.max_steps),
            AttackKind::LbaMem => {
                lba_memory(inst, self.length, self.memory, self.dedup, self.max_steps)
            }
            AttackKind::LbaLook => lba_lookahead(inst, self.length, self.depth, self.max_steps),
            AttackKind::Hs => hs_attack(inst, self.cap)?,
            AttackKind::Random => random_guess(inst, inst.ground_truth.len(), rng),
        })
    }
}

pub const BENCH_CSV_HEADER: &str =
    "seed,attack,length,memory,depth,dedup,peaks,success,steps,time_us";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub seed: u64,
    pub config: AttackConfig,
    pub success: bool,
    pub steps: usize,
    pub micros: u128,
}

impl BenchRow {
    /// CSV row; the time column is 0 unless `timings` is set, keeping output byte-stable.
    pub fn csv_row(&self, timings: bool) -> String {
        let c = &self.config;
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.seed,
            c.kind,
            c.length.id(),
            c.memory,
            c.depth,
            u8::from(c.dedup),
            u8::from(c.peaks),
            u8::from(self.success),
            self.steps,
            if timings { self.micros } else { 0 }
        )
    }
}

/// Run every configuration on the instance drawn for each seed.
/// Seeds are split over `jobs` threads; rows come back in seed order.
pub fn bench(
    params: &InstanceParams,
    configs: &[AttackConfig],
    seeds: &[u64],
    master: u64,
    jobs: usize,
) -> Result<Vec<BenchRow>> {
    let run_seed = |seed: u64| -> Result<Vec<BenchRow>> {
        let inst = generate_instance(
            params,
            &mut crate::rng::stream(master, crate::rng::ATTACK, seed),
        )?;
        configs
            .iter()
            .map(|c| {
                let mut rng = crate::rng::stream(master, "attack-guess", seed);
                let r = c.run(&inst, &mut rng)?;
                Ok(BenchRow {
                    seed,
                    config: c.clone(),
                    success: r.success,
                    steps: r.steps,
                    micros: r.micros,
                })
            })
            .collect()
    };
    let jobs = jobs.max(1).min(seeds.len().max(1));
    let chunk = seeds.len().div_ceil(jobs).max(1);
    let results: Vec<Result<Vec<BenchRow>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = seeds
            .chunks(chunk)
            .map(|part| {
                let run_seed = &run_seed;
                scope.spawn(move || {
                    part.iter()
                        .map(|&s| run_seed(s))
                        .collect::<Result<Vec<_>>>()
                        .map(|v| v.concat())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("bench worker panicked"))
            .collect()
    });
    let mut rows = Vec::new();
    for r in results {
        rows.extend(r?);
    }
    Ok(rows)
}

pub fn bench_csv(rows: &[BenchRow], timings: bool) -> String {
    let mut out = String::from(BENCH_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_row(timings));
        out.push('\n');
    }
    out
}

/// Success count per configuration, parsed back from bench CSV text.
pub fn success_counts(csv: &str) -> Result<Vec<(String, usize, usize)>> {
    let mut order: Vec<String> = Vec::new();
    let mut counts: std::collections::HashMap<String, (usize, usize)> = Default::default();
    for line in csv.lines().skip(1).filter(|l| !l.is_empty()) {
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != 10 {
            return Err(Error::Parse(format!(
                "bench row with {} columns: {line}",
                cols.len()
            )));
        }
        let id = cols[1..7].join(",");
        let ok = match cols[7] {
            "1" => 1,
            "0" => 0,
            other => return Err(Error::Parse(format!("bad success flag {other:?}"))),
        };
        let e = counts.entry(id.clone()).or_insert_with(|| {
            order.push(id.clone());
            (0, 0)
        });
        e.0 += ok;
        e.1 += 1;
    }
    Ok(order
        .into_iter()
        .map(|id| {
            let (s, t) = counts[&id];
            (id, s, t)
        })
        .collect())
}
