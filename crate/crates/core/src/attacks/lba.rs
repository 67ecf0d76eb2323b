use std::collections::HashSet;
use std::time::Instant;

use crate::braid_core::BraidWord;
use crate::normal_form::{GarsideNormalForm, LengthFn};

use super::instance::{AttackInstance, Candidate};
use super::AttackReport;

/// Hard cap on committed letters, whatever the search variant.
pub const DEFAULT_MAX_STEPS: usize = 100;

type Tuple = Vec<GarsideNormalForm>;

fn peel(t: &Tuple, c: &Candidate) -> Tuple {
    // x w x^{-1} = (x^{-1})^{-1} w (x^{-1})
    t.iter().map(|w| w.conjugate_by_word(&c.inverse)).collect()
}

fn total(t: &Tuple, lf: LengthFn) -> i64 {
    t.iter().map(|w| lf.of_normal_form(w)).sum()
}

fn key(t: &Tuple) -> String {
    t.iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join("|")
}

struct Search<'a> {
    inst: &'a AttackInstance,
    target: Tuple,
    trace: Vec<String>,
    start: Instant,
}

impl<'a> Search<'a> {
    fn new(inst: &'a AttackInstance) -> Self {
        Self {
            inst,
            target: inst
                .pairs
                .iter()
                .map(|(u, _)| GarsideNormalForm::of(u))
                .collect(),
            trace: Vec::new(),
            start: Instant::now(),
        }
    }

    fn initial(&self) -> Tuple {
        self.inst.pairs.iter().map(|(_, w)| w.clone()).collect()
    }

    fn record(&mut self, label: &str, len: i64) {
        let step = self.trace.len() + 1;
        self.trace.push(format!("{step} {label} {len}"));
    }

    /// `ṽ = x_k ⋯ x_1` from the peeled letters `x_1, ..., x_k`.
    fn assemble(&self, path: &[usize]) -> BraidWord {
        let mut v = BraidWord::identity(self.inst.n);
        for &i in path.iter().rev() {
            v = v.concat(&self.inst.candidates[i].word);
        }
        v
    }

    fn finish(self, found: Option<&[usize]>) -> AttackReport {
        let recovered = found.map(|p| self.assemble(p));
        // never trust the search: re-verify from the original pairs
        let success = recovered
            .as_ref()
            .is_some_and(|v| self.inst.conjugates_all(v));
        AttackReport {
            success,
            steps: self.trace.len(),
            trace: self.trace,
            recovered: recovered.filter(|_| success),
            micros: self.start.elapsed().as_micros(),
        }
    }
}

/// Greedy descent: peel the candidate that minimises total tuple length,
/// stopping on non-improvement or on reaching the `u`-tuple.
pub fn lba_basic(inst: &AttackInstance, lf: LengthFn, max_steps: usize) -> AttackReport {
    let mut s = Search::new(inst);
    let mut cur = s.initial();
    let mut len = total(&cur, lf);
    let mut path = Vec::new();
    loop {
        if cur == s.target {
            return s.finish(Some(&path));
        }
        if path.len() >= max_steps {
            break;
        }
        let mut best: Option<(i64, usize, Tuple)> = None;
        for (i, c) in inst.candidates.iter().enumerate() {
            let next = peel(&cur, c);
            let l = total(&next, lf);
            if best.as_ref().is_none_or(|b| l < b.0) {
                best = Some((l, i, next));
            }
        }
        match best {
            Some((l, i, next)) if l < len => {
                path.push(i);
                s.record(&inst.candidates[i].label, l);
                cur = next;
                len = l;
            }
            _ => break,
        }
    }
    s.finish(None)
}

/// Score every sequence of 1..=`depth` letters and commit the first letter
/// of the best one. Sequences never contain a letter next to its inverse.
pub fn lba_lookahead(
    inst: &AttackInstance,
    lf: LengthFn,
    depth: usize,
    max_steps: usize,
) -> AttackReport {
    let depth = depth.max(1);
    let mut s = Search::new(inst);
    let mut cur = s.initial();
    let mut best_ever = total(&cur, lf);
    let mut path: Vec<usize> = Vec::new();
    let inverse_of = inverse_table(&inst.candidates);
    loop {
        if cur == s.target {
            return s.finish(Some(&path));
        }
        if path.len() >= max_steps {
            break;
        }
        let mut best: Option<(i64, usize)> = None;
        let mut stack: Vec<(Tuple, usize, usize, usize)> = Vec::new();
        // (tuple, first letter, previous letter, depth used)
        for (i, c) in inst.candidates.iter().enumerate() {
            if path.last().is_some_and(|&p| inverse_of[p] == Some(i)) && depth > 1 {
                continue;
            }
            stack.push((peel(&cur, c), i, i, 1));
        }
        // evaluate in candidate order so ties keep the lowest first letter
        let mut frontier = stack;
        frontier.reverse();
        while let Some((t, first, prev, d)) = frontier.pop() {
            let l = total(&t, lf);
            if best.is_none_or(|b| l < b.0) {
                best = Some((l, first));
            }
            if d < depth {
                for (j, c) in inst.candidates.iter().enumerate().rev() {
                    if inverse_of[prev] == Some(j) {
                        continue;
                    }
                    frontier.push((peel(&t, c), first, j, d + 1));
                }
            }
        }
        match best {
            Some((l, i)) if l < best_ever => {
                cur = peel(&cur, &inst.candidates[i]);
                let now = total(&cur, lf);
                path.push(i);
                s.record(&inst.candidates[i].label, now);
                best_ever = best_ever.min(now);
            }
            _ => break,
        }
    }
    s.finish(None)
}

fn inverse_table(cands: &[Candidate]) -> Vec<Option<usize>> {
    let nfs: Vec<GarsideNormalForm> = cands
        .iter()
        .map(|c| GarsideNormalForm::of(&c.word))
        .collect();
    nfs.iter()
        .map(|x| {
            let inv = x.inverse();
            nfs.iter().position(|y| *y == inv)
        })
        .collect()
}

struct Node {
    len: i64,
    tuple: Tuple,
    path: Vec<usize>,
}

/// Beam search of width `memory` over conjugator prefixes ranked by tuple
/// length. With `dedup`, tuples seen before are never revisited.
pub fn lba_memory(
    inst: &AttackInstance,
    lf: LengthFn,
    memory: usize,
    dedup: bool,
    max_steps: usize,
) -> AttackReport {
    let memory = memory.max(1);
    let mut s = Search::new(inst);
    let start = s.initial();
    let mut seen: HashSet<String> = HashSet::new();
    if dedup {
        seen.insert(key(&start));
    }
    let mut best_ever = total(&start, lf);
    let mut beam = vec![Node {
        len: best_ever,
        tuple: start,
        path: Vec::new(),
    }];
    for step in 0.. {
        if let Some(hit) = beam.iter().find(|b| b.tuple == s.target) {
            let path = hit.path.clone();
            return s.finish(Some(&path));
        }
        if step >= max_steps {
            break;
        }
        let mut children: Vec<(i64, usize, usize, Tuple)> = Vec::new();
        for (rank, b) in beam.iter().enumerate() {
            for (i, c) in inst.candidates.iter().enumerate() {
                let next = peel(&b.tuple, c);
                if dedup && seen.contains(&key(&next)) {
                    continue;
                }
                children.push((total(&next, lf), rank, i, next));
            }
        }
        children.sort_by_key(|c| (c.0, c.1, c.2));
        if dedup {
            let mut kept = Vec::with_capacity(memory);
            for c in children {
                if kept.len() == memory {
                    break;
                }
                if seen.insert(key(&c.3)) {
                    kept.push(c);
                }
            }
            children = kept;
        } else {
            children.truncate(memory);
        }
        match children.first() {
            Some(c) if c.0 < best_ever => {
                best_ever = c.0;
                let label = inst.candidates[c.2].label.clone();
                s.record(&label, c.0);
            }
            _ => break,
        }
        beam = children
            .into_iter()
            .map(|(len, rank, i, tuple)| {
                let mut path = beam[rank].path.clone();
                path.push(i);
                Node { len, tuple, path }
            })
            .collect();
        debug_assert!(beam.windows(2).all(|w| w[0].len <= w[1].len));
    }
    s.finish(None)
}
