use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::braid_core::BraidWord;
use crate::error::{Error, Result};
use crate::normal_form::GarsideNormalForm;
use crate::protocols::{
    alphabet, draw_key, draw_letters, AagInstance, Constraint, Distribution, KoInstance,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceKind {
    SingleConjugacy,
    MultipleSimultaneous,
    KoDerived,
}

impl InstanceKind {
    pub const ALL: [InstanceKind; 3] = [
        InstanceKind::SingleConjugacy,
        InstanceKind::MultipleSimultaneous,
        InstanceKind::KoDerived,
    ];
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InstanceKind::SingleConjugacy => "single",
            InstanceKind::MultipleSimultaneous => "multiple",
            InstanceKind::KoDerived => "ko",
        })
    }
}

impl FromStr for InstanceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        InstanceKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown instance kind {s:?}")))
    }
}

/// A letter the attacker may peel off the conjugator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub label: String,
    pub word: BraidWord,
    pub(crate) inverse: BraidWord,
}

impl Candidate {
    pub fn new(label: impl Into<String>, word: BraidWord) -> Self {
        let inverse = word.inverse();
        Self {
            label: label.into(),
            word,
            inverse,
        }
    }

    /// `σ_1, σ_1^{-1}, σ_2, ...` restricted to `c`.
    pub fn artin(n: usize, c: &Constraint) -> Result<Vec<Candidate>> {
        alphabet(n, c)?
            .into_iter()
            .map(|l| Ok(Candidate::new(l.to_string(), BraidWord::new(n, vec![l])?)))
            .collect()
    }

    /// `g_1, g_1^{-1}, g_2, ...` for explicit generator words.
    pub fn from_generators(generators: &[BraidWord]) -> Vec<Candidate> {
        generators
            .iter()
            .enumerate()
            .flat_map(|(k, g)| {
                [
                    Candidate::new(format!("g{}", k + 1), g.clone()),
                    Candidate::new(format!("g{}^-1", k + 1), g.inverse()),
                ]
            })
            .collect()
    }
}

/// Pairs `(u_i, w_i)` with `w_i = v^{-1} u_i v` for a hidden `v`.
#[derive(Clone, Debug)]
pub struct AttackInstance {
    pub kind: InstanceKind,
    pub n: usize,
    pub pairs: Vec<(BraidWord, GarsideNormalForm)>,
    /// Letters the conjugator is built from.
    pub candidates: Vec<Candidate>,
    /// Kept for scoring only; the attacks never read it.
    pub ground_truth: BraidWord,
}

impl AttackInstance {
    pub fn new(
        kind: InstanceKind,
        us: Vec<BraidWord>,
        v: BraidWord,
        candidates: Vec<Candidate>,
    ) -> Result<Self> {
        let n = v.strands();
        if us.is_empty() {
            return Err(Error::InvalidArgument(
                "an instance needs at least one pair".into(),
            ));
        }
        if let Some(u) = us.iter().find(|u| u.strands() != n) {
            return Err(Error::StrandMismatch {
                left: n,
                right: u.strands(),
            });
        }
        if let Some(c) = candidates.iter().find(|c| c.word.strands() != n) {
            return Err(Error::StrandMismatch {
                left: n,
                right: c.word.strands(),
            });
        }
        let pairs = us
            .into_iter()
            .map(|u| {
                let w = GarsideNormalForm::of(&u).conjugate_by_word(&v);
                (u, w)
            })
            .collect();
        Ok(Self {
            kind,
            n,
            pairs,
            candidates,
            ground_truth: v,
        })
    }

    /// Does `v` conjugate every `u_i` to `w_i`?
    pub fn conjugates_all(&self, v: &BraidWord) -> bool {
        v.strands() == self.n
            && self
                .pairs
                .iter()
                .all(|(u, w)| GarsideNormalForm::of(&v.inverse().concat(u).concat(v)) == *w)
    }

    pub fn verify(&self) -> bool {
        self.conjugates_all(&self.ground_truth)
    }

    /// Replace the candidate set, e.g. with a peak extension.
    pub fn with_candidates(mut self, candidates: Vec<Candidate>) -> Self {
        self.candidates = candidates;
        self
    }

    /// From Ko key exchange: Alice's `(p, p')` with `v = s^{-1}`, `s` in the lower subgroup.
    pub fn from_ko(ko: &KoInstance) -> Result<Self> {
        Self::new(
            InstanceKind::KoDerived,
            vec![ko.public.clone()],
            ko.alice_secret.inverse(),
            Candidate::artin(ko.n, &Constraint::Lower)?,
        )
    }

    /// From AAG: Alice's transcript `a g_i a^{-1}` with `v = a^{-1}`, candidates the public generators.
    pub fn from_aag(aag: &AagInstance) -> Result<Self> {
        Self::new(
            InstanceKind::MultipleSimultaneous,
            aag.generators.clone(),
            aag.alice_secret.value.inverse(),
            Candidate::from_generators(&aag.generators),
        )
    }
}

/// Size of a generated instance.
#[derive(Clone, Debug, PartialEq)]
pub struct InstanceParams {
    pub kind: InstanceKind,
    pub n: usize,
    /// Number of pairs for multiple-simultaneous instances.
    pub m: usize,
    pub u_length: usize,
    pub v_length: usize,
    pub dist: Distribution,
}

impl Default for InstanceParams {
    fn default() -> Self {
        Self {
            kind: InstanceKind::MultipleSimultaneous,
            n: 8,
            m: 4,
            u_length: 10,
            v_length: 10,
            dist: Distribution::Uniform,
        }
    }
}

/// Draw one instance. The conjugator is resampled until freely reduced, so
/// its length is the number of letters an attack has to peel.
pub fn generate_instance<R: Rng + ?Sized>(
    p: &InstanceParams,
    rng: &mut R,
) -> Result<AttackInstance> {
    let n = p.n;
    let (count, constraint) = match p.kind {
        InstanceKind::SingleConjugacy => (1, Constraint::All),
        InstanceKind::MultipleSimultaneous => (p.m.max(1), Constraint::All),
        InstanceKind::KoDerived => (1, Constraint::Lower),
    };
    let us = (0..count)
        .map(|_| draw_key(n, p.dist, p.u_length, &Constraint::All, rng))
        .collect::<Result<Vec<_>>>()?;
    let letters = alphabet(n, &constraint)?;
    let v = loop {
        let w = draw_letters(p.dist, &letters, p.v_length, rng);
        if w.windows(2).all(|pair| pair[0] != -pair[1]) {
            break BraidWord::new(n, w)?;
        }
    };
    AttackInstance::new(p.kind, us, v, Candidate::artin(n, &constraint)?)
}
