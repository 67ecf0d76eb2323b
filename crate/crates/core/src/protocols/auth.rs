use rand::Rng;

use crate::braid_core::BraidWord;
use crate::error::{Error, Result};
use crate::normal_form::GarsideNormalForm;

use super::hash::hash_normal_form;
use super::keys::{draw_key, Constraint, Distribution};

/// Bytes of hash used for authentication responses.
pub const RESPONSE_BYTES: usize = 32;

/// What the party being authenticated actually does.
#[derive(Clone, Debug)]
pub enum Prover {
    /// Follows the protocol with the given secret (possibly a wrong one).
    Honest(BraidWord),
    /// Answers with a random braid in place of the computed response.
    Random,
}

/// Public key `(b, b')` with `b' = s b s^{-1}` for a lower-subgroup `s`.
#[derive(Clone, Debug)]
pub struct SdgPublicKey {
    pub b: BraidWord,
    pub b_prime: GarsideNormalForm,
}

impl SdgPublicKey {
    pub fn new(b: BraidWord, s: &BraidWord) -> Result<Self> {
        if !super::ko::in_subgroup(s, &Constraint::Lower) {
            return Err(Error::InvalidArgument(format!(
                "secret {s} leaves the lower subgroup"
            )));
        }
        let b_prime = GarsideNormalForm::of(&s.concat(&b).concat(&s.inverse()));
        Ok(Self { b, b_prime })
    }
}

pub fn sdg_keygen<R: Rng + ?Sized>(
    n: usize,
    public_length: usize,
    secret_length: usize,
    dist: Distribution,
    rng: &mut R,
) -> Result<(SdgPublicKey, BraidWord)> {
    let b = draw_key(n, dist, public_length, &Constraint::All, rng)?;
    let s = draw_key(n, dist, secret_length, &Constraint::Lower, rng)?;
    Ok((SdgPublicKey::new(b, &s)?, s))
}

#[derive(Clone, Debug)]
pub struct SdgTranscript {
    /// `x = r b r^{-1}`.
    pub challenge: GarsideNormalForm,
    pub response: Vec<u8>,
    pub accepted: bool,
}

/// One challenge-response round with Bob's challenge secret `r`.
pub fn sdg_authenticate<R: Rng + ?Sized>(
    pk: &SdgPublicKey,
    prover: &Prover,
    r: &BraidWord,
    rng: &mut R,
) -> Result<SdgTranscript> {
    if !super::ko::in_subgroup(r, &Constraint::Upper) {
        return Err(Error::InvalidArgument(format!(
            "challenge {r} leaves the upper subgroup"
        )));
    }
    let x = GarsideNormalForm::of(&r.concat(&pk.b).concat(&r.inverse()));
    let response = match prover {
        Prover::Honest(s) => {
            let y = s.concat(&x.to_word()).concat(&s.inverse());
            hash_normal_form(&GarsideNormalForm::of(&y), RESPONSE_BYTES)
        }
        Prover::Random => {
            let n = pk.b.strands();
            let w = draw_key(
                n,
                Distribution::Uniform,
                2 * pk.b.len().max(1),
                &Constraint::All,
                rng,
            )?;
            hash_normal_form(&GarsideNormalForm::of(&w), RESPONSE_BYTES)
        }
    };
    let expected = GarsideNormalForm::of(&r.concat(&pk.b_prime.to_word()).concat(&r.inverse()));
    let accepted = response == hash_normal_form(&expected, RESPONSE_BYTES);
    Ok(SdgTranscript {
        challenge: x,
        response,
        accepted,
    })
}

/// `x ∗ y = x · d(y) · σ_1 · d(x)^{-1}` in `B_∞`.
pub fn shifted_star(x: &BraidWord, y: &BraidWord) -> BraidWord {
    let dx = x.shift_up();
    let dy = y.shift_up();
    let mut letters: Vec<i32> = x.letters().to_vec();
    letters.extend_from_slice(dy.letters());
    letters.push(1);
    letters.extend_from_slice(dx.inverse().letters());
    BraidWord::infinite(letters)
}

/// Equality in `B_∞`: compare after embedding both in the larger `B_n`.
pub fn infinite_equal(a: &BraidWord, b: &BraidWord) -> bool {
    let n = a.strands().max(b.strands());
    let lift = |w: &BraidWord| w.with_strands(n).expect("growing never fails");
    GarsideNormalForm::of(&lift(a)) == GarsideNormalForm::of(&lift(b))
}

#[derive(Clone, Debug)]
pub struct ShiftedTranscript {
    pub x: BraidWord,
    pub x_prime: BraidWord,
    pub challenge: bool,
    pub response: BraidWord,
    pub accepted: bool,
}

/// One round of the Fiat-Shamir scheme over `(B_∞, ∗)`, with public key
/// `(p, p')`, commitment secret `r` and challenge bit `c`.
pub fn dehornoy_auth<R: Rng + ?Sized>(
    p: &BraidWord,
    p_prime: &BraidWord,
    prover: &Prover,
    r: &BraidWord,
    c: bool,
    rng: &mut R,
) -> ShiftedTranscript {
    let x = shifted_star(r, p);
    let x_prime = shifted_star(r, p_prime);
    let response = match (prover, c) {
        (Prover::Honest(_), false) => r.clone(),
        (Prover::Honest(s), true) => shifted_star(r, s),
        (Prover::Random, _) => {
            let n = r.strands().max(3);
            let len = r.len().max(4);
            let letters = (0..len)
                .map(|_| {
                    let i = rng.gen_range(1..n as i32);
                    if rng.gen() {
                        i
                    } else {
                        -i
                    }
                })
                .collect();
            BraidWord::infinite(letters)
        }
    };
    let accepted = if c {
        infinite_equal(&x_prime, &shifted_star(&response, &x))
    } else {
        infinite_equal(&x, &shifted_star(&response, p))
            && infinite_equal(&x_prime, &shifted_star(&response, p_prime))
    };
    ShiftedTranscript {
        x,
        x_prime,
        challenge: c,
        response,
        accepted,
    }
}
