use rand::Rng;

use crate::braid_core::BraidWord;
use crate::error::{Error, Result};
use crate::normal_form::GarsideNormalForm;

use super::keys::{draw_key, draw_letters, Constraint, Distribution};
use super::Side;

#[derive(Clone, Debug)]
pub struct AagParams {
    pub n: usize,
    /// Number of public generators.
    pub m: usize,
    pub generator_length: usize,
    /// Number of generator letters in each secret.
    pub secret_length: usize,
    pub dist: Distribution,
}

impl Default for AagParams {
    fn default() -> Self {
        Self {
            n: 8,
            m: 4,
            generator_length: 5,
            secret_length: 5,
            dist: Distribution::Uniform,
        }
    }
}

/// A secret word over the public generators: letter `±k` is `g_k^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AagSecret {
    pub factors: Vec<i32>,
    pub value: BraidWord,
}

impl AagSecret {
    pub fn from_factors(generators: &[BraidWord], factors: Vec<i32>) -> Result<Self> {
        let value = multiply_factors(generators, &factors)?;
        Ok(Self { factors, value })
    }

    /// Multiply the retained factorization out again.
    pub fn remultiply(&self, generators: &[BraidWord]) -> Result<BraidWord> {
        multiply_factors(generators, &self.factors)
    }
}

fn multiply_factors(generators: &[BraidWord], factors: &[i32]) -> Result<BraidWord> {
    let n = generators.first().map_or(2, |g| g.strands());
    let mut w = BraidWord::identity(n);
    for &f in factors {
        let g = lookup(generators, f)?;
        w = w.concat(&if f > 0 { g.clone() } else { g.inverse() });
    }
    Ok(w)
}

fn lookup<T>(list: &[T], f: i32) -> Result<&T> {
    let k = f.unsigned_abs() as usize;
    if f == 0 || k > list.len() {
        return Err(Error::InvalidArgument(format!(
            "secret references generator {f} but only {} exist",
            list.len()
        )));
    }
    Ok(&list[k - 1])
}

#[derive(Clone, Debug)]
pub struct AagInstance {
    pub n: usize,
    pub generators: Vec<BraidWord>,
    pub alice_secret: AagSecret,
    pub bob_secret: AagSecret,
    /// `a g_i a^{-1}` in normal form.
    pub alice_transcript: Vec<GarsideNormalForm>,
    /// `b g_i b^{-1}` in normal form.
    pub bob_transcript: Vec<GarsideNormalForm>,
}

fn transcript(secret: &BraidWord, generators: &[BraidWord]) -> Vec<GarsideNormalForm> {
    let inv = secret.inverse();
    generators
        .iter()
        .map(|g| GarsideNormalForm::of(&secret.concat(g).concat(&inv)))
        .collect()
}

impl AagInstance {
    pub fn from_secrets(generators: Vec<BraidWord>, a: Vec<i32>, b: Vec<i32>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument(
                "at least one public generator is needed".into(),
            ));
        }
        let n = generators[0].strands();
        if let Some(g) = generators.iter().find(|g| g.strands() != n) {
            return Err(Error::StrandMismatch {
                left: n,
                right: g.strands(),
            });
        }
        let alice_secret = AagSecret::from_factors(&generators, a)?;
        let bob_secret = AagSecret::from_factors(&generators, b)?;
        Ok(Self {
            n,
            alice_transcript: transcript(&alice_secret.value, &generators),
            bob_transcript: transcript(&bob_secret.value, &generators),
            generators,
            alice_secret,
            bob_secret,
        })
    }

    /// Check that the secrets re-multiply and the transcripts are the stated conjugates.
    pub fn verify(&self) -> Result<bool> {
        let ok_a = self.alice_secret.remultiply(&self.generators)? == self.alice_secret.value;
        let ok_b = self.bob_secret.remultiply(&self.generators)? == self.bob_secret.value;
        Ok(ok_a
            && ok_b
            && self.alice_transcript == transcript(&self.alice_secret.value, &self.generators)
            && self.bob_transcript == transcript(&self.bob_secret.value, &self.generators))
    }
}

pub fn aag_keygen<R: Rng + ?Sized>(params: &AagParams, rng: &mut R) -> Result<AagInstance> {
    if params.m == 0 || params.secret_length == 0 {
        return Err(Error::InvalidArgument(
            "m and the secret length must be positive".into(),
        ));
    }
    let generators = (0..params.m)
        .map(|_| {
            draw_key(
                params.n,
                params.dist,
                params.generator_length,
                &Constraint::All,
                rng,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let indices: Vec<i32> = (1..=params.m as i32).flat_map(|k| [k, -k]).collect();
    let a = draw_letters(params.dist, &indices, params.secret_length, rng);
    let b = draw_letters(params.dist, &indices, params.secret_length, rng);
    AagInstance::from_secrets(generators, a, b)
}

/// `K = a b a^{-1} b^{-1}`, computed by one side from its own secret and
/// the other side's transcript.
pub fn aag_shared(side: Side, inst: &AagInstance) -> Result<GarsideNormalForm> {
    match side {
        Side::Alice => {
            // K = a · (b x_k^{-1} b^{-1}) ⋯ (b x_1^{-1} b^{-1})
            let mut k = GarsideNormalForm::of(&inst.alice_secret.value);
            for &f in inst.alice_secret.factors.iter().rev() {
                let t = lookup(&inst.bob_transcript, f)?;
                k = k.mul(&if f > 0 { t.inverse() } else { t.clone() });
            }
            Ok(k)
        }
        Side::Bob => {
            // K = (a y_1 a^{-1}) ⋯ (a y_l a^{-1}) · b^{-1}
            let mut k = GarsideNormalForm::of(&BraidWord::identity(inst.n));
            for &f in &inst.bob_secret.factors {
                let t = lookup(&inst.alice_transcript, f)?;
                k = k.mul(&if f > 0 { t.clone() } else { t.inverse() });
            }
            Ok(k.mul(&GarsideNormalForm::of(&inst.bob_secret.value.inverse())))
        }
    }
}
