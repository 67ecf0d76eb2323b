use rand::Rng;

use crate::braid_core::BraidWord;
use crate::error::{Error, Result};
use crate::normal_form::GarsideNormalForm;

use super::hash::{hash_normal_form, xor_bytes};
use super::keys::{alphabet, draw_key, Constraint, Distribution};
use super::Side;

/// Longest message `ko_encrypt` accepts, in bytes.
pub const MAX_MESSAGE_BYTES: usize = 1 << 20;

#[derive(Clone, Debug)]
pub struct KoParams {
    pub n: usize,
    pub public_length: usize,
    pub secret_length: usize,
    pub dist: Distribution,
}

impl Default for KoParams {
    fn default() -> Self {
        Self {
            n: 8,
            public_length: 20,
            secret_length: 10,
            dist: Distribution::Uniform,
        }
    }
}

/// True when every letter of `w` lies in the alphabet of `c`.
pub fn in_subgroup(w: &BraidWord, c: &Constraint) -> bool {
    match alphabet(w.strands(), c) {
        Ok(a) => w.letters().iter().all(|l| a.contains(l)),
        Err(_) => w.is_empty(),
    }
}

fn require(w: &BraidWord, c: &Constraint, who: &str) -> Result<()> {
    if in_subgroup(w, c) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{who} secret {w} leaves its subgroup {c:?}"
        )))
    }
}

fn conj(s: &BraidWord, p: &BraidWord) -> GarsideNormalForm {
    GarsideNormalForm::of(&s.concat(p).concat(&s.inverse()))
}

#[derive(Clone, Debug)]
pub struct KoInstance {
    pub n: usize,
    pub public: BraidWord,
    /// `s`, in the lower subgroup.
    pub alice_secret: BraidWord,
    /// `r`, in the upper subgroup.
    pub bob_secret: BraidWord,
    /// `p' = s p s^{-1}`.
    pub alice_transcript: GarsideNormalForm,
    /// `p'' = r p r^{-1}`.
    pub bob_transcript: GarsideNormalForm,
}

impl KoInstance {
    pub fn from_secrets(public: BraidWord, s: BraidWord, r: BraidWord) -> Result<Self> {
        let n = public.strands();
        for w in [&s, &r] {
            if w.strands() != n {
                return Err(Error::StrandMismatch {
                    left: n,
                    right: w.strands(),
                });
            }
        }
        if !n.is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!("n must be even, got {n}")));
        }
        require(&s, &Constraint::Lower, "Alice's")?;
        require(&r, &Constraint::Upper, "Bob's")?;
        Ok(Self {
            n,
            alice_transcript: conj(&s, &public),
            bob_transcript: conj(&r, &public),
            public,
            alice_secret: s,
            bob_secret: r,
        })
    }
}

pub fn ko_keygen<R: Rng + ?Sized>(params: &KoParams, rng: &mut R) -> Result<KoInstance> {
    let n = params.n;
    let p = draw_key(n, params.dist, params.public_length, &Constraint::All, rng)?;
    let s = draw_key(
        n,
        params.dist,
        params.secret_length,
        &Constraint::Lower,
        rng,
    )?;
    let r = draw_key(
        n,
        params.dist,
        params.secret_length,
        &Constraint::Upper,
        rng,
    )?;
    KoInstance::from_secrets(p, s, r)
}

/// `K = s r p r^{-1} s^{-1}`: Alice computes `s p'' s^{-1}`, Bob `r p' r^{-1}`.
pub fn ko_shared(side: Side, inst: &KoInstance) -> GarsideNormalForm {
    let (secret, other) = match side {
        Side::Alice => (&inst.alice_secret, &inst.bob_transcript),
        Side::Bob => (&inst.bob_secret, &inst.alice_transcript),
    };
    conj(secret, &other.to_word())
}

/// Alice's public key `(p, p')`.
#[derive(Clone, Debug)]
pub struct KoPublicKey {
    pub p: BraidWord,
    pub p_prime: GarsideNormalForm,
}

impl KoPublicKey {
    pub fn new(p: BraidWord, s: &BraidWord) -> Result<Self> {
        require(s, &Constraint::Lower, "Alice's")?;
        Ok(Self {
            p_prime: conj(s, &p),
            p,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoCiphertext {
    /// `p'' = r p r^{-1}`.
    pub p_double_prime: GarsideNormalForm,
    pub c: Vec<u8>,
}

/// `c = m ⊕ h(r p' r^{-1})` for a fresh `r` from the upper subgroup.
pub fn ko_encrypt<R: Rng + ?Sized>(
    message: &[u8],
    pk: &KoPublicKey,
    dist: Distribution,
    secret_length: usize,
    rng: &mut R,
) -> Result<KoCiphertext> {
    if message.len() > MAX_MESSAGE_BYTES {
        return Err(Error::InvalidArgument(format!(
            "message of {} bytes exceeds the {MAX_MESSAGE_BYTES}-byte hash stream",
            message.len()
        )));
    }
    let r = draw_key(pk.p.strands(), dist, secret_length, &Constraint::Upper, rng)?;
    let key = conj(&r, &pk.p_prime.to_word());
    Ok(KoCiphertext {
        p_double_prime: conj(&r, &pk.p),
        c: xor_bytes(message, &hash_normal_form(&key, message.len())),
    })
}

/// `m = c ⊕ h(s p'' s^{-1})`.
pub fn ko_decrypt(s: &BraidWord, ct: &KoCiphertext) -> Result<Vec<u8>> {
    if ct.c.len() > MAX_MESSAGE_BYTES {
        return Err(Error::InvalidArgument(format!(
            "ciphertext of {} bytes exceeds the {MAX_MESSAGE_BYTES}-byte hash stream",
            ct.c.len()
        )));
    }
    if ct.p_double_prime.strands() != s.strands() {
        return Err(Error::StrandMismatch {
            left: s.strands(),
            right: ct.p_double_prime.strands(),
        });
    }
    let key = conj(s, &ct.p_double_prime.to_word());
    Ok(xor_bytes(&ct.c, &hash_normal_form(&key, ct.c.len())))
}
