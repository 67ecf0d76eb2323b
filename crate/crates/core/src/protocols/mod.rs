//! Key exchange, encryption and authentication over braid groups.

mod aag;
mod auth;
mod hash;
mod keys;
mod ko;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;

pub use aag::{aag_keygen, aag_shared, AagInstance, AagParams, AagSecret};
pub use auth::{
    dehornoy_auth, infinite_equal, sdg_authenticate, sdg_keygen, shifted_star, Prover,
    SdgPublicKey, SdgTranscript, ShiftedTranscript, RESPONSE_BYTES,
};
pub use hash::{hash_braid, hash_normal_form, xor_bytes};
pub use keys::{
    alphabet, draw_key, draw_letters, markov_neighbour_probability, Constraint, Distribution,
};
pub use ko::{
    in_subgroup, ko_decrypt, ko_encrypt, ko_keygen, ko_shared, KoCiphertext, KoInstance, KoParams,
    KoPublicKey, MAX_MESSAGE_BYTES,
};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Alice,
    Bob,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    Aag,
    Ko,
    KoEnc,
    Sdg,
    Shifted,
}

impl Scheme {
    pub const ALL: [Scheme; 5] = [
        Scheme::Aag,
        Scheme::Ko,
        Scheme::KoEnc,
        Scheme::Sdg,
        Scheme::Shifted,
    ];
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Aag => "aag",
            Scheme::Ko => "ko",
            Scheme::KoEnc => "ko-enc",
            Scheme::Sdg => "sdg",
            Scheme::Shifted => "shifted",
        })
    }
}

impl FromStr for Scheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown scheme {s:?}")))
    }
}

/// Parameters shared by all schemes in a protocol run.
#[derive(Clone, Debug)]
pub struct ProtocolParams {
    pub n: usize,
    pub m: usize,
    pub generator_length: usize,
    pub public_length: usize,
    pub secret_length: usize,
    pub message_bytes: usize,
    pub dist: Distribution,
}

impl Default for ProtocolParams {
    fn default() -> Self {
        Self {
            n: 8,
            m: 4,
            generator_length: 5,
            public_length: 20,
            secret_length: 10,
            message_bytes: 32,
            dist: Distribution::Uniform,
        }
    }
}

/// Outcome of one seeded run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProtocolRun {
    pub seed: u64,
    pub scheme: Scheme,
    pub n: usize,
    /// Both sides agree, the message round-trips, or the honest prover is accepted.
    pub agree: bool,
    pub micros: u128,
}

pub const PROTOCOL_CSV_HEADER: &str = "seed,scheme,n,key_agree,time_us";

impl ProtocolRun {
    /// CSV row; the time column is 0 unless `timings` is set, keeping output byte-stable.
    pub fn csv_row(&self, timings: bool) -> String {
        format!(
            "{},{},{},{},{}",
            self.seed,
            self.scheme,
            self.n,
            u8::from(self.agree),
            if timings { self.micros } else { 0 }
        )
    }
}

/// Run one instance of `scheme` with randomness from `(master, seed)`.
pub fn run_protocol(
    scheme: Scheme,
    params: &ProtocolParams,
    master: u64,
    seed: u64,
) -> Result<ProtocolRun> {
    let mut rng = crate::rng::stream(master, crate::rng::KEYGEN, seed);
    let start = Instant::now();
    let n = params.n;
    let agree = match scheme {
        Scheme::Aag => {
            let p = AagParams {
                n,
                m: params.m,
                generator_length: params.generator_length,
                secret_length: params.secret_length,
                dist: params.dist,
            };
            let inst = aag_keygen(&p, &mut rng)?;
            aag_shared(Side::Alice, &inst)? == aag_shared(Side::Bob, &inst)?
        }
        Scheme::Ko => {
            let p = KoParams {
                n,
                public_length: params.public_length,
                secret_length: params.secret_length,
                dist: params.dist,
            };
            let inst = ko_keygen(&p, &mut rng)?;
            ko_shared(Side::Alice, &inst) == ko_shared(Side::Bob, &inst)
        }
        Scheme::KoEnc => {
            let p = draw_key(
                n,
                params.dist,
                params.public_length,
                &Constraint::All,
                &mut rng,
            )?;
            let s = draw_key(
                n,
                params.dist,
                params.secret_length,
                &Constraint::Lower,
                &mut rng,
            )?;
            let pk = KoPublicKey::new(p, &s)?;
            let msg: Vec<u8> = (0..params.message_bytes).map(|_| rng.gen()).collect();
            let ct = ko_encrypt(&msg, &pk, params.dist, params.secret_length, &mut rng)?;
            ko_decrypt(&s, &ct)? == msg
        }
        Scheme::Sdg => {
            let (pk, s) = sdg_keygen(
                n,
                params.public_length,
                params.secret_length,
                params.dist,
                &mut rng,
            )?;
            let r = draw_key(
                n,
                params.dist,
                params.secret_length,
                &Constraint::Upper,
                &mut rng,
            )?;
            sdg_authenticate(&pk, &Prover::Honest(s), &r, &mut rng)?.accepted
        }
        Scheme::Shifted => {
            let p = draw_key(
                n,
                params.dist,
                params.public_length,
                &Constraint::All,
                &mut rng,
            )?;
            let s = draw_key(
                n,
                params.dist,
                params.secret_length,
                &Constraint::All,
                &mut rng,
            )?;
            let r = draw_key(
                n,
                params.dist,
                params.secret_length,
                &Constraint::All,
                &mut rng,
            )?;
            let p_prime = shifted_star(&s, &p);
            let prover = Prover::Honest(s);
            [false, true]
                .into_iter()
                .all(|c| dehornoy_auth(&p, &p_prime, &prover, &r, c, &mut rng).accepted)
        }
    };
    Ok(ProtocolRun {
        seed,
        scheme,
        n,
        agree,
        micros: start.elapsed().as_micros(),
    })
}
