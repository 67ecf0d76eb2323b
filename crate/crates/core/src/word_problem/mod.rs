//! Deciding equality of braid words.

mod handle;
mod laurent;
mod modp;

use std::fmt;
use std::str::FromStr;

pub use handle::{
    handle_reduce, handle_reduce_with_budget, is_handle_free, HandleReduction,
    DEFAULT_HANDLE_BUDGET,
};
pub use laurent::{burau_generator, reduced_burau, LaurentMatrix, LaurentPoly};
pub use modp::{
    burau_eval, colored_burau_eval, permute_tuple, ColoredBurauElement, ModMatrix,
    FINGERPRINT_PRIME,
};

use rand::Rng;

use crate::braid_core::BraidWord;
use crate::error::{Error, Result};
use crate::normal_form::GarsideNormalForm;

/// How to decide equality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Method {
    NormalForm,
    Handle,
    /// Reduced Burau evaluated at random points modulo a 62-bit prime.
    Fingerprint,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nf" | "normal_form" => Ok(Method::NormalForm),
            "handle" => Ok(Method::Handle),
            "burau" | "fingerprint" => Ok(Method::Fingerprint),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

/// Answer of an equality test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Equality {
    Equal,
    Unequal,
    /// Fingerprints agree at `points` random evaluation points mod `modulus`.
    ProbablyEqual {
        modulus: u64,
        points: usize,
    },
}

impl Equality {
    /// True for `Equal` and `ProbablyEqual`.
    pub fn holds(self) -> bool {
        !matches!(self, Equality::Unequal)
    }
}

impl fmt::Display for Equality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Equality::Equal => f.write_str("equal"),
            Equality::Unequal => f.write_str("unequal"),
            Equality::ProbablyEqual { modulus, points } => {
                write!(f, "probably equal ({points} points mod {modulus})")
            }
        }
    }
}

/// Options for [`equal_with`].
#[derive(Clone, Copy, Debug)]
pub struct EqualityOptions {
    pub handle_budget: u64,
    pub fingerprint_points: usize,
    pub seed: u64,
}

impl Default for EqualityOptions {
    fn default() -> Self {
        Self {
            handle_budget: DEFAULT_HANDLE_BUDGET,
            fingerprint_points: 2,
            seed: 0x5eed,
        }
    }
}

pub fn equal(w: &BraidWord, w2: &BraidWord, method: Method) -> Result<Equality> {
    equal_with(w, w2, method, &EqualityOptions::default())
}

pub fn equal_with(
    w: &BraidWord,
    w2: &BraidWord,
    method: Method,
    opts: &EqualityOptions,
) -> Result<Equality> {
    if w.strands() != w2.strands() {
        return Err(Error::StrandMismatch {
            left: w.strands(),
            right: w2.strands(),
        });
    }
    let verdict = |b: bool| {
        if b {
            Equality::Equal
        } else {
            Equality::Unequal
        }
    };
    match method {
        Method::NormalForm => Ok(verdict(
            GarsideNormalForm::of(w) == GarsideNormalForm::of(w2),
        )),
        Method::Handle => {
            let q = w.concat(&w2.inverse());
            let r = handle_reduce_with_budget(&q, opts.handle_budget)?;
            Ok(verdict(r.word.is_empty()))
        }
        Method::Fingerprint => {
            let p = FINGERPRINT_PRIME;
            let mut rng = crate::rng::stream(opts.seed, "fingerprint", 0);
            for _ in 0..opts.fingerprint_points {
                let t = rng.gen_range(2..p - 1);
                if burau_eval(w, t, p)? != burau_eval(w2, t, p)? {
                    return Ok(Equality::Unequal);
                }
            }
            Ok(Equality::ProbablyEqual {
                modulus: p,
                points: opts.fingerprint_points,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_relation_all_methods() {
        let a = BraidWord::new(3, vec![1, 2, 1]).unwrap();
        let b = BraidWord::new(3, vec![2, 1, 2]).unwrap();
        let c = BraidWord::new(3, vec![2]).unwrap();
        let d = BraidWord::new(3, vec![1]).unwrap();
        for m in [Method::NormalForm, Method::Handle, Method::Fingerprint] {
            assert!(equal(&a, &b, m).unwrap().holds());
            assert_eq!(equal(&c, &d, m).unwrap(), Equality::Unequal);
        }
        assert!(matches!(
            equal(&a, &b, Method::Fingerprint).unwrap(),
            Equality::ProbablyEqual { points: 2, .. }
        ));
    }

    #[test]
    fn strand_mismatch() {
        let a = BraidWord::identity(3);
        let b = BraidWord::identity(4);
        assert!(matches!(
            equal(&a, &b, Method::NormalForm),
            Err(Error::StrandMismatch { .. })
        ));
    }
}
