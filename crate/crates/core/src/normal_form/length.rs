use std::fmt;
use std::str::FromStr;

use crate::braid_core::BraidWord;
use crate::error::Error;

use super::{BklNormalForm, Garside, NormalForm};

fn length<G: Garside>(x: &NormalForm<G>) -> i64 {
    let g = x.structure();
    x.delta_power().abs() * g.delta_len() as i64 + x.simple_lengths().iter().sum::<usize>() as i64
}

fn reduced_length<G: Garside>(x: &NormalForm<G>) -> i64 {
    let full = length(x);
    let r = x.delta_power();
    if r >= 0 {
        return full;
    }
    let k = (-r as usize).min(x.canonical_length());
    full - 2 * x.simple_lengths()[..k].iter().sum::<usize>() as i64
}

/// `|r|·|Δ| + Σ|P_i|` in Artin letters.
pub fn garside_length(x: &NormalForm<super::Artin>) -> i64 {
    length(x)
}

/// Garside length with the first `min(-r, k)` factors cancelled against `Δ^r`.
pub fn reduced_garside_length(x: &NormalForm<super::Artin>) -> i64 {
    reduced_length(x)
}

/// `|j|·|δ| + Σ|A_i|` in band letters.
pub fn bkl_length(x: &BklNormalForm) -> i64 {
    length(x)
}

pub fn reduced_bkl_length(x: &BklNormalForm) -> i64 {
    reduced_length(x)
}

/// The length functions available to the length-based attacks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LengthFn {
    Garside,
    ReducedGarside,
    Bkl,
    ReducedBkl,
}

impl LengthFn {
    pub const ALL: [LengthFn; 4] = [
        LengthFn::Garside,
        LengthFn::ReducedGarside,
        LengthFn::Bkl,
        LengthFn::ReducedBkl,
    ];

    pub fn of_word(self, w: &BraidWord) -> i64 {
        match self {
            LengthFn::Garside => garside_length(&super::GarsideNormalForm::of(w)),
            LengthFn::ReducedGarside => reduced_garside_length(&super::GarsideNormalForm::of(w)),
            LengthFn::Bkl => bkl_length(&BklNormalForm::of_artin(w)),
            LengthFn::ReducedBkl => reduced_bkl_length(&BklNormalForm::of_artin(w)),
        }
    }

    /// Length of an element already in Garside normal form.
    pub fn of_normal_form(self, x: &super::GarsideNormalForm) -> i64 {
        match self {
            LengthFn::Garside => garside_length(x),
            LengthFn::ReducedGarside => reduced_garside_length(x),
            _ => self.of_word(&x.to_word()),
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            LengthFn::Garside => "gar",
            LengthFn::ReducedGarside => "redgar",
            LengthFn::Bkl => "bkl",
            LengthFn::ReducedBkl => "redbkl",
        }
    }
}

impl fmt::Display for LengthFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for LengthFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        LengthFn::ALL
            .into_iter()
            .find(|l| l.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown length function {s:?}")))
    }
}
