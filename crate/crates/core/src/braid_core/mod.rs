//! Braid words, permutations and permutation braids.

mod perm;
mod simple;
mod word;

pub use perm::Permutation;
pub use simple::{enumerate_simples, PermutationBraid};
pub use word::{BandLetter, BandWord, BraidWord};

pub(crate) use perm::Images;

/// Expand a band word into Artin generators.
pub fn band_to_artin(b: &BandWord) -> BraidWord {
    b.to_artin()
}
