use std::fmt;
use std::str::FromStr;

use rand::distributions::{Distribution as _, WeightedIndex};
use rand::Rng;

use crate::braid_core::BraidWord;
use crate::error::{Error, Result};

/// How successive letters of a key are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub enum Distribution {
    /// Independent uniform letters.
    #[default]
    Uniform,
    /// After a letter of index `i`, letters of index `i ± 1` get weight `beta`
    /// and all others weight 1.
    Markov { beta: f64 },
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distribution::Uniform => f.write_str("uniform"),
            Distribution::Markov { beta } => write!(f, "markov:{beta}"),
        }
    }
}

impl FromStr for Distribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "uniform" {
            return Ok(Distribution::Uniform);
        }
        if let Some(b) = s.strip_prefix("markov:") {
            let beta: f64 = b
                .parse()
                .map_err(|_| Error::Parse(format!("bad markov bias {b:?}")))?;
            if !(beta.is_finite() && beta > 0.0) {
                return Err(Error::Parse(format!(
                    "markov bias must be positive, got {b}"
                )));
            }
            return Ok(Distribution::Markov { beta });
        }
        Err(Error::Parse(format!("unknown distribution {s:?}")))
    }
}

/// Which generators a key may use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    All,
    /// `σ_1 … σ_{m-1}` with `m = ⌊n/2⌋`.
    Lower,
    /// `σ_{m+1} … σ_{n-1}` with `m = ⌊n/2⌋`.
    Upper,
}

/// Signed letters permitted by `c` in `B_n`, ordered `1, -1, 2, -2, …`.
pub fn alphabet(n: usize, c: &Constraint) -> Result<Vec<i32>> {
    let m = n / 2;
    let range = match c {
        Constraint::All => 1..n,
        Constraint::Lower => 1..m,
        Constraint::Upper => m + 1..n,
    };
    let letters: Vec<i32> = range.flat_map(|i| [i as i32, -(i as i32)]).collect();
    if letters.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "constraint {c:?} admits no generators in B{n}"
        )));
    }
    Ok(letters)
}

/// Draw `length` letters from `alphabet`, where two letters are neighbours
/// when their absolute values differ by one.
pub fn draw_letters<R: Rng + ?Sized>(
    dist: Distribution,
    alphabet: &[i32],
    length: usize,
    rng: &mut R,
) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(length);
    for k in 0..length {
        let idx = match (dist, k) {
            (Distribution::Uniform, _) | (_, 0) => rng.gen_range(0..alphabet.len()),
            (Distribution::Markov { beta }, _) => {
                let prev = out[k - 1].unsigned_abs();
                let weights = alphabet.iter().map(|&l| {
                    if l.unsigned_abs().abs_diff(prev) == 1 {
                        beta
                    } else {
                        1.0
                    }
                });
                WeightedIndex::new(weights)
                    .expect("positive weights")
                    .sample(rng)
            }
        };
        out.push(alphabet[idx]);
    }
    out
}

/// Probability that a Markov step from a letter of index `i` lands on a
/// neighbouring index, for the alphabet of `c`.
pub fn markov_neighbour_probability(n: usize, c: &Constraint, beta: f64, i: u32) -> Result<f64> {
    let letters = alphabet(n, c)?;
    let near = letters
        .iter()
        .filter(|l| l.unsigned_abs().abs_diff(i) == 1)
        .count() as f64;
    let total = letters.len() as f64;
    Ok(beta * near / (beta * near + (total - near)))
}

/// A random key of exactly `length` letters satisfying `c`.
pub fn draw_key<R: Rng + ?Sized>(
    n: usize,
    dist: Distribution,
    length: usize,
    c: &Constraint,
    rng: &mut R,
) -> Result<BraidWord> {
    let a = alphabet(n, c)?;
    BraidWord::new(n, draw_letters(dist, &a, length, rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream, KEYGEN};

    #[test]
    fn parse_round_trip() {
        for s in ["uniform", "markov:4", "markov:0.5"] {
            assert_eq!(s.parse::<Distribution>().unwrap().to_string(), s);
        }
        assert!("markov:0".parse::<Distribution>().is_err());
        assert!("markov:x".parse::<Distribution>().is_err());
    }

    #[test]
    fn subgroup_alphabets() {
        assert_eq!(
            alphabet(8, &Constraint::Lower).unwrap(),
            vec![1, -1, 2, -2, 3, -3]
        );
        assert_eq!(
            alphabet(8, &Constraint::Upper).unwrap(),
            vec![5, -5, 6, -6, 7, -7]
        );
        assert!(alphabet(2, &Constraint::Lower).is_err());
    }

    #[test]
    fn exact_length() {
        let mut rng = stream(1, KEYGEN, 0);
        assert!(
            draw_key(8, Distribution::Uniform, 0, &Constraint::All, &mut rng)
                .unwrap()
                .is_empty()
        );
        let w = draw_key(
            8,
            Distribution::Markov { beta: 4.0 },
            37,
            &Constraint::Upper,
            &mut rng,
        )
        .unwrap();
        assert_eq!(w.len(), 37);
        assert!(w.letters().iter().all(|l| l.abs() >= 5));
    }
}
