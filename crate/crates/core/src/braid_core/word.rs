use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::perm::Permutation;

/// A word in the Artin generators of `B_n`.
///
/// Letter `k > 0` stands for `σ_k`, letter `k < 0` for `σ_{|k|}^{-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "B{n}: need at least 2 strands"
            )));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= n {
                return Err(Error::GeneratorOutOfRange { index: l as i64, n });
            }
        }
        Ok(Self { n, letters })
    }

    /// The empty word of `B_n`.
    pub fn identity(n: usize) -> Self {
        Self::new(n, Vec::new()).expect("valid strand count")
    }

    /// A word in the stable braid group, with `n` just large enough for its letters.
    pub fn infinite(letters: Vec<i32>) -> Self {
        let n = letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
            + 2;
        Self::new(n, letters).expect("n chosen to fit")
    }

    /// `Δ_n = (σ_1⋯σ_{n-1})(σ_1⋯σ_{n-2})⋯σ_1`.
    pub fn delta(n: usize) -> Self {
        let mut letters = Vec::with_capacity(n * (n - 1) / 2);
        for top in (1..n).rev() {
            letters.extend(1..=top as i32);
        }
        Self::new(n, letters).expect("valid")
    }

    /// `δ_n = σ_{n-1}σ_{n-2}⋯σ_1`.
    pub fn small_delta(n: usize) -> Self {
        Self::new(n, (1..n as i32).rev().collect()).expect("valid")
    }

    /// `len` letters drawn uniformly from `σ_i^{±1}`.
    pub fn random<R: rand::Rng + ?Sized>(n: usize, len: usize, rng: &mut R) -> Self {
        assert!(n >= 2, "B{n} has no generators");
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
        Self { n, letters }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_index(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Reinterpret as a braid on `m >= n` strands.
    pub fn with_strands(&self, m: usize) -> Result<Self> {
        if m < self.n {
            if self.max_index() < m {
                return Self::new(m, self.letters.clone());
            }
            return Err(Error::StrandMismatch {
                left: self.n,
                right: m,
            });
        }
        Ok(Self {
            n: m,
            letters: self.letters.clone(),
        })
    }

    /// Concatenation; the result lives on the larger strand count.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        BraidWord {
            n: self.n.max(other.n),
            letters,
        }
    }

    pub fn push(&mut self, letter: i32) -> Result<()> {
        if letter == 0 || letter.unsigned_abs() as usize >= self.n {
            return Err(Error::GeneratorOutOfRange {
                index: letter as i64,
                n: self.n,
            });
        }
        self.letters.push(letter);
        Ok(())
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// Reverse the letters and swap `σ_i` with `σ_i^{-1}`.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// Delete adjacent `x x^{-1}` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<i32> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        BraidWord {
            n: self.n,
            letters: stack,
        }
    }

    /// The Garside automorphism `τ(σ_i) = σ_{n-i}`, i.e. conjugation by `Δ`.
    pub fn shift_tau(&self) -> BraidWord {
        let n = self.n as i32;
        BraidWord {
            n: self.n,
            letters: self
                .letters
                .iter()
                .map(|&l| l.signum() * (n - l.abs()))
                .collect(),
        }
    }

    /// The shift endomorphism `d(σ_i) = σ_{i+1}` of `B_∞`; the strand count grows by one.
    pub fn shift_up(&self) -> BraidWord {
        BraidWord {
            n: self.n + 1,
            letters: self.letters.iter().map(|&l| l + l.signum()).collect(),
        }
    }

    /// `w` conjugated as `v^{-1} w v`.
    pub fn conjugate_by(&self, v: &BraidWord) -> BraidWord {
        v.inverse().concat(self).concat(v)
    }

    /// The induced permutation; letter signs are ignored.
    pub fn perm_of(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        let mut position_of: Vec<usize> = (0..self.n).collect();
        let mut strand_at: Vec<usize> = (0..self.n).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let (a, b) = (strand_at[i], strand_at[i + 1]);
            strand_at.swap(i, i + 1);
            position_of[a] = i + 1;
            position_of[b] = i;
        }
        let raw = p.raw_mut();
        for (s, &pos) in position_of.iter().enumerate() {
            raw[s] = pos as u8;
        }
        p
    }
}

/// `Bn: 1 -3 2`
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.n)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

fn parse_header(s: &str) -> Result<(usize, &str, &str)> {
    let s = s.trim();
    let (head, body) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("missing ':' in {s:?}")))?;
    let head = head.trim();
    let rest = head
        .strip_prefix('B')
        .ok_or_else(|| Error::Parse(format!("header must start with 'B': {head:?}")))?;
    let (num, tag) = match rest.split_once(char::is_whitespace) {
        Some((num, tag)) => (num, tag.trim()),
        None => (rest, ""),
    };
    let n: usize = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad strand count {num:?}")))?;
    Ok((n, tag, body))
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, tag, body) = parse_header(s)?;
        if !tag.is_empty() {
            return Err(Error::Parse(format!(
                "unexpected tag {tag:?} in Artin word"
            )));
        }
        let letters = body
            .split_whitespace()
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad letter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(n, letters)
    }
}

/// A band generator `a_{ts}^{±1}` with `s < t`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BandLetter {
    pub t: usize,
    pub s: usize,
    pub inverse: bool,
}

/// A word in the band generators of `B_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BandWord {
    n: usize,
    letters: Vec<BandLetter>,
}

impl BandWord {
    pub fn new(n: usize, letters: Vec<BandLetter>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "B{n}: need at least 2 strands"
            )));
        }
        for l in &letters {
            if !(1 <= l.s && l.s < l.t && l.t <= n) {
                return Err(Error::InvalidArgument(format!(
                    "band generator a({},{}) invalid in B{n}",
                    l.t, l.s
                )));
            }
        }
        Ok(Self { n, letters })
    }

    /// `δ_n = a_{n,n-1} a_{n-1,n-2} ⋯ a_{2,1}`.
    pub fn small_delta(n: usize) -> Self {
        let letters = (2..=n)
            .rev()
            .map(|t| BandLetter {
                t,
                s: t - 1,
                inverse: false,
            })
            .collect();
        Self::new(n, letters).expect("valid")
    }

    /// Each Artin letter `σ_i^{±1}` becomes `a_{i+1,i}^{±1}`.
    pub fn from_artin(w: &BraidWord) -> Self {
        let letters = w
            .letters()
            .iter()
            .map(|&l| {
                let i = l.unsigned_abs() as usize;
                BandLetter {
                    t: i + 1,
                    s: i,
                    inverse: l < 0,
                }
            })
            .collect();
        Self {
            n: w.strands(),
            letters,
        }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[BandLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BandWord) -> BandWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BandWord {
            n: self.n.max(other.n),
            letters,
        }
    }

    pub fn inverse(&self) -> BandWord {
        BandWord {
            n: self.n,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| BandLetter {
                    inverse: !l.inverse,
                    ..*l
                })
                .collect(),
        }
    }

    /// Literal expansion `a_{ts} = (σ_{t-1}⋯σ_{s+1}) σ_s (σ_{s+1}^{-1}⋯σ_{t-1}^{-1})`.
    pub fn to_artin(&self) -> BraidWord {
        let mut letters = Vec::new();
        for l in &self.letters {
            let (t, s) = (l.t as i32, l.s as i32);
            let sign = if l.inverse { -1 } else { 1 };
            // the inverse of the conjugate only flips the middle letter
            letters.extend((s + 1..t).rev());
            letters.push(sign * s);
            letters.extend((s + 1..t).map(|i| -i));
        }
        BraidWord::new(self.n, letters).expect("band letters are in range")
    }
}

/// `Bn band: +(3,1) -(2,1)`
impl fmt::Display for BandWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{} band:", self.n)?;
        for l in &self.letters {
            let sign = if l.inverse { '-' } else { '+' };
            write!(f, " {sign}({},{})", l.t, l.s)?;
        }
        Ok(())
    }
}

impl FromStr for BandWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, tag, body) = parse_header(s)?;
        if tag != "band" {
            return Err(Error::Parse(format!("expected 'band' tag, found {tag:?}")));
        }
        let mut letters = Vec::new();
        for tok in body.split_whitespace() {
            let bad = || Error::Parse(format!("bad band token {tok:?}"));
            let (inverse, rest) = match tok.as_bytes().first() {
                Some(b'+') => (false, &tok[1..]),
                Some(b'-') => (true, &tok[1..]),
                _ => (false, tok),
            };
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(bad)?;
            let (t, s) = inner.split_once(',').ok_or_else(bad)?;
            let t: usize = t.trim().parse().map_err(|_| bad())?;
            let s: usize = s.trim().parse().map_err(|_| bad())?;
            letters.push(BandLetter { t, s, inverse });
        }
        BandWord::new(n, letters)
    }
}
