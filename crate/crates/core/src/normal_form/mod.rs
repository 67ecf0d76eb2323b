//! Left and right normal forms in the Artin and Birman–Ko–Lee structures.

mod bkl;
mod garside;
mod length;
mod right;

use std::fmt;
use std::str::FromStr;

pub use bkl::{enumerate_canonical_factors, Bkl, CanonicalFactor};
pub use garside::{Artin, Garside};
pub use length::{
    bkl_length, garside_length, reduced_bkl_length, reduced_garside_length, LengthFn,
};
pub use right::{right_normal_form, RightNormalForm};

use crate::braid_core::{BandWord, BraidWord, Permutation, PermutationBraid};
use crate::error::{Error, Result};

/// `Δ^r P_1 ⋯ P_k` with left-weighted simple factors, none trivial and none `Δ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NormalForm<G: Garside> {
    structure: G,
    delta_power: i64,
    factors: Vec<G::Simple>,
}

pub type GarsideNormalForm = NormalForm<Artin>;
pub type BklNormalForm = NormalForm<Bkl>;

impl<G: Garside> NormalForm<G> {
    pub fn identity(structure: G) -> Self {
        Self {
            structure,
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    /// `Δ^k`.
    pub fn delta_power_of(structure: G, k: i64) -> Self {
        Self {
            structure,
            delta_power: k,
            factors: Vec::new(),
        }
    }

    pub fn from_simple(structure: G, s: G::Simple) -> Self {
        let mut x = Self::identity(structure);
        x.mul_simple_right(s);
        x
    }

    /// Normalize `Δ^r · s_1 ⋯ s_k` for arbitrary simple `s_i`.
    pub fn from_parts(structure: G, delta_power: i64, simples: Vec<G::Simple>) -> Self {
        let mut x = Self::delta_power_of(structure, delta_power);
        for s in simples {
            x.mul_simple_right(s);
        }
        x
    }

    /// Normal form of a word in Artin generators.
    pub fn from_word(structure: G, w: &BraidWord) -> Result<Self> {
        if w.strands() > structure.strands() {
            return Err(Error::StrandMismatch {
                left: w.strands(),
                right: structure.strands(),
            });
        }
        let mut x = Self::identity(structure);
        x.mul_letters(w.letters());
        Ok(x)
    }

    pub fn structure(&self) -> &G {
        &self.structure
    }

    pub fn strands(&self) -> usize {
        self.structure.strands()
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[G::Simple] {
        &self.factors
    }

    pub fn inf(&self) -> i64 {
        self.delta_power
    }

    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// True when the element is a power of the Garside element.
    pub fn is_delta_power(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul_letters(&mut self, letters: &[i32]) {
        for &l in letters {
            let s = self.structure.artin_generator(l.unsigned_abs() as usize);
            if l > 0 {
                self.mul_simple_right(s);
            } else {
                self.mul_simple_inv_right(&s);
            }
        }
    }

    /// `x ← x · s`, by one right-to-left sliding pass.
    pub fn mul_simple_right(&mut self, s: G::Simple) {
        let g = &self.structure;
        if g.is_identity(&s) {
            return;
        }
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            match g.local_sliding(&self.factors[j - 1], &self.factors[j]) {
                Some((a, b)) => {
                    self.factors[j - 1] = a;
                    self.factors[j] = b;
                }
                None => break,
            }
            j -= 1;
        }
        self.tidy();
    }

    /// `x ← x · s^{-1}`, using `s^{-1} = ∂(s) Δ^{-1}`.
    pub fn mul_simple_inv_right(&mut self, s: &G::Simple) {
        let c = self.structure.right_complement(s);
        self.mul_simple_right(c);
        self.mul_delta_right(-1);
    }

    /// `x ← x · Δ^k`.
    pub fn mul_delta_right(&mut self, k: i64) {
        if k == 0 {
            return;
        }
        let g = &self.structure;
        for f in &mut self.factors {
            *f = g.tau_power(f, k);
        }
        self.delta_power += k;
    }

    /// `x ← s · x`, by one left-to-right sliding pass.
    pub fn mul_simple_left(&mut self, s: &G::Simple) {
        let g = &self.structure;
        if g.is_identity(s) {
            return;
        }
        // s Δ^p = Δ^p τ^p(s)
        let moved = g.tau_power(s, self.delta_power);
        self.factors.insert(0, moved);
        for j in 0..self.factors.len() - 1 {
            match g.local_sliding(&self.factors[j], &self.factors[j + 1]) {
                Some((a, b)) => {
                    self.factors[j] = a;
                    self.factors[j + 1] = b;
                }
                None => break,
            }
        }
        self.tidy();
    }

    /// `x ← s^{-1} · x`, using `s^{-1} = Δ^{-1} ∂^{-1}(s)`.
    pub fn mul_simple_inv_left(&mut self, s: &G::Simple) {
        let c = self.structure.left_complement(s);
        self.mul_simple_left(&c);
        self.delta_power -= 1;
    }

    /// `x ← Δ^k · x`.
    pub fn mul_delta_left(&mut self, k: i64) {
        self.delta_power += k;
    }

    fn tidy(&mut self) {
        let g = &self.structure;
        while self.factors.last().is_some_and(|f| g.is_identity(f)) {
            self.factors.pop();
        }
        let leading = self.factors.iter().take_while(|f| g.is_delta(f)).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.delta_power += leading as i64;
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut x = self.clone();
        x.mul_delta_right(other.delta_power);
        for f in &other.factors {
            x.mul_simple_right(f.clone());
        }
        x
    }

    pub fn inverse(&self) -> Self {
        let mut x = Self::identity(self.structure.clone());
        for f in self.factors.iter().rev() {
            x.mul_simple_inv_right(f);
        }
        x.mul_delta_right(-self.delta_power);
        x
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut x = Self::identity(self.structure.clone());
        for _ in 0..k.unsigned_abs() {
            x = x.mul(&base);
        }
        x
    }

    /// `s^{-1} x s`.
    pub fn conjugate_by_simple(&self, s: &G::Simple) -> Self {
        let mut x = self.clone();
        x.mul_simple_right(s.clone());
        x.mul_simple_inv_left(s);
        x
    }

    /// `s x s^{-1}`.
    pub fn conjugate_by_simple_inverse(&self, s: &G::Simple) -> Self {
        let mut x = self.clone();
        x.mul_simple_left(s);
        x.mul_simple_inv_right(s);
        x
    }

    /// `v^{-1} x v` for a word `v`.
    pub fn conjugate_by_word(&self, v: &BraidWord) -> Self {
        let mut x = self.clone();
        for &l in v.letters() {
            let s = x.structure.artin_generator(l.unsigned_abs() as usize);
            if l > 0 {
                x = x.conjugate_by_simple(&s);
            } else {
                x = x.conjugate_by_simple_inverse(&s);
            }
        }
        x
    }

    /// `Δ^{-k} x Δ^k`.
    pub fn tau_power(&self, k: i64) -> Self {
        let g = &self.structure;
        Self {
            structure: g.clone(),
            delta_power: self.delta_power,
            factors: self.factors.iter().map(|f| g.tau_power(f, k)).collect(),
        }
    }

    /// Word length in the structure's own generators of the displayed form.
    pub fn simple_lengths(&self) -> Vec<usize> {
        self.factors
            .iter()
            .map(|f| self.structure.simple_len(f))
            .collect()
    }

    /// An Artin word for the element, read off the normal form.
    pub fn to_word(&self) -> BraidWord {
        let g = &self.structure;
        let mut w = g.delta_word().pow(self.delta_power);
        for f in &self.factors {
            w = w.concat(&g.simple_to_artin(f));
        }
        w.with_strands(g.strands()).expect("same strand count")
    }

    /// Check every structural invariant; used by tests and the self-test.
    pub fn check_invariants(&self) -> Result<()> {
        let g = &self.structure;
        for (i, f) in self.factors.iter().enumerate() {
            if g.is_identity(f) || g.is_delta(f) {
                return Err(Error::Invariant(format!("factor {i} is trivial or Δ")));
            }
        }
        for (i, w) in self.factors.windows(2).enumerate() {
            if !g.is_left_weighted(&w[0], &w[1]) {
                return Err(Error::Invariant(format!(
                    "factors {i} and {} are not left-weighted",
                    i + 1
                )));
            }
        }
        Ok(())
    }
}

impl GarsideNormalForm {
    pub fn of(w: &BraidWord) -> Self {
        Self::from_word(Artin::new(w.strands()), w).expect("strand counts agree")
    }
}

impl BklNormalForm {
    pub fn of_band(b: &BandWord) -> Self {
        let g = Bkl::new(b.strands());
        let mut x = Self::identity(g);
        for l in b.letters() {
            let s = CanonicalFactor::band(b.strands(), l.t, l.s);
            if l.inverse {
                x.mul_simple_inv_right(&s);
            } else {
                x.mul_simple_right(s);
            }
        }
        x
    }

    pub fn of_artin(w: &BraidWord) -> Self {
        Self::from_word(Bkl::new(w.strands()), w).expect("strand counts agree")
    }
}

/// Left normal form in the Artin structure.
pub fn left_normal_form(w: &BraidWord) -> GarsideNormalForm {
    GarsideNormalForm::of(w)
}

/// Birman–Ko–Lee canonical form of a band word.
pub fn bkl_normal_form(b: &BandWord) -> BklNormalForm {
    BklNormalForm::of_band(b)
}

/// `∂(u) ∧ v = ε`.
pub fn is_left_weighted(u: &PermutationBraid, v: &PermutationBraid) -> bool {
    Artin::new(u.strands()).is_left_weighted(u, v)
}

/// Slide `∂(u) ∧ v` from `v` into `u`.
pub fn local_sliding(
    u: &PermutationBraid,
    v: &PermutationBraid,
) -> (PermutationBraid, PermutationBraid) {
    Artin::new(u.strands())
        .local_sliding(u, v)
        .unwrap_or_else(|| (u.clone(), v.clone()))
}

/// `Bn: D^r | p1 | p2`
impl<G: Garside> fmt::Display for NormalForm<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "B{}: {}^{}",
            self.strands(),
            G::DELTA_SYMBOL,
            self.delta_power
        )?;
        for s in &self.factors {
            write!(f, " | {s}")?;
        }
        Ok(())
    }
}

fn parse_serialized<G: Garside>(s: &str, make: impl Fn(usize) -> G) -> Result<NormalForm<G>> {
    let (head, body) = s
        .trim()
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("missing ':' in {s:?}")))?;
    let n: usize = head
        .trim()
        .strip_prefix('B')
        .and_then(|x| x.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad header {head:?}")))?;
    if n < 2 {
        return Err(Error::Parse(format!("B{n} has too few strands")));
    }
    let g = make(n);
    let mut parts = body.split('|');
    let power = parts
        .next()
        .and_then(|p| p.trim().strip_prefix(G::DELTA_SYMBOL))
        .and_then(|p| p.strip_prefix('^'))
        .and_then(|p| p.parse::<i64>().ok())
        .ok_or_else(|| Error::Parse(format!("expected {}^r in {s:?}", G::DELTA_SYMBOL)))?;
    let mut simples = Vec::new();
    for part in parts {
        let images = part
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad factor {part:?}")))?;
        if images.len() != n {
            return Err(Error::Parse(format!(
                "factor {part:?} is not on {n} points"
            )));
        }
        let p = Permutation::from_images(&images)?;
        let f = g
            .simple_of_perm(p)
            .ok_or_else(|| Error::Parse(format!("factor {part:?} is not simple")))?;
        simples.push(f);
    }
    let x = NormalForm::from_parts(g, power, simples.clone());
    if x.delta_power != power || x.factors != simples {
        return Err(Error::Parse(format!("{s:?} is not in normal form")));
    }
    Ok(x)
}

impl FromStr for GarsideNormalForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_serialized(s, Artin::new)
    }
}

impl FromStr for BklNormalForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_serialized(s, Bkl::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn simple(n: usize, letters: &[i32]) -> PermutationBraid {
        PermutationBraid::from_word(&w(n, letters)).unwrap()
    }

    #[test]
    fn worked_example_b4() {
        let x = left_normal_form(&w(4, &[1, -3, 2]));
        assert_eq!(x.delta_power(), -1);
        assert_eq!(
            x.factors(),
            &[simple(4, &[2, 1, 3, 2, 1]), simple(4, &[1, 2])]
        );
    }

    #[test]
    fn worked_example_b3() {
        // σ1σ2σ1 is Δ_3 itself, so it is absorbed into the Δ-power
        let x = left_normal_form(&w(3, &[1, 2, 2, 1, 2]));
        assert_eq!(x.delta_power(), 1);
        assert_eq!(x.factors(), &[simple(3, &[2, 1])]);
        let y = GarsideNormalForm::from_parts(
            Artin::new(3),
            0,
            vec![simple(3, &[1, 2, 1]), simple(3, &[2, 1])],
        );
        assert_eq!(x, y);
    }

    #[test]
    fn trivial_forms() {
        assert!(left_normal_form(&BraidWord::identity(4)).is_identity());
        let d = left_normal_form(&BraidWord::delta(4));
        assert_eq!((d.delta_power(), d.canonical_length()), (1, 0));
        assert_eq!(d.to_string(), "B4: D^1");
        assert_eq!(
            left_normal_form(&BraidWord::identity(4)).to_string(),
            "B4: D^0"
        );
    }

    #[test]
    fn left_weighted_examples() {
        assert!(!is_left_weighted(
            &simple(3, &[1, 2]),
            &simple(3, &[2, 1, 2])
        ));
        assert!(is_left_weighted(
            &simple(3, &[1, 2, 1]),
            &simple(3, &[2, 1])
        ));
        let (a, b) = local_sliding(&simple(3, &[1, 2]), &simple(3, &[2, 1, 2]));
        assert_eq!((a, b), (simple(3, &[1, 2, 1]), simple(3, &[2, 1])));
        let v = simple(4, &[2, 1, 3]);
        assert_eq!(
            local_sliding(&PermutationBraid::identity(4), &v),
            (v.clone(), PermutationBraid::identity(4))
        );
    }

    #[test]
    fn serialization_round_trip() {
        let x = left_normal_form(&w(4, &[1, -3, 2]));
        let s = x.to_string();
        assert_eq!(s, "B4: D^-1 | 3 4 2 1 | 3 1 2 4");
        assert_eq!(s.parse::<GarsideNormalForm>().unwrap(), x);
        assert!("B4: D^0 | 1 2 3 4".parse::<GarsideNormalForm>().is_err());
        assert!("B4: D^0 | 4 3 2 1".parse::<GarsideNormalForm>().is_err());
    }

    #[test]
    fn bkl_examples() {
        let d: BandWord = "B4 band: +(4,3) +(3,2) +(2,1)".parse().unwrap();
        let x = bkl_normal_form(&d);
        assert_eq!((x.delta_power(), x.canonical_length()), (1, 0));
        let inv: BandWord = "B3 band: -(2,1)".parse().unwrap();
        let y = bkl_normal_form(&inv);
        assert_eq!((y.delta_power(), y.canonical_length()), (-1, 1));
        for n in 3..7 {
            let a = BklNormalForm::of_artin(&BraidWord::small_delta(n).pow(n as i64));
            let b = left_normal_form(&BraidWord::delta(n).pow(2));
            assert_eq!(a.delta_power(), n as i64);
            assert_eq!(GarsideNormalForm::of(&a.to_word()), b);
        }
    }
}
