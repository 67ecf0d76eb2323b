use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

use super::perm::Permutation;
use super::word::BraidWord;

/// A positive braid in which any two strands cross at most once, stored by
/// its permutation. These are exactly the simple elements `ε ≼ P ≼ Δ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationBraid {
    perm: Permutation,
}

impl PermutationBraid {
    pub fn identity(n: usize) -> Self {
        Self {
            perm: Permutation::identity(n),
        }
    }

    pub fn delta(n: usize) -> Self {
        Self {
            perm: Permutation::reversal(n),
        }
    }

    /// The simple element `σ_i` (1-based).
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(1 <= i && i < n, "σ_{i} out of range for B{n}");
        let mut perm = Permutation::identity(n);
        perm.swap_positions(i - 1);
        Self { perm }
    }

    pub fn from_perm(perm: Permutation) -> Self {
        Self { perm }
    }

    /// The simple element whose canonical word is `w`, if `w` is a positive
    /// word with no pair of strands crossing twice.
    pub fn from_word(w: &BraidWord) -> Option<Self> {
        if w.letters().iter().any(|&l| l < 0) {
            return None;
        }
        let perm = w.perm_of();
        (perm.inversions() == w.len()).then_some(Self { perm })
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn strands(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        let n = self.strands();
        self.perm
            .raw()
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == n - 1 - i)
    }

    /// Word length, equal to the number of crossings.
    pub fn len(&self) -> usize {
        self.perm.inversions()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub(crate) fn has_left_descent(&self, i: usize) -> bool {
        let r = self.perm.raw();
        r[i - 1] > r[i]
    }

    /// `S(P)`: the `i` with `σ_i ≼ P`.
    pub fn starting_set(&self) -> Vec<usize> {
        (1..self.strands())
            .filter(|&i| self.has_left_descent(i))
            .collect()
    }

    /// `F(P)`: the `i` with `P = P'σ_i` for a positive `P'`.
    pub fn finishing_set(&self) -> Vec<usize> {
        let inv = self.perm.inverse();
        let r = inv.raw();
        (1..self.strands()).filter(|&i| r[i - 1] > r[i]).collect()
    }

    /// The canonical positive word, built by peeling off the leftmost
    /// available generator.
    pub fn word(&self) -> BraidWord {
        let n = self.strands();
        let mut rest = self.perm.clone();
        let mut letters = Vec::with_capacity(self.len());
        'outer: loop {
            for i in 0..n.saturating_sub(1) {
                let r = rest.raw();
                if r[i] > r[i + 1] {
                    letters.push(i as i32 + 1);
                    rest.swap_positions(i);
                    continue 'outer;
                }
            }
            break;
        }
        BraidWord::new(n, letters).expect("indices in range")
    }

    /// `self · other` when that product is again simple.
    pub fn product(&self, other: &PermutationBraid) -> Option<PermutationBraid> {
        let perm = self.perm.then(&other.perm);
        (perm.inversions() == self.len() + other.len()).then_some(Self { perm })
    }

    /// `self^{-1} · other` when `self ≼ other`.
    pub fn left_divide(&self, other: &PermutationBraid) -> Option<PermutationBraid> {
        let perm = self.perm.inverse().then(&other.perm);
        (self.len() + perm.inversions() == other.len()).then_some(Self { perm })
    }

    /// `other · self^{-1}` when `self` is a suffix of `other`.
    pub fn right_divide(&self, other: &PermutationBraid) -> Option<PermutationBraid> {
        let perm = other.perm.then(&self.perm.inverse());
        (self.len() + perm.inversions() == other.len()).then_some(Self { perm })
    }

    /// Prefix order on simple elements.
    pub fn is_prefix_of(&self, other: &PermutationBraid) -> bool {
        self.left_divide(other).is_some()
    }

    /// Greatest common prefix.
    pub fn meet(&self, other: &PermutationBraid) -> PermutationBraid {
        let n = self.strands();
        let mut a = self.perm.clone();
        let mut b = other.perm.clone();
        let mut m = Permutation::identity(n);
        'outer: loop {
            for i in 0..n.saturating_sub(1) {
                let (ra, rb) = (a.raw(), b.raw());
                if ra[i] > ra[i + 1] && rb[i] > rb[i + 1] {
                    a.swap_positions(i);
                    b.swap_positions(i);
                    // m ← m·σ_{i+1}: exchange the values i and i+1
                    for v in m.raw_mut().iter_mut() {
                        if *v as usize == i {
                            *v += 1;
                        } else if *v as usize == i + 1 {
                            *v -= 1;
                        }
                    }
                    continue 'outer;
                }
            }
            break;
        }
        Self { perm: m }
    }

    /// Least common multiple with respect to `≼`.
    pub fn join(&self, other: &PermutationBraid) -> PermutationBraid {
        // a ≼ c iff ∂(c) is a suffix of ∂(a)
        let a = self.right_complement().reverse();
        let b = other.right_complement().reverse();
        a.meet(&b).reverse().left_complement()
    }

    /// The anti-automorphism reading the word backwards.
    pub fn reverse(&self) -> PermutationBraid {
        Self {
            perm: self.perm.inverse(),
        }
    }

    /// `∂(P) = P^{-1}Δ`.
    pub fn right_complement(&self) -> PermutationBraid {
        Self {
            perm: self
                .perm
                .inverse()
                .then(&Permutation::reversal(self.strands())),
        }
    }

    /// `∂^{-1}(P) = ΔP^{-1}`.
    pub fn left_complement(&self) -> PermutationBraid {
        Self {
            perm: Permutation::reversal(self.strands()).then(&self.perm.inverse()),
        }
    }

    /// `τ(P) = Δ^{-1}PΔ`.
    pub fn tau(&self) -> PermutationBraid {
        Self {
            perm: self.perm.flip(),
        }
    }

    /// `τ^k(P)`; `τ` is an involution on `B_n`.
    pub fn tau_power(&self, k: i64) -> PermutationBraid {
        if k.rem_euclid(2) == 1 {
            self.tau()
        } else {
            self.clone()
        }
    }

    pub fn extend(&self, m: usize) -> PermutationBraid {
        Self {
            perm: self.perm.extend(m),
        }
    }

    /// Every simple `Q ≼ self`, in order of increasing length.
    pub fn prefixes(&self) -> Vec<PermutationBraid> {
        let n = self.strands();
        let mut seen: HashSet<PermutationBraid> = HashSet::new();
        let start = PermutationBraid::identity(n);
        seen.insert(start.clone());
        let mut layer = vec![start];
        let mut out = Vec::new();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for p in &layer {
                let rest = p.left_divide(self).expect("p is a prefix");
                for i in rest.starting_set() {
                    let q = p
                        .product(&PermutationBraid::generator(n, i))
                        .expect("σ_i fits");
                    if seen.insert(q.clone()) {
                        next.push(q);
                    }
                }
            }
            out.append(&mut layer);
            layer = next;
        }
        out
    }
}

/// Every simple element of `B_n`, refusing when `n` exceeds `cap`.
pub fn enumerate_simples(n: usize, cap: usize) -> Result<Vec<PermutationBraid>> {
    if n > cap {
        return Err(Error::EnumerationCap {
            what: "simple elements",
            n,
            cap,
            size: (1..=n as u128).product(),
        });
    }
    Ok(Permutation::all(n)
        .into_iter()
        .map(PermutationBraid::from_perm)
        .collect())
}

impl fmt::Debug for PermutationBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Simple[{}]", self.perm)
    }
}

impl fmt::Display for PermutationBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.perm, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all4() -> Vec<PermutationBraid> {
        enumerate_simples(4, 8).unwrap()
    }

    #[test]
    fn round_trip_and_lengths() {
        for p in enumerate_simples(5, 8).unwrap() {
            let w = p.word();
            assert!(w.letters().iter().all(|&l| l > 0));
            assert_eq!(w.len(), p.perm().inversions());
            assert_eq!(&w.perm_of(), p.perm());
            assert_eq!(PermutationBraid::from_word(&w).as_ref(), Some(&p));
        }
        assert!(PermutationBraid::identity(3).word().is_empty());
        assert_eq!(PermutationBraid::delta(4).word().len(), 6);
    }

    #[test]
    fn starting_and_finishing_sets_of_delta_and_generators() {
        for n in 2..7 {
            let d = PermutationBraid::delta(n);
            let all: Vec<usize> = (1..n).collect();
            assert_eq!(d.starting_set(), all);
            assert_eq!(d.finishing_set(), all);
            for i in 1..n {
                let s = PermutationBraid::generator(n, i);
                assert_eq!(s.starting_set(), vec![i]);
                assert_eq!(s.finishing_set(), vec![i]);
            }
        }
    }

    #[test]
    fn complement_identities() {
        for p in all4() {
            let c = p.right_complement();
            assert!(p.product(&c).unwrap().is_delta());
            assert_eq!(c.right_complement(), p.tau());
            assert!(p.left_complement().product(&p).unwrap().is_delta());
            assert_eq!(p.left_complement().right_complement(), p);
        }
        assert!(PermutationBraid::identity(4).right_complement().is_delta());
        assert!(PermutationBraid::delta(4).right_complement().is_identity());
    }

    #[test]
    fn join_is_least_upper_bound() {
        let all = all4();
        for a in &all {
            for b in &all {
                let j = a.join(b);
                assert!(a.is_prefix_of(&j) && b.is_prefix_of(&j));
                for c in &all {
                    if a.is_prefix_of(c) && b.is_prefix_of(c) {
                        assert!(j.is_prefix_of(c));
                    }
                }
            }
        }
    }

    #[test]
    fn prefixes_match_filter() {
        let all = all4();
        for a in &all {
            let mut got = a.prefixes();
            got.sort();
            let mut want: Vec<_> = all.iter().filter(|q| q.is_prefix_of(a)).cloned().collect();
            want.sort();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            enumerate_simples(9, 8),
            Err(Error::EnumerationCap { n: 9, .. })
        ));
        assert_eq!(enumerate_simples(2, 8).unwrap().len(), 2);
    }
}
