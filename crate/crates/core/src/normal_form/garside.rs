use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::braid_core::{BraidWord, Permutation, PermutationBraid};

/// A Garside structure on `B_n`: a lattice of simple elements below a
/// Garside element, with the operations the normal-form engine needs.
pub trait Garside: Clone + PartialEq + Eq + Hash + Debug {
    type Simple: Clone + PartialEq + Eq + Hash + Ord + Debug + Display;

    /// Symbol used for the Garside element in serializations.
    const DELTA_SYMBOL: &'static str;

    fn strands(&self) -> usize;
    fn identity(&self) -> Self::Simple;
    fn delta(&self) -> Self::Simple;
    fn perm<'a>(&self, a: &'a Self::Simple) -> &'a Permutation;
    fn simple_of_perm(&self, p: Permutation) -> Option<Self::Simple>;

    /// The simple element equal to `σ_i`.
    fn artin_generator(&self, i: usize) -> Self::Simple;

    fn meet(&self, a: &Self::Simple, b: &Self::Simple) -> Self::Simple;

    /// `a^{-1} b` when `a ≼ b`.
    fn left_divide(&self, a: &Self::Simple, b: &Self::Simple) -> Option<Self::Simple>;

    /// `ab` when it is simple.
    fn product(&self, a: &Self::Simple, b: &Self::Simple) -> Option<Self::Simple>;

    /// `Δ^{-k} a Δ^k`.
    fn tau_power(&self, a: &Self::Simple, k: i64) -> Self::Simple;

    /// Length of a simple in the structure's own generators.
    fn simple_len(&self, a: &Self::Simple) -> usize;
    fn delta_len(&self) -> usize;

    /// A word in Artin generators representing `a`.
    fn simple_to_artin(&self, a: &Self::Simple) -> BraidWord;

    /// A word in Artin generators representing the Garside element.
    fn delta_word(&self) -> BraidWord;

    fn is_identity(&self, a: &Self::Simple) -> bool {
        self.perm(a).is_identity()
    }

    fn is_delta(&self, a: &Self::Simple) -> bool {
        *a == self.delta()
    }

    fn is_prefix(&self, a: &Self::Simple, b: &Self::Simple) -> bool {
        self.left_divide(a, b).is_some()
    }

    /// `∂(a) = a^{-1}Δ`.
    fn right_complement(&self, a: &Self::Simple) -> Self::Simple {
        let p = self.perm(a).inverse().then(self.perm(&self.delta()));
        self.simple_of_perm(p)
            .expect("complement of a simple is simple")
    }

    /// `∂^{-1}(a) = Δa^{-1}`.
    fn left_complement(&self, a: &Self::Simple) -> Self::Simple {
        let p = self.perm(&self.delta()).then(&self.perm(a).inverse());
        self.simple_of_perm(p)
            .expect("complement of a simple is simple")
    }

    fn is_left_weighted(&self, a: &Self::Simple, b: &Self::Simple) -> bool {
        self.is_identity(&self.meet(&self.right_complement(a), b))
    }

    /// Slide `∂(a) ∧ b` from `b` into `a`; returns `None` when already left-weighted.
    fn local_sliding(
        &self,
        a: &Self::Simple,
        b: &Self::Simple,
    ) -> Option<(Self::Simple, Self::Simple)> {
        let t = self.meet(&self.right_complement(a), b);
        if self.is_identity(&t) {
            return None;
        }
        let a2 = self.product(a, &t).expect("t ≼ ∂(a)");
        let b2 = self.left_divide(&t, b).expect("t ≼ b");
        Some((a2, b2))
    }
}

/// The classical Garside structure with `Δ_n` and permutation braids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Artin {
    n: usize,
}

impl Artin {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "need at least 2 strands");
        Self { n }
    }
}

impl Garside for Artin {
    type Simple = PermutationBraid;

    const DELTA_SYMBOL: &'static str = "D";

    fn strands(&self) -> usize {
        self.n
    }

    fn identity(&self) -> PermutationBraid {
        PermutationBraid::identity(self.n)
    }

    fn delta(&self) -> PermutationBraid {
        PermutationBraid::delta(self.n)
    }

    fn perm<'a>(&self, a: &'a PermutationBraid) -> &'a Permutation {
        a.perm()
    }

    fn simple_of_perm(&self, p: Permutation) -> Option<PermutationBraid> {
        (p.len() == self.n).then(|| PermutationBraid::from_perm(p))
    }

    fn artin_generator(&self, i: usize) -> PermutationBraid {
        PermutationBraid::generator(self.n, i)
    }

    fn meet(&self, a: &PermutationBraid, b: &PermutationBraid) -> PermutationBraid {
        a.meet(b)
    }

    fn left_divide(&self, a: &PermutationBraid, b: &PermutationBraid) -> Option<PermutationBraid> {
        a.left_divide(b)
    }

    fn product(&self, a: &PermutationBraid, b: &PermutationBraid) -> Option<PermutationBraid> {
        a.product(b)
    }

    fn tau_power(&self, a: &PermutationBraid, k: i64) -> PermutationBraid {
        a.tau_power(k)
    }

    fn simple_len(&self, a: &PermutationBraid) -> usize {
        a.len()
    }

    fn delta_len(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    fn simple_to_artin(&self, a: &PermutationBraid) -> BraidWord {
        a.word()
    }

    fn delta_word(&self) -> BraidWord {
        BraidWord::delta(self.n)
    }

    fn is_delta(&self, a: &PermutationBraid) -> bool {
        a.is_delta()
    }

    fn right_complement(&self, a: &PermutationBraid) -> PermutationBraid {
        a.right_complement()
    }

    fn left_complement(&self, a: &PermutationBraid) -> PermutationBraid {
        a.left_complement()
    }
}
