use std::fmt;

use crate::braid_core::{BraidWord, PermutationBraid};

use super::GarsideNormalForm;

/// `P_k ⋯ P_1 Δ^r` with right-weighted simple factors, listed left to right.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RightNormalForm {
    n: usize,
    delta_power: i64,
    factors: Vec<PermutationBraid>,
}

impl RightNormalForm {
    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[PermutationBraid] {
        &self.factors
    }

    /// True when `F(a) ⊆ S(b)` for every consecutive pair `a · b`.
    pub fn is_right_weighted(&self) -> bool {
        self.factors.windows(2).all(|w| {
            let s = w[1].starting_set();
            w[0].finishing_set().iter().all(|i| s.contains(i))
        })
    }

    pub fn to_word(&self) -> BraidWord {
        let mut w = BraidWord::identity(self.n);
        for f in &self.factors {
            w = w.concat(&f.word());
        }
        w.concat(&BraidWord::delta(self.n).pow(self.delta_power))
    }
}

/// `Bn: p1 | p2 | D^r`
impl fmt::Display for RightNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}: ", self.n)?;
        for p in &self.factors {
            write!(f, "{p} | ")?;
        }
        write!(f, "D^{}", self.delta_power)
    }
}

fn reversed(w: &BraidWord) -> BraidWord {
    let letters = w.letters().iter().rev().copied().collect();
    BraidWord::new(w.strands(), letters).expect("same letters")
}

/// The right normal form, obtained by mirroring the left normal form of the
/// reversed word.
pub fn right_normal_form(w: &BraidWord) -> RightNormalForm {
    let left = GarsideNormalForm::of(&reversed(w));
    RightNormalForm {
        n: w.strands(),
        delta_power: left.delta_power(),
        factors: left.factors().iter().rev().map(|f| f.reverse()).collect(),
    }
}
