use std::collections::HashMap;

use crate::braid_core::{BraidWord, PermutationBraid};
use crate::error::{Error, Result};
use crate::normal_form::{Artin, GarsideNormalForm};

/// `ι(x) = τ^{-p}(x_1)`, or `ε` when `x = Δ^p`.
pub fn initial_factor(x: &GarsideNormalForm) -> PermutationBraid {
    match x.factors().first() {
        Some(f) => f.tau_power(-x.delta_power()),
        None => PermutationBraid::identity(x.strands()),
    }
}

/// `φ(x) = x_r`, or `Δ` when `x = Δ^p`.
pub fn final_factor(x: &GarsideNormalForm) -> PermutationBraid {
    match x.factors().last() {
        Some(f) => f.clone(),
        None => PermutationBraid::delta(x.strands()),
    }
}

/// `c(x) = Δ^p x_2 ⋯ x_r τ^{-p}(x_1)`, renormalized.
pub fn cycle(x: &GarsideNormalForm) -> GarsideNormalForm {
    let f = x.factors();
    if f.is_empty() {
        return x.clone();
    }
    let mut y =
        GarsideNormalForm::from_parts(Artin::new(x.strands()), x.delta_power(), f[1..].to_vec());
    y.mul_simple_right(initial_factor(x));
    y
}

/// `d(x) = x_r Δ^p x_1 ⋯ x_{r-1}`, renormalized.
pub fn decycle(x: &GarsideNormalForm) -> GarsideNormalForm {
    let f = x.factors();
    if f.is_empty() {
        return x.clone();
    }
    let r = f.len();
    let mut y = GarsideNormalForm::from_parts(
        Artin::new(x.strands()),
        x.delta_power(),
        f[..r - 1].to_vec(),
    );
    y.mul_simple_left(&f[r - 1]);
    y
}

/// `𝔭(x) = ι(x^{-1}) ∧ ι(x)`, computed as `∂(x_r) ∧ τ^{-p}(x_1)`.
pub fn preferred_prefix(x: &GarsideNormalForm) -> PermutationBraid {
    if x.factors().is_empty() {
        return PermutationBraid::identity(x.strands());
    }
    final_factor(x).right_complement().meet(&initial_factor(x))
}

/// `𝔰(x) = 𝔭(x)^{-1} x 𝔭(x)`.
pub fn cyclic_sliding(x: &GarsideNormalForm) -> GarsideNormalForm {
    x.conjugate_by_simple(&preferred_prefix(x))
}

/// True when cycling only rotates the factors: `x_r · τ^{-p}(x_1)` is left-weighted.
pub fn is_rigid(x: &GarsideNormalForm) -> bool {
    match x.factors().last() {
        None => true,
        Some(last) => crate::normal_form::is_left_weighted(last, &initial_factor(x)),
    }
}

/// A conjugate `v^{-1} seed v` together with `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyWitness {
    pub element: GarsideNormalForm,
    pub conjugator: BraidWord,
}

impl ConjugacyWitness {
    pub fn trivial(x: GarsideNormalForm) -> Self {
        let n = x.strands();
        Self {
            element: x,
            conjugator: BraidWord::identity(n),
        }
    }

    /// Recompute `v^{-1} seed v` and compare.
    pub fn verify(&self, seed: &GarsideNormalForm) -> bool {
        seed.conjugate_by_word(&self.conjugator) == self.element
    }

    /// Conjugate further by the simple `s`.
    pub(crate) fn then_simple(&self, s: &PermutationBraid) -> Self {
        Self {
            element: self.element.conjugate_by_simple(s),
            conjugator: self.conjugator.concat(&s.word()),
        }
    }

    fn cycled(&self) -> Self {
        Self {
            element: cycle(&self.element),
            conjugator: self
                .conjugator
                .concat(&initial_factor(&self.element).word()),
        }
    }

    fn decycled(&self) -> Self {
        Self {
            element: decycle(&self.element),
            conjugator: self
                .conjugator
                .concat(&final_factor(&self.element).word().inverse()),
        }
    }

    fn slid(&self) -> Self {
        let p = preferred_prefix(&self.element);
        Self {
            element: self.element.conjugate_by_simple(&p),
            conjugator: self.conjugator.concat(&p.word()),
        }
    }
}

/// Iteration cap for reaching the super summit set: `2(ℓ+2)(|Δ|+1)`.
pub fn sss_iteration_cap(x: &GarsideNormalForm) -> usize {
    let n = x.strands();
    2 * (x.canonical_length() + 2) * (n * (n - 1) / 2 + 1)
}

/// Raise `inf` by cycling and lower `sup` by decycling until both are extremal.
pub fn send_to_sss_nf(x: &GarsideNormalForm) -> Result<ConjugacyWitness> {
    let n = x.strands();
    let patience = n * (n - 1) / 2;
    let cap = sss_iteration_cap(x);
    let mut total = 0usize;
    let mut w = ConjugacyWitness::trivial(x.clone());
    let mut step = |w: &mut ConjugacyWitness, decycling: bool| -> Result<()> {
        let mut stale = 0;
        while stale < patience && !w.element.factors().is_empty() {
            total += 1;
            if total > cap {
                return Err(Error::IterationCap {
                    what: "send_to_sss",
                    cap,
                });
            }
            let next = if decycling { w.decycled() } else { w.cycled() };
            let improved = if decycling {
                next.element.sup() < w.element.sup()
            } else {
                next.element.inf() > w.element.inf()
            };
            stale = if improved { 0 } else { stale + 1 };
            *w = next;
        }
        Ok(())
    };
    step(&mut w, false)?;
    step(&mut w, true)?;
    Ok(w)
}

pub fn send_to_sss(x: &BraidWord) -> Result<ConjugacyWitness> {
    send_to_sss_nf(&GarsideNormalForm::of(x))
}

/// Iterate `f` from `start` until a state repeats; return the first
/// repeated state, which lies on the periodic orbit.
fn first_repeat(
    start: ConjugacyWitness,
    cap: usize,
    what: &'static str,
    f: impl Fn(&ConjugacyWitness) -> ConjugacyWitness,
) -> Result<ConjugacyWitness> {
    let mut seen: HashMap<GarsideNormalForm, usize> = HashMap::new();
    let mut trail = vec![start];
    loop {
        let cur = trail.last().expect("nonempty");
        if let Some(&i) = seen.get(&cur.element) {
            return Ok(trail.swap_remove(i));
        }
        if trail.len() > cap {
            return Err(Error::IterationCap { what, cap });
        }
        seen.insert(cur.element.clone(), trail.len() - 1);
        let next = f(cur);
        trail.push(next);
    }
}

pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

pub fn send_to_uss_nf(x: &GarsideNormalForm) -> Result<ConjugacyWitness> {
    let s = send_to_sss_nf(x)?;
    first_repeat(s, DEFAULT_ORBIT_CAP, "send_to_uss", |w| w.cycled())
}

pub fn send_to_uss(x: &BraidWord) -> Result<ConjugacyWitness> {
    send_to_uss_nf(&GarsideNormalForm::of(x))
}

pub fn send_to_sc_nf(x: &GarsideNormalForm) -> Result<ConjugacyWitness> {
    first_repeat(
        ConjugacyWitness::trivial(x.clone()),
        DEFAULT_ORBIT_CAP,
        "send_to_sc",
        |w| w.slid(),
    )
}

pub fn send_to_sc(x: &BraidWord) -> Result<ConjugacyWitness> {
    send_to_sc_nf(&GarsideNormalForm::of(x))
}

/// True when `f^m(y) = y` for some `m ≥ 1`, assuming the orbit of `y` is finite.
pub(crate) fn is_periodic(
    y: &GarsideNormalForm,
    f: impl Fn(&GarsideNormalForm) -> GarsideNormalForm,
) -> bool {
    let mut seen = std::collections::HashSet::new();
    let mut cur = f(y);
    loop {
        if cur == *y {
            return true;
        }
        if !seen.insert(cur.clone()) {
            return false;
        }
        cur = f(&cur);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(n: usize, letters: &[i32]) -> GarsideNormalForm {
        GarsideNormalForm::of(&BraidWord::new(n, letters.to_vec()).unwrap())
    }

    #[test]
    fn generators_are_fixed_by_cycling() {
        for i in 1..4 {
            let x = nf(4, &[i]);
            assert_eq!(cycle(&x), x);
        }
    }

    #[test]
    fn delta_powers_are_fixed() {
        let x = nf(4, &[1, 2, 3, 1, 2, 1, 1, 2, 3, 1, 2, 1, 1, 2, 3, 1, 2, 1]);
        assert_eq!(x.delta_power(), 3);
        assert_eq!(cycle(&x), x);
        assert_eq!(decycle(&x), x);
        assert!(initial_factor(&x).is_identity());
        assert!(final_factor(&x).is_delta());
        assert!(preferred_prefix(&x).is_identity());
        assert!(is_rigid(&x));
    }

    #[test]
    fn factor_reading_with_zero_power() {
        let x = GarsideNormalForm::from_parts(
            Artin::new(4),
            0,
            vec![
                PermutationBraid::from_word(&BraidWord::new(4, vec![1, 2, 1]).unwrap()).unwrap(),
                PermutationBraid::from_word(&BraidWord::new(4, vec![2, 1]).unwrap()).unwrap(),
            ],
        );
        assert_eq!(x.delta_power(), 0);
        assert_eq!(initial_factor(&x).word().letters(), &[1, 2, 1]);
        assert_eq!(final_factor(&x).word().letters(), &[2, 1]);
    }

    #[test]
    fn el_rifai_morton_example() {
        let mut letters = BraidWord::delta(4).letters().to_vec();
        letters.extend([1, 1]);
        let w = send_to_sss(&BraidWord::new(4, letters).unwrap()).unwrap();
        assert_eq!(w.element, nf(4, &[1, 2, 3, 1, 2, 1, 1, 3]));
        assert_eq!(w.element.delta_power(), 1);
    }

    #[test]
    fn witnesses_verify() {
        let x = nf(5, &[1, -2, 3, 3, -4, 1, 2, -1, 4, 4]);
        for w in [
            send_to_sss_nf(&x).unwrap(),
            send_to_uss_nf(&x).unwrap(),
            send_to_sc_nf(&x).unwrap(),
        ] {
            assert!(w.verify(&x));
        }
    }
}
