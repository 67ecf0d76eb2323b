use crate::braid_core::{BraidWord, Permutation};
use crate::error::{Error, Result};

/// The prime `2^62 - 57`.
pub const FINGERPRINT_PRIME: u64 = 4_611_686_018_427_387_847;

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse modulo a prime, by Fermat.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// A square matrix over `Z/p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModMatrix {
    size: usize,
    p: u64,
    entries: Vec<u64>,
}

impl ModMatrix {
    pub fn identity(size: usize, p: u64) -> Self {
        let mut entries = vec![0; size * size];
        for i in 0..size {
            entries[i * size + i] = 1;
        }
        Self { size, p, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.size + j]
    }

    pub fn mul(&self, rhs: &ModMatrix) -> ModMatrix {
        let n = self.size;
        let p = self.p;
        let mut entries = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b != 0 {
                        let e = &mut entries[i * n + j];
                        *e = add_mod(*e, mul_mod(a, b, p), p);
                    }
                }
            }
        }
        ModMatrix {
            size: n,
            p,
            entries,
        }
    }

    /// Right-multiply in place by `C_i(t)^{±1}`, which differs from the
    /// identity only in row `i`.
    fn mul_generator(&mut self, i: usize, t: u64, t_inv: u64, positive: bool) {
        let n = self.size;
        let p = self.p;
        let (left, mid, right) = if positive {
            (t, p - t, 1)
        } else {
            (1, p - t_inv, t_inv)
        };
        for r in 0..n {
            let m_ri = self.entries[r * n + i];
            if i > 0 {
                let e = &mut self.entries[r * n + i - 1];
                *e = add_mod(*e, mul_mod(m_ri, left, p), p);
            }
            if i + 1 < n {
                let e = &mut self.entries[r * n + i + 1];
                *e = add_mod(*e, mul_mod(m_ri, right, p), p);
            }
            self.entries[r * n + i] = mul_mod(m_ri, mid, p);
        }
    }
}

/// Reduced Burau image of `w` evaluated at `t` modulo `p`.
pub fn burau_eval(w: &BraidWord, t: u64, p: u64) -> Result<ModMatrix> {
    let t = t % p;
    if t == 0 {
        return Err(Error::InvalidArgument("t must be invertible mod p".into()));
    }
    let t_inv = inv_mod(t, p);
    let mut m = ModMatrix::identity(w.strands() - 1, p);
    for &l in w.letters() {
        m.mul_generator(l.unsigned_abs() as usize - 1, t, t_inv, l > 0);
    }
    Ok(m)
}

/// A braid word prepared for colored Burau evaluation modulo `p`.
#[derive(Clone, Debug)]
pub struct ColoredBurauElement {
    pub perm: Permutation,
    pub word: BraidWord,
    pub modulus: u64,
    pub arity: usize,
}

impl ColoredBurauElement {
    pub fn new(word: BraidWord, modulus: u64) -> Self {
        Self {
            perm: word.perm_of(),
            arity: word.strands(),
            word,
            modulus,
        }
    }

    /// `M_w(τ_1, …, τ_n)`.
    ///
    /// Label `τ_j` is carried by the strand that finishes at position `j`;
    /// at each crossing the under-strand is the one moving right under
    /// `σ_i` and the one moving left under `σ_i^{-1}`.
    pub fn eval(&self, taus: &[u64]) -> Result<(Permutation, ModMatrix)> {
        let n = self.arity;
        let p = self.modulus;
        if taus.len() != n {
            return Err(Error::InvalidArgument(format!(
                "expected {n} evaluation points, got {}",
                taus.len()
            )));
        }
        if taus.iter().any(|&t| t % p == 0) {
            return Err(Error::InvalidArgument(
                "every τ_i must be nonzero mod p".into(),
            ));
        }
        let inverses: Vec<u64> = taus.iter().map(|&t| inv_mod(t, p)).collect();
        let finish = self.perm.raw();
        let mut strand_at: Vec<usize> = (0..n).collect();
        let mut m = ModMatrix::identity(n - 1, p);
        for &l in self.word.letters() {
            let i = l.unsigned_abs() as usize - 1;
            let under = if l > 0 {
                strand_at[i]
            } else {
                strand_at[i + 1]
            };
            let label = finish[under] as usize;
            m.mul_generator(i, taus[label] % p, inverses[label], l > 0);
            strand_at.swap(i, i + 1);
        }
        Ok((self.perm.clone(), m))
    }
}

/// `M_w(τ)` as a pair `(π_w, M)`.
pub fn colored_burau_eval(w: &BraidWord, taus: &[u64], p: u64) -> Result<(Permutation, ModMatrix)> {
    ColoredBurauElement::new(w.clone(), p).eval(taus)
}

/// The action of a permutation on evaluation tuples: entry `j` moves to `π(j)`.
pub fn permute_tuple(pi: &Permutation, taus: &[u64]) -> Vec<u64> {
    let mut out = vec![0; taus.len()];
    for (j, &t) in taus.iter().enumerate() {
        out[pi.apply(j + 1) - 1] = t;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word_problem::laurent::reduced_burau;

    const P: u64 = 1_000_000_007;

    #[test]
    fn eval_matches_exact_matrix() {
        let w = BraidWord::new(4, vec![1, -2, 3, 2, -1, -3, 2]).unwrap();
        let exact = reduced_burau(&w);
        let t = 123_456;
        let m = burau_eval(&w, t, P).unwrap();
        let t_inv = inv_mod(t, P);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), exact.get(i, j).eval_mod(t, t_inv, P));
            }
        }
    }

    #[test]
    fn colored_generators() {
        let taus = [2, 3, 5, 7];
        let (_, m) = colored_burau_eval(&BraidWord::new(4, vec![2]).unwrap(), &taus, P).unwrap();
        // C_2(t_3): row 2 is (t, -t, 1)
        assert_eq!((m.get(1, 0), m.get(1, 1), m.get(1, 2)), (5, P - 5, 1));
        let (_, m) = colored_burau_eval(&BraidWord::new(4, vec![-2]).unwrap(), &taus, P).unwrap();
        // C_2(t_2)^{-1}: row 2 is (1, -t^{-1}, t^{-1})
        let i3 = inv_mod(3, P);
        assert_eq!((m.get(1, 0), m.get(1, 1), m.get(1, 2)), (1, P - i3, i3));
    }

    #[test]
    fn zero_tau_rejected() {
        let w = BraidWord::new(3, vec![1]).unwrap();
        assert!(colored_burau_eval(&w, &[1, 0, 2], P).is_err());
        assert!(colored_burau_eval(&w, &[1, 2], P).is_err());
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(mul_mod(inv_mod(12345, P), 12345, P), 1);
        assert_eq!(pow_mod(2, 10, P), 1024);
    }
}
