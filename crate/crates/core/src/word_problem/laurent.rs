use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::braid_core::BraidWord;

/// A Laurent polynomial in `t` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · t^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(e, BigInt::from(c));
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: i32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// `Some((±1, k))` when the polynomial is `±t^k`.
    pub fn as_unit(&self) -> Option<(i32, i32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some((1, e))
        } else if (-c).is_one() {
            Some((-1, e))
        } else {
            None
        }
    }

    fn add_term(&mut self, e: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Evaluate modulo `p` at `t`, with `t_inv` its inverse.
    pub fn eval_mod(&self, t: u64, t_inv: u64, p: u64) -> u64 {
        let pb = BigInt::from(p);
        let mut acc = 0u64;
        for (&e, c) in &self.terms {
            let base = if e >= 0 { t } else { t_inv };
            let pw = super::modp::pow_mod(base, e.unsigned_abs() as u64, p);
            let mut cm = c % &pb;
            if cm < BigInt::zero() {
                cm += &pb;
            }
            let cm: u64 = cm.try_into().expect("reduced below p");
            acc = super::modp::add_mod(acc, super::modp::mul_mod(cm, pw, p), p);
        }
        acc
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}t")?,
                _ => write!(f, "{c}t^{e}")?,
            }
        }
        Ok(())
    }
}

/// A square matrix over `Z[t, t^{-1}]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentMatrix {
    size: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn identity(size: usize) -> Self {
        let mut entries = vec![LaurentPoly::zero(); size * size];
        for i in 0..size {
            entries[i * size + i] = LaurentPoly::one();
        }
        Self { size, entries }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let size = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == size),
            "matrix must be square"
        );
        Self {
            size,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// 0-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.size + j]
    }

    fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.size + j] = v;
    }

    pub fn mul(&self, rhs: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.size, rhs.size);
        let n = self.size;
        let mut out = LaurentMatrix {
            size: n,
            entries: vec![LaurentPoly::zero(); n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// Determinant by cofactor expansion; intended for small sizes.
    pub fn determinant(&self) -> LaurentPoly {
        fn det(m: &LaurentMatrix, rows: &[usize], cols: &[usize]) -> LaurentPoly {
            if rows.is_empty() {
                return LaurentPoly::one();
            }
            let r = rows[0];
            let mut acc = LaurentPoly::zero();
            for (k, &c) in cols.iter().enumerate() {
                let a = m.get(r, c);
                if a.is_zero() {
                    continue;
                }
                let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = a * &det(m, &rows[1..], &sub_cols);
                acc = if k % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
        let idx: Vec<usize> = (0..self.size).collect();
        det(self, &idx, &idx)
    }
}

/// The reduced Burau matrix `C_i(t)` of `σ_i^{±1}` in `B_n` (size `n-1`).
///
/// Row `i` carries `t, -t, 1` in columns `i-1, i, i+1`, truncated at the
/// edges; the inverse has `1, -t^{-1}, t^{-1}` there.
pub fn burau_generator(n: usize, letter: i32) -> LaurentMatrix {
    let size = n - 1;
    let i = letter.unsigned_abs() as usize - 1;
    let mut m = LaurentMatrix::identity(size);
    let (left, mid, right) = if letter > 0 {
        (
            LaurentPoly::monomial(1, 1),
            LaurentPoly::monomial(-1, 1),
            LaurentPoly::one(),
        )
    } else {
        (
            LaurentPoly::one(),
            LaurentPoly::monomial(-1, -1),
            LaurentPoly::monomial(1, -1),
        )
    };
    if i > 0 {
        m.set(i, i - 1, left);
    }
    m.set(i, i, mid);
    if i + 1 < size {
        m.set(i, i + 1, right);
    }
    m
}

/// Exact reduced Burau image of a word.
pub fn reduced_burau(w: &BraidWord) -> LaurentMatrix {
    let n = w.strands();
    let mut m = LaurentMatrix::identity(n - 1);
    for &l in w.letters() {
        m = m.mul(&burau_generator(n, l));
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: i64, e: i32) -> LaurentPoly {
        LaurentPoly::monomial(c, e)
    }

    #[test]
    fn sigma1_in_b3() {
        let m = reduced_burau(&BraidWord::new(3, vec![1]).unwrap());
        let want = LaurentMatrix::from_rows(vec![vec![p(-1, 1), p(1, 0)], vec![p(0, 0), p(1, 0)]]);
        assert_eq!(m, want);
    }

    #[test]
    fn inverse_and_braid_relation() {
        for n in 3..6 {
            for i in 1..n as i32 {
                let m = reduced_burau(&BraidWord::new(n, vec![i, -i]).unwrap());
                assert_eq!(m, LaurentMatrix::identity(n - 1));
            }
        }
        let a = reduced_burau(&BraidWord::new(3, vec![1, 2, 1]).unwrap());
        let b = reduced_burau(&BraidWord::new(3, vec![2, 1, 2]).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn determinant_is_a_unit() {
        let m = reduced_burau(&BraidWord::new(4, vec![1, -2, 3, 3, -1, 2]).unwrap());
        let (sign, e) = m.determinant().as_unit().unwrap();
        // each σ_i contributes -t, each inverse -t^{-1}
        assert_eq!((sign, e), (1, 2));
    }

    #[test]
    fn polynomial_arithmetic() {
        let a = &p(1, 1) + &p(-1, 0);
        let b = &p(1, 1) + &p(1, 0);
        assert_eq!(&a * &b, &p(1, 2) + &p(-1, 0));
        assert!((&a - &a).is_zero());
        assert_eq!(format!("{}", &p(2, -1) + &p(3, 2)), "2t^-1 + 3t^2");
    }
}
