use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Images = SmallVec<[u8; 16]>;

/// A permutation of `{1, …, n}`, stored 0-based.
///
/// `images[i]` is where the strand starting at position `i` ends up, so the
/// permutation of a product `uv` is `perm(u).then(perm(v))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Images,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize + 1, "at most 256 strands supported");
        Self {
            images: (0..n).map(|i| i as u8).collect(),
        }
    }

    /// The order-reversing permutation `i ↦ n+1-i`.
    pub fn reversal(n: usize) -> Self {
        Self {
            images: (0..n).rev().map(|i| i as u8).collect(),
        }
    }

    /// Builds a permutation from 1-based images, checking bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Images::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[img - 1] = true;
            out.push((img - 1) as u8);
        }
        Ok(Self { images: out })
    }

    pub(crate) fn from_raw(images: Images) -> Self {
        debug_assert!({
            let mut s: Vec<u8> = images.to_vec();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Self { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 1-based image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub(crate) fn raw_mut(&mut self) -> &mut Images {
        &mut self.images
    }

    /// 1-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i)
    }

    /// `self` followed by `other`: `x ↦ other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&v| other.images[v as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut out: Images = SmallVec::from_elem(0, self.len());
        for (i, &v) in self.images.iter().enumerate() {
            out[v as usize] = i as u8;
        }
        Permutation { images: out }
    }

    /// Number of inverted pairs.
    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Swap the images of positions `i` and `i+1` (0-based), i.e. precompose
    /// with the transposition `(i i+1)`.
    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.images.swap(i, i + 1);
    }

    /// Conjugate by the reversal: `x ↦ n+1-π(n+1-x)`.
    pub(crate) fn flip(&self) -> Permutation {
        let n = self.len() as u8;
        Permutation {
            images: self.images.iter().rev().map(|&v| n - 1 - v).collect(),
        }
    }

    /// Embed into `S_m` for `m >= n`, fixing the new points.
    pub fn extend(&self, m: usize) -> Permutation {
        assert!(m >= self.len());
        let mut images = self.images.clone();
        images.extend((self.len()..m).map(|i| i as u8));
        Permutation { images }
    }

    /// All permutations of `{1..n}` in lexicographic order of their image tables.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Permutation {
                images: current.iter().copied().collect(),
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images())
    }
}

/// One-line notation with 1-based images separated by single spaces.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", *v as usize + 1)?;
        }
        Ok(())
    }
}
