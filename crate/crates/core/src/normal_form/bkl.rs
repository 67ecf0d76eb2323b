use std::fmt;

use crate::braid_core::{BandLetter, BandWord, BraidWord, Images, Permutation};
use crate::error::{Error, Result};

use super::garside::Garside;

/// A Birman–Ko–Lee canonical factor: a product of parallel descending
/// cycles `a_{b_m b_{m-1}} ⋯ a_{b_2 b_1}` over the blocks of a noncrossing
/// partition. Stored by its permutation, which sends each block element to
/// the next larger one in its block and the largest back to the smallest.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalFactor {
    perm: Permutation,
}

impl CanonicalFactor {
    pub fn identity(n: usize) -> Self {
        Self {
            perm: Permutation::identity(n),
        }
    }

    /// `δ_n`: a single block containing every strand.
    pub fn delta(n: usize) -> Self {
        let images: Images = (0..n).map(|i| ((i + 1) % n) as u8).collect();
        Self {
            perm: Permutation::from_raw(images),
        }
    }

    /// The band generator `a_{ts}`.
    pub fn band(n: usize, t: usize, s: usize) -> Self {
        Self::from_blocks(n, &[vec![s, t]]).expect("valid band generator")
    }

    /// Build from 1-based blocks; unmentioned points are singletons.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut images: Images = (0..n).map(|i| i as u8).collect();
        let mut used = vec![false; n];
        for block in blocks {
            let mut b = block.clone();
            b.sort_unstable();
            for (k, &x) in b.iter().enumerate() {
                if x == 0 || x > n || used[x - 1] {
                    return Err(Error::InvalidArgument(format!(
                        "blocks {blocks:?} do not partition 1..={n}"
                    )));
                }
                used[x - 1] = true;
                images[x - 1] = (b[(k + 1) % b.len()] - 1) as u8;
            }
        }
        Self::from_perm(Permutation::from_raw(images))
            .ok_or_else(|| Error::InvalidArgument(format!("blocks {blocks:?} are not noncrossing")))
    }

    /// Accepts exactly the permutations of canonical factors.
    pub fn from_perm(perm: Permutation) -> Option<Self> {
        is_canonical(perm.raw()).then_some(Self { perm })
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn strands(&self) -> usize {
        self.perm.len()
    }

    /// Blocks of size at least two, each sorted, ordered by smallest element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let r = self.perm.raw();
        let mut out = Vec::new();
        for start in 0..r.len() {
            // the smallest element of a block is the image of its largest
            if r[start] as usize > start {
                let is_min = r.iter().position(|&v| v as usize == start).unwrap() >= start;
                if is_min {
                    let mut block = vec![start + 1];
                    let mut x = r[start] as usize;
                    while x != start {
                        block.push(x + 1);
                        x = r[x] as usize;
                    }
                    out.push(block);
                }
            }
        }
        out
    }

    /// Band-generator length: `Σ (|block| - 1)`.
    pub fn len(&self) -> usize {
        let r = self.perm.raw();
        r.iter()
            .enumerate()
            .filter(|&(i, &v)| v as usize > i)
            .count()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_identity()
    }

    /// The factor as a band word, block by block.
    pub fn band_word(&self) -> BandWord {
        let mut letters = Vec::new();
        for block in self.blocks() {
            for k in (1..block.len()).rev() {
                letters.push(BandLetter {
                    t: block[k],
                    s: block[k - 1],
                    inverse: false,
                });
            }
        }
        BandWord::new(self.strands(), letters).expect("valid blocks")
    }
}

fn is_canonical(r: &[u8]) -> bool {
    let n = r.len();
    // each cycle ascends, with exactly one descent back to its minimum
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut descents = 0;
        let mut x = start;
        loop {
            seen[x] = true;
            let y = r[x] as usize;
            if y < x {
                descents += 1;
            }
            x = y;
            if x == start {
                break;
            }
        }
        if descents > 1 {
            return false;
        }
    }
    // every arc i → π(i) with i < π(i) must enclose only points mapped inside it
    for i in 0..n {
        let j = r[i] as usize;
        if j > i
            && r[i + 1..j]
                .iter()
                .any(|&y| (y as usize) <= i || (y as usize) >= j)
        {
            return false;
        }
    }
    true
}

/// Every canonical factor of `B_n`: one per noncrossing partition.
pub fn enumerate_canonical_factors(n: usize, cap: usize) -> Result<Vec<CanonicalFactor>> {
    if n > cap {
        let catalan =
            (n as u128 + 2..=2 * n as u128).product::<u128>() / (1..=n as u128).product::<u128>();
        return Err(Error::EnumerationCap {
            what: "canonical factors",
            n,
            cap,
            size: catalan,
        });
    }
    let mut out = Vec::new();
    // restricted growth strings enumerate set partitions; keep noncrossing ones
    let mut labels = vec![0usize; n];
    fn rec(pos: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<CanonicalFactor>) {
        let n = labels.len();
        if pos == n {
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); max + 1];
            for (i, &l) in labels.iter().enumerate() {
                blocks[l].push(i + 1);
            }
            if let Ok(f) = CanonicalFactor::from_blocks(n, &blocks) {
                out.push(f);
            }
            return;
        }
        for l in 0..=max + 1 {
            labels[pos] = l;
            rec(pos + 1, max.max(l), labels, out);
        }
    }
    if n == 0 {
        return Ok(out);
    }
    rec(1, 0, &mut labels, &mut out);
    out.sort();
    Ok(out)
}

impl fmt::Debug for CanonicalFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Canonical{:?}", self.blocks())
    }
}

impl fmt::Display for CanonicalFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.perm, f)
    }
}

/// The Birman–Ko–Lee structure with `δ_n` and canonical factors.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Bkl {
    n: usize,
}

impl Bkl {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "need at least 2 strands");
        Self { n }
    }

    fn unchecked(&self, perm: Permutation) -> CanonicalFactor {
        debug_assert!(is_canonical(perm.raw()), "not canonical: {perm:?}");
        CanonicalFactor { perm }
    }
}

impl Garside for Bkl {
    type Simple = CanonicalFactor;

    const DELTA_SYMBOL: &'static str = "d";

    fn strands(&self) -> usize {
        self.n
    }

    fn identity(&self) -> CanonicalFactor {
        CanonicalFactor::identity(self.n)
    }

    fn delta(&self) -> CanonicalFactor {
        CanonicalFactor::delta(self.n)
    }

    fn perm<'a>(&self, a: &'a CanonicalFactor) -> &'a Permutation {
        &a.perm
    }

    fn simple_of_perm(&self, p: Permutation) -> Option<CanonicalFactor> {
        if p.len() != self.n {
            return None;
        }
        CanonicalFactor::from_perm(p)
    }

    fn artin_generator(&self, i: usize) -> CanonicalFactor {
        CanonicalFactor::band(self.n, i + 1, i)
    }

    fn meet(&self, a: &CanonicalFactor, b: &CanonicalFactor) -> CanonicalFactor {
        // blocks of the meet are intersections of blocks
        let ra = a.perm.raw();
        let rb = b.perm.raw();
        let n = self.n;
        let mut label_b = vec![0u8; n];
        for start in 0..n {
            if label_b[start] == 0 {
                let mut x = start;
                loop {
                    label_b[x] = start as u8 + 1;
                    x = rb[x] as usize;
                    if x == start {
                        break;
                    }
                }
            }
        }
        let images: Images = (0..n)
            .map(|i| {
                let mut x = ra[i] as usize;
                while label_b[x] != label_b[i] {
                    x = ra[x] as usize;
                }
                x as u8
            })
            .collect();
        self.unchecked(Permutation::from_raw(images))
    }

    fn left_divide(&self, a: &CanonicalFactor, b: &CanonicalFactor) -> Option<CanonicalFactor> {
        // a ≼ b iff the partition of a refines that of b
        let ra = a.perm.raw();
        let rb = b.perm.raw();
        for i in 0..self.n {
            let j = ra[i] as usize;
            if j != i {
                let mut x = rb[i] as usize;
                while x != i && x != j {
                    x = rb[x] as usize;
                }
                if x != j {
                    return None;
                }
            }
        }
        Some(self.unchecked(a.perm.inverse().then(&b.perm)))
    }

    fn product(&self, a: &CanonicalFactor, b: &CanonicalFactor) -> Option<CanonicalFactor> {
        let p = a.perm.then(&b.perm);
        let c = CanonicalFactor::from_perm(p)?;
        (c.len() == a.len() + b.len()).then_some(c)
    }

    fn tau_power(&self, a: &CanonicalFactor, k: i64) -> CanonicalFactor {
        let n = self.n as i64;
        let k = k.rem_euclid(n) as usize;
        if k == 0 {
            return a.clone();
        }
        // δ^{-k} a δ^k moves each point by k
        let r = a.perm.raw();
        let mut images: Images = smallvec::smallvec![0; self.n];
        for x in 0..self.n {
            let src = (x + self.n - k) % self.n;
            images[x] = ((r[src] as usize + k) % self.n) as u8;
        }
        self.unchecked(Permutation::from_raw(images))
    }

    fn simple_len(&self, a: &CanonicalFactor) -> usize {
        a.len()
    }

    fn delta_len(&self) -> usize {
        self.n - 1
    }

    fn simple_to_artin(&self, a: &CanonicalFactor) -> BraidWord {
        a.band_word().to_artin()
    }

    fn delta_word(&self) -> BraidWord {
        BraidWord::small_delta(self.n)
    }

    fn right_complement(&self, a: &CanonicalFactor) -> CanonicalFactor {
        self.unchecked(a.perm.inverse().then(&CanonicalFactor::delta(self.n).perm))
    }

    fn left_complement(&self, a: &CanonicalFactor) -> CanonicalFactor {
        self.unchecked(CanonicalFactor::delta(self.n).perm.then(&a.perm.inverse()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        for (n, c) in [(2, 2), (3, 5), (4, 14), (5, 42), (6, 132)] {
            assert_eq!(enumerate_canonical_factors(n, 7).unwrap().len(), c);
        }
        assert!(enumerate_canonical_factors(8, 7).is_err());
    }

    #[test]
    fn permutations_match_band_expansion() {
        for n in 2..6 {
            for f in enumerate_canonical_factors(n, 7).unwrap() {
                assert_eq!(f.band_word().to_artin().perm_of(), f.perm);
                assert_eq!(f.band_word().len(), f.len());
            }
        }
        let d = CanonicalFactor::delta(4);
        assert_eq!(d.perm.images(), vec![2, 3, 4, 1]);
        assert_eq!(BraidWord::small_delta(4).perm_of(), d.perm);
    }

    #[test]
    fn crossing_blocks_rejected() {
        assert!(CanonicalFactor::from_blocks(4, &[vec![1, 3], vec![2, 4]]).is_err());
        assert!(CanonicalFactor::from_blocks(4, &[vec![1, 4], vec![2, 3]]).is_ok());
        // a descending 3-cycle is not canonical
        let p = Permutation::from_images(&[3, 1, 2]).unwrap();
        assert!(CanonicalFactor::from_perm(p).is_none());
    }

    #[test]
    fn lattice_operations_agree_with_refinement() {
        let g = Bkl::new(5);
        let all = enumerate_canonical_factors(5, 7).unwrap();
        for a in &all {
            assert!(g.is_prefix(a, &g.delta()));
            let c = g.right_complement(a);
            assert_eq!(g.product(a, &c).as_ref(), Some(&g.delta()));
            assert_eq!(g.left_complement(&c), *a);
            for b in &all {
                let m = g.meet(a, b);
                assert!(g.is_prefix(&m, a) && g.is_prefix(&m, b));
                for c in &all {
                    if g.is_prefix(c, a) && g.is_prefix(c, b) {
                        assert!(g.is_prefix(c, &m));
                    }
                }
            }
        }
    }

    #[test]
    fn tau_is_conjugation_by_delta() {
        let g = Bkl::new(5);
        for a in enumerate_canonical_factors(5, 7).unwrap() {
            let t = g.tau_power(&a, 1);
            let d = CanonicalFactor::delta(5).perm;
            assert_eq!(t.perm, d.inverse().then(&a.perm).then(&d));
            assert_eq!(g.tau_power(&a, 5), a);
        }
    }
}
