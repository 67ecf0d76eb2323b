use sha2::{Digest, Sha256};

use crate::braid_core::BraidWord;
use crate::normal_form::GarsideNormalForm;

/// `len` bytes of SHA-256 in counter mode over the canonical serialization.
pub fn hash_normal_form(x: &GarsideNormalForm, len: usize) -> Vec<u8> {
    let text = x.to_string();
    let mut out = Vec::with_capacity(len + 32);
    let mut counter = 0u64;
    while out.len() < len {
        let mut h = Sha256::new();
        h.update(counter.to_be_bytes());
        h.update(text.as_bytes());
        out.extend_from_slice(&h.finalize());
        counter += 1;
    }
    out.truncate(len);
    out
}

/// Hash of the braid represented by `w`; equal braids hash equal.
pub fn hash_braid(w: &BraidWord, len: usize) -> Vec<u8> {
    hash_normal_form(&GarsideNormalForm::of(w), len)
}

pub fn xor_bytes(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depends_on_the_braid_not_the_word() {
        let a = BraidWord::new(3, vec![1, 2, 1]).unwrap();
        let b = BraidWord::new(3, vec![2, 1, 2]).unwrap();
        let c = BraidWord::new(3, vec![2, 2, 1]).unwrap();
        assert_eq!(hash_braid(&a, 100), hash_braid(&b, 100));
        assert_ne!(hash_braid(&a, 100), hash_braid(&c, 100));
        assert_eq!(hash_braid(&a, 100).len(), 100);
        assert_eq!(hash_braid(&a, 100)[..32], hash_braid(&a, 32)[..]);
    }
}
