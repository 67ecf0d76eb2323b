use crate::braid_core::BraidWord;
use crate::error::{Error, Result};

pub const DEFAULT_HANDLE_BUDGET: u64 = 10_000_000;

/// Result of a complete handle reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HandleReduction {
    pub word: BraidWord,
    pub steps: u64,
}

/// Find the handle with the smallest right end at or after `from`.
/// Returns `(start, end)` as letter indices.
fn next_handle(letters: &[i32], from: usize) -> Option<(usize, usize)> {
    for q in from..letters.len() {
        let lq = letters[q];
        let i = lq.abs();
        let mut d = 0;
        let mut p = q;
        while p > 0 {
            p -= 1;
            let l = letters[p];
            let j = l.abs();
            if j > i + 1 {
                continue;
            }
            if j == i + 1 {
                if d == 0 {
                    d = l.signum();
                } else if d != l.signum() {
                    break;
                }
                continue;
            }
            if j == i && l == -lq {
                return Some((p, q));
            }
            break;
        }
    }
    None
}

/// Dehornoy handle reduction, always reducing the handle whose right end
/// comes first. Fails with a budget error rather than returning a partial word.
pub fn handle_reduce_with_budget(w: &BraidWord, budget: u64) -> Result<HandleReduction> {
    let mut letters = w.letters().to_vec();
    let mut steps = 0u64;
    let mut from = 0;
    while let Some((p, q)) = next_handle(&letters, from) {
        if steps >= budget {
            return Err(Error::BudgetExceeded { budget });
        }
        steps += 1;
        let e = letters[p].signum();
        let i = letters[p].abs();
        let mut replacement = Vec::with_capacity(3 * (q - p));
        for &l in &letters[p + 1..q] {
            if l.abs() == i + 1 {
                replacement.extend_from_slice(&[-e * (i + 1), l.signum() * i, e * (i + 1)]);
            } else {
                replacement.push(l);
            }
        }
        letters.splice(p..=q, replacement);
        from = p;
    }
    Ok(HandleReduction {
        word: BraidWord::new(w.strands(), letters)?,
        steps,
    })
}

pub fn handle_reduce(w: &BraidWord) -> Result<BraidWord> {
    handle_reduce_with_budget(w, DEFAULT_HANDLE_BUDGET).map(|r| r.word)
}

/// True when the word contains no handle.
pub fn is_handle_free(w: &BraidWord) -> bool {
    next_handle(w.letters(), 0).is_none()
}
