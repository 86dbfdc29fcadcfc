use std::collections::HashMap;

use super::transfer::{find_cycle, find_cycle_without_self_loops, TransferSystem};
use super::Limits;
use crate::error::{input, Error, Result};

/// A one-dimensional subshift of finite type: all bi-infinite words over
/// `0 .. alphabet_size` in which no forbidden word occurs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SftSpec {
    alphabet_size: usize,
    forbidden: Vec<Vec<usize>>,
}

impl SftSpec {
    pub fn new(alphabet_size: usize, forbidden: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if alphabet_size == 0 {
            return input("alphabet must be non-empty");
        }
        let mut words: Vec<Vec<usize>> = forbidden.into_iter().collect();
        for w in &words {
            if w.is_empty() {
                return input("forbidden words must be non-empty");
            }
            if let Some(&x) = w.iter().find(|&&x| x >= alphabet_size) {
                return input(format!("letter {x} is outside the alphabet of size {alphabet_size}"));
            }
        }
        words.sort();
        words.dedup();
        Ok(SftSpec {
            alphabet_size,
            forbidden: words,
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn forbidden_words(&self) -> &[Vec<usize>] {
        &self.forbidden
    }

    /// Length of the longest forbidden word (0 if there are none).
    pub fn window(&self) -> usize {
        self.forbidden.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// True iff no forbidden word occurs in `word`.
    pub fn avoids(&self, word: &[usize]) -> bool {
        self.forbidden.iter().all(|f| !word.windows(f.len()).any(|w| w == f.as_slice()))
    }

    /// True iff the bi-infinite repetition of `word` lies in the subshift.
    pub fn admits_periodic(&self, word: &[usize]) -> bool {
        let p = word.len();
        p > 0
            && (0..p).all(|i| {
                self.forbidden.iter().all(|f| f.iter().enumerate().any(|(j, &x)| word[(i + j) % p] != x))
            })
    }
}

/// De Bruijn-style transfer system of an SFT whose longest forbidden word
/// has length `m >= 2`: states are the admissible words of length `m - 1`
/// in lexicographic order, and `s → t` iff `t` extends `s` by one letter
/// into an admissible word of length `m`. With `m <= 1` the states are the
/// allowed single letters, all joined to each other.
pub fn build_transfer_sft(spec: &SftSpec, limits: &Limits) -> Result<TransferSystem> {
    let a = spec.alphabet_size;
    let len = spec.window().saturating_sub(1).max(1);
    let total = u32::try_from(len).ok().and_then(|l| a.checked_pow(l)).unwrap_or(usize::MAX);
    if total > limits.state_cap {
        return Err(Error::ResourceCap {
            what: "transfer states",
            count: total,
            cap: limits.state_cap,
        });
    }
    let states: Vec<Vec<usize>> = (0..total)
        .map(|mut x| {
            let mut w = vec![0; len];
            for slot in w.iter_mut().rev() {
                *slot = x % a;
                x /= a;
            }
            w
        })
        .filter(|w| spec.avoids(w))
        .collect();
    let index: HashMap<&[usize], usize> = states.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let successors = states
        .iter()
        .map(|s| {
            if spec.window() <= 1 {
                return (0..states.len()).collect();
            }
            (0..a)
                .filter_map(|x| {
                    let mut long = s.clone();
                    long.push(x);
                    if spec.avoids(&long) {
                        index.get(&long[1..]).copied()
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    TransferSystem::new("sft", states, successors)
}

/// A word whose bi-infinite repetition lies in the subshift, or `None` if
/// the subshift is empty. Non-constant periodic points are preferred: the
/// shortest cycle of distinct states is used when one exists, and a fixed
/// point otherwise.
pub fn sft_periodic_point(spec: &SftSpec, limits: &Limits) -> Result<Option<Vec<usize>>> {
    let ts = build_transfer_sft(spec, limits)?;
    let cycle = find_cycle_without_self_loops(&ts).or_else(|| find_cycle(&ts));
    let word = cycle.map(|c| c.iter().map(|&s| ts.states()[s][0]).collect::<Vec<_>>());
    if let Some(w) = &word {
        assert!(spec.admits_periodic(w), "periodic point contains a forbidden word");
    }
    Ok(word)
}
