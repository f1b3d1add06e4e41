//! Permutations of `{0, …, n−1}`: lexicographic enumeration, parity, and the
//! canonical reduced word in simple transpositions.

use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_permutations`]; `10!` is already 3.6M.
pub const MAX_ENUMERATION: usize = 10;

/// A bijection on `{0, …, n−1}`; position `k` holds `elems[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    elems: Vec<usize>,
}

impl Permutation {
    pub fn new(elems: Vec<usize>) -> Result<Self> {
        let n = elems.len();
        let mut seen = vec![false; n];
        for &e in &elems {
            if e >= n || seen[e] {
                return Err(Error::Structural(format!(
                    "{elems:?} is not a permutation of 0..{n}"
                )));
            }
            seen[e] = true;
        }
        Ok(Self { elems })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            elems: (0..n).collect(),
        }
    }

    /// The reversal `(n−1, …, 1, 0)`, the longest element of the symmetric group.
    pub fn maximum(n: usize) -> Self {
        Self {
            elems: (0..n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.elems
    }

    pub fn inversions(&self) -> usize {
        let e = &self.elems;
        (0..e.len())
            .map(|a| e[a + 1..].iter().filter(|&&b| b < e[a]).count())
            .sum()
    }

    /// `+1` for even permutations, `−1` for odd ones.
    pub fn parity(&self) -> i8 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Minimal word in simple transpositions whose left-to-right replay on the
    /// identity yields `self`.
    ///
    /// Values are inserted in increasing order: value `v` starts at position
    /// `v` and is walked left by `s_v, s_{v−1}, …` until it sits at its rank
    /// among the values `≤ v`. For the reversal this produces the nested form
    /// `s₁ (s₂ s₁) (s₃ s₂ s₁) …`.
    pub fn canonical_reduced_decomposition(&self) -> ReducedWord {
        let mut word = Vec::with_capacity(self.inversions());
        let mut position = vec![0usize; self.len()];
        for (k, &v) in self.elems.iter().enumerate() {
            position[v] = k;
        }
        for v in 1..self.len() {
            let target = (0..v).filter(|&u| position[u] < position[v]).count();
            word.extend((target + 1..=v).rev());
        }
        ReducedWord {
            n: self.len(),
            word,
        }
    }
}

/// A word `s_{i₁} s_{i₂} …` in simple transpositions, applied left to right.
///
/// Indices run over `1..n`; `s_i` swaps 0-based positions `i−1` and `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedWord {
    n: usize,
    word: Vec<usize>,
}

impl ReducedWord {
    pub fn new(n: usize, word: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = word.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::bounds("simple transposition index", bad, format!("1..={}", n.saturating_sub(1))));
        }
        Ok(Self { n, word })
    }

    pub fn letters(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Replays the word as adjacent swaps on the identity arrangement.
    pub fn apply_to_identity(&self) -> Permutation {
        let mut elems: Vec<usize> = (0..self.n).collect();
        for &i in &self.word {
            elems.swap(i - 1, i);
        }
        Permutation { elems }
    }
}

/// All `n!` permutations of `{0, …, n−1}` in lexicographic order.
pub fn enumerate_permutations(n: usize) -> Result<Permutations> {
    if !(1..=MAX_ENUMERATION).contains(&n) {
        return Err(Error::bounds("n", n, format!("1..={MAX_ENUMERATION}")));
    }
    Ok(Permutations {
        next: Some((0..n).collect()),
    })
}

/// Lexicographic permutation stream returned by [`enumerate_permutations`].
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { elems: current })
    }
}

fn next_lexicographic(v: &mut [usize]) -> bool {
    let Some(pivot) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]).map(|i| i - 1) else {
        return false;
    };
    let succ = (pivot + 1..v.len()).rev().find(|&j| v[j] > v[pivot]).unwrap();
    v.swap(pivot, succ);
    v[pivot + 1..].reverse();
    true
}

/// `n(n−1)/2`, the length of the reduced word of the reversal.
pub fn reversal_word_length(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
