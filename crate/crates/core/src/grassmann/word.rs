//! Sorting graded words into canonical order while tracking the sign.

use super::symbols::{OddGenerator, OddSymbol};

/// Result of sorting a word of odd letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Canonical<T> {
    /// A letter repeats, so the product vanishes.
    Zero,
    /// Sorted word and whether an odd number of transpositions was needed.
    Sorted { negative: bool, word: Vec<T> },
}

impl<T> Canonical<T> {
    /// The sign as `+1`, `-1` or `0`.
    pub fn sign(&self) -> i8 {
        match self {
            Canonical::Zero => 0,
            Canonical::Sorted { negative: true, .. } => -1,
            Canonical::Sorted { negative: false, .. } => 1,
        }
    }
}

/// Sorts `word` by adjacent transpositions.
pub fn canonicalize<T: Ord + Clone>(word: &[T]) -> Canonical<T> {
    let mut w = word.to_vec();
    let mut negative = false;
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return Canonical::Zero;
    }
    Canonical::Sorted { negative, word: w }
}

/// Canonical form of a word of generators (the `GrassmannMonomial` case).
pub fn canonicalize_generators(word: &[OddGenerator]) -> Canonical<OddGenerator> {
    canonicalize(word)
}

/// Canonical form of a mixed word of generators and odd field atoms.
pub fn canonicalize_symbols(word: &[OddSymbol]) -> Canonical<OddSymbol> {
    canonicalize(word)
}

/// Merges two strictly increasing words, returning the merged word and the
/// number of inversions, or `None` when they share a letter.
pub(crate) fn merge<T: Ord + Clone>(a: &[T], b: &[T]) -> Option<(Vec<T>, usize)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j, mut inversions) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j].clone());
                inversions += a.len() - i;
                j += 1;
            }
            std::cmp::Ordering::Equal => return None,
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, inversions))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn th(i: u8) -> OddGenerator {
        OddGenerator::theta(i)
    }

    /// Independent oracle: bubble sort counting swaps.
    fn bubble_parity<T: Ord + Clone>(word: &[T]) -> i8 {
        let mut w = word.to_vec();
        let mut swaps = 0;
        for pass in 0..w.len() {
            for k in 0..w.len().saturating_sub(1 + pass) {
                if w[k] > w[k + 1] {
                    w.swap(k, k + 1);
                    swaps += 1;
                }
            }
        }
        if w.windows(2).any(|p| p[0] == p[1]) {
            0
        } else if swaps % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn single_transposition() {
        let c = canonicalize_generators(&[th(1), th(0)]);
        assert_eq!(c, Canonical::Sorted { negative: true, word: vec![th(0), th(1)] });
    }

    #[test]
    fn nilpotent() {
        assert_eq!(canonicalize_generators(&[th(0), th(0)]), Canonical::Zero);
    }

    #[test]
    fn mixed_word_against_bubble_sort() {
        let word = [OddGenerator::zeta_bar(1), th(0), OddGenerator::zeta(0)];
        let c = canonicalize_generators(&word);
        assert_eq!(c.sign(), bubble_parity(&word));
        // zb2 th1 ze1 -> th1 ze1 zb2 is a cyclic shift of three: even
        assert_eq!(c.sign(), 1);
    }

    #[test]
    fn merge_counts_inversions() {
        let (w, inv) = merge(&[th(1)], &[th(0)]).unwrap();
        assert_eq!(w, vec![th(0), th(1)]);
        assert_eq!(inv, 1);
        assert!(merge(&[th(0)], &[th(0)]).is_none());
        let a = [OddGenerator::theta_bar(0), OddGenerator::zeta(1)];
        let b = [th(0), th(1), OddGenerator::zeta(0)];
        let (_, inv) = merge(&a, &b).unwrap();
        let mut cat = a.to_vec();
        cat.extend_from_slice(&b);
        assert_eq!(if inv % 2 == 0 { 1 } else { -1 }, bubble_parity(&cat));
    }
}
