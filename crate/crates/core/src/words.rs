//! Lexicographic generators: multiset permutations for outcome words,
//! the `[n]^m` odometer and weakly increasing lists for the oracle.

use crate::types::OutcomeWord;

/// Rearranges `seq` into the next lexicographically larger arrangement of the
/// same multiset. Returns `false` (leaving `seq` sorted ascending) once the
/// last arrangement has been passed.
pub fn next_multiset_permutation(seq: &mut [usize]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut pivot = seq.len() - 1;
    while pivot > 0 && seq[pivot - 1] >= seq[pivot] {
        pivot -= 1;
    }
    if pivot == 0 {
        seq.reverse();
        return false;
    }
    let mut swap = seq.len() - 1;
    while seq[swap] <= seq[pivot - 1] {
        swap -= 1;
    }
    seq.swap(pivot - 1, swap);
    seq[pivot..].reverse();
    true
}

/// The smallest word of `S_{m,n}`: `n - m` zeros followed by `1..=m`.
pub(crate) fn first_word(m: usize, n: usize) -> Vec<usize> {
    let mut w = vec![0; n - m];
    w.extend(1..=m);
    w
}

/// All outcome words with `m` cars and `n` spots, in lexicographic order.
///
/// Yields nothing when `m > n`.
#[derive(Debug, Clone)]
pub struct OutcomeWords {
    current: Option<Vec<usize>>,
}

impl OutcomeWords {
    pub fn new(m: usize, n: usize) -> Self {
        OutcomeWords {
            current: (m <= n).then(|| first_word(m, n)),
        }
    }
}

impl Iterator for OutcomeWords {
    type Item = OutcomeWord;

    fn next(&mut self) -> Option<OutcomeWord> {
        let cur = self.current.as_mut()?;
        let out = OutcomeWord::from_raw(cur.clone());
        if !next_multiset_permutation(cur) {
            self.current = None;
        }
        Some(out)
    }
}

/// Calls `visit` on every word of `S_{m,n}` whose first entry is `head`,
/// in lexicographic order. The slice is reused between calls.
pub(crate) fn for_each_word_with_head(
    m: usize,
    n: usize,
    head: usize,
    mut visit: impl FnMut(&[usize]),
) {
    debug_assert!(m <= n && n > 0);
    let mut word = Vec::with_capacity(n);
    word.push(head);
    if head == 0 {
        word.extend(std::iter::repeat_n(0, n - m - 1));
        word.extend(1..=m);
    } else {
        word.extend(std::iter::repeat_n(0, n - m));
        word.extend((1..=m).filter(|&c| c != head));
    }
    loop {
        visit(&word);
        if !next_multiset_permutation(&mut word[1..]) {
            break;
        }
    }
}

/// Distinct values the first spot of a word in `S_{m,n}` can hold.
pub(crate) fn heads(m: usize, n: usize) -> Vec<usize> {
    let zero = (n > m).then_some(0);
    zero.into_iter().chain(1..=m).collect()
}

/// Advances `list` (entries in `1..=n`) to its lexicographic successor in
/// `[n]^m`, treating positions `fixed..` as the odometer digits.
/// Returns `false` after the last list.
pub(crate) fn next_tuple(list: &mut [usize], n: usize, fixed: usize) -> bool {
    for pos in (fixed..list.len()).rev() {
        if list[pos] < n {
            list[pos] += 1;
            return true;
        }
        list[pos] = 1;
    }
    false
}

/// Weakly increasing successor within `[n]^m`.
pub(crate) fn next_weakly_increasing(list: &mut [usize], n: usize) -> bool {
    for pos in (0..list.len()).rev() {
        if list[pos] < n {
            let v = list[pos] + 1;
            for slot in &mut list[pos..] {
                *slot = v;
            }
            return true;
        }
    }
    false
}
