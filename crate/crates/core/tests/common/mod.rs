//! Standalone statements of the named parking rules, written directly from
//! their textbook descriptions and sharing no code with the library.

#![allow(dead_code)]

/// Classical rule via the sorted-list criterion: the i-th smallest
/// preference must be at most `n - m + i`.
pub fn classical(prefs: &[usize], n: usize) -> bool {
    let m = prefs.len();
    if m > n {
        return false;
    }
    let mut sorted = prefs.to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().all(|(i, &a)| a <= n - m + i + 1)
}

/// Park in the preferred spot if free; otherwise try the `k` spots behind
/// it one at a time, then every spot ahead of it.
pub fn naples(prefs: &[usize], n: usize, k: usize) -> bool {
    park_all(prefs, n, |taken, a| {
        if !taken[a] {
            return Some(a);
        }
        let behind = (1..=k).take_while(|d| *d < a).map(|d| a - d);
        let ahead = a + 1..=n;
        behind.chain(ahead).find(|&s| !taken[s])
    })
}

/// Park in the first free spot among `a, a + 1, …, a + l`.
pub fn interval(prefs: &[usize], n: usize, l: usize) -> bool {
    park_all(prefs, n, |taken, a| {
        (a..=(a + l).min(n)).find(|&s| !taken[s])
    })
}

/// Check the preferred spot, then the one behind it, then the one ahead.
pub fn vacillating(prefs: &[usize], n: usize) -> bool {
    park_all(prefs, n, |taken, a| {
        [
            Some(a),
            a.checked_sub(1).filter(|&s| s >= 1),
            Some(a + 1).filter(|&s| s <= n),
        ]
        .into_iter()
        .flatten()
        .find(|&s| !taken[s])
    })
}

fn park_all(
    prefs: &[usize],
    n: usize,
    mut choose: impl FnMut(&[bool], usize) -> Option<usize>,
) -> bool {
    let mut taken = vec![false; n + 1];
    for &a in prefs {
        match choose(&taken, a) {
            Some(s) => taken[s] = true,
            None => return false,
        }
    }
    true
}

/// Every list in `[n]^m`, lexicographically.
pub fn all_lists(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=n).map(move |a| {
                    let mut next = prefix.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
    }
    out
}
