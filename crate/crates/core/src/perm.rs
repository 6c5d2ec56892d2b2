//! Permutations in one-line notation, 0-based: `sigma[i] = sigma(i + 1) - 1`.
//!
//! Products compose as functions, `(sigma tau)(x) = sigma(tau(x))`, and `s_i`
//! swaps `i` and `i + 1`.

/// All permutations of `0..r` in lexicographic order.
pub fn all_perms(r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..r).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..r.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..r).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

/// Number of inversions of a sequence of distinct values.
pub fn inversions<T: Ord>(seq: &[T]) -> usize {
    let mut n = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                n += 1;
            }
        }
    }
    n
}

/// `#{i : sigma(i) < i}`.
pub fn ind(sigma: &[usize]) -> usize {
    sigma.iter().enumerate().filter(|(i, &s)| s < *i).count()
}

pub fn compose(sigma: &[usize], tau: &[usize]) -> Vec<usize> {
    tau.iter().map(|&t| sigma[t]).collect()
}

pub fn inverse(sigma: &[usize]) -> Vec<usize> {
    let mut out = vec![0; sigma.len()];
    for (i, &s) in sigma.iter().enumerate() {
        out[s] = i;
    }
    out
}

/// A reduced word `[w_1, .., w_l]` with `sigma = s_{w_1} ... s_{w_l}`.
pub fn reduced_word(sigma: &[usize]) -> Vec<usize> {
    let mut cur = sigma.to_vec();
    let mut rev = Vec::new();
    while let Some(i) = (0..cur.len().saturating_sub(1)).find(|&i| cur[i] > cur[i + 1]) {
        cur.swap(i, i + 1);
        rev.push(i);
    }
    rev.reverse();
    rev
}

/// Every reduced word of `sigma`.
pub fn all_reduced_words(sigma: &[usize]) -> Vec<Vec<usize>> {
    let descents: Vec<usize> =
        (0..sigma.len().saturating_sub(1)).filter(|&i| sigma[i] > sigma[i + 1]).collect();
    if descents.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in descents {
        let mut s = sigma.to_vec();
        s.swap(i, i + 1);
        for mut w in all_reduced_words(&s) {
            w.push(i);
            out.push(w);
        }
    }
    out
}

/// Sort a sequence, returning the sorted sequence and the number of inversions
/// removed, or `None` if it has repeated entries.
pub fn sort_with_length(seq: &[usize]) -> Option<(Vec<usize>, usize)> {
    let mut s = seq.to_vec();
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((s, inversions(seq)))
}

/// Complement of `set` in `0..n`, increasing.
pub fn complement(set: &[usize], n: usize) -> Vec<usize> {
    (0..n).filter(|i| !set.contains(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(all_perms(3).len(), 6);
        assert_eq!(all_perms(4).len(), 24);
        assert_eq!(all_perms(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn words_rebuild_permutation() {
        for r in 1..5 {
            for s in all_perms(r) {
                let words = all_reduced_words(&s);
                assert!(words.contains(&reduced_word(&s)));
                for w in words {
                    assert_eq!(w.len(), inversions(&s));
                    let mut p: Vec<usize> = (0..r).collect();
                    for &i in &w {
                        let mut si: Vec<usize> = (0..r).collect();
                        si.swap(i, i + 1);
                        p = compose(&p, &si);
                    }
                    assert_eq!(p, s);
                }
            }
        }
    }

    #[test]
    fn ind_and_inverse() {
        assert_eq!(ind(&[1, 2, 0]), 1);
        assert_eq!(inverse(&[1, 2, 0]), vec![2, 0, 1]);
        assert_eq!(sort_with_length(&[2, 0, 1]), Some((vec![0, 1, 2], 2)));
        assert_eq!(sort_with_length(&[1, 1]), None);
    }
}
