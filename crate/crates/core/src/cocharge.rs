//! Cocharge of words with partition content, cyclage, Knuth moves, and the
//! cocharge word of a filling.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::shapes::{Filling, Letter};

/// Letter multiplicities `[#1, #2, ...]`, rejected unless weakly decreasing.
fn partition_content(w: &[Letter]) -> Result<Vec<usize>> {
    let max = w.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0usize; max];
    for &a in w {
        if a == 0 {
            return Err(Error::NonPartitionContent(counts));
        }
        counts[a as usize - 1] += 1;
    }
    if counts.windows(2).any(|p| p[0] < p[1]) || counts.contains(&0) {
        return Err(Error::NonPartitionContent(counts));
    }
    Ok(counts)
}

/// Splits `w` into standard subwords. Subword `k` lists, for letters
/// `1, 2, ...` in turn, the 0-based position it took: each letter is found by
/// scanning leftward from the previous one, wrapping around at the left end.
pub fn subword_decomposition(w: &[Letter]) -> Result<Vec<Vec<usize>>> {
    let counts = partition_content(w)?;
    let n = w.len();
    let mut used = vec![false; n];
    let mut remaining = counts.clone();
    let mut out = Vec::new();
    while remaining.first().is_some_and(|&c| c > 0) {
        let mut sub = Vec::new();
        let mut cursor = n; // one past the position to scan from
        let mut letter: Letter = 1;
        while (letter as usize) <= remaining.len() && remaining[letter as usize - 1] > 0 {
            let mut p = cursor;
            loop {
                p = if p == 0 { n - 1 } else { p - 1 };
                if !used[p] && w[p] == letter {
                    break;
                }
            }
            used[p] = true;
            remaining[letter as usize - 1] -= 1;
            sub.push(p);
            cursor = p;
            letter += 1;
        }
        out.push(sub);
    }
    Ok(out)
}

/// Cocharge of a single standard subword given by its positions for
/// letters `1, 2, ...`: the counter rises each time the next letter lies to
/// the left of the previous one.
fn subword_cocharge(positions: &[usize]) -> usize {
    let mut label = 0;
    let mut total = 0;
    for pair in positions.windows(2) {
        if pair[1] < pair[0] {
            label += 1;
        }
        total += label;
    }
    total
}

/// Cocharge of a word with partition content.
pub fn cocharge(w: &[Letter]) -> Result<usize> {
    Ok(subword_decomposition(w)?.iter().map(|s| subword_cocharge(s)).sum())
}

/// Moves the first letter to the end.
pub fn cyclage(w: &[Letter]) -> Result<Vec<Letter>> {
    let (first, rest) = w.split_first().ok_or(Error::EmptyWord)?;
    let mut out = rest.to_vec();
    out.push(*first);
    Ok(out)
}

/// Every word reachable from `w` by one elementary Knuth move on three
/// consecutive letters `x y z`: `xyz -> xzy` when `y < x <= z` or
/// `z < x <= y`, and `xyz -> yxz` when `x <= z < y` or `y <= z < x`.
pub fn knuth_neighbors(w: &[Letter]) -> BTreeSet<Vec<Letter>> {
    let mut out = BTreeSet::new();
    for i in 0..w.len().saturating_sub(2) {
        let (x, y, z) = (w[i], w[i + 1], w[i + 2]);
        if (y < x && x <= z) || (z < x && x <= y) {
            let mut u = w.to_vec();
            u.swap(i + 1, i + 2);
            out.insert(u);
        }
        if (x <= z && z < y) || (y <= z && z < x) {
            let mut u = w.to_vec();
            u.swap(i, i + 1);
            out.insert(u);
        }
    }
    out
}

/// The Knuth class of `w`.
pub fn knuth_class(w: &[Letter]) -> BTreeSet<Vec<Letter>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.to_vec());
    queue.push_back(w.to_vec());
    while let Some(u) = queue.pop_front() {
        for v in knuth_neighbors(&u) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

/// Cocharge from its defining properties alone: zero on weakly increasing
/// words, constant on Knuth classes, and dropping by one under cyclage of a
/// word that does not start with 1.
pub fn cocharge_by_cyclage(w: &[Letter], memo: &mut HashMap<Vec<Letter>, usize>) -> Result<usize> {
    partition_content(w)?;
    if let Some(&v) = memo.get(w) {
        return Ok(v);
    }
    let value = if w.windows(2).all(|p| p[0] <= p[1]) {
        0
    } else {
        let start = if w[0] != 1 {
            w.to_vec()
        } else {
            knuth_class(w)
                .into_iter()
                .find(|u| u[0] != 1)
                .ok_or_else(|| Error::Precondition("Knuth class has no word avoiding a leading 1".into()))?
        };
        1 + cocharge_by_cyclage(&cyclage(&start)?, memo)?
    };
    memo.insert(w.to_vec(), value);
    Ok(value)
}

/// Row indices of the cells, taken by decreasing entry and, among equal
/// entries, in reverse reading order.
pub fn cocharge_word(f: &Filling) -> Vec<Letter> {
    let mut cells = f.reading_order();
    cells.reverse();
    let mut keyed: Vec<(Letter, usize, usize)> =
        cells.iter().enumerate().map(|(k, c)| (f.get(*c).expect("cell in shape"), k, c.row)).collect();
    keyed.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    keyed.into_iter().map(|(_, _, r)| r as Letter).collect()
}

/// For a word starting with 1, removes that letter and lowers by one every
/// other letter of the last standard subword, which contains it.
pub fn first_letter_reduction(w: &[Letter]) -> Result<Vec<Letter>> {
    if w.first() != Some(&1) {
        return Err(Error::Precondition("word must start with 1".into()));
    }
    let subs = subword_decomposition(w)?;
    let last = subs.last().expect("a 1 exists");
    debug_assert!(last.contains(&0));
    let mut out = w.to_vec();
    for &p in last {
        out[p] -= 1;
    }
    Ok(out.into_iter().skip(1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    const W: [Letter; 11] = [1, 5, 2, 2, 1, 4, 3, 2, 3, 1, 3];

    #[test]
    fn worked_decomposition() {
        let subs = subword_decomposition(&W).unwrap();
        let one_based: Vec<Vec<usize>> = subs.iter().map(|s| s.iter().map(|p| p + 1).collect()).collect();
        assert_eq!(one_based, vec![vec![10, 8, 7, 6, 2], vec![5, 4, 11], vec![1, 3, 9]]);
        assert_eq!(cocharge(&W).unwrap(), 12);
        assert_eq!(first_letter_reduction(&W).unwrap(), vec![5, 1, 2, 1, 4, 3, 2, 2, 1, 3]);
        assert_eq!(cocharge(&[5, 1, 2, 1, 4, 3, 2, 2, 1, 3]).unwrap(), 12);
    }

    #[test]
    fn small_words() {
        assert_eq!(subword_decomposition(&[3, 2, 1]).unwrap().len(), 1);
        assert_eq!(subword_decomposition(&[1, 1, 1]).unwrap().len(), 3);
        assert_eq!(cocharge(&[1, 1, 2]).unwrap(), 0);
        assert_eq!(cocharge(&[2, 1]).unwrap(), 1);
        assert_eq!(cyclage(&[2, 1]).unwrap(), vec![1, 2]);
        assert_eq!(cocharge(&[1, 2]).unwrap(), 0);
        assert_eq!(first_letter_reduction(&[1]).unwrap(), Vec::<Letter>::new());
        assert!(cocharge(&[2, 2, 1]).is_err());
        assert!(cocharge(&[1, 3]).is_err());
        assert!(cyclage(&[]).is_err());
    }

    #[test]
    fn knuth_moves() {
        // 2,1,3: y < x <= z swaps the last two letters
        let n = knuth_neighbors(&[2, 1, 3]);
        assert_eq!(n, [vec![2, 3, 1]].into_iter().collect());
        assert!(knuth_neighbors(&[1, 2, 3]).is_empty());
        assert_eq!(knuth_neighbors(&[1, 1, 1]).len(), 0);
    }

    #[test]
    fn oracle_agrees_on_worked_word() {
        let mut memo = HashMap::new();
        assert_eq!(cocharge_by_cyclage(&[1, 2, 1], &mut memo).unwrap(), 1);
        assert_eq!(cocharge_by_cyclage(&[3, 2, 1], &mut memo).unwrap(), cocharge(&[3, 2, 1]).unwrap());
    }
}
