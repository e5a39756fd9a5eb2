//! Carlitz's inversion and major-index codes for words, one-row and
//! one-column fillings.
//!
//! An inversion code is indexed by the letters of the word in increasing
//! order, equal letters taken in order of appearance. A major-index code
//! records how much the major index drops as the largest remaining entry is
//! removed, so its blocks of equal letters run from the largest letter down.

use crate::codes::{is_carlitz, weakly_increasing_on_blocks, Alphabet, Code};
use crate::error::{Error, Result};
use crate::shapes::{word_maj, Filling, Letter};

/// Positions of `w` sorted by letter, ties by position.
fn standard_order(w: &[Letter]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&i| (w[i], i));
    idx
}

/// For each letter in standard order, the number of strictly larger letters
/// to its left.
pub fn invcode_word(w: &[Letter]) -> Code {
    Code(standard_order(w).into_iter().map(|p| w[..p].iter().filter(|&&x| x > w[p]).count() as u32).collect())
}

fn invalid(code: &Code, reason: &str) -> Error {
    Error::InvalidCode { code: code.to_string(), reason: reason.to_string() }
}

/// Rebuilds the word with letters `a` whose inversion code is `code`.
pub fn invcode_word_inverse(code: &Code, a: &Alphabet) -> Result<Vec<Letter>> {
    if code.len() != a.len() {
        return Err(Error::SizeMismatch { expected: a.len(), found: code.len() });
    }
    if !is_carlitz(code) {
        return Err(invalid(code, "not a Carlitz code"));
    }
    if !weakly_increasing_on_blocks(&code.0, &a.blocks()) {
        return Err(invalid(code, "not weakly increasing on the alphabet blocks"));
    }
    let letters = a.letters();
    let mut w: Vec<Letter> = Vec::with_capacity(letters.len());
    for i in (0..letters.len()).rev() {
        w.insert(code.0[i] as usize, letters[i]);
    }
    debug_assert_eq!(&invcode_word(&w), code);
    Ok(w)
}

/// Relabels a column (read top to bottom) by distinct values `1..=n`.
///
/// For each letter `x` with `k` copies, entries larger than `x` are set aside.
/// Then, repeatedly, the bottommost copy of `x` that is either at the very
/// bottom or sits between `a` above and `b` below with `a > b` takes the next
/// label counting down from `k`, and is removed. The copies left over are
/// labelled downward from the top.
pub fn standardize_column_word(col: &[Letter]) -> Vec<Letter> {
    let n = col.len();
    let mut out = vec![0; n];
    let mut values: Vec<Letter> = col.to_vec();
    values.sort_unstable();
    values.dedup();
    let mut offset = 0u32;
    for &x in &values {
        // positions (top to bottom) of entries <= x still present
        let mut live: Vec<usize> = (0..n).filter(|&i| col[i] <= x).collect();
        let k = col.iter().filter(|&&y| y == x).count() as u32;
        let mut label = k;
        loop {
            let pick = (0..live.len())
                .rev()
                .find(|&j| col[live[j]] == x && (j + 1 == live.len() || (j > 0 && col[live[j - 1]] > col[live[j + 1]])));
            match pick {
                Some(j) => {
                    out[live[j]] = offset + label;
                    label -= 1;
                    live.remove(j);
                }
                None => break,
            }
        }
        for &i in &live {
            if col[i] == x {
                out[i] = offset + label;
                label -= 1;
            }
        }
        offset += k;
    }
    out
}

/// Column standardization of a one-column filling.
pub fn standardize_column(f: &Filling) -> Result<Filling> {
    let col = column_of(f)?;
    Filling::column(&standardize_column_word(&col))
}

fn column_of(f: &Filling) -> Result<Vec<Letter>> {
    if !f.shape().is_column() {
        return Err(Error::NotColumn);
    }
    Ok(f.column_word(1))
}

/// Major-index code of a permutation word of `1..=n`: entry `i` is the drop in
/// the major index when `n + 1 - i` is removed.
fn majcode_permutation(p: &[Letter]) -> Code {
    let mut w = p.to_vec();
    let mut code = Vec::with_capacity(p.len());
    for v in (1..=p.len() as Letter).rev() {
        let before = word_maj(&w);
        w.retain(|&x| x != v);
        code.push((before - word_maj(&w)) as u32);
    }
    Code(code)
}

/// Major-index code of a column read top to bottom.
pub fn majcode_column_word(col: &[Letter]) -> Code {
    majcode_permutation(&standardize_column_word(col))
}

/// Major-index code of a one-column filling.
pub fn majcode_column(f: &Filling) -> Result<Code> {
    Ok(majcode_column_word(&column_of(f)?))
}

/// Blocks of a major-index code over the letters `a`: largest letter first.
pub fn majcode_blocks(a: &Alphabet) -> Vec<usize> {
    let mut b = a.blocks();
    b.reverse();
    b
}

/// Rebuilds the column (top to bottom) with letters `a` whose major-index code
/// is `code`.
pub fn majcode_column_word_inverse(code: &Code, a: &Alphabet) -> Result<Vec<Letter>> {
    let n = a.len();
    if code.len() != n {
        return Err(Error::SizeMismatch { expected: n, found: code.len() });
    }
    if !is_carlitz(code) {
        return Err(invalid(code, "not a Carlitz code"));
    }
    if !weakly_increasing_on_blocks(&code.0, &majcode_blocks(a)) {
        return Err(invalid(code, "not weakly increasing on the alphabet blocks"));
    }
    // Insert 1, 2, ..., n; inserting v must raise the major index by the
    // code entry recorded when v was removed. Exactly one slot does.
    let mut w: Vec<Letter> = Vec::with_capacity(n);
    for v in 1..=n as Letter {
        let want = code.0[n - v as usize] as usize;
        let base = word_maj(&w);
        let slot = (0..=w.len())
            .find(|&s| {
                let mut t = w.clone();
                t.insert(s, v);
                word_maj(&t) == base + want
            })
            .ok_or_else(|| invalid(code, "no insertion slot"))?;
        w.insert(slot, v);
    }
    let letters = a.letters();
    let col: Vec<Letter> = w.iter().map(|&v| letters[v as usize - 1]).collect();
    if &majcode_column_word(&col) != code {
        return Err(Error::NotInImage(format!("code {code} over {:?}", a.letters())));
    }
    Ok(col)
}

/// Rebuilds a one-column filling with letters `a` from its major-index code.
pub fn majcode_column_inverse(code: &Code, a: &Alphabet) -> Result<Filling> {
    Filling::column(&majcode_column_word_inverse(code, a)?)
}

/// The Carlitz bijection: a word with `inv = k` goes to the word over the
/// same letters with `maj = k` and the same code.
pub fn carlitz_bijection(w: &[Letter]) -> Result<Vec<Letter>> {
    let a = Alphabet::new(w.to_vec())?;
    if !a.is_distinct() {
        return Err(Error::RepeatedEntries);
    }
    majcode_column_word_inverse(&invcode_word(w), &a)
}

/// Inverse of [`carlitz_bijection`].
pub fn carlitz_bijection_inverse(w: &[Letter]) -> Result<Vec<Letter>> {
    let a = Alphabet::new(w.to_vec())?;
    if !a.is_distinct() {
        return Err(Error::RepeatedEntries);
    }
    invcode_word_inverse(&majcode_column_word(w), &a)
}
