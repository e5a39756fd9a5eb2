//! A bijection from distinct-entry fillings of a shape to distinct-entry
//! fillings of the conjugate shape carrying `maj` to `inv`, built column by
//! column from the Carlitz bijection and a cyclic row insertion.

use crate::error::{Error, Result};
use crate::shapes::{row_inversions_by_position, Filling, Letter, BELOW};
use crate::word_codes::{carlitz_bijection, carlitz_bijection_inverse};

/// Letters of `remaining` in cyclic order starting just above `b`: those
/// greater than `b` ascending, then the rest ascending.
fn cyclic_order(remaining: &[Letter], b: Letter) -> Vec<Letter> {
    let mut above: Vec<Letter> = remaining.iter().copied().filter(|&x| x > b).collect();
    let mut rest: Vec<Letter> = remaining.iter().copied().filter(|&x| x <= b).collect();
    above.sort_unstable();
    rest.sort_unstable();
    above.extend(rest);
    above
}

/// Places `letters` above `base` (`None` for the bottom row) so that the
/// letter at position `k` is the left element of exactly `targets[k]`
/// relative inversions.
///
/// At each position the letter taken is the `targets[k]`-th (0-based) of the
/// remaining letters in cyclic order after the base entry. A target that
/// lands inside a run of equal letters, past its first copy, is rejected
/// because no arrangement realizes it.
pub fn cyclic_row_insert(base: Option<&[Letter]>, letters: &[Letter], targets: &[usize]) -> Result<Vec<Letter>> {
    if letters.len() != targets.len() {
        return Err(Error::SizeMismatch { expected: letters.len(), found: targets.len() });
    }
    if let Some(b) = base {
        if b.len() < letters.len() {
            return Err(Error::Precondition("row is longer than its base".into()));
        }
    }
    let mut remaining = letters.to_vec();
    let mut row = Vec::with_capacity(letters.len());
    for (k, &t) in targets.iter().enumerate() {
        let b = base.map_or(BELOW, |w| w[k]);
        let order = cyclic_order(&remaining, b);
        if t >= order.len() {
            return Err(Error::Precondition(format!("target {t} at position {} exceeds the {} remaining letters", k + 1, order.len())));
        }
        if t > 0 && order[t - 1] == order[t] {
            return Err(Error::Precondition(format!("target {t} at position {} is not achievable", k + 1)));
        }
        let x = order[t];
        let i = remaining.iter().position(|&y| y == x).expect("letter present");
        remaining.remove(i);
        row.push(x);
    }
    Ok(row)
}

fn require_distinct(f: &Filling) -> Result<()> {
    if !f.is_distinct() {
        return Err(Error::RepeatedEntries);
    }
    Ok(())
}

/// Sends each column `v` to the row word with `inv` equal to `maj(v)`, then
/// stacks those words: the bottom row is the first one, and each higher row
/// rearranges its word above the previous row keeping every letter's count
/// of inversions to its right.
pub fn t1_map(f: &Filling) -> Result<Filling> {
    require_distinct(f)?;
    let mut rows: Vec<Vec<Letter>> = Vec::new();
    for col in f.columns() {
        let w = carlitz_bijection_inverse(&col)?;
        let targets = row_inversions_by_position(None, &w);
        let row = cyclic_row_insert(rows.last().map(Vec::as_slice), &w, &targets)?;
        rows.push(row);
    }
    Filling::new(rows)
}

/// Inverse of [`t1_map`].
pub fn t1_map_inverse(f: &Filling) -> Result<Filling> {
    require_distinct(f)?;
    let rows = f.rows();
    let mut columns = Vec::with_capacity(rows.len());
    for (k, row) in rows.iter().enumerate() {
        let base = if k == 0 { None } else { Some(rows[k - 1].as_slice()) };
        let targets = row_inversions_by_position(base, row);
        let w = cyclic_row_insert(None, row, &targets)?;
        columns.push(carlitz_bijection(&w)?);
    }
    Filling::from_columns(&f.shape().conjugate(), &columns)
}
