//! The `q = 0` side: fillings with `inv = 0` or `maj = 0`, their codes, and
//! the maps between them for shapes with at most three rows.
//!
//! A filling with `inv = 0` is determined by the multiset of letters in each
//! row, so most operations here edit row multisets and then rebuild the
//! unique arrangement with [`rearrange_rows`].

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::codes::{in_code_set, Alphabet, Code};
use crate::error::{Error, Result};
use crate::shapes::{attacks, inv, maj, Cell, Content, Filling, Letter, MultisetPermutations, Partition, BELOW};
use crate::word_codes::{majcode_column, majcode_column_inverse, standardize_column};

type Rows = Vec<Vec<Letter>>;

/// Stands in for a missing cell above every letter.
const ABOVE: Letter = Letter::MAX;

/// Arranges `letters` above `base` (`None` for the bottom row) with no
/// relative inversions: left to right, each position takes the remaining
/// letter that comes first in cyclic order starting just above its base
/// entry.
pub fn rearrange_row_no_inversions(letters: &[Letter], base: Option<&[Letter]>) -> Result<Vec<Letter>> {
    if let Some(b) = base {
        if letters.len() > b.len() {
            return Err(Error::Precondition("row is longer than its base".into()));
        }
    }
    let mut remaining = letters.to_vec();
    remaining.sort_unstable();
    let mut row = Vec::with_capacity(letters.len());
    for k in 0..letters.len() {
        let b = base.map_or(BELOW, |w| w[k]);
        let i = remaining.iter().position(|&x| x > b).unwrap_or(0);
        row.push(remaining.remove(i));
    }
    Ok(row)
}

/// The unique `inv = 0` filling whose rows (bottom to top) hold the given
/// multisets. Empty rows at the top are dropped.
pub fn rearrange_rows(mut rows: Rows) -> Result<Filling> {
    while rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    if rows.windows(2).any(|w| w[0].len() < w[1].len()) || rows.iter().any(Vec::is_empty) {
        return Err(Error::Inconsistent(format!("row sizes {:?} do not form a partition", rows.iter().map(Vec::len).collect::<Vec<_>>())));
    }
    let mut out: Rows = Vec::with_capacity(rows.len());
    for r in rows {
        let arranged = rearrange_row_no_inversions(&r, out.last().map(Vec::as_slice))?;
        out.push(arranged);
    }
    Filling::new(out)
}

/// Ways to split the multiset with `counts[i]` copies of `values[i]` into
/// groups of the given sizes; each group is returned sorted.
fn distribute(values: &[Letter], counts: &[usize], sizes: &[usize]) -> Vec<Rows> {
    fn choose(
        values: &[Letter],
        counts: &mut [usize],
        i: usize,
        k: usize,
        cur: &mut Vec<Letter>,
        out: &mut Vec<(Vec<Letter>, Vec<usize>)>,
    ) {
        if k == 0 {
            out.push((cur.clone(), counts.to_vec()));
            return;
        }
        if i == values.len() {
            return;
        }
        let avail = counts[i];
        for take in (0..=avail.min(k)).rev() {
            counts[i] -= take;
            cur.extend(std::iter::repeat_n(values[i], take));
            choose(values, counts, i + 1, k - take, cur, out);
            cur.truncate(cur.len() - take);
            counts[i] += take;
        }
    }
    fn rec(values: &[Letter], counts: &mut Vec<usize>, sizes: &[usize], acc: &mut Rows, out: &mut Vec<Rows>) {
        let Some((&s, rest)) = sizes.split_first() else {
            out.push(acc.clone());
            return;
        };
        let mut options = Vec::new();
        choose(values, counts, 0, s, &mut Vec::new(), &mut options);
        for (group, left) in options {
            let saved = std::mem::replace(counts, left);
            acc.push(group);
            rec(values, counts, rest, acc, out);
            acc.pop();
            *counts = saved;
        }
    }
    let mut out = Vec::new();
    rec(values, &mut counts.to_vec(), sizes, &mut Vec::new(), &mut out);
    out
}

fn content_parts(content: &Content) -> (Vec<Letter>, Vec<usize>) {
    content.0.iter().enumerate().filter(|(_, &m)| m > 0).map(|(i, &m)| (i as Letter + 1, m)).unzip()
}

/// Every filling of `shape` with the given content and `inv = 0`.
pub fn enumerate_inv_zero_fillings(shape: &Partition, content: &Content) -> Result<Vec<Filling>> {
    if content.size() != shape.size() {
        return Err(Error::SizeMismatch { expected: shape.size(), found: content.size() });
    }
    let (values, counts) = content_parts(content);
    distribute(&values, &counts, shape.parts()).into_iter().map(rearrange_rows).collect()
}

/// Every filling of `shape` with the given content and `maj = 0`.
pub fn enumerate_maj_zero_fillings(shape: &Partition, content: &Content) -> Result<Vec<Filling>> {
    if content.size() != shape.size() {
        return Err(Error::SizeMismatch { expected: shape.size(), found: content.size() });
    }
    let (values, counts) = content_parts(content);
    distribute(&values, &counts, shape.conjugate().parts()).into_iter().map(|cols| Filling::from_columns(shape, &cols)).collect()
}

fn require_maj_zero(f: &Filling) -> Result<()> {
    if maj(f) != 0 {
        return Err(Error::Precondition("filling must have maj = 0".into()));
    }
    Ok(())
}

fn require_inv_zero(f: &Filling) -> Result<()> {
    if inv(f) != 0 {
        return Err(Error::Precondition("filling must have inv = 0".into()));
    }
    Ok(())
}

/// Cells ordered by entry, ties in reading order.
fn ordered_cells(f: &Filling) -> Vec<(Cell, Letter)> {
    let mut cells: Vec<(usize, Cell, Letter)> =
        f.reading_order().into_iter().enumerate().map(|(k, c)| (k, c, f.get(c).expect("cell in shape"))).collect();
    cells.sort_by_key(|&(k, _, a)| (a, k));
    cells.into_iter().map(|(_, c, a)| (c, a)).collect()
}

/// The plot of a `maj = 0` filling: entries in increasing order (ties in
/// reading order), each drawn in the diagram row given by its column, with
/// label equal to its height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionDiagram {
    pub letters: Vec<Letter>,
    /// Diagram row of each dot (the column of the entry).
    pub rows: Vec<usize>,
    /// Label of each dot; row `j` is labelled `1..=mu_j` from right to left.
    pub labels: Vec<usize>,
    /// Dots per diagram row.
    pub shape: Partition,
}

impl InversionDiagram {
    /// Pairs of dots `s` before `t` with equal labels and `t` in a lower
    /// row, or with `t` labelled one more than `s` and in a higher row.
    pub fn inversions(&self) -> usize {
        let n = self.letters.len();
        let mut count = 0;
        for s in 0..n {
            for t in s + 1..n {
                let same = self.labels[s] == self.labels[t] && self.rows[s] > self.rows[t];
                let next = self.labels[t] == self.labels[s] + 1 && self.rows[t] > self.rows[s];
                if same || next {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for InversionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.letters.len() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "({}, {}, {})", self.letters[i], self.rows[i], self.labels[i])?;
        }
        Ok(())
    }
}

/// Column indices of the entries of a `maj = 0` filling, by increasing entry
/// with ties in reading order.
pub fn inversion_word(f: &Filling) -> Result<Vec<usize>> {
    require_maj_zero(f)?;
    Ok(ordered_cells(f).into_iter().map(|(c, _)| c.col).collect())
}

/// The inversion diagram of a `maj = 0` filling.
pub fn inv_plot(f: &Filling) -> Result<InversionDiagram> {
    require_maj_zero(f)?;
    let cells = ordered_cells(f);
    Ok(InversionDiagram {
        letters: cells.iter().map(|&(_, a)| a).collect(),
        rows: cells.iter().map(|&(c, _)| c.col).collect(),
        labels: cells.iter().map(|&(c, _)| c.row).collect(),
        shape: f.shape().conjugate(),
    })
}

/// Rebuilds the filling from its inversion diagram.
pub fn inv_plot_inverse(d: &InversionDiagram) -> Result<Filling> {
    let n = d.letters.len();
    if d.rows.len() != n || d.labels.len() != n || d.shape.size() != n {
        return Err(Error::Precondition("diagram parts have different lengths".into()));
    }
    if d.letters.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition("diagram letters must be weakly increasing".into()));
    }
    let mut seen = vec![0usize; d.shape.len()];
    for t in 0..n {
        let r = d.rows[t];
        if r == 0 || r > d.shape.len() {
            return Err(Error::Precondition(format!("dot in row {r} outside the diagram")));
        }
        seen[r - 1] += 1;
        if d.labels[t] != d.shape.row_len(r) + 1 - seen[r - 1] {
            return Err(Error::Precondition(format!("dot {} has a wrong label", t + 1)));
        }
        if t > 0 && d.letters[t - 1] == d.letters[t] {
            let reading = d.labels[t - 1] > d.labels[t] || (d.labels[t - 1] == d.labels[t] && d.rows[t - 1] < d.rows[t]);
            if !reading {
                return Err(Error::Precondition(format!("equal letters at dots {t} and {} are out of order", t + 1)));
            }
        }
    }
    let shape = d.shape.conjugate();
    let mut rows: Rows = shape.parts().iter().map(|&p| vec![0; p]).collect();
    for t in 0..n {
        rows[d.labels[t] - 1][d.rows[t] - 1] = d.letters[t];
    }
    Filling::new(rows)
}

/// For a `maj = 0` filling: entry `i` counts the attacking pairs whose
/// smaller member is the `i`-th entry in increasing order (ties in reading
/// order).
pub fn invcode_filling(f: &Filling) -> Result<Code> {
    require_maj_zero(f)?;
    let cells = ordered_cells(f);
    Ok(Code(cells.iter().map(|&v| cells.iter().filter(|&&u| attacks(u, v)).count() as u32).collect()))
}

/// Rebuilds the `maj = 0` filling of the conjugate of `mu` with letters `a`
/// from its inversion code, placing dots left to right.
///
/// A dot placed in diagram row `h` gets label `i`, the number of dots that row
/// still needs. The larger entries that will attack it are the later dots
/// labelled `i` in lower rows and those labelled `i + 1` in higher rows, and
/// their number is read off the counts still to be placed.
pub fn invcode_filling_inverse(code: &Code, mu: &Partition, a: &Alphabet) -> Result<Filling> {
    if !in_code_set(code, mu, a)? {
        return Err(Error::InvalidCode { code: code.to_string(), reason: format!("not in C({mu}, {:?})", a.letters()) });
    }
    let letters = a.letters();
    let n = letters.len();
    let mut rem: Vec<usize> = mu.parts().to_vec();
    let mut rows = vec![0usize; n];
    let mut labels = vec![0usize; n];

    fn place(t: usize, code: &[u32], letters: &[Letter], rem: &mut [usize], rows: &mut [usize], labels: &mut [usize]) -> bool {
        if t == code.len() {
            return true;
        }
        for h in 0..rem.len() {
            if rem[h] == 0 {
                continue;
            }
            let i = rem[h];
            let attackers = (0..h).filter(|&r| rem[r] >= i).count() + (h + 1..rem.len()).filter(|&r| rem[r] > i).count();
            if attackers != code[t] as usize {
                continue;
            }
            if t > 0 && letters[t - 1] == letters[t] && !(labels[t - 1] > i || (labels[t - 1] == i && rows[t - 1] < h + 1)) {
                continue;
            }
            rows[t] = h + 1;
            labels[t] = i;
            rem[h] -= 1;
            if place(t + 1, code, letters, rem, rows, labels) {
                return true;
            }
            rem[h] += 1;
        }
        false
    }

    if !place(0, &code.0, letters, &mut rem, &mut rows, &mut labels) {
        return Err(Error::NotInImage(format!("no filling has inversion code {code}")));
    }
    let f = inv_plot_inverse(&InversionDiagram { letters: letters.to_vec(), rows, labels, shape: mu.clone() })?;
    if &invcode_filling(&f)? != code {
        return Err(Error::NotInImage(format!("no filling has inversion code {code}")));
    }
    Ok(f)
}

/// Row multisets after a zero bump: the largest entry leaves the end of the
/// bottom row and the rest of the last column slides down one row.
fn zero_bump_rows(f: &Filling) -> Result<Filling> {
    let mut rows: Rows = f.rows().to_vec();
    let width = rows[0].len();
    let h = rows.iter().take_while(|r| r.len() == width).count();
    rows[0].pop();
    for k in 1..h {
        let x = rows[k].pop().expect("full row");
        rows[k - 1].push(x);
    }
    rearrange_rows(rows)
}

/// Removes the largest entry from the bottom row of an `inv = 0` filling and
/// lets the rest of the last column drop by one, keeping `maj`.
pub fn zero_bump(f: &Filling) -> Result<Filling> {
    require_inv_zero(f)?;
    let n = f.max_entry().ok_or_else(|| Error::Precondition("empty filling".into()))?;
    if f.rows()[0].last() != Some(&n) {
        return Err(Error::Precondition("the largest entry must be in the bottom row".into()));
    }
    zero_bump_rows(f)
}

/// Index of the chosen 0 in a word of `w` zeros and `w - 1` ones: reading 0
/// as a step up and 1 as a step down, the step right after the last visit
/// to the minimum height.
pub fn pull_up_walk(word: &[bool]) -> Result<usize> {
    let ones = word.iter().filter(|&&b| b).count();
    let zeros = word.len() - ones;
    if zeros != ones + 1 {
        return Err(Error::UnbalancedWord { zeros, ones });
    }
    let mut height = 0i64;
    let mut min = 0i64;
    let mut last = 0;
    for (k, &b) in word.iter().enumerate() {
        height += if b { -1 } else { 1 };
        if height <= min {
            min = height;
            last = k + 1;
        }
    }
    Ok(last)
}

/// The letter of `bottom` (size `w`) that, moved up to join `top` (size
/// `w - 1`), ends up rightmost after the top row is rearranged without
/// inversions.
pub fn pull_up(bottom: &[Letter], top: &[Letter]) -> Result<Letter> {
    if bottom.len() != top.len() + 1 {
        return Err(Error::Precondition(format!("pull-up needs rows of sizes w and w-1, got {} and {}", bottom.len(), top.len())));
    }
    // letters by value; on ties the top letter comes first
    let mut merged: Vec<(Letter, bool)> = bottom.iter().map(|&a| (a, false)).chain(top.iter().map(|&b| (b, true))).collect();
    merged.sort_by_key(|&(a, is_top)| (a, !is_top));
    let word: Vec<bool> = merged.iter().map(|&(_, t)| t).collect();
    Ok(merged[pull_up_walk(&word)?].0)
}

/// [`pull_up`] by trying every candidate: the value `a` of `bottom` such that,
/// for every arrangement of the other bottom letters, the top row `top + a`
/// rearranged without inversions ends in `a`. The overhanging last cell of
/// the top row sits above the cell that later receives a letter larger than
/// all others. Returns `None` unless exactly one value works.
pub fn pull_up_by_search(bottom: &[Letter], top: &[Letter]) -> Option<Letter> {
    if bottom.len() != top.len() + 1 {
        return None;
    }
    let mut values = bottom.to_vec();
    values.sort_unstable();
    values.dedup();
    let mut found = values.into_iter().filter(|&a| {
        let mut rest = bottom.to_vec();
        rest.remove(rest.iter().position(|&x| x == a).expect("value from bottom"));
        let mut up = top.to_vec();
        up.push(a);
        MultisetPermutations::new(rest).all(|mut base| {
            base.push(Letter::MAX);
            rearrange_row_no_inversions(&up, Some(&base)).is_ok_and(|row| row.last() == Some(&a))
        })
    });
    let first = found.next()?;
    found.next().is_none().then_some(first)
}

/// Pulls a letter from row `k` up into row `k + 1` for `k = from - 1` down to
/// `to` (1-based); returns the pulled letters indexed by source row.
fn pull_up_chain(rows: &mut Rows, from: usize, to: usize) -> Result<Vec<(usize, Letter)>> {
    let mut out = Vec::new();
    for k in (to..from).rev() {
        while rows.len() <= k {
            rows.push(Vec::new());
        }
        let a = pull_up(&rows[k - 1], &rows[k])?;
        let i = rows[k - 1].iter().position(|&x| x == a).expect("pulled letter present");
        rows[k - 1].remove(i);
        rows[k].push(a);
        out.push((k, a));
    }
    Ok(out)
}

/// Inverse of [`zero_bump`]: the `inv = 0` filling of shape `mu` with `n` in
/// its bottom row that bumps to `zeta`.
pub fn zero_bump_inverse(zeta: &Filling, mu: &Partition, n: Letter) -> Result<Filling> {
    if zeta.shape() != mu.corner_removal(1)? {
        return Err(Error::Precondition(format!("shape {} is not {mu} minus its first corner", zeta.shape())));
    }
    let h = mu.col_len(mu.row_len(1));
    let mut rows: Rows = zeta.rows().to_vec();
    pull_up_chain(&mut rows, h, 1)?;
    if rows.is_empty() {
        rows.push(Vec::new());
    }
    rows[0].push(n);
    rearrange_rows(rows)
}

fn remove_one(row: &mut Vec<Letter>, x: Letter) -> Result<()> {
    let i = row.iter().position(|&y| y == x).ok_or_else(|| Error::Inconsistent(format!("letter {x} missing from row {row:?}")))?;
    row.remove(i);
    Ok(())
}

/// The rectangle step for a largest entry in row `i` (1-based): split below
/// row `i`, zero-bump the upper part, and restack.
fn rect_psi_rows(f: &Filling, i: usize) -> Result<Filling> {
    if i == 1 {
        return zero_bump_rows(f);
    }
    let rows = f.rows();
    let upper = rearrange_rows(rows[i - 1..].to_vec())?;
    let bumped = zero_bump_rows(&upper)?;
    let mut all: Rows = rows[..i - 1].to_vec();
    all.extend(bumped.into_rows());
    rearrange_rows(all)
}

fn check_rectangle(f: &Filling) -> Result<()> {
    if !f.shape().is_rectangle() {
        return Err(Error::NotRectangle);
    }
    if !f.is_distinct() {
        return Err(Error::RepeatedEntries);
    }
    require_inv_zero(f)
}

fn row_of_max(f: &Filling) -> Result<usize> {
    let n = f.max_entry().ok_or_else(|| Error::Precondition("empty filling".into()))?;
    Ok(f.rows().iter().position(|r| r.contains(&n)).expect("max present") + 1)
}

/// The letters `a_1, ..., a_(h-1)` pulled up, row by row from the top, when
/// the image under [`rect_psi`] is rebuilt with the largest entry in the
/// bottom row.
pub fn bumping_sequence(f: &Filling) -> Result<Vec<Letter>> {
    check_rectangle(f)?;
    bumping_sequence_rows(f, row_of_max(f)?)
}

fn bumping_sequence_rows(f: &Filling, i: usize) -> Result<Vec<Letter>> {
    let h = f.num_rows();
    let image = rect_psi_rows(f, i)?;
    let mut rows: Rows = image.into_rows();
    let mut seq = pull_up_chain(&mut rows, h, 1)?;
    seq.sort_by_key(|&(k, _)| k);
    Ok(seq.into_iter().map(|(_, a)| a).collect())
}

fn drop_of(before: &Filling, after: &Filling) -> Result<usize> {
    let (m0, m1) = (maj(before), maj(after));
    if m1 > m0 {
        return Err(Error::Inconsistent(format!("maj rose from {m0} to {m1}")));
    }
    Ok(m0 - m1)
}

/// Removes the largest entry of a rectangular `inv = 0` filling with distinct
/// entries. Returns the image and the drop `d` in `maj`.
pub fn rect_psi(f: &Filling) -> Result<(Filling, usize)> {
    check_rectangle(f)?;
    let g = rect_psi_rows(f, row_of_max(f)?)?;
    let d = drop_of(f, &g)?;
    Ok((g, d))
}

/// Inverse of [`rect_psi`]: the rectangle filling of shape `mu` with largest
/// entry `n` mapping to `(zeta, d)`.
pub fn rect_psi_inverse(zeta: &Filling, d: usize, mu: &Partition, n: Letter) -> Result<Filling> {
    if !mu.is_rectangle() {
        return Err(Error::NotRectangle);
    }
    let h = mu.len();
    let mut found = Vec::new();
    for i in 1..=h {
        let mut rows: Rows = zeta.rows().to_vec();
        pull_up_chain(&mut rows, h, i)?;
        while rows.len() < i {
            rows.push(Vec::new());
        }
        rows[i - 1].push(n);
        let sigma = rearrange_rows(rows)?;
        if maj(&sigma) == maj(zeta) + d {
            found.push(sigma);
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(Error::NotInImage(format!("no preimage with drop {d}"))),
        _ => Err(Error::Inconsistent(format!("several preimages with drop {d}"))),
    }
}

fn max_cells(f: &Filling) -> Vec<Cell> {
    let n = f.max_entry().unwrap_or(0);
    f.reading_order().into_iter().filter(|&c| f.get(c) == Some(n)).collect()
}

/// The removal step for one chosen copy (given by its cell) of the largest
/// letter of an `inv = 0` filling with at most three rows. Other copies of
/// the largest letter are treated as ordinary equal letters.
pub fn psi_at(f: &Filling, cell: Cell) -> Result<(Filling, usize)> {
    let shape = f.shape();
    if shape.len() > 3 {
        return Err(Error::TooManyRows(shape.len()));
    }
    let n = f.max_entry().ok_or_else(|| Error::Precondition("empty filling".into()))?;
    if f.get(cell) != Some(n) {
        return Err(Error::Precondition(format!("cell ({}, {}) does not hold the largest entry", cell.row, cell.col)));
    }
    let mu3 = shape.row_len(3);
    let mut rows: Rows = f.rows().to_vec();
    let g = match cell.row {
        1 => zero_bump_rows(f)?,
        2 if cell.col > mu3 => {
            rows[1].remove(cell.col - 1);
            rearrange_rows(rows)?
        }
        2 => {
            let block = Filling::new(rows.iter().map(|r| r[..mu3].to_vec()).collect())?;
            let seq = bumping_sequence_rows(&block, 2)?;
            let a2 = seq[1];
            let b = f.get(Cell::new(2, mu3 + 1)).unwrap_or(ABOVE);
            rows[1].remove(cell.col - 1);
            if b >= a2 {
                remove_one(&mut rows[2], a2)?;
                rows[1].push(a2);
            }
            rearrange_rows(rows)?
        }
        _ => {
            let block = Filling::new(rows.iter().map(|r| r[..mu3].to_vec()).collect())?;
            let seq = bumping_sequence_rows(&block, 3)?;
            let (a1, a2) = (seq[0], seq[1]);
            rows[2].remove(cell.col - 1);
            if !(a2 > a1 || shape.row_len(2) == mu3) {
                remove_one(&mut rows[1], a2)?;
                rows[2].push(a2);
            }
            rearrange_rows(rows)?
        }
    };
    let d = drop_of(f, &g)?;
    // with repeated letters the drop is measured on the filling as it stands
    // and need not name the removed corner
    if f.is_distinct() && (d >= shape.len() || g.shape() != shape.corner_removal(d + 1)?) {
        return Err(Error::Inconsistent(format!("drop {d} does not match image shape {}", g.shape())));
    }
    Ok((g, d))
}

/// [`psi_at`] on a filling with at most two rows, removing the last copy of
/// the largest letter in reading order.
pub fn two_row_psi(f: &Filling) -> Result<(Filling, usize)> {
    if f.num_rows() > 2 {
        return Err(Error::Precondition("expected at most two rows".into()));
    }
    require_inv_zero(f)?;
    let cell = *max_cells(f).last().ok_or_else(|| Error::Precondition("empty filling".into()))?;
    psi_at(f, cell)
}

/// [`psi_at`] on a filling with at most three rows, removing copy number
/// `occurrence` (0-based, reading order) of the largest letter.
pub fn three_row_psi(f: &Filling, occurrence: usize) -> Result<(Filling, usize)> {
    if f.num_rows() > 3 {
        return Err(Error::TooManyRows(f.num_rows()));
    }
    require_inv_zero(f)?;
    let cells = max_cells(f);
    let cell = *cells.get(occurrence).ok_or_else(|| Error::Precondition(format!("no occurrence {occurrence} of the largest letter")))?;
    psi_at(f, cell)
}

fn insert_rearranged(f: &Filling, row: usize, x: Letter) -> Result<Filling> {
    let mut rows: Rows = f.rows().to_vec();
    while rows.len() < row {
        rows.push(Vec::new());
    }
    rows[row - 1].push(x);
    rearrange_rows(rows)
}

fn cell_of(f: &Filling, x: Letter) -> Cell {
    f.reading_order().into_iter().find(|&c| f.get(c) == Some(x)).expect("letter present")
}

/// Inverse of [`psi_at`] for distinct entries: the filling of shape `mu`
/// with largest entry `n` whose removal step gives `(zeta, d)`.
pub fn psi_inverse(zeta: &Filling, d: usize, mu: &Partition, n: Letter) -> Result<Filling> {
    if mu.len() > 3 {
        return Err(Error::TooManyRows(mu.len()));
    }
    if d >= mu.len() || zeta.shape() != mu.corner_removal(d + 1)? {
        return Err(Error::NotInImage(format!("drop {d} is impossible from {mu} to {}", zeta.shape())));
    }
    let (mu2, mu3) = (mu.row_len(2), mu.row_len(3));
    let sigma = if d == 0 {
        zero_bump_inverse(zeta, mu, n)?
    } else if mu3 == 0 {
        insert_rearranged(zeta, 2, n)?
    } else if mu2 == mu3 {
        // rows two and three form a rectangle over the bottom row
        let mut candidates = Vec::new();
        let mut rows: Rows = zeta.rows().to_vec();
        pull_up_chain(&mut rows, 3, 2)?;
        rows[1].push(n);
        candidates.push(rearrange_rows(rows)?);
        candidates.push(insert_rearranged(zeta, 3, n)?);
        candidates.into_iter().find(|s| maj(s) == maj(zeta) + d).ok_or_else(|| Error::NotInImage(format!("no preimage with drop {d}")))?
    } else if d == 1 {
        let rho = insert_rearranged(zeta, 2, n)?;
        let c = cell_of(&rho, n);
        if c.col > mu3 {
            rho
        } else {
            let block = Filling::new(rho.rows().iter().map(|r| r[..mu3].to_vec()).collect())?;
            let a2 = bumping_sequence_rows(&block, 2)?[1];
            let b = rho.get(Cell::new(2, mu3 + 1)).unwrap_or(ABOVE);
            if b < a2 {
                rho
            } else {
                let (tau, _) = psi_at(&rho, c)?;
                insert_rearranged(&tau, 3, n)?
            }
        }
    } else {
        let rho = insert_rearranged(zeta, 3, n)?;
        let block = Filling::new(rho.rows().iter().map(|r| r[..mu3].to_vec()).collect())?;
        let seq = bumping_sequence_rows(&block, 3)?;
        if seq[1] > seq[0] {
            rho
        } else {
            let mut rows: Rows = rho.into_rows();
            remove_one(&mut rows[2], n)?;
            remove_one(&mut rows[1], seq[1])?;
            rows[2].push(seq[1]);
            rows[1].push(n);
            rearrange_rows(rows)?
        }
    };
    let (back, d2) = psi_at(&sigma, cell_of(&sigma, n))?;
    if back != *zeta || d2 != d {
        return Err(Error::NotInImage(format!("no preimage of {zeta} with drop {d} in shape {mu}")));
    }
    Ok(sigma)
}

/// One removal step on an `inv = 0` filling with at most three rows: among
/// the copies of the largest letter, those whose removal drops `maj` the
/// least compete, and the last of them in reading order is removed. Returns
/// the image, the drop, and the index of the removed copy in reading order.
pub fn removal_step(f: &Filling) -> Result<(Filling, usize, usize)> {
    let copies = max_cells(f);
    let mut best: Option<(Filling, usize, usize)> = None;
    for (r, &c) in copies.iter().enumerate() {
        let (g, d) = psi_at(f, c)?;
        if best.as_ref().is_none_or(|(_, bd, _)| d <= *bd) {
            best = Some((g, d, r));
        }
    }
    best.ok_or_else(|| Error::Precondition("empty filling".into()))
}

/// Relabels the entries by `1..=n` in the order [`removal_step`] removes
/// them, the first removed getting `n`. Columns use column standardization.
pub fn standardize_filling(f: &Filling) -> Result<Filling> {
    let shape = f.shape();
    if shape.len() > 3 {
        return Err(Error::TooManyRows(shape.len()));
    }
    require_inv_zero(f)?;
    if shape.is_column() {
        return standardize_column(f);
    }
    Ok(removal_sequence(f)?.0)
}

/// Reading-order standardization: equal letters increase in reading order.
pub fn standardize_by_reading_order(f: &Filling) -> Filling {
    let mut keyed: Vec<(Letter, usize, Cell)> = f.reading_order().into_iter().enumerate().map(|(k, c)| (f.get(c).unwrap(), k, c)).collect();
    keyed.sort();
    let labels: HashMap<Cell, Letter> = keyed.iter().enumerate().map(|(i, &(_, _, c))| (c, i as Letter + 1)).collect();
    f.map_entries(|c, _| labels[&c])
}

/// Removes every entry with [`removal_step`], returning the induced
/// standardization and the drops. Copies of a letter are tracked by their
/// rank in reading order, which the steps preserve.
fn removal_sequence(f: &Filling) -> Result<(Filling, Vec<usize>)> {
    let mut survivors: BTreeMap<Letter, Vec<Cell>> = BTreeMap::new();
    for c in f.reading_order() {
        survivors.entry(f.get(c).unwrap()).or_default().push(c);
    }
    let mut labels = HashMap::new();
    let mut next = f.size() as Letter;
    let mut current = f.clone();
    let mut drops = Vec::with_capacity(f.size());
    while !current.is_empty() {
        let n = current.max_entry().unwrap();
        let (g, d, r) = removal_step(&current)?;
        let original = survivors.get_mut(&n).expect("letter tracked").remove(r);
        labels.insert(original, next);
        next -= 1;
        drops.push(d);
        current = g;
    }
    Ok((f.map_entries(|c, _| labels[&c]), drops))
}

/// The major-index code of an `inv = 0` filling with at most three rows: the
/// drops in `maj` as [`removal_step`] empties it.
pub fn majcode_filling(f: &Filling) -> Result<Code> {
    let shape = f.shape();
    if shape.len() > 3 {
        return Err(Error::TooManyRows(shape.len()));
    }
    require_inv_zero(f)?;
    if shape.is_column() {
        return majcode_column(f);
    }
    if shape.len() == 1 {
        return Ok(Code::zeros(shape.size()));
    }
    Ok(Code(removal_sequence(f)?.1.into_iter().map(|d| d as u32).collect()))
}

/// Row multisets reachable from `zeta` by adding `x` to one row and moving
/// at most two letters between adjacent rows, kept when they fit in `bound`.
fn step_candidates(zeta: &Filling, x: Letter, bound: &Partition) -> Vec<Filling> {
    let mut base: Rows = zeta.rows().to_vec();
    base.resize(bound.len(), Vec::new());
    let mut values: Vec<Letter> = zeta.letters();
    values.push(x);
    values.dedup();
    let rows = base.len();
    let mut moves = Vec::new();
    for j in 0..rows.saturating_sub(1) {
        for &v in &values {
            moves.push((j, j + 1, v));
            moves.push((j + 1, j, v));
        }
    }
    let apply = |rows: &mut Rows, (from, to, v): (usize, usize, Letter)| -> bool {
        match rows[from].iter().position(|&y| y == v) {
            Some(i) => {
                rows[from].remove(i);
                rows[to].push(v);
                true
            }
            None => false,
        }
    };
    let fits = |rows: &Rows| {
        rows.iter().enumerate().all(|(i, r)| r.len() <= bound.row_len(i + 1)) && rows.windows(2).all(|w| w[0].len() >= w[1].len())
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut consider = |rows: Rows| {
        if !fits(&rows) {
            return;
        }
        let mut key = rows.clone();
        key.iter_mut().for_each(|r| r.sort_unstable());
        if seen.insert(key) {
            if let Ok(f) = rearrange_rows(rows) {
                out.push(f);
            }
        }
    };
    for r in 0..rows {
        let mut start = base.clone();
        start[r].push(x);
        consider(start.clone());
        for &m1 in &moves {
            let mut one = start.clone();
            if !apply(&mut one, m1) {
                continue;
            }
            consider(one.clone());
            for &m2 in &moves {
                let mut two = one.clone();
                if apply(&mut two, m2) {
                    consider(two);
                }
            }
        }
    }
    out
}

/// Inverse of [`majcode_filling`]: the `inv = 0` filling of shape `mu` with
/// letters `a` and major-index code `code`.
///
/// With distinct letters the removal steps are undone one at a time by
/// [`psi_inverse`]. With repeated letters the drops do not determine the
/// intermediate shapes, so each step searches the few fillings that one
/// removal step can map onto the current one, backtracking on dead ends.
pub fn majcode_filling_inverse(code: &Code, mu: &Partition, a: &Alphabet) -> Result<Filling> {
    if mu.len() > 3 {
        return Err(Error::TooManyRows(mu.len()));
    }
    if a.len() != mu.size() || code.len() != mu.size() {
        return Err(Error::SizeMismatch { expected: mu.size(), found: code.len().max(a.len()) });
    }
    if mu.is_column() {
        return majcode_column_inverse(code, a);
    }
    if !in_code_set(code, mu, &a.complement())? {
        return Err(Error::InvalidCode { code: code.to_string(), reason: format!("not in C({mu}, {:?})", a.complement().letters()) });
    }
    if mu.len() == 1 {
        return Filling::row(a.letters());
    }
    let n = mu.size();
    let letters = a.letters();
    let not_found = || Error::NotInImage(format!("no filling of {mu} over {letters:?} has code {code}"));
    let f = if a.is_distinct() {
        let mut shapes = vec![mu.clone()];
        for &d in &code.0 {
            let next = shapes.last().unwrap().corner_removal(d as usize + 1)?;
            shapes.push(next);
        }
        let mut zeta = Filling::empty();
        for k in (0..n).rev() {
            zeta = psi_inverse(&zeta, code.0[k] as usize, &shapes[k], (n - k) as Letter)?;
        }
        zeta.map_entries(|_, v| letters[v as usize - 1])
    } else {
        fn build(zeta: Filling, k: usize, code: &[u32], letters: &[Letter], mu: &Partition) -> Option<Filling> {
            if k == 0 {
                return (zeta.shape() == *mu).then_some(zeta);
            }
            let x = letters[code.len() - k];
            let d = code[k - 1] as usize;
            for sigma in step_candidates(&zeta, x, mu) {
                if matches!(removal_step(&sigma), Ok((g, dd, _)) if dd == d && g == zeta) {
                    if let Some(f) = build(sigma, k - 1, code, letters, mu) {
                        return Some(f);
                    }
                }
            }
            None
        }
        build(Filling::empty(), n, &code.0, letters, mu).ok_or_else(not_found)?
    };
    if &majcode_filling(&f)? != code {
        return Err(not_found());
    }
    Ok(f)
}

/// Sends an `inv = 0` filling of `mu` to the `maj = 0` filling of the
/// conjugate shape over the complemented alphabet whose inversion code is the
/// major-index code of the input.
pub fn hl_symmetry_map(f: &Filling) -> Result<Filling> {
    let code = majcode_filling(f)?;
    let a = Alphabet::new(f.letters())?;
    invcode_filling_inverse(&code, &f.shape(), &a.complement())
}

/// Inverse of [`hl_symmetry_map`].
pub fn hl_symmetry_map_inverse(g: &Filling) -> Result<Filling> {
    let code = invcode_filling(g)?;
    let a = Alphabet::new(g.letters())?;
    majcode_filling_inverse(&code, &g.shape().conjugate(), &a.complement())
}

/// For a 0/1 word with as many zeros as ones: pair each zero, taken in the
/// given order, with the first unused one cyclically to its right, and count
/// the pairs that wrap around.
pub fn crossing_number(word: &[bool], ordering: &[usize]) -> Result<usize> {
    let ones = word.iter().filter(|&&b| b).count();
    let zeros = word.len() - ones;
    if zeros != ones {
        return Err(Error::UnbalancedWord { zeros, ones });
    }
    let mut sorted = ordering.to_vec();
    sorted.sort_unstable();
    let zero_positions: Vec<usize> = (0..word.len()).filter(|&i| !word[i]).collect();
    if sorted != zero_positions {
        return Err(Error::Precondition("ordering must list every zero position once".into()));
    }
    let n = word.len();
    let mut used = vec![false; n];
    let mut crossings = 0;
    for &a in ordering {
        let mut p = a;
        loop {
            p = (p + 1) % n;
            if word[p] && !used[p] {
                break;
            }
        }
        used[p] = true;
        if p < a {
            crossings += 1;
        }
    }
    Ok(crossings)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fill(s: &str) -> Filling {
        s.parse().unwrap()
    }

    #[test]
    fn rearrange_examples() {
        assert_eq!(rearrange_row_no_inversions(&[3, 1, 2], None).unwrap(), vec![1, 2, 3]);
        assert_eq!(rearrange_row_no_inversions(&[1, 2], Some(&[1, 2])).unwrap(), vec![2, 1]);
    }

    #[test]
    fn zero_bump_examples() {
        let row = fill("[[1,2,3]]");
        assert_eq!(zero_bump(&row).unwrap(), fill("[[1,2]]"));
        let col = fill("[[2],[1]]");
        assert_eq!(zero_bump(&col).unwrap(), fill("[[1]]"));
        let f = fill("[[1,2,3],[2,1]]");
        let g = zero_bump(&f).unwrap();
        assert_eq!(g.shape(), Partition::new(vec![2, 2]).unwrap());
        assert_eq!(maj(&g), maj(&f));
    }

    #[test]
    fn walk_example() {
        let w: Vec<bool> = "001110100".chars().map(|c| c == '1').collect();
        assert_eq!(pull_up_walk(&w).unwrap(), 7);
        assert_eq!(pull_up(&[4], &[]).unwrap(), 4);
    }

    #[test]
    fn crossing_examples() {
        let w: Vec<bool> = "10110010".chars().map(|c| c == '1').collect();
        let zeros: Vec<usize> = (0..w.len()).filter(|&i| !w[i]).collect();
        assert_eq!(crossing_number(&w, &zeros).unwrap(), 2);
        assert_eq!(crossing_number(&[false, true], &[0]).unwrap(), 0);
        assert_eq!(crossing_number(&[true, false], &[1]).unwrap(), 1);
        assert!(crossing_number(&[true, true], &[]).is_err());
    }

    #[test]
    fn sorted_row_codes() {
        let row = fill("[[1,2,3]]");
        assert_eq!(invcode_filling(&row).unwrap(), Code::zeros(3));
        assert_eq!(inversion_word(&row).unwrap(), vec![1, 2, 3]);
        assert_eq!(majcode_filling(&row).unwrap(), Code::zeros(3));
        let col = fill("[[3],[2],[1]]");
        assert_eq!(inversion_word(&col).unwrap(), vec![1, 1, 1]);
    }
}
