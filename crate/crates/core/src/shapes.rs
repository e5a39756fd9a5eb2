//! Partitions, fillings in French notation, and the `inv`/`maj` statistics.
//!
//! Rows are numbered from the bottom (row 1 is the longest row) and columns
//! from the left. The reading order scans the top row first, left to right,
//! then the next row down, and so on.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter of a filling. Letters are positive; `0` is reserved as the
/// sentinel that sits below the bottom row.
pub type Letter = u32;

/// Sentinel comparing below every letter.
pub const BELOW: Letter = 0;

/// An integer partition with weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `row` (1-based); zero above the top row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    /// Height of column `col` (1-based).
    pub fn col_len(&self, col: usize) -> usize {
        self.0.iter().take_while(|&&p| p >= col).count()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.col_len(j)).collect())
    }

    /// Removes the top cell of the column holding the last cell of row `i`.
    pub fn corner_removal(&self, i: usize) -> Result<Partition> {
        if i == 0 || i > self.len() {
            return Err(Error::RowOutOfRange { index: i, rows: self.len() });
        }
        let target = self.0[i - 1];
        let top = self.0.iter().rposition(|&p| p == target).expect("row exists");
        let mut parts = self.0.clone();
        parts[top] -= 1;
        if parts[top] == 0 {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn is_rectangle(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// True for `(m, 1, ..., 1)`, including single rows and single columns.
    pub fn is_hook(&self) -> bool {
        !self.is_empty() && self.0[1..].iter().all(|&p| p == 1)
    }

    pub fn is_column(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Cells in reading order.
    pub fn reading_order(&self) -> Vec<Cell> {
        (1..=self.len()).rev().flat_map(|r| (1..=self.row_len(r)).map(move |c| Cell::new(r, c))).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list::<usize>(s.trim_matches(|c| c == '(' || c == ')'))?;
        Partition::new(parts)
    }
}

/// A cell, 1-based, row counted from the bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// Multiplicities of the letters `1, 2, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Content(pub Vec<usize>);

impl Content {
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The reversed content: letter `a` becomes `k + 1 - a`.
    pub fn reverse(&self) -> Content {
        Content(self.0.iter().rev().copied().collect())
    }

    /// Letters in weakly increasing order.
    pub fn letters(&self) -> Vec<Letter> {
        self.0.iter().enumerate().flat_map(|(i, &m)| std::iter::repeat_n(i as Letter + 1, m)).collect()
    }

    pub fn of_letters(letters: &[Letter]) -> Content {
        let max = letters.iter().copied().max().unwrap_or(0) as usize;
        let mut alpha = vec![0; max];
        for &a in letters {
            alpha[a as usize - 1] += 1;
        }
        Content(alpha)
    }

    /// Drops trailing zeros.
    pub fn normalized(&self) -> Content {
        let mut v = self.0.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        Content(v)
    }
}

impl FromStr for Content {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Content(parse_list(s)?))
    }
}

/// A filling of a partition shape by positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    rows: Vec<Vec<Letter>>,
}

impl Filling {
    /// Builds a filling from its rows, listed bottom to top.
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidFilling("empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidFilling("row lengths must weakly decrease upward".into()));
        }
        if rows.iter().flatten().any(|&a| a == 0) {
            return Err(Error::InvalidFilling("entries must be positive".into()));
        }
        Ok(Filling { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Letter>>) -> Self {
        debug_assert!(Filling::new(rows.clone()).is_ok(), "bad rows {rows:?}");
        Filling { rows }
    }

    pub fn empty() -> Self {
        Filling { rows: Vec::new() }
    }

    /// A single row.
    pub fn row(word: &[Letter]) -> Result<Self> {
        if word.is_empty() {
            return Ok(Filling::empty());
        }
        Filling::new(vec![word.to_vec()])
    }

    /// A single column given top to bottom.
    pub fn column(word: &[Letter]) -> Result<Self> {
        Filling::new(word.iter().rev().map(|&a| vec![a]).collect())
    }

    /// Builds a filling of `shape` from its columns, each read top to bottom.
    pub fn from_columns(shape: &Partition, columns: &[Vec<Letter>]) -> Result<Self> {
        let conj = shape.conjugate();
        if columns.len() != conj.len() || columns.iter().zip(conj.parts()).any(|(c, &h)| c.len() != h) {
            return Err(Error::InvalidFilling("columns do not match the shape".into()));
        }
        let mut rows: Vec<Vec<Letter>> = shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
        for col in columns {
            for (k, &a) in col.iter().rev().enumerate() {
                rows[k].push(a);
            }
        }
        Filling::new(rows)
    }

    /// Rows, bottom to top.
    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Letter>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.rows.get(row - 1).map_or(0, Vec::len)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, cell: Cell) -> Option<Letter> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        self.rows.get(cell.row - 1)?.get(cell.col - 1).copied()
    }

    pub fn entry(&self, cell: Cell) -> Result<Letter> {
        self.get(cell).ok_or(Error::CellOutside { row: cell.row, col: cell.col })
    }

    /// Column `col` (1-based) read top to bottom.
    pub fn column_word(&self, col: usize) -> Vec<Letter> {
        self.rows.iter().rev().filter_map(|r| r.get(col - 1).copied()).collect()
    }

    /// All columns, each read top to bottom.
    pub fn columns(&self) -> Vec<Vec<Letter>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (1..=width).map(|c| self.column_word(c)).collect()
    }

    /// Cells in reading order: top row first, left to right.
    pub fn reading_order(&self) -> Vec<Cell> {
        self.shape().reading_order()
    }

    /// Entries in reading order.
    pub fn reading_word(&self) -> Vec<Letter> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Entries in weakly increasing order.
    pub fn letters(&self) -> Vec<Letter> {
        let mut v: Vec<Letter> = self.rows.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    pub fn content(&self) -> Content {
        Content::of_letters(&self.letters())
    }

    pub fn max_entry(&self) -> Option<Letter> {
        self.rows.iter().flatten().copied().max()
    }

    pub fn is_distinct(&self) -> bool {
        let l = self.letters();
        l.windows(2).all(|w| w[0] < w[1])
    }

    /// Applies `f` to every entry.
    pub fn map_entries(&self, mut f: impl FnMut(Cell, Letter) -> Letter) -> Filling {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| row.iter().enumerate().map(|(c, &a)| f(Cell::new(r + 1, c + 1), a)).collect())
            .collect();
        Filling { rows }
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, a) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Filling {
    type Err = Error;

    /// Parses the bottom-to-top row list syntax, e.g. `[[1,2,3],[2,1]]`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected a list of rows, got {s:?}")))?;
        if inner.is_empty() {
            return Ok(Filling::empty());
        }
        let mut rows = Vec::new();
        let mut rest = inner;
        loop {
            let body = rest.strip_prefix('[').ok_or_else(|| Error::Parse(format!("expected '[' in {s:?}")))?;
            let end = body.find(']').ok_or_else(|| Error::Parse(format!("unclosed row in {s:?}")))?;
            rows.push(parse_list::<Letter>(&body[..end])?);
            rest = &body[end + 1..];
            if rest.is_empty() {
                break;
            }
            rest = rest.strip_prefix(',').ok_or_else(|| Error::Parse(format!("expected ',' between rows in {s:?}")))?;
        }
        Filling::new(rows)
    }
}

/// Parses a comma-separated list of integers. The empty string is the empty list.
pub fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<T>().map_err(|_| Error::Parse(format!("bad integer {t:?}")))).collect()
}

/// Major index of a word: sum of the positions `i` (1-based) with `w[i] > w[i+1]`.
pub fn word_maj(w: &[Letter]) -> usize {
    w.windows(2).enumerate().filter(|(_, p)| p[0] > p[1]).map(|(i, _)| i + 1).sum()
}

/// Number of pairs `i < j` with `w[i] > w[j]`.
pub fn word_inv(w: &[Letter]) -> usize {
    let mut n = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                n += 1;
            }
        }
    }
    n
}

/// Sum over columns of the major index of the column read top to bottom.
pub fn maj(f: &Filling) -> usize {
    let rows = f.rows();
    let mut total = 0;
    // A descent at row r+1 (above r) sits at column position h - r - 1 from
    // the top, where h is the column height.
    for c in 0..rows.first().map_or(0, Vec::len) {
        let h = rows.iter().take_while(|r| r.len() > c).count();
        for r in 0..h.saturating_sub(1) {
            if rows[r + 1][c] > rows[r][c] {
                total += h - r - 1;
            }
        }
    }
    total
}

/// True if the cell's entry is strictly greater than the entry below it.
pub fn is_descent(f: &Filling, cell: Cell) -> bool {
    if cell.row <= 1 {
        return false;
    }
    match (f.get(cell), f.get(Cell::new(cell.row - 1, cell.col))) {
        (Some(u), Some(b)) => u > b,
        _ => false,
    }
}

/// Number of cells strictly to the right in the same row.
pub fn arm(shape: &Partition, cell: Cell) -> usize {
    shape.row_len(cell.row) - cell.col
}

/// Whether `u` attacks `v`: `u > v` and either `u` is left of `v` in the same
/// row, or `u` is one row above `v` and strictly to its right.
pub fn attacks(u: (Cell, Letter), v: (Cell, Letter)) -> bool {
    let ((cu, a), (cv, b)) = (u, v);
    a > b && ((cu.row == cv.row && cu.col < cv.col) || (cu.row == cv.row + 1 && cu.col > cv.col))
}

/// Attacking pairs minus the arms of descents.
pub fn inv_attacking(f: &Filling) -> i64 {
    let rows = f.rows();
    let mut attacking = 0i64;
    for (r, row) in rows.iter().enumerate() {
        for i in 0..row.len() {
            for j in i + 1..row.len() {
                if row[i] > row[j] {
                    attacking += 1;
                }
            }
            if r > 0 {
                // u in this row, v in the row below and strictly left of u
                attacking += rows[r - 1][..i].iter().filter(|&&b| row[i] > b).count() as i64;
            }
        }
    }
    let mut arms = 0i64;
    for pair in rows.windows(2) {
        let (below, row) = (&pair[0], &pair[1]);
        for (c, (&u, &b)) in row.iter().zip(below).enumerate() {
            if u > b {
                arms += (row.len() - c - 1) as i64;
            }
        }
    }
    attacking - arms
}

/// Whether `(u, b, v)` is a relative inversion: `u` left of `v` in a row, `b`
/// directly below `u`.
pub fn is_relative_inversion(u: Letter, b: Letter, v: Letter) -> bool {
    (u <= b && b < v) || (b < v && v < u) || (v < u && u <= b)
}

/// Relative inversions of `row` sitting on `base` (`None` for the bottom row),
/// counted per left element.
pub fn row_inversions_by_position(base: Option<&[Letter]>, row: &[Letter]) -> Vec<usize> {
    (0..row.len())
        .map(|i| {
            let b = base.map_or(BELOW, |w| w[i]);
            (i + 1..row.len()).filter(|&j| is_relative_inversion(row[i], b, row[j])).count()
        })
        .collect()
}

/// Relative inversions of `row` sitting on `base`.
pub fn row_inversions(base: Option<&[Letter]>, row: &[Letter]) -> usize {
    row_inversions_by_position(base, row).iter().sum()
}

/// Number of relative inversions of the filling.
pub fn inv_relative(f: &Filling) -> usize {
    let rows = f.rows();
    rows.iter().enumerate().map(|(r, row)| row_inversions(if r == 0 { None } else { Some(&rows[r - 1]) }, row)).sum()
}

/// The statistic `inv` (computed via relative inversions).
pub fn inv(f: &Filling) -> usize {
    inv_relative(f)
}

/// Number of descents weakly below `cell` in its column.
pub fn cocharge_contribution(f: &Filling, cell: Cell) -> Result<usize> {
    f.entry(cell)?;
    Ok((2..=cell.row).filter(|&r| is_descent(f, Cell::new(r, cell.col))).count())
}

/// `n! / (parts[0]! parts[1]! ...)`.
pub fn multinomial(parts: &[usize]) -> u128 {
    let mut result: u128 = 1;
    let mut total: u128 = 0;
    for &p in parts {
        for i in 1..=p as u128 {
            total += 1;
            result = result * total / i;
        }
    }
    result
}

/// Compositions of `n` into exactly `k` nonnegative parts.
pub fn weak_compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            cur.push(n);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for p in (0..=n).rev() {
            cur.push(p);
            rec(n - p, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `n` into positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    (0..=n).flat_map(|k| weak_compositions(n, k)).filter(|c| c.iter().all(|&p| p > 0)).collect()
}

/// Rearranges `w` into the next lexicographically larger arrangement of the
/// same multiset. Returns `false` (and leaves `w` sorted) after the last one.
pub fn next_permutation<T: Ord>(w: &mut [T]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        w.reverse();
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Every distinct arrangement of a multiset, starting from the sorted one.
pub struct MultisetPermutations<T> {
    current: Vec<T>,
    done: bool,
}

impl<T: Ord + Clone> MultisetPermutations<T> {
    pub fn new(mut items: Vec<T>) -> Self {
        items.sort();
        MultisetPermutations { current: items, done: false }
    }
}

impl<T: Ord + Clone> Iterator for MultisetPermutations<T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.done = !next_permutation(&mut self.current);
        Some(out)
    }
}

fn split_rows(shape: &Partition, flat: &[Letter]) -> Vec<Vec<Letter>> {
    let mut rows = Vec::with_capacity(shape.len());
    let mut start = 0;
    for &p in shape.parts() {
        rows.push(flat[start..start + p].to_vec());
        start += p;
    }
    rows
}

fn check_content(shape: &Partition, content: &Content) -> Result<()> {
    if content.size() != shape.size() {
        return Err(Error::SizeMismatch { expected: shape.size(), found: content.size() });
    }
    Ok(())
}

/// Every filling of `shape` with the given content, each exactly once.
pub fn enumerate_fillings(shape: &Partition, content: &Content) -> Result<impl Iterator<Item = Filling>> {
    check_content(shape, content)?;
    let shape = shape.clone();
    Ok(MultisetPermutations::new(content.letters()).map(move |flat| Filling::from_rows_unchecked(split_rows(&shape, &flat))))
}

/// Calls `visit` on every filling of `shape` with the given content, reusing
/// one buffer.
pub fn for_each_filling(shape: &Partition, content: &Content, mut visit: impl FnMut(&Filling)) -> Result<()> {
    check_content(shape, content)?;
    let mut flat = content.letters();
    let mut f = Filling::from_rows_unchecked(split_rows(shape, &flat));
    loop {
        visit(&f);
        if !next_permutation(&mut flat) {
            return Ok(());
        }
        let mut start = 0;
        for row in f.rows.iter_mut() {
            let len = row.len();
            row.copy_from_slice(&flat[start..start + len]);
            start += len;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[1, 1, 1, 1]).conjugate(), p(&[4]));
        assert_eq!(p(&[4, 3, 3, 2, 2]).conjugate(), p(&[5, 5, 3, 1]));
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn corner_removal_examples() {
        assert_eq!(p(&[3, 2]).corner_removal(1).unwrap(), p(&[2, 2]));
        assert_eq!(p(&[3, 2]).corner_removal(2).unwrap(), p(&[3, 1]));
        assert_eq!(p(&[2, 2]).corner_removal(1).unwrap(), p(&[2, 1]));
        assert_eq!(p(&[2, 2]).corner_removal(2).unwrap(), p(&[2, 1]));
        assert!(p(&[2, 2]).corner_removal(3).is_err());
    }

    #[test]
    fn maj_examples() {
        assert_eq!(maj(&Filling::row(&[4, 1, 3, 2]).unwrap()), 0);
        assert_eq!(maj(&Filling::column(&[3, 2, 4, 1]).unwrap()), 4);
        assert_eq!(maj(&Filling::column(&[3, 2, 1]).unwrap()), 3);
    }

    #[test]
    fn inv_examples() {
        let row = Filling::row(&[4, 1, 3, 2]).unwrap();
        assert_eq!(inv_attacking(&row), 4);
        assert_eq!(inv_relative(&row), 4);
        assert_eq!(inv_relative(&Filling::row(&[2, 1]).unwrap()), 1);
        assert_eq!(inv_relative(&Filling::row(&[1, 2]).unwrap()), 0);
        assert_eq!(inv_attacking(&Filling::column(&[3, 1, 2]).unwrap()), 0);
        let f: Filling = "[[1,2],[2,1]]".parse().unwrap();
        assert_eq!(inv_relative(&f), 0);
        assert_eq!(inv_attacking(&f), 0);
    }

    #[test]
    fn cocharge_contributions_of_column() {
        let f = Filling::column(&[3, 2, 4, 1]).unwrap();
        let got: Vec<usize> = (1..=4).rev().map(|r| cocharge_contribution(&f, Cell::new(r, 1)).unwrap()).collect();
        assert_eq!(got, vec![2, 1, 1, 0]);
        assert!(cocharge_contribution(&f, Cell::new(1, 2)).is_err());
    }

    #[test]
    fn filling_counts() {
        let c = |v: &[usize]| Content(v.to_vec());
        assert_eq!(enumerate_fillings(&p(&[2, 1]), &c(&[1, 1, 1])).unwrap().count(), 6);
        assert_eq!(enumerate_fillings(&p(&[2]), &c(&[2])).unwrap().count(), 1);
        assert_eq!(enumerate_fillings(&p(&[2, 2]), &c(&[2, 2])).unwrap().count(), 6);
        assert!(enumerate_fillings(&p(&[2, 2]), &c(&[2])).is_err());
    }

    #[test]
    fn filling_text_roundtrip() {
        let f: Filling = "[[1,2,3],[2,1]]".parse().unwrap();
        assert_eq!(f.shape(), p(&[3, 2]));
        assert_eq!(f.to_string(), "[[1,2,3],[2,1]]");
        assert_eq!(f.reading_word(), vec![2, 1, 1, 2, 3]);
        assert!("[[1],[2,3]]".parse::<Filling>().is_err());
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[2, 2]), 6);
        assert_eq!(multinomial(&[1, 1, 1, 1]), 24);
        assert_eq!(multinomial(&[]), 1);
    }
}
