//! Hook codes and the involution on hook-shaped fillings that swaps `inv`
//! and `maj` while complementing the alphabet.
//!
//! The cells of a hook `(l, 1^(h-1))` are ordered by letter. Among equal
//! letters, column cells come before row cells, column cells are ordered by
//! column standardization, row cells left to right, and the corner counts as
//! the largest of its letter in the column and the smallest in the row.

use std::fmt;

use crate::codes::{is_carlitz, Alphabet, Code};
use crate::error::{Error, Result};
use crate::shapes::{Cell, Filling, Letter, Partition};
use crate::word_codes::{invcode_word, invcode_word_inverse, majcode_column_word, majcode_column_word_inverse, standardize_column_word};

/// The code value attached to one position of the ordered alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HookSlot {
    /// A bottom-row cell other than the corner, with its inversion-code value.
    Row(u32),
    /// A column cell other than the corner, with its major-index-code value.
    Column(u32),
    /// The corner, where both codes are zero.
    Corner,
}

/// The inversion code of the bottom row and the reversed major-index code of
/// the first column, merged along the ordered alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HookCodePair {
    pub slots: Vec<HookSlot>,
}

impl HookCodePair {
    /// Values on row positions (corner included), in order.
    pub fn x(&self) -> Vec<u32> {
        self.slots
            .iter()
            .filter_map(|s| match s {
                HookSlot::Row(v) => Some(*v),
                HookSlot::Corner => Some(0),
                HookSlot::Column(_) => None,
            })
            .collect()
    }

    /// Values on column positions (corner included), in order.
    pub fn y(&self) -> Vec<u32> {
        self.slots
            .iter()
            .filter_map(|s| match s {
                HookSlot::Column(v) => Some(*v),
                HookSlot::Corner => Some(0),
                HookSlot::Row(_) => None,
            })
            .collect()
    }

    fn letters_where(&self, a: &Alphabet, row: bool) -> Vec<Letter> {
        self.slots
            .iter()
            .zip(a.letters())
            .filter(|(s, _)| matches!((s, row), (HookSlot::Corner, _) | (HookSlot::Row(_), true) | (HookSlot::Column(_), false)))
            .map(|(_, &l)| l)
            .collect()
    }

    /// The pair of the image under the involution: positions reversed and
    /// row and column swapped.
    pub fn swapped(&self) -> HookCodePair {
        HookCodePair {
            slots: self
                .slots
                .iter()
                .rev()
                .map(|s| match *s {
                    HookSlot::Row(v) => HookSlot::Column(v),
                    HookSlot::Column(v) => HookSlot::Row(v),
                    HookSlot::Corner => HookSlot::Corner,
                })
                .collect(),
        }
    }
}

impl fmt::Display for HookCodePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.slots.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match s {
                HookSlot::Row(v) => write!(f, "R{v}")?,
                HookSlot::Column(v) => write!(f, "C{v}")?,
                HookSlot::Corner => write!(f, "*0")?,
            }
        }
        Ok(())
    }
}

fn hook_dims(shape: &Partition) -> Result<(usize, usize)> {
    if !shape.is_hook() {
        return Err(Error::NotHook);
    }
    Ok((shape.row_len(1), shape.len()))
}

/// The hook code pair of a hook-shaped filling.
pub fn hook_codes(f: &Filling) -> Result<HookCodePair> {
    let (l, h) = hook_dims(&f.shape())?;
    let row: Vec<Letter> = f.rows()[0].clone();
    let col = f.column_word(1); // top to bottom, corner last
    let col_labels = standardize_column_word(&col);

    // (letter, class, rank): class 0 column, 1 corner, 2 row
    let mut cells: Vec<(Letter, u8, u32, Cell)> = Vec::with_capacity(l + h - 1);
    for (k, &a) in col.iter().enumerate().take(h - 1) {
        cells.push((a, 0, col_labels[k], Cell::new(h - k, 1)));
    }
    cells.push((row[0], 1, 0, Cell::new(1, 1)));
    for (c, &a) in row.iter().enumerate().skip(1) {
        cells.push((a, 2, c as u32, Cell::new(1, c + 1)));
    }
    cells.sort_by_key(|&(a, class, rank, _)| (a, class, rank));

    let x = invcode_word(&row); // indexed by row letters in (letter, column) order
    let y = majcode_column_word(&col); // entry j belongs to column label h - j
    let mut row_seen = 0;
    let slots = cells
        .iter()
        .map(|&(_, class, _, cell)| match class {
            1 => {
                row_seen += 1;
                HookSlot::Corner
            }
            2 => {
                let v = x.0[row_seen];
                row_seen += 1;
                HookSlot::Row(v)
            }
            _ => {
                let label = col_labels[h - cell.row] as usize;
                HookSlot::Column(y.0[h - label])
            }
        })
        .collect();
    Ok(HookCodePair { slots })
}

/// Checks the four conditions characterizing hook code pairs of `shape` over
/// `a`, returning the number of the first one violated.
pub fn validate_hook_pair(p: &HookCodePair, a: &Alphabet, shape: &Partition) -> Result<()> {
    let (l, h) = hook_dims(shape)?;
    if p.slots.len() != a.len() || a.len() != shape.size() {
        return Err(Error::SizeMismatch { expected: shape.size(), found: p.slots.len() });
    }
    // 2: one shared corner, every position covered once, sizes match the hook
    let corners = p.slots.iter().filter(|s| matches!(s, HookSlot::Corner)).count();
    let x = p.x();
    let y = p.y();
    if corners != 1 || x.len() != l || y.len() != h {
        return Err(Error::HookCondition(2));
    }
    // 1: the first zero of the row code and the last zero of the column code
    // sit at the corner
    let corner = p.slots.iter().position(|s| matches!(s, HookSlot::Corner)).expect("one corner");
    let early_row_zero = p.slots[..corner].iter().any(|s| matches!(s, HookSlot::Row(0)));
    let late_col_zero = p.slots[corner + 1..].iter().any(|s| matches!(s, HookSlot::Column(0)));
    if early_row_zero || late_col_zero {
        return Err(Error::HookCondition(1));
    }
    // 3: row code Carlitz and weakly increasing on the row letters
    let row_alpha = Alphabet::new(p.letters_where(a, true))?;
    if !is_carlitz(&Code(x.clone())) || !crate::codes::weakly_increasing_on_blocks(&x, &row_alpha.blocks()) {
        return Err(Error::HookCondition(3));
    }
    // 4: column code read backwards, likewise, on blocks largest letter first
    let col_alpha = Alphabet::new(p.letters_where(a, false))?;
    let back: Vec<u32> = y.iter().rev().copied().collect();
    let mut blocks = col_alpha.blocks();
    blocks.reverse();
    if !is_carlitz(&Code(back.clone())) || !crate::codes::weakly_increasing_on_blocks(&back, &blocks) {
        return Err(Error::HookCondition(4));
    }
    Ok(())
}

/// Rebuilds the hook filling of `shape` over `a` from its code pair.
pub fn hook_codes_inverse(p: &HookCodePair, a: &Alphabet, shape: &Partition) -> Result<Filling> {
    validate_hook_pair(p, a, shape)?;
    let row_alpha = Alphabet::new(p.letters_where(a, true))?;
    let col_alpha = Alphabet::new(p.letters_where(a, false))?;
    let row = invcode_word_inverse(&Code(p.x()), &row_alpha)?;
    let col = majcode_column_word_inverse(&Code(p.y()).reversed(), &col_alpha)?;
    if col.last() != row.first() {
        return Err(Error::HookCondition(1));
    }
    let mut rows = vec![row];
    rows.extend(col.iter().rev().skip(1).map(|&c| vec![c]));
    let f = Filling::new(rows)?;
    if &hook_codes(&f)? != p {
        return Err(Error::NotInImage(format!("hook code pair {p}")));
    }
    Ok(f)
}

/// The involution: swap the two codes, reverse them, and complement the
/// alphabet. The result lives on the conjugate hook.
pub fn hook_phi(f: &Filling) -> Result<Filling> {
    let p = hook_codes(f)?;
    let a = Alphabet::new(f.letters())?;
    hook_codes_inverse(&p.swapped(), &a.complement(), &f.shape().conjugate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{inv, maj};

    #[test]
    fn single_row_and_column() {
        let row = Filling::row(&[4, 1, 3, 2]).unwrap();
        let p = hook_codes(&row).unwrap();
        assert_eq!(p.x(), invcode_word(&[4, 1, 3, 2]).0);
        let col = Filling::column(&[3, 2, 4, 1]).unwrap();
        let q = hook_codes(&col).unwrap();
        assert_eq!(q.y().iter().rev().copied().collect::<Vec<_>>(), majcode_column_word(&[3, 2, 4, 1]).0);
        let img = hook_phi(&row).unwrap();
        assert_eq!(img.shape(), Partition::new(vec![1, 1, 1, 1]).unwrap());
        assert_eq!(maj(&img), inv(&row));
        assert_eq!(hook_phi(&img).unwrap(), row);
    }

    #[test]
    fn trivial_pair_gives_sorted_row() {
        let shape = Partition::new(vec![3]).unwrap();
        let p = HookCodePair { slots: vec![HookSlot::Corner, HookSlot::Row(0), HookSlot::Row(0)] };
        let f = hook_codes_inverse(&p, &Alphabet::standard(3), &shape).unwrap();
        assert_eq!(f.rows(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn misaligned_zero_is_condition_one() {
        let shape = Partition::new(vec![2, 1]).unwrap();
        let p = HookCodePair { slots: vec![HookSlot::Row(0), HookSlot::Corner, HookSlot::Column(0)] };
        assert_eq!(hook_codes_inverse(&p, &Alphabet::standard(3), &shape), Err(Error::HookCondition(1)));
    }
}
