//! Carlitz codes, Yamanouchi words, and the sets `C(mu, A)` of codes that are
//! `mu`-sub-Yamanouchi and weakly increasing on the blocks of `A`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::shapes::{parse_list, Content, Letter, Partition};

/// A word over the nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Code(pub Vec<u32>);

impl Code {
    pub fn zeros(n: usize) -> Self {
        Code(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the letters.
    pub fn sum(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    pub fn reversed(&self) -> Code {
        Code(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Code {
    /// Concatenated digits when every letter is below 10, otherwise a
    /// comma-separated list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&c| c < 10) {
            for c in &self.0 {
                write!(f, "{c}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Code {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains(',') {
            return Ok(Code(parse_list(s)?));
        }
        s.chars()
            .map(|ch| ch.to_digit(10).ok_or_else(|| Error::Parse(format!("bad code digit {ch:?}"))))
            .collect::<Result<Vec<u32>>>()
            .map(Code)
    }
}

/// A multiset of positive letters, stored in weakly increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(Vec<Letter>);

impl Alphabet {
    pub fn new(mut letters: Vec<Letter>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Parse("alphabet letters must be positive".into()));
        }
        letters.sort_unstable();
        Ok(Alphabet(letters))
    }

    /// The alphabet `{1, ..., n}`.
    pub fn standard(n: usize) -> Self {
        Alphabet((1..=n as Letter).collect())
    }

    pub fn from_content(alpha: &Content) -> Self {
        Alphabet(alpha.letters())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn content(&self) -> Content {
        Content::of_letters(&self.0)
    }

    /// Sizes of the runs of equal letters, smallest letter first.
    pub fn blocks(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 && self.0[i - 1] == *a {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
            }
        }
        out
    }

    /// Replaces each letter `a` by `M + 1 - a`, where `M` is the largest letter.
    pub fn complement(&self) -> Alphabet {
        let m = self.0.last().copied().unwrap_or(0);
        let mut v: Vec<Letter> = self.0.iter().map(|&a| m + 1 - a).collect();
        v.sort_unstable();
        Alphabet(v)
    }

    pub fn is_distinct(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }
}

impl FromStr for Alphabet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Alphabet::new(parse_list(s.trim_matches(|c| c == '{' || c == '}'))?)
    }
}

/// `code[i] <= n - i` for every 1-based `i`.
pub fn is_carlitz(code: &Code) -> bool {
    let n = code.len();
    code.0.iter().enumerate().all(|(i, &c)| (c as usize) < n - i)
}

/// Every suffix contains at least as many `i`s as `i+1`s.
pub fn is_yamanouchi(word: &[u32]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &x in word.iter().rev() {
        let x = x as usize;
        if counts.len() <= x {
            counts.resize(x + 1, 0);
        }
        counts[x] += 1;
        if x > 0 && counts[x] > counts[x - 1] {
            return false;
        }
    }
    true
}

fn check_len(code: &Code, n: usize) -> Result<()> {
    if code.len() != n {
        return Err(Error::SizeMismatch { expected: n, found: code.len() });
    }
    Ok(())
}

/// Whether some Yamanouchi word of content `mu` dominates `code` letter by letter.
///
/// The witness is built from the right end; `counts[j]` is how many `j`s have
/// been placed so far. States proven infeasible are memoized.
pub fn is_sub_yamanouchi(code: &Code, mu: &Partition) -> Result<bool> {
    check_len(code, mu.size())?;
    fn rec(code: &[u32], mu: &[usize], counts: &mut Vec<usize>, dead: &mut HashSet<Vec<usize>>) -> bool {
        let placed: usize = counts.iter().sum();
        if placed == code.len() {
            return true;
        }
        if dead.contains(counts) {
            return false;
        }
        let need = code[code.len() - 1 - placed] as usize;
        for j in need..mu.len() {
            if counts[j] < mu[j] && (j == 0 || counts[j] < counts[j - 1]) {
                counts[j] += 1;
                let ok = rec(code, mu, counts, dead);
                counts[j] -= 1;
                if ok {
                    return true;
                }
            }
        }
        dead.insert(counts.clone());
        false
    }
    let mut counts = vec![0; mu.len()];
    Ok(rec(&code.0, mu.parts(), &mut counts, &mut HashSet::new()))
}

/// All Yamanouchi words of content `mu` (`mu_1` zeros, `mu_2` ones, ...).
pub fn yamanouchi_words(mu: &Partition) -> Vec<Vec<u32>> {
    fn rec(mu: &[usize], counts: &mut Vec<usize>, suffix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if suffix.len() == mu.iter().sum::<usize>() {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for j in 0..mu.len() {
            if counts[j] < mu[j] && (j == 0 || counts[j] < counts[j - 1]) {
                counts[j] += 1;
                suffix.push(j as u32);
                rec(mu, counts, suffix, out);
                suffix.pop();
                counts[j] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(mu.parts(), &mut vec![0; mu.len()], &mut Vec::new(), &mut out);
    out
}

/// Weakly increasing on each block of positions holding equal letters of `a`
/// (blocks taken smallest letter first).
pub fn is_a_weakly_increasing(code: &Code, a: &Alphabet) -> Result<bool> {
    check_len(code, a.len())?;
    Ok(weakly_increasing_on_blocks(&code.0, &a.blocks()))
}

pub(crate) fn weakly_increasing_on_blocks(code: &[u32], blocks: &[usize]) -> bool {
    let mut start = 0;
    for &b in blocks {
        if code[start..start + b].windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        start += b;
    }
    true
}

/// Membership in `C(mu, A)`.
pub fn in_code_set(code: &Code, mu: &Partition, a: &Alphabet) -> Result<bool> {
    if a.len() != mu.size() {
        return Err(Error::SizeMismatch { expected: mu.size(), found: a.len() });
    }
    Ok(is_a_weakly_increasing(code, a)? && is_sub_yamanouchi(code, mu)?)
}

/// `mu^{(i)}`: see [`Partition::corner_removal`].
pub fn corner_removal(mu: &Partition, i: usize) -> Result<Partition> {
    mu.corner_removal(i)
}

/// `C(mu, A)` generated by the first-letter recursion: the first letter
/// `i - 1` ranges over the rows of `mu`, and the rest is a code for
/// `mu^{(i)}` over `A` minus its first letter, whose first entry is at least
/// `i - 1` whenever the removed letter is repeated.
pub fn enumerate_codes(mu: &Partition, a: &Alphabet) -> Result<Vec<Code>> {
    if a.len() != mu.size() {
        return Err(Error::SizeMismatch { expected: mu.size(), found: a.len() });
    }
    fn rec(mu: &Partition, blocks: &[usize], min_first: u32, prefix: &mut Vec<u32>, out: &mut Vec<Code>) {
        if mu.is_empty() {
            out.push(Code(prefix.clone()));
            return;
        }
        let (next_blocks, next_min_applies): (Vec<usize>, bool) = if blocks[0] > 1 {
            let mut b = blocks.to_vec();
            b[0] -= 1;
            (b, true)
        } else {
            (blocks[1..].to_vec(), false)
        };
        for i in 1..=mu.len() {
            let c = (i - 1) as u32;
            if c < min_first {
                continue;
            }
            let sub = mu.corner_removal(i).expect("row in range");
            prefix.push(c);
            rec(&sub, &next_blocks, if next_min_applies { c } else { 0 }, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(mu, &a.blocks(), 0, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// `C(mu, A)` by filtering every bounded word: the oracle for [`enumerate_codes`].
pub fn enumerate_codes_brute(mu: &Partition, a: &Alphabet) -> Result<Vec<Code>> {
    let n = mu.size();
    if a.len() != n {
        return Err(Error::SizeMismatch { expected: n, found: a.len() });
    }
    let witnesses = yamanouchi_words(mu);
    let blocks = a.blocks();
    let bound = |i: usize| (mu.len().saturating_sub(1)).min(n - 1 - i) as u32;
    let mut out = Vec::new();
    let mut w = vec![0u32; n];
    loop {
        if weakly_increasing_on_blocks(&w, &blocks) && witnesses.iter().any(|v| w.iter().zip(v).all(|(c, v)| c <= v)) {
            out.push(Code(w.clone()));
        }
        // odometer step
        let mut i = n;
        loop {
            if i == 0 {
                out.sort();
                return Ok(out);
            }
            i -= 1;
            if w[i] < bound(i) {
                w[i] += 1;
                for x in w.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// All Carlitz codes of length `n`.
pub fn carlitz_codes(n: usize) -> Vec<Code> {
    let mut out = vec![Code(Vec::new())];
    for i in 0..n {
        let bound = (n - i) as u32;
        out = out
            .into_iter()
            .flat_map(|c| {
                (0..bound).map(move |x| {
                    let mut v = c.0.clone();
                    v.push(x);
                    Code(v)
                })
            })
            .collect();
    }
    out
}

/// Exponents of `x_1, ..., x_n` in `x^c = x_n^{c_1} x_{n-1}^{c_2} ... x_1^{c_n}`.
pub fn code_monomial(code: &Code) -> Vec<u32> {
    code.0.iter().rev().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn code(s: &str) -> Code {
        s.parse().unwrap()
    }

    #[test]
    fn carlitz_examples() {
        assert!(is_carlitz(&code("1210")));
        assert!(is_carlitz(&code("0000")));
        assert!(!is_carlitz(&code("0001")));
        assert_eq!(carlitz_codes(4).len(), 24);
    }

    #[test]
    fn yamanouchi_examples() {
        assert!(is_yamanouchi(&[1, 0, 1, 0]));
        assert!(!is_yamanouchi(&[0, 1]));
        assert!(is_yamanouchi(&code("430422130021100").0));
    }

    #[test]
    fn sub_yamanouchi_examples() {
        let witness_content = p(&[5, 3, 3, 2, 2]);
        assert!(is_sub_yamanouchi(&code("120412130010100"), &witness_content).unwrap());
        assert!(is_sub_yamanouchi(&Code::zeros(15), &witness_content).unwrap());
        assert!(is_sub_yamanouchi(&code("1210"), &p(&[1, 1, 1, 1])).unwrap());
        assert!(!is_sub_yamanouchi(&code("1201"), &p(&[1, 1, 1, 1])).unwrap());
        assert!(is_sub_yamanouchi(&code("12"), &p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn weakly_increasing_examples() {
        let a: Alphabet = "1,1,2,3,3,3,4,4".parse().unwrap();
        assert!(is_a_weakly_increasing(&code("23711213"), &a).unwrap());
        assert!(is_a_weakly_increasing(&code("3120"), &Alphabet::standard(4)).unwrap());
        let doubled: Alphabet = "2,2".parse().unwrap();
        assert!(!is_a_weakly_increasing(&code("10"), &doubled).unwrap());
    }

    #[test]
    fn code_counts() {
        assert_eq!(enumerate_codes(&p(&[1, 1, 1, 1]), &Alphabet::standard(4)).unwrap().len(), 24);
        assert_eq!(enumerate_codes(&p(&[3, 2]), &Alphabet::standard(5)).unwrap().len(), 10);
    }

    #[test]
    fn doubled_alphabet_codes_of_sum_four() {
        let a: Alphabet = "1,1,2,2,2,2".parse().unwrap();
        let got: Vec<String> =
            enumerate_codes(&p(&[1; 6]), &a).unwrap().into_iter().filter(|c| c.sum() == 4).map(|c| c.to_string()).collect();
        assert_eq!(got, vec!["040000", "130000", "220000"]);
    }

    #[test]
    fn monomials() {
        assert_eq!(code_monomial(&code("10")), vec![0, 1]);
        assert_eq!(code_monomial(&code("000")), vec![0, 0, 0]);
        assert_eq!(code_monomial(&code("210")), vec![0, 1, 2]);
    }

    #[test]
    fn complement_alphabet() {
        let a: Alphabet = "1,1,1,1,2,2".parse().unwrap();
        assert_eq!(a.complement(), "1,1,2,2,2,2".parse().unwrap());
        assert_eq!(a.blocks(), vec![4, 2]);
    }
}
