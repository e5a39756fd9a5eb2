#![allow(dead_code)]

use proptest::prelude::*;
use qtsym::shapes::{Filling, Letter, Partition};

/// A random partition of size `1..=max_n` with at most `max_rows` rows.
pub fn partition(max_n: usize, max_rows: usize) -> impl Strategy<Value = Partition> {
    (1..=max_n).prop_flat_map(move |n| {
        let shapes: Vec<Partition> = Partition::all(n).into_iter().filter(|p| p.len() <= max_rows).collect();
        proptest::sample::select(shapes)
    })
}

fn cut(mu: &Partition, letters: Vec<Letter>) -> Filling {
    let mut it = letters.into_iter();
    let rows = mu.parts().iter().map(|&len| it.by_ref().take(len).collect()).collect();
    Filling::new(rows).expect("rows follow the partition")
}

/// A random filling of a shape from [`partition`] by letters in `1..=k`.
pub fn filling(max_n: usize, max_rows: usize, k: Letter) -> impl Strategy<Value = Filling> {
    partition(max_n, max_rows).prop_flat_map(move |mu| {
        let n = mu.size();
        (Just(mu), proptest::collection::vec(1..=k, n)).prop_map(|(mu, letters)| cut(&mu, letters))
    })
}

/// A random filling with entries `1..=n` each used once.
pub fn distinct_filling(max_n: usize, max_rows: usize) -> impl Strategy<Value = Filling> {
    partition(max_n, max_rows).prop_flat_map(|mu| {
        let letters: Vec<Letter> = (1..=mu.size() as Letter).collect();
        (Just(mu), Just(letters).prop_shuffle()).prop_map(|(mu, letters)| cut(&mu, letters))
    })
}

/// A random word of length `1..=max_len` over `1..=k`.
pub fn word(max_len: usize, k: Letter) -> impl Strategy<Value = Vec<Letter>> {
    proptest::collection::vec(1..=k, 1..=max_len)
}

/// A random word whose content is a partition: a shuffle of
/// `1^(l_1) 2^(l_2) ...` for a random partition `l`.
pub fn partition_content_word(max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    partition(max_len, usize::MAX).prop_flat_map(|lambda| {
        let letters: Vec<Letter> = lambda.parts().iter().enumerate().flat_map(|(i, &m)| std::iter::repeat_n(i as Letter + 1, m)).collect();
        Just(letters).prop_shuffle()
    })
}
