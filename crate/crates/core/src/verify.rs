//! Exhaustive checks of the identities and bijections at small sizes.
//!
//! Each suite enumerates its cases, checks them in parallel, and collects the
//! outcome in a [`Report`] whose contents do not depend on scheduling.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::cocharge::{
    cocharge, cocharge_by_cyclage, cocharge_word, cyclage, first_letter_reduction, knuth_neighbors, subword_decomposition,
};
use crate::codes::{carlitz_codes, enumerate_codes, enumerate_codes_brute, in_code_set, is_carlitz, Alphabet, Code};
use crate::genfun::{
    hall_littlewood_coefficient, macdonald_coefficient, q_factorial, q_multinomial, row_inversion_distribution, QPolynomial, QTPolynomial,
};
use crate::hl::{
    crossing_number, enumerate_inv_zero_fillings, enumerate_maj_zero_fillings, hl_symmetry_map, hl_symmetry_map_inverse, invcode_filling,
    invcode_filling_inverse, majcode_filling, majcode_filling_inverse, pull_up, pull_up_by_search, rect_psi, rect_psi_inverse, zero_bump,
    zero_bump_inverse,
};
use crate::hook::{hook_codes, hook_codes_inverse, hook_phi};
use crate::shapes::{
    compositions, enumerate_fillings, for_each_filling, inv, inv_attacking, inv_relative, maj, multinomial, weak_compositions, Content,
    Filling, Letter, MultisetPermutations, Partition,
};
use crate::t1::{t1_map, t1_map_inverse};
use crate::word_codes::{carlitz_bijection, invcode_word, majcode_column_word};

/// How many failure messages a report keeps.
pub const MAX_SAMPLES: usize = 20;

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    /// Individual objects checked.
    pub cases: usize,
    /// Objects that failed at least one check.
    pub failed: usize,
    /// The first few failure messages, in case order.
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {} cases, {} failures", self.suite, self.cases, self.failed)?;
        for msg in &self.failures {
            write!(f, "\n  {msg}")?;
        }
        Ok(())
    }
}

/// Checks accumulated for one unit of work.
#[derive(Default)]
struct Tally {
    cases: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    /// Records one checked object.
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(msg());
        }
    }

    /// Records a failure on an object already counted.
    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < MAX_SAMPLES {
            self.failures.push(msg);
        }
    }
}

/// Runs `unit` on every item in parallel and merges the tallies in item order.
fn run<T: Sync>(suite: &str, items: &[T], unit: impl Fn(&T, &mut Tally) + Sync) -> Report {
    let tallies: Vec<Tally> = items
        .par_iter()
        .map(|item| {
            let mut t = Tally::default();
            unit(item, &mut t);
            t
        })
        .collect();
    let mut report = Report { suite: suite.to_string(), cases: 0, failed: 0, failures: Vec::new() };
    for t in tallies {
        report.cases += t.cases;
        report.failed += t.failed;
        let room = MAX_SAMPLES - report.failures.len().min(MAX_SAMPLES);
        report.failures.extend(t.failures.into_iter().take(room));
    }
    report
}

fn shapes(max_n: usize, max_rows: usize) -> Vec<Partition> {
    (1..=max_n).flat_map(Partition::all).filter(|p| p.len() <= max_rows).collect()
}

/// Contents with every part positive and at most `letters` parts. Every
/// alphabet with at most that many distinct letters matches one of these up
/// to an order-preserving relabelling, which no statistic or map here sees.
fn alphabets(n: usize, letters: usize) -> Vec<Content> {
    compositions(n).into_iter().filter(|c| c.len() <= letters).map(Content).collect()
}

fn hl_alphabets(n: usize, letters: usize) -> Vec<Content> {
    let mut out = alphabets(n, letters);
    if n > letters {
        out.push(Content(vec![1; n]));
    }
    out
}

/// `coefficient(mu)(q, t) == coefficient(mu*)(t, q)` for every `mu` of size
/// at most `max_n` and every content over `n` letters.
pub fn symmetry(max_n: usize) -> Report {
    let units: Vec<Content> = (1..=max_n).flat_map(|n| weak_compositions(n, n)).map(Content).collect();
    run("symmetry", &units, |alpha, t| {
        let n = alpha.size();
        let polys: HashMap<Partition, QTPolynomial> =
            Partition::all(n).into_iter().map(|mu| (mu.clone(), macdonald_coefficient(&mu, alpha).expect("sizes agree"))).collect();
        for mu in Partition::all(n) {
            let lhs = &polys[&mu];
            let rhs = polys[&mu.conjugate()].swap_qt();
            t.check(*lhs == rhs, || format!("mu={mu} alpha={:?}: {lhs} vs {rhs}", alpha.0));
        }
    })
}

/// The attacking-pair and relative-inversion definitions of `inv` agree on
/// every filling of size at most `max_n` over `letters` letters.
pub fn statistics(max_n: usize, letters: usize) -> Report {
    let units: Vec<(Partition, Content)> = shapes(max_n, usize::MAX)
        .into_iter()
        .flat_map(|mu| weak_compositions(mu.size(), letters).into_iter().map(move |c| (mu.clone(), Content(c))))
        .collect();
    run("statistics", &units, |(mu, alpha), t| {
        for_each_filling(mu, alpha, |f| {
            let (a, r) = (inv_attacking(f), inv_relative(f));
            t.check(a == r as i64 && a >= 0, || format!("{f}: attacking {a}, relative {r}"));
        })
        .expect("sizes agree");
    })
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `n!` Carlitz codes of length `n`, and `|C(mu, [n])|` equal to the
/// multinomial coefficient, for `n <= max_n`.
pub fn codes(max_n: usize) -> Report {
    let mut units: Vec<(usize, Option<Partition>)> = (1..=max_n).map(|n| (n, None)).collect();
    units.extend(shapes(max_n, usize::MAX).into_iter().map(|mu| (mu.size(), Some(mu))));
    run("codes", &units, |(n, mu), t| match mu {
        None => {
            let all = carlitz_codes(*n);
            let distinct: HashSet<&Code> = all.iter().collect();
            let ok = all.len() as u128 == factorial(*n) && distinct.len() == all.len() && all.iter().all(is_carlitz);
            t.check(ok, || format!("n={n}: {} Carlitz codes", all.len()));
        }
        Some(mu) => {
            let got = enumerate_codes(mu, &Alphabet::standard(*n)).expect("sizes agree").len() as u128;
            let want = multinomial(mu.parts());
            t.check(got == want, || format!("mu={mu}: |C| = {got}, multinomial {want}"));
        }
    })
}

fn word(s: &str) -> Vec<Letter> {
    s.chars().map(|c| c.to_digit(10).expect("digit") as Letter).collect()
}

fn code(s: &str) -> Code {
    s.parse().expect("code literal")
}

/// The worked examples, each compared digit for digit.
pub fn examples() -> Report {
    type Example = (&'static str, fn() -> Result<(), String>);
    fn eq<T: PartialEq + fmt::Debug>(got: T, want: T) -> Result<(), String> {
        if got == want {
            Ok(())
        } else {
            Err(format!("got {got:?}, expected {want:?}"))
        }
    }
    let cases: Vec<Example> = vec![
        ("invcode 4132", || eq(invcode_word(&word("4132")), code("1210"))),
        ("majcode 3241", || eq(majcode_column_word(&word("3241")), code("1210"))),
        ("carlitz 4132", || eq(carlitz_bijection(&word("4132")).map_err(|e| e.to_string())?, word("3241"))),
        ("majcode column 6434666251664", || {
            eq(majcode_column_word(&word("6434666251664")), Code(vec![1, 3, 3, 3, 5, 7, 1, 0, 2, 3, 2, 1, 0]))
        }),
        ("column codes over {2,2,1,1,1,1} summing to 4", || {
            let column = Partition::new(vec![1; 6]).expect("shape");
            let a = Alphabet::new(vec![2, 2, 1, 1, 1, 1]).expect("alphabet");
            let got: BTreeSet<Code> =
                enumerate_codes(&column, &a.complement()).map_err(|e| e.to_string())?.into_iter().filter(|c| c.sum() == 4).collect();
            eq(got, [code("040000"), code("130000"), code("220000")].into_iter().collect())
        }),
        ("crossing number 10110010", || {
            let w: Vec<bool> = "10110010".chars().map(|c| c == '1').collect();
            let zeros: Vec<usize> = (0..w.len()).filter(|&i| !w[i]).collect();
            eq(crossing_number(&w, &zeros).map_err(|e| e.to_string())?, 2)
        }),
        ("cocharge 15221432313", || eq(cocharge(&word("15221432313")).map_err(|e| e.to_string())?, 12)),
        ("cocharge 5121432213", || eq(cocharge(&word("5121432213")).map_err(|e| e.to_string())?, 12)),
        ("subwords of 15221432313", || {
            let subs = subword_decomposition(&word("15221432313")).map_err(|e| e.to_string())?;
            let one_based: Vec<Vec<usize>> = subs.iter().map(|s| s.iter().map(|p| p + 1).collect()).collect();
            eq(one_based, vec![vec![10, 8, 7, 6, 2], vec![5, 4, 11], vec![1, 3, 9]])
        }),
    ];
    run("examples", &cases, |(name, check), t| {
        let outcome = check();
        t.check(outcome.is_ok(), || format!("{name}: {}", outcome.unwrap_err()));
    })
}

fn t_polynomial(values: impl IntoIterator<Item = usize>) -> QPolynomial {
    let mut p = QPolynomial::zero();
    for v in values {
        p.add_term(v as u32, 1);
    }
    p
}

/// For every shape with at most three rows and size at most `max_n`, and
/// every alphabet of at most `letters` letters (plus distinct letters):
/// `majcode_filling` and `invcode_filling` are statistic-preserving
/// bijections onto `C(mu, A)`, `hl_symmetry_map` swaps the statistics, and
/// the generating polynomials equal the Hall-Littlewood coefficient.
pub fn hl_bijection(max_n: usize, letters: usize) -> Report {
    let units: Vec<(Partition, Content)> =
        shapes(max_n, 3).into_iter().flat_map(|mu| hl_alphabets(mu.size(), letters).into_iter().map(move |c| (mu.clone(), c))).collect();
    run("hl-bijection", &units, |(mu, alpha), t| hl_unit(mu, alpha, t))
}

fn hl_unit(mu: &Partition, alpha: &Content, t: &mut Tally) {
    let a = Alphabet::from_content(alpha);
    let rev = a.complement();
    let conj = mu.conjugate();
    let tag = format!("mu={mu} alpha={:?}", alpha.0);
    let code_set: BTreeSet<Code> = enumerate_codes(mu, &rev).expect("sizes agree").into_iter().collect();

    let inv_zero = enumerate_inv_zero_fillings(mu, alpha).expect("sizes agree");
    let mut image = BTreeSet::new();
    for f in &inv_zero {
        let outcome = (|| -> Result<(), String> {
            let c = majcode_filling(f).map_err(|e| e.to_string())?;
            if c.sum() != maj(f) {
                return Err(format!("code {c} sums to {}, maj {}", c.sum(), maj(f)));
            }
            if !code_set.contains(&c) {
                return Err(format!("code {c} outside C({mu}, A)"));
            }
            if !image.insert(c.clone()) {
                return Err(format!("code {c} repeated"));
            }
            let back = majcode_filling_inverse(&c, mu, &a).map_err(|e| e.to_string())?;
            if &back != f {
                return Err(format!("inverse of {c} gives {back}"));
            }
            let g = hl_symmetry_map(f).map_err(|e| e.to_string())?;
            if g.shape() != conj || maj(&g) != 0 || inv(&g) != maj(f) || g.content() != rev.content() {
                return Err(format!("symmetry map gives {g}"));
            }
            let h = hl_symmetry_map_inverse(&g).map_err(|e| e.to_string())?;
            if &h != f {
                return Err(format!("symmetry map inverse gives {h}"));
            }
            Ok(())
        })();
        t.check(outcome.is_ok(), || format!("{tag} majcode {f}: {}", outcome.unwrap_err()));
    }
    t.check(image.len() == code_set.len(), || format!("{tag}: majcode hits {} of {} codes", image.len(), code_set.len()));

    let maj_zero = enumerate_maj_zero_fillings(&conj, &rev.content()).expect("sizes agree");
    let mut image = BTreeSet::new();
    for g in &maj_zero {
        let outcome = (|| -> Result<(), String> {
            let c = invcode_filling(g).map_err(|e| e.to_string())?;
            if c.sum() != inv(g) {
                return Err(format!("code {c} sums to {}, inv {}", c.sum(), inv(g)));
            }
            if !code_set.contains(&c) || !image.insert(c.clone()) {
                return Err(format!("code {c} outside C({mu}, A) or repeated"));
            }
            let back = invcode_filling_inverse(&c, mu, &rev).map_err(|e| e.to_string())?;
            if &back != g {
                return Err(format!("inverse of {c} gives {back}"));
            }
            Ok(())
        })();
        t.check(outcome.is_ok(), || format!("{tag} invcode {g}: {}", outcome.unwrap_err()));
    }
    t.check(image.len() == code_set.len(), || format!("{tag}: invcode hits {} of {} codes", image.len(), code_set.len()));

    let hl = hall_littlewood_coefficient(mu, alpha).expect("sizes agree");
    let from_fillings = t_polynomial(inv_zero.iter().map(maj));
    let from_codes = t_polynomial(code_set.iter().map(Code::sum));
    let from_conjugate = t_polynomial(maj_zero.iter().map(inv));
    t.check(hl == from_fillings && hl == from_codes && hl == from_conjugate, || {
        format!("{tag}: coefficient {hl}, fillings {from_fillings}, codes {from_codes}, conjugate side {from_conjugate}")
    });
}

/// The hook involution on every hook filling of size at most `max_n` over at
/// most `letters` letters.
pub fn hook(max_n: usize, letters: usize) -> Report {
    let units: Vec<(Partition, Content)> = shapes(max_n, usize::MAX)
        .into_iter()
        .filter(Partition::is_hook)
        .flat_map(|mu| alphabets(mu.size(), letters).into_iter().map(move |c| (mu.clone(), c)))
        .collect();
    run("hook", &units, |(mu, alpha), t| {
        let a = Alphabet::from_content(alpha);
        for f in enumerate_fillings(mu, alpha).expect("sizes agree") {
            let outcome = (|| -> Result<(), String> {
                let p = hook_codes(&f).map_err(|e| e.to_string())?;
                let back = hook_codes_inverse(&p, &a, mu).map_err(|e| e.to_string())?;
                if back != f {
                    return Err(format!("codes {p} rebuild {back}"));
                }
                let g = hook_phi(&f).map_err(|e| e.to_string())?;
                if g.shape() != mu.conjugate() || inv(&g) != maj(&f) || maj(&g) != inv(&f) || g.content() != alpha.reverse() {
                    return Err(format!("image {g} has (inv, maj) = ({}, {})", inv(&g), maj(&g)));
                }
                let h = hook_phi(&g).map_err(|e| e.to_string())?;
                if h != f {
                    return Err(format!("applied twice gives {h}"));
                }
                Ok(())
            })();
            t.check(outcome.is_ok(), || format!("{f}: {}", outcome.unwrap_err()));
        }
    })
}

/// The `t = 1` map on distinct-entry fillings of size at most `max_n`, and
/// the row distributions over every base row and letter multiset of length
/// at most `max_n` (letters from `1..=4`).
pub fn t1(max_n: usize) -> Report {
    enum Unit {
        Shape(Partition),
        Row(Vec<Letter>),
    }
    let mut units: Vec<Unit> = shapes(max_n, usize::MAX).into_iter().map(Unit::Shape).collect();
    for len in 1..=max_n {
        units.extend(MultisetWords::new(len, 4).map(Unit::Row));
    }
    run("t1", &units, |unit, t| match unit {
        Unit::Shape(mu) => {
            let n = mu.size();
            let mut images = HashSet::new();
            for f in enumerate_fillings(mu, &Content(vec![1; n])).expect("sizes agree") {
                let outcome = (|| -> Result<(), String> {
                    let g = t1_map(&f).map_err(|e| e.to_string())?;
                    if g.shape() != mu.conjugate() || !g.is_distinct() || inv(&g) != maj(&f) {
                        return Err(format!("image {g} with inv {}", inv(&g)));
                    }
                    let back = t1_map_inverse(&g).map_err(|e| e.to_string())?;
                    if back != f {
                        return Err(format!("inverse gives {back}"));
                    }
                    if !images.insert(g.clone()) {
                        return Err(format!("image {g} repeated"));
                    }
                    Ok(())
                })();
                t.check(outcome.is_ok(), || format!("{f}: {}", outcome.unwrap_err()));
            }
        }
        Unit::Row(base) => {
            for size in 1..=base.len() {
                let distinct: Vec<Letter> = (1..=size as Letter).collect();
                let p = row_inversion_distribution(base, &distinct).expect("row fits its base");
                t.check(p == q_factorial(size), || format!("base {base:?} distinct letters {distinct:?}: {p}"));
                for comp in weak_compositions(size, 4) {
                    let letters = Content(comp.clone()).letters();
                    let p = row_inversion_distribution(base, &letters).expect("row fits its base");
                    let want = q_multinomial(size, &comp).expect("parts sum to size");
                    t.check(p == want, || format!("base {base:?} letters {letters:?}: {p} vs {want}"));
                }
            }
        }
    })
}

/// Every word of length `len` over `1..=k`.
struct MultisetWords {
    current: Option<Vec<Letter>>,
    k: Letter,
}

impl MultisetWords {
    fn new(len: usize, k: Letter) -> Self {
        MultisetWords { current: Some(vec![1; len]), k }
    }
}

impl Iterator for MultisetWords {
    type Item = Vec<Letter>;

    fn next(&mut self) -> Option<Vec<Letter>> {
        let out = self.current.take()?;
        let mut w = out.clone();
        for i in (0..w.len()).rev() {
            if w[i] < self.k {
                w[i] += 1;
                self.current = Some(w);
                break;
            }
            w[i] = 1;
        }
        Some(out)
    }
}

/// The zero bump on every eligible filling of size at most `max_n`, the
/// pull-up rule against its search oracle on letter multisets over `1..=4`
/// with at most `rect_cols` bottom letters, and the rectangle step on
/// distinct fillings of rectangles with at most `rect_rows` rows and
/// `rect_cols` columns.
pub fn zero_bump_suite(max_n: usize, rect_rows: usize, rect_cols: usize) -> Report {
    enum Unit {
        Bump(Partition, Content),
        PullUp(Vec<Letter>, Vec<Letter>),
        Rect(Partition),
    }
    let mut units: Vec<Unit> = shapes(max_n, usize::MAX)
        .into_iter()
        .flat_map(|mu| alphabets(mu.size(), usize::MAX).into_iter().map(move |c| Unit::Bump(mu.clone(), c)))
        .collect();
    for w in 1..=rect_cols {
        for bottom in sorted_words(w, 4) {
            units.extend(sorted_words(w - 1, 4).into_iter().map(|top| Unit::PullUp(bottom.clone(), top)));
        }
    }
    for h in 1..=rect_rows {
        for w in 1..=rect_cols {
            units.push(Unit::Rect(Partition::new(vec![w; h]).expect("rectangle")));
        }
    }
    run("zero-bump", &units, |unit, t| match unit {
        Unit::Bump(mu, alpha) => {
            let n = alpha.0.len() as Letter;
            for f in enumerate_inv_zero_fillings(mu, alpha).expect("sizes agree") {
                if !f.rows()[0].contains(&n) {
                    continue;
                }
                let outcome = (|| -> Result<(), String> {
                    let g = zero_bump(&f).map_err(|e| e.to_string())?;
                    if maj(&g) != maj(&f) || inv(&g) != 0 || Ok(g.shape()) != mu.corner_removal(1) {
                        return Err(format!("image {g} with maj {}", maj(&g)));
                    }
                    let back = zero_bump_inverse(&g, mu, n).map_err(|e| e.to_string())?;
                    if back != f {
                        return Err(format!("inverse gives {back}"));
                    }
                    Ok(())
                })();
                t.check(outcome.is_ok(), || format!("{f}: {}", outcome.unwrap_err()));
            }
        }
        Unit::PullUp(bottom, top) => {
            let fast = pull_up(bottom, top).ok();
            let slow = pull_up_by_search(bottom, top);
            t.check(fast.is_some() && fast == slow, || format!("pull-up of {bottom:?} under {top:?}: {fast:?} vs search {slow:?}"));
        }
        Unit::Rect(mu) => {
            let n = mu.size();
            let h = mu.len();
            let mut fibers: BTreeMap<Filling, Vec<usize>> = BTreeMap::new();
            for f in enumerate_inv_zero_fillings(mu, &Content(vec![1; n])).expect("sizes agree") {
                let outcome = (|| -> Result<(), String> {
                    let (g, d) = rect_psi(&f).map_err(|e| e.to_string())?;
                    if d >= h || inv(&g) != 0 || maj(&g) + d != maj(&f) {
                        return Err(format!("image {g} with drop {d}"));
                    }
                    let back = rect_psi_inverse(&g, d, mu, n as Letter).map_err(|e| e.to_string())?;
                    if back != f {
                        return Err(format!("inverse gives {back}"));
                    }
                    fibers.entry(g).or_default().push(d);
                    Ok(())
                })();
                t.check(outcome.is_ok(), || format!("{f}: {}", outcome.unwrap_err()));
            }
            let smaller = mu.corner_removal(1).expect("nonempty");
            let targets = enumerate_inv_zero_fillings(&smaller, &Content(vec![1; n - 1])).expect("sizes agree").len();
            t.check(fibers.len() == targets, || format!("rectangle {mu}: {} fibers, {targets} targets", fibers.len()));
            for (g, mut ds) in fibers {
                ds.sort_unstable();
                t.check(ds == (0..h).collect::<Vec<_>>(), || format!("rectangle {mu}: fiber of {g} has drops {ds:?}"));
            }
        }
    })
}

/// Weakly increasing words of length `len` over `1..=k`.
fn sorted_words(len: usize, k: Letter) -> Vec<Vec<Letter>> {
    MultisetWords::new(len, k).filter(|w| w.windows(2).all(|p| p[0] <= p[1])).collect()
}

/// Every word with partition content `lambda`, for each `lambda` of size `n`.
fn partition_content_words(n: usize) -> Vec<Vec<Letter>> {
    Partition::all(n).into_iter().flat_map(|lambda| MultisetPermutations::new(Content(lambda.parts().to_vec()).letters())).collect()
}

/// Cocharge: `maj = cc(cocharge word)` on `inv = 0` fillings of size at most
/// `max_fillings`; first-letter reduction and cyclage on words of length at
/// most `max_words`; constancy on Knuth classes and agreement with the
/// cyclage characterization for length at most `max_knuth`.
pub fn cocharge_suite(max_fillings: usize, max_words: usize, max_knuth: usize) -> Report {
    enum Unit {
        Fillings(Partition, Content),
        Words(usize),
    }
    let mut units: Vec<Unit> = shapes(max_fillings, usize::MAX)
        .into_iter()
        .flat_map(|mu| alphabets(mu.size(), usize::MAX).into_iter().map(move |c| Unit::Fillings(mu.clone(), c)))
        .collect();
    units.extend((1..=max_words).map(Unit::Words));
    run("cocharge", &units, |unit, t| match unit {
        Unit::Fillings(mu, alpha) => {
            for f in enumerate_inv_zero_fillings(mu, alpha).expect("sizes agree") {
                let w = cocharge_word(&f);
                let cc = cocharge(&w);
                t.check(cc == Ok(maj(&f)), || format!("{f}: word {w:?} has cocharge {cc:?}, maj {}", maj(&f)));
            }
        }
        Unit::Words(len) => {
            let mut memo = HashMap::new();
            for w in partition_content_words(*len) {
                let cc = cocharge(&w).expect("partition content");
                if w[0] == 1 {
                    let r = first_letter_reduction(&w).expect("starts with 1");
                    let rc = cocharge(&r);
                    t.check(rc == Ok(cc), || format!("{w:?}: reduction {r:?} has cocharge {rc:?}, expected {cc}"));
                } else {
                    let c = cyclage(&w).expect("nonempty");
                    let cyc = cocharge(&c);
                    t.check(cyc.clone().map(|x| x + 1) == Ok(cc), || {
                        format!("{w:?}: cyclage {c:?} has cocharge {cyc:?}, expected {}", cc - 1)
                    });
                }
                if *len <= max_knuth {
                    let bad = knuth_neighbors(&w).into_iter().find(|v| cocharge(v) != Ok(cc));
                    t.check(bad.is_none(), || format!("{w:?}: Knuth neighbour {:?} differs", bad.unwrap()));
                    let slow = cocharge_by_cyclage(&w, &mut memo);
                    t.check(slow == Ok(cc), || format!("{w:?}: cyclage characterization gives {slow:?}, expected {cc}"));
                }
            }
        }
    })
}

/// The recursive enumeration of `C(mu, A)` equals brute-force filtering for
/// every shape of size at most `max_n` and alphabet of at most `letters`
/// letters.
pub fn recursion(max_n: usize, letters: usize) -> Report {
    let units: Vec<(Partition, Content)> = shapes(max_n, usize::MAX)
        .into_iter()
        .flat_map(|mu| alphabets(mu.size(), letters).into_iter().map(move |c| (mu.clone(), c)))
        .collect();
    run("recursion", &units, |(mu, alpha), t| {
        let a = Alphabet::from_content(alpha);
        let fast = enumerate_codes(mu, &a).expect("sizes agree");
        let slow = enumerate_codes_brute(mu, &a).expect("sizes agree");
        let all_in = fast.iter().all(|c| in_code_set(c, mu, &a) == Ok(true));
        t.check(fast == slow && all_in, || format!("mu={mu} A={:?}: {} recursive vs {} brute", a.letters(), fast.len(), slow.len()));
    })
}

/// Suite names accepted by [`by_name`].
pub const SUITES: [&str; 10] =
    ["symmetry", "statistics", "codes", "examples", "hl-bijection", "hook", "t1", "zero-bump", "cocharge", "recursion"];

/// Runs the named suite at size `max_n` (`all` runs every suite).
pub fn by_name(name: &str, max_n: usize) -> Option<Vec<Report>> {
    let one = |r: Report| Some(vec![r]);
    match name {
        "symmetry" => one(symmetry(max_n)),
        "statistics" => one(statistics(max_n, 4)),
        "codes" => one(codes(max_n)),
        "examples" => one(examples()),
        "hl-bijection" => one(hl_bijection(max_n, 3)),
        "hook" => one(hook(max_n, 3)),
        "t1" => one(t1(max_n)),
        "zero-bump" => one(zero_bump_suite(max_n, 3, max_n.min(4))),
        "cocharge" => one(cocharge_suite(max_n, max_n, max_n)),
        "recursion" => one(recursion(max_n, 3)),
        "all" => Some(SUITES.iter().flat_map(|s| by_name(s, max_n).expect("known suite")).collect()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for r in by_name("all", 4).unwrap() {
            assert!(r.passed(), "{r}");
            assert!(r.cases > 0, "{r}");
        }
    }

    #[test]
    fn words_enumerate_all() {
        assert_eq!(MultisetWords::new(3, 2).count(), 8);
        assert_eq!(partition_content_words(3).len(), 1 + 3 + 6);
    }
}
