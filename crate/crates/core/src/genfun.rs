//! Exact sparse polynomials in `q` and `t`, and the generating functions
//! built from fillings.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::shapes::{for_each_filling, inv, maj, row_inversions, weak_compositions, Content, Letter, MultisetPermutations, Partition};

/// A polynomial in `q` and `t` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QTPolynomial {
    terms: BTreeMap<(u32, u32), i64>,
}

impl QTPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(q: u32, t: u32, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(q, t, c);
        p
    }

    pub fn add_term(&mut self, q: u32, t: u32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((q, t)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(q, t));
        }
    }

    pub fn coeff(&self, q: u32, t: u32) -> i64 {
        self.terms.get(&(q, t)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(q-degree, t-degree, coefficient)` in display order.
    pub fn terms(&self) -> Vec<(u32, u32, i64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&(a, b), &c)| (a, b, c)).collect();
        v.sort_by_key(|&(a, b, _)| (a + b, std::cmp::Reverse(a)));
        v
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        QTPolynomial { terms: self.terms.iter().map(|(&(a, b), &c)| ((b, a), c)).collect() }
    }

    pub fn eval(&self, q: i64, t: i64) -> i64 {
        self.terms.iter().map(|(&(a, b), &c)| c * q.pow(a) * t.pow(b)).sum()
    }

    /// The part with `q`-degree zero, as a polynomial in `t`.
    pub fn at_q0(&self) -> QPolynomial {
        let mut p = QPolynomial::zero();
        for (&(a, b), &c) in &self.terms {
            if a == 0 {
                p.add_term(b, c);
            }
        }
        p
    }
}

impl Add for &QTPolynomial {
    type Output = QTPolynomial;

    fn add(self, rhs: &QTPolynomial) -> QTPolynomial {
        let mut out = self.clone();
        for (&(a, b), &c) in &rhs.terms {
            out.add_term(a, b, c);
        }
        out
    }
}

impl Mul for &QTPolynomial {
    type Output = QTPolynomial;

    fn mul(self, rhs: &QTPolynomial) -> QTPolynomial {
        let mut out = QTPolynomial::zero();
        for (&(a, b), &c) in &self.terms {
            for (&(x, y), &d) in &rhs.terms {
                out.add_term(a + x, b + y, c * d);
            }
        }
        out
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: i64, vars: &[(&str, u32)]) -> fmt::Result {
    let vars: Vec<String> =
        vars.iter().filter(|(_, e)| *e > 0).map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") }).collect();
    let c = c.abs();
    if vars.is_empty() {
        write!(f, "{c}")
    } else if c == 1 {
        write!(f, "{}", vars.join("*"))
    } else {
        write!(f, "{c}*{}", vars.join("*"))
    }
}

fn write_sign(f: &mut fmt::Formatter<'_>, first: bool, c: i64) -> fmt::Result {
    match (first, c < 0) {
        (true, true) => write!(f, "-"),
        (true, false) => Ok(()),
        (false, true) => write!(f, " - "),
        (false, false) => write!(f, " + "),
    }
}

impl fmt::Display for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (a, b, c)) in self.terms().into_iter().enumerate() {
            write_sign(f, i == 0, c)?;
            write_term(f, c, &[("q", a), ("t", b)])?;
        }
        Ok(())
    }
}

/// A polynomial in one variable with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: BTreeMap<u32, i64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(d: u32, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(d, c);
        p
    }

    /// Builds a polynomial from coefficients listed by degree.
    pub fn from_coeffs(cs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (d, &c) in cs.iter().enumerate() {
            p.add_term(d as u32, c);
        }
        p
    }

    pub fn add_term(&mut self, d: u32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(d).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&d);
        }
    }

    pub fn coeff(&self, d: u32) -> i64 {
        self.coeffs.get(&d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(degree, coefficient)` pairs in increasing degree.
    pub fn terms(&self) -> Vec<(u32, i64)> {
        self.coeffs.iter().map(|(&d, &c)| (d, c)).collect()
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().map(|(&d, &c)| c * x.pow(d)).sum()
    }

    /// Formats with the given variable name.
    pub fn display_in(&self, var: &str) -> String {
        struct D<'a>(&'a QPolynomial, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_zero() {
                    return write!(f, "0");
                }
                for (i, (d, c)) in self.0.terms().into_iter().enumerate() {
                    write_sign(f, i == 0, c)?;
                    write_term(f, c, &[(self.1, d)])?;
                }
                Ok(())
            }
        }
        D(self, var).to_string()
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("q"))
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (&d, &c) in &rhs.coeffs {
            out.add_term(d, c);
        }
        out
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (&a, &c) in &self.coeffs {
            for (&b, &d) in &rhs.coeffs {
                out.add_term(a + b, c * d);
            }
        }
        out
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_integer(n: usize) -> QPolynomial {
    QPolynomial::from_coeffs(&vec![1; n])
}

/// `(n)_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> QPolynomial {
    (1..=n).fold(QPolynomial::one(), |acc, k| &acc * &q_integer(k))
}

/// Gaussian binomial via the `q`-Pascal rule.
pub fn q_binomial(n: usize, k: usize) -> QPolynomial {
    if k > n {
        return QPolynomial::zero();
    }
    let mut row = vec![QPolynomial::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            // [m; j] = [m-1; j-1] + q^j [m-1; j]
            let mut p = if j > 0 { row[j - 1].clone() } else { QPolynomial::zero() };
            if j < m {
                p = &p + &(&QPolynomial::monomial(j as u32, 1) * &row[j]);
            }
            next.push(p);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Gaussian multinomial `(n)_q! / ((m_1)_q! ... (m_k)_q!)`.
pub fn q_multinomial(n: usize, parts: &[usize]) -> Result<QPolynomial> {
    let total: usize = parts.iter().sum();
    if total != n {
        return Err(Error::SizeMismatch { expected: n, found: total });
    }
    let mut remaining = n;
    let mut out = QPolynomial::one();
    for &m in parts {
        out = &out * &q_binomial(remaining, m);
        remaining -= m;
    }
    Ok(out)
}

/// Sum of `q^inv t^maj` over the fillings of `mu` with content `alpha`.
pub fn macdonald_coefficient(mu: &Partition, alpha: &Content) -> Result<QTPolynomial> {
    let mut counts: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for_each_filling(mu, alpha, |f| {
        *counts.entry((inv(f) as u32, maj(f) as u32)).or_insert(0) += 1;
    })?;
    let mut p = QTPolynomial::zero();
    for ((a, b), c) in counts {
        p.add_term(a, b, c);
    }
    Ok(p)
}

/// Sum of `t^maj` over the fillings of `mu` with content `alpha` and `inv = 0`.
pub fn hall_littlewood_coefficient(mu: &Partition, alpha: &Content) -> Result<QPolynomial> {
    let mut p = QPolynomial::zero();
    for_each_filling(mu, alpha, |f| {
        if inv(f) == 0 {
            p.add_term(maj(f) as u32, 1);
        }
    })?;
    Ok(p)
}

/// Checks `coefficient(mu)(q, t) == coefficient(mu*)(t, q)` for every content
/// over `alphabet_size` letters.
pub fn check_symmetry(mu: &Partition, alphabet_size: usize) -> bool {
    symmetry_failures(mu, alphabet_size).is_empty()
}

/// Contents over `alphabet_size` letters at which the symmetry fails.
pub fn symmetry_failures(mu: &Partition, alphabet_size: usize) -> Vec<Content> {
    let conj = mu.conjugate();
    weak_compositions(mu.size(), alphabet_size.max(1))
        .into_iter()
        .map(Content)
        .filter(|alpha| {
            let lhs = macdonald_coefficient(mu, alpha).expect("sizes agree");
            let rhs = macdonald_coefficient(&conj, alpha).expect("sizes agree");
            lhs != rhs.swap_qt()
        })
        .collect()
}

/// Sum of `q^maj` over the fillings of `mu` with content `alpha`.
pub fn maj_distribution(mu: &Partition, alpha: &Content) -> Result<QPolynomial> {
    let mut p = QPolynomial::zero();
    for_each_filling(mu, alpha, |f| p.add_term(maj(f) as u32, 1))?;
    Ok(p)
}

/// Sum of `q^inv` over the fillings of `mu` with content `alpha`.
pub fn inv_distribution(mu: &Partition, alpha: &Content) -> Result<QPolynomial> {
    let mut p = QPolynomial::zero();
    for_each_filling(mu, alpha, |f| p.add_term(inv(f) as u32, 1))?;
    Ok(p)
}

/// Sum of `q^{inv_w(row)}` over the distinct arrangements of `letters` placed
/// on top of `base`, counting relative inversions in the placed row only.
pub fn row_inversion_distribution(base: &[Letter], letters: &[Letter]) -> Result<QPolynomial> {
    if letters.len() > base.len() {
        return Err(Error::Precondition("row is longer than its base".into()));
    }
    let base = &base[..letters.len()];
    let mut p = QPolynomial::zero();
    for row in MultisetPermutations::new(letters.to_vec()) {
        p.add_term(row_inversions(Some(base), &row) as u32, 1);
    }
    Ok(p)
}
