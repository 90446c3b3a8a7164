//! Permutations, the 0-Hecke monoid and Hecke words.
//!
//! A generator `i` acts on a one-line arrangement by swapping the values
//! `i` and `i+1` when `i` sits to the left of `i+1`. Words act right to left.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    oneline: Vec<u8>,
}

impl Permutation {
    pub fn new(oneline: Vec<usize>) -> Result<Self> {
        let size = oneline.len();
        if size == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        if size > 200 {
            return Err(Error::InvalidPermutation("too large".into()));
        }
        let mut seen = vec![false; size + 1];
        for &v in &oneline {
            if v == 0 || v > size || seen[v] {
                return Err(Error::InvalidPermutation(format!("{oneline:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { oneline: oneline.into_iter().map(|v| v as u8).collect() })
    }

    pub fn identity(size: usize) -> Self {
        Permutation { oneline: (1..=size as u8).collect() }
    }

    /// The longest element `ω₀ = (size, ..., 2, 1)`.
    pub fn longest(size: usize) -> Self {
        Permutation { oneline: (1..=size as u8).rev().collect() }
    }

    /// Number of points `n+1`.
    pub fn size(&self) -> usize {
        self.oneline.len()
    }

    /// Alphabet bound `n`: generators are `1..=n`.
    pub fn n(&self) -> usize {
        self.oneline.len() - 1
    }

    pub fn oneline(&self) -> Vec<usize> {
        self.oneline.iter().map(|&v| v as usize).collect()
    }

    /// Value at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> usize {
        self.oneline[pos - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.size()];
        for (i, &v) in self.oneline.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { oneline: inv }
    }

    /// Functional composition: `(self ∘ other)(j) = self(other(j))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.size(), other.size(), "composing permutations of different sizes");
        Permutation { oneline: other.oneline.iter().map(|&j| self.oneline[j as usize - 1]).collect() }
    }

    pub fn inversions(&self) -> usize {
        let w = &self.oneline;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Embed into `S_size` by appending fixed points.
    pub fn extend_to(&self, size: usize) -> Result<Self> {
        if size < self.size() {
            return Err(Error::InvalidPermutation(format!(
                "{self} does not fit in S_{size}"
            )));
        }
        let mut oneline = self.oneline();
        oneline.extend(self.size() + 1..=size);
        Permutation::new(oneline)
    }

    /// `ω̂`: fix `1..=shift` and act by `ω` on the values above.
    pub fn shifted(&self, shift: usize) -> Self {
        let mut oneline: Vec<usize> = (1..=shift).collect();
        oneline.extend(self.oneline.iter().map(|&v| v as usize + shift));
        Permutation::new(oneline).expect("shift of a permutation is a permutation")
    }

    fn position_of(&self, value: usize) -> usize {
        self.oneline.iter().position(|&v| v as usize == value).unwrap()
    }

    /// The 0-Hecke generator `s̄_i`.
    pub fn hecke_apply(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.n() {
            return Err(Error::GeneratorOutOfRange { index: i, n: self.n() });
        }
        let mut out = self.clone();
        out.hecke_apply_in_place(i);
        Ok(out)
    }

    pub(crate) fn hecke_apply_in_place(&mut self, i: usize) {
        let p = self.position_of(i);
        let q = self.position_of(i + 1);
        if p < q {
            self.oneline.swap(p, q);
        }
    }

    /// Plain left multiplication by the transposition `s_i` (always swaps).
    pub(crate) fn swap_values(&mut self, i: usize) {
        let p = self.position_of(i);
        let q = self.position_of(i + 1);
        self.oneline.swap(p, q);
    }

    /// True when `ℓ(s_i w) < ℓ(w)`, i.e. value `i+1` sits left of value `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.position_of(i + 1) < self.position_of(i)
    }

    /// Left weak order: `self ≤ other` iff `other = u·self` with lengths adding.
    pub fn left_weak_le(&self, other: &Permutation) -> bool {
        let s = &self.oneline;
        let o = &other.oneline;
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if s[i] > s[j] && o[i] < o[j] {
                    return false;
                }
            }
        }
        true
    }

    /// Whether some (equivalently every) reduced word uses generator `k`:
    /// false exactly when the permutation stabilises `{1..k}`.
    pub fn uses_generator(&self, k: usize) -> bool {
        if k == 0 || k > self.n() {
            return false;
        }
        self.oneline[..k].iter().any(|&v| v as usize > k)
    }

    /// Lexicographically least reduced word.
    pub fn least_reduced_word(&self) -> HeckeWord {
        let mut w = self.clone();
        let mut letters = Vec::with_capacity(self.inversions());
        while !w.is_identity() {
            let i = (1..=w.n()).find(|&i| w.has_left_descent(i)).unwrap();
            letters.push(i);
            w.swap_values(i);
        }
        HeckeWord { letters, n: self.n() }
    }

    /// All permutations of `1..=size` in lexicographic order.
    pub fn all(size: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=size).collect();
        loop {
            out.push(Permutation::new(cur.clone()).unwrap());
            // next permutation
            let Some(i) = (0..size.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..size).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.oneline.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let values: std::result::Result<Vec<usize>, _> =
            trimmed.split(',').map(|p| p.trim().parse::<usize>()).collect();
        let values = values.map_err(|_| Error::InvalidPermutation(s.to_string()))?;
        Permutation::new(values)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeckeWord {
    letters: Vec<usize>,
    n: usize,
}

impl HeckeWord {
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::GeneratorOutOfRange { index: bad, n });
        }
        Ok(HeckeWord { letters, n })
    }

    pub fn empty(n: usize) -> Self {
        HeckeWord { letters: Vec::new(), n }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &HeckeWord) -> HeckeWord {
        assert_eq!(self.n, other.n, "alphabet mismatch");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        HeckeWord { letters, n: self.n }
    }

    pub fn eval(&self) -> Permutation {
        let mut p = Permutation::identity(self.n + 1);
        for &i in self.letters.iter().rev() {
            p.hecke_apply_in_place(i);
        }
        p
    }

    /// Parse digits ("3223") or a comma list ("10,3,2").
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        let letters: Vec<usize> = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(s.to_string())))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(s.to_string())))
                .collect::<Result<_>>()?
        };
        HeckeWord::new(letters, n)
    }
}

impl fmt::Display for HeckeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|v| v.to_string()).collect();
        if self.n <= 9 {
            write!(f, "{}", parts.concat())
        } else {
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for HeckeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

pub fn eval_hecke_word(w: &HeckeWord) -> Permutation {
    w.eval()
}

pub fn hecke_equivalent(w1: &HeckeWord, w2: &HeckeWord) -> bool {
    w1.eval() == w2.eval()
}

pub fn inversions(w: &Permutation) -> usize {
    w.inversions()
}

/// Permutation of the concatenation of a word for `u` followed by a word for `v`.
pub fn demazure_product(u: &Permutation, v: &Permutation) -> Permutation {
    assert_eq!(u.size(), v.size(), "demazure product of different sizes");
    let mut out = v.clone();
    for &i in u.least_reduced_word().letters.iter().rev() {
        out.hecke_apply_in_place(i);
    }
    out
}

/// Can a suffix state `sigma` still grow (by prepending letters) into `target`
/// using at most `budget` more letters?
pub(crate) fn can_reach(sigma: &Permutation, target: &Permutation, budget: usize) -> bool {
    sigma.left_weak_le(target) && target.inversions() - sigma.inversions() <= budget
}

/// All Hecke words for `omega` with at most `max_len` letters, sorted by
/// length and then lexicographically.
///
/// Words are grown from the right; a suffix survives only if its value is
/// below `omega` in left weak order and the inversion gap fits the budget.
pub fn enumerate_hecke_words(omega: &Permutation, max_len: usize) -> Vec<HeckeWord> {
    let n = omega.n();
    let mut out = Vec::new();
    let mut suffix = Vec::new();
    fn go(
        sigma: &Permutation,
        omega: &Permutation,
        n: usize,
        max_len: usize,
        suffix: &mut Vec<usize>,
        out: &mut Vec<HeckeWord>,
    ) {
        if sigma == omega {
            let letters: Vec<usize> = suffix.iter().rev().copied().collect();
            out.push(HeckeWord { letters, n });
        }
        if suffix.len() == max_len {
            return;
        }
        for i in 1..=n {
            let mut next = sigma.clone();
            next.hecke_apply_in_place(i);
            if can_reach(&next, omega, max_len - suffix.len() - 1) {
                suffix.push(i);
                go(&next, omega, n, max_len, suffix, out);
                suffix.pop();
            }
        }
    }
    if can_reach(&Permutation::identity(omega.size()), omega, max_len) {
        go(&Permutation::identity(omega.size()), omega, n, max_len, &mut suffix, &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.letters.cmp(&b.letters)));
    out
}

pub fn reduced_words(omega: &Permutation) -> Vec<HeckeWord> {
    let l = omega.inversions();
    enumerate_hecke_words(omega, l).into_iter().filter(|w| w.len() == l).collect()
}
