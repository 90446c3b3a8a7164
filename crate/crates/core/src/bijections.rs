//! The ladder bijection between (increasing, decreasing) and (decreasing,
//! increasing) pairs of Hecke words, the pair maps Ψ_{jk}, and the resulting
//! bijection from circled bounded to double bounded factorizations.

use std::fmt;

use crate::error::{Error, Result};
use crate::factorization::{Factorization, Kind, Letter};
use crate::perm::{HeckeWord, Permutation};

/// Four Hecke words `(a, b, c, d)` at threshold `k`: `a`, `c` strictly
/// decreasing, `b`, `d` strictly increasing, `b`, `c` bounded by `k`, and
/// `a`, `d` above `k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WQuadruple {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub d: Vec<usize>,
    pub k: usize,
    pub n: usize,
}

fn increasing(w: &[usize]) -> bool {
    w.windows(2).all(|p| p[0] < p[1])
}

fn decreasing(w: &[usize]) -> bool {
    w.windows(2).all(|p| p[0] > p[1])
}

impl WQuadruple {
    pub fn new(a: Vec<usize>, b: Vec<usize>, c: Vec<usize>, d: Vec<usize>, k: usize, n: usize) -> Result<Self> {
        let q = WQuadruple { a, b, c, d, k, n };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidQuadruple(format!("{msg} in {self}")));
        let in_range = |w: &[usize]| w.iter().all(|&v| (1..=self.n).contains(&v));
        if ![&self.a, &self.b, &self.c, &self.d].iter().all(|w| in_range(w)) {
            return bad("letter out of range");
        }
        if !decreasing(&self.a) || !decreasing(&self.c) || !increasing(&self.b) || !increasing(&self.d) {
            return bad("monotonicity violated");
        }
        if self.b.iter().chain(&self.c).any(|&v| v > self.k) || self.a.iter().chain(&self.d).any(|&v| v <= self.k) {
            return bad("threshold violated");
        }
        Ok(())
    }

    pub fn word(&self) -> HeckeWord {
        let letters = [&self.a, &self.b, &self.c, &self.d].into_iter().flatten().copied().collect();
        HeckeWord::new(letters, self.n).expect("validated letters")
    }

    pub fn permutation(&self) -> Permutation {
        self.word().eval()
    }
}

fn paren(w: &[usize]) -> String {
    let sep = if w.iter().any(|&v| v > 9) { "," } else { "" };
    format!("({})", w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep))
}

impl fmt::Display for WQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", paren(&self.a), paren(&self.b), paren(&self.c), paren(&self.d))
    }
}

/// What sits at the inner ends of `b` and `c`: `b` ends in `…k`, `…K` or
/// `…kK`; `c` starts with `k…`, `K…` or `Kk…`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Ends {
    None,
    Low,
    High,
    Both,
}

/// One row of the twelve-case rewrite: `(b tail, c head)` before, and after
/// it whether `a` gains a trailing `K`, `b` keeps a trailing `k`, `c` keeps a
/// leading `k`, and `d` gains a leading `K`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Rewrite {
    pub b_tail: Ends,
    pub c_head: Ends,
    pub a_gets: bool,
    pub b_keeps: bool,
    pub c_keeps: bool,
    pub d_gets: bool,
}

const fn rw(b_tail: Ends, c_head: Ends, a_gets: bool, b_keeps: bool, c_keeps: bool, d_gets: bool) -> Rewrite {
    Rewrite { b_tail, c_head, a_gets, b_keeps, c_keeps, d_gets }
}

use Ends::{Both, High, Low, None as Nil};

pub const REWRITES: [Rewrite; 12] = [
    rw(Both, Both, true, true, true, true),
    rw(Both, Low, true, true, false, true),
    rw(Low, Both, true, false, true, true),
    rw(Both, High, false, true, true, true),
    rw(High, Both, true, true, true, false),
    rw(High, High, true, false, false, true),
    rw(High, Low, true, true, false, false),
    rw(Low, High, false, false, true, true),
    rw(Both, Nil, false, true, false, true),
    rw(Nil, Both, true, false, true, false),
    rw(High, Nil, false, false, false, true),
    rw(Nil, High, true, false, false, false),
];

fn split_b(b: &[usize], k: usize) -> (Vec<usize>, Ends) {
    let big = k + 1;
    let mut rest = b.to_vec();
    let has_high = rest.last() == Some(&big);
    if has_high {
        rest.pop();
    }
    let has_low = k > 0 && rest.last() == Some(&k);
    if has_low {
        rest.pop();
    }
    (rest, ends(has_low, has_high))
}

fn split_c(c: &[usize], k: usize) -> (Vec<usize>, Ends) {
    let big = k + 1;
    let mut rest: Vec<usize> = c.iter().rev().copied().collect();
    let has_high = rest.last() == Some(&big);
    if has_high {
        rest.pop();
    }
    let has_low = k > 0 && rest.last() == Some(&k);
    if has_low {
        rest.pop();
    }
    rest.reverse();
    (rest, ends(has_low, has_high))
}

fn ends(low: bool, high: bool) -> Ends {
    match (low, high) {
        (false, false) => Nil,
        (true, false) => Low,
        (false, true) => High,
        (true, true) => Both,
    }
}

fn attach_b(mut rest: Vec<usize>, e: Ends, k: usize) -> Vec<usize> {
    if matches!(e, Low | Both) {
        rest.push(k);
    }
    if matches!(e, High | Both) {
        rest.push(k + 1);
    }
    rest
}

fn attach_c(rest: Vec<usize>, e: Ends, k: usize) -> Vec<usize> {
    let mut out = Vec::new();
    if matches!(e, High | Both) {
        out.push(k + 1);
    }
    if matches!(e, Low | Both) {
        out.push(k);
    }
    out.extend(rest);
    out
}

/// `W^{k+1} → W^k`.
pub fn wk_step_down(q: &WQuadruple) -> Result<WQuadruple> {
    q.validate()?;
    if q.k == 0 {
        return Err(Error::InvalidQuadruple("no threshold below 0".into()));
    }
    let k = q.k - 1;
    let big = k + 1;
    let mut out = WQuadruple { k, ..q.clone() };
    if !q.permutation().uses_generator(big) {
        out.validate()?;
        return Ok(out);
    }
    let (b_rest, b_tail) = split_b(&q.b, k);
    let (c_rest, c_head) = split_c(&q.c, k);
    match REWRITES.iter().find(|r| r.b_tail == b_tail && r.c_head == c_head) {
        Some(r) => {
            if r.a_gets {
                out.a.push(big);
            }
            out.b = attach_b(b_rest, if r.b_keeps { Low } else { Nil }, k);
            out.c = attach_c(c_rest, if r.c_keeps { Low } else { Nil }, k);
            if r.d_gets {
                out.d.insert(0, big);
            }
        }
        // patterns without K are fixed
        None if !matches!(b_tail, High | Both) && !matches!(c_head, High | Both) => {}
        None => unreachable!("rewrite table covers every pattern containing K"),
    }
    out.validate()?;
    Ok(out)
}

/// `W^k → W^{k+1}`, the inverse of [`wk_step_down`].
pub fn wk_step_up(q: &WQuadruple) -> Result<WQuadruple> {
    q.validate()?;
    if q.k >= q.n {
        return Err(Error::InvalidQuadruple(format!("threshold {} is already maximal", q.k)));
    }
    let k = q.k;
    let big = k + 1;
    let mut out = WQuadruple { k: k + 1, ..q.clone() };
    if !q.permutation().uses_generator(big) {
        out.validate()?;
        return Ok(out);
    }
    let a_has = q.a.last() == Some(&big);
    let d_has = q.d.first() == Some(&big);
    let (b_rest, b_tail) = split_b(&q.b, k);
    let (c_rest, c_head) = split_c(&q.c, k);
    let b_has = b_tail == Low;
    let c_has = c_head == Low;
    let found = REWRITES
        .iter()
        .find(|r| (r.a_gets, r.b_keeps, r.c_keeps, r.d_gets) == (a_has, b_has, c_has, d_has));
    if let Some(r) = found {
        if a_has {
            out.a.pop();
        }
        if d_has {
            out.d.remove(0);
        }
        out.b = attach_b(b_rest, r.b_tail, k);
        out.c = attach_c(c_rest, r.c_head, k);
    }
    out.validate()?;
    Ok(out)
}

/// `↓`: `(b, c)` with `b` increasing and `c` decreasing to `(a, d)` with
/// `a` decreasing and `d` increasing.
pub fn arrow_down(b: &[usize], c: &[usize], n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut q = WQuadruple::new(Vec::new(), b.to_vec(), c.to_vec(), Vec::new(), n, n)?;
    while q.k > 0 {
        q = wk_step_down(&q)?;
    }
    Ok((q.a, q.d))
}

/// The full ladder of `↓`, from `W^n` down to `W^0`.
pub fn arrow_down_ladder(b: &[usize], c: &[usize], n: usize) -> Result<Vec<WQuadruple>> {
    let mut q = WQuadruple::new(Vec::new(), b.to_vec(), c.to_vec(), Vec::new(), n, n)?;
    let mut out = vec![q.clone()];
    while q.k > 0 {
        q = wk_step_down(&q)?;
        out.push(q.clone());
    }
    Ok(out)
}

/// `↑`, the inverse of [`arrow_down`].
pub fn arrow_up(a: &[usize], d: &[usize], n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut q = WQuadruple::new(a.to_vec(), Vec::new(), Vec::new(), d.to_vec(), 0, n)?;
    while q.k < n {
        q = wk_step_up(&q)?;
    }
    Ok((q.b, q.c))
}

fn circled_decreasing(w: &[Letter]) -> bool {
    w.windows(2).all(|p| p[0].key() > p[1].key())
}

fn check_psi_input(n: usize, j: usize, k: usize, f_j: &[Letter], f_ex: &[usize], s: usize) -> Result<()> {
    let bad = |msg: String| Err(Error::Constraint(msg));
    if j == 0 || k == 0 || s > n {
        return bad(format!("parameters j={j}, k={k} outside the range for n={n}"));
    }
    if !circled_decreasing(f_j) {
        return bad("f_j is not decreasing".into());
    }
    for l in f_j {
        let ok = if l.circled { (j..=s).contains(&l.value) } else { (j..=n).contains(&l.value) };
        if !ok {
            return bad(format!("letter {l} not allowed in f_j"));
        }
    }
    if !increasing(f_ex) || f_ex.iter().any(|&v| v < j + k || v > n) {
        return bad("f_ex must increase within j+k..=n".into());
    }
    Ok(())
}

/// `Ψ_{jk}(f_j, f_ex) = (f_ex', f_j')`.
pub fn psi(n: usize, j: usize, k: usize, f_j: &[Letter], f_ex: &[usize]) -> Result<(Vec<usize>, Vec<Letter>)> {
    let s = j + k - 1;
    check_psi_input(n, j, k, f_j, f_ex, s)?;
    let pivot = Letter::circled(s).key();
    let upper: Vec<usize> = f_j.iter().filter(|l| l.key() > pivot).map(|l| l.value).collect();
    let has_pivot = f_j.iter().any(|l| l.key() == pivot);
    let lower: Vec<Letter> = f_j.iter().filter(|l| l.key() < pivot).copied().collect();
    let mut ex_plus = Vec::with_capacity(f_ex.len() + 1);
    if has_pivot {
        ex_plus.push(s);
    }
    ex_plus.extend_from_slice(f_ex);
    let (g1, g2) = arrow_up(&upper, &ex_plus, n)?;
    let mut f_j_new: Vec<Letter> = g2.into_iter().map(Letter::plain).collect();
    f_j_new.extend(lower);
    Ok((g1, f_j_new))
}

/// `Ψ_{jk}^{-1}(f_ex', f_j') = (f_j, f_ex)`.
pub fn psi_inv(n: usize, j: usize, k: usize, f_ex: &[usize], f_j: &[Letter]) -> Result<(Vec<Letter>, Vec<usize>)> {
    let bad = |msg: String| Err(Error::Constraint(msg));
    let s = j + k - 1;
    if j == 0 || k == 0 || s > n {
        return bad(format!("parameters j={j}, k={k} outside the range for n={n}"));
    }
    if !circled_decreasing(f_j) {
        return bad("f_j' is not decreasing".into());
    }
    for l in f_j {
        let ok = if l.circled { l.value >= j && l.value < s } else { (j..=n).contains(&l.value) };
        if !ok {
            return bad(format!("letter {l} not allowed in f_j'"));
        }
    }
    if !increasing(f_ex) || f_ex.iter().any(|&v| v + 1 < j + k || v > n) {
        return bad("f_ex' must increase within j+k-1..=n".into());
    }
    let pivot = Letter::circled(s).key();
    let upper: Vec<usize> = f_j.iter().filter(|l| l.key() > pivot).map(|l| l.value).collect();
    let lower: Vec<Letter> = f_j.iter().filter(|l| l.key() < pivot).copied().collect();
    let (h1, h2) = arrow_down(f_ex, &upper, n)?;
    if h2.iter().any(|&v| v < s) {
        return Err(Error::Constraint(format!("inverse image has a letter below {s}")));
    }
    let has_pivot = h2.first() == Some(&s);
    let mut f_j_old: Vec<Letter> = h1.into_iter().map(Letter::plain).collect();
    if has_pivot {
        f_j_old.push(Letter::circled(s));
    }
    f_j_old.extend(lower);
    let ex_old = h2.into_iter().filter(|&v| v > s).collect();
    Ok((f_j_old, ex_old))
}

/// An intermediate factorization: left factors, right factors and the extra
/// factor sitting just after right factor `j` (before all of them if `j = 0`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainState {
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<Letter>>,
    pub ex: Vec<usize>,
    pub j: usize,
    pub k: usize,
}

impl fmt::Display for ChainState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factor = |w: &[Letter]| format!("({})", w.iter().map(|l| l.to_string()).collect::<String>());
        for l in &self.left {
            write!(f, "{}", paren(l))?;
        }
        write!(f, "|")?;
        if self.j == 0 {
            write!(f, "{}", paren(&self.ex))?;
        }
        for (i, r) in self.right.iter().enumerate() {
            write!(f, "{}", factor(r))?;
            if i + 1 == self.j {
                write!(f, "{}", paren(&self.ex))?;
            }
        }
        Ok(())
    }
}

/// Apply the Ψ chain, returning every intermediate state in order.
pub fn circled_to_double_chain(f: &Factorization) -> Result<(Factorization, Vec<ChainState>)> {
    if f.kind() != Kind::CircledBounded {
        return Err(Error::InvalidFactorization("expected a circled bounded factorization".into()));
    }
    let n = f.n();
    let mut state = ChainState { left: vec![Vec::new()], right: f.factors().to_vec(), ex: Vec::new(), j: 1, k: n };
    let mut chain = vec![state.clone()];
    for k in (1..=n).rev() {
        for j in (1..=n - k + 1).rev() {
            debug_assert_eq!((state.j, state.k), (j, k));
            let (ex, fj) = psi(n, j, k, &state.right[j - 1], &state.ex)?;
            state.ex = ex;
            state.right[j - 1] = fj;
            state.j = j - 1;
            chain.push(state.clone());
        }
        let ex = std::mem::take(&mut state.ex);
        state.left.push(ex);
        state.k = k - 1;
        state.j = n - k + 2;
        if k > 1 {
            chain.push(state.clone());
        }
    }
    let mut factors: Vec<Vec<Letter>> =
        state.left.iter().map(|w| w.iter().map(|&v| Letter::plain(v)).collect()).collect();
    factors.extend(state.right);
    Ok((Factorization::new(Kind::DoubleBounded, n, factors, n + 1)?, chain))
}

/// The bijection from circled bounded to double bounded factorizations.
pub fn circled_to_double(f: &Factorization) -> Result<Factorization> {
    Ok(circled_to_double_chain(f)?.0)
}

/// The inverse chain, built from Ψ^{-1}.
pub fn double_to_circled(f: &Factorization) -> Result<Factorization> {
    if f.kind() != Kind::DoubleBounded {
        return Err(Error::InvalidFactorization("expected a double bounded factorization".into()));
    }
    let n = f.n();
    let mut left: Vec<Vec<usize>> = f.left().iter().map(|w| w.iter().map(|l| l.value).collect()).collect();
    let mut right = f.right().to_vec();
    let mut ex = left.pop().unwrap_or_default();
    for k in 1..=n {
        for j in 0..=n - k {
            let (fj, rest) = psi_inv(n, j + 1, k, &ex, &right[j])?;
            right[j] = fj;
            ex = rest;
        }
        if !ex.is_empty() {
            return Err(Error::Constraint("extra factor left over".into()));
        }
        if k < n {
            ex = left.pop().unwrap_or_default();
        }
    }
    if left.iter().any(|w| !w.is_empty()) {
        return Err(Error::Constraint("outermost left factor must be empty".into()));
    }
    Factorization::new(Kind::CircledBounded, n, right, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::{enumerate_circled_bounded, enumerate_double_bounded};
    use std::collections::HashSet;

    fn digits(s: &str) -> Vec<usize> {
        s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
    }

    fn letters(s: &str) -> Vec<Letter> {
        s.chars()
            .map(|c| match c.to_digit(10) {
                Some(v) => Letter::plain(v as usize),
                None => Letter::circled((c as u32 - 0x2460 + 1) as usize),
            })
            .collect()
    }

    fn subsets(values: &[usize]) -> Vec<Vec<usize>> {
        (0u32..1 << values.len())
            .map(|mask| (0..values.len()).filter(|i| mask >> i & 1 == 1).map(|i| values[i]).collect())
            .collect()
    }

    #[test]
    fn table_is_disjoint_and_invertible() {
        let mut inputs = HashSet::new();
        let mut outputs = HashSet::new();
        for r in &REWRITES {
            assert!(matches!(r.b_tail, High | Both) || matches!(r.c_head, High | Both));
            assert!(inputs.insert((r.b_tail, r.c_head)));
            assert!(outputs.insert((r.a_gets, r.b_keeps, r.c_keeps, r.d_gets)));
            let len = |e: Ends| match e {
                Nil => 0,
                Low | High => 1,
                Both => 2,
            };
            // |b|+|d| and |a|+|c| are preserved
            assert_eq!(len(r.b_tail), usize::from(r.b_keeps) + usize::from(r.d_gets), "{r:?}");
            assert_eq!(len(r.c_head), usize::from(r.a_gets) + usize::from(r.c_keeps), "{r:?}");
        }
        assert_eq!(inputs.len(), 12);
        // the four K-free fixed patterns fill the remaining outputs
        for (b, c) in [(false, false), (true, false), (false, true), (true, true)] {
            assert!(outputs.insert((false, b, c, false)));
        }
        assert_eq!(outputs.len(), 16);
    }

    #[test]
    fn ladder_example() {
        let ladder = arrow_down_ladder(&digits("123568"), &digits("8752"), 8).unwrap();
        let expected = [
            "()(123568)(8752)()",
            "(8)(123567)(752)()",
            "(8)(12356)(652)(7)",
            "(86)(1235)(52)(67)",
            "(865)(123)(2)(567)",
            "(865)(123)(2)(567)",
            "(8653)(12)()(3567)",
            "(8653)(1)()(23567)",
            "(8653)()()(123567)",
        ];
        let got: Vec<String> = ladder.iter().map(|q| q.to_string()).collect();
        assert_eq!(got, expected);
        assert_eq!(arrow_down(&digits("123568"), &digits("8752"), 8).unwrap(), (digits("8653"), digits("123567")));
        assert_eq!(arrow_down(&[], &[], 4).unwrap(), (vec![], vec![]));
    }

    #[test]
    fn up_example() {
        assert_eq!(arrow_up(&digits("9764"), &digits("45689"), 9).unwrap(), (digits("45789"), digits("9865")));
        assert_eq!(arrow_up(&[], &[], 3).unwrap(), (vec![], vec![]));
    }

    #[test]
    fn arrows_roundtrip_exhaustively() {
        for n in 1..=4 {
            let all: Vec<usize> = (1..=n).collect();
            let subs = subsets(&all);
            let mut images = HashSet::new();
            for b in &subs {
                for c in &subs {
                    if b.len() + c.len() > 6 {
                        continue;
                    }
                    let c_dec: Vec<usize> = c.iter().rev().copied().collect();
                    let (a, d) = arrow_down(b, &c_dec, n).unwrap();
                    assert!(decreasing(&a) && increasing(&d));
                    assert_eq!((a.len(), d.len()), (c.len(), b.len()));
                    let before = HeckeWord::new([b.clone(), c_dec.clone()].concat(), n).unwrap().eval();
                    let after = HeckeWord::new([a.clone(), d.clone()].concat(), n).unwrap().eval();
                    assert_eq!(before, after);
                    assert_eq!(arrow_up(&a, &d, n).unwrap(), (b.clone(), c_dec.clone()));
                    assert!(images.insert((a.clone(), d.clone())));
                }
            }
            for a in &subs {
                for d in &subs {
                    if a.len() + d.len() > 6 {
                        continue;
                    }
                    let a_dec: Vec<usize> = a.iter().rev().copied().collect();
                    let (b, c) = arrow_up(&a_dec, d, n).unwrap();
                    assert_eq!(arrow_down(&b, &c, n).unwrap(), (a_dec, d.clone()));
                }
            }
        }
    }

    #[test]
    fn psi_example() {
        let (ex, fj) = psi(9, 2, 3, &letters("9764④③2②"), &digits("5689")).unwrap();
        assert_eq!(ex, digits("45789"));
        assert_eq!(fj, letters("9865③2②"));
        let (fj0, ex0) = psi_inv(9, 2, 3, &ex, &fj).unwrap();
        assert_eq!(fj0, letters("9764④③2②"));
        assert_eq!(ex0, digits("5689"));
        assert_eq!(psi(3, 1, 1, &[], &[]).unwrap(), (vec![], vec![]));
        assert_eq!(psi_inv(3, 1, 1, &[], &[]).unwrap(), (vec![], vec![]));
        assert!(psi(3, 1, 1, &letters("②"), &[]).is_err());
    }

    #[test]
    fn chain_for_longest_element() {
        let f = Factorization::parse(Kind::CircledBounded, 3, "(3③②1①)(③2)(3③)()").unwrap();
        let (g, chain) = circled_to_double_chain(&f).unwrap();
        let lines: Vec<String> = chain.iter().map(|s| s.to_string()).collect();
        let expected = [
            "()|(3③②1①)()(③2)(3③)()",
            "()|(3)(3②1①)(③2)(3③)()",
            "()(3)|(3②1①)(③2)()(3③)()",
            "()(3)|(3②1①)(3)(2)(3③)()",
            "()(3)|(23)(21①)(2)(3③)()",
            "()(3)(23)|(21①)(2)(3③)()()",
            "()(3)(23)|(21①)(2)(3)(3)()",
            "()(3)(23)|(21①)(2)(3)(3)()",
            "()(3)(23)|(12)(21)(3)(3)()",
        ];
        assert_eq!(lines, expected);
        assert_eq!(g.compact(), "()(3)(23)(12)|(21)(3)(3)()");
        assert_eq!(g.weight(), f.weight());
        assert_eq!(double_to_circled(&g).unwrap(), f);
    }

    #[test]
    fn circled_to_double_is_a_bijection_on_small_cases() {
        for omega in Permutation::all(3) {
            let cap = crate::factorization::bounded_letter_cap(Kind::CircledBounded, 2);
            let source = enumerate_circled_bounded(&omega, cap);
            let mut image: Vec<Factorization> = source.iter().map(|f| circled_to_double(f).unwrap()).collect();
            for (f, g) in source.iter().zip(&image) {
                assert_eq!(f.weight(), g.weight());
                assert_eq!(g.permutation(), omega);
                assert_eq!(&double_to_circled(g).unwrap(), f);
            }
            let mut target = enumerate_double_bounded(&omega, cap);
            image.sort_by_key(|f| f.compact());
            target.sort_by_key(|f| f.compact());
            assert_eq!(image, target, "{omega}");
        }
        let empty = Factorization::parse(Kind::CircledBounded, 2, "()()()").unwrap();
        assert_eq!(circled_to_double(&empty).unwrap().compact(), "()()()|()()()");
    }

    #[test]
    fn psi_roundtrips_exhaustively() {
        for n in 1..=4 {
            for k in 1..=n {
                for j in 1..=n - k + 1 {
                    let s = j + k - 1;
                    let mut pool: Vec<Letter> = (j..=n).map(Letter::plain).collect();
                    pool.extend((j..=s).map(Letter::circled));
                    pool.sort_by_key(|l| std::cmp::Reverse(l.key()));
                    let ex_pool: Vec<usize> = (j + k..=n).collect();
                    let mut forward = HashSet::new();
                    for mask in 0u32..1 << pool.len() {
                        let fj: Vec<Letter> =
                            (0..pool.len()).filter(|i| mask >> i & 1 == 1).map(|i| pool[i]).collect();
                        for ex in subsets(&ex_pool) {
                            if fj.len() + ex.len() > 6 {
                                continue;
                            }
                            let (ex2, fj2) = psi(n, j, k, &fj, &ex).unwrap();
                            let word = |a: &[usize], b: &[usize]| HeckeWord::new([a, b].concat(), n).unwrap().eval();
                            let vals = |w: &[Letter]| w.iter().map(|l| l.value).collect::<Vec<_>>();
                            assert_eq!(word(&vals(&fj), &ex), word(&ex2, &vals(&fj2)));
                            let uncircled = |w: &[Letter]| w.iter().filter(|l| !l.circled).count();
                            assert_eq!(uncircled(&fj), uncircled(&fj2));
                            let pivot = usize::from(fj.contains(&Letter::circled(s)));
                            assert_eq!(ex.len() + pivot, ex2.len());
                            assert_eq!(psi_inv(n, j, k, &ex2, &fj2).unwrap(), (fj.clone(), ex.clone()));
                            assert!(forward.insert((ex2, fj2)));
                        }
                    }
                }
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn psi_fuzz(n in 1usize..=6, seed_k in 0usize..6, seed_j in 0usize..6, fmask in 0u32..4096, emask in 0u32..64) {
            let k = seed_k % n + 1;
            let j = seed_j % (n - k + 1) + 1;
            let s = j + k - 1;
            let mut pool: Vec<Letter> = (j..=n).map(Letter::plain).collect();
            pool.extend((j..=s).map(Letter::circled));
            pool.sort_by_key(|l| std::cmp::Reverse(l.key()));
            let fj: Vec<Letter> = (0..pool.len()).filter(|i| fmask >> i & 1 == 1).map(|i| pool[i]).collect();
            let ex: Vec<usize> = (j + k..=n).filter(|v| emask >> (v - 1) & 1 == 1).collect();
            let (ex2, fj2) = psi(n, j, k, &fj, &ex).unwrap();
            proptest::prop_assert_eq!(psi_inv(n, j, k, &ex2, &fj2).unwrap(), (fj, ex));
            let (fj3, ex3) = psi_inv(n, j, k, &ex2, &fj2).unwrap();
            proptest::prop_assert_eq!(psi(n, j, k, &fj3, &ex3).unwrap(), (ex2, fj2));
        }
    }
}
