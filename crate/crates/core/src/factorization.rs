//! Hecke factorizations in all their flavours, their weights and generating
//! polynomials, plus the convolution sum over Demazure factorizations.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::operators::grothendieck_single;
use crate::perm::{can_reach, demazure_product, HeckeWord, Permutation};
use crate::poly::Polynomial;

/// A generator letter, possibly circled. Circled letters sort as
/// `① < 1 < ② < 2 < ⋯`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub value: usize,
    pub circled: bool,
}

impl Letter {
    pub fn plain(value: usize) -> Self {
        Letter { value, circled: false }
    }

    pub fn circled(value: usize) -> Self {
        Letter { value, circled: true }
    }

    pub fn key(&self) -> usize {
        2 * self.value - usize::from(self.circled)
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.circled && (1..=20).contains(&self.value) {
            let c = char::from_u32(0x2460 + self.value as u32 - 1).unwrap();
            write!(f, "{c}")
        } else if self.circled {
            write!(f, "{}o", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Kind {
    Plain,
    BoundedPlain,
    CircledBounded,
    DoubleBounded,
    DoubleUnbounded,
    Hook,
}

impl Kind {
    pub fn is_double(self) -> bool {
        matches!(self, Kind::DoubleBounded | Kind::DoubleUnbounded)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Rule {
    Decreasing,
    Increasing,
    Hook,
}

fn compatible(rule: Rule, left: Letter, right: Letter) -> bool {
    match rule {
        Rule::Decreasing => left.key() > right.key(),
        Rule::Increasing => left.value < right.value,
        Rule::Hook => match (left.circled, right.circled) {
            (true, true) => left.value > right.value,
            (true, false) => true,
            (false, true) => false,
            (false, false) => left.value <= right.value,
        },
    }
}

#[derive(Clone, Copy, Debug)]
struct Slot {
    rule: Rule,
    min_value: usize,
    circles: bool,
}

/// Weight vectors of a factorization or tableau.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeightPair {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl WeightPair {
    pub fn total(&self) -> usize {
        self.x.iter().chain(&self.y).sum()
    }

    pub fn monomial(&self, m: usize) -> Result<Polynomial> {
        Polynomial::monomial(m, &self.x, &self.y, 1)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Factorization {
    kind: Kind,
    n: usize,
    factors: Vec<Vec<Letter>>,
    split: usize,
}

impl Factorization {
    /// Build and validate. `split` is the number of factors left of the
    /// centre for double kinds and ignored otherwise.
    pub fn new(kind: Kind, n: usize, factors: Vec<Vec<Letter>>, split: usize) -> Result<Self> {
        let split = if kind.is_double() { split } else { 0 };
        let f = Factorization { kind, n, factors, split };
        f.validate()?;
        Ok(f)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[Vec<Letter>] {
        &self.factors
    }

    pub fn split(&self) -> usize {
        self.split
    }

    /// Factors left of the centre, outermost first.
    pub fn left(&self) -> &[Vec<Letter>] {
        &self.factors[..self.split]
    }

    /// Factors right of the centre (all factors for non-double kinds).
    pub fn right(&self) -> &[Vec<Letter>] {
        &self.factors[self.split..]
    }

    pub fn letter_count(&self) -> usize {
        self.factors.iter().map(Vec::len).sum()
    }

    pub fn flatten(&self) -> HeckeWord {
        let letters = self.factors.iter().flatten().map(|l| l.value).collect();
        HeckeWord::new(letters, self.n).expect("validated letters")
    }

    pub fn permutation(&self) -> Permutation {
        self.flatten().eval()
    }

    fn slots(kind: Kind, n: usize, count: usize, split: usize) -> Vec<Slot> {
        (0..count)
            .map(|idx| match kind {
                Kind::Plain => Slot { rule: Rule::Decreasing, min_value: 1, circles: false },
                Kind::BoundedPlain => Slot { rule: Rule::Decreasing, min_value: idx + 1, circles: false },
                Kind::CircledBounded => Slot { rule: Rule::Decreasing, min_value: idx + 1, circles: true },
                Kind::Hook => Slot { rule: Rule::Hook, min_value: 1, circles: true },
                Kind::DoubleBounded | Kind::DoubleUnbounded => {
                    let bounded = kind == Kind::DoubleBounded;
                    if idx < split {
                        let d = split - idx;
                        Slot { rule: Rule::Increasing, min_value: if bounded { d } else { 1 }, circles: false }
                    } else {
                        let d = idx - split + 1;
                        Slot { rule: Rule::Decreasing, min_value: if bounded { d } else { 1 }, circles: false }
                    }
                }
            })
            .map(|s| Slot { min_value: s.min_value.min(n + 1), ..s })
            .collect()
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFactorization(msg));
        let count = self.factors.len();
        match self.kind {
            Kind::BoundedPlain | Kind::CircledBounded if count != self.n + 1 => {
                return bad(format!("expected {} factors, found {count}", self.n + 1));
            }
            Kind::DoubleBounded if count != 2 * self.n + 2 || self.split != self.n + 1 => {
                return bad(format!("expected {}+{} factors", self.n + 1, self.n + 1));
            }
            Kind::DoubleUnbounded if count != 2 * self.split => {
                return bad("double factorization needs equal halves".into());
            }
            _ => {}
        }
        let slots = Self::slots(self.kind, self.n, count, self.split);
        for (factor, slot) in self.factors.iter().zip(&slots) {
            for l in factor {
                if l.value == 0 || l.value > self.n {
                    return bad(format!("letter {l} outside 1..={}", self.n));
                }
                if l.circled && !slot.circles {
                    return bad(format!("circled letter {l} not allowed"));
                }
                if l.value < slot.min_value {
                    return bad(format!("letter {l} below the factor bound {}", slot.min_value));
                }
            }
            for pair in factor.windows(2) {
                if !compatible(slot.rule, pair[0], pair[1]) {
                    return bad(format!("factor order violated at {}{}", pair[0], pair[1]));
                }
            }
        }
        Ok(())
    }

    pub fn weight(&self) -> WeightPair {
        let count = self.factors.len();
        match self.kind {
            Kind::Plain | Kind::BoundedPlain => WeightPair {
                x: self.factors.iter().map(Vec::len).collect(),
                y: vec![0; count],
            },
            Kind::CircledBounded => {
                let mut x = vec![0; count];
                let mut y = vec![0; count];
                for (k, factor) in self.factors.iter().enumerate() {
                    for l in factor {
                        if l.circled {
                            // ⓙ in factor k (1-based) counts towards y_{j-k+1}
                            y[l.value - k - 1] += 1;
                        } else {
                            x[k] += 1;
                        }
                    }
                }
                WeightPair { x, y }
            }
            Kind::DoubleBounded | Kind::DoubleUnbounded => WeightPair {
                x: self.right().iter().map(Vec::len).collect(),
                y: self.left().iter().rev().map(Vec::len).collect(),
            },
            Kind::Hook => WeightPair {
                x: self.factors.iter().map(|f| f.iter().filter(|l| !l.circled).count()).collect(),
                y: self.factors.iter().map(|f| f.iter().filter(|l| l.circled).count()).collect(),
            },
        }
    }

    fn sort_key(&self) -> (Vec<usize>, Vec<bool>, Vec<usize>) {
        (
            self.factors.iter().flatten().map(|l| l.value).collect(),
            self.factors.iter().flatten().map(|l| l.circled).collect(),
            self.factors.iter().map(Vec::len).collect(),
        )
    }

    fn render(&self, sep: &str, ascii: bool) -> String {
        let mut out = String::new();
        for (i, factor) in self.factors.iter().enumerate() {
            if self.kind.is_double() && i == self.split {
                out.push('|');
            }
            let letters: Vec<String> = factor
                .iter()
                .map(|l| if ascii && l.circled { format!("{}o", l.value) } else { l.to_string() })
                .collect();
            out.push('(');
            out.push_str(&letters.join(sep));
            out.push(')');
        }
        if self.kind.is_double() && self.split == self.factors.len() {
            out.push('|');
        }
        out
    }

    /// Notation without separators inside factors, e.g. `(3③②1①)(③2)`.
    pub fn compact(&self) -> String {
        self.render("", false)
    }

    /// ASCII notation with `o` marking circles, e.g. `(3 3o 2o 1 1o)`.
    pub fn ascii(&self) -> String {
        self.render(" ", true)
    }

    /// Parse any of the notations produced by this type.
    pub fn parse(kind: Kind, n: usize, s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut split = None;
        let mut chars = s.trim().chars().peekable();
        let perr = || Error::Parse(format!("factorization {s:?}"));
        while let Some(c) = chars.next() {
            match c {
                ' ' => {}
                '|' => split = Some(factors.len()),
                '(' => {
                    let mut body = String::new();
                    loop {
                        match chars.next() {
                            Some(')') => break,
                            Some(ch) => body.push(ch),
                            None => return Err(perr()),
                        }
                    }
                    factors.push(parse_letters(&body).ok_or_else(perr)?);
                }
                _ => return Err(perr()),
            }
        }
        if kind.is_double() && split.is_none() {
            return Err(perr());
        }
        Factorization::new(kind, n, factors, split.unwrap_or(0))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.factors
                .iter()
                .map(|f| Value::Array(f.iter().map(|l| json!({"v": l.value, "c": l.circled})).collect()))
                .collect(),
        )
    }

    pub fn from_json(kind: Kind, n: usize, split: usize, value: &Value) -> Result<Self> {
        let perr = || Error::Parse("factorization JSON".into());
        let mut factors = Vec::new();
        for f in value.as_array().ok_or_else(perr)? {
            let mut factor = Vec::new();
            for l in f.as_array().ok_or_else(perr)? {
                let v = l.get("v").and_then(Value::as_u64).ok_or_else(perr)? as usize;
                let c = l.get("c").and_then(Value::as_bool).ok_or_else(perr)?;
                factor.push(Letter { value: v, circled: c });
            }
            factors.push(factor);
        }
        Factorization::new(kind, n, factors, split)
    }
}

fn parse_letters(body: &str) -> Option<Vec<Letter>> {
    let spaced = body.contains(|c: char| c == ' ' || c == ',');
    let tokens: Vec<String> = if spaced {
        body.split([' ', ',']).filter(|t| !t.is_empty()).map(str::to_string).collect()
    } else {
        let mut toks: Vec<String> = Vec::new();
        for c in body.chars() {
            if c == 'o' {
                toks.last_mut()?.push('o');
            } else {
                toks.push(c.to_string());
            }
        }
        toks
    };
    tokens
        .iter()
        .map(|t| {
            let mut cs = t.chars();
            let first = cs.next()?;
            let code = first as u32;
            if (0x2460..=0x2473).contains(&code) && t.chars().count() == 1 {
                return Some(Letter::circled((code - 0x2460 + 1) as usize));
            }
            let (digits, circled) = match t.strip_suffix('o') {
                Some(d) => (d, true),
                None => (t.as_str(), false),
            };
            let v: usize = digits.parse().ok()?;
            (v > 0).then_some(Letter { value: v, circled })
        })
        .collect()
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(" ", false))
    }
}

/// Grow factorizations letter by letter from the right end, pruning with the
/// left weak order test of [`can_reach`].
fn enumerate(
    kind: Kind,
    omega: &Permutation,
    count: usize,
    split: usize,
    max_letters: usize,
) -> Vec<Factorization> {
    let n = omega.n();
    let slots = Factorization::slots(kind, n, count, split);
    let mut out = Vec::new();
    if count == 0 {
        if omega.is_identity() {
            out.push(Factorization { kind, n, factors: Vec::new(), split });
        }
        return out;
    }

    struct Walk<'a> {
        kind: Kind,
        n: usize,
        omega: &'a Permutation,
        slots: Vec<Slot>,
        split: usize,
        max_letters: usize,
        placed: Vec<(usize, Letter)>,
        out: Vec<Factorization>,
    }

    impl Walk<'_> {
        fn emit(&mut self) {
            let mut factors = vec![Vec::new(); self.slots.len()];
            for &(slot, letter) in self.placed.iter().rev() {
                factors[slot].push(letter);
            }
            self.out.push(Factorization { kind: self.kind, n: self.n, factors, split: self.split });
        }

        fn go(&mut self, sigma: &Permutation, slot: usize, last: Option<Letter>) {
            if sigma == self.omega {
                self.emit();
            }
            if self.placed.len() == self.max_letters {
                return;
            }
            let budget = self.max_letters - self.placed.len() - 1;
            for s in (0..=slot).rev() {
                let spec = self.slots[s];
                for value in spec.min_value..=self.n {
                    let mut next = sigma.clone();
                    next.hecke_apply_in_place(value);
                    if !can_reach(&next, self.omega, budget) {
                        continue;
                    }
                    for circled in [false, true] {
                        if circled && !spec.circles {
                            continue;
                        }
                        let letter = Letter { value, circled };
                        if s == slot {
                            if let Some(right) = last {
                                if !compatible(spec.rule, letter, right) {
                                    continue;
                                }
                            }
                        }
                        self.placed.push((s, letter));
                        self.go(&next, s, Some(letter));
                        self.placed.pop();
                    }
                }
            }
        }
    }

    let start = Permutation::identity(omega.size());
    if !can_reach(&start, omega, max_letters) {
        return out;
    }
    let mut walk = Walk { kind, n, omega, slots, split, max_letters, placed: Vec::new(), out: Vec::new() };
    walk.go(&start, count - 1, None);
    out = walk.out;
    out.sort_by_cached_key(Factorization::sort_key);
    out
}

/// Largest possible letter count of a bounded factorization for `S_{n+1}`.
pub fn bounded_letter_cap(kind: Kind, n: usize) -> usize {
    match kind {
        Kind::BoundedPlain => n * (n + 1) / 2,
        Kind::CircledBounded | Kind::DoubleBounded => n * (n + 1),
        _ => panic!("{kind:?} is unbounded; pass an explicit letter budget"),
    }
}

pub fn enumerate_bounded_plain(omega: &Permutation, max_letters: usize) -> Vec<Factorization> {
    enumerate(Kind::BoundedPlain, omega, omega.n() + 1, 0, max_letters)
}

pub fn enumerate_circled_bounded(omega: &Permutation, max_letters: usize) -> Vec<Factorization> {
    enumerate(Kind::CircledBounded, omega, omega.n() + 1, 0, max_letters)
}

pub fn enumerate_double_bounded(omega: &Permutation, max_letters: usize) -> Vec<Factorization> {
    let half = omega.n() + 1;
    enumerate(Kind::DoubleBounded, omega, 2 * half, half, max_letters)
}

pub fn enumerate_double_unbounded(omega: &Permutation, half_parts: usize, max_letters: usize) -> Vec<Factorization> {
    enumerate(Kind::DoubleUnbounded, omega, 2 * half_parts, half_parts, max_letters)
}

pub fn enumerate_plain_unbounded(omega: &Permutation, parts: usize, max_letters: usize) -> Vec<Factorization> {
    enumerate(Kind::Plain, omega, parts, 0, max_letters)
}

pub fn enumerate_hook(omega: &Permutation, parts: usize, max_letters: usize) -> Vec<Factorization> {
    enumerate(Kind::Hook, omega, parts, 0, max_letters)
}

/// `Σ x^{wt_x} y^{wt_y}` over the set, in `m` variables per family.
pub fn genfun(set: &[Factorization], m: usize) -> Result<Polynomial> {
    let mut counts: BTreeMap<(Vec<usize>, Vec<usize>), u64> = BTreeMap::new();
    if let Some(first) = set.first() {
        if set.iter().any(|f| f.kind != first.kind || f.n != first.n) {
            return Err(Error::MixedKinds);
        }
    }
    for f in set {
        let w = f.weight();
        *counts.entry((w.x, w.y)).or_default() += 1;
    }
    let mut out = Polynomial::zero(m);
    for ((x, y), c) in counts {
        out += &Polynomial::monomial(m, &x, &y, c)?;
    }
    Ok(out)
}

/// All pairs `(u, v)` whose Demazure product is `omega`.
pub fn enumerate_x(omega: &Permutation) -> Vec<(Permutation, Permutation)> {
    let perms = Permutation::all(omega.size());
    let mut out = Vec::new();
    for u in &perms {
        for v in &perms {
            if demazure_product(u, v) == *omega {
                out.push((u.clone(), v.clone()));
            }
        }
    }
    out
}

/// `Σ_{(u,v)} 𝔊_{u⁻¹}(y) 𝔊_v(x)`.
pub fn cauchy_sum(omega: &Permutation) -> Polynomial {
    let mut cache: BTreeMap<Permutation, Polynomial> = BTreeMap::new();
    let mut single = |p: &Permutation| cache.entry(p.clone()).or_insert_with(|| grothendieck_single(p)).clone();
    let mut out = Polynomial::zero(omega.size());
    for (u, v) in enumerate_x(omega) {
        let gy = single(&u.inverse()).swap_families();
        let gx = single(&v);
        out += &(&gy * &gx);
    }
    out
}
