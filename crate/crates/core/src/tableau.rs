//! Partitions, skew shapes and the tableau families: set-valued, primed
//! set-valued, primed set-multiset, primed, over flagged and Hecke tableaux.
//!
//! Conventions:
//! * set-valued rows are strict (`max b < min b'`), columns weak (`max b ≤ min b'`);
//! * primed set-valued tableaux use the order `1' < 2' < ⋯ < 1 < 2 < ⋯`;
//! * primed set-multiset and primed tableaux use `1' < 1 < 2' < 2 < ⋯`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::factorization::WeightPair;
use crate::perm::{HeckeWord, Permutation};
use crate::poly::Polynomial;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().enumerate().all(|(i, &p)| p <= self.part(i))
    }

    /// All partitions of `k`, largest first in lexicographic order.
    pub fn all_of(k: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(k, k, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &Partition, row: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if row == outer.len() {
                return;
            }
            for p in 1..=max.min(outer.part(row)) {
                cur.push(p);
                go(outer, row + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(self, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }

    /// `ρ ⋖ self`: `ρ ⊆ self` and `self/ρ` has no two boxes in a row or column.
    pub fn is_covered_by_strip(&self, rho: &Partition) -> bool {
        if !self.contains(rho) {
            return false;
        }
        let rows_ok = (0..self.len()).all(|i| self.part(i) - rho.part(i) <= 1);
        let (a, b) = (self.conjugate(), rho.conjugate());
        let cols_ok = (0..a.len()).all(|i| a.part(i) - b.part(i) <= 1);
        rows_ok && cols_ok
    }
}

impl Ord for Partition {
    // by size, then lexicographically descending
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("weakly decreasing parts")
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidTableau(format!("{inner} is not inside {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        c >= self.inner.part(r) && c < self.outer.part(r)
    }

    /// Cells in row-major order, as `(row, column)` with 0-based indices.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .flat_map(|r| (self.inner.part(r)..self.outer.part(r)).map(move |c| (r, c)))
            .collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Entry {
    pub value: usize,
    pub primed: bool,
}

impl Entry {
    pub fn plain(value: usize) -> Self {
        Entry { value, primed: false }
    }

    pub fn primed(value: usize) -> Self {
        Entry { value, primed: true }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.primed { "'" } else { "" })
    }
}

/// Order on primed letters, chosen per tableau family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Alphabet {
    /// `1' < 2' < ⋯ < 1 < 2 < ⋯`
    PrimesFirst,
    /// `1' < 1 < 2' < 2 < ⋯`
    Interleaved,
}

impl Alphabet {
    pub fn key(self, e: Entry) -> (usize, usize) {
        match self {
            Alphabet::PrimesFirst => (usize::from(!e.primed), e.value),
            Alphabet::Interleaved => (2 * e.value - usize::from(e.primed), 0),
        }
    }
}

type Cell = Vec<Entry>;

fn canonical(mut b: Cell) -> Cell {
    b.sort_by_key(|&e| Alphabet::Interleaved.key(e));
    b
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<Cell>>,
}

impl Tableau {
    /// `rows[r]` lists the boxes of row `r` from column `inner[r]` onwards.
    pub fn new(shape: SkewShape, rows: Vec<Vec<Vec<Entry>>>) -> Result<Self> {
        if rows.len() != shape.outer.len() {
            return Err(Error::InvalidTableau("row count does not match the shape".into()));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.outer.part(r) - shape.inner.part(r) {
                return Err(Error::InvalidTableau(format!("row {} has the wrong length", r + 1)));
            }
            if row.iter().any(Vec::is_empty) {
                return Err(Error::InvalidTableau("empty box".into()));
            }
        }
        let rows = rows.into_iter().map(|row| row.into_iter().map(canonical).collect()).collect();
        Ok(Tableau { shape, rows })
    }

    pub fn empty() -> Self {
        Tableau { shape: SkewShape::straight(Partition::empty()), rows: Vec::new() }
    }

    /// Straight-shape tableau from box contents.
    pub fn from_rows(rows: Vec<Vec<Vec<Entry>>>) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(Vec::len).collect())?;
        if outer.len() != rows.len() {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        Tableau::new(SkewShape::straight(outer), rows)
    }

    /// Straight-shape tableau with one unprimed entry per box.
    pub fn from_values(rows: &[Vec<usize>]) -> Result<Self> {
        Tableau::from_rows(rows.iter().map(|r| r.iter().map(|&v| vec![Entry::plain(v)]).collect()).collect())
    }

    /// Boxes written like `1'2`, e.g. `parse(&[&["1'2'", "2'3'", "123"], &["3'1"]])`.
    /// Multi-digit entries need commas: `"10,3'"`.
    pub fn parse(rows: &[&[&str]]) -> Result<Self> {
        let parsed: Result<Vec<Vec<Cell>>> =
            rows.iter().map(|r| r.iter().map(|b| parse_box(b)).collect()).collect();
        Tableau::from_rows(parsed?)
    }

    pub fn parse_skew(inner: Partition, rows: &[&[&str]]) -> Result<Self> {
        let parsed: Vec<Vec<Cell>> =
            rows.iter().map(|r| r.iter().map(|b| parse_box(b)).collect::<Result<_>>()).collect::<Result<_>>()?;
        let outer = Partition::new(parsed.iter().enumerate().map(|(r, row)| inner.part(r) + row.len()).collect())?;
        Tableau::new(SkewShape::new(outer, inner)?, parsed)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Vec<Entry>>] {
        &self.rows
    }

    /// Box at absolute position `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> Option<&[Entry]> {
        if !self.shape.contains_cell(r, c) {
            return None;
        }
        Some(&self.rows[r][c - self.shape.inner.part(r)])
    }

    pub fn entries(&self) -> impl Iterator<Item = &Entry> {
        self.rows.iter().flatten().flatten()
    }

    pub fn entry_count(&self) -> usize {
        self.entries().count()
    }

    /// Single unprimed values of a tableau with one entry per box.
    pub fn values(&self) -> Option<Vec<Vec<usize>>> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|b| if b.len() == 1 && !b[0].primed { Some(b[0].value) } else { None })
                    .collect()
            })
            .collect()
    }

    pub fn transpose(&self) -> Result<Tableau> {
        if !self.shape.is_straight() {
            return Err(Error::InvalidTableau("transpose of a skew tableau".into()));
        }
        let conj = self.shape.outer.conjugate();
        let rows = (0..conj.len())
            .map(|c| (0..conj.part(c)).map(|r| self.rows[r][c].clone()).collect())
            .collect();
        Tableau::new(SkewShape::straight(conj), rows)
    }

    /// Mark every entry primed.
    pub fn primed(&self) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|b| b.iter().map(|e| Entry::primed(e.value)).collect()).collect())
            .collect();
        Tableau { shape: self.shape.clone(), rows }
    }

    /// Row reading word: rows left to right, bottom row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().flatten().map(|e| e.value).collect()
    }

    /// Column reading word: columns bottom to top, left column first.
    pub fn column_reading_word(&self) -> Vec<usize> {
        let width = self.shape.outer.part(0);
        let mut out = Vec::new();
        for c in 0..width {
            for r in (0..self.shape.outer.len()).rev() {
                if let Some(b) = self.get(r, c) {
                    out.extend(b.iter().map(|e| e.value));
                }
            }
        }
        out
    }

    fn neighbours(&self) -> Vec<(&[Entry], &[Entry], bool)> {
        // (first, second, horizontal)
        let mut out = Vec::new();
        for (r, c) in self.shape.cells() {
            let b = self.get(r, c).unwrap();
            if let Some(right) = self.get(r, c + 1) {
                out.push((b, right, true));
            }
            if let Some(below) = self.get(r + 1, c) {
                out.push((b, below, false));
            }
        }
        out
    }

    fn has_primes(&self) -> bool {
        self.entries().any(|e| e.primed)
    }

    fn boxes_are_sets(&self) -> bool {
        self.rows.iter().flatten().all(|b| b.windows(2).all(|w| w[0] != w[1]))
    }

    fn weakly_ordered(&self, alphabet: Alphabet) -> bool {
        self.neighbours().iter().all(|(a, b, _)| max_key(a, alphabet) <= min_key(b, alphabet))
    }

    /// Whether a letter occurs in two boxes of one row (`horizontal`) or column.
    fn repeats(&self, letter: impl Fn(&Entry) -> bool, horizontal: bool) -> bool {
        let mut seen: HashMap<(usize, Entry), usize> = HashMap::new();
        for (r, c) in self.shape.cells() {
            let line = if horizontal { r } else { c };
            let b = self.get(r, c).unwrap();
            let mut distinct: Vec<Entry> = b.iter().copied().filter(|e| letter(e)).collect();
            distinct.dedup();
            for e in distinct {
                *seen.entry((line, e)).or_default() += 1;
            }
        }
        seen.values().any(|&k| k > 1)
    }

    pub fn weight(&self) -> WeightPair {
        let max = self.entries().map(|e| e.value).max().unwrap_or(0);
        let mut w = WeightPair { x: vec![0; max], y: vec![0; max] };
        for e in self.entries() {
            if e.primed {
                w.y[e.value - 1] += 1;
            } else {
                w.x[e.value - 1] += 1;
            }
        }
        w
    }

    pub fn to_json(&self) -> Value {
        let boxes: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Array(
                    row.iter()
                        .map(|b| Value::Array(b.iter().map(|e| Value::String(e.to_string())).collect()))
                        .collect(),
                )
            })
            .collect();
        json!({ "outer": self.shape.outer.parts(), "inner": self.shape.inner.parts(), "boxes": boxes })
    }

    pub fn from_json(value: &Value) -> Result<Tableau> {
        let perr = || Error::Parse("tableau JSON".into());
        let parts = |key: &str| -> Result<Partition> {
            let arr = value.get(key).and_then(Value::as_array).ok_or_else(perr)?;
            let v: Option<Vec<usize>> = arr.iter().map(|p| p.as_u64().map(|p| p as usize)).collect();
            Partition::new(v.ok_or_else(perr)?)
        };
        let shape = SkewShape::new(parts("outer")?, parts("inner")?)?;
        let mut rows = Vec::new();
        for row in value.get("boxes").and_then(Value::as_array).ok_or_else(perr)? {
            let mut cells = Vec::new();
            for b in row.as_array().ok_or_else(perr)? {
                let mut cell = Vec::new();
                for e in b.as_array().ok_or_else(perr)? {
                    cell.extend(parse_box(e.as_str().ok_or_else(perr)?)?);
                }
                cells.push(cell);
            }
            rows.push(cells);
        }
        Tableau::new(shape, rows)
    }
}

fn parse_box(s: &str) -> Result<Cell> {
    let perr = || Error::Parse(format!("box {s:?}"));
    let mut out = Vec::new();
    if s.contains(',') {
        for tok in s.split(',') {
            let tok = tok.trim();
            let (digits, primed) = match tok.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (tok, false),
            };
            out.push(Entry { value: digits.parse().map_err(|_| perr())?, primed });
        }
    } else {
        for ch in s.chars() {
            match ch {
                '\'' => out.last_mut().ok_or_else(perr)?.primed = true,
                d => out.push(Entry::plain(d.to_digit(10).ok_or_else(perr)? as usize)),
            }
        }
    }
    if out.is_empty() || out.iter().any(|e| e.value == 0) {
        return Err(perr());
    }
    Ok(out)
}

fn max_key(b: &[Entry], alphabet: Alphabet) -> (usize, usize) {
    b.iter().map(|&e| alphabet.key(e)).max().unwrap()
}

fn min_key(b: &[Entry], alphabet: Alphabet) -> (usize, usize) {
    b.iter().map(|&e| alphabet.key(e)).min().unwrap()
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |b: &[Entry]| b.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(if b.iter().any(|e| e.value > 9) { "," } else { "" });
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|b| render(b).chars().count())
            .max()
            .unwrap_or(1);
        for r in 0..self.shape.outer.len() {
            let mut line = Vec::new();
            for c in 0..self.shape.outer.part(r) {
                let text = match self.get(r, c) {
                    Some(b) => render(b),
                    None => "*".to_string(),
                };
                line.push(format!("{text:<width$}"));
            }
            writeln!(f, "{}", line.join(" ").trim_end())?;
        }
        Ok(())
    }
}

/// Standard set-valued: labels `1..=N` each once, strictly increasing along
/// rows and columns box to box.
pub fn is_standard_svt(t: &Tableau) -> bool {
    if t.has_primes() {
        return false;
    }
    let mut vals: Vec<usize> = t.entries().map(|e| e.value).collect();
    vals.sort_unstable();
    if vals.iter().enumerate().any(|(i, &v)| v != i + 1) {
        return false;
    }
    t.neighbours().iter().all(|(a, b, _)| max_key(a, Alphabet::Interleaved) < min_key(b, Alphabet::Interleaved))
}

pub fn is_svt(t: &Tableau) -> bool {
    if t.has_primes() || !t.boxes_are_sets() {
        return false;
    }
    t.neighbours().iter().all(|(a, b, horizontal)| {
        let (hi, lo) = (max_key(a, Alphabet::Interleaved), min_key(b, Alphabet::Interleaved));
        if *horizontal {
            hi < lo
        } else {
            hi <= lo
        }
    })
}

pub fn is_psvt(t: &Tableau) -> bool {
    t.boxes_are_sets()
        && t.weakly_ordered(Alphabet::PrimesFirst)
        && !t.repeats(|e| !e.primed, true)
        && !t.repeats(|e| e.primed, false)
}

pub fn is_psmt(t: &Tableau) -> bool {
    let one_prime_each = t.rows.iter().flatten().all(|b| {
        let primes: Vec<&Entry> = b.iter().filter(|e| e.primed).collect();
        primes.windows(2).all(|w| w[0] != w[1])
    });
    one_prime_each
        && t.weakly_ordered(Alphabet::Interleaved)
        && !t.repeats(|e| !e.primed, false)
        && !t.repeats(|e| e.primed, true)
}

pub fn is_pt(t: &Tableau) -> bool {
    t.rows.iter().flatten().all(|b| b.len() == 1) && is_psmt(t)
}

/// Over flagged tableau of shape `outer/inner`.
pub fn is_oft(t: &Tableau, inner: &Partition) -> bool {
    if t.shape.inner != *inner || t.shape.outer.len() != inner.len() {
        return false;
    }
    let Some(values) = t.values() else { return false };
    for (r, row) in values.iter().enumerate() {
        if row.iter().any(|&v| v < 1 || v > inner.part(r)) {
            return false;
        }
        if row.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
    }
    t.shape.cells().iter().all(|&(r, c)| match t.get(r + 1, c) {
        Some(below) => t.get(r, c).unwrap()[0].value > below[0].value,
        None => true,
    })
}

pub fn is_hecke_tableau(t: &Tableau, omega: &Permutation) -> bool {
    if !t.shape.is_straight() {
        return false;
    }
    let Some(values) = t.values() else { return false };
    let n = omega.n();
    if values.iter().flatten().any(|&v| v < 1 || v > n) {
        return false;
    }
    let strict = t.neighbours().iter().all(|(a, b, _)| a[0].value < b[0].value);
    strict
        && HeckeWord::new(t.reading_word(), n).map(|w| w.eval() == *omega).unwrap_or(false)
}

/// All Hecke tableaux for `omega` with at most `max_boxes` boxes.
pub fn enumerate_hecke_tableaux(omega: &Permutation, max_boxes: usize) -> Vec<Tableau> {
    let n = omega.n();
    let mut out = Vec::new();
    // strictly increasing rows, each strictly above the previous one column-wise
    fn rows_below(prev: Option<&[usize]>, n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let max_len = prev.map_or(n, |p| p.len());
        fn go(prev: Option<&[usize]>, n: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            if cur.len() == max_len {
                return;
            }
            let lo = cur.last().map_or(1, |&v| v + 1);
            let above = prev.map_or(0, |p| p[cur.len()]);
            for v in lo.max(above + 1)..=n {
                cur.push(v);
                go(prev, n, max_len, cur, out);
                cur.pop();
            }
        }
        go(prev, n, max_len, &mut Vec::new(), &mut out);
        out
    }
    fn go(
        omega: &Permutation,
        n: usize,
        budget: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        let t = Tableau::from_values(rows).unwrap();
        if HeckeWord::new(t.reading_word(), n).unwrap().eval() == *omega {
            out.push(t);
        }
        let candidates = rows_below(rows.last().map(|r| r.as_slice()), n);
        for row in candidates {
            if row.len() <= budget {
                let len = row.len();
                rows.push(row);
                go(omega, n, budget - len, rows, out);
                rows.pop();
            }
        }
    }
    go(omega, n, max_boxes, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| {
        a.shape.outer.cmp(&b.shape.outer).then_with(|| a.values().cmp(&b.values()))
    });
    out
}

/// `H_ω^ρ`: number of Hecke tableaux of each shape.
pub fn hecke_tableau_counts(omega: &Permutation) -> BTreeMap<Partition, u64> {
    let n = omega.n();
    let mut out = BTreeMap::new();
    for t in enumerate_hecke_tableaux(omega, n * n) {
        *out.entry(t.shape.outer.clone()).or_default() += 1;
    }
    out
}

/// Box contents allowed in a filling, plus the adjacency test.
struct Filling<'a> {
    shape: &'a SkewShape,
    candidates: Vec<Cell>,
    fits_right: fn(&[Entry], &[Entry]) -> bool,
    fits_below: fn(&[Entry], &[Entry]) -> bool,
    max_entries: usize,
}

impl Filling<'_> {
    fn run(&self, visit: &mut dyn FnMut(&[(usize, usize)], &[usize])) {
        let cells = self.shape.cells();
        let mut choice = vec![usize::MAX; cells.len()];
        let index: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        self.go(&cells, &index, 0, 0, &mut choice, visit);
    }

    fn go(
        &self,
        cells: &[(usize, usize)],
        index: &HashMap<(usize, usize), usize>,
        k: usize,
        used: usize,
        choice: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[(usize, usize)], &[usize]),
    ) {
        if k == cells.len() {
            visit(cells, choice);
            return;
        }
        let (r, c) = cells[k];
        let left = (c > 0).then(|| index.get(&(r, c - 1))).flatten().map(|&i| &self.candidates[choice[i]]);
        let up = (r > 0).then(|| index.get(&(r - 1, c))).flatten().map(|&i| &self.candidates[choice[i]]);
        let remaining = cells.len() - k - 1;
        for (ci, cand) in self.candidates.iter().enumerate() {
            if used + cand.len() + remaining > self.max_entries {
                continue;
            }
            if let Some(l) = left {
                if !(self.fits_right)(l, cand) {
                    continue;
                }
            }
            if let Some(u) = up {
                if !(self.fits_below)(u, cand) {
                    continue;
                }
            }
            choice[k] = ci;
            self.go(cells, index, k + 1, used + cand.len(), choice, visit);
        }
        choice[k] = usize::MAX;
    }

    fn tableaux(&self) -> Vec<Tableau> {
        let mut out = Vec::new();
        self.run(&mut |cells, choice| {
            let mut rows: Vec<Vec<Cell>> = vec![Vec::new(); self.shape.outer.len()];
            for (k, &(r, _)) in cells.iter().enumerate() {
                rows[r].push(self.candidates[choice[k]].clone());
            }
            out.push(Tableau::new(self.shape.clone(), rows).unwrap());
        });
        out
    }

    fn genfun(&self, m: usize) -> Polynomial {
        let mut counts: HashMap<Vec<usize>, u64> = HashMap::new();
        let weights: Vec<Vec<usize>> = self
            .candidates
            .iter()
            .map(|b| {
                let mut w = vec![0; 2 * m];
                for e in b {
                    w[if e.primed { m + e.value - 1 } else { e.value - 1 }] += 1;
                }
                w
            })
            .collect();
        self.run(&mut |_, choice| {
            let mut w = vec![0; 2 * m];
            for &ci in choice {
                for (a, b) in w.iter_mut().zip(&weights[ci]) {
                    *a += b;
                }
            }
            *counts.entry(w).or_default() += 1;
        });
        let mut out = Polynomial::zero(m);
        for (w, c) in counts {
            out += &Polynomial::monomial(m, &w[..m], &w[m..], c).unwrap();
        }
        out
    }
}

fn subsets(letters: &[Entry], max_size: usize) -> Vec<Cell> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << letters.len()) {
        if mask.count_ones() as usize <= max_size {
            out.push(canonical((0..letters.len()).filter(|i| mask >> i & 1 == 1).map(|i| letters[i]).collect()));
        }
    }
    out
}

fn svt_right(a: &[Entry], b: &[Entry]) -> bool {
    max_key(a, Alphabet::Interleaved) < min_key(b, Alphabet::Interleaved)
}

fn svt_below(a: &[Entry], b: &[Entry]) -> bool {
    max_key(a, Alphabet::Interleaved) <= min_key(b, Alphabet::Interleaved)
}

// the boundary letter may be shared only if it is primed along a row
// (primed set-valued) or unprimed down a column
fn psvt_right(a: &[Entry], b: &[Entry]) -> bool {
    let (hi, lo) = (max_key(a, Alphabet::PrimesFirst), min_key(b, Alphabet::PrimesFirst));
    hi < lo || (hi == lo && hi.0 == 0)
}

fn psvt_below(a: &[Entry], b: &[Entry]) -> bool {
    let (hi, lo) = (max_key(a, Alphabet::PrimesFirst), min_key(b, Alphabet::PrimesFirst));
    hi < lo || (hi == lo && hi.0 == 1)
}

fn psmt_right(a: &[Entry], b: &[Entry]) -> bool {
    let (hi, lo) = (max_key(a, Alphabet::Interleaved), min_key(b, Alphabet::Interleaved));
    hi < lo || (hi == lo && hi.0 % 2 == 0)
}

fn psmt_below(a: &[Entry], b: &[Entry]) -> bool {
    let (hi, lo) = (max_key(a, Alphabet::Interleaved), min_key(b, Alphabet::Interleaved));
    hi < lo || (hi == lo && hi.0 % 2 == 1)
}

fn svt_filling(shape: &SkewShape, m: usize, d: usize) -> Filling<'_> {
    let letters: Vec<Entry> = (1..=m).map(Entry::plain).collect();
    Filling { shape, candidates: subsets(&letters, d), fits_right: svt_right, fits_below: svt_below, max_entries: d }
}

fn psvt_filling(shape: &SkewShape, m: usize, d: usize) -> Filling<'_> {
    let letters: Vec<Entry> = (1..=m).map(Entry::primed).chain((1..=m).map(Entry::plain)).collect();
    Filling { shape, candidates: subsets(&letters, d), fits_right: psvt_right, fits_below: psvt_below, max_entries: d }
}

fn psmt_filling(shape: &SkewShape, m: usize, d: usize) -> Filling<'_> {
    let primes: Vec<Entry> = (1..=m).map(Entry::primed).collect();
    let mut candidates = Vec::new();
    let mut prime_sets = subsets(&primes, d);
    prime_sets.push(Vec::new());
    // unprimed multisets as exponent vectors
    fn multisets(m: usize, max: usize, start: usize, cur: &mut Vec<Entry>, out: &mut Vec<Cell>) {
        out.push(cur.clone());
        if cur.len() == max {
            return;
        }
        for v in start..=m {
            cur.push(Entry::plain(v));
            multisets(m, max, v, cur, out);
            cur.pop();
        }
    }
    let mut plain = Vec::new();
    multisets(m, d, 1, &mut Vec::new(), &mut plain);
    for p in &prime_sets {
        for u in &plain {
            if !p.is_empty() || !u.is_empty() {
                if p.len() + u.len() <= d {
                    candidates.push(canonical(p.iter().chain(u).copied().collect()));
                }
            }
        }
    }
    Filling { shape, candidates, fits_right: psmt_right, fits_below: psmt_below, max_entries: d }
}

fn pt_filling(shape: &SkewShape, m: usize) -> Filling<'_> {
    let candidates = (1..=m).flat_map(|v| [vec![Entry::primed(v)], vec![Entry::plain(v)]]).collect();
    Filling { shape, candidates, fits_right: psmt_right, fits_below: psmt_below, max_entries: usize::MAX }
}

pub fn enumerate_svt(shape: &SkewShape, m: usize, d: usize) -> Vec<Tableau> {
    svt_filling(shape, m, d).tableaux()
}

pub fn enumerate_psvt(shape: &Partition, m: usize, d: usize) -> Vec<Tableau> {
    psvt_filling(&SkewShape::straight(shape.clone()), m, d).tableaux()
}

pub fn enumerate_psmt(shape: &Partition, m: usize, d: usize) -> Vec<Tableau> {
    psmt_filling(&SkewShape::straight(shape.clone()), m, d).tableaux()
}

pub fn enumerate_pt(shape: &Partition, m: usize) -> Vec<Tableau> {
    pt_filling(&SkewShape::straight(shape.clone()), m).tableaux()
}

/// `G_{λ/μ}` in `m` x-variables, up to total degree `d`.
pub fn genfun_svt(shape: &SkewShape, m: usize, d: usize) -> Polynomial {
    svt_filling(shape, m, d).genfun(m)
}

pub fn genfun_psvt(shape: &Partition, m: usize, d: usize) -> Polynomial {
    psvt_filling(&SkewShape::straight(shape.clone()), m, d).genfun(m)
}

pub fn genfun_psmt(shape: &Partition, m: usize, d: usize) -> Polynomial {
    psmt_filling(&SkewShape::straight(shape.clone()), m, d).genfun(m)
}

/// `R_λ` in `m` variables per family.
pub fn genfun_pt(shape: &Partition, m: usize) -> Polynomial {
    pt_filling(&SkewShape::straight(shape.clone()), m).genfun(m)
}

fn ssyt_right(a: &[Entry], b: &[Entry]) -> bool {
    a[0].value <= b[0].value
}

fn ssyt_below(a: &[Entry], b: &[Entry]) -> bool {
    a[0].value < b[0].value
}

/// Schur polynomial `s_λ(x_1..x_m)` from semistandard tableaux.
pub fn schur_polynomial(lambda: &Partition, m: usize) -> Polynomial {
    let shape = SkewShape::straight(lambda.clone());
    let candidates = (1..=m).map(|v| vec![Entry::plain(v)]).collect();
    Filling { shape: &shape, candidates, fits_right: ssyt_right, fits_below: ssyt_below, max_entries: usize::MAX }
        .genfun(m)
}

/// Over flagged tableaux of shape `mu/rho`.
pub fn enumerate_oft(mu: &Partition, rho: &Partition) -> Vec<Tableau> {
    if !mu.contains(rho) || mu.len() != rho.len() {
        return Vec::new();
    }
    let shape = SkewShape::new(mu.clone(), rho.clone()).unwrap();
    let cells = shape.cells();
    let mut out = Vec::new();
    fn go(shape: &SkewShape, cells: &[(usize, usize)], k: usize, vals: &mut HashMap<(usize, usize), usize>, out: &mut Vec<Tableau>) {
        if k == cells.len() {
            let rows = (0..shape.outer().len())
                .map(|r| {
                    (shape.inner().part(r)..shape.outer().part(r)).map(|c| vec![Entry::plain(vals[&(r, c)])]).collect()
                })
                .collect();
            out.push(Tableau::new(shape.clone(), rows).unwrap());
            return;
        }
        let (r, c) = cells[k];
        let mut hi = shape.inner().part(r);
        if let Some(&l) = c.checked_sub(1).and_then(|c1| vals.get(&(r, c1))) {
            hi = hi.min(l);
        }
        if let Some(&u) = r.checked_sub(1).and_then(|r1| vals.get(&(r1, c))) {
            hi = hi.min(u.saturating_sub(1));
        }
        for v in 1..=hi {
            vals.insert((r, c), v);
            go(shape, cells, k + 1, vals, out);
        }
        vals.remove(&(r, c));
    }
    go(&shape, &cells, 0, &mut HashMap::new(), &mut out);
    out
}

/// `K_ρ^μ`.
pub fn oft_count(mu: &Partition, rho: &Partition) -> u64 {
    enumerate_oft(mu, rho).len() as u64
}

/// Number of standard set-valued tableaux of shape `lambda` using labels `1..=n`.
pub fn count_standard_svt(lambda: &Partition, n: usize) -> u64 {
    // labels are placed in increasing order; the filled region stays a partition
    fn go(lambda: &Partition, filled: Vec<usize>, left: usize, memo: &mut HashMap<(Vec<usize>, usize), u64>) -> u64 {
        if left == 0 {
            return u64::from(filled.iter().sum::<usize>() == lambda.size());
        }
        if let Some(&v) = memo.get(&(filled.clone(), left)) {
            return v;
        }
        let mut total = 0;
        for r in 0..lambda.len() {
            let len = filled[r];
            // join an existing corner box
            if len > 0 && (r + 1 == lambda.len() || filled[r + 1] < len) {
                total += go(lambda, filled.clone(), left - 1, memo);
            }
            // open a new box
            if len < lambda.part(r) && (r == 0 || filled[r - 1] > len) {
                let mut next = filled.clone();
                next[r] += 1;
                total += go(lambda, next, left - 1, memo);
            }
        }
        memo.insert((filled, left), total);
        total
    }
    if lambda.is_empty() {
        return u64::from(n == 0);
    }
    go(lambda, vec![0; lambda.len()], n, &mut HashMap::new())
}

/// Schur `Q_λ` in `m` variables from marked shifted tableaux, up to degree `d`.
pub fn q_schur(lambda: &Partition, m: usize, d: usize) -> Result<Polynomial> {
    if !lambda.is_strict() {
        return Err(Error::NotStrict(lambda.parts().to_vec()));
    }
    if lambda.size() > d {
        return Ok(Polynomial::zero(m));
    }
    // shifted cells: row r occupies columns r..r+λ_r
    let cells: Vec<(usize, usize)> =
        (0..lambda.len()).flat_map(|r| (r..r + lambda.part(r)).map(move |c| (r, c))).collect();
    let mut counts: HashMap<Vec<usize>, u64> = HashMap::new();
    let mut vals: HashMap<(usize, usize), usize> = HashMap::new();
    fn go(
        cells: &[(usize, usize)],
        k: usize,
        m: usize,
        vals: &mut HashMap<(usize, usize), usize>,
        counts: &mut HashMap<Vec<usize>, u64>,
    ) {
        if k == cells.len() {
            let mut w = vec![0; m];
            for &key in vals.values() {
                w[(key + 1) / 2 - 1] += 1;
            }
            *counts.entry(w).or_default() += 1;
            return;
        }
        let (r, c) = cells[k];
        // keys: 2v-1 for v', 2v for v
        for key in 1..=2 * m {
            if let Some(&l) = c.checked_sub(1).and_then(|c1| vals.get(&(r, c1))) {
                if key < l || (key == l && key % 2 == 1) {
                    continue;
                }
            }
            if let Some(&u) = r.checked_sub(1).and_then(|r1| vals.get(&(r1, c))) {
                if key < u || (key == u && key % 2 == 0) {
                    continue;
                }
            }
            vals.insert((r, c), key);
            go(cells, k + 1, m, vals, counts);
            vals.remove(&(r, c));
        }
    }
    go(&cells, 0, m, &mut vals, &mut counts);
    let mut out = Polynomial::zero(m);
    for (w, c) in counts {
        out += &Polynomial::monomial(m, &w, &[], c)?;
    }
    Ok(out)
}

fn require_pt(t: &Tableau) -> Result<()> {
    if !is_pt(t) {
        return Err(Error::InvalidTableau("expected a primed tableau".into()));
    }
    Ok(())
}

/// Scanning rows left to right from the bottom row up, the first `i` or `i'`
/// met is unprimed (or there is none).
pub fn has_i_starting(t: &Tableau, i: usize) -> Result<bool> {
    require_pt(t)?;
    for row in t.rows.iter().rev() {
        for b in row {
            let e = b[0];
            if e.value == i {
                return Ok(!e.primed);
            }
        }
    }
    Ok(true)
}

/// The two-pass tally scan. For `i = 1` there are no `0` letters and the
/// property holds trivially.
pub fn has_i_lattice(t: &Tableau, i: usize) -> Result<bool> {
    require_pt(t)?;
    if i < 2 {
        return Ok(true);
    }
    let (mut above, mut below) = (0usize, 0usize);
    for row in &t.rows {
        for b in row.iter().rev() {
            let e = b[0];
            if !e.primed && e.value == i {
                above += 1;
            } else if !e.primed && e.value == i - 1 {
                below += 1;
            }
            if above > below || (above == below && e.primed && e.value == i) {
                return Ok(false);
            }
        }
    }
    for row in t.rows.iter().rev() {
        for b in row {
            let e = b[0];
            if e.primed && e.value == i {
                above += 1;
            } else if e.primed && e.value == i - 1 {
                below += 1;
            }
            if above > below || (above == below && !e.primed && e.value == i - 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `F_μ^λ` for every `λ`, with entries capped at `cap`.
pub fn f_coefficients_with_cap(mu: &Partition, cap: usize) -> Result<BTreeMap<Partition, u64>> {
    let mut out = BTreeMap::new();
    for t in enumerate_pt(mu, cap) {
        let mut good = true;
        for i in 1..=cap {
            if !has_i_starting(&t, i)? || !has_i_lattice(&t, i)? {
                good = false;
                break;
            }
        }
        if !good {
            continue;
        }
        let w = t.weight();
        let total: Vec<usize> = w.x.iter().zip(&w.y).map(|(a, b)| a + b).collect();
        let lambda = Partition::new(total.clone()).map_err(|_| Error::NotStrict(total.clone()))?;
        if !lambda.is_strict() {
            return Err(Error::NotStrict(total));
        }
        *out.entry(lambda).or_default() += 1;
    }
    Ok(out)
}

pub fn f_coefficients(mu: &Partition) -> Result<BTreeMap<Partition, u64>> {
    f_coefficients_with_cap(mu, mu.size())
}

pub fn f_coefficient(mu: &Partition, lambda: &Partition) -> Result<u64> {
    Ok(f_coefficients(mu)?.get(lambda).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::HeckeWord;

    fn part(p: &[usize]) -> Partition {
        Partition::from(p)
    }

    fn worked_pt() -> Tableau {
        Tableau::parse(&[
            &["1'", "1", "1", "1", "1", "1"],
            &["1", "2'", "2", "2"],
            &["2'", "2", "3'", "3"],
            &["2", "3'", "3", "4"],
            &["3", "4'", "4"],
        ])
        .unwrap()
    }

    #[test]
    fn partitions() {
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert_eq!(Partition::all_of(4).len(), 5);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(part(&[2, 1]).subpartitions().len(), 5);
        assert!(part(&[2, 1]).is_covered_by_strip(&part(&[1])));
        assert!(!part(&[2]).is_covered_by_strip(&part(&[])));
        assert!(part(&[4, 3]) < part(&[4, 2, 1]) || part(&[4, 3]).size() == 7);
        let mut v = vec![part(&[3, 1]), part(&[4])];
        v.sort();
        assert_eq!(v, vec![part(&[4]), part(&[3, 1])]);
    }

    #[test]
    fn worked_psvt_example() {
        let t = Tableau::parse(&[&["1'2'", "2'3'", "123"], &["3'1", "23", "4"], &["12", "34"]]).unwrap();
        assert!(is_psvt(&t));
        assert_eq!(t.weight(), WeightPair { x: vec![3, 3, 3, 2], y: vec![1, 2, 2, 0] });
        // an unprimed letter repeated along a row is rejected
        let bad = Tableau::parse(&[&["1", "1"]]).unwrap();
        assert!(!is_psvt(&bad));
        let col = Tableau::parse(&[&["1'"], &["1'"]]).unwrap();
        assert!(!is_psvt(&col));
    }

    #[test]
    fn worked_psmt_example() {
        let t = Tableau::parse(&[&["1'11", "12'", "23'"], &["2'", "2", "3'33"], &["2'3'", "3"]]).unwrap();
        assert!(is_psmt(&t));
        assert_eq!(t.weight(), WeightPair { x: vec![3, 2, 3], y: vec![1, 3, 3] });
        assert!(!is_psmt(&Tableau::parse(&[&["1'1'"]]).unwrap()));
        assert!(!is_psmt(&Tableau::parse(&[&["1"], &["1"]]).unwrap()));
        assert!(!is_psmt(&Tableau::parse(&[&["1'", "1'"]]).unwrap()));
    }

    #[test]
    fn worked_oft_example() {
        let inner = part(&[4, 3, 2, 1]);
        let t = Tableau::parse_skew(inner.clone(), &[&["4", "2"], &["3", "2", "1"], &["2", "2", "1"], &["1", "1", "1"]])
            .unwrap();
        assert!(is_oft(&t, &inner));
        let too_big = Tableau::parse_skew(inner.clone(), &[&["5", "2"], &["3", "2", "1"], &["2", "2", "1"], &["1", "1", "1"]])
            .unwrap();
        assert!(!is_oft(&too_big, &inner));
        assert_eq!(oft_count(&part(&[2]), &part(&[1])), 1);
        assert_eq!(oft_count(&part(&[2, 1]), &part(&[2, 1])), 1);
        assert_eq!(oft_count(&part(&[2, 1]), &part(&[2])), 0);
        assert_eq!(oft_count(&part(&[3, 1]), &part(&[2, 1])), 2);
        assert_eq!(oft_count(&part(&[4]), &part(&[3])), 3);
        for t in enumerate_oft(&part(&[4, 3, 2]), &part(&[2, 2, 1])) {
            assert!(is_oft(&t, &part(&[2, 2, 1])));
        }
    }

    #[test]
    fn worked_pt_scans() {
        let p = worked_pt();
        assert!(is_pt(&p));
        for i in 1..=3 {
            assert!(has_i_starting(&p, i).unwrap(), "start {i}");
            assert!(has_i_lattice(&p, i).unwrap(), "lattice {i}");
        }
        assert!(!has_i_starting(&p, 4).unwrap());
        assert!(!has_i_lattice(&p, 4).unwrap());
        let empty = Tableau::empty();
        for i in 1..=3 {
            assert!(has_i_starting(&empty, i).unwrap());
            assert!(has_i_lattice(&empty, i).unwrap());
        }
        assert!(has_i_starting(&Tableau::parse(&[&["12"]]).unwrap(), 1).is_err());
    }

    #[test]
    fn svt_examples() {
        let one = genfun_svt(&SkewShape::straight(part(&[1])), 2, 2);
        assert_eq!(one.to_string(), "x1 + x2 + x1*x2");
        assert_eq!(genfun_svt(&SkewShape::straight(part(&[])), 2, 2), Polynomial::one(2));
        // columns are weak in this convention
        let col = genfun_svt(&SkewShape::straight(part(&[1, 1])), 2, 2);
        assert_eq!(col.to_string(), "x1^2 + x1*x2 + x2^2");
        let row = genfun_svt(&SkewShape::straight(part(&[2])), 2, 2);
        assert_eq!(row.to_string(), "x1*x2");
    }

    #[test]
    fn enumerated_tableaux_pass_validators() {
        for lambda in [part(&[2, 1]), part(&[2, 2]), part(&[1, 1, 1]), part(&[3])] {
            for t in enumerate_svt(&SkewShape::straight(lambda.clone()), 3, 5) {
                assert!(is_svt(&t), "{t}");
            }
            for t in enumerate_psvt(&lambda, 2, 5) {
                assert!(is_psvt(&t), "{t}");
            }
            for t in enumerate_psmt(&lambda, 2, 5) {
                assert!(is_psmt(&t), "{t}");
            }
            for t in enumerate_pt(&lambda, 3) {
                assert!(is_pt(&t), "{t}");
            }
        }
        let skew = SkewShape::new(part(&[3, 2]), part(&[1])).unwrap();
        for t in enumerate_svt(&skew, 3, 5) {
            assert!(is_svt(&t));
        }
    }

    #[test]
    fn enumerators_agree_with_filtered_brute_force() {
        // every filling of (2,1) by single entries over four letters and both primes
        let lambda = part(&[2, 1]);
        let alphabet: Vec<Entry> = (1..=2).flat_map(|v| [Entry::primed(v), Entry::plain(v)]).collect();
        let boxes = subsets(&alphabet, 4);
        let mut psvt = 0;
        for a in &boxes {
            for b in &boxes {
                for c in &boxes {
                    let t = Tableau::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone()]]).unwrap();
                    if is_psvt(&t) {
                        psvt += 1;
                    }
                }
            }
        }
        assert_eq!(psvt, enumerate_psvt(&lambda, 2, 12).len());
        let mut svt = 0;
        let plain: Vec<Cell> = boxes.iter().filter(|b| b.iter().all(|e| !e.primed)).cloned().collect();
        for a in &plain {
            for b in &plain {
                for c in &plain {
                    let t = Tableau::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone()]]).unwrap();
                    if is_svt(&t) {
                        svt += 1;
                    }
                }
            }
        }
        assert_eq!(svt, enumerate_svt(&SkewShape::straight(lambda), 2, 12).len());
    }

    #[test]
    fn psvt_small_cases() {
        let g = genfun_psvt(&part(&[1]), 1, 2);
        assert_eq!(g.to_string(), "x1 + y1 + x1*y1");
        // setting y to zero leaves the set-valued function
        for lambda in [part(&[2, 1]), part(&[2])] {
            let psvt = genfun_psvt(&lambda, 3, 5).substitute_zero(crate::poly::Family::Y, 0);
            assert_eq!(psvt, genfun_svt(&SkewShape::straight(lambda), 3, 5));
        }
        assert_eq!(genfun_pt(&part(&[]), 3), Polynomial::one(3));
    }

    #[test]
    fn psvt_splits_into_two_set_valued_pieces() {
        let (m, d) = (2, 5);
        for lambda in [part(&[1]), part(&[2]), part(&[1, 1]), part(&[2, 1])] {
            let mut rhs = Polynomial::zero(m);
            for mu in lambda.subpartitions() {
                for rho in mu.subpartitions() {
                    if !mu.is_covered_by_strip(&rho) {
                        continue;
                    }
                    let x = genfun_svt(&SkewShape::new(lambda.clone(), rho).unwrap(), m, d);
                    let y = genfun_svt(&SkewShape::straight(mu.conjugate()), m, d).swap_families();
                    rhs += &x.mul_truncated(&y, d).unwrap();
                }
            }
            assert_eq!(genfun_psvt(&lambda, m, d), rhs, "{lambda}");
        }
    }

    #[test]
    fn psmt_decomposes_through_flagged_tableaux() {
        let (m, d) = (2, 4);
        for mu in [part(&[1]), part(&[2]), part(&[1, 1]), part(&[2, 1])] {
            let mut rhs = Polynomial::zero(m);
            for size in mu.size()..=d {
                for lambda in Partition::all_of(size) {
                    let k = oft_count(&lambda, &mu);
                    if k > 0 {
                        rhs += &genfun_pt(&lambda, m).truncate_degree(d).scalar_mul(k);
                    }
                }
            }
            assert_eq!(genfun_psmt(&mu, m, d), rhs, "{mu}");
        }
    }

    #[test]
    fn schur_polynomials() {
        assert_eq!(schur_polynomial(&part(&[2]), 2).to_string(), "x1^2 + x1*x2 + x2^2");
        assert_eq!(schur_polynomial(&part(&[1, 1]), 2).to_string(), "x1*x2");
        assert!(schur_polynomial(&part(&[1, 1, 1]), 2).is_zero());
        assert_eq!(schur_polynomial(&part(&[]), 2), Polynomial::one(2));
    }

    #[test]
    fn q_schur_examples() {
        let q4 = q_schur(&part(&[4]), 2, 4).unwrap();
        assert_eq!(q4.coefficient(&[4], &[]), 2.into());
        let q31 = q_schur(&part(&[3, 1]), 2, 4).unwrap();
        assert_eq!(q31.coefficient(&[4], &[]), 0.into());
        assert_eq!(q_schur(&part(&[1]), 2, 1).unwrap().to_string(), "2*x1 + 2*x2");
        assert!(q_schur(&part(&[1, 1]), 2, 2).is_err());
        assert!(q_schur(&part(&[3]), 2, 2).unwrap().is_zero());
    }

    #[test]
    fn f_coefficient_cap_is_safe() {
        for size in 0..=4 {
            for mu in Partition::all_of(size) {
                assert_eq!(f_coefficients_with_cap(&mu, size).unwrap(), f_coefficients_with_cap(&mu, size + 2).unwrap());
            }
        }
        assert_eq!(f_coefficient(&part(&[]), &part(&[])).unwrap(), 1);
        assert_eq!(f_coefficient(&part(&[2]), &part(&[3])).unwrap(), 0);
        let f31 = f_coefficients(&part(&[3, 1])).unwrap();
        assert_eq!(f31.get(&part(&[4])), Some(&1));
        assert_eq!(f31.get(&part(&[3, 1])), Some(&1));
    }

    #[test]
    fn hecke_tableaux() {
        let id = Permutation::identity(3);
        assert_eq!(enumerate_hecke_tableaux(&id, 5), vec![Tableau::empty()]);
        let s1: Permutation = "2,1".parse().unwrap();
        let hts = enumerate_hecke_tableaux(&s1, 5);
        assert_eq!(hts.len(), 1);
        assert_eq!(hts[0].shape().outer(), &part(&[1]));
        for omega in Permutation::all(4) {
            for t in enumerate_hecke_tableaux(&omega, 9) {
                assert!(is_hecke_tableau(&t, &omega));
                let col = HeckeWord::new(t.column_reading_word(), 3).unwrap();
                assert_eq!(col.eval(), omega, "{t}");
            }
        }
    }

    #[test]
    fn standard_svt_counts() {
        // brute force on small shapes
        for (lambda, n) in [(part(&[2, 1]), 4), (part(&[2]), 3), (part(&[1, 1]), 3), (part(&[2, 2]), 5)] {
            let cells = SkewShape::straight(lambda.clone()).cells();
            let mut count = 0;
            let total = cells.len().pow(n as u32);
            for code in 0..total {
                let mut rows: Vec<Vec<Cell>> = lambda.parts().iter().map(|&p| vec![Vec::new(); p]).collect();
                let mut c = code;
                for label in 1..=n {
                    let (r, col) = cells[c % cells.len()];
                    c /= cells.len();
                    rows[r][col].push(Entry::plain(label));
                }
                if rows.iter().flatten().any(Vec::is_empty) {
                    continue;
                }
                if is_standard_svt(&Tableau::from_rows(rows).unwrap()) {
                    count += 1;
                }
            }
            assert_eq!(count_standard_svt(&lambda, n), count, "{lambda} {n}");
        }
    }

    #[test]
    fn transpose_and_json() {
        let t = Tableau::from_values(&[vec![1, 2], vec![2, 4], vec![3]]).unwrap();
        assert_eq!(t.transpose().unwrap(), Tableau::from_values(&[vec![1, 2, 3], vec![2, 4]]).unwrap());
        assert_eq!(t.transpose().unwrap().transpose().unwrap(), t);
        let p = worked_pt();
        assert_eq!(Tableau::from_json(&p.to_json()).unwrap(), p);
        let s = Tableau::parse_skew(part(&[1]), &[&["12"], &["3'"]]).unwrap();
        assert_eq!(Tableau::from_json(&s.to_json()).unwrap(), s);
        assert_eq!(t.to_string(), "1 2\n2 4\n3\n");
    }
}
