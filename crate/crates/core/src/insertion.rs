//! Hecke insertion, its semistandard variant and the map Φ from double
//! factorizations to pairs (Hecke tableau, primed set-valued tableau).

use crate::error::{Error, Result};
use crate::factorization::{Factorization, Kind, Letter};
use crate::perm::HeckeWord;
use crate::tableau::{Entry, Tableau};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RowOutcome {
    Appended,
    Disappeared,
    Bumped(usize),
}

/// The row-entry precondition: `a > x_1` and `x_h ≤ a < y_h` for some `h`
/// (with `y_h = ∞` past the end of `row`). Vacuous for the first row.
pub fn interval_assumption(above: Option<&[usize]>, row: &[usize], a: usize) -> bool {
    let Some(x) = above else { return true };
    if x.is_empty() || a <= x[0] {
        return false;
    }
    (0..x.len()).any(|h| x[h] <= a && row.get(h).map_or(true, |&y| a < y))
}

/// Insert `a` into `row`, given the row above it. Returns the new row.
pub fn insert_row(above: Option<&[usize]>, row: &[usize], a: usize) -> Result<(Vec<usize>, RowOutcome)> {
    if !interval_assumption(above, row, a) {
        return Err(Error::Insertion(format!("{a} violates the interval assumption for row {row:?}")));
    }
    let x = |h: usize| above.and_then(|x| x.get(h).copied());
    let mut y = row.to_vec();
    let j = y.len();
    if j == 0 || a >= y[j - 1] {
        if j > 0 && a == y[j - 1] || x(j) == Some(a) {
            return Ok((y, RowOutcome::Disappeared));
        }
        y.push(a);
        return Ok((y, RowOutcome::Appended));
    }
    let h = y.iter().position(|&v| a <= v).unwrap();
    if a == y[h] {
        // the letter right of an equal entry moves on; it exists since a < y_j
        let next = y[h + 1];
        return Ok((y, RowOutcome::Bumped(next)));
    }
    let bumped = y[h];
    match x(h) {
        Some(xh) if a == xh => Ok((y, RowOutcome::Bumped(bumped))),
        Some(xh) if a < xh => Err(Error::Insertion(format!("{a} below the entry {xh} above"))),
        _ => {
            y[h] = a;
            Ok((y, RowOutcome::Bumped(bumped)))
        }
    }
}

/// A running insertion: the insertion rows plus a recording tableau whose
/// boxes hold arbitrary (possibly primed) labels.
#[derive(Clone, Debug, Default)]
pub struct HeckeInserter {
    p: Vec<Vec<usize>>,
    q: Vec<Vec<Vec<Entry>>>,
}

impl HeckeInserter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Resume from a pair of tableaux of the same straight shape.
    pub fn seeded(p: &Tableau, q: &Tableau) -> Result<Self> {
        let values = p.values().ok_or_else(|| Error::Insertion("insertion tableau must be plain".into()))?;
        if p.shape() != q.shape() || !p.shape().is_straight() {
            return Err(Error::Insertion("seed tableaux differ in shape".into()));
        }
        Ok(HeckeInserter { p: values, q: q.rows().to_vec() })
    }

    pub fn insert(&mut self, letter: usize, label: Entry) -> Result<()> {
        let mut a = letter;
        let mut r = 0;
        loop {
            if r == self.p.len() {
                self.p.push(Vec::new());
                self.q.push(Vec::new());
            }
            let above = if r > 0 { Some(self.p[r - 1].as_slice()) } else { None };
            let (row, outcome) = insert_row(above, &self.p[r], a)?;
            self.p[r] = row;
            match outcome {
                RowOutcome::Appended => {
                    self.q[r].push(vec![label]);
                    return Ok(());
                }
                RowOutcome::Disappeared => {
                    if self.p[r].is_empty() {
                        return Err(Error::Insertion("letter vanished into an empty row".into()));
                    }
                    let c = self.p[r].len() - 1;
                    let lowest = (r..self.p.len()).take_while(|&rr| self.p[rr].len() > c).last().unwrap();
                    self.q[lowest][c].push(label);
                    self.trim();
                    return Ok(());
                }
                RowOutcome::Bumped(next) => {
                    a = next;
                    r += 1;
                }
            }
        }
    }

    fn trim(&mut self) {
        while self.p.last().is_some_and(Vec::is_empty) {
            self.p.pop();
            self.q.pop();
        }
    }

    pub fn finish(self) -> Result<(Tableau, Tableau)> {
        let p = Tableau::from_values(&self.p)?;
        let q = Tableau::from_rows(self.q)?;
        Ok((p, q))
    }
}

/// Hecke insertion of a whole word; the recording tableau is labelled `1..=len`.
pub fn insert_word(w: &HeckeWord) -> Result<(Tableau, Tableau)> {
    let mut ins = HeckeInserter::new();
    for (i, &a) in w.letters().iter().enumerate() {
        ins.insert(a, Entry::plain(i + 1))?;
    }
    ins.finish()
}

/// Semistandard insertion: each letter is recorded by the index of its factor.
pub fn semistandard_insert(f: &Factorization) -> Result<(Tableau, Tableau)> {
    if !matches!(f.kind(), Kind::Plain | Kind::BoundedPlain) {
        return Err(Error::InvalidFactorization("semistandard insertion takes a plain factorization".into()));
    }
    insert_factors(f.factors())
}

fn insert_factors(factors: &[Vec<Letter>]) -> Result<(Tableau, Tableau)> {
    let mut ins = HeckeInserter::new();
    for (i, factor) in factors.iter().enumerate() {
        for l in factor {
            ins.insert(l.value, Entry::plain(i + 1))?;
        }
    }
    ins.finish()
}

/// Φ on a double factorization.
pub fn phi(f: &Factorization) -> Result<(Tableau, Tableau)> {
    if !f.kind().is_double() {
        return Err(Error::InvalidFactorization("Φ takes a double factorization".into()));
    }
    let reversed: Vec<Vec<Letter>> =
        f.left().iter().rev().map(|factor| factor.iter().rev().copied().collect()).collect();
    let (pl, ql) = insert_factors(&reversed)?;
    let (pt, qt) = (pl.transpose()?, ql.transpose()?.primed());
    let mut ins = HeckeInserter::seeded(&pt, &qt)?;
    for (i, factor) in f.right().iter().enumerate() {
        for l in factor {
            ins.insert(l.value, Entry::plain(i + 1))?;
        }
    }
    ins.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{is_hecke_tableau, is_psvt, is_standard_svt, is_svt};

    fn word(s: &str, n: usize) -> HeckeWord {
        HeckeWord::parse(s, n).unwrap()
    }

    #[test]
    fn row_rules() {
        assert_eq!(insert_row(None, &[1, 2, 4, 5], 3).unwrap(), (vec![1, 2, 3, 5], RowOutcome::Bumped(4)));
        assert_eq!(
            insert_row(Some(&[1, 2, 3, 5]), &[2, 4, 6, 8], 4).unwrap(),
            (vec![2, 4, 6, 8], RowOutcome::Bumped(6))
        );
        assert_eq!(insert_row(Some(&[2, 4, 6, 8]), &[3, 5, 7], 6).unwrap(), (vec![3, 5, 7], RowOutcome::Bumped(7)));
        assert_eq!(insert_row(Some(&[3, 5, 7]), &[4, 7], 7).unwrap(), (vec![4, 7], RowOutcome::Disappeared));
        assert_eq!(insert_row(None, &[], 2).unwrap(), (vec![2], RowOutcome::Appended));
        assert_eq!(insert_row(Some(&[1, 3]), &[2], 3).unwrap(), (vec![2], RowOutcome::Disappeared));
        assert!(insert_row(Some(&[2, 3]), &[3], 1).is_err());
        assert!(insert_row(Some(&[2]), &[], 2).is_err());
    }

    #[test]
    fn worked_step_sixteen_to_seventeen() {
        let p16 = Tableau::from_values(&[
            vec![1, 2, 4, 5],
            vec![2, 4, 6, 8],
            vec![3, 5, 7],
            vec![4, 7],
            vec![6, 8],
            vec![9],
        ])
        .unwrap();
        let q16 = Tableau::from_values(&[
            vec![1, 2, 3, 4],
            vec![5, 6, 7, 8],
            vec![9, 10, 11],
            vec![12, 13],
            vec![14, 15],
            vec![16],
        ])
        .unwrap();
        let mut ins = HeckeInserter::seeded(&p16, &q16).unwrap();
        ins.insert(3, Entry::plain(17)).unwrap();
        let (p17, q17) = ins.finish().unwrap();
        let expected_p = Tableau::from_values(&[
            vec![1, 2, 3, 5],
            vec![2, 4, 6, 8],
            vec![3, 5, 7],
            vec![4, 7],
            vec![6, 8],
            vec![9],
        ])
        .unwrap();
        assert_eq!(p17, expected_p);
        let mut rows: Vec<Vec<Vec<Entry>>> = q16.rows().to_vec();
        rows[4][1].push(Entry::plain(17));
        assert_eq!(q17, Tableau::from_rows(rows).unwrap());
    }

    #[test]
    fn asymmetry_traces() {
        let (p, q) = insert_word(&word("1322", 3)).unwrap();
        assert_eq!(p, Tableau::from_values(&[vec![1, 2], vec![3]]).unwrap());
        assert_eq!(q, Tableau::parse(&[&["1", "24"], &["3"]]).unwrap());
        let (p, q) = insert_word(&word("1312", 3)).unwrap();
        assert_eq!(p, Tableau::from_values(&[vec![1, 2], vec![3]]).unwrap());
        assert_eq!(q, Tableau::parse(&[&["1", "2"], &["34"]]).unwrap());
        // intermediate steps of the second trace
        let (p3, q3) = insert_word(&word("131", 3)).unwrap();
        assert_eq!(p3, Tableau::from_values(&[vec![1, 3], vec![3]]).unwrap());
        assert_eq!(q3, Tableau::from_values(&[vec![1, 2], vec![3]]).unwrap());
    }

    #[test]
    fn empty_inputs() {
        let (p, q) = insert_word(&HeckeWord::empty(3)).unwrap();
        assert_eq!((p, q), (Tableau::empty(), Tableau::empty()));
        let f = Factorization::parse(Kind::DoubleUnbounded, 3, "()()|()()").unwrap();
        assert_eq!(phi(&f).unwrap(), (Tableau::empty(), Tableau::empty()));
    }

    #[test]
    fn semistandard_example() {
        let f = Factorization::parse(Kind::Plain, 4, "(31)(421)").unwrap();
        let (p, q) = semistandard_insert(&f).unwrap();
        assert_eq!(p, Tableau::from_values(&[vec![1, 2], vec![2, 4], vec![3]]).unwrap());
        assert_eq!(q, Tableau::from_values(&[vec![1, 2], vec![1, 2], vec![2]]).unwrap());
        assert!(is_svt(&q));
        assert_eq!(q.weight(), f.weight());
        assert_eq!(p.transpose().unwrap(), Tableau::from_values(&[vec![1, 2, 3], vec![2, 4]]).unwrap());
    }

    #[test]
    fn phi_example() {
        let f = Factorization::parse(Kind::DoubleUnbounded, 4, "(124)(13)|(432)(3)").unwrap();
        let (p, q) = phi(&f).unwrap();
        assert_eq!(p, Tableau::from_values(&[vec![1, 2, 3, 4], vec![2, 3, 4], vec![4]]).unwrap());
        assert_eq!(q, Tableau::parse(&[&["1'", "1'", "2'", "1"], &["2'", "2'1", "2"], &["1"]]).unwrap());
        assert!(is_psvt(&q));
        assert!(is_hecke_tableau(&p, &f.permutation()));
        assert_eq!(q.weight(), f.weight());
    }

    #[test]
    fn descent_property_small() {
        for len in 0..=5 {
            for code in 0..3usize.pow(len) {
                let letters: Vec<usize> = (0..len).map(|i| code / 3usize.pow(i) % 3 + 1).collect();
                let w = HeckeWord::new(letters.clone(), 3).unwrap();
                let (p, q) = insert_word(&w).unwrap();
                assert!(is_hecke_tableau(&p, &w.eval()));
                assert!(is_standard_svt(&q) || w.is_empty());
                let row_of = |label: usize| {
                    q.rows().iter().position(|row| row.iter().flatten().any(|e| e.value == label)).unwrap()
                };
                for i in 1..letters.len() {
                    assert_eq!(letters[i - 1] > letters[i], row_of(i + 1) > row_of(i), "{w}");
                }
            }
        }
    }
}
