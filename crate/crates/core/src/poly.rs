//! Sparse polynomials with exact integer coefficients in `x_1..x_m, y_1..y_m`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perm::HeckeWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    X,
    Y,
}

/// Exponent vectors for both families, stored back to back (x then y).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn one(m: usize) -> Self {
        Monomial { exps: vec![0; 2 * m] }
    }

    pub fn new(x: &[usize], y: &[usize]) -> Self {
        assert_eq!(x.len(), y.len(), "x and y exponent vectors differ in length");
        Monomial { exps: x.iter().chain(y).map(|&e| e as u16).collect() }
    }

    pub fn m(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn x(&self) -> &[u16] {
        &self.exps[..self.m()]
    }

    pub fn y(&self) -> &[u16] {
        &self.exps[self.m()..]
    }

    pub fn x_exps(&self) -> Vec<usize> {
        self.x().iter().map(|&e| e as usize).collect()
    }

    pub fn y_exps(&self) -> Vec<usize> {
        self.y().iter().map(|&e| e as usize).collect()
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    fn slot(&self, family: Family, i: usize) -> usize {
        match family {
            Family::X => i - 1,
            Family::Y => self.m() + i - 1,
        }
    }

    pub fn exp(&self, family: Family, i: usize) -> usize {
        self.exps[self.slot(family, i)] as usize
    }

    fn family_slice(&self, family: Family) -> &[u16] {
        match family {
            Family::X => self.x(),
            Family::Y => self.y(),
        }
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }
}

impl Ord for Monomial {
    // ascending total degree, then lexicographically descending exponents
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    m: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(m: usize) -> Self {
        Polynomial { m, terms: BTreeMap::new() }
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, 1)
    }

    pub fn constant(m: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(m);
        p.add_term(Monomial::one(m), c.into());
        p
    }

    pub fn var(m: usize, family: Family, i: usize) -> Self {
        assert!(i >= 1 && i <= m, "variable index {i} outside 1..={m}");
        let mut mono = Monomial::one(m);
        let slot = mono.slot(family, i);
        mono.exps[slot] = 1;
        let mut p = Self::zero(m);
        p.add_term(mono, BigInt::one());
        p
    }

    pub fn x(m: usize, i: usize) -> Self {
        Self::var(m, Family::X, i)
    }

    pub fn y(m: usize, i: usize) -> Self {
        Self::var(m, Family::Y, i)
    }

    /// `c · x^x · y^y`; the vectors may be shorter than `m` (missing entries are 0).
    pub fn monomial(m: usize, x: &[usize], y: &[usize], c: impl Into<BigInt>) -> Result<Self> {
        for v in [x, y] {
            if let Some(k) = v.iter().skip(m).position(|&e| e > 0) {
                return Err(Error::VariableOutOfRange { index: m + k + 1, m });
            }
        }
        let mut xs = vec![0; m];
        let mut ys = vec![0; m];
        for (i, &e) in x.iter().enumerate().take(m) {
            xs[i] = e;
        }
        for (i, &e) in y.iter().enumerate().take(m) {
            ys[i] = e;
        }
        let mut p = Self::zero(m);
        p.add_term(Monomial::new(&xs, &ys), c.into());
        Ok(p)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, mono: Monomial, c: BigInt) {
        debug_assert_eq!(mono.m(), self.m);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_m(&self, other: &Polynomial) -> Result<()> {
        if self.m != other.m {
            return Err(Error::VariableCountMismatch { left: self.m, right: other.m });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_m(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.mul_truncated(other, usize::MAX)
    }

    /// Product keeping only terms of total degree at most `d`.
    pub fn mul_truncated(&self, other: &Polynomial, d: usize) -> Result<Polynomial> {
        self.check_m(other)?;
        let mut out = Polynomial::zero(self.m);
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            if da > d {
                continue;
            }
            for (mb, cb) in &other.terms {
                if da + mb.degree() > d {
                    continue;
                }
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: impl Into<BigInt>) -> Polynomial {
        let c = c.into();
        let mut out = Polynomial::zero(self.m);
        if c.is_zero() {
            return out;
        }
        for (mono, a) in &self.terms {
            out.terms.insert(mono.clone(), a * &c);
        }
        out
    }

    pub fn coefficient(&self, x: &[usize], y: &[usize]) -> BigInt {
        let mut xs = vec![0usize; self.m];
        let mut ys = vec![0usize; self.m];
        for (i, &e) in x.iter().enumerate() {
            if i >= self.m {
                if e > 0 {
                    return BigInt::zero();
                }
            } else {
                xs[i] = e;
            }
        }
        for (i, &e) in y.iter().enumerate() {
            if i >= self.m {
                if e > 0 {
                    return BigInt::zero();
                }
            } else {
                ys[i] = e;
            }
        }
        self.terms.get(&Monomial::new(&xs, &ys)).cloned().unwrap_or_default()
    }

    pub fn truncate_degree(&self, d: usize) -> Polynomial {
        self.filter(|mono| mono.degree() <= d)
    }

    pub fn homogeneous_component(&self, d: usize) -> Polynomial {
        self.filter(|mono| mono.degree() == d)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            m: self.m,
            terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    fn map_monomials(&self, m: usize, f: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        let mut out = Polynomial::zero(m);
        for (mono, c) in &self.terms {
            out.add_term(f(mono), c.clone());
        }
        out
    }

    /// Exchange `x_i` and `x_{i+1}`.
    pub fn swap_x(&self, i: usize) -> Result<Polynomial> {
        self.check_adjacent(i)?;
        Ok(self.map_monomials(self.m, |mono| {
            let mut out = mono.clone();
            out.exps.swap(i - 1, i);
            out
        }))
    }

    fn check_adjacent(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.m {
            return Err(Error::VariableOutOfRange { index: i, m: self.m });
        }
        Ok(())
    }

    /// `δ_i(f) = (f − s_i f)/(x_i − x_{i+1})`, expanded monomial by monomial.
    pub fn delta(&self, i: usize) -> Result<Polynomial> {
        self.check_adjacent(i)?;
        let mut out = Polynomial::zero(self.m);
        for (mono, c) in &self.terms {
            push_delta(&mut out, mono, i, c);
        }
        Ok(out)
    }

    /// `π_i(f) = δ_i(f) + δ_i(x_{i+1} f)`.
    pub fn pi(&self, i: usize) -> Result<Polynomial> {
        self.check_adjacent(i)?;
        let mut out = Polynomial::zero(self.m);
        for (mono, c) in &self.terms {
            push_delta(&mut out, mono, i, c);
            let mut shifted = mono.clone();
            shifted.exps[i] += 1;
            push_delta(&mut out, &shifted, i, c);
        }
        Ok(out)
    }

    /// `π_{i_1}(π_{i_2}(⋯ f))`.
    pub fn pi_word(&self, w: &HeckeWord) -> Result<Polynomial> {
        let mut out = self.clone();
        for &i in w.letters().iter().rev() {
            out = out.pi(i)?;
        }
        Ok(out)
    }

    /// Kill every term involving a variable of `family` with index above `keep`.
    pub fn substitute_zero(&self, family: Family, keep: usize) -> Polynomial {
        self.filter(|mono| mono.family_slice(family).iter().skip(keep).all(|&e| e == 0))
    }

    pub fn set_y_equal_x(&self) -> Polynomial {
        let m = self.m;
        self.map_monomials(m, |mono| {
            let mut exps = vec![0u16; 2 * m];
            for i in 0..m {
                exps[i] = mono.exps[i] + mono.exps[m + i];
            }
            Monomial { exps }
        })
    }

    /// Rename `x_i ↔ y_i`.
    pub fn swap_families(&self) -> Polynomial {
        let m = self.m;
        self.map_monomials(m, |mono| {
            let mut exps = mono.exps[m..].to_vec();
            exps.extend_from_slice(&mono.exps[..m]);
            Monomial { exps }
        })
    }

    /// Change the family size: pad with unused variables or set the dropped
    /// variables to zero.
    pub fn with_m(&self, m: usize) -> Polynomial {
        let mut out = Polynomial::zero(m);
        for (mono, c) in &self.terms {
            let (x, y) = (mono.x(), mono.y());
            if x.iter().skip(m).any(|&e| e > 0) || y.iter().skip(m).any(|&e| e > 0) {
                continue;
            }
            let mut exps = vec![0u16; 2 * m];
            for i in 0..m.min(self.m) {
                exps[i] = x[i];
                exps[m + i] = y[i];
            }
            out.add_term(Monomial { exps }, c.clone());
        }
        out
    }

    /// Invariance under every adjacent swap of the given family.
    pub fn is_symmetric_in(&self, family: Family) -> bool {
        let m = self.m;
        (1..m).all(|i| {
            let swapped = self.map_monomials(m, |mono| {
                let mut out = mono.clone();
                let a = mono.slot(family, i);
                out.exps.swap(a, a + 1);
                out
            });
            swapped == *self
        })
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(mono, c)| {
                json!({
                    "c": big_to_json(c),
                    "x": mono.x_exps(),
                    "y": mono.y_exps(),
                })
            })
            .collect();
        json!({ "m": self.m, "terms": terms })
    }

    pub fn from_json(value: &Value) -> Result<Polynomial> {
        let bad = || Error::Parse("polynomial JSON".into());
        let m = value.get("m").and_then(Value::as_u64).ok_or_else(bad)? as usize;
        let mut out = Polynomial::zero(m);
        for term in value.get("terms").and_then(Value::as_array).ok_or_else(bad)? {
            let c = term.get("c").ok_or_else(bad)?;
            let c: BigInt = match c {
                Value::Number(num) => num.to_string().parse().map_err(|_| bad())?,
                Value::String(s) => s.parse().map_err(|_| bad())?,
                _ => return Err(bad()),
            };
            let read = |key: &str| -> Result<Vec<usize>> {
                let arr = term.get(key).and_then(Value::as_array).ok_or_else(bad)?;
                let v: Option<Vec<usize>> = arr.iter().map(|e| e.as_u64().map(|e| e as usize)).collect();
                let v = v.ok_or_else(bad)?;
                if v.len() != m {
                    return Err(bad());
                }
                Ok(v)
            };
            out.add_term(Monomial::new(&read("x")?, &read("y")?), c);
        }
        Ok(out)
    }
}

pub(crate) fn big_to_json(c: &BigInt) -> Value {
    Value::Number(serde_json::Number::from_string_unchecked(c.to_string()))
}

fn push_delta(out: &mut Polynomial, mono: &Monomial, i: usize, c: &BigInt) {
    let p = mono.exps[i - 1];
    let q = mono.exps[i];
    if p == q {
        return;
    }
    let (lo, gap, coeff) = if p > q { (q, p - q, c.clone()) } else { (p, q - p, -c) };
    for t in 0..gap {
        let mut exps = mono.exps.clone();
        exps[i - 1] = lo + gap - 1 - t;
        exps[i] = lo + t;
        out.add_term(Monomial { exps }, coeff.clone());
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, exps) in [("x", self.x()), ("y", self.y())] {
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(format!("{name}{}", i + 1)),
                    _ => parts.push(format!("{name}{}^{e}", i + 1)),
                }
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (mono, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let is_one = mono.degree() == 0;
            if is_one {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial arithmetic")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        self.check_m(rhs).expect("polynomial arithmetic");
        for (mono, c) in &rhs.terms {
            self.add_term(mono.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        self.check_m(rhs).expect("polynomial arithmetic");
        for (mono, c) in &rhs.terms {
            self.add_term(mono.clone(), -c);
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scalar_mul(-1)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scalar_mul(-1)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial arithmetic")
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(m: usize, i: usize) -> Polynomial {
        Polynomial::x(m, i)
    }
    fn y(m: usize, i: usize) -> Polynomial {
        Polynomial::y(m, i)
    }
    fn one(m: usize) -> Polynomial {
        Polynomial::one(m)
    }

    #[test]
    fn ring_examples() {
        assert!((&x(2, 1) + &(-x(2, 1))).is_zero());
        let a = &x(2, 1) + &y(2, 1);
        let b = &x(2, 1) - &y(2, 1);
        assert_eq!(&a * &b, &(&x(2, 1) * &x(2, 1)) - &(&y(2, 1) * &y(2, 1)));
        let s = &(&x(2, 1) + &y(2, 1)) + &(&x(2, 1) * &y(2, 1));
        assert_eq!(s.to_string(), "x1 + y1 + x1*y1");
        assert!(x(2, 1).checked_add(&x(3, 1)).is_err());
    }

    #[test]
    fn swap_examples() {
        assert_eq!(x(2, 1).swap_x(1).unwrap(), x(2, 2));
        let x1x2 = &x(2, 1) * &x(2, 2);
        assert_eq!(x1x2.swap_x(1).unwrap(), x1x2);
        let f = &(&x(2, 1) * &x(2, 1)) * &y(2, 1);
        assert_eq!(f.swap_x(1).unwrap(), &(&x(2, 2) * &x(2, 2)) * &y(2, 1));
        assert!(x(2, 1).swap_x(2).is_err());
    }

    #[test]
    fn delta_examples() {
        let sym = &x(3, 1) + &x(3, 2);
        assert!(sym.delta(1).unwrap().is_zero());
        assert_eq!(x(2, 1).delta(1).unwrap(), one(2));
        let f = &(&x(2, 1) * &x(2, 1)) * &x(2, 2);
        assert_eq!(f.delta(1).unwrap(), &x(2, 1) * &x(2, 2));
    }

    #[test]
    fn pi_examples() {
        assert_eq!(one(2).pi(1).unwrap(), -one(2));
        assert_eq!(x(2, 1).pi(1).unwrap(), one(2));
        for r in 1..=3 {
            let sq = &x(4, r) * &x(4, r);
            let expect = &(&x(4, r) + &x(4, r + 1)) + &(&x(4, r) * &x(4, r + 1));
            assert_eq!(sq.pi(r).unwrap(), expect);
        }
        let f = &x(3, 1) * &(&x(3, 1) + &x(3, 3));
        assert_eq!(f.pi_word(&HeckeWord::empty(2)).unwrap(), f);
    }

    #[test]
    fn substitution_examples() {
        let f = &x(2, 1) + &x(2, 2);
        assert_eq!(f.substitute_zero(Family::X, 1), x(2, 1));
        assert!((&y(2, 2) * &x(2, 1)).substitute_zero(Family::Y, 1).is_zero());
        assert_eq!(y(2, 1).set_y_equal_x(), x(2, 1));
        assert_eq!((&x(2, 1) * &y(2, 1)).set_y_equal_x(), &x(2, 1) * &x(2, 1));
        let s = &(&x(2, 1) + &y(2, 1)) + &(&x(2, 1) * &y(2, 1));
        assert_eq!(s.set_y_equal_x(), &x(2, 1).scalar_mul(2) + &(&x(2, 1) * &x(2, 1)));
    }

    #[test]
    fn extraction_examples() {
        let f = &x(2, 1) + &(&x(2, 1) * &x(2, 1));
        assert_eq!(f.truncate_degree(1), x(2, 1));
        let g = Polynomial::monomial(2, &[4], &[], 6).unwrap();
        assert_eq!(g.coefficient(&[4], &[]), BigInt::from(6));
        let h = &x(2, 1) + &(&x(2, 1) * &x(2, 2));
        assert_eq!(h.homogeneous_component(2), &x(2, 1) * &x(2, 2));
        assert_eq!(h.min_degree(), Some(1));
    }

    #[test]
    fn display_and_json() {
        let f = &(&(&x(2, 1) * &x(2, 1)) * &x(2, 2)) + &(&x(2, 1) * &y(2, 2)).scalar_mul(3);
        assert_eq!(f.to_string(), "3*x1*y2 + x1^2*x2");
        assert_eq!((-&f).to_string(), "-3*x1*y2 - x1^2*x2");
        assert_eq!(Polynomial::zero(3).to_string(), "0");
        assert_eq!((&one(1) - &x(1, 1).scalar_mul(2)).to_string(), "1 - 2*x1");
        let big = f.scalar_mul(BigInt::from(10).pow(30));
        let back = Polynomial::from_json(&big.to_json()).unwrap();
        assert_eq!(back, big);
        let text = serde_json::to_string(&big.to_json()).unwrap();
        assert!(text.contains("1000000000000000000000000000000"));
    }

    #[test]
    fn with_m_pads_and_restricts() {
        let f = &x(3, 1) + &(&x(3, 3) * &y(3, 1));
        assert_eq!(f.with_m(2), x(2, 1));
        assert_eq!(f.with_m(4).with_m(3), f);
    }

    fn arb_poly(m: usize, max_deg: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(
            (proptest::collection::vec(0usize..=max_deg, 2 * m), -5i64..=5),
            0..6,
        )
        .prop_map(move |terms| {
            let mut p = Polynomial::zero(m);
            for (exps, c) in terms {
                let mut e = exps.clone();
                // keep total degree bounded
                while e.iter().sum::<usize>() > max_deg {
                    let k = e.iter().position(|&v| v > 0).unwrap();
                    e[k] -= 1;
                }
                p.add_term(Monomial::new(&e[..m], &e[m..]), BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn delta_is_exact_and_symmetric(f in arb_poly(4, 6), i in 1usize..4) {
            let d = f.delta(i).unwrap();
            let diff = &x(4, i) - &x(4, i + 1);
            prop_assert_eq!(&d * &diff, &f - &f.swap_x(i).unwrap());
            prop_assert_eq!(d.swap_x(i).unwrap(), d);
        }

        #[test]
        fn pi_is_y_linear(f in arb_poly(3, 4), i in 1usize..3, j in 1usize..=3) {
            let yj = y(3, j);
            prop_assert_eq!((&yj * &f).pi(i).unwrap(), &yj * &f.pi(i).unwrap());
        }

        #[test]
        fn json_roundtrip(f in arb_poly(3, 5)) {
            prop_assert_eq!(Polynomial::from_json(&f.to_json()).unwrap(), f);
        }
    }
}
