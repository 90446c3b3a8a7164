//! Truncated stable, weak and half-weak Grothendieck functions.
//!
//! Every infinite-variable object is represented by its `(m, D)` truncation:
//! `m` variables per family, total degree at most `D`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::factorization::{
    enumerate_double_unbounded, enumerate_hook, enumerate_plain_unbounded, genfun,
};
use crate::operators::{grothendieck_double, grothendieck_single};
use crate::perm::Permutation;
use crate::poly::{big_to_json, Family, Monomial, Polynomial};
use crate::tableau::{
    f_coefficients, genfun_psmt, genfun_psvt, genfun_svt, hecke_tableau_counts, oft_count, q_schur,
    schur_polynomial, Partition, SkewShape,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationSpec {
    pub m: usize,
    pub d: usize,
}

impl TruncationSpec {
    pub fn new(m: usize, d: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Constraint("a truncation needs at least one variable".into()));
        }
        Ok(TruncationSpec { m, d })
    }

    pub fn with_m(self, m: usize) -> Self {
        TruncationSpec { m, d: self.d }
    }
}

fn from_set(set: &[crate::factorization::Factorization], t: TruncationSpec) -> Polynomial {
    if set.is_empty() {
        return Polynomial::zero(t.m);
    }
    genfun(set, t.m).expect("enumeration yields one kind").truncate_degree(t.d)
}

pub fn stable_single(omega: &Permutation, t: TruncationSpec) -> Polynomial {
    from_set(&enumerate_plain_unbounded(omega, t.m, t.d), t)
}

/// `𝔊_ω̂` with everything past `x_m` set to zero, where `ω̂` is `ω` shifted by `m - 1`.
pub fn stable_single_via_operators(omega: &Permutation, t: TruncationSpec) -> Polynomial {
    grothendieck_single(&omega.shifted(t.m - 1))
        .substitute_zero(Family::X, t.m)
        .with_m(t.m)
        .truncate_degree(t.d)
}

/// `Σ_λ |HT_ω(λ)| G_λ`.
pub fn stable_single_via_tableaux(omega: &Permutation, t: TruncationSpec) -> Polynomial {
    let mut out = Polynomial::zero(t.m);
    for (shape, count) in hecke_tableau_counts(omega) {
        if shape.size() <= t.d {
            out += &genfun_svt(&SkewShape::straight(shape), t.m, t.d).scalar_mul(count);
        }
    }
    out
}

pub fn stable_double(omega: &Permutation, t: TruncationSpec) -> Polynomial {
    from_set(&enumerate_double_unbounded(omega, t.m, t.d), t)
}

pub fn stable_double_via_operators(omega: &Permutation, t: TruncationSpec) -> Polynomial {
    grothendieck_double(&omega.shifted(t.m - 1))
        .substitute_zero(Family::X, t.m)
        .substitute_zero(Family::Y, t.m)
        .with_m(t.m)
        .truncate_degree(t.d)
}

/// `Σ_λ |HT_ω(λ)| GP_λ` over primed set-valued tableaux.
pub fn stable_double_via_psvt(omega: &Permutation, t: TruncationSpec) -> Polynomial {
    let mut out = Polynomial::zero(t.m);
    for (shape, count) in hecke_tableau_counts(omega) {
        if shape.size() <= t.d {
            out += &genfun_psvt(&shape, t.m, t.d).scalar_mul(count);
        }
    }
    out
}

// Σ_T Σ_{ρ⋖μ⊆T_s} A(T_s/ρ) B(μ'), with A in x and B in y.
fn triple_sum(
    omega: &Permutation,
    t: TruncationSpec,
    x_part: impl Fn(&SkewShape) -> Result<Polynomial>,
    y_part: impl Fn(&Partition) -> Result<Polynomial>,
) -> Result<Polynomial> {
    let mut out = Polynomial::zero(t.m);
    for (shape, count) in hecke_tableau_counts(omega) {
        if shape.size() > t.d {
            continue;
        }
        for mu in shape.subpartitions() {
            let y = y_part(&mu.conjugate())?.swap_families();
            for rho in mu.subpartitions() {
                if !mu.is_covered_by_strip(&rho) {
                    continue;
                }
                let x = x_part(&SkewShape::new(shape.clone(), rho)?)?;
                out += &x.mul_truncated(&y, t.d)?.scalar_mul(count);
            }
        }
    }
    Ok(out)
}

pub fn stable_double_via_tableaux(omega: &Permutation, t: TruncationSpec) -> Polynomial {
    triple_sum(
        omega,
        t,
        |s| Ok(genfun_svt(s, t.m, t.d)),
        |mu| Ok(genfun_svt(&SkewShape::straight(mu.clone()), t.m, t.d)),
    )
    .expect("strip shapes are valid")
}

/// Schur coefficients of the degree-`d` part of `p` in `family`.
///
/// `p` must not involve the other family.
pub fn schur_expand(p: &Polynomial, family: Family, d: usize) -> Result<BTreeMap<Partition, BigInt>> {
    let p = match family {
        Family::X => p.clone(),
        Family::Y => p.swap_families(),
    };
    if p.terms().any(|(mono, _)| mono.y().iter().any(|&e| e > 0)) {
        return Err(Error::Constraint("schur_expand takes a single-family polynomial".into()));
    }
    let mut rest = p.homogeneous_component(d);
    if !rest.is_symmetric_in(Family::X) {
        return Err(Error::NotSymmetric);
    }
    let m = rest.m();
    let mut out = BTreeMap::new();
    // lexicographically largest exponent first; symmetry makes it a partition
    while let Some((lead, c)) = rest.terms().map(|(mono, c)| (mono.x_exps(), c.clone())).max_by(|a, b| a.0.cmp(&b.0)) {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        let lambda = Partition::new(lead.into_iter().filter(|&e| e > 0).collect())?;
        rest -= &schur_polynomial(&lambda, m).scalar_mul(c.clone());
        out.insert(lambda, c);
    }
    Ok(out)
}

/// The involution on symmetric functions of one family.
///
/// `s_λ` is sent to `s_{λ'}`. Needs `m ≥ D` so that no conjugate is lost.
pub fn omega(p: &Polynomial, family: Family, t: TruncationSpec) -> Result<Polynomial> {
    if p.m() != t.m {
        return Err(Error::VariableCountMismatch { left: p.m(), right: t.m });
    }
    let p = p.truncate_degree(t.d);
    let top = p
        .terms()
        .map(|(mono, _)| (1..=t.m).map(|i| mono.exp(family, i)).sum::<usize>())
        .max()
        .unwrap_or(0);
    if top > t.m {
        return Err(Error::TooFewVariables { needed: top, available: t.m });
    }
    let p = match family {
        Family::X => p,
        Family::Y => p.swap_families(),
    };
    // group by the y part, keeping the x part as a coefficient polynomial
    let mut groups: BTreeMap<Vec<usize>, Polynomial> = BTreeMap::new();
    for (mono, c) in p.terms() {
        let g = groups.entry(mono.y_exps()).or_insert_with(|| Polynomial::zero(t.m));
        g.add_term(Monomial::new(&mono.x_exps(), &vec![0; t.m]), c.clone());
    }
    let mut out = Polynomial::zero(t.m);
    for (y, g) in groups {
        let ymono = Polynomial::monomial(t.m, &vec![0; t.m], &y, 1)?;
        let top = g.max_degree().unwrap_or(0);
        for deg in 0..=top {
            for (lambda, c) in schur_expand(&g, Family::X, deg)? {
                out += &(&schur_polynomial(&lambda.conjugate(), t.m) * &ymono).scalar_mul(c);
            }
        }
    }
    Ok(match family {
        Family::X => out,
        Family::Y => out.swap_families(),
    })
}

fn omega_wide(p: impl Fn(TruncationSpec) -> Polynomial, families: &[Family], t: TruncationSpec) -> Polynomial {
    let wide = t.with_m(t.m.max(t.d));
    let mut q = p(wide);
    for &f in families {
        q = omega(&q, f, wide).expect("stable truncations are symmetric");
    }
    q.with_m(t.m)
}

/// `Ω_x Ω_y 𝒢_ω`, computed with `max(m, D)` variables and then restricted.
pub fn weak_stable_double(omega: &Permutation, t: TruncationSpec) -> Polynomial {
    omega_wide(|w| stable_double(omega, w), &[Family::X, Family::Y], t)
}

pub fn weak_stable_single(omega: &Permutation, t: TruncationSpec) -> Polynomial {
    omega_wide(|w| stable_single(omega, w), &[Family::X], t)
}

/// `Ω_x G_{λ/ρ}` in the x family.
pub fn weak_symmetric(shape: &SkewShape, t: TruncationSpec) -> Polynomial {
    omega_wide(|w| genfun_svt(shape, w.m, w.d), &[Family::X], t)
}

/// `Σ_T Σ_{ρ⋖μ⊆T_s} *G_{T_s/ρ}(x) *G_{μ'}(y)`.
pub fn weak_stable_double_via_tableaux(omega: &Permutation, t: TruncationSpec) -> Polynomial {
    triple_sum(
        omega,
        t,
        |s| Ok(weak_symmetric(s, t)),
        |mu| Ok(weak_symmetric(&SkewShape::straight(mu.clone()), t)),
    )
    .expect("strip shapes are valid")
}

pub fn halfweak_stable(omega: &Permutation, t: TruncationSpec) -> Polynomial {
    from_set(&enumerate_hook(omega, t.m, t.d), t)
}

/// `Σ_ρ H_ω^ρ ×G_ρ` over primed set-valued marked tableaux.
pub fn halfweak_via_psmt(omega: &Permutation, t: TruncationSpec) -> Polynomial {
    let mut out = Polynomial::zero(t.m);
    for (shape, count) in hecke_tableau_counts(omega) {
        if shape.size() <= t.d {
            out += &genfun_psmt(&shape, t.m, t.d).scalar_mul(count);
        }
    }
    out
}

/// Q-Schur coefficients of `×𝒢_ω(x,x)` for `|λ| ≤ d`.
pub fn qschur_expansion(omega: &Permutation, d: usize) -> Result<QExpansion> {
    let mut out = QExpansion::default();
    for k in 0..=d {
        for (lambda, c) in qschur_stratum(omega, k)?.0 {
            out.0.insert(lambda, c);
        }
    }
    Ok(out)
}

/// The `|λ| = k` part of [`qschur_expansion`].
pub fn qschur_stratum(omega: &Permutation, k: usize) -> Result<QExpansion> {
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (rho, h) in hecke_tableau_counts(omega) {
        if rho.size() > k {
            continue;
        }
        for mu in Partition::all_of(k) {
            if mu.len() != rho.len() || !mu.contains(&rho) {
                continue;
            }
            let kc = oft_count(&mu, &rho);
            if kc == 0 {
                continue;
            }
            for (lambda, f) in f_coefficients(&mu)? {
                *out.entry(lambda).or_default() += BigInt::from(h) * kc * f;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(QExpansion(out))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QExpansion(pub BTreeMap<Partition, BigInt>);

impl QExpansion {
    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.0.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.values().all(|c| !c.is_negative())
    }

    /// `Σ c_λ Q_λ` in `m` variables up to degree `d`.
    pub fn evaluate(&self, m: usize, d: usize) -> Result<Polynomial> {
        let mut out = Polynomial::zero(m);
        for (lambda, c) in &self.0 {
            out += &q_schur(lambda, m, d)?.scalar_mul(c.clone());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (lambda, c) in &self.0 {
            map.insert(lambda.to_string(), big_to_json(c));
        }
        Value::Object(map)
    }
}

impl fmt::Display for QExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .map(|(l, c)| if *c == BigInt::from(1) { format!("Q{l}") } else { format!("{c}*Q{l}") })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    StableSingle,
    StableDouble,
    WeakStableDouble,
    HalfWeak,
}

impl Model {
    pub const ALL: [Model; 4] = [Model::StableSingle, Model::StableDouble, Model::WeakStableDouble, Model::HalfWeak];

    pub fn name(self) -> &'static str {
        match self {
            Model::StableSingle => "stable-single",
            Model::StableDouble => "stable-double",
            Model::WeakStableDouble => "weak-stable-double",
            Model::HalfWeak => "halfweak",
        }
    }

    pub fn compute(self, omega: &Permutation, t: TruncationSpec) -> Polynomial {
        match self {
            Model::StableSingle => stable_single(omega, t),
            Model::StableDouble => stable_double(omega, t),
            Model::WeakStableDouble => weak_stable_double(omega, t),
            Model::HalfWeak => halfweak_stable(omega, t),
        }
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Model::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown model {s:?}")))
    }
}

/// Compares the model at `m` and `m + 1` variables.
///
/// Restricting the larger output to `m` variables must give the smaller one,
/// and no term of the larger output may use more than `m` variables of a family
/// (otherwise `m` variables cannot see every symmetric orbit).
pub fn stability_check(model: Model, omega: &Permutation, t: TruncationSpec) -> bool {
    let small = model.compute(omega, t);
    let big = model.compute(omega, t.with_m(t.m + 1));
    let wide = big.terms().any(|(mono, _)| {
        [Family::X, Family::Y]
            .into_iter()
            .any(|f| (1..=t.m + 1).filter(|&i| mono.exp(f, i) > 0).count() > t.m)
    });
    !wide && big.with_m(t.m) == small
}
