//! Identity checks grouped into named suites.
//!
//! Each check runs over a finite family of cases and keeps the first
//! counterexample in case order, so reports are reproducible under any thread count.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bijections::{
    arrow_down, arrow_down_ladder, arrow_up, circled_to_double, circled_to_double_chain, double_to_circled, psi,
    psi_inv,
};
use crate::error::Error;
use crate::factorization::{
    bounded_letter_cap, cauchy_sum, enumerate_bounded_plain, enumerate_circled_bounded, enumerate_double_bounded,
    enumerate_double_unbounded, enumerate_hook, enumerate_plain_unbounded, genfun, Factorization, Kind, Letter,
    WeightPair,
};
use crate::insertion::{insert_word, phi, semistandard_insert, HeckeInserter};
use crate::operators::{grothendieck_double, grothendieck_single, staircase_product};
use crate::perm::{HeckeWord, Permutation};
use crate::poly::Polynomial;
use crate::stable::{
    halfweak_stable, halfweak_via_psmt, qschur_expansion, qschur_stratum, stability_check, stable_double,
    stable_double_via_operators, stable_double_via_psvt, stable_double_via_tableaux, stable_single,
    stable_single_via_operators, stable_single_via_tableaux, weak_stable_double, weak_stable_double_via_tableaux,
    Model, TruncationSpec,
};
use crate::tableau::{
    count_standard_svt, enumerate_hecke_tableaux, f_coefficients, genfun_pt, genfun_svt, has_i_lattice,
    has_i_starting, hecke_tableau_counts, is_hecke_tableau, is_psvt, is_standard_svt, is_svt, q_schur, Entry,
    Partition, SkewShape,
};
use crate::worked;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Relations,
    Cauchy,
    Insertion,
    Bijections,
    Tabt,
    Qp,
    Tabtopi,
    Stability,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Relations,
        Suite::Cauchy,
        Suite::Insertion,
        Suite::Bijections,
        Suite::Tabt,
        Suite::Qp,
        Suite::Tabtopi,
        Suite::Stability,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Cauchy => "cauchy",
            Suite::Insertion => "insertion",
            Suite::Bijections => "bijections",
            Suite::Tabt => "tabt",
            Suite::Qp => "qp",
            Suite::Tabtopi => "tabtopi",
            Suite::Stability => "stability",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Bounds shared by all suites. `None` picks the suite default.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub n: usize,
    pub m: Option<usize>,
    pub degree: Option<usize>,
    pub trials: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { n: 3, m: None, degree: None, trials: 200, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "cases": c.cases, "passed": c.passed(), "counterexample": c.failure }))
            .collect();
        json!({ "suite": self.suite.name(), "passed": self.passed(), "checks": checks })
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{verdict} {}/{} ({} cases)", self.suite.name(), c.name, c.cases)?;
            if let Some(why) = &c.failure {
                for line in why.lines() {
                    writeln!(f, "    {line}")?;
                }
            }
        }
        Ok(())
    }
}

type Outcome = std::result::Result<(), String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn same(label: &str, a: &Polynomial, b: &Polynomial) -> Outcome {
    ensure(a == b, || format!("{label}\n  left:  {a}\n  right: {b}"))
}

fn same_weight(a: &WeightPair, b: &WeightPair, m: usize) -> bool {
    matches!((a.monomial(m), b.monomial(m)), (Ok(p), Ok(q)) if p == q)
}

fn err(e: Error) -> String {
    e.to_string()
}

/// Runs `f` on every case in parallel and keeps the earliest failure.
fn check_all<T: Sync>(name: &str, cases: &[T], f: impl Fn(&T) -> Outcome + Sync) -> Check {
    let failure = cases.par_iter().map(|c| f(c).err()).collect::<Vec<_>>().into_iter().flatten().next();
    Check { name: name.to_string(), cases: cases.len(), failure }
}

fn check_one(name: &str, f: impl FnOnce() -> Outcome) -> Check {
    Check { name: name.to_string(), cases: 1, failure: f().err() }
}

fn perms_up_to(n: usize) -> Vec<Permutation> {
    (1..=n).flat_map(|k| Permutation::all(k + 1)).collect()
}

pub fn run(suite: Suite, opts: &VerifyOptions) -> SuiteReport {
    let checks = match suite {
        Suite::Relations => relations(opts),
        Suite::Cauchy => cauchy(opts),
        Suite::Insertion => insertion(opts),
        Suite::Bijections => bijections(opts),
        Suite::Tabt => tabt(opts),
        Suite::Qp => qp(opts),
        Suite::Tabtopi => tabtopi(opts),
        Suite::Stability => stability(opts),
    };
    SuiteReport { suite, checks }
}

pub fn run_all(opts: &VerifyOptions) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|&s| run(s, opts)).collect()
}

pub fn random_polynomial(rng: &mut impl Rng, m: usize, max_degree: usize) -> Polynomial {
    let mut p = Polynomial::zero(m);
    for _ in 0..rng.gen_range(1..=6) {
        let mut x = vec![0; m];
        let mut y = vec![0; m];
        for _ in 0..rng.gen_range(0..=max_degree) {
            let i = rng.gen_range(0..m);
            if rng.gen_bool(0.75) {
                x[i] += 1;
            } else {
                y[i] += 1;
            }
        }
        p += &Polynomial::monomial(m, &x, &y, rng.gen_range(-5i64..=5)).expect("exponents fit");
    }
    p
}

fn relations(opts: &VerifyOptions) -> Vec<Check> {
    let max_degree = opts.degree.unwrap_or(6);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let cases: Vec<(Polynomial, usize, usize)> = (0..opts.trials)
        .map(|_| {
            let m = rng.gen_range(2..=5);
            let p = random_polynomial(&mut rng, m, max_degree);
            (p, rng.gen_range(1..m), rng.gen_range(1..m))
        })
        .collect();
    type Op = fn(&Polynomial, usize) -> crate::error::Result<Polynomial>;
    let ops: [(&str, Op); 2] = [("delta", Polynomial::delta), ("pi", Polynomial::pi)];
    let mut out = vec![check_all("delta squares to zero", &cases, |(p, i, _)| {
        let twice = p.delta(*i).and_then(|q| q.delta(*i)).map_err(err)?;
        ensure(twice.is_zero(), || format!("p = {p}, i = {i}: {twice}"))
    })];
    out.push(check_all("pi squares to minus pi", &cases, |(p, i, _)| {
        let once = p.pi(*i).map_err(err)?;
        let twice = once.pi(*i).map_err(err)?;
        same(&format!("p = {p}, i = {i}"), &twice, &-&once)
    }));
    for (name, op) in ops {
        out.push(check_all(&format!("{name} commutes at distance two"), &cases, |(p, i, j)| {
            if i.abs_diff(*j) < 2 {
                return Ok(());
            }
            let a = op(p, *j).and_then(|q| op(&q, *i)).map_err(err)?;
            let b = op(p, *i).and_then(|q| op(&q, *j)).map_err(err)?;
            same(&format!("p = {p}, i = {i}, j = {j}"), &a, &b)
        }));
        out.push(check_all(&format!("{name} braid relation"), &cases, |(p, i, _)| {
            if i + 1 >= p.m() {
                return Ok(());
            }
            let (i, k) = (*i, i + 1);
            let a = op(p, i).and_then(|q| op(&q, k)).and_then(|q| op(&q, i)).map_err(err)?;
            let b = op(p, k).and_then(|q| op(&q, i)).and_then(|q| op(&q, k)).map_err(err)?;
            same(&format!("p = {p}, i = {i}"), &a, &b)
        }));
    }
    out
}

fn cauchy(opts: &VerifyOptions) -> Vec<Check> {
    let perms = perms_up_to(opts.n);
    let models = |omega: &Permutation| -> Result<(Polynomial, Polynomial, Polynomial), String> {
        let g = grothendieck_double(omega);
        let n = omega.n();
        let circled = enumerate_circled_bounded(omega, bounded_letter_cap(Kind::CircledBounded, n));
        let double = enumerate_double_bounded(omega, bounded_letter_cap(Kind::DoubleBounded, n));
        let sum = |set: &[Factorization]| if set.is_empty() { Ok(Polynomial::zero(g.m())) } else { genfun(set, g.m()) };
        Ok((g.clone(), sum(&circled).map_err(err)?, sum(&double).map_err(err)?))
    };
    vec![
        check_all("single operator = bounded plain genfun", &perms, |omega| {
            let g = grothendieck_single(omega);
            let set = enumerate_bounded_plain(omega, bounded_letter_cap(Kind::BoundedPlain, omega.n()));
            same(&omega.to_string(), &g, &genfun(&set, g.m()).map_err(err)?)
        }),
        check_all("double operator = circled bounded genfun", &perms, |omega| {
            let (g, c, _) = models(omega)?;
            same(&omega.to_string(), &g, &c)
        }),
        check_all("double operator = double bounded genfun", &perms, |omega| {
            let (g, _, d) = models(omega)?;
            same(&omega.to_string(), &g, &d)
        }),
        check_all("double operator = cauchy sum", &perms, |omega| {
            same(&omega.to_string(), &grothendieck_double(omega), &cauchy_sum(omega))
        }),
        check_all("longest element: 3^(n+1 choose 2) factorizations, staircase genfun", &(1..=opts.n).collect::<Vec<_>>(), |&n| {
            let w0 = Permutation::longest(n + 1);
            let set = enumerate_circled_bounded(&w0, bounded_letter_cap(Kind::CircledBounded, n));
            let expected = 3usize.pow((n * (n + 1) / 2) as u32);
            ensure(set.len() == expected, || format!("n = {n}: {} factorizations, expected {expected}", set.len()))?;
            let s = staircase_product(n);
            same(&format!("n = {n}"), &genfun(&set, s.m()).map_err(err)?, &s)
        }),
    ]
}

fn words(n: usize, len: usize) -> Vec<HeckeWord> {
    (0..n.pow(len as u32))
        .map(|code| {
            let letters = (0..len).map(|i| code / n.pow(i as u32) % n + 1).collect();
            HeckeWord::new(letters, n).expect("letters in range")
        })
        .collect()
}

fn row_of(q: &crate::tableau::Tableau, label: usize) -> Option<usize> {
    q.rows().iter().position(|row| row.iter().flatten().any(|e| e.value == label))
}

fn insertion(opts: &VerifyOptions) -> Vec<Check> {
    let max_len = opts.degree.unwrap_or(7);
    let ns: Vec<usize> = (1..=opts.n).collect();
    let all_words: Vec<HeckeWord> = ns.iter().flat_map(|&n| (0..=max_len).flat_map(move |l| words(n, l))).collect();
    let step = worked::insertion_step();
    let small = perms_up_to(opts.n.min(2));
    vec![
        check_one("worked insertion step", || {
            let mut ins = HeckeInserter::seeded(&step.p_before, &step.q_before).map_err(err)?;
            ins.insert(step.letter, Entry::plain(step.label)).map_err(err)?;
            let (p, q) = ins.finish().map_err(err)?;
            ensure(p == step.p_after && q == step.q_after, || format!("got\n{p}\n{q}"))
        }),
        check_all("worked recording traces", &worked::insertion_traces(), |(w, p, q)| {
            let got = insert_word(&HeckeWord::parse(w, 3).map_err(err)?).map_err(err)?;
            ensure(&got.0 == p && &got.1 == q, || format!("{w}: got\n{}\n{}", got.0, got.1))
        }),
        check_all("P is a Hecke tableau, Q standard, descents match", &all_words, |w| {
            let (p, q) = insert_word(w).map_err(err)?;
            ensure(is_hecke_tableau(&p, &w.eval()), || format!("{w}: P =\n{p}"))?;
            ensure(w.is_empty() || is_standard_svt(&q), || format!("{w}: Q =\n{q}"))?;
            let l = w.letters();
            for i in 1..l.len() {
                let (a, b) = (row_of(&q, i), row_of(&q, i + 1));
                ensure((l[i - 1] > l[i]) == (b > a), || format!("{w}: descent at {i}, Q =\n{q}"))?;
            }
            Ok(())
        }),
        check_all("insertion is injective and counts match", &ns, |&n| {
            for len in 0..=max_len {
                let mut seen = HashSet::new();
                let mut per_perm: BTreeMap<Permutation, u64> = BTreeMap::new();
                for w in words(n, len) {
                    let pq = insert_word(&w).map_err(err)?;
                    ensure(seen.insert(pq), || format!("{w}: repeated image"))?;
                    *per_perm.entry(w.eval()).or_default() += 1;
                }
                for omega in Permutation::all(n + 1) {
                    let expected: u64 =
                        hecke_tableau_counts(&omega).iter().map(|(l, h)| h * count_standard_svt(l, len)).sum();
                    let got = per_perm.get(&omega).copied().unwrap_or(0);
                    ensure(got == expected, || format!("{omega}, length {len}: {got} words, {expected} pairs"))?;
                }
            }
            Ok(())
        }),
        check_all("semistandard insertion is weight preserving and injective", &small, |omega| {
            let t = TruncationSpec { m: 3, d: 5 };
            let set = enumerate_plain_unbounded(omega, t.m, t.d);
            let mut seen = HashSet::new();
            for f in &set {
                let (p, q) = semistandard_insert(f).map_err(err)?;
                ensure(is_hecke_tableau(&p, omega) && is_svt(&q), || format!("{}", f.compact()))?;
                ensure(same_weight(&q.weight(), &f.weight(), t.m), || format!("{}: weight", f.compact()))?;
                ensure(seen.insert((p, q)), || format!("{}: repeated image", f.compact()))?;
            }
            same(&omega.to_string(), &stable_single(omega, t), &stable_single_via_tableaux(omega, t))
        }),
        check_one("worked double insertion", || {
            let f = Factorization::parse(Kind::DoubleUnbounded, 4, worked::PHI_INPUT).map_err(err)?;
            let got = phi(&f).map_err(err)?;
            ensure(got == worked::phi_output(), || format!("got\n{}\n{}", got.0, got.1))
        }),
        check_all("double insertion is weight preserving and bijective", &small, |omega| {
            let t = TruncationSpec { m: 2, d: 6 };
            let set = enumerate_double_unbounded(omega, t.m, t.d);
            let mut seen = HashSet::new();
            for f in &set {
                let (p, q) = phi(f).map_err(err)?;
                ensure(is_hecke_tableau(&p, omega) && is_psvt(&q), || format!("{}", f.compact()))?;
                ensure(same_weight(&q.weight(), &f.weight(), t.m), || format!("{}: weight", f.compact()))?;
                ensure(seen.insert((p, q)), || format!("{}: repeated image", f.compact()))?;
            }
            same(&omega.to_string(), &stable_double(omega, t), &stable_double_via_psvt(omega, t))
        }),
    ]
}

fn subsets(values: &[usize]) -> Vec<Vec<usize>> {
    (0u32..1 << values.len())
        .map(|mask| (0..values.len()).filter(|i| mask >> i & 1 == 1).map(|i| values[i]).collect())
        .collect()
}

fn eval(parts: &[&[usize]], n: usize) -> Result<Permutation, String> {
    Ok(HeckeWord::new(parts.concat(), n).map_err(err)?.eval())
}

fn arrows_roundtrip(n: usize) -> Outcome {
    let all: Vec<usize> = (1..=n).collect();
    let subs = subsets(&all);
    let mut images = HashSet::new();
    for b in &subs {
        for c in &subs {
            if b.len() + c.len() > 6 {
                continue;
            }
            let c: Vec<usize> = c.iter().rev().copied().collect();
            let (a, d) = arrow_down(b, &c, n).map_err(err)?;
            let at = || format!("n = {n}, b = {b:?}, c = {c:?}");
            ensure(eval(&[b, &c], n)? == eval(&[&a, &d], n)?, at)?;
            ensure(arrow_up(&a, &d, n).map_err(err)? == (b.clone(), c.clone()), at)?;
            ensure(images.insert((a, d)), at)?;
        }
    }
    for a in &subs {
        for d in &subs {
            if a.len() + d.len() > 6 {
                continue;
            }
            let a: Vec<usize> = a.iter().rev().copied().collect();
            let (b, c) = arrow_up(&a, d, n).map_err(err)?;
            ensure(arrow_down(&b, &c, n).map_err(err)? == (a.clone(), d.clone()), || format!("n = {n}, a = {a:?}, d = {d:?}"))?;
        }
    }
    Ok(())
}

fn psi_roundtrip(n: usize) -> Outcome {
    for k in 1..=n {
        for j in 1..=n - k + 1 {
            let s = j + k - 1;
            let mut pool: Vec<Letter> = (j..=n).map(Letter::plain).collect();
            pool.extend((j..=s).map(Letter::circled));
            pool.sort_by_key(|l| std::cmp::Reverse(l.key()));
            let ex_pool: Vec<usize> = (j + k..=n).collect();
            let mut forward = HashSet::new();
            for mask in 0u32..1 << pool.len() {
                let fj: Vec<Letter> = (0..pool.len()).filter(|i| mask >> i & 1 == 1).map(|i| pool[i]).collect();
                for ex in subsets(&ex_pool) {
                    if fj.len() + ex.len() > 6 {
                        continue;
                    }
                    let at = || format!("n = {n}, j = {j}, k = {k}, f_j = {fj:?}, ex = {ex:?}");
                    let (ex2, fj2) = psi(n, j, k, &fj, &ex).map_err(err)?;
                    let vals = |w: &[Letter]| w.iter().map(|l| l.value).collect::<Vec<_>>();
                    ensure(eval(&[&vals(&fj), &ex], n)? == eval(&[&ex2, &vals(&fj2)], n)?, at)?;
                    ensure(psi_inv(n, j, k, &ex2, &fj2).map_err(err)? == (fj.clone(), ex.clone()), at)?;
                    ensure(forward.insert((ex2, fj2)), at)?;
                }
            }
        }
    }
    Ok(())
}

fn bijections(opts: &VerifyOptions) -> Vec<Check> {
    let ns: Vec<usize> = (1..=opts.n.max(4)).collect();
    let perms = perms_up_to(opts.n.min(3));
    vec![
        check_one("worked descending ladder", || {
            let (b, c) = worked::LADDER_INPUT;
            let ladder = arrow_down_ladder(&worked::digits(b), &worked::digits(c), 8).map_err(err)?;
            let got: Vec<String> = ladder.iter().map(|q| q.to_string()).collect();
            ensure(got == worked::LADDER, || got.join("\n"))?;
            let (a, d) = worked::LADDER_OUTPUT;
            let out = arrow_down(&worked::digits(b), &worked::digits(c), 8).map_err(err)?;
            ensure(out == (worked::digits(a), worked::digits(d)), || format!("{out:?}"))
        }),
        check_one("worked psi step", || {
            let ((fj, ex), (ex2, fj2)) = worked::PSI;
            let got = psi(9, 2, 3, &worked::letters(fj), &worked::digits(ex)).map_err(err)?;
            ensure(got == (worked::digits(ex2), worked::letters(fj2)), || format!("{got:?}"))
        }),
        check_one("worked chain for the longest element", || {
            let f = worked::chain_input();
            let (g, chain) = circled_to_double_chain(&f).map_err(err)?;
            let lines: Vec<String> = chain.iter().map(|s| s.to_string()).collect();
            ensure(lines == worked::CHAIN, || lines.join("\n"))?;
            ensure(g.compact() == worked::CHAIN_OUTPUT, || g.compact())?;
            ensure(g.weight() == f.weight(), || "weight changed".into())?;
            let printed = Factorization::parse(Kind::DoubleBounded, 3, worked::CHAIN_OUTPUT_AS_PRINTED).map_err(err)?;
            ensure(printed.weight() != f.weight() && printed.letter_count() != f.letter_count(), || {
                "printed final line unexpectedly weight compatible".into()
            })
        }),
        check_all("arrows roundtrip on words of at most six letters", &ns, |&n| arrows_roundtrip(n)),
        check_all("psi roundtrips on words of at most six letters", &ns, |&n| psi_roundtrip(n)),
        check_all("circled to double is a weight preserving bijection", &perms, |omega| {
            let n = omega.n();
            let source = enumerate_circled_bounded(omega, bounded_letter_cap(Kind::CircledBounded, n));
            let mut image = Vec::with_capacity(source.len());
            for f in &source {
                let g = circled_to_double(f).map_err(err)?;
                ensure(g.weight() == f.weight() && &g.permutation() == omega, || f.compact())?;
                ensure(&double_to_circled(&g).map_err(err)? == f, || f.compact())?;
                image.push(g.compact());
            }
            let mut target: Vec<String> = enumerate_double_bounded(omega, bounded_letter_cap(Kind::DoubleBounded, n))
                .iter()
                .map(Factorization::compact)
                .collect();
            image.sort();
            target.sort();
            ensure(image == target, || format!("{omega}: image differs from the double bounded set"))
        }),
    ]
}

fn tabt(opts: &VerifyOptions) -> Vec<Check> {
    let m = opts.m.unwrap_or(3);
    let d = opts.degree.unwrap_or(5);
    let t = TruncationSpec { m, d };
    let weak_t = TruncationSpec { m, d: d.min(4) };
    let small = perms_up_to(opts.n.min(2));
    let single = perms_up_to(opts.n.min(3));
    vec![
        check_all("single: factorizations = operators = tableau sum", &single, |omega| {
            let a = stable_single(omega, t);
            same(&format!("{omega} operators"), &a, &stable_single_via_operators(omega, t))?;
            same(&format!("{omega} tableaux"), &a, &stable_single_via_tableaux(omega, t))
        }),
        check_all("double: factorizations = operators = primed tableau sum", &small, |omega| {
            let a = stable_double(omega, t);
            same(&format!("{omega} operators"), &a, &stable_double_via_operators(omega, t))?;
            same(&format!("{omega} primed"), &a, &stable_double_via_psvt(omega, t))
        }),
        check_all("double = triple tableau sum", &small, |omega| {
            same(&omega.to_string(), &stable_double(omega, t), &stable_double_via_tableaux(omega, t))
        }),
        check_all("weak double = weak triple tableau sum", &small, |omega| {
            same(&omega.to_string(), &weak_stable_double(omega, weak_t), &weak_stable_double_via_tableaux(omega, weak_t))
        }),
    ]
}

fn qp(opts: &VerifyOptions) -> Vec<Check> {
    let d = opts.degree.unwrap_or(4);
    let m = opts.m.unwrap_or(4);
    let example = worked::qp_permutation();
    let mut pipeline = perms_up_to(opts.n.min(3));
    pipeline.push(example.clone());
    let shapes: Vec<Partition> = (0..=d).flat_map(Partition::all_of).collect();
    vec![
        check_one("worked example: hook factorizations", || {
            let mut got: Vec<String> = enumerate_hook(&example, 1, 4)
                .iter()
                .filter(|f| f.letter_count() == 4)
                .map(|f| f.compact())
                .collect();
            let mut want: Vec<String> = worked::qp_hooks().iter().map(|f| f.compact()).collect();
            got.sort();
            want.sort();
            ensure(got == want, || got.join(" "))
        }),
        check_one("worked example: Hecke tableaux", || {
            let mut got = enumerate_hecke_tableaux(&example, 9);
            let mut want = worked::qp_hecke_tableaux();
            got.sort_by_key(|t| t.to_string());
            want.sort_by_key(|t| t.to_string());
            ensure(got == want, || format!("{} tableaux", got.len()))
        }),
        check_one("worked example: x1^4 coefficient and degree-4 stratum", || {
            let hw = halfweak_stable(&example, TruncationSpec { m: 4, d: 4 }).set_y_equal_x();
            let c = hw.coefficient(&[4, 0, 0, 0], &[0, 0, 0, 0]);
            ensure(c == BigInt::from(worked::QP_X1_POWER_COEFFICIENT), || format!("coefficient {c}"))?;
            let got = qschur_stratum(&example, 4).map_err(err)?.to_json().to_string();
            ensure(got == worked::QP_STRATUM_JSON, || got)
        }),
        check_all("half-weak: hook factorizations = primed marked tableau sum", &pipeline, |omega| {
            let t = TruncationSpec { m, d };
            same(&omega.to_string(), &halfweak_stable(omega, t), &halfweak_via_psmt(omega, t))
        }),
        check_all("half-weak at x = y equals its nonnegative Q expansion", &pipeline, |omega| {
            let q = qschur_expansion(omega, d).map_err(err)?;
            ensure(q.is_nonnegative(), || format!("{omega}: {q}"))?;
            let lhs = halfweak_stable(omega, TruncationSpec { m, d }).set_y_equal_x();
            same(&omega.to_string(), &lhs, &q.evaluate(m, d).map_err(err)?)
        }),
        check_all("primed tableaux at x = y expand through F", &shapes, |mu| {
            let lhs = genfun_pt(mu, m).set_y_equal_x();
            let mut rhs = Polynomial::zero(m);
            for (lambda, f) in f_coefficients(mu).map_err(err)? {
                rhs += &q_schur(&lambda, m, mu.size()).map_err(err)?.scalar_mul(f);
            }
            same(&mu.to_string(), &lhs, &rhs)
        }),
        check_one("worked starting and lattice verdicts", || {
            let t = worked::lattice_tableau();
            for i in 1..=4 {
                let (s, l) = (has_i_starting(&t, i).map_err(err)?, has_i_lattice(&t, i).map_err(err)?);
                ensure(s == (i <= 3) && l == (i <= 3), || format!("i = {i}: starting {s}, lattice {l}"))?;
            }
            Ok(())
        }),
    ]
}

fn tabtopi(opts: &VerifyOptions) -> Vec<Check> {
    let top = opts.degree.unwrap_or(4);
    let pairs: Vec<(usize, usize)> = (0..=top).flat_map(|l1| (0..=l1).map(move |l2| (l1, l2))).collect();
    vec![check_all("two-letter set-valued columns equal pi of a monomial", &pairs, |&(l1, l2)| {
        let shape = Partition::new(vec![l1, l2]).map_err(err)?.conjugate();
        let lhs = genfun_svt(&SkewShape::straight(shape.clone()), 2, 2 * shape.size());
        let rhs = Polynomial::monomial(2, &[l1 + 1, l2], &[0, 0], 1).map_err(err)?.pi(1).map_err(err)?;
        same(&format!("columns ({l1}, {l2})"), &lhs, &rhs)
    })]
}

fn stability(opts: &VerifyOptions) -> Vec<Check> {
    let d = opts.degree.unwrap_or(3);
    let perms = perms_up_to(opts.n.min(3));
    let cases: Vec<(Model, Permutation)> =
        Model::ALL.iter().flat_map(|&model| perms.iter().map(move |p| (model, p.clone()))).collect();
    let s1: Permutation = Permutation::new(vec![2, 1]).expect("valid");
    vec![
        check_all("stable once m = D", &cases, |(model, omega)| {
            let t = TruncationSpec { m: opts.m.unwrap_or(d), d };
            ensure(stability_check(*model, omega, t), || format!("{} at {omega}", model.name()))
        }),
        check_all("undersized m is detected", &Model::ALL, |&model| {
            ensure(!stability_check(model, &s1, TruncationSpec { m: 1, d: 2 }), || model.name().to_string())
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        let opts = VerifyOptions { n: 2, trials: 40, ..Default::default() };
        for suite in [Suite::Relations, Suite::Tabtopi, Suite::Stability, Suite::Bijections] {
            let report = run(suite, &opts);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn failures_are_reported() {
        let c = check_all("odd", &[1, 2, 3, 4], |&k| ensure(k % 2 == 1, || format!("{k} is even")));
        assert_eq!(c.failure.as_deref(), Some("2 is even"));
        let report = SuiteReport { suite: Suite::Qp, checks: vec![c] };
        assert!(!report.passed());
        assert!(report.to_string().starts_with("FAIL qp/odd (4 cases)"));
        assert_eq!(report.to_json()["checks"][0]["counterexample"], "2 is even");
    }

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
    }
}
