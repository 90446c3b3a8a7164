//! Fixed worked examples, shared by the verification suites and tests.

use crate::factorization::{Factorization, Kind, Letter};
use crate::perm::Permutation;
use crate::tableau::{Entry, Partition, Tableau};

/// A Hecke insertion step: `(P, Q)` before, inserted letter and label, `(P, Q)` after.
pub struct InsertionStep {
    pub p_before: Tableau,
    pub q_before: Tableau,
    pub letter: usize,
    pub label: usize,
    pub p_after: Tableau,
    pub q_after: Tableau,
}

pub fn insertion_step() -> InsertionStep {
    let p_before = Tableau::from_values(&[
        vec![1, 2, 4, 5],
        vec![2, 4, 6, 8],
        vec![3, 5, 7],
        vec![4, 7],
        vec![6, 8],
        vec![9],
    ])
    .unwrap();
    let q_before = Tableau::from_values(&[
        vec![1, 2, 3, 4],
        vec![5, 6, 7, 8],
        vec![9, 10, 11],
        vec![12, 13],
        vec![14, 15],
        vec![16],
    ])
    .unwrap();
    let p_after = Tableau::from_values(&[
        vec![1, 2, 3, 5],
        vec![2, 4, 6, 8],
        vec![3, 5, 7],
        vec![4, 7],
        vec![6, 8],
        vec![9],
    ])
    .unwrap();
    let mut rows = q_before.rows().to_vec();
    rows[4][1].push(Entry::plain(17));
    let q_after = Tableau::from_rows(rows).unwrap();
    InsertionStep { p_before, q_before, letter: 3, label: 17, p_after, q_after }
}

/// Two words with the same insertion tableau but different recording tableaux.
pub fn insertion_traces() -> Vec<(&'static str, Tableau, Tableau)> {
    vec![
        (
            "1322",
            Tableau::from_values(&[vec![1, 2], vec![3]]).unwrap(),
            Tableau::parse(&[&["1", "24"], &["3"]]).unwrap(),
        ),
        (
            "1312",
            Tableau::from_values(&[vec![1, 2], vec![3]]).unwrap(),
            Tableau::parse(&[&["1", "2"], &["34"]]).unwrap(),
        ),
    ]
}

pub const LADDER_INPUT: (&str, &str) = ("123568", "8752");
pub const LADDER: [&str; 9] = [
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
pub const LADDER_OUTPUT: (&str, &str) = ("8653", "123567");

/// `Ψ_{2,3}` on `n = 9`: `(f_j, f_ex)` in, `(f_ex, f_j)` out.
pub const PSI: ((&str, &str), (&str, &str)) = (("9764④③2②", "5689"), ("45789", "9865③2②"));

pub const CHAIN_INPUT: &str = "(3③②1①)(③2)(3③)()";
pub const CHAIN: [&str; 9] = [
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
pub const CHAIN_OUTPUT: &str = "()(3)(23)(12)|(21)(3)(3)()";
/// A final line with a copying slip in `f_1`; it changes the weight, so no weight preserving map produces it.
pub const CHAIN_OUTPUT_AS_PRINTED: &str = "()(3)(23)(13)|(321)(3)(3)()";

pub fn chain_input() -> Factorization {
    Factorization::parse(Kind::CircledBounded, 3, CHAIN_INPUT).unwrap()
}

pub const PHI_INPUT: &str = "(124)(13)|(432)(3)";

pub fn phi_output() -> (Tableau, Tableau) {
    (
        Tableau::from_values(&[vec![1, 2, 3, 4], vec![2, 3, 4], vec![4]]).unwrap(),
        Tableau::parse(&[&["1'", "1'", "2'", "1"], &["2'", "2'1", "2"], &["1"]]).unwrap(),
    )
}

/// The printed permutation of the Q-Schur example.
///
/// Its tableaux and factorizations all evaluate to the inverse under the
/// right-to-left convention used everywhere else, see [`qp_permutation`].
pub fn qp_printed_permutation() -> Permutation {
    Permutation::new(vec![3, 1, 2, 5, 4]).unwrap()
}

pub fn qp_permutation() -> Permutation {
    qp_printed_permutation().inverse()
}

pub const QP_HOOKS: [&str; 12] = [
    "(1124)", "(1224)", "(1244)", "(④112)", "(④122)", "(④124)", "(①124)", "(①224)", "(①244)", "(④①12)",
    "(④①22)", "(④①24)",
];

pub fn qp_hooks() -> Vec<Factorization> {
    QP_HOOKS.iter().map(|s| Factorization::parse(Kind::Hook, 4, s).unwrap()).collect()
}

pub fn qp_hecke_tableaux() -> Vec<Tableau> {
    vec![
        Tableau::from_values(&[vec![1, 2], vec![4]]).unwrap(),
        Tableau::from_values(&[vec![1, 2, 4], vec![4]]).unwrap(),
        Tableau::from_values(&[vec![1, 2, 4]]).unwrap(),
    ]
}

pub fn qp_shapes() -> Vec<Partition> {
    [vec![2, 1], vec![3, 1], vec![3]].into_iter().map(|p| Partition::new(p).unwrap()).collect()
}

pub const QP_STRATUM_JSON: &str = r#"{"[4]":6,"[3,1]":4}"#;
pub const QP_X1_POWER_COEFFICIENT: u64 = 12;

/// A primed tableau with the starting and lattice properties for `i ≤ 3` only.
pub fn lattice_tableau() -> Tableau {
    Tableau::parse(&[
        &["1'", "1", "1", "1", "1", "1"],
        &["1", "2'", "2", "2"],
        &["2'", "2", "3'", "3"],
        &["2", "3'", "3", "4"],
        &["3", "4'", "4"],
    ])
    .unwrap()
}

pub fn letters(s: &str) -> Vec<Letter> {
    s.chars()
        .map(|c| match c.to_digit(10) {
            Some(v) => Letter::plain(v as usize),
            None => Letter::circled((c as u32 - 0x2460 + 1) as usize),
        })
        .collect()
}

pub fn digits(s: &str) -> Vec<usize> {
    s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::HeckeWord;

    #[test]
    fn fixtures_parse_and_agree() {
        let step = insertion_step();
        assert_eq!(step.p_before.shape(), step.q_before.shape());
        let omega = qp_permutation();
        for f in qp_hooks() {
            assert_eq!(f.permutation(), omega, "{}", f.compact());
        }
        for t in qp_hecke_tableaux() {
            let w = HeckeWord::new(t.reading_word(), 4).unwrap();
            assert_eq!(w.eval(), omega);
            assert_ne!(w.eval(), qp_printed_permutation());
        }
        assert_eq!(chain_input().letter_count(), 9);
    }
}
