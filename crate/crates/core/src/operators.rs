//! Grothendieck polynomials from isobaric divided differences.

use crate::perm::{HeckeWord, Permutation};
use crate::poly::Polynomial;

/// `x_1^n x_2^{n-1} ⋯ x_n` in `n+1` variables.
pub fn staircase_monomial(n: usize) -> Polynomial {
    let exps: Vec<usize> = (0..=n).map(|i| n - i).collect();
    Polynomial::monomial(n + 1, &exps, &[], 1).unwrap()
}

/// `∏_{i+j ≤ n+1} (x_i + y_j + x_i y_j)` in `n+1` variables per family.
pub fn staircase_product(n: usize) -> Polynomial {
    let m = n + 1;
    let mut out = Polynomial::one(m);
    for i in 1..=n {
        for j in 1..=n + 1 - i {
            let (xi, yj) = (Polynomial::x(m, i), Polynomial::y(m, j));
            let factor = &(&xi + &yj) + &(&xi * &yj);
            out = &out * &factor;
        }
    }
    out
}

/// The operator word used by default: least reduced word of `ω⁻¹ω₀`.
pub fn operator_word(omega: &Permutation) -> HeckeWord {
    let w0 = Permutation::longest(omega.size());
    omega.inverse().compose(&w0).least_reduced_word()
}

pub fn grothendieck_single(omega: &Permutation) -> Polynomial {
    grothendieck_single_with(omega, &operator_word(omega))
}

/// Same as [`grothendieck_single`] but along a caller-chosen reduced word of `ω⁻¹ω₀`.
pub fn grothendieck_single_with(omega: &Permutation, word: &HeckeWord) -> Polynomial {
    staircase_monomial(omega.n()).pi_word(word).expect("operator word within range")
}

pub fn grothendieck_double(omega: &Permutation) -> Polynomial {
    grothendieck_double_with(omega, &operator_word(omega))
}

pub fn grothendieck_double_with(omega: &Permutation, word: &HeckeWord) -> Polynomial {
    staircase_product(omega.n()).pi_word(word).expect("operator word within range")
}
