//! Half-weak stable functions and their Q-Schur expansion.

use grothendieck::factorization::enumerate_hook;
use grothendieck::stable::{halfweak_stable, halfweak_via_psmt, qschur_expansion};
use grothendieck::{Permutation, TruncationSpec};

fn main() {
    let omega: Permutation = "2,3,1,5,4".parse().unwrap();
    let t = TruncationSpec::new(4, 4).unwrap();

    let one_factor: Vec<String> =
        enumerate_hook(&omega, 1, 4).iter().filter(|f| f.letter_count() == 4).map(|f| f.compact()).collect();
    println!("{} one-factor hook factorizations: {}", one_factor.len(), one_factor.join(" "));

    let hw = halfweak_stable(&omega, t);
    assert_eq!(hw, halfweak_via_psmt(&omega, t));
    let diag = hw.set_y_equal_x();
    println!("x1^4 coefficient at x = y: {}", diag.coefficient(&[4, 0, 0, 0], &[0, 0, 0, 0]));

    let q = qschur_expansion(&omega, 4).unwrap();
    println!("{q}");
    println!("{}", q.to_json());
    assert_eq!(q.evaluate(4, 4).unwrap(), diag);
}
