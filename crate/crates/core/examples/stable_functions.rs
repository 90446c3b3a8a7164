//! Truncated stable Grothendieck functions, the Ω involution and stability.

use grothendieck::stable::{
    omega, stability_check, stable_double, stable_double_via_tableaux, stable_single, stable_single_via_operators,
    weak_stable_double,
};
use grothendieck::{Family, Model, Permutation, TruncationSpec};

fn main() {
    let w: Permutation = "1,3,2".parse().unwrap();
    let t = TruncationSpec::new(2, 3).unwrap();

    let g = stable_single(&w, t);
    assert_eq!(g, stable_single_via_operators(&w, t));
    println!("single, m=2, D=3: {g}");

    let gg = stable_double(&w, t);
    assert_eq!(gg, stable_double_via_tableaux(&w, t));
    println!("double: {gg}");

    let wide = TruncationSpec::new(3, 3).unwrap();
    let flipped = omega(&stable_double(&w, wide), Family::X, wide).unwrap();
    println!("omega_x at m=3: {flipped}");
    println!("weak double: {}", weak_stable_double(&w, t));

    for m in 1..=3 {
        let ok = stability_check(Model::StableDouble, &w, TruncationSpec::new(m, 3).unwrap());
        println!("stable with m={m}, D=3: {ok}");
    }
}
