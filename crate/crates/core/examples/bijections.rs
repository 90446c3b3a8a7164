//! The ladder maps, Ψ and the circled-to-double bijection.

use grothendieck::bijections::{arrow_down_ladder, circled_to_double_chain, double_to_circled, psi};
use grothendieck::worked::{digits, letters};
use grothendieck::{Factorization, Kind};

fn main() {
    for q in arrow_down_ladder(&digits("123568"), &digits("8752"), 8).unwrap() {
        println!("{q}");
    }

    let (ex, fj) = psi(9, 2, 3, &letters("9764④③2②"), &digits("5689")).unwrap();
    let fj: String = fj.iter().map(|l| l.to_string()).collect();
    println!("psi_23: ex = {ex:?}, f_2 = ({fj})");

    let f = Factorization::parse(Kind::CircledBounded, 3, "(3③②1①)(③2)(3③)()").unwrap();
    let (g, chain) = circled_to_double_chain(&f).unwrap();
    for state in &chain {
        println!("  {state}");
    }
    println!("{} -> {}", f.compact(), g.compact());
    assert_eq!(g.weight(), f.weight());
    assert_eq!(double_to_circled(&g).unwrap(), f);
}
