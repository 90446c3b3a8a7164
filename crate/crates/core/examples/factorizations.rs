//! Bounded Hecke factorizations and their generating functions.

use grothendieck::factorization::{
    bounded_letter_cap, cauchy_sum, enumerate_circled_bounded, enumerate_double_bounded, genfun,
};
use grothendieck::operators::grothendieck_double;
use grothendieck::{Factorization, Kind, Permutation};

fn main() {
    let f = Factorization::parse(Kind::CircledBounded, 4, "(④3②1)(3③)(43③)(4)()").unwrap();
    let w = f.weight();
    println!("{} is a factorization of {}, x-weight {:?}, y-weight {:?}", f.compact(), f.permutation(), w.x, w.y);

    let omega: Permutation = "2,3,1".parse().unwrap();
    let cap = bounded_letter_cap(Kind::CircledBounded, omega.n());
    let circled = enumerate_circled_bounded(&omega, cap);
    for g in &circled {
        println!("  {}", g.compact());
    }
    let g = grothendieck_double(&omega);
    assert_eq!(genfun(&circled, g.m()).unwrap(), g);
    assert_eq!(genfun(&enumerate_double_bounded(&omega, cap), g.m()).unwrap(), g);
    assert_eq!(cauchy_sum(&omega), g);
    println!("circled, double and cauchy models all give {g}");
}
