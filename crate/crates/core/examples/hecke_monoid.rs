//! The 0-Hecke action on permutations, Hecke words and the Demazure product.

use grothendieck::perm::{demazure_product, enumerate_hecke_words, reduced_words};
use grothendieck::{HeckeWord, Permutation};

fn main() {
    let w = HeckeWord::parse("323211", 3).unwrap();
    let omega = w.eval();
    println!("{w} evaluates to {omega}, {} inversions", omega.inversions());

    for r in reduced_words(&omega) {
        println!("  reduced: {r}");
    }
    // longer words reach the same permutation because s̄_i is idempotent
    let five = enumerate_hecke_words(&omega, 5);
    println!("{} Hecke words of length <= 5", five.len());

    let u: Permutation = "2,1,3,4".parse().unwrap();
    let v: Permutation = "1,3,2,4".parse().unwrap();
    println!("demazure({u}, {v}) = {}", demazure_product(&u, &v));
    println!("demazure({u}, {u}) = {}", demazure_product(&u, &u));
}
