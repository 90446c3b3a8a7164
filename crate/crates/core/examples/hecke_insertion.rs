//! Hecke insertion of words and of double factorizations.

use grothendieck::insertion::{insert_word, phi, semistandard_insert};
use grothendieck::{Factorization, HeckeWord, Kind};

fn main() {
    for w in ["1322", "1312"] {
        let (p, q) = insert_word(&HeckeWord::parse(w, 3).unwrap()).unwrap();
        println!("{w}:\nP =\n{p}Q =\n{q}");
    }

    let f = Factorization::parse(Kind::Plain, 4, "(31)(421)").unwrap();
    let (p, q) = semistandard_insert(&f).unwrap();
    println!("{}:\nP =\n{p}Q =\n{q}", f.compact());

    // left factors are reversed, inserted, transposed and primed before the right ones go in
    let f = Factorization::parse(Kind::DoubleUnbounded, 4, "(124)(13)|(432)(3)").unwrap();
    let (p, q) = phi(&f).unwrap();
    println!("{}:\nP =\n{p}Q =\n{q}", f.compact());
    assert_eq!(q.weight(), f.weight());
}
