//! Grothendieck polynomials from divided differences.

use grothendieck::operators::{grothendieck_double, grothendieck_single, staircase_product};
use grothendieck::{Permutation, Polynomial};

fn main() {
    for omega in Permutation::all(3) {
        println!("G_{omega}(x) = {}", grothendieck_single(&omega));
    }
    let omega: Permutation = "1,3,2".parse().unwrap();
    println!("G_{omega}(x,y) = {}", grothendieck_double(&omega));

    // π_i is a projector up to sign
    let p = Polynomial::monomial(3, &[2, 1, 0], &[0, 0, 0], 1).unwrap();
    let once = p.pi(1).unwrap();
    println!("pi_1(x1^2 x2) = {once}");
    assert_eq!(once.pi(1).unwrap(), -&once);

    let top = Permutation::longest(3);
    assert_eq!(grothendieck_double(&top), staircase_product(2));
    println!("longest element gives the staircase product ({} terms)", staircase_product(2).len());
}
