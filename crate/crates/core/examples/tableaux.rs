//! Set-valued, primed and shifted tableaux and their generating functions.

use grothendieck::tableau::{
    enumerate_svt, f_coefficients, genfun_psvt, genfun_svt, hecke_tableau_counts, q_schur, schur_polynomial,
};
use grothendieck::{Partition, Permutation, SkewShape};

fn main() {
    let two = Partition::new(vec![2]).unwrap();
    let shape = SkewShape::straight(two.clone());
    for t in enumerate_svt(&shape, 2, 3) {
        println!("{}", t.to_string().trim_end());
    }
    println!("G_[2](x1,x2) to degree 3 = {}", genfun_svt(&shape, 2, 3));
    println!("s_[2](x1,x2) = {}", schur_polynomial(&two, 2));
    println!("GP_[1] = {}", genfun_psvt(&Partition::new(vec![1]).unwrap(), 2, 2));

    let omega: Permutation = "1,4,3,2".parse().unwrap();
    println!("Hecke tableaux of {omega} by shape: {:?}", hecke_tableau_counts(&omega));

    let mu = Partition::new(vec![2, 1]).unwrap();
    for (lambda, c) in f_coefficients(&mu).unwrap() {
        println!("F^{lambda}_{mu} = {c}; Q{lambda}(x1,x2) = {}", q_schur(&lambda, 2, 3).unwrap());
    }
}
