//! Gaussian binomials and the relations of a pointed Hopf algebra.

use linkdyn::diagram::{standard_matrix, ComponentType, Series};
use linkdyn::presentation::{emit_presentation, qbinomial, LaurentPoly};
use linkdyn::realization::double_datum;

fn main() {
    let q = LaurentPoly::q();
    for i in 0..=4 {
        println!("[4, {i}] = {}", qbinomial(4, i, &q).unwrap());
    }
    let cartan = standard_matrix(ComponentType::Finite(Series::A, 2)).unwrap();
    let datum = double_datum(&cartan, &[1, 1], 5).unwrap();
    println!("\n{}", emit_presentation(&datum).unwrap());
}
