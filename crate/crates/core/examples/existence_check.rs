//! Existence decisions for linked A_3 circles and the excluded G_2 x G_2 shape.

use linkdyn::existence::{check_affine, check_finite, FieldSpec};
use linkdyn::families::{a3_circle, ExcludedShape};

fn main() {
    let field = FieldSpec::cyclotomic();
    for n in 2..=6 {
        let r = check_finite(&a3_circle(n), &field).unwrap();
        println!("A_3 circle n = {n}:\n{r}\n");
    }
    let r = check_finite(&ExcludedShape::G2xG2.diagram(), &field).unwrap();
    println!("G_2 x G_2:\n{r}\n");
    let r = check_affine(&ExcludedShape::A1AffinexA1Affine.diagram(), &field).unwrap();
    println!("A_1^(1) x A_1^(1):\n{r}");
}
