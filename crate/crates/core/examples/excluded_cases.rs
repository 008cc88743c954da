//! Braiding matrices for the three shapes the existence theorems exclude.

use linkdyn::braiding::{verify, VerifyMode};
use linkdyn::existence::excluded_case_matrix;
use linkdyn::families::ExcludedShape;

fn main() {
    for s in ExcludedShape::ALL {
        let b = excluded_case_matrix(s, 7, s.parameters()).unwrap();
        let mode = if s == ExcludedShape::G2xG2 { VerifyMode::Finite } else { VerifyMode::AffineHomogeneous };
        println!("{s}\n{b}{}\n", verify(&b, &s.diagram(), mode));
    }
}
