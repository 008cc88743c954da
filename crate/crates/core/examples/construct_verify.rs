//! Builds a braiding matrix for a linkable diagram and checks it.

use linkdyn::braiding::{construct, verify, VerifyMode};
use linkdyn::cycles::GenusMode;
use linkdyn::existence::FieldSpec;
use linkdyn::families::a3_circle;

fn main() {
    let d = a3_circle(4);
    let b = construct(&d, &FieldSpec::cyclotomic(), GenusMode::Finite, None, 0).unwrap();
    println!("{b}");
    println!("{}", verify(&b, &d, VerifyMode::Finite));
}
