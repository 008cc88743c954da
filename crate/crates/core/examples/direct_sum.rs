//! Block sum of two braiding matrices with fresh cross parameters.

use linkdyn::braiding::{construct, direct_sum, verify, VerifyMode};
use linkdyn::cycles::GenusMode;
use linkdyn::existence::FieldSpec;
use linkdyn::families::a3_circle;

fn main() {
    let f = FieldSpec::cyclotomic();
    let parts: Vec<_> = [2, 4]
        .into_iter()
        .map(|n| {
            let d = a3_circle(n);
            (construct(&d, &f, GenusMode::Finite, None, 0).unwrap(), d)
        })
        .collect();
    let (b, d) = direct_sum(&parts, false).unwrap();
    println!("{b}");
    println!("{}", verify(&b, &d, VerifyMode::Finite));
}
