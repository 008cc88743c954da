//! Exhaustive search for braiding matrices over small root orders.

use linkdyn::braiding::brute_force_exists;
use linkdyn::cycles::GenusMode;
use linkdyn::existence::FieldSpec;
use linkdyn::families::a3_circle;

fn main() {
    let field = FieldSpec::cyclotomic();
    for n in 2..=4 {
        let o = brute_force_exists(&a3_circle(n), &field, GenusMode::Finite, 20, None).unwrap();
        println!("A_3 circle n = {n}: {o}");
    }
}
