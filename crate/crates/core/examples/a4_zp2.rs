//! Realizability of the linked A_4 self-link over (Z/p)^2.

use linkdyn::realization::{a4_realizable_zp2, count_magic_solutions};

fn main() {
    for p in [5, 7, 11, 13, 19, 29, 31] {
        println!("{}", a4_realizable_zp2(p).unwrap());
        println!("  solutions of the unit equation: {}\n", count_magic_solutions(p).unwrap());
    }
}
