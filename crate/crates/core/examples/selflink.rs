//! Genera and order constraints for a component linked to itself.

use linkdyn::diagram::{standard_matrix, ComponentType, LinkMode, LinkableDynkinDiagram, Series};
use linkdyn::existence::{selflink_genus, selflink_order_constraint};

fn main() {
    for (ty, i, j) in [(ComponentType::Finite(Series::A, 4), 0, 3), (ComponentType::Finite(Series::B, 3), 0, 2)] {
        let d = LinkableDynkinDiagram::new(standard_matrix(ty).unwrap(), &[(i, j)], &[(i, j)], LinkMode::SelfLink).unwrap();
        println!("{ty}, link {} {}: genus {}", i + 1, j + 1, selflink_genus(&d, i, j).unwrap());
    }
    for (a, b) in [(-1, -1), (-1, -2), (-1, -3), (-2, -2)] {
        println!("neighbours with ({a}, {b}): ord(b_ii) divides {}", selflink_order_constraint(a, b).unwrap());
    }
}
