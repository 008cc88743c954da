//! Cycles, heights and genera of the circle families.

use linkdyn::cycles::{absolute_height, enumerate_cycles, genus, level0_vertices, GenusMode};
use linkdyn::families::{a3_circle, b3_circle};

fn main() {
    for (name, d) in [("A_3 circle, n = 3", a3_circle(3)), ("B_3 circle, n = 3", b3_circle(3))] {
        println!("{name}");
        for c in enumerate_cycles(&d) {
            let g = genus(&d, &c, GenusMode::Finite).unwrap();
            let heights: Vec<_> = c.vertices().iter().map(|&v| absolute_height(&d, v, &c).unwrap()).collect();
            println!("  cycle {c}: genus {g}, heights {heights:?}");
            let level0: Vec<_> = level0_vertices(&d, &c).iter().map(|v| v + 1).collect();
            println!("  Level 0 vertices {level0:?}");
        }
    }
}
