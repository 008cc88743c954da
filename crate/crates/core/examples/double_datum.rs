//! Linking datum of the quantized enveloping algebra of B_2 over Z^2.

use linkdyn::diagram::{standard_matrix, ComponentType, Series};
use linkdyn::realization::double_datum;

fn main() {
    let cartan = standard_matrix(ComponentType::Finite(Series::B, 2)).unwrap();
    let sym = cartan.symmetrizer().unwrap();
    let datum = double_datum(&cartan, &sym, 7).unwrap();
    print!("{}", datum.to_text());
    println!("braiding matrix:\n{}", datum.braiding_matrix());
    println!("linking identity: {}", if datum.link_failure().is_none() { "holds" } else { "fails" });
}
