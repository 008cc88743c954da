//! Parses a diagram file and prints its normalized form.

use linkdyn::cli::parse;

const TEXT: &str = "\
# two A_2 components linked across
vertices 4
edge 1 2 -1 -1
edge 3 4 -1 -1
link 1 3
linkable 2 4
field cyclotomic
";

fn main() {
    let f = parse(TEXT).unwrap();
    print!("{}", f.serialize());
    match parse("vertices 2\nedge 1 2 -2 -2 -1\n") {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("error: {e}"),
    }
}
