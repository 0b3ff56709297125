//! C(1,1,0) is a standard isotope of J2 = C(1,0,0) but not isomorphic to it.
//!
//! Pass `gf 3` or `gf 5` as arguments to redo the computation over F_p.

use isotopes::catalog::witness_lemma10;
use isotopes::exactmath::Field;

fn main() -> isotopes::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let field: Field = if args.is_empty() {
        Field::rational()
    } else {
        args.join(" ").parse()?
    };
    let cert = witness_lemma10(field);
    println!("{cert}");
    std::process::exit(if cert.verdict() { 0 } else { 1 });
}
