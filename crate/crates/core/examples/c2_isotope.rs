//! C2 is not unital, yet its isotope by R_a is the Jordan algebra J2.

use isotopes::catalog::witness_lemma6;
use isotopes::exactmath::Field;

fn main() {
    let cert = witness_lemma6(Field::rational());
    println!("{cert}");
}
