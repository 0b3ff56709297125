//! The isotope of C3 by R_{x+y+z}^-1 is C(-2); both have nil-rank 3.

use isotopes::catalog::witness_theorem2;
use isotopes::exactmath::Field;

fn main() {
    let cert = witness_theorem2(Field::rational());
    println!("{cert}");
    println!("{}", serde_json::to_string_pretty(&cert.to_json()).unwrap());
}
