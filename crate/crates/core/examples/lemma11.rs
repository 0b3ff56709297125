//! C(ρ) for ρ ∉ {0, -2} as a standard isotope of J2.
//!
//! cargo run --example lemma11 -- 1 1/2 -3

use isotopes::catalog::witness_lemma11;
use isotopes::exactmath::Field;

fn main() -> isotopes::Result<()> {
    let q = Field::rational();
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = ["1", "2", "3", "-1", "1/2", "-1/2", "5", "-2"]
            .map(String::from)
            .to_vec();
    }
    for a in args {
        let rho = q.parse_scalar(&a)?;
        match witness_lemma11(&rho) {
            Ok(cert) => println!(
                "rho = {rho:>4}: gamma = {}, delta = {}, recovered {}, verified = {}",
                cert.value("gamma").unwrap_or("?"),
                cert.value("delta").unwrap_or("?"),
                cert.value("recovered rho").unwrap_or("?"),
                cert.verdict()
            ),
            Err(e) => println!("rho = {rho:>4}: {e}"),
        }
    }
    Ok(())
}
