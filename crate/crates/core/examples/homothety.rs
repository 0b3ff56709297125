//! The homothety ωI, ω = (στ)^-1, identifies A^(σI,τI) with A.
//!
//! cargo run --example homothety -- 2 3

use isotopes::catalog::{standard_catalog, witness_lemma1};
use isotopes::exactmath::Field;

fn main() -> isotopes::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let q = Field::rational();
    let sigma = q.parse_scalar(args.first().map_or("2", String::as_str))?;
    let tau = q.parse_scalar(args.get(1).map_or("3", String::as_str))?;
    for (name, a) in standard_catalog(q, 4) {
        let cert = witness_lemma1(&a, &sigma, &tau)?;
        println!(
            "{name:>9}: omega = {}, verified = {}",
            cert.value("omega").unwrap_or("?"),
            cert.verdict()
        );
    }
    Ok(())
}
