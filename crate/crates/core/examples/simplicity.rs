//! Multiplication envelopes, exhaustive ideal search, and the G_n family.

use isotopes::algebra::{envelope_dimension, ideal_search_exhaustive, is_simple_closure};
use isotopes::catalog::{gn, standard_catalog, witness_prop1, witness_prop2};
use isotopes::exactmath::Field;

fn main() -> isotopes::Result<()> {
    for p in [3, 5] {
        println!("over F_{p}:");
        for (name, a) in standard_catalog(Field::prime(p)?, 4) {
            let ideals = ideal_search_exhaustive(&a)?;
            println!(
                "  {name:>9}: envelope {:>2}/{:<2} simple over closure {:<5} ideals over F_{p}: {}",
                envelope_dimension(&a),
                a.dim() * a.dim(),
                is_simple_closure(&a),
                ideals.len()
            );
        }
    }
    for n in 2..=6 {
        let g = gn(Field::rational(), n)?;
        let p1 = witness_prop1(n)?;
        let p2 = witness_prop2(n)?;
        println!(
            "G{n}: envelope {} (prop1 {}), R_e^-1 isotope not simple (prop2 {})",
            envelope_dimension(&g),
            p1.verdict(),
            p2.verdict()
        );
    }
    Ok(())
}
