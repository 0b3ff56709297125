//! Reads the shipped algebra files, builds an isotope from a matrix file and
//! writes it back out.

use std::path::Path;

use isotopes::format::{parse_algebra_file, parse_matrix_file, table_summary, write_algebra_file};
use isotopes::isotopy::{express_as_right_mult, standard_isotope};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/algebras");
    for name in ["j2", "c2", "c3", "c_minus2", "c110", "g2", "g3"] {
        let a = parse_algebra_file(&std::fs::read_to_string(dir.join(format!("{name}.alg")))?)?;
        let unit = a.find_unit().map_or("none".to_string(), |u| u.to_string());
        println!("{name:>8}: {}  (unit: {unit})", table_summary(&a));
    }
    let j2 = parse_algebra_file(&std::fs::read_to_string(dir.join("j2.alg"))?)?;
    let phi = parse_matrix_file(
        &std::fs::read_to_string(dir.join("phi_lemma10.mat"))?,
        j2.field(),
    )?;
    let iso = standard_isotope(&j2, &phi)?;
    println!("\nJ2^(phi,phi):\n{}", write_algebra_file(&iso));
    let g = express_as_right_mult(&j2, &phi.inverse()?).expect("phi^-1 = R_(1+x)");
    println!("phi^-1 = R_g with g = {}", g.element);
    Ok(())
}
