//! Nil-ranks of the catalog over F_5, and the closed form for C(α, β, γ)
//! against enumeration.

use isotopes::catalog::{cabg_ints, standard_catalog};
use isotopes::exactmath::Field;
use isotopes::nilrank::{nil_rank_bruteforce, nil_rank_exact_c};

fn main() -> isotopes::Result<()> {
    let f = Field::prime(5)?;
    for (name, a) in standard_catalog(f, 4) {
        let r = nil_rank_bruteforce(&a)?;
        let w: Vec<String> = r.witnesses.iter().map(ToString::to_string).collect();
        println!("{name:>9}: {}   [{}]", r.rank, w.join(", "));
    }
    let mut agree = 0;
    for a in 1..5 {
        for b in 0..5 {
            for g in 0..5 {
                let exact = nil_rank_exact_c(&f.int(a), &f.int(b), &f.int(g))?;
                let brute = nil_rank_bruteforce(&cabg_ints(f, a, b, g))?;
                assert_eq!(exact.rank, brute.rank, "C({a},{b},{g})");
                agree += 1;
            }
        }
    }
    println!("closed form and enumeration agree on {agree} triples");
    let q = Field::rational();
    let r = nil_rank_exact_c(&q.int(-2), &q.int(-2), &q.int(-2))?;
    println!(
        "C(-2) over Q: rank {}, third witness {}",
        r.rank, r.witnesses[2]
    );
    Ok(())
}
