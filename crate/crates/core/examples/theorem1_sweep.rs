//! Every simple C(α, β, γ) of nil-rank 2 over F_p, chained to J2.
//!
//! cargo run --release --example theorem1_sweep -- 7

use isotopes::catalog::witness_theorem1;
use isotopes::exactmath::Field;
use isotopes::Error;

fn main() -> isotopes::Result<()> {
    let p: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let f = Field::prime(p)?;
    let (mut ok, mut no_root, mut nil3, mut failed) = (0, 0, 0, 0);
    for a in 1..p {
        for b in 0..p {
            for g in 0..p {
                match witness_theorem1(&f.residue(a), &f.residue(b), &f.residue(g)) {
                    Ok(c) if c.verdict() => ok += 1,
                    Ok(c) => {
                        failed += 1;
                        eprintln!("{c}");
                    }
                    Err(Error::SquareRootUnavailable(_)) => no_root += 1,
                    Err(Error::NilRank3(_)) => nil3 += 1,
                    Err(e) => return Err(e),
                }
            }
        }
    }
    println!("F_{p}: {ok} verified chains to J2, {nil3} of nil-rank 3, {no_root} need a square root outside F_{p}, {failed} failed");
    Ok(())
}
