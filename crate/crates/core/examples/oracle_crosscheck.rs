//! Cross-checks the prime criterion against an exhaustive search over all
//! involutions of S_p.
//!
//! `cargo run --release --example oracle_crosscheck`

use fuchsian_tiles::criterion::{decide, oracle_scan, TessellationType};

fn main() -> Result<(), fuchsian_tiles::Error> {
    let mut checked = 0;
    for p in 3..=9u32 {
        for q in 3..=40u32 {
            let Ok(t) = TessellationType::new(p, q) else {
                continue;
            };
            let scan = oracle_scan(t)?;
            assert_eq!(decide(t), scan.witness.is_some(), "{{{p},{q}}}");
            checked += 1;
            if q <= 8 {
                match &scan.witness {
                    Some(w) => println!(
                        "{{{p},{q}}}: first witness {} (order {}) after {} candidates",
                        w.sigma, w.m, scan.examined
                    ),
                    None => println!("{{{p},{q}}}: none among {} involutions", scan.examined),
                }
            }
        }
    }
    println!("prime criterion and exhaustive search agree on {checked} types");
    Ok(())
}
