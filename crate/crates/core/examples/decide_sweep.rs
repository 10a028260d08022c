//! Prints which {p,q} tessellations are tilings by fundamental domains.
//!
//! `cargo run --example decide_sweep`

use fuchsian_tiles::criterion::{qualifying_prime, TessellationType};

fn main() {
    let qs = 3..=20u32;
    print!("p\\q");
    for q in qs.clone() {
        print!("{q:>4}");
    }
    println!();
    for p in 3..=10u32 {
        print!("{p:>3}");
        for q in qs.clone() {
            let cell = match TessellationType::new(p, q) {
                Err(_) => "  .".to_string(),
                Ok(t) => match qualifying_prime(t) {
                    Some(d) => format!("{d:>3}"),
                    None => "  -".to_string(),
                },
            };
            print!(" {cell}");
        }
        println!();
    }
    println!(
        "\nnumber = smallest prime divisor of q (≤ p), - = not realizable, . = not hyperbolic"
    );
}
