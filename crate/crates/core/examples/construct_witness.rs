//! Builds the explicit edge-pairing involution for a given p and divisor m.
//!
//! `cargo run --example construct_witness -- 11 4`

use fuchsian_tiles::criterion::{construct_sigma, sigma_transpositions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (p, m) = match args[..] {
        [p, m] => (p, m),
        _ => (11, 4),
    };
    let w = construct_sigma(p, m)?;
    println!("p = {p}, m = {m}  (p = {}·{m} + {})", p / m, p % m);
    println!("transpositions: {:?}", sigma_transpositions(p, m)?);
    println!("sigma      = {}", w.sigma);
    println!("sigma·rho  = {}", w.sigma_rho());
    println!("cycle type = {:?}", w.sigma_rho().cycle_type());
    println!("order      = {}", w.m);
    Ok(())
}
