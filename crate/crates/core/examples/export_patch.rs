//! Prints the generated tile patch as JSON.
//!
//! `cargo run --example export_patch -- 4 6 2`

use fuchsian_tiles::criterion::{construct_sigma, smallest_divisor_in_range};
use fuchsian_tiles::hgeom::Polygon;
use fuchsian_tiles::tess::{generate_patch, EdgePairing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (p, q, depth) = match args[..] {
        [p, q, d] => (p, q, d as usize),
        _ => (4, 6, 2),
    };
    let m = smallest_divisor_in_range(p, q).ok_or("not realizable")?;
    let ep = EdgePairing::new(Polygon::regular(p, q)?, construct_sigma(p, m)?.sigma)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&generate_patch(&ep, depth)?)?
    );
    Ok(())
}
