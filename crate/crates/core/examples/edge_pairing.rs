//! Builds the edge-pairing isometries for a realizable {p,q} and checks the
//! relation around every vertex of the base polygon.
//!
//! `cargo run --example edge_pairing -- 7 3`

use fuchsian_tiles::criterion::{construct_sigma, smallest_divisor_in_range};
use fuchsian_tiles::hgeom::Polygon;
use fuchsian_tiles::tess::EdgePairing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (p, q) = match args[..] {
        [p, q] => (p, q),
        _ => (7, 3),
    };
    let m = smallest_divisor_in_range(p, q).ok_or("not realizable")?;
    let w = construct_sigma(p, m)?;
    let ep = EdgePairing::new(Polygon::regular(p, q)?, w.sigma)?;

    println!("{{{p},{q}}} with sigma = {}", ep.sigma());
    for (i, g) in ep.generators().iter().enumerate() {
        println!("γ_{} = {}", i + 1, serde_json::to_string(g)?);
    }
    for i in 1..=p as usize {
        let word = ep.vertex_word(q, i)?;
        let residual = ep.vertex_relation_residual(q, i)?;
        println!("v_{i}: word {word:?} residual {residual:.2e}");
    }
    Ok(())
}
