//! Audits that the generated group acts freely and transitively on the
//! tiles, depth by depth.
//!
//! `cargo run --release --example verify_action -- 5 4`

use fuchsian_tiles::criterion::{construct_sigma, smallest_divisor_in_range};
use fuchsian_tiles::hgeom::Polygon;
use fuchsian_tiles::tess::{freeness_check, EdgePairing, FREENESS_DEPTH_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (p, q) = match args[..] {
        [p, q] => (p, q),
        _ => (5, 4),
    };
    let m = smallest_divisor_in_range(p, q).ok_or("not realizable")?;
    let ep = EdgePairing::new(Polygon::regular(p, q)?, construct_sigma(p, m)?.sigma)?;
    println!("{{{p},{q}}} sigma = {}", ep.sigma());
    for depth in 0..=FREENESS_DEPTH_CAP {
        let r = freeness_check(&ep, depth)?;
        println!(
            "depth {depth}: transitive {} free {} tiles {:?} coincidences {} max residual {:.1e}",
            r.transitive_ok, r.free_ok, r.tile_counts, r.coincidences, r.max_residual
        );
    }
    Ok(())
}
