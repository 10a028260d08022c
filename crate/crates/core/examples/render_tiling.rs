//! Writes an SVG of the {p,q} tessellation, tiles coloured by word length
//! when the tiling is realizable.
//!
//! `cargo run --example render_tiling -- 5 4 3 tiling.svg`

use fuchsian_tiles::criterion::{construct_sigma, smallest_divisor_in_range};
use fuchsian_tiles::hgeom::Polygon;
use fuchsian_tiles::svg;
use fuchsian_tiles::tess::{generate_patch, reference_patch, EdgePairing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |k: usize, default: u32| args.get(k).map_or(Ok(default), |s| s.parse());
    let (p, q, depth) = (num(0, 5)?, num(1, 4)?, num(2, 3)? as usize);
    let out = args
        .get(3)
        .cloned()
        .unwrap_or_else(|| format!("tiling_{p}_{q}.svg"));

    let polygon = Polygon::regular(p, q)?;
    let reference = reference_patch(p, q, depth)?;
    let coloring = match smallest_divisor_in_range(p, q) {
        Some(m) => {
            let ep = EdgePairing::new(polygon.clone(), construct_sigma(p, m)?.sigma)?;
            Some(generate_patch(&ep, depth)?)
        }
        None => None,
    };
    std::fs::write(&out, svg::render(&polygon, &reference, coloring.as_ref()))?;
    println!("wrote {} tiles to {out}", reference.len());
    Ok(())
}
