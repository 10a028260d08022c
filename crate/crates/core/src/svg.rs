//! SVG rendering of tile patches in the Poincaré disk.
//!
//! Geodesic edges are arcs of circles orthogonal to the unit circle, or
//! straight chords when the endpoints are collinear with the origin.

use std::fmt::Write;

use num_complex::Complex64;

use crate::hgeom::{DiskPoint, Polygon};
use crate::tess::TessellationPatch;

/// Endpoints whose cross product is below this are drawn as a chord.
pub const COLLINEAR_TOL: f64 = 1e-12;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 10.0;

// Fill per word length; depth 0 is the base tile.
const PALETTE: [&str; 6] = [
    "#d7263d", "#f49d37", "#f5d547", "#3f88c5", "#1b998b", "#8e6c8a",
];

/// One geodesic segment as it should be drawn.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geodesic {
    Chord,
    /// Arc of the circle with this centre and radius, both in disk
    /// coordinates.
    Arc {
        center: Complex64,
        radius: f64,
    },
}

/// The circle through `a` and `b` orthogonal to the unit circle.
///
/// Its centre `c` satisfies `2⟨c, a⟩ = |a|² + 1` and `2⟨c, b⟩ = |b|² + 1`,
/// and then `|c|² = radius² + 1`.
pub fn geodesic(a: DiskPoint, b: DiskPoint) -> Geodesic {
    let (a, b) = (a.z(), b.z());
    let det = a.re * b.im - a.im * b.re;
    if det.abs() < COLLINEAR_TOL {
        return Geodesic::Chord;
    }
    let ra = (a.norm_sqr() + 1.0) / 2.0;
    let rb = (b.norm_sqr() + 1.0) / 2.0;
    let center = Complex64::new((ra * b.im - rb * a.im) / det, (a.re * rb - b.re * ra) / det);
    Geodesic::Arc {
        center,
        radius: (center - a).norm(),
    }
}

fn to_screen(z: Complex64) -> (f64, f64) {
    let scale = SIZE / 2.0 - MARGIN;
    (SIZE / 2.0 + scale * z.re, SIZE / 2.0 - scale * z.im)
}

fn segment(out: &mut String, a: DiskPoint, b: DiskPoint) {
    let (bx, by) = to_screen(b.z());
    match geodesic(a, b) {
        Geodesic::Chord => {
            let _ = write!(out, " L{bx:.6},{by:.6}");
        }
        Geodesic::Arc { center, radius } => {
            let scale = SIZE / 2.0 - MARGIN;
            let (ax, ay) = to_screen(a.z());
            let (cx, cy) = to_screen(center);
            // minor arc; sweep follows the turn from a to b about c in
            // screen coordinates
            let cross = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
            let sweep = u8::from(cross > 0.0);
            let r = radius * scale;
            let _ = write!(out, " A{r:.6},{r:.6} 0 0 {sweep} {bx:.6},{by:.6}");
        }
    }
}

/// Path data for one tile: the image of `polygon` under the tile's isometry.
pub fn tile_path(polygon: &Polygon, tile: &crate::tess::Tile) -> String {
    let vertices: Vec<DiskPoint> = polygon
        .vertices()
        .iter()
        .map(|&v| tile.isometry.apply(v))
        .collect();
    let (x0, y0) = to_screen(vertices[0].z());
    let mut d = format!("M{x0:.6},{y0:.6}");
    for k in 0..vertices.len() {
        segment(&mut d, vertices[k], vertices[(k + 1) % vertices.len()]);
    }
    d.push_str(" Z");
    d
}

/// Renders every tile of `reference`. When `coloring` is given, each tile
/// is filled by the word length of the matching tile in that patch.
pub fn render(
    polygon: &Polygon,
    reference: &TessellationPatch,
    coloring: Option<&TessellationPatch>,
) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let c = SIZE / 2.0;
    let r = SIZE / 2.0 - MARGIN;
    let _ = writeln!(
        out,
        r##"<path class="boundary" d="M{:.6},{c:.6} A{r:.6},{r:.6} 0 1 0 {:.6},{c:.6} A{r:.6},{r:.6} 0 1 0 {:.6},{c:.6} Z" fill="#ffffff" stroke="#000000" stroke-width="1.5"/>"##,
        c - r,
        c + r,
        c - r,
    );
    for tile in &reference.tiles {
        let fill = coloring
            .and_then(|patch| patch.find(tile.center))
            .map(|t| PALETTE[t.depth % PALETTE.len()])
            .unwrap_or("none");
        let _ = writeln!(
            out,
            r##"<path class="tile" d="{}" fill="{fill}" fill-opacity="0.6" stroke="#202020" stroke-width="0.8"/>"##,
            tile_path(polygon, tile)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tess::reference_patch;

    fn pt(re: f64, im: f64) -> DiskPoint {
        DiskPoint::new(Complex64::new(re, im)).unwrap()
    }

    #[test]
    fn arcs_are_orthogonal_to_the_boundary() {
        let (a, b) = (pt(0.3, 0.2), pt(-0.1, 0.6));
        let Geodesic::Arc { center, radius } = geodesic(a, b) else {
            panic!("expected an arc");
        };
        assert!(((center - a.z()).norm() - radius).abs() < 1e-12);
        assert!(((center - b.z()).norm() - radius).abs() < 1e-12);
        assert!((center.norm_sqr() - radius * radius - 1.0).abs() < 1e-12);
    }

    #[test]
    fn diameters_are_chords() {
        assert_eq!(geodesic(pt(0.2, 0.2), pt(-0.5, -0.5)), Geodesic::Chord);
        assert_eq!(geodesic(DiskPoint::ORIGIN, pt(0.1, 0.7)), Geodesic::Chord);
    }

    #[test]
    fn one_path_per_tile() {
        let polygon = Polygon::regular(5, 4).unwrap();
        let patch = reference_patch(5, 4, 1).unwrap();
        let svg = render(&polygon, &patch, None);
        assert_eq!(svg.matches(r#"class="tile""#).count(), 6);
        assert!(!svg.contains("<text") && !svg.contains("<script"));

        let single = render(&polygon, &reference_patch(5, 4, 0).unwrap(), None);
        let tile_line = single
            .lines()
            .find(|l| l.contains(r#"class="tile""#))
            .unwrap();
        assert_eq!(
            tile_line.matches(" A").count() + tile_line.matches(" L").count(),
            5
        );
    }
}
