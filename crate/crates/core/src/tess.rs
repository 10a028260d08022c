//! Edge-pairing generators and the tile patches they produce.
//!
//! Generator convention: `γ_i` carries edge `e_i` onto `e_{σ(i)}` with the
//! endpoints swapped, so `γ_i·F` is the tile across `e_{σ(i)}` and
//! `γ_{σ(i)} = γ_i⁻¹` is the map carrying `e_{σ(i)}` onto `e_i`. Under this
//! convention the tile next to `g·F` across `g·e_i` is `g·γ_{σ(i)}·F`, and
//! the word for a loop around vertex `v_i` is
//! `γ_{σρ(i)} γ_{(σρ)²(i)} ⋯ γ_{(σρ)^q(i)}`.

use std::collections::HashMap;
use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hgeom::{distance, DiskPoint, Isometry, Polygon, CONSTRUCTION_TOL, ISOMETRY_EQ_TOL};
use crate::perm::Permutation;

pub const PATCH_DEPTH_CAP: usize = 5;
pub const FREENESS_DEPTH_CAP: usize = 4;

/// Letter for the rotation by `2π/p` about the centre of `F` in
/// reference-patch words.
pub const ROTATE_CENTER: usize = 1;
/// Letter for the rotation by `2π/q` about `v_1` in reference-patch words.
pub const ROTATE_VERTEX: usize = 2;

/// The base polygon, an involution `σ` on its edges, and the generators
/// `γ_1..γ_p` pairing edge `e_i` with `e_{σ(i)}`.
#[derive(Debug, Clone)]
pub struct EdgePairing {
    polygon: Polygon,
    sigma: Permutation,
    gens: Vec<Isometry>,
}

impl EdgePairing {
    pub fn new(polygon: Polygon, sigma: Permutation) -> Result<Self> {
        let p = polygon.p() as usize;
        if sigma.degree() != p {
            return Err(Error::DegreeMismatch {
                left: p,
                right: sigma.degree(),
            });
        }
        if !sigma.is_involution() {
            return Err(Error::NotAnInvolution(sigma.to_string()));
        }
        let gens = (1..=p)
            .map(|i| {
                let (a, b) = polygon.edge(i);
                let (c, d) = polygon.edge(sigma.apply(i));
                Isometry::from_pairs(a, b, d, c)
            })
            .collect::<Result<Vec<_>>>()?;
        let pairing = EdgePairing {
            polygon,
            sigma,
            gens,
        };
        pairing.check_invariants()?;
        Ok(pairing)
    }

    fn check_invariants(&self) -> Result<()> {
        let poly = &self.polygon;
        for i in 1..=self.p() {
            let j = self.sigma.apply(i);
            let g = self.gen(i);
            let (a, b) = poly.edge(i);
            let (c, d) = poly.edge(j);
            let err = distance(g.apply(a), d).max(distance(g.apply(b), c));
            if err > CONSTRUCTION_TOL {
                return Err(Error::Consistency(format!(
                    "γ_{i} misses edge e_{j} by {err:e}"
                )));
            }
            let inv = self.gen(j).compose(g).identity_residual();
            if inv >= ISOMETRY_EQ_TOL {
                return Err(Error::Consistency(format!(
                    "γ_{j}∘γ_{i} is not the identity (residual {inv:e})"
                )));
            }
            let moved = distance(g.apply(poly.center()), poly.center());
            if moved <= poly.inradius() {
                return Err(Error::Consistency(format!(
                    "γ_{i} keeps F in place (centre moved by {moved:e})"
                )));
            }
        }
        Ok(())
    }

    pub fn p(&self) -> usize {
        self.polygon.p() as usize
    }

    pub fn polygon(&self) -> &Polygon {
        &self.polygon
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn generators(&self) -> &[Isometry] {
        &self.gens
    }

    /// `γ_i`, 1-based.
    pub fn gen(&self, i: usize) -> &Isometry {
        &self.gens[i - 1]
    }

    /// `γ_{w_1} ∘ γ_{w_2} ∘ ⋯ ∘ γ_{w_n}`.
    pub fn word_isometry(&self, word: &[usize]) -> Result<Isometry> {
        word.iter().try_fold(Isometry::IDENTITY, |acc, &i| {
            if i == 0 || i > self.p() {
                return Err(Error::EdgeIndex {
                    index: i,
                    p: self.p(),
                });
            }
            Ok(acc.compose(self.gen(i)))
        })
    }

    /// The `q` generator indices `σρ(i), (σρ)²(i), …, (σρ)^q(i)` of the
    /// loop around vertex `v_i`.
    ///
    /// Fails with [`Error::NotAWitness`] unless `(σρ)^q = 1`.
    pub fn vertex_word(&self, q: u32, i: usize) -> Result<Vec<usize>> {
        let p = self.p();
        if !(1..=p).contains(&i) {
            return Err(Error::EdgeIndex { index: i, p });
        }
        let step = self.sigma.compose(&Permutation::rho(p)?)?;
        if !step.pow(q as usize).is_identity() {
            return Err(Error::NotAWitness { q });
        }
        let mut word = Vec::with_capacity(q as usize);
        let mut k = i;
        for _ in 0..q {
            k = step.apply(k);
            word.push(k);
        }
        Ok(word)
    }

    /// How far the vertex-loop product moves the probe points.
    pub fn vertex_relation_residual(&self, q: u32, i: usize) -> Result<f64> {
        let word = self.vertex_word(q, i)?;
        Ok(self.word_isometry(&word)?.identity_residual())
    }

    /// Whether the vertex-loop product around `v_i` is the identity action.
    pub fn vertex_relation_check(&self, q: u32, i: usize) -> Result<bool> {
        Ok(self.vertex_relation_residual(q, i)? < ISOMETRY_EQ_TOL)
    }
}

/// One tile of a patch: the image `g·F` recorded by its centre.
#[derive(Debug, Clone, Serialize)]
pub struct Tile {
    pub center: DiskPoint,
    pub word: Vec<usize>,
    pub depth: usize,
    #[serde(skip)]
    pub isometry: Isometry,
}

/// A finite set of tiles around `F`, each labelled by the first word that
/// reaches it.
#[derive(Debug, Clone, Serialize)]
pub struct TessellationPatch {
    pub p: u32,
    pub q: u32,
    pub depth: usize,
    pub tiles: Vec<Tile>,
    #[serde(skip)]
    index: CenterIndex,
}

impl TessellationPatch {
    fn new(polygon: &Polygon, depth: usize) -> Self {
        let mut patch = TessellationPatch {
            p: polygon.p(),
            q: polygon.q(),
            depth,
            tiles: Vec::new(),
            index: CenterIndex::new(polygon.inradius()),
        };
        patch.push(Tile {
            center: polygon.center(),
            word: Vec::new(),
            depth: 0,
            isometry: Isometry::IDENTITY,
        });
        patch
    }

    fn push(&mut self, tile: Tile) {
        self.index.insert(tile.center, self.tiles.len());
        self.tiles.push(tile);
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    /// The tile whose centre lies within one inradius of `center`.
    pub fn find(&self, center: DiskPoint) -> Option<&Tile> {
        self.index
            .lookup(center, |k| self.tiles[k].center)
            .map(|k| &self.tiles[k])
    }

    /// Number of tiles at each depth `0..=self.depth`.
    pub fn counts_by_depth(&self) -> Vec<usize> {
        let mut counts = vec![0; self.depth + 1];
        for t in &self.tiles {
            counts[t.depth] += 1;
        }
        counts
    }

    fn sort(&mut self) {
        self.tiles
            .sort_by(|a, b| (a.depth, &a.word).cmp(&(b.depth, &b.word)));
        let mut index = CenterIndex::new(self.index.radius);
        for (k, t) in self.tiles.iter().enumerate() {
            index.insert(t.center, k);
        }
        self.index = index;
    }
}

// Buckets centres on a Euclidean grid. Two points within hyperbolic
// distance r are within Euclidean distance r/2, so a cell of side r/2 and
// its eight neighbours cover every candidate.
#[derive(Debug, Clone)]
struct CenterIndex {
    radius: f64,
    cell: f64,
    buckets: HashMap<(i64, i64), Vec<usize>>,
}

impl CenterIndex {
    fn new(radius: f64) -> Self {
        CenterIndex {
            radius,
            cell: radius / 2.0,
            buckets: HashMap::new(),
        }
    }

    fn key(&self, z: DiskPoint) -> (i64, i64) {
        (
            (z.re() / self.cell).floor() as i64,
            (z.im() / self.cell).floor() as i64,
        )
    }

    fn insert(&mut self, z: DiskPoint, k: usize) {
        let key = self.key(z);
        self.buckets.entry(key).or_default().push(k);
    }

    fn lookup(&self, z: DiskPoint, center_of: impl Fn(usize) -> DiskPoint) -> Option<usize> {
        let (x, y) = self.key(z);
        let mut best: Option<usize> = None;
        for dx in -1..=1 {
            for dy in -1..=1 {
                let Some(bucket) = self.buckets.get(&(x + dx, y + dy)) else {
                    continue;
                };
                for &k in bucket {
                    if distance(center_of(k), z) < self.radius && best.is_none_or(|b| k < b) {
                        best = Some(k);
                    }
                }
            }
        }
        best
    }
}

/// A reduced word that landed on a tile already reached by an earlier word.
#[derive(Debug, Clone)]
struct Coincidence {
    tile: usize,
    isometry: Isometry,
}

fn check_depth(depth: usize, cap: usize) -> Result<()> {
    if depth > cap {
        return Err(Error::DepthCap { depth, cap });
    }
    Ok(())
}

// Breadth-first over every reduced word of length ≤ depth. A word ending in
// i is never extended by σ(i), since γ_i γ_{σ(i)} = 1.
fn explore(ep: &EdgePairing, depth: usize) -> (TessellationPatch, Vec<Coincidence>) {
    let mut patch = TessellationPatch::new(ep.polygon(), depth);
    let mut coincidences = Vec::new();
    let mut frontier: Vec<(Vec<usize>, Isometry)> = vec![(Vec::new(), Isometry::IDENTITY)];
    for level in 1..=depth {
        let mut next = Vec::with_capacity(frontier.len() * ep.p());
        for (word, g) in &frontier {
            let banned = word.last().map(|&i| ep.sigma().apply(i));
            for j in 1..=ep.p() {
                if Some(j) == banned {
                    continue;
                }
                let mut w = word.clone();
                w.push(j);
                next.push((w, g.compose(ep.gen(j))));
            }
        }
        for (word, g) in &next {
            let center = g.apply(ep.polygon().center());
            match patch.index.lookup(center, |k| patch.tiles[k].center) {
                Some(tile) => coincidences.push(Coincidence { tile, isometry: *g }),
                None => patch.push(Tile {
                    center,
                    word: word.clone(),
                    depth: level,
                    isometry: *g,
                }),
            }
        }
        frontier = next;
    }
    (patch, coincidences)
}

/// Tiles reached from `F` by reduced words of length `≤ depth` in the
/// edge-pairing generators.
pub fn generate_patch(ep: &EdgePairing, depth: usize) -> Result<TessellationPatch> {
    check_depth(depth, PATCH_DEPTH_CAP)?;
    let (mut patch, _) = explore(ep, depth);
    patch.sort();
    Ok(patch)
}

/// The half-turns about the edge midpoints of `F`, each with its word in
/// the two rotation letters. Entry `k - 1` is the half-turn about `e_k`.
pub fn edge_half_turns(polygon: &Polygon) -> Vec<(Vec<usize>, Isometry)> {
    let p = polygon.p() as usize;
    let about_center = Isometry::rotation(2.0 * PI / p as f64);
    let about_vertex = Isometry::rotation_about(polygon.vertex(1), 2.0 * PI / polygon.q() as f64);
    // about_vertex ∘ about_center fixes the midpoint of e_2 and swaps F with
    // its neighbour there; conjugating by powers of about_center moves it to
    // the other edges.
    let half_turn_e2 = about_vertex.compose(&about_center);
    let power = |n: usize| (0..n).fold(Isometry::IDENTITY, |g, _| g.compose(&about_center));
    (1..=p)
        .map(|k| {
            let before = (p + 2 - k) % p;
            let after = (k + p - 2) % p;
            let mut word = vec![ROTATE_CENTER; before];
            word.extend([ROTATE_VERTEX, ROTATE_CENTER]);
            word.extend(std::iter::repeat_n(ROTATE_CENTER, after));
            let g = power(before).compose(&half_turn_e2).compose(&power(after));
            (word, g)
        })
        .collect()
}

/// The tiles of the full `{p,q}` tessellation within dual-graph distance
/// `depth` of `F`, built from the rotational symmetries of the tiling alone.
pub fn reference_patch(p: u32, q: u32, depth: usize) -> Result<TessellationPatch> {
    check_depth(depth, PATCH_DEPTH_CAP)?;
    let polygon = Polygon::regular(p, q)?;
    let steps = edge_half_turns(&polygon);
    let mut patch = TessellationPatch::new(&polygon, depth);
    let mut frontier = vec![0usize];
    for level in 1..=depth {
        let mut candidates = Vec::new();
        for &k in &frontier {
            let parent = &patch.tiles[k];
            for (suffix, step) in &steps {
                let mut word = parent.word.clone();
                word.extend_from_slice(suffix);
                candidates.push((word, parent.isometry.compose(step)));
            }
        }
        candidates.sort_by(|a, b| a.0.cmp(&b.0));
        frontier.clear();
        for (word, g) in candidates {
            let center = g.apply(polygon.center());
            if patch
                .index
                .lookup(center, |k| patch.tiles[k].center)
                .is_none()
            {
                frontier.push(patch.len());
                patch.push(Tile {
                    center,
                    word,
                    depth: level,
                    isometry: g,
                });
            }
        }
    }
    patch.sort();
    Ok(patch)
}

/// Outcome of comparing the generated orbit with the reference tiling.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FreenessReport {
    pub transitive_ok: bool,
    pub free_ok: bool,
    /// `(generated, reference)` tile counts.
    pub tile_counts: (usize, usize),
    /// Number of reduced words that landed on an already reached tile.
    pub coincidences: usize,
    /// Largest identity residual over all coincidences.
    #[serde(serialize_with = "crate::json::serialize_f64")]
    pub max_residual: f64,
}

/// Audits the action of the generated group on tiles up to `depth`.
///
/// Transitivity: every reference tile is reached by some reduced word.
/// Freeness: whenever two reduced words reach the same tile, the quotient
/// of their isometries is the identity action.
pub fn freeness_check(ep: &EdgePairing, depth: usize) -> Result<FreenessReport> {
    check_depth(depth, FREENESS_DEPTH_CAP)?;
    let (generated, coincidences) = explore(ep, depth);
    let reference = reference_patch(ep.polygon().p(), ep.polygon().q(), depth)?;
    let transitive_ok = reference
        .tiles
        .iter()
        .all(|t| generated.find(t.center).is_some());
    let max_residual = coincidences
        .iter()
        .map(|c| {
            let first = &generated.tiles[c.tile].isometry;
            first.inverse().compose(&c.isometry).identity_residual()
        })
        .fold(0.0, f64::max);
    Ok(FreenessReport {
        transitive_ok,
        free_ok: max_residual < ISOMETRY_EQ_TOL,
        tile_counts: (generated.len(), reference.len()),
        coincidences: coincidences.len(),
        max_residual,
    })
}
